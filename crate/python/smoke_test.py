#!/usr/bin/env python3
"""Smoke test for the bkcodes_py extension module.

Build it first: ./python/build.sh
Run: python3 python/smoke_test.py
"""
import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import bkcodes_py as bc


def main() -> None:
    # F_4 arithmetic: a * a^2 = 1, a + a = 0, phi(a) = a^2
    f4 = bc.Field.parse("GF(4)")
    a = f4.generator
    a2 = f4.mul(a, a)
    assert f4.mul(a, a2) == 1
    assert f4.add(a, a) == 0
    assert f4.inv(a) == a2
    assert f4.frobenius(a, 1) == a2
    assert f4.elem_str(a2) == "a^2"
    print("field arithmetic ok:", repr(f4))

    # skew product: x * a = a^2 x under the Frobenius twist
    assert f4.skew_mul(1, "x", "a") == "a^2*x"
    q, rem = f4.skew_right_divide(1, "x^4 - 1", "x^2+a^2*x+a")
    assert rem == "0"
    print("skew polynomials ok: x^4-1 =", f"({q}) * (x^2+a^2*x+a)")

    # B_1/F_2: Gray images of v_1 agree between both constructions
    b1 = bc.Ring.parse("B(1) over GF(2)")
    v1 = [0, 1]
    assert b1.phi(v1) == [0, 1] == b1.psi(v1)
    assert b1.psi_inv(b1.psi(v1)) == v1
    assert b1.is_zero_divisor(b1.add([1, 0], v1))  # 1 + v_1
    print("gray maps ok:", repr(b1))

    # B_2/F_4 with the swap automorphism; row-1 code has distance 3
    ring = bc.Ring.parse("B(2) over GF(4)")
    theta = ring.automorphism("v1->v2; v2->v1; t=1")
    assert theta.order() == 2 and theta.ord_induced() == 2
    nf = theta.decompose()
    assert nf["t"] == 1

    comp = bc.FieldCode.skew_cyclic(f4, 1, "x^2+a^2*x+a", 4)
    assert comp.dim == 2 and comp.is_self_dual()
    code = bc.BkCode.construct_theta_cyclic(theta, [comp] * 4)
    assert code.is_theta_cyclic(theta)
    assert code.first_characterization_check(theta)
    assert code.is_self_dual()
    assert code.min_distance() == 3
    assert comp.min_distance_isd() == 3
    print("theta-cyclic construction ok:", repr(code), "d = 3")

    # built-in table row 1 end to end
    report = json.loads(bc.verify_table_row(1))
    assert report["pass"] and report["distance"] == 3
    assert bc.table_len() == 5
    print("table row 1 verified:", [c["name"] for c in report["checks"]])

    print("smoke test passed")


if __name__ == "__main__":
    main()
