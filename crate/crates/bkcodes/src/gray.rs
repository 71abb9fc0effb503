//! The Gray maps between B_k and F_{p^r}^(2^k).
//!
//! Two independent constructions of the same bijection:
//!
//! * `phi` applies the pair rule `alpha + beta v_k -> (alpha, alpha + beta)`
//!   recursively, peeling one generator at a time (highest index first, so
//!   the low half of the coefficient vector is alpha and the high half is
//!   beta).
//! * `psi` computes subset sums directly: coordinate m is
//!   `sum_{H subseteq H_m} alpha_H` (a zeta transform over the subset
//!   lattice).
//!
//! Under the mask indexing of [`crate::bk`] the two maps agree coordinate by
//! coordinate; tests verify this on every basis element for k = 1..4 rather
//! than assuming it. They stay separate implementations on purpose: their
//! agreement is a cross-check of both.
//!
//! phi is a ring isomorphism onto the coordinatewise product ring, which is
//! what makes units, inverses, duals and distances of B_k objects reducible
//! to field computations.

use std::sync::Arc;

use crate::bk::{RingElem, RingSpec};
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

/// Recursive Gray map.
pub fn phi(a: &RingElem) -> Vec<Fe> {
    let field = a.spec().field().clone();
    let mut buf = a.coeffs().to_vec();
    phi_rec(&field, &mut buf);
    buf
}

fn phi_rec(field: &Arc<Field>, buf: &mut [Fe]) {
    let len = buf.len();
    if len == 1 {
        return;
    }
    let half = len / 2;
    // (alpha, beta) -> (alpha, alpha + beta)
    for i in 0..half {
        buf[half + i] = field.add(buf[i], buf[half + i]);
    }
    let (lo, hi) = buf.split_at_mut(half);
    phi_rec(field, lo);
    phi_rec(field, hi);
}

/// Inverse of [`phi`].
pub fn phi_inv(spec: &Arc<RingSpec>, image: &[Fe]) -> Result<RingElem> {
    if image.len() != spec.dim() {
        return Err(Error::LengthMismatch {
            expected: spec.dim(),
            got: image.len(),
        });
    }
    let mut buf = image.to_vec();
    phi_inv_rec(spec.field(), &mut buf);
    spec.elem(buf)
}

fn phi_inv_rec(field: &Arc<Field>, buf: &mut [Fe]) {
    let len = buf.len();
    if len == 1 {
        return;
    }
    let half = len / 2;
    {
        let (lo, hi) = buf.split_at_mut(half);
        phi_inv_rec(field, lo);
        phi_inv_rec(field, hi);
    }
    for i in 0..half {
        buf[half + i] = field.sub(buf[half + i], buf[i]);
    }
}

/// Subset-sum Gray map: coordinate m is `sum_{H subseteq m} alpha_H`.
pub fn psi(a: &RingElem) -> Vec<Fe> {
    let field = a.spec().field().clone();
    let mut buf = a.coeffs().to_vec();
    zeta_in_place(&field, &mut buf);
    buf
}

/// Inverse of [`psi`] (Moebius inversion over the subset lattice).
pub fn psi_inv(spec: &Arc<RingSpec>, image: &[Fe]) -> Result<RingElem> {
    if image.len() != spec.dim() {
        return Err(Error::LengthMismatch {
            expected: spec.dim(),
            got: image.len(),
        });
    }
    let mut buf = image.to_vec();
    moebius_in_place(spec.field(), &mut buf);
    spec.elem(buf)
}

pub(crate) fn zeta_in_place(field: &Arc<Field>, buf: &mut [Fe]) {
    let n = buf.len();
    let mut bit = 1;
    while bit < n {
        for m in 0..n {
            if m & bit != 0 {
                buf[m] = field.add(buf[m], buf[m ^ bit]);
            }
        }
        bit <<= 1;
    }
}

pub(crate) fn moebius_in_place(field: &Arc<Field>, buf: &mut [Fe]) {
    let n = buf.len();
    let mut bit = 1;
    while bit < n {
        for m in 0..n {
            if m & bit != 0 {
                buf[m] = field.sub(buf[m], buf[m ^ bit]);
            }
        }
        bit <<= 1;
    }
}

/// Blockwise extension of psi to vectors: B_k^n -> F_{p^r}^(n 2^k).
pub fn psi_vec(entries: &[RingElem]) -> Result<Vec<Fe>> {
    let Some(first) = entries.first() else {
        return Ok(Vec::new());
    };
    let spec = first.spec();
    let mut out = Vec::with_capacity(entries.len() * spec.dim());
    for e in entries {
        if e.spec() != spec {
            return Err(Error::SpecMismatch);
        }
        out.extend(psi(e));
    }
    Ok(out)
}

/// Inverse of [`psi_vec`]; `image` must have length n * 2^k.
pub fn psi_vec_inv(spec: &Arc<RingSpec>, image: &[Fe], n: usize) -> Result<Vec<RingElem>> {
    if image.len() != n * spec.dim() {
        return Err(Error::LengthMismatch {
            expected: n * spec.dim(),
            got: image.len(),
        });
    }
    image
        .chunks(spec.dim())
        .map(|chunk| psi_inv(spec, chunk))
        .collect()
}

/// Hamming weight of a field vector.
pub fn weight(v: &[Fe]) -> usize {
    v.iter().filter(|c| !c.is_zero()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(k: usize, p: u64, r: u32) -> Arc<RingSpec> {
        RingSpec::new(Field::new(p, r).unwrap(), k).unwrap()
    }

    #[test]
    fn phi_examples() {
        let b1 = b(1, 2, 1);
        assert_eq!(phi(&b1.one()), vec![Fe::ONE, Fe::ONE]);
        assert_eq!(phi(&b1.v(1).unwrap()), vec![Fe::ZERO, Fe::ONE]);

        let b2 = b(2, 2, 1);
        assert_eq!(phi(&b2.one()), vec![Fe::ONE; 4]);
        assert_eq!(
            phi(&b2.v(2).unwrap()),
            vec![Fe::ZERO, Fe::ZERO, Fe::ONE, Fe::ONE]
        );
    }

    #[test]
    fn psi_examples() {
        let b2 = b(2, 2, 1);
        assert_eq!(psi(&b2.one()), vec![Fe::ONE; 4]);
        let v12 = b2.v_h(0b11).unwrap();
        assert_eq!(
            psi(&v12),
            vec![Fe::ZERO, Fe::ZERO, Fe::ZERO, Fe::ONE]
        );

        let b1f4 = b(1, 2, 2);
        let f = b1f4.field().clone();
        let a = f.generator();
        let a2 = f.mul(a, a);
        let e = b1f4.elem(vec![a, a2]).unwrap(); // a + a^2 v
        assert_eq!(psi(&e), vec![a, f.add(a, a2)]);
    }

    #[test]
    fn phi_inv_examples() {
        let b1 = b(1, 2, 1);
        assert_eq!(phi_inv(&b1, &[Fe::ONE, Fe::ONE]).unwrap(), b1.one());
        assert_eq!(
            phi_inv(&b1, &[Fe::ZERO, Fe::ONE]).unwrap(),
            b1.v(1).unwrap()
        );
        assert_eq!(phi_inv(&b1, &[Fe::ZERO, Fe::ZERO]).unwrap(), b1.zero());
        assert!(phi_inv(&b1, &[Fe::ZERO]).is_err());
    }

    /// The canonical ordering makes psi equal to phi: verified on every
    /// basis element for k = 1..4 and on full element sweeps of small rings.
    #[test]
    fn psi_equals_phi() {
        for k in 1..=4 {
            for (p, r) in [(2u64, 1u32), (2, 2), (3, 1)] {
                let spec = b(k, p, r);
                for mask in 0..spec.dim() {
                    let e = spec.v_h(mask).unwrap();
                    assert_eq!(psi(&e), phi(&e), "basis v_H mask {mask} k {k}");
                }
            }
        }
        let spec = b(3, 2, 1);
        for e in spec.iter_elems() {
            assert_eq!(psi(&e), phi(&e));
        }
    }

    /// phi is a ring isomorphism onto the product ring.
    #[test]
    fn phi_is_ring_isomorphism() {
        let spec = b(1, 2, 1);
        let f = spec.field().clone();
        for x in spec.iter_elems() {
            for y in spec.iter_elems() {
                let sum: Vec<Fe> = phi(&x)
                    .iter()
                    .zip(phi(&y))
                    .map(|(&u, v)| f.add(u, v))
                    .collect();
                assert_eq!(phi(&x.add(&y).unwrap()), sum);
                let prod: Vec<Fe> = phi(&x)
                    .iter()
                    .zip(phi(&y))
                    .map(|(&u, v)| f.mul(u, v))
                    .collect();
                assert_eq!(phi(&x.mul(&y).unwrap()), prod);
            }
        }
    }

    #[test]
    fn bijectivity_round_trips() {
        for spec in [b(1, 2, 2), b(2, 2, 1), b(3, 2, 1), b(1, 3, 1)] {
            for e in spec.iter_elems() {
                assert_eq!(phi_inv(&spec, &phi(&e)).unwrap(), e);
                assert_eq!(psi_inv(&spec, &psi(&e)).unwrap(), e);
            }
        }
    }

    #[test]
    fn psi_vec_blocks() {
        let b1 = b(1, 2, 1);
        let v = b1.v(1).unwrap();
        let one = b1.one();
        let img = psi_vec(&[v, one]).unwrap();
        assert_eq!(img, vec![Fe::ZERO, Fe::ONE, Fe::ONE, Fe::ONE]);
        let zeros = vec![b1.zero(), b1.zero(), b1.zero()];
        assert!(psi_vec(&zeros).unwrap().iter().all(|c| c.is_zero()));

        let back = psi_vec_inv(&b1, &img, 2).unwrap();
        assert_eq!(psi_vec(&back).unwrap(), img);
    }
}
