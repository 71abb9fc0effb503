//! The commutative algebra B_k = F_{p^r}[v_1,...,v_k] / (v_i^2 - v_i, v_iv_j - v_jv_i).
//!
//! Elements are coefficient vectors of length 2^k over F_{p^r} on the basis
//! `v_H = prod_{i in H} v_i`. Subsets are indexed by bit masks: bit `i-1` of
//! the coefficient index is set iff generator `i` belongs to H, so index 0 is
//! the constant coefficient. This one indexing convention is shared by the
//! Gray maps and the automorphism machinery.
//!
//! B_k is isomorphic to the product ring F_{p^r}^{2^k}; the isomorphism is
//! the subset-sum map psi (see [`crate::gray`]), whose coordinates we call
//! the semisimple coordinates. Units are exactly the elements whose
//! semisimple coordinates are all nonzero; every other nonzero element is a
//! zero divisor.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::gray;

pub const MAX_K: usize = 16;

/// Parameters of B_k: the base field and the number of idempotent generators.
#[derive(Debug)]
pub struct RingSpec {
    field: Arc<Field>,
    k: usize,
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.field == other.field
    }
}
impl Eq for RingSpec {}

impl RingSpec {
    /// B_k over the given field; k = 0 gives B_0 = F_{p^r}.
    pub fn new(field: Arc<Field>, k: usize) -> Result<Arc<RingSpec>> {
        if k > MAX_K {
            return Err(Error::KOutOfRange { k });
        }
        Ok(Arc::new(RingSpec { field, k }))
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }
    pub fn k(&self) -> usize {
        self.k
    }
    /// 2^k, the number of basis coefficients.
    pub fn dim(&self) -> usize {
        1 << self.k
    }
    /// |B_k| = (p^r)^(2^k), if it fits in u128.
    pub fn size(&self) -> Option<u128> {
        let q = self.field.order() as u128;
        let mut acc = 1u128;
        for _ in 0..self.dim() {
            acc = acc.checked_mul(q)?;
        }
        Some(acc)
    }

    pub fn elem(self: &Arc<Self>, coeffs: Vec<Fe>) -> Result<RingElem> {
        if coeffs.len() != self.dim() {
            return Err(Error::LengthMismatch {
                expected: self.dim(),
                got: coeffs.len(),
            });
        }
        Ok(RingElem {
            spec: self.clone(),
            coeffs,
        })
    }

    pub fn elem_from_codes(self: &Arc<Self>, codes: &[u32]) -> Result<RingElem> {
        let coeffs: Result<Vec<Fe>> = codes.iter().map(|&c| self.field.elem(c)).collect();
        self.elem(coeffs?)
    }

    pub fn zero(self: &Arc<Self>) -> RingElem {
        RingElem {
            spec: self.clone(),
            coeffs: vec![Fe::ZERO; self.dim()],
        }
    }

    pub fn one(self: &Arc<Self>) -> RingElem {
        let mut e = self.zero();
        e.coeffs[0] = Fe::ONE;
        e
    }

    /// The scalar embedding F_{p^r} -> B_k.
    pub fn scalar(self: &Arc<Self>, c: Fe) -> RingElem {
        let mut e = self.zero();
        e.coeffs[0] = c;
        e
    }

    /// The generator v_i (1-based).
    pub fn v(self: &Arc<Self>, i: usize) -> Result<RingElem> {
        if i < 1 || i > self.k {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.k,
            });
        }
        let mut e = self.zero();
        e.coeffs[1 << (i - 1)] = Fe::ONE;
        Ok(e)
    }

    /// The basis monomial v_H for the subset encoded by `mask`.
    pub fn v_h(self: &Arc<Self>, mask: usize) -> Result<RingElem> {
        if mask >= self.dim() {
            return Err(Error::IndexOutOfRange {
                index: mask,
                len: self.dim() - 1,
            });
        }
        let mut e = self.zero();
        e.coeffs[mask] = Fe::ONE;
        Ok(e)
    }

    /// All (p^r)^(2^k) elements, for exhaustive small-ring tests.
    pub fn iter_elems(self: &Arc<Self>) -> impl Iterator<Item = RingElem> {
        let spec = self.clone();
        let q = self.field.order() as u128;
        let dim = self.dim();
        let total = self.size().expect("ring too large to enumerate");
        (0..total).map(move |mut n| {
            let mut coeffs = vec![Fe::ZERO; dim];
            for slot in coeffs.iter_mut() {
                *slot = Fe((n % q) as u16);
                n /= q;
            }
            RingElem {
                spec: spec.clone(),
                coeffs,
            }
        })
    }

    /// Ring literal, e.g. `B(2) over GF(2^2)`.
    pub fn literal(&self) -> String {
        format!("B({}) over {}", self.k, self.field.literal())
    }

    /// Parse `B(k) over GF(...)`.
    pub fn parse(text: &str) -> Result<Arc<RingSpec>> {
        let s = text.trim();
        let rest = s
            .strip_prefix("B(")
            .ok_or_else(|| Error::Parse(format!("expected B(k) over GF(...), got `{s}`")))?;
        let (ks, rest) = rest
            .split_once(')')
            .ok_or_else(|| Error::Parse("missing `)` in ring literal".into()))?;
        let k: usize = ks
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad ring index `{ks}`")))?;
        let field_part = rest
            .trim()
            .strip_prefix("over")
            .ok_or_else(|| Error::Parse("expected `over GF(...)` in ring literal".into()))?;
        RingSpec::new(Field::parse(field_part.trim())?, k)
    }
}

/// An element of B_k: 2^k coefficients on the v_H basis.
#[derive(Clone)]
pub struct RingElem {
    spec: Arc<RingSpec>,
    coeffs: Vec<Fe>,
}

impl PartialEq for RingElem {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.coeffs == other.coeffs
    }
}
impl Eq for RingElem {}

impl RingElem {
    pub fn spec(&self) -> &Arc<RingSpec> {
        &self.spec
    }
    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }
    pub fn coeff(&self, mask: usize) -> Fe {
        self.coeffs[mask]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check(&self, other: &RingElem) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn add(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        let f = self.spec.field();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(RingElem {
            spec: self.spec.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> RingElem {
        let f = self.spec.field();
        RingElem {
            spec: self.spec.clone(),
            coeffs: self.coeffs.iter().map(|&a| f.neg(a)).collect(),
        }
    }

    pub fn sub(&self, other: &RingElem) -> Result<RingElem> {
        self.add(&other.neg())
    }

    /// Product by convolution over subset union: v_H v_H' = v_{H union H'}.
    pub fn mul(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        let f = self.spec.field();
        let dim = self.spec.dim();
        let mut out = vec![Fe::ZERO; dim];
        for h in 0..dim {
            let a = self.coeffs[h];
            if a.is_zero() {
                continue;
            }
            for hp in 0..dim {
                let b = other.coeffs[hp];
                if b.is_zero() {
                    continue;
                }
                let u = h | hp;
                out[u] = f.add(out[u], f.mul(a, b));
            }
        }
        Ok(RingElem {
            spec: self.spec.clone(),
            coeffs: out,
        })
    }

    pub fn scale(&self, c: Fe) -> RingElem {
        let f = self.spec.field();
        RingElem {
            spec: self.spec.clone(),
            coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// a^e by square-and-multiply; a^(p^r) = a for every a.
    pub fn power(&self, e: u64) -> RingElem {
        let mut acc = self.spec.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same spec");
            }
            base = base.mul(&base).expect("same spec");
            e >>= 1;
        }
        acc
    }

    /// Image under the subset-sum isomorphism onto F_{p^r}^(2^k).
    ///
    /// Coordinate `m` is `sum_{H subseteq H_m} alpha_H`, equivalently the
    /// evaluation of the element at the point v_i = 1 iff bit i-1 of m.
    pub fn semisimple_coords(&self) -> Vec<Fe> {
        gray::psi(self)
    }

    /// Units are the elements with all semisimple coordinates nonzero.
    pub fn is_unit(&self) -> bool {
        self.semisimple_coords().iter().all(|c| !c.is_zero())
    }

    /// Nonzero non-units; `is_zero_divisor(0)` is false by
    /// convention (zero is handled by `is_zero`).
    pub fn is_zero_divisor(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    /// Multiplicative inverse: invert each semisimple coordinate and map back.
    pub fn inverse(&self) -> Result<RingElem> {
        let f = self.spec.field();
        let coords = self.semisimple_coords();
        let inv: Result<Vec<Fe>> = coords
            .iter()
            .map(|&c| f.inv(c).map_err(|_| Error::NotAUnit))
            .collect();
        gray::psi_inv(&self.spec, &inv?)
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let f = self.spec.field();
        let mut first = true;
        for (mask, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            let cs = f.elem_to_string(c);
            let mut vars = Vec::new();
            for i in 0..self.spec.k() {
                if mask >> i & 1 == 1 {
                    vars.push(format!("v{}", i + 1));
                }
            }
            if vars.is_empty() {
                write!(out, "{cs}")?;
            } else if cs == "1" {
                write!(out, "{}", vars.join("*"))?;
            } else {
                write!(out, "{}*{}", cs, vars.join("*"))?;
            }
        }
        if first {
            write!(out, "0")?;
        }
        Ok(())
    }
}

/// Serialize as the comma-separated integer codes of the 2^k coefficients.
pub fn elem_to_codes_string(a: &RingElem) -> String {
    a.coeffs()
        .iter()
        .map(|c| c.0.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parse the comma-separated code form.
pub fn parse_elem_codes(spec: &Arc<RingSpec>, text: &str) -> Result<RingElem> {
    let codes: Result<Vec<u32>> = text
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad coefficient `{c}`")))
        })
        .collect();
    spec.elem_from_codes(&codes?)
}

/// A maximal ideal <w_1,...,w_k> with w_i = v_i (flag false) or 1 - v_i
/// (flag true). There are exactly 2^k of these and nothing else is maximal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalIdeal {
    choice: Vec<bool>,
}

impl MaximalIdeal {
    pub fn choice(&self) -> &[bool] {
        &self.choice
    }

    /// The generators w_1,...,w_k.
    pub fn generators(&self, spec: &Arc<RingSpec>) -> Result<Vec<RingElem>> {
        if self.choice.len() != spec.k() {
            return Err(Error::SpecMismatch);
        }
        (1..=spec.k())
            .map(|i| {
                let v = spec.v(i)?;
                if self.choice[i - 1] {
                    spec.one().sub(&v)
                } else {
                    Ok(v)
                }
            })
            .collect()
    }

    /// The ideal is the kernel of evaluation at the point with v_i = 1 iff
    /// w_i = 1 - v_i; membership is a single semisimple coordinate test.
    pub fn contains(&self, a: &RingElem) -> bool {
        let mut mask = 0usize;
        for (i, &flag) in self.choice.iter().enumerate() {
            if flag {
                mask |= 1 << i;
            }
        }
        a.semisimple_coords()[mask].is_zero()
    }
}

/// All 2^k maximal ideals of B_k; empty for k = 0 (a field).
pub fn maximal_ideals(spec: &Arc<RingSpec>) -> Vec<MaximalIdeal> {
    if spec.k() == 0 {
        return Vec::new();
    }
    (0..spec.dim())
        .map(|mask| MaximalIdeal {
            choice: (0..spec.k()).map(|i| mask >> i & 1 == 1).collect(),
        })
        .collect()
}

/// Single generator of <gens>: the alternating sum over nonempty subsets A
/// of {1..m} of (-1)^(|A|+1) (prod_{j in A} gen_j)^(p^r - 1).
pub fn ideal_single_generator(gens: &[RingElem]) -> Result<RingElem> {
    if gens.is_empty() {
        return Err(Error::EmptyGeneratorList);
    }
    let spec = gens[0].spec().clone();
    for g in gens {
        if *g.spec() != spec {
            return Err(Error::SpecMismatch);
        }
    }
    let e = (spec.field().order() - 1) as u64;
    let m = gens.len();
    let mut acc = spec.zero();
    for subset in 1usize..1 << m {
        let mut prod = spec.one();
        for (j, g) in gens.iter().enumerate() {
            if subset >> j & 1 == 1 {
                prod = prod.mul(g)?;
            }
        }
        let term = prod.power(e);
        // (-1)^(|A|+1): add for odd |A|, subtract for even
        if subset.count_ones() % 2 == 1 {
            acc = acc.add(&term)?;
        } else {
            acc = acc.sub(&term)?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(k: usize, p: u64, r: u32) -> Arc<RingSpec> {
        RingSpec::new(Field::new(p, r).unwrap(), k).unwrap()
    }

    #[test]
    fn constructor_and_basis() {
        let b1 = b(1, 2, 1);
        let one = b1.elem_from_codes(&[1, 0]).unwrap();
        assert_eq!(one, b1.one());
        let v1 = b1.elem_from_codes(&[0, 1]).unwrap();
        assert_eq!(v1, b1.v(1).unwrap());
        assert!(b1.elem_from_codes(&[1]).is_err());

        let b2 = b(2, 2, 2);
        let f = b2.field().clone();
        let a = f.generator();
        let e = b2
            .elem(vec![a, Fe::ZERO, Fe::ONE, f.mul(a, a)])
            .unwrap();
        assert_eq!(e.coeff(0), a);
        assert_eq!(e.coeff(3), f.mul(a, a));
        assert_eq!(format!("{e}"), "a + v2 + a^2*v1*v2");
    }

    #[test]
    fn product_rules() {
        let b1 = b(1, 2, 1);
        let v = b1.v(1).unwrap();
        let one_plus_v = b1.one().add(&v).unwrap();
        assert!(v.mul(&one_plus_v).unwrap().is_zero()); // v(1-v) = 0

        let b2 = b(2, 2, 1);
        let prod = b2.v(1).unwrap().mul(&b2.v(2).unwrap()).unwrap();
        assert_eq!(prod, b2.v_h(0b11).unwrap());
    }

    /// (a + a v)(a^2 + a^2 v) = 1 + v in B_1/F_4, checked against the
    /// brute-force product over all 16 elements: the oracle multiplies in
    /// the two-term representation (x + y v)(z + w v) = xz + (xw + yz + yw)v.
    #[test]
    fn b1_f4_product() {
        let b1 = b(1, 2, 2);
        let f = b1.field().clone();
        let a = f.generator();
        let a2 = f.mul(a, a);
        let lhs = b1.elem(vec![a, a]).unwrap();
        let rhs = b1.elem(vec![a2, a2]).unwrap();
        let prod = lhs.mul(&rhs).unwrap();
        let expected = b1.elem(vec![Fe::ONE, Fe::ONE]).unwrap(); // 1 + v
        assert_eq!(prod, expected);

        // oracle over the whole 16-element ring
        for x in b1.iter_elems() {
            for y in b1.iter_elems() {
                let (p, q) = (x.coeff(0), x.coeff(1));
                let (s, t) = (y.coeff(0), y.coeff(1));
                let c0 = f.mul(p, s);
                let c1 = f.add(f.add(f.mul(p, t), f.mul(q, s)), f.mul(q, t));
                let expect = b1.elem(vec![c0, c1]).unwrap();
                assert_eq!(x.mul(&y).unwrap(), expect);
            }
        }
    }

    #[test]
    fn power_identities() {
        let b1 = b(1, 2, 1);
        let v = b1.v(1).unwrap();
        assert_eq!(v.power(0), b1.one());
        assert_eq!(v.power(2), v); // idempotent

        // a^(p^r) = a, exhaustive for B_1/F_4 and B_2/F_4
        for spec in [b(1, 2, 2), b(2, 2, 2)] {
            let q = spec.field().order() as u64;
            for x in spec.iter_elems() {
                assert_eq!(x.power(q), x);
            }
        }
    }

    #[test]
    fn semisimple_examples() {
        let b1 = b(1, 2, 1);
        assert_eq!(b1.one().semisimple_coords(), vec![Fe::ONE, Fe::ONE]);
        assert_eq!(
            b1.v(1).unwrap().semisimple_coords(),
            vec![Fe::ZERO, Fe::ONE]
        );
        assert_eq!(b1.zero().semisimple_coords(), vec![Fe::ZERO, Fe::ZERO]);
    }

    #[test]
    fn units_and_zero_divisors() {
        let b1f2 = b(1, 2, 1);
        let one_plus_v = b1f2.one().add(&b1f2.v(1).unwrap()).unwrap();
        assert_eq!(one_plus_v.semisimple_coords(), vec![Fe::ONE, Fe::ZERO]);
        assert!(one_plus_v.is_zero_divisor());
        assert!(b1f2.one().is_unit());
        assert!(!b1f2.zero().is_zero_divisor());
        assert!(!b1f2.zero().is_unit());

        let b1f4 = b(1, 2, 2);
        let f = b1f4.field().clone();
        let a = f.generator();
        let x = b1f4.scalar(a).add(&b1f4.v(1).unwrap()).unwrap();
        assert!(x.is_unit());

        // brute-force inverse search over the 16 elements agrees
        let inv = x.inverse().unwrap();
        assert_eq!(x.mul(&inv).unwrap(), b1f4.one());
        let found: Vec<RingElem> = b1f4
            .iter_elems()
            .filter(|y| x.mul(y).unwrap() == b1f4.one())
            .collect();
        assert_eq!(found, vec![inv]);
    }

    /// Every nonzero element of a finite commutative ring is a unit or a
    /// zero divisor; exhaustive on small rings.
    #[test]
    fn unit_zero_divisor_dichotomy() {
        for spec in [b(1, 2, 1), b(2, 2, 1), b(1, 2, 2)] {
            for x in spec.iter_elems() {
                if x.is_zero() {
                    assert!(!x.is_unit() && !x.is_zero_divisor());
                } else {
                    assert!(x.is_unit() != x.is_zero_divisor());
                }
                if x.is_zero_divisor() {
                    // witness an annihilator
                    assert!(spec
                        .iter_elems()
                        .any(|y| !y.is_zero() && x.mul(&y).unwrap().is_zero()));
                }
            }
        }
    }

    #[test]
    fn cardinality() {
        for (spec, expect) in [
            (b(1, 2, 1), 4u128),
            (b(2, 2, 1), 16),
            (b(1, 2, 2), 16),
        ] {
            assert_eq!(spec.size(), Some(expect));
            assert_eq!(spec.iter_elems().count() as u128, expect);
        }
    }

    #[test]
    fn maximal_ideal_enumeration() {
        let b0 = b(0, 2, 1);
        assert!(maximal_ideals(&b0).is_empty());

        let b1 = b(1, 2, 1);
        let ideals = maximal_ideals(&b1);
        assert_eq!(ideals.len(), 2);
        let v = b1.v(1).unwrap();
        let w = b1.one().sub(&v).unwrap();
        let gens0 = ideals[0].generators(&b1).unwrap();
        let gens1 = ideals[1].generators(&b1).unwrap();
        assert_eq!(gens0, vec![v.clone()]);
        assert_eq!(gens1, vec![w.clone()]);
        assert!(ideals[0].contains(&v));
        assert!(!ideals[0].contains(&w));

        assert_eq!(maximal_ideals(&b(2, 2, 1)).len(), 4);
    }

    #[test]
    fn single_generator_formula() {
        let b1 = b(1, 2, 1);
        let v = b1.v(1).unwrap();
        assert_eq!(ideal_single_generator(&[v.clone()]).unwrap(), v);

        let b2 = b(2, 2, 1);
        let (v1, v2) = (b2.v(1).unwrap(), b2.v(2).unwrap());
        let g = ideal_single_generator(&[v1.clone(), v2.clone()]).unwrap();
        let expect = v1
            .add(&v2)
            .unwrap()
            .add(&v1.mul(&v2).unwrap())
            .unwrap();
        assert_eq!(g, expect);

        let zeros = vec![b2.zero(), b2.zero()];
        assert!(ideal_single_generator(&zeros).unwrap().is_zero());
        assert_eq!(
            ideal_single_generator(&[]).unwrap_err(),
            Error::EmptyGeneratorList
        );
    }

    /// <g> = <gens> by exhaustive two-sided membership in B_2/F_2 and
    /// B_1/F_4: the ideal generated by a list is enumerated directly as the
    /// set of all combinations sum x_i gen_i.
    #[test]
    fn single_generator_spans_same_ideal() {
        for spec in [b(2, 2, 1), b(1, 2, 2)] {
            let elems: Vec<RingElem> = spec.iter_elems().collect();
            // sample generator pairs deterministically
            for (i, x) in elems.iter().enumerate().step_by(3) {
                let y = &elems[(5 * i + 2) % elems.len()];
                let g = ideal_single_generator(&[x.clone(), y.clone()]).unwrap();
                let ideal_of = |gs: &[RingElem]| -> Vec<RingElem> {
                    let mut out: Vec<RingElem> = Vec::new();
                    for u in &elems {
                        for w in &elems {
                            let s = u
                                .mul(&gs[0])
                                .unwrap()
                                .add(&w.mul(&gs[1]).unwrap())
                                .unwrap();
                            if !out.contains(&s) {
                                out.push(s);
                            }
                        }
                    }
                    out
                };
                let lhs = ideal_of(&[x.clone(), y.clone()]);
                let rhs = ideal_of(&[g.clone(), spec.zero()]);
                assert_eq!(lhs.len(), rhs.len());
                for e in &lhs {
                    assert!(rhs.contains(e));
                }
            }
        }
    }

    #[test]
    fn ring_literal_round_trip() {
        let spec = RingSpec::parse("B(2) over GF(4)").unwrap();
        assert_eq!(spec.k(), 2);
        assert_eq!(spec.field().order(), 4);
        assert_eq!(spec.literal(), "B(2) over GF(2^2)");
        let again = RingSpec::parse(&spec.literal()).unwrap();
        assert_eq!(*spec, *again);

        let e = parse_elem_codes(&spec, "2, 0, 1, 3").unwrap();
        assert_eq!(elem_to_codes_string(&e), "2,0,1,3");
    }

    #[test]
    fn spec_mismatch_detected() {
        let b1 = b(1, 2, 1);
        let b1f4 = b(1, 2, 2);
        let x = b1.one();
        let y = b1f4.one();
        assert_eq!(x.add(&y).unwrap_err(), Error::SpecMismatch);
    }
}
