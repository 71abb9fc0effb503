//! Arithmetic for F_p and its extension F_{p^r}.
//!
//! Elements are stored as integer codes in `[0, p^r)`: the code of the
//! residue `c_0 + c_1 x + ... + c_{r-1} x^{r-1}` is `sum c_i p^i`.
//! Multiplication, inversion and Frobenius powers go through log/antilog
//! tables built from a fixed generator of the multiplicative group, so all
//! hot-path operations are table lookups. Field sizes are bounded by
//! `p^r <= 2^16`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Raw field element: the integer code of a residue, relative to some [`Field`].
///
/// `Fe` carries no back-reference to its field; it is meaningful only
/// together with the `Field` it was produced by. Use [`FieldElem`] when a
/// self-describing element is needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Fe(pub u16);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The field F_{p^r}, with its modulus, generator and multiplication tables.
///
/// Immutable after construction; wrap in `Arc` and share freely.
pub struct Field {
    p: u32,
    r: u32,
    q: u32,
    /// Monic irreducible modulus, constant term first, length r+1.
    modulus: Vec<u32>,
    /// exp[i] = generator^i for i in 0..2(q-1); doubled so index sums need no reduction.
    exp: Vec<u16>,
    /// log[code] for nonzero codes; log[0] is a sentinel.
    log: Vec<u32>,
    generator: Fe,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.literal())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.r == other.r && self.modulus == other.modulus
    }
}
impl Eq for Field {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Polynomial helpers over F_p on digit vectors, used only at construction
/// time (before the tables exist) and for irreducibility testing.
mod polys {
    /// c = a*b over F_p.
    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai * bj) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// a mod m, for monic m.
    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut a = a.to_vec();
        trim(&mut a);
        while a.len() >= m.len() {
            let lead = a[a.len() - 1];
            let shift = a.len() - m.len();
            for (j, &mj) in m.iter().enumerate() {
                let t = a[shift + j] + p - (lead * mj) % p;
                a[shift + j] = t % p;
            }
            trim(&mut a);
        }
        a
    }

    pub fn trim(v: &mut Vec<u32>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }
}

impl Field {
    /// Build F_{p^r} with the default modulus: the first monic irreducible
    /// of degree r when the non-leading coefficient vector is enumerated by
    /// its integer encoding `sum c_i p^i`.
    pub fn new(p: u64, r: u32) -> Result<Arc<Field>> {
        Self::build(p, r, None)
    }

    /// Build F_{p^r} with an explicit monic irreducible modulus
    /// (constant term first, length r+1).
    pub fn with_modulus(p: u64, r: u32, modulus: Vec<u32>) -> Result<Arc<Field>> {
        Self::build(p, r, Some(modulus))
    }

    fn build(p: u64, r: u32, modulus: Option<Vec<u32>>) -> Result<Arc<Field>> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if r < 1 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                got: 0,
            });
        }
        let q = (p as u128).checked_pow(r).unwrap_or(u128::MAX);
        if q > (1 << 16) {
            return Err(Error::UnsupportedFieldSize { q: q as u64 });
        }
        let (p, q) = (p as u32, q as u32);

        let modulus = match modulus {
            Some(m) => {
                let mut m = m;
                polys::trim(&mut m);
                if m.len() != r as usize + 1 {
                    return Err(Error::DegreeMismatch {
                        expected: r as usize,
                        got: m.len().saturating_sub(1),
                    });
                }
                if m.iter().any(|&c| c >= p) || m[r as usize] != 1 {
                    return Err(Error::NotIrreducible(format!("{:?}", m)));
                }
                if !Self::is_irreducible(&m, p) {
                    return Err(Error::NotIrreducible(format!("{:?}", m)));
                }
                m
            }
            None => Self::default_modulus(p, r),
        };

        let mut field = Field {
            p,
            r,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            generator: Fe(1),
        };
        field.build_tables();
        Ok(Arc::new(field))
    }

    /// Trial factorization: a monic polynomial of degree r >= 2 is irreducible
    /// iff no monic polynomial of degree in 1..=r/2 divides it.
    fn is_irreducible(m: &[u32], p: u32) -> bool {
        let r = m.len() - 1;
        if r == 1 {
            return true;
        }
        for d in 1..=r / 2 {
            let count = (p as u64).pow(d as u32);
            for enc in 0..count {
                let mut div = decode_poly_padded(enc, d, p);
                div.push(1); // monic of degree exactly d
                if polys::rem(m, &div, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    fn default_modulus(p: u32, r: u32) -> Vec<u32> {
        let count = (p as u64).pow(r);
        for enc in 0..count {
            let mut m = decode_poly_padded(enc, r as usize, p);
            m.push(1);
            if Self::is_irreducible(&m, p) {
                return m;
            }
        }
        unreachable!("an irreducible polynomial of every degree exists over F_p")
    }

    /// Code-level multiply via digit polynomials; used to bootstrap the tables.
    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let pa = decode_poly(a as u64, self.r as usize, self.p);
        let pb = decode_poly(b as u64, self.r as usize, self.p);
        let prod = polys::mul(&pa, &pb, self.p);
        let red = polys::rem(&prod, &self.modulus, self.p);
        encode_poly(&red, self.p)
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn build_tables(&mut self) {
        let q = self.q;
        // Generator: smallest code of multiplicative order q-1.
        let gen = if q == 2 {
            1u32
        } else {
            let factors = prime_factors((q - 1) as u64);
            (2..q)
                .find(|&c| {
                    factors
                        .iter()
                        .all(|&f| self.pow_slow(c, ((q - 1) as u64) / f) != 1)
                })
                .expect("the multiplicative group of a finite field is cyclic")
        };
        self.generator = Fe(gen as u16);

        let ord = (q - 1) as usize;
        let mut exp = vec![0u16; 2 * ord];
        let mut log = vec![u32::MAX; q as usize];
        let mut acc = 1u32;
        for (i, slot) in exp.iter_mut().enumerate().take(ord) {
            *slot = acc as u16;
            log[acc as usize] = i as u32;
            acc = self.mul_slow(acc, gen);
        }
        debug_assert_eq!(acc, 1, "generator order must be q-1");
        for i in 0..ord {
            exp[ord + i] = exp[i];
        }
        self.exp = exp;
        self.log = log;
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn r(&self) -> u32 {
        self.r
    }
    pub fn order(&self) -> u32 {
        self.q
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    pub fn generator(&self) -> Fe {
        self.generator
    }

    pub fn zero(&self) -> Fe {
        Fe(0)
    }
    pub fn one(&self) -> Fe {
        Fe(1)
    }

    /// Validated element from an integer code.
    pub fn elem(&self, code: u32) -> Result<Fe> {
        if code < self.q {
            Ok(Fe(code as u16))
        } else {
            Err(Error::IndexOutOfRange {
                index: code as usize,
                len: self.q as usize - 1,
            })
        }
    }

    /// Residue coefficients of `a`, constant first, length r.
    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        decode_poly_padded(a.0 as u64, self.r as usize, self.p)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Fe> {
        if coeffs.len() != self.r as usize {
            return Err(Error::LengthMismatch {
                expected: self.r as usize,
                got: coeffs.len(),
            });
        }
        if coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::Parse("coefficient out of range".into()));
        }
        Ok(Fe(encode_poly(coeffs, self.p) as u16))
    }

    pub fn iter_elems(&self) -> impl Iterator<Item = Fe> {
        (0..self.q).map(|c| Fe(c as u16))
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0 as u32, b.0 as u32);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.r {
            out += ((x + y) % self.p) * place;
            place *= self.p;
            x /= self.p;
            y /= self.p;
        }
        Fe(out as u16)
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        if self.p == 2 {
            return a;
        }
        let mut x = a.0 as u32;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.r {
            out += ((self.p - x % self.p) % self.p) * place;
            place *= self.p;
            x /= self.p;
        }
        Fe(out as u16)
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() || b.is_zero() {
            return Fe(0);
        }
        Fe(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ord = self.q - 1;
        Ok(Fe(self.exp[((ord - self.log[a.0 as usize]) % ord) as usize]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^e with a^0 = 1 (including 0^0 = 1).
    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe(1);
        }
        if a.is_zero() {
            return Fe(0);
        }
        let ord = (self.q - 1) as u64;
        let l = (self.log[a.0 as usize] as u64 * (e % ord)) % ord;
        Fe(self.exp[l as usize])
    }

    /// Frobenius power phi^t(a) = a^{p^t}; t is reduced mod r.
    pub fn frobenius(&self, a: Fe, t: u32) -> Fe {
        let t = t % self.r;
        if t == 0 || a.is_zero() {
            return a;
        }
        let ord = (self.q - 1) as u64;
        let mut pt = 1u64;
        for _ in 0..t {
            pt = (pt * self.p as u64) % ord;
        }
        let l = (self.log[a.0 as usize] as u64 * pt) % ord;
        Fe(self.exp[l as usize])
    }

    /// Canonical field literal, e.g. `GF(2^2)`; includes the modulus when it
    /// is not the default one.
    pub fn literal(&self) -> String {
        let base = if self.r == 1 {
            format!("GF({})", self.p)
        } else {
            format!("GF({}^{})", self.p, self.r)
        };
        if self.modulus == Self::default_modulus(self.p, self.r) {
            base
        } else {
            let coeffs: Vec<String> = self.modulus.iter().map(|c| c.to_string()).collect();
            format!(
                "{}; {})",
                &base[..base.len() - 1],
                coeffs.join(",")
            )
        }
    }

    /// Parse a field literal: `GF(q)`, `GF(p^r)` or `GF(p^r; c0,...,cr)`.
    pub fn parse(text: &str) -> Result<Arc<Field>> {
        let s = text.trim();
        let inner = s
            .strip_prefix("GF(")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected GF(...), got `{s}`")))?;
        let (size_part, mod_part) = match inner.split_once(';') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (inner.trim(), None),
        };
        let (p, r) = if let Some((ps, rs)) = size_part.split_once('^') {
            let p: u64 = ps
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime `{ps}`")))?;
            let r: u32 = rs
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad extension degree `{rs}`")))?;
            (p, r)
        } else {
            let q: u64 = size_part
                .parse()
                .map_err(|_| Error::Parse(format!("bad field size `{size_part}`")))?;
            factor_prime_power(q)
                .ok_or_else(|| Error::Parse(format!("{q} is not a prime power")))?
        };
        match mod_part {
            None => Field::new(p, r),
            Some(ms) => {
                let coeffs: Result<Vec<u32>> = ms
                    .split(',')
                    .map(|c| {
                        c.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad modulus coefficient `{c}`")))
                    })
                    .collect();
                Field::with_modulus(p, r, coeffs?)
            }
        }
    }

    /// Display form of an element: powers of the generator (`0`, `1`, `a`,
    /// `a^j`) for small fields, the decimal code otherwise.
    pub fn elem_to_string(&self, a: Fe) -> String {
        if a.is_zero() {
            return "0".into();
        }
        if self.q <= 256 {
            match self.log[a.0 as usize] {
                0 => "1".into(),
                1 => "a".into(),
                j => format!("a^{j}"),
            }
        } else {
            a.0.to_string()
        }
    }

    /// Parse `0`, `1`, `a`, `a^j` or a decimal code.
    pub fn parse_elem(&self, text: &str) -> Result<Fe> {
        let s = text.trim();
        if s == "a" {
            return Ok(self.generator);
        }
        if let Some(js) = s.strip_prefix("a^") {
            let j: u64 = js
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent `{js}`")))?;
            return Ok(self.pow(self.generator, j));
        }
        let code: u32 = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad field element `{s}`")))?;
        self.elem(code)
    }
}

fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut r = 0u32;
    let mut n = q;
    while n > 1 {
        n /= p;
        r += 1;
    }
    if p.pow(r) == q {
        Some((p, r))
    } else {
        None
    }
}

fn decode_poly(enc: u64, len: usize, p: u32) -> Vec<u32> {
    let mut v = decode_poly_padded(enc, len, p);
    polys::trim(&mut v);
    v
}

fn decode_poly_padded(mut enc: u64, len: usize, p: u32) -> Vec<u32> {
    let mut v = vec![0u32; len];
    for slot in v.iter_mut() {
        *slot = (enc % p as u64) as u32;
        enc /= p as u64;
    }
    v
}

fn encode_poly(coeffs: &[u32], p: u32) -> u32 {
    let mut out = 0u64;
    for &c in coeffs.iter().rev() {
        out = out * p as u64 + c as u64;
    }
    out as u32
}

/// A field element bundled with its field, for surfaces where elements from
/// different fields can meet. Operations check the specs and fail with
/// [`Error::SpecMismatch`] instead of silently mixing representations.
#[derive(Clone, Debug)]
pub struct FieldElem {
    field: Arc<Field>,
    code: Fe,
}

impl FieldElem {
    pub fn new(field: Arc<Field>, code: u32) -> Result<FieldElem> {
        let fe = field.elem(code)?;
        Ok(FieldElem { field, code: fe })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }
    pub fn code(&self) -> Fe {
        self.code
    }
    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.code)
    }

    fn check(&self, other: &FieldElem) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn add(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        Ok(FieldElem {
            field: self.field.clone(),
            code: self.field.add(self.code, other.code),
        })
    }

    pub fn sub(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        Ok(FieldElem {
            field: self.field.clone(),
            code: self.field.sub(self.code, other.code),
        })
    }

    pub fn mul(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        Ok(FieldElem {
            field: self.field.clone(),
            code: self.field.mul(self.code, other.code),
        })
    }

    pub fn neg(&self) -> FieldElem {
        FieldElem {
            field: self.field.clone(),
            code: self.field.neg(self.code),
        }
    }

    pub fn inv(&self) -> Result<FieldElem> {
        Ok(FieldElem {
            field: self.field.clone(),
            code: self.field.inv(self.code)?,
        })
    }

    pub fn frobenius(&self, t: u32) -> FieldElem {
        FieldElem {
            field: self.field.clone(),
            code: self.field.frobenius(self.code, t),
        }
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.code == other.code
    }
}
impl Eq for FieldElem {}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.elem_to_string(self.code))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent multiply: schoolbook digit-polynomial product reduced by
    /// long division, sharing no code path with the table-based `mul`.
    fn oracle_mul(field: &Field, a: Fe, b: Fe) -> Fe {
        let p = field.p();
        let da = field.coeffs(a);
        let db = field.coeffs(b);
        let mut prod = vec![0u32; 2 * field.r() as usize];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // reduce by the modulus
        let m = field.modulus();
        for i in (field.r() as usize..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &mj) in m.iter().enumerate().take(field.r() as usize) {
                let t = prod[i - field.r() as usize + j] + p * p - (c * mj) % p;
                prod[i - field.r() as usize + j] = t % p;
            }
        }
        field.from_coeffs(&prod[..field.r() as usize]).unwrap()
    }

    #[test]
    fn default_moduli() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(f2.modulus(), &[0, 1]);
        // The only irreducible monic quadratic over F_2, confirmed by the
        // trial-division check over all 4 monic quadratics inside `new`.
        let f4 = Field::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        assert_eq!(f4.order(), 4);
    }

    #[test]
    fn non_prime_rejected() {
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NonPrime(4));
    }

    #[test]
    fn bad_modulus_rejected() {
        // x^2 + 1 = (x+1)^2 over F_2
        assert!(matches!(
            Field::with_modulus(2, 2, vec![1, 0, 1]).unwrap_err(),
            Error::NotIrreducible(_)
        ));
        assert!(matches!(
            Field::with_modulus(2, 2, vec![1, 1]).unwrap_err(),
            Error::DegreeMismatch { .. }
        ));
    }

    #[test]
    fn f4_arithmetic() {
        let f4 = Field::new(2, 2).unwrap();
        let a = f4.generator();
        let a2 = f4.mul(a, a);
        assert_eq!(f4.mul(a, a2), Fe(1)); // a has order 3
        assert_eq!(f4.add(a, a), Fe(0)); // characteristic 2
        assert_eq!(f4.inv(a).unwrap(), a2);
        assert_eq!(f4.inv(Fe(1)).unwrap(), Fe(1));
        assert_eq!(f4.inv(Fe(0)).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn f3_arithmetic() {
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(f3.mul(Fe(2), Fe(2)), Fe(1));
        assert_eq!(f3.add(Fe(2), Fe(2)), Fe(1));
        assert_eq!(f3.neg(Fe(1)), Fe(2));
    }

    #[test]
    fn frobenius_examples() {
        let f4 = Field::new(2, 2).unwrap();
        let a = f4.generator();
        // a^2 by the independent square-and-reduce oracle
        let sq = oracle_mul(&f4, a, a);
        assert_eq!(f4.frobenius(a, 1), sq);
        assert_eq!(f4.frobenius(a, 0), a);
        assert_eq!(f4.frobenius(a, 2), a); // phi^r = id
    }

    #[test]
    fn frobenius_is_field_automorphism() {
        for (p, r) in [(2u64, 4u32), (3, 2), (5, 2)] {
            let f = Field::new(p, r).unwrap();
            for a in f.iter_elems() {
                assert_eq!(f.frobenius(a, r), a);
                for b in f.iter_elems().take(16) {
                    assert_eq!(
                        f.frobenius(f.add(a, b), 1),
                        f.add(f.frobenius(a, 1), f.frobenius(b, 1))
                    );
                    assert_eq!(
                        f.frobenius(f.mul(a, b), 1),
                        f.mul(f.frobenius(a, 1), f.frobenius(b, 1))
                    );
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_order() {
        for (p, r) in [(2u64, 1u32), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 2), (61, 1)] {
            let f = Field::new(p, r).unwrap();
            if f.order() <= 64 {
                for a in f.iter_elems().skip(1) {
                    assert_eq!(f.pow(a, (f.order() - 1) as u64), Fe(1));
                }
            } else {
                assert_eq!(f.pow(f.generator(), (f.order() - 1) as u64), Fe(1));
            }
        }
    }

    #[test]
    fn table_mul_matches_oracle() {
        for (p, r) in [(2u64, 4u32), (3, 2), (5, 2), (2, 8)] {
            let f = Field::new(p, r).unwrap();
            for a in f.iter_elems().step_by(3) {
                for b in f.iter_elems().step_by(7) {
                    assert_eq!(f.mul(a, b), oracle_mul(&f, a, b));
                }
            }
        }
    }

    #[test]
    fn ring_axioms_on_triples() {
        let f = Field::new(3, 2).unwrap();
        let elems: Vec<Fe> = f.iter_elems().collect();
        for (i, &a) in elems.iter().enumerate() {
            let b = elems[(i * 5 + 1) % elems.len()];
            let c = elems[(i * 7 + 3) % elems.len()];
            assert_eq!(f.add(a, b), f.add(b, a));
            assert_eq!(f.mul(a, b), f.mul(b, a));
            assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            assert_eq!(
                f.mul(a, f.add(b, c)),
                f.add(f.mul(a, b), f.mul(a, c))
            );
        }
    }

    #[test]
    fn literals_round_trip() {
        let f4 = Field::parse("GF(4)").unwrap();
        assert_eq!((f4.p(), f4.r()), (2, 2));
        let f4b = Field::parse("GF(2^2)").unwrap();
        assert_eq!(*f4, *f4b);
        let f4c = Field::parse("GF(2^2; 1,1,1)").unwrap();
        assert_eq!(*f4, *f4c);
        assert_eq!(f4.literal(), "GF(2^2)");
        assert!(Field::parse("GF(6)").is_err());

        let a = f4.parse_elem("a").unwrap();
        assert_eq!(a, f4.generator());
        assert_eq!(f4.parse_elem("a^2").unwrap(), f4.mul(a, a));
        assert_eq!(f4.elem_to_string(f4.mul(a, a)), "a^2");
        assert_eq!(f4.parse_elem("3").unwrap(), Fe(3));
    }

    #[test]
    fn checked_elem_wrapper() {
        let f4 = Field::new(2, 2).unwrap();
        let f9 = Field::new(3, 2).unwrap();
        let x = FieldElem::new(f4.clone(), 2).unwrap();
        let y = FieldElem::new(f9, 2).unwrap();
        assert_eq!(x.add(&y).unwrap_err(), Error::SpecMismatch);
        let z = FieldElem::new(f4, 3).unwrap();
        assert_eq!(x.mul(&z).unwrap().code(), Fe(1));
    }
}
