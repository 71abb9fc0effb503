//! Skew polynomial rings R[x; theta] for R in {F_{p^r}, B_k}, the quotient
//! left module R[x; theta]/(x^n - 1), and the vector <-> polynomial map tau.
//!
//! Multiplication twists coefficients past powers of x:
//! `a x^i * b x^j = a theta^i(b) x^{i+j}` — associative but not commutative
//! unless theta is the identity. Right division by a polynomial with a unit
//! leading coefficient is exact (unique quotient and remainder), and the
//! quotient modulo the left ideal generated by x^n - 1 is computed as the
//! right-division remainder. Multiplication by x in the quotient realizes
//! the theta-twisted cyclic shift on coefficient vectors, which is the
//! bridge between skew polynomials and skew-cyclic codes.

use std::fmt;
use std::sync::Arc;

use crate::autmap::Automorphism;
use crate::bk::{RingElem, RingSpec};
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

/// A coefficient ring equipped with a distinguished automorphism theta.
pub trait SkewRing: Clone {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn same_ring(&self, other: &Self) -> bool;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// theta^e(a)
    fn theta_pow(&self, a: &Self::Elem, e: usize) -> Self::Elem;
    /// theta^{-e}(a)
    fn theta_pow_inv(&self, a: &Self::Elem, e: usize) -> Self::Elem;
    /// Multiplicative inverse, None for non-units.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn elem_to_string(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

/// F_{p^r} with theta = phi^t.
#[derive(Clone, Debug)]
pub struct FieldSkew {
    pub field: Arc<Field>,
    t: u32,
}

impl FieldSkew {
    pub fn new(field: Arc<Field>, t: u32) -> FieldSkew {
        let t = t % field.r();
        FieldSkew { field, t }
    }
    pub fn t(&self) -> u32 {
        self.t
    }
}

impl SkewRing for FieldSkew {
    type Elem = Fe;

    fn same_ring(&self, other: &Self) -> bool {
        self.field == other.field && self.t == other.t
    }
    fn zero(&self) -> Fe {
        Fe::ZERO
    }
    fn one(&self) -> Fe {
        Fe::ONE
    }
    fn is_zero(&self, a: &Fe) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Fe, b: &Fe) -> Fe {
        self.field.add(*a, *b)
    }
    fn neg(&self, a: &Fe) -> Fe {
        self.field.neg(*a)
    }
    fn mul(&self, a: &Fe, b: &Fe) -> Fe {
        self.field.mul(*a, *b)
    }
    fn theta_pow(&self, a: &Fe, e: usize) -> Fe {
        let r = self.field.r() as usize;
        self.field
            .frobenius(*a, ((self.t as usize * e) % r) as u32)
    }
    fn theta_pow_inv(&self, a: &Fe, e: usize) -> Fe {
        let r = self.field.r() as usize;
        let fwd = (self.t as usize * e) % r;
        self.field.frobenius(*a, ((r - fwd) % r) as u32)
    }
    fn inv(&self, a: &Fe) -> Option<Fe> {
        self.field.inv(*a).ok()
    }
    fn elem_to_string(&self, a: &Fe) -> String {
        self.field.elem_to_string(*a)
    }
}

/// B_k with an arbitrary ring automorphism.
#[derive(Clone, Debug)]
pub struct RingSkew {
    pub theta: Automorphism,
}

impl RingSkew {
    pub fn new(theta: Automorphism) -> RingSkew {
        RingSkew { theta }
    }
    pub fn spec(&self) -> &Arc<RingSpec> {
        self.theta.spec()
    }
}

impl SkewRing for RingSkew {
    type Elem = RingElem;

    fn same_ring(&self, other: &Self) -> bool {
        self.theta == other.theta
    }
    fn zero(&self) -> RingElem {
        self.spec().zero()
    }
    fn one(&self) -> RingElem {
        self.spec().one()
    }
    fn is_zero(&self, a: &RingElem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        a.add(b).expect("same spec")
    }
    fn neg(&self, a: &RingElem) -> RingElem {
        a.neg()
    }
    fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        a.mul(b).expect("same spec")
    }
    fn theta_pow(&self, a: &RingElem, e: usize) -> RingElem {
        let mut out = a.clone();
        for _ in 0..e {
            out = self.theta.apply(&out).expect("same spec");
        }
        out
    }
    fn theta_pow_inv(&self, a: &RingElem, e: usize) -> RingElem {
        let inv = self.theta.inverse();
        let mut out = a.clone();
        for _ in 0..e {
            out = inv.apply(&out).expect("same spec");
        }
        out
    }
    fn inv(&self, a: &RingElem) -> Option<RingElem> {
        a.inverse().ok()
    }
    fn elem_to_string(&self, a: &RingElem) -> String {
        format!("[{}]", crate::bk::elem_to_codes_string(a))
    }
}

/// Polynomial with coefficients in a skew ring; constant term first,
/// trailing zeros trimmed, the zero polynomial has an empty coefficient
/// list and degree None.
#[derive(Clone)]
pub struct SkewPoly<C: SkewRing> {
    ctx: C,
    coeffs: Vec<C::Elem>,
}

impl<C: SkewRing> PartialEq for SkewPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_ring(&other.ctx) && self.coeffs == other.coeffs
    }
}

impl<C: SkewRing> fmt::Debug for SkewPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly({})", self.to_display_string())
    }
}

impl<C: SkewRing> SkewPoly<C> {
    pub fn new(ctx: C, mut coeffs: Vec<C::Elem>) -> SkewPoly<C> {
        while coeffs.last().map(|c| ctx.is_zero(c)) == Some(true) {
            coeffs.pop();
        }
        SkewPoly { ctx, coeffs }
    }

    pub fn zero(ctx: C) -> SkewPoly<C> {
        SkewPoly {
            ctx,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: C) -> SkewPoly<C> {
        let c = ctx.one();
        SkewPoly {
            ctx,
            coeffs: vec![c],
        }
    }

    pub fn monomial(ctx: C, coef: C::Elem, deg: usize) -> SkewPoly<C> {
        let mut coeffs = vec![ctx.zero(); deg + 1];
        coeffs[deg] = coef;
        SkewPoly::new(ctx, coeffs)
    }

    pub fn x(ctx: C) -> SkewPoly<C> {
        let one = ctx.one();
        SkewPoly::monomial(ctx, one, 1)
    }

    /// x^n - 1.
    pub fn x_pow_minus_one(ctx: C, n: usize) -> SkewPoly<C> {
        let mut coeffs = vec![ctx.zero(); n + 1];
        coeffs[0] = ctx.neg(&ctx.one());
        coeffs[n] = ctx.one();
        SkewPoly::new(ctx, coeffs)
    }

    pub fn ctx(&self) -> &C {
        &self.ctx
    }
    pub fn coeffs(&self) -> &[C::Elem] {
        &self.coeffs
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    /// None is the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> C::Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ctx.zero())
    }

    fn check(&self, other: &SkewPoly<C>) -> Result<()> {
        if self.ctx.same_ring(&other.ctx) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &SkewPoly<C>) -> Result<SkewPoly<C>> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.ctx.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Ok(SkewPoly::new(self.ctx.clone(), coeffs))
    }

    pub fn sub(&self, other: &SkewPoly<C>) -> Result<SkewPoly<C>> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.ctx.sub(&self.coeff(i), &other.coeff(i)))
            .collect();
        Ok(SkewPoly::new(self.ctx.clone(), coeffs))
    }

    /// Twisted product: the x^i coefficient of the left factor passes
    /// theta^i over the right factor's coefficients.
    pub fn mul(&self, other: &SkewPoly<C>) -> Result<SkewPoly<C>> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(SkewPoly::zero(self.ctx.clone()));
        }
        let ctx = &self.ctx;
        let mut out = vec![ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        // twisted[j] = theta^i(b_j), updated one theta application per i
        let mut twisted: Vec<C::Elem> = other.coeffs.clone();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                for c in twisted.iter_mut() {
                    *c = self.ctx.theta_pow(c, 1);
                }
            }
            if ctx.is_zero(a) {
                continue;
            }
            for (j, b) in twisted.iter().enumerate() {
                let term = ctx.mul(a, b);
                out[i + j] = ctx.add(&out[i + j], &term);
            }
        }
        Ok(SkewPoly::new(self.ctx.clone(), out))
    }

    /// Left-scale by a ring element.
    pub fn scale(&self, c: &C::Elem) -> SkewPoly<C> {
        let coeffs = self.coeffs.iter().map(|a| self.ctx.mul(c, a)).collect();
        SkewPoly::new(self.ctx.clone(), coeffs)
    }

    /// Right division: f = q * d + rem with deg rem < deg d. Requires a
    /// unit leading coefficient on d.
    pub fn right_divide(&self, d: &SkewPoly<C>) -> Result<(SkewPoly<C>, SkewPoly<C>)> {
        self.check(d)?;
        let ctx = self.ctx.clone();
        let Some(dd) = d.degree() else {
            return Err(Error::DivisionByZeroPolynomial);
        };
        let lead_inv = ctx
            .inv(&d.coeffs[dd])
            .ok_or(Error::NonUnitLeadingCoefficient)?;
        let mut rem = self.clone();
        let mut q = vec![ctx.zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(fd) = rem.degree() {
            if fd < dd {
                break;
            }
            let e = fd - dd;
            // (c x^e) * d has leading coefficient c * theta^e(lead d)
            let c = ctx.mul(&rem.coeffs[fd], &ctx.theta_pow(&lead_inv, e));
            q[e] = ctx.add(&q[e], &c);
            let sub = SkewPoly::monomial(ctx.clone(), c, e).mul(d)?;
            rem = rem.sub(&sub)?;
        }
        Ok((SkewPoly::new(ctx, q), rem))
    }

    /// Left division: f = d * q + rem with deg rem < deg d.
    pub fn left_divide(&self, d: &SkewPoly<C>) -> Result<(SkewPoly<C>, SkewPoly<C>)> {
        self.check(d)?;
        let ctx = self.ctx.clone();
        let Some(dd) = d.degree() else {
            return Err(Error::DivisionByZeroPolynomial);
        };
        let lead_inv = ctx
            .inv(&d.coeffs[dd])
            .ok_or(Error::NonUnitLeadingCoefficient)?;
        let mut rem = self.clone();
        let mut q = vec![ctx.zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(fd) = rem.degree() {
            if fd < dd {
                break;
            }
            let e = fd - dd;
            // d * (c x^e) has leading coefficient lead(d) * theta^dd(c)
            let c = ctx.theta_pow_inv(&ctx.mul(&lead_inv, &rem.coeffs[fd]), dd);
            q[e] = ctx.add(&q[e], &c);
            let sub = d.mul(&SkewPoly::monomial(ctx.clone(), c, e))?;
            rem = rem.sub(&sub)?;
        }
        Ok((SkewPoly::new(ctx, q), rem))
    }

    /// Canonical representative in R[x; theta]/(x^n - 1): the remainder of
    /// right division by x^n - 1.
    pub fn mod_xn_minus_1(&self, n: usize) -> QuotientElem<C> {
        let modulus = SkewPoly::x_pow_minus_one(self.ctx.clone(), n);
        let (_, rem) = self
            .right_divide(&modulus)
            .expect("x^n - 1 is monic");
        QuotientElem { poly: rem, n }
    }

    pub fn to_display_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if self.ctx.is_zero(c) {
                continue;
            }
            let cs = self.ctx.elem_to_string(c);
            let term = match (i, cs.as_str()) {
                (0, _) => cs,
                (1, "1") => "x".into(),
                (1, _) => format!("{cs}*x"),
                (_, "1") => format!("x^{i}"),
                _ => format!("{cs}*x^{i}"),
            };
            terms.push(term);
        }
        terms.join(" + ")
    }
}

impl SkewPoly<FieldSkew> {
    /// Parse sums of terms like `x^2 + a^2*x + a` over a field; `-` is
    /// accepted and folds into the coefficient.
    pub fn parse_field(ctx: FieldSkew, text: &str) -> Result<SkewPoly<FieldSkew>> {
        let field = ctx.field.clone();
        let s = text.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut coeffs: Vec<Fe> = Vec::new();
        let put = |deg: usize, c: Fe, coeffs: &mut Vec<Fe>| {
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, Fe::ZERO);
            }
            coeffs[deg] = field.add(coeffs[deg], c);
        };
        for (sign, term) in split_signed_terms(s) {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("bad polynomial `{s}`")));
            }
            let (coef_part, deg) = match term.find('x') {
                None => (term, 0usize),
                Some(pos) => {
                    let coef = term[..pos].trim().trim_end_matches('*').trim();
                    let xpart = term[pos..].trim();
                    let deg = match xpart.strip_prefix("x^") {
                        Some(d) => d
                            .trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad term `{term}`")))?,
                        None if xpart == "x" => 1,
                        _ => return Err(Error::Parse(format!("bad term `{term}`"))),
                    };
                    (coef, deg)
                }
            };
            let mut c = if coef_part.is_empty() {
                field.one()
            } else {
                field.parse_elem(coef_part)?
            };
            if sign {
                c = field.neg(c);
            }
            put(deg, c, &mut coeffs);
        }
        Ok(SkewPoly::new(ctx, coeffs))
    }
}

impl SkewPoly<RingSkew> {
    /// Parse the coefficient-vector form over B_k: terms like
    /// `[1,0,2,3]*x^2 + [1,0,0,0]`.
    pub fn parse_ring(ctx: RingSkew, text: &str) -> Result<SkewPoly<RingSkew>> {
        let spec = ctx.spec().clone();
        let s = text.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut coeffs: Vec<RingElem> = Vec::new();
        for (sign, term) in split_signed_terms(s) {
            let term = term.trim();
            let (vec_part, deg) = match term.find(']') {
                None => return Err(Error::Parse(format!("bad term `{term}`"))),
                Some(pos) => {
                    let inner = term[..pos]
                        .strip_prefix('[')
                        .ok_or_else(|| Error::Parse(format!("bad term `{term}`")))?;
                    let rest = term[pos + 1..].trim();
                    let deg = if rest.is_empty() {
                        0
                    } else {
                        let xp = rest
                            .strip_prefix('*')
                            .map(str::trim)
                            .unwrap_or(rest);
                        match xp.strip_prefix("x^") {
                            Some(d) => d
                                .trim()
                                .parse::<usize>()
                                .map_err(|_| Error::Parse(format!("bad term `{term}`")))?,
                            None if xp == "x" => 1,
                            _ => return Err(Error::Parse(format!("bad term `{term}`"))),
                        }
                    };
                    (inner, deg)
                }
            };
            let mut e = crate::bk::parse_elem_codes(&spec, vec_part)?;
            if sign {
                e = e.neg();
            }
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, spec.zero());
            }
            coeffs[deg] = coeffs[deg].add(&e).expect("same spec");
        }
        Ok(SkewPoly::new(ctx, coeffs))
    }
}

/// Split into (is_negative, term) pieces on top-level + and -.
fn split_signed_terms(s: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '[' | '(' => {
                depth += 1;
                cur.push(ch);
            }
            ']' | ')' => {
                depth -= 1;
                cur.push(ch);
            }
            '+' if depth == 0 => {
                if !cur.trim().is_empty() {
                    out.push((neg, cur.clone()));
                }
                cur.clear();
                neg = false;
            }
            '-' if depth == 0 && !cur.trim().is_empty() => {
                out.push((neg, cur.clone()));
                cur.clear();
                neg = true;
            }
            '-' if depth == 0 => {
                neg = true;
            }
            _ => cur.push(ch),
        }
    }
    if !cur.trim().is_empty() {
        out.push((neg, cur));
    }
    out
}

/// Element of R[x; theta]/(x^n - 1), kept at degree < n.
#[derive(Clone, Debug)]
pub struct QuotientElem<C: SkewRing> {
    poly: SkewPoly<C>,
    n: usize,
}

impl<C: SkewRing> PartialEq for QuotientElem<C> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.poly == other.poly
    }
}

impl<C: SkewRing> QuotientElem<C> {
    pub fn poly(&self) -> &SkewPoly<C> {
        &self.poly
    }
    pub fn n(&self) -> usize {
        self.n
    }

    /// tau: coefficient vectors to quotient classes.
    pub fn tau(ctx: C, v: &[C::Elem]) -> QuotientElem<C> {
        QuotientElem {
            n: v.len(),
            poly: SkewPoly::new(ctx, v.to_vec()),
        }
    }

    /// tau^{-1}: back to a length-n coefficient vector.
    pub fn tau_inv(&self) -> Vec<C::Elem> {
        let ctx = self.poly.ctx();
        let mut v = self.poly.coeffs().to_vec();
        v.resize(self.n, ctx.zero());
        v
    }

    /// Left action h(x) * a in the quotient.
    pub fn left_action(&self, h: &SkewPoly<C>) -> Result<QuotientElem<C>> {
        if !h.ctx().same_ring(self.poly.ctx()) {
            return Err(Error::RingMismatch);
        }
        Ok(h.mul(&self.poly)?.mod_xn_minus_1(self.n))
    }

    /// Multiplication by x: the theta-twisted cyclic shift.
    pub fn times_x(&self) -> QuotientElem<C> {
        let ctx = self.poly.ctx().clone();
        let mut out = vec![ctx.zero(); self.n];
        for (i, c) in self.poly.coeffs().iter().enumerate() {
            out[(i + 1) % self.n] = ctx.add(&out[(i + 1) % self.n], &ctx.theta_pow(c, 1));
        }
        QuotientElem {
            poly: SkewPoly::new(ctx, out),
            n: self.n,
        }
    }
}
