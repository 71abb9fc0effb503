//! Linear codes over F_{p^r} and over B_k, their twisted-shift structure,
//! Euclidean duality and minimum distance.
//!
//! A code over B_k is stored through its component decomposition: psi maps
//! B_k^n onto F_{p^r}^{n 2^k}, and a subset of B_k^n is linear exactly when
//! its image is a column-wise product of 2^k linear codes C_1..C_{2^k} of
//! length n (component j collects coordinate j of every block). All
//! membership, duality and distance questions reduce to the components:
//!
//! * the Euclidean dual decomposes componentwise, so C is self-dual iff
//!   every C_i is;
//! * the minimum Hamming distance of C is the minimum over the component
//!   distances;
//! * C is closed under the theta-twisted shift iff the field-level shift
//!   maps each C_i into C_{pi(i)}, where pi is the permutation of
//!   semisimple coordinates induced by theta.
//!
//! Two further characterizations of theta-cyclicity are implemented
//! independently and cross-checked: direct closure of the generators under
//! the twisted shift, and fixedness of the Gray image under the map Xi
//! (blockwise induced map composed with a one-block rotation).

use std::sync::Arc;

use crate::autmap::Automorphism;
use crate::bk::{RingElem, RingSpec};
use crate::distance::{self, IsdOptions, IsdOutcome};
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::gray;
use crate::linalg::Mat;
use crate::skewpoly::{FieldSkew, QuotientElem, SkewPoly};

/// Default cap on exhaustive codeword enumeration.
pub const DEFAULT_BUDGET: u128 = 1 << 28;

/// A linear code over F_{p^r}, canonically represented by the reduced row
/// echelon form of its generator matrix. Codes are equal iff their
/// canonical forms are equal.
#[derive(Clone, Debug)]
pub struct FieldCode {
    field: Arc<Field>,
    n: usize,
    gen: Mat,
    pivots: Vec<usize>,
}

impl PartialEq for FieldCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.gen == other.gen
    }
}
impl Eq for FieldCode {}

impl FieldCode {
    /// Row space of the given vectors.
    pub fn from_vectors(field: Arc<Field>, n: usize, gens: &[Vec<Fe>]) -> Result<FieldCode> {
        for g in gens {
            if g.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: g.len(),
                });
            }
        }
        let mut m = Mat::from_rows(field.clone(), gens.to_vec(), n)?;
        let pivots = m.rref();
        m.drop_zero_rows();
        Ok(FieldCode {
            field,
            n,
            gen: m,
            pivots,
        })
    }

    pub fn zero_code(field: Arc<Field>, n: usize) -> FieldCode {
        FieldCode::from_vectors(field, n, &[]).expect("no rows to mismatch")
    }

    pub fn full_space(field: Arc<Field>, n: usize) -> FieldCode {
        let rows: Vec<Vec<Fe>> = (0..n)
            .map(|i| {
                let mut r = vec![Fe::ZERO; n];
                r[i] = Fe::ONE;
                r
            })
            .collect();
        FieldCode::from_vectors(field, n, &rows).expect("rows have length n")
    }

    /// The theta-cyclic code generated by g in F_{p^r}[x; phi^t]/(x^n - 1):
    /// the span of x^i * g for i = 0..n-1, closed under the twisted shift
    /// by construction. When g right-divides x^n - 1 the dimension is
    /// n - deg g.
    pub fn skew_cyclic(g: &SkewPoly<FieldSkew>, n: usize) -> Result<FieldCode> {
        if let Some(d) = g.degree() {
            if d >= n {
                return Err(Error::DegreeTooLarge { degree: d, n });
            }
        }
        let field = g.ctx().field.clone();
        let mut rows = Vec::with_capacity(n);
        let mut padded = g.coeffs().to_vec();
        padded.resize(n, Fe::ZERO);
        let mut cur = QuotientElem::tau(g.ctx().clone(), &padded);
        for _ in 0..n {
            rows.push(cur.tau_inv());
            cur = cur.times_x();
        }
        FieldCode::from_vectors(field, n, &rows)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn dim(&self) -> usize {
        self.gen.rows()
    }
    /// Canonical generator matrix (RREF).
    pub fn generator(&self) -> &Mat {
        &self.gen
    }
    pub fn generator_rows(&self) -> Vec<Vec<Fe>> {
        self.gen.row_vecs()
    }

    /// |C| = q^dim, if it fits in u128.
    pub fn size(&self) -> Option<u128> {
        let q = self.field.order() as u128;
        let mut acc = 1u128;
        for _ in 0..self.dim() {
            acc = acc.checked_mul(q)?;
        }
        Some(acc)
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        v.len() == self.n && self.gen.reduces_to_zero(&self.pivots, v)
    }

    /// All q^dim codewords, message by message. Intended for small codes.
    pub fn iter_codewords(&self) -> impl Iterator<Item = Vec<Fe>> + '_ {
        let q = self.field.order() as u128;
        let k = self.dim();
        let total = self.size().expect("code too large to enumerate");
        (0..total).map(move |mut msg| {
            let mut w = vec![Fe::ZERO; self.n];
            for i in 0..k {
                let c = Fe((msg % q) as u16);
                msg /= q;
                if !c.is_zero() {
                    for (slot, &g) in w.iter_mut().zip(self.gen.row(i)) {
                        *slot = self.field.add(*slot, self.field.mul(c, g));
                    }
                }
            }
            w
        })
    }

    /// Euclidean dual: the null space of the generator matrix.
    pub fn euclidean_dual(&self) -> FieldCode {
        let ns = self.gen.null_space(&self.pivots);
        FieldCode::from_vectors(self.field.clone(), self.n, &ns.row_vecs())
            .expect("null space rows have length n")
    }

    /// C subseteq C^perp, i.e. the Gram matrix of the generators vanishes.
    pub fn is_self_orthogonal(&self) -> bool {
        self.gen.gram().is_zero()
    }

    /// Canonical form of the code equals the canonical form of its dual.
    pub fn is_self_dual(&self) -> bool {
        *self == self.euclidean_dual()
    }

    /// True iff the l-fold twisted shift maps every generator into the code.
    pub fn is_quasi_theta_cyclic(&self, t: u32, l: usize) -> bool {
        assert!(l >= 1, "quasi-cyclic index must be at least 1");
        (0..self.dim()).all(|i| {
            let shifted = shift_field(&self.field, self.gen.row(i), t, l);
            self.contains(&shifted)
        })
    }

    /// Exact minimum Hamming distance by full enumeration; None for the
    /// zero code.
    pub fn min_distance_exhaustive(&self, budget: u128) -> Result<Option<u32>> {
        distance::exhaustive_min_distance(self, budget)
    }

    /// Exact minimum distance via information-set enumeration.
    pub fn min_distance_isd(&self, opts: &IsdOptions) -> Result<IsdOutcome> {
        distance::min_distance_isd(self, opts)
    }
}

/// The paper's twisted shift T_{theta}^l over the field: rotate right by l
/// and apply phi^t entrywise (one application, indices mod n).
pub fn shift_field(field: &Arc<Field>, v: &[Fe], t: u32, l: usize) -> Vec<Fe> {
    let n = v.len();
    if n == 0 {
        return Vec::new();
    }
    let l = l % n;
    (0..n)
        .map(|j| field.frobenius(v[(j + n - l) % n], t))
        .collect()
}

/// T_{theta}^l over B_k: rotate right by l and apply the automorphism
/// entrywise.
pub fn shift_ring(theta: &Automorphism, v: &[RingElem], l: usize) -> Result<Vec<RingElem>> {
    let n = v.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let l = l % n;
    (0..n).map(|j| theta.apply(&v[(j + n - l) % n])).collect()
}

/// A linear code over B_k, stored as its component decomposition: 2^k
/// field codes of the same length.
#[derive(Clone, Debug)]
pub struct BkCode {
    spec: Arc<RingSpec>,
    n: usize,
    components: Vec<FieldCode>,
}

impl PartialEq for BkCode {
    fn eq(&self, other: &Self) -> bool {
        *self.spec == *other.spec && self.n == other.n && self.components == other.components
    }
}
impl Eq for BkCode {}

impl BkCode {
    pub fn from_components(
        spec: Arc<RingSpec>,
        n: usize,
        components: Vec<FieldCode>,
    ) -> Result<BkCode> {
        if components.len() != spec.dim() {
            return Err(Error::LengthMismatch {
                expected: spec.dim(),
                got: components.len(),
            });
        }
        for c in &components {
            if *c.field() != *spec.field() {
                return Err(Error::SpecMismatch);
            }
            if c.n() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: c.n(),
                });
            }
        }
        Ok(BkCode {
            spec,
            n,
            components,
        })
    }

    /// The B_k-submodule generated by the given vectors: component j is the
    /// span of column j of the Gray images.
    pub fn from_generators(
        spec: Arc<RingSpec>,
        n: usize,
        gens: &[Vec<RingElem>],
    ) -> Result<BkCode> {
        let dim = spec.dim();
        let mut columns: Vec<Vec<Vec<Fe>>> = vec![Vec::new(); dim];
        for g in gens {
            if g.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: g.len(),
                });
            }
            let img = gray::psi_vec(g)?;
            for (j, col) in columns.iter_mut().enumerate() {
                col.push((0..n).map(|b| img[b * dim + j]).collect());
            }
        }
        let components: Result<Vec<FieldCode>> = columns
            .into_iter()
            .map(|rows| FieldCode::from_vectors(spec.field().clone(), n, &rows))
            .collect();
        BkCode::from_components(spec, n, components?)
    }

    pub fn spec(&self) -> &Arc<RingSpec> {
        &self.spec
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn components(&self) -> &[FieldCode] {
        &self.components
    }

    /// |C| = product of component sizes.
    pub fn size(&self) -> Option<u128> {
        let mut acc = 1u128;
        for c in &self.components {
            acc = acc.checked_mul(c.size()?)?;
        }
        Some(acc)
    }

    /// Membership: every Gray block-column must lie in its component.
    pub fn contains(&self, v: &[RingElem]) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        for e in v {
            if **e.spec() != *self.spec {
                return Err(Error::SpecMismatch);
            }
        }
        let dim = self.spec.dim();
        let img = gray::psi_vec(v)?;
        for (j, comp) in self.components.iter().enumerate() {
            let col: Vec<Fe> = (0..self.n).map(|b| img[b * dim + j]).collect();
            if !comp.contains(&col) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Generators of the code as an F_{p^r}-space: for each component i and
    /// each canonical generator row u of C_i, the vector whose Gray image
    /// has column i equal to u and all other columns zero.
    fn space_generators(&self) -> Result<Vec<Vec<RingElem>>> {
        let dim = self.spec.dim();
        let mut out = Vec::new();
        for (i, comp) in self.components.iter().enumerate() {
            for row in comp.generator_rows() {
                let mut vec = Vec::with_capacity(self.n);
                for b in 0..self.n {
                    let mut coords = vec![Fe::ZERO; dim];
                    coords[i] = row[b];
                    vec.push(gray::psi_inv(&self.spec, &coords)?);
                }
                out.push(vec);
            }
        }
        Ok(out)
    }

    /// Closure under the twisted shift, checked on the canonical
    /// generators; sufficient because the shift is additive and
    /// phi^t-semilinear over F_{p^r}.
    pub fn is_theta_cyclic(&self, theta: &Automorphism) -> Result<bool> {
        if **theta.spec() != *self.spec {
            return Err(Error::SpecMismatch);
        }
        for g in self.space_generators()? {
            let shifted = shift_ring(theta, &g, 1)?;
            if !self.contains(&shifted)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First characterization: the Gray image is fixed by
    /// Xi = (blockwise Sigma_S o Gamma) after a one-block rotation.
    /// Must agree with [`BkCode::is_theta_cyclic`] on every input.
    pub fn first_characterization_check(&self, theta: &Automorphism) -> Result<bool> {
        if **theta.spec() != *self.spec {
            return Err(Error::SpecMismatch);
        }
        let dim = self.spec.dim();
        let field = self.spec.field().clone();
        let induced = theta.induced_map();
        let total = self.n * dim;
        for (i, comp) in self.components.iter().enumerate() {
            for row in comp.generator_rows() {
                // Gray image of the single-column generator
                let mut y = vec![Fe::ZERO; total];
                for b in 0..self.n {
                    y[b * dim + i] = row[b];
                }
                // global rotation by one block of size 2^k
                let mut rotated = vec![Fe::ZERO; total];
                for (j, &c) in y.iter().enumerate() {
                    rotated[(j + dim) % total] = c;
                }
                // blockwise semilinear map
                let mut image = vec![Fe::ZERO; total];
                for b in 0..self.n {
                    let block = &rotated[b * dim..(b + 1) * dim];
                    for (m, &src) in induced.perm.iter().enumerate() {
                        image[b * dim + m] = field.frobenius(block[src], induced.t);
                    }
                }
                // membership of every block-column
                for (j, comp_j) in self.components.iter().enumerate() {
                    let col: Vec<Fe> = (0..self.n).map(|b| image[b * dim + j]).collect();
                    if !comp_j.contains(&col) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Assemble a theta-cyclic code from components, enforcing the
    /// compatibility condition T_thetatilde(C_i) subseteq C_pi(i) with pi
    /// the induced permutation. The result is asserted theta-cyclic.
    pub fn construct_theta_cyclic(
        theta: &Automorphism,
        components: Vec<FieldCode>,
    ) -> Result<BkCode> {
        let spec = theta.spec().clone();
        if components.is_empty() {
            return Err(Error::LengthMismatch {
                expected: spec.dim(),
                got: 0,
            });
        }
        let n = components[0].n();
        let pi = theta.component_permutation();
        let t = theta.frobenius_exp();
        let code = BkCode::from_components(spec, n, components)?;
        for (i, comp) in code.components.iter().enumerate() {
            let target = &code.components[pi[i]];
            for row in comp.generator_rows() {
                let shifted = shift_field(code.spec.field(), &row, t, 1);
                if !target.contains(&shifted) {
                    return Err(Error::CompatibilityViolation { component: i + 1 });
                }
            }
        }
        assert!(
            code.is_theta_cyclic(theta)?,
            "compatibility condition must imply theta-cyclicity"
        );
        Ok(code)
    }

    /// Componentwise Euclidean dual; valid because psi turns the B_k
    /// Euclidean product into the coordinatewise field products.
    pub fn euclidean_dual(&self) -> BkCode {
        BkCode {
            spec: self.spec.clone(),
            n: self.n,
            components: self.components.iter().map(|c| c.euclidean_dual()).collect(),
        }
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.components.iter().all(|c| c.is_self_orthogonal())
    }

    /// Both routes: canonical equality with the dual, and all components
    /// self-dual; asserted to agree.
    pub fn is_self_dual(&self) -> bool {
        let canonical = *self == self.euclidean_dual();
        let componentwise = self.components.iter().all(|c| c.is_self_dual());
        assert_eq!(canonical, componentwise);
        canonical
    }

    /// Distinct components (repeated components share their distance).
    fn unique_components(&self) -> Vec<&FieldCode> {
        let mut uniq: Vec<&FieldCode> = Vec::new();
        for c in &self.components {
            if !uniq.iter().any(|u| *u == c) {
                uniq.push(c);
            }
        }
        uniq
    }

    /// Minimum distance as the minimum over the components
    /// (undefined for the zero code).
    pub fn min_distance_exhaustive(&self, budget: u128) -> Result<Option<u32>> {
        let mut best: Option<u32> = None;
        for c in self.unique_components() {
            if let Some(d) = c.min_distance_exhaustive(budget)? {
                best = Some(best.map_or(d, |b| b.min(d)));
            }
        }
        Ok(best)
    }

    /// Minimum distance via per-component information-set runs.
    pub fn min_distance_isd(&self, opts: &IsdOptions) -> Result<Option<u32>> {
        let mut best: Option<u32> = None;
        for c in self.unique_components() {
            if c.dim() == 0 {
                continue;
            }
            let out = c.min_distance_isd(opts)?;
            let d = out
                .distance
                .expect("unrestricted isd run returns an exact distance");
            best = Some(best.map_or(d, |b| b.min(d)));
        }
        Ok(best)
    }

    /// All codewords as B_k-vectors, for small codes: the product of the
    /// component codes pulled back through psi.
    pub fn iter_codewords(&self) -> Result<Vec<Vec<RingElem>>> {
        let dim = self.spec.dim();
        let mut words: Vec<Vec<Vec<Fe>>> = vec![Vec::new()];
        for comp in &self.components {
            let comp_words: Vec<Vec<Fe>> = comp.iter_codewords().collect();
            let mut next = Vec::with_capacity(words.len() * comp_words.len());
            for prefix in &words {
                for w in &comp_words {
                    let mut ext = prefix.clone();
                    ext.push(w.clone());
                    next.push(ext);
                }
            }
            words = next;
        }
        words
            .into_iter()
            .map(|cols| {
                (0..self.n)
                    .map(|b| {
                        let coords: Vec<Fe> = (0..dim).map(|j| cols[j][b]).collect();
                        gray::psi_inv(&self.spec, &coords)
                    })
                    .collect()
            })
            .collect()
    }
}

/// Hamming weight of a B_k vector (number of nonzero ring entries).
pub fn ring_weight(v: &[RingElem]) -> usize {
    v.iter().filter(|e| !e.is_zero()).count()
}
