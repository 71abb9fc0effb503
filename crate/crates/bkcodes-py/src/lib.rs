//! Python bindings: fields, the algebra B_k, automorphisms, Gray maps,
//! skew polynomials and theta-cyclic codes.
//!
//! Field elements cross the boundary as integer codes in [0, p^r); ring
//! elements as lists of 2^k codes; vectors over B_k as lists of lists.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use bkcodes::autmap::Automorphism;
use bkcodes::bk::{self, RingSpec};
use bkcodes::codes::{self, BkCode, FieldCode};
use bkcodes::distance::IsdOptions;
use bkcodes::gf::{Fe, Field as GfField};
use bkcodes::gray;
use bkcodes::skewpoly::{FieldSkew, SkewPoly};
use bkcodes::table::{self, DistanceMode, TableRowSpec, VerifyOptions};

fn err<T>(e: bkcodes::Error) -> PyResult<T> {
    Err(PyValueError::new_err(e.to_string()))
}

fn fe_vec(field: &Arc<GfField>, codes: &[u32]) -> PyResult<Vec<Fe>> {
    codes
        .iter()
        .map(|&c| field.elem(c).or_else(err))
        .collect()
}

fn codes_of(v: &[Fe]) -> Vec<u32> {
    v.iter().map(|c| c.0 as u32).collect()
}

/// The finite field F_{p^r}; elements are integer codes in [0, p^r).
#[pyclass(frozen)]
struct Field {
    inner: Arc<GfField>,
}

#[pymethods]
impl Field {
    #[new]
    #[pyo3(signature = (p, r, modulus=None))]
    fn new(p: u64, r: u32, modulus: Option<Vec<u32>>) -> PyResult<Self> {
        let inner = match modulus {
            Some(m) => GfField::with_modulus(p, r, m),
            None => GfField::new(p, r),
        }
        .or_else(err)?;
        Ok(Field { inner })
    }

    /// Parse a literal like `GF(4)` or `GF(2^2; 1,1,1)`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Field {
            inner: GfField::parse(text).or_else(err)?,
        })
    }

    #[getter]
    fn p(&self) -> u32 {
        self.inner.p()
    }
    #[getter]
    fn r(&self) -> u32 {
        self.inner.r()
    }
    #[getter]
    fn order(&self) -> u32 {
        self.inner.order()
    }
    #[getter]
    fn generator(&self) -> u32 {
        self.inner.generator().0 as u32
    }
    #[getter]
    fn modulus(&self) -> Vec<u32> {
        self.inner.modulus().to_vec()
    }

    fn add(&self, a: u32, b: u32) -> PyResult<u32> {
        let (a, b) = (self.inner.elem(a).or_else(err)?, self.inner.elem(b).or_else(err)?);
        Ok(self.inner.add(a, b).0 as u32)
    }
    fn sub(&self, a: u32, b: u32) -> PyResult<u32> {
        let (a, b) = (self.inner.elem(a).or_else(err)?, self.inner.elem(b).or_else(err)?);
        Ok(self.inner.sub(a, b).0 as u32)
    }
    fn mul(&self, a: u32, b: u32) -> PyResult<u32> {
        let (a, b) = (self.inner.elem(a).or_else(err)?, self.inner.elem(b).or_else(err)?);
        Ok(self.inner.mul(a, b).0 as u32)
    }
    fn neg(&self, a: u32) -> PyResult<u32> {
        Ok(self.inner.neg(self.inner.elem(a).or_else(err)?).0 as u32)
    }
    fn inv(&self, a: u32) -> PyResult<u32> {
        let a = self.inner.elem(a).or_else(err)?;
        Ok(self.inner.inv(a).or_else(err)?.0 as u32)
    }
    fn pow(&self, a: u32, e: u64) -> PyResult<u32> {
        Ok(self.inner.pow(self.inner.elem(a).or_else(err)?, e).0 as u32)
    }
    /// phi^t(a) = a^(p^t).
    fn frobenius(&self, a: u32, t: u32) -> PyResult<u32> {
        Ok(self.inner.frobenius(self.inner.elem(a).or_else(err)?, t).0 as u32)
    }
    fn elem_str(&self, a: u32) -> PyResult<String> {
        Ok(self.inner.elem_to_string(self.inner.elem(a).or_else(err)?))
    }
    fn parse_elem(&self, s: &str) -> PyResult<u32> {
        Ok(self.inner.parse_elem(s).or_else(err)?.0 as u32)
    }

    /// Skew product in F_{p^r}[x; phi^t] of two polynomial literals.
    fn skew_mul(&self, t: u32, f: &str, g: &str) -> PyResult<String> {
        let ctx = FieldSkew::new(self.inner.clone(), t);
        let pf = SkewPoly::parse_field(ctx.clone(), f).or_else(err)?;
        let pg = SkewPoly::parse_field(ctx, g).or_else(err)?;
        Ok(pf.mul(&pg).or_else(err)?.to_display_string())
    }

    /// Right division f = q*d + rem; returns (q, rem) as literals.
    fn skew_right_divide(&self, t: u32, f: &str, d: &str) -> PyResult<(String, String)> {
        let ctx = FieldSkew::new(self.inner.clone(), t);
        let pf = SkewPoly::parse_field(ctx.clone(), f).or_else(err)?;
        let pd = SkewPoly::parse_field(ctx, d).or_else(err)?;
        let (q, rem) = pf.right_divide(&pd).or_else(err)?;
        Ok((q.to_display_string(), rem.to_display_string()))
    }

    fn __repr__(&self) -> String {
        self.inner.literal()
    }
}

/// The algebra B_k over F_{p^r}; elements are lists of 2^k field codes.
#[pyclass(frozen)]
struct Ring {
    inner: Arc<RingSpec>,
}

impl Ring {
    fn elem(&self, codes: &[u32]) -> PyResult<bk::RingElem> {
        self.inner.elem_from_codes(codes).or_else(err)
    }
}

#[pymethods]
impl Ring {
    #[new]
    fn new(field: &Field, k: usize) -> PyResult<Self> {
        Ok(Ring {
            inner: RingSpec::new(field.inner.clone(), k).or_else(err)?,
        })
    }

    /// Parse a literal like `B(2) over GF(4)`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Ring {
            inner: RingSpec::parse(text).or_else(err)?,
        })
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }
    #[getter]
    fn field(&self) -> Field {
        Field {
            inner: self.inner.field().clone(),
        }
    }
    /// |B_k| as a string (it can exceed machine integers).
    #[getter]
    fn size(&self) -> Option<String> {
        self.inner.size().map(|s| s.to_string())
    }

    fn add(&self, a: Vec<u32>, b: Vec<u32>) -> PyResult<Vec<u32>> {
        let out = self.elem(&a)?.add(&self.elem(&b)?).or_else(err)?;
        Ok(codes_of(out.coeffs()))
    }
    fn neg(&self, a: Vec<u32>) -> PyResult<Vec<u32>> {
        Ok(codes_of(self.elem(&a)?.neg().coeffs()))
    }
    fn mul(&self, a: Vec<u32>, b: Vec<u32>) -> PyResult<Vec<u32>> {
        let out = self.elem(&a)?.mul(&self.elem(&b)?).or_else(err)?;
        Ok(codes_of(out.coeffs()))
    }
    fn power(&self, a: Vec<u32>, e: u64) -> PyResult<Vec<u32>> {
        Ok(codes_of(self.elem(&a)?.power(e).coeffs()))
    }
    fn is_unit(&self, a: Vec<u32>) -> PyResult<bool> {
        Ok(self.elem(&a)?.is_unit())
    }
    fn is_zero_divisor(&self, a: Vec<u32>) -> PyResult<bool> {
        Ok(self.elem(&a)?.is_zero_divisor())
    }
    fn inverse(&self, a: Vec<u32>) -> PyResult<Vec<u32>> {
        Ok(codes_of(self.elem(&a)?.inverse().or_else(err)?.coeffs()))
    }
    fn semisimple_coords(&self, a: Vec<u32>) -> PyResult<Vec<u32>> {
        Ok(codes_of(&self.elem(&a)?.semisimple_coords()))
    }
    fn elem_str(&self, a: Vec<u32>) -> PyResult<String> {
        Ok(format!("{}", self.elem(&a)?))
    }

    /// Recursive Gray map.
    fn phi(&self, a: Vec<u32>) -> PyResult<Vec<u32>> {
        Ok(codes_of(&gray::phi(&self.elem(&a)?)))
    }
    /// Subset-sum Gray map.
    fn psi(&self, a: Vec<u32>) -> PyResult<Vec<u32>> {
        Ok(codes_of(&gray::psi(&self.elem(&a)?)))
    }
    fn phi_inv(&self, y: Vec<u32>) -> PyResult<Vec<u32>> {
        let img = fe_vec(self.inner.field(), &y)?;
        Ok(codes_of(gray::phi_inv(&self.inner, &img).or_else(err)?.coeffs()))
    }
    fn psi_inv(&self, y: Vec<u32>) -> PyResult<Vec<u32>> {
        let img = fe_vec(self.inner.field(), &y)?;
        Ok(codes_of(gray::psi_inv(&self.inner, &img).or_else(err)?.coeffs()))
    }

    /// Choice flags of the 2^k maximal ideals (true selects 1 - v_i).
    fn maximal_ideals(&self) -> Vec<Vec<bool>> {
        bk::maximal_ideals(&self.inner)
            .into_iter()
            .map(|m| m.choice().to_vec())
            .collect()
    }

    fn ideal_single_generator(&self, gens: Vec<Vec<u32>>) -> PyResult<Vec<u32>> {
        let gens: PyResult<Vec<bk::RingElem>> = gens.iter().map(|g| self.elem(g)).collect();
        Ok(codes_of(
            bk::ideal_single_generator(&gens?).or_else(err)?.coeffs(),
        ))
    }

    /// Parse an automorphism literal like `v1->v2; v2->1-v1; t=1`.
    #[pyo3(signature = (literal, strict=true))]
    fn automorphism(&self, literal: &str, strict: bool) -> PyResult<Aut> {
        let (inner, repair) = Automorphism::parse(&self.inner, literal, strict).or_else(err)?;
        Ok(Aut { inner, repair })
    }

    fn __repr__(&self) -> String {
        self.inner.literal()
    }
}

/// An automorphism of B_k.
#[pyclass(frozen)]
struct Aut {
    inner: Automorphism,
    repair: Option<String>,
}

#[pymethods]
impl Aut {
    #[getter]
    fn t(&self) -> u32 {
        self.inner.frobenius_exp()
    }
    /// Repair note when the literal was non-injective and got fixed.
    #[getter]
    fn repair_note(&self) -> Option<String> {
        self.repair.clone()
    }
    #[getter]
    fn literal(&self) -> String {
        self.inner.literal()
    }

    fn apply(&self, a: Vec<u32>) -> PyResult<Vec<u32>> {
        let e = self.inner.spec().elem_from_codes(&a).or_else(err)?;
        Ok(codes_of(self.inner.apply(&e).or_else(err)?.coeffs()))
    }
    fn compose(&self, other: &Aut) -> PyResult<Aut> {
        Ok(Aut {
            inner: self.inner.compose(&other.inner).or_else(err)?,
            repair: None,
        })
    }
    fn inverse(&self) -> Aut {
        Aut {
            inner: self.inner.inverse(),
            repair: None,
        }
    }
    fn order(&self) -> u64 {
        self.inner.order()
    }

    /// Normal form as a dict: S, S1, S2 (1-based sets), lambda, t.
    fn decompose<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, pyo3::types::PyDict>> {
        use pyo3::types::PyDict;
        let nf = self.inner.decompose();
        let d = PyDict::new(py);
        d.set_item("S", nf.s)?;
        d.set_item("S1", nf.s1)?;
        d.set_item("S2", nf.s2)?;
        d.set_item("lambda", nf.lambda)?;
        d.set_item("t", nf.t)?;
        Ok(d)
    }

    /// Induced semilinear map on semisimple coordinates: (gather
    /// permutation on masks, Frobenius exponent).
    fn induced(&self) -> (Vec<usize>, u32) {
        let m = self.inner.induced_map();
        (m.perm, m.t)
    }
    fn ord_induced(&self) -> u64 {
        self.inner.ord_induced()
    }
    /// pi with T(C_i) contained in C_pi(i) (0-based).
    fn component_permutation(&self) -> Vec<usize> {
        self.inner.component_permutation()
    }

    fn __repr__(&self) -> String {
        self.inner.literal()
    }
}

/// A linear code over F_{p^r}.
#[pyclass(frozen, name = "FieldCode")]
struct PyFieldCode {
    inner: FieldCode,
}

#[pymethods]
impl PyFieldCode {
    /// Row space of the given vectors.
    #[staticmethod]
    fn from_rows(field: &Field, n: usize, rows: Vec<Vec<u32>>) -> PyResult<Self> {
        let rows: PyResult<Vec<Vec<Fe>>> =
            rows.iter().map(|r| fe_vec(&field.inner, r)).collect();
        Ok(PyFieldCode {
            inner: FieldCode::from_vectors(field.inner.clone(), n, &rows?).or_else(err)?,
        })
    }

    /// Theta-cyclic code generated by a polynomial in F[x; phi^t]/(x^n - 1).
    #[staticmethod]
    fn skew_cyclic(field: &Field, t: u32, generator: &str, n: usize) -> PyResult<Self> {
        let ctx = FieldSkew::new(field.inner.clone(), t);
        let g = SkewPoly::parse_field(ctx, generator).or_else(err)?;
        Ok(PyFieldCode {
            inner: FieldCode::skew_cyclic(&g, n).or_else(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }
    fn generator_rows(&self) -> Vec<Vec<u32>> {
        self.inner
            .generator_rows()
            .iter()
            .map(|r| codes_of(r))
            .collect()
    }
    fn contains(&self, v: Vec<u32>) -> PyResult<bool> {
        let v = fe_vec(self.inner.field(), &v)?;
        Ok(self.inner.contains(&v))
    }
    fn dual(&self) -> PyFieldCode {
        PyFieldCode {
            inner: self.inner.euclidean_dual(),
        }
    }
    fn is_self_dual(&self) -> bool {
        self.inner.is_self_dual()
    }
    fn is_self_orthogonal(&self) -> bool {
        self.inner.is_self_orthogonal()
    }
    fn is_quasi_theta_cyclic(&self, t: u32, l: usize) -> bool {
        self.inner.is_quasi_theta_cyclic(t, l)
    }
    /// Exact minimum distance by full enumeration (None for the zero code).
    #[pyo3(signature = (budget=None))]
    fn min_distance(&self, budget: Option<u64>) -> PyResult<Option<u32>> {
        self.inner
            .min_distance_exhaustive(budget.map(u128::from).unwrap_or(codes::DEFAULT_BUDGET))
            .or_else(err)
    }
    /// Exact minimum distance by information-set enumeration.
    fn min_distance_isd(&self) -> PyResult<u32> {
        let out = self
            .inner
            .min_distance_isd(&IsdOptions::default())
            .or_else(err)?;
        Ok(out.distance.expect("unrestricted run is exact"))
    }

    fn __repr__(&self) -> String {
        format!("FieldCode(n={}, dim={})", self.inner.n(), self.inner.dim())
    }
}

/// A linear code over B_k, stored by components.
#[pyclass(frozen, name = "BkCode")]
struct PyBkCode {
    inner: BkCode,
}

#[pymethods]
impl PyBkCode {
    #[staticmethod]
    fn from_components(ring: &Ring, n: usize, comps: Vec<PyRef<PyFieldCode>>) -> PyResult<Self> {
        let comps: Vec<FieldCode> = comps.iter().map(|c| c.inner.clone()).collect();
        Ok(PyBkCode {
            inner: BkCode::from_components(ring.inner.clone(), n, comps).or_else(err)?,
        })
    }

    /// Compatibility-checked theta-cyclic construction.
    #[staticmethod]
    fn construct_theta_cyclic(theta: &Aut, comps: Vec<PyRef<PyFieldCode>>) -> PyResult<Self> {
        let comps: Vec<FieldCode> = comps.iter().map(|c| c.inner.clone()).collect();
        Ok(PyBkCode {
            inner: BkCode::construct_theta_cyclic(&theta.inner, comps).or_else(err)?,
        })
    }

    /// B_k-submodule generated by vectors (lists of ring elements).
    #[staticmethod]
    fn from_generators(ring: &Ring, n: usize, gens: Vec<Vec<Vec<u32>>>) -> PyResult<Self> {
        let gens: PyResult<Vec<Vec<bk::RingElem>>> = gens
            .iter()
            .map(|g| g.iter().map(|e| ring.elem(e)).collect())
            .collect();
        Ok(PyBkCode {
            inner: BkCode::from_generators(ring.inner.clone(), n, &gens?).or_else(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }
    #[getter]
    fn size(&self) -> Option<String> {
        self.inner.size().map(|s| s.to_string())
    }
    fn components(&self) -> Vec<PyFieldCode> {
        self.inner
            .components()
            .iter()
            .map(|c| PyFieldCode { inner: c.clone() })
            .collect()
    }
    fn contains(&self, v: Vec<Vec<u32>>) -> PyResult<bool> {
        let ring = Ring {
            inner: self.inner.spec().clone(),
        };
        let v: PyResult<Vec<bk::RingElem>> = v.iter().map(|e| ring.elem(e)).collect();
        self.inner.contains(&v?).or_else(err)
    }
    fn is_theta_cyclic(&self, theta: &Aut) -> PyResult<bool> {
        self.inner.is_theta_cyclic(&theta.inner).or_else(err)
    }
    fn first_characterization_check(&self, theta: &Aut) -> PyResult<bool> {
        self.inner
            .first_characterization_check(&theta.inner)
            .or_else(err)
    }
    fn dual(&self) -> PyBkCode {
        PyBkCode {
            inner: self.inner.euclidean_dual(),
        }
    }
    fn is_self_dual(&self) -> bool {
        self.inner.is_self_dual()
    }
    fn is_self_orthogonal(&self) -> bool {
        self.inner.is_self_orthogonal()
    }
    #[pyo3(signature = (budget=None))]
    fn min_distance(&self, budget: Option<u64>) -> PyResult<Option<u32>> {
        self.inner
            .min_distance_exhaustive(budget.map(u128::from).unwrap_or(codes::DEFAULT_BUDGET))
            .or_else(err)
    }
    fn min_distance_isd(&self) -> PyResult<Option<u32>> {
        self.inner
            .min_distance_isd(&IsdOptions::default())
            .or_else(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "BkCode({}, n={})",
            self.inner.spec().literal(),
            self.inner.n()
        )
    }
}

/// Verify one built-in published row; returns the report as a JSON string.
#[pyfunction]
#[pyo3(signature = (row, long=false, strict_aut=false, skip_distance=false))]
fn verify_table_row(row: usize, long: bool, strict_aut: bool, skip_distance: bool) -> PyResult<String> {
    let spec = TableRowSpec::builtin(row).or_else(err)?;
    let opts = VerifyOptions {
        strict_aut,
        long,
        distance: if skip_distance {
            DistanceMode::Skip
        } else {
            DistanceMode::Auto
        },
        ..Default::default()
    };
    let report = table::verify_table_row(&spec, &opts).or_else(err)?;
    Ok(report.to_json_string())
}

/// Number of built-in published rows.
#[pyfunction]
fn table_len() -> usize {
    table::TABLE.len()
}

#[pymodule]
fn bkcodes_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Field>()?;
    m.add_class::<Ring>()?;
    m.add_class::<Aut>()?;
    m.add_class::<PyFieldCode>()?;
    m.add_class::<PyBkCode>()?;
    m.add_function(wrap_pyfunction!(verify_table_row, m)?)?;
    m.add_function(wrap_pyfunction!(table_len, m)?)?;
    Ok(())
}
