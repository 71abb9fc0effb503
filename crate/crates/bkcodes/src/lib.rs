//! Skew-cyclic (theta-cyclic) codes over the finite commutative algebra
//! B_k = F_{p^r}[v_1,...,v_k] / (v_i^2 - v_i, v_iv_j - v_jv_i).
//!
//! The crate provides the algebra itself (arithmetic, units, ideals,
//! automorphisms), the Gray maps onto F_{p^r}^(2^k), skew polynomial rings
//! over both F_{p^r} and B_k, and linear codes over both, including:
//!
//! * construction of theta-cyclic codes from quasi-cyclic field components,
//! * two independent characterizations of theta-cyclicity,
//! * Euclidean duality and self-duality tests,
//! * exact minimum-distance computation (exhaustive and information-set),
//! * verification of the built-in table of optimal Euclidean self-dual
//!   theta-cyclic codes (see [`table`]).
//!
//! The `bkcodes` binary exposes all of this on the command line.

pub mod autmap;
pub mod bk;
pub mod cli;
pub mod codes;
pub mod config;
pub mod distance;
pub mod error;
pub mod gf;
pub mod gray;
pub mod linalg;
pub mod skewpoly;
pub mod table;

pub use autmap::{Automorphism, GenImage, InducedMap, NormalForm};
pub use bk::{MaximalIdeal, RingElem, RingSpec};
pub use codes::{BkCode, FieldCode, DEFAULT_BUDGET};
pub use distance::{IsdOptions, IsdOutcome, IsdPass};
pub use error::{Error, Result};
pub use gf::{Fe, Field, FieldElem};
pub use skewpoly::{FieldSkew, QuotientElem, RingSkew, SkewPoly, SkewRing};
pub use table::{RowReport, TableRowSpec, VerifyOptions};
