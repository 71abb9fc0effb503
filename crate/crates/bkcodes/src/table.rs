//! The built-in table of published optimal Euclidean self-dual theta-cyclic
//! codes over B_k (all with base field F_4 and Frobenius scalar action),
//! and the verification pipeline for one row.
//!
//! Each row is checked for: right divisibility of the generator in
//! F_4[x; phi], field-code dimension n/2 and self-duality, construction of
//! the B_k code, theta-cyclicity through both characterizations, ring-level
//! self-duality, and minimum distance against the claimed value.
//!
//! Two rows are printed with known slips and carry documented repairs:
//!
//! * rows 4 and 5 list generator images that repeat a target (`v4->v5`
//!   together with `v5->v6; v6->v5`); the non-strict parser redirects the
//!   later source to the unused target, which yields the cycle
//!   v4 -> v5 -> v6 -> v4. The report states the automorphism actually used.
//! * row 3's printed generator fails right-divisibility; changing its x^2
//!   coefficient from a to a^2 (the unique single-coefficient correction
//!   that restores right-divisibility and self-duality) also restores the
//!   claimed distance 8, so the repaired polynomial is used and reported.

use serde::Serialize;

use crate::autmap::Automorphism;
use crate::bk::RingSpec;
use crate::codes::{BkCode, FieldCode};
use crate::distance::{IsdOptions, IsdOutcome};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::skewpoly::{FieldSkew, SkewPoly};

/// One published row, with the literals exactly as printed and (where
/// needed) the repaired generator that verification uses.
#[derive(Clone, Debug)]
pub struct BuiltinRow {
    pub index: usize,
    pub n: usize,
    pub d: u32,
    pub k: usize,
    pub generator_printed: &'static str,
    pub generator_used: &'static str,
    pub generator_note: Option<&'static str>,
    pub theta_printed: &'static str,
}

pub const TABLE: [BuiltinRow; 5] = [
    BuiltinRow {
        index: 1,
        n: 4,
        d: 3,
        k: 2,
        generator_printed: "x^2+a^2*x+a",
        generator_used: "x^2+a^2*x+a",
        generator_note: None,
        theta_printed: "v2->v1; v1->v2; t=1",
    },
    BuiltinRow {
        index: 2,
        n: 12,
        d: 6,
        k: 3,
        generator_printed: "x^6+x^5+a^2*x^4+x^3+a*x^2+x+1",
        generator_used: "x^6+x^5+a^2*x^4+x^3+a*x^2+x+1",
        generator_note: None,
        theta_printed: "v1->v2; v2->v3; v3->v1; t=1",
    },
    BuiltinRow {
        index: 3,
        n: 20,
        d: 8,
        k: 4,
        generator_printed: "x^10+a^2*x^9+a*x^8+x^7+x^6+x^4+x^3+a*x^2+a*x+1",
        generator_used: "x^10+a^2*x^9+a*x^8+x^7+x^6+x^4+x^3+a^2*x^2+a*x+1",
        generator_note: Some(
            "printed x^2 coefficient a does not right-divide x^20-1; \
             the unique single-coefficient repair a -> a^2 restores \
             right-divisibility, self-duality and d = 8",
        ),
        theta_printed: "v1->v2; v2->v1; v3->1-v4; 1-v4->v3; t=1",
    },
    BuiltinRow {
        index: 4,
        n: 36,
        d: 11,
        k: 6,
        generator_printed: "x^18+x^16+a^2*x^15+a*x^14+a^2*x^13+x^12+a*x^10+a*x^9+a*x^8+a^2*x^6+x^5+a*x^4+x^3+a^2*x^2+a^2",
        generator_used: "x^18+x^16+a^2*x^15+a*x^14+a^2*x^13+x^12+a*x^10+a*x^9+a*x^8+a^2*x^6+x^5+a*x^4+x^3+a^2*x^2+a^2",
        generator_note: None,
        theta_printed: "v1->1-v2; 1-v2->v3; v3->v1; v4->v5; v5->v6; v6->v5; t=1",
    },
    BuiltinRow {
        index: 5,
        n: 40,
        d: 12,
        k: 7,
        generator_printed: "x^20+x^17+a^2*x^15+a*x^14+a^2*x^13+a^2*x^12+x^11+x^9+a*x^8+a*x^7+a^2*x^6+a*x^5+x^3+1",
        generator_used: "x^20+x^17+a^2*x^15+a*x^14+a^2*x^13+a^2*x^12+x^11+x^9+a*x^8+a*x^7+a^2*x^6+a*x^5+x^3+1",
        generator_note: None,
        theta_printed: "v1->1-v2; 1-v2->v3; v3->v1; v4->v5; v5->v6; v6->v5; v7->v7; t=1",
    },
];

/// Verification input: the parameters of a (possibly user-modified) row.
#[derive(Clone, Debug)]
pub struct TableRowSpec {
    pub row: Option<usize>,
    pub n: usize,
    pub d_claimed: u32,
    pub k: usize,
    /// Generator polynomial literal over F_4.
    pub generator: String,
    /// Automorphism literal.
    pub theta: String,
    pub generator_note: Option<String>,
}

impl TableRowSpec {
    /// The built-in row (1-based), with its documented repairs applied.
    pub fn builtin(index: usize) -> Result<TableRowSpec> {
        let row = TABLE
            .iter()
            .find(|r| r.index == index)
            .ok_or(Error::IndexOutOfRange {
                index,
                len: TABLE.len(),
            })?;
        Ok(TableRowSpec {
            row: Some(row.index),
            n: row.n,
            d_claimed: row.d,
            k: row.k,
            generator: row.generator_used.to_string(),
            theta: row.theta_printed.to_string(),
            generator_note: row.generator_note.map(str::to_string),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceMode {
    /// No distance computation.
    Skip,
    /// Exhaustive when the component size fits the budget, otherwise the
    /// cheap surrogate (first-information-set upper bound) unless `long`
    /// requests the exact information-set run.
    Auto,
    Exhaustive,
    Isd,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub strict_aut: bool,
    /// Run the exact information-set distance on rows too large for
    /// exhaustive enumeration.
    pub long: bool,
    pub distance: DistanceMode,
    pub budget: u128,
    pub threads: usize,
    pub verbose: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            strict_aut: false,
            long: false,
            distance: DistanceMode::Auto,
            budget: crate::codes::DEFAULT_BUDGET,
            threads: 0,
            verbose: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowReport {
    pub row: Option<usize>,
    pub n: usize,
    pub d_claimed: u32,
    pub ring: String,
    pub automorphism_used: String,
    pub automorphism_repair: Option<String>,
    pub generator_used: String,
    pub generator_note: Option<String>,
    pub checks: Vec<CheckResult>,
    pub distance: Option<u32>,
    pub distance_mode: String,
    pub pass: bool,
}

impl RowReport {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn check(checks: &mut Vec<CheckResult>, name: &str, pass: bool, detail: String) {
    checks.push(CheckResult {
        name: name.to_string(),
        pass,
        detail,
    });
}

/// Run every check for one row. Failed assertions are reported, not raised;
/// `Err` is reserved for malformed inputs (unparseable literals).
pub fn verify_table_row(spec: &TableRowSpec, opts: &VerifyOptions) -> Result<RowReport> {
    let field = Field::new(2, 2)?;
    let ring = RingSpec::new(field.clone(), spec.k)?;
    let (theta, aut_repair) = Automorphism::parse(&ring, &spec.theta, opts.strict_aut)?;
    let t = theta.frobenius_exp();
    let ctx = FieldSkew::new(field.clone(), t);
    let g = SkewPoly::parse_field(ctx.clone(), &spec.generator)?;

    let mut checks = Vec::new();

    // (a) g right-divides x^n - 1 in F_4[x; phi^t]
    let xn1 = SkewPoly::x_pow_minus_one(ctx.clone(), spec.n);
    let right_divides = match xn1.right_divide(&g) {
        Ok((_, rem)) => rem.is_zero(),
        Err(_) => false,
    };
    check(
        &mut checks,
        "right_divisibility",
        right_divides,
        format!("remainder of (x^{} - 1) / g {}", spec.n, if right_divides { "is zero" } else { "is nonzero" }),
    );

    // (b) field code of dimension n/2
    let field_code = FieldCode::skew_cyclic(&g, spec.n)?;
    let dim_ok = field_code.dim() == spec.n / 2;
    check(
        &mut checks,
        "dimension",
        dim_ok,
        format!("dim = {}, expected {}", field_code.dim(), spec.n / 2),
    );

    // (c) field code self-dual
    let sd_field = field_code.is_self_dual();
    check(
        &mut checks,
        "self_dual_field",
        sd_field,
        format!("[{}, {}] field code", spec.n, field_code.dim()),
    );

    // (d) assemble the B_k code with every component equal to the field code
    let components = vec![field_code.clone(); ring.dim()];
    let constructed = BkCode::construct_theta_cyclic(&theta, components.clone());
    check(
        &mut checks,
        "construct",
        constructed.is_ok(),
        match &constructed {
            Ok(_) => "compatibility condition holds for all components".into(),
            Err(e) => format!("{e}"),
        },
    );
    let bk_code = match constructed {
        Ok(c) => c,
        Err(_) => BkCode::from_components(ring.clone(), spec.n, components)?,
    };

    // (e) theta-cyclic by both characterizations
    let shift_route = bk_code.is_theta_cyclic(&theta)?;
    let xi_route = bk_code.first_characterization_check(&theta)?;
    check(
        &mut checks,
        "theta_cyclic",
        shift_route && xi_route && (shift_route == xi_route),
        format!("shift membership: {shift_route}, Xi fixedness: {xi_route}"),
    );

    // (f) ring-level self-duality
    let sd_ring = bk_code.is_self_dual();
    check(
        &mut checks,
        "self_dual_ring",
        sd_ring,
        "all components self-dual iff canonical dual equality".into(),
    );

    // (g) distance
    let mut distance = None;
    let mut distance_mode = "skipped".to_string();
    match opts.distance {
        DistanceMode::Skip => {}
        DistanceMode::Exhaustive => {
            run_exhaustive(&bk_code, spec, opts, &mut checks, &mut distance, &mut distance_mode)?;
        }
        DistanceMode::Isd => {
            run_isd_exact(&field_code, spec, opts, &mut checks, &mut distance, &mut distance_mode)?;
        }
        DistanceMode::Auto => {
            let small = field_code.size().map(|s| s <= opts.budget).unwrap_or(false);
            if small {
                run_exhaustive(&bk_code, spec, opts, &mut checks, &mut distance, &mut distance_mode)?;
            } else if opts.long {
                run_isd_exact(&field_code, spec, opts, &mut checks, &mut distance, &mut distance_mode)?;
            } else {
                run_isd_surrogate(&field_code, spec, opts, &mut checks, &mut distance_mode)?;
            }
        }
    }

    let pass = checks.iter().all(|c| c.pass);
    Ok(RowReport {
        row: spec.row,
        n: spec.n,
        d_claimed: spec.d_claimed,
        ring: ring.literal(),
        automorphism_used: theta.literal(),
        automorphism_repair: aut_repair,
        generator_used: g.to_display_string(),
        generator_note: spec.generator_note.clone(),
        checks,
        distance,
        distance_mode,
        pass,
    })
}

fn run_exhaustive(
    bk_code: &BkCode,
    spec: &TableRowSpec,
    opts: &VerifyOptions,
    checks: &mut Vec<CheckResult>,
    distance: &mut Option<u32>,
    mode: &mut String,
) -> Result<()> {
    *mode = "exhaustive".into();
    match bk_code.min_distance_exhaustive(opts.budget) {
        Ok(d) => {
            *distance = d;
            check(
                checks,
                "distance",
                d == Some(spec.d_claimed),
                format!("exhaustive d = {d:?}, claimed {}", spec.d_claimed),
            );
        }
        Err(e) => check(checks, "distance", false, format!("{e}")),
    }
    Ok(())
}

fn run_isd_exact(
    field_code: &FieldCode,
    spec: &TableRowSpec,
    opts: &VerifyOptions,
    checks: &mut Vec<CheckResult>,
    distance: &mut Option<u32>,
    mode: &mut String,
) -> Result<()> {
    *mode = "isd".into();
    // all components are equal, so the ring distance is the field distance
    let isd_opts = IsdOptions {
        verbose: opts.verbose,
        threads: opts.threads,
        ..Default::default()
    };
    match field_code.min_distance_isd(&isd_opts) {
        Ok(out) => {
            *distance = out.distance;
            check(
                checks,
                "distance",
                out.distance == Some(spec.d_claimed),
                format!("isd d = {:?}, claimed {}", out.distance, spec.d_claimed),
            );
        }
        Err(e) => check(checks, "distance", false, format!("{e}")),
    }
    Ok(())
}

/// Cheap always-on bound: enumerate the first information set only, and
/// require the internal upper bound to reach the claimed distance.
fn run_isd_surrogate(
    field_code: &FieldCode,
    spec: &TableRowSpec,
    opts: &VerifyOptions,
    checks: &mut Vec<CheckResult>,
    mode: &mut String,
) -> Result<()> {
    *mode = "surrogate".into();
    match isd_first_set_bound(field_code, spec.d_claimed, opts) {
        Ok(out) => {
            let reached = out.ub <= spec.d_claimed;
            let at_w = out
                .passes
                .iter()
                .find(|p| p.ub <= spec.d_claimed)
                .map(|p| p.w);
            check(
                checks,
                "distance_upper_bound",
                reached,
                format!(
                    "first-set upper bound {} (claimed {}){}",
                    out.ub,
                    spec.d_claimed,
                    at_w.map(|w| format!(", reached at information weight {w}"))
                        .unwrap_or_default()
                ),
            );
        }
        Err(e) => check(checks, "distance_upper_bound", false, format!("{e}")),
    }
    Ok(())
}

/// Run the information-set enumeration restricted to the first information
/// set, stopping once the upper bound reaches `target`.
pub fn isd_first_set_bound(
    code: &FieldCode,
    target: u32,
    opts: &VerifyOptions,
) -> Result<IsdOutcome> {
    code.min_distance_isd(&IsdOptions {
        max_sets: Some(1),
        stop_at_ub: Some(target),
        verbose: opts.verbose,
        threads: opts.threads,
        ..Default::default()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_rows_well_formed() {
        assert_eq!(TABLE.len(), 5);
        for row in &TABLE {
            let spec = TableRowSpec::builtin(row.index).unwrap();
            assert_eq!(spec.n, row.n);
            // literals parse
            let field = Field::new(2, 2).unwrap();
            let ring = RingSpec::new(field.clone(), row.k).unwrap();
            let (theta, _) = Automorphism::parse(&ring, &spec.theta, false).unwrap();
            let ctx = FieldSkew::new(field, theta.frobenius_exp());
            SkewPoly::parse_field(ctx, &spec.generator).unwrap();
        }
        assert!(TableRowSpec::builtin(6).is_err());
    }

    #[test]
    fn row1_full_verification() {
        let spec = TableRowSpec::builtin(1).unwrap();
        let report = verify_table_row(&spec, &VerifyOptions::default()).unwrap();
        assert!(report.pass, "{report:?}");
        assert_eq!(report.distance, Some(3));
        assert_eq!(report.distance_mode, "exhaustive");
        assert!(report.automorphism_repair.is_none());
    }

    #[test]
    fn rows_4_5_need_repair() {
        for index in [4, 5] {
            let spec = TableRowSpec::builtin(index).unwrap();
            // strict mode refuses the printed literal
            let strict = VerifyOptions {
                strict_aut: true,
                distance: DistanceMode::Skip,
                ..Default::default()
            };
            assert!(matches!(
                verify_table_row(&spec, &strict),
                Err(Error::NotBijective { target: 5 })
            ));
            // default mode repairs to the 3-cycle v4 -> v5 -> v6 -> v4
            let lax = VerifyOptions {
                distance: DistanceMode::Skip,
                ..Default::default()
            };
            let report = verify_table_row(&spec, &lax).unwrap();
            assert!(report.pass, "{report:?}");
            let repair = report.automorphism_repair.expect("repair note");
            assert!(repair.contains("v6 -> v4"), "{repair}");
            assert!(report.automorphism_used.contains("v4->v5; v5->v6; v6->v4"));
        }
    }

    #[test]
    fn row3_uses_repaired_generator() {
        let spec = TableRowSpec::builtin(3).unwrap();
        assert!(spec.generator.contains("a^2*x^2"));
        assert!(spec.generator_note.is_some());
        // the printed polynomial fails right-divisibility
        let printed = TableRowSpec {
            generator: TABLE[2].generator_printed.to_string(),
            ..spec
        };
        let opts = VerifyOptions {
            distance: DistanceMode::Skip,
            ..Default::default()
        };
        let report = verify_table_row(&printed, &opts).unwrap();
        assert!(!report.pass);
        let rd = report
            .checks
            .iter()
            .find(|c| c.name == "right_divisibility")
            .unwrap();
        assert!(!rd.pass);
    }

    #[test]
    fn corrupted_generator_fails() {
        let mut spec = TableRowSpec::builtin(1).unwrap();
        spec.generator = "x^2+a^2*x+a^2".into(); // constant term off
        let report = verify_table_row(&spec, &VerifyOptions::default()).unwrap();
        assert!(!report.pass);
        assert!(report.checks.iter().any(|c| !c.pass));
    }
}
