//! Command-line front end.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails
//! (the failing assertion is named), 2 for usage and input errors.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::autmap::Automorphism;
use crate::bk::{self, RingSpec};
use crate::codes::FieldCode;
use crate::config::{BuiltCode, CodeConfig};
use crate::distance::IsdOptions;
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::gray;
use crate::skewpoly::{FieldSkew, RingSkew, SkewPoly};
use crate::table::{self, DistanceMode, TableRowSpec, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "bkcodes",
    version,
    about = "Skew-cyclic codes over B_k: construction, duality, distance and table verification"
)]
struct Cli {
    /// Emit machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized operations; every current command is
    /// deterministic, the flag is accepted for reproducible scripting.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on exhaustive codeword enumeration.
    #[arg(long, global = true, default_value_t = 1u64 << 28)]
    budget: u64,
    /// Worker threads for distance computation (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Refuse non-injective automorphism literals instead of applying the
    /// documented repair.
    #[arg(long, global = true)]
    strict_aut: bool,
    /// Progress reporting on stderr.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the code described by a config file and summarize it.
    Construct { config: PathBuf },
    /// Run structural checks on a configured code.
    Check {
        config: PathBuf,
        /// Check closure under the twisted shift (both characterizations
        /// for ring codes).
        #[arg(long)]
        theta_cyclic: bool,
        /// Check Euclidean self-duality.
        #[arg(long)]
        self_dual: bool,
    },
    /// Minimum Hamming distance of a configured code.
    Distance {
        config: PathBuf,
        /// Force full enumeration (error above the budget).
        #[arg(long, conflicts_with = "isd")]
        exhaustive: bool,
        /// Force information-set enumeration.
        #[arg(long)]
        isd: bool,
    },
    /// Euclidean dual of a configured code.
    Dual { config: PathBuf },
    /// Normal form Theta_S o Lambda_{S1,S2,t} of an automorphism.
    DecomposeAut {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        theta: String,
    },
    /// Gray images (recursive and subset-sum) of a ring element.
    Gray {
        #[arg(long)]
        ring: String,
        /// Comma-separated coefficient codes.
        #[arg(long)]
        elem: String,
    },
    /// Verify built-in published rows.
    VerifyTable {
        /// 1-based row number; repeatable.
        #[arg(long)]
        row: Vec<usize>,
        #[arg(long)]
        all: bool,
        /// Run the exact information-set distance on rows too large for
        /// exhaustive enumeration (long-running).
        #[arg(long)]
        long: bool,
    },
    /// Skew product of two polynomials.
    SkewMul {
        #[arg(long, conflicts_with = "ring")]
        field: Option<String>,
        /// Frobenius exponent for the field case.
        #[arg(long, default_value_t = 0)]
        t: u32,
        #[arg(long, requires = "theta")]
        ring: Option<String>,
        #[arg(long)]
        theta: Option<String>,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
}

/// Parse and dispatch; returns the process exit code.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap renders its own message; --help/--version exit cleanly
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.cmd {
        Cmd::Construct { config } => construct(cli, config),
        Cmd::Check {
            config,
            theta_cyclic,
            self_dual,
        } => check(cli, config, *theta_cyclic, *self_dual),
        Cmd::Distance {
            config,
            exhaustive,
            isd,
        } => distance(cli, config, *exhaustive, *isd),
        Cmd::Dual { config } => dual(cli, config),
        Cmd::DecomposeAut { ring, theta } => decompose_aut(cli, ring, theta),
        Cmd::Gray { ring, elem } => gray_cmd(cli, ring, elem),
        Cmd::VerifyTable { row, all, long } => verify_table(cli, row, *all, *long),
        Cmd::SkewMul {
            field,
            t,
            ring,
            theta,
            f,
            g,
        } => skew_mul(cli, field.as_deref(), *t, ring.as_deref(), theta.as_deref(), f, g),
    }
}

fn load_config(path: &PathBuf) -> Result<CodeConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    CodeConfig::parse(&text)
}

/// Generator rows as integer codes.
fn rows_json(rows: &[Vec<Fe>]) -> serde_json::Value {
    json!(rows
        .iter()
        .map(|r| r.iter().map(|c| c.0).collect::<Vec<u16>>())
        .collect::<Vec<_>>())
}

fn construct(cli: &Cli, path: &PathBuf) -> Result<i32> {
    let cfg = load_config(path)?;
    let built = cfg.build(cli.strict_aut)?;
    match built {
        BuiltCode::Ring {
            code,
            theta,
            aut_repair,
        } => {
            let dims: Vec<usize> = code.components().iter().map(|c| c.dim()).collect();
            let report = json!({
                "command": "construct",
                "ring": code.spec().literal(),
                "n": code.n(),
                "theta": theta.literal(),
                "theta_repair": aut_repair,
                "component_dims": dims,
                "size": code.size().map(|s| s.to_string()),
                "theta_cyclic": true,
            });
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("constructed theta-cyclic code over {}", code.spec().literal());
                println!("  n = {}, |C| = {}", code.n(), code.size().map(|s| s.to_string()).unwrap_or_else(|| "huge".into()));
                println!("  component dimensions: {dims:?}");
                if let Some(rep) = aut_repair {
                    println!("  note: {rep}");
                }
                println!("  theta-cyclic: asserted by construction");
            }
            Ok(0)
        }
        BuiltCode::Field { code, ctx } => {
            let report = json!({
                "command": "construct",
                "field": ctx.field.literal(),
                "n": code.n(),
                "t": ctx.t(),
                "dim": code.dim(),
                "generator_matrix": rows_json(&code.generator_rows()),
            });
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!(
                    "constructed [{}, {}] code over {}",
                    code.n(),
                    code.dim(),
                    ctx.field.literal()
                );
                for row in code.generator_rows() {
                    println!(
                        "  {}",
                        row.iter()
                            .map(|c| ctx.field.elem_to_string(*c))
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                }
            }
            Ok(0)
        }
    }
}

fn check(cli: &Cli, path: &PathBuf, theta_cyclic: bool, self_dual: bool) -> Result<i32> {
    let cfg = load_config(path)?;
    // default: run everything
    let (do_tc, do_sd) = if theta_cyclic || self_dual {
        (theta_cyclic, self_dual)
    } else {
        (true, true)
    };
    let mut checks: Vec<(String, bool, String)> = Vec::new();
    match cfg.build(cli.strict_aut)? {
        BuiltCode::Ring { code, theta, .. } => {
            if do_tc {
                let a = code.is_theta_cyclic(&theta)?;
                let b = code.first_characterization_check(&theta)?;
                checks.push((
                    "theta_cyclic".into(),
                    a && b,
                    format!("shift membership: {a}, Xi fixedness: {b}"),
                ));
            }
            if do_sd {
                let sd = code.is_self_dual();
                checks.push(("self_dual".into(), sd, String::new()));
            }
        }
        BuiltCode::Field { code, ctx } => {
            if do_tc {
                let ok = code.is_quasi_theta_cyclic(ctx.t(), 1);
                checks.push(("theta_cyclic".into(), ok, format!("t = {}", ctx.t())));
            }
            if do_sd {
                let sd = code.is_self_dual();
                checks.push(("self_dual".into(), sd, String::new()));
            }
        }
    }
    let pass = checks.iter().all(|(_, p, _)| *p);
    if cli.json {
        let report = json!({
            "command": "check",
            "checks": checks.iter().map(|(n, p, d)| json!({"name": n, "pass": p, "detail": d})).collect::<Vec<_>>(),
            "pass": pass,
        });
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        for (name, p, detail) in &checks {
            println!(
                "{name}: {}{}",
                if *p { "PASS" } else { "FAIL" },
                if detail.is_empty() {
                    String::new()
                } else {
                    format!(" ({detail})")
                }
            );
        }
    }
    Ok(if pass { 0 } else { 1 })
}

fn distance(cli: &Cli, path: &PathBuf, force_exhaustive: bool, force_isd: bool) -> Result<i32> {
    let cfg = load_config(path)?;
    let budget = cli.budget as u128;
    let isd_opts = IsdOptions {
        verbose: cli.verbose,
        threads: cli.threads,
        ..Default::default()
    };
    let (d, mode): (Option<u32>, &str) = match cfg.build(cli.strict_aut)? {
        BuiltCode::Ring { code, .. } => {
            if force_isd {
                (code.min_distance_isd(&isd_opts)?, "isd")
            } else if force_exhaustive {
                (code.min_distance_exhaustive(budget)?, "exhaustive")
            } else if code.components().iter().all(|c| {
                c.size().map(|s| s <= budget).unwrap_or(false)
            }) {
                (code.min_distance_exhaustive(budget)?, "exhaustive")
            } else {
                (code.min_distance_isd(&isd_opts)?, "isd")
            }
        }
        BuiltCode::Field { code, .. } => {
            if force_isd {
                let out = code.min_distance_isd(&isd_opts)?;
                (out.distance, "isd")
            } else if force_exhaustive {
                (code.min_distance_exhaustive(budget)?, "exhaustive")
            } else if code.size().map(|s| s <= budget).unwrap_or(false) {
                (code.min_distance_exhaustive(budget)?, "exhaustive")
            } else {
                let out = code.min_distance_isd(&isd_opts)?;
                (out.distance, "isd")
            }
        }
    };
    if cli.json {
        let report = json!({
            "command": "distance",
            "mode": mode,
            "distance": d,
        });
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        match d {
            Some(d) => println!("minimum distance = {d} ({mode})"),
            None => println!("minimum distance undefined (zero code)"),
        }
    }
    Ok(0)
}

fn dual(cli: &Cli, path: &PathBuf) -> Result<i32> {
    let cfg = load_config(path)?;
    match cfg.build(cli.strict_aut)? {
        BuiltCode::Ring { code, .. } => {
            let d = code.euclidean_dual();
            if cli.json {
                let comps: Vec<serde_json::Value> = d
                    .components()
                    .iter()
                    .map(|c| rows_json(&c.generator_rows()))
                    .collect();
                let report = json!({
                    "command": "dual",
                    "ring": code.spec().literal(),
                    "n": d.n(),
                    "component_dims": d.components().iter().map(FieldCode::dim).collect::<Vec<_>>(),
                    "component_generators": comps,
                    "self_dual": code.is_self_dual(),
                });
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("dual over {} (n = {})", code.spec().literal(), d.n());
                for (i, c) in d.components().iter().enumerate() {
                    println!("  component {}: dimension {}", i + 1, c.dim());
                }
                println!("  self-dual: {}", code.is_self_dual());
            }
        }
        BuiltCode::Field { code, ctx } => {
            let d = code.euclidean_dual();
            if cli.json {
                let report = json!({
                    "command": "dual",
                    "field": ctx.field.literal(),
                    "n": d.n(),
                    "dim": d.dim(),
                    "generator_matrix": rows_json(&d.generator_rows()),
                    "self_dual": code.is_self_dual(),
                });
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("dual is a [{}, {}] code; self-dual: {}", d.n(), d.dim(), code.is_self_dual());
                for row in d.generator_rows() {
                    println!(
                        "  {}",
                        row.iter()
                            .map(|c| ctx.field.elem_to_string(*c))
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                }
            }
        }
    }
    Ok(0)
}

fn decompose_aut(cli: &Cli, ring: &str, theta: &str) -> Result<i32> {
    let spec = RingSpec::parse(ring)?;
    let (aut, repair) = Automorphism::parse(&spec, theta, cli.strict_aut)?;
    let nf = aut.decompose();
    let recomposed = nf.recompose(&spec)?;
    let ok = recomposed == aut;
    if cli.json {
        let report = json!({
            "command": "decompose-aut",
            "ring": spec.literal(),
            "theta": aut.literal(),
            "theta_repair": repair,
            "S": nf.s,
            "S1": nf.s1,
            "S2": nf.s2,
            "lambda": nf.lambda,
            "t": nf.t,
            "recompose_equals_input": ok,
            "ord_induced": aut.ord_induced(),
        });
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("theta = {}", aut.literal());
        if let Some(rep) = repair {
            println!("note: {rep}");
        }
        println!("S  = {:?}", nf.s);
        println!("S1 = {:?}", nf.s1);
        println!("S2 = {:?}", nf.s2);
        println!("lambda = {:?}, t = {}", nf.lambda, nf.t);
        println!("recompose equals input: {ok}");
        println!("ord(induced permutation) = {}", aut.ord_induced());
    }
    Ok(if ok { 0 } else { 1 })
}

fn gray_cmd(cli: &Cli, ring: &str, elem: &str) -> Result<i32> {
    let spec = RingSpec::parse(ring)?;
    let e = bk::parse_elem_codes(&spec, elem)?;
    let phi = gray::phi(&e);
    let psi = gray::psi(&e);
    let agree = phi == psi;
    if cli.json {
        let report = json!({
            "command": "gray",
            "ring": spec.literal(),
            "element": bk::elem_to_codes_string(&e),
            "phi": phi.iter().map(|c| c.0).collect::<Vec<u16>>(),
            "psi": psi.iter().map(|c| c.0).collect::<Vec<u16>>(),
            "agree": agree,
        });
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        let f = spec.field();
        let fmt = |v: &[Fe]| {
            v.iter()
                .map(|c| f.elem_to_string(*c))
                .collect::<Vec<_>>()
                .join(", ")
        };
        println!("element: {e}");
        println!("phi: ({})", fmt(&phi));
        println!("psi: ({})", fmt(&psi));
        println!("agree: {agree}");
    }
    Ok(if agree { 0 } else { 1 })
}

fn verify_table(cli: &Cli, rows: &[usize], all: bool, long: bool) -> Result<i32> {
    let indices: Vec<usize> = if all {
        table::TABLE.iter().map(|r| r.index).collect()
    } else if rows.is_empty() {
        return Err(Error::Config("specify --row N or --all".into()));
    } else {
        rows.to_vec()
    };
    let opts = VerifyOptions {
        strict_aut: cli.strict_aut,
        long,
        distance: DistanceMode::Auto,
        budget: cli.budget as u128,
        threads: cli.threads,
        verbose: cli.verbose,
    };
    let mut reports = Vec::new();
    for idx in indices {
        let spec = TableRowSpec::builtin(idx)?;
        reports.push(table::verify_table_row(&spec, &opts)?);
    }
    let pass = reports.iter().all(|r| r.pass);
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "command": "verify-table",
                "rows": reports,
                "pass": pass,
            }))
            .unwrap()
        );
    } else {
        for r in &reports {
            println!(
                "row {} (n = {}, claimed d = {}): {}",
                r.row.unwrap_or(0),
                r.n,
                r.d_claimed,
                if r.pass { "PASS" } else { "FAIL" }
            );
            for c in &r.checks {
                println!(
                    "  {:24} {} {}",
                    c.name,
                    if c.pass { "PASS" } else { "FAIL" },
                    c.detail
                );
            }
            if let Some(rep) = &r.automorphism_repair {
                println!("  automorphism used: {}", r.automorphism_used);
                println!("  note: {rep}");
            }
            if let Some(note) = &r.generator_note {
                println!("  generator note: {note}");
            }
            if let Some(d) = r.distance {
                println!("  distance = {d} ({})", r.distance_mode);
            }
        }
    }
    Ok(if pass { 0 } else { 1 })
}

#[allow(clippy::too_many_arguments)]
fn skew_mul(
    cli: &Cli,
    field: Option<&str>,
    t: u32,
    ring: Option<&str>,
    theta: Option<&str>,
    f: &str,
    g: &str,
) -> Result<i32> {
    let (product, ring_desc): (String, String) = match (field, ring) {
        (Some(fl), None) => {
            let fld = Field::parse(fl)?;
            let ctx = FieldSkew::new(fld.clone(), t);
            let pf = SkewPoly::parse_field(ctx.clone(), f)?;
            let pg = SkewPoly::parse_field(ctx.clone(), g)?;
            (
                pf.mul(&pg)?.to_display_string(),
                format!("{}[x; phi^{}]", fld.literal(), ctx.t()),
            )
        }
        (None, Some(rl)) => {
            let spec = RingSpec::parse(rl)?;
            let lit = theta.ok_or_else(|| Error::Config("--ring needs --theta".into()))?;
            let (aut, _) = Automorphism::parse(&spec, lit, cli.strict_aut)?;
            let ctx = RingSkew::new(aut);
            let pf = SkewPoly::parse_ring(ctx.clone(), f)?;
            let pg = SkewPoly::parse_ring(ctx.clone(), g)?;
            (
                pf.mul(&pg)?.to_display_string(),
                format!("{}[x; theta]", spec.literal()),
            )
        }
        _ => return Err(Error::Config("specify exactly one of --field or --ring".into())),
    };
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "command": "skew-mul",
                "ring": ring_desc,
                "f": f,
                "g": g,
                "product": product,
            }))
            .unwrap()
        );
    } else {
        println!("{product}");
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> i32 {
        run(std::iter::once("bkcodes").chain(args.iter().copied()))
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["no-such-command"]), 2);
        assert_eq!(run_args(&["verify-table"]), 2);
    }

    #[test]
    fn skew_mul_twist() {
        // x * a over GF(4) with t=1 is a^2 x
        assert_eq!(
            run_args(&["skew-mul", "--field", "GF(4)", "--t", "1", "--f", "x", "--g", "a"]),
            0
        );
    }

    #[test]
    fn gray_and_decompose() {
        assert_eq!(
            run_args(&["gray", "--ring", "B(1) over GF(2)", "--elem", "0,1"]),
            0
        );
        assert_eq!(
            run_args(&[
                "decompose-aut",
                "--ring",
                "B(2) over GF(4)",
                "--theta",
                "v1->v2; v2->v1; t=1"
            ]),
            0
        );
    }

    #[test]
    fn verify_row_1() {
        assert_eq!(run_args(&["verify-table", "--row", "1"]), 0);
        assert_eq!(run_args(&["--json", "verify-table", "--row", "1"]), 0);
    }

    #[test]
    fn config_workflow() {
        let dir = std::env::temp_dir().join("bkcodes-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("row1.cfg");
        std::fs::write(
            &path,
            "ring = B(2) over GF(2^2)\nn = 4\ntheta = v1->v2; v2->v1; t=1\ngenerator = x^2+a^2*x+a\n",
        )
        .unwrap();
        let p = path.to_str().unwrap();
        assert_eq!(run_args(&["construct", p]), 0);
        assert_eq!(run_args(&["check", p, "--theta-cyclic", "--self-dual"]), 0);
        assert_eq!(run_args(&["check", p]), 0);
        assert_eq!(run_args(&["distance", p, "--exhaustive"]), 0);
        assert_eq!(run_args(&["distance", p, "--isd"]), 0);
        assert_eq!(run_args(&["dual", p]), 0);
    }
}
