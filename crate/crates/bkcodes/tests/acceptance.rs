//! Acceptance suite: one test per acceptance criterion, each printing a
//! PASS line (visible with `--nocapture`). The exact information-set
//! distance for the two largest table rows is gated behind the long tier:
//! `cargo test --test acceptance -- --ignored`.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bkcodes::autmap::{all_automorphisms, apply_perm, gamma, sigma_s, Automorphism};
use bkcodes::bk::{ideal_single_generator, RingElem, RingSpec};
use bkcodes::codes::{ring_weight, BkCode, FieldCode};
use bkcodes::distance::IsdOptions;
use bkcodes::gf::{Fe, Field};
use bkcodes::gray;
use bkcodes::skewpoly::{FieldSkew, SkewPoly};
use bkcodes::table::{self, DistanceMode, TableRowSpec, VerifyOptions};

fn ring(p: u64, r: u32, k: usize) -> Arc<RingSpec> {
    RingSpec::new(Field::new(p, r).unwrap(), k).unwrap()
}

fn rand_elem(spec: &Arc<RingSpec>, rng: &mut ChaCha8Rng) -> RingElem {
    let q = spec.field().order();
    let codes: Vec<u32> = (0..spec.dim()).map(|_| rng.random_range(0..q)).collect();
    spec.elem_from_codes(&codes).unwrap()
}

fn verify_builtin(row: usize, opts: &VerifyOptions) -> table::RowReport {
    let spec = TableRowSpec::builtin(row).unwrap();
    table::verify_table_row(&spec, opts).unwrap()
}

fn assert_report(report: &table::RowReport) {
    for c in &report.checks {
        assert!(c.pass, "row {:?}: check {} failed: {}", report.row, c.name, c.detail);
    }
}

#[test]
fn criterion_1_table_row_1() {
    let start = Instant::now();
    let report = verify_builtin(1, &VerifyOptions::default());
    let elapsed = start.elapsed();
    assert_report(&report);
    assert_eq!(report.distance, Some(3));
    assert_eq!(report.distance_mode, "exhaustive");
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("ACCEPTANCE 1 [PASS] table row 1: n=4 over B_2/F_4, d=3 exact, all checks ({elapsed:?})");
}

#[test]
fn criterion_2_table_row_2() {
    let start = Instant::now();
    let report = verify_builtin(2, &VerifyOptions::default());
    let elapsed = start.elapsed();
    assert_report(&report);
    assert_eq!(report.distance, Some(6));
    assert_eq!(report.distance_mode, "exhaustive");
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("ACCEPTANCE 2 [PASS] table row 2: n=12 over B_3/F_4, d=6 exhaustive over 4^6 codewords ({elapsed:?})");
}

#[test]
fn criterion_3_table_row_3() {
    let start = Instant::now();
    let report = verify_builtin(3, &VerifyOptions::default());
    let elapsed = start.elapsed();
    assert_report(&report);
    assert_eq!(report.distance, Some(8));
    assert_eq!(report.distance_mode, "exhaustive");
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("ACCEPTANCE 3 [PASS] table row 3: n=20 over B_4/F_4, d=8 exhaustive over 4^10 codewords ({elapsed:?})");
}

/// Mandatory always-on part of criterion 4: structural checks plus the
/// cheap first-information-set upper bound.
#[test]
fn criterion_4_rows_4_5_mandatory() {
    for (row, d) in [(4usize, 11u32), (5, 12)] {
        let start = Instant::now();
        let report = verify_builtin(row, &VerifyOptions::default());
        let elapsed = start.elapsed();
        assert_report(&report);
        assert_eq!(report.distance_mode, "surrogate");
        let repair = report
            .automorphism_repair
            .as_ref()
            .expect("rows 4 and 5 need the documented automorphism repair");
        assert!(repair.contains("v6 -> v4"), "{repair}");
        let ub_check = report
            .checks
            .iter()
            .find(|c| c.name == "distance_upper_bound")
            .expect("surrogate check present");
        assert!(ub_check.pass, "{}", ub_check.detail);
        assert!(
            elapsed < Duration::from_secs(10),
            "row {row} took {elapsed:?}"
        );
        println!(
            "ACCEPTANCE 4 [PASS] table row {row}: mandatory checks and first-set upper bound <= {d} ({elapsed:?})"
        );
    }
}

/// Long tier of criterion 4: exact information-set distances 11 and 12.
#[test]
#[ignore = "long tier: exact information-set distance for rows 4 and 5"]
fn criterion_4_long_exact_distance() {
    for (row, d) in [(4usize, 11u32), (5, 12)] {
        let opts = VerifyOptions {
            long: true,
            ..Default::default()
        };
        let start = Instant::now();
        let report = verify_builtin(row, &opts);
        let elapsed = start.elapsed();
        assert_report(&report);
        assert_eq!(report.distance, Some(d));
        assert_eq!(report.distance_mode, "isd");
        println!("ACCEPTANCE 4-long [PASS] table row {row}: exact isd distance = {d} ({elapsed:?})");
    }
}

#[test]
fn criterion_5_property_suite() {
    let start = Instant::now();
    let combos: [(u64, u32, &[usize]); 3] = [
        (2, 1, &[1, 2, 3, 4]),
        (2, 2, &[1, 2, 3]),
        (3, 2, &[1, 2]),
    ];

    // Phi is a ring isomorphism onto the product ring: 1000 random pairs
    // per (p^r, k).
    let mut rng = ChaCha8Rng::seed_from_u64(0x5101);
    for &(p, r, ks) in &combos {
        for &k in ks {
            let spec = ring(p, r, k);
            let f = spec.field().clone();
            for _ in 0..1000 {
                let a = rand_elem(&spec, &mut rng);
                let b = rand_elem(&spec, &mut rng);
                let (pa, pb) = (gray::phi(&a), gray::phi(&b));
                let sum: Vec<Fe> = pa.iter().zip(&pb).map(|(&x, &y)| f.add(x, y)).collect();
                let prod: Vec<Fe> = pa.iter().zip(&pb).map(|(&x, &y)| f.mul(x, y)).collect();
                assert_eq!(gray::phi(&a.add(&b).unwrap()), sum);
                assert_eq!(gray::phi(&a.mul(&b).unwrap()), prod);
            }
        }
    }
    println!("  [PASS] 5.1 phi ring isomorphism, 1000 random pairs x 9 ring specs");

    // Psi = Phi on all basis elements, k = 1..4.
    for &(p, r, _) in &combos {
        for k in 1..=4usize {
            let spec = ring(p, r, k);
            for mask in 0..spec.dim() {
                let e = spec.v_h(mask).unwrap();
                assert_eq!(gray::psi(&e), gray::phi(&e));
            }
        }
    }
    println!("  [PASS] 5.2 psi = phi on all basis elements, k = 1..4");

    // a^(p^r) = a: exhaustive for |B_k| <= 4096, 1000 random samples above.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5103);
    for &(p, r, ks) in &combos {
        for &k in ks {
            let spec = ring(p, r, k);
            let q = spec.field().order() as u64;
            match spec.size() {
                Some(size) if size <= 4096 => {
                    for a in spec.iter_elems() {
                        assert_eq!(a.power(q), a);
                    }
                }
                _ => {
                    for _ in 0..1000 {
                        let a = rand_elem(&spec, &mut rng);
                        assert_eq!(a.power(q), a);
                    }
                }
            }
        }
    }
    println!("  [PASS] 5.3 a^(p^r) = a, exhaustive below 4096 elements, sampled above");

    // Automorphism decompose/recompose identity: exhaustive for k <= 3,
    // p^r in {2, 4}, checked on every basis element.
    for (p, r) in [(2u64, 1u32), (2, 2)] {
        for k in 1..=3usize {
            let spec = ring(p, r, k);
            for theta in all_automorphisms(&spec) {
                let back = theta.decompose().recompose(&spec).unwrap();
                assert_eq!(back, theta);
                for mask in 0..spec.dim() {
                    let e = spec.v_h(mask).unwrap();
                    assert_eq!(back.apply(&e).unwrap(), theta.apply(&e).unwrap());
                }
            }
        }
    }
    println!("  [PASS] 5.4 decompose/recompose identity, exhaustive automorphisms k <= 3, p^r in {{2,4}}");

    // The three commutation identities, exhaustive theta for k <= 3, 200
    // random elements each.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5105);
    for (p, r) in [(2u64, 1u32), (2, 2)] {
        for k in 1..=3usize {
            let spec = ring(p, r, k);
            let f = spec.field().clone();
            // Sigma_S(Phi(x)) = Phi(Theta_S(x)) for every S
            for s_mask in 0..spec.dim() {
                let th = Automorphism::theta_s(spec.clone(), s_mask).unwrap();
                let perm = sigma_s(s_mask, k);
                for _ in 0..200 {
                    let x = rand_elem(&spec, &mut rng);
                    assert_eq!(
                        apply_perm(&perm, &gray::phi(&x)),
                        gray::phi(&th.apply(&x).unwrap())
                    );
                }
            }
            // Psi(Lambda(x)) = Gamma(Psi(x)) for every lambda and t
            for theta in all_automorphisms(&spec) {
                if theta.images().iter().any(|img| img.complemented) {
                    continue;
                }
                let lambda: Vec<usize> = theta.images().iter().map(|i| i.target).collect();
                let g = gamma(&lambda, theta.frobenius_exp());
                for _ in 0..200 {
                    let x = rand_elem(&spec, &mut rng);
                    assert_eq!(
                        gray::psi(&theta.apply(&x).unwrap()),
                        g.apply(&f, &gray::psi(&x))
                    );
                }
            }
            // Psi o theta = induced o Psi for every theta
            for theta in all_automorphisms(&spec) {
                let ind = theta.induced_map();
                for _ in 0..200 {
                    let x = rand_elem(&spec, &mut rng);
                    assert_eq!(
                        gray::psi(&theta.apply(&x).unwrap()),
                        ind.apply(&f, &gray::psi(&x))
                    );
                }
            }
        }
    }
    println!("  [PASS] 5.5 Sigma/Gamma/induced commutation identities, exhaustive theta k <= 3");

    // First-characterization equivalence: exhaustive theta, codes from at
    // most 2 random generators, k <= 2, n <= 3, p^r = 2.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5106);
    for k in 1..=2usize {
        let spec = ring(2, 1, k);
        let auts = all_automorphisms(&spec);
        for n in 1..=3usize {
            for trial in 0..25 {
                let gens: Vec<Vec<RingElem>> = (0..1 + trial % 2)
                    .map(|_| (0..n).map(|_| rand_elem(&spec, &mut rng)).collect())
                    .collect();
                let code = BkCode::from_generators(spec.clone(), n, &gens).unwrap();
                for theta in &auts {
                    assert_eq!(
                        code.is_theta_cyclic(theta).unwrap(),
                        code.first_characterization_check(theta).unwrap(),
                        "k={k} n={n} theta={theta:?}"
                    );
                }
            }
        }
    }
    println!("  [PASS] 5.6 shift-closure and Xi-fixedness agree on all sampled codes, exhaustive theta");

    // |C| * |C_dual| = |B_k|^n and double-dual identity on 100 random
    // small codes.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5107);
    for trial in 0..100 {
        let (p, r) = if trial % 2 == 0 { (2, 1) } else { (2, 2) };
        let k = 1 + trial % 2;
        let n = 2 + trial % 3;
        let spec = ring(p, r, k);
        let field = spec.field().clone();
        let q = field.order();
        let comps: Vec<FieldCode> = (0..spec.dim())
            .map(|_| {
                let rows: Vec<Vec<Fe>> = (0..rng.random_range(0..=2usize))
                    .map(|_| {
                        (0..n)
                            .map(|_| Fe(rng.random_range(0..q) as u16))
                            .collect()
                    })
                    .collect();
                FieldCode::from_vectors(field.clone(), n, &rows).unwrap()
            })
            .collect();
        let code = BkCode::from_components(spec.clone(), n, comps).unwrap();
        let dual = code.euclidean_dual();
        let ring_size = spec.size().unwrap();
        assert_eq!(
            code.size().unwrap() * dual.size().unwrap(),
            ring_size.pow(n as u32)
        );
        assert_eq!(dual.euclidean_dual(), code);
    }
    println!("  [PASS] 5.7 |C| * |C_dual| = |B_k|^n and double dual on 100 random codes");

    // Distance law d(C) = min d(C_i): exhaustive over all subspace pairs,
    // k = 1, n <= 4, p^r = 2, against direct enumeration of both the ring
    // Hamming weights and the Gray-image weights.
    let f2 = Field::new(2, 1).unwrap();
    for n in 1..=4usize {
        let subspaces = all_subspaces(&f2, n);
        let spec = ring(2, 1, 1);
        for c1 in &subspaces {
            for c2 in &subspaces {
                let code =
                    BkCode::from_components(spec.clone(), n, vec![c1.clone(), c2.clone()])
                        .unwrap();
                let law = code.min_distance_exhaustive(1 << 20).unwrap();
                let words = code.iter_codewords().unwrap();
                let mut min_ring = None;
                let mut min_gray = None;
                for w in words {
                    if w.iter().all(|e| e.is_zero()) {
                        continue;
                    }
                    let rw = ring_weight(&w) as u32;
                    let gw = gray::weight(&gray::psi_vec(&w).unwrap()) as u32;
                    min_ring = Some(min_ring.map_or(rw, |b: u32| b.min(rw)));
                    min_gray = Some(min_gray.map_or(gw, |b: u32| b.min(gw)));
                }
                assert_eq!(law, min_ring, "n={n}");
                assert_eq!(law, min_gray, "n={n}");
            }
        }
    }
    println!("  [PASS] 5.8 distance law d(C) = min d(C_i), exhaustive subspace pairs, k=1, n <= 4");

    // ideal_single_generator: <g> = <gens> by exhaustive membership,
    // B_2/F_2 and B_1/F_4.
    for spec in [ring(2, 1, 2), ring(2, 2, 1)] {
        let elems: Vec<RingElem> = spec.iter_elems().collect();
        let span2 = |a: &RingElem, b: &RingElem| -> Vec<Vec<Fe>> {
            let mut out: Vec<Vec<Fe>> = Vec::new();
            for x in &elems {
                for y in &elems {
                    let s = x
                        .mul(a)
                        .unwrap()
                        .add(&y.mul(b).unwrap())
                        .unwrap();
                    let key = s.coeffs().to_vec();
                    if !out.contains(&key) {
                        out.push(key);
                    }
                }
            }
            out.sort();
            out
        };
        let zero = spec.zero();
        for a in &elems {
            // singleton: <g> = <a>
            let g = ideal_single_generator(std::slice::from_ref(a)).unwrap();
            assert_eq!(span2(&g, &zero), span2(a, &zero));
            for b in &elems {
                let g = ideal_single_generator(&[a.clone(), b.clone()]).unwrap();
                assert_eq!(span2(&g, &zero), span2(a, b));
            }
        }
    }
    println!("  [PASS] 5.9 single-generator formula spans the same ideal, exhaustive in B_2/F_2 and B_1/F_4");

    // isd agrees with exhaustive on every test code with |C| <= 2^16.
    let mut rng = ChaCha8Rng::seed_from_u64(0x510a);
    let mut checked = 0usize;
    let mut test_codes: Vec<FieldCode> = Vec::new();
    for row in [1usize, 2] {
        let spec = TableRowSpec::builtin(row).unwrap();
        let ctx = FieldSkew::new(Field::new(2, 2).unwrap(), 1);
        let g = SkewPoly::parse_field(ctx, &spec.generator).unwrap();
        test_codes.push(FieldCode::skew_cyclic(&g, spec.n).unwrap());
    }
    let fields = [
        Field::new(2, 1).unwrap(),
        Field::new(2, 2).unwrap(),
        Field::new(3, 2).unwrap(),
    ];
    for trial in 0..60 {
        let field = fields[trial % 3].clone();
        let q = field.order();
        let n = 4 + rng.random_range(0..8usize);
        let rows: Vec<Vec<Fe>> = (0..1 + rng.random_range(0..3usize))
            .map(|_| (0..n).map(|_| Fe(rng.random_range(0..q) as u16)).collect())
            .collect();
        let code = FieldCode::from_vectors(field, n, &rows).unwrap();
        if code.dim() == 0 || code.size().map(|s| s > 1 << 16).unwrap_or(true) {
            continue;
        }
        test_codes.push(code);
    }
    for code in &test_codes {
        assert!(code.size().unwrap() <= 1 << 16);
        let ex = code.min_distance_exhaustive(1 << 16).unwrap();
        let isd = code.min_distance_isd(&IsdOptions::default()).unwrap();
        assert_eq!(isd.distance, ex);
        checked += 1;
    }
    assert!(checked >= 40);
    println!("  [PASS] 5.10 isd = exhaustive on {checked} test codes with |C| <= 2^16");

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!("ACCEPTANCE 5 [PASS] property suite, fixed seeds ({elapsed:?})");
}

/// Every subspace of F_q^n, as canonical FieldCodes (spans of all vector
/// subsets of size <= n, deduplicated).
fn all_subspaces(field: &Arc<Field>, n: usize) -> Vec<FieldCode> {
    let q = field.order() as usize;
    let total = q.pow(n as u32);
    let vectors: Vec<Vec<Fe>> = (1..total)
        .map(|mut v| {
            (0..n)
                .map(|_| {
                    let c = Fe((v % q) as u16);
                    v /= q;
                    c
                })
                .collect()
        })
        .collect();
    let mut out: Vec<FieldCode> = vec![FieldCode::zero_code(field.clone(), n)];
    let mut stack: Vec<(usize, Vec<Vec<Fe>>)> = vec![(0, Vec::new())];
    while let Some((start, chosen)) = stack.pop() {
        if chosen.len() == n {
            continue;
        }
        for i in start..vectors.len() {
            let mut next = chosen.clone();
            next.push(vectors[i].clone());
            let code = FieldCode::from_vectors(field.clone(), n, &next).unwrap();
            if !out.contains(&code) {
                out.push(code);
            }
            stack.push((i + 1, next));
        }
    }
    out
}

#[test]
fn criterion_6_negative_controls() {
    let opts = VerifyOptions {
        distance: DistanceMode::Skip,
        ..Default::default()
    };
    let f4 = Field::new(2, 2).unwrap();
    let mut corrupted_runs = 0usize;
    for row in 1..=5usize {
        let base = TableRowSpec::builtin(row).unwrap();
        let ctx = FieldSkew::new(f4.clone(), 1);
        let g = SkewPoly::parse_field(ctx.clone(), &base.generator).unwrap();
        let coeffs = g.coeffs().to_vec();
        // every coefficient position; all three nonzero deltas on the two
        // cheap rows, one delta elsewhere
        let deltas: &[u16] = if row <= 2 { &[1, 2, 3] } else { &[1] };
        for pos in 0..coeffs.len() {
            for &delta in deltas {
                let mut c = coeffs.clone();
                c[pos] = Fe((c[pos].0 + delta) % 4);
                let corrupted = SkewPoly::new(ctx.clone(), c);
                let spec = TableRowSpec {
                    generator: corrupted.to_display_string(),
                    generator_note: None,
                    ..base.clone()
                };
                let report = table::verify_table_row(&spec, &opts).unwrap();
                assert!(
                    !report.pass,
                    "row {row}: corrupting coefficient {pos} by {delta} went undetected"
                );
                assert!(report.checks.iter().any(|c| !c.pass));
                corrupted_runs += 1;
            }
        }
    }
    println!(
        "ACCEPTANCE 6 [PASS] negative controls: {corrupted_runs} corrupted generators all reported failing checks"
    );
}
