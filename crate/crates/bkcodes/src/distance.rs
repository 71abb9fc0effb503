//! Minimum-distance computation: full codeword enumeration and exact
//! information-set enumeration in the Brouwer-Zimmermann style.
//!
//! The information-set algorithm builds generator matrices that are
//! systematic on pairwise disjoint column sets. Enumerating all messages of
//! weight <= w through a matrix whose information set has rank deficit
//! delta accounts for every codeword of weight <= w + 1 - delta on those
//! columns, so after a full weight-w pass the true distance is at least
//! `sum_i max(0, w + 1 - delta_i)`; the minimum weight seen so far is an
//! upper bound, and the two meet at the exact distance. Codeword weights
//! within a pass are independent, so supports are enumerated in parallel
//! and reduced with min, which keeps the result deterministic.

use rayon::prelude::*;
use serde::Serialize;

use crate::codes::FieldCode;
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::Mat;

/// Full enumeration (messages in ranked order, incremental codeword
/// updates); None for the zero code.
pub fn exhaustive_min_distance(code: &FieldCode, budget: u128) -> Result<Option<u32>> {
    let k = code.dim();
    if k == 0 {
        return Ok(None);
    }
    let Some(size) = code.size() else {
        return Err(Error::BudgetExceeded {
            size: u128::MAX,
            budget,
        });
    };
    if size > budget {
        return Err(Error::BudgetExceeded { size, budget });
    }
    let field = code.field();
    let q = field.order() as usize;
    let n = code.n();

    // scaled[i][c] = c * row_i
    let scaled: Vec<Vec<Vec<Fe>>> = (0..k)
        .map(|i| {
            (0..q)
                .map(|c| {
                    code.generator()
                        .row(i)
                        .iter()
                        .map(|&g| field.mul(Fe(c as u16), g))
                        .collect()
                })
                .collect()
        })
        .collect();

    let mut digits = vec![0usize; k];
    let mut word = vec![Fe::ZERO; n];
    let mut best = u32::MAX;
    let mut count = 1u128;
    while count < size {
        // odometer step: bump digit 0, carrying as needed; the codeword is
        // patched by the difference of the changed digit's scaled rows
        let mut i = 0;
        loop {
            let old = digits[i];
            let new = (old + 1) % q;
            digits[i] = new;
            for j in 0..n {
                word[j] = field.add(
                    word[j],
                    field.sub(scaled[i][new][j], scaled[i][old][j]),
                );
            }
            if new != 0 {
                break;
            }
            i += 1;
        }
        let w = word.iter().filter(|c| !c.is_zero()).count() as u32;
        if w < best {
            best = w;
        }
        count += 1;
    }
    Ok(Some(best))
}

/// One enumeration pass: all information-weight-w messages through one
/// information set.
#[derive(Clone, Debug, Serialize)]
pub struct IsdPass {
    pub w: usize,
    /// 1-based information set index.
    pub set: usize,
    /// Best codeword weight seen so far.
    pub ub: u32,
    /// Proven lower bound after this pass.
    pub lb: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsdOutcome {
    /// Exact distance, present when the run terminated with lb >= ub or a
    /// complete enumeration (always the case without option caps).
    pub distance: Option<u32>,
    pub ub: u32,
    pub lb: u32,
    pub exact: bool,
    pub passes: Vec<IsdPass>,
}

#[derive(Clone, Debug, Default)]
pub struct IsdOptions {
    /// Cap on the information weight (surrogate runs only).
    pub max_weight: Option<usize>,
    /// Cap on the number of information sets used (surrogate runs only).
    pub max_sets: Option<usize>,
    /// Stop as soon as the upper bound reaches this value (surrogate runs
    /// only; the result is then just an upper bound).
    pub stop_at_ub: Option<u32>,
    /// Print one line per pass to stderr.
    pub verbose: bool,
    /// Worker threads; 0 uses the global rayon pool.
    pub threads: usize,
}

struct InfoSet {
    /// Full-rank generator matrix, row-reduced so that `pivots` (disjoint
    /// from every other set's) carry an identity on the first
    /// `k - deficit` rows.
    mat: Mat,
    deficit: usize,
}

fn build_info_sets(code: &FieldCode) -> Vec<InfoSet> {
    let n = code.n();
    let k = code.dim();
    let mut used = vec![false; n];
    let mut sets = Vec::new();
    loop {
        let order: Vec<usize> = (0..n)
            .filter(|&c| !used[c])
            .chain((0..n).filter(|&c| used[c]))
            .collect();
        let mut m = Mat::from_rows(
            code.field().clone(),
            code.generator_rows(),
            n,
        )
        .expect("generator rows have length n");
        let pivots = m.rref_with_column_order(&order);
        let fresh: Vec<usize> = pivots.iter().copied().filter(|&c| !used[c]).collect();
        if fresh.is_empty() {
            break;
        }
        for &c in &fresh {
            used[c] = true;
        }
        sets.push(InfoSet {
            mat: m,
            deficit: k - fresh.len(),
        });
    }
    sets
}

/// Exact minimum distance by information-set enumeration with lower-bound
/// early termination. The code must have dimension >= 1.
pub fn min_distance_isd(code: &FieldCode, opts: &IsdOptions) -> Result<IsdOutcome> {
    if code.dim() == 0 {
        return Err(Error::Config(
            "information-set enumeration needs dimension >= 1".into(),
        ));
    }
    if opts.threads > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
        pool.install(|| isd_run(code, opts))
    } else {
        isd_run(code, opts)
    }
}

fn isd_run(code: &FieldCode, opts: &IsdOptions) -> Result<IsdOutcome> {
    let field = code.field().clone();
    let q = field.order() as usize;
    let k = code.dim();
    let n = code.n();

    let mut sets = build_info_sets(code);
    if let Some(cap) = opts.max_sets {
        sets.truncate(cap.max(1));
    }

    // per-row scaled copies for fast support enumeration
    let scaled: Vec<Vec<Vec<Vec<Fe>>>> = sets
        .iter()
        .map(|s| {
            (0..k)
                .map(|i| {
                    (1..q)
                        .map(|c| {
                            s.mat
                                .row(i)
                                .iter()
                                .map(|&g| field.mul(Fe(c as u16), g))
                                .collect()
                        })
                        .collect()
                })
                .collect()
        })
        .collect();

    let mut ub = u32::MAX;
    let mut lb = 0u32;
    let mut done_w = vec![0usize; sets.len()];
    let mut passes = Vec::new();
    let mut exact = false;

    let max_w = opts.max_weight.unwrap_or(k).min(k);
    'outer: for w in 1..=max_w {
        for (si, set) in sets.iter().enumerate() {
            let pass_min = enumerate_weight(&field, &scaled[si], n, k, w, ub);
            if pass_min < ub {
                ub = pass_min;
            }
            done_w[si] = w;
            lb = sets
                .iter()
                .enumerate()
                .map(|(i, s)| (done_w[i] + 1).saturating_sub(s.deficit) as u32)
                .sum();
            let pass = IsdPass {
                w,
                set: si + 1,
                ub,
                lb,
            };
            if opts.verbose {
                eprintln!(
                    "isd: pass w={} set={} ub={} lb={} (deficit {})",
                    pass.w, pass.set, pass.ub, pass.lb, set.deficit
                );
            }
            passes.push(pass);
            if let Some(target) = opts.stop_at_ub {
                if ub <= target {
                    break 'outer;
                }
            }
            if lb >= ub {
                exact = true;
                break 'outer;
            }
        }
        // a full-rank set enumerated through weight k has seen every codeword
        if w == k && sets.iter().zip(&done_w).any(|(s, &dw)| s.deficit == 0 && dw == k) {
            exact = true;
            break;
        }
    }
    if ub == u32::MAX {
        // dimension >= 1 guarantees nonzero codewords at w = 1
        return Err(Error::Config("enumeration found no codewords".into()));
    }
    Ok(IsdOutcome {
        distance: if exact { Some(ub) } else { None },
        ub,
        lb,
        exact,
        passes,
    })
}

/// Minimum codeword weight over messages of exact weight w through one
/// systematic matrix. Parallel over the leading support position.
fn enumerate_weight(
    field: &std::sync::Arc<Field>,
    scaled: &[Vec<Vec<Fe>>],
    n: usize,
    k: usize,
    w: usize,
    ub: u32,
) -> u32 {
    if w > k {
        return ub;
    }
    (0..=k - w)
        .into_par_iter()
        .map(|first| {
            let mut support = vec![0usize; w];
            support[0] = first;
            let mut buf = scaled[first][0].clone(); // scalar 1 * row_first
            let mut best = u32::MAX;
            descend(field, scaled, n, k, w, 1, &mut support, &mut buf, &mut best);
            best
        })
        .min()
        .unwrap_or(ub)
        .min(ub)
}

/// Depth-first enumeration over the remaining support positions and their
/// q-1 scalars; the partial codeword sum is updated in place. The scalar at
/// the first support position stays 1: weights are invariant under global
/// scaling.
#[allow(clippy::too_many_arguments)]
fn descend(
    field: &std::sync::Arc<Field>,
    scaled: &[Vec<Vec<Fe>>],
    n: usize,
    k: usize,
    w: usize,
    depth: usize,
    support: &mut [usize],
    buf: &mut Vec<Fe>,
    best: &mut u32,
) {
    if depth == w {
        let weight = buf.iter().filter(|c| !c.is_zero()).count() as u32;
        if weight > 0 && weight < *best {
            *best = weight;
        }
        return;
    }
    let lo = support[depth - 1] + 1;
    let hi = k - (w - depth - 1);
    for pos in lo..hi {
        support[depth] = pos;
        for srow in &scaled[pos] {
            let saved = buf.clone();
            for (b, &s) in buf.iter_mut().zip(srow) {
                *b = field.add(*b, s);
            }
            descend(field, scaled, n, k, w, depth + 1, support, buf, best);
            *buf = saved;
        }
    }
    let _ = n;
}
