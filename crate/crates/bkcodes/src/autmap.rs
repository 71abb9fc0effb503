//! Automorphisms of B_k and the semilinear maps they induce on the Gray image.
//!
//! An automorphism is determined by a Frobenius exponent t (its action on
//! scalars) and the images of the generators: theta(v_i) = v_j or 1 - v_j
//! with i -> j a bijection of {1..k}. Every automorphism factors as
//! Theta_S o Lambda_{S1,S2,t}, where Theta_S complements the generators in S
//! (an involution) and Lambda permutes generator indices while twisting
//! scalars by phi^t.
//!
//! On semisimple coordinates an automorphism acts as a permutation of the
//! 2^k masks followed by an entrywise Frobenius power: psi o theta =
//! induced o psi. The permutation has a closed form: evaluation points are
//! masks, and theta moves the point M to the mask {i : (target_i in M) xor
//! complemented_i}.

use std::fmt;
use std::sync::Arc;

use crate::bk::{RingElem, RingSpec};
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

/// Image of one generator: theta(v_i) = v_target or 1 - v_target.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenImage {
    /// 1-based target index j.
    pub target: usize,
    /// true selects 1 - v_target.
    pub complemented: bool,
}

/// A validated automorphism of B_k.
#[derive(Clone)]
pub struct Automorphism {
    spec: Arc<RingSpec>,
    images: Vec<GenImage>,
    t: u32,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        *self.spec == *other.spec && self.images == other.images && self.t == other.t
    }
}
impl Eq for Automorphism {}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Automorphism({})", self.literal())
    }
}

impl Automorphism {
    /// Validate generator images (targets must form a bijection) and reduce
    /// t mod r.
    pub fn new(spec: Arc<RingSpec>, images: Vec<GenImage>, t: u32) -> Result<Automorphism> {
        if images.len() != spec.k() {
            return Err(Error::LengthMismatch {
                expected: spec.k(),
                got: images.len(),
            });
        }
        let mut seen = vec![false; spec.k()];
        for img in &images {
            if img.target < 1 || img.target > spec.k() {
                return Err(Error::IndexOutOfRange {
                    index: img.target,
                    len: spec.k(),
                });
            }
            if seen[img.target - 1] {
                return Err(Error::NotBijective { target: img.target });
            }
            seen[img.target - 1] = true;
        }
        let t = t % spec.field().r();
        Ok(Automorphism { spec, images, t })
    }

    pub fn identity(spec: Arc<RingSpec>) -> Automorphism {
        let images = (1..=spec.k())
            .map(|i| GenImage {
                target: i,
                complemented: false,
            })
            .collect();
        Automorphism { spec, images, t: 0 }
    }

    /// Theta_S: v_i -> 1 - v_i for i in S (bit i-1 of `s_mask`), fixing the
    /// other generators and the scalars.
    pub fn theta_s(spec: Arc<RingSpec>, s_mask: usize) -> Result<Automorphism> {
        if s_mask >= spec.dim() {
            return Err(Error::IndexOutOfRange {
                index: s_mask,
                len: spec.dim() - 1,
            });
        }
        let images = (1..=spec.k())
            .map(|i| GenImage {
                target: i,
                complemented: s_mask >> (i - 1) & 1 == 1,
            })
            .collect();
        Ok(Automorphism { spec, images, t: 0 })
    }

    /// Lambda_{S1,S2,t}: v_i -> v_{lambda(i)} with phi^t on scalars.
    /// `lambda` is the full 1-based target map, which must be a bijection.
    pub fn lambda(spec: Arc<RingSpec>, lambda: &[usize], t: u32) -> Result<Automorphism> {
        let images = lambda
            .iter()
            .map(|&j| GenImage {
                target: j,
                complemented: false,
            })
            .collect();
        Automorphism::new(spec, images, t)
    }

    pub fn spec(&self) -> &Arc<RingSpec> {
        &self.spec
    }
    pub fn images(&self) -> &[GenImage] {
        &self.images
    }
    /// Frobenius exponent of the scalar action, in [0, r).
    pub fn frobenius_exp(&self) -> u32 {
        self.t
    }

    pub fn is_identity(&self) -> bool {
        self.t == 0
            && self
                .images
                .iter()
                .enumerate()
                .all(|(i, img)| img.target == i + 1 && !img.complemented)
    }

    /// Apply to a ring element by expanding the generator images on the
    /// v_H basis: the image of v_H is the product of the images of its
    /// factors, and scalars pass through phi^t.
    pub fn apply(&self, a: &RingElem) -> Result<RingElem> {
        if **a.spec() != *self.spec {
            return Err(Error::SpecMismatch);
        }
        let field = self.spec.field().clone();
        let dim = self.spec.dim();
        let mut out = vec![Fe::ZERO; dim];
        for h in 0..dim {
            let c = a.coeff(h);
            if c.is_zero() {
                continue;
            }
            let coef = field.frobenius(c, self.t);
            // split theta(v_H) = prod plain targets * prod (1 - v_f)
            let mut base = 0usize;
            let mut flagged: Vec<usize> = Vec::new();
            for i in 0..self.spec.k() {
                if h >> i & 1 == 1 {
                    let img = self.images[i];
                    if img.complemented {
                        flagged.push(img.target - 1);
                    } else {
                        base |= 1 << (img.target - 1);
                    }
                }
            }
            // prod_{f}(1 - v_f) = sum_{T subseteq flagged} (-1)^{|T|} v_T
            for t_set in 0usize..1 << flagged.len() {
                let mut mask = base;
                for (bit, &f) in flagged.iter().enumerate() {
                    if t_set >> bit & 1 == 1 {
                        mask |= 1 << f;
                    }
                }
                let signed = if t_set.count_ones() % 2 == 1 {
                    field.neg(coef)
                } else {
                    coef
                };
                out[mask] = field.add(out[mask], signed);
            }
        }
        self.spec.elem(out)
    }

    /// self o other: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        if *self.spec != *other.spec {
            return Err(Error::SpecMismatch);
        }
        let images = other
            .images
            .iter()
            .map(|g_img| {
                let f_img = self.images[g_img.target - 1];
                GenImage {
                    target: f_img.target,
                    complemented: g_img.complemented ^ f_img.complemented,
                }
            })
            .collect();
        Ok(Automorphism {
            spec: self.spec.clone(),
            images,
            t: (self.t + other.t) % self.spec.field().r(),
        })
    }

    pub fn inverse(&self) -> Automorphism {
        let k = self.spec.k();
        let mut images = vec![
            GenImage {
                target: 0,
                complemented: false
            };
            k
        ];
        for (i, img) in self.images.iter().enumerate() {
            images[img.target - 1] = GenImage {
                target: i + 1,
                complemented: img.complemented,
            };
        }
        let r = self.spec.field().r();
        Automorphism {
            spec: self.spec.clone(),
            images,
            t: (r - self.t % r) % r,
        }
    }

    /// Least m >= 1 with theta^m = identity.
    pub fn order(&self) -> u64 {
        let mut acc = self.clone();
        let mut m = 1u64;
        while !acc.is_identity() {
            acc = self.compose(&acc).expect("same spec");
            m += 1;
        }
        m
    }

    /// Normal form theta = Theta_S o Lambda_{S1,S2,t}, with the sets built
    /// as in the four-case analysis: S collects targets that receive a
    /// complement, S1 the sources whose index moves, S2 the images of S1
    /// together with complemented fixed points.
    pub fn decompose(&self) -> NormalForm {
        let mut s = Vec::new();
        let mut s1 = Vec::new();
        let mut s2 = Vec::new();
        let lambda: Vec<usize> = self.images.iter().map(|img| img.target).collect();
        for (idx, img) in self.images.iter().enumerate() {
            let i = idx + 1;
            if img.complemented {
                s.push(img.target);
            }
            if img.target != i {
                s1.push(i);
                s2.push(img.target);
            } else if img.complemented {
                s2.push(i);
            }
        }
        s.sort_unstable();
        s2.sort_unstable();
        NormalForm {
            s,
            s1,
            s2,
            lambda,
            t: self.t,
        }
    }

    /// The induced semilinear map on semisimple coordinates:
    /// psi(theta(a)) = induced(psi(a)).
    pub fn induced_map(&self) -> InducedMap {
        let dim = self.spec.dim();
        let mut perm = vec![0usize; dim];
        for (m, slot) in perm.iter_mut().enumerate() {
            let mut src = 0usize;
            for (i, img) in self.images.iter().enumerate() {
                let bit = m >> (img.target - 1) & 1 == 1;
                if bit ^ img.complemented {
                    src |= 1 << i;
                }
            }
            *slot = src;
        }
        InducedMap { perm, t: self.t }
    }

    /// Order of the permutation part of the induced map.
    pub fn ord_induced(&self) -> u64 {
        perm_order(&self.induced_map().perm)
    }

    /// The permutation pi with T_thetatilde(C_i) contained in C_pi(i) for
    /// theta-cyclic component systems: the inverse of the induced gather
    /// permutation.
    pub fn component_permutation(&self) -> Vec<usize> {
        invert_perm(&self.induced_map().perm)
    }

    /// Literal form, e.g. `v1->v2; v2->1-v1; t=1`.
    pub fn literal(&self) -> String {
        let mut parts: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, img)| {
                if img.complemented {
                    format!("v{}->1-v{}", i + 1, img.target)
                } else {
                    format!("v{}->v{}", i + 1, img.target)
                }
            })
            .collect();
        parts.push(format!("t={}", self.t));
        parts.join("; ")
    }

    /// Parse the rule grammar `v1->v2; 1-v2->v3; t=1`. Unlisted generators
    /// stay fixed. A left-hand side `1-vI` states the image of 1 - v_I, so
    /// the stored image of v_I is the complement of the right-hand side.
    ///
    /// In strict mode a non-bijective rule set is an error. Otherwise, when
    /// the rules have exactly one repeated target and one missing target,
    /// the later conflicting source is redirected to the missing target and
    /// the repair is reported.
    pub fn parse(spec: &Arc<RingSpec>, text: &str, strict: bool) -> Result<(Automorphism, Option<String>)> {
        let mut images: Vec<Option<GenImage>> = vec![None; spec.k()];
        let mut t = 0u32;
        for raw in text.split(';') {
            let rule = raw.trim();
            if rule.is_empty() {
                continue;
            }
            if let Some(ts) = rule.strip_prefix("t=") {
                t = ts
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad rule `{rule}`")))?;
                continue;
            }
            let (lhs, rhs) = rule
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("bad rule `{rule}`")))?;
            let (src, lhs_compl) = parse_side(lhs)
                .ok_or_else(|| Error::Parse(format!("bad rule `{rule}`")))?;
            let (dst, rhs_compl) = parse_side(rhs)
                .ok_or_else(|| Error::Parse(format!("bad rule `{rule}`")))?;
            if src < 1 || src > spec.k() || dst < 1 || dst > spec.k() {
                return Err(Error::Parse(format!(
                    "rule `{rule}`: generator index out of range 1..={}",
                    spec.k()
                )));
            }
            if images[src - 1].is_some() {
                return Err(Error::Parse(format!(
                    "rule `{rule}`: v{src} already has an image"
                )));
            }
            // theta(1 - v_src) = rhs  <=>  theta(v_src) = 1 - rhs
            images[src - 1] = Some(GenImage {
                target: dst,
                complemented: lhs_compl ^ rhs_compl,
            });
        }
        let images: Vec<GenImage> = images
            .into_iter()
            .enumerate()
            .map(|(i, img)| {
                img.unwrap_or(GenImage {
                    target: i + 1,
                    complemented: false,
                })
            })
            .collect();
        match Automorphism::new(spec.clone(), images.clone(), t) {
            Ok(aut) => Ok((aut, None)),
            Err(Error::NotBijective { target }) if !strict => {
                let (repaired, note) = repair_images(&images)
                    .ok_or(Error::NotBijective { target })?;
                let aut = Automorphism::new(spec.clone(), repaired, t)?;
                Ok((aut, Some(note)))
            }
            Err(e) => Err(e),
        }
    }
}

fn parse_side(s: &str) -> Option<(usize, bool)> {
    let s = s.trim();
    let (compl, body) = match s.strip_prefix("1-") {
        Some(rest) => (true, rest.trim()),
        None => (false, s),
    };
    let idx: usize = body.strip_prefix('v')?.trim().parse().ok()?;
    Some((idx, compl))
}

/// Repair a rule set with exactly one duplicated target (two sources) and
/// one missing target by redirecting the later source to the missing
/// target; this resolves the published rows whose printed rules repeat a
/// target.
fn repair_images(images: &[GenImage]) -> Option<(Vec<GenImage>, String)> {
    let k = images.len();
    let mut count = vec![0usize; k];
    for img in images {
        count[img.target - 1] += 1;
    }
    let dup: Vec<usize> = (1..=k).filter(|&j| count[j - 1] > 1).collect();
    let missing: Vec<usize> = (1..=k).filter(|&j| count[j - 1] == 0).collect();
    if dup.len() != 1 || missing.len() != 1 || count[dup[0] - 1] != 2 {
        return None;
    }
    let sources: Vec<usize> = images
        .iter()
        .enumerate()
        .filter(|(_, img)| img.target == dup[0])
        .map(|(i, _)| i)
        .collect();
    let fix = sources[1];
    let mut out = images.to_vec();
    out[fix].target = missing[0];
    let note = format!(
        "repaired non-injective images: v{} -> {}v{} (printed target v{})",
        fix + 1,
        if out[fix].complemented { "1-" } else { "" },
        missing[0],
        dup[0],
    );
    Some((out, note))
}

/// Normal form (S, S1, S2, lambda, t) of an automorphism. Not unique; only
/// recomposition equality is meaningful.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub s: Vec<usize>,
    pub s1: Vec<usize>,
    pub s2: Vec<usize>,
    /// Full 1-based target map; fixes every index outside S1.
    pub lambda: Vec<usize>,
    pub t: u32,
}

impl NormalForm {
    /// Theta_S o Lambda_{S1,S2,t}.
    pub fn recompose(&self, spec: &Arc<RingSpec>) -> Result<Automorphism> {
        let mut s_mask = 0usize;
        for &j in &self.s {
            s_mask |= 1 << (j - 1);
        }
        let theta = Automorphism::theta_s(spec.clone(), s_mask)?;
        let lam = Automorphism::lambda(spec.clone(), &self.lambda, self.t)?;
        theta.compose(&lam)
    }
}

/// A permutation of semisimple coordinates plus an entrywise Frobenius
/// power; `perm` is in gather form: output m reads input `perm[m]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap {
    pub perm: Vec<usize>,
    pub t: u32,
}

impl InducedMap {
    pub fn apply(&self, field: &Arc<Field>, coords: &[Fe]) -> Vec<Fe> {
        self.perm
            .iter()
            .map(|&src| field.frobenius(coords[src], self.t))
            .collect()
    }

    pub fn perm_order(&self) -> u64 {
        perm_order(&self.perm)
    }
}

/// Block rotation sigma_{i,k} on {1..2^k}: each consecutive block of size
/// 2^i is rotated by 2^{i-1} (its half), which on 0-based masks is the XOR
/// with bit i-1. Returned in gather form.
pub fn sigma(i: usize, k: usize) -> Result<Vec<usize>> {
    if i < 1 || i > k {
        return Err(Error::IndexOutOfRange { index: i, len: k });
    }
    Ok((0..1usize << k).map(|m| m ^ (1 << (i - 1))).collect())
}

/// Sigma_{S,k} = product of sigma_{i,k} over i in S: XOR with the mask of S.
pub fn sigma_s(s_mask: usize, k: usize) -> Vec<usize> {
    (0..1usize << k).map(|m| m ^ s_mask).collect()
}

/// Gamma_{S1,S2,t}: gather permutation lambda-tilde^{-1} on masks plus
/// phi^t entrywise, where lambda-tilde relabels mask bits through lambda.
pub fn gamma(lambda: &[usize], t: u32) -> InducedMap {
    let k = lambda.len();
    // inverse target map
    let mut inv = vec![0usize; k];
    for (i, &j) in lambda.iter().enumerate() {
        inv[j - 1] = i + 1;
    }
    let perm = (0..1usize << k)
        .map(|m| {
            let mut src = 0usize;
            for i in 0..k {
                if m >> i & 1 == 1 {
                    src |= 1 << (inv[i] - 1);
                }
            }
            src
        })
        .collect();
    InducedMap { perm, t }
}

/// Apply a gather permutation to a slice.
pub fn apply_perm<T: Copy>(perm: &[usize], xs: &[T]) -> Vec<T> {
    perm.iter().map(|&i| xs[i]).collect()
}

/// Compose gather permutations: `second` applied after  `first`.
pub fn compose_perms(second: &[usize], first: &[usize]) -> Vec<usize> {
    second.iter().map(|&i| first[i]).collect()
}

pub fn invert_perm(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; perm.len()];
    for (i, &j) in perm.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

pub fn perm_order(perm: &[usize]) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    let mut seen = vec![false; perm.len()];
    let mut order = 1u64;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = perm[cur];
            len += 1;
        }
        order = order / gcd(order, len) * len;
    }
    order
}

/// Every automorphism of B_k over the given field: all target bijections,
/// complement patterns and Frobenius exponents. Intended for exhaustive
/// checks with small k.
pub fn all_automorphisms(spec: &Arc<RingSpec>) -> Vec<Automorphism> {
    let k = spec.k();
    let r = spec.field().r();
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut cur: Vec<usize> = (1..=k).collect();
    permutations(&mut cur, 0, &mut perms);
    let mut out = Vec::new();
    for perm in &perms {
        for flags in 0usize..1 << k {
            for t in 0..r {
                let images = perm
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| GenImage {
                        target: j,
                        complemented: flags >> i & 1 == 1,
                    })
                    .collect();
                out.push(
                    Automorphism::new(spec.clone(), images, t).expect("bijective by construction"),
                );
            }
        }
    }
    out
}

fn permutations(cur: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if start == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in start..cur.len() {
        cur.swap(start, i);
        permutations(cur, start + 1, out);
        cur.swap(start, i);
    }
}
