//! Candidate-family sampling over laminar families and the laminar kernel
//! built on it.

use std::f64::consts::E;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::greedy::greedy_in_order;
use crate::kernel::{ceil_rounds, run_rounds, singleton_kernel, Algorithm, Kernel, KernelConfig, RoundStreams};
use crate::matroid::{normalize_laminar, LaminarFamily, LaminarMatroid, Matroid, NodeId};
use crate::weights::Weights;

/// Pairwise disjoint members of a laminar family.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DisjointFamily {
    pub members: Vec<NodeId>,
}

impl DisjointFamily {
    pub fn new(members: Vec<NodeId>) -> Self {
        DisjointFamily { members }
    }

    /// The roots of `family`.
    pub fn top(family: &LaminarFamily) -> Self {
        DisjointFamily {
            members: family.roots().to_vec(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Largest cap among the members, 0 when empty.
    pub fn height(&self, family: &LaminarFamily) -> usize {
        self.members.iter().map(|&m| family.node(m).cap).max().unwrap_or(0)
    }

    /// `E(Z)`, sorted.
    pub fn elements(&self, family: &LaminarFamily) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .members
            .iter()
            .flat_map(|&m| family.node(m).elements.iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    fn sample(&self, k: u32, rng: &mut ChaCha8Rng) -> DisjointFamily {
        DisjointFamily {
            members: self.members.iter().copied().filter(|_| rng.gen_ratio(1, k)).collect(),
        }
    }
}

/// Subsets of the ground set produced by one [`find_candidate`] call.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CandidateFamily {
    /// Sorted, distinct, non-empty element sets.
    pub subsets: Vec<Vec<usize>>,
}

impl CandidateFamily {
    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }
}

/// Maximal members with cap at most `i` inside the members of `z`: descend from
/// each member and stop at the first node whose cap is at most `i`.
///
/// On a normalized family the result partitions `E(z)`.
pub fn refine(family: &LaminarFamily, z: &DisjointFamily, i: usize) -> DisjointFamily {
    let mut out = Vec::new();
    let mut stack: Vec<NodeId> = z.members.iter().rev().copied().collect();
    while let Some(id) = stack.pop() {
        let node = family.node(id);
        if node.cap <= i {
            out.push(id);
        } else {
            stack.extend(node.children.iter().rev().copied());
        }
    }
    DisjointFamily { members: out }
}

/// `⌈log₂ x⌉` for `x >= 1`.
pub fn ceil_log2(x: usize) -> u32 {
    if x <= 1 {
        0
    } else {
        usize::BITS - (x - 1).leading_zeros()
    }
}

fn collect_candidates(
    family: &LaminarFamily,
    z: &DisjointFamily,
    k: u32,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Vec<usize>>,
) {
    let h = z.height(family);
    if h <= 1 {
        out.push(z.elements(family));
        return;
    }
    for i in h.div_ceil(2)..h {
        let z1 = refine(family, z, i).sample(k, rng);
        let z2 = refine(family, &z1, h - i).sample(k, rng);
        if !z2.is_empty() {
            collect_candidates(family, &z2, k, rng, out);
        }
    }
}

/// Samples a family of at most `k^⌈log₂ h⌉` subsets of `E(z)`, where `h` is the
/// height of `z`. Expects a normalized family and a non-empty `z`.
pub fn find_candidate(family: &LaminarFamily, z: &DisjointFamily, k: usize, rng: &mut ChaCha8Rng) -> CandidateFamily {
    let k = u32::try_from(k.max(1)).unwrap_or(u32::MAX);
    let mut subsets = Vec::new();
    if !z.is_empty() {
        collect_candidates(family, z, k, rng, &mut subsets);
    }
    subsets.sort_unstable();
    subsets.dedup();
    CandidateFamily { subsets }
}

/// Lower bound `((e·k)^−2)^⌈log₂ k⌉` on the chance that one call of
/// [`find_candidate`] on a normalized family returns an exchangeable set.
pub fn candidate_success_bound(k: usize) -> f64 {
    (E * k as f64).powi(-2 * ceil_log2(k) as i32)
}

/// `⌈ln(3k) / p^(d−1)⌉` with `p` from [`candidate_success_bound`].
pub fn default_rounds_laminar(k: usize, d: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::InvalidParameter(
            "default round count needs k >= 2; use the k = 1 shortcut".into(),
        ));
    }
    if d < 2 {
        return Err(Error::InvalidParameter("d must be at least 2".into()));
    }
    let exponent = 2 * ceil_log2(k) as i32 * (d as i32 - 1);
    let t = (3.0 * k as f64).ln() * (E * k as f64).powi(exponent);
    ceil_rounds(t, "laminar round count").map_err(|e| match e {
        Error::RoundOverflow(msg) => Error::RoundOverflow(format!("{msg}; pass an explicit round count")),
        other => other,
    })
}

/// One candidate family per laminar matroid for a round.
pub fn sample_candidates(families: &[LaminarFamily], k: usize, streams: RoundStreams) -> Vec<CandidateFamily> {
    families
        .iter()
        .enumerate()
        .map(|(i, f)| find_candidate(f, &DisjointFamily::top(f), k, &mut streams.rng(i)))
        .collect()
}

/// Every non-empty intersection `Y_1 ∩ … ∩ Y_{d−1}` with one set from each family.
pub fn cross_intersections(candidates: &[CandidateFamily]) -> Vec<Vec<usize>> {
    let mut acc: Vec<Vec<usize>> = match candidates.first() {
        Some(c) => c.subsets.clone(),
        None => return Vec::new(),
    };
    for c in &candidates[1..] {
        let mut next = Vec::new();
        for a in &acc {
            for b in &c.subsets {
                let common: Vec<usize> = a.iter().copied().filter(|e| b.binary_search(e).is_ok()).collect();
                if !common.is_empty() {
                    next.push(common);
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        acc = next;
    }
    acc
}

/// Kernel for `M0` intersected with laminar matroids. Each family is
/// normalized for `k` first, which leaves the feasible sets of size at most
/// `k` unchanged.
pub fn laminar_kernel<M: Matroid + ?Sized>(
    m0: &M,
    laminars: &[LaminarMatroid],
    weights: &Weights,
    config: &KernelConfig,
) -> Result<Kernel> {
    config.check()?;
    let n = m0.universe();
    if weights.len() != n {
        return Err(Error::MalformedInput(format!(
            "{} weights for a ground set of size {n}",
            weights.len()
        )));
    }
    if laminars.is_empty() {
        return Err(Error::InvalidParameter("need at least one structured matroid".into()));
    }
    if let Some(l) = laminars.iter().find(|l| l.universe() != n) {
        return Err(Error::MalformedInput(format!(
            "laminar matroid has ground set size {}, expected {n}",
            l.universe()
        )));
    }
    if config.k == 1 {
        return Ok(singleton_kernel(Algorithm::Laminar, config, n, weights, |e| {
            m0.independent(&[e]) && laminars.iter().all(|l| l.independent(&[e]))
        }));
    }
    let rounds = match config.rounds {
        Some(t) => t,
        None => default_rounds_laminar(config.k, laminars.len() + 1)?,
    };
    let families = laminars
        .iter()
        .map(|l| normalize_laminar(l.family(), config.k, false))
        .collect::<Result<Vec<_>>>()?;
    let order = weights.descending_ids();
    let k = config.k;
    let (elements, round_log) = run_rounds(n, config.seed, config.repeat, rounds, |streams| {
        let candidates = sample_candidates(&families, k, streams);
        let mut member = vec![false; n];
        let mut selected = Vec::new();
        for y in cross_intersections(&candidates) {
            let pool: Vec<usize> = order.iter().copied().filter(|e| y.binary_search(e).is_ok()).collect();
            for e in greedy_in_order(m0, &pool, k).selected {
                if !std::mem::replace(&mut member[e], true) {
                    selected.push(e);
                }
            }
        }
        selected
    });
    Ok(Kernel {
        elements,
        algorithm: Algorithm::Laminar,
        k,
        seed: config.seed,
        rounds,
        repeat: config.repeat,
        round_log,
    })
}
