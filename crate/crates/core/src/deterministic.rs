//! Deterministic kernel for two-matroid intersection where `M1` is
//! g(k)-coverable.

use crate::error::{Error, Result};
use crate::greedy::greedy_in_order;
use crate::kernel::{Algorithm, Kernel};
use crate::matroid::Matroid;
use crate::weights::Weights;

/// What one iteration saw and selected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Iteration {
    /// Remaining ground set `U` at the start of the iteration.
    pub remaining: Vec<usize>,
    /// Greedy selection `F` on `M0 | U`.
    pub selected: Vec<usize>,
    /// `span_{M1|U}(e)` for each `e` in `F`, in the same order.
    pub spans: Vec<Vec<usize>>,
    /// Greedy selection on `M0` over each span.
    pub picks: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeterministicTrace {
    pub kernel: Kernel,
    pub iterations: Vec<Iteration>,
}

/// Runs the deterministic kernel with `g` the coverability bound of `M1`.
pub fn deterministic_kernel<M0, M1>(m0: &M0, m1: &M1, g: usize, weights: &Weights, k: usize) -> Result<Kernel>
where
    M0: Matroid + ?Sized,
    M1: Matroid + ?Sized,
{
    deterministic_kernel_traced(m0, m1, g, weights, k).map(|t| t.kernel)
}

/// [`deterministic_kernel`] plus the per-iteration record.
///
/// `M1` must be loopless. Up to `g + 1` iterations, each removing from `U`
/// the `M1|U`-spans of the greedy picks; stops early once `U` is empty.
pub fn deterministic_kernel_traced<M0, M1>(
    m0: &M0,
    m1: &M1,
    g: usize,
    weights: &Weights,
    k: usize,
) -> Result<DeterministicTrace>
where
    M0: Matroid + ?Sized,
    M1: Matroid + ?Sized,
{
    let n = m0.universe();
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if g < k {
        return Err(Error::Coverability { g, k });
    }
    if m1.universe() != n || weights.len() != n {
        return Err(Error::MalformedInput(format!(
            "ground set sizes differ: M0 {n}, M1 {}, weights {}",
            m1.universe(),
            weights.len()
        )));
    }
    if let Some(&e) = m1.loops().first() {
        return Err(Error::Normalization(format!("element {e} is a loop of M1")));
    }

    let order = weights.descending_ids();
    let mut in_u = vec![true; n];
    let mut in_r = vec![false; n];
    let mut iterations = Vec::new();
    let mut round_log = Vec::new();
    for _ in 0..=g {
        let remaining: Vec<usize> = order.iter().copied().filter(|&e| in_u[e]).collect();
        if remaining.is_empty() {
            break;
        }
        // greedy already stops at k elements, so M0 needs no explicit truncation
        let selected = greedy_in_order(m0, &remaining, k).selected;
        let mut spans = Vec::with_capacity(selected.len());
        let mut picks = Vec::with_capacity(selected.len());
        for &e in &selected {
            let span: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&f| f == e || !m1.independent(&[e, f]))
                .collect();
            picks.push(greedy_in_order(m0, &span, k).selected);
            spans.push(span);
        }
        let mut added = 0;
        for &e in selected.iter().chain(picks.iter().flatten()) {
            if !std::mem::replace(&mut in_r[e], true) {
                added += 1;
            }
        }
        for &f in spans.iter().flatten() {
            in_u[f] = false;
        }
        round_log.push(added);
        let mut remaining_sorted = remaining;
        remaining_sorted.sort_unstable();
        let mut span_sets = spans;
        span_sets.iter_mut().for_each(|s| s.sort_unstable());
        picks.iter_mut().for_each(|s| s.sort_unstable());
        iterations.push(Iteration {
            remaining: remaining_sorted,
            selected,
            spans: span_sets,
            picks,
        });
    }
    let kernel = Kernel {
        elements: (0..n).filter(|&e| in_r[e]).collect(),
        algorithm: Algorithm::Deterministic,
        k,
        seed: 0,
        rounds: g + 1,
        repeat: 1,
        round_log,
    };
    Ok(DeterministicTrace { kernel, iterations })
}
