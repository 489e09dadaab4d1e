//! Round-based sampling kernels for simple partition matroids and for
//! g(k)-coverable matroids.
//!
//! Each round samples, for every structured matroid, a union of parallel classes
//! (blocks, for a simple partition matroid) and runs greedy on `M0` over the
//! intersection. Rounds are independent, so they run in parallel with
//! per-round random streams.

use std::f64::consts::E;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::greedy::greedy_in_order;
use crate::kernel::{ceil_rounds, run_rounds, singleton_kernel, Algorithm, Kernel, KernelConfig, RoundStreams};
use crate::matroid::{Matroid, MatroidClass, PartitionMatroid};
use crate::weights::Weights;

/// `⌈(e·k)^(d−1) · ln(3k)⌉`.
pub fn default_rounds_partition(k: usize, d: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::InvalidParameter(
            "default round count needs k >= 2; use the k = 1 shortcut".into(),
        ));
    }
    if d < 2 {
        return Err(Error::InvalidParameter("d must be at least 2".into()));
    }
    let k = k as f64;
    ceil_rounds((E * k).powi(d as i32 - 1) * (3.0 * k).ln(), "partition round count")
}

/// `⌈4^(d−1) · ln(3k) · Π g_i(k)⌉` with `d − 1 = g_values.len()`.
pub fn default_rounds_coverable(k: usize, g_values: &[usize]) -> Result<usize> {
    if k < 2 {
        return Err(Error::InvalidParameter(
            "default round count needs k >= 2; use the k = 1 shortcut".into(),
        ));
    }
    if g_values.is_empty() {
        return Err(Error::InvalidParameter("need at least one coverable matroid".into()));
    }
    if let Some(&g) = g_values.iter().find(|&&g| g < k) {
        return Err(Error::Coverability { g, k });
    }
    let product: f64 = g_values.iter().map(|&g| g as f64).product();
    let d1 = g_values.len() as i32;
    ceil_rounds(4f64.powi(d1) * (3.0 * k as f64).ln() * product, "coverable round count")
}

/// Coverability bound `g(k)` for the classes with a known bound.
///
/// Graphic uses `k(k+1)/2`: a forest with `k` edges in one tree spans
/// `C(k+1, 2)` vertex pairs. Cographic uses `5k − 1`: `|X|` plus at most
/// `4k − 1` maximal paths of the contracted tree.
pub fn g_value(class: MatroidClass, k: usize) -> Result<usize> {
    match class {
        MatroidClass::SimplePartition => Ok(k),
        MatroidClass::Graphic => Ok(k * (k + 1) / 2),
        MatroidClass::Cographic => Ok((5 * k).saturating_sub(1).max(k)),
        other => Err(Error::ClassMismatch(format!(
            "no coverability bound for {other} matroids; use the transversal or laminar kernels"
        ))),
    }
}

/// A class tag with its coverability bound evaluated at some `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverabilityProfile {
    pub class: MatroidClass,
    pub g: usize,
}

impl CoverabilityProfile {
    pub fn for_class(class: MatroidClass, k: usize) -> Result<Self> {
        Ok(CoverabilityProfile {
            class,
            g: g_value(class, k)?,
        })
    }
}

/// Samples each class independently with probability `1 / g` and returns the
/// union of the chosen classes.
#[derive(Debug, Clone)]
pub struct ClassSampler {
    classes: Vec<Vec<usize>>,
    g: u32,
}

impl ClassSampler {
    pub fn new(classes: Vec<Vec<usize>>, g: usize) -> Result<Self> {
        let g = u32::try_from(g).map_err(|_| Error::InvalidParameter(format!("sampling rate 1/{g} too small")))?;
        if g == 0 {
            return Err(Error::InvalidParameter("sampling denominator must be positive".into()));
        }
        Ok(ClassSampler { classes, g })
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn sample(&self, rng: &mut ChaCha8Rng) -> Vec<usize> {
        let mut out = Vec::new();
        for class in &self.classes {
            if rng.gen_ratio(1, self.g) {
                out.extend_from_slice(class);
            }
        }
        out
    }
}

/// The sets `F_1, …, F_{d−1}` drawn in one round.
pub fn sample_round(samplers: &[ClassSampler], streams: RoundStreams) -> Vec<Vec<usize>> {
    samplers
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let mut f = s.sample(&mut streams.rng(i));
            f.sort_unstable();
            f
        })
        .collect()
}

fn check_universe<M: Matroid + ?Sized>(m0: &M, weights: &Weights, others: &[usize]) -> Result<usize> {
    let n = m0.universe();
    if weights.len() != n {
        return Err(Error::MalformedInput(format!(
            "{} weights for a ground set of size {n}",
            weights.len()
        )));
    }
    if let Some(&u) = others.iter().find(|&&u| u != n) {
        return Err(Error::MalformedInput(format!(
            "structured matroid has ground set size {u}, expected {n}"
        )));
    }
    Ok(n)
}

fn sampled_kernel<M: Matroid + ?Sized>(
    algorithm: Algorithm,
    m0: &M,
    samplers: &[ClassSampler],
    weights: &Weights,
    config: &KernelConfig,
    rounds: usize,
) -> Kernel {
    let n = m0.universe();
    let order = weights.descending_ids();
    let d1 = samplers.len();
    let (elements, round_log) = run_rounds(n, config.seed, config.repeat, rounds, |streams| {
        let mut hits = vec![0usize; n];
        for f in sample_round(samplers, streams) {
            for e in f {
                hits[e] += 1;
            }
        }
        let pool: Vec<usize> = order.iter().copied().filter(|&e| hits[e] == d1).collect();
        greedy_in_order(m0, &pool, config.k).selected
    });
    Kernel {
        elements,
        algorithm,
        k: config.k,
        seed: config.seed,
        rounds,
        repeat: config.repeat,
        round_log,
    }
}

/// Kernel for `M0` intersected with simple partition matroids.
///
/// Per round and per structured matroid, every block is kept with probability
/// `1/k`; greedy on `M0` runs over the elements kept by all of them.
pub fn partition_kernel<M: Matroid + ?Sized>(
    m0: &M,
    parts: &[PartitionMatroid],
    weights: &Weights,
    config: &KernelConfig,
) -> Result<Kernel> {
    config.check()?;
    if parts.is_empty() {
        return Err(Error::InvalidParameter("need at least one structured matroid".into()));
    }
    let sizes: Vec<usize> = parts.iter().map(|p| p.universe()).collect();
    let n = check_universe(m0, weights, &sizes)?;
    if let Some(i) = parts.iter().position(|p| !p.is_simple()) {
        return Err(Error::ClassMismatch(format!(
            "structured matroid {} is a partition matroid with a cap above 1",
            i + 1
        )));
    }
    if config.k == 1 {
        return Ok(singleton_kernel(Algorithm::Partition, config, n, weights, |e| {
            m0.independent(&[e]) && parts.iter().all(|p| p.independent(&[e]))
        }));
    }
    let rounds = match config.rounds {
        Some(t) => t,
        None => default_rounds_partition(config.k, parts.len() + 1)?,
    };
    let samplers = parts
        .iter()
        .map(|p| ClassSampler::new(p.blocks().iter().filter(|b| !b.is_empty()).cloned().collect(), config.k))
        .collect::<Result<Vec<_>>>()?;
    Ok(sampled_kernel(
        Algorithm::Partition,
        m0,
        &samplers,
        weights,
        config,
        rounds,
    ))
}

/// Kernel for `M0` intersected with g(k)-coverable matroids, each given with
/// its bound `g_i(k) >= k`.
///
/// Per round, each parallel class of `M_i` is kept with probability `1/g_i`.
pub fn coverable_kernel<M: Matroid + ?Sized>(
    m0: &M,
    coverables: &[(&dyn Matroid, usize)],
    weights: &Weights,
    config: &KernelConfig,
) -> Result<Kernel> {
    config.check()?;
    if coverables.is_empty() {
        return Err(Error::InvalidParameter("need at least one structured matroid".into()));
    }
    let sizes: Vec<usize> = coverables.iter().map(|(m, _)| m.universe()).collect();
    let n = check_universe(m0, weights, &sizes)?;
    if let Some(&(_, g)) = coverables.iter().find(|(_, g)| *g < config.k) {
        return Err(Error::Coverability { g, k: config.k });
    }
    if config.k == 1 {
        return Ok(singleton_kernel(Algorithm::Coverable, config, n, weights, |e| {
            m0.independent(&[e]) && coverables.iter().all(|(m, _)| m.independent(&[e]))
        }));
    }
    let g_values: Vec<usize> = coverables.iter().map(|(_, g)| *g).collect();
    let rounds = match config.rounds {
        Some(t) => t,
        None => default_rounds_coverable(config.k, &g_values)?,
    };
    let samplers = coverables
        .iter()
        .map(|(m, g)| ClassSampler::new(m.parallel_classes()?, *g))
        .collect::<Result<Vec<_>>>()?;
    Ok(sampled_kernel(
        Algorithm::Coverable,
        m0,
        &samplers,
        weights,
        config,
        rounds,
    ))
}
