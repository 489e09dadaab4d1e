//! Kernel output type, run configuration and the shared round driver used by
//! every sampling-based kernel.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::weights::Weights;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Partition,
    Coverable,
    Transversal,
    Laminar,
    Matching,
    Deterministic,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Partition,
        Algorithm::Coverable,
        Algorithm::Transversal,
        Algorithm::Laminar,
        Algorithm::Matching,
        Algorithm::Deterministic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Partition => "partition",
            Algorithm::Coverable => "coverable",
            Algorithm::Transversal => "transversal",
            Algorithm::Laminar => "laminar",
            Algorithm::Matching => "matching",
            Algorithm::Deterministic => "deterministic",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown algorithm {s:?}")))
    }
}

/// A kernel `R` with the parameters that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    /// Sorted element ids.
    pub elements: Vec<usize>,
    pub algorithm: Algorithm,
    pub k: usize,
    pub seed: u64,
    /// Rounds per repetition (`T`), or iterations for the deterministic kernel.
    pub rounds: usize,
    pub repeat: usize,
    /// Number of elements selected in each round, repetitions concatenated.
    pub round_log: Vec<usize>,
}

impl Kernel {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelConfig {
    pub k: usize,
    pub seed: u64,
    /// Overrides the default round count `T`.
    pub rounds: Option<usize>,
    /// Runs the kernel this many times with independent randomness and returns
    /// the union; failure probability drops to `(1/3)^repeat`.
    pub repeat: usize,
}

impl KernelConfig {
    pub fn new(k: usize, seed: u64) -> Self {
        KernelConfig {
            k,
            seed,
            rounds: None,
            repeat: 1,
        }
    }

    pub fn with_rounds(mut self, rounds: usize) -> Self {
        self.rounds = Some(rounds);
        self
    }

    pub fn with_repeat(mut self, repeat: usize) -> Self {
        self.repeat = repeat;
        self
    }

    pub(crate) fn check(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        if self.repeat == 0 {
            return Err(Error::InvalidParameter("repeat must be at least 1".into()));
        }
        if self.rounds == Some(0) {
            return Err(Error::InvalidParameter("round count must be at least 1".into()));
        }
        Ok(())
    }
}

/// SplitMix64 finalizer.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for the `index`-th derived run (trials, repetitions).
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    mix64(seed ^ mix64(index))
}

/// Random streams of one round, keyed by `(seed, repetition, round, slot)` so the
/// result does not depend on the order in which rounds execute.
#[derive(Debug, Clone, Copy)]
pub struct RoundStreams {
    key: u64,
    round: usize,
}

impl RoundStreams {
    pub fn new(seed: u64, repetition: usize, round: usize) -> Self {
        RoundStreams {
            key: derive_seed(seed, repetition as u64),
            round,
        }
    }

    pub fn round(&self) -> usize {
        self.round
    }

    /// Independent generator for `slot` (one per structured matroid).
    pub fn rng(&self, slot: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.key);
        rng.set_stream(((self.round as u64) << 16) | (slot as u64 & 0xffff));
        rng
    }
}

/// Runs `repeat × rounds` independent rounds in parallel and unions their
/// selections over a ground set of size `n`.
pub(crate) fn run_rounds<F>(n: usize, seed: u64, repeat: usize, rounds: usize, round: F) -> (Vec<usize>, Vec<usize>)
where
    F: Fn(RoundStreams) -> Vec<usize> + Sync,
{
    let outputs: Vec<Vec<usize>> = (0..repeat * rounds)
        .into_par_iter()
        .map(|i| round(RoundStreams::new(seed, i / rounds, i % rounds)))
        .collect();
    let mut member = vec![false; n];
    let mut log = Vec::with_capacity(outputs.len());
    for out in &outputs {
        log.push(out.len());
        for &e in out {
            member[e] = true;
        }
    }
    let elements = (0..n).filter(|&e| member[e]).collect();
    (elements, log)
}

/// The `k = 1` case: a heaviest feasible singleton (smallest id on ties) is
/// already a kernel.
pub(crate) fn best_singleton(n: usize, weights: &Weights, feasible: impl Fn(usize) -> bool) -> Vec<usize> {
    (0..n)
        .filter(|&e| feasible(e))
        .min_by(|&a, &b| weights.greedy_order(a, b))
        .into_iter()
        .collect()
}

/// Kernel for the `k = 1` shortcut.
pub(crate) fn singleton_kernel(
    algorithm: Algorithm,
    config: &KernelConfig,
    n: usize,
    weights: &Weights,
    feasible: impl Fn(usize) -> bool,
) -> Kernel {
    let elements = best_singleton(n, weights, feasible);
    Kernel {
        round_log: vec![elements.len(); config.repeat],
        elements,
        algorithm,
        k: 1,
        seed: config.seed,
        rounds: 1,
        repeat: config.repeat,
    }
}

/// `ceil(x)` as a round count, rejecting non-finite or oversized values.
pub(crate) fn ceil_rounds(x: f64, what: &str) -> Result<usize> {
    if !x.is_finite() || x < 0.0 || x >= (u32::MAX as f64) {
        return Err(Error::RoundOverflow(format!("{what} evaluates to {x:e}")));
    }
    Ok((x.ceil() as usize).max(1))
}
