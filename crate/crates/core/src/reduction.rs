//! Transversal matroids reduced to simple partition matroids on a lifted
//! ground set.
//!
//! Every element `u` is split into one copy per choice of incident edges
//! `(e_1, …, e_{d−1})`, one edge in each bipartite graph. Copies of `u` are
//! parallel in the lifted `M0`, and in the `i`-th lifted matroid two copies
//! conflict exactly when their chosen edges share a right vertex.

use crate::error::{Error, Result};
use crate::kernel::{singleton_kernel, Algorithm, Kernel, KernelConfig};
use crate::matroid::{LiftedMatroid, Matroid, PartitionMatroid, TransversalMatroid};
use crate::sampling::partition_kernel;
use crate::weights::Weights;

/// Largest lifted ground set built by default.
pub const DEFAULT_LIFT_CAP: usize = 10_000_000;

/// The lifted ground set `V` with its projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedGroundSet {
    phi0: Vec<usize>,
    /// `endpoints[i][v]`: right vertex of the edge that copy `v` picks in graph `i`.
    endpoints: Vec<Vec<usize>>,
}

impl LiftedGroundSet {
    pub fn len(&self) -> usize {
        self.phi0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phi0.is_empty()
    }

    /// Original element of each copy.
    pub fn phi0(&self) -> &[usize] {
        &self.phi0
    }

    pub fn endpoint(&self, matroid: usize, v: usize) -> usize {
        self.endpoints[matroid][v]
    }

    /// `(u, w_1, …, w_{d−1})` for copy `v`, where `u w_i` is the chosen edge.
    pub fn tuple(&self, v: usize) -> (usize, Vec<usize>) {
        (self.phi0[v], self.endpoints.iter().map(|e| e[v]).collect())
    }

    /// Distinct original elements of `set`, sorted.
    pub fn project(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&v| self.phi0[v]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Lifted instance: `M0′`, the simple partition matroids `M_i′` and `w′`.
#[derive(Debug, Clone)]
pub struct Reduction<'a, M: ?Sized> {
    pub lifted: LiftedGroundSet,
    pub m0: LiftedMatroid<&'a M>,
    pub parts: Vec<PartitionMatroid>,
    pub weights: Weights,
}

/// `Σ_u Π_i deg_i(u)`, saturating.
pub fn lifted_size(transversals: &[TransversalMatroid], universe: usize) -> u128 {
    (0..universe)
        .map(|u| {
            transversals
                .iter()
                .fold(1u128, |acc, t| acc.saturating_mul(t.degree(u) as u128))
        })
        .fold(0u128, u128::saturating_add)
}

fn check_shapes<M: Matroid + ?Sized>(m0: &M, transversals: &[TransversalMatroid], weights: &Weights) -> Result<usize> {
    let n = m0.universe();
    if weights.len() != n {
        return Err(Error::MalformedInput(format!(
            "{} weights for a ground set of size {n}",
            weights.len()
        )));
    }
    if transversals.is_empty() {
        return Err(Error::InvalidParameter("need at least one structured matroid".into()));
    }
    if let Some(t) = transversals.iter().find(|t| t.universe() != n) {
        return Err(Error::MalformedInput(format!(
            "transversal matroid has ground set size {}, expected {n}",
            t.universe()
        )));
    }
    Ok(n)
}

/// Builds the lifted instance, refusing when `|V| > cap`.
pub fn build_reduction<'a, M: Matroid + ?Sized>(
    m0: &'a M,
    transversals: &[TransversalMatroid],
    weights: &Weights,
    cap: usize,
) -> Result<Reduction<'a, M>> {
    let n = check_shapes(m0, transversals, weights)?;
    let size = lifted_size(transversals, n);
    if size > cap as u128 {
        return Err(Error::LiftTooLarge { size, cap });
    }
    let size = size as usize;
    let mut phi0 = Vec::with_capacity(size);
    let mut endpoints = vec![Vec::with_capacity(size); transversals.len()];
    let mut choice = vec![0usize; transversals.len()];
    for u in 0..n {
        if transversals.iter().any(|t| t.degree(u) == 0) {
            continue;
        }
        choice.iter_mut().for_each(|c| *c = 0);
        // odometer over the incident edges, last graph fastest
        'tuples: loop {
            phi0.push(u);
            for (i, t) in transversals.iter().enumerate() {
                endpoints[i].push(t.adjacency()[u][choice[i]]);
            }
            for i in (0..transversals.len()).rev() {
                choice[i] += 1;
                if choice[i] < transversals[i].degree(u) {
                    continue 'tuples;
                }
                choice[i] = 0;
            }
            break;
        }
    }
    let lifted_n = phi0.len();
    let parts = transversals
        .iter()
        .zip(&endpoints)
        .map(|(t, ends)| {
            let mut blocks = vec![Vec::new(); t.right()];
            for (v, &w) in ends.iter().enumerate() {
                blocks[w].push(v);
            }
            blocks.retain(|b| !b.is_empty());
            PartitionMatroid::simple(lifted_n, blocks)
        })
        .collect::<Result<Vec<_>>>()?;
    let lifted_weights = Weights::new(phi0.iter().map(|&u| weights[u]).collect());
    let lifted = LiftedGroundSet { phi0, endpoints };
    let m0 = LiftedMatroid::new(m0, lifted.phi0.clone())?;
    Ok(Reduction {
        lifted,
        m0,
        parts,
        weights: lifted_weights,
    })
}

/// Kernel for `M0` intersected with transversal matroids, with the default lift cap.
pub fn transversal_kernel<M: Matroid + ?Sized>(
    m0: &M,
    transversals: &[TransversalMatroid],
    weights: &Weights,
    config: &KernelConfig,
) -> Result<Kernel> {
    transversal_kernel_with_cap(m0, transversals, weights, config, DEFAULT_LIFT_CAP)
}

/// Runs the partition kernel on the lifted instance and projects the result.
pub fn transversal_kernel_with_cap<M: Matroid + ?Sized>(
    m0: &M,
    transversals: &[TransversalMatroid],
    weights: &Weights,
    config: &KernelConfig,
    cap: usize,
) -> Result<Kernel> {
    config.check()?;
    let n = check_shapes(m0, transversals, weights)?;
    if config.k == 1 {
        return Ok(singleton_kernel(Algorithm::Transversal, config, n, weights, |e| {
            m0.independent(&[e]) && transversals.iter().all(|t| t.degree(e) > 0)
        }));
    }
    let reduction = build_reduction(m0, transversals, weights, cap)?;
    let lifted = partition_kernel(&reduction.m0, &reduction.parts, &reduction.weights, config)?;
    Ok(Kernel {
        elements: reduction.lifted.project(&lifted.elements),
        algorithm: Algorithm::Transversal,
        ..lifted
    })
}

/// Transversal form of a partition matroid: block `j` gets `c(j)` fresh right
/// vertices, numbered consecutively in block order, and each of its elements
/// is adjacent to all of them.
pub fn partition_to_transversal(partition: &PartitionMatroid) -> Result<TransversalMatroid> {
    let mut adjacency = vec![Vec::new(); partition.universe()];
    let mut next = 0;
    for (block, &cap) in partition.blocks().iter().zip(partition.caps()) {
        if block.is_empty() {
            continue;
        }
        if cap == 0 {
            return Err(Error::Normalization(format!(
                "block {block:?} has cap 0, so its elements are loops"
            )));
        }
        for &e in block {
            adjacency[e] = (next..next + cap).collect();
        }
        next += cap;
    }
    TransversalMatroid::new(next, adjacency)
}
