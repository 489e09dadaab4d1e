//! Matroid-constrained matchings: feasible sets are matchings of a graph that
//! are independent in a matroid over its edges.

use std::f64::consts::E;

use rand::Rng;

use crate::error::{Error, Result};
use crate::greedy::greedy_in_order;
use crate::kernel::{ceil_rounds, run_rounds, singleton_kernel, Algorithm, Kernel, KernelConfig};
use crate::matroid::Matroid;
use crate::weights::Weights;

/// Undirected graph whose edges are the elements; parallel edges are distinct
/// elements, self-loops are rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= vertices || v >= vertices {
                return Err(Error::MalformedInput(format!(
                    "edge {i} ({u}, {v}) has an endpoint outside 0..{vertices}"
                )));
            }
            if u == v {
                return Err(Error::MalformedInput(format!("edge {i} is a self-loop at vertex {u}")));
            }
        }
        Ok(Graph { vertices, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// No two edges of `set` share an endpoint.
    pub fn is_matching(&self, set: &[usize]) -> bool {
        let mut used = Vec::with_capacity(2 * set.len());
        for &e in set {
            let (u, v) = self.edges[e];
            used.push(u);
            used.push(v);
        }
        used.sort_unstable();
        used.windows(2).all(|p| p[0] != p[1])
    }

    /// `E(S)`: edges with both endpoints in `s`, ascending.
    pub fn induced_edges(&self, s: &[bool]) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| s[self.edges[e].0] && s[self.edges[e].1])
            .collect()
    }
}

/// A graph, a matroid over its edges and edge weights.
#[derive(Debug, Clone)]
pub struct MatchingInstance<M> {
    pub graph: Graph,
    pub matroid: M,
    pub weights: Weights,
}

impl<M: Matroid> MatchingInstance<M> {
    pub fn new(graph: Graph, matroid: M, weights: Weights) -> Result<Self> {
        let m = graph.edges.len();
        if matroid.universe() != m {
            return Err(Error::MalformedInput(format!(
                "matroid ground set has size {}, graph has {m} edges",
                matroid.universe()
            )));
        }
        if weights.len() != m {
            return Err(Error::MalformedInput(format!(
                "{} weights for {m} edges",
                weights.len()
            )));
        }
        Ok(MatchingInstance {
            graph,
            matroid,
            weights,
        })
    }

    pub fn is_feasible(&self, set: &[usize]) -> bool {
        self.graph.is_matching(set) && self.matroid.independent(set)
    }
}

/// `⌈4e·k²·ln(3k)⌉`.
pub fn default_rounds_matching(k: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::InvalidParameter(
            "default round count needs k >= 2; use the k = 1 shortcut".into(),
        ));
    }
    let kf = k as f64;
    ceil_rounds(4.0 * E * kf * kf * (3.0 * kf).ln(), "matching round count")
}

/// Per round, keeps each vertex with probability `1/(2k)` and runs greedy on
/// the matroid over the edges with both endpoints kept.
pub fn matching_kernel<M: Matroid>(instance: &MatchingInstance<M>, config: &KernelConfig) -> Result<Kernel> {
    config.check()?;
    let n = instance.graph.edges.len();
    if config.k == 1 {
        return Ok(singleton_kernel(
            Algorithm::Matching,
            config,
            n,
            &instance.weights,
            |e| instance.matroid.independent(&[e]),
        ));
    }
    let rounds = match config.rounds {
        Some(t) => t,
        None => default_rounds_matching(config.k)?,
    };
    let denominator = u32::try_from(2 * config.k)
        .map_err(|_| Error::InvalidParameter(format!("k = {} is too large to sample with", config.k)))?;
    let order = instance.weights.descending_ids();
    let (elements, round_log) = run_rounds(n, config.seed, config.repeat, rounds, |streams| {
        let mut rng = streams.rng(0);
        let s: Vec<bool> = (0..instance.graph.vertices)
            .map(|_| rng.gen_ratio(1, denominator))
            .collect();
        let pool: Vec<usize> = order
            .iter()
            .copied()
            .filter(|&e| {
                let (u, v) = instance.graph.edges[e];
                s[u] && s[v]
            })
            .collect();
        greedy_in_order(&instance.matroid, &pool, config.k).selected
    });
    Ok(Kernel {
        elements,
        algorithm: Algorithm::Matching,
        k: config.k,
        seed: config.seed,
        rounds,
        repeat: config.repeat,
        round_log,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{PartitionMatroid, UniformMatroid};

    fn path4() -> MatchingInstance<UniformMatroid> {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        MatchingInstance::new(g, UniformMatroid::new(3, 2), Weights::new(vec![3, 2, 1])).unwrap()
    }

    #[test]
    fn round_counts() {
        // ⌈16e·ln 6⌉ = ⌈77.91⌉ and ⌈36e·ln 9⌉ = ⌈215.0⌉
        assert_eq!(default_rounds_matching(2).unwrap(), 78);
        assert_eq!(default_rounds_matching(3).unwrap(), 216);
        assert!(default_rounds_matching(1).is_err());
    }

    #[test]
    fn self_loops_and_bad_endpoints_are_rejected() {
        assert!(Graph::new(2, vec![(1, 1)]).is_err());
        assert!(Graph::new(2, vec![(0, 2)]).is_err());
        assert!(Graph::new(2, vec![(0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn matching_checks() {
        let inst = path4();
        assert!(inst.is_feasible(&[0, 2]));
        assert!(!inst.is_feasible(&[0, 1]));
        assert_eq!(inst.graph.induced_edges(&[true, true, true, false]), vec![0, 1]);
    }

    #[test]
    fn rainbow_feasibility_is_coloured_matching() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]).unwrap();
        let colours = PartitionMatroid::simple(6, vec![vec![0, 2], vec![1, 4], vec![3, 5]]).unwrap();
        let inst = MatchingInstance::new(g, colours, Weights::new(vec![1; 6])).unwrap();
        for mask in 0u64..64 {
            let set = crate::set::from_mask(mask);
            let distinct_colours = {
                let mut c: Vec<usize> = set.iter().map(|&e| inst.matroid.block_of(e)).collect();
                c.sort_unstable();
                c.windows(2).all(|p| p[0] != p[1])
            };
            let disjoint = set.iter().enumerate().all(|(i, &a)| {
                set[i + 1..].iter().all(|&b| {
                    let (p, q) = inst.graph.edges()[a];
                    let (r, s) = inst.graph.edges()[b];
                    p != r && p != s && q != r && q != s
                })
            });
            assert_eq!(inst.is_feasible(&set), distinct_colours && disjoint);
        }
    }

    #[test]
    fn size_bound_and_k_one() {
        let inst = path4();
        let kernel = matching_kernel(&inst, &KernelConfig::new(2, 8)).unwrap();
        assert_eq!(kernel.rounds, 78);
        assert!(kernel.len() <= 2 * 78);
        assert!(kernel.round_log.iter().all(|&s| s <= 2));
        assert_eq!(
            matching_kernel(&inst, &KernelConfig::new(1, 8)).unwrap().elements,
            vec![0]
        );
        let twice = matching_kernel(&inst, &KernelConfig::new(2, 8).with_repeat(2)).unwrap();
        assert_eq!(twice.round_log.len(), 156);
    }
}
