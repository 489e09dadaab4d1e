//! Problem instances: weights, the parameter `k`, and either a list of matroids
//! (index 0 is the arbitrary `M0`) or a graph with one matroid over its edges.

use crate::error::{Error, Result};
use crate::matching::{Graph, MatchingInstance};
use crate::matroid::{AnyMatroid, Matroid};
use crate::weights::Weights;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceBody {
    Intersection { matroids: Vec<AnyMatroid> },
    Matching { graph: Graph, matroid: AnyMatroid },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub weights: Weights,
    pub k: usize,
    pub body: InstanceBody,
}

/// Elements removed by [`Instance::normalize`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NormalizationReport {
    /// Original ids of the removed loops.
    pub dropped: Vec<usize>,
    /// `original_ids[new] = old` for the surviving elements.
    pub original_ids: Vec<usize>,
}

impl NormalizationReport {
    pub fn is_identity(&self) -> bool {
        self.dropped.is_empty()
    }

    /// Maps a set of normalized ids back to the original ids.
    pub fn to_original(&self, set: &[usize]) -> Vec<usize> {
        set.iter().map(|&e| self.original_ids[e]).collect()
    }
}

impl Instance {
    pub fn intersection(matroids: Vec<AnyMatroid>, weights: Weights, k: usize) -> Result<Self> {
        if matroids.is_empty() {
            return Err(Error::MalformedInput(
                "an intersection instance needs at least one matroid".into(),
            ));
        }
        let n = weights.len();
        if let Some((i, m)) = matroids.iter().enumerate().find(|(_, m)| m.universe() != n) {
            return Err(Error::MalformedInput(format!(
                "matroid {i} has ground set size {}, but there are {n} weights",
                m.universe()
            )));
        }
        Self::check_k(k)?;
        Ok(Instance {
            weights,
            k,
            body: InstanceBody::Intersection { matroids },
        })
    }

    pub fn matching(graph: Graph, matroid: AnyMatroid, weights: Weights, k: usize) -> Result<Self> {
        let n = weights.len();
        if graph.edges().len() != n || matroid.universe() != n {
            return Err(Error::MalformedInput(format!(
                "graph has {} edges and the matroid {} elements, but there are {n} weights",
                graph.edges().len(),
                matroid.universe()
            )));
        }
        Self::check_k(k)?;
        Ok(Instance {
            weights,
            k,
            body: InstanceBody::Matching { graph, matroid },
        })
    }

    fn check_k(k: usize) -> Result<()> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        Ok(())
    }

    pub fn universe(&self) -> usize {
        self.weights.len()
    }

    /// Number of matroids in the intersection, or 1 for a matching instance.
    pub fn d(&self) -> usize {
        match &self.body {
            InstanceBody::Intersection { matroids } => matroids.len(),
            InstanceBody::Matching { .. } => 1,
        }
    }

    pub fn matroids(&self) -> Vec<&AnyMatroid> {
        match &self.body {
            InstanceBody::Intersection { matroids } => matroids.iter().collect(),
            InstanceBody::Matching { matroid, .. } => vec![matroid],
        }
    }

    pub fn graph(&self) -> Option<&Graph> {
        match &self.body {
            InstanceBody::Matching { graph, .. } => Some(graph),
            InstanceBody::Intersection { .. } => None,
        }
    }

    pub fn is_matching(&self) -> bool {
        matches!(self.body, InstanceBody::Matching { .. })
    }

    /// Independent in every matroid (and a matching, for matching instances).
    /// Does not look at `k`.
    pub fn is_feasible(&self, set: &[usize]) -> bool {
        match &self.body {
            InstanceBody::Intersection { matroids } => matroids.iter().all(|m| m.independent(set)),
            InstanceBody::Matching { graph, matroid } => graph.is_matching(set) && matroid.independent(set),
        }
    }

    /// The matching view of a matching instance.
    pub fn as_matching(&self) -> Option<MatchingInstance<&AnyMatroid>> {
        match &self.body {
            InstanceBody::Matching { graph, matroid } => Some(MatchingInstance {
                graph: graph.clone(),
                matroid,
                weights: self.weights.clone(),
            }),
            InstanceBody::Intersection { .. } => None,
        }
    }

    /// Removes every element that is a loop in some matroid and renumbers the
    /// rest densely, keeping their relative order.
    pub fn normalize(&self) -> Result<(Instance, NormalizationReport)> {
        let n = self.universe();
        let matroids = self.matroids();
        let (keep, dropped): (Vec<usize>, Vec<usize>) =
            (0..n).partition(|&e| matroids.iter().all(|m| m.independent(&[e])));
        let report = NormalizationReport {
            dropped,
            original_ids: keep.clone(),
        };
        if report.is_identity() {
            return Ok((self.clone(), report));
        }
        let weights = self.weights.restrict(&keep);
        let body = match &self.body {
            InstanceBody::Intersection { matroids } => InstanceBody::Intersection {
                matroids: matroids.iter().map(|m| m.delete(&keep)).collect::<Result<_>>()?,
            },
            InstanceBody::Matching { graph, matroid } => InstanceBody::Matching {
                graph: Graph::new(graph.vertices(), keep.iter().map(|&e| graph.edges()[e]).collect())?,
                matroid: matroid.delete(&keep)?,
            },
        };
        Ok((
            Instance {
                weights,
                k: self.k,
                body,
            },
            report,
        ))
    }
}
