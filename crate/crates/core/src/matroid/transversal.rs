use super::Matroid;
use crate::error::{Error, Result};

/// Matchable subsets of the left side `U` of a bipartite graph `(U, W; E)`.
///
/// Element `u` is left vertex `u`; `adjacency[u]` lists its right neighbours in
/// `0..right`, sorted and without repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalMatroid {
    right: usize,
    adjacency: Vec<Vec<usize>>,
}

impl TransversalMatroid {
    pub fn new(right: usize, adjacency: Vec<Vec<usize>>) -> Result<Self> {
        let mut adjacency = adjacency;
        for (u, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if nbrs.windows(2).any(|p| p[0] == p[1]) {
                return Err(Error::MalformedInput(format!(
                    "left vertex {u} lists a neighbour twice"
                )));
            }
            if let Some(&w) = nbrs.iter().find(|&&w| w >= right) {
                return Err(Error::MalformedInput(format!(
                    "left vertex {u} is adjacent to right vertex {w} outside 0..{right}"
                )));
            }
        }
        Ok(TransversalMatroid { right, adjacency })
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    /// Size of a maximum matching of `set` into the right side (Kuhn's
    /// augmenting paths).
    pub fn matching_size(&self, set: &[usize]) -> usize {
        let mut owner = vec![usize::MAX; self.right];
        let mut matched = 0;
        for (slot, &u) in set.iter().enumerate() {
            let mut visited = vec![false; self.right];
            if self.augment(set, slot, u, &mut owner, &mut visited) {
                matched += 1;
            }
        }
        matched
    }

    fn augment(&self, set: &[usize], slot: usize, u: usize, owner: &mut [usize], visited: &mut [bool]) -> bool {
        for &w in &self.adjacency[u] {
            if visited[w] {
                continue;
            }
            visited[w] = true;
            let prev = owner[w];
            if prev == usize::MAX || self.augment(set, prev, set[prev], owner, visited) {
                owner[w] = slot;
                return true;
            }
        }
        false
    }
}

impl Matroid for TransversalMatroid {
    fn universe(&self) -> usize {
        self.adjacency.len()
    }

    fn independent(&self, set: &[usize]) -> bool {
        if set.len() > self.right {
            return false;
        }
        let mut owner = vec![usize::MAX; self.right];
        for (slot, &u) in set.iter().enumerate() {
            let mut visited = vec![false; self.right];
            if !self.augment(set, slot, u, &mut owner, &mut visited) {
                return false;
            }
        }
        true
    }
}
