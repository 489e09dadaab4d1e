use std::cmp::Ordering;
use std::ops::Index;

/// Non-negative integer weights indexed by element id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Weights(Vec<u64>);

impl Weights {
    pub fn new(weights: Vec<u64>) -> Self {
        Weights(weights)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self, set: &[usize]) -> u64 {
        set.iter().map(|&e| self.0[e]).sum()
    }

    /// Heavier first, smaller id first among equal weights.
    pub fn greedy_order(&self, a: usize, b: usize) -> Ordering {
        self.0[b].cmp(&self.0[a]).then(a.cmp(&b))
    }

    /// All ids sorted by [`Weights::greedy_order`].
    pub fn descending_ids(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..self.0.len()).collect();
        ids.sort_by(|&a, &b| self.greedy_order(a, b));
        ids
    }

    /// Keeps the weights of `keep` (old ids, ascending) under dense new ids.
    pub fn restrict(&self, keep: &[usize]) -> Weights {
        Weights(keep.iter().map(|&e| self.0[e]).collect())
    }
}

impl Index<usize> for Weights {
    type Output = u64;

    fn index(&self, e: usize) -> &u64 {
        &self.0[e]
    }
}

impl From<Vec<u64>> for Weights {
    fn from(weights: Vec<u64>) -> Self {
        Weights(weights)
    }
}
