use super::Matroid;
use crate::error::{Error, Result};

/// `|I ∩ E^j| <= c(j)` for every block `E^j` of a partition of the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionMatroid {
    universe: usize,
    blocks: Vec<Vec<usize>>,
    caps: Vec<usize>,
    block_of: Vec<usize>,
}

impl PartitionMatroid {
    /// Blocks must cover `0..universe` disjointly. Blocks are stored sorted and
    /// ordered by their minimum element; empty blocks are kept at the end.
    pub fn new(universe: usize, blocks: Vec<Vec<usize>>, caps: Vec<usize>) -> Result<Self> {
        if blocks.len() != caps.len() {
            return Err(Error::MalformedInput(format!(
                "partition has {} blocks but {} caps",
                blocks.len(),
                caps.len()
            )));
        }
        let mut pairs: Vec<(Vec<usize>, usize)> = blocks
            .into_iter()
            .zip(caps)
            .map(|(mut b, c)| {
                b.sort_unstable();
                (b, c)
            })
            .collect();
        pairs.sort_by_key(|(b, _)| b.first().copied().unwrap_or(usize::MAX));
        let mut block_of = vec![usize::MAX; universe];
        for (j, (block, _)) in pairs.iter().enumerate() {
            for &e in block {
                if e >= universe {
                    return Err(Error::ElementOutOfRange {
                        element: e,
                        size: universe,
                    });
                }
                if block_of[e] != usize::MAX {
                    return Err(Error::DuplicateElement(e));
                }
                block_of[e] = j;
            }
        }
        if let Some(e) = block_of.iter().position(|&j| j == usize::MAX) {
            return Err(Error::MalformedInput(format!("element {e} is in no partition block")));
        }
        let (blocks, caps) = pairs.into_iter().unzip();
        Ok(PartitionMatroid {
            universe,
            blocks,
            caps,
            block_of,
        })
    }

    /// Simple partition matroid: every cap is one.
    pub fn simple(universe: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let caps = vec![1; blocks.len()];
        Self::new(universe, blocks, caps)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn caps(&self) -> &[usize] {
        &self.caps
    }

    pub fn block_of(&self, e: usize) -> usize {
        self.block_of[e]
    }

    pub fn is_simple(&self) -> bool {
        self.caps.iter().all(|&c| c == 1)
    }
}

impl Matroid for PartitionMatroid {
    fn universe(&self) -> usize {
        self.universe
    }

    fn independent(&self, set: &[usize]) -> bool {
        let mut used: Vec<(usize, usize)> = Vec::with_capacity(set.len());
        for &e in set {
            let j = self.block_of[e];
            match used.iter_mut().find(|(b, _)| *b == j) {
                Some((_, n)) => *n += 1,
                None => used.push((j, 1)),
            }
        }
        used.iter().all(|&(j, n)| n <= self.caps[j])
    }
}
