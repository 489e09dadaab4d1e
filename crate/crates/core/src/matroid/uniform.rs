use super::Matroid;

/// All sets of size at most `rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformMatroid {
    universe: usize,
    rank: usize,
}

impl UniformMatroid {
    pub fn new(universe: usize, rank: usize) -> Self {
        UniformMatroid { universe, rank }
    }

    pub fn bound(&self) -> usize {
        self.rank
    }
}

impl Matroid for UniformMatroid {
    fn universe(&self) -> usize {
        self.universe
    }

    fn independent(&self, set: &[usize]) -> bool {
        set.len() <= self.rank
    }
}
