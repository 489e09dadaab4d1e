//! Matroids given by independence oracles.
//!
//! Every concrete class stores its descriptor and answers [`Matroid::independent`]
//! directly; rank, span and parallel classes are derived from the oracle alone so
//! they behave identically for every class.

mod any;
mod graphic;
mod laminar;
mod partition;
mod transversal;
mod uniform;
mod wrappers;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};

pub use any::{AnyMatroid, MatroidClass};
pub use graphic::{CographicMatroid, GraphicMatroid};
pub use laminar::{normalize_laminar, LaminarFamily, LaminarMatroid, LaminarNode, NodeId};
pub use partition::PartitionMatroid;
pub use transversal::TransversalMatroid;
pub use uniform::UniformMatroid;
pub use wrappers::{LiftedMatroid, Restriction, Truncation};

/// Largest ground set [`check_matroid_axioms`] will enumerate.
pub const AXIOM_CHECK_MAX_ELEMENTS: usize = 16;

/// An independence oracle over element ids `0..universe()`.
///
/// `independent` is the unchecked hot path: callers pass distinct ids that lie in
/// the ground set. The provided methods validate their input and report
/// [`Error::ElementOutOfRange`] and friends.
pub trait Matroid: Send + Sync {
    /// Ids of this matroid are drawn from `0..universe()`.
    fn universe(&self) -> usize;

    /// Whether `e` belongs to the ground set. Restrictions override this.
    fn contains(&self, e: usize) -> bool {
        e < self.universe()
    }

    fn independent(&self, set: &[usize]) -> bool;

    /// Ground set in ascending id order.
    fn elements(&self) -> Vec<usize> {
        (0..self.universe()).filter(|&e| self.contains(e)).collect()
    }

    fn validate(&self, set: &[usize]) -> Result<()> {
        let mut seen = set.to_vec();
        seen.sort_unstable();
        for pair in seen.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateElement(pair[0]));
            }
        }
        for &e in set {
            if e >= self.universe() {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    size: self.universe(),
                });
            }
            if !self.contains(e) {
                return Err(Error::NotInGroundSet(e));
            }
        }
        Ok(())
    }

    fn is_independent(&self, set: &[usize]) -> Result<bool> {
        self.validate(set)?;
        Ok(self.independent(set))
    }

    /// A maximal independent subset of `set`, grown in the order given.
    /// Makes exactly `set.len()` oracle calls.
    fn basis_of(&self, set: &[usize]) -> Vec<usize> {
        let mut basis = Vec::new();
        for &e in set {
            basis.push(e);
            if !self.independent(&basis) {
                basis.pop();
            }
        }
        basis
    }

    fn rank(&self, set: &[usize]) -> Result<usize> {
        self.validate(set)?;
        Ok(self.basis_of(set).len())
    }

    /// `{ e | rank(S + e) = rank(S) }`, using one basis of `S` plus one probe per
    /// element outside `S`.
    fn span(&self, set: &[usize]) -> Result<Vec<usize>> {
        self.validate(set)?;
        Ok(self.span_unchecked(set))
    }

    fn span_unchecked(&self, set: &[usize]) -> Vec<usize> {
        let mut basis = self.basis_of(set);
        let mut in_set = vec![false; self.universe()];
        for &e in set {
            in_set[e] = true;
        }
        let mut out = Vec::new();
        for e in self.elements() {
            if in_set[e] {
                out.push(e);
                continue;
            }
            basis.push(e);
            if !self.independent(&basis) {
                out.push(e);
            }
            basis.pop();
        }
        out
    }

    /// Ids whose singleton is dependent.
    fn loops(&self) -> Vec<usize> {
        self.elements()
            .into_iter()
            .filter(|&e| !self.independent(&[e]))
            .collect()
    }

    /// Parallel classes in order of their minimum id; each class is sorted.
    ///
    /// Uses pairwise dependence tests. In a loopless matroid the classes are the
    /// singleton spans and partition the ground set.
    fn parallel_classes(&self) -> Result<Vec<Vec<usize>>> {
        let elements = self.elements();
        if let Some(&e) = elements.iter().find(|&&e| !self.independent(&[e])) {
            return Err(Error::Normalization(format!("element {e} is a loop")));
        }
        let mut assigned = vec![false; self.universe()];
        let mut classes = Vec::new();
        for (i, &e) in elements.iter().enumerate() {
            if assigned[e] {
                continue;
            }
            assigned[e] = true;
            let mut class = vec![e];
            for &f in &elements[i + 1..] {
                if !assigned[f] && !self.independent(&[e, f]) {
                    assigned[f] = true;
                    class.push(f);
                }
            }
            classes.push(class);
        }
        Ok(classes)
    }

    /// One representative (the minimum id) per parallel class.
    fn parallel_representatives(&self) -> Result<Vec<usize>> {
        Ok(self.parallel_classes()?.into_iter().map(|class| class[0]).collect())
    }
}

impl<M: Matroid + ?Sized> Matroid for &M {
    fn universe(&self) -> usize {
        (**self).universe()
    }
    fn contains(&self, e: usize) -> bool {
        (**self).contains(e)
    }
    fn independent(&self, set: &[usize]) -> bool {
        (**self).independent(set)
    }
}

impl<M: Matroid + ?Sized> Matroid for Box<M> {
    fn universe(&self) -> usize {
        (**self).universe()
    }
    fn contains(&self, e: usize) -> bool {
        (**self).contains(e)
    }
    fn independent(&self, set: &[usize]) -> bool {
        (**self).independent(set)
    }
}

impl<M: Matroid + ?Sized> Matroid for Arc<M> {
    fn universe(&self) -> usize {
        (**self).universe()
    }
    fn contains(&self, e: usize) -> bool {
        (**self).contains(e)
    }
    fn independent(&self, set: &[usize]) -> bool {
        (**self).independent(set)
    }
}

/// Wraps an oracle and counts independence calls.
#[derive(Debug)]
pub struct CountingOracle<M> {
    inner: M,
    calls: AtomicUsize,
}

impl<M: Matroid> CountingOracle<M> {
    pub fn new(inner: M) -> Self {
        CountingOracle {
            inner,
            calls: AtomicUsize::new(0),
        }
    }

    pub fn calls(&self) -> usize {
        self.calls.load(Ordering::Relaxed)
    }

    pub fn reset(&self) {
        self.calls.store(0, Ordering::Relaxed);
    }
}

impl<M: Matroid> Matroid for CountingOracle<M> {
    fn universe(&self) -> usize {
        self.inner.universe()
    }
    fn contains(&self, e: usize) -> bool {
        self.inner.contains(e)
    }
    fn independent(&self, set: &[usize]) -> bool {
        self.calls.fetch_add(1, Ordering::Relaxed);
        self.inner.independent(set)
    }
}

/// An explicitly listed family of subsets, at most 64 elements.
///
/// Not necessarily a matroid; this is the input type for axiom checks on
/// hand-built families.
#[derive(Debug, Clone)]
pub struct SetSystem {
    universe: usize,
    family: std::collections::HashSet<u64>,
}

impl SetSystem {
    pub fn new(universe: usize, sets: &[Vec<usize>]) -> Result<Self> {
        if universe > 64 {
            return Err(Error::GroundSetTooLarge {
                size: universe,
                max: 64,
            });
        }
        let mut family = std::collections::HashSet::new();
        for set in sets {
            if let Some(&e) = set.iter().find(|&&e| e >= universe) {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    size: universe,
                });
            }
            family.insert(crate::set::to_mask(set));
        }
        Ok(SetSystem { universe, family })
    }
}

impl Matroid for SetSystem {
    fn universe(&self) -> usize {
        self.universe
    }
    fn independent(&self, set: &[usize]) -> bool {
        self.family.contains(&crate::set::to_mask(set))
    }
}

/// Exhaustively checks non-emptiness, downward closure and the exchange axiom.
///
/// Exchange is checked in its rank form: for every independent `I`, the set
/// `I` plus all elements that cannot extend it must have rank `|I|`. A failing
/// exchange pair `(X, Y)` puts `X` inside `Y ∪ N(Y)`, so the two are equivalent.
pub fn check_matroid_axioms<M: Matroid + ?Sized>(matroid: &M) -> Result<bool> {
    let ground = matroid.elements();
    let m = ground.len();
    if m > AXIOM_CHECK_MAX_ELEMENTS {
        return Err(Error::GroundSetTooLarge {
            size: m,
            max: AXIOM_CHECK_MAX_ELEMENTS,
        });
    }
    let subsets = 1usize << m;
    let members = |mask: usize| -> Vec<usize> { (0..m).filter(|&b| mask & (1 << b) != 0).map(|b| ground[b]).collect() };
    let independent: Vec<bool> = (0..subsets).map(|mask| matroid.independent(&members(mask))).collect();
    if !independent[0] {
        return Ok(false);
    }
    for mask in 1..subsets {
        if !independent[mask] {
            continue;
        }
        for b in 0..m {
            if mask & (1 << b) != 0 && !independent[mask ^ (1 << b)] {
                return Ok(false);
            }
        }
    }
    // rank of every subset by dynamic programming over the lowest element
    let mut rank = vec![0usize; subsets];
    for mask in 1..subsets {
        rank[mask] = if independent[mask] {
            mask.count_ones() as usize
        } else {
            (0..m)
                .filter(|&b| mask & (1 << b) != 0)
                .map(|b| rank[mask ^ (1 << b)])
                .max()
                .unwrap_or(0)
        };
    }
    for mask in 0..subsets {
        if !independent[mask] {
            continue;
        }
        let mut closure = mask;
        for b in 0..m {
            if mask & (1 << b) == 0 && !independent[mask | (1 << b)] {
                closure |= 1 << b;
            }
        }
        if rank[closure] != mask.count_ones() as usize {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn multigraph() -> GraphicMatroid {
        // e0 = {a,b}, e1 = {a,b}, e2 = {b,c}
        GraphicMatroid::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn span_in_multigraph() {
        let m = multigraph();
        assert_eq!(m.span(&[0]).unwrap(), vec![0, 1]);
        assert_eq!(m.span(&[0, 2]).unwrap(), vec![0, 1, 2]);
        assert_eq!(m.span(&[]).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn parallel_representatives_pick_min_id() {
        assert_eq!(multigraph().parallel_representatives().unwrap(), vec![0, 2]);
        let partition = PartitionMatroid::new(5, vec![vec![3, 1], vec![0, 4], vec![2]], vec![1, 1, 1]).unwrap();
        assert_eq!(partition.parallel_representatives().unwrap(), vec![0, 1, 2]);
        let uniform = UniformMatroid::new(4, 2);
        assert_eq!(uniform.parallel_representatives().unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn parallel_classes_reject_loops() {
        let g = GraphicMatroid::new(2, vec![(0, 0), (0, 1)]).unwrap();
        assert!(matches!(g.parallel_representatives(), Err(Error::Normalization(_))));
        assert_eq!(g.loops(), vec![0]);
    }

    #[test]
    fn rank_examples() {
        let u = UniformMatroid::new(5, 2);
        assert_eq!(u.rank(&[0, 1, 2, 3, 4]).unwrap(), 2);
        assert_eq!(u.rank(&[]).unwrap(), 0);
        let triangle = GraphicMatroid::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(triangle.rank(&[0, 1, 2]).unwrap(), 2);
    }

    #[test]
    fn out_of_range_is_malformed() {
        let u = UniformMatroid::new(3, 2);
        assert_eq!(
            u.is_independent(&[0, 3]),
            Err(Error::ElementOutOfRange { element: 3, size: 3 })
        );
        assert_eq!(u.rank(&[1, 1]), Err(Error::DuplicateElement(1)));
        assert!(u.span(&[7]).is_err());
    }

    #[test]
    fn oracle_budget_of_rank_and_span() {
        let g =
            CountingOracle::new(GraphicMatroid::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)]).unwrap());
        g.rank(&[0, 1, 2, 3]).unwrap();
        assert_eq!(g.calls(), 4);
        g.reset();
        g.span(&[0, 1]).unwrap();
        assert!(g.calls() <= 2 + 6, "span used {} calls", g.calls());
    }

    #[test]
    fn axioms_reject_non_matroids() {
        // a=0, b=1, c=2: no exchange from {a,b} into {c}
        let family = SetSystem::new(3, &[vec![], vec![0], vec![1], vec![0, 1], vec![2]]).unwrap();
        assert!(!check_matroid_axioms(&family).unwrap());
        let not_closed = SetSystem::new(2, &[vec![], vec![0, 1]]).unwrap();
        assert!(!check_matroid_axioms(&not_closed).unwrap());
        let empty = SetSystem::new(2, &[]).unwrap();
        assert!(!check_matroid_axioms(&empty).unwrap());
    }

    #[test]
    fn axioms_accept_concrete_classes() {
        assert!(check_matroid_axioms(&UniformMatroid::new(6, 3)).unwrap());
        assert!(check_matroid_axioms(&multigraph()).unwrap());
        let k4 = vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)];
        assert!(check_matroid_axioms(&CographicMatroid::new(4, k4).unwrap()).unwrap());
    }

    #[test]
    fn axiom_check_refuses_large_ground_sets() {
        let u = UniformMatroid::new(17, 3);
        assert_eq!(
            check_matroid_axioms(&u),
            Err(Error::GroundSetTooLarge { size: 17, max: 16 })
        );
    }
}
