//! Weight-ordered greedy selection of at most `k` elements that stay
//! independent in a single matroid.

use crate::matroid::Matroid;
use crate::weights::Weights;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyResult {
    /// Selected elements in the order they were accepted.
    pub selected: Vec<usize>,
    pub pool_size: usize,
    /// Independence-oracle calls made.
    pub queries: usize,
}

/// Scans `pool` by weight descending (ties by id ascending) and keeps an element
/// whenever the selection stays independent and below `k` elements.
pub fn greedy<M: Matroid + ?Sized>(matroid: &M, pool: &[usize], k: usize, weights: &Weights) -> GreedyResult {
    let mut order = pool.to_vec();
    order.sort_by(|&a, &b| weights.greedy_order(a, b));
    order.dedup();
    greedy_in_order(matroid, &order, k)
}

/// Greedy over a pool that is already in greedy order.
pub(crate) fn greedy_in_order<M: Matroid + ?Sized>(matroid: &M, ordered: &[usize], k: usize) -> GreedyResult {
    let mut selected = Vec::with_capacity(k.min(ordered.len()));
    let mut queries = 0;
    for &f in ordered {
        if selected.len() >= k {
            break;
        }
        selected.push(f);
        queries += 1;
        if !matroid.independent(&selected) {
            selected.pop();
        }
    }
    GreedyResult {
        selected,
        pool_size: ordered.len(),
        queries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{GraphicMatroid, UniformMatroid};

    /// Max-weight independent subset of size <= k by enumeration, used to check
    /// greedy's optimality on a single matroid.
    fn best_by_enumeration<M: Matroid>(m: &M, pool: &[usize], k: usize, w: &Weights) -> u64 {
        let n = pool.len();
        (0u32..(1 << n))
            .map(|mask| {
                (0..n)
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| pool[b])
                    .collect::<Vec<_>>()
            })
            .filter(|s| s.len() <= k && m.independent(s))
            .map(|s| w.total(&s))
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn uniform_takes_top_k() {
        let w = Weights::new(vec![5, 3, 1]);
        let r = greedy(&UniformMatroid::new(3, 2), &[0, 1, 2], 2, &w);
        assert_eq!(r.selected, vec![0, 1]);
    }

    #[test]
    fn triangle_skips_cycle_edge() {
        let g = GraphicMatroid::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let w = Weights::new(vec![3, 2, 1]);
        let r = greedy(&g, &[0, 1, 2], 3, &w);
        assert_eq!(r.selected, vec![0, 1]);
        assert_eq!(w.total(&r.selected), best_by_enumeration(&g, &[0, 1, 2], 3, &w));
    }

    #[test]
    fn empty_pool() {
        let r = greedy(&UniformMatroid::new(3, 2), &[], 2, &Weights::new(vec![1, 1, 1]));
        assert!(r.selected.is_empty());
        assert_eq!(r.queries, 0);
    }

    #[test]
    fn ties_break_by_id_and_weights_never_increase() {
        let w = Weights::new(vec![2, 7, 2, 7, 1]);
        let r = greedy(&UniformMatroid::new(5, 4), &[4, 2, 3, 0, 1], 4, &w);
        assert_eq!(r.selected, vec![1, 3, 0, 2]);
        assert!(r.selected.windows(2).all(|p| w[p[0]] >= w[p[1]]));
    }

    #[test]
    fn matches_enumeration_on_k4() {
        let g = GraphicMatroid::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)]).unwrap();
        let w = Weights::new(vec![4, 9, 1, 6, 6, 3]);
        for k in 1..=4 {
            let r = greedy(&g, &[0, 1, 2, 3, 4, 5], k, &w);
            assert!(r.selected.len() <= k);
            assert!(g.independent(&r.selected));
            assert_eq!(
                w.total(&r.selected),
                best_by_enumeration(&g, &[0, 1, 2, 3, 4, 5], k, &w)
            );
        }
    }
}
