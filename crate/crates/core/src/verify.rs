//! Brute-force checks for small instances: feasible-set enumeration, exact
//! optima, single-exchange and reachability checks, success-rate estimates
//! and coverability audits.

use rustc_hash::FxHashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::kernel::derive_seed;
use crate::laminar::DisjointFamily;
use crate::matroid::{LaminarFamily, Matroid};
use crate::set::{from_mask, to_mask};
use crate::weights::Weights;

/// Size limits for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_elements: usize,
    pub max_k: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_elements: 40,
            max_k: 5,
        }
    }
}

impl Budget {
    pub fn check(&self, n: usize, k: usize) -> Result<()> {
        let max = self.max_elements.min(64);
        if n > max {
            return Err(Error::GroundSetTooLarge { size: n, max });
        }
        if k > self.max_k {
            return Err(Error::Budget(format!(
                "k = {k} exceeds the enumeration limit {}",
                self.max_k
            )));
        }
        Ok(())
    }
}

/// Every feasible set of size at most `k`, as bit masks.
#[derive(Debug, Clone)]
pub struct FeasibleFamily {
    universe: usize,
    k: usize,
    /// In enumeration order (id-ordered backtracking), starting with the empty set.
    masks: Vec<u64>,
    lookup: FxHashSet<u64>,
}

impl FeasibleFamily {
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.lookup.contains(&mask)
    }

    pub fn contains(&self, set: &[usize]) -> bool {
        self.contains_mask(to_mask(set))
    }

    pub fn sets(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.masks.iter().map(|&m| from_mask(m))
    }
}

/// Enumerates the feasible sets of size at most `k` by id-ordered backtracking;
/// a branch stops as soon as its set is infeasible.
pub fn enumerate_feasible(instance: &Instance, k: usize, budget: &Budget) -> Result<FeasibleFamily> {
    let n = instance.universe();
    budget.check(n, k)?;
    fn extend(instance: &Instance, n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<u64>) {
        out.push(to_mask(current));
        if current.len() == k {
            return;
        }
        for e in start..n {
            current.push(e);
            if instance.is_feasible(current) {
                extend(instance, n, k, e + 1, current, out);
            }
            current.pop();
        }
    }
    let mut masks = Vec::new();
    extend(instance, n, k, 0, &mut Vec::new(), &mut masks);
    let lookup = masks.iter().copied().collect();
    Ok(FeasibleFamily {
        universe: n,
        k,
        masks,
        lookup,
    })
}

/// Maximum weight of a feasible set of size at most `k` inside `domain`, with
/// one such set. Zero-weight elements are never added to the returned set.
pub fn opt_value(instance: &Instance, domain: &[usize], k: usize, budget: &Budget) -> Result<(u64, Vec<usize>)> {
    budget.check(domain.len(), k)?;
    let w = &instance.weights;
    let mut order = domain.to_vec();
    order.sort_by(|&a, &b| w.greedy_order(a, b));
    order.dedup();

    struct Search<'a> {
        instance: &'a Instance,
        order: &'a [usize],
        k: usize,
        best: u64,
        best_set: Vec<usize>,
    }
    impl Search<'_> {
        fn go(&mut self, start: usize, current: &mut Vec<usize>, value: u64) {
            if value > self.best {
                self.best = value;
                self.best_set = current.clone();
            }
            let room = self.k - current.len();
            if room == 0 {
                return;
            }
            for i in start..self.order.len() {
                // order is by weight descending, so this bounds every completion
                let bound: u64 = self.order[i..]
                    .iter()
                    .take(room)
                    .map(|&e| self.instance.weights[e])
                    .sum();
                if value + bound <= self.best {
                    return;
                }
                let e = self.order[i];
                current.push(e);
                if self.instance.is_feasible(current) {
                    self.go(i + 1, current, value + self.instance.weights[e]);
                }
                current.pop();
            }
        }
    }
    let mut search = Search {
        instance,
        order: &order,
        k,
        best: 0,
        best_set: Vec::new(),
    };
    search.go(0, &mut Vec::new(), 0);
    let mut set = search.best_set;
    set.sort_unstable();
    Ok((search.best, set))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeViolation {
    pub set: Vec<usize>,
    pub element: usize,
}

/// Outcome of checking one kernel against the enumerated feasible sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub kernel_size: usize,
    pub feasible_sets: usize,
    pub single_exc_violations: Vec<ExchangeViolation>,
    pub reachability_failures: Vec<Vec<usize>>,
    pub opt_full: u64,
    pub opt_kernel: u64,
    pub trials: usize,
    pub successes: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.single_exc_violations.is_empty() && self.reachability_failures.is_empty()
    }

    pub fn success_fraction(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.successes as f64 / self.trials as f64
        }
    }
}

/// Exhaustive checker bound to one instance; the feasible family is built once.
#[derive(Debug, Clone)]
pub struct Verifier<'a> {
    instance: &'a Instance,
    family: FeasibleFamily,
}

impl<'a> Verifier<'a> {
    pub fn new(instance: &'a Instance, budget: &Budget) -> Result<Self> {
        let family = enumerate_feasible(instance, instance.k, budget)?;
        Ok(Verifier { instance, family })
    }

    pub fn family(&self) -> &FeasibleFamily {
        &self.family
    }

    fn weights(&self) -> &Weights {
        &self.instance.weights
    }

    /// Best feasible weight inside `domain`.
    pub fn opt_within(&self, domain: &[usize]) -> u64 {
        let d = to_mask(domain);
        let w = self.weights();
        self.family
            .masks
            .iter()
            .filter(|&&m| m & !d == 0)
            .map(|&m| w.total(&from_mask(m)))
            .max()
            .unwrap_or(0)
    }

    /// Pairs `(X, x)` for which no `y ∈ R \ (X − x)` with `w(y) >= w(x)` keeps
    /// `X − x + y` feasible.
    pub fn single_exc_violations(&self, kernel: &[usize]) -> Vec<ExchangeViolation> {
        let w = self.weights();
        let mut out = Vec::new();
        for &mask in &self.family.masks {
            for x in from_mask(mask) {
                let rest = mask & !(1u64 << x);
                let ok = kernel
                    .iter()
                    .any(|&y| rest & (1u64 << y) == 0 && w[y] >= w[x] && self.family.contains_mask(rest | (1u64 << y)));
                if !ok {
                    out.push(ExchangeViolation {
                        set: from_mask(mask),
                        element: x,
                    });
                }
            }
        }
        out
    }

    /// Witness `y_1, …, y_t` for `X` listed in ascending id order, or the
    /// 0-based step at which every choice fails.
    ///
    /// At step `i` the set `{y_1, …, y_i, x_{i+1}, …, x_t}` must have size `t`
    /// and be feasible, with `w(y_i) >= w(x_i)`. Earlier choices are revisited
    /// when a later step gets stuck, so a failure means no witness exists.
    pub fn reachability(&self, kernel: &[usize], x_set: &[usize]) -> std::result::Result<Vec<usize>, usize> {
        let mut xs = x_set.to_vec();
        xs.sort_unstable();
        let w = self.weights();
        let mut candidates = kernel.to_vec();
        candidates.sort_by(|&a, &b| w.greedy_order(a, b));
        let mut witness = Vec::with_capacity(xs.len());
        let mut deepest = 0;
        if self.search(&xs, &candidates, to_mask(&xs), &mut witness, &mut deepest) {
            Ok(witness)
        } else {
            Err(deepest)
        }
    }

    fn search(
        &self,
        xs: &[usize],
        candidates: &[usize],
        current: u64,
        witness: &mut Vec<usize>,
        deepest: &mut usize,
    ) -> bool {
        let i = witness.len();
        if i == xs.len() {
            return true;
        }
        *deepest = (*deepest).max(i);
        let x = xs[i];
        let w = self.weights();
        let rest = current & !(1u64 << x);
        for &y in candidates {
            if w[y] < w[x] {
                break;
            }
            let next = rest | (1u64 << y);
            if rest & (1u64 << y) != 0 || !self.family.contains_mask(next) {
                continue;
            }
            witness.push(y);
            if self.search(xs, candidates, next, witness, deepest) {
                return true;
            }
            witness.pop();
        }
        false
    }

    /// Feasible sets with no witness sequence into `kernel`.
    pub fn reachability_failures(&self, kernel: &[usize]) -> Vec<Vec<usize>> {
        self.family
            .masks
            .iter()
            .map(|&m| from_mask(m))
            .filter(|x| self.reachability(kernel, x).is_err())
            .collect()
    }

    /// Whether every feasible set reaches `kernel`.
    pub fn is_reachable_kernel(&self, kernel: &[usize]) -> bool {
        self.family
            .masks
            .iter()
            .all(|&m| self.reachability(kernel, &from_mask(m)).is_ok())
    }

    pub fn report(&self, kernel: &[usize]) -> VerificationReport {
        let single_exc_violations = self.single_exc_violations(kernel);
        let reachability_failures = self.reachability_failures(kernel);
        let success = reachability_failures.is_empty();
        VerificationReport {
            kernel_size: kernel.len(),
            feasible_sets: self.family.len(),
            single_exc_violations,
            reachability_failures,
            opt_full: self.opt_within(&(0..self.family.universe).collect::<Vec<_>>()),
            opt_kernel: self.opt_within(kernel),
            trials: 1,
            successes: usize::from(success),
        }
    }
}

/// Violations of the single-exchange condition for `kernel`.
pub fn check_single_exc(instance: &Instance, kernel: &[usize], budget: &Budget) -> Result<VerificationReport> {
    Ok(Verifier::new(instance, budget)?.report(kernel))
}

/// Witness sequence for one feasible `X`; see [`Verifier::reachability`].
pub fn check_reachability(
    instance: &Instance,
    kernel: &[usize],
    x_set: &[usize],
    budget: &Budget,
) -> Result<std::result::Result<Vec<usize>, usize>> {
    Ok(Verifier::new(instance, budget)?.reachability(kernel, x_set))
}

/// Aggregate of repeated seeded kernel runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuccessEstimate {
    pub trials: usize,
    /// Runs whose kernel is reachable from every feasible set.
    pub successes: usize,
    /// Successful runs whose kernel optimum differs from the full optimum.
    pub opt_mismatches: usize,
    pub max_kernel_size: usize,
}

impl SuccessEstimate {
    pub fn fraction(&self) -> f64 {
        self.successes as f64 / self.trials.max(1) as f64
    }
}

/// Runs `algorithm` with `trials` seeds derived from `seed`, in parallel, and
/// counts runs that pass the full reachability check.
pub fn estimate_success_rate<F>(
    instance: &Instance,
    trials: usize,
    seed: u64,
    budget: &Budget,
    algorithm: F,
) -> Result<SuccessEstimate>
where
    F: Fn(u64) -> Result<Vec<usize>> + Sync,
{
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let verifier = Verifier::new(instance, budget)?;
    let opt_full = verifier.opt_within(&(0..instance.universe()).collect::<Vec<_>>());
    let runs = (0..trials)
        .into_par_iter()
        .map(|t| {
            let kernel = algorithm(derive_seed(seed, t as u64))?;
            let ok = verifier.is_reachable_kernel(&kernel);
            let mismatch = ok && verifier.opt_within(&kernel) != opt_full;
            Ok((ok, mismatch, kernel.len()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SuccessEstimate {
        trials,
        successes: runs.iter().filter(|r| r.0).count(),
        opt_mismatches: runs.iter().filter(|r| r.1).count(),
        max_kernel_size: runs.iter().map(|r| r.2).max().unwrap_or(0),
    })
}

/// Largest cover found by [`check_coverable`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverabilityAudit {
    pub max_cover: usize,
    /// An independent set attaining `max_cover`.
    pub witness: Vec<usize>,
    pub claimed_g: usize,
    pub holds: bool,
}

/// For every independent `X` with `|X| <= k`, the smallest cover of `span(X)`
/// by singleton spans uses one element per parallel class inside `span(X)`.
/// Reports the largest such cover and whether it stays within `claimed_g`.
pub fn check_coverable<M: Matroid + ?Sized>(
    matroid: &M,
    k: usize,
    claimed_g: usize,
    budget: &Budget,
) -> Result<CoverabilityAudit> {
    let n = matroid.universe();
    budget.check(n, k)?;
    let classes = matroid.parallel_classes()?;
    let mut class_of = vec![0; n];
    for (c, class) in classes.iter().enumerate() {
        for &e in class {
            class_of[e] = c;
        }
    }
    let mut independents = Vec::new();
    fn extend<M: Matroid + ?Sized>(
        m: &M,
        n: usize,
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(cur.clone());
        if cur.len() == k {
            return;
        }
        for e in start..n {
            cur.push(e);
            if m.independent(cur) {
                extend(m, n, k, e + 1, cur, out);
            }
            cur.pop();
        }
    }
    extend(matroid, n, k, 0, &mut Vec::new(), &mut independents);
    let covers: Vec<usize> = independents
        .par_iter()
        .map(|x| {
            let mut seen: Vec<usize> = matroid.span_unchecked(x).into_iter().map(|e| class_of[e]).collect();
            seen.sort_unstable();
            seen.dedup();
            seen.len()
        })
        .collect();
    let (best, &max_cover) = covers
        .iter()
        .enumerate()
        .max_by_key(|&(i, c)| (c, std::cmp::Reverse(i)))
        .unwrap_or((0, &0));
    Ok(CoverabilityAudit {
        max_cover,
        witness: independents[best].clone(),
        claimed_g,
        holds: max_cover <= claimed_g,
    })
}

fn is_tight(family: &LaminarFamily, node: usize, rest: &[usize]) -> bool {
    let a = &family.node(node).elements;
    rest.iter().filter(|e| a.binary_search(e).is_ok()).count() == family.node(node).cap
}

/// The member of `z` containing `x`, provided `X` misses every other member.
pub fn x_containing_member(family: &LaminarFamily, z: &DisjointFamily, x_set: &[usize], x: usize) -> Option<usize> {
    let z0 = *z
        .members
        .iter()
        .find(|&&m| family.node(m).elements.binary_search(&x).is_ok())?;
    let others_clear = z
        .members
        .iter()
        .filter(|&&m| m != z0)
        .all(|&m| x_set.iter().all(|e| family.node(m).elements.binary_search(e).is_err()));
    others_clear.then_some(z0)
}

/// Both good-family conditions for `(X, x)`: an `x`-containing member exists,
/// and no tight set contains a member.
pub fn good_family_check(family: &LaminarFamily, z: &DisjointFamily, x_set: &[usize], x: usize) -> bool {
    if x_containing_member(family, z, x_set, x).is_none() {
        return false;
    }
    let rest: Vec<usize> = x_set.iter().copied().filter(|&e| e != x).collect();
    z.members.iter().all(|&m| {
        std::iter::once(m)
            .chain(family.ancestors(m))
            .all(|a| !is_tight(family, a, &rest))
    })
}

/// Largest cap of a tight set inside the `x`-containing member, or `None` when
/// there is no such member or no such tight set.
pub fn phi(family: &LaminarFamily, z: &DisjointFamily, x_set: &[usize], x: usize) -> Option<usize> {
    let z0 = x_containing_member(family, z, x_set, x)?;
    let rest: Vec<usize> = x_set.iter().copied().filter(|&e| e != x).collect();
    let mut stack = vec![z0];
    let mut best = None;
    while let Some(id) = stack.pop() {
        if is_tight(family, id, &rest) {
            best = best.max(Some(family.node(id).cap));
        }
        stack.extend(family.node(id).children.iter().copied());
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{normalize_laminar, AnyMatroid, GraphicMatroid, PartitionMatroid, UniformMatroid};

    fn budget() -> Budget {
        Budget::default()
    }

    fn intersection(matroids: Vec<AnyMatroid>, weights: Vec<u64>, k: usize) -> Instance {
        Instance::intersection(matroids, Weights::new(weights), k).unwrap()
    }

    fn triangle_and_blocks() -> Instance {
        intersection(
            vec![
                AnyMatroid::Graphic(GraphicMatroid::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()),
                AnyMatroid::Partition(PartitionMatroid::simple(3, vec![vec![0], vec![1, 2]]).unwrap()),
            ],
            vec![1, 1, 1],
            2,
        )
    }

    /// Every subset of size <= k that is feasible, by direct filtering.
    fn naive_family(instance: &Instance, k: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0u64..(1 << instance.universe()))
            .map(from_mask)
            .filter(|s| s.len() <= k && instance.is_feasible(s))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn enumeration_examples() {
        let rank_one = intersection(
            vec![
                AnyMatroid::Uniform(UniformMatroid::new(2, 1)),
                AnyMatroid::Uniform(UniformMatroid::new(2, 1)),
            ],
            vec![1, 1],
            2,
        );
        let mut sets: Vec<_> = enumerate_feasible(&rank_one, 2, &budget()).unwrap().sets().collect();
        sets.sort();
        assert_eq!(sets, vec![vec![], vec![0], vec![1]]);

        let inst = triangle_and_blocks();
        let mut sets: Vec<_> = enumerate_feasible(&inst, 2, &budget()).unwrap().sets().collect();
        sets.sort();
        assert_eq!(sets, vec![vec![], vec![0], vec![0, 1], vec![0, 2], vec![1], vec![2]]);
        assert_eq!(sets, naive_family(&inst, 2));
    }

    #[test]
    fn enumeration_matches_naive_filter() {
        let g = GraphicMatroid::new(
            5,
            vec![
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 4),
                (0, 2),
                (1, 3),
                (2, 4),
                (0, 3),
                (1, 4),
                (0, 1),
                (2, 2),
            ],
        )
        .unwrap();
        let p = PartitionMatroid::new(
            12,
            vec![(0..4).collect(), (4..9).collect(), (9..12).collect()],
            vec![2, 1, 2],
        )
        .unwrap();
        let inst = intersection(vec![AnyMatroid::Graphic(g), AnyMatroid::Partition(p)], vec![1; 12], 4);
        let mut sets: Vec<_> = enumerate_feasible(&inst, 4, &budget()).unwrap().sets().collect();
        sets.sort();
        assert_eq!(sets, naive_family(&inst, 4));
    }

    #[test]
    fn budget_refusals() {
        let inst = intersection(vec![AnyMatroid::Uniform(UniformMatroid::new(50, 2))], vec![1; 50], 2);
        let err = enumerate_feasible(&inst, 2, &budget()).unwrap_err();
        assert!(err.is_budget());
        let small = intersection(vec![AnyMatroid::Uniform(UniformMatroid::new(5, 2))], vec![1; 5], 2);
        assert!(enumerate_feasible(&small, 6, &budget()).unwrap_err().is_budget());
    }

    #[test]
    fn opt_examples() {
        let inst = intersection(
            vec![
                AnyMatroid::Uniform(UniformMatroid::new(4, 2)),
                AnyMatroid::Partition(PartitionMatroid::simple(4, vec![vec![0, 1], vec![2, 3]]).unwrap()),
            ],
            vec![4, 3, 2, 1],
            2,
        );
        assert_eq!(opt_value(&inst, &[0, 1, 2, 3], 2, &budget()).unwrap(), (6, vec![0, 2]));
        assert_eq!(opt_value(&inst, &[], 2, &budget()).unwrap().0, 0);
        let v = Verifier::new(&inst, &budget()).unwrap();
        assert_eq!(v.opt_within(&[0, 1, 2, 3]), 6);
        assert_eq!(v.opt_within(&[1, 3]), 4);
        assert_eq!(opt_value(&inst, &[1, 3], 2, &budget()).unwrap().0, 4);
    }

    #[test]
    fn single_exc_examples() {
        let inst = triangle_and_blocks();
        let v = Verifier::new(&inst, &budget()).unwrap();
        assert!(v.single_exc_violations(&[0, 1, 2]).is_empty());
        assert!(!v.single_exc_violations(&[]).is_empty());

        let rank_one = intersection(vec![AnyMatroid::Uniform(UniformMatroid::new(2, 1))], vec![5, 3], 1);
        let v = Verifier::new(&rank_one, &budget()).unwrap();
        assert_eq!(
            v.single_exc_violations(&[1]),
            vec![ExchangeViolation {
                set: vec![0],
                element: 0
            }]
        );
    }

    #[test]
    fn reachability_examples() {
        let inst = triangle_and_blocks();
        let v = Verifier::new(&inst, &budget()).unwrap();
        assert_eq!(v.reachability(&[0, 1], &[0, 1]), Ok(vec![0, 1]));
        assert_eq!(v.reachability(&[], &[]), Ok(vec![]));
        assert_eq!(v.reachability(&[2], &[0, 1]), Err(0));
        // {0,2} reaches {0,1} by swapping 2 -> 1
        assert_eq!(v.reachability(&[0, 1], &[0, 2]), Ok(vec![0, 1]));
    }

    #[test]
    fn reachability_skips_infeasible_choices() {
        // 0 -> 1 would put two elements in block {1,3}, so 0 -> 2 is taken
        let m = PartitionMatroid::new(4, vec![vec![0, 1, 2, 3]], vec![2]).unwrap();
        let blocks = PartitionMatroid::simple(4, vec![vec![0, 2], vec![1, 3]]).unwrap();
        let inst = intersection(
            vec![AnyMatroid::Partition(m), AnyMatroid::Partition(blocks)],
            vec![5, 5, 5, 1],
            2,
        );
        let v = Verifier::new(&inst, &budget()).unwrap();
        assert_eq!(v.reachability(&[1, 2], &[0, 3]), Ok(vec![2, 1]));
        let w = v.reachability(&[1, 2], &[0, 3]).unwrap();
        assert!(inst.is_feasible(&w));
    }

    #[test]
    fn full_kernel_reaches_everything() {
        let inst = triangle_and_blocks();
        let report = check_single_exc(&inst, &[0, 1, 2], &budget()).unwrap();
        assert!(report.passed());
        assert_eq!(report.opt_kernel, report.opt_full);
        let est = estimate_success_rate(&inst, 10, 1, &budget(), |_| Ok(vec![0, 1, 2])).unwrap();
        assert_eq!(est.fraction(), 1.0);
    }

    #[test]
    fn coverability_examples() {
        let p = PartitionMatroid::simple(9, vec![vec![0, 1, 2], vec![3, 4], vec![5], vec![6, 7, 8]]).unwrap();
        for k in 1..=4 {
            assert!(check_coverable(&p, k, k, &budget()).unwrap().holds);
        }
        let u = UniformMatroid::new(30, 4);
        let audit = check_coverable(&u, 4, 20, &budget()).unwrap();
        assert!(!audit.holds);
        assert_eq!(audit.max_cover, 30);
        assert_eq!(audit.witness.len(), 4);
        let looped = GraphicMatroid::new(2, vec![(0, 0)]).unwrap();
        assert!(check_coverable(&looped, 1, 1, &budget()).is_err());
    }

    #[test]
    fn good_family_examples() {
        let raw = LaminarFamily::new(6, vec![(vec![0, 1, 2], 1), (vec![3, 4, 5], 2)]).unwrap();
        let f = normalize_laminar(&raw, 2, true).unwrap();
        let top = DisjointFamily::top(&f);
        assert!(good_family_check(&f, &top, &[0, 3], 3));
        let node = |set: &[usize]| f.nodes().iter().position(|n| n.elements == set).unwrap();
        // {1} is disjoint from X but lies in {0,1,2}, which is tight for X − x = {0}
        let z = DisjointFamily::new(vec![node(&[1]), node(&[3, 4, 5])]);
        assert!(!good_family_check(&f, &z, &[0, 3], 3));
        // both members meet X
        let z = DisjointFamily::new(vec![node(&[0, 1, 2]), node(&[3, 4, 5])]);
        assert!(!good_family_check(&f, &z, &[0, 3], 3));
        assert_eq!(phi(&f, &top, &[0, 3], 3), Some(1));
        assert_eq!(phi(&f, &top, &[3], 3), None);
    }

    #[test]
    fn report_serializes() {
        let inst = triangle_and_blocks();
        let report = check_single_exc(&inst, &[0], &budget()).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"single_exc_violations\""));
        assert!(!report.passed());
    }
}
