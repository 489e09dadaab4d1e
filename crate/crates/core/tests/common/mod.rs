//! Brute-force oracles for the integration tests. Independence is decided from
//! the plain descriptor data with textbook characterizations (leaf peeling for
//! forests, BFS component counts, backtracking assignment), never through the
//! library's own oracles.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};
use std::f64::consts::E;

use matkernel::io::MatroidSpec;
use matkernel::matroid::Matroid;
use matkernel::{AnyMatroid, Instance, InstanceBody};

pub fn subsets_up_to(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() == k {
            return;
        }
        for e in start..n {
            cur.push(e);
            go(n, k, e + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

pub fn subsets_of(domain: &[usize], k: usize) -> Vec<Vec<usize>> {
    subsets_up_to(domain.len(), k)
        .into_iter()
        .map(|s| s.into_iter().map(|i| domain[i]).collect())
        .collect()
}

pub fn mask(set: &[usize]) -> usize {
    set.iter().fold(0, |m, &e| m | (1 << e))
}

pub fn unmask(m: usize) -> Vec<usize> {
    (0..usize::BITS as usize).filter(|&e| m & (1 << e) != 0).collect()
}

/// Independence decided from the descriptor alone.
#[derive(Debug, Clone)]
pub struct Oracle {
    spec: MatroidSpec,
}

impl Oracle {
    pub fn of(m: &AnyMatroid) -> Self {
        Oracle {
            spec: MatroidSpec::from_matroid(m),
        }
    }

    pub fn independent(&self, set: &[usize]) -> bool {
        independent(&self.spec, set)
    }
}

fn independent(spec: &MatroidSpec, set: &[usize]) -> bool {
    match spec {
        MatroidSpec::Uniform { rank } => set.len() <= *rank,
        MatroidSpec::Partition { blocks, caps } => blocks
            .iter()
            .zip(caps)
            .all(|(b, &c)| set.iter().filter(|e| b.contains(e)).count() <= c),
        MatroidSpec::Graphic { edges, .. } => is_forest(set.iter().map(|&e| edges[e]).collect()),
        MatroidSpec::Cographic { vertices, edges } => {
            let all: Vec<usize> = (0..edges.len()).collect();
            let rest: Vec<usize> = all.iter().copied().filter(|e| !set.contains(e)).collect();
            components(*vertices, edges, &rest) == components(*vertices, edges, &all)
        }
        MatroidSpec::Transversal { right, adjacency } => assignable(set, adjacency, &mut vec![false; *right]),
        MatroidSpec::Laminar { sets } => sets
            .iter()
            .all(|s| set.iter().filter(|e| s.elements.contains(e)).count() <= s.cap),
        MatroidSpec::Restriction { subset, inner } => set.iter().all(|e| subset.contains(e)) && independent(inner, set),
        MatroidSpec::Truncation { bound, inner } => set.len() <= *bound && independent(inner, set),
    }
}

/// Repeatedly deletes an edge hanging off a degree-1 vertex; a forest empties.
fn is_forest(mut edges: Vec<(usize, usize)>) -> bool {
    loop {
        if edges.is_empty() {
            return true;
        }
        let degree = |v: usize, edges: &[(usize, usize)]| {
            edges
                .iter()
                .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
                .sum::<usize>()
        };
        match edges
            .iter()
            .position(|&(a, b)| a != b && (degree(a, &edges) == 1 || degree(b, &edges) == 1))
        {
            Some(i) => {
                edges.swap_remove(i);
            }
            None => return false,
        }
    }
}

fn components(vertices: usize, edges: &[(usize, usize)], keep: &[usize]) -> usize {
    let mut adj = vec![Vec::new(); vertices];
    for &e in keep {
        let (a, b) = edges[e];
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; vertices];
    let mut count = 0;
    for s in 0..vertices {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    count
}

fn assignable(set: &[usize], adjacency: &[Vec<usize>], used: &mut [bool]) -> bool {
    let Some((&first, rest)) = set.split_first() else {
        return true;
    };
    for &w in &adjacency[first] {
        if !used[w] {
            used[w] = true;
            let ok = assignable(rest, adjacency, used);
            used[w] = false;
            if ok {
                return true;
            }
        }
    }
    false
}

/// Independence of every subset of a ground set with at most 16 elements.
#[derive(Debug, Clone)]
pub struct Table {
    pub n: usize,
    pub independent: Vec<bool>,
}

impl Table {
    pub fn new(n: usize, oracle: impl Fn(&[usize]) -> bool) -> Self {
        assert!(n <= 16);
        Table {
            n,
            independent: (0..1usize << n).map(|m| oracle(&unmask(m))).collect(),
        }
    }

    pub fn of(m: &AnyMatroid) -> Self {
        let oracle = Oracle::of(m);
        Table::new(m.universe(), |s| oracle.independent(s))
    }

    pub fn indep(&self, m: usize) -> bool {
        self.independent[m]
    }

    pub fn rank(&self, m: usize) -> usize {
        (0..1usize << self.n)
            .filter(|&s| s & !m == 0 && self.independent[s])
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Elements whose addition keeps the rank.
    pub fn span(&self, m: usize) -> usize {
        let r = self.rank(m);
        (0..self.n)
            .filter(|&e| self.rank(m | (1 << e)) == r)
            .fold(0, |acc, e| acc | (1 << e))
    }

    /// The three independence axioms, checked on all pairs.
    pub fn axioms_hold(&self) -> bool {
        if !self.independent[0] {
            return false;
        }
        let sets: Vec<usize> = (0..1usize << self.n).filter(|&m| self.independent[m]).collect();
        let downward = sets
            .iter()
            .all(|&m| unmask(m).into_iter().all(|e| self.independent[m & !(1 << e)]));
        let exchange = sets.iter().all(|&a| {
            sets.iter().all(|&b| {
                a.count_ones() >= b.count_ones() || unmask(b & !a).into_iter().any(|e| self.independent[a | (1 << e)])
            })
        });
        downward && exchange
    }
}

impl Matroid for Table {
    fn universe(&self) -> usize {
        self.n
    }

    fn independent(&self, set: &[usize]) -> bool {
        self.independent[mask(set)]
    }
}

pub fn feasible(instance: &Instance, set: &[usize]) -> bool {
    match &instance.body {
        InstanceBody::Intersection { matroids } => matroids.iter().all(|m| Oracle::of(m).independent(set)),
        InstanceBody::Matching { graph, matroid } => {
            let mut ends: Vec<usize> = set
                .iter()
                .flat_map(|&e| [graph.edges()[e].0, graph.edges()[e].1])
                .collect();
            let len = ends.len();
            ends.sort_unstable();
            ends.dedup();
            ends.len() == len && Oracle::of(matroid).independent(set)
        }
    }
}

/// Feasible sets with at most `k` elements, as bitmasks.
pub fn feasible_masks(instance: &Instance, k: usize) -> Vec<usize> {
    let oracles: Vec<Oracle> = instance.matroids().into_iter().map(Oracle::of).collect();
    let graph = instance.graph().cloned();
    let ok = |s: &[usize]| {
        oracles.iter().all(|o| o.independent(s))
            && graph.as_ref().is_none_or(|g| {
                let mut ends: Vec<usize> = s.iter().flat_map(|&e| [g.edges()[e].0, g.edges()[e].1]).collect();
                let len = ends.len();
                ends.sort_unstable();
                ends.dedup();
                ends.len() == len
            })
    };
    let mut out = Vec::new();
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, ok: &dyn Fn(&[usize]) -> bool, out: &mut Vec<usize>) {
        out.push(mask(cur));
        if cur.len() == k {
            return;
        }
        for e in start..n {
            cur.push(e);
            if ok(cur) {
                go(n, k, e + 1, cur, ok, out);
            }
            cur.pop();
        }
    }
    go(instance.universe(), k, 0, &mut Vec::new(), &ok, &mut out);
    out
}

fn weight(instance: &Instance, m: usize) -> u64 {
    unmask(m).into_iter().map(|e| instance.weights[e]).sum()
}

/// Best weight of a feasible set inside `domain`.
pub fn opt(instance: &Instance, family: &[usize], domain: &[usize]) -> u64 {
    let d = mask(domain);
    family
        .iter()
        .filter(|&&m| m & !d == 0)
        .map(|&m| weight(instance, m))
        .max()
        .unwrap_or(0)
}

/// Pairs `(X, x)` with no `y` in the kernel outside `X − x`, `w(y) >= w(x)`, `X − x + y` feasible.
pub fn single_exc_violations(instance: &Instance, family: &[usize], kernel: &[usize]) -> usize {
    let feasible: HashSet<usize> = family.iter().copied().collect();
    let w = &instance.weights;
    family
        .iter()
        .map(|&m| {
            unmask(m)
                .into_iter()
                .filter(|&x| {
                    let rest = m & !(1 << x);
                    !kernel
                        .iter()
                        .any(|&y| rest & (1 << y) == 0 && w[y] >= w[x] && feasible.contains(&(rest | (1 << y))))
                })
                .count()
        })
        .sum()
}

/// Whether `X`, taken in ascending id order, has a witness sequence into `kernel`.
pub fn reachable(instance: &Instance, feasible: &HashSet<usize>, kernel: &[usize], x_set: usize) -> bool {
    fn step(
        instance: &Instance,
        feasible: &HashSet<usize>,
        kernel: &[usize],
        xs: &[usize],
        i: usize,
        current: usize,
    ) -> bool {
        if i == xs.len() {
            return true;
        }
        let x = xs[i];
        let rest = current & !(1 << x);
        kernel.iter().any(|&y| {
            rest & (1 << y) == 0
                && instance.weights[y] >= instance.weights[x]
                && feasible.contains(&(rest | (1 << y)))
                && step(instance, feasible, kernel, xs, i + 1, rest | (1 << y))
        })
    }
    step(instance, feasible, kernel, &unmask(x_set), 0, x_set)
}

pub fn reachable_kernel(instance: &Instance, family: &[usize], kernel: &[usize]) -> bool {
    let feasible = family.iter().copied().collect();
    family.iter().all(|&m| reachable(instance, &feasible, kernel, m))
}

/// `⌈(e·k)^(d−1)·ln 3k⌉`.
pub fn partition_rounds(k: usize, d: usize) -> usize {
    ((E * k as f64).powi(d as i32 - 1) * (3.0 * k as f64).ln()).ceil() as usize
}

/// `⌈4^(d−1)·ln 3k·Π g_i⌉`.
pub fn coverable_rounds(k: usize, g: &[usize]) -> usize {
    let product: f64 = g.iter().map(|&g| g as f64).product();
    (4f64.powi(g.len() as i32) * (3.0 * k as f64).ln() * product).ceil() as usize
}

/// `⌈4e·k²·ln 3k⌉`.
pub fn matching_rounds(k: usize) -> usize {
    (4.0 * E * (k * k) as f64 * (3.0 * k as f64).ln()).ceil() as usize
}

pub fn g_simple_partition(k: usize) -> usize {
    k
}

pub fn g_graphic(k: usize) -> usize {
    k * (k + 1) / 2
}

pub fn g_cographic(k: usize) -> usize {
    5 * k - 1
}

/// Failures of: for independent `T`, `X` with `|X| <= k` and `x ∈ X ∩ span(T)`,
/// some `y ∈ T \ (X − x)` has `X − x + y` independent.
pub fn span_exchange_failures(table: &Table, k: usize) -> usize {
    let sets: Vec<usize> = (0..1usize << table.n).filter(|&m| table.indep(m)).collect();
    let mut failures = 0;
    for &t in &sets {
        for &x_set in sets.iter().filter(|m| m.count_ones() as usize <= k) {
            for x in unmask(x_set) {
                let in_span = t & (1 << x) != 0 || !table.indep(t | (1 << x));
                if !in_span {
                    continue;
                }
                let rest = x_set & !(1 << x);
                if !unmask(t & !rest).into_iter().any(|y| table.indep(rest | (1 << y))) {
                    failures += 1;
                }
            }
        }
    }
    failures
}

/// Failures of the greedy exchange property over every pool `F ⊆ E`, with
/// `greedy` run on the real matroid.
pub fn greedy_exchange_failures(m: &AnyMatroid, table: &Table, weights: &matkernel::Weights, k: usize) -> usize {
    let sets: Vec<usize> = (0..1usize << table.n)
        .filter(|&s| table.indep(s) && s.count_ones() as usize <= k)
        .collect();
    let mut failures = 0;
    for pool in 0..1usize << table.n {
        let out = matkernel::greedy(m, &unmask(pool), k, weights).selected;
        for &x_set in &sets {
            for x in unmask(x_set & pool) {
                let rest = x_set & !(1 << x);
                let ok = out
                    .iter()
                    .any(|&y| rest & (1 << y) == 0 && weights[y] >= weights[x] && table.indep(rest | (1 << y)));
                if !ok {
                    failures += 1;
                }
            }
        }
    }
    failures
}

/// Failures of: greedy on `M0` over any `S` with `x ∈ S ⊆ ∩ Y_i`, where `Y_i`
/// is the largest `(X, x)`-exchangeable set of `M_i`, returns a valid `y`.
/// Returns `(failures, checked pairs)`.
pub fn common_exchange_failures(tables: &[Table], weights: &matkernel::Weights, k: usize) -> (usize, usize) {
    let n = tables[0].n;
    let feasible = |m: usize| tables.iter().all(|t| t.indep(m));
    let mut failures = 0;
    let mut checked = 0;
    for x_set in (0..1usize << n).filter(|&m| m.count_ones() as usize <= k && feasible(m)) {
        for x in unmask(x_set) {
            let rest = x_set & !(1 << x);
            let exchangeable = (0..n)
                .filter(|&y| tables[1..].iter().all(|t| t.indep(rest | (1 << y))))
                .fold(0usize, |acc, y| acc | (1 << y));
            let others = exchangeable & !(1 << x);
            let mut sub = others;
            loop {
                let pool = sub | (1 << x);
                let out = matkernel::greedy(&tables[0], &unmask(pool), k, weights).selected;
                checked += 1;
                let ok = out
                    .iter()
                    .any(|&y| rest & (1 << y) == 0 && weights[y] >= weights[x] && feasible(rest | (1 << y)));
                if !ok {
                    failures += 1;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & others;
            }
        }
    }
    (failures, checked)
}

/// Both directions of the lifted correspondence, over every subset of `U`
/// and every lifted set small enough to be feasible.
pub fn transversal_correspondence_failures(inst: &Instance) -> usize {
    let InstanceBody::Intersection { matroids } = &inst.body else {
        unreachable!()
    };
    let transversals: Vec<_> = matroids[1..]
        .iter()
        .map(|m| match m {
            AnyMatroid::Transversal(t) => t.clone(),
            _ => unreachable!(),
        })
        .collect();
    let r = matkernel::reduction::build_reduction(&matroids[0], &transversals, &inst.weights, 1 << 20).unwrap();
    let n = inst.universe();
    let lifted_ok = |s: &[usize]| {
        let mut images: Vec<usize> = s.iter().map(|&v| r.lifted.phi0()[v]).collect();
        images.sort_unstable();
        images.dedup();
        images.len() == s.len()
            && Oracle::of(&matroids[0]).independent(&images)
            && (0..transversals.len()).all(|i| {
                let mut ends: Vec<usize> = s.iter().map(|&v| r.lifted.endpoint(i, v)).collect();
                ends.sort_unstable();
                ends.dedup();
                ends.len() == s.len()
            })
    };
    let bound = transversals.iter().map(|t| t.right()).min().unwrap_or(n).min(n);
    let mut failures = 0;
    let mut images = HashSet::new();
    for s in subsets_up_to(r.lifted.len(), bound) {
        let lib = r.m0.independent(&s) && r.parts.iter().all(|p| p.independent(&s));
        if lib != lifted_ok(&s) {
            failures += 1;
        }
        if lib {
            let x = r.lifted.project(&s);
            if x.len() != s.len() || !feasible(inst, &x) || inst.weights.total(&x) != r.weights.total(&s) {
                failures += 1;
            }
            images.insert(mask(&x));
        }
    }
    for x in 0..1usize << n {
        if feasible(inst, &unmask(x)) && !images.contains(&x) {
            failures += 1;
        }
    }
    failures
}
