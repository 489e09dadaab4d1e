//! Laminar families stored as a capacity-labelled forest, and the laminar
//! matroid `|I ∩ A| <= c(A)` for every member `A`.

use std::collections::BTreeSet;

use super::Matroid;
use crate::error::{Error, Result};

pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaminarNode {
    /// Sorted element ids of the set.
    pub elements: Vec<usize>,
    pub cap: usize,
    pub parent: Option<NodeId>,
    /// Children ordered by minimum element id.
    pub children: Vec<NodeId>,
}

/// A laminar family over `0..universe` plus the loop elements removed from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaminarFamily {
    universe: usize,
    nodes: Vec<LaminarNode>,
    roots: Vec<NodeId>,
    /// Deepest node containing each element.
    deepest: Vec<Option<NodeId>>,
    loops: Vec<usize>,
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

impl LaminarFamily {
    /// Builds the forest from `(set, cap)` pairs. Empty sets are ignored and a
    /// set listed twice keeps its smallest cap.
    pub fn new(universe: usize, sets: Vec<(Vec<usize>, usize)>) -> Result<Self> {
        Self::with_loops(universe, sets, Vec::new())
    }

    fn with_loops(universe: usize, sets: Vec<(Vec<usize>, usize)>, loops: Vec<usize>) -> Result<Self> {
        let mut cleaned: Vec<(Vec<usize>, usize)> = Vec::with_capacity(sets.len());
        for (mut set, cap) in sets {
            set.sort_unstable();
            if let Some(p) = set.windows(2).find(|p| p[0] == p[1]) {
                return Err(Error::DuplicateElement(p[0]));
            }
            if let Some(&e) = set.iter().find(|&&e| e >= universe) {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    size: universe,
                });
            }
            if !set.is_empty() {
                cleaned.push((set, cap));
            }
        }
        cleaned.sort_by(|a, b| {
            b.0.len()
                .cmp(&a.0.len())
                .then_with(|| a.0.cmp(&b.0))
                .then(a.1.cmp(&b.1))
        });
        cleaned.dedup_by(|later, earlier| later.0 == earlier.0);

        for i in 0..cleaned.len() {
            for j in i + 1..cleaned.len() {
                let (a, b) = (&cleaned[i].0, &cleaned[j].0);
                let common = intersection_size(a, b);
                if common != 0 && common != b.len() {
                    return Err(Error::MalformedInput(format!(
                        "sets {a:?} and {b:?} are neither nested nor disjoint"
                    )));
                }
            }
        }

        let mut nodes: Vec<LaminarNode> = Vec::with_capacity(cleaned.len());
        let mut deepest: Vec<Option<NodeId>> = vec![None; universe];
        let mut roots = Vec::new();
        for (set, cap) in cleaned {
            let id = nodes.len();
            let parent = deepest[set[0]];
            match parent {
                Some(p) => nodes[p].children.push(id),
                None => roots.push(id),
            }
            for &e in &set {
                deepest[e] = Some(id);
            }
            nodes.push(LaminarNode {
                elements: set,
                cap,
                parent,
                children: Vec::new(),
            });
        }
        let min_of = |nodes: &[LaminarNode], id: NodeId| nodes[id].elements[0];
        for id in 0..nodes.len() {
            let mut children = std::mem::take(&mut nodes[id].children);
            children.sort_by_key(|&c| min_of(&nodes, c));
            nodes[id].children = children;
        }
        roots.sort_by_key(|&r| min_of(&nodes, r));
        let mut loops = loops;
        loops.sort_unstable();
        loops.dedup();
        Ok(LaminarFamily {
            universe,
            nodes,
            roots,
            deepest,
            loops,
        })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn nodes(&self) -> &[LaminarNode] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &LaminarNode {
        &self.nodes[id]
    }

    pub fn roots(&self) -> &[NodeId] {
        &self.roots
    }

    /// Elements removed as loops during normalization.
    pub fn loops(&self) -> &[usize] {
        &self.loops
    }

    pub fn deepest(&self, e: usize) -> Option<NodeId> {
        self.deepest[e]
    }

    /// Ancestors of `id`, nearest first, excluding `id` itself.
    pub fn ancestors(&self, id: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        std::iter::successors(self.nodes[id].parent, move |&p| self.nodes[p].parent)
    }

    /// `(set, cap)` pairs in canonical order (by size descending, then ids).
    pub fn sets(&self) -> Vec<(Vec<usize>, usize)> {
        self.nodes.iter().map(|n| (n.elements.clone(), n.cap)).collect()
    }

    /// Single root covering every non-loop element with cap at most `k`, a cap-one
    /// singleton for every non-loop element, positive caps, and caps that never
    /// decrease from child to parent.
    pub fn is_normalized(&self, k: usize) -> bool {
        let ground: Vec<usize> = (0..self.universe)
            .filter(|e| self.loops.binary_search(e).is_err())
            .collect();
        if ground.is_empty() {
            return self.nodes.is_empty();
        }
        if self.roots.len() != 1 {
            return false;
        }
        let root = &self.nodes[self.roots[0]];
        if root.elements != ground || root.cap > k {
            return false;
        }
        let singletons_ok = ground
            .iter()
            .all(|&e| self.deepest[e].is_some_and(|d| self.nodes[d].elements.len() == 1 && self.nodes[d].cap == 1));
        let caps_ok = self
            .nodes
            .iter()
            .all(|n| n.cap > 0 && n.parent.is_none_or(|p| self.nodes[p].cap >= n.cap));
        singletons_ok && caps_ok
    }
}

/// Brings a family into the shape the laminar kernel works with.
///
/// Cap-zero members make their elements loops: they are removed from every set
/// and recorded in [`LaminarFamily::loops`], or rejected when `strict`. Caps are
/// clamped to `k`, the ground set is added as a root with cap `k` (or its
/// existing cap if smaller), every element gets a cap-one singleton, and any
/// member whose cap exceeds a superset's cap is dropped since that superset
/// already implies its constraint.
pub fn normalize_laminar(family: &LaminarFamily, k: usize, strict: bool) -> Result<LaminarFamily> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let mut loops: BTreeSet<usize> = family.loops.iter().copied().collect();
    for node in &family.nodes {
        if node.cap == 0 {
            if strict {
                return Err(Error::Normalization(format!(
                    "set {:?} has cap 0, so its elements are loops",
                    node.elements
                )));
            }
            loops.extend(node.elements.iter().copied());
        }
    }
    let ground: Vec<usize> = (0..family.universe).filter(|e| !loops.contains(e)).collect();
    let mut sets: Vec<(Vec<usize>, usize)> = family
        .nodes
        .iter()
        .filter(|n| n.cap > 0)
        .map(|n| {
            let kept: Vec<usize> = n.elements.iter().copied().filter(|e| !loops.contains(e)).collect();
            (kept, n.cap.min(k))
        })
        .filter(|(s, _)| s.len() > 1)
        .collect();
    if !ground.is_empty() && !sets.iter().any(|(s, _)| *s == ground) {
        sets.push((ground.clone(), k));
    }
    sets.extend(ground.iter().map(|&e| (vec![e], 1)));
    let loops: Vec<usize> = loops.into_iter().collect();
    let staged = LaminarFamily::with_loops(family.universe, sets, loops.clone())?;

    let keep: Vec<(Vec<usize>, usize)> = (0..staged.nodes.len())
        .filter(|&id| {
            staged
                .ancestors(id)
                .all(|a| staged.nodes[a].cap >= staged.nodes[id].cap)
        })
        .map(|id| (staged.nodes[id].elements.clone(), staged.nodes[id].cap))
        .collect();
    LaminarFamily::with_loops(family.universe, keep, loops)
}

/// `I` is independent iff it avoids the family's loops and `|I ∩ A| <= c(A)`
/// for every member `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaminarMatroid {
    family: LaminarFamily,
}

impl LaminarMatroid {
    pub fn new(family: LaminarFamily) -> Self {
        LaminarMatroid { family }
    }

    pub fn family(&self) -> &LaminarFamily {
        &self.family
    }
}

impl Matroid for LaminarMatroid {
    fn universe(&self) -> usize {
        self.family.universe
    }

    fn independent(&self, set: &[usize]) -> bool {
        let mut counts: Vec<(NodeId, usize)> = Vec::new();
        for &e in set {
            if self.family.loops.binary_search(&e).is_ok() {
                return false;
            }
            let mut node = self.family.deepest[e];
            while let Some(id) = node {
                let count = match counts.iter_mut().find(|(n, _)| *n == id) {
                    Some((_, c)) => {
                        *c += 1;
                        *c
                    }
                    None => {
                        counts.push((id, 1));
                        1
                    }
                };
                if count > self.family.nodes[id].cap {
                    return false;
                }
                node = self.family.nodes[id].parent;
            }
        }
        true
    }
}
