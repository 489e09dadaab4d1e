use std::fmt;

use super::{
    CographicMatroid, GraphicMatroid, LaminarFamily, LaminarMatroid, Matroid, PartitionMatroid, Restriction,
    TransversalMatroid, Truncation, UniformMatroid,
};
use crate::dsu::DisjointSets;
use crate::error::Result;

/// Class tag of a concrete matroid descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatroidClass {
    Uniform,
    Partition,
    SimplePartition,
    Graphic,
    Cographic,
    Transversal,
    Laminar,
    Restriction,
    Truncation,
}

impl fmt::Display for MatroidClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MatroidClass::Uniform => "uniform",
            MatroidClass::Partition => "partition",
            MatroidClass::SimplePartition => "simple-partition",
            MatroidClass::Graphic => "graphic",
            MatroidClass::Cographic => "cographic",
            MatroidClass::Transversal => "transversal",
            MatroidClass::Laminar => "laminar",
            MatroidClass::Restriction => "restriction",
            MatroidClass::Truncation => "truncation",
        };
        f.write_str(name)
    }
}

/// Any of the supported matroid descriptors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyMatroid {
    Uniform(UniformMatroid),
    Partition(PartitionMatroid),
    Graphic(GraphicMatroid),
    Cographic(CographicMatroid),
    Transversal(TransversalMatroid),
    Laminar(LaminarMatroid),
    Restriction(Restriction<Box<AnyMatroid>>),
    Truncation(Truncation<Box<AnyMatroid>>),
}

impl AnyMatroid {
    pub fn class(&self) -> MatroidClass {
        match self {
            AnyMatroid::Uniform(_) => MatroidClass::Uniform,
            AnyMatroid::Partition(p) if p.is_simple() => MatroidClass::SimplePartition,
            AnyMatroid::Partition(_) => MatroidClass::Partition,
            AnyMatroid::Graphic(_) => MatroidClass::Graphic,
            AnyMatroid::Cographic(_) => MatroidClass::Cographic,
            AnyMatroid::Transversal(_) => MatroidClass::Transversal,
            AnyMatroid::Laminar(_) => MatroidClass::Laminar,
            AnyMatroid::Restriction(_) => MatroidClass::Restriction,
            AnyMatroid::Truncation(_) => MatroidClass::Truncation,
        }
    }

    /// Simple partition view: a partition with unit caps, or a rank-one uniform
    /// matroid (a single block).
    pub fn as_simple_partition(&self) -> Option<PartitionMatroid> {
        match self {
            AnyMatroid::Partition(p) if p.is_simple() => Some(p.clone()),
            AnyMatroid::Uniform(u) if u.bound() == 1 => {
                PartitionMatroid::simple(u.universe(), vec![(0..u.universe()).collect()]).ok()
            }
            _ => None,
        }
    }

    /// General partition view; uniform matroids are one capped block.
    pub fn as_partition(&self) -> Option<PartitionMatroid> {
        match self {
            AnyMatroid::Partition(p) => Some(p.clone()),
            AnyMatroid::Uniform(u) => {
                PartitionMatroid::new(u.universe(), vec![(0..u.universe()).collect()], vec![u.bound()]).ok()
            }
            _ => None,
        }
    }

    /// Laminar view of laminar, partition and uniform descriptors.
    pub fn as_laminar(&self) -> Option<LaminarFamily> {
        match self {
            AnyMatroid::Laminar(l) => Some(l.family().clone()),
            AnyMatroid::Partition(_) | AnyMatroid::Uniform(_) => {
                let p = self.as_partition()?;
                let sets = p.blocks().iter().cloned().zip(p.caps().iter().copied()).collect();
                LaminarFamily::new(p.universe(), sets).ok()
            }
            _ => None,
        }
    }

    /// Deletes every element not in `keep` (ascending old ids) and renumbers the
    /// survivors densely in order. Deleting from a cographic matroid contracts
    /// the edge in its graph.
    pub fn delete(&self, keep: &[usize]) -> Result<AnyMatroid> {
        let mut new_id = vec![usize::MAX; self.universe()];
        for (i, &e) in keep.iter().enumerate() {
            new_id[e] = i;
        }
        let n = keep.len();
        Ok(match self {
            AnyMatroid::Uniform(u) => AnyMatroid::Uniform(UniformMatroid::new(n, u.bound())),
            AnyMatroid::Partition(p) => {
                let (blocks, caps): (Vec<Vec<usize>>, Vec<usize>) = p
                    .blocks()
                    .iter()
                    .zip(p.caps())
                    .map(|(b, &c)| {
                        (
                            b.iter()
                                .filter(|&&e| new_id[e] != usize::MAX)
                                .map(|&e| new_id[e])
                                .collect(),
                            c,
                        )
                    })
                    .filter(|(b, _): &(Vec<usize>, usize)| !b.is_empty())
                    .unzip();
                AnyMatroid::Partition(PartitionMatroid::new(n, blocks, caps)?)
            }
            AnyMatroid::Graphic(g) => {
                let edges = keep.iter().map(|&e| g.edges()[e]).collect();
                AnyMatroid::Graphic(GraphicMatroid::new(g.vertices(), edges)?)
            }
            AnyMatroid::Cographic(c) => {
                let mut dsu = DisjointSets::new(c.vertices());
                for (e, &(u, v)) in c.edges().iter().enumerate() {
                    if new_id[e] == usize::MAX {
                        dsu.union(u, v);
                    }
                }
                let mut label = vec![usize::MAX; c.vertices()];
                let mut next = 0;
                for v in 0..c.vertices() {
                    let r = dsu.find(v);
                    if label[r] == usize::MAX {
                        label[r] = next;
                        next += 1;
                    }
                }
                let edges = keep
                    .iter()
                    .map(|&e| {
                        let (u, v) = c.edges()[e];
                        (label[dsu.find(u)], label[dsu.find(v)])
                    })
                    .collect();
                AnyMatroid::Cographic(CographicMatroid::new(next, edges)?)
            }
            AnyMatroid::Transversal(t) => {
                let adjacency = keep.iter().map(|&e| t.adjacency()[e].clone()).collect();
                AnyMatroid::Transversal(TransversalMatroid::new(t.right(), adjacency)?)
            }
            AnyMatroid::Laminar(l) => {
                let family = l.family();
                let sets = family
                    .nodes()
                    .iter()
                    .map(|node| {
                        let kept = node
                            .elements
                            .iter()
                            .filter(|&&e| new_id[e] != usize::MAX)
                            .map(|&e| new_id[e]);
                        (kept.collect(), node.cap)
                    })
                    .collect();
                AnyMatroid::Laminar(LaminarMatroid::new(LaminarFamily::new(n, sets)?))
            }
            // elements outside the restricted ground set are never kept
            AnyMatroid::Restriction(r) => r.inner().delete(keep)?,
            AnyMatroid::Truncation(t) => {
                AnyMatroid::Truncation(Truncation::new(Box::new(t.inner().delete(keep)?), t.bound())?)
            }
        })
    }
}

impl Matroid for AnyMatroid {
    fn universe(&self) -> usize {
        match self {
            AnyMatroid::Uniform(m) => m.universe(),
            AnyMatroid::Partition(m) => m.universe(),
            AnyMatroid::Graphic(m) => m.universe(),
            AnyMatroid::Cographic(m) => m.universe(),
            AnyMatroid::Transversal(m) => m.universe(),
            AnyMatroid::Laminar(m) => m.universe(),
            AnyMatroid::Restriction(m) => m.universe(),
            AnyMatroid::Truncation(m) => m.universe(),
        }
    }

    fn contains(&self, e: usize) -> bool {
        match self {
            AnyMatroid::Restriction(m) => m.contains(e),
            AnyMatroid::Truncation(m) => m.contains(e),
            _ => e < self.universe(),
        }
    }

    fn independent(&self, set: &[usize]) -> bool {
        match self {
            AnyMatroid::Uniform(m) => m.independent(set),
            AnyMatroid::Partition(m) => m.independent(set),
            AnyMatroid::Graphic(m) => m.independent(set),
            AnyMatroid::Cographic(m) => m.independent(set),
            AnyMatroid::Transversal(m) => m.independent(set),
            AnyMatroid::Laminar(m) => m.independent(set),
            AnyMatroid::Restriction(m) => m.independent(set),
            AnyMatroid::Truncation(m) => m.independent(set),
        }
    }
}
