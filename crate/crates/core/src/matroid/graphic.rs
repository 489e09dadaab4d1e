use super::Matroid;
use crate::dsu::DisjointSets;
use crate::error::{Error, Result};

fn check_edges(vertices: usize, edges: &[(usize, usize)]) -> Result<()> {
    for (i, &(u, v)) in edges.iter().enumerate() {
        if u >= vertices || v >= vertices {
            return Err(Error::MalformedInput(format!(
                "edge {i} = ({u}, {v}) references a vertex outside 0..{vertices}"
            )));
        }
    }
    Ok(())
}

/// Forests of a multigraph; element `i` is edge `edges[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphicMatroid {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphicMatroid {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        check_edges(vertices, &edges)?;
        Ok(GraphicMatroid { vertices, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

impl Matroid for GraphicMatroid {
    fn universe(&self) -> usize {
        self.edges.len()
    }

    fn independent(&self, set: &[usize]) -> bool {
        if set.len() >= self.vertices.max(1) {
            return set.is_empty();
        }
        let mut dsu = DisjointSets::new(self.vertices);
        set.iter().all(|&e| {
            let (u, v) = self.edges[e];
            dsu.union(u, v)
        })
    }
}

/// Bonds-free sets of a multigraph: `S` is independent iff `G - S` keeps the
/// component count of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CographicMatroid {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    components: usize,
}

impl CographicMatroid {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        check_edges(vertices, &edges)?;
        let mut dsu = DisjointSets::new(vertices);
        for &(u, v) in &edges {
            dsu.union(u, v);
        }
        let components = dsu.components();
        Ok(CographicMatroid {
            vertices,
            edges,
            components,
        })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Connected components of the full graph, fixed at construction.
    pub fn components(&self) -> usize {
        self.components
    }
}

impl Matroid for CographicMatroid {
    fn universe(&self) -> usize {
        self.edges.len()
    }

    fn independent(&self, set: &[usize]) -> bool {
        if set.is_empty() {
            return true;
        }
        let mut removed = vec![false; self.edges.len()];
        for &e in set {
            removed[e] = true;
        }
        let mut dsu = DisjointSets::new(self.vertices);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if !removed[i] {
                dsu.union(u, v);
                if dsu.components() == self.components {
                    return true;
                }
            }
        }
        dsu.components() == self.components
    }
}
