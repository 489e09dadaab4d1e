//! JSON instance and kernel files.
//!
//! Documents are written with sorted keys and canonical id order, so equal
//! instances give equal bytes; the kernel file records the SHA-256 digest of
//! those bytes.

use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::instance::{Instance, InstanceBody};
use crate::kernel::{Algorithm, Kernel};
use crate::matching::Graph;
use crate::matroid::{
    AnyMatroid, CographicMatroid, GraphicMatroid, LaminarFamily, LaminarMatroid, PartitionMatroid, Restriction,
    TransversalMatroid, Truncation, UniformMatroid,
};
use crate::weights::Weights;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceKind {
    Intersection,
    Matching,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub version: u32,
    pub kind: InstanceKind,
    pub n: usize,
    pub k: usize,
    pub weights: Vec<u64>,
    /// Index 0 is `M0`. A matching instance has exactly one matroid.
    pub matroids: Vec<MatroidSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpec {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LaminarSetSpec {
    pub elements: Vec<usize>,
    pub cap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum MatroidSpec {
    Uniform {
        rank: usize,
    },
    Partition {
        blocks: Vec<Vec<usize>>,
        caps: Vec<usize>,
    },
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Cographic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Transversal {
        right: usize,
        adjacency: Vec<Vec<usize>>,
    },
    Laminar {
        sets: Vec<LaminarSetSpec>,
    },
    Restriction {
        subset: Vec<usize>,
        inner: Box<MatroidSpec>,
    },
    Truncation {
        bound: usize,
        inner: Box<MatroidSpec>,
    },
}

impl MatroidSpec {
    pub fn from_matroid(m: &AnyMatroid) -> Self {
        match m {
            AnyMatroid::Uniform(u) => MatroidSpec::Uniform { rank: u.bound() },
            AnyMatroid::Partition(p) => MatroidSpec::Partition {
                blocks: p.blocks().to_vec(),
                caps: p.caps().to_vec(),
            },
            AnyMatroid::Graphic(g) => MatroidSpec::Graphic {
                vertices: g.vertices(),
                edges: g.edges().to_vec(),
            },
            AnyMatroid::Cographic(c) => MatroidSpec::Cographic {
                vertices: c.vertices(),
                edges: c.edges().to_vec(),
            },
            AnyMatroid::Transversal(t) => MatroidSpec::Transversal {
                right: t.right(),
                adjacency: t.adjacency().to_vec(),
            },
            AnyMatroid::Laminar(l) => MatroidSpec::Laminar {
                sets: l
                    .family()
                    .sets()
                    .into_iter()
                    .map(|(elements, cap)| LaminarSetSpec { elements, cap })
                    .collect(),
            },
            AnyMatroid::Restriction(r) => MatroidSpec::Restriction {
                subset: r.subset().to_vec(),
                inner: Box::new(MatroidSpec::from_matroid(r.inner())),
            },
            AnyMatroid::Truncation(t) => MatroidSpec::Truncation {
                bound: t.bound(),
                inner: Box::new(MatroidSpec::from_matroid(t.inner())),
            },
        }
    }

    /// Builds the matroid over `0..n`.
    pub fn build(&self, n: usize) -> Result<AnyMatroid> {
        let check_edges = |edges: &[(usize, usize)]| {
            if edges.len() != n {
                return Err(Error::MalformedInput(format!(
                    "{} edges listed, expected n = {n}",
                    edges.len()
                )));
            }
            Ok(())
        };
        Ok(match self {
            MatroidSpec::Uniform { rank } => AnyMatroid::Uniform(UniformMatroid::new(n, *rank)),
            MatroidSpec::Partition { blocks, caps } => {
                AnyMatroid::Partition(PartitionMatroid::new(n, blocks.clone(), caps.clone())?)
            }
            MatroidSpec::Graphic { vertices, edges } => {
                check_edges(edges)?;
                AnyMatroid::Graphic(GraphicMatroid::new(*vertices, edges.clone())?)
            }
            MatroidSpec::Cographic { vertices, edges } => {
                check_edges(edges)?;
                AnyMatroid::Cographic(CographicMatroid::new(*vertices, edges.clone())?)
            }
            MatroidSpec::Transversal { right, adjacency } => {
                if adjacency.len() != n {
                    return Err(Error::MalformedInput(format!(
                        "{} adjacency lists, expected n = {n}",
                        adjacency.len()
                    )));
                }
                AnyMatroid::Transversal(TransversalMatroid::new(*right, adjacency.clone())?)
            }
            MatroidSpec::Laminar { sets } => {
                let sets = sets.iter().map(|s| (s.elements.clone(), s.cap)).collect();
                AnyMatroid::Laminar(LaminarMatroid::new(LaminarFamily::new(n, sets)?))
            }
            MatroidSpec::Restriction { subset, inner } => {
                AnyMatroid::Restriction(Restriction::new(Box::new(inner.build(n)?), subset)?)
            }
            MatroidSpec::Truncation { bound, inner } => {
                AnyMatroid::Truncation(Truncation::new(Box::new(inner.build(n)?), *bound)?)
            }
        })
    }
}

impl InstanceFile {
    pub fn from_instance(instance: &Instance) -> Self {
        let (kind, matroids, graph) = match &instance.body {
            InstanceBody::Intersection { matroids } => (
                InstanceKind::Intersection,
                matroids.iter().map(MatroidSpec::from_matroid).collect(),
                None,
            ),
            InstanceBody::Matching { graph, matroid } => (
                InstanceKind::Matching,
                vec![MatroidSpec::from_matroid(matroid)],
                Some(GraphSpec {
                    vertices: graph.vertices(),
                    edges: graph.edges().to_vec(),
                }),
            ),
        };
        InstanceFile {
            version: FORMAT_VERSION,
            kind,
            n: instance.universe(),
            k: instance.k,
            weights: instance.weights.as_slice().to_vec(),
            matroids,
            graph,
        }
    }

    pub fn into_instance(self) -> Result<Instance> {
        if self.version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "version: unsupported format version {}",
                self.version
            )));
        }
        let n = self.n;
        if self.weights.len() != n {
            return Err(Error::Parse(format!(
                "weights: {} entries, expected n = {n}",
                self.weights.len()
            )));
        }
        let matroids = self
            .matroids
            .iter()
            .enumerate()
            .map(|(i, spec)| spec.build(n).map_err(|e| Error::Parse(format!("matroids[{i}]: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let weights = Weights::new(self.weights);
        match (self.kind, self.graph) {
            (InstanceKind::Intersection, None) => Instance::intersection(matroids, weights, self.k),
            (InstanceKind::Intersection, Some(_)) => Err(Error::Parse(
                "graph: only matching instances have a graph section".into(),
            )),
            (InstanceKind::Matching, None) => Err(Error::Parse("graph: missing for a matching instance".into())),
            (InstanceKind::Matching, Some(g)) => {
                if matroids.len() != 1 {
                    return Err(Error::Parse(format!(
                        "matroids: a matching instance has exactly one matroid, found {}",
                        matroids.len()
                    )));
                }
                if g.edges.len() != n {
                    return Err(Error::Parse(format!(
                        "graph.edges: {} edges, expected n = {n}",
                        g.edges.len()
                    )));
                }
                let graph = Graph::new(g.vertices, g.edges).map_err(|e| Error::Parse(format!("graph: {e}")))?;
                let matroid = matroids.into_iter().next().expect("one matroid");
                Instance::matching(graph, matroid, weights, self.k)
            }
        }
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let inner = e.inner();
        Error::Parse(format!(
            "{}: {} (line {}, column {})",
            e.path(),
            inner,
            inner.line(),
            inner.column()
        ))
    })
}

/// Sorted-key pretty JSON with a trailing newline.
fn canonical_json<T: Serialize>(value: &T) -> Vec<u8> {
    // serde_json::Value keeps object keys in a BTreeMap, which sorts them
    let value = serde_json::to_value(value).expect("serializable document");
    let mut bytes = serde_json::to_vec_pretty(&value).expect("serializable document");
    bytes.push(b'\n');
    bytes
}

pub fn instance_to_bytes(instance: &Instance) -> Vec<u8> {
    canonical_json(&InstanceFile::from_instance(instance))
}

pub fn parse_instance_str(text: &str) -> Result<Instance> {
    parse_json::<InstanceFile>(text)?.into_instance()
}

pub fn parse_instance(path: impl AsRef<Path>) -> Result<Instance> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_instance_str(&text)
}

pub fn write_instance(instance: &Instance, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, instance_to_bytes(instance)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Hex SHA-256 of the canonical instance bytes.
pub fn instance_digest(instance: &Instance) -> String {
    hex::encode(Sha256::digest(instance_to_bytes(instance)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KernelFile {
    pub version: u32,
    pub instance_digest: String,
    pub algorithm: String,
    pub k: usize,
    pub seed: u64,
    pub rounds: usize,
    pub repeat: usize,
    pub elements: Vec<usize>,
}

impl KernelFile {
    pub fn new(kernel: &Kernel, instance_digest: String) -> Self {
        let mut elements = kernel.elements.clone();
        elements.sort_unstable();
        KernelFile {
            version: FORMAT_VERSION,
            instance_digest,
            algorithm: kernel.algorithm.name().to_string(),
            k: kernel.k,
            seed: kernel.seed,
            rounds: kernel.rounds,
            repeat: kernel.repeat,
            elements,
        }
    }

    pub fn algorithm(&self) -> Result<Algorithm> {
        self.algorithm.parse()
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        canonical_json(self)
    }

    pub fn parse_str(text: &str) -> Result<Self> {
        let file: KernelFile = parse_json(text)?;
        if file.version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "version: unsupported format version {}",
                file.version
            )));
        }
        file.algorithm().map_err(|e| Error::Parse(format!("algorithm: {e}")))?;
        Ok(file)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse_str(&text)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_bytes()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }

    /// Fails unless the digest matches `instance` and every id is in range.
    pub fn check_against(&self, instance: &Instance) -> Result<()> {
        let digest = instance_digest(instance);
        if digest != self.instance_digest {
            return Err(Error::MalformedInput(format!(
                "kernel was computed for instance {}, not {digest}",
                self.instance_digest
            )));
        }
        let n = instance.universe();
        if let Some(&e) = self.elements.iter().find(|&&e| e >= n) {
            return Err(Error::ElementOutOfRange { element: e, size: n });
        }
        Ok(())
    }
}
