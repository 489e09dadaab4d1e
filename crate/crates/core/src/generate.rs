//! Seeded random instances and matroids. Every generated matroid is loop-free.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::matching::Graph;
use crate::matroid::{
    AnyMatroid, CographicMatroid, GraphicMatroid, LaminarFamily, LaminarMatroid, MatroidClass, PartitionMatroid,
    Restriction, TransversalMatroid, Truncation, UniformMatroid,
};
use crate::weights::Weights;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InstanceKind {
    Partition,
    CoverableGraphic,
    CoverableCographic,
    Transversal,
    Laminar,
    Matching,
    Rainbow,
}

impl InstanceKind {
    pub const ALL: [InstanceKind; 7] = [
        InstanceKind::Partition,
        InstanceKind::CoverableGraphic,
        InstanceKind::CoverableCographic,
        InstanceKind::Transversal,
        InstanceKind::Laminar,
        InstanceKind::Matching,
        InstanceKind::Rainbow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InstanceKind::Partition => "partition",
            InstanceKind::CoverableGraphic => "coverable-graphic",
            InstanceKind::CoverableCographic => "coverable-cographic",
            InstanceKind::Transversal => "transversal",
            InstanceKind::Laminar => "laminar",
            InstanceKind::Matching => "matching",
            InstanceKind::Rainbow => "rainbow",
        }
    }
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InstanceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InstanceKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown instance kind {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenParams {
    /// Ground set size (edges, for matching kinds).
    pub n: usize,
    /// Number of matroids including `M0`; ignored by matching kinds.
    pub d: usize,
    pub k: usize,
    /// Weights are drawn from `1..=max_weight`.
    pub max_weight: u64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            n: 12,
            d: 2,
            k: 2,
            max_weight: 10,
        }
    }
}

impl GenParams {
    fn check(&self, kind: InstanceKind) -> Result<()> {
        if self.n < 3 {
            return Err(Error::InvalidParameter("n must be at least 3".into()));
        }
        if self.k == 0 || self.max_weight == 0 {
            return Err(Error::InvalidParameter(
                "k and the weight range must be positive".into(),
            ));
        }
        let matching = matches!(kind, InstanceKind::Matching | InstanceKind::Rainbow);
        if !matching && self.d < 2 {
            return Err(Error::InvalidParameter("d must be at least 2".into()));
        }
        Ok(())
    }
}

/// `count` edges on `vertices >= 2` vertices, no self-loops, parallel edges allowed.
fn random_edges(rng: &mut ChaCha8Rng, vertices: usize, count: usize) -> Vec<(usize, usize)> {
    (0..count)
        .map(|_| {
            let u = rng.gen_range(0..vertices);
            let mut v = rng.gen_range(0..vertices - 1);
            if v >= u {
                v += 1;
            }
            (u.min(v), u.max(v))
        })
        .collect()
}

/// A cycle through every vertex plus random chords, `count >= vertices >= 3`
/// edges in shuffled order; 2-edge-connected, so its cographic matroid has no loops.
fn bridgeless_edges(rng: &mut ChaCha8Rng, vertices: usize, count: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (0..vertices)
        .map(|v| (v.min((v + 1) % vertices), v.max((v + 1) % vertices)))
        .collect();
    edges.extend(random_edges(rng, vertices, count - vertices));
    edges.shuffle(rng);
    edges
}

/// Assigns every element to one of `blocks` groups, every group non-empty.
fn random_groups(rng: &mut ChaCha8Rng, n: usize, blocks: usize) -> Vec<Vec<usize>> {
    let blocks = blocks.clamp(1, n);
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    let mut groups = vec![Vec::new(); blocks];
    for (i, &e) in ids.iter().enumerate() {
        let g = if i < blocks { i } else { rng.gen_range(0..blocks) };
        groups[g].push(e);
    }
    groups
}

fn random_transversal(rng: &mut ChaCha8Rng, n: usize, right: usize, max_degree: usize) -> TransversalMatroid {
    let adjacency = (0..n)
        .map(|_| {
            let degree = rng.gen_range(1..=max_degree.min(right));
            let mut ws: Vec<usize> = (0..right).collect();
            ws.shuffle(rng);
            ws.truncate(degree);
            ws
        })
        .collect();
    TransversalMatroid::new(right, adjacency).expect("neighbours in range")
}

/// Two levels below the root: capped groups, some split into unit-cap halves.
fn random_laminar(rng: &mut ChaCha8Rng, n: usize, k: usize) -> LaminarMatroid {
    let groups = random_groups(rng, n, (n / 4).max(2));
    let mut sets = vec![((0..n).collect::<Vec<_>>(), k.max(1))];
    for group in groups {
        let cap = rng.gen_range(1..=k.max(1));
        if group.len() >= 4 && rng.gen_bool(0.5) {
            let half = group.len() / 2;
            sets.push((group[..half].to_vec(), 1));
            sets.push((group[half..].to_vec(), 1));
        }
        sets.push((group, cap));
    }
    LaminarMatroid::new(LaminarFamily::new(n, sets).expect("laminar by construction"))
}

/// The arbitrary `M0`: a uniform, capped partition or graphic matroid.
fn random_m0(rng: &mut ChaCha8Rng, n: usize, k: usize) -> AnyMatroid {
    match rng.gen_range(0..3) {
        0 => AnyMatroid::Uniform(UniformMatroid::new(n, rng.gen_range(k.max(2)..=n.max(k.max(2))))),
        1 => {
            let count = rng.gen_range(2..=k.max(2) + 1);
            let blocks = random_groups(rng, n, count);
            let caps = blocks.iter().map(|b| rng.gen_range(1..=b.len().min(2))).collect();
            AnyMatroid::Partition(PartitionMatroid::new(n, blocks, caps).expect("valid partition"))
        }
        _ => {
            let vertices = (n * 2 / 3).max(3);
            AnyMatroid::Graphic(GraphicMatroid::new(vertices, random_edges(rng, vertices, n)).expect("valid graph"))
        }
    }
}

fn random_weights(rng: &mut ChaCha8Rng, n: usize, max_weight: u64) -> Weights {
    Weights::new((0..n).map(|_| rng.gen_range(1..=max_weight)).collect())
}

/// A random instance of `kind`; the same `(kind, params, seed)` gives the same instance.
pub fn generate(kind: InstanceKind, params: &GenParams, seed: u64) -> Result<Instance> {
    params.check(kind)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (n, k) = (params.n, params.k);
    let weights = random_weights(&mut rng, n, params.max_weight);
    if matches!(kind, InstanceKind::Matching | InstanceKind::Rainbow) {
        let vertices = (n * 2 / 3).max(4);
        let graph = Graph::new(vertices, random_edges(&mut rng, vertices, n))?;
        let matroid = if kind == InstanceKind::Rainbow {
            AnyMatroid::Partition(PartitionMatroid::simple(n, random_groups(&mut rng, n, (n / 2).max(2)))?)
        } else {
            random_m0(&mut rng, n, k)
        };
        return Instance::matching(graph, matroid, weights, k);
    }
    let mut matroids = vec![random_m0(&mut rng, n, k)];
    for _ in 1..params.d {
        let m = match kind {
            InstanceKind::Partition => {
                let blocks = rng.gen_range(k.max(2)..=n.div_ceil(2).max(k.max(2)));
                AnyMatroid::Partition(PartitionMatroid::simple(n, random_groups(&mut rng, n, blocks))?)
            }
            InstanceKind::CoverableGraphic => {
                let vertices = rng.gen_range(3..=(n * 2 / 3).max(3));
                AnyMatroid::Graphic(GraphicMatroid::new(vertices, random_edges(&mut rng, vertices, n))?)
            }
            InstanceKind::CoverableCographic => {
                let vertices = rng.gen_range(3..=(n / 2).max(3));
                AnyMatroid::Cographic(CographicMatroid::new(
                    vertices,
                    bridgeless_edges(&mut rng, vertices, n),
                )?)
            }
            InstanceKind::Transversal => {
                let right = rng.gen_range(2..=(n / 2).max(2));
                AnyMatroid::Transversal(random_transversal(&mut rng, n, right, 2))
            }
            InstanceKind::Laminar => AnyMatroid::Laminar(random_laminar(&mut rng, n, k)),
            InstanceKind::Matching | InstanceKind::Rainbow => unreachable!("handled above"),
        };
        matroids.push(m);
    }
    Instance::intersection(matroids, weights, k)
}

/// Classes [`random_matroid`] can produce.
pub const RANDOM_CLASSES: [MatroidClass; 9] = [
    MatroidClass::Uniform,
    MatroidClass::Partition,
    MatroidClass::SimplePartition,
    MatroidClass::Graphic,
    MatroidClass::Cographic,
    MatroidClass::Transversal,
    MatroidClass::Laminar,
    MatroidClass::Restriction,
    MatroidClass::Truncation,
];

/// A random loop-free matroid of `class` over `n >= 3` elements.
pub fn random_matroid(class: MatroidClass, n: usize, seed: u64) -> Result<AnyMatroid> {
    if n < 3 {
        return Err(Error::InvalidParameter("n must be at least 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rng = &mut rng;
    Ok(match class {
        MatroidClass::Uniform => AnyMatroid::Uniform(UniformMatroid::new(n, rng.gen_range(1..=n))),
        MatroidClass::Partition => {
            let count = rng.gen_range(1..=n);
            let blocks = random_groups(rng, n, count);
            let caps = blocks.iter().map(|b| rng.gen_range(1..=b.len())).collect();
            AnyMatroid::Partition(PartitionMatroid::new(n, blocks, caps)?)
        }
        MatroidClass::SimplePartition => {
            let count = rng.gen_range(1..=n);
            AnyMatroid::Partition(PartitionMatroid::simple(n, random_groups(rng, n, count))?)
        }
        MatroidClass::Graphic => {
            let vertices = rng.gen_range(2..=n);
            AnyMatroid::Graphic(GraphicMatroid::new(vertices, random_edges(rng, vertices, n))?)
        }
        MatroidClass::Cographic => {
            let vertices = rng.gen_range(3..=n);
            AnyMatroid::Cographic(CographicMatroid::new(vertices, bridgeless_edges(rng, vertices, n))?)
        }
        MatroidClass::Transversal => {
            let right = rng.gen_range(1..=n);
            AnyMatroid::Transversal(random_transversal(rng, n, right, 3))
        }
        MatroidClass::Laminar => {
            let k = rng.gen_range(1..=3);
            AnyMatroid::Laminar(random_laminar(rng, n, k))
        }
        MatroidClass::Restriction => {
            let inner = random_matroid(MatroidClass::Graphic, n, rng.gen())?;
            let mut subset: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.7)).collect();
            if subset.is_empty() {
                subset.push(0);
            }
            AnyMatroid::Restriction(Restriction::new(Box::new(inner), &subset)?)
        }
        MatroidClass::Truncation => {
            let inner = random_matroid(MatroidClass::Transversal, n, rng.gen())?;
            AnyMatroid::Truncation(Truncation::new(Box::new(inner), rng.gen_range(1..=3))?)
        }
    })
}
