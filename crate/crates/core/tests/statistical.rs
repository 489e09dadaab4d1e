mod common;

use matkernel::generate::{generate, GenParams, InstanceKind};
use matkernel::kernel::derive_seed;
use matkernel::matching::Graph;
use matkernel::matroid::{
    GraphicMatroid, LaminarFamily, LaminarMatroid, PartitionMatroid, TransversalMatroid, UniformMatroid,
};
use matkernel::verify::{estimate_success_rate, Budget};
use matkernel::{kernelize, Algorithm, AnyMatroid, Instance, KernelConfig, Weights};

const TRIALS: usize = 100;

/// Share of seeded runs whose kernel keeps the brute-force optimum.
fn opt_preserved(instance: &Instance, algorithm: Algorithm, seed: u64) -> f64 {
    let family = common::feasible_masks(instance, instance.k);
    let full = common::opt(instance, &family, &(0..instance.universe()).collect::<Vec<_>>());
    let hits = (0..TRIALS)
        .filter(|&t| {
            let config = KernelConfig::new(instance.k, derive_seed(seed, t as u64));
            let kernel = kernelize(instance, algorithm, &config).unwrap();
            common::opt(instance, &family, &kernel.elements) == full
        })
        .count();
    hits as f64 / TRIALS as f64
}

fn reachable_fraction(instance: &Instance, algorithm: Algorithm, rounds: Option<usize>, seed: u64) -> f64 {
    let estimate = estimate_success_rate(instance, TRIALS, seed, &Budget::default(), |s| {
        let mut config = KernelConfig::new(instance.k, s);
        config.rounds = rounds;
        kernelize(instance, algorithm, &config).map(|k| k.elements)
    })
    .unwrap();
    assert_eq!(estimate.opt_mismatches, 0);
    estimate.fraction()
}

fn uniform(n: usize, r: usize) -> AnyMatroid {
    AnyMatroid::Uniform(UniformMatroid::new(n, r))
}

#[test]
fn partition_example_keeps_the_optimum() {
    let blocks = PartitionMatroid::simple(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
    let inst = Instance::intersection(
        vec![uniform(4, 2), AnyMatroid::Partition(blocks)],
        Weights::new(vec![4, 3, 2, 1]),
        2,
    )
    .unwrap();
    let family = common::feasible_masks(&inst, 2);
    assert_eq!(common::opt(&inst, &family, &[0, 1, 2, 3]), 6);
    assert!(opt_preserved(&inst, Algorithm::Partition, 1) >= 2.0 / 3.0);
}

#[test]
fn coverable_triangle_example_keeps_the_optimum() {
    let triangle = GraphicMatroid::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
    let inst = Instance::intersection(
        vec![uniform(3, 2), AnyMatroid::Graphic(triangle)],
        Weights::new(vec![3, 2, 1]),
        2,
    )
    .unwrap();
    let family = common::feasible_masks(&inst, 2);
    assert_eq!(common::opt(&inst, &family, &[0, 1, 2]), 5);
    assert!(opt_preserved(&inst, Algorithm::Coverable, 2) >= 2.0 / 3.0);
}

#[test]
fn transversal_example_keeps_the_optimum() {
    let t = TransversalMatroid::new(3, vec![vec![0], vec![0, 1], vec![1], vec![1, 2], vec![2], vec![0, 2]]).unwrap();
    let inst = Instance::intersection(
        vec![uniform(6, 3), AnyMatroid::Transversal(t)],
        Weights::new(vec![5, 4, 6, 2, 3, 1]),
        2,
    )
    .unwrap();
    assert!(opt_preserved(&inst, Algorithm::Transversal, 3) >= 2.0 / 3.0);
}

#[test]
fn laminar_example_is_reachable() {
    let sets = vec![
        ((0..12).collect(), 2),
        ((0..6).collect(), 1),
        ((6..12).collect(), 2),
        ((6..9).collect(), 1),
        ((9..12).collect(), 1),
    ];
    let laminar = LaminarMatroid::new(LaminarFamily::new(12, sets).unwrap());
    let inst = Instance::intersection(
        vec![uniform(12, 2), AnyMatroid::Laminar(laminar)],
        Weights::new(vec![9, 3, 7, 1, 8, 2, 6, 4, 5, 10, 2, 3]),
        2,
    )
    .unwrap();
    assert!(reachable_fraction(&inst, Algorithm::Laminar, None, 4) >= 0.60);
}

#[test]
fn path_matching_example_keeps_the_optimum() {
    let path = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
    let inst = Instance::matching(path, uniform(3, 2), Weights::new(vec![3, 2, 1]), 2).unwrap();
    let family = common::feasible_masks(&inst, 2);
    assert_eq!(common::opt(&inst, &family, &[0, 1, 2]), 4);
    assert!(opt_preserved(&inst, Algorithm::Matching, 5) >= 0.60);
}

#[test]
fn partition_kernel_is_reachable_on_generated_instances() {
    for seed in 0..4 {
        let inst = generate(
            InstanceKind::Partition,
            &GenParams {
                n: 16,
                d: 2 + seed as usize % 2,
                k: 2,
                max_weight: 9,
            },
            seed,
        )
        .unwrap();
        assert!(
            reachable_fraction(&inst, Algorithm::Partition, None, seed) >= 0.60,
            "seed {seed}"
        );
    }
}

#[test]
fn deterministic_kernel_is_always_reachable() {
    for (i, kind) in [
        InstanceKind::Partition,
        InstanceKind::CoverableGraphic,
        InstanceKind::CoverableCographic,
    ]
    .into_iter()
    .enumerate()
    {
        let inst = generate(
            kind,
            &GenParams {
                n: 14,
                d: 2,
                k: 3,
                max_weight: 5,
            },
            i as u64,
        )
        .unwrap();
        assert_eq!(reachable_fraction(&inst, Algorithm::Deterministic, None, 0), 1.0);
    }
}

#[test]
fn full_ground_set_is_always_reachable() {
    let inst = generate(
        InstanceKind::CoverableGraphic,
        &GenParams {
            n: 12,
            d: 3,
            k: 3,
            max_weight: 5,
        },
        8,
    )
    .unwrap();
    let all: Vec<usize> = (0..12).collect();
    let estimate = estimate_success_rate(&inst, 10, 0, &Budget::default(), |_| Ok(all.clone())).unwrap();
    assert_eq!(estimate.fraction(), 1.0);
}
