//! Runs a kernel algorithm on an [`Instance`], picking the matroid views the
//! algorithm needs.

use crate::deterministic::deterministic_kernel;
use crate::error::{Error, Result};
use crate::instance::{Instance, InstanceBody};
use crate::kernel::{Algorithm, Kernel, KernelConfig};
use crate::laminar::laminar_kernel;
use crate::matching::matching_kernel;
use crate::matroid::{AnyMatroid, LaminarMatroid, Matroid, MatroidClass};
use crate::reduction::{partition_to_transversal, transversal_kernel_with_cap, DEFAULT_LIFT_CAP};
use crate::sampling::{coverable_kernel, g_value, partition_kernel};

/// Settings beyond [`KernelConfig`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DispatchOptions {
    /// Coverability bound used instead of the class default.
    pub g_override: Option<usize>,
    /// Largest lifted ground set for the transversal reduction.
    pub lift_cap: usize,
}

impl Default for DispatchOptions {
    fn default() -> Self {
        DispatchOptions {
            g_override: None,
            lift_cap: DEFAULT_LIFT_CAP,
        }
    }
}

fn mismatch(algorithm: Algorithm, index: usize, class: MatroidClass) -> Error {
    Error::ClassMismatch(format!(
        "the {algorithm} kernel cannot use matroid {index} of class {class}"
    ))
}

fn coverability(m: &AnyMatroid, k: usize, options: &DispatchOptions) -> Result<usize> {
    if let Some(g) = options.g_override {
        return Ok(g);
    }
    let class = match m.class() {
        MatroidClass::Uniform if m.as_simple_partition().is_some() => MatroidClass::SimplePartition,
        other => other,
    };
    g_value(class, k)
}

/// [`kernelize_with`] with default options.
pub fn kernelize(instance: &Instance, algorithm: Algorithm, config: &KernelConfig) -> Result<Kernel> {
    kernelize_with(instance, algorithm, config, &DispatchOptions::default())
}

/// Drops loops, runs `algorithm` on the normalized instance and returns the
/// kernel in the original element ids.
pub fn kernelize_with(
    instance: &Instance,
    algorithm: Algorithm,
    config: &KernelConfig,
    options: &DispatchOptions,
) -> Result<Kernel> {
    let (normalized, report) = instance.normalize()?;
    let mut kernel = run(&normalized, algorithm, config, options)?;
    kernel.elements = report.to_original(&kernel.elements);
    Ok(kernel)
}

fn run(instance: &Instance, algorithm: Algorithm, config: &KernelConfig, options: &DispatchOptions) -> Result<Kernel> {
    let weights = &instance.weights;
    let matroids = match (&instance.body, algorithm) {
        (InstanceBody::Matching { .. }, Algorithm::Matching) => {
            let matching = instance.as_matching().expect("matching body");
            return matching_kernel(&matching, config);
        }
        (InstanceBody::Matching { .. }, _) => {
            return Err(Error::ClassMismatch(format!(
                "the {algorithm} kernel needs an intersection instance"
            )));
        }
        (InstanceBody::Intersection { .. }, Algorithm::Matching) => {
            return Err(Error::ClassMismatch(
                "the matching kernel needs a matching instance".into(),
            ));
        }
        (InstanceBody::Intersection { matroids }, _) => matroids,
    };
    if matroids.len() < 2 {
        return Err(Error::InvalidParameter(
            "an intersection instance needs M0 and at least one more matroid".into(),
        ));
    }
    let m0 = &matroids[0];
    let rest = &matroids[1..];
    let k = config.k;
    match algorithm {
        Algorithm::Partition => {
            let parts = rest
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    m.as_simple_partition()
                        .ok_or_else(|| mismatch(algorithm, i + 1, m.class()))
                })
                .collect::<Result<Vec<_>>>()?;
            partition_kernel(m0, &parts, weights, config)
        }
        Algorithm::Coverable => {
            let coverables = rest
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    let g = coverability(m, k, options).map_err(|_| mismatch(algorithm, i + 1, m.class()))?;
                    Ok((m as &dyn Matroid, g))
                })
                .collect::<Result<Vec<_>>>()?;
            coverable_kernel(m0, &coverables, weights, config)
        }
        Algorithm::Transversal => {
            let transversals = rest
                .iter()
                .enumerate()
                .map(|(i, m)| match m {
                    AnyMatroid::Transversal(t) => Ok(t.clone()),
                    _ => match m.as_partition() {
                        Some(p) => partition_to_transversal(&p),
                        None => Err(mismatch(algorithm, i + 1, m.class())),
                    },
                })
                .collect::<Result<Vec<_>>>()?;
            transversal_kernel_with_cap(m0, &transversals, weights, config, options.lift_cap)
        }
        Algorithm::Laminar => {
            let laminars = rest
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    m.as_laminar()
                        .map(LaminarMatroid::new)
                        .ok_or_else(|| mismatch(algorithm, i + 1, m.class()))
                })
                .collect::<Result<Vec<_>>>()?;
            laminar_kernel(m0, &laminars, weights, config)
        }
        Algorithm::Deterministic => {
            if rest.len() != 1 {
                return Err(Error::InvalidParameter(format!(
                    "the deterministic kernel handles two matroids, the instance has {}",
                    matroids.len()
                )));
            }
            let g = coverability(&rest[0], k, options).map_err(|_| mismatch(algorithm, 1, rest[0].class()))?;
            let mut kernel = deterministic_kernel(m0, &rest[0], g, weights, k)?;
            kernel.seed = config.seed;
            Ok(kernel)
        }
        Algorithm::Matching => unreachable!("handled above"),
    }
}
