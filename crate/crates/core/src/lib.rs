//! Matroid oracles and reachable kernels for weighted matroid intersection and
//! matroid-constrained matching.
//!
//! A kernel is a small subset `R` of the ground set such that every feasible
//! set of size at most `k` can be exchanged, one element at a time and without
//! losing weight, into a feasible set inside `R`. The [`verify`] module checks
//! that property exhaustively on small instances.

pub mod deterministic;
pub mod dispatch;
pub mod dsu;
pub mod error;
pub mod generate;
pub mod greedy;
pub mod instance;
pub mod io;
pub mod kernel;
pub mod laminar;
pub mod matching;
pub mod matroid;
pub mod reduction;
pub mod sampling;
pub mod set;
pub mod verify;
pub mod weights;

pub use dispatch::{kernelize, kernelize_with, DispatchOptions};
pub use error::{Error, Result};
pub use greedy::{greedy, GreedyResult};
pub use instance::{Instance, InstanceBody, NormalizationReport};
pub use kernel::{Algorithm, Kernel, KernelConfig};
pub use matroid::{AnyMatroid, Matroid, MatroidClass};
pub use weights::Weights;
