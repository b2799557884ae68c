//! Dependence estimation between two real-valued variables.
//!
//! The main estimator is the mutual information based dependence index
//! (MIDI): a plug-in estimate of `I(X;Y) / min(H(X), H(Y))` computed on an
//! asymmetric histogram. One axis is cut into fixed-width cells whose width
//! is `n^c` times the largest spacing between consecutive observations, the
//! other into `max(2, floor(log10 n))` equal cells. The estimate is taken in
//! both axis orders and the larger value is reported.
//!
//! Alongside it live the usual baselines (distance correlation, Pearson,
//! Spearman), seeded generators for the standard synthetic benchmarks, a
//! Monte Carlo power harness, and a column screening routine for wide
//! matrices.

pub mod baselines;
pub mod datagen;
mod error;
pub mod estimator;
pub mod measure;
pub mod power;
pub mod rng;
pub mod screen;
pub mod table;

pub use error::{Error, Result};
pub use measure::Measure;
pub use estimator::{
    midi, midi_directional, DirectionalEstimate, EstimateReport, EstimatorConfig, SampleSet,
};
