//! Monte Carlo power of a dependence measure against the independence null.
//!
//! The null cutoff is the `ceil(0.95 * reps)`-th smallest statistic over
//! `reps` datasets with x and y independent uniform. Power at a noise level
//! is the fraction of `reps` noisy datasets whose statistic is strictly
//! above that cutoff. Every replicate draws a fresh dataset from its own
//! derived seed and results are gathered in replicate order, so curves do
//! not depend on the number of worker threads.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::datagen::{add_noise_in_place, generate, noise_levels, FunctionKind, NoiseSpec};
use crate::estimator::EstimatorConfig;
use crate::measure::Measure;
use crate::rng::derive_seed;
use crate::{Error, Result};

pub const DEFAULT_REPS: usize = 500;
pub const DEFAULT_POINTS: usize = 1000;
pub const NOISE_LEVELS: usize = 30;
pub const MIN_REPS: usize = 20;
pub const NULL_QUANTILE: f64 = 0.95;

const NULL_PATH: u64 = 0;
const REPLICATE_PATH: u64 = 1;
const LEVEL_PATH: u64 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerLevel {
    pub sigma: f64,
    pub power: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerCurve {
    pub measure: Measure,
    pub function: FunctionKind,
    pub noise_scale: f64,
    pub levels: Vec<PowerLevel>,
    pub cutoff: f64,
    pub reps: usize,
    pub n_points: usize,
    pub base_seed: u64,
}

impl PowerCurve {
    /// Plot-ready CSV with columns `measure,function,sigma,power`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("measure,function,sigma,power\n");
        for level in &self.levels {
            out.push_str(&format!(
                "{},{},{},{}\n",
                self.measure, self.function, level.sigma, level.power
            ));
        }
        out
    }
}

/// 1-based index of the order statistic used as the null cutoff.
pub fn cutoff_rank(reps: usize) -> usize {
    (95 * reps).div_ceil(100)
}

/// Settings shared by every stage of a power computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerHarness {
    pub measure: Measure,
    pub reps: usize,
    pub n_points: usize,
    pub estimator: EstimatorConfig,
}

impl PowerHarness {
    pub fn new(measure: Measure) -> Self {
        Self {
            measure,
            reps: DEFAULT_REPS,
            n_points: DEFAULT_POINTS,
            estimator: EstimatorConfig::default(),
        }
    }

    pub fn reps(mut self, reps: usize) -> Self {
        self.reps = reps;
        self
    }

    pub fn n_points(mut self, n: usize) -> Self {
        self.n_points = n;
        self
    }

    pub fn estimator(mut self, cfg: EstimatorConfig) -> Self {
        self.estimator = cfg;
        self
    }

    fn check(&self) -> Result<()> {
        if self.reps < MIN_REPS {
            return Err(Error::InvalidParameter(format!(
                "need at least {MIN_REPS} replicates, got {}",
                self.reps
            )));
        }
        if self.n_points < 2 {
            return Err(Error::TooFewSamples {
                needed: 2,
                got: self.n_points,
            });
        }
        Ok(())
    }

    /// Statistics of the null datasets, in replicate order.
    pub fn null_statistics(&self, seed: u64) -> Result<Vec<f64>> {
        self.check()?;
        (0..self.reps)
            .into_par_iter()
            .map(|r| {
                let s = generate(
                    FunctionKind::Uniform2d,
                    self.n_points,
                    derive_seed(seed, &[NULL_PATH, r as u64]),
                )?;
                self.measure.statistic(s.xs(), s.ys(), &self.estimator)
            })
            .collect()
    }

    pub fn null_cutoff(&self, seed: u64) -> Result<f64> {
        let stats = self.null_statistics(seed)?;
        Ok(order_statistic(stats, cutoff_rank(self.reps)))
    }

    /// Fraction of noisy datasets of `function` strictly above `cutoff`.
    pub fn power_at_level(&self, function: FunctionKind, sigma: f64, cutoff: f64, seed: u64) -> Result<f64> {
        self.check()?;
        let above: Vec<bool> = (0..self.reps)
            .into_par_iter()
            .map(|r| {
                let rep_seed = derive_seed(seed, &[REPLICATE_PATH, r as u64]);
                let mut s = generate(function, self.n_points, rep_seed)?;
                add_noise_in_place(s.ys_mut(), &NoiseSpec::gaussian_sigma(sigma, rep_seed))?;
                Ok(self.measure.statistic(s.xs(), s.ys(), &self.estimator)? > cutoff)
            })
            .collect::<Result<_>>()?;
        Ok(above.iter().filter(|&&a| a).count() as f64 / self.reps as f64)
    }

    /// One null cutoff, then power at `sigma = scale * k / 10`, `k = 1..=30`.
    pub fn power_curve(&self, function: FunctionKind, seed: u64) -> Result<PowerCurve> {
        let noise_scale = function.noise_scale().ok_or_else(|| {
            Error::InvalidParameter(format!("`{function}` has no noise scale for power curves"))
        })?;
        let cutoff = self.null_cutoff(seed)?;
        let levels = noise_levels(noise_scale, NOISE_LEVELS)
            .into_iter()
            .enumerate()
            .map(|(k, sigma)| {
                let power = self.power_at_level(
                    function,
                    sigma,
                    cutoff,
                    derive_seed(seed, &[LEVEL_PATH, k as u64 + 1]),
                )?;
                Ok(PowerLevel { sigma, power })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PowerCurve {
            measure: self.measure,
            function,
            noise_scale,
            levels,
            cutoff,
            reps: self.reps,
            n_points: self.n_points,
            base_seed: seed,
        })
    }
}

/// The `rank`-th smallest value (1-based).
fn order_statistic(mut values: Vec<f64>, rank: usize) -> f64 {
    values.sort_by(f64::total_cmp);
    values[rank - 1]
}
