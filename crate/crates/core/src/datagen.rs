//! Seeded generators for the synthetic benchmark relationships and noise
//! protocols.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};
use serde::{Deserialize, Serialize};

use crate::estimator::SampleSet;
use crate::rng::{stream_rng, Stream};
use crate::{Error, Result};

/// A benchmark relationship between x and y.
///
/// All tags except the two bivariate distributions draw x uniformly on
/// `[0, 1]` and compute y from a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionKind {
    /// `y = x`
    Line,
    /// `y = x^2`
    HalfParabola,
    /// `y = (x - 0.5)^2`
    Parabola,
    /// `y = 10^x`
    Exponential,
    /// `y = sin(10 pi x + x)`
    Sinusoidal,
    /// `y = sin(16 pi x)`
    SinFourier,
    /// `y = sin(13 pi x)`
    SinNonFourier,
    /// `y = sin(7 pi x (1 + x))`
    SinVarying,
    /// `y = (2z - 1) sqrt(1 - (2x - 1)^2)` with `z` uniform on {0, 1}
    Circle,
    /// Standard bivariate normal with correlation `rho`.
    NormalBivariate(f64),
    /// x and y independent uniform on `[0, 1]`.
    Uniform2d,
    /// `y = 4 (x - 0.5)^2`
    QuadraticPow,
    /// `y = 128 (x - 1/3)^3 - 48 (x - 1/3)^2 - 12 (x - 1/3)`
    CubicPow,
    /// `y = sin(4 pi x)`
    SinEighth,
    /// `y = sin(16 pi x)`
    SinHalf,
    /// `y = x^(1/4)`
    FourthRoot,
    /// `y = 1` if `x > 0.5`, else 0
    Step,
}

impl FunctionKind {
    /// Functions of the noise-sweep power study, in their usual order.
    pub const POWER_FUNCTIONS: [FunctionKind; 8] = [
        FunctionKind::Line,
        FunctionKind::QuadraticPow,
        FunctionKind::CubicPow,
        FunctionKind::SinEighth,
        FunctionKind::SinHalf,
        FunctionKind::FourthRoot,
        FunctionKind::Circle,
        FunctionKind::Step,
    ];

    /// Base noise standard deviation for the power study; `None` for
    /// relationships outside it.
    pub fn noise_scale(&self) -> Option<f64> {
        use FunctionKind::*;
        match self {
            Line | QuadraticPow | SinHalf | FourthRoot => Some(1.0),
            CubicPow => Some(10.0),
            SinEighth => Some(2.0),
            Circle => Some(0.25),
            Step => Some(5.0),
            _ => None,
        }
    }

    /// The closed form `y = f(x)`, for tags that have one.
    pub fn apply(&self, x: f64) -> Option<f64> {
        use FunctionKind::*;
        let y = match *self {
            Line => x,
            HalfParabola => x * x,
            Parabola => (x - 0.5).powi(2),
            Exponential => 10f64.powf(x),
            Sinusoidal => (10.0 * PI * x + x).sin(),
            SinFourier | SinHalf => (16.0 * PI * x).sin(),
            SinNonFourier => (13.0 * PI * x).sin(),
            SinVarying => (7.0 * PI * x * (1.0 + x)).sin(),
            QuadraticPow => 4.0 * (x - 0.5).powi(2),
            CubicPow => {
                let t = x - 1.0 / 3.0;
                128.0 * t.powi(3) - 48.0 * t.powi(2) - 12.0 * t
            }
            SinEighth => (4.0 * PI * x).sin(),
            FourthRoot => x.powf(0.25),
            Step => {
                if x > 0.5 {
                    1.0
                } else {
                    0.0
                }
            }
            Circle | NormalBivariate(_) | Uniform2d => return None,
        };
        Some(y)
    }

    pub fn tag(&self) -> &'static str {
        use FunctionKind::*;
        match self {
            Line => "line",
            HalfParabola => "half_parabola",
            Parabola => "parabola",
            Exponential => "exponential",
            Sinusoidal => "sinusoidal",
            SinFourier => "sin_fourier",
            SinNonFourier => "sin_nonfourier",
            SinVarying => "sin_varying",
            Circle => "circle",
            NormalBivariate(_) => "normal_bivariate",
            Uniform2d => "uniform_2d",
            QuadraticPow => "quadratic_pow",
            CubicPow => "cubic_pow",
            SinEighth => "sin_eighth",
            SinHalf => "sin_half",
            FourthRoot => "fourth_root",
            Step => "step",
        }
    }
}

impl fmt::Display for FunctionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionKind::NormalBivariate(rho) => write!(f, "normal_bivariate:{rho}"),
            other => f.write_str(other.tag()),
        }
    }
}

impl FromStr for FunctionKind {
    type Err = Error;

    /// Parses a tag. `normal_bivariate:<rho>` carries its correlation;
    /// `normal_uncorrelated` is shorthand for `rho = 0`.
    fn from_str(s: &str) -> Result<Self> {
        use FunctionKind::*;
        let s = s.trim().to_ascii_lowercase().replace('-', "_");
        if let Some(rho) = s.strip_prefix("normal_bivariate:") {
            let rho: f64 = rho
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad correlation `{rho}`")))?;
            check_rho(rho)?;
            return Ok(NormalBivariate(rho));
        }
        Ok(match s.as_str() {
            "line" => Line,
            "half_parabola" => HalfParabola,
            "parabola" => Parabola,
            "exponential" => Exponential,
            "sinusoidal" => Sinusoidal,
            "sin_fourier" | "sff" => SinFourier,
            "sin_nonfourier" | "snff" => SinNonFourier,
            "sin_varying" | "svf" => SinVarying,
            "circle" => Circle,
            "normal_bivariate" | "normal_uncorrelated" => NormalBivariate(0.0),
            "uniform_2d" | "uniform" => Uniform2d,
            "quadratic_pow" | "quadratic" => QuadraticPow,
            "cubic_pow" | "cubic" => CubicPow,
            "sin_eighth" => SinEighth,
            "sin_half" => SinHalf,
            "fourth_root" => FourthRoot,
            "step" => Step,
            other => return Err(Error::InvalidParameter(format!("unknown function `{other}`"))),
        })
    }
}

fn check_rho(rho: f64) -> Result<()> {
    if (-1.0..=1.0).contains(&rho) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "correlation must lie in [-1, 1], got {rho}"
        )))
    }
}

/// Draws `n` pairs of `kind`. Identical `(kind, n, seed)` always yields
/// identical data.
pub fn generate(kind: FunctionKind, n: usize, seed: u64) -> Result<SampleSet> {
    if n < 2 {
        return Err(Error::TooFewSamples { needed: 2, got: n });
    }
    match kind {
        FunctionKind::NormalBivariate(rho) => return generate_bivariate_normal(n, rho, seed),
        FunctionKind::Uniform2d => {
            let xs = uniform01(n, seed, Stream::Primary);
            let ys = uniform01(n, seed, Stream::Secondary);
            return SampleSet::new(xs, ys);
        }
        _ => {}
    }
    let xs = uniform01(n, seed, Stream::Primary);
    let ys = if kind == FunctionKind::Circle {
        let mut branch = stream_rng(seed, Stream::Secondary);
        xs.iter()
            .map(|&x| {
                let sign = if branch.random::<bool>() { 1.0 } else { -1.0 };
                let t = 2.0 * x - 1.0;
                sign * (1.0 - t * t).sqrt()
            })
            .collect()
    } else {
        xs.iter()
            .map(|&x| kind.apply(x).expect("closed form exists"))
            .collect()
    };
    SampleSet::new(xs, ys)
}

fn uniform01(n: usize, seed: u64, stream: Stream) -> Vec<f64> {
    let mut rng = stream_rng(seed, stream);
    let dist = Uniform::new_inclusive(0.0, 1.0).expect("valid bounds");
    (0..n).map(|_| dist.sample(&mut rng)).collect()
}

/// Standard bivariate normal pairs: `x ~ N(0,1)`,
/// `y = rho x + sqrt(1 - rho^2) z` with independent `z ~ N(0,1)`.
pub fn generate_bivariate_normal(n: usize, rho: f64, seed: u64) -> Result<SampleSet> {
    if n < 2 {
        return Err(Error::TooFewSamples { needed: 2, got: n });
    }
    check_rho(rho)?;
    let mut rx = stream_rng(seed, Stream::Primary);
    let mut rz = stream_rng(seed, Stream::Secondary);
    let k = (1.0 - rho * rho).max(0.0).sqrt();
    let mut xs = Vec::with_capacity(n);
    let mut ys = Vec::with_capacity(n);
    for _ in 0..n {
        let x: f64 = StandardNormal.sample(&mut rx);
        let z: f64 = StandardNormal.sample(&mut rz);
        xs.push(x);
        ys.push(rho * x + k * z);
    }
    SampleSet::new(xs, ys)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NoiseKind {
    /// Centered uniform noise with the given variance, i.e. half-width
    /// `sqrt(3 sigma_sq)`.
    UniformVariance { sigma_sq: f64 },
    /// Centered normal noise with the given standard deviation.
    GaussianSigma { sigma: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseSpec {
    pub kind: NoiseKind,
    pub seed: u64,
}

impl NoiseSpec {
    pub fn uniform_variance(sigma_sq: f64, seed: u64) -> Self {
        Self {
            kind: NoiseKind::UniformVariance { sigma_sq },
            seed,
        }
    }

    pub fn gaussian_sigma(sigma: f64, seed: u64) -> Self {
        Self {
            kind: NoiseKind::GaussianSigma { sigma },
            seed,
        }
    }
}

/// Returns `ys` plus i.i.d. noise drawn from the noise stream of
/// `spec.seed`.
pub fn add_noise(ys: &[f64], spec: &NoiseSpec) -> Result<Vec<f64>> {
    let mut out = ys.to_vec();
    add_noise_in_place(&mut out, spec)?;
    Ok(out)
}

pub fn add_noise_in_place(ys: &mut [f64], spec: &NoiseSpec) -> Result<()> {
    if let Some((index, &value)) = ys.iter().enumerate().find(|(_, v)| !v.is_finite()) {
        return Err(Error::NonFinite { index, value });
    }
    let mut rng = stream_rng(spec.seed, Stream::Noise);
    match spec.kind {
        NoiseKind::UniformVariance { sigma_sq } => {
            if !(sigma_sq >= 0.0 && sigma_sq.is_finite()) {
                return Err(Error::InvalidParameter(format!("noise variance {sigma_sq}")));
            }
            if sigma_sq == 0.0 {
                return Ok(());
            }
            let half = (3.0 * sigma_sq).sqrt();
            let dist = Uniform::new_inclusive(-half, half).expect("valid bounds");
            ys.iter_mut().for_each(|y| *y += dist.sample(&mut rng));
        }
        NoiseKind::GaussianSigma { sigma } => {
            if !(sigma >= 0.0 && sigma.is_finite()) {
                return Err(Error::InvalidParameter(format!("noise sigma {sigma}")));
            }
            if sigma == 0.0 {
                return Ok(());
            }
            ys.iter_mut().for_each(|y| {
                let z: f64 = StandardNormal.sample(&mut rng);
                *y += sigma * z;
            });
        }
    }
    Ok(())
}

/// `scale * k / 10` for `k = 1..=levels`.
pub fn noise_levels(scale: f64, levels: usize) -> Vec<f64> {
    (1..=levels).map(|k| scale * k as f64 / 10.0).collect()
}
