use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::baselines::{distance_correlation, pearson, spearman};
use crate::estimator::{midi, EstimatorConfig};
use crate::{Error, Result};

/// A scalar dependence measure that can be evaluated on paired samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    Midi,
    Dcor,
    Pearson,
    Spearman,
}

impl Measure {
    pub const ALL: [Measure; 4] = [Measure::Midi, Measure::Dcor, Measure::Pearson, Measure::Spearman];

    pub fn name(&self) -> &'static str {
        match self {
            Measure::Midi => "midi",
            Measure::Dcor => "dcor",
            Measure::Pearson => "pearson",
            Measure::Spearman => "spearman",
        }
    }

    /// The raw value of the measure (signed for the correlations).
    pub fn evaluate(&self, xs: &[f64], ys: &[f64], cfg: &EstimatorConfig) -> Result<f64> {
        match self {
            Measure::Midi => Ok(midi(xs, ys, cfg)?.midi),
            Measure::Dcor => Ok(distance_correlation(xs, ys)?.dcor),
            Measure::Pearson => pearson(xs, ys),
            Measure::Spearman => spearman(xs, ys),
        }
    }

    /// Dependence strength used for testing: the absolute value of the
    /// signed correlations, the value itself otherwise.
    pub fn statistic(&self, xs: &[f64], ys: &[f64], cfg: &EstimatorConfig) -> Result<f64> {
        self.evaluate(xs, ys, cfg).map(f64::abs)
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "midi" => Ok(Measure::Midi),
            "dcor" => Ok(Measure::Dcor),
            "pearson" => Ok(Measure::Pearson),
            "spearman" => Ok(Measure::Spearman),
            other => Err(Error::InvalidParameter(format!("unknown measure `{other}`"))),
        }
    }
}

/// Parses a comma-separated measure list, keeping order and dropping
/// repeats.
pub fn parse_measures(list: &str) -> Result<Vec<Measure>> {
    let mut out = Vec::new();
    for part in list.split(',').filter(|p| !p.trim().is_empty()) {
        let m: Measure = part.parse()?;
        if !out.contains(&m) {
            out.push(m);
        }
    }
    if out.is_empty() {
        return Err(Error::InvalidParameter("empty measure list".into()));
    }
    Ok(out)
}
