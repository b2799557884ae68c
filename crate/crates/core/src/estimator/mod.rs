//! The maximal-spacing histogram estimator.
//!
//! Both axes are scaled to `[0, 1]`. The "binned" axis gets fixed-width
//! cells of length `n^c * L_max` anchored at 0, where `L_max` is the largest
//! gap between consecutive observations on that axis. The "counted" axis is
//! cut into `max(2, floor(log10 n))` equal cells. From the joint cell counts
//! the plug-in mutual information and marginal entropies give the directional
//! index `I / min(H_binned, H_counted)`. The reported index is the larger of
//! the two directional values obtained by letting each axis be the binned one.

mod histogram;
mod partition;
mod scale;
mod spacing;

use serde::{Deserialize, Serialize};

pub use histogram::{
    build_joint_histogram, entropy_hat, joint_entropy_hat, mutual_information_hat,
    JointHistogram, MI_ROUNDING_SLACK,
};
pub use partition::{
    assign_bins, fixed_count_partition, fixed_width_partition, Axis, PartitionKind,
    PartitionSpec,
};
pub use scale::scale_to_unit;
pub use spacing::maximal_spacing;

use crate::{Error, Result};

pub const DEFAULT_EXPONENT: f64 = 0.1;

/// Paired finite observations, at least two of them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleSet {
    xs: Vec<f64>,
    ys: Vec<f64>,
}

impl SampleSet {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        validate_pair(&xs, &ys)?;
        Ok(Self { xs, ys })
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn ys_mut(&mut self) -> &mut [f64] {
        &mut self.ys
    }

    pub fn into_parts(self) -> (Vec<f64>, Vec<f64>) {
        (self.xs, self.ys)
    }
}

pub(crate) fn validate_pair(xs: &[f64], ys: &[f64]) -> Result<()> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch {
            left: xs.len(),
            right: ys.len(),
        });
    }
    if xs.len() < 2 {
        return Err(Error::TooFewSamples {
            needed: 2,
            got: xs.len(),
        });
    }
    for (index, &value) in xs.iter().chain(ys).enumerate() {
        if !value.is_finite() {
            return Err(Error::NonFinite {
                index: index % xs.len(),
                value,
            });
        }
    }
    Ok(())
}

/// Estimator parameters. Logarithms are always natural.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EstimatorConfig {
    /// Exponent in the bin length `n^c * L_max`, strictly inside (0, 1).
    pub c: f64,
}

impl Default for EstimatorConfig {
    fn default() -> Self {
        Self {
            c: DEFAULT_EXPONENT,
        }
    }
}

impl EstimatorConfig {
    pub fn new(c: f64) -> Result<Self> {
        partition::check_exponent(c)?;
        Ok(Self { c })
    }
}

/// Result of one axis-role assignment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DirectionalEstimate {
    /// Plug-in mutual information, nats.
    pub mi_hat: f64,
    /// Entropy of the fixed-width axis, nats.
    pub h_binned: f64,
    /// Entropy of the fixed-count axis, nats.
    pub h_counted: f64,
    pub midi: f64,
    /// Set when one marginal occupies a single cell; `midi` is then 0.
    pub degenerate: bool,
    pub binned_partition: PartitionSpec,
    pub counted_partition: PartitionSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateReport {
    /// Mutual information of the winning direction, nats.
    pub mi_hat: f64,
    /// Entropy of X under the winning direction's partition, nats.
    pub hx_hat: f64,
    /// Entropy of Y under the winning direction's partition, nats.
    pub hy_hat: f64,
    /// X binned by width, Y by count.
    pub midi_x: f64,
    /// Y binned by width, X by count.
    pub midi_y: f64,
    pub midi: f64,
    /// Both directions were degenerate.
    pub degenerate: bool,
    pub forward: DirectionalEstimate,
    pub reverse: DirectionalEstimate,
    pub config_used: EstimatorConfig,
}

/// Per-point cell indices for both directions, as used by [`midi`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinAssignments {
    /// X cells under the fixed-width partition of X.
    pub x_binned: Vec<u32>,
    /// Y cells under the fixed-count partition of Y.
    pub y_counted: Vec<u32>,
    /// Y cells under the fixed-width partition of Y.
    pub y_binned: Vec<u32>,
    /// X cells under the fixed-count partition of X.
    pub x_counted: Vec<u32>,
}

struct ScaledAxis {
    values: Vec<f64>,
    spacing: f64,
}

fn prepare_axis(values: &[f64], axis: &'static str) -> Result<ScaledAxis> {
    let values = scale::scale_axis(values, axis)?;
    let spacing = maximal_spacing(&values).map_err(|e| match e {
        Error::DegenerateAxis { .. } => Error::DegenerateAxis { axis },
        other => other,
    })?;
    Ok(ScaledAxis { values, spacing })
}

struct Direction {
    estimate: DirectionalEstimate,
    binned_cells: Vec<u32>,
    counted_cells: Vec<u32>,
}

fn directional(
    binned: &ScaledAxis,
    binned_axis: Axis,
    counted: &ScaledAxis,
    counted_axis: Axis,
    cfg: &EstimatorConfig,
) -> Result<Direction> {
    let n = binned.values.len();
    let wp = fixed_width_partition(binned_axis, n, cfg.c, binned.spacing)?;
    let cp = fixed_count_partition(counted_axis, n)?;
    let binned_cells = assign_bins(&binned.values, &wp);
    let counted_cells = assign_bins(&counted.values, &cp);
    let hist = build_joint_histogram(&binned_cells, &counted_cells, wp.bin_count, cp.bin_count)?;

    let mi_hat = mutual_information_hat(&hist)?;
    let h_binned = entropy_hat(hist.row_marginals(), hist.n());
    let h_counted = entropy_hat(hist.col_marginals(), hist.n());
    let floor = h_binned.min(h_counted);
    let (midi, degenerate) = if floor > 0.0 {
        (mi_hat / floor, false)
    } else {
        (0.0, true)
    };
    Ok(Direction {
        estimate: DirectionalEstimate {
            mi_hat,
            h_binned,
            h_counted,
            midi,
            degenerate,
            binned_partition: wp,
            counted_partition: cp,
        },
        binned_cells,
        counted_cells,
    })
}

/// Directional index with X as the fixed-width axis and Y as the
/// fixed-count axis.
pub fn midi_directional(xs: &[f64], ys: &[f64], cfg: &EstimatorConfig) -> Result<DirectionalEstimate> {
    validate_pair(xs, ys)?;
    partition::check_exponent(cfg.c)?;
    let x = prepare_axis(xs, "x")?;
    let y = prepare_axis(ys, "y")?;
    Ok(directional(&x, Axis::X, &y, Axis::Y, cfg)?.estimate)
}

/// The dependence index: the larger of the two directional estimates.
pub fn midi(xs: &[f64], ys: &[f64], cfg: &EstimatorConfig) -> Result<EstimateReport> {
    Ok(run(xs, ys, cfg)?.0)
}

/// Cell assignments underlying [`midi`] for the same inputs.
pub fn bin_assignments(xs: &[f64], ys: &[f64], cfg: &EstimatorConfig) -> Result<BinAssignments> {
    Ok(run(xs, ys, cfg)?.1)
}

fn run(xs: &[f64], ys: &[f64], cfg: &EstimatorConfig) -> Result<(EstimateReport, BinAssignments)> {
    validate_pair(xs, ys)?;
    partition::check_exponent(cfg.c)?;
    let x = prepare_axis(xs, "x")?;
    let y = prepare_axis(ys, "y")?;
    let fwd = directional(&x, Axis::X, &y, Axis::Y, cfg)?;
    let rev = directional(&y, Axis::Y, &x, Axis::X, cfg)?;

    let (f, r) = (&fwd.estimate, &rev.estimate);
    let (midi, mi_hat, hx_hat, hy_hat) = if f.midi >= r.midi {
        (f.midi, f.mi_hat, f.h_binned, f.h_counted)
    } else {
        (r.midi, r.mi_hat, r.h_counted, r.h_binned)
    };
    let report = EstimateReport {
        mi_hat,
        hx_hat,
        hy_hat,
        midi_x: f.midi,
        midi_y: r.midi,
        midi,
        degenerate: f.degenerate && r.degenerate,
        forward: fwd.estimate,
        reverse: rev.estimate,
        config_used: *cfg,
    };
    let cells = BinAssignments {
        x_binned: fwd.binned_cells,
        y_counted: fwd.counted_cells,
        y_binned: rev.binned_cells,
        x_counted: rev.counted_cells,
    };
    Ok((report, cells))
}

impl SampleSet {
    pub fn midi(&self, cfg: &EstimatorConfig) -> Result<EstimateReport> {
        midi(&self.xs, &self.ys, cfg)
    }
}
