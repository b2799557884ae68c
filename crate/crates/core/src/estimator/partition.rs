use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PartitionKind {
    /// Cells `[k w, (k+1) w)` anchored at 0; the last one is closed at 1.
    FixedWidth { bin_length: f64 },
    /// `bin_count` equal cells over `[0, 1]`.
    FixedCount,
}

/// Binning of one axis of data already scaled to `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PartitionSpec {
    pub axis: Axis,
    pub kind: PartitionKind,
    pub bin_count: usize,
}

impl PartitionSpec {
    /// Width of each cell (the last fixed-width cell may be shorter).
    pub fn cell_width(&self) -> f64 {
        match self.kind {
            PartitionKind::FixedWidth { bin_length } => bin_length,
            PartitionKind::FixedCount => 1.0 / self.bin_count as f64,
        }
    }

    /// Cell index of a single scaled value.
    #[inline]
    pub fn cell_of(&self, v: f64) -> usize {
        let raw = match self.kind {
            PartitionKind::FixedWidth { bin_length } => v / bin_length,
            PartitionKind::FixedCount => v * self.bin_count as f64,
        };
        // `as usize` saturates negatives (and NaN) to 0.
        (raw.floor() as usize).min(self.bin_count - 1)
    }
}

/// Fixed-width cells of length `min(1, n^c * l_max)` on `axis`.
pub fn fixed_width_partition(axis: Axis, n: usize, c: f64, l_max: f64) -> Result<PartitionSpec> {
    if n < 2 {
        return Err(Error::TooFewSamples { needed: 2, got: n });
    }
    check_exponent(c)?;
    if !(l_max > 0.0 && l_max <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "maximal spacing must lie in (0, 1], got {l_max}"
        )));
    }
    let bin_length = ((n as f64).powf(c) * l_max).min(1.0);
    let bin_count = ((1.0 / bin_length).ceil() as usize).max(1);
    Ok(PartitionSpec {
        axis,
        kind: PartitionKind::FixedWidth { bin_length },
        bin_count,
    })
}

/// `max(2, floor(log10 n))` equal cells on `axis`.
pub fn fixed_count_partition(axis: Axis, n: usize) -> Result<PartitionSpec> {
    if n < 2 {
        return Err(Error::TooFewSamples { needed: 2, got: n });
    }
    Ok(PartitionSpec {
        axis,
        kind: PartitionKind::FixedCount,
        bin_count: log10_floor(n).max(2),
    })
}

/// Exact `floor(log10 n)` without going through floating point, which
/// misrounds at some powers of ten.
fn log10_floor(mut n: usize) -> usize {
    let mut digits = 0;
    while n >= 10 {
        n /= 10;
        digits += 1;
    }
    digits
}

/// Maps each scaled value to its cell index in `[0, spec.bin_count)`.
pub fn assign_bins(values01: &[f64], spec: &PartitionSpec) -> Vec<u32> {
    values01.iter().map(|&v| spec.cell_of(v) as u32).collect()
}

pub(crate) fn check_exponent(c: f64) -> Result<()> {
    if c > 0.0 && c < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "exponent c must lie strictly between 0 and 1, got {c}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn width_from_spacing() {
        let p = fixed_width_partition(Axis::X, 1000, 0.1, 0.1).unwrap();
        let PartitionKind::FixedWidth { bin_length } = p.kind else {
            panic!("expected fixed width")
        };
        // 10^0.3 * 0.1 evaluated at 30 digits.
        assert!((bin_length - 0.199_526_231_496_887_96).abs() < 1e-15);
        assert_eq!(p.bin_count, 6);
    }

    #[test]
    fn small_exponent_approaches_spacing() {
        let p = fixed_width_partition(Axis::X, 4, 1e-12, 0.3).unwrap();
        assert!((p.cell_width() - 0.3).abs() < 1e-11);
    }

    #[test]
    fn width_clamped_to_unit() {
        let p = fixed_width_partition(Axis::X, 100, 0.5, 0.2).unwrap();
        assert_eq!(p.cell_width(), 1.0);
        assert_eq!(p.bin_count, 1);
    }

    #[test]
    fn count_partition_sizes() {
        assert_eq!(fixed_count_partition(Axis::Y, 1000).unwrap().bin_count, 3);
        assert_eq!(fixed_count_partition(Axis::Y, 10_000).unwrap().bin_count, 4);
        assert_eq!(fixed_count_partition(Axis::Y, 50).unwrap().bin_count, 2);
        assert_eq!(fixed_count_partition(Axis::Y, 2).unwrap().bin_count, 2);
        assert_eq!(fixed_count_partition(Axis::Y, 999_999).unwrap().bin_count, 5);
        assert_eq!(fixed_count_partition(Axis::Y, 1_000_000).unwrap().bin_count, 6);
    }

    #[test]
    fn bad_parameters() {
        assert!(fixed_width_partition(Axis::X, 10, 0.0, 0.5).is_err());
        assert!(fixed_width_partition(Axis::X, 10, 1.0, 0.5).is_err());
        assert!(fixed_width_partition(Axis::X, 10, 0.1, 0.0).is_err());
        assert!(fixed_width_partition(Axis::X, 1, 0.1, 0.5).is_err());
        assert!(fixed_count_partition(Axis::Y, 1).is_err());
    }

    #[test]
    fn half_open_cells() {
        let two = fixed_count_partition(Axis::Y, 50).unwrap();
        assert_eq!(assign_bins(&[0.0, 0.5, 1.0], &two), vec![0, 1, 1]);

        let w = PartitionSpec {
            axis: Axis::X,
            kind: PartitionKind::FixedWidth {
                bin_length: 0.199526,
            },
            bin_count: 6,
        };
        assert_eq!(assign_bins(&[0.199526], &w), vec![1]);
        assert_eq!(assign_bins(&[1.0], &w), vec![5]);
    }

    #[test]
    fn single_cell_takes_everything() {
        let p = fixed_width_partition(Axis::X, 100, 0.5, 0.2).unwrap();
        assert_eq!(assign_bins(&[0.0, 0.3, 0.999, 1.0], &p), vec![0; 4]);
    }
}
