use crate::{Error, Result};

/// Maps `values` affinely onto `[0, 1]`: the minimum goes to exactly 0 and
/// the maximum to exactly 1.
pub fn scale_to_unit(values: &[f64]) -> Result<Vec<f64>> {
    scale_axis(values, "values")
}

pub(crate) fn scale_axis(values: &[f64], axis: &'static str) -> Result<Vec<f64>> {
    if values.len() < 2 {
        return Err(Error::TooFewSamples {
            needed: 2,
            got: values.len(),
        });
    }
    check_finite(values)?;
    let (lo, hi) = min_max(values);
    if hi <= lo {
        return Err(Error::DegenerateAxis { axis });
    }
    let range = hi - lo;
    Ok(values
        .iter()
        .map(|&v| {
            // The division can round a hair past 1 when range is tiny.
            if v == hi {
                1.0
            } else {
                ((v - lo) / range).min(1.0)
            }
        })
        .collect())
}

pub(crate) fn check_finite(values: &[f64]) -> Result<()> {
    match values.iter().position(|v| !v.is_finite()) {
        Some(index) => Err(Error::NonFinite {
            index,
            value: values[index],
        }),
        None => Ok(()),
    }
}

pub(crate) fn min_max(values: &[f64]) -> (f64, f64) {
    values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        })
}
