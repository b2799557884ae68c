//! Largest gap between consecutive order statistics.
//!
//! Sorting is not needed. With `n` values spread over `[lo, hi]` the largest
//! gap is at least `(hi - lo) / (n - 1)`. Dropping the values into `n`
//! equal buckets of width `(hi - lo) / n` means any gap inside a bucket is
//! strictly smaller than that bound, so the answer is always a gap between
//! the maximum of one occupied bucket and the minimum of the next. This
//! gives an `O(n)` pass instead of an `O(n log n)` sort.

use super::scale::{check_finite, min_max};
use crate::{Error, Result};

/// Returns `max_i (v_(i+1) - v_(i))` over the order statistics of `values`.
///
/// Only observed points count: the interval endpoints are not padded in.
/// Input order does not matter.
pub fn maximal_spacing(values: &[f64]) -> Result<f64> {
    let n = values.len();
    if n < 2 {
        return Err(Error::TooFewSamples { needed: 2, got: n });
    }
    check_finite(values)?;
    let (lo, hi) = min_max(values);
    if hi <= lo {
        return Err(Error::DegenerateAxis { axis: "values" });
    }
    if n == 2 {
        return Ok(hi - lo);
    }

    let buckets = n;
    let scale = buckets as f64 / (hi - lo);
    let mut bucket_min = vec![f64::INFINITY; buckets];
    let mut bucket_max = vec![f64::NEG_INFINITY; buckets];
    for &v in values {
        let b = (((v - lo) * scale) as usize).min(buckets - 1);
        if v < bucket_min[b] {
            bucket_min[b] = v;
        }
        if v > bucket_max[b] {
            bucket_max[b] = v;
        }
    }

    let mut best = 0.0f64;
    let mut prev_max = bucket_max[0];
    for b in 1..buckets {
        if bucket_min[b] == f64::INFINITY {
            continue;
        }
        best = best.max(bucket_min[b] - prev_max);
        prev_max = bucket_max[b];
    }
    if best > 0.0 {
        Ok(best)
    } else {
        Err(Error::DegenerateAxis { axis: "values" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sorted_scan(values: &[f64]) -> f64 {
        let mut v = values.to_vec();
        v.sort_by(f64::total_cmp);
        v.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max)
    }

    #[test]
    fn definition_examples() {
        assert!((maximal_spacing(&[0.0, 0.2, 0.9, 1.0]).unwrap() - 0.7).abs() < 1e-15);
        assert_eq!(maximal_spacing(&[0.0, 0.25, 0.5, 0.75, 1.0]).unwrap(), 0.25);
        assert_eq!(maximal_spacing(&[0.0, 1.0]).unwrap(), 1.0);
    }

    #[test]
    fn order_does_not_matter() {
        assert!((maximal_spacing(&[1.0, 0.9, 0.0, 0.2]).unwrap() - 0.7).abs() < 1e-15);
    }

    #[test]
    fn duplicates_never_win() {
        assert_eq!(maximal_spacing(&[0.0, 0.0, 0.0, 0.4, 1.0, 1.0]).unwrap(), 0.6);
    }

    #[test]
    fn all_equal_is_degenerate() {
        assert!(matches!(
            maximal_spacing(&[0.3, 0.3, 0.3]),
            Err(Error::DegenerateAxis { .. })
        ));
    }

    proptest! {
        #[test]
        fn matches_sorted_scan(values in prop::collection::vec(-1e6f64..1e6, 2..300)) {
            prop_assume!(values.iter().any(|&v| v != values[0]));
            prop_assert_eq!(maximal_spacing(&values).unwrap(), sorted_scan(&values));
        }

        #[test]
        fn matches_sorted_scan_with_ties(values in prop::collection::vec(0u8..20, 2..200)) {
            let values: Vec<f64> = values.into_iter().map(|v| v as f64 / 19.0).collect();
            prop_assume!(values.iter().any(|&v| v != values[0]));
            prop_assert_eq!(maximal_spacing(&values).unwrap(), sorted_scan(&values));
        }
    }
}
