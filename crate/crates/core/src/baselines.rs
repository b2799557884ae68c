//! Reference dependence measures: distance correlation, Pearson and
//! Spearman.

use serde::{Deserialize, Serialize};

use crate::estimator::validate_pair;
use crate::{Error, Result};

/// Largest sample the command line accepts for distance correlation
/// without an explicit override.
pub const DCOR_SIZE_GUARD: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DcorReport {
    /// Squared sample distance covariance.
    pub dcov_sq: f64,
    /// Squared sample distance variance of x.
    pub dvar_x: f64,
    pub dvar_y: f64,
    /// Distance correlation, the square root of
    /// `dcov_sq / sqrt(dvar_x * dvar_y)`; 0 when either variance is 0.
    pub dcor: f64,
}

/// Sample distance correlation with double-centered absolute-difference
/// matrices.
///
/// Runs in `O(n^2)` time but `O(n)` memory: the centered entries are
/// recomputed on the fly from row means instead of being stored.
pub fn distance_correlation(xs: &[f64], ys: &[f64]) -> Result<DcorReport> {
    validate_pair(xs, ys)?;
    let n = xs.len();
    let (ax, ax_all) = row_means(xs);
    let (ay, ay_all) = row_means(ys);

    let (mut cov, mut vx, mut vy) = (0.0, 0.0, 0.0);
    for k in 0..n {
        let (xk, yk) = (xs[k], ys[k]);
        let (rx, ry) = (ax_all - ax[k], ay_all - ay[k]);
        let (mut c_row, mut x_row, mut y_row) = (0.0, 0.0, 0.0);
        for l in 0..n {
            let a = (xk - xs[l]).abs() - ax[l] + rx;
            let b = (yk - ys[l]).abs() - ay[l] + ry;
            c_row += a * b;
            x_row += a * a;
            y_row += b * b;
        }
        cov += c_row;
        vx += x_row;
        vy += y_row;
    }
    let nn = (n * n) as f64;
    let dcov_sq = (cov / nn).max(0.0);
    let dvar_x = vx / nn;
    let dvar_y = vy / nn;
    Ok(DcorReport {
        dcov_sq,
        dvar_x,
        dvar_y,
        dcor: normalized(dcov_sq, dvar_x, dvar_y),
    })
}

fn normalized(dcov_sq: f64, dvar_x: f64, dvar_y: f64) -> f64 {
    let denom = dvar_x * dvar_y;
    if denom > 0.0 {
        (dcov_sq / denom.sqrt()).sqrt()
    } else {
        0.0
    }
}

/// Row means of `|v_k - v_l|` and their grand mean, via one sort and
/// prefix sums.
fn row_means(v: &[f64]) -> (Vec<f64>, f64) {
    let n = v.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| v[a].total_cmp(&v[b]));
    let total: f64 = v.iter().sum();
    let mut means = vec![0.0; n];
    let mut below = 0.0;
    for (rank, &idx) in order.iter().enumerate() {
        let x = v[idx];
        let above = total - below - x;
        let lower = rank as f64 * x - below;
        let upper = above - (n - rank - 1) as f64 * x;
        means[idx] = (lower + upper) / n as f64;
        below += x;
    }
    let grand = means.iter().sum::<f64>() / n as f64;
    (means, grand)
}

/// Sample Pearson correlation coefficient.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64> {
    validate_pair(xs, ys)?;
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        let (dx, dy) = (x - mx, y - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 {
        return Err(Error::DegenerateAxis { axis: "x" });
    }
    if syy == 0.0 {
        return Err(Error::DegenerateAxis { axis: "y" });
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

/// 1-based ranks with ties sharing their average rank.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; n];
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && values[order[end]] == values[order[start]] {
            end += 1;
        }
        let avg = (start + end + 1) as f64 / 2.0;
        for &idx in &order[start..end] {
            ranks[idx] = avg;
        }
        start = end;
    }
    ranks
}

/// Spearman rank correlation: Pearson on average ranks.
pub fn spearman(xs: &[f64], ys: &[f64]) -> Result<f64> {
    validate_pair(xs, ys)?;
    pearson(&average_ranks(xs), &average_ranks(ys))
}
