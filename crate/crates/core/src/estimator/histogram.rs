use crate::{Error, Result};

/// Rounding slack below which a negative mutual information is taken as 0.
pub const MI_ROUNDING_SLACK: f64 = 1e-12;

/// Cell counts of a two-way partition, stored row-major with rows indexed
/// by the first axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointHistogram {
    rows: usize,
    cols: usize,
    counts: Vec<u64>,
    row_marginals: Vec<u64>,
    col_marginals: Vec<u64>,
    n: u64,
}

impl JointHistogram {
    /// Builds a histogram from a dense row-major grid.
    pub fn from_counts(rows: usize, cols: usize, counts: Vec<u64>) -> Result<Self> {
        if rows == 0 || cols == 0 || counts.len() != rows * cols {
            return Err(Error::InvalidParameter(format!(
                "grid of {} counts does not match {rows}x{cols}",
                counts.len()
            )));
        }
        let mut row_marginals = vec![0u64; rows];
        let mut col_marginals = vec![0u64; cols];
        for (i, row) in counts.chunks_exact(cols).enumerate() {
            for (j, &c) in row.iter().enumerate() {
                row_marginals[i] += c;
                col_marginals[j] += c;
            }
        }
        let n = row_marginals.iter().sum();
        Ok(Self {
            rows,
            cols,
            counts,
            row_marginals,
            col_marginals,
            n,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn count(&self, i: usize, j: usize) -> u64 {
        self.counts[i * self.cols + j]
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn row_marginals(&self) -> &[u64] {
        &self.row_marginals
    }

    pub fn col_marginals(&self) -> &[u64] {
        &self.col_marginals
    }

    pub fn transpose(&self) -> Self {
        let mut t = vec![0u64; self.counts.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[j * self.rows + i] = self.count(i, j);
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            counts: t,
            row_marginals: self.col_marginals.clone(),
            col_marginals: self.row_marginals.clone(),
            n: self.n,
        }
    }
}

/// Counts points per cell given per-point cell indices on each axis.
pub fn build_joint_histogram(ix: &[u32], iy: &[u32], nx: usize, ny: usize) -> Result<JointHistogram> {
    if ix.len() != iy.len() {
        return Err(Error::LengthMismatch {
            left: ix.len(),
            right: iy.len(),
        });
    }
    if nx == 0 || ny == 0 {
        return Err(Error::InvalidParameter("histogram needs at least one cell per axis".into()));
    }
    let mut counts = vec![0u64; nx * ny];
    let mut row_marginals = vec![0u64; nx];
    let mut col_marginals = vec![0u64; ny];
    for (&i, &j) in ix.iter().zip(iy) {
        let (i, j) = (i as usize, j as usize);
        if i >= nx || j >= ny {
            return Err(Error::InvalidParameter(format!(
                "cell ({i}, {j}) outside {nx}x{ny} grid"
            )));
        }
        counts[i * ny + j] += 1;
        row_marginals[i] += 1;
        col_marginals[j] += 1;
    }
    Ok(JointHistogram {
        rows: nx,
        cols: ny,
        counts,
        row_marginals,
        col_marginals,
        n: ix.len() as u64,
    })
}

/// Plug-in entropy in nats, `sum (k/n) ln(n/k)` over non-empty cells.
pub fn entropy_hat(marginal: &[u64], n: u64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let nf = n as f64;
    marginal
        .iter()
        .filter(|&&k| k > 0)
        .map(|&k| {
            let k = k as f64;
            k / nf * (nf / k).ln()
        })
        .sum()
}

/// Plug-in mutual information in nats,
/// `sum (k_ij/n) ln(n k_ij / (k_i k_j))` over non-empty cells.
pub fn mutual_information_hat(h: &JointHistogram) -> Result<f64> {
    if h.n == 0 {
        return Ok(0.0);
    }
    let nf = h.n as f64;
    let mut total = 0.0;
    for (i, row) in h.counts.chunks_exact(h.cols).enumerate() {
        let ri = h.row_marginals[i] as f64;
        if ri == 0.0 {
            continue;
        }
        for (j, &k) in row.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let k = k as f64;
            let cj = h.col_marginals[j] as f64;
            total += k / nf * (nf * k / (ri * cj)).ln();
        }
    }
    if total >= 0.0 {
        Ok(total)
    } else if total > -MI_ROUNDING_SLACK {
        Ok(0.0)
    } else {
        Err(Error::Inconsistent(format!(
            "plug-in mutual information came out as {total}"
        )))
    }
}

/// Plug-in entropy of the joint cell distribution.
pub fn joint_entropy_hat(h: &JointHistogram) -> f64 {
    entropy_hat(&h.counts, h.n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::LN_2;

    fn grid(rows: usize, cols: usize, c: &[u64]) -> JointHistogram {
        JointHistogram::from_counts(rows, cols, c.to_vec()).unwrap()
    }

    #[test]
    fn counting() {
        let h = build_joint_histogram(&[0, 0, 1], &[0, 1, 1], 2, 2).unwrap();
        assert_eq!(h.counts(), &[1, 1, 0, 1]);
        assert_eq!(h.row_marginals(), &[2, 1]);
        assert_eq!(h.col_marginals(), &[1, 2]);
        assert_eq!(h.n(), 3);

        let d = build_joint_histogram(&[0, 1, 2], &[0, 1, 2], 3, 3).unwrap();
        assert_eq!(d.counts(), &[1, 0, 0, 0, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn empty_cells_stay_zero() {
        let h = build_joint_histogram(&[0, 0], &[0, 0], 3, 2).unwrap();
        assert_eq!(h.counts(), &[2, 0, 0, 0, 0, 0]);
        assert_eq!(h.row_marginals(), &[2, 0, 0]);
    }

    #[test]
    fn out_of_range_index_rejected() {
        assert!(build_joint_histogram(&[2], &[0], 2, 2).is_err());
        assert!(build_joint_histogram(&[0, 1], &[0], 2, 2).is_err());
    }

    #[test]
    fn entropy_examples() {
        assert!((entropy_hat(&[2, 2], 4) - LN_2).abs() < 1e-15);
        assert_eq!(entropy_hat(&[4], 4), 0.0);
        assert!((entropy_hat(&[1, 3], 4) - 0.562_335_144_618_808_3).abs() < 1e-15);
        assert!((entropy_hat(&[0, 2, 0, 2], 4) - LN_2).abs() < 1e-15);
    }

    #[test]
    fn mutual_information_examples() {
        assert!((mutual_information_hat(&grid(2, 2, &[2, 0, 0, 2])).unwrap() - LN_2).abs() < 1e-15);
        assert_eq!(mutual_information_hat(&grid(2, 2, &[1, 1, 1, 1])).unwrap(), 0.0);
        let mi = mutual_information_hat(&grid(2, 2, &[2, 1, 0, 1])).unwrap();
        assert!((mi - 0.215_761_554_338_835_7).abs() < 1e-15);
    }

    #[test]
    fn bijection_reaches_marginal_entropy() {
        let h = grid(3, 3, &[0, 5, 0, 0, 0, 2, 7, 0, 0]);
        let mi = mutual_information_hat(&h).unwrap();
        let hx = entropy_hat(h.row_marginals(), h.n());
        assert!((mi - hx).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn transpose_symmetry_and_chain_rule(
            rows in 1usize..6,
            cols in 1usize..6,
            seed in prop::collection::vec(0u64..20, 36),
        ) {
            let mut counts: Vec<u64> = seed[..rows * cols].to_vec();
            if counts.iter().all(|&c| c == 0) {
                counts[0] = 1;
            }
            let h = grid(rows, cols, &counts);
            let mi = mutual_information_hat(&h).unwrap();
            let mi_t = mutual_information_hat(&h.transpose()).unwrap();
            prop_assert!((mi - mi_t).abs() < 1e-12);

            let hx = entropy_hat(h.row_marginals(), h.n());
            let hy = entropy_hat(h.col_marginals(), h.n());
            let hxy = joint_entropy_hat(&h);
            prop_assert!((mi - (hx + hy - hxy)).abs() < 1e-10);
            prop_assert!(mi <= hx.min(hy) + 1e-12);
        }
    }
}
