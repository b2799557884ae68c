//! Independent reference implementations used only by tests.
//!
//! Nothing here calls into the library's estimator internals: spacing is a
//! sort-and-scan, cells are found by walking boundaries, counting is a
//! double loop over points and cells, and entropies are summed directly
//! from probabilities.

#![allow(dead_code, clippy::needless_range_loop)]

pub struct Oracle {
    pub mi: f64,
    pub hx: f64,
    pub hy: f64,
}

fn unit(v: &[f64]) -> Vec<f64> {
    let lo = v.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    v.iter()
        .map(|&a| if a == hi { 1.0 } else { ((a - lo) / (hi - lo)).min(1.0) })
        .collect()
}

fn largest_gap(v: &[f64]) -> f64 {
    let mut s = v.to_vec();
    s.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut best = 0.0;
    for i in 1..s.len() {
        if s[i] - s[i - 1] > best {
            best = s[i] - s[i - 1];
        }
    }
    best
}

fn digits_minus_one(n: usize) -> usize {
    n.to_string().len() - 1
}

/// Cell `k` such that `lower(k) <= v < lower(k + 1)`, last cell closed.
fn walk_cell(v: f64, cells: usize, lower: impl Fn(usize) -> f64) -> usize {
    let mut k = 0;
    while k + 1 < cells && v >= lower(k + 1) {
        k += 1;
    }
    k
}

/// Forward direction: x on fixed-width cells, y on count cells.
pub fn forward(xs: &[f64], ys: &[f64], c: f64) -> Oracle {
    let n = xs.len();
    let (ux, uy) = (unit(xs), unit(ys));
    let width = ((n as f64).powf(c) * largest_gap(&ux)).min(1.0);
    let nx = (1.0 / width).ceil() as usize;
    let ny = digits_minus_one(n).max(2);

    let cx: Vec<usize> = ux.iter().map(|&v| walk_cell(v, nx, |k| k as f64 * width)).collect();
    let cy: Vec<usize> = uy
        .iter()
        .map(|&v| walk_cell(v, ny, |k| k as f64 / ny as f64))
        .collect();

    let mut joint = vec![vec![0usize; ny]; nx];
    for i in 0..nx {
        for j in 0..ny {
            for p in 0..n {
                if cx[p] == i && cy[p] == j {
                    joint[i][j] += 1;
                }
            }
        }
    }
    let nf = n as f64;
    let px: Vec<f64> = joint.iter().map(|r| r.iter().sum::<usize>() as f64 / nf).collect();
    let py: Vec<f64> = (0..ny)
        .map(|j| joint.iter().map(|r| r[j]).sum::<usize>() as f64 / nf)
        .collect();
    let h = |p: &[f64]| -> f64 { p.iter().filter(|&&q| q > 0.0).map(|&q| -q * q.ln()).sum() };
    let mut mi = 0.0;
    for i in 0..nx {
        for j in 0..ny {
            let pij = joint[i][j] as f64 / nf;
            if pij > 0.0 {
                mi += pij * (pij / (px[i] * py[j])).ln();
            }
        }
    }
    Oracle {
        mi,
        hx: h(&px),
        hy: h(&py),
    }
}

/// Squared distance covariance and variances from explicit
/// double-centered distance matrices.
pub fn dcov_matrices(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len();
    let centered = |v: &[f64]| -> Vec<Vec<f64>> {
        let d: Vec<Vec<f64>> = (0..n)
            .map(|k| (0..n).map(|l| (v[k] - v[l]).abs()).collect())
            .collect();
        let row: Vec<f64> = d.iter().map(|r| r.iter().sum::<f64>() / n as f64).collect();
        let col: Vec<f64> = (0..n).map(|l| d.iter().map(|r| r[l]).sum::<f64>() / n as f64).collect();
        let all: f64 = d.iter().flatten().sum::<f64>() / (n * n) as f64;
        (0..n)
            .map(|k| (0..n).map(|l| d[k][l] - row[k] - col[l] + all).collect())
            .collect()
    };
    let (a, b) = (centered(xs), centered(ys));
    let nn = (n * n) as f64;
    let mut s = (0.0, 0.0, 0.0);
    for k in 0..n {
        for l in 0..n {
            s.0 += a[k][l] * b[k][l];
            s.1 += a[k][l] * a[k][l];
            s.2 += b[k][l] * b[k][l];
        }
    }
    (s.0 / nn, s.1 / nn, s.2 / nn)
}

/// Small deterministic generator so oracle datasets do not depend on the
/// library's RNG plumbing.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next_f64(&mut self) -> f64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn below(&mut self, k: usize) -> usize {
        (self.next_f64() * k as f64) as usize
    }

    /// Random dataset with `2 <= n <= max_n`, non-constant axes, and a mix
    /// of continuous, tied and functionally related values.
    pub fn dataset(&mut self, max_n: usize) -> (Vec<f64>, Vec<f64>) {
        loop {
            let n = 2 + self.below(max_n - 1);
            let style = self.below(3);
            let xs: Vec<f64> = (0..n)
                .map(|_| match style {
                    0 => self.next_f64() * 20.0 - 5.0,
                    _ => self.below(6) as f64,
                })
                .collect();
            let ys: Vec<f64> = xs
                .iter()
                .map(|&x| match style {
                    2 => (x * 1.3).sin() + 0.1 * self.next_f64(),
                    _ => self.next_f64() * 3.0,
                })
                .collect();
            let varies = |v: &[f64]| v.iter().any(|&a| a != v[0]);
            if varies(&xs) && varies(&ys) {
                return (xs, ys);
            }
        }
    }
}
