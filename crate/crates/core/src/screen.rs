//! Ranking every column of a matrix by its dependence on one reference
//! column.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::baselines::{distance_correlation, pearson, spearman};
use crate::estimator::{midi, EstimatorConfig};
use crate::measure::Measure;
use crate::table::Table;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScreenResult {
    pub column_id: String,
    pub midi: f64,
    pub dcor: Option<f64>,
    pub pearson: Option<f64>,
    pub spearman: Option<f64>,
    /// Rows left after pairwise deletion of missing values.
    pub n_used: usize,
    /// Too few rows, a constant column, or a single-cell marginal.
    pub degenerate: bool,
}

impl ScreenResult {
    fn degenerate(column_id: String, n_used: usize) -> Self {
        Self {
            column_id,
            midi: 0.0,
            dcor: None,
            pearson: None,
            spearman: None,
            n_used,
            degenerate: true,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct ScreenOptions {
    /// Baselines to compute next to MIDI; `Measure::Midi` entries are ignored.
    pub extra: Vec<Measure>,
    pub estimator: EstimatorConfig,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

/// Scores every non-reference column against `reference` and returns them
/// sorted by MIDI descending, degenerate columns last. Ties keep column
/// order.
pub fn screen(table: &Table, reference: &str, opts: &ScreenOptions) -> Result<Vec<ScreenResult>> {
    let ref_idx = table.column_index(reference)?;
    let present: Vec<f64> = table.column(ref_idx).iter().flatten().copied().collect();
    if present.len() < 2 || present.iter().all(|&v| v == present[0]) {
        return Err(Error::DegenerateAxis { axis: "reference" });
    }

    let targets: Vec<usize> = (0..table.n_cols()).filter(|&c| c != ref_idx).collect();
    let work = || -> Result<Vec<ScreenResult>> {
        targets
            .par_iter()
            .map(|&c| score_column(table, ref_idx, c, opts))
            .collect()
    };
    let mut results = match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?
            .install(work)?,
        None => work()?,
    };
    results.sort_by(|a, b| {
        a.degenerate
            .cmp(&b.degenerate)
            .then_with(|| b.midi.total_cmp(&a.midi))
    });
    Ok(results)
}

fn score_column(table: &Table, ref_idx: usize, col: usize, opts: &ScreenOptions) -> Result<ScreenResult> {
    let id = table.headers()[col].clone();
    let (xs, ys) = table.pairwise(ref_idx, col);
    let n_used = xs.len();
    let constant = |v: &[f64]| v.iter().all(|&a| a == v[0]);
    if n_used < 2 || constant(&xs) || constant(&ys) {
        return Ok(ScreenResult::degenerate(id, n_used));
    }
    let report = midi(&xs, &ys, &opts.estimator)?;
    let mut out = ScreenResult {
        column_id: id,
        midi: report.midi,
        dcor: None,
        pearson: None,
        spearman: None,
        n_used,
        degenerate: report.degenerate,
    };
    for m in &opts.extra {
        match m {
            Measure::Midi => {}
            Measure::Dcor => out.dcor = Some(distance_correlation(&xs, &ys)?.dcor),
            Measure::Pearson => out.pearson = Some(pearson(&xs, &ys)?),
            Measure::Spearman => out.spearman = Some(spearman(&xs, &ys)?),
        }
    }
    Ok(out)
}
