//! Python bindings for `midi-core`.

use midi_core::baselines::{self, DcorReport};
use midi_core::datagen::{self, FunctionKind, NoiseSpec};
use midi_core::estimator::{self, DirectionalEstimate, EstimateReport, EstimatorConfig};
use midi_core::power::{PowerCurve, PowerHarness};
use midi_core::{Error, Measure};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(midi_py, DegenerateAxisError, PyValueError, "An axis has zero range.");

fn to_py(e: Error) -> PyErr {
    match e {
        Error::DegenerateAxis { .. } => DegenerateAxisError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn config(c: f64) -> PyResult<EstimatorConfig> {
    EstimatorConfig::new(c).map_err(to_py)
}

/// One axis-role assignment of the estimator.
#[pyclass(name = "DirectionalEstimate", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
pub struct PyDirectional {
    mi_hat: f64,
    h_binned: f64,
    h_counted: f64,
    midi: f64,
    degenerate: bool,
    binned_cells: usize,
    counted_cells: usize,
    bin_length: f64,
}

impl From<&DirectionalEstimate> for PyDirectional {
    fn from(d: &DirectionalEstimate) -> Self {
        Self {
            mi_hat: d.mi_hat,
            h_binned: d.h_binned,
            h_counted: d.h_counted,
            midi: d.midi,
            degenerate: d.degenerate,
            binned_cells: d.binned_partition.bin_count,
            counted_cells: d.counted_partition.bin_count,
            bin_length: d.binned_partition.cell_width(),
        }
    }
}

#[pymethods]
impl PyDirectional {
    fn __repr__(&self) -> String {
        format!(
            "DirectionalEstimate(midi={:.6}, mi_hat={:.6}, cells={}x{})",
            self.midi, self.mi_hat, self.binned_cells, self.counted_cells
        )
    }
}

#[pyclass(name = "EstimateReport", frozen, get_all)]
pub struct PyEstimateReport {
    mi_hat: f64,
    hx_hat: f64,
    hy_hat: f64,
    midi_x: f64,
    midi_y: f64,
    midi: f64,
    degenerate: bool,
    c: f64,
    forward: PyDirectional,
    reverse: PyDirectional,
}

impl From<EstimateReport> for PyEstimateReport {
    fn from(r: EstimateReport) -> Self {
        Self {
            mi_hat: r.mi_hat,
            hx_hat: r.hx_hat,
            hy_hat: r.hy_hat,
            midi_x: r.midi_x,
            midi_y: r.midi_y,
            midi: r.midi,
            degenerate: r.degenerate,
            c: r.config_used.c,
            forward: (&r.forward).into(),
            reverse: (&r.reverse).into(),
        }
    }
}

#[pymethods]
impl PyEstimateReport {
    fn __repr__(&self) -> String {
        format!(
            "EstimateReport(midi={:.6}, midi_x={:.6}, midi_y={:.6}, degenerate={})",
            self.midi, self.midi_x, self.midi_y, self.degenerate
        )
    }
}

#[pyclass(name = "DcorReport", frozen, get_all)]
pub struct PyDcorReport {
    dcov_sq: f64,
    dvar_x: f64,
    dvar_y: f64,
    dcor: f64,
}

impl From<DcorReport> for PyDcorReport {
    fn from(r: DcorReport) -> Self {
        Self {
            dcov_sq: r.dcov_sq,
            dvar_x: r.dvar_x,
            dvar_y: r.dvar_y,
            dcor: r.dcor,
        }
    }
}

#[pymethods]
impl PyDcorReport {
    fn __repr__(&self) -> String {
        format!("DcorReport(dcor={:.6}, dcov_sq={:.6})", self.dcor, self.dcov_sq)
    }
}

#[pyclass(name = "PowerCurve", frozen, get_all)]
pub struct PyPowerCurve {
    measure: String,
    function: String,
    noise_scale: f64,
    sigmas: Vec<f64>,
    powers: Vec<f64>,
    cutoff: f64,
    reps: usize,
    n_points: usize,
    base_seed: u64,
}

impl From<PowerCurve> for PyPowerCurve {
    fn from(c: PowerCurve) -> Self {
        Self {
            measure: c.measure.to_string(),
            function: c.function.to_string(),
            noise_scale: c.noise_scale,
            sigmas: c.levels.iter().map(|l| l.sigma).collect(),
            powers: c.levels.iter().map(|l| l.power).collect(),
            cutoff: c.cutoff,
            reps: c.reps,
            n_points: c.n_points,
            base_seed: c.base_seed,
        }
    }
}

#[pymethods]
impl PyPowerCurve {
    fn __len__(&self) -> usize {
        self.powers.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "PowerCurve(measure={}, function={}, cutoff={:.6}, levels={})",
            self.measure,
            self.function,
            self.cutoff,
            self.powers.len()
        )
    }
}

/// Dependence index of paired samples.
#[pyfunction]
#[pyo3(signature = (xs, ys, c = estimator::DEFAULT_EXPONENT))]
fn midi(py: Python<'_>, xs: Vec<f64>, ys: Vec<f64>, c: f64) -> PyResult<PyEstimateReport> {
    let cfg = config(c)?;
    py.detach(|| estimator::midi(&xs, &ys, &cfg))
        .map(Into::into)
        .map_err(to_py)
}

/// Directional index with `xs` on the fixed-width axis.
#[pyfunction]
#[pyo3(signature = (xs, ys, c = estimator::DEFAULT_EXPONENT))]
fn midi_directional(xs: Vec<f64>, ys: Vec<f64>, c: f64) -> PyResult<PyDirectional> {
    let cfg = config(c)?;
    estimator::midi_directional(&xs, &ys, &cfg)
        .map(|d| (&d).into())
        .map_err(to_py)
}

#[pyfunction]
fn scale_to_unit(values: Vec<f64>) -> PyResult<Vec<f64>> {
    estimator::scale_to_unit(&values).map_err(to_py)
}

#[pyfunction]
fn maximal_spacing(values: Vec<f64>) -> PyResult<f64> {
    estimator::maximal_spacing(&values).map_err(to_py)
}

#[pyfunction]
fn distance_correlation(py: Python<'_>, xs: Vec<f64>, ys: Vec<f64>) -> PyResult<PyDcorReport> {
    py.detach(|| baselines::distance_correlation(&xs, &ys))
        .map(Into::into)
        .map_err(to_py)
}

#[pyfunction]
fn pearson(xs: Vec<f64>, ys: Vec<f64>) -> PyResult<f64> {
    baselines::pearson(&xs, &ys).map_err(to_py)
}

#[pyfunction]
fn spearman(xs: Vec<f64>, ys: Vec<f64>) -> PyResult<f64> {
    baselines::spearman(&xs, &ys).map_err(to_py)
}

/// Draws `n` pairs of the named relationship; returns `(xs, ys)`.
#[pyfunction]
#[pyo3(signature = (kind, n, seed = 0))]
fn generate(kind: &str, n: usize, seed: u64) -> PyResult<(Vec<f64>, Vec<f64>)> {
    let kind: FunctionKind = kind.parse().map_err(to_py)?;
    datagen::generate(kind, n, seed)
        .map(|s| s.into_parts())
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (n, rho, seed = 0))]
fn generate_bivariate_normal(n: usize, rho: f64, seed: u64) -> PyResult<(Vec<f64>, Vec<f64>)> {
    datagen::generate_bivariate_normal(n, rho, seed)
        .map(|s| s.into_parts())
        .map_err(to_py)
}

/// Adds noise to `ys`. `kind` is `"uniform_variance"` (level = variance) or
/// `"gaussian_sigma"` (level = standard deviation).
#[pyfunction]
#[pyo3(signature = (ys, kind, level, seed = 0))]
fn add_noise(ys: Vec<f64>, kind: &str, level: f64, seed: u64) -> PyResult<Vec<f64>> {
    let spec = match kind {
        "uniform_variance" => NoiseSpec::uniform_variance(level, seed),
        "gaussian_sigma" => NoiseSpec::gaussian_sigma(level, seed),
        other => return Err(PyValueError::new_err(format!("unknown noise kind `{other}`"))),
    };
    datagen::add_noise(&ys, &spec).map_err(to_py)
}

fn harness(measure: &str, reps: usize, n: usize, c: f64) -> PyResult<PowerHarness> {
    let measure: Measure = measure.parse().map_err(to_py)?;
    Ok(PowerHarness::new(measure)
        .reps(reps)
        .n_points(n)
        .estimator(config(c)?))
}

#[pyfunction]
#[pyo3(signature = (measure, reps = 500, n = 1000, seed = 0, c = estimator::DEFAULT_EXPONENT))]
fn null_cutoff(py: Python<'_>, measure: &str, reps: usize, n: usize, seed: u64, c: f64) -> PyResult<f64> {
    let h = harness(measure, reps, n, c)?;
    py.detach(|| h.null_cutoff(seed)).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (measure, function, reps = 500, n = 1000, seed = 0, c = estimator::DEFAULT_EXPONENT))]
fn power_curve(
    py: Python<'_>,
    measure: &str,
    function: &str,
    reps: usize,
    n: usize,
    seed: u64,
    c: f64,
) -> PyResult<PyPowerCurve> {
    let h = harness(measure, reps, n, c)?;
    let function: FunctionKind = function.parse().map_err(to_py)?;
    py.detach(|| h.power_curve(function, seed))
        .map(Into::into)
        .map_err(to_py)
}

#[pymodule]
fn midi_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DegenerateAxisError", m.py().get_type::<DegenerateAxisError>())?;
    m.add_class::<PyEstimateReport>()?;
    m.add_class::<PyDirectional>()?;
    m.add_class::<PyDcorReport>()?;
    m.add_class::<PyPowerCurve>()?;
    m.add_function(wrap_pyfunction!(midi, m)?)?;
    m.add_function(wrap_pyfunction!(midi_directional, m)?)?;
    m.add_function(wrap_pyfunction!(scale_to_unit, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_spacing, m)?)?;
    m.add_function(wrap_pyfunction!(distance_correlation, m)?)?;
    m.add_function(wrap_pyfunction!(pearson, m)?)?;
    m.add_function(wrap_pyfunction!(spearman, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(generate_bivariate_normal, m)?)?;
    m.add_function(wrap_pyfunction!(add_noise, m)?)?;
    m.add_function(wrap_pyfunction!(null_cutoff, m)?)?;
    m.add_function(wrap_pyfunction!(power_curve, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
