use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;
use std::time::Instant;

use midi_core::baselines::{distance_correlation, pearson, spearman, DCOR_SIZE_GUARD};
use midi_core::datagen::{add_noise_in_place, generate as generate_data, FunctionKind, NoiseSpec};
use midi_core::measure::parse_measures;
use midi_core::power::{PowerHarness, DEFAULT_POINTS};
use midi_core::screen::{screen as screen_table, ScreenOptions};
use midi_core::table::{write_pairs, Table};
use midi_core::{midi, EstimatorConfig, Measure};
use serde_json::json;

use crate::config::ConfigFile;
use crate::{alloc, BenchArgs, CliError, ComputeArgs, GenerateArgs, PowerArgs, ReportFormat, ScreenArgs, TableFormat};

const SCHEMA: u32 = 1;

fn write_output(path: Option<&Path>, content: &[u8]) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(content)
            .map_err(|e| CliError::input(format!("cannot write to stdout: {e}"))),
    }
}

fn dcor_guard(n: usize, force: bool) -> Result<(), CliError> {
    if n > DCOR_SIZE_GUARD && !force {
        return Err(CliError::input(format!(
            "distance correlation needs O(n^2) time; refusing n = {n} > {DCOR_SIZE_GUARD} without --force"
        )));
    }
    Ok(())
}

fn to_json(value: &impl serde::Serialize) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("serializable");
    out.push(b'\n');
    out
}

pub fn compute(args: &ComputeArgs, cfg: &ConfigFile) -> Result<(), CliError> {
    let measures = parse_measures(&args.measure)?;
    let estimator = EstimatorConfig::new(cfg.c(args.c)?)?;
    let table = Table::from_path(&args.input)?;
    let xi = table.column_index(&args.x_col)?;
    let yi = table.column_index(&args.y_col)?;
    let (xs, ys) = table.complete_pair(xi, yi)?;
    if measures.contains(&Measure::Dcor) {
        dcor_guard(xs.len(), args.force)?;
    }

    let mut doc = json!({
        "schema": SCHEMA,
        "x_col": table.headers()[xi],
        "y_col": table.headers()[yi],
        "n": xs.len(),
    });
    for m in &measures {
        let value = match m {
            Measure::Midi => serde_json::to_value(midi(&xs, &ys, &estimator)?),
            Measure::Dcor => serde_json::to_value(distance_correlation(&xs, &ys)?),
            Measure::Pearson => serde_json::to_value(pearson(&xs, &ys)?),
            Measure::Spearman => serde_json::to_value(spearman(&xs, &ys)?),
        }
        .expect("serializable");
        doc[m.name()] = value;
    }

    let out = match args.out {
        ReportFormat::Json => to_json(&doc),
        ReportFormat::Text => render_text(&doc).into_bytes(),
    };
    write_output(None, &out)
}

fn render_text(doc: &serde_json::Value) -> String {
    let mut rows: Vec<(String, String)> = Vec::new();
    let num = |v: &serde_json::Value| match v.as_f64() {
        Some(f) if v.is_f64() => format!("{f:.6}"),
        _ => v.to_string().trim_matches('"').to_string(),
    };
    for key in ["x_col", "y_col", "n"] {
        rows.push((key.into(), num(&doc[key])));
    }
    if let Some(m) = doc.get("midi") {
        for key in ["midi", "midi_x", "midi_y", "mi_hat", "hx_hat", "hy_hat", "degenerate"] {
            rows.push((key.into(), num(&m[key])));
        }
    }
    if let Some(d) = doc.get("dcor") {
        rows.push(("dcor".into(), num(&d["dcor"])));
        rows.push(("dcov_sq".into(), num(&d["dcov_sq"])));
    }
    for key in ["pearson", "spearman"] {
        if let Some(v) = doc.get(key) {
            rows.push((key.into(), num(v)));
        }
    }
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<width$}  {v}");
    }
    out
}

pub fn generate(args: &GenerateArgs, cfg: &ConfigFile) -> Result<(), CliError> {
    let kind: FunctionKind = args.kind.parse()?;
    let n = cfg.n(args.n, DEFAULT_POINTS)?;
    let seed = cfg.seed(args.seed)?;
    let mut data = generate_data(kind, n, seed)?;
    let noise = match (args.noise_uniform_var, args.noise_gaussian_sigma) {
        (Some(v), _) => Some(NoiseSpec::uniform_variance(v, seed)),
        (None, Some(s)) => Some(NoiseSpec::gaussian_sigma(s, seed)),
        (None, None) => None,
    };
    if let Some(spec) = noise {
        add_noise_in_place(data.ys_mut(), &spec)?;
    }
    let mut buf = Vec::new();
    write_pairs(&mut buf, data.xs(), data.ys()).expect("in-memory write");
    write_output(args.output.as_deref(), &buf)
}

pub fn power(args: &PowerArgs, cfg: &ConfigFile) -> Result<(), CliError> {
    let measure: Measure = args.measure.parse()?;
    let function: FunctionKind = args.function.parse()?;
    if function.noise_scale().is_none() {
        return Err(CliError::input(format!(
            "`{function}` is not one of the power-study functions"
        )));
    }
    let harness = PowerHarness::new(measure)
        .reps(cfg.reps(args.reps)?)
        .n_points(cfg.n(args.n, DEFAULT_POINTS)?)
        .estimator(EstimatorConfig::new(cfg.c(args.c)?)?);
    let seed = cfg.seed(args.seed)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs(args.jobs)?)
        .build()
        .map_err(|e| CliError::input(format!("worker pool: {e}")))?;
    let curve = pool.install(|| harness.power_curve(function, seed))?;
    let out = match args.format {
        TableFormat::Csv => curve.to_csv().into_bytes(),
        TableFormat::Json => to_json(&json!({ "schema": SCHEMA, "curve": curve })),
    };
    write_output(args.output.as_deref(), &out)
}

pub fn screen(args: &ScreenArgs, cfg: &ConfigFile) -> Result<(), CliError> {
    let extra = parse_measures(&args.measures)?;
    let table = Table::from_path(&args.input)?;
    // An unusable reference is a data problem for the whole run, like a constant one.
    if let Err(e) = table.column_index(&args.reference) {
        return Err(CliError {
            code: 3,
            message: e.to_string(),
        });
    }
    let opts = ScreenOptions {
        extra,
        estimator: EstimatorConfig::new(cfg.c(args.c)?)?,
        jobs: Some(cfg.jobs(args.jobs)?),
    };
    let results = screen_table(&table, &args.reference, &opts)?;
    let out = match args.format {
        TableFormat::Json => to_json(&json!({
            "schema": SCHEMA,
            "reference": args.reference,
            "results": results,
        })),
        TableFormat::Csv => {
            let opt = |v: Option<f64>| v.map_or(String::new(), |x| x.to_string());
            let mut s = String::from("rank,column_id,midi,dcor,pearson,spearman,n_used,degenerate\n");
            for (i, r) in results.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{}",
                    i + 1,
                    csv_field(&r.column_id),
                    r.midi,
                    opt(r.dcor),
                    opt(r.pearson),
                    opt(r.spearman),
                    r.n_used,
                    r.degenerate
                );
            }
            s.into_bytes()
        }
    };
    write_output(args.output.as_deref(), &out)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn parse_sizes(list: &str) -> Result<Vec<usize>, CliError> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            let v: f64 = s
                .trim()
                .parse()
                .map_err(|_| CliError::input(format!("bad size `{s}`")))?;
            if v < 2.0 || v.fract() != 0.0 || v > usize::MAX as f64 {
                return Err(CliError::input(format!("size must be an integer >= 2, got `{s}`")));
            }
            Ok(v as usize)
        })
        .collect()
}

pub fn bench(args: &BenchArgs, cfg: &ConfigFile) -> Result<(), CliError> {
    let sizes = parse_sizes(&args.sizes)?;
    let measures = parse_measures(&args.measures)?;
    if measures.contains(&Measure::Dcor) {
        for &n in &sizes {
            dcor_guard(n, args.force)?;
        }
    }
    let seed = cfg.seed(args.seed)?;
    let estimator = EstimatorConfig::default();

    let mut out = String::from("measure,n,seconds,peak_bytes\n");
    for &n in &sizes {
        let data = generate_data(FunctionKind::Line, n, seed)?;
        for m in &measures {
            // Peak live heap while the measure runs, input columns included.
            alloc::reset_peak();
            let start = Instant::now();
            let value = m.evaluate(data.xs(), data.ys(), &estimator)?;
            let secs = start.elapsed().as_secs_f64();
            let peak = alloc::peak();
            std::hint::black_box(value);
            let _ = writeln!(out, "{m},{n},{secs:.6},{peak}");
        }
    }
    write_output(args.output.as_deref(), out.as_bytes())
}
