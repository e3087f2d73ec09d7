use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use metamob::metrics::{write_aggregates_csv, Aggregate, RunReport};
use serde::{Deserialize, Serialize};

use crate::args::{Axis, Format, Metric, ReportArgs};

/// One aggregate row as written by `simulate --format csv`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub scenario: String,
    pub n_trials: usize,
    pub n_total: usize,
    pub tau0: f64,
    pub tau1: f64,
    pub tau_gamma: f64,
    pub corr_target: String,
    pub splitter: String,
    pub nonsplitter: String,
    pub seed: u64,
    pub method: String,
    pub reps: usize,
    pub included: usize,
    pub excluded: usize,
    pub discovery_rate: f64,
    pub discovery_se: f64,
    pub mean_subgroups: f64,
    pub accuracy: Option<f64>,
    pub accuracy_se: Option<f64>,
    pub mean_effect_corr: Option<f64>,
    pub n_effect_corr: usize,
    pub warning_rate: f64,
    pub converged_rate: f64,
    pub within_three_rate: f64,
    pub mean_iter: f64,
    pub excluded_by_reason: String,
    pub warnings_by_kind: String,
}

/// Identity of a row: the cell and the method.
pub type RowKey = (String, usize, usize, u64, u64, u64, String, String, String, u64, String);

impl ResultRow {
    pub fn key(&self) -> RowKey {
        (
            self.scenario.clone(),
            self.n_trials,
            self.n_total,
            self.tau0.to_bits(),
            self.tau1.to_bits(),
            self.tau_gamma.to_bits(),
            self.corr_target.clone(),
            self.splitter.clone(),
            self.nonsplitter.clone(),
            self.seed,
            self.method.clone(),
        )
    }

    pub fn metric(&self, m: Metric) -> Option<f64> {
        let v = match m {
            Metric::Fdr => Some(self.discovery_rate),
            Metric::Accuracy => self.accuracy,
            Metric::Correlation => self.mean_effect_corr,
            Metric::Subgroups => Some(self.mean_subgroups),
            Metric::Warnings => Some(self.warning_rate),
        };
        v.filter(|x| x.is_finite())
    }

    pub fn axis(&self, a: Axis) -> f64 {
        match a {
            Axis::Tau0 => self.tau0,
            Axis::Tau1 => self.tau1,
            Axis::TauGamma => self.tau_gamma,
        }
    }
}

pub fn axis_name(a: Axis) -> &'static str {
    match a {
        Axis::Tau0 => "tau0",
        Axis::Tau1 => "tau1",
        Axis::TauGamma => "tau_gamma",
    }
}

pub fn metric_name(m: Metric) -> &'static str {
    match m {
        Metric::Fdr => "fdr",
        Metric::Accuracy => "accuracy",
        Metric::Correlation => "correlation",
        Metric::Subgroups => "subgroups",
        Metric::Warnings => "warnings",
    }
}

fn expected_header() -> Vec<String> {
    let mut buf = Vec::new();
    write_aggregates_csv(&mut buf, &[]).expect("writing to memory");
    String::from_utf8(buf).expect("ascii header").trim_end().split(',').map(str::to_string).collect()
}

pub fn read_rows_csv(text: &str) -> Result<Vec<ResultRow>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = rdr.headers()?.iter().map(str::to_string).collect();
    if header != expected_header() {
        bail!("schema mismatch: header {:?} does not match the simulate output", header);
    }
    rdr.deserialize().enumerate().map(|(i, r)| r.with_context(|| format!("line {}", i + 2))).collect()
}

pub fn rows_from_aggregates(aggs: &[Aggregate]) -> Result<Vec<ResultRow>> {
    let mut buf = Vec::new();
    write_aggregates_csv(&mut buf, aggs)?;
    read_rows_csv(std::str::from_utf8(&buf)?)
}

pub fn write_rows_csv<W: Write>(out: W, rows: &[ResultRow]) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(expected_header())?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a results file; JSON by extension, CSV otherwise.
pub fn read_results(path: &Path) -> Result<Vec<ResultRow>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let rows = if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) {
        let report: RunReport = serde_json::from_str(&text).context("schema mismatch: not a simulate JSON report")?;
        rows_from_aggregates(&report.aggregates)
    } else {
        read_rows_csv(&text)
    };
    rows.with_context(|| format!("in {}", path.display()))
}

/// Union of result sets keyed by cell and method. A key present twice must
/// carry identical rows.
pub fn merge(sets: Vec<Vec<ResultRow>>) -> Result<Vec<ResultRow>> {
    let mut out: BTreeMap<RowKey, ResultRow> = BTreeMap::new();
    for row in sets.into_iter().flatten() {
        match out.get(&row.key()) {
            Some(prev) if *prev != row => {
                bail!("conflicting results for {} {} K={} N={}", row.scenario, row.method, row.n_trials, row.n_total)
            }
            Some(_) => {}
            None => {
                out.insert(row.key(), row);
            }
        }
    }
    Ok(out.into_values().collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesPoint {
    pub scenario: String,
    pub corr_target: String,
    /// Facet row and column keys.
    pub row: BTreeMap<String, f64>,
    pub column: BTreeMap<String, usize>,
    /// Variance held fixed within the facet.
    pub fixed: BTreeMap<String, f64>,
    pub series: String,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesDocument {
    pub metric: String,
    pub rows: String,
    pub x: String,
    pub points: Vec<SeriesPoint>,
}

fn third_axis(rows: Axis, x: Axis) -> Axis {
    [Axis::Tau0, Axis::Tau1, Axis::TauGamma].into_iter().find(|a| *a != rows && *a != x).expect("three axes")
}

fn ordered(v: f64) -> u64 {
    // Order-preserving map of nonnegative floats.
    v.to_bits()
}

/// Figure layout: facet rows by one variance, columns by N and K, points
/// along a second variance, one series per method.
pub fn series(rows_in: &[ResultRow], metric: Metric, rows: Axis, x: Axis) -> Result<SeriesDocument> {
    if rows == x {
        bail!("facet rows and x axis must differ");
    }
    let fixed = third_axis(rows, x);
    let mut points: Vec<SeriesPoint> = rows_in
        .iter()
        .filter_map(|r| {
            r.metric(metric).map(|y| SeriesPoint {
                scenario: r.scenario.clone(),
                corr_target: r.corr_target.clone(),
                row: BTreeMap::from([(axis_name(rows).to_string(), r.axis(rows))]),
                column: BTreeMap::from([("n_total".to_string(), r.n_total), ("n_trials".to_string(), r.n_trials)]),
                fixed: BTreeMap::from([(axis_name(fixed).to_string(), r.axis(fixed))]),
                series: r.method.clone(),
                x: r.axis(x),
                y,
            })
        })
        .collect();
    points.sort_by(|a, b| {
        (&a.scenario, &a.corr_target, ordered(a.row.values().next().copied().unwrap_or(0.0)), &a.column, &a.series, ordered(a.x))
            .cmp(&(&b.scenario, &b.corr_target, ordered(b.row.values().next().copied().unwrap_or(0.0)), &b.column, &b.series, ordered(b.x)))
    });
    Ok(SeriesDocument {
        metric: metric_name(metric).to_string(),
        rows: axis_name(rows).to_string(),
        x: axis_name(x).to_string(),
        points,
    })
}

/// Pivoted table: one line per (scenario, correlation, variances, method),
/// one column per `N×K` panel.
pub fn write_table<W: Write>(out: W, rows_in: &[ResultRow], metric: Metric, rows: Axis, x: Axis) -> Result<()> {
    if rows == x {
        bail!("facet rows and x axis must differ");
    }
    let fixed = third_axis(rows, x);
    let panels: BTreeSet<(usize, usize)> = rows_in.iter().map(|r| (r.n_trials, r.n_total)).collect();
    type LineKey = (String, String, u64, u64, u64, String);
    let mut lines: BTreeMap<LineKey, BTreeMap<(usize, usize), f64>> = BTreeMap::new();
    for r in rows_in {
        let key = (
            r.scenario.clone(),
            r.corr_target.clone(),
            ordered(r.axis(rows)),
            ordered(r.axis(fixed)),
            ordered(r.axis(x)),
            r.method.clone(),
        );
        let cells = lines.entry(key).or_default();
        if let Some(v) = r.metric(metric) {
            cells.insert((r.n_trials, r.n_total), v);
        }
    }
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<String> =
        vec!["scenario".into(), "corr_target".into(), axis_name(rows).into(), axis_name(fixed).into(), axis_name(x).into(), "method".into()];
    header.extend(panels.iter().map(|(k, n)| format!("N{n}_K{k}")));
    w.write_record(&header)?;
    for ((scenario, corr, r, f, xv, method), cells) in &lines {
        let mut rec = vec![
            scenario.clone(),
            corr.clone(),
            f64::from_bits(*r).to_string(),
            f64::from_bits(*f).to_string(),
            f64::from_bits(*xv).to_string(),
            method.clone(),
        ];
        rec.extend(panels.iter().map(|p| cells.get(p).map(|v| v.to_string()).unwrap_or_default()));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn cmd_report(args: &ReportArgs) -> Result<()> {
    if args.inputs.is_empty() {
        log::warn!("no input files; writing empty tables");
    }
    let sets = args.inputs.iter().map(|p| read_results(p)).collect::<Result<Vec<_>>>()?;
    let merged = merge(sets)?;
    let doc = series(&merged, args.metric, args.rows, args.x)?;
    match &args.out {
        Some(dir) => {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            let name = metric_name(args.metric);
            write_table(crate::open_output(Some(&dir.join(format!("table_{name}.csv"))))?, &merged, args.metric, args.rows, args.x)?;
            crate::write_json(&mut crate::open_output(Some(&dir.join(format!("series_{name}.json"))))?, &doc)?;
            write_rows_csv(crate::open_output(Some(&dir.join("merged.csv")))?, &merged)?;
            log::info!("{} result rows, {} series points written to {}", merged.len(), doc.points.len(), dir.display());
            Ok(())
        }
        None => {
            let mut out = crate::open_output(None)?;
            match args.format {
                Format::Csv => write_table(&mut out, &merged, args.metric, args.rows, args.x),
                Format::Json => crate::write_json(&mut out, &doc),
            }
        }
    }
}
