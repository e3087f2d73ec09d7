//! Library side of the `metamob` command-line tool.

pub mod args;
pub mod fit;
pub mod report;
pub mod simulate;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use metamob::metrics::round_sig;
use serde_json::Value;

use args::{Cli, Command};

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Fit(a) => fit::cmd_fit(&a),
        Command::Simulate(a) => simulate::cmd_simulate(&a),
        Command::Report(a) => report::cmd_report(&a),
    }
}

/// Machine-readable kind of an error, for the JSON error line.
pub fn error_kind(err: &anyhow::Error) -> &'static str {
    use metamob::Error as E;
    match err.chain().find_map(|e| e.downcast_ref::<metamob::Error>()) {
        Some(E::InvalidData(_)) | Some(E::Csv { .. }) => "invalid_data",
        Some(E::DimensionMismatch { .. }) => "dimension_mismatch",
        Some(E::DegenerateNode(_)) => "degenerate_node",
        Some(E::NoAdmissibleSplit) => "no_admissible_split",
        Some(E::UnidentifiableFixedEffects(_)) => "unidentifiable",
        Some(E::ConvergenceFailure { .. }) => "convergence_failure",
        Some(E::SubgroupAbsent { .. }) => "subgroup_absent",
        Some(E::Config(_)) => "config",
        Some(E::TreeDocument(_)) => "tree_document",
        Some(E::Io(_)) => "io",
        None if err.chain().any(|e| e.is::<io::Error>()) => "io",
        None => "error",
    }
}

/// Rounds every float to ten significant digits, except cutpoints, which
/// are data values and must route observations exactly.
pub fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(r) = n.as_f64().map(round_sig).and_then(serde_json::Number::from_f64) {
                *n = r;
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_floats),
        Value::Object(m) => {
            for (k, x) in m.iter_mut() {
                if k != "cutpoint" {
                    round_floats(x);
                }
            }
        }
        _ => {}
    }
}

/// File at `path`, or standard output.
pub fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn write_json<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let mut v = serde_json::to_value(value)?;
    round_floats(&mut v);
    serde_json::to_writer_pretty(&mut *out, &v)?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}
