//! Individual-participant data pooled from `K` trials.
//!
//! Covariates are stored column-major because both the fluctuation tests and
//! the split search work one partitioning variable at a time.

use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct IpdDataset {
    y: Vec<f64>,
    trt: Vec<u8>,
    trial: Vec<usize>,
    columns: Vec<Vec<f64>>,
    names: Vec<String>,
    n_trials: usize,
}

impl IpdDataset {
    /// Builds a dataset, checking the column invariants.
    ///
    /// `trial` ids are 1-based and every id in `1..=K` must occur, where `K`
    /// is the largest id present.
    pub fn new(
        y: Vec<f64>,
        trt: Vec<u8>,
        trial: Vec<usize>,
        columns: Vec<Vec<f64>>,
        names: Vec<String>,
    ) -> Result<Self> {
        let n = y.len();
        if n == 0 {
            return Err(Error::InvalidData("dataset has no observations".into()));
        }
        for (what, len) in [("trt", trt.len()), ("trial", trial.len())] {
            if len != n {
                return Err(Error::DimensionMismatch { what, expected: n, got: len });
            }
        }
        if columns.len() != names.len() {
            return Err(Error::DimensionMismatch {
                what: "covariate names",
                expected: columns.len(),
                got: names.len(),
            });
        }
        for (j, col) in columns.iter().enumerate() {
            if col.len() != n {
                return Err(Error::InvalidData(format!(
                    "covariate `{}` has {} values, expected {n}",
                    names[j],
                    col.len()
                )));
            }
            if let Some(i) = col.iter().position(|v| !v.is_finite()) {
                return Err(Error::InvalidData(format!(
                    "covariate `{}` is not finite at row {}",
                    names[j],
                    i + 1
                )));
            }
        }
        if let Some(i) = y.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidData(format!("y is not finite at row {}", i + 1)));
        }
        if let Some(i) = trt.iter().position(|&t| t > 1) {
            return Err(Error::InvalidData(format!("trt must be 0 or 1 (row {})", i + 1)));
        }
        if let Some(i) = trial.iter().position(|&k| k == 0) {
            return Err(Error::InvalidData(format!("trial ids start at 1 (row {})", i + 1)));
        }
        let n_trials = *trial.iter().max().unwrap();
        let mut seen = vec![false; n_trials];
        for &k in &trial {
            seen[k - 1] = true;
        }
        if let Some(k) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidData(format!(
                "trial id {} has no observations (ids must cover 1..={n_trials})",
                k + 1
            )));
        }
        Ok(Self { y, trt, trial, columns, names, n_trials })
    }

    pub fn n(&self) -> usize {
        self.y.len()
    }

    /// Number of candidate partitioning covariates.
    pub fn p(&self) -> usize {
        self.columns.len()
    }

    pub fn n_trials(&self) -> usize {
        self.n_trials
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    pub fn trt(&self) -> &[u8] {
        &self.trt
    }

    pub fn trial(&self) -> &[usize] {
        &self.trial
    }

    pub fn column(&self, j: usize) -> &[f64] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<f64>] {
        &self.columns
    }

    pub fn covariate_names(&self) -> &[String] {
        &self.names
    }

    pub fn row(&self, i: usize) -> Vec<f64> {
        self.columns.iter().map(|c| c[i]).collect()
    }

    /// Same covariates and design, different response.
    pub fn with_response(&self, y: Vec<f64>) -> Result<Self> {
        if y.len() != self.n() {
            return Err(Error::DimensionMismatch { what: "response", expected: self.n(), got: y.len() });
        }
        let mut out = self.clone();
        out.y = y;
        Ok(out)
    }

    /// Reads the `y,trt,trial,<covariates...>` CSV schema.
    pub fn read_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let headers = rdr
            .headers()
            .map_err(|e| Error::Csv { context: "header row".into(), source: e })?
            .clone();
        let find = |name: &str| -> Result<usize> {
            headers
                .iter()
                .position(|h| h == name)
                .ok_or_else(|| Error::InvalidData(format!("missing required column `{name}`")))
        };
        let (iy, it, ik) = (find("y")?, find("trt")?, find("trial")?);
        let cov_idx: Vec<usize> = (0..headers.len()).filter(|&c| c != iy && c != it && c != ik).collect();
        let names: Vec<String> = cov_idx.iter().map(|&c| headers[c].to_string()).collect();

        let mut y = Vec::new();
        let mut trt = Vec::new();
        let mut trial = Vec::new();
        let mut columns = vec![Vec::new(); cov_idx.len()];
        for (r, rec) in rdr.records().enumerate() {
            let line = r + 2;
            let rec = rec.map_err(|e| Error::Csv { context: format!("line {line}"), source: e })?;
            let field = |c: usize| -> Result<f64> {
                let raw = rec.get(c).unwrap_or("");
                raw.parse::<f64>().map_err(|_| {
                    Error::InvalidData(format!(
                        "line {line}, column `{}`: cannot parse `{raw}` as a number",
                        &headers[c]
                    ))
                })
            };
            y.push(field(iy)?);
            let t = field(it)?;
            if t != 0.0 && t != 1.0 {
                return Err(Error::InvalidData(format!("line {line}, column `trt`: expected 0 or 1, got {t}")));
            }
            trt.push(t as u8);
            let k = field(ik)?;
            if k < 1.0 || k.fract() != 0.0 {
                return Err(Error::InvalidData(format!(
                    "line {line}, column `trial`: expected a positive integer id, got {k}"
                )));
            }
            trial.push(k as usize);
            for (col, &c) in columns.iter_mut().zip(&cov_idx) {
                col.push(field(c)?);
            }
        }
        Self::new(y, trt, trial, columns, names)
    }

    pub fn read_csv_path(path: &Path) -> Result<Self> {
        Self::read_csv(std::fs::File::open(path)?)
    }

    /// Writes the CSV schema read by [`IpdDataset::read_csv`]; values are
    /// printed with round-trip precision.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        let csv_err = |e| Error::Csv { context: "writing dataset".into(), source: e };
        let mut header = vec!["y".to_string(), "trt".into(), "trial".into()];
        header.extend(self.names.iter().cloned());
        w.write_record(&header).map_err(csv_err)?;
        for i in 0..self.n() {
            let mut rec = vec![self.y[i].to_string(), self.trt[i].to_string(), self.trial[i].to_string()];
            rec.extend(self.columns.iter().map(|c| c[i].to_string()));
            w.write_record(&rec).map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> IpdDataset {
        IpdDataset::new(
            vec![1.0, 2.0, 3.0],
            vec![0, 1, 1],
            vec![1, 2, 1],
            vec![vec![0.5, 1.5, 2.5]],
            vec!["x1".into()],
        )
        .unwrap()
    }

    #[test]
    fn rejects_missing_trial_id() {
        let err = IpdDataset::new(vec![1.0, 2.0], vec![0, 1], vec![1, 3], vec![], vec![]).unwrap_err();
        assert!(err.to_string().contains("trial id 2"));
    }

    #[test]
    fn rejects_bad_treatment() {
        assert!(IpdDataset::new(vec![1.0], vec![2], vec![1], vec![], vec![]).is_err());
    }

    #[test]
    fn rejects_length_mismatch() {
        assert!(IpdDataset::new(vec![1.0, 2.0], vec![0], vec![1, 1], vec![], vec![]).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let d = tiny();
        let mut buf = Vec::new();
        d.write_csv(&mut buf).unwrap();
        let back = IpdDataset::read_csv(buf.as_slice()).unwrap();
        assert_eq!(d, back);
        assert_eq!(back.n_trials(), 2);
    }

    #[test]
    fn csv_reports_line_context() {
        let text = "y,trt,trial,x1\n1,0,1,2\n1,0,1,oops\n";
        let err = IpdDataset::read_csv(text.as_bytes()).unwrap_err().to_string();
        assert!(err.contains("line 3") && err.contains("x1"), "{err}");
        let err = IpdDataset::read_csv("trt,trial\n0,1\n".as_bytes()).unwrap_err().to_string();
        assert!(err.contains("`y`"));
    }

    #[test]
    fn column_order_in_csv_is_free() {
        let text = "x1,trial,y,trt\n3,1,0.5,1\n4,1,0.25,0\n";
        let d = IpdDataset::read_csv(text.as_bytes()).unwrap();
        assert_eq!(d.y(), &[0.5, 0.25]);
        assert_eq!(d.column(0), &[3.0, 4.0]);
    }
}
