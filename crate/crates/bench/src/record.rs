//! One measurement row and its fixed CSV schema.

use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use thiserror::Error;

pub const HEADER: [&str; 11] = [
    "instance",
    "set",
    "n",
    "m",
    "algorithm",
    "seed",
    "edges_kept",
    "density",
    "runtime_ms",
    "status",
    "crossings",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Ok,
    Timeout,
    /// Reserved for runs aborted by a memory cap. The harness itself never
    /// produces it; it exists so externally produced rows parse.
    Memory,
    Error,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Timeout => "timeout",
            Status::Memory => "memory",
            Status::Error => "error",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Status {
    type Err = RecordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ok" => Ok(Status::Ok),
            "timeout" => Ok(Status::Timeout),
            "memory" => Ok(Status::Memory),
            "error" => Ok(Status::Error),
            other => Err(RecordError::Field {
                row: 0,
                field: "status",
                value: other.to_string(),
            }),
        }
    }
}

/// A single (instance, algorithm, seed) measurement.
///
/// `n` and `m` are absent only when the instance could not be loaded;
/// `edges_kept` is absent when no subgraph was produced.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkRecord {
    pub instance: String,
    pub set: String,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub algorithm: String,
    pub seed: u64,
    pub edges_kept: Option<usize>,
    pub runtime_ms: f64,
    pub status: Status,
    pub crossings: Option<usize>,
}

impl BenchmarkRecord {
    /// Kept edges per vertex.
    pub fn density(&self) -> Option<f64> {
        match (self.edges_kept, self.n) {
            (Some(k), Some(n)) if n > 0 => Some(k as f64 / n as f64),
            (Some(_), Some(_)) => Some(0.0),
            _ => None,
        }
    }

    /// Sort key giving a stable output order independent of scheduling.
    pub fn key(&self) -> (&str, &str, &str, u64) {
        (&self.set, &self.instance, &self.algorithm, self.seed)
    }

    fn fields(&self) -> [String; 11] {
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        [
            self.instance.clone(),
            self.set.clone(),
            opt(self.n),
            opt(self.m),
            self.algorithm.clone(),
            self.seed.to_string(),
            opt(self.edges_kept),
            self.density().map(|d| format!("{d:.6}")).unwrap_or_default(),
            format!("{:.3}", self.runtime_ms),
            self.status.to_string(),
            opt(self.crossings),
        ]
    }
}

#[derive(Debug, Error)]
pub enum RecordError {
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("unexpected header {0:?}")]
    Header(Vec<String>),
    #[error("row {row}: bad {field} `{value}`")]
    Field {
        row: usize,
        field: &'static str,
        value: String,
    },
}

pub fn write_records<W: Write>(out: W, records: &[BenchmarkRecord]) -> Result<(), RecordError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(HEADER)?;
    for r in records {
        w.write_record(r.fields())?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn records_csv(records: &[BenchmarkRecord]) -> String {
    let mut buf = Vec::new();
    write_records(&mut buf, records).expect("writing to memory");
    String::from_utf8(buf).expect("fields are utf-8")
}

/// Parses CSV written by [`write_records`]. The density column is
/// recomputed from `edges_kept / n`, not read back.
pub fn read_records<R: Read>(input: R) -> Result<Vec<BenchmarkRecord>, RecordError> {
    let mut r = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let header: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
    if header != HEADER {
        return Err(RecordError::Header(header));
    }
    let mut out = Vec::new();
    for (i, row) in r.records().enumerate() {
        let row = row?;
        let row_no = i + 2;
        let bad = |field: &'static str, value: &str| RecordError::Field {
            row: row_no,
            field,
            value: value.to_string(),
        };
        let opt = |idx: usize, field: &'static str| -> Result<Option<usize>, RecordError> {
            let s = &row[idx];
            if s.is_empty() {
                Ok(None)
            } else {
                s.parse().map(Some).map_err(|_| bad(field, s))
            }
        };
        let runtime_ms: f64 = row[8].parse().map_err(|_| bad("runtime_ms", &row[8]))?;
        if !(runtime_ms >= 0.0 && runtime_ms.is_finite()) {
            return Err(bad("runtime_ms", &row[8]));
        }
        out.push(BenchmarkRecord {
            instance: row[0].to_string(),
            set: row[1].to_string(),
            n: opt(2, "n")?,
            m: opt(3, "m")?,
            algorithm: row[4].to_string(),
            seed: row[5].parse().map_err(|_| bad("seed", &row[5]))?,
            edges_kept: opt(6, "edges_kept")?,
            runtime_ms,
            status: row[9].parse().map_err(|_| bad("status", &row[9]))?,
            crossings: opt(10, "crossings")?,
        });
    }
    Ok(out)
}
