//! CSV and plot-series output. Everything here is byte-deterministic for a
//! given input.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::aggregate::AggregateRow;

pub const AGGREGATE_HEADER: [&str; 11] = [
    "set",
    "grouping",
    "group",
    "algorithm",
    "metric",
    "instances",
    "excluded",
    "min",
    "avg",
    "max",
    "empty",
];

fn num(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.6}")).unwrap_or_default()
}

pub fn aggregate_csv(rows: &[AggregateRow]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(AGGREGATE_HEADER).expect("writing to memory");
    for r in rows {
        w.write_record([
            r.set.clone(),
            r.grouping.to_string(),
            r.group.to_string(),
            r.algorithm.clone(),
            r.metric.to_string(),
            r.instances.to_string(),
            r.excluded.to_string(),
            num(r.min),
            num(r.avg),
            num(r.max),
            r.is_empty().to_string(),
        ])
        .expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("fields are utf-8")
}

/// File name for an algorithm's series; `+` becomes `plus`.
pub fn series_file_name(algorithm: &str) -> String {
    let stem: String = algorithm
        .chars()
        .map(|c| match c {
            '+' => "plus".to_string(),
            c if c.is_ascii_alphanumeric() || c == '-' || c == '_' => c.to_string(),
            _ => "_".to_string(),
        })
        .collect();
    format!("{stem}.dat")
}

/// One whitespace-separated series per algorithm: `set x min avg max`,
/// with `x` the group key. Empty groups are left out.
pub fn plot_series(rows: &[AggregateRow]) -> BTreeMap<String, String> {
    let mut out: BTreeMap<String, String> = BTreeMap::new();
    for r in rows {
        let text = out.entry(series_file_name(&r.algorithm)).or_insert_with(|| {
            format!(
                "# algorithm {} metric {} grouping {}\n# set x min avg max\n",
                r.algorithm, r.metric, r.grouping
            )
        });
        if let (Some(min), Some(avg), Some(max)) = (r.min, r.avg, r.max) {
            text.push_str(&format!("{} {} {min:.6} {avg:.6} {max:.6}\n", r.set, r.group));
        }
    }
    out
}

/// Writes [`plot_series`] into `dir`, creating it if needed, and returns
/// the paths written.
pub fn write_plot_data(dir: &Path, rows: &[AggregateRow]) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for (name, text) in plot_series(rows) {
        let path = dir.join(name);
        fs::write(&path, text)?;
        written.push(path);
    }
    Ok(written)
}
