//! Relative-to-best statistics grouped by vertex count or density class.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::record::{BenchmarkRecord, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Grouping {
    /// `n` rounded to the nearest multiple of ten, halves rounding up.
    VertexBucket10,
    /// `m / n` rounded to the nearest integer.
    DensityClass,
}

impl Grouping {
    pub fn label(self) -> &'static str {
        match self {
            Grouping::VertexBucket10 => "vertex-bucket-10",
            Grouping::DensityClass => "density-class",
        }
    }

    pub fn key(self, n: usize, m: usize) -> usize {
        match self {
            Grouping::VertexBucket10 => vertex_bucket_10(n),
            Grouping::DensityClass => density_class(n, m),
        }
    }
}

impl fmt::Display for Grouping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Grouping {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vertex-bucket-10" | "vertex_bucket_10" | "vertices" | "n" => Ok(Grouping::VertexBucket10),
            "density-class" | "density_class" | "density" => Ok(Grouping::DensityClass),
            other => Err(format!("unknown grouping `{other}` (vertex-bucket-10 or density-class)")),
        }
    }
}

pub fn vertex_bucket_10(n: usize) -> usize {
    (n + 5) / 10 * 10
}

pub fn density_class(n: usize, m: usize) -> usize {
    if n == 0 {
        0
    } else {
        (m as f64 / n as f64).round() as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Metric {
    /// Density divided by the best density on the same instance.
    RelativeDensity,
    /// Wall-clock milliseconds.
    Runtime,
    /// Crossings of the fixed-embedding insertion.
    Crossings,
}

impl Metric {
    pub fn label(self) -> &'static str {
        match self {
            Metric::RelativeDensity => "relative-density",
            Metric::Runtime => "runtime-ms",
            Metric::Crossings => "crossings",
        }
    }

    fn value(self, r: &BenchmarkRecord) -> Option<f64> {
        match self {
            Metric::RelativeDensity => r.density(),
            Metric::Runtime => Some(r.runtime_ms),
            Metric::Crossings => r.crossings.map(|c| c as f64),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "relative-density" | "density" => Ok(Metric::RelativeDensity),
            "runtime-ms" | "runtime" => Ok(Metric::Runtime),
            "crossings" => Ok(Metric::Crossings),
            other => Err(format!("unknown metric `{other}` (density, runtime or crossings)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AggregateRow {
    pub set: String,
    pub grouping: Grouping,
    pub group: usize,
    pub algorithm: String,
    pub metric: Metric,
    /// Instances contributing a value.
    pub instances: usize,
    /// Records left out because they did not finish.
    pub excluded: usize,
    pub min: Option<f64>,
    pub avg: Option<f64>,
    pub max: Option<f64>,
}

impl AggregateRow {
    /// No instance of the group has a finished run of this algorithm.
    pub fn is_empty(&self) -> bool {
        self.instances == 0
    }
}

#[derive(Default)]
struct Cell {
    values: Vec<f64>,
    excluded: usize,
}

/// Per (set, group, algorithm) statistics.
///
/// Seeds are averaged per (instance, algorithm) first. For relative density
/// each average is divided by the best average on its instance, so the best
/// algorithm scores exactly 1; an instance where every value is 0 scores 1
/// throughout. Runtime and crossings are reported as absolute values.
/// Records without a known vertex count cannot be grouped and are skipped.
pub fn aggregate(records: &[BenchmarkRecord], grouping: Grouping, metric: Metric) -> Vec<AggregateRow> {
    // (set, instance) -> (n, m)
    let mut size: BTreeMap<(&str, &str), (usize, usize)> = BTreeMap::new();
    for r in records {
        if let (Some(n), Some(m)) = (r.n, r.m) {
            size.insert((&r.set, &r.instance), (n, m));
        }
    }
    // (set, instance) -> algorithm -> cell
    let mut per_instance: BTreeMap<(&str, &str), BTreeMap<&str, Cell>> = BTreeMap::new();
    for r in records {
        if !size.contains_key(&(r.set.as_str(), r.instance.as_str())) {
            continue;
        }
        let cell = per_instance
            .entry((&r.set, &r.instance))
            .or_default()
            .entry(&r.algorithm)
            .or_default();
        match (r.status, metric.value(r)) {
            (Status::Ok, Some(v)) => cell.values.push(v),
            (Status::Ok, None) => {}
            _ => cell.excluded += 1,
        }
    }

    let mut groups: BTreeMap<(&str, usize, &str), Cell> = BTreeMap::new();
    for (key, algs) in &per_instance {
        let (n, m) = size[key];
        let group = grouping.key(n, m);
        let means: BTreeMap<&str, f64> = algs
            .iter()
            .filter(|(_, c)| !c.values.is_empty())
            .map(|(&a, c)| (a, c.values.iter().sum::<f64>() / c.values.len() as f64))
            .collect();
        let best = means.values().copied().fold(0.0f64, f64::max);
        for (&alg, cell) in algs {
            let out = groups.entry((key.0, group, alg)).or_default();
            out.excluded += cell.excluded;
            if let Some(&mean) = means.get(alg) {
                out.values.push(match metric {
                    Metric::RelativeDensity if best > 0.0 => mean / best,
                    Metric::RelativeDensity => 1.0,
                    _ => mean,
                });
            }
        }
    }

    groups
        .into_iter()
        .map(|((set, group, alg), cell)| {
            let count = cell.values.len();
            let (min, avg, max) = if count == 0 {
                (None, None, None)
            } else {
                let min = cell.values.iter().copied().fold(f64::INFINITY, f64::min);
                let max = cell.values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                (Some(min), Some(cell.values.iter().sum::<f64>() / count as f64), Some(max))
            };
            AggregateRow {
                set: set.to_string(),
                grouping,
                group,
                algorithm: alg.to_string(),
                metric,
                instances: count,
                excluded: cell.excluded,
                min,
                avg,
                max,
            }
        })
        .collect()
}

/// Algorithms appearing in `rows`, sorted.
pub fn algorithms(rows: &[AggregateRow]) -> BTreeSet<&str> {
    rows.iter().map(|r| r.algorithm.as_str()).collect()
}
