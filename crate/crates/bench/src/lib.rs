//! Experiment harness: runs planar subgraph algorithms over instance grids
//! with wall-clock limits, writes one CSV row per run, and condenses rows
//! into relative-to-best statistics and plot-ready series.

pub mod aggregate;
pub mod emit;
pub mod record;
pub mod suite;

pub use aggregate::{aggregate, AggregateRow, Grouping, Metric};
pub use record::{read_records, records_csv, write_records, BenchmarkRecord, Status};
pub use suite::{run_suite, InstanceSource, Method, SuiteConfig};
