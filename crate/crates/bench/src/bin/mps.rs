//! `mps`: generate instances, run benchmark suites, aggregate results, and
//! drive the exact solver, the planarizer and the ILP writer on one graph.
//!
//! Exit status: 0 on success, 2 when some run timed out or failed, 1 on a
//! configuration or input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use mps_bench::emit::{aggregate_csv, write_plot_data};
use mps_bench::suite::{parse_grid, parse_methods, parse_seeds, workers_from_env};
use mps_bench::{aggregate, read_records, records_csv, run_suite, Grouping, InstanceSource, Metric, SuiteConfig};
use mps_core::budget::Budget;
use mps_core::exact::{exact_skewness, export_ilp, parse_point, separate_kuratowski, ExactStatus};
use mps_core::heuristics::{self, Algorithm, DEFAULT_RESTARTS};
use mps_core::io::{edge_list_text, gml_text, read_graph, write_graph, write_subgraph, Format};
use mps_core::planarize::{insert_edges_fixed, InsertionOrder};
use mps_core::Graph;

#[derive(Parser)]
#[command(name = "mps", version, about = "Maximum planar subgraph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write generated instances to a directory.
    Gen(GenArgs),
    /// Run algorithms over instances and write one CSV row per run.
    Run(RunArgs),
    /// Condense a results CSV into grouped relative-to-best statistics.
    Aggregate(AggregateArgs),
    /// Solve one instance exactly by branch-and-bound.
    Exact(ExactArgs),
    /// Compute a planar subgraph and insert the other edges with crossings.
    Planarize(PlanarizeArgs),
    /// Write an LP-format model with Kuratowski constraints.
    ExportIlp(ExportArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Instance grid `family:n:density:seeds`, e.g. regular:100:3:0..20.
    #[arg(long = "grid", required = true)]
    grids: Vec<String>,
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// el or gml.
    #[arg(long, default_value = "el")]
    format: String,
}

#[derive(Args)]
struct RunArgs {
    /// Graph files (.el, .txt, .edges or .gml).
    files: Vec<PathBuf>,
    /// Generated instance grid `family:n:density:seeds`; repeatable.
    #[arg(long = "grid")]
    grids: Vec<String>,
    /// Set label for the files; defaults to each file's directory name.
    #[arg(long)]
    set: Option<String>,
    /// Comma-separated list from naive, multistart, bm, bm+, c, c+, exact.
    #[arg(long, default_value = "multistart,bm,bm+,c,c+")]
    algorithms: String,
    #[arg(long, default_value = "0")]
    seeds: String,
    #[arg(long, default_value_t = 60_000)]
    time_limit_ms: u64,
    /// Runs of the multi-start heuristic.
    #[arg(long, default_value_t = DEFAULT_RESTARTS)]
    restarts: usize,
    /// Also record crossings of the fixed-embedding insertion.
    #[arg(long)]
    planarize: bool,
    /// Output CSV; standard output if absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AggregateArgs {
    /// Results CSV written by `run`.
    input: PathBuf,
    /// vertex-bucket-10 or density-class.
    #[arg(long, default_value = "vertex-bucket-10")]
    by: String,
    /// density, runtime or crossings.
    #[arg(long, default_value = "density")]
    metric: String,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Directory for one series file per algorithm.
    #[arg(long)]
    plot_dir: Option<PathBuf>,
}

#[derive(Args)]
struct ExactArgs {
    input: PathBuf,
    #[arg(long, default_value_t = 60_000)]
    time_limit_ms: u64,
    /// Seed of the C+ start subgraph.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Start without an incumbent.
    #[arg(long)]
    no_incumbent: bool,
    /// Write the best subgraph found as an edge list.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PlanarizeArgs {
    input: PathBuf,
    /// Subgraph algorithm.
    #[arg(long, default_value = "c+")]
    algorithm: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_RESTARTS)]
    restarts: usize,
    /// Insertion order: shuffled or id.
    #[arg(long, default_value = "shuffled")]
    order: String,
    /// Write the planarized graph; dummies follow the original vertices.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    input: PathBuf,
    /// Fractional point to separate (`edge value` per line). Without it
    /// the constraints come from an exact run.
    #[arg(long)]
    point: Option<PathBuf>,
    /// Rounding threshold for separation.
    #[arg(long, default_value_t = 0.5)]
    threshold: f64,
    /// Separation rounds.
    #[arg(long, default_value_t = 10)]
    rounds: usize,
    /// Limit for the exact run that collects constraints.
    #[arg(long, default_value_t = 10_000)]
    time_limit_ms: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn load(path: &Path) -> Result<Graph> {
    read_graph(path, None).with_context(|| format!("reading {}", path.display()))
}

fn write_out(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn gen(args: GenArgs) -> Result<ExitCode> {
    let format: Format = args.format.parse().map_err(anyhow::Error::msg)?;
    let ext = match format {
        Format::EdgeList => "el",
        Format::Gml => "gml",
    };
    fs::create_dir_all(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    for grid in &args.grids {
        for spec in parse_grid(grid)? {
            let g = spec.generate().with_context(|| spec.name())?;
            let path = args.out.join(format!("{}.{ext}", spec.name()));
            let text = match format {
                Format::EdgeList => edge_list_text(&g),
                Format::Gml => gml_text(&g),
            };
            fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
            println!("{} n={} m={}", path.display(), g.vertex_count(), g.edge_count());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(args: RunArgs) -> Result<ExitCode> {
    let mut instances: Vec<InstanceSource> = args
        .files
        .iter()
        .map(|p| InstanceSource::File {
            path: p.clone(),
            set: args.set.clone(),
        })
        .collect();
    for grid in &args.grids {
        instances.extend(parse_grid(grid)?.into_iter().map(InstanceSource::Generated));
    }
    if instances.is_empty() {
        bail!("no instances: give graph files or --grid");
    }
    let cfg = SuiteConfig {
        instances,
        methods: parse_methods(&args.algorithms)?,
        seeds: parse_seeds(&args.seeds)?,
        time_limit: Duration::from_millis(args.time_limit_ms),
        restarts: args.restarts,
        planarize: args.planarize,
        workers: workers_from_env()?,
    };
    let records = run_suite(&cfg)?;
    write_out(args.out.as_deref(), &records_csv(&records))?;
    let unfinished = records.iter().filter(|r| r.status != mps_bench::Status::Ok).count();
    if unfinished > 0 {
        eprintln!("{unfinished} of {} runs did not finish", records.len());
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn aggregate_cmd(args: AggregateArgs) -> Result<ExitCode> {
    let grouping: Grouping = args.by.parse().map_err(anyhow::Error::msg)?;
    let metric: Metric = args.metric.parse().map_err(anyhow::Error::msg)?;
    let file = fs::File::open(&args.input).with_context(|| format!("opening {}", args.input.display()))?;
    let records = read_records(file).with_context(|| format!("reading {}", args.input.display()))?;
    let rows = aggregate(&records, grouping, metric);
    write_out(args.out.as_deref(), &aggregate_csv(&rows))?;
    if let Some(dir) = &args.plot_dir {
        write_plot_data(dir, &rows).with_context(|| format!("writing {}", dir.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn exact_cmd(args: ExactArgs) -> Result<ExitCode> {
    let g = load(&args.input)?;
    if args.time_limit_ms == 0 {
        bail!("time limit must be positive");
    }
    let start = (!args.no_incumbent).then(|| heuristics::cactus_plus(&g, args.seed).kept);
    let r = exact_skewness(&g, args.time_limit_ms, start.as_ref())?;
    println!("status {}", r.status.label());
    println!("kept {}", r.optimal_kept.len());
    println!("skewness {}", r.skewness);
    println!("lower-bound {}", r.lower_bound);
    println!("nodes {}", r.nodes_explored);
    println!("constraints {}", r.constraint_pool.len());
    if let Some(out) = &args.out {
        write_subgraph(out, &g, &r.optimal_kept)?;
    }
    Ok(if r.status == ExactStatus::Optimal {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn planarize_cmd(args: PlanarizeArgs) -> Result<ExitCode> {
    let g = load(&args.input)?;
    let algorithm: Algorithm = args.algorithm.parse()?;
    if args.restarts == 0 {
        bail!("restarts must be positive");
    }
    let order = match args.order.as_str() {
        "shuffled" => InsertionOrder::Shuffled,
        "id" => InsertionOrder::ById,
        other => bail!("unknown insertion order `{other}` (shuffled or id)"),
    };
    let sub = heuristics::run(algorithm, &g, args.seed, args.restarts, &Budget::unlimited())?;
    let p = insert_edges_fixed(&g, &sub.kept, args.seed, order)?;
    println!("kept {}", sub.kept.len());
    println!("crossings {}", p.crossings());
    if let Some(out) = &args.out {
        write_graph(out, &p.host)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn export_cmd(args: ExportArgs) -> Result<ExitCode> {
    let g = load(&args.input)?;
    if !(args.threshold > 0.0 && args.threshold <= 1.0) {
        bail!("threshold must lie in (0, 1]");
    }
    let pool = match &args.point {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let x = parse_point(&text, g.edge_count()).with_context(|| path.display().to_string())?;
            separate_kuratowski(&g, &x, args.threshold, args.rounds)
        }
        None => {
            if args.time_limit_ms == 0 {
                bail!("time limit must be positive");
            }
            // no incumbent, so the search has to collect witnesses
            exact_skewness(&g, args.time_limit_ms, None)?.constraint_pool
        }
    };
    eprintln!("{} constraints", pool.len());
    write_out(args.out.as_deref(), &export_ilp(&g, &pool))?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Run(a) => run(a),
        Command::Aggregate(a) => aggregate_cmd(a),
        Command::Exact(a) => exact_cmd(a),
        Command::Planarize(a) => planarize_cmd(a),
        Command::ExportIlp(a) => export_cmd(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
