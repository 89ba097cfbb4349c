use std::time::Duration;

use mps_bench::aggregate::{density_class, vertex_bucket_10};
use mps_bench::emit::{aggregate_csv, plot_series, series_file_name};
use mps_bench::suite::{parse_grid, parse_methods, parse_seeds, Method};
use mps_bench::*;
use mps_core::generate::{Family, GeneratorSpec};
use mps_core::heuristics::{cactus_plus, Algorithm};
use mps_core::Graph;

fn inline(name: &str, graph: Graph) -> InstanceSource {
    InstanceSource::Inline {
        name: name.to_string(),
        set: "named".to_string(),
        graph,
    }
}

fn config(instances: Vec<InstanceSource>, methods: &str, seeds: &str) -> SuiteConfig {
    SuiteConfig {
        instances,
        methods: parse_methods(methods).unwrap(),
        seeds: parse_seeds(seeds).unwrap(),
        time_limit: Duration::from_secs(60),
        ..SuiteConfig::default()
    }
}

fn without_runtime(csv: &str) -> String {
    csv.lines()
        .map(|l| {
            let mut f: Vec<&str> = l.split(',').collect();
            f.remove(8);
            f.join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn record(instance: &str, n: usize, algorithm: &str, kept: usize, status: Status) -> BenchmarkRecord {
    BenchmarkRecord {
        instance: instance.to_string(),
        set: "s".to_string(),
        n: Some(n),
        m: Some(3 * n),
        algorithm: algorithm.to_string(),
        seed: 0,
        edges_kept: Some(kept),
        runtime_ms: 1.0,
        status,
        crossings: None,
    }
}

#[test]
fn k5_with_every_heuristic() {
    let cfg = config(vec![inline("k5", Graph::complete(5))], "multistart,bm,bm+,c,c+", "0");
    let records = run_suite(&cfg).unwrap();
    assert_eq!(records.len(), 5);
    for r in &records {
        assert_eq!(r.status, Status::Ok);
        let d = r.density().unwrap();
        match r.algorithm.as_str() {
            "bm" => assert!((0.8..=1.8).contains(&d)),
            "c" => assert!((1.2..=1.8).contains(&d)),
            _ => assert_eq!(r.edges_kept, Some(9)),
        }
    }
}

#[test]
fn empty_method_list_gives_no_records() {
    let cfg = config(vec![inline("k5", Graph::complete(5))], "", "0..3");
    assert!(run_suite(&cfg).unwrap().is_empty());
}

#[test]
fn missing_files_become_error_rows() {
    let instances = vec![
        InstanceSource::File {
            path: "/definitely/not/here.el".into(),
            set: None,
        },
        inline("k33", Graph::complete_bipartite(3, 3)),
    ];
    let records = run_suite(&config(instances, "c+", "0,1")).unwrap();
    assert_eq!(records.len(), 4);
    let errors: Vec<_> = records.iter().filter(|r| r.status == Status::Error).collect();
    assert_eq!(errors.len(), 2);
    assert!(errors.iter().all(|r| r.instance == "here" && r.n.is_none()));
    assert!(records.iter().filter(|r| r.instance == "k33").all(|r| r.edges_kept == Some(8)));
    assert!(!suite::all_ok(&records));
}

#[test]
fn long_runs_time_out_promptly() {
    let spec = GeneratorSpec {
        family: Family::Regular,
        n: 10_000,
        density: 5,
        seed: 1,
    };
    for limit in [1, 150] {
        let mut cfg = config(vec![InstanceSource::Generated(spec)], "multistart", "0");
        cfg.time_limit = Duration::from_millis(limit);
        let records = run_suite(&cfg).unwrap();
        assert_eq!(records[0].status, Status::Timeout);
        assert_eq!(records[0].edges_kept, None);
        if limit > 1 {
            assert!(records[0].runtime_ms <= 2.0 * limit as f64, "{}", records[0].runtime_ms);
        }
    }
}

#[test]
fn exact_cells_report_optimum_or_incumbent() {
    let cfg = config(vec![inline("k6", Graph::complete(6)), inline("petersen", Graph::petersen())], "exact", "0");
    let records = run_suite(&cfg).unwrap();
    let kept: Vec<_> = records.iter().map(|r| (r.instance.as_str(), r.edges_kept, r.status)).collect();
    assert_eq!(kept, [("k6", Some(12), Status::Ok), ("petersen", Some(13), Status::Ok)]);

    let spec = GeneratorSpec {
        family: Family::Regular,
        n: 40,
        density: 3,
        seed: 2,
    };
    let g = spec.generate().unwrap();
    let mut cfg = config(vec![InstanceSource::Generated(spec)], "exact", "0");
    cfg.time_limit = Duration::from_millis(300);
    let r = &run_suite(&cfg).unwrap()[0];
    assert_eq!(r.status, Status::Timeout);
    assert!(r.edges_kept.unwrap() >= cactus_plus(&g, 0).kept.len());
}

#[test]
fn planarize_fills_crossings() {
    let mut cfg = config(vec![inline("k5", Graph::complete(5)), inline("k6", Graph::complete(6))], "c+", "0..3");
    cfg.planarize = true;
    for r in run_suite(&cfg).unwrap() {
        let c = r.crossings.unwrap();
        if r.instance == "k5" {
            assert_eq!(c, 1);
        } else {
            assert!(c >= 3);
        }
    }
}

#[test]
fn reruns_and_worker_counts_agree() {
    let grid = parse_grid("regular:60:3:0..3").unwrap();
    let mut grid2 = parse_grid("scale-free:80:2:5..7").unwrap();
    grid2.extend(grid);
    let mut cfg = config(
        grid2.into_iter().map(InstanceSource::Generated).collect(),
        "naive,multistart,bm,bm+,c,c+",
        "0..2",
    );
    cfg.planarize = true;
    cfg.restarts = 3;
    let a = records_csv(&run_suite(&cfg).unwrap());
    cfg.workers = 4;
    let b = records_csv(&run_suite(&cfg).unwrap());
    assert_eq!(without_runtime(&a), without_runtime(&b));
    assert_eq!(a.lines().count(), 1 + 5 * 6 * 2);
}

#[test]
fn csv_round_trip_and_trivial_shapes() {
    assert_eq!(
        records_csv(&[]),
        "instance,set,n,m,algorithm,seed,edges_kept,density,runtime_ms,status,crossings\n"
    );
    let one = vec![record("a", 5, "c+", 9, Status::Ok)];
    let text = records_csv(&one);
    assert_eq!(text.lines().nth(1), Some("a,s,5,15,c+,0,9,1.800000,1.000,ok,"));
    assert_eq!(text.lines().count(), 2);
    let mut many = one.clone();
    many.push(BenchmarkRecord {
        n: None,
        m: None,
        edges_kept: None,
        crossings: Some(4),
        ..record("b,quoted", 1, "bm", 0, Status::Timeout)
    });
    let back = read_records(records_csv(&many).as_bytes()).unwrap();
    assert_eq!(back, many);
    assert!(read_records("a,b\n1,2\n".as_bytes()).is_err());
    let bad = text.replace(",ok,", ",fine,");
    assert!(read_records(bad.as_bytes()).is_err());
}

#[test]
fn relative_density_examples() {
    let records = vec![
        record("x", 10, "c+", 9, Status::Ok),
        record("x", 10, "c", 6, Status::Ok),
        record("y", 24, "c+", 30, Status::Ok),
        record("y", 24, "c", 30, Status::Ok),
        record("z", 26, "c+", 40, Status::Ok),
        record("z", 26, "c", 0, Status::Timeout),
    ];
    let rows = aggregate(&records, Grouping::VertexBucket10, Metric::RelativeDensity);
    let get = |group: usize, alg: &str| rows.iter().find(|r| r.group == group && r.algorithm == alg).unwrap();
    assert_eq!(get(10, "c+").avg, Some(1.0));
    assert!((get(10, "c").avg.unwrap() - 2.0 / 3.0).abs() < 1e-12);
    assert_eq!(get(20, "c").avg, Some(1.0));
    assert_eq!(get(20, "c+").avg, Some(1.0));
    let empty = get(30, "c");
    assert!(empty.is_empty());
    assert_eq!((empty.excluded, empty.avg), (1, None));
    assert!(rows.iter().flat_map(|r| r.max).all(|v| v <= 1.0));
    assert!(aggregate_csv(&rows).contains("s,vertex-bucket-10,30,c,relative-density,0,1,,,,true\n"));
}

#[test]
fn grouping_rules() {
    assert_eq!((vertex_bucket_10(24), vertex_bucket_10(26), vertex_bucket_10(25)), (20, 30, 30));
    assert_eq!((vertex_bucket_10(100), vertex_bucket_10(4)), (100, 0));
    assert_eq!((density_class(100, 300), density_class(100, 249), density_class(0, 0)), (3, 2, 0));
    let records = vec![record("x", 10, "c", 6, Status::Ok), record("y", 58, "c", 7, Status::Ok)];
    let rows = aggregate(&records, Grouping::DensityClass, Metric::Runtime);
    assert_eq!(rows.len(), 1);
    assert_eq!((rows[0].group, rows[0].instances, rows[0].avg), (3, 2, Some(1.0)));
}

#[test]
fn plot_series_per_algorithm() {
    let records = vec![
        record("x", 10, "c+", 9, Status::Ok),
        record("x", 10, "c", 6, Status::Ok),
        record("y", 31, "c+", 9, Status::Ok),
    ];
    let rows = aggregate(&records, Grouping::VertexBucket10, Metric::RelativeDensity);
    let series = plot_series(&rows);
    assert_eq!(series.keys().collect::<Vec<_>>(), ["c.dat", "cplus.dat"]);
    assert_eq!(
        series["cplus.dat"],
        "# algorithm c+ metric relative-density grouping vertex-bucket-10\n# set x min avg max\ns 10 1.000000 1.000000 1.000000\ns 30 1.000000 1.000000 1.000000\n"
    );
    assert_eq!(series_file_name("bm+"), "bmplus.dat");
    assert_eq!(aggregate_csv(&[]).lines().count(), 1);
}

#[test]
fn config_parsing() {
    assert_eq!(parse_seeds("0..3,7").unwrap(), [0, 1, 2, 7]);
    assert!(parse_seeds("x").is_err());
    assert_eq!(parse_grid("regular:100:3:0..2").unwrap().len(), 2);
    assert!(parse_grid("regular:100:3").is_err());
    assert_eq!(
        parse_methods("c+, exact,ni").unwrap(),
        [Method::Heuristic(Algorithm::CactusPlus), Method::Exact, Method::Heuristic(Algorithm::Multistart)]
    );
    assert!(parse_methods("simplex").is_err());
    let mut cfg = config(vec![], "c", "0");
    cfg.time_limit = Duration::ZERO;
    assert!(run_suite(&cfg).is_err());
}
