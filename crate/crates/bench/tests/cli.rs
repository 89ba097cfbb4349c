use std::fs;
use std::process::{Command, Output};

fn mps(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mps")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn help_and_bad_flags() {
    assert_eq!(code(&mps(&["--help"])), 0);
    assert_eq!(code(&mps(&["run", "--no-such-flag"])), 1);
    assert_eq!(code(&mps(&[])), 1);
    assert_eq!(code(&mps(&["run", "--grid", "regular:10:2:0", "--algorithms", "magic"])), 1);
}

#[test]
fn gen_run_aggregate() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("inst");
    let inst_s = inst.to_str().unwrap();
    assert_eq!(code(&mps(&["gen", "--grid", "regular:30:2:0..2", "--out", inst_s])), 0);
    let files: Vec<String> = ["regular-n30-d2-s0.el", "regular-n30-d2-s1.el"]
        .iter()
        .map(|f| inst.join(f).to_str().unwrap().to_string())
        .collect();
    let csv = dir.path().join("r.csv");
    let mut args = vec!["run", "--algorithms", "c,c+", "--seeds", "0..2", "--out", csv.to_str().unwrap()];
    args.extend(files.iter().map(String::as_str));
    assert_eq!(code(&mps(&args)), 0);
    let text = fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 1 + 8);
    assert!(text.lines().skip(1).all(|l| l.contains(",inst,30,60,")));

    let plot = dir.path().join("plot");
    let out = mps(&["aggregate", csv.to_str().unwrap(), "--plot-dir", plot.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("inst,vertex-bucket-10,30,c+,relative-density,2,0,1.000000,1.000000,1.000000,false"));
    assert!(plot.join("cplus.dat").exists() && plot.join("c.dat").exists());
}

#[test]
fn partial_runs_exit_two() {
    let out = mps(&["run", "/no/such/graph.el", "--grid", "regular:10:1:0", "--algorithms", "c"]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("graph,such,,,c,0,,,"));
    let out = mps(&["run", "--grid", "regular:3000:5:0", "--algorithms", "naive", "--time-limit-ms", "5"]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains(",timeout,"));
}

#[test]
fn worker_variable_is_validated() {
    let bad = Command::new(env!("CARGO_BIN_EXE_mps"))
        .args(["run", "--grid", "regular:10:1:0", "--algorithms", "c"])
        .env("MPS_WORKERS", "zero")
        .output()
        .unwrap();
    assert_eq!(code(&bad), 1);
    let ok = Command::new(env!("CARGO_BIN_EXE_mps"))
        .args(["run", "--grid", "regular:10:1:0..4", "--algorithms", "c,naive"])
        .env("MPS_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(code(&ok), 0);
}

#[test]
fn single_graph_commands() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = dir.path().join("k5.el");
    let mut text = String::from("5\n");
    for u in 0..5 {
        for v in u + 1..5 {
            text.push_str(&format!("{u} {v}\n"));
        }
    }
    fs::write(&k5, text).unwrap();
    let k5 = k5.to_str().unwrap();

    let out = mps(&["exact", k5]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("status optimal\nkept 9\nskewness 1\n"));

    let host = dir.path().join("host.el");
    let out = mps(&["planarize", k5, "--out", host.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("crossings 1"));
    assert!(fs::read_to_string(&host).unwrap().starts_with("6\n"));

    let out = mps(&["export-ilp", k5]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("Subject To\n k0: "));

    let point = dir.path().join("x.txt");
    fs::write(&point, (0..10).map(|e| format!("{e} 0.95\n")).collect::<String>()).unwrap();
    let out = mps(&["export-ilp", k5, "--point", point.to_str().unwrap(), "--threshold", "0.9"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("<= 9"));
    assert_eq!(code(&mps(&["export-ilp", k5, "--threshold", "1.5"])), 1);
    fs::write(&point, "3 2.0\n").unwrap();
    assert_eq!(code(&mps(&["export-ilp", k5, "--point", point.to_str().unwrap()])), 1);
    assert_eq!(code(&mps(&["exact", "/no/such.el"])), 1);
}
