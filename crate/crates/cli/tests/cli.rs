use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn essgb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_essgb"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn compute_worked_instance_text() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "v.txt", "# two points\n0 0 0\n1 2 0\n");
    let out = essgb(&["compute", &f, "--prime", "5", "--order", "lex", "--verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    for line in [
        "  x1^2+4*x1",
        "  x2+3*x1",
        "  x3",
        "standard monomials: 1, x1",
        "  4*x1+1",
        "  x1",
    ] {
        assert!(
            text.lines().any(|l| l == line),
            "missing {line:?} in\n{text}"
        );
    }
    assert!(stderr(&out).contains("CHECK vanishing PASS"));
    assert!(!stderr(&out).contains("FAIL"));
}

#[test]
fn compute_json_schema() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "v.txt", "2,3\n");
    for alg in ["essgb", "bm"] {
        let out = essgb(&[
            "compute",
            &f,
            "--prime",
            "5",
            "--format",
            "json",
            "--algorithm",
            alg,
        ]);
        assert_eq!(out.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        assert_eq!(keys.len(), 5);
        assert_eq!(v["prime"], 5);
        assert_eq!(v["order"], "lex");
        assert_eq!(v["groebner_basis"], serde_json::json!(["x2+2", "x1+3"]));
        assert_eq!(v["standard_monomials"], serde_json::json!(["1"]));
        assert_eq!(v["separators"], serde_json::json!(["1"]));
    }
}

#[test]
fn compute_grevlex_parabola() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "v.txt", "0 0\n1 1\n2 4\n");
    let out = essgb(&[
        "compute", &f, "--prime", "5", "--order", "grevlex", "--format", "json", "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        v["standard_monomials"],
        serde_json::json!(["1", "x1", "x2"])
    );
}

#[test]
fn input_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let dup = write(&dir, "dup.txt", "1 2\n3 4\n1 2\n");
    let out = essgb(&["compute", &dup, "--prime", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("duplicate point at rows 1 and 3"),
        "{}",
        stderr(&out)
    );

    let bad = write(&dir, "bad.txt", "1 2\n3 x\n");
    let out = essgb(&["compute", &bad, "--prime", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("line 2, column 3"),
        "{}",
        stderr(&out)
    );

    let ok = write(&dir, "ok.txt", "1 2\n");
    let out = essgb(&["compute", &ok, "--prime", "6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not a prime"));

    let ragged = write(&dir, "ragged.txt", "1 2\n3\n");
    assert_eq!(
        essgb(&["compute", &ragged, "--prime", "5"]).status.code(),
        Some(1)
    );

    let out = essgb(&["compute", "/nonexistent/points.txt", "--prime", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn gen_is_reproducible_and_reports_rank() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for path in [&a, &b] {
        let out = essgb(&[
            "gen",
            "--prime",
            "5",
            "--n",
            "100",
            "--m",
            "10",
            "--index",
            "10",
            "--reps",
            "10",
            "--seed",
            "4",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        let summary = stdout(&out);
        assert!(summary.contains("nr(i) = 2"), "{summary}");
        let rank: usize = summary.trim().rsplit(' ').next().unwrap().parse().unwrap();
        assert!(rank <= 2);
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().all(|r| r.split_whitespace().count() == 100));

    // the generated file is valid compute input
    let out = essgb(&["compute", a.to_str().unwrap(), "--prime", "5", "--verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
}

#[test]
fn gen_rejects_degenerate_spec() {
    let out = essgb(&[
        "gen", "--prime", "2", "--n", "1", "--m", "3", "--index", "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = essgb(&[
        "gen", "--prime", "5", "--n", "3", "--m", "3", "--index", "11", "--reps", "10",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

fn csv_lines(path: &Path) -> Vec<String> {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(String::from)
        .collect()
}

#[test]
fn bench_single_cell_appends_csv() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("bench.csv");
    let args = [
        "bench",
        "--primes",
        "5",
        "--ns",
        "100",
        "--ms",
        "5",
        "--orders",
        "lex",
        "--reps",
        "1",
        "--min-sample-ms",
        "0",
        "--out",
        csv.to_str().unwrap(),
    ];
    let out = essgb(&args);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("bm/essgb"));
    let lines = csv_lines(&csv);
    assert_eq!(
        lines[0],
        "p,n,m,order,i,alg,seconds,ess_vars,gb_size,checksum"
    );
    assert_eq!(lines.len(), 3);
    let fields: Vec<Vec<&str>> = lines[1..].iter().map(|l| l.split(',').collect()).collect();
    assert_eq!(fields[0][5], "essgb");
    assert_eq!(fields[1][5], "bm");
    assert_eq!(fields[0][9], fields[1][9]);
    assert_eq!(fields[0][9].len(), 16);

    assert_eq!(essgb(&args).status.code(), Some(0));
    let lines = csv_lines(&csv);
    assert_eq!(lines.len(), 5);
    assert_eq!(lines.iter().filter(|l| l.starts_with("p,")).count(), 1);
}

#[test]
fn bench_rejects_bad_config() {
    let out = essgb(&[
        "bench", "--primes", "4", "--ns", "10", "--ms", "2", "--reps", "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = essgb(&[
        "bench", "--primes", "5", "--ns", "10", "--ms", "2", "--reps", "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
}
