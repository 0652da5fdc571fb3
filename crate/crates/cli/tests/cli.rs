use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn graphspark(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphspark"))
        .args(args)
        .env_remove("GRAPHSPARK_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn temp_file(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

#[test]
fn spark_json_shape() {
    let o = graphspark(&["--json", "spark", "path:5"]);
    assert!(o.status.success());
    let v = &json_lines(&o)[0];
    assert_eq!(v["spark"], 3);
    assert_eq!(v["fort"], serde_json::json!([0, 2, 4]));
    assert_eq!(v["method"], "branch_and_bound");
}

#[test]
fn brute_force_agrees_on_graph6_input() {
    let g = "Dl{";
    let bb = json_lines(&graphspark(&["--json", "spark", g]));
    let bf = json_lines(&graphspark(&["--json", "spark", "--method", "brute-force", g]));
    assert_eq!(bb[0]["fort"], bf[0]["fort"]);
    assert_eq!(bf[0]["method"], "brute_force");
}

#[test]
fn batch_of_ten_lines_gives_ten_records() {
    let lines: Vec<String> = (3..13).map(|n| format!("cycle:{n}")).collect();
    let f = temp_file(&lines.join("\n"));
    let o = graphspark(&["--json", "batch", "spark", f.path().to_str().unwrap()]);
    assert!(o.status.success());
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 10);
    for (i, r) in recs.iter().enumerate() {
        assert_eq!(r["line"], i + 1);
        assert_eq!(r["n"], i + 3);
    }
}

#[test]
fn malformed_line_is_an_error_record() {
    let f = temp_file("path:3\npath:4\n!!bad\npath:5\ncycle:4\n");
    let o = graphspark(&["--json", "batch", "spark", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 5);
    assert!(recs[2]["error"].is_string());
    assert_eq!(recs[2]["line"], 3);
    assert_eq!(recs[3]["spark"], 3);
    assert_eq!(recs[4]["spark"], 2);
}

#[test]
fn fort_sequence_csv_has_count_columns() {
    let f = temp_file("path:3\nfriendship:3\n");
    let o = graphspark(&["--csv", "batch", "forts", f.path().to_str().unwrap()]);
    assert!(o.status.success());
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert!(header.iter().any(|h| h == "s7"));
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2);
    let col = |name: &str| header.iter().position(|h| h == name).unwrap();
    let f3: Vec<&str> = (2..=7).map(|i| &rows[1][col(&format!("s{i}"))]).collect();
    assert_eq!(f3, ["3", "0", "11", "12", "7", "1"]);
    assert_eq!(&rows[0][col("s4")], "");
}

#[test]
fn zero_forcing_closure() {
    let v = &json_lines(&graphspark(&["--json", "zf", "--initial", "0", "path:4"]))[0];
    assert_eq!(v["forcing"], true);
    let v = &json_lines(&graphspark(&["--json", "zf", "--initial", "1", "path:4"]))[0];
    assert_eq!(v["closure"], serde_json::json!([1]));
}

#[test]
fn matrix_commands() {
    let a = temp_file("# example\n1 -1 0\n-1 2 -1\n0 -1 1\n");
    let p = a.path().to_str().unwrap();
    let v = &json_lines(&graphspark(&["--json", "mat", "rank", p]))[0];
    assert_eq!((v["rank"].as_u64(), v["nullity"].as_u64()), (Some(2), Some(1)));
    let v = &json_lines(&graphspark(&["--json", "mat", "spark", p]))[0];
    assert_eq!(v["spark"], 3);
    let v = &json_lines(&graphspark(&["--json", "mat", "classify", "-v", "1", p]))[0];
    assert_eq!(v["class"], "neither");
    let v = &json_lines(&graphspark(&["--json", "mat", "generic", p]))[0];
    assert_eq!(v["null_basis_generic"], true);
    let o = graphspark(&["mat", "rank", "/nonexistent/matrix.txt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn construct_outputs_parse_back() {
    let o = graphspark(&["construct", "from-fort", "--fort", "0,2", "--values", "1,-1", "cycle:4"]);
    assert!(o.status.success());
    let a = graphspark::linalg::parse_matrix(&stdout(&o)).unwrap();
    let x: Vec<_> = [1, 0, -1, 0].into_iter().map(graphspark::linalg::int).collect();
    assert!(a.mul_vec(&x).unwrap().iter().all(|v| *v == graphspark::linalg::int(0)));

    let f = temp_file(&stdout(&graphspark(&["construct", "laplacian", "complete:1"])));
    let o = graphspark(&["construct", "border", "--x", "2", f.path().to_str().unwrap()]);
    assert_eq!(graphspark::linalg::parse_matrix(&stdout(&o)).unwrap().rows(), 2);

    let o = graphspark(&["construct", "from-fort", "--fort", "0", "path:3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_codes_and_replay() {
    let o = graphspark(&["--json", "verify", "duplicates", "--corpus", "exhaustive:5"]);
    assert!(o.status.success());
    let r = &json_lines(&o)[0];
    assert_eq!(r["suite"], "duplicates");
    assert_eq!(r["cases"], 1 + 1 + 2 + 6 + 21);

    let o = graphspark(&["verify", "no-such-suite"]);
    assert_eq!(o.status.code(), Some(2));

    let a = graphspark(&["--json", "verify", "rank-bump", "--corpus", "random:5:20:6"]);
    let b = graphspark(&[
        "--json",
        "--threads",
        "1",
        "verify",
        "rank-bump",
        "--corpus",
        "random:5:20:6",
    ]);
    let strip = |o: &Output| {
        let mut v = json_lines(o).remove(0);
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    assert_eq!(strip(&a), strip(&b));

    let one = graphspark(&[
        "--json",
        "verify",
        "rank-bump",
        "--corpus",
        "random:5:20:6",
        "--case",
        "7",
    ]);
    assert_eq!(json_lines(&one)[0]["cases"], 1);
}

#[test]
fn config_file_and_thread_env() {
    let cfg = temp_file("threads = 2\nfort_limit = 4\n");
    let o = graphspark(&["--config", cfg.path().to_str().unwrap(), "forts", "path:6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("limited to 4"));

    let bad = temp_file("unknown_key = 1\n");
    assert_eq!(
        graphspark(&["--config", bad.path().to_str().unwrap(), "spark", "path:3"])
            .status
            .code(),
        Some(2)
    );

    let o = Command::new(env!("CARGO_BIN_EXE_graphspark"))
        .args(["spark", "path:3"])
        .env("GRAPHSPARK_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(graphspark(&["spark"]).status.code(), Some(2));
    assert_eq!(graphspark(&["spark", "cycle:2"]).status.code(), Some(2));
}
