//! End-to-end tests of the `unipinv` binary: output formats, exit codes,
//! stdin handling, and document round trips.

mod common;

use std::io::Write;
use std::process::{Command, Output, Stdio};

use common::{EXAMPLE_9, EXAMPLE_9_PINV_TIMES_36, PATH_3, TRIANGLE};
use unipinv::exact::{parse_rational, rational};
use unipinv::graph::parse_graph;

fn unipinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unipinv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn unipinv_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_unipinv"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

fn write_temp(name: &str, content: &str) -> std::path::PathBuf {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn classify_reports_class_and_cycle_length() {
    let input = write_temp("classify_example9.txt", EXAMPLE_9);
    let output = unipinv(&["classify", "--input", input.to_str().unwrap()]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "EvenUnicyclic n=9 m=9 |C|=4\n");

    let output = unipinv_stdin(&["classify"], TRIANGLE);
    assert_eq!(stdout(&output), "OddUnicyclic n=3 m=3 |C|=3\n");

    let output = unipinv_stdin(&["classify"], PATH_3);
    assert_eq!(stdout(&output), "Tree n=3 m=2\n");
}

#[test]
fn classify_rejects_malformed_input_with_exit_1() {
    let output = unipinv_stdin(&["classify"], "2 1\n1 1\n");
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("self-loop"), "stderr: {stderr}");
}

#[test]
fn pinv_csv_matches_known_pseudoinverse() {
    let output = unipinv_stdin(&["pinv", "--format", "csv"], EXAMPLE_9);
    assert!(output.status.success());
    let text = stdout(&output);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# class=EvenUnicyclic"));
    assert_eq!(lines.next().unwrap(), "# h");
    assert_eq!(lines.next().unwrap(), ",v1,v2,v3,v4,v5,v6,v7,v8,v9");
    for (e, line) in lines.enumerate() {
        let mut cells = line.split(',');
        assert_eq!(cells.next().unwrap(), format!("e{}", e + 1));
        for (j, cell) in cells.enumerate() {
            let value = parse_rational(cell).unwrap();
            assert_eq!(
                value,
                rational(EXAMPLE_9_PINV_TIMES_36[e][j], 36),
                "CSV entry ({e}, {j})"
            );
        }
    }
}

#[test]
fn pinv_json_carries_metadata_and_all_emits() {
    let output = unipinv_stdin(
        &[
            "pinv", "--format", "json", "--emit", "h", "--emit", "mh", "--emit", "hm", "--emit",
            "qplus", "--emit", "splus",
        ],
        EXAMPLE_9,
    );
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["class"], "EvenUnicyclic");
    assert_eq!(value["formula"], "even-unicyclic-pseudoinverse");
    assert_eq!(value["n"], 9);
    assert_eq!(value["cycle_length"], 4);
    for key in ["h", "mh", "hm", "qplus", "splus"] {
        assert_eq!(value[key]["rows"], 9, "matrix {key}");
        assert_eq!(value[key]["cols"], 9, "matrix {key}");
    }
    // Spot values: pendant entry of H and the diagonal of MH.
    assert_eq!(value["h"]["entries"][2][0], "8/9");
    assert_eq!(value["mh"]["entries"][0][0], "8/9");
    assert_eq!(value["hm"]["entries"][5][5], "3/4");
}

#[test]
fn pinv_on_triangle_emits_half_integer_inverse() {
    let output = unipinv_stdin(&["pinv", "--format", "json"], TRIANGLE);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["formula"], "odd-unicyclic-inverse");
    assert_eq!(value["h"]["entries"][0][0], "1/2");
    assert_eq!(value["h"]["entries"][0][2], "-1/2");
}

#[test]
fn pinv_rejects_trees_with_exit_1() {
    let output = unipinv_stdin(&["pinv"], PATH_3);
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("unicyclic"), "stderr: {stderr}");
}

#[test]
fn verify_passes_on_even_and_odd_graphs() {
    for document in [EXAMPLE_9, TRIANGLE] {
        let output = unipinv_stdin(&["verify"], document);
        assert!(output.status.success());
        let text = stdout(&output);
        let first = text.lines().next().unwrap();
        let report: serde_json::Value = serde_json::from_str(first).unwrap();
        for axiom in ["axiom1", "axiom2", "axiom3", "axiom4"] {
            assert_eq!(report[axiom], true, "{axiom} in {first}");
        }
        assert_eq!(report["witness"], serde_json::Value::Null);
        assert!(text.contains("mh matches predicted: pass"));
        assert!(text.contains("verdict: pass"));
    }
    // The four-cycle exercises the smallest even case.
    let output = unipinv_stdin(&["verify"], "4 4\n1 2\n2 3\n3 4\n4 1\n");
    assert!(output.status.success());
}

#[test]
fn gen_output_round_trips_and_classifies() {
    let output = unipinv(&["gen", "--n", "9", "--cycle", "4", "--seed", "7"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let graph = parse_graph(&text).unwrap();
    assert_eq!(graph.vertex_count(), 9);
    assert_eq!(graph.find_cycle().unwrap().len(), 4);
    assert_eq!(graph.to_edge_list(), text);

    // Same seed, same document.
    let again = unipinv(&["gen", "--n", "9", "--cycle", "4", "--seed", "7"]);
    assert_eq!(stdout(&again), text);

    // Generated graphs feed straight back into verify.
    let verify = unipinv_stdin(&["verify"], &text);
    assert!(verify.status.success());
}

#[test]
fn gen_flag_errors_exit_2() {
    let too_small = unipinv(&["gen", "--n", "3", "--cycle", "4"]);
    assert_eq!(too_small.status.code(), Some(2));
    let unsatisfiable = unipinv(&["gen", "--n", "3", "--parity", "even"]);
    assert_eq!(unsatisfiable.status.code(), Some(2));
    let usage = unipinv(&["frobnicate"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn bench_emits_csv_with_oracle_column() {
    let out = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli_bench.csv");
    let output = unipinv(&[
        "bench",
        "--n",
        "8",
        "--seeds",
        "2",
        "--oracle-cap",
        "16",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let csv = std::fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,cycle_length,seed,t_combinatorial_ms,t_oracle_ms,verified"
    );
    for line in lines {
        assert!(line.starts_with("8,4,"));
        assert!(line.ends_with(",true"));
    }
    let summary = String::from_utf8(output.stderr).unwrap();
    assert!(summary.contains("n=8"), "summary: {summary}");
    assert!(summary.contains("all_verified=true"));
}

#[test]
fn out_flag_writes_files() {
    let out = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli_h.json");
    let output = unipinv_stdin(
        &["pinv", "--format", "json", "--out", out.to_str().unwrap()],
        EXAMPLE_9,
    );
    assert!(output.status.success());
    assert!(stdout(&output).is_empty());
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(value["h"]["entries"][5][6], "17/36");
}
