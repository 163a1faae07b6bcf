use std::io::Write;
use std::process::Command;

use wcds::cli::run;

fn wcds(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("wcds").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn edge_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn count_single_cell() {
    let (code, out, _) = wcds(&[
        "count", "--family", "cycle", "--n", "12", "--i", "6", "--method", "oracle",
    ]);
    assert_eq!((code, out.as_str()), (0, "62\n"));
    let (code, out, _) = wcds(&[
        "count", "--family", "path", "--n", "10", "--i", "7", "--method", "formula",
    ]);
    assert_eq!((code, out.as_str()), (0, "56\n"));
    let (code, out, _) = wcds(&[
        "count",
        "--family",
        "path",
        "--n",
        "8",
        "--i",
        "5",
        "--method",
        "recurrence",
    ]);
    assert_eq!((code, out.as_str()), (0, "20\n"));
}

#[test]
fn path_table_in_markdown() {
    let (code, out, _) = wcds(&[
        "table", "--family", "path", "--max-n", "10", "--format", "md",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[0], "| j | 1 | 2 | 3 | 4 | 5 | 6 | 7 | 8 | 9 | 10 |");
    assert_eq!(lines[5], "| d_w(P_4, j) |  | 3 | 4 | 1 |  |  |  |  |  |  |");
    assert_eq!(
        lines[11],
        "| d_w(P_10, j) |  |  |  |  | 6 | 35 | 56 | 36 | 10 | 1 |"
    );
    let (_, formula, _) = wcds(&[
        "table", "--family", "path", "--max-n", "10", "--method", "formula",
    ]);
    assert_eq!(formula, out);
}

#[test]
fn cycle_table_in_csv() {
    let (code, out, _) = wcds(&[
        "table", "--family", "cycle", "--max-n", "4", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "j,1,2,3,4\n\"d_w(C_1, j)\",1,0,0,0\n\"d_w(C_2, j)\",2,1,0,0\n\"d_w(C_3, j)\",3,3,1,0\n\"d_w(C_4, j)\",0,6,4,1\n"
    );
}

#[test]
fn gamma_from_family_and_file() {
    assert_eq!(wcds(&["gamma", "--family", "path", "--n", "7"]).1, "3\n");
    let (_, out, _) = wcds(&[
        "gamma",
        "--family",
        "cycle",
        "--n",
        "4",
        "--with-gamma",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        (v["gamma_w"].as_u64(), v["gamma"].as_u64()),
        (Some(2), Some(2))
    );
    let f = edge_file("# star\n1 2\n1 3\n1 4\n");
    assert_eq!(
        wcds(&["gamma", "--input", f.path().to_str().unwrap()]).1,
        "1\n"
    );
}

#[test]
fn disconnected_gamma_is_an_input_error() {
    let f = edge_file("n 5\n1 2\n3 4\n");
    let (code, out, err) = wcds(&["gamma", "--input", f.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(
        err.contains("γ_w undefined: graph is disconnected"),
        "{err}"
    );
    let (code, out, err) = wcds(&["count", "--input", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("|  |  |  |  |  |"));
    assert!(err.contains("disconnected"));
}

#[test]
fn renumbered_labels_are_reported_on_stderr() {
    let f = edge_file("0 1\n1 2\n");
    let (code, out, err) = wcds(&["emit", "--input", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "n 3\n1 2\n2 3\n");
    assert!(err.contains("0->1"));
}

#[test]
fn enumeration_is_sorted_and_one_based() {
    let (code, out, _) = wcds(&["enumerate", "--family", "cycle", "--n", "5", "--i", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 3\n1 4\n2 4\n2 5\n3 5\n");
    let oracle = wcds(&[
        "enumerate",
        "--family",
        "complete",
        "--n",
        "1",
        "--root",
        "1",
        "--m",
        "4",
        "--i",
        "3",
    ]);
    let built = wcds(&[
        "enumerate",
        "--family",
        "complete",
        "--n",
        "1",
        "--root",
        "1",
        "--m",
        "4",
        "--i",
        "3",
        "--method",
        "constructive",
    ]);
    assert_eq!(oracle.1, built.1);
    assert_eq!(oracle.1.lines().count(), 6);
}

#[test]
fn extension_by_recurrence() {
    let args = [
        "count", "--family", "cycle", "--n", "3", "--root", "1", "--m", "4",
    ];
    let (_, oracle, _) = wcds(&args);
    let mut rec = args.to_vec();
    rec.extend(["--method", "recurrence"]);
    assert_eq!(wcds(&rec).1, oracle);
}

#[test]
fn unsupported_methods() {
    let (code, _, err) = wcds(&[
        "count", "--family", "cycle", "--n", "7", "--method", "formula",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("unsupported"));
    let (code, _, _) = wcds(&[
        "count", "--family", "cycle", "--n", "12", "--i", "2", "--method", "formula",
    ]);
    assert_eq!(code, 2);
    let (code, out, _) = wcds(&[
        "count", "--family", "cycle", "--n", "12", "--i", "9", "--method", "formula",
    ]);
    assert_eq!((code, out.as_str()), (0, "208\n"));
}

#[test]
fn usage_errors() {
    assert_eq!(wcds(&["frobnicate"]).0, 2);
    assert_eq!(wcds(&["count", "--family", "path"]).0, 2);
    assert_eq!(
        wcds(&["count", "--family", "path", "--n", "3", "--format", "xml"]).0,
        2
    );
    assert_eq!(wcds(&["count", "--family", "hexagon", "--n", "3"]).0, 2);
    assert_eq!(wcds(&["verify", "--suite", "nonsense"]).0, 2);
    let f = edge_file("1 2\n");
    let path = f.path().to_str().unwrap();
    assert_eq!(
        wcds(&["count", "--family", "path", "--n", "3", "--input", path]).0,
        2
    );
    assert_eq!(wcds(&["count", "--input", "/nonexistent/graph.edges"]).0, 2);
    let (code, out, _) = wcds(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn capacity() {
    let (code, _, err) = wcds(&["count", "--family", "path", "--n", "25"]);
    assert_eq!(code, 3);
    assert!(err.contains("cap"));
    assert_eq!(
        wcds(&["count", "--family", "path", "--n", "5", "--cap", "4"]).0,
        3
    );
    assert_eq!(
        wcds(&["count", "--family", "path", "--n", "5", "--cap", "26"]).0,
        2
    );
    assert_eq!(
        wcds(&[
            "count",
            "--family",
            "path",
            "--n",
            "5",
            "--cap",
            "26",
            "--force-cap"
        ])
        .0,
        0
    );
    assert_eq!(
        wcds(&[
            "count",
            "--family",
            "path",
            "--n",
            "5",
            "--cap",
            "31",
            "--force-cap"
        ])
        .0,
        2
    );
}

#[test]
fn verify_exit_status_and_stable_output() {
    let args = [
        "verify",
        "--suite",
        "join",
        "--instances",
        "5",
        "--seed",
        "7",
        "--format",
        "csv",
    ];
    let (code, first, err) = wcds(&args);
    assert_eq!(code, 1);
    assert!(err.contains("join:"));
    assert!(first.starts_with("suite,subject,cell,source,claimed,oracle,pass,note\n"));
    assert_eq!(wcds(&args).1, first);
    let (code, out, _) = wcds(&["verify", "--suite", "table1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["summary"]["failed"], 0);
    assert!(v["metadata"]["wall_time_ms"].is_number());
    let (code, md, _) = wcds(&["verify", "--suite", "table2", "--max-n", "6"]);
    assert_eq!(code, 0);
    assert!(md.contains("| d_w(C_6, j) |  |  | 14 | 15 | 6 | 1 |"));
}

#[test]
fn binary_reads_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_wcds"))
        .args(["count", "--family", "path", "--n", "6", "--i", "3"])
        .env("WCDS_ORACLE_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_wcds"))
        .args(["count", "--family", "path", "--n", "6", "--i", "3"])
        .env("WCDS_ORACLE_CAP", "6")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "4\n");
}
