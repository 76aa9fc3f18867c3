use std::process::Command;

use frises_cli::{run, EXIT_RESOURCE, EXIT_USAGE};
use frises_cli::verify::display_cells;

fn frises(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("frises").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = frises(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

/// Cells of TSV output by (row, col).
fn cell(out: &str, row: usize, col: usize) -> &str {
    out.lines().nth(row).and_then(|l| l.split('\t').nth(col)).unwrap_or("")
}

/// Every printed number of a transcribed display appears in place;
/// `exceptions` lists misprints as (row, col, expected output).
fn matches_display(out: &str, display: &str, exceptions: &[(usize, usize, &str)]) {
    let cells = display_cells(display);
    assert!(cells.len() > 20);
    for (row, col, v) in cells {
        let want = exceptions.iter().find(|e| (e.0, e.1) == (row, col)).map_or(v.to_string(), |e| e.2.to_string());
        assert_eq!(cell(out, row, col), want, "display ({row},{col})");
    }
}

const SQUARE_FRONTIER: &str = "[xy]* yxxxyxxxxxyyyxyyyxyxxxyyyyyxyyyx [xy]*";
const LEMMA_FRONTIER: &str = "[xxxyxxxyxyyxy]* xxxyxxyxy [yyxyyyxyxxyxy]*";

#[test]
fn kronecker_frise_golden() {
    let out = ok(&["frise", "--quiver", "kronecker", "--steps", "6", "--format", "tsv"]);
    assert_eq!(out, include_str!("../../core/fixtures/kronecker_frise.tsv"));
    let rows: Vec<&str> = out.lines().collect();
    assert!(rows[1].starts_with("0\t1\t2\t13\t89\t"));
    assert!(rows[2].starts_with("1\t1\t5\t34\t233\t"));
}

#[test]
fn square_tiling_display() {
    let out = ok(&["tile", "--frontier", SQUARE_FRONTIER, "--region", "0", "0", "14", "9", "--below", "--format", "tsv"]);
    matches_display(&out, include_str!("../../core/fixtures/square_tiling.tsv"), &[(9, 12, "2638")]);
    // Cells above the frontier stay blank.
    assert_eq!(cell(&out, 0, 9), "");
}

#[test]
fn lemma_tiling_display() {
    let out = ok(&["tile", "--frontier", LEMMA_FRONTIER, "--region", "-2", "-3", "8", "8", "--below", "--format", "tsv"]);
    matches_display(&out, include_str!("../../core/fixtures/lemma_tiling.tsv"), &[]);
}

#[test]
fn atilde3_tiling_display() {
    let out = ok(&["tile", "--frontier", "[xxxy]* [xxxy]*", "--region", "0", "-1", "13", "4", "--below", "--format", "tsv"]);
    matches_display(&out, include_str!("../../core/fixtures/atilde3_tiling.tsv"), &[]);
    let window = ok(&["tile", "--frontier", "[xxxy]* [xxxy]*", "--region", "0", "0", "5", "5", "--format", "tsv"]);
    for v in ["9", "14", "19", "43", "67"] {
        assert!(window.split(['\t', '\n']).any(|c| c == v), "{v}");
    }
}

#[test]
fn frieze_golden() {
    let out = ok(&["frieze", "--seed", "aybycxdxexfxgyhyiyj", "--ones", "--format", "tsv"]);
    assert_eq!(out, include_str!("../../core/fixtures/frieze_ones.tsv"));
    let period = ok(&["frieze", "--seed", "aybycxdxexfxgyhyiyj", "--period", "8", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&period).unwrap();
    assert_eq!(v["period"], 13);
    let symbolic = ok(&["frieze", "--seed", "aybycxdxexfxgyhyiyj", "--region", "2", "2", "2", "2"]);
    assert!(symbolic.contains("c*d*e*f*g*h"), "{symbolic}");
}

#[test]
fn output_is_deterministic() {
    let args = ["cluster-vars", "--type", "Atilde2", "--bound", "4", "--format", "json"];
    assert_eq!(ok(&args), ok(&args));
    let args = ["verify", "--suite", "oracle", "--seed", "7"];
    assert_eq!(ok(&args), ok(&args));
}

#[test]
fn large_json_values_are_strings() {
    let out = ok(&["frise", "--quiver", "kronecker", "--steps", "40", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let row = v["table"][0].as_array().unwrap();
    assert_eq!(row[1], 2);
    let last = row.last().unwrap().as_str().expect("beyond 2^53");
    assert!(last.len() > 16);
    assert!(v["period"].is_null());
}

#[test]
fn subcommands_in_every_format() {
    assert_eq!(ok(&["classify", "--quiver", "Dtilde5"]), "Euclidean Dtilde5\nadditive function: 1 1 2 2 1 1\n");
    let j: serde_json::Value = serde_json::from_str(&ok(&["classify", "--cartan", "2,-1;-1,2", "--format", "json"])).unwrap();
    assert_eq!(j["class"], "Dynkin A2");
    assert!(j["additive"].is_null());
    assert_eq!(ok(&["recur", "--sequence", "1,1,2,5,13,34,89,233"]), "order 2: u[n+2] = 3 u[n+1] - u[n]\n");
    assert!(ok(&["recur", "--quiver", "kronecker", "--vertex", "1", "--steps", "12", "--format", "tsv"]).starts_with("2\t7/1\t-1/1"));
    let ray = ok(&["rays", "--frontier", "[xxxy]* [xxxy]*", "--origin", "0", "0", "--direction", "1", "-1", "--count", "3", "--witness"]);
    assert!(ray.starts_with("1 2 14\n"), "{ray}");
    assert!(ok(&["probe", "--quiver", "A3", "--steps", "40"]).contains("consistent"));
    let cv = ok(&["cluster-vars", "--type", "A2"]);
    assert_eq!(cv.lines().count(), 5);
    let sym = ok(&["tile", "--frontier", "[xy]* yx [xy]*", "--labels", "a,b", "--region", "1", "0", "1", "0", "--check"]);
    assert_eq!(sym.trim(), "(a^2 + 1) / b");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(frises(&["bogus"]).0, EXIT_USAGE);
    assert_eq!(frises(&["frise", "--quiver", "Q9", "--steps", "3"]).0, EXIT_USAGE);
    assert_eq!(frises(&["tile", "--frontier", "xy", "--region", "0", "0", "1", "1"]).0, EXIT_USAGE);
    assert_eq!(frises(&["verify", "--suite", "13"]).0, EXIT_USAGE);
    assert_eq!(frises(&["frise", "--quiver", "A2", "--steps", "3", "--max-steps", "0"]).0, EXIT_USAGE);
    let (code, out, _) = frises(&["frise", "--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("--steps"));
}

#[test]
fn resource_limits_exit_3() {
    assert_eq!(frises(&["frise", "--quiver", "A2", "--steps", "50", "--max-steps", "20"]).0, EXIT_RESOURCE);
    assert_eq!(frises(&["tile", "--frontier", "[xy]* [xy]*", "--region", "0", "0", "99", "99", "--max-region", "100"]).0, EXIT_RESOURCE);
    let wild = r#"{"vertices": 2, "edges": [{"from": 0, "to": 1, "val": [3, 3]}]}"#;
    assert_eq!(frises(&["probe", "--quiver", wild, "--steps", "20", "--max-bits", "1048576"]).0, EXIT_RESOURCE);
}

#[test]
fn the_binary_reads_limits_from_the_environment() {
    let bin = env!("CARGO_BIN_EXE_frises");
    let capped = Command::new(bin).args(["frise", "--quiver", "A2", "--steps", "6"]).env("FRISES_MAX_STEPS", "5").output().unwrap();
    assert_eq!(capped.status.code(), Some(EXIT_RESOURCE));
    assert!(String::from_utf8(capped.stderr).unwrap().contains("exceeds the limit 5"));
    let out = Command::new(bin).args(["verify", "--suite", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("PASS criterion  1"));
}
