//! End-to-end tests of the distbal binary: pipeability, exit codes, and
//! schema-valid reports.

mod schema;

use std::io::Write;
use std::process::{Command, Output, Stdio};

use schema::Schema;
use serde_json::Value;

fn distbal(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_distbal"));
    cmd.args(args).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.stdin(if stdin.is_some() { Stdio::piped() } else { Stdio::null() });
    let mut child = cmd.spawn().expect("binary spawns");
    if let Some(text) = stdin {
        child.stdin.as_mut().unwrap().write_all(text.as_bytes()).unwrap();
    }
    child.wait_with_output().expect("binary runs")
}

fn stdout_of(args: &[&str], stdin: Option<&str>) -> String {
    let out = distbal(args, stdin);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("UTF-8 output")
}

fn json_of(args: &[&str], stdin: Option<&str>) -> Value {
    serde_json::from_str(&stdout_of(args, stdin)).expect("JSON output")
}

#[test]
fn generate_emits_graph6() {
    let line = stdout_of(&["generate", "complete_bipartite", "2", "4"], None);
    assert_eq!(
        line.trim(),
        distbal::to_graph6(&distbal::generate::complete_bipartite(2, 4).unwrap())
    );
}

#[test]
fn generate_edgelist_round_trips() {
    let text = stdout_of(&["generate", "cycle", "5", "--out", "edgelist"], None);
    let g = distbal::parse_edge_list_text(&text).unwrap();
    assert_eq!(g.vertex_count(), 5);
    assert_eq!(g.edge_count(), 5);
}

#[test]
fn classify_reports_balance_values() {
    let g6 = stdout_of(&["generate", "complete_bipartite", "2", "4"], None);
    let report = json_of(&["classify"], Some(&g6));
    assert_eq!(report["convention"], "augmented");
    assert_eq!(report["payload"]["gt_edb_values"], serde_json::json!([2]));
    assert_eq!(report["payload"]["diameter"], 2);
    Schema::load().validate(&report).unwrap();
}

#[test]
fn index_matches_known_values() {
    let g6 = stdout_of(&["generate", "cycle", "4"], None);
    let report = json_of(&["index", "--edge-szeged", "--convention", "strict"], Some(&g6));
    assert_eq!(report["payload"]["edge_szeged"], 4);
    assert!(report["payload"].get("szeged").is_none());
    Schema::load().validate(&report).unwrap();

    let both = json_of(&["index"], Some(&g6));
    assert_eq!(both["payload"]["szeged"], 16);
    assert_eq!(both["convention"], "strict");
    Schema::load().validate(&both).unwrap();
}

#[test]
fn product_pipes_into_classify() {
    let dir = std::env::temp_dir().join("distbal-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let k2 = dir.join("k2.g6");
    std::fs::write(&k2, stdout_of(&["generate", "path", "2"], None)).unwrap();
    let k2s = k2.to_str().unwrap();

    let product = stdout_of(&["product", k2s, k2s, "--cartesian"], None);
    let g = distbal::parse_graph6(product.trim()).unwrap();
    assert!(distbal::are_isomorphic(&g, &distbal::generate::cycle(4).unwrap()).unwrap());

    let report = json_of(&["classify", "--convention", "strict"], Some(&product));
    assert_eq!(report["payload"]["gt_edb_values"], serde_json::json!([1]));

    let lex = stdout_of(&["product", "--lexicographic", k2s, "-"], Some(&product));
    let lg = distbal::parse_graph6(lex.trim()).unwrap();
    assert_eq!(lg.vertex_count(), 8);
}

#[test]
fn enumerate_counts_and_schema() {
    let catalog = stdout_of(&["enumerate", "--n", "4"], None);
    let lines: Vec<&str> = catalog.lines().collect();
    // 1 + 1 + 2 + 6 connected classes on up to four vertices.
    assert_eq!(lines.len(), 10);
    let schema = Schema::load();
    for line in &lines {
        let value: Value = serde_json::from_str(line).unwrap();
        schema.validate_def("catalogEntry", &value).unwrap();
        schema.validate(&value).unwrap();
    }
}

#[test]
fn enumerate_predicate_finds_complete_bipartite_family() {
    let catalog =
        stdout_of(&["enumerate", "--n", "6", "--predicate", "bipartite,diameter=2,gt_edb=2"], None);
    let hits: Vec<Value> = catalog.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let k24 = distbal::canonical_form(&distbal::generate::complete_bipartite(2, 4).unwrap())
        .unwrap()
        .to_graph();
    let k24_g6 = distbal::to_graph6(&k24);
    assert!(hits.iter().any(|e| e["graph6"] == Value::String(k24_g6.clone())));
    // Everything the filter returns really is bipartite with diameter 2.
    assert!(hits.iter().all(|e| e["bipartite"] == Value::Bool(true) && e["diameter"] == 2));
}

#[test]
fn verify_subset_is_deterministic_and_schema_valid() {
    let args = ["verify", "--checks", "C1,C4,C5", "--budget", "4"];
    let first = stdout_of(&args, None);
    let second = stdout_of(&args, None);
    assert_eq!(first.as_bytes(), second.as_bytes());

    let report: Value = serde_json::from_str(&first).unwrap();
    Schema::load().validate(&report).unwrap();
    let checks = report["payload"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 3);
    assert_eq!(checks[0]["id"], "C1");
    assert_eq!(checks[1]["verdict"], "DISCREPANCY");

    let text = stdout_of(&["verify", "--checks", "C1", "--budget", "4", "--format", "text"], None);
    assert!(text.contains("C1") && text.contains("summary:"));
}

#[test]
fn verify_writes_report_file() {
    let dir = std::env::temp_dir().join("distbal-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("report.json");
    let printed = stdout_of(
        &["verify", "--checks", "C4", "--budget", "3", "--out", out.to_str().unwrap()],
        None,
    );
    assert!(printed.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    Schema::load().validate(&report).unwrap();
}

#[test]
fn exit_codes_follow_error_classes() {
    // Usage errors exit 1.
    assert_eq!(distbal(&["nonsense"], None).status.code(), Some(1));
    assert_eq!(distbal(&["generate", "cycle", "2"], None).status.code(), Some(1));
    assert_eq!(distbal(&["generate", "cycle"], None).status.code(), Some(1));
    assert_eq!(
        distbal(&["enumerate", "--n", "4", "--predicate", "girth=3"], None).status.code(),
        Some(1)
    );

    // Input parse errors exit 2.
    assert_eq!(distbal(&["classify"], Some("not a graph!\n")).status.code(), Some(2));
    assert_eq!(distbal(&["classify", "--in", "/no/such/file"], None).status.code(), Some(2));

    // Budget errors exit 3.
    let p20 = stdout_of(&["generate", "path", "20"], None);
    let dir = std::env::temp_dir().join("distbal-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let p20_path = dir.join("p20.g6");
    std::fs::write(&p20_path, &p20).unwrap();
    let p20s = p20_path.to_str().unwrap();
    assert_eq!(
        distbal(&["product", p20s, p20s, "--vertex-budget", "100"], None).status.code(),
        Some(3)
    );
    assert_eq!(distbal(&["verify", "--budget", "9"], None).status.code(), Some(3));

    // Claim verdicts never affect the exit status.
    assert_eq!(
        distbal(&["verify", "--checks", "C4", "--budget", "3"], None).status.code(),
        Some(0)
    );
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(distbal(&["--help"], None).status.code(), Some(0));
    assert_eq!(distbal(&["--version"], None).status.code(), Some(0));
}
