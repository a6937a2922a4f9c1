use std::process::{Command, Output};

fn nilgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilgraph"))
        .args(args)
        .env_remove("NILGRAPH_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn ring_profiles() {
    let out = nilgraph(&["ring", "GF(5,2)"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("NC              2 {0, 1}"));

    let out = nilgraph(&["ring", "Z4", "--json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["is_nil_clean_ring"], true);
    assert_eq!(doc["nilclean"]["indices"], serde_json::json!([0, 1, 2, 3]));

    let out = nilgraph(&["ring", "Z1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Z1"));
}

#[test]
fn graph_exports() {
    let out = nilgraph(&["graph", "Z5", "--format", "dot"]);
    let dot = stdout(&out);
    assert_eq!(dot.matches("component=").count(), 5);
    assert_eq!(dot.matches(" -- ").count(), 4);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gf25.json");
    let out = nilgraph(&[
        "graph",
        "GF(5,2)",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["order"], 25);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 24);

    let out = nilgraph(&["graph", "M2(Z2)", "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.starts_with("a,b,label_a,label_b,sum\n"));
    let doc: serde_json::Value =
        serde_json::from_slice(&nilgraph(&["graph", "M2(Z2)", "--format", "json"]).stdout).unwrap();
    assert_eq!(doc["order"], 16);

    let out = nilgraph(&["graph", "Z5", "--out", "/nonexistent/dir/g.dot"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invariants_json() {
    let out = nilgraph(&["invariants", "Z9", "--json", "--no-edges"]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["diameter"], 2);
    assert_eq!(report["min_dominating"]["size"], 2);
    assert_eq!(report["coloring"]["edges"], serde_json::json!([]));
}

#[test]
fn scan_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.csv");
    let out = nilgraph(&[
        "scan",
        "--zn-range",
        "2..20",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 20);
    let column = |line: &str, name: &str| {
        let i = lines[0].split(',').position(|h| h == name).unwrap();
        line.split(',').nth(i).unwrap().to_string()
    };
    let row = |spec: &str| {
        *lines
            .iter()
            .find(|l| l.starts_with(&format!("{spec},")))
            .unwrap()
    };
    assert_eq!(column(row("Z8"), "diameter"), "1");
    assert_eq!(column(row("Z10"), "diameter"), "4");
    assert_eq!(column(row("Z7"), "girth"), "inf");
}

#[test]
fn scan_marks_oversized_rings() {
    let out = nilgraph(&["scan", "--zn-range", "30..31", "--max-order", "30"]);
    let text = stdout(&out);
    assert!(text.contains("\nZ30,30,"));
    assert!(text.contains("\nZ31,skipped,skipped"));
}

#[test]
fn scan_from_list() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rings.txt");
    std::fs::write(&path, "# a few rings\nZ4xZ3, GF(3,2)\nM2(Z2)\n").unwrap();
    let out = nilgraph(&["scan", "--list", path.to_str().unwrap()]);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    for (row, spec) in rows.iter().zip(["\"GF(3,2)\",", "M2(Z2),", "Z4xZ3,"]) {
        assert!(row.starts_with(spec), "{row}");
    }
}

#[test]
fn verify_exit_codes() {
    let out = nilgraph(&["verify", "--cases", "girth-nonfield", "--families", "Z6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("1 pass"));

    let out = nilgraph(&[
        "verify",
        "--families",
        "GF(2,2)",
        "--cases",
        "girth-path-shape",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("1 expected mismatch"));

    assert_eq!(
        nilgraph(&["verify", "--cases", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        nilgraph(&["verify", "--families", "Z0"]).status.code(),
        Some(2)
    );
    assert_eq!(nilgraph(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_config_file_and_cap() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("families.conf");
    std::fs::write(
        &config,
        "zn = 2..30\ngf = 27\nmatrices = M2(Z2)\nmax_order = 20\n",
    )
    .unwrap();
    let json = dir.path().join("report.json");
    let out = nilgraph(&[
        "verify",
        "--families",
        config.to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let entries = report["entries"].as_array().unwrap();
    let z29: Vec<_> = entries.iter().filter(|e| e["ring"] == "Z29").collect();
    assert!(z29.iter().all(|e| e["verdict"] == "skipped"));
    assert!(report.get("wall_time").is_none());
}

#[test]
fn max_order_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_nilgraph"))
        .args(["ring", "Z50"])
        .env("NILGRAPH_MAX_ORDER", "40")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_do_not_depend_on_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one.json");
    let eight = dir.path().join("eight.json");
    let families = "Z2..Z40,GF(3,2),GF(5,2),M2(Z2),Z4xZ3";
    for (jobs, path) in [("1", &one), ("8", &eight)] {
        let out = nilgraph(&[
            "--jobs",
            jobs,
            "verify",
            "--families",
            families,
            "--json",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&one).unwrap(), std::fs::read(&eight).unwrap());

    let a = nilgraph(&["--jobs", "1", "scan", "--zn-range", "2..30"]);
    let b = nilgraph(&["--jobs", "8", "scan", "--zn-range", "2..30"]);
    assert_eq!(a.stdout, b.stdout);
}
