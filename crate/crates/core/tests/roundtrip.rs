use nilgraph::export::{edge_rows, read_edge_csv, write_edge_csv, GraphDocument};
use nilgraph::graph::ReportOptions;
use nilgraph::harness::all_cases;
use nilgraph::scan::{read_csv, scan, write_csv};
use nilgraph::{
    build_graph, build_ring, Families, InvariantReport, RingSpec, ScanOptions, SuiteReport,
    SuiteSettings,
};

fn specs(text: &str) -> Vec<RingSpec> {
    Families::load(text).unwrap().specs
}

#[test]
fn invariant_reports() {
    for spec in ["Z2", "Z9", "GF(5,2)", "M2(Z2)", "Z4xZ3", "Z30"] {
        let r = build_ring(&spec.parse().unwrap()).unwrap();
        let report = InvariantReport::compute(&build_graph(&r), &ReportOptions::default());
        let back: InvariantReport =
            serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        assert_eq!(back, report, "{spec}");
    }
}

#[test]
fn suite_reports() {
    let report = nilgraph::run_suite(
        &specs("Z2..Z24,GF(2,2),GF(3,2),Z2xZ9"),
        &all_cases(),
        SuiteSettings::default(),
    );
    let back: SuiteReport = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(back, report);
    assert_eq!(back.to_json(), report.to_json());
}

#[test]
fn scan_tables() {
    let options = ScanOptions {
        max_order: 40,
        ..ScanOptions::default()
    };
    let rows = scan(&specs("Z2..Z45,GF(2,3),M2(Z2),Z4xZ3"), &options);
    let mut csv = Vec::new();
    write_csv(&rows, &mut csv).unwrap();
    assert_eq!(read_csv(csv.as_slice()).unwrap(), rows);
}

#[test]
fn graph_exports() {
    let r = build_ring(&"GF(3,2)".parse().unwrap()).unwrap();
    let g = build_graph(&r);
    let mut csv = Vec::new();
    write_edge_csv(&g, &mut csv).unwrap();
    assert_eq!(read_edge_csv(csv.as_slice()).unwrap(), edge_rows(&g));
    let doc: GraphDocument = serde_json::from_str(&nilgraph::export::to_json(&g)).unwrap();
    assert_eq!(doc.order, 9);
    assert_eq!(doc.edges.len(), g.edge_count());
}
