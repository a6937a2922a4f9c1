//! Human-readable output.

use std::fmt::Write as _;

use nilgraph::graph::CertificateMethod;
use nilgraph::harness::SuiteReport;
use nilgraph::nilclean::LabeledSet;
use nilgraph::{InvariantReport, ProfileDocument, Verdict};

fn set(s: &LabeledSet) -> String {
    format!("{{{}}}", s.labels.join(", "))
}

pub fn profile(doc: &ProfileDocument) -> String {
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "ring            {}", doc.ring).unwrap();
    writeln!(w, "order           {}", doc.order).unwrap();
    writeln!(w, "characteristic  {}", doc.characteristic).unwrap();
    writeln!(w, "commutative     {}", doc.commutative).unwrap();
    writeln!(
        w,
        "Idem            {} {}",
        doc.idempotents.indices.len(),
        set(&doc.idempotents)
    )
    .unwrap();
    writeln!(
        w,
        "Nil             {} {}",
        doc.nilpotents.indices.len(),
        set(&doc.nilpotents)
    )
    .unwrap();
    writeln!(
        w,
        "NC              {} {}",
        doc.nilclean.indices.len(),
        set(&doc.nilclean)
    )
    .unwrap();
    writeln!(w, "nil clean       {}", doc.is_nil_clean_ring).unwrap();
    writeln!(w, "weak nil clean  {}", doc.is_weak_nil_clean_ring).unwrap();
    writeln!(w, "field           {}", doc.is_field).unwrap();
    out
}

pub fn invariants(r: &InvariantReport) -> String {
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "ring          {}", r.ring).unwrap();
    writeln!(w, "order         {}", r.order).unwrap();
    writeln!(w, "|NC|          {}", r.nilclean_size).unwrap();
    writeln!(w, "edges         {}", r.edge_count).unwrap();
    writeln!(w, "Δ             {}", r.max_degree()).unwrap();
    let sizes: Vec<String> = r.components.sizes.iter().map(ToString::to_string).collect();
    writeln!(
        w,
        "components    {} (sizes {})",
        r.components.count,
        sizes.join(" ")
    )
    .unwrap();
    writeln!(w, "girth         {}", r.girth).unwrap();
    writeln!(w, "diameter      {}", r.diameter).unwrap();
    writeln!(w, "bipartite     {}", r.bipartite).unwrap();
    match (
        &r.min_dominating.size,
        &r.min_dominating.set,
        &r.min_dominating.skipped,
    ) {
        (Some(size), Some(s), _) => writeln!(w, "γ             {size} {}", set(s)).unwrap(),
        (_, _, reason) => writeln!(
            w,
            "γ             skipped ({}); greedy {}",
            reason.as_deref().unwrap_or("no result"),
            r.min_dominating.greedy_size
        )
        .unwrap(),
    }
    let c = &r.coloring;
    writeln!(
        w,
        "sum colouring {} colours, {}",
        c.color_count,
        if c.proper { "proper" } else { "not proper" }
    )
    .unwrap();
    match (c.certificate_colors, c.certificate_method) {
        (Some(n), Some(method)) => {
            let how = match method {
                CertificateMethod::SumColoring => "sum colouring",
                CertificateMethod::Componentwise => "recoloured by component",
            };
            writeln!(w, "χ′            {n} ({how})").unwrap()
        }
        _ => writeln!(w, "χ′            no Δ-colour certificate found").unwrap(),
    }
    writeln!(
        w,
        "census        paths {:?}, cycles {:?}, other {:?}",
        r.census.paths, r.census.cycles, r.census.other
    )
    .unwrap();
    for problem in r.inconsistencies() {
        writeln!(w, "warning       {problem}").unwrap();
    }
    out
}

pub fn suite(report: &SuiteReport) -> String {
    let mut out = String::new();
    for e in &report.entries {
        if let Verdict::Mismatch { .. } = e.verdict {
            let tag = if e.expected_mismatch {
                "expected"
            } else {
                "MISMATCH"
            };
            writeln!(out, "{tag:<9} {:<28} {:<16} {}", e.case, e.ring, e.verdict).unwrap();
        }
    }
    let t = &report.totals;
    writeln!(
        out,
        "{} rings, {} checks: {} pass, {} expected mismatch, {} unexpected mismatch, {} skipped",
        t.rings,
        report.entries.len(),
        t.pass,
        t.expected_mismatch,
        t.unexpected_mismatch,
        t.skipped
    )
    .unwrap();
    out
}
