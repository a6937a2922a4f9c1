//! DOT, JSON and CSV renderings of a nil clean graph.

use std::fmt::Write as _;
use std::io;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::NilCleanGraph;
use crate::ring::Elem;

/// Component index of every vertex, components numbered by least vertex.
pub fn component_index(g: &NilCleanGraph) -> Vec<usize> {
    let mut index = vec![0; g.order()];
    for (i, component) in g.connected_components().iter().enumerate() {
        for &v in component {
            index[v as usize] = i;
        }
    }
    index
}

const PALETTE: &[&str] = &[
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT graph. Nodes carry the ring label and a `component`
/// attribute; with `color_components` each component gets a fill colour.
pub fn to_dot(g: &NilCleanGraph, color_components: bool) -> String {
    let r = g.ring();
    let components = component_index(g);
    let mut out = String::new();
    writeln!(out, "graph {} {{", quote(&format!("G_N({})", r.name()))).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in r.elements() {
        let c = components[v as usize];
        write!(out, "  {v} [label={}, component={c}", quote(&r.label(v))).unwrap();
        if color_components {
            write!(
                out,
                ", style=filled, fillcolor={}",
                quote(PALETTE[c % PALETTE.len()])
            )
            .unwrap();
        }
        writeln!(out, "];").unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub ring: String,
    pub order: usize,
    pub labels: Vec<String>,
    pub nilclean: Vec<Elem>,
    pub component: Vec<usize>,
    pub edges: Vec<[Elem; 2]>,
}

impl GraphDocument {
    pub fn new(g: &NilCleanGraph) -> Self {
        let r = g.ring();
        GraphDocument {
            ring: r.name(),
            order: g.order(),
            labels: r.labels(),
            nilclean: g.nilclean().to_vec(),
            component: component_index(g),
            edges: g.edges().map(|(a, b)| [a, b]).collect(),
        }
    }
}

pub fn to_json(g: &NilCleanGraph) -> String {
    serde_json::to_string_pretty(&GraphDocument::new(g)).expect("graph serializes")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRow {
    pub a: Elem,
    pub b: Elem,
    pub label_a: String,
    pub label_b: String,
    /// `a + b`, also the edge's sum colour.
    pub sum: Elem,
}

pub fn edge_rows(g: &NilCleanGraph) -> Vec<EdgeRow> {
    let r = g.ring();
    g.edges()
        .map(|(a, b)| EdgeRow {
            a,
            b,
            label_a: r.label(a),
            label_b: r.label(b),
            sum: r.add(a, b),
        })
        .collect()
}

pub fn write_edge_csv<W: io::Write>(g: &NilCleanGraph, out: W) -> Result<()> {
    let fail = |e: csv::Error| Error::Parse {
        input: "csv".to_string(),
        reason: e.to_string(),
    };
    let mut w = csv::Writer::from_writer(out);
    for row in edge_rows(g) {
        w.serialize(row).map_err(fail)?;
    }
    w.flush().map_err(|e| fail(e.into()))
}

pub fn read_edge_csv<R: io::Read>(input: R) -> Result<Vec<EdgeRow>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .map(|r| {
            r.map_err(|e| Error::Parse {
                input: "csv".to_string(),
                reason: e.to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::ring::build_ring;

    #[test]
    fn z5_dot() {
        let r = build_ring(&"Z5".parse().unwrap()).unwrap();
        let dot = to_dot(&build_graph(&r), false);
        assert!(dot.starts_with("graph \"G_N(Z5)\" {"));
        assert_eq!(dot.matches(" -- ").count(), 4);
        assert_eq!(dot.matches("component=0").count(), 5);
        for edge in ["0 -- 1;", "1 -- 4;", "2 -- 4;", "2 -- 3;"] {
            assert!(dot.contains(edge), "{edge}");
        }
    }

    #[test]
    fn gf25_exports() {
        let r = build_ring(&"GF(5,2;[1,1,1])".parse().unwrap()).unwrap();
        let g = build_graph(&r);
        let dot = to_dot(&g, true);
        assert!(dot.contains("label=\"α\""));
        assert!(dot.contains("component=2"));
        assert!(dot.contains("fillcolor"));

        let doc: GraphDocument = serde_json::from_str(&to_json(&g)).unwrap();
        assert_eq!(doc, GraphDocument::new(&g));
        assert_eq!(doc.edges.len(), 24);
        assert_eq!(doc.nilclean, vec![0, 1]);

        let mut buf = Vec::new();
        write_edge_csv(&g, &mut buf).unwrap();
        let rows = read_edge_csv(buf.as_slice()).unwrap();
        assert_eq!(rows, edge_rows(&g));
        assert!(rows.iter().all(|e| e.sum <= 1));
    }
}
