use serde::{Deserialize, Serialize};

use super::{
    class_one_certificate, min_dominating_set_with, structure_census, sum_edge_coloring, Census,
    CertificateMethod, ColoredEdge, DominatingSearch, Length, NilCleanGraph,
};
use crate::nilclean::LabeledSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    pub dominating: DominatingSearch,
    /// Backtracking steps per component for the class-1 certificate.
    pub coloring_budget: u64,
    /// Include every coloured edge in the report.
    pub edge_colors: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            dominating: DominatingSearch::default(),
            coloring_budget: 2_000_000,
            edge_colors: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSummary {
    pub count: usize,
    pub sizes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominatingSummary {
    pub size: Option<usize>,
    pub set: Option<LabeledSet>,
    /// Why no exact set was computed.
    pub skipped: Option<String>,
    pub greedy_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringSummary {
    pub proper: bool,
    pub colors: Vec<u32>,
    pub color_count: usize,
    pub max_degree: usize,
    pub colors_within_nilclean: bool,
    /// Sum colouring uses exactly Δ colours.
    pub class_one: bool,
    /// Colours in the Δ-colour certificate, when one was found.
    pub certificate_colors: Option<usize>,
    pub certificate_method: Option<CertificateMethod>,
    pub edges: Vec<ColoredEdge>,
}

/// Every invariant of one nil clean graph, with a stable field order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub ring: String,
    pub order: usize,
    pub nilclean_size: usize,
    pub edge_count: usize,
    pub degree_sequence: Vec<usize>,
    pub components: ComponentSummary,
    pub girth: Length,
    pub diameter: Length,
    pub bipartite: bool,
    pub min_dominating: DominatingSummary,
    pub coloring: ColoringSummary,
    pub census: Census,
}

impl InvariantReport {
    pub fn compute(g: &NilCleanGraph, options: &ReportOptions) -> Self {
        let r = g.ring();
        let components = g.connected_components();
        let greedy_size = super::greedy_dominating_set(g).len();
        let min_dominating = match min_dominating_set_with(g, &options.dominating) {
            Ok(set) => DominatingSummary {
                size: Some(set.len()),
                set: Some(LabeledSet {
                    indices: set.to_vec(),
                    labels: set.iter().map(|x| r.label(x)).collect(),
                }),
                skipped: None,
                greedy_size,
            },
            Err(e) => DominatingSummary {
                size: None,
                set: None,
                skipped: Some(e.to_string()),
                greedy_size,
            },
        };
        let sum = sum_edge_coloring(g);
        let certificate = class_one_certificate(g, options.coloring_budget);
        let coloring = ColoringSummary {
            proper: sum.proper,
            color_count: sum.colors.len(),
            max_degree: sum.max_degree,
            colors_within_nilclean: sum.colors_within_nilclean,
            class_one: sum.class_one,
            certificate_colors: certificate.as_ref().map(|c| c.color_count),
            certificate_method: certificate.as_ref().map(|c| c.method),
            colors: sum.colors,
            edges: if options.edge_colors {
                sum.edges
            } else {
                Vec::new()
            },
        };
        InvariantReport {
            ring: r.name(),
            order: g.order(),
            nilclean_size: g.nilclean().len(),
            edge_count: g.edge_count(),
            degree_sequence: g.degree_sequence(),
            components: ComponentSummary {
                count: components.len(),
                sizes: components.iter().map(Vec::len).collect(),
            },
            girth: g.girth(),
            diameter: g.diameter(),
            bipartite: g.is_bipartite(),
            min_dominating,
            coloring,
            census: structure_census(g),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.coloring.max_degree
    }

    /// Cross-field consistency: bipartite graphs have even or infinite
    /// girth, complete graphs have diameter 1, disconnected graphs have
    /// infinite diameter, and the census accounts for every component.
    pub fn inconsistencies(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.bipartite && self.girth.finite().is_some_and(|g| g % 2 == 1) {
            out.push("bipartite with odd girth");
        }
        let complete = self.edge_count == self.order * (self.order - 1) / 2;
        if complete && self.order > 1 && self.diameter != Length::Finite(1) {
            out.push("complete without diameter 1");
        }
        if (self.components.count > 1) != self.diameter.is_infinite() {
            out.push("diameter disagrees with connectivity");
        }
        if self.census.component_count() != self.components.count {
            out.push("census misses components");
        }
        if self.degree_sequence.iter().sum::<usize>() != 2 * self.edge_count {
            out.push("degree sum is not twice the edge count");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::ring::build_ring;

    #[test]
    fn gf25_report() {
        let r = build_ring(&"GF(5,2)".parse().unwrap()).unwrap();
        let report = InvariantReport::compute(&build_graph(&r), &ReportOptions::default());
        assert_eq!(report.components.count, 3);
        assert_eq!(report.girth, Length::Finite(10));
        assert_eq!(report.diameter, Length::Infinite);
        assert!(report.bipartite);
        assert_eq!(report.edge_count, 24);
        assert!(report.inconsistencies().is_empty());
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"diameter\":\"inf\""));
        let back: InvariantReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
