//! The nil clean graph and its invariants.

mod census;
mod coloring;
mod domination;
mod metric;
mod paths;
mod report;
mod sweep;

pub use census::{structure_census, Census, ComponentShape};
pub use coloring::{
    class_one_certificate, is_proper_coloring, sum_edge_coloring, CertificateMethod,
    ClassOneCertificate, ColoredEdge, SumColoring,
};
pub use domination::{
    dominating_pair_check, greedy_dominating_set, is_dominating, min_dominating_set,
    min_dominating_set_with, undominated_vertex, DominatingSearch,
};
pub use metric::{Length, ParseLengthError};
pub use paths::{hamiltonian_path_zn, is_path, is_walk, matrix_path_to_zero};
pub use report::{
    ColoringSummary, ComponentSummary, DominatingSummary, InvariantReport, ReportOptions,
};

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::bitset::ElementSet;
use crate::nilclean::nil_clean_set;
use crate::ring::{Elem, Ring};

/// Simple undirected graph on the carrier of a ring: `a ~ b` iff `a ≠ b`
/// and `a + b ∈ NC(R)`.
#[derive(Clone, Debug)]
pub struct NilCleanGraph<'r> {
    ring: &'r Ring,
    nilclean: ElementSet,
    rows: Vec<ElementSet>,
    edge_count: usize,
}

pub fn build_graph(r: &Ring) -> NilCleanGraph<'_> {
    build_graph_with(r, &nil_clean_set(r).set)
}

/// Builds the graph from a precomputed NC(R).
pub fn build_graph_with<'r>(r: &'r Ring, nilclean: &ElementSet) -> NilCleanGraph<'r> {
    let n = r.order();
    let members = nilclean.to_vec();
    let rows: Vec<ElementSet> = (0..n as Elem)
        .into_par_iter()
        .map(|x| {
            let mut row = ElementSet::new(n);
            for &c in &members {
                let y = r.sub(c, x);
                if y != x {
                    row.insert(y);
                }
            }
            row
        })
        .collect();
    let edge_count = rows.iter().map(ElementSet::len).sum::<usize>() / 2;
    NilCleanGraph {
        ring: r,
        nilclean: nilclean.clone(),
        rows,
        edge_count,
    }
}

impl<'r> NilCleanGraph<'r> {
    pub fn ring(&self) -> &'r Ring {
        self.ring
    }

    pub fn nilclean(&self) -> &ElementSet {
        &self.nilclean
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, x: Elem) -> &ElementSet {
        &self.rows[x as usize]
    }

    pub fn rows(&self) -> &[ElementSet] {
        &self.rows
    }

    #[inline]
    pub fn adjacent(&self, a: Elem, b: Elem) -> bool {
        self.rows[a as usize].contains(b)
    }

    pub fn degree(&self, x: Elem) -> usize {
        self.rows[x as usize].len()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.rows.iter().map(ElementSet::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.rows.iter().map(ElementSet::len).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count == n * (n - 1) / 2
    }

    /// Edges `(a, b)` with `a < b`, in carrier order.
    pub fn edges(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        self.rows.iter().enumerate().flat_map(|(a, row)| {
            row.iter()
                .filter(move |&b| b > a as Elem)
                .map(move |b| (a as Elem, b))
        })
    }

    /// First vertex breaking `deg(x) = |NC| − 1` if `2x ∈ NC`, else `|NC|`.
    pub fn degree_formula_violation(&self) -> Option<Elem> {
        let nc = self.nilclean.len();
        self.ring.elements().find(|&x| {
            let expected = if self.nilclean.contains(self.ring.add(x, x)) {
                nc - 1
            } else {
                nc
            };
            self.degree(x) != expected
        })
    }

    pub fn degree_formula_check(&self) -> bool {
        self.degree_formula_violation().is_none()
    }

    /// First pair breaking symmetry or irreflexivity of the adjacency rows.
    pub fn adjacency_violation(&self) -> Option<(Elem, Elem)> {
        for (a, row) in self.rows.iter().enumerate() {
            let a = a as Elem;
            if row.contains(a) {
                return Some((a, a));
            }
            if let Some(b) = row.iter().find(|&b| !self.adjacent(b, a)) {
                return Some((a, b));
            }
        }
        None
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<Elem>> {
        let n = self.order();
        let mut seen = ElementSet::new(n);
        let mut components = Vec::new();
        for start in 0..n as Elem {
            if seen.contains(start) {
                continue;
            }
            let mut component = ElementSet::new(n);
            let mut frontier = ElementSet::new(n);
            frontier.insert(start);
            component.insert(start);
            while !frontier.is_empty() {
                let mut next = ElementSet::new(n);
                for v in &frontier {
                    next.union_with(&self.rows[v as usize]);
                }
                next.difference_with(&component);
                component.union_with(&next);
                frontier = next;
            }
            seen.union_with(&component);
            components.push(component.to_vec());
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0).len() == self.order()
    }

    fn component_of(&self, start: Elem) -> ElementSet {
        self.bfs_layers(start)
            .into_iter()
            .fold(ElementSet::new(self.order()), |mut acc, layer| {
                acc.union_with(&layer);
                acc
            })
    }

    /// BFS layers from `start` using word-parallel frontier expansion.
    pub fn bfs_layers(&self, start: Elem) -> Vec<ElementSet> {
        let n = self.order();
        let mut visited = ElementSet::new(n);
        let mut frontier = ElementSet::new(n);
        visited.insert(start);
        frontier.insert(start);
        let mut layers = Vec::new();
        while !frontier.is_empty() {
            let mut next = ElementSet::new(n);
            for v in &frontier {
                next.union_with(&self.rows[v as usize]);
            }
            next.difference_with(&visited);
            visited.union_with(&next);
            layers.push(std::mem::replace(&mut frontier, next));
        }
        layers
    }

    /// Distances from `start`; `None` for unreachable vertices.
    pub fn distances_from(&self, start: Elem) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.order()];
        for (d, layer) in self.bfs_layers(start).iter().enumerate() {
            for v in layer {
                dist[v as usize] = Some(d as u32);
            }
        }
        dist
    }

    /// Proper 2-colouring of the vertices, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start as Elem);
            while let Some(u) = queue.pop_front() {
                let s = side[u as usize].unwrap();
                for v in self.neighbors(u) {
                    match side[v as usize] {
                        None => {
                            side[v as usize] = Some(!s);
                            queue.push_back(v);
                        }
                        Some(t) if t == s => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connected and 2-regular.
    pub fn is_cycle_graph(&self) -> bool {
        self.rows.iter().all(|r| r.len() == 2) && self.is_connected()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::build_ring;

    fn ring(s: &str) -> Ring {
        build_ring(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn z5_is_the_figure_path() {
        let r = ring("Z5");
        let g = build_graph(&r);
        assert_eq!(g.edge_count(), 4);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (1, 4), (2, 3), (2, 4)]);
        assert!(is_path(&g, &[0, 1, 4, 2, 3]));
    }

    #[test]
    fn z4_is_complete() {
        let r = ring("Z4");
        let g = build_graph(&r);
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_complete());
    }

    #[test]
    fn gf4_is_two_edges() {
        let r = ring("GF(2,2)");
        let g = build_graph(&r);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        assert_eq!(r.label(2), "α");
        assert_eq!(r.label(3), "1+α");
    }

    #[test]
    fn definition_holds_pairwise() {
        for s in ["Z12", "M2(Z2)", "GF(3,2)xZ2", "Q(Z18)"] {
            let r = ring(s);
            let g = build_graph(&r);
            let nc = nil_clean_set(&r).set;
            for a in r.elements() {
                for b in r.elements() {
                    assert_eq!(
                        g.adjacent(a, b),
                        a != b && nc.contains(r.add(a, b)),
                        "{s} {a} {b}"
                    );
                }
            }
            assert_eq!(g.adjacency_violation(), None);
        }
    }

    #[test]
    fn degree_examples() {
        let r = ring("Z6");
        let g = build_graph(&r);
        assert_eq!(g.neighbors(0).to_vec(), vec![1, 3, 4]);
        assert_eq!(g.neighbors(2).to_vec(), vec![1, 4, 5]);
        assert!(g.degree_formula_check());
        let r = ring("GF(5,2)");
        let g = build_graph(&r);
        assert_eq!(g.degree(5), 2);
        assert!(g.degree_formula_check());
    }

    #[test]
    fn components_examples() {
        let r = ring("GF(5,2)");
        let mut sizes: Vec<usize> = build_graph(&r)
            .connected_components()
            .iter()
            .map(Vec::len)
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![5, 10, 10]);
        assert_eq!(build_graph(&ring("Z30")).connected_components().len(), 1);
        assert_eq!(build_graph(&ring("M2(Z2)")).connected_components().len(), 1);
    }

    #[test]
    fn bipartite_examples() {
        assert!(build_graph(&ring("GF(5,2)")).is_bipartite());
        assert!(!build_graph(&ring("Z6")).is_bipartite());
        assert!(build_graph(&ring("Z2")).is_bipartite());
    }

    #[test]
    fn cycle_graph_examples() {
        assert!(!build_graph(&ring("Z6")).is_cycle_graph());
        assert!(!build_graph(&ring("GF(5,2)")).is_cycle_graph());
        assert!(!build_graph(&ring("Z2")).is_cycle_graph());
    }
}
