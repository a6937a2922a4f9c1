use serde::{Deserialize, Serialize};

use super::NilCleanGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum ComponentShape {
    /// A simple path; a lone vertex counts as a path on one vertex.
    Path {
        vertices: usize,
    },
    Cycle {
        length: usize,
    },
    Other {
        vertices: usize,
    },
}

/// Component shapes, in component order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub paths: Vec<usize>,
    pub cycles: Vec<usize>,
    pub other: Vec<usize>,
}

impl Census {
    pub fn component_count(&self) -> usize {
        self.paths.len() + self.cycles.len() + self.other.len()
    }

    pub fn is_single_path(&self) -> bool {
        self.paths.len() == 1 && self.cycles.is_empty() && self.other.is_empty()
    }
}

pub fn classify(g: &NilCleanGraph, component: &[u32]) -> ComponentShape {
    let size = component.len();
    let degrees: Vec<usize> = component.iter().map(|&v| g.degree(v)).collect();
    let ends = degrees.iter().filter(|&&d| d == 1).count();
    let middles = degrees.iter().filter(|&&d| d == 2).count();
    if size == 1 {
        ComponentShape::Path { vertices: 1 }
    } else if ends == 2 && middles == size - 2 {
        ComponentShape::Path { vertices: size }
    } else if middles == size {
        ComponentShape::Cycle { length: size }
    } else {
        ComponentShape::Other { vertices: size }
    }
}

pub fn structure_census(g: &NilCleanGraph) -> Census {
    let mut census = Census::default();
    for component in g.connected_components() {
        match classify(g, &component) {
            ComponentShape::Path { vertices } => census.paths.push(vertices),
            ComponentShape::Cycle { length } => census.cycles.push(length),
            ComponentShape::Other { vertices } => census.other.push(vertices),
        }
    }
    census
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::ring::build_ring;

    fn census(s: &str) -> Census {
        let r = build_ring(&s.parse().unwrap()).unwrap();
        structure_census(&build_graph(&r))
    }

    #[test]
    fn gf25() {
        assert_eq!(
            census("GF(5,2)"),
            Census {
                paths: vec![5],
                cycles: vec![10, 10],
                other: vec![]
            }
        );
    }

    #[test]
    fn gf9() {
        assert_eq!(
            census("GF(3,2)"),
            Census {
                paths: vec![3],
                cycles: vec![6],
                other: vec![]
            }
        );
    }

    #[test]
    fn z4_is_other() {
        assert_eq!(
            census("Z4"),
            Census {
                paths: vec![],
                cycles: vec![],
                other: vec![4]
            }
        );
    }

    #[test]
    fn gf8_is_four_edges() {
        assert_eq!(census("GF(2,3)").paths, vec![2, 2, 2, 2]);
    }
}
