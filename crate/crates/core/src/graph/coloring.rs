//! Edge colourings: the sum colouring `C(ab) = a + b` and a Δ-colour
//! certificate of class 1.

use serde::{Deserialize, Serialize};

use super::NilCleanGraph;
use crate::ring::Elem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredEdge {
    pub a: Elem,
    pub b: Elem,
    pub color: u32,
}

/// Every edge `ab` coloured by the ring element `a + b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumColoring {
    pub edges: Vec<ColoredEdge>,
    pub proper: bool,
    /// Realized colours, sorted.
    pub colors: Vec<Elem>,
    pub colors_within_nilclean: bool,
    pub max_degree: usize,
    /// `|colors| = Δ`.
    pub class_one: bool,
}

impl SumColoring {
    pub fn color_count(&self) -> usize {
        self.colors.len()
    }
}

/// Colours meeting at each vertex are pairwise distinct.
pub fn is_proper_coloring(order: usize, edges: &[ColoredEdge]) -> bool {
    let mut seen: Vec<Vec<u32>> = vec![Vec::new(); order];
    for e in edges {
        seen[e.a as usize].push(e.color);
        seen[e.b as usize].push(e.color);
    }
    seen.iter_mut().all(|colors| {
        colors.sort_unstable();
        colors.windows(2).all(|w| w[0] != w[1])
    })
}

pub fn sum_edge_coloring(g: &NilCleanGraph) -> SumColoring {
    let r = g.ring();
    let edges: Vec<ColoredEdge> = g
        .edges()
        .map(|(a, b)| ColoredEdge {
            a,
            b,
            color: r.add(a, b),
        })
        .collect();
    let mut colors: Vec<Elem> = edges.iter().map(|e| e.color).collect();
    colors.sort_unstable();
    colors.dedup();
    let max_degree = g.max_degree();
    SumColoring {
        proper: is_proper_coloring(g.order(), &edges),
        colors_within_nilclean: colors.iter().all(|&c| g.nilclean().contains(c)),
        class_one: colors.len() == max_degree,
        max_degree,
        colors,
        edges,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateMethod {
    /// The sum colouring already uses Δ colours.
    SumColoring,
    /// Components recoloured individually: sum colours where they fit,
    /// round-robin 1-factorizations of even complete components, and a
    /// bounded backtracking search otherwise.
    Componentwise,
}

/// A proper edge colouring using exactly Δ colours, which proves χ′ = Δ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassOneCertificate {
    pub method: CertificateMethod,
    pub edges: Vec<ColoredEdge>,
    pub color_count: usize,
}

impl ClassOneCertificate {
    pub fn verify(&self, g: &NilCleanGraph) -> bool {
        let mut colors: Vec<u32> = self.edges.iter().map(|e| e.color).collect();
        colors.sort_unstable();
        colors.dedup();
        self.edges.len() == g.edge_count()
            && self.edges.iter().all(|e| g.adjacent(e.a, e.b))
            && is_proper_coloring(g.order(), &self.edges)
            && colors.len() == self.color_count
            && self.color_count <= g.max_degree()
    }
}

/// Builds a Δ-colour certificate, or `None` when no method finds one
/// within `budget` backtracking steps per component.
pub fn class_one_certificate(g: &NilCleanGraph, budget: u64) -> Option<ClassOneCertificate> {
    let sum = sum_edge_coloring(g);
    let delta = g.max_degree();
    if sum.proper && sum.colors.len() <= delta {
        let certificate = ClassOneCertificate {
            method: CertificateMethod::SumColoring,
            color_count: sum.colors.len(),
            edges: sum.edges,
        };
        return Some(certificate);
    }

    let mut edges = Vec::with_capacity(g.edge_count());
    for component in g.connected_components() {
        let component_edges: Vec<(Elem, Elem)> = component
            .iter()
            .flat_map(|&a| {
                g.neighbors(a)
                    .iter()
                    .filter(move |&b| b > a)
                    .map(move |b| (a, b))
            })
            .collect();
        let colored = sum_colors_if_fit(g, &component_edges, delta)
            .or_else(|| round_robin(g, &component, component_edges.len()))
            .or_else(|| backtrack(g, &component_edges, delta, budget))?;
        edges.extend(colored);
    }
    edges.sort_unstable_by_key(|e| (e.a, e.b));
    let mut used: Vec<u32> = edges.iter().map(|e| e.color).collect();
    used.sort_unstable();
    used.dedup();
    let certificate = ClassOneCertificate {
        method: CertificateMethod::Componentwise,
        color_count: used.len(),
        edges,
    };
    certificate.verify(g).then_some(certificate)
}

fn sum_colors_if_fit(
    g: &NilCleanGraph,
    edges: &[(Elem, Elem)],
    delta: usize,
) -> Option<Vec<ColoredEdge>> {
    let r = g.ring();
    let mut palette: Vec<Elem> = edges.iter().map(|&(a, b)| r.add(a, b)).collect();
    palette.sort_unstable();
    palette.dedup();
    (palette.len() <= delta).then(|| {
        edges
            .iter()
            .map(|&(a, b)| {
                let color = palette.binary_search(&r.add(a, b)).unwrap() as u32;
                ColoredEdge { a, b, color }
            })
            .collect()
    })
}

/// Round-robin 1-factorization of a complete component of even order
/// `2m`, in `2m − 1` colours.
fn round_robin(
    g: &NilCleanGraph,
    component: &[Elem],
    edge_count: usize,
) -> Option<Vec<ColoredEdge>> {
    let size = component.len();
    if !size.is_multiple_of(2) || edge_count != size * (size - 1) / 2 || size < 2 {
        return None;
    }
    let rounds = size - 1;
    let fixed = component[rounds];
    let mut out = Vec::with_capacity(edge_count);
    let mut push = |x: Elem, y: Elem, color: usize| {
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        out.push(ColoredEdge {
            a,
            b,
            color: color as u32,
        });
    };
    for round in 0..rounds {
        push(component[round], fixed, round);
        for i in 1..size / 2 {
            let x = component[(round + i) % rounds];
            let y = component[(round + rounds - i) % rounds];
            push(x, y, round);
        }
    }
    debug_assert!(out.iter().all(|e| g.adjacent(e.a, e.b)));
    Some(out)
}

/// Depth-first colour assignment with `delta` colours.
fn backtrack(
    g: &NilCleanGraph,
    edges: &[(Elem, Elem)],
    delta: usize,
    budget: u64,
) -> Option<Vec<ColoredEdge>> {
    let n = g.order();
    let mut used = vec![0u128; n];
    if delta > 128 {
        return None;
    }
    let mut colors = vec![u32::MAX; edges.len()];
    let mut steps = 0u64;

    fn go(
        i: usize,
        edges: &[(Elem, Elem)],
        delta: usize,
        used: &mut [u128],
        colors: &mut [u32],
        steps: &mut u64,
        budget: u64,
    ) -> bool {
        if i == edges.len() {
            return true;
        }
        *steps += 1;
        if *steps > budget {
            return false;
        }
        let (a, b) = edges[i];
        let blocked = used[a as usize] | used[b as usize];
        for c in 0..delta {
            let bit = 1u128 << c;
            if blocked & bit != 0 {
                continue;
            }
            used[a as usize] |= bit;
            used[b as usize] |= bit;
            colors[i] = c as u32;
            if go(i + 1, edges, delta, used, colors, steps, budget) {
                return true;
            }
            used[a as usize] &= !bit;
            used[b as usize] &= !bit;
        }
        false
    }

    go(0, edges, delta, &mut used, &mut colors, &mut steps, budget).then(|| {
        edges
            .iter()
            .zip(colors)
            .map(|(&(a, b), color)| ColoredEdge { a, b, color })
            .collect()
    })
}
