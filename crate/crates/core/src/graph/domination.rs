//! Exact minimum dominating sets.
//!
//! Components are solved independently. Narrow components go to the
//! frontier sweep; otherwise the domination number is found by iterative
//! deepening from a cover-counting lower bound, then the lexicographically
//! least minimum set is fixed one vertex at a time by feasibility queries. For equal-size sets lexicographic order is
//! decided by the smallest element of the symmetric difference, so the union
//! of per-component lex-least sets is lex-least overall.

use super::{sweep, NilCleanGraph};
use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::nilclean::NilCleanProfile;
use crate::ring::Elem;
use crate::verdict::{Verdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DominatingSearch {
    /// Largest graph order the exact search accepts.
    pub cap: usize,
    /// Search nodes allowed before giving up.
    pub node_limit: u64,
}

impl Default for DominatingSearch {
    fn default() -> Self {
        DominatingSearch {
            cap: 512,
            node_limit: 1_000_000,
        }
    }
}

fn closed_neighborhoods(g: &NilCleanGraph) -> Vec<ElementSet> {
    g.rows()
        .iter()
        .enumerate()
        .map(|(v, row)| {
            let mut closed = row.clone();
            closed.insert(v as Elem);
            closed
        })
        .collect()
}

/// First vertex neither in `set` nor adjacent to it.
pub fn undominated_vertex(g: &NilCleanGraph, set: &ElementSet) -> Option<Elem> {
    let mut covered = set.clone();
    for v in set {
        covered.union_with(g.neighbors(v));
    }
    ElementSet::full(g.order()).first_not_in(&covered)
}

pub fn is_dominating(g: &NilCleanGraph, set: &ElementSet) -> bool {
    undominated_vertex(g, set).is_none()
}

/// Repeatedly takes the vertex covering the most undominated vertices,
/// lowest index on ties.
pub fn greedy_dominating_set(g: &NilCleanGraph) -> ElementSet {
    let closed = closed_neighborhoods(g);
    let full = ElementSet::full(g.order());
    let mut dominated = ElementSet::new(g.order());
    let mut chosen = ElementSet::new(g.order());
    greedy_into(&closed, &full, &mut dominated, &mut chosen);
    chosen
}

fn greedy_into(
    closed: &[ElementSet],
    allowed: &ElementSet,
    dominated: &mut ElementSet,
    chosen: &mut ElementSet,
) {
    while !dominated.is_full() {
        let mut undominated = ElementSet::full(dominated.universe());
        undominated.difference_with(dominated);
        let best = allowed
            .iter()
            .max_by_key(|&w| {
                (
                    closed[w as usize].intersection_len(&undominated),
                    std::cmp::Reverse(w),
                )
            })
            .expect("a component dominates itself");
        chosen.insert(best);
        dominated.union_with(&closed[best as usize]);
    }
}

pub fn min_dominating_set(g: &NilCleanGraph, cap: usize) -> Result<ElementSet> {
    min_dominating_set_with(
        g,
        &DominatingSearch {
            cap,
            ..DominatingSearch::default()
        },
    )
}

/// Minimum dominating set, lexicographically least among minimum ones.
pub fn min_dominating_set_with(g: &NilCleanGraph, search: &DominatingSearch) -> Result<ElementSet> {
    let n = g.order();
    if n > search.cap {
        return Err(Error::SearchTooLarge {
            order: n,
            cap: search.cap,
        });
    }
    let mut solver = Solver {
        closed: closed_neighborhoods(g),
        full: ElementSet::full(n),
        nodes: 0,
        limit: search.node_limit,
    };
    let mut result = ElementSet::new(n);
    for component in g.connected_components() {
        let chosen = match sweep::dominate_component(g, &component) {
            Some(chosen) => chosen,
            None => solver.solve(&component)?,
        };
        for v in chosen {
            result.insert(v);
        }
    }
    debug_assert!(is_dominating(g, &result));
    Ok(result)
}

struct Solver {
    closed: Vec<ElementSet>,
    full: ElementSet,
    nodes: u64,
    limit: u64,
}

impl Solver {
    fn solve(&mut self, component: &[Elem]) -> Result<Vec<Elem>> {
        let members = ElementSet::from_indices(self.full.universe(), component.iter().copied());
        let mut outside = self.full.clone();
        outside.difference_with(&members);
        let gamma = self.domination_number(&outside, &members)?;
        self.lex_least(&outside, &members, gamma)
    }

    fn domination_number(&mut self, outside: &ElementSet, members: &ElementSet) -> Result<usize> {
        let mut dominated = outside.clone();
        let mut greedy = ElementSet::new(members.universe());
        greedy_into(&self.closed, members, &mut dominated, &mut greedy);
        let upper = greedy.len();
        for k in 1..upper {
            if self.feasible(outside, members, k)? {
                return Ok(k);
            }
        }
        Ok(upper)
    }

    fn lex_least(
        &mut self,
        outside: &ElementSet,
        members: &ElementSet,
        gamma: usize,
    ) -> Result<Vec<Elem>> {
        let mut chosen = Vec::with_capacity(gamma);
        let mut dominated = outside.clone();
        let mut allowed = members.clone();
        for w in members {
            if chosen.len() == gamma {
                break;
            }
            allowed.remove(w);
            let mut with_w = dominated.clone();
            with_w.union_with(&self.closed[w as usize]);
            if self.feasible(&with_w, &allowed, gamma - chosen.len() - 1)? {
                chosen.push(w);
                dominated = with_w;
            }
        }
        debug_assert!(dominated.is_full());
        Ok(chosen)
    }

    /// Can `budget` more vertices from `allowed` dominate everything?
    fn feasible(
        &mut self,
        dominated: &ElementSet,
        allowed: &ElementSet,
        budget: usize,
    ) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::SearchBudgetExhausted(self.limit));
        }
        let mut undominated = self.full.clone();
        undominated.difference_with(dominated);
        let missing = undominated.len();
        if missing == 0 {
            return Ok(true);
        }
        if budget == 0 {
            return Ok(false);
        }

        let mut cover: Vec<(usize, Elem)> = allowed
            .iter()
            .map(|w| (self.closed[w as usize].intersection_len(&undominated), w))
            .filter(|&(c, _)| c > 0)
            .collect();
        cover.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        if cover.iter().take(budget).map(|c| c.0).sum::<usize>() < missing {
            return Ok(false);
        }

        // most constrained undominated vertex
        let mut pick: Option<(usize, Elem)> = None;
        for u in &undominated {
            let options = self.closed[u as usize].intersection_len(allowed);
            if options == 0 {
                return Ok(false);
            }
            if pick.is_none_or(|(best, _)| options < best) {
                pick = Some((options, u));
            }
        }
        let (_, u) = pick.expect("undominated set is nonempty");

        let candidates: Vec<Elem> = cover
            .iter()
            .map(|&(_, w)| w)
            .filter(|&w| self.closed[u as usize].contains(w))
            .collect();
        let mut remaining = allowed.clone();
        for w in candidates {
            // later siblings exclude w: solutions containing it were covered here
            remaining.remove(w);
            let mut next = dominated.clone();
            next.union_with(&self.closed[w as usize]);
            if self.feasible(&next, &remaining, budget - 1)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// `{1, 1+1}` dominates the graph of a weak nil clean ring.
pub fn dominating_pair_check(g: &NilCleanGraph, profile: &NilCleanProfile) -> Verdict {
    if !profile.is_weak_nil_clean_ring {
        return Verdict::skipped("ring is not weak nil clean");
    }
    let r = g.ring();
    let one = r.one();
    let pair = ElementSet::from_indices(g.order(), [one, r.add(one, one)]);
    match undominated_vertex(g, &pair) {
        None => Verdict::Pass,
        Some(x) => Verdict::mismatch(Witness::element(r, x), "not dominated by {1, 1+1}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::ring::{build_ring, Ring};

    fn ring(s: &str) -> Ring {
        build_ring(&s.parse().unwrap()).unwrap()
    }

    /// Every subset in order of size, then lexicographically.
    fn brute_force_minimum(g: &NilCleanGraph) -> Vec<Elem> {
        let n = g.order();
        fn combos(n: usize, k: usize, start: usize, acc: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
            if acc.len() == k {
                out.push(acc.clone());
                return;
            }
            for v in start..n {
                acc.push(v as Elem);
                combos(n, k, v + 1, acc, out);
                acc.pop();
            }
        }
        for k in 1..=n {
            let mut all = Vec::new();
            combos(n, k, 0, &mut Vec::new(), &mut all);
            if let Some(s) = all
                .into_iter()
                .find(|s| is_dominating(g, &ElementSet::from_indices(n, s.iter().copied())))
            {
                return s;
            }
        }
        unreachable!()
    }

    #[test]
    fn examples() {
        let r = ring("Z4");
        assert_eq!(
            min_dominating_set(&build_graph(&r), 512).unwrap().to_vec(),
            vec![0]
        );
        let r = ring("Z6");
        let g = build_graph(&r);
        let s = min_dominating_set(&g, 512).unwrap();
        assert_eq!(s.len(), 2);
        assert!(is_dominating(&g, &ElementSet::from_indices(6, [1, 2])));
        let r = ring("Z5");
        assert_eq!(min_dominating_set(&build_graph(&r), 512).unwrap().len(), 2);
    }

    #[test]
    fn lex_least_matches_brute_force() {
        for s in [
            "Z5", "Z6", "Z9", "Z10", "Z11", "Z15", "GF(3,2)", "GF(2,3)", "Z2xZ2xZ3", "Z13", "Z14",
            "M2(Z2)",
        ] {
            let r = ring(s);
            let g = build_graph(&r);
            let oracle = brute_force_minimum(&g);
            assert_eq!(min_dominating_set(&g, 512).unwrap().to_vec(), oracle, "{s}");
        }
    }

    #[test]
    fn sweep_and_branch_and_bound_agree() {
        for s in [
            "Z6", "Z9", "Z10", "Z15", "Z21", "Z22", "GF(2,3)", "GF(3,2)", "Z2xZ2xZ3", "M2(Z2)",
            "Z3xZ3",
        ] {
            let r = ring(s);
            let g = build_graph(&r);
            let n = g.order();
            let mut solver = Solver {
                closed: closed_neighborhoods(&g),
                full: ElementSet::full(n),
                nodes: 0,
                limit: u64::MAX,
            };
            for component in g.connected_components() {
                let exact = solver.solve(&component).unwrap();
                if let Some(swept) = sweep::dominate_component(&g, &component) {
                    assert_eq!(swept, exact, "{s}");
                }
            }
        }
    }

    #[test]
    fn long_paths_and_cycles_are_fast() {
        let r = ring("Z199");
        let g = build_graph(&r);
        let s = min_dominating_set(&g, 512).unwrap();
        assert_eq!(s.len(), 67);
        assert!(is_dominating(&g, &s));
        let r = ring("GF(7,3)");
        let g = build_graph(&r);
        // one 7-path and 24 cycles of length 14
        assert_eq!(min_dominating_set(&g, 512).unwrap().len(), 3 + 24 * 5);
    }

    #[test]
    fn cap_is_enforced() {
        let r = ring("Z600");
        assert_eq!(
            min_dominating_set(&build_graph(&r), 512),
            Err(Error::SearchTooLarge {
                order: 600,
                cap: 512
            })
        );
    }

    #[test]
    fn greedy_dominates() {
        for s in ["Z30", "GF(5,2)", "Z4xZ9"] {
            let r = ring(s);
            let g = build_graph(&r);
            assert!(is_dominating(&g, &greedy_dominating_set(&g)));
        }
    }

    #[test]
    fn pair_check_examples() {
        for s in ["Z9", "Z12", "Z4", "Z2"] {
            let r = ring(s);
            let p = NilCleanProfile::compute(&r);
            assert_eq!(
                dominating_pair_check(&build_graph(&r), &p),
                Verdict::Pass,
                "{s}"
            );
        }
        let r = ring("Z5");
        let p = NilCleanProfile::compute(&r);
        assert!(dominating_pair_check(&build_graph(&r), &p).is_skipped());
    }
}
