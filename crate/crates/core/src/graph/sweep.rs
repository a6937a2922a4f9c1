//! Exact domination by dynamic programming along a vertex ordering.
//!
//! Vertices are introduced one at a time. A vertex stays on the frontier
//! until all of its neighbours have been introduced, and each frontier vertex
//! is either chosen, dominated, or still waiting for a chosen neighbour. The
//! table is keyed by those statuses, so the cost is about `3^width` per step;
//! sparse graphs such as the Z_2p and Z_3p graphs have frontier width 4 to 6,
//! and the table stays far below `3^width` on most others.
//!
//! Ties between minimum sets are broken towards the lexicographically least
//! set, which for sets of equal size is the one holding the smallest element
//! of the symmetric difference.

use std::collections::{HashMap, VecDeque};

use super::NilCleanGraph;
use crate::ring::Elem;

/// Widest frontier the sweep accepts.
pub const MAX_WIDTH: usize = 30;

/// Table entries allowed at any step before the sweep gives up.
pub const MAX_STATES: usize = 1 << 18;

const WORDS: usize = 8;
const UNDOMINATED: u64 = 0;
const DOMINATED: u64 = 1;
const CHOSEN: u64 = 2;

/// Chosen vertices as a bitset over component ranks, rank 0 the smallest.
#[derive(Clone, Copy)]
struct Partial {
    size: u32,
    words: [u64; WORDS],
}

impl Partial {
    /// Smaller size wins, then the set holding the least differing rank.
    fn better_than(&self, other: &Partial) -> bool {
        if self.size != other.size {
            return self.size < other.size;
        }
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                return a & (diff & diff.wrapping_neg()) != 0;
            }
        }
        false
    }
}

/// Local adjacency of one component, vertices renamed by rank.
struct Local {
    adj: Vec<Vec<usize>>,
}

impl Local {
    fn new(g: &NilCleanGraph, component: &[Elem]) -> Self {
        let rank: HashMap<Elem, usize> =
            component.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = component
            .iter()
            .map(|&v| g.neighbors(v).iter().map(|u| rank[&u]).collect())
            .collect();
        Local { adj }
    }

    fn bfs_order(&self, start: usize) -> Vec<usize> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            let mut next: Vec<usize> = self.adj[u].iter().copied().filter(|&v| !seen[v]).collect();
            next.sort_by_key(|&v| (self.adj[v].len(), v));
            for v in next {
                seen[v] = true;
                queue.push_back(v);
            }
        }
        order
    }

    /// Step at which each vertex has no neighbour left to introduce.
    fn retirement(&self, order: &[usize]) -> Vec<usize> {
        let mut position = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        (0..order.len())
            .map(|v| {
                self.adj[v]
                    .iter()
                    .map(|&u| position[u])
                    .fold(position[v], usize::max)
            })
            .collect()
    }

    /// Largest frontier, counting the vertex being introduced.
    fn width(&self, order: &[usize]) -> usize {
        let last = self.retirement(order);
        // v waits on the frontier during the steps after it enters, up to last[v]
        let mut delta = vec![0i64; order.len() + 1];
        for (i, &v) in order.iter().enumerate() {
            if last[v] > i {
                delta[i + 1] += 1;
                delta[last[v] + 1] -= 1;
            }
        }
        let (mut open, mut widest) = (0i64, 0i64);
        for d in delta.iter().take(order.len()) {
            open += d;
            widest = widest.max(open + 1);
        }
        widest as usize
    }

    /// Narrowest breadth-first order over every start vertex.
    fn best_order(&self) -> (Vec<usize>, usize) {
        (0..self.adj.len())
            .map(|s| {
                let order = self.bfs_order(s);
                let w = self.width(&order);
                (order, w)
            })
            .min_by_key(|(_, w)| *w)
            .unwrap()
    }
}

/// Lex-least minimum dominating set of one component, or `None` when the
/// component is too wide for the sweep.
pub fn dominate_component(g: &NilCleanGraph, component: &[Elem]) -> Option<Vec<Elem>> {
    let n = component.len();
    if n > WORDS * 64 {
        return None;
    }
    let local = Local::new(g, component);
    let (order, width) = local.best_order();
    if width > MAX_WIDTH {
        return None;
    }
    let last = local.retirement(&order);

    // statuses of frontier vertices, two bits each, in frontier order
    let mut frontier: Vec<usize> = Vec::new();
    let mut table: HashMap<u64, Partial> = HashMap::from([(
        0,
        Partial {
            size: 0,
            words: [0; WORDS],
        },
    )]);

    for (step, &v) in order.iter().enumerate() {
        let slots = frontier.len();
        let mut linked = 0u64;
        let mut chosen_mask = 0u64;
        for (i, u) in frontier.iter().enumerate() {
            if local.adj[v].contains(u) {
                linked |= 1 << (2 * i);
                chosen_mask |= 2 << (2 * i);
            }
        }
        let mut next_frontier = frontier.clone();
        next_frontier.push(v);
        let keep: Vec<bool> = next_frontier.iter().map(|&u| last[u] > step).collect();
        let compact = |key: u64| -> Option<u64> {
            let mut out = 0u64;
            let mut j = 0;
            for (i, &k) in keep.iter().enumerate() {
                let s = key >> (2 * i) & 3;
                if k {
                    out |= s << (2 * j);
                    j += 1;
                } else if s == UNDOMINATED {
                    return None;
                }
            }
            Some(out)
        };

        let mut next: HashMap<u64, Partial> = HashMap::with_capacity(table.len() * 2);
        let mut offer = |key: u64, partial: Partial| {
            let Some(key) = compact(key) else { return };
            match next.get(&key) {
                Some(existing) if !partial.better_than(existing) => {}
                _ => {
                    next.insert(key, partial);
                }
            }
        };
        for (&key, partial) in &table {
            // v chosen: its undominated frontier neighbours become dominated
            let undominated_linked = linked & !(key | key >> 1);
            let mut with_v = *partial;
            with_v.size += 1;
            with_v.words[v / 64] |= 1 << (v % 64);
            offer(key | undominated_linked | CHOSEN << (2 * slots), with_v);

            // v left out
            let covered = key & chosen_mask != 0;
            let status = if covered { DOMINATED } else { UNDOMINATED };
            offer(key | status << (2 * slots), *partial);
        }
        if next.len() > MAX_STATES {
            return None;
        }
        table = next;
        frontier = next_frontier
            .into_iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(u, _)| u)
            .collect();
    }

    let best = table.remove(&0).expect("choosing every vertex dominates");
    Some(
        (0..n)
            .filter(|&i| best.words[i / 64] >> (i % 64) & 1 == 1)
            .map(|i| component[i])
            .collect(),
    )
}
