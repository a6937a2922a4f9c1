use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::NilCleanGraph;
use crate::ring::Elem;

/// A graph length that may be infinite: girth of an acyclic graph, diameter
/// of a disconnected one. Serializes as an integer or the string `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Finite(u32),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<u32> {
        match self {
            Length::Finite(v) => Some(v),
            Length::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Length::Infinite
    }

    /// Machine form: digits or `inf`.
    pub fn to_plain(self) -> String {
        match self {
            Length::Finite(v) => v.to_string(),
            Length::Infinite => "inf".to_string(),
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(v) => write!(f, "{v}"),
            Length::Infinite => f.write_str("∞"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseLengthError(pub String);

impl fmt::Display for ParseLengthError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid length {:?}", self.0)
    }
}

impl std::error::Error for ParseLengthError {}

impl FromStr for Length {
    type Err = ParseLengthError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "∞" => Ok(Length::Infinite),
            t => t
                .parse()
                .map(Length::Finite)
                .map_err(|_| ParseLengthError(s.to_string())),
        }
    }
}

impl Serialize for Length {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Length::Finite(v) => s.serialize_u32(*v),
            Length::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Length {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct LengthVisitor;

        impl Visitor<'_> for LengthVisitor {
            type Value = Length;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Length, E> {
                u32::try_from(v).map(Length::Finite).map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Length, E> {
                u32::try_from(v).map(Length::Finite).map_err(E::custom)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Length, E> {
                v.parse().map_err(E::custom)
            }
        }

        d.deserialize_any(LengthVisitor)
    }
}

impl NilCleanGraph<'_> {
    /// Shortest cycle through `root` reachable within `limit` edges, as
    /// `(length, u, v)` for the closing edge `u–v` of the BFS tree.
    fn shortest_cycle_from(&self, root: Elem, limit: u32) -> Option<(u32, Elem, Elem, Vec<Elem>)> {
        let n = self.order();
        let unseen = u32::MAX;
        let mut dist = vec![unseen; n];
        let mut parent = vec![Elem::MAX; n];
        let mut queue = VecDeque::new();
        dist[root as usize] = 0;
        queue.push_back(root);
        let mut best: Option<(u32, Elem, Elem)> = None;
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            if best.is_some_and(|(len, _, _)| 2 * du + 1 >= len) || 2 * du + 1 >= limit {
                break;
            }
            for v in self.neighbors(u) {
                let dv = dist[v as usize];
                if dv == unseen {
                    dist[v as usize] = du + 1;
                    parent[v as usize] = u;
                    queue.push_back(v);
                } else if parent[u as usize] != v && dv >= du {
                    let len = du + dv + 1;
                    if best.is_none_or(|(b, _, _)| len < b) {
                        best = Some((len, u, v));
                    }
                }
            }
        }
        best.map(|(len, u, v)| (len, u, v, parent))
    }

    /// Length of the shortest cycle; BFS from every vertex.
    pub fn girth(&self) -> Length {
        self.shortest_cycle()
            .map(|c| Length::Finite(c.len() as u32))
            .unwrap_or(Length::Infinite)
    }

    /// Vertices of one shortest cycle in traversal order.
    pub fn shortest_cycle(&self) -> Option<Vec<Elem>> {
        let mut best: Option<(u32, Elem, Elem, Elem, Vec<Elem>)> = None;
        for root in 0..self.order() as Elem {
            let limit = best.as_ref().map_or(u32::MAX, |b| b.0);
            if let Some((len, u, v, parent)) = self.shortest_cycle_from(root, limit) {
                if len < limit {
                    best = Some((len, root, u, v, parent));
                    if len == 3 {
                        break;
                    }
                }
            }
        }
        best.map(|(_, root, u, v, parent)| {
            let climb = |mut x: Elem| {
                let mut path = vec![x];
                while x != root {
                    x = parent[x as usize];
                    path.push(x);
                }
                path
            };
            let mut cycle = climb(u);
            cycle.reverse();
            let back = climb(v);
            cycle.extend(&back[..back.len() - 1]);
            cycle
        })
    }

    /// Largest eccentricity from one source, `None` if some vertex is unreachable.
    pub fn eccentricity(&self, source: Elem) -> Option<u32> {
        let n = self.order();
        let layers = self.bfs_layers(source);
        let reached: usize = layers.iter().map(|l| l.len()).sum();
        (reached == n).then(|| layers.len() as u32 - 1)
    }

    /// All-pairs BFS maximum over word-parallel frontiers.
    pub fn diameter(&self) -> Length {
        if self.order() == 1 {
            return Length::Finite(0);
        }
        let Some(first) = self.eccentricity(0) else {
            return Length::Infinite;
        };
        let rest = (1..self.order() as Elem)
            .into_par_iter()
            .map(|s| self.eccentricity(s).expect("connected graph"))
            .max()
            .unwrap_or(0);
        Length::Finite(first.max(rest))
    }
}
