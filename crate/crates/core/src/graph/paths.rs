//! Explicit walks used to prove connectivity constructively.

use super::NilCleanGraph;
use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

/// `0, 1, n−1, 2, n−2, 3, …` through all of Z_n. Consecutive sums
/// alternate between 1 and 0.
pub fn hamiltonian_path_zn(n: u32) -> Vec<Elem> {
    assert!(n >= 2, "Z_n needs n >= 2");
    let mut path = Vec::with_capacity(n as usize);
    path.push(0);
    let (mut low, mut high) = (1, n - 1);
    while low <= high {
        path.push(low);
        if low != high {
            path.push(high);
        }
        low += 1;
        high -= 1;
    }
    path
}

/// Consecutive vertices are adjacent.
pub fn is_walk(g: &NilCleanGraph, vertices: &[Elem]) -> bool {
    !vertices.is_empty() && vertices.windows(2).all(|w| g.adjacent(w[0], w[1]))
}

/// A walk with no repeated vertex.
pub fn is_path(g: &NilCleanGraph, vertices: &[Elem]) -> bool {
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == vertices.len() && is_walk(g, vertices)
}

/// Walk from a matrix `A` to the zero matrix in M_d(Z_m).
///
/// `A` steps to `A1`, the negated lower triangle with diagonal, so `A + A1`
/// is strictly upper triangular; `A1` steps to `A2 = diag(A)`, so
/// `A1 + A2` is strictly lower triangular. From `A2` every diagonal entry
/// walks back along the Z_m Hamiltonian path to 0 in lockstep, entries that
/// reach 0 staying there, so each consecutive sum is a diagonal 0/1 matrix.
/// Consecutive repeats are collapsed, which keeps the result a walk in the
/// graph.
pub fn matrix_path_to_zero(r: &Ring, a: Elem) -> Result<Vec<Elem>> {
    let (m, dim) = r
        .matrix_shape()
        .ok_or_else(|| Error::NotMatrixRing(r.name()))?;
    let entries = r.matrix_entries(a).expect("matrix ring");
    let at = |i: usize, j: usize| entries[i * dim + j];

    let mut lower = vec![0u32; dim * dim];
    let mut diagonal = vec![0u32; dim * dim];
    for i in 0..dim {
        for j in 0..=i {
            lower[i * dim + j] = (m - at(i, j)) % m;
        }
        diagonal[i * dim + i] = at(i, i);
    }

    let hamiltonian = if m >= 2 {
        hamiltonian_path_zn(m)
    } else {
        vec![0]
    };
    let position = |x: u32| {
        hamiltonian
            .iter()
            .position(|&v| v == x)
            .expect("path covers Z_m")
    };
    let steps: Vec<usize> = (0..dim).map(|i| position(at(i, i))).collect();
    let longest = steps.iter().copied().max().unwrap_or(0);

    let mut walk = vec![a];
    let mut push = |x: Elem| {
        if walk.last() != Some(&x) {
            walk.push(x);
        }
    };
    push(r.matrix_from_entries(&lower).unwrap());
    push(r.matrix_from_entries(&diagonal).unwrap());
    for t in 1..=longest {
        let mut b = vec![0u32; dim * dim];
        for i in 0..dim {
            b[i * dim + i] = if t <= steps[i] {
                hamiltonian[steps[i] - t]
            } else {
                0
            };
        }
        push(r.matrix_from_entries(&b).unwrap());
    }
    push(r.zero());
    Ok(walk)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::ring::build_ring;

    fn ring(s: &str) -> Ring {
        build_ring(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn zn_paths() {
        assert_eq!(hamiltonian_path_zn(6), vec![0, 1, 5, 2, 4, 3]);
        assert_eq!(hamiltonian_path_zn(5), vec![0, 1, 4, 2, 3]);
        assert_eq!(hamiltonian_path_zn(2), vec![0, 1]);
        let p = hamiltonian_path_zn(6);
        let sums: Vec<u32> = p.windows(2).map(|w| (w[0] + w[1]) % 6).collect();
        assert_eq!(sums, vec![1, 0, 1, 0, 1]);
        let r = ring("Z6");
        assert!(is_path(&build_graph(&r), &p));
    }

    #[test]
    fn matrix_examples() {
        let r = ring("M2(Z2)");
        let g = build_graph(&r);
        let a = r.matrix_from_entries(&[1, 1, 0, 1]).unwrap();
        let identity = r.one();
        assert_eq!(matrix_path_to_zero(&r, a).unwrap(), vec![a, identity, 0]);
        assert_eq!(
            r.add(a, identity),
            r.matrix_from_entries(&[0, 1, 0, 0]).unwrap()
        );
        assert_eq!(matrix_path_to_zero(&r, 0).unwrap(), vec![0]);
        let n = r.matrix_from_entries(&[0, 1, 0, 0]).unwrap();
        let walk = matrix_path_to_zero(&r, n).unwrap();
        assert!(walk.len() <= 4);
        assert_eq!(walk.last(), Some(&0));
        assert!(is_walk(&g, &walk));
    }

    #[test]
    fn rejects_non_matrix_rings() {
        assert!(matrix_path_to_zero(&ring("Z4"), 1).is_err());
    }
}
