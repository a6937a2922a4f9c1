//! Shared fixtures for the benchmarks.

use nilgraph::{build_ring, Ring};

/// Rings spanning the carrier kinds, roughly by order.
pub const FIXTURES: &[&str] = &["Z200", "GF(7,3)", "M2(Z3)", "Z4xGF(3,2)", "GF(17,2)"];

pub fn ring(spec: &str) -> Ring {
    build_ring(&spec.parse().expect("fixture spec")).expect("fixture ring")
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_build() {
        for spec in super::FIXTURES {
            assert!(super::ring(spec).order() > 0);
        }
    }
}
