use serde::{Deserialize, Serialize};

use super::{Elem, Ring, RingSpec};
use crate::error::Result;
use crate::nilclean::nilpotents;

/// Projection of a ring onto its quotient by the nilradical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetMap {
    /// Base element → coset index.
    pub projection: Vec<Elem>,
    /// Coset index → smallest base representative.
    pub section: Vec<Elem>,
}

impl CosetMap {
    /// Exhaustive check that the projection preserves `+`, `×` and `1`, is
    /// onto, and that every section lands back in its own coset.
    pub fn is_homomorphism(&self, base: &Ring, quotient: &Ring) -> bool {
        let onto = self
            .section
            .iter()
            .enumerate()
            .all(|(c, &rep)| self.projection[rep as usize] == c as Elem);
        let unit = self.projection[base.one() as usize] == quotient.one();
        onto && unit
            && base.elements().all(|a| {
                base.elements().all(|b| {
                    let (pa, pb) = (self.projection[a as usize], self.projection[b as usize]);
                    self.projection[base.add(a, b) as usize] == quotient.add(pa, pb)
                        && self.projection[base.mul(a, b) as usize] == quotient.mul(pa, pb)
                })
            })
    }
}

/// Builds R/nil(R) for a commutative ring, where the nilpotents form an ideal.
pub fn build_quotient_by_nilradical(r: &Ring) -> Result<(Ring, CosetMap)> {
    r.require_commutative()?;
    let nil = nilpotents(r).to_vec();
    let unassigned = Elem::MAX;
    let mut projection = vec![unassigned; r.order()];
    let mut section = Vec::with_capacity(r.order() / nil.len());
    for x in r.elements() {
        if projection[x as usize] != unassigned {
            continue;
        }
        let coset = section.len() as Elem;
        section.push(x);
        for &n in &nil {
            projection[r.add(x, n) as usize] = coset;
        }
    }
    let map = CosetMap {
        projection,
        section,
    };
    let spec = RingSpec::quotient(r.spec().clone());
    let q = Ring::quotient_ring(spec, r.clone(), map.clone());
    Ok((q, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::nilclean::nilpotents;
    use crate::ring::build_ring;

    fn ring(s: &str) -> Ring {
        build_ring(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn z12_quotient() {
        let base = ring("Z12");
        let (q, map) = build_quotient_by_nilradical(&base).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(map.section, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(map.projection[6], 0);
        assert_eq!(map.projection[10], 4);
        assert!(map.is_homomorphism(&base, &q));
        assert_eq!(nilpotents(&q).len(), 1);
        assert_eq!(q.name(), "Q(Z12)");
        assert_eq!(q.label(4), "[4]");
        assert!(q.check_axioms().is_ok());
    }

    #[test]
    fn reduced_rings_are_fixed() {
        for s in ["Z6", "GF(5,2)"] {
            let base = ring(s);
            let (q, map) = build_quotient_by_nilradical(&base).unwrap();
            assert_eq!(q.order(), base.order());
            assert_eq!(map.section, base.elements().collect::<Vec<_>>());
        }
    }

    #[test]
    fn noncommutative_rejected() {
        assert!(matches!(
            build_quotient_by_nilradical(&ring("M2(Z2)")),
            Err(Error::Noncommutative(_))
        ));
        assert!(build_ring(&"Q(M2(Z2))".parse().unwrap()).is_err());
    }

    #[test]
    fn quotient_spec_builds_directly() {
        let q = ring("Q(Z4xZ9)");
        assert_eq!(q.order(), 6);
        assert_eq!(q.name(), "Q(Z4xZ9)");
    }
}
