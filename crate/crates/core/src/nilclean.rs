//! Idempotents, nilpotents, nil clean elements and the ring classes built
//! from them.

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::Result;
use crate::ring::{build_quotient_by_nilradical, Elem, Ring};

/// `{e : e·e = e}`.
pub fn idempotents(r: &Ring) -> ElementSet {
    ElementSet::from_indices(r.order(), r.elements().filter(|&e| r.mul(e, e) == e))
}

/// `true` iff some power of `x` vanishes. Iterates powers until zero, a
/// fixed point, or `|R|` steps, which bounds any nilpotency index.
pub fn is_nilpotent(r: &Ring, x: Elem) -> bool {
    let mut power = x;
    for _ in 0..r.order() {
        if power == 0 {
            return true;
        }
        let next = r.mul(power, x);
        if next == power {
            return false;
        }
        power = next;
    }
    power == 0
}

pub fn nilpotents(r: &Ring) -> ElementSet {
    ElementSet::from_indices(r.order(), r.elements().filter(|&x| is_nilpotent(r, x)))
}

/// `(e, n)` with `e` idempotent and `n` nilpotent.
pub type Decomposition = (Elem, Elem);

/// NC(R) together with the first `(e, n)` decomposition of each member,
/// scanning idempotents then nilpotents in carrier order.
#[derive(Clone, Debug)]
pub struct NilCleanSet {
    pub set: ElementSet,
    pub witness: Vec<Option<Decomposition>>,
}

pub fn nil_clean_set(r: &Ring) -> NilCleanSet {
    nil_clean_from(r, &idempotents(r), &nilpotents(r))
}

fn nil_clean_from(r: &Ring, idem: &ElementSet, nil: &ElementSet) -> NilCleanSet {
    let mut set = ElementSet::new(r.order());
    let mut witness = vec![None; r.order()];
    for e in idem {
        for n in nil {
            let x = r.add(e, n);
            if set.insert(x) {
                witness[x as usize] = Some((e, n));
            }
        }
    }
    NilCleanSet { set, witness }
}

/// Every element is `n + e` or `n − e`.
pub fn is_weak_nil_clean(r: &Ring) -> bool {
    weak_nil_clean_from(r, &idempotents(r), &nilpotents(r))
}

fn weak_nil_clean_from(r: &Ring, idem: &ElementSet, nil: &ElementSet) -> bool {
    let mut covered = ElementSet::new(r.order());
    for e in idem {
        for n in nil {
            covered.insert(r.add(n, e));
            covered.insert(r.sub(n, e));
        }
        if covered.is_full() {
            return true;
        }
    }
    covered.is_full()
}

/// `true` iff some positive power of `x` is the identity.
pub fn is_unit(r: &Ring, x: Elem) -> bool {
    let mut power = x;
    for _ in 0..r.order() {
        if power == r.one() {
            return true;
        }
        power = r.mul(power, x);
    }
    false
}

/// Every nonzero element is a unit.
pub fn is_field(r: &Ring) -> bool {
    r.is_commutative() && r.elements().skip(1).all(|x| is_unit(r, x))
}

/// Commutative, reduced and only trivial idempotents, the structural side
/// of the field characterization.
pub fn is_reduced_without_idempotents(r: &Ring) -> bool {
    r.is_commutative() && nilpotents(r).len() == 1 && idempotents(r).len() == 2
}

/// Every idempotent of R/nil(R) is the image of an idempotent of R.
pub fn idempotent_lifting_check(r: &Ring) -> Result<bool> {
    let (q, map) = build_quotient_by_nilradical(r)?;
    let mut lifted = ElementSet::new(q.order());
    for e in &idempotents(r) {
        lifted.insert(map.projection[e as usize]);
    }
    Ok(idempotents(&q).is_subset(&lifted))
}

#[derive(Clone, Debug)]
pub struct NilCleanProfile {
    pub idempotents: ElementSet,
    pub nilpotents: ElementSet,
    pub nilclean: ElementSet,
    pub is_nil_clean_ring: bool,
    pub is_weak_nil_clean_ring: bool,
    pub is_field: bool,
    pub witness: Vec<Option<Decomposition>>,
}

impl NilCleanProfile {
    pub fn compute(r: &Ring) -> Self {
        let idem = idempotents(r);
        let nil = nilpotents(r);
        let NilCleanSet { set, witness } = nil_clean_from(r, &idem, &nil);
        let is_weak = weak_nil_clean_from(r, &idem, &nil);
        NilCleanProfile {
            is_nil_clean_ring: set.is_full(),
            is_weak_nil_clean_ring: is_weak,
            is_field: is_field(r),
            idempotents: idem,
            nilpotents: nil,
            nilclean: set,
            witness,
        }
    }

    pub fn has_trivial_idempotents(&self) -> bool {
        self.idempotents.len() == 2
    }

    pub fn is_reduced(&self) -> bool {
        self.nilpotents.len() == 1
    }

    pub fn document(&self, r: &Ring) -> ProfileDocument {
        let labeled = |s: &ElementSet| LabeledSet {
            indices: s.to_vec(),
            labels: s.iter().map(|x| r.label(x)).collect(),
        };
        ProfileDocument {
            ring: r.name(),
            order: r.order(),
            commutative: r.is_commutative(),
            characteristic: r.characteristic(),
            idempotents: labeled(&self.idempotents),
            nilpotents: labeled(&self.nilpotents),
            nilclean: labeled(&self.nilclean),
            is_nil_clean_ring: self.is_nil_clean_ring,
            is_weak_nil_clean_ring: self.is_weak_nil_clean_ring,
            is_field: self.is_field,
            witnesses: self
                .witness
                .iter()
                .enumerate()
                .filter_map(|(x, w)| {
                    w.map(|(e, n)| WitnessEntry {
                        element: x as Elem,
                        idempotent: e,
                        nilpotent: n,
                    })
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledSet {
    pub indices: Vec<Elem>,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub element: Elem,
    pub idempotent: Elem,
    pub nilpotent: Elem,
}

/// JSON form of a [`NilCleanProfile`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileDocument {
    pub ring: String,
    pub order: usize,
    pub commutative: bool,
    pub characteristic: u32,
    pub idempotents: LabeledSet,
    pub nilpotents: LabeledSet,
    pub nilclean: LabeledSet,
    pub is_nil_clean_ring: bool,
    pub is_weak_nil_clean_ring: bool,
    pub is_field: bool,
    pub witnesses: Vec<WitnessEntry>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::build_ring;

    fn ring(s: &str) -> Ring {
        build_ring(&s.parse().unwrap()).unwrap()
    }

    fn brute_idempotents(r: &Ring) -> Vec<Elem> {
        r.elements().filter(|&e| r.mul(e, e) == e).collect()
    }

    fn brute_nilpotents(r: &Ring) -> Vec<Elem> {
        // x^|R| = 0 for every nilpotent x
        r.elements()
            .filter(|&x| (1..r.order()).fold(x, |acc, _| r.mul(acc, x)) == 0)
            .collect()
    }

    #[test]
    fn idempotent_examples() {
        assert_eq!(idempotents(&ring("Z6")).to_vec(), vec![0, 1, 3, 4]);
        assert_eq!(idempotents(&ring("GF(5,2)")).to_vec(), vec![0, 1]);
        assert_eq!(idempotents(&ring("Z4")).to_vec(), vec![0, 1]);
    }

    #[test]
    fn nilpotent_examples() {
        assert_eq!(nilpotents(&ring("Z8")).to_vec(), vec![0, 2, 4, 6]);
        assert_eq!(nilpotents(&ring("Z6")).to_vec(), vec![0]);
        assert_eq!(nilpotents(&ring("GF(3,3)")).to_vec(), vec![0]);
    }

    #[test]
    fn scans_agree_with_brute_force() {
        for s in ["Z72", "Z4xZ9", "M2(Z2)", "M2(Z4)", "GF(2,4)", "Q(Z8xZ3)"] {
            let r = ring(s);
            assert_eq!(idempotents(&r).to_vec(), brute_idempotents(&r), "{s}");
            assert_eq!(nilpotents(&r).to_vec(), brute_nilpotents(&r), "{s}");
        }
    }

    #[test]
    fn nil_clean_examples() {
        assert_eq!(nil_clean_set(&ring("GF(5,2)")).set.to_vec(), vec![0, 1]);
        assert_eq!(nil_clean_set(&ring("Z4")).set.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(nil_clean_set(&ring("Z6")).set.to_vec(), vec![0, 1, 3, 4]);
        assert_eq!(
            nil_clean_set(&ring("Z9")).set.to_vec(),
            vec![0, 1, 3, 4, 6, 7]
        );
    }

    #[test]
    fn witnesses_recompute() {
        for s in ["Z36", "Z8xZ3", "M2(Z2)", "GF(3,2)xZ4"] {
            let r = ring(s);
            let nc = nil_clean_set(&r);
            for x in &nc.set {
                let (e, n) = nc.witness[x as usize].unwrap();
                assert_eq!(r.mul(e, e), e);
                assert!(is_nilpotent(&r, n));
                assert_eq!(r.add(e, n), x);
            }
        }
        // first idempotent in carrier order wins: 3 = 1 + 2 in Z4
        assert_eq!(nil_clean_set(&ring("Z4")).witness[3], Some((1, 2)));
    }

    #[test]
    fn weak_nil_clean_examples() {
        assert!(is_weak_nil_clean(&ring("Z6")));
        assert!(is_weak_nil_clean(&ring("Z9")));
        assert!(is_weak_nil_clean(&ring("Z4")));
        assert!(!is_weak_nil_clean(&ring("Z5")));
        assert!(!is_weak_nil_clean(&ring("Z10")));
    }

    #[test]
    fn field_examples() {
        assert!(is_field(&ring("GF(5,2)")));
        assert!(!is_field(&ring("Z6")));
        assert!(is_field(&ring("Z7")));
        assert!(!is_field(&ring("M2(Z2)")));
        assert!(!is_field(&ring("Z2xZ2")));
    }

    #[test]
    fn lifting_examples() {
        assert_eq!(idempotent_lifting_check(&ring("Z12")), Ok(true));
        assert_eq!(idempotent_lifting_check(&ring("GF(3,2)")), Ok(true));
        assert_eq!(idempotent_lifting_check(&ring("Z4")), Ok(true));
        assert!(idempotent_lifting_check(&ring("M2(Z2)")).is_err());
    }

    #[test]
    fn profile_json_lists_labels() {
        let r = ring("GF(5,2)");
        let doc = NilCleanProfile::compute(&r).document(&r);
        assert_eq!(doc.nilclean.labels, vec!["0", "1"]);
        assert_eq!(doc.witnesses.len(), 2);
        let text = serde_json::to_string(&doc).unwrap();
        let back: ProfileDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
    }
}
