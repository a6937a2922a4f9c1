//! Finite rings behind one carrier-indexed interface.
//!
//! Every ring lives on `0..order` with `0` the additive identity. Carriers
//! are ordered canonically: Z_n by residue, GF(p^k) by base-p coefficient
//! digits (constant term least significant), products lexicographically by
//! factor (first factor most significant), matrices row-major with the
//! `(0,0)` entry most significant, and quotients by smallest representative.

mod poly;
mod quotient;
mod spec;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use poly::{default_irreducible, is_irreducible, is_prime};
pub use quotient::{build_quotient_by_nilradical, CosetMap};
pub use spec::RingSpec;

use crate::error::{Error, Result};

/// Carrier index of a ring element.
pub type Elem = u32;

/// Hard ceiling on carrier size, independent of any harness cap.
pub const MAX_CARRIER: u64 = 1 << 22;

/// Operation tables are memoized up to this order.
pub const TABLE_ORDER: usize = 1024;

#[derive(Clone)]
pub struct Ring {
    spec: RingSpec,
    order: usize,
    one: Elem,
    commutative: bool,
    kind: Kind,
    tables: Option<Tables>,
}

#[derive(Clone)]
enum Kind {
    Zn {
        n: u32,
    },
    Gf {
        p: u32,
        k: usize,
        modulus: Vec<u32>,
    },
    Product {
        factors: Vec<Ring>,
        strides: Vec<u32>,
    },
    Matrix {
        m: u32,
        dim: usize,
    },
    Quotient {
        base: Box<Ring>,
        map: CosetMap,
    },
}

#[derive(Clone)]
struct Tables {
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
}

/// A ring law that failed, with the elements that break it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub law: &'static str,
    pub elements: Vec<Elem>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.law, self.elements)
    }
}

/// Builds the ring described by `spec`.
pub fn build_ring(spec: &RingSpec) -> Result<Ring> {
    spec.validate()?;
    let order = spec.order_bound().unwrap_or(u64::MAX);
    if order > MAX_CARRIER {
        return Err(Error::OrderTooLarge {
            order,
            limit: MAX_CARRIER,
        });
    }
    let ring = match spec {
        RingSpec::Zn(n) => Ring::assemble(spec.clone(), *n as usize, 1, true, Kind::Zn { n: *n }),
        RingSpec::Gf { p, k, poly } => {
            let modulus = poly.clone().unwrap_or_else(|| default_irreducible(*p, *k));
            let order = (*p as usize).pow(*k);
            let kind = Kind::Gf {
                p: *p,
                k: *k as usize,
                modulus,
            };
            Ring::assemble(spec.clone(), order, 1, true, kind)
        }
        RingSpec::Product(specs) => {
            let factors = specs.iter().map(build_ring).collect::<Result<Vec<_>>>()?;
            let mut strides = vec![1u32; factors.len()];
            for i in (0..factors.len() - 1).rev() {
                strides[i] = strides[i + 1] * factors[i + 1].order as u32;
            }
            let order = factors.iter().map(|r| r.order).product();
            let one = factors.iter().zip(&strides).map(|(r, s)| r.one * s).sum();
            let commutative = factors.iter().all(|r| r.commutative);
            Ring::assemble(
                spec.clone(),
                order,
                one,
                commutative,
                Kind::Product { factors, strides },
            )
        }
        RingSpec::Matrix { base, dim } => {
            let RingSpec::Zn(m) = **base else {
                return Err(Error::MatrixBaseNotZn(base.to_string()));
            };
            let dim = *dim as usize;
            let order = (m as usize).pow((dim * dim) as u32);
            let entries: Vec<u32> = (0..dim * dim)
                .map(|i| (i % (dim + 1) == 0) as u32)
                .collect();
            let one = encode_digits(&entries, m);
            Ring::assemble(spec.clone(), order, one, dim == 1, Kind::Matrix { m, dim })
        }
        RingSpec::QuotientByNil(base) => {
            let base = build_ring(base)?;
            let (mut q, _) = build_quotient_by_nilradical(&base)?;
            q.spec = spec.clone();
            q
        }
    };
    Ok(ring)
}

fn encode_digits(digits: &[u32], radix: u32) -> Elem {
    digits.iter().fold(0, |acc, &d| acc * radix + d)
}

fn decode_digits(mut x: Elem, radix: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = x % radix;
        x /= radix;
    }
    out
}

impl Ring {
    fn assemble(spec: RingSpec, order: usize, one: Elem, commutative: bool, kind: Kind) -> Ring {
        let mut ring = Ring {
            spec,
            order,
            one,
            commutative,
            kind,
            tables: None,
        };
        ring.memoize();
        ring
    }

    pub(crate) fn quotient_ring(spec: RingSpec, base: Ring, map: CosetMap) -> Ring {
        let order = map.section.len();
        let one = map.projection[base.one as usize];
        let commutative = base.commutative;
        let kind = Kind::Quotient {
            base: Box::new(base),
            map,
        };
        Ring::assemble(spec, order, one, commutative, kind)
    }

    fn memoize(&mut self) {
        if self.order > TABLE_ORDER {
            return;
        }
        let n = self.order as Elem;
        let add = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| self.add_raw(a, b))
            .collect();
        let mul = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| self.mul_raw(a, b))
            .collect();
        let neg = (0..n).map(|a| self.neg_raw(a)).collect();
        self.tables = Some(Tables { add, mul, neg });
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn name(&self) -> String {
        self.spec.to_string()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        0
    }

    #[inline]
    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        0..self.order as Elem
    }

    /// Product factors, when this ring was built as a direct product.
    pub fn factors(&self) -> Option<&[Ring]> {
        match &self.kind {
            Kind::Product { factors, .. } => Some(factors),
            _ => None,
        }
    }

    /// `(modulus, dim)` for a matrix ring M_dim(Z_modulus).
    pub fn matrix_shape(&self) -> Option<(u32, usize)> {
        match self.kind {
            Kind::Matrix { m, dim } => Some((m, dim)),
            _ => None,
        }
    }

    /// `(p, k)` when this ring was built as GF(p^k).
    pub fn field_shape(&self) -> Option<(u32, usize)> {
        match self.kind {
            Kind::Gf { p, k, .. } => Some((p, k)),
            _ => None,
        }
    }

    /// The modulus `n` when this ring was built as Z_n.
    pub fn zn_modulus(&self) -> Option<u32> {
        match self.kind {
            Kind::Zn { n } => Some(n),
            _ => None,
        }
    }

    /// The GF modulus polynomial, constant term first.
    pub fn gf_modulus(&self) -> Option<&[u32]> {
        match &self.kind {
            Kind::Gf { modulus, .. } => Some(modulus),
            _ => None,
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Some(t) => t.add[a as usize * self.order + b as usize],
            None => self.add_raw(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Some(t) => t.mul[a as usize * self.order + b as usize],
            None => self.mul_raw(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match &self.tables {
            Some(t) => t.neg[a as usize],
            None => self.neg_raw(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// `k · x` by repeated addition.
    pub fn scale(&self, k: u32, x: Elem) -> Elem {
        (0..k).fold(self.zero(), |acc, _| self.add(acc, x))
    }

    /// Smallest `m ≥ 1` with `m·1 = 0`.
    pub fn characteristic(&self) -> u32 {
        let mut acc = self.one;
        let mut m = 1;
        while acc != 0 {
            acc = self.add(acc, self.one);
            m += 1;
        }
        m
    }

    fn add_raw(&self, a: Elem, b: Elem) -> Elem {
        match &self.kind {
            Kind::Zn { n } => ((a as u64 + b as u64) % *n as u64) as Elem,
            Kind::Gf { p, k, .. } => {
                let (x, y) = (decode_digits(a, *p, *k), decode_digits(b, *p, *k));
                let sum: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % p).collect();
                encode_digits(&sum, *p)
            }
            Kind::Product { factors, strides } => {
                self.componentwise(factors, strides, a, b, Ring::add)
            }
            Kind::Matrix { m, dim } => {
                let (x, y) = (
                    decode_digits(a, *m, dim * dim),
                    decode_digits(b, *m, dim * dim),
                );
                let sum: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % m).collect();
                encode_digits(&sum, *m)
            }
            Kind::Quotient { base, map } => {
                map.projection[base.add(map.section[a as usize], map.section[b as usize]) as usize]
            }
        }
    }

    fn mul_raw(&self, a: Elem, b: Elem) -> Elem {
        match &self.kind {
            Kind::Zn { n } => ((a as u64 * b as u64) % *n as u64) as Elem,
            Kind::Gf { p, k, modulus } => {
                // digits are stored most significant first; polynomials want constant first
                let mut x = decode_digits(a, *p, *k);
                let mut y = decode_digits(b, *p, *k);
                x.reverse();
                y.reverse();
                let mut prod = poly::mul_mod(&x, &y, modulus, *p);
                prod.resize(*k, 0);
                prod.reverse();
                encode_digits(&prod, *p)
            }
            Kind::Product { factors, strides } => {
                self.componentwise(factors, strides, a, b, Ring::mul)
            }
            Kind::Matrix { m, dim } => {
                let d = *dim;
                let x = decode_digits(a, *m, d * d);
                let y = decode_digits(b, *m, d * d);
                let m64 = *m as u64;
                let mut out = vec![0u32; d * d];
                for i in 0..d {
                    for j in 0..d {
                        let s: u64 = (0..d)
                            .map(|t| x[i * d + t] as u64 * y[t * d + j] as u64)
                            .sum();
                        out[i * d + j] = (s % m64) as u32;
                    }
                }
                encode_digits(&out, *m)
            }
            Kind::Quotient { base, map } => {
                map.projection[base.mul(map.section[a as usize], map.section[b as usize]) as usize]
            }
        }
    }

    fn neg_raw(&self, a: Elem) -> Elem {
        match &self.kind {
            Kind::Zn { n } => (n - a) % n,
            Kind::Gf { p, k, .. } => {
                let x: Vec<u32> = decode_digits(a, *p, *k)
                    .iter()
                    .map(|u| (p - u) % p)
                    .collect();
                encode_digits(&x, *p)
            }
            Kind::Product { factors, strides } => self
                .decompose(a)
                .iter()
                .zip(factors)
                .zip(strides)
                .map(|((&c, r), s)| r.neg(c) * s)
                .sum(),
            Kind::Matrix { m, dim } => {
                let x: Vec<u32> = decode_digits(a, *m, dim * dim)
                    .iter()
                    .map(|u| (m - u) % m)
                    .collect();
                encode_digits(&x, *m)
            }
            Kind::Quotient { base, map } => {
                map.projection[base.neg(map.section[a as usize]) as usize]
            }
        }
    }

    fn componentwise(
        &self,
        factors: &[Ring],
        strides: &[u32],
        a: Elem,
        b: Elem,
        op: fn(&Ring, Elem, Elem) -> Elem,
    ) -> Elem {
        let (x, y) = (self.decompose(a), self.decompose(b));
        factors
            .iter()
            .zip(strides)
            .enumerate()
            .map(|(i, (r, s))| op(r, x[i], y[i]) * s)
            .sum()
    }

    /// Per-factor components of a product element.
    pub fn decompose(&self, x: Elem) -> Vec<Elem> {
        match &self.kind {
            Kind::Product { factors, strides } => factors
                .iter()
                .zip(strides)
                .map(|(r, s)| (x / s) % r.order as u32)
                .collect(),
            _ => vec![x],
        }
    }

    /// Inverse of [`Ring::decompose`] for product rings.
    pub fn compose(&self, parts: &[Elem]) -> Elem {
        match &self.kind {
            Kind::Product { strides, .. } => parts.iter().zip(strides).map(|(c, s)| c * s).sum(),
            _ => parts[0],
        }
    }

    /// Row-major entries of a matrix ring element.
    pub fn matrix_entries(&self, x: Elem) -> Option<Vec<u32>> {
        match self.kind {
            Kind::Matrix { m, dim } => Some(decode_digits(x, m, dim * dim)),
            _ => None,
        }
    }

    pub fn matrix_from_entries(&self, entries: &[u32]) -> Option<Elem> {
        match self.kind {
            Kind::Matrix { m, dim } if entries.len() == dim * dim => Some(encode_digits(
                &entries.iter().map(|e| e % m).collect::<Vec<_>>(),
                m,
            )),
            _ => None,
        }
    }

    /// Display name of an element: residues for Z_n, α-polynomials for
    /// GF(p^k), tuples for products, nested rows for matrices, and the
    /// bracketed smallest representative for quotients.
    pub fn label(&self, x: Elem) -> String {
        match &self.kind {
            Kind::Zn { .. } => x.to_string(),
            Kind::Gf { p, k, .. } => {
                let mut coeffs = decode_digits(x, *p, *k);
                coeffs.reverse();
                let terms: Vec<String> = coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| match (i, c) {
                        (0, c) => c.to_string(),
                        (1, 1) => "α".to_string(),
                        (1, c) => format!("{c}α"),
                        (i, 1) => format!("α^{i}"),
                        (i, c) => format!("{c}α^{i}"),
                    })
                    .collect();
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.join("+")
                }
            }
            Kind::Product { factors, .. } => {
                let parts: Vec<String> = self
                    .decompose(x)
                    .iter()
                    .zip(factors)
                    .map(|(&c, r)| r.label(c))
                    .collect();
                format!("({})", parts.join(","))
            }
            Kind::Matrix { m, dim } => {
                let e = decode_digits(x, *m, dim * dim);
                let rows: Vec<String> = e
                    .chunks(*dim)
                    .map(|row| {
                        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
            Kind::Quotient { base, map } => format!("[{}]", base.label(map.section[x as usize])),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        self.elements().map(|x| self.label(x)).collect()
    }

    /// Exhaustive commutativity scan; returns a noncommuting pair if any.
    pub fn find_noncommuting_pair(&self) -> Option<(Elem, Elem)> {
        self.elements()
            .flat_map(|a| (a + 1..self.order as Elem).map(move |b| (a, b)))
            .find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }

    /// Checks every ring law over all triples. Cubic in the order.
    pub fn check_axioms(&self) -> Result<(), AxiomViolation> {
        self.check_unary_laws()?;
        let n = self.order as Elem;
        (0..n).into_par_iter().try_for_each(|a| {
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(violation("additive commutativity", &[a, b]));
                }
                for c in 0..n {
                    self.check_triple(a, b, c)?;
                }
            }
            Ok(())
        })?;
        self.check_commutative_flag()
    }

    /// Checks the ring laws on `samples` random triples drawn from a seeded
    /// generator, plus the unary laws on every element.
    pub fn spot_check_axioms(&self, samples: usize, seed: u64) -> Result<(), AxiomViolation> {
        self.check_unary_laws()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.order as Elem;
        for _ in 0..samples {
            let (a, b, c) = (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            );
            if self.add(a, b) != self.add(b, a) {
                return Err(violation("additive commutativity", &[a, b]));
            }
            if self.commutative && self.mul(a, b) != self.mul(b, a) {
                return Err(violation("multiplicative commutativity", &[a, b]));
            }
            self.check_triple(a, b, c)?;
        }
        Ok(())
    }

    fn check_unary_laws(&self) -> Result<(), AxiomViolation> {
        for a in self.elements() {
            if self.add(a, 0) != a {
                return Err(violation("additive identity", &[a]));
            }
            if self.add(a, self.neg(a)) != 0 {
                return Err(violation("additive inverse", &[a]));
            }
            if self.mul(a, self.one) != a || self.mul(self.one, a) != a {
                return Err(violation("multiplicative identity", &[a]));
            }
        }
        if self.one == 0 {
            return Err(violation("nonzero identity", &[0]));
        }
        Ok(())
    }

    fn check_triple(&self, a: Elem, b: Elem, c: Elem) -> Result<(), AxiomViolation> {
        if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
            return Err(violation("additive associativity", &[a, b, c]));
        }
        if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
            return Err(violation("multiplicative associativity", &[a, b, c]));
        }
        if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
            return Err(violation("left distributivity", &[a, b, c]));
        }
        if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
            return Err(violation("right distributivity", &[a, b, c]));
        }
        Ok(())
    }

    fn check_commutative_flag(&self) -> Result<(), AxiomViolation> {
        match (self.commutative, self.find_noncommuting_pair()) {
            (true, Some((a, b))) => Err(violation("multiplicative commutativity", &[a, b])),
            (false, None) => Err(violation("commutative flag", &[])),
            _ => Ok(()),
        }
    }

    pub(crate) fn require_commutative(&self) -> Result<()> {
        if self.commutative {
            Ok(())
        } else {
            Err(Error::Noncommutative(self.name()))
        }
    }
}

fn violation(law: &'static str, elements: &[Elem]) -> AxiomViolation {
    AxiomViolation {
        law,
        elements: elements.to_vec(),
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ring")
            .field("spec", &self.spec.to_string())
            .field("order", &self.order)
            .field("commutative", &self.commutative)
            .finish()
    }
}
