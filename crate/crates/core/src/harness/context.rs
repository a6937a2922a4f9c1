use std::cell::OnceCell;

use crate::graph::{
    build_graph_with, class_one_certificate, structure_census, sum_edge_coloring, Census,
    ClassOneCertificate, Length, NilCleanGraph, SumColoring,
};
use crate::nilclean::NilCleanProfile;
use crate::ring::{Elem, Ring};

use super::SuiteSettings;

/// One ring with its profile and graph; the costlier invariants are
/// computed on first use and shared across cases.
pub struct CaseContext<'r> {
    pub ring: &'r Ring,
    pub profile: NilCleanProfile,
    pub graph: NilCleanGraph<'r>,
    pub settings: SuiteSettings,
    girth: OnceCell<Length>,
    diameter: OnceCell<Length>,
    components: OnceCell<Vec<Vec<Elem>>>,
    census: OnceCell<Census>,
    sum_coloring: OnceCell<SumColoring>,
    certificate: OnceCell<Option<ClassOneCertificate>>,
}

impl<'r> CaseContext<'r> {
    pub fn new(ring: &'r Ring, settings: SuiteSettings) -> Self {
        let profile = NilCleanProfile::compute(ring);
        let graph = build_graph_with(ring, &profile.nilclean);
        CaseContext {
            ring,
            profile,
            graph,
            settings,
            girth: OnceCell::new(),
            diameter: OnceCell::new(),
            components: OnceCell::new(),
            census: OnceCell::new(),
            sum_coloring: OnceCell::new(),
            certificate: OnceCell::new(),
        }
    }

    pub fn girth(&self) -> Length {
        *self.girth.get_or_init(|| self.graph.girth())
    }

    pub fn diameter(&self) -> Length {
        *self.diameter.get_or_init(|| self.graph.diameter())
    }

    pub fn components(&self) -> &[Vec<Elem>] {
        self.components
            .get_or_init(|| self.graph.connected_components())
    }

    pub fn census(&self) -> &Census {
        self.census.get_or_init(|| structure_census(&self.graph))
    }

    pub fn sum_coloring(&self) -> &SumColoring {
        self.sum_coloring
            .get_or_init(|| sum_edge_coloring(&self.graph))
    }

    pub fn certificate(&self) -> Option<&ClassOneCertificate> {
        self.certificate
            .get_or_init(|| class_one_certificate(&self.graph, self.settings.coloring_budget))
            .as_ref()
    }

    /// `(p, k)` with `|R| = p^k`, when R is a field.
    pub fn field_parameters(&self) -> Option<(u32, u32)> {
        if !self.profile.is_field {
            return None;
        }
        let p = self.ring.characteristic();
        let (mut rest, mut k) = (self.ring.order(), 0);
        while rest > 1 {
            rest /= p as usize;
            k += 1;
        }
        Some((p, k))
    }

    pub fn is_commutative(&self) -> bool {
        self.ring.is_commutative()
    }

    /// `2x ∈ NC(R)` for every x.
    pub fn doubles_all_nil_clean(&self) -> bool {
        self.ring
            .elements()
            .all(|x| self.profile.nilclean.contains(self.ring.add(x, x)))
    }
}
