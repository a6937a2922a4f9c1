//! The claim catalogue: one executable check per statement about nil clean
//! graphs.

use crate::bitset::ElementSet;
use crate::graph::{
    build_graph, hamiltonian_path_zn, is_path, is_walk, matrix_path_to_zero, undominated_vertex,
    Length,
};
use crate::nilclean::{idempotent_lifting_check, is_reduced_without_idempotents, NilCleanProfile};
use crate::ring::{build_quotient_by_nilradical, build_ring, is_prime, Ring, RingSpec};
use crate::verdict::{Verdict, Witness};

use super::CaseContext;

pub type Applicability = fn(&CaseContext) -> Result<(), String>;
pub type Check = fn(&CaseContext) -> Verdict;

pub struct TheoremCase {
    pub id: &'static str,
    pub citation: &'static str,
    pub applies: Applicability,
    pub check: Check,
    /// Rings on which a mismatch is a known flaw in the claim as stated.
    pub expected_mismatch: Option<fn(&CaseContext) -> bool>,
}

impl TheoremCase {
    pub fn run(&self, ctx: &CaseContext) -> Verdict {
        match (self.applies)(ctx) {
            Ok(()) => (self.check)(ctx),
            Err(reason) => Verdict::skipped(reason),
        }
    }

    pub fn is_expected_mismatch(&self, ctx: &CaseContext) -> bool {
        self.expected_mismatch.is_some_and(|f| f(ctx))
    }
}

impl std::fmt::Debug for TheoremCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TheoremCase").field("id", &self.id).finish()
    }
}

fn always(_: &CaseContext) -> Result<(), String> {
    Ok(())
}

fn require(cond: bool, reason: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(reason.to_string())
    }
}

fn commutative(ctx: &CaseContext) -> Result<(), String> {
    require(ctx.is_commutative(), "ring is not commutative")
}

fn expect_length(ctx: &CaseContext, quantity: &str, expected: Length, actual: Length) -> Verdict {
    if expected == actual {
        Verdict::Pass
    } else {
        Verdict::mismatch(
            Witness::value(ctx.ring, quantity, expected, actual, 0),
            format!("{quantity} differs"),
        )
    }
}

fn odd_prime(p: u32) -> bool {
    p > 2 && is_prime(p)
}

/// `n = 2^k 3^l`, returning `(k, l)`.
fn two_three_exponents(n: u32) -> Option<(u32, u32)> {
    let (mut rest, mut k, mut l) = (n, 0, 0);
    while rest % 2 == 0 {
        rest /= 2;
        k += 1;
    }
    while rest % 3 == 0 {
        rest /= 3;
        l += 1;
    }
    (rest == 1).then_some((k, l))
}

fn zn(ctx: &CaseContext) -> Option<u32> {
    ctx.ring.zn_modulus()
}

// -- definition and basic properties --------------------------------------

fn check_definition(ctx: &CaseContext) -> Verdict {
    let (r, g, nc) = (ctx.ring, &ctx.graph, &ctx.profile.nilclean);
    if let Some((a, b)) = g.adjacency_violation() {
        return Verdict::mismatch(
            Witness::pair(r, a, b),
            "adjacency is not symmetric and loop-free",
        );
    }
    for a in r.elements() {
        for b in r.elements() {
            if g.adjacent(a, b) != (a != b && nc.contains(r.add(a, b))) {
                return Verdict::mismatch(
                    Witness::pair(r, a, b),
                    "adjacency disagrees with a + b ∈ NC(R)",
                );
            }
        }
    }
    Verdict::Pass
}

fn check_complete_iff_nil_clean(ctx: &CaseContext) -> Verdict {
    let complete = ctx.graph.is_complete();
    let nil_clean = ctx.profile.is_nil_clean_ring;
    if complete == nil_clean {
        return Verdict::Pass;
    }
    let r = ctx.ring;
    if nil_clean {
        let (a, b) = r
            .elements()
            .find_map(|a| {
                r.elements()
                    .find(|&b| b != a && !ctx.graph.adjacent(a, b))
                    .map(|b| (a, b))
            })
            .expect("incomplete graph has a missing edge");
        Verdict::mismatch(Witness::pair(r, a, b), "nil clean ring with a missing edge")
    } else {
        let x = ElementSet::full(r.order())
            .first_not_in(&ctx.profile.nilclean)
            .unwrap();
        Verdict::mismatch(
            Witness::element(r, x),
            "complete graph over a non nil clean element",
        )
    }
}

fn lifting_applies(ctx: &CaseContext) -> Result<(), String> {
    commutative(ctx)?;
    require(
        idempotent_lifting_check(ctx.ring).unwrap_or(false),
        "idempotents do not lift modulo the nilradical",
    )
}

fn check_adjacency_lifting(ctx: &CaseContext) -> Verdict {
    let r = ctx.ring;
    let (q, map) = build_quotient_by_nilradical(r).expect("commutative");
    let quotient_graph = build_graph(&q);
    let nil = ctx.profile.nilpotents.to_vec();
    for (c, d) in quotient_graph.edges() {
        let (x, y) = (map.section[c as usize], map.section[d as usize]);
        for &n1 in &nil {
            for &n2 in &nil {
                let (a, b) = (r.add(x, n1), r.add(y, n2));
                if !ctx.graph.adjacent(a, b) {
                    return Verdict::mismatch(
                        Witness::pair(r, a, b),
                        "cosets adjacent but representatives not",
                    );
                }
            }
        }
    }
    Verdict::Pass
}

fn check_degree_lemma(ctx: &CaseContext) -> Verdict {
    match ctx.graph.degree_formula_violation() {
        None => Verdict::Pass,
        Some(x) => {
            let nc = ctx.profile.nilclean.len();
            let doubled = ctx.profile.nilclean.contains(ctx.ring.add(x, x));
            let expected = if doubled { nc - 1 } else { nc };
            Verdict::mismatch(
                Witness::value(ctx.ring, "degree", expected, ctx.graph.degree(x), x),
                "degree differs from the NC count",
            )
        }
    }
}

fn zn_applies(ctx: &CaseContext) -> Result<(), String> {
    require(zn(ctx).is_some(), "ring is not Z_n")
}

fn check_connected_zn(ctx: &CaseContext) -> Verdict {
    let path = hamiltonian_path_zn(zn(ctx).unwrap());
    if let Some(w) = path.windows(2).find(|w| !ctx.graph.adjacent(w[0], w[1])) {
        return Verdict::mismatch(
            Witness::pair(ctx.ring, w[0], w[1]),
            "Hamiltonian path step is not an edge",
        );
    }
    if !is_path(&ctx.graph, &path) || ctx.components().len() != 1 {
        return Verdict::mismatch(
            Witness::cycle(ctx.ring, path),
            "path does not span a connected graph",
        );
    }
    Verdict::Pass
}

fn matrix_applies(ctx: &CaseContext) -> Result<(), String> {
    require(
        ctx.ring.matrix_shape().is_some(),
        "ring is not a matrix ring",
    )
}

fn check_connected_matrix(ctx: &CaseContext) -> Verdict {
    let r = ctx.ring;
    for a in r.elements() {
        let walk = matrix_path_to_zero(r, a).expect("matrix ring");
        if walk.first() != Some(&a) || walk.last() != Some(&0) || !is_walk(&ctx.graph, &walk) {
            return Verdict::mismatch(
                Witness::cycle(r, walk),
                "constructed walk to zero is broken",
            );
        }
    }
    if ctx.components().len() != 1 {
        let stray = ctx.components()[1][0];
        return Verdict::mismatch(
            Witness::element(r, stray),
            "matrix ring graph is disconnected",
        );
    }
    Verdict::Pass
}

fn check_not_always_connected(ctx: &CaseContext) -> Verdict {
    let count = ctx.components().len();
    if count > 1 {
        Verdict::Pass
    } else {
        Verdict::mismatch(
            Witness::value(ctx.ring, "components", "> 1", count, 0),
            "graph is connected",
        )
    }
}

fn check_field_characterization(ctx: &CaseContext) -> Verdict {
    let structural = is_reduced_without_idempotents(ctx.ring);
    if structural == ctx.profile.is_field {
        return Verdict::Pass;
    }
    let r = ctx.ring;
    let x = r
        .elements()
        .skip(1)
        .find(|&x| !crate::nilclean::is_unit(r, x))
        .unwrap_or(0);
    Verdict::mismatch(
        Witness::value(r, "field", structural, ctx.profile.is_field, x),
        "reduced with trivial idempotents disagrees with being a field",
    )
}

fn field_applies(ctx: &CaseContext) -> Result<(), String> {
    require(ctx.profile.is_field, "ring is not a field")
}

fn check_field_nil_clean_set(ctx: &CaseContext) -> Verdict {
    let expected = ElementSet::from_indices(ctx.ring.order(), [0, ctx.ring.one()]);
    match ctx.profile.nilclean.first_not_in(&expected) {
        None => Verdict::Pass,
        Some(x) => Verdict::mismatch(
            Witness::element(ctx.ring, x),
            "field has a nil clean element besides 0, 1",
        ),
    }
}

// -- girth -----------------------------------------------------------------

fn non_field_applies(ctx: &CaseContext) -> Result<(), String> {
    commutative(ctx)?;
    require(!ctx.profile.is_field, "ring is a field")
}

fn check_girth_three(ctx: &CaseContext) -> Verdict {
    expect_length(ctx, "girth", Length::Finite(3), ctx.girth())
}

fn odd_extension_applies(ctx: &CaseContext) -> Result<(), String> {
    match ctx.field_parameters() {
        Some((p, k)) if p > 2 && k > 1 => Ok(()),
        Some(_) => Err("field is prime or of characteristic 2".to_string()),
        None => Err("ring is not a field".to_string()),
    }
}

fn check_girth_two_p(ctx: &CaseContext) -> Verdict {
    let (p, _) = ctx.field_parameters().unwrap();
    expect_length(ctx, "girth", Length::Finite(2 * p), ctx.girth())
}

fn other_field_applies(ctx: &CaseContext) -> Result<(), String> {
    match ctx.field_parameters() {
        Some((p, k)) if p > 2 && k > 1 => {
            Err("field of odd characteristic and degree > 1".to_string())
        }
        Some(_) => Ok(()),
        None => Err("ring is not a field".to_string()),
    }
}

fn check_girth_infinite(ctx: &CaseContext) -> Verdict {
    match ctx.graph.shortest_cycle() {
        None => Verdict::Pass,
        Some(cycle) => {
            Verdict::mismatch(Witness::cycle(ctx.ring, cycle), "field graph has a cycle")
        }
    }
}

fn check_path_shape(ctx: &CaseContext) -> Verdict {
    let census = ctx.census();
    if census.is_single_path() {
        Verdict::Pass
    } else {
        let stray = ctx.components().get(1).map_or(0, |c| c[0]);
        Verdict::mismatch(
            Witness::value(
                ctx.ring,
                "components",
                "one path",
                describe_census(census),
                stray,
            ),
            "graph is not a single path",
        )
    }
}

/// `"4 paths of 2"`, `"1 path of 5, 2 cycles of 10"`.
fn describe_census(census: &crate::graph::Census) -> String {
    fn group(sizes: &[usize], noun: &str, out: &mut Vec<String>) {
        let mut sorted = sizes.to_vec();
        sorted.sort_unstable();
        for chunk in sorted.chunk_by(|a, b| a == b) {
            let plural = if chunk.len() == 1 { "" } else { "s" };
            out.push(format!("{} {noun}{plural} of {}", chunk.len(), chunk[0]));
        }
    }
    let mut parts = Vec::new();
    group(&census.paths, "path", &mut parts);
    group(&census.cycles, "cycle", &mut parts);
    group(&census.other, "other component", &mut parts);
    parts.join(", ")
}

fn characteristic_two_extension(ctx: &CaseContext) -> bool {
    ctx.field_parameters().is_some_and(|(p, k)| p == 2 && k > 1)
}

fn check_extension_decomposition(ctx: &CaseContext) -> Verdict {
    let (p, k) = ctx.field_parameters().unwrap();
    let cycles = ((p as usize).pow(k - 1) - 1) / 2;
    let census = ctx.census();
    let ok = census.paths == [p as usize]
        && census.other.is_empty()
        && census.cycles.len() == cycles
        && census.cycles.iter().all(|&c| c == 2 * p as usize);
    if ok {
        Verdict::Pass
    } else {
        Verdict::mismatch(
            Witness::value(
                ctx.ring,
                "census",
                format!("path of {p} and {cycles} cycles of length {}", 2 * p),
                describe_census(census),
                0,
            ),
            "decomposition differs",
        )
    }
}

fn check_not_cyclic(ctx: &CaseContext) -> Verdict {
    if ctx.graph.is_cycle_graph() {
        Verdict::mismatch(
            Witness::cycle(ctx.ring, ctx.graph.shortest_cycle().unwrap_or_default()),
            "graph is a cycle",
        )
    } else {
        Verdict::Pass
    }
}

fn check_bipartite_iff_field(ctx: &CaseContext) -> Verdict {
    let bipartite = ctx.graph.is_bipartite();
    if bipartite == ctx.profile.is_field {
        return Verdict::Pass;
    }
    match ctx.graph.shortest_cycle() {
        Some(cycle) if !bipartite => Verdict::mismatch(
            Witness::cycle(ctx.ring, cycle),
            "field graph has an odd cycle",
        ),
        _ => Verdict::mismatch(
            Witness::value(ctx.ring, "bipartite", ctx.profile.is_field, bipartite, 0),
            "non-field graph is bipartite",
        ),
    }
}

// -- domination --------------------------------------------------------------

fn check_pair_dominates(ctx: &CaseContext) -> Verdict {
    let r = ctx.ring;
    let pair = ElementSet::from_indices(r.order(), [r.one(), r.add(r.one(), r.one())]);
    match undominated_vertex(&ctx.graph, &pair) {
        None => Verdict::Pass,
        Some(x) => Verdict::mismatch(Witness::element(r, x), "not dominated by {1, 1+1}"),
    }
}

fn weak_trivial_applies(ctx: &CaseContext) -> Result<(), String> {
    commutative(ctx)?;
    require(
        ctx.profile.is_weak_nil_clean_ring,
        "ring is not weak nil clean",
    )?;
    require(
        ctx.profile.has_trivial_idempotents(),
        "ring has nontrivial idempotents",
    )
}

fn weak_applies(ctx: &CaseContext) -> Result<(), String> {
    commutative(ctx)?;
    require(
        ctx.profile.is_weak_nil_clean_ring,
        "ring is not weak nil clean",
    )
}

/// Hypotheses of the product results: `A` nil clean, `B` weak nil clean
/// with only trivial idempotents.
pub fn product_hypotheses(a: &Ring, b: &Ring) -> Result<(), String> {
    let (pa, pb) = (NilCleanProfile::compute(a), NilCleanProfile::compute(b));
    require(
        pa.is_nil_clean_ring,
        &format!("{} is not nil clean", a.name()),
    )?;
    require(
        pb.is_weak_nil_clean_ring,
        &format!("{} is not weak nil clean", b.name()),
    )?;
    require(
        pb.has_trivial_idempotents(),
        &format!("{} has nontrivial idempotents", b.name()),
    )
}

fn sub_product(factors: &[Ring]) -> Ring {
    match factors {
        [single] => single.clone(),
        many => build_ring(&RingSpec::product(many.iter().map(|r| r.spec().clone())))
            .expect("factors are valid"),
    }
}

/// First split of the factor list into `A × B` meeting the product
/// hypotheses, either way round.
pub fn product_split(r: &Ring) -> Result<(Ring, Ring), String> {
    let factors = r.factors().ok_or("ring is not a direct product")?;
    let mut last = String::new();
    for i in 1..factors.len() {
        let (front, back) = (sub_product(&factors[..i]), sub_product(&factors[i..]));
        for (a, b) in [(&front, &back), (&back, &front)] {
            match product_hypotheses(a, b) {
                Ok(()) => return Ok((a.clone(), b.clone())),
                Err(e) => last = e,
            }
        }
    }
    Err(last)
}

fn product_applies(ctx: &CaseContext) -> Result<(), String> {
    product_split(ctx.ring).map(|_| ())
}

/// `{(1_A, 1_B), (2_A, 2_B)}` dominates G_N(A × B).
pub fn product_dominating_check(a: &Ring, b: &Ring) -> Verdict {
    if let Err(reason) = product_hypotheses(a, b) {
        return Verdict::skipped(reason);
    }
    let r = build_ring(&RingSpec::product([a.spec().clone(), b.spec().clone()]))
        .expect("factors are valid");
    let g = build_graph(&r);
    let one = r.compose(&[a.one(), b.one()]);
    let two = r.compose(&[a.add(a.one(), a.one()), b.add(b.one(), b.one())]);
    match undominated_vertex(&g, &ElementSet::from_indices(r.order(), [one, two])) {
        None => Verdict::Pass,
        Some(x) => Verdict::mismatch(Witness::element(&r, x), "not dominated by the product pair"),
    }
}

// -- edge colouring ------------------------------------------------------------

fn check_sum_coloring(ctx: &CaseContext) -> Verdict {
    let c = ctx.sum_coloring();
    if !c.proper {
        let r = ctx.ring;
        let clash = r
            .elements()
            .find(|&v| {
                let mut seen: Vec<u32> = c
                    .edges
                    .iter()
                    .filter(|e| e.a == v || e.b == v)
                    .map(|e| e.color)
                    .collect();
                seen.sort_unstable();
                seen.windows(2).any(|w| w[0] == w[1])
            })
            .unwrap_or(0);
        return Verdict::mismatch(
            Witness::element(r, clash),
            "two edges at this vertex share a sum",
        );
    }
    if !c.colors_within_nilclean {
        let stray = c
            .colors
            .iter()
            .copied()
            .find(|&x| !ctx.profile.nilclean.contains(x))
            .unwrap();
        return Verdict::mismatch(Witness::element(ctx.ring, stray), "edge sum outside NC(R)");
    }
    Verdict::Pass
}

fn check_class_one(ctx: &CaseContext) -> Verdict {
    let delta = ctx.graph.max_degree();
    match ctx.certificate() {
        Some(cert) if cert.color_count == delta && cert.verify(&ctx.graph) => Verdict::Pass,
        Some(cert) => Verdict::mismatch(
            Witness::value(ctx.ring, "certificate colours", delta, cert.color_count, 0),
            "certificate does not use Δ colours",
        ),
        None => Verdict::mismatch(
            Witness::value(
                ctx.ring,
                "χ′ certificate",
                format!("{delta} colours"),
                "none found",
                0,
            ),
            "no Δ-colour edge colouring found within budget",
        ),
    }
}

fn doubles_all_nil_clean(ctx: &CaseContext) -> bool {
    ctx.doubles_all_nil_clean()
}

fn check_degree_premise(ctx: &CaseContext) -> Verdict {
    let delta = ctx.graph.max_degree();
    let nc = ctx.profile.nilclean.len();
    if delta == nc {
        return Verdict::Pass;
    }
    let x = ctx
        .graph
        .degree_sequence()
        .iter()
        .position(|&d| d == delta)
        .unwrap_or(0) as u32;
    Verdict::mismatch(
        Witness::value(ctx.ring, "Δ", nc, delta, x),
        "maximum degree is |NC(R)| − 1 because 2x is nil clean for every x",
    )
}

// -- diameter ------------------------------------------------------------------

fn check_diameter_one_iff_nil_clean(ctx: &CaseContext) -> Verdict {
    let one = ctx.diameter() == Length::Finite(1);
    if one == ctx.profile.is_nil_clean_ring {
        Verdict::Pass
    } else {
        Verdict::mismatch(
            Witness::value(
                ctx.ring,
                "diameter",
                if ctx.profile.is_nil_clean_ring {
                    "1"
                } else {
                    "> 1"
                },
                ctx.diameter(),
                0,
            ),
            "diameter 1 disagrees with nil cleanness",
        )
    }
}

fn weak_trivial_non_nil_clean_applies(ctx: &CaseContext) -> Result<(), String> {
    weak_trivial_applies(ctx)?;
    require(!ctx.profile.is_nil_clean_ring, "ring is nil clean")
}

fn weak_non_nil_clean_applies(ctx: &CaseContext) -> Result<(), String> {
    weak_applies(ctx)?;
    require(!ctx.profile.is_nil_clean_ring, "ring is nil clean")
}

fn product_non_nil_clean_applies(ctx: &CaseContext) -> Result<(), String> {
    product_applies(ctx)?;
    require(
        !ctx.profile.is_nil_clean_ring,
        "ring is nil clean, so its diameter is 1",
    )
}

fn check_diameter_two(ctx: &CaseContext) -> Verdict {
    expect_length(ctx, "diameter", Length::Finite(2), ctx.diameter())
}

fn zn_two_power(ctx: &CaseContext) -> Result<(), String> {
    match zn(ctx).and_then(two_three_exponents) {
        Some((k, 0)) if k >= 1 => Ok(()),
        _ => Err("n is not a power of 2".to_string()),
    }
}

fn check_diameter_one(ctx: &CaseContext) -> Verdict {
    expect_length(ctx, "diameter", Length::Finite(1), ctx.diameter())
}

fn zn_two_three(ctx: &CaseContext) -> Result<(), String> {
    match zn(ctx).and_then(two_three_exponents) {
        Some((_, l)) if l >= 1 => Ok(()),
        _ => Err("n is not 2^k 3^l with l ≥ 1".to_string()),
    }
}

fn zn_prime(ctx: &CaseContext) -> Result<(), String> {
    require(zn(ctx).is_some_and(is_prime), "n is not prime")
}

fn check_diameter_p_minus_one(ctx: &CaseContext) -> Verdict {
    let n = zn(ctx).unwrap();
    let p = if is_prime(n) {
        n
    } else if n.is_multiple_of(2) && odd_prime(n / 2) {
        n / 2
    } else {
        n / 3
    };
    expect_length(ctx, "diameter", Length::Finite(p - 1), ctx.diameter())
}

fn zn_two_p(ctx: &CaseContext) -> Result<(), String> {
    require(
        zn(ctx).is_some_and(|n| n % 2 == 0 && odd_prime(n / 2)),
        "n is not 2p for an odd prime p",
    )
}

fn zn_three_p(ctx: &CaseContext) -> Result<(), String> {
    // n = 6 is 2·3 and is handled as 2p
    require(
        zn(ctx)
            .is_some_and(|n| n % 3 == 0 && odd_prime(n / 3) && !(n % 2 == 0 && odd_prime(n / 2))),
        "n is not 3p for an odd prime p",
    )
}

/// Values claimed for diam(G_N(Z_n)) by each part that covers `n`.
pub fn zn_diameter_claims(n: u32) -> Vec<(&'static str, u32)> {
    let mut claims = Vec::new();
    if let Some((k, l)) = two_three_exponents(n) {
        if l == 0 && k >= 1 {
            claims.push(("2^k", 1));
        }
        if l >= 1 {
            claims.push(("2^k 3^l", 2));
        }
    }
    if is_prime(n) {
        claims.push(("p", n - 1));
    }
    if n.is_multiple_of(2) && odd_prime(n / 2) {
        claims.push(("2p", n / 2 - 1));
    }
    if n.is_multiple_of(3) && odd_prime(n / 3) {
        claims.push(("3p", n / 3 - 1));
    }
    claims
}

fn zn_overlap(ctx: &CaseContext) -> Result<(), String> {
    require(
        zn(ctx).is_some_and(|n| zn_diameter_claims(n).len() > 1),
        "n is covered by at most one part",
    )
}

fn check_zn_overlap(ctx: &CaseContext) -> Verdict {
    let claims = zn_diameter_claims(zn(ctx).unwrap());
    let actual = ctx.diameter();
    match claims.iter().find(|(_, v)| Length::Finite(*v) != actual) {
        None => Verdict::Pass,
        Some((part, v)) => Verdict::mismatch(
            Witness::value(ctx.ring, &format!("diameter ({part})"), v, actual, 0),
            "overlapping parts disagree",
        ),
    }
}

macro_rules! case {
    ($id:literal, $cite:literal, $applies:expr, $check:expr) => {
        TheoremCase {
            id: $id,
            citation: $cite,
            applies: $applies,
            check: $check,
            expected_mismatch: None,
        }
    };
    ($id:literal, $cite:literal, $applies:expr, $check:expr, expect $expected:expr) => {
        TheoremCase {
            id: $id,
            citation: $cite,
            applies: $applies,
            check: $check,
            expected_mismatch: Some($expected),
        }
    };
}

pub fn all_cases() -> Vec<TheoremCase> {
    vec![
        case!(
            "definition",
            "definition of the nil clean graph",
            always,
            check_definition
        ),
        case!(
            "complete-iff-nilclean",
            "completeness theorem",
            always,
            check_complete_iff_nil_clean
        ),
        case!(
            "adjacency-lifting",
            "adjacency lifting lemma",
            lifting_applies,
            check_adjacency_lifting
        ),
        case!("degree-lemma", "degree lemma", always, check_degree_lemma),
        case!(
            "connected-zn",
            "connectivity theorem (ii)-(iii)",
            zn_applies,
            check_connected_zn
        ),
        case!(
            "connected-matrix",
            "connectivity theorem (iv)-(v)",
            matrix_applies,
            check_connected_matrix
        ),
        case!(
            "not-always-connected",
            "connectivity theorem (i)",
            odd_extension_applies,
            check_not_always_connected
        ),
        case!(
            "field-characterization",
            "field characterization lemma",
            commutative,
            check_field_characterization
        ),
        case!(
            "nilclean-field",
            "nil clean elements of a finite field",
            field_applies,
            check_field_nil_clean_set
        ),
        case!(
            "girth-nonfield",
            "girth theorem (i)",
            non_field_applies,
            check_girth_three
        ),
        case!(
            "girth-2p",
            "girth theorem (ii)(a)",
            odd_extension_applies,
            check_girth_two_p
        ),
        case!(
            "girth-infinite",
            "girth theorem (ii)(b): infinite girth",
            other_field_applies,
            check_girth_infinite
        ),
        case!("girth-path-shape", "girth theorem (ii)(b): graph is a path", other_field_applies, check_path_shape,
              expect characteristic_two_extension),
        case!(
            "gfpk-decomposition",
            "girth theorem proof: path and 2p-cycles of GF(p^k)",
            odd_extension_applies,
            check_extension_decomposition
        ),
        case!(
            "not-cyclic",
            "non-cyclic corollary",
            always,
            check_not_cyclic
        ),
        case!(
            "bipartite-iff-field",
            "bipartite theorem",
            always,
            check_bipartite_iff_field
        ),
        case!(
            "dom-trivial-idempotents",
            "domination theorem: weak nil clean, trivial idempotents",
            weak_trivial_applies,
            check_pair_dominates
        ),
        case!(
            "dom-product",
            "domination theorem: nil clean times weak nil clean",
            product_applies,
            check_pair_dominates
        ),
        case!(
            "dom-weak-nilclean",
            "domination theorem: weak nil clean",
            weak_applies,
            check_pair_dominates
        ),
        case!(
            "sum-coloring-proper",
            "chromatic index theorem proof: sum colouring",
            always,
            check_sum_coloring
        ),
        case!(
            "class-one",
            "chromatic index theorem: class 1",
            always,
            check_class_one
        ),
        case!("class-one-premise", "chromatic index theorem proof: Δ = |NC(R)|", always, check_degree_premise,
              expect doubles_all_nil_clean),
        case!(
            "diam-nilclean",
            "diameter lemma: diameter 1 iff nil clean",
            always,
            check_diameter_one_iff_nil_clean
        ),
        case!(
            "diam-weak-trivial-idempotents",
            "diameter theorem: weak nil clean, trivial idempotents",
            weak_trivial_non_nil_clean_applies,
            check_diameter_two
        ),
        case!(
            "diam-product",
            "diameter theorem: nil clean times weak nil clean",
            product_non_nil_clean_applies,
            check_diameter_two
        ),
        case!(
            "diam-weak-nilclean",
            "diameter theorem: weak nil clean, not nil clean",
            weak_non_nil_clean_applies,
            check_diameter_two
        ),
        case!(
            "diam-zn-2k",
            "Z_n diameter theorem (i)",
            zn_two_power,
            check_diameter_one
        ),
        case!(
            "diam-zn-2k3l",
            "Z_n diameter theorem (ii)",
            zn_two_three,
            check_diameter_two
        ),
        case!(
            "diam-zn-prime",
            "Z_n diameter theorem (iii)",
            zn_prime,
            check_diameter_p_minus_one
        ),
        case!(
            "diam-zn-2p",
            "Z_n diameter theorem (iv)",
            zn_two_p,
            check_diameter_p_minus_one
        ),
        case!(
            "diam-zn-3p",
            "Z_n diameter theorem (v)",
            zn_three_p,
            check_diameter_p_minus_one
        ),
        case!(
            "diam-zn-overlap",
            "Z_n diameter theorem: overlapping parts",
            zn_overlap,
            check_zn_overlap
        ),
    ]
}

/// Each claim about nil clean graphs and the cases that check it.
pub const COVERAGE: &[(&str, &[&str])] = &[
    ("definition of the graph", &["definition"]),
    ("complete iff nil clean", &["complete-iff-nilclean"]),
    ("adjacency lifts modulo nil(R)", &["adjacency-lifting"]),
    ("degree formula", &["degree-lemma"]),
    ("graph need not be connected", &["not-always-connected"]),
    ("G_N(Z_n) connected", &["connected-zn"]),
    ("G_N(M_n(Z_n)) connected", &["connected-matrix"]),
    ("field characterization", &["field-characterization"]),
    ("girth of non-fields", &["girth-nonfield"]),
    (
        "girth of odd extension fields",
        &["girth-2p", "gfpk-decomposition", "nilclean-field"],
    ),
    (
        "girth of remaining fields",
        &["girth-infinite", "girth-path-shape"],
    ),
    ("never a cycle", &["not-cyclic"]),
    ("bipartite iff field", &["bipartite-iff-field"]),
    (
        "{1,2} dominates, trivial idempotents",
        &["dom-trivial-idempotents"],
    ),
    ("product pair dominates", &["dom-product"]),
    (
        "{1,2} dominates weak nil clean rings",
        &["dom-weak-nilclean"],
    ),
    (
        "class 1",
        &["sum-coloring-proper", "class-one", "class-one-premise"],
    ),
    ("diameter 1 iff nil clean", &["diam-nilclean"]),
    (
        "diameter 2, trivial idempotents",
        &["diam-weak-trivial-idempotents"],
    ),
    ("diameter 2, products", &["diam-product"]),
    ("diameter 2, weak nil clean", &["diam-weak-nilclean"]),
    (
        "diameter of Z_n",
        &[
            "diam-zn-2k",
            "diam-zn-2k3l",
            "diam-zn-prime",
            "diam-zn-2p",
            "diam-zn-3p",
            "diam-zn-overlap",
        ],
    ),
];

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_and_citations_are_unique() {
        let cases = all_cases();
        let ids: HashSet<_> = cases.iter().map(|c| c.id).collect();
        let cites: HashSet<_> = cases.iter().map(|c| c.citation).collect();
        assert_eq!(ids.len(), cases.len());
        assert_eq!(cites.len(), cases.len());
    }

    #[test]
    fn coverage_matches_catalogue() {
        let cases: HashSet<_> = all_cases().iter().map(|c| c.id).collect();
        let covered: HashSet<_> = COVERAGE
            .iter()
            .flat_map(|(_, ids)| ids.iter().copied())
            .collect();
        assert_eq!(cases, covered);
    }

    #[test]
    fn zn_claim_overlaps() {
        assert_eq!(zn_diameter_claims(6), vec![("2^k 3^l", 2), ("2p", 2)]);
        assert_eq!(zn_diameter_claims(9), vec![("2^k 3^l", 2), ("3p", 2)]);
        assert_eq!(zn_diameter_claims(2), vec![("2^k", 1), ("p", 1)]);
        assert_eq!(zn_diameter_claims(3), vec![("2^k 3^l", 2), ("p", 2)]);
        assert_eq!(zn_diameter_claims(35), vec![]);
    }

    fn ring(s: &str) -> Ring {
        build_ring(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn product_check_examples() {
        assert_eq!(
            product_dominating_check(&ring("Z4"), &ring("Z3")),
            Verdict::Pass
        );
        assert_eq!(
            product_dominating_check(&ring("Z2"), &ring("Z9")),
            Verdict::Pass
        );
        assert_eq!(
            product_dominating_check(&ring("Z8"), &ring("Z3")),
            Verdict::Pass
        );
        assert!(product_dominating_check(&ring("Z6"), &ring("Z6")).is_skipped());
    }

    #[test]
    fn splits_find_either_order() {
        let (a, b) = product_split(&ring("Z3xZ4")).unwrap();
        assert_eq!((a.name(), b.name()), ("Z4".to_string(), "Z3".to_string()));
        let (a, b) = product_split(&ring("Z2xZ2xZ3")).unwrap();
        assert_eq!(
            (a.name(), b.name()),
            ("Z2xZ2".to_string(), "Z3".to_string())
        );
        assert!(product_split(&ring("Z5xZ5")).is_err());
    }
}
