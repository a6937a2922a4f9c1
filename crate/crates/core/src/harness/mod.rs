//! Executable checks of the structural claims about nil clean graphs, run
//! over ring families.

mod cases;
mod context;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ring::{build_ring, RingSpec};
use crate::verdict::Verdict;

pub use cases::{
    all_cases, product_dominating_check, product_hypotheses, product_split, zn_diameter_claims,
    TheoremCase, COVERAGE,
};
pub use context::CaseContext;

/// Default largest ring order the suite will build.
pub const DEFAULT_MAX_ORDER: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteSettings {
    pub max_order: usize,
    /// Backtracking steps per component for class-1 certificates.
    pub coloring_budget: u64,
}

impl Default for SuiteSettings {
    fn default() -> Self {
        SuiteSettings {
            max_order: DEFAULT_MAX_ORDER,
            coloring_budget: 2_000_000,
        }
    }
}

impl SuiteSettings {
    /// Defaults, with `NILGRAPH_MAX_ORDER` overriding the order cap.
    pub fn from_env() -> Self {
        let mut settings = SuiteSettings::default();
        if let Some(n) = std::env::var("NILGRAPH_MAX_ORDER")
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            settings.max_order = n;
        }
        settings
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub ring: String,
    pub case: String,
    pub citation: String,
    /// A mismatch here is a known flaw in the claim, not a failure.
    pub expected_mismatch: bool,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl CaseResult {
    pub fn is_unexpected_mismatch(&self) -> bool {
        self.verdict.is_mismatch() && !self.expected_mismatch
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub rings: usize,
    pub pass: usize,
    pub expected_mismatch: usize,
    pub unexpected_mismatch: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub entries: Vec<CaseResult>,
    pub totals: Totals,
    /// Seconds spent; left out of the JSON unless set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time: Option<f64>,
}

impl SuiteReport {
    pub fn unexpected(&self) -> impl Iterator<Item = &CaseResult> {
        self.entries.iter().filter(|e| e.is_unexpected_mismatch())
    }

    /// 0 when every mismatch is expected, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.totals.unexpected_mismatch > 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Catalogue cases with the given ids, in catalogue order; `Err` names the
/// first unknown id.
pub fn select_cases(ids: &[&str]) -> Result<Vec<TheoremCase>, String> {
    let catalogue = all_cases();
    if let Some(unknown) = ids
        .iter()
        .find(|id| !catalogue.iter().any(|c| c.id == **id))
    {
        return Err(unknown.to_string());
    }
    Ok(catalogue
        .into_iter()
        .filter(|c| ids.contains(&c.id))
        .collect())
}

fn ring_results(
    spec: &RingSpec,
    cases: &[TheoremCase],
    settings: SuiteSettings,
) -> Vec<CaseResult> {
    let name = spec.to_string();
    let skip_all = |reason: String| {
        cases
            .iter()
            .map(|c| CaseResult {
                ring: name.clone(),
                case: c.id.to_string(),
                citation: c.citation.to_string(),
                expected_mismatch: false,
                verdict: Verdict::skipped(reason.clone()),
            })
            .collect::<Vec<_>>()
    };
    match spec.order_bound() {
        Some(order) if order <= settings.max_order as u64 => {}
        Some(order) => {
            return skip_all(format!(
                "order {order} exceeds the cap {}",
                settings.max_order
            ))
        }
        None => return skip_all(format!("order exceeds the cap {}", settings.max_order)),
    }
    let ring = match build_ring(spec) {
        Ok(r) => r,
        Err(e) => return skip_all(e.to_string()),
    };
    let ctx = CaseContext::new(&ring, settings);
    cases
        .iter()
        .map(|c| {
            let verdict = c.run(&ctx);
            CaseResult {
                ring: name.clone(),
                case: c.id.to_string(),
                citation: c.citation.to_string(),
                expected_mismatch: verdict.is_mismatch() && c.is_expected_mismatch(&ctx),
                verdict,
            }
        })
        .collect()
}

/// Runs every case on every ring. Rings are processed in parallel; entries
/// are sorted by ring spec string, then case id, so the report does not
/// depend on scheduling.
pub fn run_suite(
    families: &[RingSpec],
    cases: &[TheoremCase],
    settings: SuiteSettings,
) -> SuiteReport {
    let mut entries: Vec<CaseResult> = families
        .par_iter()
        .flat_map_iter(|spec| ring_results(spec, cases, settings))
        .collect();
    entries.sort_by(|a, b| (&a.ring, &a.case).cmp(&(&b.ring, &b.case)));

    let mut rings: Vec<&str> = entries.iter().map(|e| e.ring.as_str()).collect();
    rings.dedup();
    let mut totals = Totals {
        rings: rings.len(),
        ..Totals::default()
    };
    for e in &entries {
        match &e.verdict {
            Verdict::Pass => totals.pass += 1,
            Verdict::Mismatch { .. } if e.expected_mismatch => totals.expected_mismatch += 1,
            Verdict::Mismatch { .. } => totals.unexpected_mismatch += 1,
            Verdict::Skipped { .. } => totals.skipped += 1,
        }
    }
    SuiteReport {
        entries,
        totals,
        wall_time: None,
    }
}

/// [`run_suite`] with the elapsed time recorded.
pub fn run_suite_timed(
    families: &[RingSpec],
    cases: &[TheoremCase],
    settings: SuiteSettings,
) -> SuiteReport {
    let start = Instant::now();
    let mut report = run_suite(families, cases, settings);
    report.wall_time = Some(start.elapsed().as_secs_f64());
    report
}
