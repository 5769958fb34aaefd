//! Executable acceptance suites.
//!
//! Each criterion runs a bounded exhaustive or sampled check and reports a
//! single pass/fail verdict with counts. Failures carry diagnostics instead
//! of panicking so that a full run always produces every line.

mod classify;
mod dynkin;
mod geometry;

use std::fmt;
use std::time::{Duration, Instant};

use crate::cls::EnumBounds;

pub use classify::{
    coherence_suite, coherence_suite_with, containment_vs_levelwise, levelwise_product_suite, maximal_ideal_suite,
    minimal_cls_suite, separation_suite, var_suite,
};
pub use dynkin::dynkin_suite;
pub use geometry::{
    closure_claim_suite, witness_eigenvalue_suite, projection_suite, rank_reduce_suite, rank_variety_suite,
};

/// Enumeration bounds shared by the classification criteria:
/// `v, w, m ≤ 2`, indices `≤ 3`, exponents `≤ 2`, spinor forms included.
pub const STANDARD_BOUNDS: EnumBounds = EnumBounds {
    v: 2,
    w: 2,
    m: 2,
    max_index: 3,
    max_exp: 2,
    spin: true,
    top: false,
};

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    /// One-line summary of what was checked.
    pub summary: String,
    /// Counterexamples and follow-up observations, empty on a clean pass.
    pub details: Vec<String>,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] #{} {}: {} ({:.2}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.summary,
            self.elapsed.as_secs_f64()
        )
    }
}

pub(crate) struct Recorder {
    id: u32,
    title: &'static str,
    start: Instant,
    failures: usize,
    details: Vec<String>,
}

/// Cap on stored counterexamples per criterion.
const MAX_DETAILS: usize = 12;

impl Recorder {
    pub(crate) fn new(id: u32, title: &'static str) -> Self {
        Recorder {
            id,
            title,
            start: Instant::now(),
            failures: 0,
            details: Vec::new(),
        }
    }

    pub(crate) fn fail(&mut self, msg: impl Into<String>) {
        self.failures += 1;
        if self.details.len() < MAX_DETAILS {
            self.details.push(msg.into());
        }
    }

    pub(crate) fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.fail(msg());
        }
    }

    /// Adds an observation that does not count as a failure.
    pub(crate) fn note(&mut self, msg: impl Into<String>) {
        self.details.push(msg.into());
    }

    /// Counts further failures beyond the stored examples.
    pub(crate) fn add_failures(&mut self, extra: usize) {
        self.failures += extra;
    }

    pub(crate) fn finish(self, summary: String) -> CriterionReport {
        CriterionReport {
            id: self.id,
            title: self.title,
            passed: self.failures == 0,
            summary: if self.failures == 0 {
                summary
            } else {
                format!("{summary}; {} failure(s)", self.failures)
            },
            details: self.details,
            elapsed: self.start.elapsed(),
        }
    }
}

/// Runs one criterion by number.
pub fn run_criterion(id: u32, seed: u64) -> Option<CriterionReport> {
    Some(match id {
        1 => minimal_cls_suite(STANDARD_BOUNDS),
        2 => maximal_ideal_suite(STANDARD_BOUNDS),
        3 => coherence_suite(),
        4 => levelwise_product_suite(),
        5 => containment_vs_levelwise(STANDARD_BOUNDS),
        6 => separation_suite(STANDARD_BOUNDS),
        7 => var_suite(STANDARD_BOUNDS),
        8 => rank_variety_suite(seed),
        9 => witness_eigenvalue_suite(seed),
        10 => rank_reduce_suite(seed),
        11 => closure_claim_suite(),
        12 => projection_suite(seed),
        13 => dynkin_suite(),
        _ => return None,
    })
}

/// Every criterion in order.
pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    (1..=13).filter_map(|id| run_criterion(id, seed)).collect()
}
