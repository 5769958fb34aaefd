use std::collections::BTreeSet;

use super::level::size_raw;
use super::{level_set, IrreducibleCls};
use crate::error::{Error, Result};
use crate::rep_oracle::InterlacingBranch;
use crate::weights::{Algebra, Series, Weight};

/// Comparison of the level set at `m` with the branching image of level `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherenceReport {
    pub upper: usize,
    pub lower: usize,
    /// `None` when both level sets are finite and compared in full.
    pub window: Option<u32>,
    /// In the level-`m` set but not reached by restriction.
    pub missing: BTreeSet<Weight>,
    /// Reached by restriction but outside the level-`m` set.
    pub extra: BTreeSet<Weight>,
}

impl CoherenceReport {
    pub fn coherent(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

/// Restricts every member of the level set at `n` down to rank `m` and
/// compares the union of supports with the level set at `m`.
///
/// Infinite level sets are compared on weights of size at most `window`.
/// Restriction never increases size. For `so`/`sp` every weight in the window
/// has a padded parent of size at most `window + n - m`. For `sl` padding can
/// double the shift-minimized size, so parents are cut by spread
/// `λ_1 - λ_last ≤ window + n - m` instead, which restriction also never increases.
pub fn coherence_check(
    brancher: &InterlacingBranch,
    q: &IrreducibleCls,
    n: usize,
    m: usize,
    window: u32,
) -> Result<CoherenceReport> {
    if m >= n {
        return Err(Error::Precondition(format!("need m < n, got m = {m}, n = {n}")));
    }
    let series = q.family();
    let upper = level_set(q, n)?;
    let lower = level_set(q, m)?;
    let finite = upper.is_finite() && lower.is_finite();
    let reach = window + (n - m) as u32;
    let up = match series {
        Series::Sl if !finite => {
            // size ≤ ⌊len/2⌋ · spread for sl
            let half = (n as u32 + 1) / 2;
            let mut up = upper.enumerate_raw(half * reach);
            up.retain(|l| l.first().zip(l.last()).is_none_or(|(a, b)| a - b <= 2 * reach as i64));
            up
        }
        _ => upper.enumerate_raw(reach),
    };
    let mut reached = brancher.descend_raw(series, up.iter().cloned(), n - m);
    if !finite {
        reached.retain(|l| size_raw(series, l) <= 2 * window as i64);
    }
    let low = lower.enumerate_raw(window);
    let child = Algebra::new(series, m)?;
    let wrap = |s: BTreeSet<Vec<i64>>| -> BTreeSet<Weight> {
        s.into_iter().map(|c| Weight::from_canonical(child, c)).collect()
    };
    Ok(CoherenceReport {
        upper: up.len(),
        lower: low.len(),
        window: (!finite).then_some(window),
        missing: wrap(low.difference(&reached).cloned().collect()),
        extra: wrap(reached.difference(&low).cloned().collect()),
    })
}
