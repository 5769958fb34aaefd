use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Mutex;

use super::RepOracle;
use crate::error::{Error, Result};
use crate::weights::{dominant_raw, Algebra, Series, Weight};

/// Restriction of a simple module to the next-lower algebra of its series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingResult {
    pub parent: Algebra,
    pub child: Algebra,
    pub terms: BTreeMap<Weight, u64>,
}

impl BranchingResult {
    pub fn support(&self) -> BTreeSet<Weight> {
        self.terms.keys().cloned().collect()
    }
}

fn child_algebra(parent: Algebra) -> Result<Algebra> {
    let rank = parent.rank();
    Algebra::new(parent.series(), rank.wrapping_sub(1)).map_err(|_| {
        Error::Precondition(format!("{parent} has no lower algebra in its series"))
    })
}

pub(super) fn branch_by_character(oracle: &RepOracle, w: &Weight) -> Result<BranchingResult> {
    let parent = w.algebra();
    let child = child_algebra(parent)?;
    let series = parent.series();
    let chi = oracle.character_raw(series, w.doubled())?;
    // the dropped coordinate is the trivial line (sl) or the hyperbolic plane
    let mut restricted: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (mu, &m) in chi.iter() {
        let head = mu[..mu.len() - 1].to_vec();
        *restricted.entry(head).or_insert(0) += m as i64;
    }
    let raw = oracle.peel(series, restricted)?;
    let terms = raw
        .into_iter()
        .map(|(k, m)| (Weight::from_canonical(child, k), m))
        .collect();
    Ok(BranchingResult {
        parent,
        child,
        terms,
    })
}

pub(super) fn branch_to_by_character(
    oracle: &RepOracle,
    w: &Weight,
    target: usize,
) -> Result<Vec<Weight>> {
    let rank = w.algebra().rank();
    if target >= rank {
        return Err(Error::Precondition(format!(
            "target rank {target} must be below {rank}"
        )));
    }
    Algebra::new(w.algebra().series(), target)?;
    let mut level: BTreeSet<Weight> = [w.clone()].into_iter().collect();
    for _ in target..rank {
        let mut next = BTreeSet::new();
        for x in &level {
            next.extend(branch_by_character(oracle, x)?.terms.into_keys());
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// Branching supports from interlacing patterns, memoized per weight.
///
/// `sl(n+1) ⊃ sl(n)` uses one interlacing step. `sp(2n) ⊃ sp(2n-2)` and
/// `so(2n) ⊃ so(2n-2)` use two, through an auxiliary pattern. Works on raw
/// doubled tuples so that tails of rank 0 or 1 can be branched as well.
#[derive(Debug, Default)]
pub struct InterlacingBranch {
    memo: Mutex<HashMap<(Series, Vec<i64>), Vec<Vec<i64>>>>,
}

impl InterlacingBranch {
    pub fn new() -> Self {
        Self::default()
    }

    /// Support of one restriction step.
    pub fn branch_support(&self, w: &Weight) -> Result<BTreeSet<Weight>> {
        let child = child_algebra(w.algebra())?;
        Ok(self
            .step_raw(w.algebra().series(), w.doubled())
            .into_iter()
            .map(|c| Weight::from_canonical(child, c))
            .collect())
    }

    pub fn branch_to(&self, w: &Weight, target: usize) -> Result<Vec<Weight>> {
        let rank = w.algebra().rank();
        if target >= rank {
            return Err(Error::Precondition(format!(
                "target rank {target} must be below {rank}"
            )));
        }
        let child = Algebra::new(w.algebra().series(), target)?;
        let out = self.descend_raw(w.algebra().series(), [w.doubled().to_vec()], rank - target);
        Ok(out
            .into_iter()
            .map(|c| Weight::from_canonical(child, c))
            .collect())
    }

    /// Union of supports after `steps` restriction steps.
    pub(crate) fn descend_raw(
        &self,
        series: Series,
        start: impl IntoIterator<Item = Vec<i64>>,
        steps: usize,
    ) -> BTreeSet<Vec<i64>> {
        let mut level: BTreeSet<Vec<i64>> = start.into_iter().collect();
        for _ in 0..steps {
            let mut next = BTreeSet::new();
            for x in &level {
                next.extend(self.step_raw(series, x));
            }
            level = next;
        }
        level
    }

    pub(crate) fn step_raw(&self, series: Series, lambda: &[i64]) -> Vec<Vec<i64>> {
        let key = (series, lambda.to_vec());
        if let Some(hit) = self.memo.lock().expect("memo poisoned").get(&key) {
            return hit.clone();
        }
        let out: Vec<Vec<i64>> = match series {
            Series::Sl => interlace_sl(lambda),
            Series::Sp => interlace_sp(lambda),
            Series::So => interlace_so(lambda),
        }
        .into_iter()
        .collect();
        self.memo
            .lock()
            .expect("memo poisoned")
            .insert(key, out.clone());
        out
    }
}

/// All tuples `mu` with `hi[i] >= mu[i] >= lo[i]`, stepping by 2 in doubled units.
fn boxes(hi: &[i64], lo: &[i64], mut emit: impl FnMut(&[i64])) {
    fn rec(i: usize, hi: &[i64], lo: &[i64], cur: &mut Vec<i64>, emit: &mut dyn FnMut(&[i64])) {
        if i == hi.len() {
            emit(cur);
            return;
        }
        let mut x = lo[i];
        while x <= hi[i] {
            cur.push(x);
            rec(i + 1, hi, lo, cur, emit);
            cur.pop();
            x += 2;
        }
    }
    rec(0, hi, lo, &mut Vec::with_capacity(hi.len()), &mut emit);
}

fn interlace_sl(lambda: &[i64]) -> BTreeSet<Vec<i64>> {
    let n = lambda.len();
    let mut out = BTreeSet::new();
    if n <= 1 {
        out.insert(Vec::new());
        return out;
    }
    let hi = &lambda[..n - 1];
    let lo = &lambda[1..];
    boxes(hi, lo, |mu| {
        out.insert(dominant_raw(Series::Sl, mu));
    });
    out
}

fn interlace_sp(lambda: &[i64]) -> BTreeSet<Vec<i64>> {
    let n = lambda.len();
    let mut out = BTreeSet::new();
    if n == 0 {
        return out;
    }
    // lambda_1 >= nu_1 >= lambda_2 >= ... >= lambda_n >= nu_n >= 0
    let mut lo_nu: Vec<i64> = lambda[1..].to_vec();
    lo_nu.push(0);
    boxes(lambda, &lo_nu, |nu| {
        // nu_1 >= mu_1 >= nu_2 >= ... >= mu_{n-1} >= nu_n
        boxes(&nu[..n - 1], &nu[1..], |mu| {
            out.insert(mu.to_vec());
        });
    });
    out
}

fn interlace_so(lambda: &[i64]) -> BTreeSet<Vec<i64>> {
    let n = lambda.len();
    let mut out = BTreeSet::new();
    if n == 0 {
        return out;
    }
    if n == 1 {
        // so(2) to so(0)
        out.insert(Vec::new());
        return out;
    }
    // so(2n) to so(2n-1): lambda_1 >= nu_1 >= ... >= nu_{n-1} >= |lambda_n|
    let mut lo_nu: Vec<i64> = lambda[1..n - 1].to_vec();
    lo_nu.push(lambda[n - 1].abs());
    boxes(&lambda[..n - 1], &lo_nu, |nu| {
        // so(2n-1) to so(2n-2): nu_1 >= mu_1 >= ... >= nu_{n-1} >= |mu_{n-1}|
        let m = nu.len();
        let mut hi = nu.to_vec();
        let mut lo: Vec<i64> = nu[1..].to_vec();
        lo.push(-nu[m - 1]);
        hi[m - 1] = nu[m - 1];
        boxes(&hi, &lo, |mu| {
            out.insert(mu.to_vec());
        });
    });
    out
}
