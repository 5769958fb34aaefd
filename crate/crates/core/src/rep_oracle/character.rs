use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::weights::{self, inner, positive_roots_raw, rho_raw, Algebra, Series};

/// Weight multiplicities of a finite-dimensional module, keyed by doubled
/// epsilon-coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalCharacter {
    algebra: Algebra,
    terms: BTreeMap<Vec<i64>, u64>,
}

impl FormalCharacter {
    pub(crate) fn new(algebra: Algebra, terms: BTreeMap<Vec<i64>, u64>) -> Self {
        FormalCharacter { algebra, terms }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, u64> {
        &self.terms
    }

    /// Multiplicity of a doubled weight (zero when absent).
    pub fn multiplicity(&self, doubled: &[i64]) -> u64 {
        self.terms.get(doubled).copied().unwrap_or(0)
    }

    /// Sum of all multiplicities.
    pub fn mass(&self) -> u64 {
        self.terms.values().sum()
    }
}

/// Dominant representative without the `sl` shift normalization.
fn dominant_unshifted(series: Series, c: &[i64]) -> Vec<i64> {
    if series == Series::Sl {
        let mut s = c.to_vec();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    } else {
        weights::dominant_raw(series, c)
    }
}

/// Whether `d` (doubled) is a non-negative integer combination of simple roots.
fn in_positive_root_cone(series: Series, d: &[i64]) -> bool {
    if d.iter().any(|x| x % 2 != 0) {
        return false;
    }
    let d: Vec<i64> = d.iter().map(|x| x / 2).collect();
    let n = d.len();
    let mut partial = Vec::with_capacity(n);
    let mut s = 0;
    for x in &d {
        s += x;
        partial.push(s);
    }
    match series {
        Series::Sl => partial[..n - 1].iter().all(|&p| p >= 0) && partial[n - 1] == 0,
        Series::Sp => partial.iter().all(|&p| p >= 0) && partial[n - 1] % 2 == 0,
        Series::So => {
            if n < 2 {
                return d[0] == 0;
            }
            let upper_ok = partial[..n - 2].iter().all(|&p| p >= 0);
            let a = partial[n - 2] - d[n - 1];
            let b = partial[n - 2] + d[n - 1];
            upper_ok && a >= 0 && b >= 0 && a % 2 == 0
        }
    }
}

/// Freudenthal's recursion over dominant weights, expanded to the full
/// Weyl-invariant character.
pub(crate) fn freudenthal(series: Series, lambda: &[i64]) -> BTreeMap<Vec<i64>, u64> {
    let len = lambda.len();
    let roots = positive_roots_raw(series, len);
    let rho = rho_raw(series, len);
    let plus_rho = |v: &[i64]| -> Vec<i64> { v.iter().zip(&rho).map(|(a, b)| a + b).collect() };
    let norm = |v: &[i64]| inner(v, v);

    // dominant weights of the module
    let mut dominant = BTreeSet::new();
    let mut queue = VecDeque::new();
    dominant.insert(lambda.to_vec());
    queue.push_back(lambda.to_vec());
    while let Some(mu) = queue.pop_front() {
        for alpha in &roots {
            let next: Vec<i64> = mu.iter().zip(alpha).map(|(a, b)| a - b).collect();
            let next = dominant_unshifted(series, &next);
            if dominant.contains(&next) {
                continue;
            }
            let diff: Vec<i64> = lambda.iter().zip(&next).map(|(a, b)| a - b).collect();
            if in_positive_root_cone(series, &diff) {
                dominant.insert(next.clone());
                queue.push_back(next);
            }
        }
    }

    let top = norm(&plus_rho(lambda));
    let mut order: Vec<Vec<i64>> = dominant.into_iter().collect();
    order.sort_by_key(|mu| std::cmp::Reverse(norm(&plus_rho(mu))));

    let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for mu in order {
        if mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mut acc: i64 = 0;
        for alpha in &roots {
            let mut k = 1;
            loop {
                let up: Vec<i64> = mu.iter().zip(alpha).map(|(a, b)| a + k * b).collect();
                let key = dominant_unshifted(series, &up);
                let Some(&m) = mult.get(&key) else { break };
                acc += m as i64 * inner(&up, alpha);
                k += 1;
            }
        }
        let gap = top - norm(&plus_rho(&mu));
        debug_assert!(gap > 0 && (2 * acc) % gap == 0, "{mu:?}");
        let m = 2 * acc / gap;
        if m > 0 {
            mult.insert(mu, m as u64);
        }
    }

    let mut full = BTreeMap::new();
    for (mu, m) in mult {
        for w in weights::weyl_orbit_raw(series, &mu) {
            full.insert(w, m);
        }
    }
    full
}
