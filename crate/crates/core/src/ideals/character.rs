use std::collections::BTreeSet;

use super::{saturated_cls, PrimeIdeal};
use crate::cls::{level_set, LevelSet, LevelShape};
use crate::error::Result;
use crate::weights::{dominant_raw, rho_raw, Algebra, Series};

/// The `W_n`-saturated Zariski closure of `ρ_n + (level set)`.
///
/// A closure with `free` unconstrained coordinates is determined by `free`
/// and the classes of `μ + ρ` over the constrained slice `μ`: a point lies in
/// it iff some `len - free` of its coordinates form one of the classes up to
/// the Weyl group of the slice. With `free = 0` the classes are the central
/// characters of the members.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharacterLevelSet {
    pub algebra: Algebra,
    pub free: usize,
    /// Canonical doubled representatives, sorted.
    pub classes: BTreeSet<Vec<i64>>,
}

/// Canonical class of a slice `ξ = μ + ρ` of length `k` inside a closure with `free` free coordinates.
fn class_of(series: Series, free: usize, xi: &[i64]) -> Vec<i64> {
    match series {
        Series::Sl => dominant_raw(Series::Sl, xi),
        Series::Sp => dominant_raw(Series::Sp, xi),
        // a free coordinate absorbs the parity of sign changes
        Series::So if free > 0 => dominant_raw(Series::Sp, xi),
        Series::So => dominant_raw(Series::So, xi),
    }
}

/// Central-character closure of a single level set.
pub fn closure_characters(level: &LevelSet) -> CharacterLevelSet {
    let algebra = level.algebra();
    let series = algebra.series();
    let (free, slice): (usize, Vec<Vec<i64>>) = match level.shape() {
        LevelShape::Explicit(set) => (0, set.iter().cloned().collect()),
        LevelShape::Prefix {
            left, right, tail, ..
        } => (left + right, tail.iter().cloned().collect()),
    };
    let k = algebra.coord_len() - free;
    let rho = rho_raw(series, k);
    let classes = slice
        .iter()
        .map(|mu| {
            let xi: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
            class_of(series, free, &xi)
        })
        .collect();
    CharacterLevelSet {
        algebra,
        free,
        classes,
    }
}

/// Closures of every component of `Q(I)` at rank `n`, deduplicated.
///
/// For `sl` all components `cls(v', v'', Q_f)` of one prime give the same
/// closure, so a prime yields a single entry.
pub fn central_character_level_set(ideal: &PrimeIdeal, n: usize) -> Result<BTreeSet<CharacterLevelSet>> {
    saturated_cls(ideal)
        .components()
        .iter()
        .map(|c| Ok(closure_characters(&level_set(c, n)?)))
        .collect()
}
