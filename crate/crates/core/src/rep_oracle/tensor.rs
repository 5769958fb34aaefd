use std::collections::BTreeMap;

use super::{dim_raw, RepOracle};
use crate::error::{Error, Result};
use crate::weights::{dominant_raw, reflect_to_dominant, rho_raw, Series};

/// Klimyk's rule: every weight `ν` of the smaller factor contributes
/// `sign(w)` at `w(ν + λ + ρ) - ρ`, dropping `ν + λ + ρ` on a wall.
pub(super) fn klimyk(
    oracle: &RepOracle,
    series: Series,
    l1: &[i64],
    l2: &[i64],
) -> Result<BTreeMap<Vec<i64>, u64>> {
    let (big, small) = if dim_raw(series, l1) >= dim_raw(series, l2) {
        (l1, l2)
    } else {
        (l2, l1)
    };
    let rho = rho_raw(series, big.len());
    let chi = oracle.character_raw(series, small)?;
    let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (nu, &m) in chi.iter() {
        let xi: Vec<i64> = nu
            .iter()
            .zip(big)
            .zip(&rho)
            .map(|((a, b), c)| a + b + c)
            .collect();
        let Some((image, sign)) = reflect_to_dominant(series, &xi) else {
            continue;
        };
        let hw: Vec<i64> = image.iter().zip(&rho).map(|(a, b)| a - b).collect();
        *acc.entry(dominant_raw(series, &hw)).or_insert(0) += sign * m as i64;
    }
    let mut out = BTreeMap::new();
    for (k, v) in acc {
        if v < 0 {
            return Err(Error::Precondition(format!(
                "negative Klimyk coefficient at {k:?}"
            )));
        }
        if v > 0 {
            out.insert(k, v as u64);
        }
    }
    Ok(out)
}
