//! Brute-force finite-dimensional representation theory.
//!
//! Everything here works on formal characters: Weyl's dimension formula,
//! Freudenthal's multiplicity recursion, Klimyk's tensor product rule and
//! restriction to the next-lower algebra of the series. The c.l.s. layer uses
//! these routines as an oracle, so they avoid any shortcut that the
//! combinatorial layer relies on.

mod branch;
mod character;
mod dynkin;
mod tensor;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::weights::{rho_raw, Algebra, Series, Weight};

pub use branch::{BranchingResult, InterlacingBranch};
pub use character::FormalCharacter;
pub use dynkin::{embedding_dynkin_index, rep_dynkin_index, EmbeddingStep};

/// Default bound on the dimension of any module the oracle will expand.
pub const DEFAULT_DIM_BOUND: u128 = 200_000;

/// Dimension of the simple module with highest weight `w`.
pub fn dim(w: &Weight) -> u128 {
    dim_raw(w.algebra().series(), w.doubled())
}

pub(crate) fn dim_raw(series: Series, lambda: &[i64]) -> u128 {
    let len = lambda.len();
    let rho = rho_raw(series, len);
    let shifted: Vec<i64> = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for root in crate::weights::positive_roots_raw(series, len) {
        num *= crate::weights::inner(&shifted, &root);
        den *= crate::weights::inner(&rho, &root);
    }
    (num / den).to_u128().expect("dimension is a positive integer")
}

/// Character computations with a dimension bound and a shared memo table.
///
/// The memo is behind a mutex so one oracle can serve concurrent callers.
#[derive(Debug)]
pub struct RepOracle {
    bound: u128,
    memo: Mutex<HashMap<(Series, Vec<i64>), Arc<BTreeMap<Vec<i64>, u64>>>>,
}

impl Default for RepOracle {
    fn default() -> Self {
        RepOracle::with_bound(DEFAULT_DIM_BOUND)
    }
}

impl RepOracle {
    pub fn with_bound(bound: u128) -> Self {
        RepOracle {
            bound,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn bound(&self) -> u128 {
        self.bound
    }

    fn check_bound(&self, dim: u128) -> Result<()> {
        if dim > self.bound {
            Err(Error::BoundExceeded {
                dim,
                bound: self.bound,
            })
        } else {
            Ok(())
        }
    }

    /// Full weight multiplicities of the simple module with highest weight `w`.
    pub fn weight_multiplicities(&self, w: &Weight) -> Result<FormalCharacter> {
        let terms = self.character_raw(w.algebra().series(), w.doubled())?;
        Ok(FormalCharacter::new(w.algebra(), (*terms).clone()))
    }

    /// Character of a dominant doubled tuple. For `sl` the tuple may carry any
    /// shift; the returned weights carry the same shift.
    pub(crate) fn character_raw(
        &self,
        series: Series,
        lambda: &[i64],
    ) -> Result<Arc<BTreeMap<Vec<i64>, u64>>> {
        let shift = if series == Series::Sl {
            *lambda.last().unwrap_or(&0)
        } else {
            0
        };
        let base: Vec<i64> = lambda.iter().map(|x| x - shift).collect();
        let key = (series, base.clone());
        let cached = self.memo.lock().expect("memo poisoned").get(&key).cloned();
        let chi = match cached {
            Some(c) => c,
            None => {
                self.check_bound(dim_raw(series, &base))?;
                let c = Arc::new(character::freudenthal(series, &base));
                self.memo
                    .lock()
                    .expect("memo poisoned")
                    .insert(key, Arc::clone(&c));
                c
            }
        };
        if shift == 0 {
            return Ok(chi);
        }
        Ok(Arc::new(
            chi.iter()
                .map(|(mu, &m)| (mu.iter().map(|x| x + shift).collect(), m))
                .collect(),
        ))
    }

    /// Decomposition of `w1 ⊗ w2` by Klimyk's rule.
    pub fn tensor_decompose(&self, w1: &Weight, w2: &Weight) -> Result<BTreeMap<Weight, u64>> {
        same_algebra(w1, w2)?;
        self.check_bound(dim(w1) * dim(w2))?;
        let a = w1.algebra();
        let raw = tensor::klimyk(self, a.series(), w1.doubled(), w2.doubled())?;
        Ok(wrap(a, raw))
    }

    /// Decomposition of `w1 ⊗ w2` by multiplying characters and peeling
    /// highest weights. Independent of [`RepOracle::tensor_decompose`].
    pub fn tensor_decompose_by_characters(
        &self,
        w1: &Weight,
        w2: &Weight,
    ) -> Result<BTreeMap<Weight, u64>> {
        same_algebra(w1, w2)?;
        self.check_bound(dim(w1) * dim(w2))?;
        let a = w1.algebra();
        let c1 = self.character_raw(a.series(), w1.doubled())?;
        let c2 = self.character_raw(a.series(), w2.doubled())?;
        let mut product: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for (x, &m) in c1.iter() {
            for (y, &n) in c2.iter() {
                let s: Vec<i64> = x.iter().zip(y).map(|(p, q)| p + q).collect();
                *product.entry(s).or_insert(0) += (m * n) as i64;
            }
        }
        let raw = self.peel(a.series(), product)?;
        Ok(wrap(a, raw))
    }

    /// Splits a Weyl-invariant multiset of weights into simple characters,
    /// lexicographically largest highest weight first.
    pub(crate) fn peel(
        &self,
        series: Series,
        mut chi: BTreeMap<Vec<i64>, i64>,
    ) -> Result<BTreeMap<Vec<i64>, u64>> {
        let mut out = BTreeMap::new();
        loop {
            chi.retain(|_, m| *m != 0);
            let Some((top, &mult)) = chi.iter().next_back() else {
                break;
            };
            let top = top.clone();
            if mult < 0 {
                return Err(Error::Precondition(format!(
                    "character is not effective at {top:?}"
                )));
            }
            let irr = self.character_raw(series, &top)?;
            for (mu, &m) in irr.iter() {
                *chi.entry(mu.clone()).or_insert(0) -= mult * m as i64;
            }
            let key = crate::weights::dominant_raw(series, &top);
            *out.entry(key).or_insert(0) += mult as u64;
        }
        Ok(out)
    }

    /// Restriction to the next-lower algebra of the series, by restricting
    /// the character and peeling.
    pub fn branch(&self, w: &Weight) -> Result<BranchingResult> {
        branch::branch_by_character(self, w)
    }

    /// Support of the iterated restriction of `w` down to rank `target`.
    pub fn branch_to(&self, w: &Weight, target: usize) -> Result<Vec<Weight>> {
        branch::branch_to_by_character(self, w, target)
    }
}

fn same_algebra(w1: &Weight, w2: &Weight) -> Result<()> {
    if w1.algebra() != w2.algebra() {
        return Err(Error::FamilyMismatch(
            w1.algebra().series(),
            w2.algebra().series(),
        ));
    }
    Ok(())
}

fn wrap(a: Algebra, raw: BTreeMap<Vec<i64>, u64>) -> BTreeMap<Weight, u64> {
    raw.into_iter()
        .map(|(k, m)| (Weight::from_canonical(a, k), m))
        .collect()
}

/// Convenience wrapper over a default oracle.
pub fn weight_multiplicities(w: &Weight) -> Result<FormalCharacter> {
    RepOracle::default().weight_multiplicities(w)
}

/// Convenience wrapper over a default oracle.
pub fn tensor_decompose(w1: &Weight, w2: &Weight) -> Result<BTreeMap<Weight, u64>> {
    RepOracle::default().tensor_decompose(w1, w2)
}

/// Convenience wrapper over a default oracle.
pub fn branch(w: &Weight) -> Result<BranchingResult> {
    RepOracle::default().branch(w)
}

/// Support of the iterated restriction, computed by interlacing patterns.
pub fn branch_to(w: &Weight, target: usize) -> Result<Vec<Weight>> {
    InterlacingBranch::new().branch_to(w, target)
}
