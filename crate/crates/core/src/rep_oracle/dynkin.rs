use num_rational::Ratio;

use super::RepOracle;
use crate::error::{Error, Result};
use crate::weights::{Algebra, Series, Weight};

/// Second-moment sum `Σ mult(μ)·|μ|²` of a module, scaled so that the
/// `sl` projection onto trace-zero weights stays integral.
fn moment(oracle: &RepOracle, w: &Weight) -> Result<i128> {
    let a = w.algebra();
    let chi = oracle.character_raw(a.series(), w.doubled())?;
    let len = a.coord_len() as i128;
    let mut total = 0i128;
    for (mu, &m) in chi.iter() {
        let q: i128 = match a.series() {
            Series::Sl => {
                let s: i128 = mu.iter().map(|&x| x as i128).sum();
                mu.iter().map(|&x| (len * x as i128 - s).pow(2)).sum()
            }
            _ => mu.iter().map(|&x| (x as i128).pow(2)).sum(),
        };
        total += m as i128 * q;
    }
    Ok(total)
}

/// Dynkin index of a (possibly reducible) module given by its simple
/// constituents, normalized so that the natural module has index one.
pub fn rep_dynkin_index(algebra: Algebra, decomposition: &[(Weight, u64)]) -> Result<Ratio<i128>> {
    let oracle = RepOracle::default();
    let mut num = 0i128;
    for (w, mult) in decomposition {
        if w.algebra() != algebra {
            return Err(Error::FamilyMismatch(algebra.series(), w.algebra().series()));
        }
        num += *mult as i128 * moment(&oracle, w)?;
    }
    let den = moment(&oracle, &algebra.natural_highest_weight())?;
    Ok(Ratio::new(num, den))
}

/// One embedding `child ⊂ parent`, given by the decomposition of the
/// parent's natural module over the child.
#[derive(Debug, Clone)]
pub struct EmbeddingStep {
    pub parent: Algebra,
    pub child: Algebra,
    pub decomposition: Vec<(Weight, u64)>,
}

impl EmbeddingStep {
    pub fn new(parent: Algebra, child: Algebra, decomposition: Vec<(Weight, u64)>) -> Result<Self> {
        if parent.series() != child.series() {
            return Err(Error::FamilyMismatch(parent.series(), child.series()));
        }
        let total: u128 = decomposition
            .iter()
            .map(|(w, m)| super::dim(w) * *m as u128)
            .sum();
        if total != parent.natural_dim() as u128 {
            return Err(Error::Precondition(format!(
                "constituents have total dimension {total}, natural module of {parent} has {}",
                parent.natural_dim()
            )));
        }
        Ok(EmbeddingStep {
            parent,
            child,
            decomposition,
        })
    }

    /// Diagonal embedding `child ⊂ parent` with the natural module equal to
    /// `copies` copies of the child's natural module plus trivial lines.
    pub fn diagonal(parent: Algebra, child: Algebra, copies: u64) -> Result<Self> {
        let used = copies as usize * child.natural_dim();
        let trivial = parent
            .natural_dim()
            .checked_sub(used)
            .ok_or_else(|| Error::Precondition(format!("{copies} copies of {child} exceed {parent}")))?;
        let mut dec = vec![(child.natural_highest_weight(), copies)];
        if trivial > 0 {
            dec.push((child.trivial_weight(), trivial as u64));
        }
        EmbeddingStep::new(parent, child, dec)
    }
}

/// Index of a chain of same-series embeddings, the product of the step indices.
pub fn embedding_dynkin_index(chain: &[EmbeddingStep]) -> Result<Ratio<i128>> {
    let mut acc = Ratio::from_integer(1);
    for (i, step) in chain.iter().enumerate() {
        if step.parent.series() != step.child.series() {
            return Err(Error::FamilyMismatch(step.parent.series(), step.child.series()));
        }
        if let Some(prev) = i.checked_sub(1).map(|j| &chain[j]) {
            if prev.child != step.parent {
                return Err(Error::Precondition(format!(
                    "chain breaks between {} and {}",
                    prev.child, step.parent
                )));
            }
        }
        acc *= rep_dynkin_index(step.child, &step.decomposition)?;
    }
    Ok(acc)
}
