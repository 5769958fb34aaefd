//! Exact matrix geometry for the classical algebras: shifted-rank varieties,
//! Jordan invariants, rank-reduced forms, projections to subspaces and the
//! closure certificates for regular strata.
//!
//! All arithmetic is over the rationals. Eigenvalues outside the rationals are
//! handled through `Q[t]/(p)` for the irreducible factors `p` of the
//! characteristic polynomial, so every answer is exact.
//!
//! Forms are explicit. The default Grams pair coordinate `i` with `i + m`:
//! `[[0, I], [I, 0]]` (plus a trailing `1` in odd dimension) for `so` and
//! `[[0, I], [−I, 0]]` for `sp`. In these coordinates `diag(F, −Fᵀ)` lies in
//! the algebra for every square `F`, which is how most blocks are built.

mod blocks;
mod closure;
pub(crate) mod factor;
mod field;
mod matrix;
mod poly;
mod project;
mod reduce;
mod spectral;

pub use blocks::{
    cayley_conjugator, conjugate, jordan_type_samples, regular_element, sample_roots, Eigen, JordanType,
};
pub use closure::{closure_claim_check, ClosureCertificate, ClosureReport};
pub use factor::{factor, square_free};
pub use matrix::{parse_q, q, q_frac, QMatrix, Q};
pub use poly::QPoly;
pub use project::{
    density_witness, lift_rank_variety, project_phi, sp_gl_membership_test, DensityBlock,
    DensityReport, MembershipReport,
};
pub use reduce::{is_rank_reduced, rank_reduce};
pub use spectral::{
    closure_leq, format_partition, min_shifted_rank_by_kernels, min_shifted_rank_of,
    partition_rank, spectral_data_extension, spectral_data_of, OrbitInvariant, Partition,
    ShiftWitness, SpectralData,
};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::weights::Series;

/// An element of `sl(V)`, `so(V)` or `sp(V)` with its form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassicalMatrix {
    series: Series,
    entries: QMatrix,
    gram: Option<QMatrix>,
}

/// The default Gram matrix; `None` for `sl`.
pub fn standard_gram(series: Series, d: usize) -> Result<Option<QMatrix>> {
    let m = d / 2;
    let pairing = |sign: i64| {
        let mut g = QMatrix::zeros(d, d);
        for i in 0..m {
            g[(i, i + m)] = q(1);
            g[(i + m, i)] = q(sign);
        }
        g
    };
    match series {
        Series::Sl => Ok(None),
        Series::So => {
            let mut g = pairing(1);
            if d % 2 == 1 {
                g[(d - 1, d - 1)] = q(1);
            }
            Ok(Some(g))
        }
        Series::Sp if d % 2 == 0 => Ok(Some(pairing(-1))),
        Series::Sp => Err(Error::Matrix(format!("symplectic space of odd dimension {d}"))),
    }
}

impl ClassicalMatrix {
    /// Validates trace zero for `sl`, the form for `so`/`sp`.
    pub fn new(series: Series, entries: QMatrix, gram: Option<QMatrix>) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::Matrix("entries are not square".into()));
        }
        let d = entries.rows();
        match (series, &gram) {
            (Series::Sl, None) => {
                if !entries.trace().is_zero() {
                    return Err(Error::Matrix(format!("trace {} is not zero", entries.trace())));
                }
            }
            (Series::Sl, Some(_)) => return Err(Error::Matrix("sl carries no form".into())),
            (_, None) => return Err(Error::Matrix(format!("{series} needs a Gram matrix"))),
            (_, Some(g)) => {
                if g.rows() != d || g.cols() != d {
                    return Err(Error::Matrix("Gram matrix has the wrong size".into()));
                }
                let kind_ok = if series == Series::So { g.is_symmetric() } else { g.is_antisymmetric() };
                if !kind_ok {
                    return Err(Error::Matrix(format!("Gram matrix has the wrong symmetry for {series}")));
                }
                if g.det().is_zero() {
                    return Err(Error::DegenerateForm);
                }
                let lhs = &(&entries.transpose() * g) + &(g * &entries);
                if !lhs.is_zero() {
                    return Err(Error::Matrix(format!("entries do not preserve the {series} form")));
                }
            }
        }
        Ok(ClassicalMatrix { series, entries, gram })
    }

    /// Uses the default form of the series.
    pub fn standard(series: Series, entries: QMatrix) -> Result<Self> {
        let gram = standard_gram(series, entries.rows())?;
        Self::new(series, entries, gram)
    }

    pub fn zero(series: Series, d: usize) -> Result<Self> {
        Self::standard(series, QMatrix::zeros(d, d))
    }

    pub fn series(&self) -> Series {
        self.series
    }
    pub fn entries(&self) -> &QMatrix {
        &self.entries
    }
    pub fn gram(&self) -> Option<&QMatrix> {
        self.gram.as_ref()
    }
    pub fn dim(&self) -> usize {
        self.entries.rows()
    }
    pub fn rank(&self) -> usize {
        self.entries.rank()
    }

    /// Same form, new entries.
    pub fn with_entries(&self, entries: QMatrix) -> Result<Self> {
        Self::new(self.series, entries, self.gram.clone())
    }

    /// Orthogonal direct sum; forms are summed block-diagonally.
    pub fn direct_sum(parts: &[&ClassicalMatrix]) -> Result<Self> {
        let series = parts.first().map_or(Series::Sl, |p| p.series);
        if let Some(p) = parts.iter().find(|p| p.series != series) {
            return Err(Error::FamilyMismatch(series, p.series));
        }
        let entries = QMatrix::block_diag(&parts.iter().map(|p| &p.entries).collect::<Vec<_>>());
        let gram = match series {
            Series::Sl => None,
            _ => Some(QMatrix::block_diag(
                &parts.iter().map(|p| p.gram.as_ref().expect("validated form")).collect::<Vec<_>>(),
            )),
        };
        Self::new(series, entries, gram)
    }

    pub fn spectral_data(&self) -> Result<SpectralData> {
        spectral_data_of(&self.entries)
    }

    pub fn orbit_invariant(&self) -> Result<OrbitInvariant> {
        Ok(self.spectral_data()?.invariant())
    }

    pub fn min_shifted_rank(&self) -> Result<(usize, ShiftWitness)> {
        min_shifted_rank_of(&self.entries)
    }
}

pub fn spectral_data(x: &ClassicalMatrix) -> Result<SpectralData> {
    x.spectral_data()
}

pub fn min_shifted_rank(x: &ClassicalMatrix) -> Result<(usize, ShiftWitness)> {
    x.min_shifted_rank()
}

/// Membership in the shifted-rank variety of level `r`.
pub fn in_rank_variety(x: &ClassicalMatrix, r: usize) -> Result<bool> {
    Ok(x.min_shifted_rank()?.0 <= r)
}

#[cfg(test)]
mod tests;
