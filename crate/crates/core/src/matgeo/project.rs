use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::blocks::{cayley_conjugator, jordan_block};
use super::factor::factor;
use super::matrix::{q, row_reduce, Rationals, QMatrix, Q};
use super::spectral::{min_shifted_rank_of, ShiftWitness};
use super::{in_rank_variety, standard_gram, ClassicalMatrix};
use crate::error::{Error, Result};
use crate::weights::Series;

/// Compression of `X` to the span of `w`.
///
/// For `so`/`sp` this is `pr_W ∘ X|_W` with the orthogonal projection, and the
/// result carries the restricted form. For `sl` the projection is along the
/// coordinate complement (standard basis vectors off the pivots of `w`),
/// followed by removing the scalar part so the result lies in `sl(W)`.
pub fn project_phi(x: &ClassicalMatrix, w: &[Vec<Q>]) -> Result<ClassicalMatrix> {
    let d = x.dim();
    let wm = QMatrix::from_columns(w)?;
    if wm.rows() != d {
        return Err(Error::Matrix(format!("basis vectors have length {} not {d}", wm.rows())));
    }
    let k = w.len();
    if wm.rank() < k {
        return Err(Error::Matrix("basis vectors are dependent".into()));
    }
    match x.gram() {
        Some(g) => {
            let wgw = &(&wm.transpose() * g) * &wm;
            let inv = wgw.inverse().ok_or(Error::DegenerateForm)?;
            let y = &(&(&inv * &wm.transpose()) * g) * &(x.entries() * &wm);
            ClassicalMatrix::new(x.series(), y, Some(wgw))
        }
        None => {
            let mut rows = wm.transpose().to_rows();
            let pivots = row_reduce(&Rationals, &mut rows).expect("rationals form a field");
            let mut basis: Vec<Vec<Q>> = w.to_vec();
            for j in (0..d).filter(|j| !pivots.contains(j)) {
                basis.push((0..d).map(|i| if i == j { Q::one() } else { Q::zero() }).collect());
            }
            let b = QMatrix::from_columns(&basis)?;
            let coords = &b.inverse().expect("pivot complement spans") * &(x.entries() * &wm);
            let y = coords.select(&(0..k).collect::<Vec<_>>(), &(0..k).collect::<Vec<_>>());
            let scalar = y.trace() / q(k.max(1) as i64);
            ClassicalMatrix::new(Series::Sl, y.shift(&scalar), None)
        }
    }
}

/// Extends `Y` on `V_n` to `X` on a space of dimension `target` whose
/// compression to the first `dim Y` coordinates is `Y`.
///
/// For `sl` the new coordinates carry the rational witness `λ` of `Y` and the
/// whole matrix is shifted back to trace zero, so the minimal shifted rank is
/// unchanged. An irrational witness cannot be kept: a rational block of size
/// `k` has `rank(Z − θ) ≥ k − k/deg θ > 0`. Then `λ` is the rational eigenvalue
/// of least shifted rank, or zero if there is none. For `so`/`sp` the extension is by zero on a split complement;
/// the shifted rank is kept when it is attained at zero. A nonzero witness
/// cannot be kept in general: `diag(1, −1)` in `sp(2)` has shifted rank 1 but
/// every element of `sp(4)` extending it with shifted rank 1 would need an
/// eigenvalue of multiplicity 3 paired with its negative.
pub fn lift_rank_variety(y: &ClassicalMatrix, target: usize) -> Result<ClassicalMatrix> {
    let dy = y.dim();
    if target < dy {
        return Err(Error::Precondition(format!("target dimension {target} below {dy}")));
    }
    let k = target - dy;
    match y.series() {
        Series::Sl => {
            let lambda = match y.min_shifted_rank()?.1 {
                ShiftWitness::Scalar(c) => c,
                ShiftWitness::Root(_) => best_rational_eigenvalue(y.entries())?,
            };
            let pad = QMatrix::identity(k).scale(&lambda);
            let x = QMatrix::block_diag(&[y.entries(), &pad]);
            let shift = &lambda * q(k as i64) / q(target.max(1) as i64);
            ClassicalMatrix::new(Series::Sl, x.shift(&shift), None)
        }
        s => {
            let pad_gram = standard_gram(s, k)?.expect("form for so/sp");
            let x = QMatrix::block_diag(&[y.entries(), &QMatrix::zeros(k, k)]);
            let g = QMatrix::block_diag(&[y.gram().expect("form for so/sp"), &pad_gram]);
            ClassicalMatrix::new(s, x, Some(g))
        }
    }
}

fn best_rational_eigenvalue(y: &QMatrix) -> Result<Q> {
    let mut best: Option<(usize, Q)> = None;
    for (f, _) in factor(&y.charpoly())? {
        if f.degree() == 1 {
            let c = -f.coeffs()[0].clone();
            let rank = y.shift(&c).rank();
            if best.as_ref().map_or(true, |(r, _)| rank < *r) {
                best = Some((rank, c));
            }
        }
    }
    Ok(best.map_or_else(Q::zero, |(_, c)| c))
}

/// Outcome of the randomized test for the `sp` to `gl(V^iso)` projection.
#[derive(Clone, Debug)]
pub struct MembershipReport {
    pub in_variety: bool,
    pub samples: usize,
    /// Largest shifted rank seen among projections.
    pub max_projected_rank: usize,
    /// A conjugator whose projection leaves the target variety.
    pub violation: Option<(QMatrix, QMatrix)>,
}

impl MembershipReport {
    /// Members must never project outside; non-members have no requirement.
    pub fn consistent(&self) -> bool {
        !self.in_variety || self.violation.is_none()
    }

    pub fn summary(&self) -> String {
        match (&self.violation, self.in_variety) {
            (None, true) => format!("all {} sampled projections stay in the variety", self.samples),
            (None, false) => format!("no witness found in {} samples", self.samples),
            (Some((_, a)), _) => format!("projection {a} leaves the variety"),
        }
    }
}

/// Projects sampled conjugates of `X ∈ sp(V)` (standard form) onto
/// `gl(V^iso)`, `V^iso` the span of the first half of the basis, and compares
/// their shifted ranks with `r`.
pub fn sp_gl_membership_test(x: &ClassicalMatrix, r: usize, samples: usize, seed: u64) -> Result<MembershipReport> {
    let d = x.dim();
    if x.series() != Series::Sp || x.gram() != standard_gram(Series::Sp, d)?.as_ref() {
        return Err(Error::Precondition("needs sp with the standard form".into()));
    }
    if 2 * r > d {
        return Err(Error::Precondition(format!("level {r} exceeds half of {d}")));
    }
    let m = d / 2;
    let half: Vec<usize> = (0..m).collect();
    let in_variety = in_rank_variety(x, r)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = MembershipReport {
        in_variety,
        samples: 0,
        max_projected_rank: 0,
        violation: None,
    };
    for _ in 0..samples {
        let g = cayley_conjugator(x, &mut rng);
        let y = &(&g * x.entries()) * &g.inverse().expect("group element");
        let a = y.select(&half, &half);
        let rank = min_shifted_rank_of(&a)?.0;
        report.samples += 1;
        report.max_projected_rank = report.max_projected_rank.max(rank);
        if rank > r {
            report.violation = Some((g, a));
            break;
        }
    }
    Ok(report)
}

/// Blocks of the displayed normal forms used in the density argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DensityBlock {
    /// `diag(t, 0)`, `t ≠ 0`; paired with its negative for `so`/`sp`.
    A(Q),
    /// The nilpotent 2-block; paired for `so`/`sp`.
    B,
    /// A zero line for `sl`, a zero hyperbolic pair for `so`/`sp`.
    C,
}

#[derive(Clone, Debug)]
pub struct DensityReport {
    pub x: ClassicalMatrix,
    /// Basis of `W`.
    pub w: Vec<Vec<Q>>,
    /// One 2×2 conjugator per `A`/`B` block, acting on its `gl(2)` part.
    pub conjugators: Vec<QMatrix>,
    pub projected: ClassicalMatrix,
    pub target: QMatrix,
    pub verified: bool,
}

/// Conjugates each `A(t)`/`B` block so its top left entry is the target value
/// and checks that the projection to `W` is the target diagonal matrix.
/// Targets for `sl` must sum to zero.
pub fn density_witness(series: Series, blocks: &[DensityBlock], targets: &[Q]) -> Result<DensityReport> {
    let active = blocks.iter().filter(|b| **b != DensityBlock::C).count();
    if targets.len() != active {
        return Err(Error::Precondition(format!("{} targets for {active} blocks", targets.len())));
    }
    if series == Series::Sl && !targets.iter().sum::<Q>().is_zero() {
        return Err(Error::Precondition("sl targets must sum to zero".into()));
    }
    let mut targets_left = targets.iter();
    let mut plain = Vec::new();
    let mut conjugated = Vec::new();
    let mut conjugators = Vec::new();
    let mut diag_target = Vec::new();
    // (first coordinate of the block, is paired)
    let mut w_coords = Vec::new();
    for b in blocks {
        let f = match b {
            DensityBlock::A(t) if t.is_zero() => {
                return Err(Error::Precondition("A(t) needs t ≠ 0".into()));
            }
            DensityBlock::A(t) => QMatrix::diagonal(&[t.clone(), Q::zero()]),
            DensityBlock::B => jordan_block(&Q::zero(), 2),
            DensityBlock::C => QMatrix::zeros(1, 1),
        };
        let (conj_f, g) = match b {
            DensityBlock::C => (f.clone(), None),
            _ => {
                let lambda = targets_left.next().expect("counted").clone();
                let g = match b {
                    DensityBlock::A(t) => QMatrix::from_rows(vec![
                        vec![Q::one(), Q::one()],
                        vec![t - &lambda, -lambda.clone()],
                    ])?,
                    _ => QMatrix::from_rows(vec![vec![Q::one(), Q::zero()], vec![-lambda.clone(), Q::one()]])?,
                };
                let conj = &(&g * &f) * &g.inverse().expect("nonzero determinant");
                diag_target.push(lambda);
                (conj, Some(g))
            }
        };
        let size = if series == Series::Sl { f.rows() } else { 2 * f.rows() };
        w_coords.push((plain.iter().map(|m: &QMatrix| m.rows()).sum::<usize>(), size, b.clone()));
        match series {
            Series::Sl => {
                plain.push(f);
                conjugated.push(conj_f);
            }
            _ => {
                plain.push(QMatrix::block_diag(&[&f, &-f.transpose()]));
                conjugated.push(QMatrix::block_diag(&[&conj_f, &-conj_f.transpose()]));
            }
        }
        if b == &DensityBlock::C {
            diag_target.push(Q::zero());
        }
        conjugators.extend(g);
    }
    let d: usize = plain.iter().map(|m| m.rows()).sum();
    let grams: Vec<QMatrix> = plain
        .iter()
        .map(|m| standard_gram(series, m.rows()).map(|g| g.unwrap_or_else(|| QMatrix::zeros(0, 0))))
        .collect::<Result<_>>()?;
    let gram = (series != Series::Sl).then(|| QMatrix::block_diag(&grams.iter().collect::<Vec<_>>()));
    let build = |parts: &[QMatrix]| -> Result<ClassicalMatrix> {
        let m = QMatrix::block_diag(&parts.iter().collect::<Vec<_>>());
        match series {
            Series::Sl => {
                let shift = m.trace() / q(d.max(1) as i64);
                ClassicalMatrix::new(series, m.shift(&shift), None)
            }
            _ => ClassicalMatrix::new(series, m, gram.clone()),
        }
    };
    let x = build(&plain)?;
    let y = build(&conjugated)?;
    let unit = |i: usize| -> Vec<Q> { (0..d).map(|j| if i == j { Q::one() } else { Q::zero() }).collect() };
    let mut w = Vec::new();
    let mut target_diag = Vec::new();
    for ((start, size, _), value) in w_coords.iter().zip(&diag_target) {
        match series {
            Series::Sl => {
                w.push(unit(*start));
                target_diag.push(value.clone());
            }
            _ => {
                // first coordinate of each half of the pair block
                w.push(unit(*start));
                w.push(unit(start + size / 2));
                target_diag.push(value.clone());
                target_diag.push(-value.clone());
            }
        }
    }
    let projected = project_phi(&y, &w)?;
    let target = QMatrix::diagonal(&target_diag);
    let verified = *projected.entries() == target;
    Ok(DensityReport {
        x,
        w,
        conjugators,
        projected,
        target,
        verified,
    })
}
