use num_traits::Zero;

use super::blocks::{companion, gl_pair, nilpotent};
use super::matrix::{q, QMatrix, Q};
use super::poly::QPoly;
use super::spectral::{partition_rank, SpectralData};
use super::ClassicalMatrix;
use crate::error::{Error, Result};
use crate::weights::Series;

/// Parts at most 2 over the eigenvalue zero, trivial partitions elsewhere.
pub fn is_rank_reduced(x: &ClassicalMatrix) -> Result<bool> {
    Ok(reduced(&x.spectral_data()?))
}

fn reduced(sd: &SpectralData) -> bool {
    sd.factors.iter().all(|(p, pi)| {
        let cap = if *p == QPoly::t() { 2 } else { 1 };
        pi.iter().all(|&b| b <= cap)
    })
}

/// Replaces the nilpotent part over zero by rank-many 2-blocks and drops the
/// nilpotent part elsewhere, keeping the semisimple spectrum.
///
/// The result is a canonical representative of its orbit in coordinates
/// where it is block diagonal, so its Gram matrix may differ from the input's.
/// The two forms are isometric over the algebraic closure, not always over
/// the rationals.
pub fn rank_reduce(x: &ClassicalMatrix) -> Result<ClassicalMatrix> {
    let sd = x.spectral_data()?;
    let rank = sd.rank();
    let d = x.dim();
    if 2 * rank > d {
        return Err(Error::Precondition(format!("2·rank {rank} exceeds dimension {d}")));
    }
    if reduced(&sd) {
        return Ok(x.clone());
    }
    let zero = sd.zero_partition();
    let rn = partition_rank(&zero);
    let d0: usize = zero.iter().sum();
    let mut nil_type = vec![2; rn];
    nil_type.extend(std::iter::repeat(1).take(d0 - 2 * rn));
    let series = x.series();
    let mut parts = Vec::new();
    if d0 > 0 {
        parts.push(nilpotent(series, &nil_type)?);
    }
    match series {
        Series::Sl => {
            let mut blocks = Vec::new();
            for (p, pi) in &sd.factors {
                if *p == QPoly::t() {
                    continue;
                }
                let m: usize = pi.iter().sum();
                blocks.extend(std::iter::repeat(companion(p)).take(m));
            }
            let semisimple = QMatrix::block_diag(&blocks.iter().collect::<Vec<_>>());
            parts.push(ClassicalMatrix::new(Series::Sl, semisimple, None)?);
        }
        s => {
            let mut done: Vec<QPoly> = Vec::new();
            for (p, pi) in &sd.factors {
                if *p == QPoly::t() || done.contains(p) {
                    continue;
                }
                let m: usize = pi.iter().sum();
                let mirror = p.reflect();
                done.push(mirror.clone());
                let c = companion(p);
                let pairs = if mirror == *p { m / 2 } else { m };
                if pairs > 0 {
                    let f = QMatrix::block_diag(&vec![&c; pairs]);
                    parts.push(gl_pair(s, &f)?);
                }
                if mirror == *p && m % 2 == 1 {
                    parts.push(self_paired_block(s, &c)?);
                }
            }
        }
    }
    ClassicalMatrix::direct_sum(&parts.iter().collect::<Vec<_>>())
}

/// `M` with some nondegenerate form of the series that it preserves, found as
/// an invertible point of the linear space of such forms.
fn self_paired_block(series: Series, m: &QMatrix) -> Result<ClassicalMatrix> {
    let k = m.rows();
    let sign: i64 = if series == Series::So { 1 } else { -1 };
    // basis of (anti)symmetric k×k matrices
    let mut basis = Vec::new();
    for a in 0..k {
        for b in a..k {
            if a == b && sign == -1 {
                continue;
            }
            let mut e = QMatrix::zeros(k, k);
            e[(a, b)] = q(1);
            e[(b, a)] += q(if a == b { 0 } else { sign });
            basis.push(e);
        }
    }
    let images: Vec<Vec<Q>> = basis
        .iter()
        .map(|e| {
            let l = &(&m.transpose() * e) + &(e * m);
            (0..k).flat_map(|i| l.row(i).to_vec()).collect()
        })
        .collect();
    let system = QMatrix::from_columns(&images)?;
    let kernel = system.kernel();
    let combine = |coef: &[i64]| {
        kernel.iter().zip(coef).fold(QMatrix::zeros(k, k), |acc, (v, &c)| {
            let g = v
                .iter()
                .zip(&basis)
                .fold(QMatrix::zeros(k, k), |g, (x, e)| &g + &e.scale(x));
            &acc + &g.scale(&q(c))
        })
    };
    for attempt in 0..64i64 {
        let coef: Vec<i64> = (0..kernel.len() as i64).map(|i| 1 + (attempt * (i + 3) + i * i) % 7).collect();
        let g = combine(&coef);
        if !g.det().is_zero() {
            return ClassicalMatrix::new(series, m.clone(), Some(g));
        }
    }
    Err(Error::Matrix(format!("no invariant {series} form found for a self-paired block")))
}
