//! Canonical blocks, Jordan-type samples and random form-preserving conjugators.

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;

use super::matrix::{q, QMatrix, Q};
use super::poly::QPoly;
use super::spectral::{format_partition, Partition};
use super::{standard_gram, ClassicalMatrix};
use crate::error::{Error, Result};
use crate::weights::Series;

/// Single Jordan block `λ·Id + N`.
pub fn jordan_block(lambda: &Q, n: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = lambda.clone();
        if i + 1 < n {
            m[(i, i + 1)] = Q::one();
        }
    }
    m
}

/// Companion matrix of a monic polynomial.
pub fn companion(p: &QPoly) -> QMatrix {
    let p = p.monic();
    let n = p.degree();
    let mut m = QMatrix::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = Q::one();
    }
    for i in 0..n {
        m[(i, n - 1)] = -p.coeffs()[i].clone();
    }
    m
}

/// A nonzero eigenvalue class used by samples.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Eigen {
    Rational(Q),
    /// The roots of an irreducible polynomial of degree at least two.
    Root(QPoly),
}

impl Eigen {
    fn degree(&self) -> usize {
        match self {
            Eigen::Rational(_) => 1,
            Eigen::Root(p) => p.degree(),
        }
    }

    /// Blocks of sizes `pi` at this eigenvalue class.
    fn block(&self, pi: &[usize]) -> QMatrix {
        let blocks: Vec<QMatrix> = pi
            .iter()
            .map(|&b| match self {
                Eigen::Rational(x) => jordan_block(x, b),
                Eigen::Root(p) => companion(&p.pow(b as u32)),
            })
            .collect();
        QMatrix::block_diag(&blocks.iter().collect::<Vec<_>>())
    }
}

impl fmt::Display for Eigen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigen::Rational(x) => write!(f, "{x}"),
            Eigen::Root(p) => write!(f, "roots of {p}"),
        }
    }
}

/// Jordan type of a sample: the partition at the base eigenvalue and the
/// partitions at the other eigenvalue classes.
///
/// For `so`/`sp` each entry of `others` stands for the pair `±μ` and is
/// realised as `diag(F, −Fᵀ)`. For `sl` the base eigenvalue is zero before
/// the built matrix is shifted by a scalar to trace zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JordanType {
    pub series: Series,
    pub base: Partition,
    pub others: Vec<(Eigen, Partition)>,
}

impl JordanType {
    fn copies(&self) -> usize {
        if self.series == Series::Sl {
            1
        } else {
            2
        }
    }

    pub fn dim(&self) -> usize {
        self.base.iter().sum::<usize>()
            + self.copies() * self.others.iter().map(|(e, pi)| e.degree() * pi.iter().sum::<usize>()).sum::<usize>()
    }

    /// `rank(X − λ)` at the base eigenvalue `λ`.
    pub fn base_rank(&self) -> usize {
        self.dim() - self.base.len()
    }

    pub fn build(&self) -> Result<ClassicalMatrix> {
        match self.series {
            Series::Sl => {
                let mut blocks: Vec<QMatrix> = self.base.iter().map(|&b| jordan_block(&Q::zero(), b)).collect();
                blocks.extend(self.others.iter().map(|(e, pi)| e.block(pi)));
                let m = QMatrix::block_diag(&blocks.iter().collect::<Vec<_>>());
                let shift = m.trace() / q(m.rows().max(1) as i64);
                ClassicalMatrix::new(Series::Sl, m.shift(&shift), None)
            }
            s => {
                let mut parts = nilpotent_parts(s, &self.base)?;
                for (e, pi) in &self.others {
                    parts.push(gl_pair(s, &e.block(pi))?);
                }
                ClassicalMatrix::direct_sum(&parts.iter().collect::<Vec<_>>())
            }
        }
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} base {}", self.series, format_partition(&self.base))?;
        for (e, pi) in &self.others {
            let sign = if self.series == Series::Sl { "" } else { "±" };
            write!(f, " {sign}[{e}] {}", format_partition(pi))?;
        }
        Ok(())
    }
}

/// `diag(F, −Fᵀ)` with the default form of dimension `2·dim F`.
pub fn gl_pair(series: Series, f: &QMatrix) -> Result<ClassicalMatrix> {
    let entries = QMatrix::block_diag(&[f, &-f.transpose()]);
    ClassicalMatrix::standard(series, entries)
}

/// Principal nilpotent of `so(2k+1)` for the antidiagonal form.
fn so_odd_block(b: usize) -> Result<ClassicalMatrix> {
    let k = b / 2;
    let mut n = QMatrix::zeros(b, b);
    let mut g = QMatrix::zeros(b, b);
    for a in 0..b {
        g[(a, b - 1 - a)] = Q::one();
        if a + 1 < b {
            n[(a, a + 1)] = q(if a < k { 1 } else { -1 });
        }
    }
    ClassicalMatrix::new(Series::So, n, Some(g))
}

/// Principal nilpotent of `sp(2k)` for the antidiagonal form with signs `(1^k, (−1)^k)`.
fn sp_even_block(b: usize) -> Result<ClassicalMatrix> {
    let k = b / 2;
    let mut n = QMatrix::zeros(b, b);
    let mut g = QMatrix::zeros(b, b);
    for a in 0..b {
        g[(a, b - 1 - a)] = q(if a < k { 1 } else { -1 });
        if a + 1 < b {
            n[(a, a + 1)] = q(if a < k { 1 } else { -1 });
        }
    }
    ClassicalMatrix::new(Series::Sp, n, Some(g))
}

/// Whether `pi` is the Jordan type of a nilpotent in the series.
pub fn admissible(series: Series, pi: &[usize]) -> bool {
    let paired_parity = match series {
        Series::Sl => return true,
        Series::So => 0,
        Series::Sp => 1,
    };
    pi.iter()
        .filter(|&&b| b % 2 == paired_parity)
        .fold(std::collections::BTreeMap::new(), |mut m, &b| {
            *m.entry(b).or_insert(0usize) += 1;
            m
        })
        .values()
        .all(|c| c % 2 == 0)
}

/// Nilpotent with Jordan type `pi` as a list of orthogonal blocks.
fn nilpotent_parts(series: Series, pi: &[usize]) -> Result<Vec<ClassicalMatrix>> {
    if !admissible(series, pi) {
        return Err(Error::Precondition(format!(
            "{} is not a {series} nilpotent type",
            format_partition(pi)
        )));
    }
    let mut out = Vec::new();
    let mut rest: Vec<usize> = pi.to_vec();
    rest.sort_unstable_by(|a, b| b.cmp(a));
    let mut i = 0;
    while i < rest.len() {
        let b = rest[i];
        let single = match series {
            Series::So => b % 2 == 1,
            _ => b % 2 == 0,
        };
        if single {
            out.push(if series == Series::So { so_odd_block(b)? } else { sp_even_block(b)? });
            i += 1;
        } else {
            out.push(gl_pair(series, &jordan_block(&Q::zero(), b))?);
            i += 2;
        }
    }
    Ok(out)
}

/// Nilpotent element of the given type, orthogonal sum of canonical blocks.
pub fn nilpotent(series: Series, pi: &[usize]) -> Result<ClassicalMatrix> {
    match series {
        Series::Sl => {
            let blocks: Vec<QMatrix> = pi.iter().map(|&b| jordan_block(&Q::zero(), b)).collect();
            ClassicalMatrix::new(Series::Sl, QMatrix::block_diag(&blocks.iter().collect::<Vec<_>>()), None)
        }
        s => ClassicalMatrix::direct_sum(&nilpotent_parts(s, pi)?.iter().collect::<Vec<_>>()),
    }
}

/// All partitions of `n`, non-increasing, largest first part first.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, cur: &mut Partition, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for b in (1..=n.min(max)).rev() {
            cur.push(b);
            go(n - b, b, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Multisets of nonempty partitions with the given total size, each listed
/// in a fixed order so eigenvalue labels can be assigned canonically.
fn partition_multisets(total: usize) -> Vec<Vec<Partition>> {
    let items: Vec<Partition> = (1..=total).flat_map(partitions).collect();
    fn go(items: &[Partition], start: usize, left: usize, cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            let size: usize = items[i].iter().sum();
            if size <= left {
                cur.push(items[i].clone());
                go(items, i, left - size, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&items, 0, total, &mut Vec::new(), &mut out);
    out
}

/// Irrational eigenvalue classes mixed into samples: a real pair, an
/// imaginary pair, and for `so`/`sp` a class not closed under negation.
pub fn sample_roots(series: Series) -> Vec<QPoly> {
    match series {
        Series::Sl => vec![QPoly::from_ints(&[-2, 0, 1]), QPoly::from_ints(&[1, 0, 1])],
        _ => vec![QPoly::from_ints(&[-2, 0, 1]), QPoly::from_ints(&[-1, 1, 1])],
    }
}

/// Every Jordan type of dimension `d` with base rank at most `max_rank`.
/// Other eigenvalue classes get the labels `1, 2, …`; each polynomial in
/// `roots` additionally appears as one irrational class in its own samples.
pub fn jordan_type_samples(series: Series, d: usize, max_rank: usize, roots: &[QPoly]) -> Vec<JordanType> {
    let copies = if series == Series::Sl { 1 } else { 2 };
    let mut irrational: Vec<Option<(Eigen, Partition)>> = vec![None];
    for p in roots {
        for k in 1..=d {
            if copies * p.degree() * k > d {
                break;
            }
            irrational.extend(partitions(k).into_iter().map(|pi| Some((Eigen::Root(p.clone()), pi))));
        }
    }
    let mut out = Vec::new();
    for irr in irrational {
        let irr_dim = irr.as_ref().map_or(0, |(e, pi)| copies * e.degree() * pi.iter().sum::<usize>());
        let left = d - irr_dim;
        let min_base = usize::from(series == Series::Sl);
        for d0 in min_base..=left {
            if (left - d0) % copies != 0 {
                continue;
            }
            for base in partitions(d0) {
                if !admissible(series, &base) {
                    continue;
                }
                for multiset in partition_multisets((left - d0) / copies) {
                    let mut others: Vec<(Eigen, Partition)> = multiset
                        .into_iter()
                        .enumerate()
                        .map(|(i, pi)| (Eigen::Rational(q(i as i64 + 1)), pi))
                        .collect();
                    others.extend(irr.clone());
                    let t = JordanType {
                        series,
                        base: base.clone(),
                        others,
                    };
                    if t.base_rank() <= max_rank {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

/// A member of the regular stratum of level `r`: semisimple of rank `r`, or
/// for odd `r` in `sp` semisimple of rank `r − 1` plus one nilpotent 2-block.
/// The `sl` element is shifted to trace zero, so its rank is attained at that shift.
pub fn regular_element(series: Series, r: usize, d: usize) -> Result<ClassicalMatrix> {
    if r >= d {
        return Err(Error::Precondition(format!("level {r} needs r < {d}")));
    }
    match series {
        Series::Sl => {
            let diag: Vec<Q> = (0..d).map(|i| if i < r { q(i as i64 + 1) } else { Q::zero() }).collect();
            let m = QMatrix::diagonal(&diag);
            let shift = m.trace() / q(d as i64);
            ClassicalMatrix::new(Series::Sl, m.shift(&shift), None)
        }
        Series::So if r % 2 == 1 => Err(Error::Precondition(format!(
            "rank {r} is odd but every element of so has even rank"
        ))),
        s => {
            let m = d / 2;
            let pairs = r / 2;
            let mut f = QMatrix::zeros(m, m);
            for i in 0..pairs {
                f[(i, i)] = q(i as i64 + 1);
            }
            let mut x = QMatrix::block_diag(&[&f, &-f.transpose()]);
            if d % 2 == 1 {
                x = QMatrix::block_diag(&[&x, &QMatrix::zeros(1, 1)]);
            }
            if r % 2 == 1 {
                // X f_m = e_m on a coordinate pair untouched by the semisimple part
                x[(m - 1, 2 * m - 1)] = Q::one();
            }
            ClassicalMatrix::new(s, x, standard_gram(s, d)?)
        }
    }
}

/// Random element of the group preserving the form of `x`: a Cayley transform
/// `(I − A)⁻¹(I + A)` of a small integer element `A` of the algebra, or a
/// random invertible integer matrix for `sl`.
pub fn cayley_conjugator<R: Rng>(x: &ClassicalMatrix, rng: &mut R) -> QMatrix {
    let d = x.dim();
    loop {
        let mut s = QMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                s[(i, j)] = q(rng.gen_range(-2..=2));
            }
        }
        let g = match x.gram() {
            None => s,
            Some(gram) => {
                let sym = match x.series() {
                    Series::So => &s - &s.transpose(),
                    _ => &s + &s.transpose(),
                };
                let a = &gram.inverse().expect("validated form") * &sym;
                let Some(inv) = a.shift(&Q::one()).inverse() else {
                    continue;
                };
                // (I − A)⁻¹ = −(A − I)⁻¹
                &(-inv) * &(&QMatrix::identity(d) + &a)
            }
        };
        if !g.det().is_zero() {
            return g;
        }
    }
}

/// `g·X·g⁻¹` with the form of `x`.
pub fn conjugate(x: &ClassicalMatrix, g: &QMatrix) -> Result<ClassicalMatrix> {
    let inv = g.inverse().ok_or_else(|| Error::Matrix("conjugator is singular".into()))?;
    x.with_entries(&(g * x.entries()) * &inv)
}
