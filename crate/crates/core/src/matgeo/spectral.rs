use std::fmt;

use num_traits::Zero;

use super::factor::factor;
use super::field::NumberField;
use super::matrix::{QMatrix, Q};
use super::poly::QPoly;
use crate::error::{Error, Result};

/// Jordan block sizes, non-increasing.
pub type Partition = Vec<usize>;

/// Irreducible factors of the characteristic polynomial, each with the Jordan
/// partition shared by all of its roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpectralData {
    pub factors: Vec<(QPoly, Partition)>,
}

impl SpectralData {
    pub fn dimension(&self) -> usize {
        self.factors.iter().map(|(p, pi)| p.degree() * pi.iter().sum::<usize>()).sum()
    }

    /// Partition at the eigenvalue zero, empty when zero is not an eigenvalue.
    pub fn zero_partition(&self) -> Partition {
        self.partition_of(&QPoly::t())
    }

    pub fn partition_of(&self, p: &QPoly) -> Partition {
        self.factors
            .iter()
            .find(|(f, _)| f == p)
            .map(|(_, pi)| pi.clone())
            .unwrap_or_default()
    }

    pub fn is_semisimple(&self) -> bool {
        self.factors.iter().all(|(_, pi)| pi.iter().all(|&b| b == 1))
    }

    /// `rank X` read off the invariants.
    pub fn rank(&self) -> usize {
        self.factors
            .iter()
            .map(|(p, pi)| {
                let size: usize = pi.iter().sum();
                if *p == QPoly::t() {
                    size - pi.len()
                } else {
                    p.degree() * size
                }
            })
            .sum()
    }

    pub fn invariant(&self) -> OrbitInvariant {
        OrbitInvariant {
            spectrum: self
                .factors
                .iter()
                .map(|(p, pi)| (p.clone(), pi.iter().sum()))
                .collect(),
            partitions: self.factors.iter().map(|(_, pi)| pi.clone()).collect(),
        }
    }
}

impl fmt::Display for SpectralData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, pi)| format!("({p}): {}", format_partition(pi)))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

/// Conjugation-invariant summary: factors with per-root multiplicities and
/// the Jordan partitions in the same order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitInvariant {
    pub spectrum: Vec<(QPoly, usize)>,
    pub partitions: Vec<Partition>,
}

pub fn format_partition(pi: &[usize]) -> String {
    let parts: Vec<String> = pi.iter().map(|b| b.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Where the minimal shifted rank is attained.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ShiftWitness {
    /// A rational eigenvalue.
    Scalar(Q),
    /// Any root of an irreducible factor of degree at least two.
    Root(QPoly),
}

impl ShiftWitness {
    pub fn is_zero(&self) -> bool {
        matches!(self, ShiftWitness::Scalar(x) if x.is_zero())
    }

    /// The irreducible factor whose root is the witness.
    pub fn factor(&self) -> QPoly {
        match self {
            ShiftWitness::Scalar(x) => QPoly::linear_root(x),
            ShiftWitness::Root(p) => p.clone(),
        }
    }

    fn from_factor(p: &QPoly) -> Self {
        if p.degree() == 1 {
            ShiftWitness::Scalar(-p.coeffs()[0].clone())
        } else {
            ShiftWitness::Root(p.clone())
        }
    }
}

impl fmt::Display for ShiftWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShiftWitness::Scalar(x) => write!(f, "{x}"),
            ShiftWitness::Root(p) => write!(f, "root of {p}"),
        }
    }
}

fn require_square(x: &QMatrix) -> Result<()> {
    if x.is_square() {
        Ok(())
    } else {
        Err(Error::Matrix(format!("{}x{} is not square", x.rows(), x.cols())))
    }
}

/// Partition from the counts `c[k−1]` of blocks of size at least `k`.
fn partition_from_tails(tails: &[usize]) -> Partition {
    let mut pi = Vec::new();
    for (k, w) in tails.iter().enumerate() {
        let next = tails.get(k + 1).copied().unwrap_or(0);
        for _ in next..*w {
            pi.push(k + 1);
        }
    }
    pi.sort_unstable_by(|a, b| b.cmp(a));
    pi
}

/// Per-root Jordan partitions from ranks of powers of `p(X)`, scaled by `deg p`.
pub fn spectral_data_of(x: &QMatrix) -> Result<SpectralData> {
    require_square(x)?;
    let d = x.rows();
    let mut factors = Vec::new();
    for (p, mult) in factor(&x.charpoly())? {
        let px = x.eval_poly(&p);
        let mut ranks = vec![d];
        let mut pow = QMatrix::identity(d);
        for _ in 0..mult {
            pow = &pow * &px;
            ranks.push(pow.rank());
        }
        let tails: Vec<usize> = ranks.windows(2).map(|w| (w[0] - w[1]) / p.degree()).collect();
        factors.push((p, partition_from_tails(&tails)));
    }
    Ok(SpectralData { factors })
}

/// Same invariants from ranks of `(X − θ)^k` over `Q[t]/(p)`.
pub fn spectral_data_extension(x: &QMatrix) -> Result<SpectralData> {
    require_square(x)?;
    let d = x.rows();
    let mut factors = Vec::new();
    for (p, mult) in factor(&x.charpoly())? {
        let field = NumberField::new(&p);
        let mut ranks = vec![d];
        for k in 1..=mult as u32 {
            ranks.push(field.rank_shifted_power(x, k)?);
        }
        let tails: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        factors.push((p, partition_from_tails(&tails)));
    }
    Ok(SpectralData { factors })
}

/// Tie order for witnesses: zero first, then rational, then by factor order.
fn witness_key(p: &QPoly) -> (bool, usize) {
    (*p != QPoly::t(), p.degree())
}

fn best_witness(candidates: Vec<(QPoly, usize)>, d: usize) -> (usize, ShiftWitness) {
    candidates
        .into_iter()
        .min_by(|a, b| (d - a.1, witness_key(&a.0)).cmp(&(d - b.1, witness_key(&b.0))))
        .map(|(p, g)| (d - g, ShiftWitness::from_factor(&p)))
        .unwrap_or((0, ShiftWitness::Scalar(Q::zero())))
}

/// `min rank(X − λ)` over the algebraic closure, from kernels of `X − θ` over
/// each `Q[t]/(p)`.
pub fn min_shifted_rank_of(x: &QMatrix) -> Result<(usize, ShiftWitness)> {
    require_square(x)?;
    let d = x.rows();
    let mut candidates = Vec::new();
    for (p, _) in factor(&x.charpoly())? {
        let rank = NumberField::new(&p).rank_shifted(x)?;
        candidates.push((p, d - rank));
    }
    Ok(best_witness(candidates, d))
}

/// Second route: `dim ker p(X) / deg p` over the rationals.
pub fn min_shifted_rank_by_kernels(x: &QMatrix) -> Result<(usize, ShiftWitness)> {
    require_square(x)?;
    let d = x.rows();
    let mut candidates = Vec::new();
    for (p, _) in factor(&x.charpoly())? {
        let kernel = d - x.eval_poly(&p).rank();
        candidates.push((p.clone(), kernel / p.degree()));
    }
    Ok(best_witness(candidates, d))
}

/// Dominance order on partitions of the same size.
pub fn closure_leq(p1: &[usize], p2: &[usize]) -> Result<bool> {
    let (s1, s2) = (p1.iter().sum::<usize>(), p2.iter().sum::<usize>());
    if s1 != s2 {
        return Err(Error::Precondition(format!(
            "partitions of different sizes {s1} and {s2}"
        )));
    }
    let sorted = |p: &[usize]| {
        let mut v = p.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    };
    let (a, b) = (sorted(p1), sorted(p2));
    let (mut sa, mut sb) = (0, 0);
    for k in 0..a.len().max(b.len()) {
        sa += a.get(k).copied().unwrap_or(0);
        sb += b.get(k).copied().unwrap_or(0);
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rank of a nilpotent with Jordan type `pi`.
pub fn partition_rank(pi: &[usize]) -> usize {
    pi.iter().map(|b| b - 1).sum()
}
