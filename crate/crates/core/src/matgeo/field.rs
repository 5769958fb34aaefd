use num_traits::Zero;

use super::matrix::{row_reduce, Arith, QMatrix, Q};
use super::poly::QPoly;
use crate::error::{Error, Result};

/// `Q[t]/(m)` for a monic irreducible `m`; `θ` denotes the class of `t`.
pub(crate) struct NumberField {
    modulus: QPoly,
}

impl NumberField {
    pub fn new(modulus: &QPoly) -> Self {
        NumberField {
            modulus: modulus.monic(),
        }
    }

    pub fn embed(&self, a: &Q) -> QPoly {
        QPoly::constant(a.clone())
    }

    pub fn theta(&self) -> QPoly {
        QPoly::t().rem(&self.modulus)
    }

    /// Rank of `X − θ·Id` over the field.
    pub fn rank_shifted(&self, x: &QMatrix) -> Result<usize> {
        let th = self.theta();
        let mut rows: Vec<Vec<QPoly>> = (0..x.rows())
            .map(|i| {
                (0..x.cols())
                    .map(|j| {
                        let e = self.embed(&x[(i, j)]);
                        if i == j {
                            &e - &th
                        } else {
                            e
                        }
                    })
                    .collect()
            })
            .collect();
        self.rank(&mut rows)
    }

    /// Rank of `(X − θ·Id)^k` over the field.
    pub fn rank_shifted_power(&self, x: &QMatrix, k: u32) -> Result<usize> {
        let n = x.rows();
        let th = self.theta();
        let base: Vec<Vec<QPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let e = self.embed(&x[(i, j)]);
                        if i == j {
                            &e - &th
                        } else {
                            e
                        }
                    })
                    .collect()
            })
            .collect();
        let mut acc: Vec<Vec<QPoly>> = (0..n)
            .map(|i| (0..n).map(|j| QPoly::constant(if i == j { Q::from_integer(1.into()) } else { Q::zero() })).collect())
            .collect();
        for _ in 0..k {
            acc = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let s = (0..n).fold(QPoly::zero(), |s, l| &s + &(&acc[i][l] * &base[l][j]));
                            s.rem(&self.modulus)
                        })
                        .collect()
                })
                .collect();
        }
        self.rank(&mut acc)
    }

    fn rank(&self, rows: &mut [Vec<QPoly>]) -> Result<usize> {
        row_reduce(self, rows)
            .map(|p| p.len())
            .ok_or_else(|| Error::Matrix(format!("{} is reducible", self.modulus)))
    }
}

impl Arith for NumberField {
    type E = QPoly;
    fn is_zero(&self, a: &QPoly) -> bool {
        a.is_zero()
    }
    fn sub(&self, a: &QPoly, b: &QPoly) -> QPoly {
        a - b
    }
    fn mul(&self, a: &QPoly, b: &QPoly) -> QPoly {
        (a * b).rem(&self.modulus)
    }
    fn inv(&self, a: &QPoly) -> Option<QPoly> {
        let (g, s) = a.gcd_inverse(&self.modulus);
        (g.degree() == 0 && !g.is_zero()).then_some(s)
    }
}
