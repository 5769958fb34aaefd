//! Factorization of rational polynomials into monic irreducibles.
//!
//! Square-free parts come from Yun's algorithm over the rationals. Each part is
//! scaled to a primitive integer polynomial, split modulo a prime by
//! distinct-degree and Cantor–Zassenhaus equal-degree factorization, and the
//! modular factors are recombined by subset search with trial division over
//! the integers. The prime exceeds twice a Mignotte bound, so no Hensel lifting
//! is needed: a word-sized prime when one is large enough, otherwise a
//! multiprecision prime found by Miller–Rabin above the bound.

use num_bigint::{BigInt, BigUint, ToBigInt};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::Q;
use super::poly::QPoly;
use crate::error::{Error, Result};

/// Tried in order; the first one that keeps the part square-free and exceeds
/// the coefficient bound is used.
const PRIMES: [u64; 3] = [(1 << 61) - 1, 4_611_686_018_427_387_847, 1_000_000_007];

/// Miller–Rabin bases; deterministic below 3.3·10^24.
const WITNESSES: [u32; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// Monic irreducible factors with multiplicities, ordered by degree then coefficients.
pub fn factor(p: &QPoly) -> Result<Vec<(QPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::Matrix("cannot factor the zero polynomial".into()));
    }
    let mut out = Vec::new();
    for (part, mult) in square_free(&p.monic()) {
        for f in factor_square_free(&part)? {
            out.push((f, mult));
        }
    }
    out.sort_by(|a, b| (a.0.degree(), &a.0).cmp(&(b.0.degree(), &b.0)));
    Ok(out)
}

/// Yun's decomposition of a monic polynomial into pairwise coprime square-free parts.
pub fn square_free(f: &QPoly) -> Vec<(QPoly, usize)> {
    let mut out = Vec::new();
    if f.degree() == 0 {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree() > 0 {
        let a = b.gcd(&d);
        b = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        if a.degree() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn factor_square_free(f: &QPoly) -> Result<Vec<QPoly>> {
    if f.degree() <= 1 {
        return Ok(vec![f.monic()]);
    }
    let g = primitive_integer(f);
    let bound = coefficient_bound(&g) * 2;
    for &p in &PRIMES {
        if BigInt::from(p) <= bound {
            continue;
        }
        if let Some(out) = factor_modulo(&Word(p), &g) {
            return Ok(out);
        }
    }
    let mut candidate = bound.magnitude() + 1u32;
    // a prime dividing the leading coefficient or the discriminant is skipped
    for _ in 0..64 {
        let p = next_prime(candidate);
        if let Some(out) = factor_modulo(&Big(p.clone()), &g) {
            return Ok(out);
        }
        candidate = p + 1u32;
    }
    Err(Error::Matrix(format!("no good prime found for {f}")))
}

fn factor_modulo<F: PrimeField>(field: &F, g: &[BigInt]) -> Option<Vec<QPoly>> {
    let gp = reduce_mod(field, g);
    if gp.len() != g.len() {
        return None;
    }
    let gp = monic_mod(field, &gp);
    if gcd_mod(field, &gp, &derivative_mod(field, &gp)).len() > 1 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
    let mut modular = Vec::new();
    for (part, d) in distinct_degree(field, &gp) {
        equal_degree(field, &part, d, &mut rng, &mut modular);
    }
    Some(recombine(field, g.to_vec(), modular))
}

fn next_prime(mut n: BigUint) -> BigUint {
    if n.is_even() {
        n += 1u32;
    }
    while !probably_prime(&n) {
        n += 2u32;
    }
    n
}

fn probably_prime(n: &BigUint) -> bool {
    let one = BigUint::one();
    let m = n - &one;
    let s = m.trailing_zeros().expect("n is odd and above 2");
    let odd = &m >> s;
    'bases: for &a in &WITNESSES {
        let a = BigUint::from(a);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&odd, n);
        if x == one || x == m {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == m {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Scales to integer coefficients with content 1 and positive leading coefficient.
fn primitive_integer(f: &QPoly) -> Vec<BigInt> {
    let den = f.coeffs().iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|x| (x * Q::from_integer(den.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = if ints.last().is_some_and(|x| x.is_negative()) { -BigInt::one() } else { BigInt::one() };
    ints.into_iter().map(|x| x / &content * &sign).collect()
}

/// Mignotte-style bound on coefficients of `lc·h` for any factor `h`.
fn coefficient_bound(g: &[BigInt]) -> BigInt {
    let norm2: BigInt = g.iter().map(|x| x * x).sum();
    let lead = g.last().map(|x| x.abs()).unwrap_or_else(BigInt::one);
    (BigInt::one() << (g.len() - 1)) * (norm2.sqrt() + 1u32) * lead
}

fn to_qpoly(g: &[BigInt]) -> QPoly {
    QPoly::new(g.iter().map(|x| Q::from_integer(x.clone())).collect())
}

fn recombine<F: PrimeField>(field: &F, mut g: Vec<BigInt>, mut modular: Vec<Vec<F::E>>) -> Vec<QPoly> {
    let mut out = Vec::new();
    let mut k = 1;
    while 2 * k <= modular.len() {
        let mut found = None;
        for subset in combinations(modular.len(), k) {
            let mut prod = vec![field.from_int(g.last().expect("nonzero"))];
            for &i in &subset {
                prod = mul_mod(field, &prod, &modular[i]);
            }
            let h = primitive(prod.iter().map(|x| field.lift(x)).collect());
            let (quo, rem) = to_qpoly(&g).div_rem(&to_qpoly(&h));
            if rem.is_zero() {
                found = Some((subset, h, quo));
                break;
            }
        }
        match found {
            Some((subset, h, quo)) => {
                out.push(to_qpoly(&h).monic());
                g = primitive_integer(&quo);
                let mut i = 0;
                modular.retain(|_| {
                    i += 1;
                    !subset.contains(&(i - 1))
                });
            }
            None => k += 1,
        }
    }
    if g.len() > 1 {
        out.push(to_qpoly(&g).monic());
    }
    out
}

fn primitive(g: Vec<BigInt>) -> Vec<BigInt> {
    let content = g.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content.is_zero() {
        return g;
    }
    g.into_iter().map(|x| x / &content).collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

// Polynomials over F_p: coefficient vectors from degree 0 up, no trailing zeros.

trait PrimeField {
    type E: Clone + PartialEq;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn from_int(&self, x: &BigInt) -> Self::E;
    /// Representative in `(−p/2, p/2]`.
    fn lift(&self, a: &Self::E) -> BigInt;
    fn random(&self, rng: &mut ChaCha8Rng) -> Self::E;
    fn order(&self) -> BigUint;
}

struct Word(u64);

impl PrimeField for Word {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.0 as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.0 as u128 - *b as u128) % self.0 as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        let (mut base, mut e, mut acc) = (*a, self.0 - 2, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
    fn from_int(&self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.0)).to_u64().expect("reduced below p")
    }
    fn lift(&self, a: &u64) -> BigInt {
        if *a > self.0 / 2 {
            BigInt::from(*a) - BigInt::from(self.0)
        } else {
            BigInt::from(*a)
        }
    }
    fn random(&self, rng: &mut ChaCha8Rng) -> u64 {
        rng.gen_range(0..self.0)
    }
    fn order(&self) -> BigUint {
        BigUint::from(self.0)
    }
}

struct Big(BigUint);

impl PrimeField for Big {
    type E = BigUint;
    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::one()
    }
    fn is_zero(&self, a: &BigUint) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a + b) % &self.0
    }
    fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a + &self.0 - b) % &self.0
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a * b % &self.0
    }
    fn inv(&self, a: &BigUint) -> BigUint {
        a.modpow(&(&self.0 - 2u32), &self.0)
    }
    fn from_int(&self, x: &BigInt) -> BigUint {
        x.mod_floor(&self.0.to_bigint().expect("unsigned")).to_biguint().expect("reduced below p")
    }
    fn lift(&self, a: &BigUint) -> BigInt {
        if a > &(&self.0 >> 1) {
            BigInt::from(a.clone()) - BigInt::from(self.0.clone())
        } else {
            BigInt::from(a.clone())
        }
    }
    fn random(&self, rng: &mut ChaCha8Rng) -> BigUint {
        // slight bias is harmless for splitting
        let limbs = self.0.to_u64_digits().len() + 1;
        BigUint::from_slice(&(0..2 * limbs).map(|_| rng.gen::<u32>()).collect::<Vec<_>>()) % &self.0
    }
    fn order(&self) -> BigUint {
        self.0.clone()
    }
}

fn trim<F: PrimeField>(field: &F, mut a: Vec<F::E>) -> Vec<F::E> {
    while a.last().is_some_and(|x| field.is_zero(x)) {
        a.pop();
    }
    a
}

fn reduce_mod<F: PrimeField>(field: &F, g: &[BigInt]) -> Vec<F::E> {
    trim(field, g.iter().map(|x| field.from_int(x)).collect())
}

fn monic_mod<F: PrimeField>(field: &F, a: &[F::E]) -> Vec<F::E> {
    let inv = field.inv(a.last().expect("nonzero"));
    a.iter().map(|x| field.mul(x, &inv)).collect()
}

fn sub_mod<F: PrimeField>(field: &F, a: &[F::E], b: &[F::E]) -> Vec<F::E> {
    let n = a.len().max(b.len());
    let zero = field.zero();
    trim(
        field,
        (0..n)
            .map(|i| field.sub(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
            .collect(),
    )
}

fn mul_mod<F: PrimeField>(field: &F, a: &[F::E], b: &[F::E]) -> Vec<F::E> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] = field.add(&c[i + j], &field.mul(x, y));
        }
    }
    trim(field, c)
}

fn div_rem_mod<F: PrimeField>(field: &F, a: &[F::E], b: &[F::E]) -> (Vec<F::E>, Vec<F::E>) {
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let inv = field.inv(b.last().expect("nonzero divisor"));
    let db = b.len() - 1;
    let mut quo = vec![field.zero(); r.len() - db];
    for i in (0..quo.len()).rev() {
        let f = field.mul(&r[i + db], &inv);
        if field.is_zero(&f) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] = field.sub(&r[i + j], &field.mul(&f, y));
        }
        quo[i] = f;
    }
    (trim(field, quo), trim(field, r))
}

fn rem_mod<F: PrimeField>(field: &F, a: &[F::E], m: &[F::E]) -> Vec<F::E> {
    div_rem_mod(field, a, m).1
}

fn gcd_mod<F: PrimeField>(field: &F, a: &[F::E], b: &[F::E]) -> Vec<F::E> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = rem_mod(field, &a, &b);
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        monic_mod(field, &a)
    }
}

fn derivative_mod<F: PrimeField>(field: &F, a: &[F::E]) -> Vec<F::E> {
    trim(
        field,
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, x)| field.mul(x, &field.from_int(&BigInt::from(i))))
            .collect(),
    )
}

fn pow_mod_poly<F: PrimeField>(field: &F, base: &[F::E], e: &BigUint, m: &[F::E]) -> Vec<F::E> {
    let mut acc = vec![field.one()];
    let b = rem_mod(field, base, m);
    for i in (0..e.bits()).rev() {
        acc = rem_mod(field, &mul_mod(field, &acc, &acc), m);
        if e.bit(i) {
            acc = rem_mod(field, &mul_mod(field, &acc, &b), m);
        }
    }
    acc
}

/// Splits a monic square-free `f` into products of irreducibles of equal degree.
fn distinct_degree<F: PrimeField>(field: &F, f: &[F::E]) -> Vec<(Vec<F::E>, usize)> {
    let p = field.order();
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let x = vec![field.zero(), field.one()];
    let mut h = x.clone();
    let mut d = 1;
    while f.len() > 2 * d {
        h = pow_mod_poly(field, &h, &p, &f);
        let g = gcd_mod(field, &sub_mod(field, &h, &x), &f);
        if g.len() > 1 {
            f = div_rem_mod(field, &f, &g).0;
            h = rem_mod(field, &h, &f);
            out.push((g, d));
        }
        d += 1;
    }
    if f.len() > 1 {
        let deg = f.len() - 1;
        out.push((f, deg));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of degree-`d` irreducibles.
fn equal_degree<F: PrimeField>(field: &F, f: &[F::E], d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Vec<F::E>>) {
    let n = f.len() - 1;
    if n == d {
        out.push(f.to_vec());
        return;
    }
    let p = field.order();
    let half = (&p - 1u32) >> 1;
    loop {
        let a = trim(field, (0..n).map(|_| field.random(rng)).collect());
        if a.len() < 2 {
            continue;
        }
        // a^((p^d − 1)/2) as (a·a^p·…·a^(p^(d−1)))^((p − 1)/2)
        let mut s = a.clone();
        let mut norm = a.clone();
        for _ in 1..d {
            s = pow_mod_poly(field, &s, &p, f);
            norm = rem_mod(field, &mul_mod(field, &norm, &s), f);
        }
        let b = pow_mod_poly(field, &norm, &half, f);
        let g = gcd_mod(field, &sub_mod(field, &b, &[field.one()]), f);
        if g.len() > 1 && g.len() < f.len() {
            let rest = div_rem_mod(field, f, &g).0;
            equal_degree(field, &g, d, rng, out);
            equal_degree(field, &rest, d, rng, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prod(fs: &[(QPoly, usize)]) -> QPoly {
        fs.iter().fold(QPoly::from_ints(&[1]), |acc, (f, m)| &acc * &f.pow(*m as u32))
    }

    #[test]
    fn splits_products_of_known_irreducibles() {
        let a = QPoly::from_ints(&[-2, 0, 1]);
        let b = QPoly::from_ints(&[1, 1, 1]);
        let c = QPoly::from_ints(&[-3, 1]);
        let d = QPoly::from_ints(&[1, 0, 0, 0, 1]);
        let f = &(&a.pow(2) * &b) * &(&c.pow(3) * &d);
        let got = factor(&f).unwrap();
        assert_eq!(got.len(), 4);
        assert_eq!(prod(&got), f);
        assert!(got.contains(&(a, 2)));
        assert!(got.contains(&(d, 1)));
    }

    #[test]
    fn recombines_factors_that_split_modulo_every_prime() {
        // t^4 + 1 is irreducible over Q yet splits modulo every prime
        let f = QPoly::from_ints(&[1, 0, 0, 0, 1]);
        assert_eq!(factor(&f).unwrap(), vec![(f, 1)]);
        let g = QPoly::from_ints(&[9, 0, -10, 0, 1]);
        let got: Vec<_> = factor(&g).unwrap().into_iter().map(|x| x.0).collect();
        assert_eq!(got.len(), 4);
    }

    #[test]
    fn large_coefficients_use_a_multiprecision_prime() {
        let big = BigInt::from(10u32).pow(30);
        let a = QPoly::new(vec![Q::from_integer(-&big * 2), Q::zero(), Q::one()]);
        let b = QPoly::new(vec![Q::new(7.into(), big.clone()), Q::one(), Q::one()]);
        let c = QPoly::from_ints(&[5, 1]);
        let f = &(&a * &b) * &c;
        let got = factor(&f).unwrap();
        assert_eq!(got.len(), 3);
        assert_eq!(prod(&got), f);
        assert!(probably_prime(&BigUint::from(1_000_000_007u64)));
        assert!(!probably_prime(&BigUint::from(3_215_031_751u64)));
    }

    #[test]
    fn rational_coefficients() {
        let f = &QPoly::new(vec![Q::new(1.into(), 2.into()), Q::one()]) * &QPoly::from_ints(&[-1, 0, 3]);
        let got = factor(&f).unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(prod(&got), f.monic());
    }
}
