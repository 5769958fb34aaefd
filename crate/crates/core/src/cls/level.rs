use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::IrreducibleCls;
use crate::error::{Error, Result};
use crate::rep_oracle::RepOracle;
use crate::weights::{dominant_raw, Algebra, Series, Weight};

/// Default size bound for enumerating infinite level sets.
pub const DEFAULT_WINDOW: u32 = 6;

/// Finite part of a monomial with indices already shifted past the infinite prefixes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct FiniteKey {
    pub x: Vec<(u32, u32)>,
    pub z: Vec<(u32, u32)>,
    pub m: u32,
    pub spin: bool,
}

type RawSet = Arc<BTreeSet<Vec<i64>>>;

fn finite_memo() -> &'static Mutex<HashMap<(Series, usize, FiniteKey), RawSet>> {
    static MEMO: OnceLock<Mutex<HashMap<(Series, usize, FiniteKey), RawSet>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Doubled fundamental-type tuple `(1^j, 0^{k-j})`.
fn omega(k: usize, j: usize) -> Vec<i64> {
    (0..k).map(|i| if i < j { 2 } else { 0 }).collect()
}

/// Highest weights of the exterior powers admitted by `L(p)` on `k` coordinates.
fn basic_l(series: Series, k: usize, p: u32) -> Vec<Vec<i64>> {
    let p = p as usize;
    match series {
        Series::Sl | Series::Sp => (0..=p.min(k)).map(|j| omega(k, j)).collect(),
        Series::So => {
            if k == 0 {
                return vec![Vec::new()];
            }
            let mut out: Vec<Vec<i64>> = (0..=p.min(k - 1)).map(|j| omega(k, j)).collect();
            if p >= k {
                // Λ^k splits into the self-dual and anti-self-dual parts
                out.push(omega(k, k));
                let mut anti = omega(k, k);
                anti[k - 1] = -2;
                out.push(anti);
            }
            out
        }
    }
}

/// `E` on `k` coordinates: every exterior power.
fn basic_e(series: Series, k: usize) -> Vec<Vec<i64>> {
    basic_l(series, k, k as u32)
}

/// Duals of the exterior powers admitted by `R(q)` (`sl` only).
fn basic_r(k: usize, q: u32) -> Vec<Vec<i64>> {
    (0..=(q as usize).min(k))
        .map(|j| dominant_raw(Series::Sl, &omega(k, k - j)))
        .collect()
}

/// The two half-spin weights on `k` coordinates.
fn basic_spin(k: usize) -> Vec<Vec<i64>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let plus = vec![1; k];
    let mut minus = plus.clone();
    minus[k - 1] = -1;
    vec![plus, minus]
}

fn cartan_sum(series: Series, a: &BTreeSet<Vec<i64>>, b: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    for x in a {
        for y in b {
            let s: Vec<i64> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            out.insert(match series {
                Series::Sl => dominant_raw(Series::Sl, &s),
                _ => s,
            });
        }
    }
    out
}

/// Level set of a finite-type monomial on `k` coordinates, as the set of
/// Cartan components of products of its exterior-power constituents.
pub(crate) fn finite_level_set_raw(series: Series, k: usize, key: &FiniteKey) -> RawSet {
    let memo_key = (series, k, key.clone());
    if let Some(hit) = finite_memo().lock().expect("memo poisoned").get(&memo_key) {
        return hit.clone();
    }
    let mut set: BTreeSet<Vec<i64>> = [vec![0; k]].into_iter().collect();
    let mut factors: Vec<Vec<Vec<i64>>> = Vec::new();
    for &(p, e) in &key.x {
        for _ in 0..e {
            factors.push(basic_l(series, k, p));
        }
    }
    for _ in 0..key.m {
        factors.push(basic_e(series, k));
    }
    for &(q, e) in &key.z {
        for _ in 0..e {
            factors.push(basic_r(k, q));
        }
    }
    if key.spin {
        factors.push(basic_spin(k));
    }
    for f in &factors {
        set = cartan_sum(series, &set, f);
    }
    let out = Arc::new(set);
    finite_memo()
        .lock()
        .expect("memo poisoned")
        .insert(memo_key, out.clone());
    out
}

/// Partitions `α` with `α_i ≤ bounds[i]` and as many parts as bounds.
fn bounded_partitions(bounds: &[u32]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::<i64>::new()];
    for (i, &b) in bounds.iter().enumerate() {
        let mut next = Vec::new();
        for prefix in &out {
            let cap = if i == 0 { b as i64 } else { prefix[i - 1].min(b as i64) };
            for x in 0..=cap {
                let mut v = prefix.clone();
                v.push(x);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Level set of a finite-type monomial read off from its `l`/`r` sequences:
/// `sp` weights with `λ_i ≤ l_i`; `so` the same with `|λ_n| ≤ l_n`, shifted by
/// a half-spin weight when `Spin` is present; `sl` the classes of
/// `α - rev(β)` with `α_i ≤ l_i - b` and `β_i ≤ r_i - a` for some `a + b = m`.
///
/// Independent of the exterior-power construction used by [`level_set`].
pub fn level_set_from_sequences(q: &IrreducibleCls, n: usize) -> Result<BTreeSet<Weight>> {
    if !q.is_finite_type() {
        return Err(Error::InfiniteType);
    }
    let algebra = Algebra::new(q.family(), n)?;
    let seq = super::lr_sequences(q)?;
    let k = algebra.coord_len();
    let l: Vec<u32> = (1..=k).map(|i| seq.l(i).expect("finite type")).collect();
    let double = |a: &[i64]| -> Vec<i64> { a.iter().map(|x| 2 * x).collect() };
    let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();
    match q.family() {
        Series::Sp => out.extend(bounded_partitions(&l).iter().map(|a| double(a))),
        Series::So => {
            let mut base = BTreeSet::new();
            for a in bounded_partitions(&l) {
                let d = double(&a);
                let mut neg = d.clone();
                neg[k - 1] *= -1;
                base.insert(d);
                base.insert(neg);
            }
            if q.spin() {
                for b in base {
                    for s in basic_spin(k) {
                        let sum: Vec<i64> = b.iter().zip(&s).map(|(x, y)| x + y).collect();
                        out.insert(dominant_raw(Series::So, &sum));
                    }
                }
            } else {
                out = base;
            }
        }
        Series::Sl => {
            let m = q.m();
            let r: Vec<u32> = (1..=k).map(|i| seq.r(i).expect("finite type")).collect();
            for a in 0..=m {
                // a copies of E on the left, m - a on the right
                let la: Vec<u32> = l.iter().map(|x| x - (m - a)).collect();
                let rb: Vec<u32> = r.iter().map(|x| x - a).collect();
                for al in bounded_partitions(&la) {
                    for be in bounded_partitions(&rb) {
                        let v: Vec<i64> = (0..k).map(|i| 2 * (al[i] - be[k - 1 - i])).collect();
                        out.insert(dominant_raw(Series::Sl, &v));
                    }
                }
            }
        }
    }
    Ok(out
        .into_iter()
        .map(|c| Weight::from_canonical(algebra, c))
        .collect())
}

/// Shape of a level set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevelShape {
    /// Every highest weight of the level, listed.
    Explicit(Arc<BTreeSet<Vec<i64>>>),
    /// Weights whose coordinates after the first `left` and before the last
    /// `right` lie in `tail` (for `sl` after shift normalization).
    /// `half` fixes the parity of the coordinates when the tail is empty.
    Prefix {
        left: usize,
        right: usize,
        tail: Arc<BTreeSet<Vec<i64>>>,
        half: Option<bool>,
    },
}

/// The highest weights of a c.l.s. at one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSet {
    algebra: Algebra,
    shape: LevelShape,
}

impl LevelSet {
    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn shape(&self) -> &LevelShape {
        &self.shape
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.shape, LevelShape::Explicit(_))
    }

    pub fn contains(&self, w: &Weight) -> bool {
        w.algebra() == self.algebra && self.contains_raw(w.doubled())
    }

    pub(crate) fn contains_raw(&self, lambda: &[i64]) -> bool {
        match &self.shape {
            LevelShape::Explicit(set) => set.contains(lambda),
            LevelShape::Prefix {
                left,
                right,
                tail,
                half,
            } => {
                let len = lambda.len();
                let series = self.algebra.series();
                if left + right >= len && series != Series::Sl {
                    return match half {
                        None => true,
                        Some(h) => lambda.iter().all(|c| (c.rem_euclid(2) == 1) == *h),
                    };
                }
                if left + right >= len {
                    return true;
                }
                let mid = &lambda[*left..len - right];
                match series {
                    Series::Sl => tail.contains(&dominant_raw(Series::Sl, mid)),
                    _ => tail.contains(mid),
                }
            }
        }
    }

    /// All weights for a finite level set, else those of size at most `window`.
    pub(crate) fn enumerate_raw(&self, window: u32) -> BTreeSet<Vec<i64>> {
        match &self.shape {
            LevelShape::Explicit(set) => set.as_ref().clone(),
            LevelShape::Prefix { .. } => {
                let all = dominant_weights_within(self.algebra, window);
                all.iter().filter(|l| self.contains_raw(l)).cloned().collect()
            }
        }
    }

    /// Members of an explicit level set as doubled tuples.
    pub fn raw_members(&self) -> BTreeSet<Vec<i64>> {
        self.enumerate_raw(0)
    }

    /// Members as weights; infinite level sets are cut to size at most `window`.
    pub fn weights(&self, window: u32) -> BTreeSet<Weight> {
        self.enumerate_raw(window)
            .into_iter()
            .map(|c| Weight::from_canonical(self.algebra, c))
            .collect()
    }
}

/// Size of a weight: `Σ|λ_i|`, for `sl` minimized over shifts.
/// Returned in doubled units.
pub fn weight_size(w: &Weight) -> i64 {
    size_raw(w.algebra().series(), w.doubled())
}

pub(crate) fn size_raw(series: Series, lambda: &[i64]) -> i64 {
    match series {
        Series::Sl => lambda
            .iter()
            .map(|&k| lambda.iter().map(|&x| (x - k).abs()).sum::<i64>())
            .min()
            .unwrap_or(0),
        _ => lambda.iter().map(|x| x.abs()).sum(),
    }
}

fn partitions_within(parts: usize, total: u32) -> Vec<Vec<i64>> {
    fn rec(left: usize, budget: i64, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        out.push(cur.clone());
        if left == 0 {
            return;
        }
        for x in 1..=cap.min(budget) {
            cur.push(x);
            rec(left - 1, budget - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(parts, total as i64, total as i64, &mut Vec::new(), &mut out);
    out
}

fn window_memo() -> &'static Mutex<HashMap<(Algebra, u32), RawSet>> {
    static MEMO: OnceLock<Mutex<HashMap<(Algebra, u32), RawSet>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Every dominant weight of the algebra with size at most `window`.
pub(crate) fn dominant_weights_within(algebra: Algebra, window: u32) -> RawSet {
    if let Some(hit) = window_memo()
        .lock()
        .expect("memo poisoned")
        .get(&(algebra, window))
    {
        return hit.clone();
    }
    let series = algebra.series();
    let len = algebra.coord_len();
    let pad = |p: &[i64]| -> Vec<i64> {
        let mut v: Vec<i64> = p.iter().map(|x| 2 * x).collect();
        v.resize(len, 0);
        v
    };
    let mut out = BTreeSet::new();
    match series {
        Series::Sp => {
            out.extend(partitions_within(len, window).iter().map(|p| pad(p)));
        }
        Series::So => {
            for p in partitions_within(len, window) {
                let v = pad(&p);
                if v[len - 1] != 0 {
                    let mut neg = v.clone();
                    neg[len - 1] *= -1;
                    out.insert(neg);
                }
                out.insert(v);
            }
            // half-integral weights cost len/2 on top of the underlying partition
            if 2 * window as usize >= len {
                let budget = (2 * window as usize - len) / 2;
                for p in partitions_within(len, budget as u32) {
                    let mut v = pad(&p);
                    v.iter_mut().for_each(|x| *x += 1);
                    let mut neg = v.clone();
                    neg[len - 1] *= -1;
                    out.insert(neg);
                    out.insert(v);
                }
            }
        }
        Series::Sl => {
            for a in partitions_within(len, window) {
                let used: i64 = a.iter().sum();
                for b in partitions_within(len - a.len(), window - used as u32) {
                    let mut v = pad(&a);
                    for (i, x) in b.iter().enumerate() {
                        v[len - 1 - i] = -2 * x;
                    }
                    out.insert(dominant_raw(Series::Sl, &v));
                }
            }
        }
    }
    let out = Arc::new(out);
    window_memo()
        .lock()
        .expect("memo poisoned")
        .insert((algebra, window), out.clone());
    out
}

/// Highest weights of `q` at rank `n`.
///
/// Finite-type monomials give an explicit set; `Linf`/`Rinf` leave their
/// leading or trailing coordinates free and constrain the rest by the shifted
/// finite part. Defined for every valid rank, including ranks below the
/// largest index occurring in `q`.
pub fn level_set(q: &IrreducibleCls, n: usize) -> Result<LevelSet> {
    let algebra = Algebra::new(q.family(), n)?;
    let series = q.family();
    let len = algebra.coord_len();
    if q.is_top() {
        return Ok(LevelSet {
            algebra,
            shape: LevelShape::Prefix {
                left: len,
                right: 0,
                tail: Arc::new([Vec::new()].into_iter().collect()),
                half: None,
            },
        });
    }
    let key = q.finite_key();
    if q.is_finite_type() {
        return Ok(LevelSet {
            algebra,
            shape: LevelShape::Explicit(finite_level_set_raw(series, len, &key)),
        });
    }
    let left = (q.v() as usize).min(len);
    let right = (q.w() as usize).min(len - left);
    let tail = finite_level_set_raw(series, len - left - right, &key);
    let half = match series {
        Series::Sl => None,
        _ => Some(q.spin()),
    };
    Ok(LevelSet {
        algebra,
        shape: LevelShape::Prefix {
            left,
            right,
            tail,
            half,
        },
    })
}

fn check_pair(q1: &IrreducibleCls, q2: &IrreducibleCls) -> Result<()> {
    if q1.family() != q2.family() {
        return Err(Error::FamilyMismatch(q1.family(), q2.family()));
    }
    Ok(())
}

/// Cartan components `λ + μ` over both level sets. Infinite level sets are
/// cut to the window first.
pub fn product_levelwise(
    q1: &IrreducibleCls,
    q2: &IrreducibleCls,
    n: usize,
    window: u32,
) -> Result<BTreeSet<Weight>> {
    check_pair(q1, q2)?;
    let a = level_set(q1, n)?;
    let b = level_set(q2, n)?;
    let series = q1.family();
    let bs: Vec<Vec<i64>> = b.enumerate_raw(window).into_iter().collect();
    let sums = cartan_sum(series, &a.enumerate_raw(window), &bs);
    Ok(sums
        .into_iter()
        .map(|c| Weight::from_canonical(a.algebra(), c))
        .collect())
}

/// Every simple constituent of `L(λ) ⊗ L(μ)` over both level sets.
pub fn tensor_levelwise(
    oracle: &RepOracle,
    q1: &IrreducibleCls,
    q2: &IrreducibleCls,
    n: usize,
    window: u32,
) -> Result<BTreeSet<Weight>> {
    check_pair(q1, q2)?;
    let a = level_set(q1, n)?.weights(window);
    let b = level_set(q2, n)?.weights(window);
    let mut out = BTreeSet::new();
    for x in &a {
        for y in &b {
            out.extend(oracle.tensor_decompose(x, y)?.into_keys());
        }
    }
    Ok(out)
}
