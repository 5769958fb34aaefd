//! Weight lattices, Weyl groups and dominant-chamber arithmetic for
//! `sl(n+1)`, `so(2n)` and `sp(2n)`.
//!
//! Coordinates are epsilon-coordinates stored *doubled*, so the half-integral
//! weights of `so(2n)` stay in `i64`. The canonical dominant form is
//! non-increasing. For `sl` the tuple is taken modulo the all-ones vector and
//! normalized so that its minimum is zero.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Series {
    Sl,
    So,
    Sp,
}

impl Series {
    pub const ALL: [Series; 3] = [Series::Sl, Series::So, Series::Sp];

    /// Number of epsilon-coordinates at rank `n`.
    pub fn coord_len(self, rank: usize) -> usize {
        match self {
            Series::Sl => rank + 1,
            _ => rank,
        }
    }

    /// Smallest rank at which the series is a simple algebra in this library.
    pub fn min_rank(self) -> usize {
        match self {
            Series::So => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Series::Sl => "sl",
            Series::So => "so",
            Series::Sp => "sp",
        })
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sl" => Ok(Series::Sl),
            "so" => Ok(Series::So),
            "sp" => Ok(Series::Sp),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown family `{s}`"),
            }),
        }
    }
}

/// A classical algebra of the given series and rank: `sl(n+1)`, `so(2n)` or `sp(2n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Algebra {
    series: Series,
    rank: usize,
}

impl Algebra {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        if rank < series.min_rank() {
            return Err(Error::InvalidRank { series, rank });
        }
        Ok(Algebra { series, rank })
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coord_len(&self) -> usize {
        self.series.coord_len(self.rank)
    }

    /// Dimension of the natural module.
    pub fn natural_dim(&self) -> usize {
        match self.series {
            Series::Sl => self.rank + 1,
            _ => 2 * self.rank,
        }
    }

    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.series {
            Series::Sl => fact(n + 1),
            Series::Sp => (1u128 << n) * fact(n),
            Series::So => (1u128 << (n - 1)) * fact(n),
        }
    }

    /// Highest weight of the natural module, doubled.
    pub fn natural_highest_weight(&self) -> Weight {
        let mut c = vec![0; self.coord_len()];
        c[0] = 2;
        Weight {
            algebra: *self,
            coords: c,
        }
    }

    pub fn trivial_weight(&self) -> Weight {
        Weight {
            algebra: *self,
            coords: vec![0; self.coord_len()],
        }
    }

    /// Positive roots, doubled.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        positive_roots_raw(self.series, self.coord_len())
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.series, self.natural_dim())
    }
}

pub(crate) fn positive_roots_raw(series: Series, len: usize) -> Vec<Vec<i64>> {
    let mut roots = Vec::new();
    let unit = |i: usize, s: i64, out: &mut Vec<i64>| out[i] += 2 * s;
    for i in 0..len {
        for j in i + 1..len {
            let mut r = vec![0; len];
            unit(i, 1, &mut r);
            unit(j, -1, &mut r);
            roots.push(r);
            if series != Series::Sl {
                let mut r = vec![0; len];
                unit(i, 1, &mut r);
                unit(j, 1, &mut r);
                roots.push(r);
            }
        }
        if series == Series::Sp {
            let mut r = vec![0; len];
            unit(i, 2, &mut r);
            roots.push(r);
        }
    }
    roots
}

/// Half-sum of positive roots in epsilon-coordinates, doubled.
///
/// `sl(n+1)` gives `(n, ..., 0)`, `sp(2n)` gives `(n, ..., 1)` and `so(2n)`
/// gives `(n-1, ..., 0)`. The `sl` tuple is not shift-normalized.
pub fn rho(algebra: Algebra) -> Vec<i64> {
    rho_raw(algebra.series, algebra.coord_len())
}

pub(crate) fn rho_raw(series: Series, len: usize) -> Vec<i64> {
    let top = match series {
        Series::Sl | Series::So => len as i64 - 1,
        Series::Sp => len as i64,
    };
    (0..len as i64).map(|i| 2 * (top - i)).collect()
}

pub(crate) fn inner(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Checks lattice membership of a doubled tuple, ignoring dominance.
pub(crate) fn check_lattice(series: Series, coords: &[i64]) -> Result<()> {
    let odd = coords.iter().filter(|c| c.rem_euclid(2) == 1).count();
    let ok = match series {
        Series::Sl | Series::Sp => odd == 0,
        Series::So => odd == 0 || odd == coords.len(),
    };
    if ok {
        Ok(())
    } else {
        let detail = match series {
            Series::So => "coordinates must be all integral or all half-odd".to_string(),
            _ => "coordinates must be integral".to_string(),
        };
        Err(Error::Lattice { series, detail })
    }
}

/// Dominant representative of the Weyl orbit of a doubled tuple.
pub(crate) fn dominant_raw(series: Series, coords: &[i64]) -> Vec<i64> {
    let mut c = coords.to_vec();
    match series {
        Series::Sl => {
            c.sort_unstable_by(|a, b| b.cmp(a));
            if let Some(&min) = c.last() {
                c.iter_mut().for_each(|x| *x -= min);
            }
        }
        Series::Sp => {
            c.iter_mut().for_each(|x| *x = x.abs());
            c.sort_unstable_by(|a, b| b.cmp(a));
        }
        Series::So => {
            let negatives = c.iter().filter(|&&x| x < 0).count();
            c.iter_mut().for_each(|x| *x = x.abs());
            c.sort_unstable_by(|a, b| b.cmp(a));
            if negatives % 2 == 1 {
                if let Some(last) = c.last_mut() {
                    *last = -*last;
                }
            }
        }
    }
    c
}

pub(crate) fn is_dominant_raw(series: Series, c: &[i64]) -> bool {
    let n = c.len();
    for i in 0..n.saturating_sub(1) {
        let ok = match series {
            Series::So if i + 2 == n => c[i] >= c[i + 1].abs(),
            _ => c[i] >= c[i + 1],
        };
        if !ok {
            return false;
        }
    }
    match series {
        Series::Sp => c.last().map_or(true, |&x| x >= 0),
        Series::Sl => c.last().map_or(true, |&x| x == 0),
        // a single coordinate of so(2) carries either sign
        Series::So => true,
    }
}

/// Weyl element sending a regular doubled tuple into the dominant chamber,
/// returned as the image and the sign `det(w)`. Tuples on a wall give `None`.
/// For `sl` the image is not shift-normalized.
pub(crate) fn reflect_to_dominant(series: Series, xi: &[i64]) -> Option<(Vec<i64>, i64)> {
    let mut c = xi.to_vec();
    let mut sign = 1i64;
    match series {
        Series::Sl => {}
        Series::Sp => {
            for x in c.iter_mut() {
                if *x == 0 {
                    return None;
                }
                if *x < 0 {
                    *x = -*x;
                    sign = -sign;
                }
            }
        }
        Series::So => {
            let negatives = c.iter().filter(|&&x| x < 0).count();
            c.iter_mut().for_each(|x| *x = x.abs());
            if negatives % 2 == 1 && !c.contains(&0) {
                // restore one negative after sorting
                sign *= sort_desc_parity(&mut c)?;
                let last = c.len() - 1;
                c[last] = -c[last];
                return Some((c, sign));
            }
        }
    }
    sign *= sort_desc_parity(&mut c)?;
    Some((c, sign))
}

/// Sorts in non-increasing order returning the permutation sign, or `None`
/// when two entries coincide.
fn sort_desc_parity(c: &mut [i64]) -> Option<i64> {
    let mut sign = 1;
    // insertion sort keeps the transposition count
    for i in 1..c.len() {
        let mut j = i;
        while j > 0 && c[j - 1] < c[j] {
            c.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && c[j - 1] == c[j] {
            return None;
        }
    }
    for w in c.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some(sign)
}

/// A dominant integral weight in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    algebra: Algebra,
    coords: Vec<i64>,
}

impl Weight {
    /// Canonical dominant representative of a doubled tuple.
    pub fn make_dominant(algebra: Algebra, doubled: &[i64]) -> Result<Self> {
        make_dominant(algebra, doubled)
    }

    /// Canonical dominant representative of an integral tuple.
    pub fn from_ints(algebra: Algebra, coords: &[i64]) -> Result<Self> {
        let doubled: Vec<i64> = coords.iter().map(|c| 2 * c).collect();
        make_dominant(algebra, &doubled)
    }

    /// Wraps a tuple already known to be canonical.
    pub(crate) fn from_canonical(algebra: Algebra, coords: Vec<i64>) -> Self {
        debug_assert!(is_dominant_raw(algebra.series, &coords), "{coords:?}");
        Weight { algebra, coords }
    }

    pub fn parse(algebra: Algebra, text: &str) -> Result<Self> {
        let doubled = parse_tuple(text)?;
        make_dominant(algebra, &doubled)
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    /// Doubled coordinates.
    pub fn doubled(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_trivial(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_tuple(&self.coords))
    }
}

/// Formats a doubled tuple as `[a,b,...]` with half-integers as `p/2`.
pub fn format_tuple(doubled: &[i64]) -> String {
    let parts: Vec<String> = doubled.iter().map(|&c| format_half(c)).collect();
    format!("[{}]", parts.join(","))
}

pub fn format_half(doubled: i64) -> String {
    if doubled % 2 == 0 {
        (doubled / 2).to_string()
    } else {
        format!("{doubled}/2")
    }
}

/// Parses `[a,b,...]` into doubled coordinates.
pub fn parse_tuple(text: &str) -> Result<Vec<i64>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse {
            pos: 0,
            msg: "expected `[...]`".into(),
        })?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = 1;
    for part in inner.split(',') {
        let p = part.trim();
        let bad = || Error::Parse {
            pos,
            msg: format!("bad coordinate `{p}`"),
        };
        let value = match p.split_once('/') {
            Some((num, "2")) => num.trim().parse::<i64>().map_err(|_| bad())?,
            Some(_) => return Err(bad()),
            None => 2 * p.parse::<i64>().map_err(|_| bad())?,
        };
        out.push(value);
        pos += part.len() + 1;
    }
    Ok(out)
}

/// Canonical dominant representative under the Weyl group, with the `sl`
/// shift normalization applied.
pub fn make_dominant(algebra: Algebra, doubled: &[i64]) -> Result<Weight> {
    if doubled.len() != algebra.coord_len() {
        return Err(Error::Length {
            expected: algebra.coord_len(),
            got: doubled.len(),
        });
    }
    check_lattice(algebra.series, doubled)?;
    Ok(Weight {
        algebra,
        coords: dominant_raw(algebra.series, doubled),
    })
}

/// Generators of the Weyl group acting on tuples.
fn apply_generator(series: Series, g: usize, c: &mut [i64]) {
    let n = c.len();
    if g + 1 < n {
        c.swap(g, g + 1);
        return;
    }
    match series {
        Series::Sp => c[n - 1] = -c[n - 1],
        Series::So => {
            c.swap(n - 2, n - 1);
            c[n - 2] = -c[n - 2];
            c[n - 1] = -c[n - 1];
        }
        Series::Sl => unreachable!(),
    }
}

fn generator_count(series: Series, n: usize) -> usize {
    match series {
        Series::Sl => n.saturating_sub(1),
        Series::Sp => n,
        Series::So if n >= 2 => n,
        Series::So => 0,
    }
}

/// Full Weyl orbit of a tuple as doubled coordinates.
pub(crate) fn weyl_orbit_raw(series: Series, start: &[i64]) -> BTreeSet<Vec<i64>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    let gens = generator_count(series, start.len());
    while let Some(c) = queue.pop_front() {
        for g in 0..gens {
            let mut next = c.clone();
            apply_generator(series, g, &mut next);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// The Weyl orbit of a weight, as doubled tuples.
pub fn weyl_orbit(weight: &Weight) -> BTreeSet<Vec<i64>> {
    weyl_orbit_raw(weight.algebra.series, &weight.coords)
}

/// Infinitesimal character: the dominant representative of `λ + ρ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CentralCharacter {
    algebra: Algebra,
    rep: Vec<i64>,
}

impl CentralCharacter {
    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    /// Doubled coordinates of the dominant representative.
    pub fn doubled(&self) -> &[i64] {
        &self.rep
    }
}

impl fmt::Display for CentralCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_tuple(&self.rep))
    }
}

pub fn central_character(weight: &Weight) -> CentralCharacter {
    let shifted: Vec<i64> = weight
        .coords
        .iter()
        .zip(rho(weight.algebra))
        .map(|(a, b)| a + b)
        .collect();
    CentralCharacter {
        algebra: weight.algebra,
        rep: dominant_raw(weight.algebra.series, &shifted),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(s: Series, n: usize) -> Algebra {
        Algebra::new(s, n).unwrap()
    }

    fn halves(v: &[i64]) -> Vec<i64> {
        v.iter().map(|x| 2 * x).collect()
    }

    /// Half-sum of the explicit positive root list.
    fn rho_from_roots(a: Algebra) -> Vec<i64> {
        let mut sum = vec![0; a.coord_len()];
        for r in a.positive_roots() {
            for (s, x) in sum.iter_mut().zip(r) {
                *s += x;
            }
        }
        sum.iter().map(|x| x / 2).collect()
    }

    #[test]
    fn rho_matches_root_sum() {
        assert_eq!(rho(alg(Series::Sl, 2)), halves(&[2, 1, 0]));
        assert_eq!(rho(alg(Series::Sp, 2)), halves(&[2, 1]));
        assert_eq!(rho(alg(Series::So, 3)), halves(&[2, 1, 0]));
        for s in Series::ALL {
            for n in s.min_rank()..6 {
                let a = alg(s, n);
                let from_roots = rho_from_roots(a);
                let direct = rho(a);
                if s == Series::Sl {
                    // equal modulo the all-ones vector
                    let d: Vec<i64> = direct.iter().zip(&from_roots).map(|(x, y)| x - y).collect();
                    assert!(d.windows(2).all(|w| w[0] == w[1]), "{a}");
                } else {
                    assert_eq!(direct, from_roots, "{a}");
                }
            }
        }
    }

    #[test]
    fn rank_bounds() {
        assert!(Algebra::new(Series::So, 1).is_err());
        assert!(Algebra::new(Series::Sp, 0).is_err());
        assert!(Algebra::new(Series::Sl, 1).is_ok());
    }

    #[test]
    fn make_dominant_examples() {
        let w = Weight::from_ints(alg(Series::Sp, 2), &[-1, 2]).unwrap();
        assert_eq!(w.doubled(), halves(&[2, 1]).as_slice());
        let w = Weight::from_ints(alg(Series::Sl, 2), &[3, 5, 4]).unwrap();
        assert_eq!(w.doubled(), halves(&[2, 1, 0]).as_slice());
        let w = Weight::from_ints(alg(Series::So, 2), &[-1, -2]).unwrap();
        assert_eq!(w.doubled(), halves(&[2, 1]).as_slice());
        let w = Weight::from_ints(alg(Series::So, 2), &[-1, 2]).unwrap();
        assert_eq!(w.doubled(), halves(&[2, -1]).as_slice());
    }

    #[test]
    fn lattice_errors() {
        let so3 = alg(Series::So, 3);
        assert!(make_dominant(so3, &[1, 1, 2]).is_err());
        assert!(make_dominant(so3, &[1, 1]).is_err());
        assert!(make_dominant(alg(Series::Sp, 2), &[1, 1]).is_err());
    }

    #[test]
    fn orbit_examples() {
        let w = Weight::from_ints(alg(Series::Sp, 2), &[1, 0]).unwrap();
        let expected: BTreeSet<Vec<i64>> = [[1, 0], [-1, 0], [0, 1], [0, -1]]
            .iter()
            .map(|v| halves(v))
            .collect();
        assert_eq!(weyl_orbit(&w), expected);

        let w = Weight::from_ints(alg(Series::Sl, 1), &[1, 0]).unwrap();
        assert_eq!(weyl_orbit(&w).len(), 2);
    }

    /// Brute-force orbit: all signed permutations with the sign rule of the series.
    fn brute_orbit(series: Series, c: &[i64]) -> BTreeSet<Vec<i64>> {
        let n = c.len();
        let mut out = BTreeSet::new();
        let mut idx: Vec<usize> = (0..n).collect();
        let perms = permutations(&mut idx);
        for p in perms {
            let permuted: Vec<i64> = p.iter().map(|&i| c[i]).collect();
            let sign_sets: Vec<u32> = match series {
                Series::Sl => vec![0],
                _ => (0..(1u32 << n)).collect(),
            };
            for mask in sign_sets {
                if series == Series::So && mask.count_ones() % 2 == 1 {
                    continue;
                }
                let v: Vec<i64> = permuted
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
                    .collect();
                out.insert(v);
            }
        }
        out
    }

    fn permutations(items: &mut Vec<usize>) -> Vec<Vec<usize>> {
        if items.len() <= 1 {
            return vec![items.clone()];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let x = items.remove(i);
            for mut rest in permutations(items) {
                rest.insert(0, x);
                out.push(rest);
            }
            items.insert(i, x);
        }
        out
    }

    #[test]
    fn so_orbit_matches_even_sign_enumeration() {
        let w = Weight::from_ints(alg(Series::So, 2), &[1, 1]).unwrap();
        let orbit = weyl_orbit(&w);
        assert_eq!(orbit, brute_orbit(Series::So, w.doubled()));
        assert_eq!(orbit.len(), 2);
        let w = Weight::from_ints(alg(Series::So, 3), &[2, 1, 0]).unwrap();
        assert_eq!(weyl_orbit(&w), brute_orbit(Series::So, w.doubled()));
    }

    #[test]
    fn central_character_examples() {
        let sl2 = alg(Series::Sl, 2);
        let c = central_character(&sl2.trivial_weight());
        assert_eq!(c.doubled(), halves(&[2, 1, 0]).as_slice());
        let w = Weight::from_ints(alg(Series::Sp, 2), &[1, 0]).unwrap();
        assert_eq!(central_character(&w).doubled(), halves(&[3, 1]).as_slice());
        let w = Weight::make_dominant(alg(Series::So, 3), &[1, 1, 1]).unwrap();
        assert_eq!(central_character(&w).doubled(), &[5, 3, 1]);
    }

    #[test]
    fn parse_and_print() {
        let so3 = alg(Series::So, 3);
        let w = Weight::parse(so3, "[1/2, 1/2, -1/2]").unwrap();
        assert_eq!(w.to_string(), "[1/2,1/2,-1/2]");
        assert!(Weight::parse(so3, "[1/3,0,0]").is_err());
        assert!(Weight::parse(so3, "1,2,3").is_err());
    }

    #[test]
    fn reflection_sign() {
        // rho itself is regular dominant
        assert_eq!(reflect_to_dominant(Series::Sp, &[4, 2]), Some((vec![4, 2], 1)));
        assert_eq!(reflect_to_dominant(Series::Sp, &[2, 4]), Some((vec![4, 2], -1)));
        assert_eq!(reflect_to_dominant(Series::Sp, &[-4, 2]), Some((vec![4, 2], -1)));
        assert_eq!(reflect_to_dominant(Series::Sp, &[0, 2]), None);
        assert_eq!(reflect_to_dominant(Series::So, &[2, 0]), Some((vec![2, 0], 1)));
        assert_eq!(reflect_to_dominant(Series::So, &[0, -2]), Some((vec![2, 0], -1)));
        assert_eq!(reflect_to_dominant(Series::So, &[2, -2]), None);
        assert_eq!(reflect_to_dominant(Series::Sl, &[0, 2, 4]), Some((vec![4, 2, 0], -1)));
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn series_and_tuple() -> impl Strategy<Value = (Series, Vec<i64>)> {
        (0usize..3, 2usize..5, any::<bool>()).prop_flat_map(|(s, n, half)| {
            let series = Series::ALL[s];
            let half = half && series == Series::So;
            proptest::collection::vec(-4i64..5, n).prop_map(move |v| {
                let c = v.iter().map(|x| 2 * x + i64::from(half)).collect();
                (series, c)
            })
        })
    }

    proptest! {
        #[test]
        fn dominant_is_idempotent_and_orbit_invariant((series, c) in series_and_tuple()) {
            let d = dominant_raw(series, &c);
            prop_assert!(is_dominant_raw(series, &d));
            prop_assert_eq!(dominant_raw(series, &d), d.clone());
            for o in weyl_orbit_raw(series, &c) {
                prop_assert_eq!(dominant_raw(series, &o), d.clone());
            }
        }

        #[test]
        fn orbit_size_divides_group_order((series, c) in series_and_tuple()) {
            let n = match series { Series::Sl => c.len() - 1, _ => c.len() };
            let a = Algebra::new(series, n).unwrap();
            let orbit = weyl_orbit_raw(series, &c);
            prop_assert!(orbit.contains(&c));
            prop_assert_eq!(a.weyl_order() % orbit.len() as u128, 0);
        }

        #[test]
        fn central_character_separates_orbits((series, c) in series_and_tuple(), (_, d) in series_and_tuple()) {
            prop_assume!(c.len() == d.len());
            let n = match series { Series::Sl => c.len() - 1, _ => c.len() };
            let a = Algebra::new(series, n).unwrap();
            prop_assume!(check_lattice(series, &d).is_ok());
            let wc = make_dominant(a, &c).unwrap();
            let wd = make_dominant(a, &d).unwrap();
            let plus = |w: &Weight| -> Vec<i64> {
                w.doubled().iter().zip(rho(a)).map(|(x, r)| x + r).collect()
            };
            let same_orbit = weyl_orbit_raw(series, &plus(&wc)).contains(&plus(&wd));
            prop_assert_eq!(central_character(&wc) == central_character(&wd), same_orbit);
        }

        #[test]
        fn print_parse_round_trip((series, c) in series_and_tuple()) {
            let n = match series { Series::Sl => c.len() - 1, _ => c.len() };
            let a = Algebra::new(series, n).unwrap();
            let w = make_dominant(a, &c).unwrap();
            prop_assert_eq!(Weight::parse(a, &w.to_string()).unwrap(), w);
        }
    }
}
