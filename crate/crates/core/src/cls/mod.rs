//! Coherent local systems.
//!
//! An irreducible c.l.s. is stored as its unique monomial normal form
//!
//! ```text
//! (Linf(v) · Π L(i)^x_i) · E^m · (Π R(j)^z_j · Rinf(w)) [· Spin]
//! ```
//!
//! with `i > v` and `j > w`. `R` factors exist only for `sl`, `Spin` only for
//! `so`. The top element `Einf` (every module at every level) is kept as a
//! separate flag.
//!
//! Inclusion is decided from the `l`/`r` sequences of the monomial
//! ([`contains`]); level sets are built independently from exterior-power
//! constituents and Cartan products ([`level_set`]), and coherence is checked
//! against the branching oracle ([`coherence_check`]).

mod coherence;
mod level;
mod parse;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::weights::Series;

pub use coherence::{coherence_check, CoherenceReport};
pub use level::{
    level_set, level_set_from_sequences, product_levelwise, tensor_levelwise, weight_size, LevelSet, LevelShape,
    DEFAULT_WINDOW,
};
pub(crate) use level::{dominant_weights_within, FiniteKey};
pub use parse::{parse_cls, parse_irreducible};

/// Raw exponent data of a monomial, before validation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NormalFormData {
    pub v: u32,
    pub w: u32,
    pub x: BTreeMap<u32, u32>,
    pub z: BTreeMap<u32, u32>,
    pub m: u32,
    pub spin: bool,
    pub top: bool,
}

/// An irreducible c.l.s. in normal form. Equality is equality of c.l.s.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrreducibleCls {
    family: Series,
    top: bool,
    v: u32,
    w: u32,
    m: u32,
    x: BTreeMap<u32, u32>,
    z: BTreeMap<u32, u32>,
    spin: bool,
}

impl IrreducibleCls {
    /// Validates monomial data into a normal form.
    pub fn new(family: Series, data: NormalFormData) -> Result<Self> {
        validate_normal_form(family, data)
    }

    pub fn trivial(family: Series) -> Self {
        IrreducibleCls {
            family,
            top: false,
            v: 0,
            w: 0,
            m: 0,
            x: BTreeMap::new(),
            z: BTreeMap::new(),
            spin: false,
        }
    }

    /// `Einf`, the c.l.s. of all modules.
    pub fn top(family: Series) -> Self {
        IrreducibleCls {
            top: true,
            ..Self::trivial(family)
        }
    }

    pub fn e(family: Series) -> Self {
        IrreducibleCls {
            m: 1,
            ..Self::trivial(family)
        }
    }

    pub fn l(family: Series, p: u32) -> Result<Self> {
        let mut d = NormalFormData::default();
        d.x.insert(p, 1);
        Self::new(family, d)
    }

    pub fn linf(family: Series, v: u32) -> Self {
        IrreducibleCls {
            v,
            ..Self::trivial(family)
        }
    }

    pub fn r(q: u32) -> Result<Self> {
        let mut d = NormalFormData::default();
        d.z.insert(q, 1);
        Self::new(Series::Sl, d)
    }

    pub fn rinf(w: u32) -> Self {
        IrreducibleCls {
            w,
            ..Self::trivial(Series::Sl)
        }
    }

    /// The spinor c.l.s. `R` of `so`.
    pub fn spinor() -> Self {
        IrreducibleCls {
            spin: true,
            ..Self::trivial(Series::So)
        }
    }

    pub fn family(&self) -> Series {
        self.family
    }
    pub fn is_top(&self) -> bool {
        self.top
    }
    pub fn v(&self) -> u32 {
        self.v
    }
    pub fn w(&self) -> u32 {
        self.w
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn x(&self) -> &BTreeMap<u32, u32> {
        &self.x
    }
    pub fn z(&self) -> &BTreeMap<u32, u32> {
        &self.z
    }
    pub fn spin(&self) -> bool {
        self.spin
    }

    pub fn is_trivial(&self) -> bool {
        *self == Self::trivial(self.family)
    }

    /// Finite type: every level set is finite.
    pub fn is_finite_type(&self) -> bool {
        !self.top && self.v == 0 && self.w == 0
    }

    pub fn data(&self) -> NormalFormData {
        NormalFormData {
            v: self.v,
            w: self.w,
            x: self.x.clone(),
            z: self.z.clone(),
            m: self.m,
            spin: self.spin,
            top: self.top,
        }
    }

    /// Index beyond which both sequences are constant.
    fn horizon(&self) -> usize {
        let xs = self.x.keys().next_back().copied().unwrap_or(0);
        let zs = self.z.keys().next_back().copied().unwrap_or(0);
        xs.max(zs).max(self.v).max(self.w) as usize + 1
    }

    /// `l_i` (1-based), `None` for `+∞`.
    fn l_at(&self, i: usize) -> Option<u32> {
        if i <= self.v as usize {
            return None;
        }
        Some(self.m + self.x.range(i as u32..).map(|(_, e)| e).sum::<u32>())
    }

    fn r_at(&self, i: usize) -> Option<u32> {
        if i <= self.w as usize {
            return None;
        }
        Some(self.m + self.z.range(i as u32..).map(|(_, e)| e).sum::<u32>())
    }

    /// The finite part `Q_f` with indices shifted down past the infinite prefixes.
    pub(crate) fn finite_key(&self) -> FiniteKey {
        FiniteKey {
            x: self.x.iter().map(|(&i, &e)| (i - self.v, e)).collect(),
            z: self.z.iter().map(|(&j, &e)| (j - self.w, e)).collect(),
            m: self.m,
            spin: self.spin,
        }
    }
}

pub fn validate_normal_form(family: Series, data: NormalFormData) -> Result<IrreducibleCls> {
    let NormalFormData {
        v,
        w,
        mut x,
        mut z,
        m,
        spin,
        top,
    } = data;
    x.retain(|_, e| *e > 0);
    z.retain(|_, e| *e > 0);
    if top {
        if v != 0 || w != 0 || m != 0 || spin || !x.is_empty() || !z.is_empty() {
            return Err(Error::NormalForm("Einf admits no further factors".into()));
        }
        return Ok(IrreducibleCls::top(family));
    }
    if let Some(&i) = x.keys().find(|&&i| i <= v) {
        return Err(Error::NormalForm(format!(
            "L({i}) must have index above the Linf depth {v}"
        )));
    }
    if family != Series::Sl && (w != 0 || !z.is_empty()) {
        return Err(Error::NormalForm(format!("R factors exist only for sl, not {family}")));
    }
    if let Some(&j) = z.keys().find(|&&j| j <= w) {
        return Err(Error::NormalForm(format!(
            "R({j}) must have index above the Rinf depth {w}"
        )));
    }
    if spin && family != Series::So {
        return Err(Error::NormalForm(format!("Spin exists only for so, not {family}")));
    }
    Ok(IrreducibleCls {
        family,
        top: false,
        v,
        w,
        m,
        x,
        z,
        spin,
    })
}

impl fmt::Display for IrreducibleCls {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.top {
            return f.write_str("Einf");
        }
        let pow = |base: String, e: u32| {
            if e == 1 {
                base
            } else {
                format!("{base}^{e}")
            }
        };
        let mut parts = Vec::new();
        if self.v > 0 {
            parts.push(format!("Linf({})", self.v));
        }
        for (i, e) in &self.x {
            parts.push(pow(format!("L({i})"), *e));
        }
        if self.m > 0 {
            parts.push(pow("E".into(), self.m));
        }
        for (j, e) in &self.z {
            parts.push(pow(format!("R({j})"), *e));
        }
        if self.w > 0 {
            parts.push(format!("Rinf({})", self.w));
        }
        if self.spin {
            parts.push("Spin".into());
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// The `l` and `r` sequences of a monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrSequences {
    /// Number of leading `+∞` entries of `l` (the `Linf` depth).
    pub l_infinite_prefix: u32,
    /// `l_{v+1}, l_{v+2}, ...` up to the first index where the sequence is constant.
    pub l_tail: Vec<u32>,
    pub r_infinite_prefix: u32,
    pub r_tail: Vec<u32>,
    /// Common limit `m`.
    pub limit: u32,
}

impl LrSequences {
    /// `l_i` for `i ≥ 1`, `None` meaning `+∞`.
    pub fn l(&self, i: usize) -> Option<u32> {
        seq_at(self.l_infinite_prefix, &self.l_tail, self.limit, i)
    }

    pub fn r(&self, i: usize) -> Option<u32> {
        seq_at(self.r_infinite_prefix, &self.r_tail, self.limit, i)
    }
}

fn seq_at(prefix: u32, tail: &[u32], limit: u32, i: usize) -> Option<u32> {
    assert!(i >= 1, "sequences are 1-based");
    if i <= prefix as usize {
        return None;
    }
    Some(tail.get(i - prefix as usize - 1).copied().unwrap_or(limit))
}

pub fn lr_sequences(q: &IrreducibleCls) -> Result<LrSequences> {
    if q.top {
        return Err(Error::TopElement);
    }
    let h = q.horizon();
    let l_tail = (q.v as usize + 1..=h).filter_map(|i| q.l_at(i)).collect();
    let r_tail = if q.family == Series::Sl {
        (q.w as usize + 1..=h).filter_map(|i| q.r_at(i)).collect()
    } else {
        Vec::new()
    };
    Ok(LrSequences {
        l_infinite_prefix: q.v,
        l_tail,
        r_infinite_prefix: q.w,
        r_tail,
        limit: q.m,
    })
}

/// `s_i ≥ s'_i + shift` for every `i`, with `None` as `+∞`.
fn dominates(
    s: impl Fn(usize) -> Option<u32>,
    sp: impl Fn(usize) -> Option<u32>,
    shift: u32,
    horizon: usize,
) -> bool {
    (1..=horizon).all(|i| match (s(i), sp(i)) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(a), Some(b)) => a >= b + shift,
    })
}

/// Whether `q` contains `qp`, by the `l`/`r` sequence criterion.
pub fn contains(q: &IrreducibleCls, qp: &IrreducibleCls) -> Result<bool> {
    if q.family != qp.family {
        return Err(Error::FamilyMismatch(q.family, qp.family));
    }
    if q.top {
        return Ok(true);
    }
    if qp.top {
        return Ok(false);
    }
    let horizon = q.horizon().max(qp.horizon());
    let l = |i| q.l_at(i);
    let lp = |i| qp.l_at(i);
    Ok(match q.family {
        Series::Sl => {
            if q.m < qp.m {
                return Ok(false);
            }
            let gap = q.m - qp.m;
            (0..=gap).any(|a| {
                dominates(l, lp, a, horizon)
                    && dominates(|i| q.r_at(i), |i| qp.r_at(i), gap - a, horizon)
            })
        }
        Series::Sp => dominates(l, lp, 0, horizon),
        Series::So => q.spin == qp.spin && dominates(l, lp, 0, horizon),
    })
}

/// A finite union of irreducible c.l.s., kept as an antichain of maximal components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cls {
    family: Series,
    components: Vec<IrreducibleCls>,
}

impl Cls {
    pub fn family(&self) -> Series {
        self.family
    }

    pub fn components(&self) -> &[IrreducibleCls] {
        &self.components
    }

    /// Componentwise inclusion `other ⊆ self`.
    pub fn contains(&self, other: &Cls) -> Result<bool> {
        if self.family != other.family {
            return Err(Error::FamilyMismatch(self.family, other.family));
        }
        for c in &other.components {
            let mut covered = false;
            for d in &self.components {
                if contains(d, c)? {
                    covered = true;
                    break;
                }
            }
            if !covered {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Cls {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Drops every component contained in another one.
pub fn reduce_components(family: Series, parts: &[IrreducibleCls]) -> Result<Cls> {
    let mut uniq: Vec<IrreducibleCls> = parts.to_vec();
    uniq.sort();
    uniq.dedup();
    let mut keep = Vec::new();
    for (i, c) in uniq.iter().enumerate() {
        if c.family != family {
            return Err(Error::FamilyMismatch(family, c.family));
        }
        let mut dominated = false;
        for (j, d) in uniq.iter().enumerate() {
            if i != j && contains(d, c)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            keep.push(c.clone());
        }
    }
    Ok(Cls {
        family,
        components: keep,
    })
}

/// Product of finite-type monomials: exponents add.
pub fn product(q1: &IrreducibleCls, q2: &IrreducibleCls) -> Result<IrreducibleCls> {
    if q1.family != q2.family {
        return Err(Error::FamilyMismatch(q1.family, q2.family));
    }
    if !q1.is_finite_type() || !q2.is_finite_type() {
        return Err(Error::InfiniteType);
    }
    if q1.spin && q2.spin {
        return Err(Error::SpinSquare);
    }
    let mut d = q1.data();
    for (i, e) in &q2.x {
        *d.x.entry(*i).or_insert(0) += e;
    }
    for (j, e) in &q2.z {
        *d.z.entry(*j).or_insert(0) += e;
    }
    d.m += q2.m;
    d.spin = q1.spin || q2.spin;
    validate_normal_form(q1.family, d)
}

/// Enumeration bounds for normal forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBounds {
    pub v: u32,
    pub w: u32,
    pub m: u32,
    /// Largest index `p` of a finite factor `L(p)` or `R(p)`.
    pub max_index: u32,
    pub max_exp: u32,
    /// Include spinor forms (`so` only).
    pub spin: bool,
    /// Include `Einf`.
    pub top: bool,
}

impl EnumBounds {
    pub fn uniform(k: u32, max_index: u32) -> Self {
        EnumBounds {
            v: k,
            w: k,
            m: k,
            max_index,
            max_exp: k,
            spin: true,
            top: false,
        }
    }

    pub fn finite_only(self) -> Self {
        EnumBounds {
            v: 0,
            w: 0,
            top: false,
            ..self
        }
    }
}

fn exponent_maps(lo: u32, hi: u32, max_exp: u32) -> Vec<BTreeMap<u32, u32>> {
    let mut out = vec![BTreeMap::new()];
    for i in lo..=hi {
        let mut next = Vec::new();
        for map in &out {
            for e in 0..=max_exp {
                let mut m = map.clone();
                if e > 0 {
                    m.insert(i, e);
                }
                next.push(m);
            }
        }
        out = next;
    }
    out
}

/// Every normal form within the bounds, without duplicates.
pub fn enumerate_irreducibles(family: Series, bounds: EnumBounds) -> Vec<IrreducibleCls> {
    let sl = family == Series::Sl;
    let w_max = if sl { bounds.w } else { 0 };
    let spins: &[bool] = if family == Series::So && bounds.spin {
        &[false, true]
    } else {
        &[false]
    };
    let mut out = Vec::new();
    for v in 0..=bounds.v {
        let xs = exponent_maps(v + 1, bounds.max_index, bounds.max_exp);
        for w in 0..=w_max {
            let zs = if sl {
                exponent_maps(w + 1, bounds.max_index, bounds.max_exp)
            } else {
                vec![BTreeMap::new()]
            };
            for x in &xs {
                for z in &zs {
                    for m in 0..=bounds.m {
                        for &spin in spins {
                            out.push(IrreducibleCls {
                                family,
                                top: false,
                                v,
                                w,
                                m,
                                x: x.clone(),
                                z: z.clone(),
                                spin,
                            });
                        }
                    }
                }
            }
        }
    }
    if bounds.top {
        out.push(IrreducibleCls::top(family));
    }
    out
}

#[cfg(test)]
mod tests;
