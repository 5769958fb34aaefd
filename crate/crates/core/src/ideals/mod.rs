//! Prime integrable ideals of `U(g∞)` through their coherent local systems.
//!
//! A prime integrable ideal is `I(v, Q_f)` for a depth `v` and a finite-type
//! monomial `Q_f`. For `sl` the right depth is folded into `v`, since the
//! annihilators of `Linf(1)` and `Rinf(1)` agree. Order is decided on the
//! saturated c.l.s. `Q(I)`, which reverses inclusion.

mod character;
mod hasse;

use std::collections::BTreeSet;
use std::fmt;

use crate::cls::{
    enumerate_irreducibles, reduce_components, Cls, EnumBounds, IrreducibleCls,
    NormalFormData,
};
use crate::error::{Error, Result};
use crate::weights::Series;

pub use character::{central_character_level_set, closure_characters, CharacterLevelSet};
pub use hasse::{hasse_diagram, maximal_primes, submaximal_primes, HasseDiagram};

/// `cls(v, w, Q_f) = Linf(1)^{⊗v} ⊗ Rinf(1)^{⊗w} ⊗ Q_f` in normal form.
pub fn cls_with_depths(qf: &IrreducibleCls, v: u32, w: u32) -> Result<IrreducibleCls> {
    if !qf.is_finite_type() {
        return Err(Error::InfiniteType);
    }
    if w > 0 && qf.family() != Series::Sl {
        return Err(Error::NormalForm(format!("Rinf exists only for sl, not {}", qf.family())));
    }
    let d = qf.data();
    IrreducibleCls::new(
        qf.family(),
        NormalFormData {
            v,
            w,
            x: d.x.into_iter().map(|(i, e)| (i + v, e)).collect(),
            z: d.z.into_iter().map(|(j, e)| (j + w, e)).collect(),
            ..d
        },
    )
}

/// The finite part `Q_f` of an irreducible c.l.s., indices shifted back to start at 1.
pub fn finite_part(q: &IrreducibleCls) -> Result<IrreducibleCls> {
    if q.is_top() {
        return Err(Error::TopElement);
    }
    let d = q.data();
    IrreducibleCls::new(
        q.family(),
        NormalFormData {
            v: 0,
            w: 0,
            x: d.x.into_iter().map(|(i, e)| (i - q.v(), e)).collect(),
            z: d.z.into_iter().map(|(j, e)| (j - q.w(), e)).collect(),
            ..d
        },
    )
}

/// A prime integrable ideal `I(v, Q_f)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeIdeal {
    family: Series,
    v: u32,
    qf: IrreducibleCls,
}

impl PrimeIdeal {
    pub fn new(v: u32, qf: IrreducibleCls) -> Result<Self> {
        if !qf.is_finite_type() {
            return Err(Error::InfiniteType);
        }
        Ok(PrimeIdeal {
            family: qf.family(),
            v,
            qf,
        })
    }

    /// The augmentation ideal `I(trivial)`.
    pub fn augmentation(family: Series) -> Self {
        PrimeIdeal {
            family,
            v: 0,
            qf: IrreducibleCls::trivial(family),
        }
    }

    /// The annihilator of an irreducible c.l.s. (`Einf` has annihilator zero
    /// and is not represented).
    pub fn of_cls(q: &IrreducibleCls) -> Result<Self> {
        PrimeIdeal::new(q.v() + q.w(), finite_part(q)?)
    }

    pub fn family(&self) -> Series {
        self.family
    }
    pub fn v(&self) -> u32 {
        self.v
    }
    pub fn finite_part(&self) -> &IrreducibleCls {
        &self.qf
    }

    /// The left irreducible c.l.s. `cls(v, Q_f)`.
    pub fn left_cls(&self) -> IrreducibleCls {
        cls_with_depths(&self.qf, self.v, 0).expect("finite part is validated")
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I({})", self.left_cls())
    }
}

/// `Q(I)`: for `so`/`sp` the single component `cls(v, Q_f)`, for `sl` the
/// union of `cls(v', v'', Q_f)` over `v' + v'' = v`.
pub fn saturated_cls(ideal: &PrimeIdeal) -> Cls {
    let parts: Vec<IrreducibleCls> = match ideal.family {
        Series::Sl => (0..=ideal.v)
            .map(|a| cls_with_depths(&ideal.qf, a, ideal.v - a).expect("finite part is validated"))
            .collect(),
        _ => vec![ideal.left_cls()],
    };
    reduce_components(ideal.family, &parts).expect("single family")
}

/// Left components of `Q(I)` (for `sl` those without an `Rinf` factor).
pub fn left_components(saturated: &Cls) -> Vec<IrreducibleCls> {
    saturated
        .components()
        .iter()
        .filter(|c| c.w() == 0)
        .cloned()
        .collect()
}

/// `I1 ⊆ I2`, i.e. `Q(I2) ⊆ Q(I1)`.
pub fn ideal_leq(i1: &PrimeIdeal, i2: &PrimeIdeal) -> Result<bool> {
    if i1.family != i2.family {
        return Err(Error::FamilyMismatch(i1.family, i2.family));
    }
    saturated_cls(i1).contains(&saturated_cls(i2))
}

/// An integrable ideal as the intersection of an antichain of primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegrableIdeal {
    family: Series,
    primes: Vec<PrimeIdeal>,
}

impl IntegrableIdeal {
    /// Intersection of primes; primes containing another one are dropped.
    pub fn intersection(family: Series, primes: &[PrimeIdeal]) -> Result<Self> {
        let uniq: BTreeSet<PrimeIdeal> = primes.iter().cloned().collect();
        let uniq: Vec<PrimeIdeal> = uniq.into_iter().collect();
        let mut keep = Vec::new();
        for (i, p) in uniq.iter().enumerate() {
            if p.family != family {
                return Err(Error::FamilyMismatch(family, p.family));
            }
            let mut redundant = false;
            for (j, q) in uniq.iter().enumerate() {
                if i != j && ideal_leq(q, p)? {
                    redundant = true;
                    break;
                }
            }
            if !redundant {
                keep.push(p.clone());
            }
        }
        Ok(IntegrableIdeal {
            family,
            primes: keep,
        })
    }

    /// The annihilator of a c.l.s., `∩ I(Q_j)` over its components.
    pub fn of_cls(q: &Cls) -> Result<Self> {
        let primes = q
            .components()
            .iter()
            .map(PrimeIdeal::of_cls)
            .collect::<Result<Vec<_>>>()?;
        Self::intersection(q.family(), &primes)
    }

    pub fn primes(&self) -> &[PrimeIdeal] {
        &self.primes
    }

    /// `Q(I)`, the union of the saturations of the primes.
    pub fn saturated_cls(&self) -> Cls {
        let parts: Vec<IrreducibleCls> = self
            .primes
            .iter()
            .flat_map(|p| saturated_cls(p).components().to_vec())
            .collect();
        reduce_components(self.family, &parts).expect("single family")
    }

    pub fn leq(&self, other: &IntegrableIdeal) -> Result<bool> {
        if self.family != other.family {
            return Err(Error::FamilyMismatch(self.family, other.family));
        }
        self.saturated_cls().contains(&other.saturated_cls())
    }
}

impl fmt::Display for IntegrableIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.primes.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(" ∩ "))
    }
}

/// Distinct primes annihilating the enumerated irreducible c.l.s. (`Einf` excluded).
pub fn enumerate_primes(family: Series, bounds: EnumBounds) -> Vec<PrimeIdeal> {
    let set: BTreeSet<PrimeIdeal> = enumerate_irreducibles(family, EnumBounds { top: false, ..bounds })
        .iter()
        .map(|q| PrimeIdeal::of_cls(q).expect("enumerated forms are not top"))
        .collect();
    set.into_iter().collect()
}

/// Associated variety label `s∞^{≤r}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarSymbol {
    series: Series,
    r: u32,
    integrable_realizable: bool,
}

impl VarSymbol {
    /// `so` ranks are rounded down to even; odd `sp` ranks are never integrable.
    pub fn new(series: Series, r: u32, integrable_realizable: bool) -> Self {
        let r = if series == Series::So { r & !1 } else { r };
        let integrable_realizable = integrable_realizable && !(series == Series::Sp && r % 2 == 1);
        VarSymbol {
            series,
            r,
            integrable_realizable,
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }
    pub fn r(&self) -> u32 {
        self.r
    }
    pub fn integrable_realizable(&self) -> bool {
        self.integrable_realizable
    }
}

impl fmt::Display for VarSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}<={}", self.series, self.r)
    }
}

/// `Var(I(v, Q_f))`: `sl^{≤v}`, `so^{≤2v}`, `sp^{≤2v}`.
pub fn var(ideal: &PrimeIdeal) -> VarSymbol {
    let r = match ideal.family {
        Series::Sl => ideal.v,
        _ => 2 * ideal.v,
    };
    VarSymbol::new(ideal.family, r, true)
}

/// A known non-integrable primitive ideal of `U(sp∞)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub v: u32,
    pub description: String,
    pub var: VarSymbol,
}

/// Annihilators of `S(V ⊗ F^v) ⊗ V_W` for `v = 0..=vmax`, with variety `sp^{≤2v+1}`.
pub fn nonintegrable_catalog(family: Series, vmax: i64) -> Result<Vec<CatalogEntry>> {
    if family != Series::Sp {
        return Err(Error::Precondition(format!(
            "the catalog covers sp only, not {family}"
        )));
    }
    Ok((0..=vmax)
        .map(|v| {
            let v = v as u32;
            let description = if v == 0 {
                "I_W: kernel of U(sp∞) in the Weyl algebra; I_W ∩ U(sp_2n) is a Joseph ideal".to_string()
            } else {
                format!("Ann S(V ⊗ F^{v}) ⊗ V_W")
            };
            CatalogEntry {
                v,
                description,
                var: VarSymbol::new(Series::Sp, 2 * v + 1, false),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests;
