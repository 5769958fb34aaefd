use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{CriterionReport, Recorder};
use crate::cls::{
    coherence_check, contains, dominant_weights_within, enumerate_irreducibles, level_set,
    level_set_from_sequences, product,
    product_levelwise, EnumBounds, IrreducibleCls, LevelSet, DEFAULT_WINDOW,
};
use crate::ideals::{
    central_character_level_set, closure_characters, enumerate_primes, maximal_primes,
    nonintegrable_catalog, saturated_cls, submaximal_primes, var, CharacterLevelSet, PrimeIdeal,
    VarSymbol,
};
use crate::rep_oracle::InterlacingBranch;
use crate::weights::{Algebra, Series};

/// Largest rank at which the classification criteria compare level sets.
const TOP_RANK: usize = 4;
/// Ranks tried when a disagreement at `TOP_RANK` is followed up.
const ESCALATION_RANKS: [usize; 2] = [5, 6];
/// Window for the containment brute force. Finite sequences within the
/// standard bounds cap a coordinate at 8, and separating an infinite prefix
/// from such a cap needs weights of size up to `4 · 4`.
const CONTAINMENT_WINDOW: u32 = 16;


/// Rough size used to order searches so that witnesses are found early.
fn heft(q: &IrreducibleCls) -> u32 {
    q.v() * 8
        + q.w() * 8
        + q.m() * 4
        + q.x().values().sum::<u32>()
        + q.z().values().sum::<u32>()
        + q.spin() as u32
}

pub fn minimal_cls_suite(bounds: EnumBounds) -> CriterionReport {
    let mut rec = Recorder::new(1, "minimal c.l.s.");
    let mut counts = Vec::new();
    for family in Series::ALL {
        let mut all = enumerate_irreducibles(family, bounds);
        all.sort_by_key(heft);
        let minimal: BTreeSet<IrreducibleCls> = all
            .iter()
            .filter(|q| {
                !all.iter()
                    .any(|p| p != *q && contains(q, p).expect("single family"))
            })
            .cloned()
            .collect();
        let mut expect: BTreeSet<IrreducibleCls> = [IrreducibleCls::trivial(family)].into();
        if family == Series::So {
            expect.insert(IrreducibleCls::spinor());
        }
        rec.check(minimal == expect, || {
            format!(
                "{family}: minimal elements {:?}",
                minimal.iter().map(|q| q.to_string()).collect::<Vec<_>>()
            )
        });
        counts.push(format!("{} {}→{}", family, all.len(), minimal.len()));
    }
    rec.finish(format!("enumerated→minimal: {}", counts.join(", ")))
}

pub fn maximal_ideal_suite(bounds: EnumBounds) -> CriterionReport {
    let mut rec = Recorder::new(2, "maximal and submaximal integrable ideals");
    let mut counts = Vec::new();
    for family in Series::ALL {
        let primes = enumerate_primes(family, bounds);
        let max: BTreeSet<PrimeIdeal> = maximal_primes(family, bounds).into_iter().collect();
        let mut expect_max: BTreeSet<PrimeIdeal> = [PrimeIdeal::augmentation(family)].into();
        if family == Series::So {
            expect_max.insert(PrimeIdeal::new(0, IrreducibleCls::spinor()).expect("finite type"));
        }
        rec.check(max == expect_max, || {
            format!("{family}: maxima {:?}", max.iter().map(|p| p.to_string()).collect::<Vec<_>>())
        });
        // every enumerated prime lies below one of the maxima
        let max_sats: Vec<_> = max.iter().map(saturated_cls).collect();
        for p in &primes {
            let sat = saturated_cls(p);
            let below = max_sats
                .iter()
                .any(|m| sat.contains(m).expect("single family"));
            rec.check(below, || format!("{family}: {p} lies below no maximum"));
        }
        let sub: BTreeSet<PrimeIdeal> = submaximal_primes(family, bounds).into_iter().collect();
        let prime_of = |s: &str| {
            PrimeIdeal::of_cls(&crate::cls::parse_irreducible(family, s).expect("literal"))
                .expect("finite type")
        };
        let expect_sub: Option<BTreeSet<PrimeIdeal>> = match family {
            Series::Sl => Some([prime_of("L(1)"), prime_of("R(1)")].into()),
            Series::Sp => Some([prime_of("L(1)")].into()),
            Series::So => None,
        };
        let shown: Vec<String> = sub.iter().map(|p| p.to_string()).collect();
        match expect_sub {
            Some(e) => rec.check(sub == e, || format!("{family}: submaximal {shown:?}")),
            None => rec.note(format!("{family}: submaximal (reported only) {shown:?}")),
        }
        counts.push(format!("{} {} primes", family, primes.len()));
    }
    rec.finish(format!("unique/paired maxima and submaxima over {}", counts.join(", ")))
}

/// The basic c.l.s. of a family up to the standard index bounds.
fn basic_cls(family: Series, bounds: EnumBounds) -> Vec<IrreducibleCls> {
    let mut out = vec![IrreducibleCls::e(family), IrreducibleCls::top(family)];
    for p in 1..=bounds.max_index {
        out.push(IrreducibleCls::l(family, p).expect("valid index"));
        if family == Series::Sl {
            out.push(IrreducibleCls::r(p).expect("valid index"));
        }
    }
    for v in 1..=bounds.v {
        out.push(IrreducibleCls::linf(family, v));
    }
    if family == Series::Sl {
        for w in 1..=bounds.w {
            out.push(IrreducibleCls::rinf(w));
        }
    }
    if family == Series::So {
        out.push(IrreducibleCls::spinor());
    }
    out
}

pub fn coherence_suite() -> CriterionReport {
    coherence_suite_with(&Series::ALL, TOP_RANK, DEFAULT_WINDOW)
}

/// Criterion 3 restricted to some families, a top rank and a window.
pub fn coherence_suite_with(families: &[Series], nmax: usize, window: u32) -> CriterionReport {
    let mut rec = Recorder::new(3, "coherence Q_m = <Q_n>_m");
    let bounds = super::STANDARD_BOUNDS;
    let mut checks = 0usize;
    for &family in families {
        let brancher = InterlacingBranch::new();
        let mut forms: BTreeSet<IrreducibleCls> = basic_cls(family, bounds).into_iter().collect();
        forms.extend(enumerate_irreducibles(family, bounds.finite_only()));
        for q in &forms {
            for n in 2..=nmax {
                for m in family.min_rank()..n {
                    checks += 1;
                    match coherence_check(&brancher, q, n, m, window) {
                        Ok(r) => rec.check(r.coherent(), || {
                            format!(
                                "{family} {q} n={n} m={m}: missing {:?} extra {:?}",
                                r.missing.iter().take(3).map(|w| w.to_string()).collect::<Vec<_>>(),
                                r.extra.iter().take(3).map(|w| w.to_string()).collect::<Vec<_>>()
                            )
                        }),
                        Err(e) => rec.fail(format!("{family} {q} n={n} m={m}: {e}")),
                    }
                }
            }
        }
    }
    rec.finish(format!(
        "{checks} (c.l.s., n, m) checks, ranks ≤ {nmax}, window {window}"
    ))
}

/// Factor bounds for the product law: every product stays within the standard bounds.
pub(crate) const PRODUCT_FACTOR_BOUNDS: EnumBounds = EnumBounds {
    v: 0,
    w: 0,
    m: 1,
    max_index: 3,
    max_exp: 1,
    spin: false,
    top: false,
};

pub fn levelwise_product_suite() -> CriterionReport {
    let mut rec = Recorder::new(4, "levelwise product law");
    let mut checks = 0usize;
    for family in [Series::Sl, Series::Sp] {
        let forms = enumerate_irreducibles(family, PRODUCT_FACTOR_BOUNDS);
        for (i, a) in forms.iter().enumerate() {
            for b in &forms[i..] {
                let ab = product(a, b).expect("finite-type factors");
                for n in 1..=TOP_RANK {
                    checks += 1;
                    let direct = level_set_from_sequences(&ab, n).expect("valid rank");
                    let levelwise = product_levelwise(a, b, n, 0).expect("valid rank");
                    rec.check(direct == levelwise, || {
                        format!(
                            "{family} ({a})·({b}) n={n}: {} vs {} weights",
                            direct.len(),
                            levelwise.len()
                        )
                    });
                }
            }
        }
    }
    rec.finish(format!(
        "{checks} (pair, n) checks for sl, sp; factors m ≤ 1, indices ≤ 3, exponents ≤ 1"
    ))
}

/// Bitsets of level sets over a shared finite universe of weights at one rank.
/// One extra bit marks infinite level sets, so an infinite set is never
/// counted inside a finite one just because the window cut it short.
struct LevelTable {
    index: HashMap<Vec<i64>, usize>,
    infinite_bit: usize,
    words: usize,
}

impl LevelTable {
    fn new(universe: &BTreeSet<Vec<i64>>) -> Self {
        let index = universe
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        LevelTable {
            index,
            infinite_bit: universe.len(),
            words: (universe.len() + 1).div_ceil(64),
        }
    }

    fn bits(&self, level: &LevelSet) -> Vec<u64> {
        let mut out = vec![0u64; self.words];
        for (w, &i) in &self.index {
            if level.contains_raw(w) {
                out[i / 64] |= 1 << (i % 64);
            }
        }
        if !level.is_finite() {
            out[self.infinite_bit / 64] |= 1 << (self.infinite_bit % 64);
        }
        out
    }
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Members of the universe of a rank: every finite level set plus the window.
fn universe(family: Series, n: usize, forms: &[IrreducibleCls], window: u32) -> BTreeSet<Vec<i64>> {
    let algebra = Algebra::new(family, n).expect("valid rank");
    let mut u: BTreeSet<Vec<i64>> = dominant_weights_within(algebra, window).as_ref().clone();
    for q in forms.iter().filter(|q| q.is_finite_type()) {
        u.extend(level_set(q, n).expect("valid rank").raw_members());
    }
    u
}

fn levelwise_tables(family: Series, forms: &[IrreducibleCls], ranks: &[usize], window: u32) -> Vec<Vec<Vec<u64>>> {
    ranks
        .iter()
        .map(|&n| {
            let table = LevelTable::new(&universe(family, n, forms, window));
            forms
                .iter()
                .map(|q| table.bits(&level_set(q, n).expect("valid rank")))
                .collect()
        })
        .collect()
}

pub fn containment_vs_levelwise(bounds: EnumBounds) -> CriterionReport {
    let mut rec = Recorder::new(5, "inclusion criterion vs levelwise containment");
    let mut pairs = 0usize;
    let mut summary = Vec::new();
    for family in Series::ALL {
        let forms = enumerate_irreducibles(family, bounds);
        let ranks: Vec<usize> = (family.min_rank()..=TOP_RANK).collect();
        let window = CONTAINMENT_WINDOW;
        let tables = levelwise_tables(family, &forms, &ranks, window);
        let mut unsound = Vec::new();
        let mut incomplete = Vec::new();
        for (i, q) in forms.iter().enumerate() {
            for (j, qp) in forms.iter().enumerate() {
                pairs += 1;
                let crit = contains(q, qp).expect("single family");
                let level = tables.iter().all(|t| subset(&t[j], &t[i]));
                if crit && !level {
                    unsound.push((i, j));
                } else if !crit && level {
                    incomplete.push((i, j));
                }
            }
        }
        for &(i, j) in unsound.iter().take(4) {
            rec.fail(format!(
                "{family}: criterion says {} ⊇ {} but a level set at n ≤ {TOP_RANK} is not contained",
                forms[i], forms[j]
            ));
        }
        if !incomplete.is_empty() {
            rec.fail(format!(
                "{family}: {} pair(s) contained at every n ≤ {TOP_RANK} although the criterion rejects them, e.g. {} ⊇? {}",
                incomplete.len(),
                forms[incomplete[0].0],
                forms[incomplete[0].1]
            ));
            rec.add_failures(incomplete.len() - 1);
            rec.note(escalate_containment(family, &forms, &incomplete, window));
        }
        rec.add_failures(unsound.len().saturating_sub(4));
        summary.push(format!(
            "{family}: {} forms, {} unsound, {} unseparated at n ≤ {TOP_RANK}",
            forms.len(),
            unsound.len(),
            incomplete.len()
        ));
    }
    rec.finish(format!("{pairs} ordered pairs; {}", summary.join("; ")))
}

/// Follows pairs that no rank up to `TOP_RANK` separates to higher ranks.
fn escalate_containment(
    family: Series,
    forms: &[IrreducibleCls],
    pairs: &[(usize, usize)],
    window: u32,
) -> String {
    let involved: BTreeSet<usize> = pairs.iter().flat_map(|&(i, j)| [i, j]).collect();
    let sub: Vec<IrreducibleCls> = involved.iter().map(|&i| forms[i].clone()).collect();
    let pos: BTreeMap<usize, usize> = involved.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let mut separated_at: BTreeMap<usize, usize> = BTreeMap::new();
    let mut remaining: Vec<(usize, usize)> = pairs.iter().map(|&(i, j)| (pos[&i], pos[&j])).collect();
    for n in ESCALATION_RANKS {
        let table = &levelwise_tables(family, &sub, &[n], window)[0];
        let before = remaining.len();
        remaining.retain(|&(i, j)| subset(&table[j], &table[i]));
        separated_at.insert(n, before - remaining.len());
    }
    let example = remaining
        .first()
        .map(|&(i, j)| format!(", e.g. {} ⊇? {}", sub[i], sub[j]))
        .unwrap_or_default();
    format!(
        "{family}: follow-up of {} unseparated pair(s): separated at n=5: {}, n=6: {}, still unseparated: {}{example}",
        pairs.len(),
        separated_at[&5],
        separated_at[&6],
        remaining.len()
    )
}

/// Characters of a prime at every tested rank.
fn character_profile(p: &PrimeIdeal, ranks: &[usize]) -> Vec<BTreeSet<CharacterLevelSet>> {
    ranks
        .iter()
        .map(|&n| central_character_level_set(p, n).expect("valid rank"))
        .collect()
}

pub fn separation_suite(bounds: EnumBounds) -> CriterionReport {
    let mut rec = Recorder::new(6, "separation by central characters");
    let mut summary = Vec::new();
    for family in Series::ALL {
        let primes = enumerate_primes(family, bounds);
        let ranks: Vec<usize> = (family.min_rank()..=TOP_RANK).collect();
        let mut groups: HashMap<Vec<BTreeSet<CharacterLevelSet>>, Vec<usize>> = HashMap::new();
        for (i, p) in primes.iter().enumerate() {
            groups.entry(character_profile(p, &ranks)).or_default().push(i);
        }
        let clashes: Vec<&Vec<usize>> = groups.values().filter(|g| g.len() > 1).collect();
        let colliding: usize = clashes.iter().map(|g| g.len()).sum();
        if let Some(g) = clashes.iter().min_by_key(|g| (g.len(), g[0])) {
            rec.fail(format!(
                "{family}: {} prime(s) in {} class(es) share characters at every n ≤ {TOP_RANK}, e.g. {}",
                colliding,
                clashes.len(),
                g.iter().map(|&i| primes[i].to_string()).collect::<Vec<_>>().join(" ~ ")
            ));
            rec.add_failures(colliding.saturating_sub(1));
            let mut still = 0usize;
            for g in &clashes {
                let mut sub: HashMap<Vec<BTreeSet<CharacterLevelSet>>, usize> = HashMap::new();
                for &i in g.iter() {
                    *sub.entry(character_profile(&primes[i], &ESCALATION_RANKS)).or_default() += 1;
                }
                still += sub.values().filter(|&&c| c > 1).map(|c| c - 1).sum::<usize>();
            }
            rec.note(format!(
                "{family}: follow-up at n = 5, 6: {still} prime(s) still share characters with another"
            ));
        }
        summary.push(format!("{family}: {} primes, {} colliding", primes.len(), colliding));
    }
    let sl1 = PrimeIdeal::new(1, IrreducibleCls::trivial(Series::Sl)).expect("finite type");
    let sat = saturated_cls(&sl1);
    for n in 1..=TOP_RANK {
        let per: Vec<CharacterLevelSet> = sat
            .components()
            .iter()
            .map(|c| closure_characters(&level_set(c, n).expect("valid rank")))
            .collect();
        rec.check(per.windows(2).all(|w| w[0] == w[1]), || {
            format!("sl Linf(1)/Rinf(1) characters differ at n={n}")
        });
    }
    summary.push("sl Linf(1), Rinf(1) sides agree at n ≤ 4".into());
    rec.finish(summary.join("; "))
}

pub fn var_suite(bounds: EnumBounds) -> CriterionReport {
    let mut rec = Recorder::new(7, "Var map");
    let mut checked = 0usize;
    for family in Series::ALL {
        for p in enumerate_primes(family, bounds) {
            checked += 1;
            let got = var(&p);
            let r = match family {
                Series::Sl => p.v(),
                _ => 2 * p.v(),
            };
            rec.check(
                got.series() == family && got.r() == r && got.integrable_realizable(),
                || format!("{p}: var {got}"),
            );
        }
    }
    for r in 0..8u32 {
        let s = VarSymbol::new(Series::So, r, true);
        rec.check(s.r() == r - r % 2, || format!("so r={r} normalized to {}", s.r()));
    }
    match nonintegrable_catalog(Series::Sp, 3) {
        Ok(cat) => {
            for e in &cat {
                rec.check(
                    e.var.r() == 2 * e.v + 1 && !e.var.integrable_realizable(),
                    || format!("catalog v={} has {}", e.v, e.var),
                );
            }
            rec.check(cat.len() == 4, || format!("catalog has {} entries", cat.len()));
        }
        Err(e) => rec.fail(format!("catalog: {e}")),
    }
    rec.finish(format!("{checked} enumerated primes, so normalization r < 8, sp catalog v ≤ 3"))
}
