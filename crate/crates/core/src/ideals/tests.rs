use std::collections::BTreeSet;

use proptest::prelude::*;

use super::*;
use crate::cls::{level_set, parse_cls, parse_irreducible};
use crate::weights::{central_character, Algebra, Weight};

fn q(family: Series, s: &str) -> IrreducibleCls {
    parse_irreducible(family, s).unwrap()
}

fn prime(family: Series, v: u32, qf: &str) -> PrimeIdeal {
    PrimeIdeal::new(v, q(family, qf)).unwrap()
}

fn tiny() -> EnumBounds {
    EnumBounds::uniform(1, 2)
}

#[test]
fn saturation_examples() {
    assert_eq!(saturated_cls(&prime(Series::Sp, 1, "1")).to_string(), "Linf(1)");
    let sl = saturated_cls(&prime(Series::Sl, 1, "1"));
    let comps: BTreeSet<String> = sl.components().iter().map(|c| c.to_string()).collect();
    assert_eq!(comps, ["Linf(1)", "Rinf(1)"].map(String::from).into_iter().collect());
    for family in Series::ALL {
        let p = prime(family, 0, "E");
        assert_eq!(saturated_cls(&p).components(), [q(family, "E")]);
    }
    let shifted = saturated_cls(&prime(Series::Sl, 2, "L(1)*R(1)"));
    assert_eq!(
        shifted.to_string(),
        "L(1)*R(3)*Rinf(2) + Linf(1)*L(2)*R(2)*Rinf(1) + Linf(2)*L(3)*R(1)"
    );
}

#[test]
fn order_examples() {
    for family in [Series::Sl, Series::Sp] {
        let aug = PrimeIdeal::augmentation(family);
        for p in enumerate_primes(family, tiny()) {
            assert!(ideal_leq(&p, &aug).unwrap(), "{p}");
        }
    }
    let sl1 = prime(Series::Sl, 1, "1");
    assert!(ideal_leq(&sl1, &sl1).unwrap());
    assert!(ideal_leq(&sl1, &prime(Series::Sl, 0, "L(1)")).unwrap());
    assert!(ideal_leq(&sl1, &prime(Series::Sl, 0, "R(1)")).unwrap());
    assert!(!ideal_leq(&prime(Series::Sl, 0, "L(1)"), &sl1).unwrap());
    assert!(ideal_leq(
        &prime(Series::Sl, 0, "L(1)"),
        &prime(Series::Sl, 1, "1")
    )
    .is_ok());
    assert!(matches!(
        ideal_leq(&sl1, &prime(Series::Sp, 1, "1")),
        Err(Error::FamilyMismatch(_, _))
    ));
}

#[test]
fn depths_fold_for_sl() {
    let a = PrimeIdeal::of_cls(&q(Series::Sl, "Linf(1)*Rinf(1)*L(2)")).unwrap();
    let b = PrimeIdeal::of_cls(&q(Series::Sl, "Linf(2)*L(3)")).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.to_string(), "I(Linf(2)*L(3))");
}

#[test]
fn left_and_union_annihilators_coincide() {
    // I(Linf(2)) = I(Linf(2) ∪ Linf(1)*R(1)) although the c.l.s. differ
    let single = IntegrableIdeal::of_cls(&parse_cls(Series::Sl, "Linf(2)").unwrap()).unwrap();
    let union =
        IntegrableIdeal::of_cls(&parse_cls(Series::Sl, "Linf(2) + Linf(1)*R(1)").unwrap()).unwrap();
    assert_eq!(single, union);
    assert!(single.leq(&union).unwrap() && union.leq(&single).unwrap());
    assert_eq!(union.primes().len(), 1);
}

#[test]
fn var_table() {
    assert_eq!(var(&prime(Series::Sl, 3, "1")).to_string(), "sl<=3");
    assert_eq!(var(&prime(Series::Sp, 2, "1")).to_string(), "sp<=4");
    assert_eq!(var(&prime(Series::So, 1, "Spin")).to_string(), "so<=2");
    for family in Series::ALL {
        assert_eq!(var(&PrimeIdeal::augmentation(family)).r(), 0);
    }
    assert_eq!(VarSymbol::new(Series::So, 5, true).r(), 4);
    assert!(!VarSymbol::new(Series::Sp, 3, true).integrable_realizable());
    assert!(VarSymbol::new(Series::Sp, 4, true).integrable_realizable());
}

#[test]
fn catalog_entries() {
    let cat = nonintegrable_catalog(Series::Sp, 1).unwrap();
    assert_eq!(cat.len(), 2);
    assert_eq!(cat[0].var.to_string(), "sp<=1");
    assert!(cat[0].description.starts_with("I_W"));
    assert_eq!(cat[1].var.to_string(), "sp<=3");
    assert!(cat.iter().all(|e| !e.var.integrable_realizable()));
    assert!(nonintegrable_catalog(Series::Sp, -1).unwrap().is_empty());
    assert!(nonintegrable_catalog(Series::Sl, 1).is_err());
}

#[test]
fn maxima_and_submaxima() {
    for family in [Series::Sl, Series::Sp] {
        assert_eq!(maximal_primes(family, tiny()), vec![PrimeIdeal::augmentation(family)]);
    }
    let so: BTreeSet<PrimeIdeal> = maximal_primes(Series::So, tiny()).into_iter().collect();
    let expect: BTreeSet<PrimeIdeal> = [PrimeIdeal::augmentation(Series::So), prime(Series::So, 0, "Spin")]
        .into_iter()
        .collect();
    assert_eq!(so, expect);
    let sl: BTreeSet<PrimeIdeal> = submaximal_primes(Series::Sl, tiny()).into_iter().collect();
    let expect: BTreeSet<PrimeIdeal> = [prime(Series::Sl, 0, "L(1)"), prime(Series::Sl, 0, "R(1)")]
        .into_iter()
        .collect();
    assert_eq!(sl, expect);
    assert_eq!(submaximal_primes(Series::Sp, tiny()), vec![prime(Series::Sp, 0, "L(1)")]);
}

#[test]
fn hasse_shapes() {
    let sp = hasse_diagram(Series::Sp, tiny());
    let tops: Vec<usize> = (0..sp.nodes.len())
        .filter(|&i| !sp.edges.iter().any(|&(a, _)| a == i))
        .collect();
    assert_eq!(tops.len(), 1);
    assert_eq!(sp.nodes[tops[0]], PrimeIdeal::augmentation(Series::Sp));
    let so = hasse_diagram(Series::So, tiny());
    let tops = (0..so.nodes.len())
        .filter(|&i| !so.edges.iter().any(|&(a, _)| a == i))
        .count();
    assert_eq!(tops, 2);
    let single = hasse_diagram(Series::Sp, EnumBounds::uniform(0, 0));
    assert_eq!(single.nodes.len(), 1);
    assert!(single.edges.is_empty());
    let dot = single.to_dot();
    assert!(dot.starts_with("digraph ideals_sp {"));
    assert!(dot.contains("n0 [label=\"I(1)\"]"));
}

#[test]
fn finite_characters_are_central_characters() {
    let p = prime(Series::So, 0, "L(2)*Spin");
    let n = 3;
    let chars = central_character_level_set(&p, n).unwrap();
    assert_eq!(chars.len(), 1);
    let c = chars.first().unwrap();
    assert_eq!(c.free, 0);
    let direct: BTreeSet<Vec<i64>> = level_set(&p.left_cls(), n)
        .unwrap()
        .weights(0)
        .iter()
        .map(|w| central_character(w).doubled().to_vec())
        .collect();
    assert_eq!(c.classes, direct);
    let triv = central_character_level_set(&PrimeIdeal::augmentation(Series::Sl), 2).unwrap();
    let a = Algebra::new(Series::Sl, 2).unwrap();
    let rho_char = central_character(&Weight::from_ints(a, &[0, 0, 0]).unwrap());
    assert_eq!(
        triv.first().unwrap().classes,
        [rho_char.doubled().to_vec()].into_iter().collect()
    );
}

#[test]
fn sl_sides_share_characters() {
    let p = prime(Series::Sl, 1, "1");
    let sat = saturated_cls(&p);
    assert_eq!(sat.components().len(), 2);
    for n in 1..=4 {
        let per: Vec<CharacterLevelSet> = sat
            .components()
            .iter()
            .map(|c| closure_characters(&level_set(c, n).unwrap()))
            .collect();
        assert_eq!(per[0], per[1], "n={n}");
    }
}

fn finite_qf(family: Series) -> impl Strategy<Value = IrreducibleCls> {
    (
        proptest::collection::btree_map(1u32..4, 1u32..3, 0..3),
        proptest::collection::btree_map(1u32..4, 1u32..3, 0..3),
        0u32..3,
        any::<bool>(),
    )
        .prop_map(move |(x, z, m, spin)| {
            IrreducibleCls::new(
                family,
                NormalFormData {
                    x,
                    z: if family == Series::Sl { z } else { Default::default() },
                    m,
                    spin: spin && family == Series::So,
                    ..Default::default()
                },
            )
            .unwrap()
        })
}

fn any_prime() -> impl Strategy<Value = PrimeIdeal> {
    prop_oneof![Just(Series::Sl), Just(Series::So), Just(Series::Sp)]
        .prop_flat_map(|f| (finite_qf(f), 0u32..3))
        .prop_map(|(qf, v)| PrimeIdeal::new(v, qf).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn left_component_round_trip(p in any_prime()) {
        let left = left_components(&saturated_cls(&p));
        prop_assert_eq!(left.len(), 1);
        prop_assert_eq!(PrimeIdeal::of_cls(&left[0]).unwrap(), p);
    }

    #[test]
    fn leq_lowers_var(a in any_prime(), b in any_prime()) {
        if a.family() == b.family() && ideal_leq(&a, &b).unwrap() {
            prop_assert!(var(&b).r() <= var(&a).r());
        }
    }

    #[test]
    fn leq_is_antisymmetric(a in any_prime(), b in any_prime()) {
        if a.family() == b.family() && ideal_leq(&a, &b).unwrap() && ideal_leq(&b, &a).unwrap() {
            prop_assert_eq!(a, b);
        }
    }
}
