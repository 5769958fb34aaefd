use std::collections::BTreeSet;

use proptest::prelude::*;

use super::*;
use crate::rep_oracle::{InterlacingBranch, RepOracle};
use crate::weights::{Algebra, Weight};

fn p(family: Series, s: &str) -> IrreducibleCls {
    parse_irreducible(family, s).unwrap()
}

/// Bounds read off from the sequences: partitions with `α_i ≤ l_i`.
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

/// Independent description of a finite-type level set through the `l`/`r` bounds.
fn oracle_level_set(q: &IrreducibleCls, n: usize) -> BTreeSet<Vec<i64>> {
    let seq = lr_sequences(q).unwrap();
    let family = q.family();
    let k = family.coord_len(n);
    let mut out = BTreeSet::new();
    match family {
        Series::Sp => {
            let l: Vec<u32> = (1..=k).map(|i| seq.l(i).unwrap()).collect();
            for a in bounded_partitions(&l) {
                out.insert(a.iter().map(|x| 2 * x).collect());
            }
        }
        Series::So => {
            let l: Vec<u32> = (1..=k).map(|i| seq.l(i).unwrap()).collect();
            let mut base = BTreeSet::new();
            for a in bounded_partitions(&l) {
                let d: Vec<i64> = a.iter().map(|x| 2 * x).collect();
                let mut neg = d.clone();
                neg[k - 1] *= -1;
                base.insert(d);
                base.insert(neg);
            }
            if q.spin() {
                for b in base {
                    let mut plus = b.clone();
                    plus.iter_mut().for_each(|x| *x += 1);
                    plus[k - 1] = b[k - 1] + if b[k - 1] < 0 { -1 } else { 1 };
                    out.insert(plus);
                    let mut minus = b.clone();
                    minus.iter_mut().for_each(|x| *x += 1);
                    minus[k - 1] = b[k - 1] - 1;
                    if minus[k - 2] >= minus[k - 1].abs() {
                        out.insert(minus);
                    }
                }
            } else {
                out = base;
            }
        }
        Series::Sl => {
            let m = q.m();
            for a in 0..=m {
                let l: Vec<u32> = (1..=k).map(|i| seq.l(i).unwrap() - m + a).collect();
                let r: Vec<u32> = (1..=k).map(|i| seq.r(i).unwrap() - a).collect();
                for al in bounded_partitions(&l) {
                    for be in bounded_partitions(&r) {
                        let v: Vec<i64> = (0..k).map(|i| 2 * (al[i] - be[k - 1 - i])).collect();
                        out.insert(crate::weights::dominant_raw(Series::Sl, &v));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn display_round_trips() {
    for (family, text) in [
        (Series::Sl, "Linf(1)*L(3)^2*E*R(2)*Rinf(1)"),
        (Series::So, "L(1)*E^2*Spin"),
        (Series::Sp, "Linf(2)*L(4)"),
        (Series::Sp, "1"),
        (Series::So, "Einf"),
    ] {
        assert_eq!(p(family, text).to_string(), text);
    }
    assert_eq!(p(Series::Sl, "R(2) * L(1) * E^0").to_string(), "L(1)*R(2)");
}

#[test]
fn parser_rejects_invalid_forms() {
    let bad = [
        (Series::Sl, "Linf(2)*L(2)"),
        (Series::Sl, "Linf(1)*Linf(2)"),
        (Series::Sl, "Einf*E"),
        (Series::So, "Spin*Spin"),
        (Series::So, "Spin^2"),
        (Series::Sp, "Spin"),
        (Series::Sp, "R(1)"),
        (Series::So, "Rinf(1)"),
        (Series::Sl, "L(0)"),
        (Series::Sl, "L(2"),
        (Series::Sl, "Q"),
        (Series::Sl, "E E"),
    ];
    for (f, text) in bad {
        assert!(parse_irreducible(f, text).is_err(), "{f} {text}");
    }
    assert!(matches!(
        parse_irreducible(Series::So, "Spin*Spin"),
        Err(Error::SpinSquare)
    ));
}

#[test]
fn sequences_of_examples() {
    let q = p(Series::Sl, "Linf(1)*L(3)^2*E*R(2)");
    let s = lr_sequences(&q).unwrap();
    assert_eq!(s.l(1), None);
    assert_eq!(s.l(2), Some(3));
    assert_eq!(s.l(3), Some(3));
    assert_eq!(s.l(4), Some(1));
    assert_eq!(s.r(1), Some(2));
    assert_eq!(s.r(2), Some(2));
    assert_eq!(s.r(3), Some(1));
    assert_eq!(s.l(100), Some(1));
    assert!(matches!(
        lr_sequences(&IrreducibleCls::top(Series::Sl)),
        Err(Error::TopElement)
    ));
}

#[test]
fn containment_examples() {
    let sl = |s| p(Series::Sl, s);
    assert!(contains(&sl("E"), &sl("L(3)")).unwrap());
    assert!(!contains(&sl("L(3)"), &sl("E")).unwrap());
    assert!(contains(&sl("E"), &sl("R(2)")).unwrap());
    assert!(contains(&sl("E^2"), &sl("L(1)*R(1)")).unwrap());
    assert!(!contains(&sl("L(3)*R(1)"), &sl("E")).unwrap());
    assert!(contains(&sl("Linf(1)"), &sl("L(1)^5")).unwrap());
    assert!(!contains(&sl("Linf(1)"), &sl("L(2)")).unwrap());
    assert!(contains(&sl("Einf"), &sl("Linf(3)*E")).unwrap());
    assert!(!contains(&sl("Linf(2)"), &sl("Linf(1)*R(1)")).unwrap());
    let so = |s| p(Series::So, s);
    assert!(!contains(&so("E^3"), &so("Spin")).unwrap());
    assert!(contains(&so("E*Spin"), &so("L(2)*Spin")).unwrap());
    assert!(matches!(
        contains(&sl("E"), &so("E")),
        Err(Error::FamilyMismatch(_, _))
    ));
}

#[test]
fn reduce_keeps_maximal() {
    let parts = [
        p(Series::Sp, "L(2)"),
        p(Series::Sp, "L(1)^2"),
        p(Series::Sp, "L(1)"),
        p(Series::Sp, "L(2)"),
    ];
    let c = reduce_components(Series::Sp, &parts).unwrap();
    assert_eq!(c.to_string(), "L(1)^2 + L(2)");
    let u = parse_cls(Series::Sl, "Linf(2) + Linf(1)*R(1) + L(1)").unwrap();
    assert_eq!(u.components().len(), 2);
    assert!(u.contains(&parse_cls(Series::Sl, "L(2)").unwrap()).unwrap());
}

#[test]
fn product_adds_exponents() {
    let a = p(Series::Sl, "L(1)*E");
    let b = p(Series::Sl, "L(1)*R(2)");
    assert_eq!(product(&a, &b).unwrap().to_string(), "L(1)^2*E*R(2)");
    assert!(matches!(
        product(&p(Series::So, "Spin"), &p(Series::So, "E*Spin")),
        Err(Error::SpinSquare)
    ));
    assert!(matches!(
        product(&p(Series::Sl, "Linf(1)"), &a),
        Err(Error::InfiniteType)
    ));
}

#[test]
fn basic_level_sets() {
    let ls = level_set(&p(Series::Sl, "L(1)"), 3).unwrap();
    let got: Vec<String> = ls.weights(0).iter().map(|w| w.to_string()).collect();
    assert_eq!(got, ["[0,0,0,0]", "[1,0,0,0]"]);
    let so = level_set(&p(Series::So, "Spin"), 2).unwrap();
    assert_eq!(so.weights(0).len(), 2);
    let e = level_set(&p(Series::Sp, "E"), 3).unwrap();
    assert_eq!(e.weights(0).len(), 4);
    // so(4): L(2) splits its top exterior power
    assert_eq!(level_set(&p(Series::So, "L(2)"), 2).unwrap().weights(0).len(), 4);
}

#[test]
fn prefix_level_sets() {
    let q = p(Series::Sp, "Linf(1)*L(2)");
    let ls = level_set(&q, 3).unwrap();
    let a = Algebra::new(Series::Sp, 3).unwrap();
    let w = |c: &[i64]| Weight::from_ints(a, c).unwrap();
    assert!(ls.contains(&w(&[9, 1, 0])));
    assert!(!ls.contains(&w(&[9, 2, 0])));
    assert!(!ls.contains(&w(&[9, 1, 1])));
    let rinf = level_set(&IrreducibleCls::rinf(1), 2).unwrap();
    let sl = Algebra::new(Series::Sl, 2).unwrap();
    assert!(rinf.contains(&Weight::from_ints(sl, &[5, 5, 0]).unwrap()));
    assert!(!rinf.contains(&Weight::from_ints(sl, &[5, 4, 0]).unwrap()));
    let top = level_set(&IrreducibleCls::top(Series::So), 2).unwrap();
    assert_eq!(top.weights(1).len(), dominant_weights_within(top.algebra(), 1).len());
}

#[test]
fn level_sets_match_sequence_bounds() {
    let bounds = EnumBounds {
        v: 0,
        w: 0,
        m: 1,
        max_index: 3,
        max_exp: 1,
        spin: true,
        top: false,
    };
    for family in Series::ALL {
        for q in enumerate_irreducibles(family, bounds) {
            for n in family.min_rank()..=3 {
                let ls = level_set(&q, n).unwrap();
                let LevelShape::Explicit(set) = ls.shape() else {
                    panic!("finite type gave an infinite level set");
                };
                assert_eq!(**set, oracle_level_set(&q, n), "{family} {q} n={n}");
                let by_bounds: BTreeSet<Vec<i64>> = level_set_from_sequences(&q, n)
                    .unwrap()
                    .iter()
                    .map(|w| w.doubled().to_vec())
                    .collect();
                assert_eq!(by_bounds, **set, "{family} {q} n={n}");
            }
        }
    }
}

#[test]
fn window_sizes() {
    let a = Algebra::new(Series::Sl, 2).unwrap();
    assert_eq!(weight_size(&Weight::from_ints(a, &[2, 1, 0]).unwrap()), 4);
    assert_eq!(weight_size(&Weight::from_ints(a, &[2, 2, 0]).unwrap()), 4);
    let so = Algebra::new(Series::So, 3).unwrap();
    let all = dominant_weights_within(so, 2);
    assert!(all.contains(&vec![1, 1, -1]));
    assert!(!all.contains(&vec![3, 1, 1]));
    for l in all.iter() {
        assert!(crate::weights::is_dominant_raw(Series::So, l));
    }
}

#[test]
fn coherence_of_basic_forms() {
    let b = InterlacingBranch::new();
    for (family, text) in [
        (Series::Sl, "L(2)*R(1)"),
        (Series::Sl, "Linf(1)*E"),
        (Series::Sp, "L(2)^2"),
        (Series::So, "E*Spin"),
        (Series::So, "Linf(2)*Spin"),
    ] {
        let q = p(family, text);
        for n in 3..=4 {
            let r = coherence_check(&b, &q, n, n - 1, 4).unwrap();
            assert!(r.coherent(), "{family} {text} n={n}: {r:?}");
        }
    }
}

#[test]
fn tensor_and_product_agree_on_supports() {
    let oracle = RepOracle::default();
    let q1 = p(Series::Sl, "L(1)");
    let q2 = p(Series::Sl, "R(1)");
    let prod = product_levelwise(&q1, &q2, 2, 0).unwrap();
    let tens = tensor_levelwise(&oracle, &q1, &q2, 2, 0).unwrap();
    assert_eq!(prod, tens);
    assert_eq!(prod.len(), 4);
}

#[test]
fn enumeration_has_no_duplicates() {
    let all = enumerate_irreducibles(Series::Sl, EnumBounds::uniform(1, 2));
    let set: BTreeSet<_> = all.iter().cloned().collect();
    assert_eq!(set.len(), all.len());
    // v, w in 0..=1, m in 0..=1, exponents of indices above v and w
    assert_eq!(all.len(), (4 + 2) * (4 + 2) * 2);
}

fn finite_monomial(family: Series) -> impl Strategy<Value = IrreducibleCls> {
    (
        proptest::collection::btree_map(1u32..4, 1u32..3, 0..3),
        proptest::collection::btree_map(1u32..4, 1u32..3, 0..3),
        0u32..3,
        any::<bool>(),
    )
        .prop_map(move |(x, z, m, spin)| {
            let d = NormalFormData {
                x,
                z: if family == Series::Sl { z } else { Default::default() },
                m,
                spin: spin && family == Series::So,
                ..Default::default()
            };
            IrreducibleCls::new(family, d).unwrap()
        })
}

fn any_monomial(family: Series) -> impl Strategy<Value = IrreducibleCls> {
    (finite_monomial(family), 0u32..3, 0u32..3).prop_map(move |(q, v, w)| {
        let mut d = q.data();
        d.v = v;
        d.x = d.x.into_iter().filter(|(i, _)| *i > v).collect();
        if family == Series::Sl {
            d.w = w;
            d.z = d.z.into_iter().filter(|(j, _)| *j > w).collect();
        }
        IrreducibleCls::new(family, d).unwrap()
    })
}

fn family() -> impl Strategy<Value = Series> {
    prop_oneof![Just(Series::Sl), Just(Series::So), Just(Series::Sp)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn parse_display_round_trip(q in family().prop_flat_map(any_monomial)) {
        prop_assert_eq!(parse_irreducible(q.family(), &q.to_string()).unwrap(), q);
    }

    #[test]
    fn containment_is_a_partial_order(
        (a, b, c) in family().prop_flat_map(|f| (any_monomial(f), any_monomial(f), any_monomial(f)))
    ) {
        prop_assert!(contains(&a, &a).unwrap());
        if contains(&a, &b).unwrap() && contains(&b, &a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if contains(&a, &b).unwrap() && contains(&b, &c).unwrap() {
            prop_assert!(contains(&a, &c).unwrap());
        }
    }

    #[test]
    fn containment_implies_levelwise_inclusion(
        (a, b) in family().prop_flat_map(|f| (any_monomial(f), any_monomial(f)))
    ) {
        if contains(&a, &b).unwrap() {
            for n in a.family().min_rank()..=4 {
                let la = level_set(&a, n).unwrap();
                let lb = level_set(&b, n).unwrap();
                for w in lb.enumerate_raw(3) {
                    prop_assert!(la.contains_raw(&w), "{} ⊉ {} at n={} on {:?}", a, b, n, w);
                }
            }
        }
    }

    #[test]
    fn product_level_set_is_cartan_product(
        (a, b) in family().prop_flat_map(|f| (finite_monomial(f), finite_monomial(f)))
    ) {
        prop_assume!(!(a.spin() && b.spin()));
        let ab = product(&a, &b).unwrap();
        for n in a.family().min_rank()..=3 {
            let direct: BTreeSet<Weight> = level_set(&ab, n).unwrap().weights(0);
            prop_assert_eq!(direct, product_levelwise(&a, &b, n, 0).unwrap());
        }
    }
}

fn ints(series: Series, n: usize, rows: &[&[i64]]) -> BTreeSet<Weight> {
    let a = Algebra::new(series, n).unwrap();
    rows.iter().map(|r| Weight::from_ints(a, r).unwrap()).collect()
}

#[test]
fn reference_level_sets_and_products() {
    let e = level_set(&p(Series::Sl, "E"), 3).unwrap().weights(0);
    assert_eq!(
        e,
        ints(Series::Sl, 3, &[&[0, 0, 0, 0], &[1, 0, 0, 0], &[1, 1, 0, 0], &[1, 1, 1, 0]])
    );
    assert_eq!(
        level_set(&p(Series::Sp, "L(1)"), 2).unwrap().weights(0),
        ints(Series::Sp, 2, &[&[0, 0], &[1, 0]])
    );
    let spin = level_set(&IrreducibleCls::spinor(), 3).unwrap().raw_members();
    assert_eq!(spin, [vec![1, 1, -1], vec![1, 1, 1]].into_iter().collect());

    let l1 = p(Series::Sl, "L(1)");
    let prod = product_levelwise(&l1, &l1, 3, 0).unwrap();
    assert!(prod.contains(&ints(Series::Sl, 3, &[&[2, 0, 0, 0]]).pop_first().unwrap()));
    let triv = IrreducibleCls::trivial(Series::Sl);
    assert_eq!(
        product_levelwise(&l1, &triv, 3, 0).unwrap(),
        level_set(&l1, 3).unwrap().weights(0)
    );

    let oracle = RepOracle::default();
    let sl_l1 = ints(Series::Sl, 2, &[&[1, 0, 0]]);
    let t = tensor_levelwise(&oracle, &l1, &l1, 2, 0).unwrap();
    let sq: BTreeSet<Weight> = oracle
        .tensor_decompose(sl_l1.first().unwrap(), sl_l1.first().unwrap())
        .unwrap()
        .into_keys()
        .collect();
    assert!(sq.is_subset(&t));
    assert_eq!(sq, ints(Series::Sl, 2, &[&[2, 0, 0], &[1, 1, 0]]));
    let sp1 = p(Series::Sp, "L(1)");
    assert_eq!(
        tensor_levelwise(&oracle, &sp1, &sp1, 2, 0).unwrap(),
        ints(Series::Sp, 2, &[&[0, 0], &[1, 0], &[2, 0], &[1, 1]])
    );
}

#[test]
fn reference_coherence_and_enumeration() {
    let b = InterlacingBranch::new();
    assert!(coherence_check(&b, &p(Series::Sl, "E"), 3, 2, 0).unwrap().coherent());
    let r = coherence_check(&b, &IrreducibleCls::linf(Series::Sp, 1), 3, 2, 4).unwrap();
    assert!(r.coherent());
    assert_eq!(r.window, Some(4));
    assert_eq!(r.lower, 5);

    let zero = EnumBounds {
        v: 0,
        w: 0,
        m: 0,
        max_index: 0,
        max_exp: 0,
        spin: false,
        top: false,
    };
    assert_eq!(
        enumerate_irreducibles(Series::Sp, zero),
        vec![IrreducibleCls::trivial(Series::Sp)]
    );
    let spin = enumerate_irreducibles(Series::So, EnumBounds { spin: true, ..zero });
    assert_eq!(spin, vec![IrreducibleCls::trivial(Series::So), IrreducibleCls::spinor()]);
    let sp = enumerate_irreducibles(Series::Sp, EnumBounds::uniform(1, 2));
    for text in ["1", "E", "L(1)", "L(2)", "L(1)*E", "L(1)*L(2)", "Linf(1)", "Linf(1)*L(2)*E"] {
        assert!(sp.contains(&p(Series::Sp, text)), "{text}");
    }
}
