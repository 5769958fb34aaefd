use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::blocks::{companion, gl_pair, jordan_block, nilpotent};
use super::*;
use crate::weights::Series;

fn diag(values: &[i64]) -> QMatrix {
    QMatrix::diagonal(&values.iter().map(|&v| q(v)).collect::<Vec<_>>())
}

fn unit(d: usize, i: usize) -> Vec<Q> {
    (0..d).map(|j| q((i == j) as i64)).collect()
}

/// Eigenvalue sweep over a list of rational candidates.
fn sweep(x: &QMatrix, candidates: &[i64]) -> usize {
    candidates.iter().map(|&c| x.shift(&q(c)).rank()).min().unwrap()
}

#[test]
fn charpoly_and_inverse() {
    let x = QMatrix::from_ints(&[&[2, 1], &[1, 3]]);
    assert_eq!(x.charpoly(), QPoly::from_ints(&[5, -5, 1]));
    assert_eq!(&x * &x.inverse().unwrap(), QMatrix::identity(2));
    assert_eq!(x.det(), q(5));
    assert_eq!(companion(&QPoly::from_ints(&[-2, 0, 1])).charpoly(), QPoly::from_ints(&[-2, 0, 1]));
}

#[test]
fn shifted_rank_examples() {
    let x = ClassicalMatrix::new(Series::Sl, diag(&[1, 1, 1, -3]), None).unwrap();
    let (r, w) = x.min_shifted_rank().unwrap();
    assert_eq!((r, w), (1, ShiftWitness::Scalar(q(1))));
    assert_eq!(sweep(x.entries(), &[1, -3]), 1);

    let n = nilpotent(Series::Sl, &[2, 1, 1]).unwrap();
    assert_eq!(n.min_shifted_rank().unwrap(), (1, ShiftWitness::Scalar(q(0))));

    let c = companion(&QPoly::from_ints(&[-2, 0, 1]));
    let x = ClassicalMatrix::new(Series::Sl, QMatrix::block_diag(&[&c, &-c.clone()]), None).unwrap();
    // ±√2 each appear in both blocks, so rank 2 at either root
    assert_eq!(x.min_shifted_rank().unwrap().0, 2);
    assert_eq!(min_shifted_rank_by_kernels(x.entries()).unwrap().0, 2);

    let c3 = companion(&QPoly::from_ints(&[-2, 0, 1]));
    let y = ClassicalMatrix::new(Series::Sl, QMatrix::block_diag(&[&c3, &diag(&[1, -1])]), None).unwrap();
    assert_eq!(y.min_shifted_rank().unwrap().0, 3);
}

#[test]
fn rank_variety_examples() {
    let x = ClassicalMatrix::new(Series::Sl, diag(&[1, -1, 0, 0]), None).unwrap();
    assert!(in_rank_variety(&x, 2).unwrap());
    assert!(!in_rank_variety(&x, 1).unwrap());
    assert_eq!(sweep(x.entries(), &[1, -1, 0]), 2);
    let z = ClassicalMatrix::zero(Series::Sp, 4).unwrap();
    assert!(in_rank_variety(&z, 0).unwrap());
    assert!(in_rank_variety(&x, 4).unwrap());
}

#[test]
fn spectral_examples() {
    let n = nilpotent(Series::Sl, &[3, 1]).unwrap();
    let sd = n.spectral_data().unwrap();
    assert_eq!(sd.factors, vec![(QPoly::t(), vec![3, 1])]);

    let x = ClassicalMatrix::new(Series::Sl, diag(&[2, -2, 0, 0]), None).unwrap();
    let sd = x.spectral_data().unwrap();
    assert_eq!(sd.partition_of(&QPoly::from_ints(&[-2, 1])), vec![1]);
    assert_eq!(sd.partition_of(&QPoly::from_ints(&[2, 1])), vec![1]);
    assert_eq!(sd.zero_partition(), vec![1, 1]);

    // companion of (t²−2)² is one 2-chain per root
    let p = QPoly::from_ints(&[-2, 0, 1]);
    let x = ClassicalMatrix::new(Series::Sl, companion(&p.pow(2)), None).unwrap();
    let sd = x.spectral_data().unwrap();
    assert_eq!(sd.factors, vec![(p, vec![2])]);
    assert_eq!(spectral_data_extension(x.entries()).unwrap(), sd);
}

#[test]
fn rank_reduced_examples() {
    assert!(is_rank_reduced(&nilpotent(Series::Sl, &[2, 1, 1]).unwrap()).unwrap());
    assert!(!is_rank_reduced(&nilpotent(Series::Sl, &[3, 1]).unwrap()).unwrap());
    let m = QMatrix::block_diag(&[&jordan_block(&q(1), 2), &diag(&[-1, -1])]);
    assert!(!is_rank_reduced(&sl_of(m)).unwrap());
}

fn sl_of(m: QMatrix) -> ClassicalMatrix {
    ClassicalMatrix::new(Series::Sl, m, None).unwrap()
}

#[test]
fn rank_reduce_examples() {
    let x = nilpotent(Series::Sl, &[3, 1]).unwrap();
    let y = rank_reduce(&x).unwrap();
    assert_eq!(y.spectral_data().unwrap().zero_partition(), vec![2, 2]);
    assert!(closure_leq(&[2, 2], &[3, 1]).unwrap());
    let s = ClassicalMatrix::new(Series::Sl, diag(&[1, -1, 0, 0]), None).unwrap();
    assert_eq!(rank_reduce(&s).unwrap(), s);
    assert!(rank_reduce(&nilpotent(Series::Sl, &[3]).unwrap()).is_err());
}

#[test]
fn rank_reduce_self_paired_spectrum() {
    // t²+1 once per root needs an anisotropic plane
    let c = companion(&QPoly::from_ints(&[1, 0, 1]));
    let so4 = ClassicalMatrix::direct_sum(&[
        &ClassicalMatrix::new(Series::So, c.clone(), Some(QMatrix::identity(2))).unwrap(),
        &nilpotent(Series::So, &[1, 1]).unwrap(),
        &nilpotent(Series::So, &[3, 1]).unwrap(),
    ])
    .unwrap();
    let y = rank_reduce(&so4).unwrap();
    assert!(is_rank_reduced(&y).unwrap());
    assert_eq!(y.rank(), so4.rank());
    assert_eq!(y.spectral_data().unwrap().partition_of(&QPoly::from_ints(&[1, 0, 1])), vec![1]);
}

#[test]
fn closure_leq_examples() {
    assert!(closure_leq(&[2, 2], &[3, 1]).unwrap());
    assert!(closure_leq(&[2, 1, 1], &[2, 2]).unwrap());
    assert!(!closure_leq(&[3, 1], &[2, 2]).unwrap());
    assert!(closure_leq(&[3], &[2, 2]).is_err());
}

#[test]
fn projection_examples() {
    let x = ClassicalMatrix::new(Series::Sl, diag(&[1, -1, 0]), None).unwrap();
    let y = project_phi(&x, &[unit(3, 0), unit(3, 1)]).unwrap();
    assert_eq!(*y.entries(), diag(&[1, -1]));
    let y = project_phi(&x, &[unit(3, 0), unit(3, 2)]).unwrap();
    assert_eq!(*y.entries(), QMatrix::diagonal(&[q_frac(1, 2), q_frac(-1, 2)]));
    let sp = regular_element(Series::Sp, 2, 4).unwrap();
    // span(e₁, e₂) is Lagrangian
    assert_eq!(project_phi(&sp, &[unit(4, 0), unit(4, 1)]), Err(crate::Error::DegenerateForm));
}

#[test]
fn lift_examples() {
    let j2 = nilpotent(Series::Sl, &[2]).unwrap();
    let x = lift_rank_variety(&j2, 3).unwrap();
    assert_eq!(*x.entries(), QMatrix::block_diag(&[j2.entries(), &QMatrix::zeros(1, 1)]));
    assert_eq!(x.min_shifted_rank().unwrap().0, 1);

    let z = ClassicalMatrix::zero(Series::Sl, 2).unwrap();
    assert!(lift_rank_variety(&z, 3).unwrap().entries().is_zero());

    let y = ClassicalMatrix::new(Series::Sl, diag(&[1, -1]), None).unwrap();
    let x = lift_rank_variety(&y, 3).unwrap();
    assert_eq!(sweep(y.entries(), &[1, -1]), 1);
    assert_eq!(x.min_shifted_rank().unwrap().0, 1);
    let back = project_phi(&x, &[unit(3, 0), unit(3, 1)]).unwrap();
    assert_eq!(back, y);
}

#[test]
fn regular_element_examples() {
    let x = regular_element(Series::Sp, 1, 4).unwrap();
    assert_eq!(x.spectral_data().unwrap().factors, vec![(QPoly::t(), vec![2, 1, 1])]);
    let x = regular_element(Series::So, 2, 6).unwrap();
    let sd = x.spectral_data().unwrap();
    assert!(sd.is_semisimple());
    assert_eq!(x.rank(), 2);
    assert!(regular_element(Series::So, 3, 6).is_err());
}

#[test]
fn closure_examples() {
    let x = gl_pair(Series::Sp, &jordan_block(&Q::zero(), 2)).unwrap();
    let report = closure_claim_check(Series::Sp, 2, 4, &[x]).unwrap();
    assert!(report.all_certified());
    assert_eq!(report.certificates[0].target, vec![2, 2]);

    let reg = regular_element(Series::Sp, 1, 4).unwrap();
    let report = closure_claim_check(Series::Sp, 1, 4, &[reg]).unwrap();
    assert!(report.all_certified());

    let big = regular_element(Series::Sp, 2, 4).unwrap();
    assert!(closure_claim_check(Series::Sp, 1, 4, &[big]).is_err());
}

#[test]
fn membership_examples() {
    let z = ClassicalMatrix::zero(Series::Sp, 4).unwrap();
    assert!(sp_gl_membership_test(&z, 1, 20, 1).unwrap().consistent());

    let n = regular_element(Series::Sp, 1, 4).unwrap();
    let report = sp_gl_membership_test(&n, 1, 100, 2).unwrap();
    assert!(report.in_variety && report.violation.is_none());

    // every 2×2 matrix has shifted rank at most 1, so in sp(4) no conjugate
    // can violate level 1; sp(6) has room
    let x4 = ClassicalMatrix::standard(Series::Sp, QMatrix::block_diag(&[&diag(&[1, 2]), &diag(&[-1, -2])])).unwrap();
    let report = sp_gl_membership_test(&x4, 1, 100, 3).unwrap();
    assert!(!report.in_variety && report.violation.is_none());
    assert_eq!(report.summary(), "no witness found in 100 samples");
    let x6 = ClassicalMatrix::standard(Series::Sp, QMatrix::block_diag(&[&diag(&[1, 2, 3]), &diag(&[-1, -2, -3])])).unwrap();
    let report = sp_gl_membership_test(&x6, 1, 100, 3).unwrap();
    assert!(!report.in_variety && report.violation.is_some());
}

#[test]
fn density_examples() {
    let r = density_witness(Series::Sl, &[DensityBlock::A(q(1)), DensityBlock::A(q(2))], &[q(5), q(-5)]).unwrap();
    assert!(r.verified);
    let r = density_witness(Series::Sl, &[DensityBlock::B, DensityBlock::C], &[q(0)]).unwrap();
    assert!(r.verified);
    assert_eq!(r.conjugators[0], QMatrix::identity(2));
    let r = density_witness(Series::Sp, &[DensityBlock::A(q(3))], &[q(7)]).unwrap();
    assert!(r.verified);
    let r = density_witness(Series::So, &[DensityBlock::A(q(1)), DensityBlock::B, DensityBlock::C], &[q(2), q(-4)]).unwrap();
    assert!(r.verified);
    assert!(density_witness(Series::Sl, &[DensityBlock::A(q(1))], &[q(5)]).is_err());
}

#[test]
fn samples_build_in_their_algebras() {
    let roots = [QPoly::from_ints(&[-2, 0, 1])];
    for s in Series::ALL {
        for d in 2..=5 {
            if s == Series::Sp && d % 2 == 1 {
                continue;
            }
            for t in jordan_type_samples(s, d, d, &roots) {
                let x = t.build().unwrap_or_else(|e| panic!("{t}: {e}"));
                assert_eq!(x.dim(), d, "{t}");
                let sd = x.spectral_data().unwrap();
                assert_eq!(sd.dimension(), d);
            }
        }
    }
}

#[test]
fn cayley_conjugators_preserve_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for s in Series::ALL {
        let x = regular_element(s, 2, 6).unwrap();
        for _ in 0..5 {
            let g = cayley_conjugator(&x, &mut rng);
            let y = conjugate(&x, &g).unwrap();
            assert_eq!(y.orbit_invariant().unwrap(), x.orbit_invariant().unwrap());
        }
    }
}

fn small_element(series: Series) -> impl Strategy<Value = ClassicalMatrix> {
    let dims = match series {
        Series::Sp => prop_oneof![Just(2usize), Just(4)].boxed(),
        _ => (2usize..=4).boxed(),
    };
    dims.prop_flat_map(|d| (Just(d), proptest::collection::vec(-2i64..=2, d * d)))
        .prop_map(move |(d, entries)| {
            let mut s = QMatrix::zeros(d, d);
            for i in 0..d {
                for j in 0..d {
                    s[(i, j)] = q(entries[i * d + j]);
                }
            }
            match series {
                Series::Sl => {
                    let t = s.trace();
                    s[(d - 1, d - 1)] -= t;
                    ClassicalMatrix::new(series, s, None).unwrap()
                }
                _ => {
                    let g = standard_gram(series, d).unwrap().unwrap();
                    let form = if series == Series::So { &s - &s.transpose() } else { &s + &s.transpose() };
                    ClassicalMatrix::new(series, &g.inverse().unwrap() * &form, Some(g)).unwrap()
                }
            }
        })
}

fn any_element() -> impl Strategy<Value = ClassicalMatrix> {
    prop_oneof![small_element(Series::Sl), small_element(Series::So), small_element(Series::Sp)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shifted_rank_routes_agree(x in any_element()) {
        let main = min_shifted_rank_of(x.entries()).unwrap();
        let oracle = min_shifted_rank_by_kernels(x.entries()).unwrap();
        prop_assert_eq!(main, oracle);
        prop_assert_eq!(spectral_data_of(x.entries()).unwrap(), spectral_data_extension(x.entries()).unwrap());
    }

    #[test]
    fn invariants_survive_conjugation(x in any_element(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let y = conjugate(&x, &cayley_conjugator(&x, &mut rng)).unwrap();
        prop_assert_eq!(x.orbit_invariant().unwrap(), y.orbit_invariant().unwrap());
        prop_assert_eq!(x.min_shifted_rank().unwrap().0, y.min_shifted_rank().unwrap().0);
    }

    #[test]
    fn shifted_rank_bounded_by_rank(x in any_element()) {
        let (r, _) = x.min_shifted_rank().unwrap();
        prop_assert!(r <= x.rank());
        prop_assert!(in_rank_variety(&x, r).unwrap());
        prop_assert!(r == 0 || !in_rank_variety(&x, r - 1).unwrap());
    }

    #[test]
    fn coordinate_projection_never_raises_shifted_rank(x in any_element()) {
        let d = x.dim();
        let k = if x.series() == Series::Sp { 2 } else { d - 1 };
        let basis: Vec<Vec<Q>> = match x.series() {
            Series::Sl => (0..k).map(|i| unit(d, i)).collect(),
            _ => vec![unit(d, 0), unit(d, d / 2)],
        };
        let y = project_phi(&x, &basis).unwrap();
        prop_assert!(y.min_shifted_rank().unwrap().0 <= x.min_shifted_rank().unwrap().0);
        let back = lift_rank_variety(&y, d).unwrap();
        prop_assert_eq!(project_phi(&back, &(0..y.dim()).map(|i| unit(d, i)).collect::<Vec<_>>()).unwrap(), y);
    }

    #[test]
    fn rank_reduce_keeps_rank_and_spectrum(x in any_element()) {
        prop_assume!(2 * x.rank() <= x.dim());
        let y = rank_reduce(&x).unwrap();
        prop_assert!(is_rank_reduced(&y).unwrap());
        prop_assert_eq!(y.rank(), x.rank());
        prop_assert_eq!(x.orbit_invariant().unwrap().spectrum, y.orbit_invariant().unwrap().spectrum);
    }
}
