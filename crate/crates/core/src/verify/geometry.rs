use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CriterionReport, Recorder};
use crate::matgeo::{
    cayley_conjugator, closure_claim_check, closure_leq, conjugate, in_rank_variety, is_rank_reduced,
    jordan_type_samples, lift_rank_variety, min_shifted_rank_by_kernels, project_phi, q, rank_reduce,
    sample_roots, standard_gram, ClassicalMatrix, OrbitInvariant, QMatrix, ShiftWitness, Q,
};
use crate::weights::Series;

fn dims(series: Series, max: usize) -> impl Iterator<Item = usize> {
    (2..=max).filter(move |d| series != Series::Sp || d % 2 == 0)
}

/// Built samples of every Jordan type up to dimension `max_d`.
fn all_samples(series: Series, max_d: usize) -> Vec<ClassicalMatrix> {
    dims(series, max_d)
        .flat_map(|d| jordan_type_samples(series, d, d, &sample_roots(series)))
        .map(|t| t.build().expect("canonical blocks are valid"))
        .collect()
}

pub fn rank_variety_suite(seed: u64) -> CriterionReport {
    let mut rec = Recorder::new(8, "rank variety");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 8);
    let mut samples = 0usize;
    let mut conjugations = 0usize;
    for series in Series::ALL {
        for x in all_samples(series, 6) {
            samples += 1;
            let main = x.min_shifted_rank();
            let oracle = min_shifted_rank_by_kernels(x.entries());
            let (main, oracle) = match (main, oracle) {
                (Ok(a), Ok(b)) => (a, b),
                (a, b) => {
                    rec.fail(format!("{series} {}: {a:?} / {b:?}", x.entries()));
                    continue;
                }
            };
            rec.check(main == oracle, || {
                format!("{series} {}: extension {main:?}, kernels {oracle:?}", x.entries())
            });
            for _ in 0..20 {
                let g = cayley_conjugator(&x, &mut rng);
                conjugations += 1;
                match conjugate(&x, &g).and_then(|y| y.min_shifted_rank()) {
                    Ok(r) => rec.check(r.0 == main.0, || {
                        format!("{series} {}: conjugate has shifted rank {} not {}", x.entries(), r.0, main.0)
                    }),
                    Err(e) => rec.fail(format!("{series} {}: {e}", x.entries())),
                }
            }
        }
    }
    if samples < 200 {
        rec.fail(format!("only {samples} samples"));
    }
    rec.finish(format!(
        "{samples} Jordan-type samples (d ≤ 6, irrational classes included) match the kernel oracle; {conjugations} conjugates agree"
    ))
}

pub fn witness_eigenvalue_suite(seed: u64) -> CriterionReport {
    let mut rec = Recorder::new(9, "witness eigenvalues");
    const CONJUGATES: usize = 8;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 9);
    let mut checked = 0usize;
    let mut types = 0usize;
    for d in 3..=8 {
        for t in jordan_type_samples(Series::So, d, d, &sample_roots(Series::So)) {
            let x = t.build().expect("canonical blocks are valid");
            // shifted rank is a conjugation invariant, so filtering on the
            // canonical form selects the same samples
            if 2 * x.min_shifted_rank().map(|m| m.0).unwrap_or(d) >= d {
                continue;
            }
            types += 1;
            for _ in 0..CONJUGATES {
                let g = cayley_conjugator(&x, &mut rng);
                let y = match conjugate(&x, &g) {
                    Ok(y) => y,
                    Err(e) => {
                        rec.fail(format!("{t}: {e}"));
                        continue;
                    }
                };
                match y.min_shifted_rank() {
                    Ok((r, w)) => {
                        checked += 1;
                        rec.check(2 * r < d, || format!("{t}: conjugate has rank {r}"));
                        rec.check(w.is_zero(), || format!("{t}: rank {r} attained at {w}"));
                    }
                    Err(e) => rec.fail(format!("{t}: {e}")),
                }
            }
        }
    }
    if checked < 100 {
        rec.fail(format!("only {checked} samples with 2r < d"));
    }
    rec.finish(format!(
        "{checked} conjugates of {types} so Jordan types (3 ≤ d ≤ 8) with 2r < d have witness 0"
    ))
}

pub fn rank_reduce_suite(seed: u64) -> CriterionReport {
    let mut rec = Recorder::new(10, "rank reduction");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 10);
    let mut checked = 0usize;
    let mut classes: HashMap<(Series, OrbitInvariant), OrbitInvariant> = HashMap::new();
    for series in Series::ALL {
        for x in all_samples(series, 6) {
            let d = x.dim();
            if 2 * x.rank() > d {
                continue;
            }
            checked += 1;
            let run = |x: &ClassicalMatrix| -> crate::Result<(OrbitInvariant, OrbitInvariant, ClassicalMatrix)> {
                let y = rank_reduce(x)?;
                Ok((x.orbit_invariant()?, y.orbit_invariant()?, y))
            };
            let (inv, out, y) = match run(&x) {
                Ok(v) => v,
                Err(e) => {
                    rec.fail(format!("{series} {}: {e}", x.entries()));
                    continue;
                }
            };
            let label = || format!("{series} {}", x.entries());
            rec.check(is_rank_reduced(&y).unwrap_or(false), || format!("{}: output not rank reduced", label()));
            rec.check(y.rank() == x.rank(), || format!("{}: rank {} became {}", label(), x.rank(), y.rank()));
            rec.check(inv.spectrum == out.spectrum, || {
                format!("{}: spectrum {:?} became {:?}", label(), inv.spectrum, out.spectrum)
            });
            let zero_in = x.spectral_data().map(|s| s.zero_partition()).unwrap_or_default();
            let zero_out = y.spectral_data().map(|s| s.zero_partition()).unwrap_or_default();
            rec.check(closure_leq(&zero_out, &zero_in).unwrap_or(false), || {
                format!("{}: zero partition {zero_out:?} not below {zero_in:?}", label())
            });
            // uniqueness: a conjugate of the input and a repeat of the class agree
            let g = cayley_conjugator(&x, &mut rng);
            match conjugate(&x, &g).and_then(|c| run(&c)) {
                Ok((_, other, _)) => rec.check(other == out, || format!("{}: conjugate reduces differently", label())),
                Err(e) => rec.fail(format!("{}: {e}", label())),
            }
            let previous = classes.entry((series, inv)).or_insert_with(|| out.clone());
            rec.check(*previous == out, || format!("{}: class reduces to two invariants", label()));
        }
    }
    rec.finish(format!(
        "{checked} Jordan-type samples with 2·rank ≤ d ≤ 6 in {} orbit classes reduce consistently",
        classes.len()
    ))
}

fn closure_cases() -> Vec<(Series, usize, usize)> {
    let mut cases = Vec::new();
    for d in [4, 6] {
        cases.extend((1..d).map(|r| (Series::Sp, d, r)));
    }
    for d in [6, 8] {
        cases.extend((0..=d - 2).step_by(2).map(|r| (Series::So, d, r)));
    }
    for d in 2..=6 {
        cases.extend((0..d).map(|r| (Series::Sl, d, r)));
    }
    cases
}

pub fn closure_claim_suite() -> CriterionReport {
    let mut rec = Recorder::new(11, "closure claim");
    let mut certified = 0usize;
    let cases = closure_cases();
    let mut very_even = BTreeMap::new();
    for &(series, d, r) in &cases {
        let samples: Vec<ClassicalMatrix> = jordan_type_samples(series, d, r, &sample_roots(series))
            .iter()
            .map(|t| t.build().expect("canonical blocks are valid"))
            .collect();
        match closure_claim_check(series, r, d, &samples) {
            Ok(report) => {
                for (x, c) in samples.iter().zip(&report.certificates) {
                    if c.certified {
                        certified += 1;
                    } else {
                        rec.fail(format!("{series} d={d} r={r} {}: {c}", x.entries()));
                    }
                    if c.very_even {
                        *very_even.entry(format!("{series} d={d} r={r} type {:?}", c.nilpotent)).or_insert(0usize) += 1;
                    }
                }
            }
            Err(e) => rec.fail(format!("{series} d={d} r={r}: {e}")),
        }
    }
    for (case, count) in very_even {
        rec.note(format!("{case}: very even, {count} certificate(s) sufficient only"));
    }
    rec.finish(format!("{certified} canonical samples over {} (series, d, r) cases certified", cases.len()))
}

/// Random element of the algebra with small integer data.
fn random_element<R: Rng>(series: Series, d: usize, rng: &mut R) -> ClassicalMatrix {
    let mut s = QMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            s[(i, j)] = q(rng.gen_range(-3..=3));
        }
    }
    match series {
        Series::Sl => {
            let t = s.trace();
            s[(d - 1, d - 1)] -= t;
            ClassicalMatrix::new(series, s, None).expect("traceless")
        }
        _ => {
            let g = standard_gram(series, d).expect("valid dimension").expect("form");
            let sym = if series == Series::So { &s - &s.transpose() } else { &s + &s.transpose() };
            ClassicalMatrix::new(series, &g.inverse().expect("nondegenerate") * &sym, Some(g)).expect("in algebra")
        }
    }
}

/// Random subspace of dimension `k`, nondegenerate for the form if there is one.
fn random_subspace<R: Rng>(x: &ClassicalMatrix, k: usize, rng: &mut R) -> Vec<Vec<Q>> {
    let d = x.dim();
    loop {
        let w: Vec<Vec<Q>> = (0..k).map(|_| (0..d).map(|_| q(rng.gen_range(-2..=2))).collect()).collect();
        let wm = QMatrix::from_columns(&w).expect("equal lengths");
        if wm.rank() < k {
            continue;
        }
        if let Some(g) = x.gram() {
            if (&(&wm.transpose() * g) * &wm).det() == q(0) {
                continue;
            }
        }
        return w;
    }
}

pub fn projection_suite(seed: u64) -> CriterionReport {
    let mut rec = Recorder::new(12, "projection and lift");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 12);
    // random elements and random conjugates of low-rank samples, half each
    let mut pool: Vec<ClassicalMatrix> = Series::ALL.iter().flat_map(|&s| all_samples(s, 5)).collect();
    let mut projected = 0usize;
    while projected < 500 {
        let series = Series::ALL[projected % 3];
        let x = if projected % 2 == 0 {
            let d = if series == Series::Sp { 2 * rng.gen_range(1..=3) } else { rng.gen_range(2..=6) };
            random_element(series, d, &mut rng)
        } else {
            let candidates: Vec<&ClassicalMatrix> = pool.iter().filter(|x| x.series() == series).collect();
            let x = candidates[rng.gen_range(0..candidates.len())];
            conjugate(x, &cayley_conjugator(x, &mut rng)).expect("form preserved")
        };
        let d = x.dim();
        let k = if series == Series::Sp { 2 * rng.gen_range(1..=d / 2) } else { rng.gen_range(1..=d) };
        let w = random_subspace(&x, k, &mut rng);
        projected += 1;
        match project_phi(&x, &w) {
            Ok(y) => {
                // the scalar correction for sl can raise the plain rank, so
                // sl is compared on shifted ranks
                if series != Series::Sl {
                    rec.check(y.rank() <= x.rank(), || {
                        format!("{series} {} on {w:?}: rank {} > {}", x.entries(), y.rank(), x.rank())
                    });
                }
                match (y.min_shifted_rank(), x.min_shifted_rank()) {
                    (Ok(a), Ok(b)) => rec.check(a.0 <= b.0, || {
                        format!("{series} {} on {w:?}: shifted rank {} > {}", x.entries(), a.0, b.0)
                    }),
                    (a, b) => rec.fail(format!("{series}: {a:?} / {b:?}")),
                }
            }
            Err(e) => rec.fail(format!("{series} {}: {e}", x.entries())),
        }
    }
    pool.clear();
    // lift then project on canonical samples of each level
    let mut lifted = 0usize;
    let mut raised = 0usize;
    for series in Series::ALL {
        for d in dims(series, 5) {
            for r in 0..d {
                for t in jordan_type_samples(series, d, r, &sample_roots(series)) {
                    let y = t.build().expect("canonical blocks are valid");
                    let targets = if series == Series::Sp { vec![d + 2] } else { vec![d + 1, d + 2] };
                    for target in targets {
                        lifted += 1;
                        let label = || format!("{t} r={r} → {target}");
                        let x = match lift_rank_variety(&y, target) {
                            Ok(x) => x,
                            Err(e) => {
                                rec.fail(format!("{}: {e}", label()));
                                continue;
                            }
                        };
                        let basis: Vec<Vec<Q>> =
                            (0..d).map(|i| (0..target).map(|j| q((i == j) as i64)).collect()).collect();
                        rec.check(project_phi(&x, &basis).as_ref() == Ok(&y), || format!("{}: projection differs", label()));
                        rec.check(in_rank_variety(&x, r).unwrap_or(false), || format!("{}: lift left level {r}", label()));
                        match (y.min_shifted_rank(), x.min_shifted_rank()) {
                            (Ok((ry, wy)), Ok((rx, _))) => {
                                rec.check(rx >= ry, || format!("{}: lift lowered shifted rank {ry} to {rx}", label()));
                                if rx > ry {
                                    raised += 1;
                                    // over Q a nonzero so/sp witness or an irrational sl
                                    // witness cannot survive padding
                                    let forced = match (&series, &wy) {
                                        (Series::Sl, ShiftWitness::Root(_)) => true,
                                        (Series::Sl, _) => false,
                                        _ => !wy.is_zero(),
                                    };
                                    rec.check(forced, || {
                                        format!("{}: shifted rank {ry} at {wy} became {rx}", label())
                                    });
                                }
                            }
                            (a, b) => rec.fail(format!("{}: {a:?} / {b:?}", label())),
                        }
                    }
                }
            }
        }
    }
    if raised > 0 {
        rec.note(format!(
            "{raised} lifts raised the shifted rank above the sample's; each has a nonzero so/sp witness or an irrational sl witness and stays within its level"
        ));
    }
    rec.finish(format!(
        "{projected} projections never raise rank; {lifted} lifts of canonical samples project back and keep their level"
    ))
}
