use num_rational::Ratio;

use super::{CriterionReport, Recorder};
use crate::rep_oracle::{embedding_dynkin_index, rep_dynkin_index, EmbeddingStep};
use crate::weights::{Algebra, Series, Weight};

fn alg(s: Series, n: usize) -> Algebra {
    Algebra::new(s, n).expect("valid rank")
}

/// Non-diagonal bottom steps: a simple child module filling the parent's natural module.
fn irreducible_steps() -> Vec<EmbeddingStep> {
    let mut out = Vec::new();
    // sl(2) through its (k+1)-dimensional module into sl(k+1)
    for k in 1..=5usize {
        let w = Weight::from_ints(alg(Series::Sl, 1), &[k as i64, 0]).expect("dominant");
        out.push(EmbeddingStep::new(alg(Series::Sl, k), alg(Series::Sl, 1), vec![(w, 1)]).expect("dimensions match"));
    }
    // sp(2) through odd powers of its natural module
    for k in [1usize, 3, 5] {
        let w = Weight::from_ints(alg(Series::Sp, 1), &[k as i64]).expect("dominant");
        out.push(
            EmbeddingStep::new(alg(Series::Sp, (k + 1) / 2), alg(Series::Sp, 1), vec![(w, 1)])
                .expect("dimensions match"),
        );
    }
    // so(4) on its adjoint module fills so(6)
    let so4 = alg(Series::So, 2);
    let adjoint = vec![
        (Weight::from_ints(so4, &[1, 1]).expect("dominant"), 1),
        (Weight::from_ints(so4, &[1, -1]).expect("dominant"), 1),
    ];
    out.push(EmbeddingStep::new(alg(Series::So, 3), so4, adjoint).expect("dimensions match"));
    out
}

pub fn dynkin_suite() -> CriterionReport {
    let mut rec = Recorder::new(13, "Dynkin index");
    let one = Ratio::from_integer(1);
    let mut computed: Vec<Ratio<i128>> = Vec::new();
    let mut chains = 0usize;
    for s in Series::ALL {
        for n in s.min_rank()..=4 {
            // natural plus trivial lines, up to three steps
            let mut chain = Vec::new();
            for k in 0..3 {
                let parent = alg(s, n + k + 1);
                let child = alg(s, n + k);
                chain.insert(0, EmbeddingStep::diagonal(parent, child, 1).expect("fits"));
            }
            match embedding_dynkin_index(&chain) {
                Ok(i) => rec.check(i == one, || format!("{s}: natural chain from rank {n} has index {i}")),
                Err(e) => rec.fail(format!("{s}: {e}")),
            }
            let wide = if s == Series::Sl { 2 * n + 1 } else { 2 * n };
            let double = EmbeddingStep::diagonal(alg(s, wide), alg(s, n), 2).expect("fits");
            match embedding_dynkin_index(std::slice::from_ref(&double)) {
                Ok(i) => {
                    rec.check(i == Ratio::from_integer(2), || format!("{s}: doubling rank {n} has index {i}"));
                    computed.push(i);
                }
                Err(e) => rec.fail(format!("{s}: {e}")),
            }
        }
    }
    // three-step chains: two diagonal steps over an arbitrary bottom step; the
    // composite decomposition is c1·c2 copies of the bottom one plus lines
    for bottom in irreducible_steps() {
        let b = bottom.parent;
        let s = b.series();
        for c2 in 1..=2usize {
            for c1 in 1..=2usize {
                let mid = alg(s, b.rank() * c2 + (s == Series::Sl) as usize * (c2 - 1));
                let top = alg(s, mid.rank() * c1 + (s == Series::Sl) as usize * (c1 - 1));
                let step2 = EmbeddingStep::diagonal(mid, b, c2 as u64).expect("fits");
                let step1 = EmbeddingStep::diagonal(top, mid, c1 as u64).expect("fits");
                let chain = [step1, step2, bottom.clone()];
                chains += 1;
                let product = match embedding_dynkin_index(&chain) {
                    Ok(i) => i,
                    Err(e) => {
                        rec.fail(format!("{s}: chain over {}: {e}", bottom.child));
                        continue;
                    }
                };
                let copies = (c1 * c2) as u64;
                let mut dec: Vec<(Weight, u64)> = bottom
                    .decomposition
                    .iter()
                    .map(|(w, m)| (w.clone(), m * copies))
                    .collect();
                let used: usize = dec
                    .iter()
                    .map(|(w, m)| crate::rep_oracle::dim(w) as usize * *m as usize)
                    .sum();
                let lines = top.natural_dim() - used;
                if lines > 0 {
                    dec.push((bottom.child.trivial_weight(), lines as u64));
                }
                match rep_dynkin_index(bottom.child, &dec) {
                    Ok(direct) => {
                        rec.check(direct == product, || {
                            format!("{s}: chain {top} ⊃ {mid} ⊃ {b} ⊃ {}: product {product}, direct {direct}", bottom.child)
                        });
                        computed.push(direct);
                    }
                    Err(e) => rec.fail(format!("{s}: {e}")),
                }
            }
        }
    }
    for i in &computed {
        rec.check(i.is_integer() && *i.numer() > 0, || format!("index {i} is not a positive integer"));
    }
    rec.finish(format!(
        "natural chains, doublings and {chains} three-step chains; {} indices all positive integers",
        computed.len()
    ))
}
