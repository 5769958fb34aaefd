use clap::Args;
use finitary::cls::DEFAULT_WINDOW;
use finitary::verify::{
    closure_claim_suite, coherence_suite_with, containment_vs_levelwise, dynkin_suite, levelwise_product_suite,
    maximal_ideal_suite, minimal_cls_suite, projection_suite, rank_reduce_suite, rank_variety_suite,
    separation_suite, var_suite, witness_eigenvalue_suite, CriterionReport, STANDARD_BOUNDS,
};
use finitary::weights::Series;
use serde_json::{json, Value};

use crate::input::parse_bounds;
use crate::{parse_series, CmdResult, Outcome};

/// Suite names in criterion order.
const SUITES: [&str; 13] = [
    "minimal",
    "maximal",
    "coherence",
    "product",
    "containment",
    "separation",
    "var",
    "rank-variety",
    "witness",
    "rank-reduce",
    "closure",
    "projection",
    "dynkin",
];

#[derive(Args)]
pub struct VerifyArgs {
    /// Suite name, criterion number, or `all`.
    suite: String,
    /// Sampling seed (rank-variety, witness, rank-reduce, projection).
    #[arg(long)]
    seed: Option<u64>,
    /// Enumeration bounds (minimal, maximal, containment, separation, var).
    #[arg(long)]
    bounds: Option<String>,
    /// Restrict coherence to one family.
    #[arg(long, value_parser = parse_series)]
    family: Option<Series>,
    /// Top rank for coherence.
    #[arg(long)]
    nmax: Option<usize>,
    /// Weight window for coherence.
    #[arg(long)]
    window: Option<u32>,
}

fn suite_id(name: &str) -> Result<Vec<u32>, String> {
    if name == "all" {
        return Ok((1..=13).collect());
    }
    if let Ok(n) = name.parse::<u32>() {
        if (1..=13).contains(&n) {
            return Ok(vec![n]);
        }
    }
    SUITES
        .iter()
        .position(|s| *s == name)
        .map(|i| vec![i as u32 + 1])
        .ok_or_else(|| format!("unknown suite `{name}`; expected a number 1..13, all, or one of {}", SUITES.join(", ")))
}

fn report_json(r: &CriterionReport) -> Value {
    json!({
        "details": r.details,
        "id": r.id,
        "name": SUITES[r.id as usize - 1],
        "passed": r.passed,
        "summary": r.summary,
        "title": r.title,
    })
}

pub fn run(args: VerifyArgs) -> CmdResult {
    let ids = suite_id(&args.suite)?;
    let uses = |flag: &str, set: bool, allowed: &[u32]| -> Result<(), String> {
        if set && !ids.iter().all(|i| allowed.contains(i)) {
            return Err(format!("--{flag} only applies to suites {allowed:?}"));
        }
        Ok(())
    };
    uses("seed", args.seed.is_some(), &[8, 9, 10, 12])?;
    uses("bounds", args.bounds.is_some(), &[1, 2, 5, 6, 7])?;
    uses("family", args.family.is_some(), &[3])?;
    uses("nmax", args.nmax.is_some(), &[3])?;
    uses("window", args.window.is_some(), &[3])?;
    let bounds = args.bounds.as_deref().map(parse_bounds).transpose()?.unwrap_or(STANDARD_BOUNDS);
    let seed = args.seed.unwrap_or(0);
    let families = args.family.map_or_else(|| Series::ALL.to_vec(), |f| vec![f]);
    let reports: Vec<CriterionReport> = ids
        .iter()
        .map(|&id| match id {
            1 => minimal_cls_suite(bounds),
            2 => maximal_ideal_suite(bounds),
            3 => coherence_suite_with(&families, args.nmax.unwrap_or(4), args.window.unwrap_or(DEFAULT_WINDOW)),
            4 => levelwise_product_suite(),
            5 => containment_vs_levelwise(bounds),
            6 => separation_suite(bounds),
            7 => var_suite(bounds),
            8 => rank_variety_suite(seed),
            9 => witness_eigenvalue_suite(seed),
            10 => rank_reduce_suite(seed),
            11 => closure_claim_suite(),
            12 => projection_suite(seed),
            _ => dynkin_suite(),
        })
        .collect();
    let passed = reports.iter().all(|r| r.passed);
    let mut out = Outcome::json(json!({
        "criteria": reports.iter().map(report_json).collect::<Vec<_>>(),
        "passed": passed,
    }));
    out.verified = passed;
    Ok(out)
}
