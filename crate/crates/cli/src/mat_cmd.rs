use clap::{Args, Subcommand};
use finitary::matgeo::{
    closure_claim_check, density_witness, format_partition, is_rank_reduced, jordan_type_samples, lift_rank_variety,
    parse_q, project_phi, rank_reduce, regular_element, sample_roots, sp_gl_membership_test, ClassicalMatrix,
    DensityBlock, ShiftWitness,
};
use finitary::weights::Series;
use serde_json::{json, Value};

use crate::input::{basis, matrix, matrix_json, q_json, rationals_list, read_arg, rows_json};
use crate::{domain, parse_series, CmdResult, FamilyArg, Outcome};

/// A matrix argument: JSON rows or a payload object, inline or `@file`.
#[derive(Args, Clone, Debug)]
pub struct MatrixArg {
    /// Overrides the payload's family.
    #[arg(long, value_parser = parse_series)]
    family: Option<Series>,
    /// Gram matrix of the form; the standard form when omitted.
    #[arg(long)]
    gram: Option<String>,
    matrix: String,
}

impl MatrixArg {
    fn load(&self) -> Result<ClassicalMatrix, String> {
        matrix(&self.matrix, self.family, self.gram.as_deref())
    }
}

#[derive(Subcommand)]
pub enum MatCommand {
    /// Minimal shifted rank, its witness and rank-variety membership.
    Rank {
        #[command(flatten)]
        x: MatrixArg,
        /// Also test membership in the rank variety of this level.
        #[arg(long)]
        level: Option<usize>,
    },
    /// Irreducible factors of the characteristic polynomial with Jordan partitions.
    Jordan {
        #[command(flatten)]
        x: MatrixArg,
    },
    /// Rank-reduced representative (requires 2·rank ≤ dim).
    #[command(name = "rank-reduce")]
    RankReduce {
        #[command(flatten)]
        x: MatrixArg,
    },
    /// Compression to the span of `--basis`.
    Project {
        #[command(flatten)]
        x: MatrixArg,
        /// JSON array of basis vectors.
        #[arg(long)]
        basis: String,
    },
    /// Extension to dimension `--target` that projects back to the input.
    Lift {
        #[command(flatten)]
        x: MatrixArg,
        #[arg(long)]
        target: usize,
    },
    /// Regular element of level `--level` in dimension `--rank`.
    Regular {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long)]
        level: usize,
        /// Dimension of the natural module.
        #[arg(long)]
        rank: usize,
    },
    /// Closure certificates for samples of the rank variety.
    #[command(name = "closure-check")]
    ClosureCheck {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long)]
        level: usize,
        /// Dimension of the natural module.
        #[arg(long)]
        rank: usize,
        /// JSON array of matrices; canonical Jordan-type samples when omitted.
        #[arg(long)]
        samples: Option<String>,
    },
    /// Randomized check of the projection from sp to gl of a Lagrangian.
    Membership {
        #[command(flatten)]
        x: MatrixArg,
        #[arg(long)]
        level: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Conjugates normal-form blocks so their compression is a target diagonal.
    Density {
        #[command(flatten)]
        family: FamilyArg,
        /// Comma-separated `A(t)`, `B`, `C`.
        #[arg(long)]
        blocks: String,
        /// One rational per `A`/`B` block.
        #[arg(long, allow_hyphen_values = true)]
        targets: String,
    },
}

fn witness_json(w: &ShiftWitness) -> Value {
    match w {
        ShiftWitness::Scalar(x) => json!({ "kind": "scalar", "value": q_json(x) }),
        ShiftWitness::Root(p) => json!({ "kind": "root", "factor": p.to_string() }),
    }
}

fn spectral_json(x: &ClassicalMatrix) -> Result<Value, String> {
    let sd = x.spectral_data().map_err(domain)?;
    let factors: Vec<Value> = sd
        .factors
        .iter()
        .map(|(p, pi)| json!({ "factor": p.to_string(), "partition": pi }))
        .collect();
    Ok(json!({
        "factors": factors,
        "semisimple": sd.is_semisimple(),
        "summary": sd.to_string(),
    }))
}

fn parse_blocks(text: &str) -> Result<Vec<DensityBlock>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| match s {
            "B" => Ok(DensityBlock::B),
            "C" => Ok(DensityBlock::C),
            _ => {
                let inner = s
                    .strip_prefix("A(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| format!("block `{s}` is not A(t), B or C"))?;
                Ok(DensityBlock::A(parse_q(inner).map_err(domain)?))
            }
        })
        .collect()
}

pub fn run(cmd: MatCommand) -> CmdResult {
    match cmd {
        MatCommand::Rank { x, level } => {
            let x = x.load()?;
            let (r, w) = x.min_shifted_rank().map_err(domain)?;
            Ok(Outcome::json(json!({
                "dim": x.dim(),
                "in_variety": level.map(|l| r <= l),
                "level": level,
                "min_shifted_rank": r,
                "rank": x.rank(),
                "witness": witness_json(&w),
            })))
        }
        MatCommand::Jordan { x } => Ok(Outcome::json(spectral_json(&x.load()?)?)),
        MatCommand::RankReduce { x } => {
            let x = x.load()?;
            let y = rank_reduce(&x).map_err(domain)?;
            Ok(Outcome::json(json!({
                "input_rank": x.rank(),
                "output": matrix_json(&y),
                "output_rank": y.rank(),
                "rank_reduced": is_rank_reduced(&y).map_err(domain)?,
                "spectral": spectral_json(&y)?,
            })))
        }
        MatCommand::Project { x, basis: b } => {
            let x = x.load()?;
            let y = project_phi(&x, &basis(&b)?).map_err(domain)?;
            Ok(Outcome::json(json!({
                "input_shifted_rank": x.min_shifted_rank().map_err(domain)?.0,
                "projected": matrix_json(&y),
                "shifted_rank": y.min_shifted_rank().map_err(domain)?.0,
            })))
        }
        MatCommand::Lift { x, target } => {
            let y = x.load()?;
            let lifted = lift_rank_variety(&y, target).map_err(domain)?;
            Ok(Outcome::json(json!({
                "input_shifted_rank": y.min_shifted_rank().map_err(domain)?.0,
                "lifted": matrix_json(&lifted),
                "shifted_rank": lifted.min_shifted_rank().map_err(domain)?.0,
            })))
        }
        MatCommand::Regular { family, level, rank } => {
            let x = regular_element(family.family, level, rank).map_err(domain)?;
            Ok(Outcome::json(json!({
                "matrix": matrix_json(&x),
                "spectral": spectral_json(&x)?,
            })))
        }
        MatCommand::ClosureCheck { family, level, rank, samples } => {
            let series = family.family;
            let samples: Vec<ClassicalMatrix> = match samples {
                Some(text) => {
                    let value: Value =
                        serde_json::from_str(&read_arg(&text)?).map_err(|e| format!("samples JSON: {e}"))?;
                    value
                        .as_array()
                        .ok_or("samples must be a JSON array of matrices")?
                        .iter()
                        .map(|m| matrix(&m.to_string(), Some(series), None))
                        .collect::<Result<_, _>>()?
                }
                None => jordan_type_samples(series, rank, level, &sample_roots(series))
                    .iter()
                    .map(|t| t.build().map_err(domain))
                    .collect::<Result<_, _>>()?,
            };
            let report = closure_claim_check(series, level, rank, &samples).map_err(domain)?;
            let certificates: Vec<Value> = samples
                .iter()
                .zip(&report.certificates)
                .map(|(x, c)| {
                    json!({
                        "certified": c.certified,
                        "dominated": c.dominated,
                        "entries": rows_json(x.entries()),
                        "nilpotent": format_partition(&c.nilpotent),
                        "padding": c.padding,
                        "summary": c.to_string(),
                        "target": format_partition(&c.target),
                        "very_even": c.very_even,
                    })
                })
                .collect();
            Ok(Outcome::json(json!({
                "all_certified": report.all_certified(),
                "certificates": certificates,
                "family": series.to_string(),
                "level": level,
                "rank": rank,
            })))
        }
        MatCommand::Membership { x, level, samples, seed } => {
            let x = x.load()?;
            let report = sp_gl_membership_test(&x, level, samples, seed).map_err(domain)?;
            Ok(Outcome::json(json!({
                "consistent": report.consistent(),
                "in_variety": report.in_variety,
                "max_projected_rank": report.max_projected_rank,
                "samples": report.samples,
                "summary": report.summary(),
                "violation": report.violation.as_ref().map(|(g, a)| json!({
                    "conjugator": rows_json(g),
                    "projection": rows_json(a),
                })),
            })))
        }
        MatCommand::Density { family, blocks, targets } => {
            let report =
                density_witness(family.family, &parse_blocks(&blocks)?, &rationals_list(&targets)?).map_err(domain)?;
            Ok(Outcome::json(json!({
                "conjugators": report.conjugators.iter().map(rows_json).collect::<Vec<_>>(),
                "matrix": matrix_json(&report.x),
                "projected": matrix_json(&report.projected),
                "target": rows_json(&report.target),
                "verified": report.verified,
                "w": report.w.iter().map(|v| v.iter().map(q_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            })))
        }
    }
}
