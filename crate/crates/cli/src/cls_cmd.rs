use clap::Subcommand;
use finitary::cls::{
    coherence_check, level_set, lr_sequences, parse_cls, parse_irreducible, tensor_levelwise, IrreducibleCls,
    DEFAULT_WINDOW,
};
use finitary::rep_oracle::{InterlacingBranch, RepOracle};
use serde_json::{json, Value};

use crate::{domain, CmdResult, FamilyArg, Outcome};

#[derive(Subcommand)]
pub enum ClsCommand {
    /// Parses an expression and prints its normal form.
    Normalize {
        #[command(flatten)]
        family: FamilyArg,
        expr: String,
    },
    /// Whether the first c.l.s. contains the second.
    Contains {
        #[command(flatten)]
        family: FamilyArg,
        outer: String,
        inner: String,
    },
    /// Irreducible components of a union with their l/r-sequences.
    Components {
        #[command(flatten)]
        family: FamilyArg,
        expr: String,
    },
    /// Highest weights of an irreducible c.l.s. at one rank.
    Expand {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long)]
        rank: usize,
        /// Size cut for infinite level sets.
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: u32,
        expr: String,
    },
    /// Simple constituents of tensor products across two level sets.
    Tensor {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: u32,
        left: String,
        right: String,
    },
    /// Compares the level set at `--level m` with the restriction of level `--rank n`.
    Coherence {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        level: usize,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: u32,
        expr: String,
    },
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Value {
    Value::Array(items.into_iter().map(|x| Value::String(x.to_string())).collect())
}

fn sequences(q: &IrreducibleCls) -> Result<Value, String> {
    let s = lr_sequences(q).map_err(domain)?;
    Ok(json!({
        "l_infinite_prefix": s.l_infinite_prefix,
        "l_tail": s.l_tail,
        "limit": s.limit,
        "r_infinite_prefix": s.r_infinite_prefix,
        "r_tail": s.r_tail,
    }))
}

pub fn run(cmd: ClsCommand) -> CmdResult {
    match cmd {
        ClsCommand::Normalize { family, expr } => {
            let c = parse_cls(family.family, &expr).map_err(domain)?;
            Ok(Outcome::json(json!({
                "components": c.components().len(),
                "family": family.family.to_string(),
                "normal_form": c.to_string(),
            })))
        }
        ClsCommand::Contains { family, outer, inner } => {
            let a = parse_cls(family.family, &outer).map_err(domain)?;
            let b = parse_cls(family.family, &inner).map_err(domain)?;
            Ok(Outcome::json(json!({ "contains": a.contains(&b).map_err(domain)? })))
        }
        ClsCommand::Components { family, expr } => {
            let c = parse_cls(family.family, &expr).map_err(domain)?;
            let parts = c
                .components()
                .iter()
                .map(|q| {
                    Ok(json!({
                        "finite_type": q.is_finite_type(),
                        "normal_form": q.to_string(),
                        "sequences": if q.is_top() { Value::Null } else { sequences(q)? },
                    }))
                })
                .collect::<Result<Vec<_>, String>>()?;
            Ok(Outcome::json(json!({ "components": parts })))
        }
        ClsCommand::Expand { family, rank, window, expr } => {
            let q = parse_irreducible(family.family, &expr).map_err(domain)?;
            let level = level_set(&q, rank).map_err(domain)?;
            let finite = level.is_finite();
            let weights = level.weights(window);
            Ok(Outcome::json(json!({
                "count": weights.len(),
                "finite": finite,
                "rank": rank,
                "weights": strings(&weights),
                "window": if finite { Value::Null } else { json!(window) },
            })))
        }
        ClsCommand::Tensor { family, rank, window, left, right } => {
            let a = parse_irreducible(family.family, &left).map_err(domain)?;
            let b = parse_irreducible(family.family, &right).map_err(domain)?;
            let out = tensor_levelwise(&RepOracle::default(), &a, &b, rank, window).map_err(domain)?;
            Ok(Outcome::json(json!({
                "count": out.len(),
                "rank": rank,
                "weights": strings(&out),
                "window": window,
            })))
        }
        ClsCommand::Coherence { family, rank, level, window, expr } => {
            let q = parse_irreducible(family.family, &expr).map_err(domain)?;
            let r = coherence_check(&InterlacingBranch::new(), &q, rank, level, window).map_err(domain)?;
            Ok(Outcome::json(json!({
                "coherent": r.coherent(),
                "extra": strings(&r.extra),
                "lower": r.lower,
                "missing": strings(&r.missing),
                "upper": r.upper,
                "window": r.window,
            })))
        }
    }
}
