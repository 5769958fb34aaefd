use std::collections::BTreeMap;

use clap::Subcommand;
use finitary::rep_oracle::{dim, RepOracle};
use finitary::weights::{parse_tuple, Algebra, Series, Weight};
use serde_json::{json, Value};

use crate::{domain, CmdResult, FamilyArg, Outcome};

#[derive(Subcommand)]
pub enum RepCommand {
    /// Restriction to the next-lower algebra, or to `--to m`.
    Branch {
        #[command(flatten)]
        family: FamilyArg,
        /// Rank of the algebra; read off the weight length when omitted.
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        to: Option<usize>,
        /// Highest weight `[a1,a2,...]`, half-integers as `p/2`.
        weight: String,
    },
    /// Decomposition of a tensor product of two simple modules.
    Tensor {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long)]
        rank: Option<usize>,
        left: String,
        right: String,
    },
}

fn weight(series: Series, rank: Option<usize>, text: &str) -> Result<Weight, String> {
    let rank = match rank {
        Some(r) => r,
        None => {
            let len = parse_tuple(text).map_err(domain)?.len();
            if series == Series::Sl {
                len.saturating_sub(1)
            } else {
                len
            }
        }
    };
    let algebra = Algebra::new(series, rank).map_err(domain)?;
    Weight::parse(algebra, text).map_err(domain)
}

fn multiplicities(terms: &BTreeMap<Weight, u64>) -> Value {
    Value::Object(terms.iter().map(|(w, m)| (w.to_string(), json!(m))).collect())
}

pub fn run(cmd: RepCommand) -> CmdResult {
    let oracle = RepOracle::default();
    match cmd {
        RepCommand::Branch { family, rank, to, weight: text } => {
            let w = weight(family.family, rank, &text)?;
            match to {
                Some(m) => {
                    let support = oracle.branch_to(&w, m).map_err(domain)?;
                    Ok(Outcome::json(json!({
                        "parent": w.algebra().to_string(),
                        "support": support.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        "weight": w.to_string(),
                    })))
                }
                None => {
                    let b = oracle.branch(&w).map_err(domain)?;
                    Ok(Outcome::json(json!({
                        "child": b.child.to_string(),
                        "dim": dim(&w).to_string(),
                        "parent": b.parent.to_string(),
                        "terms": multiplicities(&b.terms),
                        "weight": w.to_string(),
                    })))
                }
            }
        }
        RepCommand::Tensor { family, rank, left, right } => {
            let a = weight(family.family, rank, &left)?;
            let b = weight(family.family, rank, &right)?;
            let terms = oracle.tensor_decompose(&a, &b).map_err(domain)?;
            Ok(Outcome::json(json!({
                "algebra": a.algebra().to_string(),
                "terms": multiplicities(&terms),
            })))
        }
    }
}
