use clap::Subcommand;
use finitary::cls::{parse_cls, parse_irreducible};
use finitary::ideals::{
    hasse_diagram, maximal_primes, nonintegrable_catalog, submaximal_primes, var, IntegrableIdeal, PrimeIdeal,
};
use finitary::verify::STANDARD_BOUNDS;
use serde_json::{json, Value};

use crate::input::{bounds_json, parse_bounds};
use crate::{domain, CmdResult, FamilyArg, Format, Outcome};

#[derive(Subcommand)]
pub enum IdealCommand {
    /// Compares the annihilators of two c.l.s. (unions give intersections).
    #[command(name = "ideal-order", alias = "order")]
    Order {
        #[command(flatten)]
        family: FamilyArg,
        left: String,
        right: String,
    },
    /// Cover relations among enumerated primes.
    Hasse {
        #[command(flatten)]
        family: FamilyArg,
        /// `v=..,w=..,m=..,idx=..,exp=..,spin=0|1`.
        #[arg(long)]
        bounds: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Associated variety of `I(v, Q_f)`.
    Var {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long)]
        v: u32,
        /// Finite part `Q_f`.
        #[arg(default_value = "1")]
        finite: String,
    },
    /// Maximal and submaximal primes within the enumeration bounds.
    Submaximal {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long)]
        bounds: Option<String>,
    },
    /// Non-integrable primitive ideals of `U(sp∞)` and their varieties.
    Catalog {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long, allow_negative_numbers = true)]
        vmax: i64,
    },
}

fn labels(primes: &[PrimeIdeal]) -> Value {
    Value::Array(primes.iter().map(|p| Value::String(p.to_string())).collect())
}

pub fn run(cmd: IdealCommand) -> CmdResult {
    match cmd {
        IdealCommand::Order { family, left, right } => {
            let of = |text: &str| -> Result<IntegrableIdeal, String> {
                IntegrableIdeal::of_cls(&parse_cls(family.family, text).map_err(domain)?).map_err(domain)
            };
            let (a, b) = (of(&left)?, of(&right)?);
            Ok(Outcome::json(json!({
                "left": a.to_string(),
                "left_leq_right": a.leq(&b).map_err(domain)?,
                "right": b.to_string(),
                "right_leq_left": b.leq(&a).map_err(domain)?,
            })))
        }
        IdealCommand::Hasse { family, bounds, format } => {
            let b = bounds.as_deref().map(parse_bounds).transpose()?.unwrap_or(STANDARD_BOUNDS);
            let h = hasse_diagram(family.family, b);
            Ok(match format {
                Format::Dot => Outcome {
                    text: h.to_dot(),
                    verified: true,
                },
                Format::Json => Outcome::json(json!({
                    "bounded": true,
                    "bounds": bounds_json(&b),
                    "edges": h.edges,
                    "family": h.family.to_string(),
                    "nodes": labels(&h.nodes),
                })),
            })
        }
        IdealCommand::Var { family, v, finite } => {
            let qf = parse_irreducible(family.family, &finite).map_err(domain)?;
            let ideal = PrimeIdeal::new(v, qf).map_err(domain)?;
            Ok(Outcome::json(json!({ "var": var(&ideal).to_string() })))
        }
        IdealCommand::Submaximal { family, bounds } => {
            let b = bounds.as_deref().map(parse_bounds).transpose()?.unwrap_or(STANDARD_BOUNDS);
            Ok(Outcome::json(json!({
                "bounded": true,
                "bounds": bounds_json(&b),
                "maximal": labels(&maximal_primes(family.family, b)),
                "submaximal": labels(&submaximal_primes(family.family, b)),
            })))
        }
        IdealCommand::Catalog { family, vmax } => {
            let entries = nonintegrable_catalog(family.family, vmax).map_err(domain)?;
            let list: Vec<Value> = entries
                .iter()
                .map(|e| {
                    json!({
                        "description": e.description,
                        "integrable_realizable": e.var.integrable_realizable(),
                        "v": e.v,
                        "var": e.var.to_string(),
                    })
                })
                .collect();
            Ok(Outcome::json(json!({ "entries": list })))
        }
    }
}
