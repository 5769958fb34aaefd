//! `finitary`: command-line access to coherent local systems, integrable
//! ideals, rank varieties and the acceptance suites.
//!
//! Results are JSON objects with alphabetically ordered keys on stdout; the
//! Hasse diagram can also be written as DOT. Exit codes: 0 on success, 1 on a
//! domain or usage error, 2 when a verification suite reports a failure.

mod cls_cmd;
mod ideal_cmd;
mod input;
mod mat_cmd;
mod rep_cmd;
mod verify_cmd;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use finitary::weights::Series;

#[derive(Parser)]
#[command(name = "finitary", version, about = "Coherent local systems, integrable ideals and rank varieties")]
struct Cli {
    #[command(subcommand)]
    group: Group,
}

#[derive(Subcommand)]
enum Group {
    /// Coherent local systems: parsing, containment, level sets.
    #[command(subcommand)]
    Cls(cls_cmd::ClsCommand),
    /// Prime integrable ideals, their order and associated varieties.
    #[command(subcommand)]
    Ideal(ideal_cmd::IdealCommand),
    /// Finite-rank representation oracle.
    #[command(subcommand)]
    Rep(rep_cmd::RepCommand),
    /// Matrices, shifted ranks and rank varieties.
    #[command(subcommand)]
    Mat(mat_cmd::MatCommand),
    /// Acceptance suites by name or number, or `all`.
    Verify(verify_cmd::VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Args, Clone, Debug)]
pub struct FamilyArg {
    /// sl, so or sp.
    #[arg(long, value_parser = parse_series)]
    pub family: Series,
}

pub fn parse_series(s: &str) -> Result<Series, String> {
    s.parse().map_err(|e: finitary::Error| e.to_string())
}

/// What a command produced: text for stdout and whether it verified.
pub struct Outcome {
    pub text: String,
    pub verified: bool,
}

impl Outcome {
    pub fn json(value: serde_json::Value) -> Self {
        let mut text = String::new();
        render(&value, 0, &mut text);
        Outcome { text, verified: true }
    }
}

/// Pretty JSON with arrays of scalars kept on one line, so matrix rows read as rows.
fn render(value: &serde_json::Value, indent: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |n: usize| "  ".repeat(n);
    match value {
        Value::Array(items) if items.iter().all(|v| !v.is_array() && !v.is_object()) => {
            out.push_str(&serde_json::to_string(value).expect("values serialize"));
        }
        Value::Array(items) if !items.is_empty() => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                render(item, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, v)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(k).expect("strings serialize"));
                out.push_str(": ");
                render(v, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        _ => out.push_str(&serde_json::to_string(value).expect("values serialize")),
    }
}

pub type CmdResult = Result<Outcome, String>;

pub fn domain(e: finitary::Error) -> String {
    e.to_string()
}

fn run(group: Group) -> CmdResult {
    match group {
        Group::Cls(c) => cls_cmd::run(c),
        Group::Ideal(c) => ideal_cmd::run(c),
        Group::Rep(c) => rep_cmd::run(c),
        Group::Mat(c) => mat_cmd::run(c),
        Group::Verify(a) => verify_cmd::run(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors share the domain-error code; 2 is reserved for verification
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.group) {
        Ok(out) => {
            // a closed pipe is not an error of the command
            let _ = writeln!(std::io::stdout().lock(), "{}", out.text.trim_end());
            if out.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
