use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use molq_core::FieldTag;

mod commands;
mod input;

#[derive(Parser)]
#[command(name = "molq", version, about = "Exact modular ortholattice workbench")]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
pub struct FieldArg {
    /// Scalar field: Q or Qi.
    #[arg(long, default_value = "Q")]
    pub field: FieldTag,
}

#[derive(Args, Clone)]
pub struct SearchArgs {
    /// Test set: JSON array of subspaces (inline, @file or path).
    #[arg(long)]
    pub testset: String,
    /// Maximum number of substitutions.
    #[arg(long, default_value_t = molq_core::testset::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Run the search on one thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Subcommand)]
pub enum Command {
    /// Parse a term and print its syntax tree.
    Parse {
        #[arg(long)]
        term: String,
    },
    /// Print a term canonically, from text or from a syntax tree.
    Print {
        #[arg(long, conflicts_with = "ast", required_unless_present = "ast")]
        term: Option<String>,
        #[arg(long)]
        ast: Option<String>,
    },
    /// Evaluate a term in L(F^dim).
    Eval {
        #[arg(long)]
        dim: usize,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        term: String,
        /// NAME=VALUE with VALUE one of 0, 1, @file or inline subspace JSON.
        #[arg(long = "sub")]
        subs: Vec<String>,
    },
    /// Check that a term evaluates to 1 for every substitution from a test set.
    TautCheck {
        #[arg(long)]
        term: String,
        #[command(flatten)]
        field: FieldArg,
        #[command(flatten)]
        search: SearchArgs,
        /// Variable order, comma separated (default: sorted).
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
        /// Normalize the frame variables of a d-frame before evaluation.
        #[arg(long)]
        frame: Option<usize>,
    },
    /// Certify that a finite test set is not universal.
    Refute {
        #[command(flatten)]
        field: FieldArg,
        #[command(flatten)]
        search: SearchArgs,
        /// Expected ambient dimension of the test set.
        #[arg(long)]
        dim: Option<usize>,
        /// Re-verify the certificate with the naive evaluator.
        #[arg(long)]
        verify: bool,
    },
    /// Generate derived terms.
    GenTerm {
        #[command(subcommand)]
        kind: GenTerm,
    },
    /// Frame construction and checks.
    Frame {
        #[command(subcommand)]
        op: FrameOp,
    },
    /// The dyadic direct limit.
    Limit {
        #[command(subcommand)]
        op: LimitOp,
    },
    /// Matrix *-rings and their projections.
    Ring {
        #[command(subcommand)]
        op: RingOp,
    },
    /// Seeded law suites.
    Axioms {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Subcommand)]
pub enum GenTerm {
    /// The witness term t^d_n.
    Tdn {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
    },
    /// The component term x̂^d_i.
    Xhat {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        i: usize,
    },
    /// (t1 ∧ t2) ∨ (t1' ∧ t2'), equal to 1 exactly where t1 = t2.
    Identity {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
}

#[derive(Subcommand)]
pub enum FrameOp {
    /// Coordinate frame of F^d.
    Canonical {
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Check the frame axioms.
    Verify {
        #[arg(long = "in")]
        input: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Keep a frame, collapse anything else to the trivial frame.
    Normalize {
        #[arg(long = "in")]
        input: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// n distinct atoms on the line a0 ∨ a1.
    Atoms {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArg,
    },
}

#[derive(Subcommand)]
pub enum LimitOp {
    /// U ↦ U ⊕ U.
    Double {
        #[arg(long = "in")]
        input: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Normalized dimension.
    Dim {
        #[arg(long = "in")]
        input: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// δ(x ∨ y) − δ(x ∧ y).
    Metric {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Coordinate subspaces of one level followed by seeded samples.
    Enumerate {
        #[arg(long)]
        level: u32,
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        field: FieldArg,
    },
    /// L(Q(i)^k) → L(Q^2k).
    Realify {
        #[arg(long = "in")]
        input: String,
    },
}

#[derive(Subcommand)]
pub enum RingOp {
    /// Moore–Penrose pseudo-inverse.
    Mp {
        #[arg(long = "in")]
        input: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Meet of two projections.
    Meet {
        #[arg(long)]
        e: String,
        #[arg(long)]
        f: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Join of two projections.
    Join {
        #[arg(long)]
        e: String,
        #[arg(long)]
        f: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// 1 − e.
    Ortho {
        #[arg(long)]
        e: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Column space of a projection.
    ToSubspace {
        #[arg(long)]
        e: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Orthogonal projection onto a subspace.
    FromSubspace {
        #[arg(long = "in")]
        input: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// diag(x, x).
    Double {
        #[arg(long = "in")]
        input: String,
        #[command(flatten)]
        field: FieldArg,
    },
}

#[derive(clap::ValueEnum, Clone, Copy)]
pub enum Suite {
    Mol,
    Penrose,
    Frame,
}

/// A JSON report and whether the command's verdict is positive.
pub struct Outcome {
    pub report: Value,
    pub verdict: bool,
}

impl Outcome {
    pub fn ok(report: Value) -> Self {
        Outcome { report, verdict: true }
    }

    pub fn verdict(report: Value, verdict: bool) -> Self {
        Outcome { report, verdict }
    }
}

fn emit(v: &Value, pretty: bool) {
    let text = if pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) };
    // a closed pipe is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{}", text.expect("serializable"));
}

fn run(cli: Cli) -> Result<Outcome> {
    commands::dispatch(cli.command)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            emit(&json!({ "error": e.kind().to_string() }), false);
            return ExitCode::from(2);
        }
        Err(e) => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    let pretty = cli.pretty;
    match run(cli) {
        Ok(out) => {
            emit(&out.report, pretty);
            if out.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            emit(&json!({ "error": format!("{e:#}") }), pretty);
            ExitCode::from(2)
        }
    }
}
