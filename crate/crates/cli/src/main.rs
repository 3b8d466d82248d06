//! `cherncert`: χ^p tables, Schur generators, sign certificates and variety
//! audits from the command line.
//!
//! Exit codes: 0 success or certified, 1 infeasible or failed audit,
//! 2 usage or input error, 3 internal consistency failure.

mod commands;
mod config;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cherncert::Convention;

#[derive(Parser, Debug)]
#[command(name = "cherncert", version, about)]
struct Cli {
    /// Emit a JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Variables in which polynomials are read and printed.
    #[arg(long, global = true, value_enum, default_value_t = ConventionArg::Cotangent)]
    convention: ConventionArg,
    /// Largest dimension accepted (overrides the config file).
    #[arg(long, global = true)]
    max_dim: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConventionArg {
    Tangent,
    Cotangent,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Tangent => Convention::Tangent,
            ConventionArg::Cotangent => Convention::Cotangent,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    NefCotangent,
    NefTangent,
}

impl From<ModeArg> for cherncert::cone::NefMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::NefCotangent => cherncert::cone::NefMode::NefCotangent,
            ModeArg::NefTangent => cherncert::cone::NefMode::NefTangent,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Table of χ^p = χ(X, Ω^p) as Chern-number polynomials.
    Chi {
        #[arg(long)]
        dim: i64,
    },
    /// Schur polynomials P_a = det(c_{a_i - i + j}).
    Schur {
        #[arg(long)]
        dim: i64,
        /// Single partition, e.g. `2,1`; all partitions of dim when omitted.
        #[arg(long)]
        partition: Option<String>,
    },
    /// Search for a nonnegative generator combination equal to a target.
    Certify(CertifyArgs),
    /// Chern numbers and χ^p values of a variety.
    Variety {
        #[command(subcommand)]
        action: VarietyCommand,
    },
    /// Audit the conjectured χ^p signs on a variety or a corpus file.
    Check(CheckArgs),
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    #[arg(long)]
    pub dim: i64,
    /// `chi:p`, `euler`, or a polynomial such as `c1*c2 - c3`.
    #[arg(long)]
    pub target: String,
    /// Comma-separated extra generators: my2, my4, c1top, or config names.
    #[arg(long, value_delimiter = ',')]
    pub assume: Vec<String>,
    #[arg(long, value_enum, default_value_t = ModeArg::NefCotangent)]
    pub mode: ModeArg,
}

#[derive(Subcommand, Debug)]
enum VarietyCommand {
    /// Evaluate a variety given as a builtin name or descriptor JSON.
    Eval {
        variety: String,
        /// `chi:p`, `euler`, or a top-weight polynomial to evaluate as well.
        #[arg(long)]
        functional: Option<String>,
    },
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Builtin variety (`pn:3`, `abelian:2`, `curve:2*curve:2`, `surface`, ...).
    pub variety: Option<String>,
    /// JSON-lines corpus to replay; `builtin` for the shipped corpus.
    #[arg(long, conflicts_with = "variety")]
    pub corpus: Option<String>,
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// c_1^2 for `surface`.
    #[arg(long, allow_hyphen_values = true)]
    pub c1sq: Option<i64>,
    /// c_2 for `surface`.
    #[arg(long, allow_hyphen_values = true)]
    pub c2: Option<i64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match config::Config::load_from_env() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let ctx = commands::Context {
        json: cli.json,
        convention: cli.convention.into(),
        max_dim: cli
            .max_dim
            .or(cfg.max_dim)
            .unwrap_or(config::DEFAULT_CLI_MAX_DIM),
        config: cfg,
    };
    let result = match cli.command {
        Command::Chi { dim } => commands::chi(&ctx, dim),
        Command::Schur { dim, partition } => commands::schur(&ctx, dim, partition.as_deref()),
        Command::Certify(args) => commands::certify(&ctx, &args),
        Command::Variety {
            action: VarietyCommand::Eval {
                variety,
                functional,
            },
        } => commands::variety_eval(&ctx, &variety, functional.as_deref()),
        Command::Check(args) => commands::check(&ctx, &args),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
