//! `rattet`: search, verify and certify rational spherical tetrahedra.
//!
//! Exit codes: 0 success, 1 usage, 2 mismatch against a golden fixture or a
//! failed verification, 3 internal invariant violation, 4 IO.

mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{Effective, FileConfig, Flags, Format, Membership, Profile, Stage};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("io: {0}")]
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Mismatch(_) => 2,
            CliError::Invariant(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "rattet", version, about = "Rational spherical tetrahedra with rational volume")]
struct Cli {
    /// TOML file with defaults for the flags below.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory; falls back to the config file, then $RATTET_OUT_DIR.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate rational quadruples and subtract the families.
    Search(SearchArgs),
    /// Verify the family catalog.
    Families {
        /// Verify a single family.
        #[arg(long)]
        family: Option<u8>,
    },
    /// Find the rational Lambert cubes and their companion tetrahedra.
    Lambert,
    /// Issue a non-decomposability certificate.
    Certify(CertifyArgs),
    /// Print the Coxeter tetrahedra of the 3-sphere.
    Catalog,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Float prefilter threshold on |cos a + cos b + cos c + cos d|.
    #[arg(long)]
    tolerance: Option<f64>,
    /// Worker threads, 0 for one per core.
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, value_enum)]
    stage: Option<Stage>,
    #[arg(long, value_enum)]
    profile: Option<Profile>,
    #[arg(long, value_enum)]
    membership: Option<Membership>,
    /// Search rational triples instead of quadruples.
    #[arg(long)]
    triples: bool,
}

#[derive(Args, Debug)]
struct CertifyArgs {
    /// The tetrahedron (5π/18, 2π/9, 13π/18, 11π/18) with the reference disc center.
    #[arg(long, conflicts_with = "quadruple")]
    paper_example: bool,
    /// Any quadruple as `p,q,r,s` fractions of π; a disc center is searched for.
    #[arg(long)]
    quadruple: Option<String>,
    /// Also compare the lifted volumes of the example pair for n = 3..=N.
    #[arg(long)]
    lift: Option<u32>,
}

fn run(cli: Cli) -> Result<(), CliError> {
    let file = match &cli.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    let env_out = std::env::var_os("RATTET_OUT_DIR").map(PathBuf::from);
    let mut flags = Flags { out: cli.out, format: cli.format, ..Flags::default() };
    let (name, args) = match &cli.command {
        Command::Search(a) => {
            flags.tolerance = a.tolerance;
            flags.workers = a.workers;
            flags.stage = a.stage;
            flags.profile = a.profile;
            flags.membership = a.membership;
            ("search", serde_json::json!({ "triples": a.triples }))
        }
        Command::Families { family } => ("families", serde_json::json!({ "family": family })),
        Command::Lambert => ("lambert", serde_json::json!({})),
        Command::Certify(a) => (
            "certify",
            serde_json::json!({ "paper_example": a.paper_example, "quadruple": a.quadruple, "lift": a.lift }),
        ),
        Command::Catalog => ("catalog", serde_json::json!({})),
    };
    let cfg = Effective::resolve(name, flags, file, env_out, args);
    if !(cfg.tolerance > 0.0 && cfg.tolerance < 1.0) {
        return Err(CliError::Usage(format!("tolerance {} is not in (0, 1)", cfg.tolerance)));
    }
    match cli.command {
        Command::Search(a) if a.triples => commands::triples(&cfg),
        Command::Search(_) => commands::search(&cfg),
        Command::Families { family } => commands::families(&cfg, family),
        Command::Lambert => commands::lambert(&cfg),
        Command::Certify(a) => commands::certify(&cfg, a.paper_example, a.quadruple.as_deref(), a.lift),
        Command::Catalog => commands::catalog(&cfg),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rattet: {e}");
            ExitCode::from(e.code())
        }
    }
}
