use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use weyl_cartan::commands::{self, Outcome};
use weyl_cartan::config::RunConfig;
use weyl_cartan::Error;

#[derive(Parser)]
#[command(name = "weyl-cartan", version, about = "Cartan polynomials of W-infinity: tables, identity suites and numeric checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct Overrides {
    /// TOML run configuration; flags override its keys
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    n_max: Option<u32>,
    /// Ordering parameters: sym, p/q or p/q*i (comma separated)
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    s: Option<Vec<String>>,
    /// Angles in radians or as p*pi/q (comma separated)
    #[arg(long, global = true, value_delimiter = ',')]
    phi: Option<Vec<String>>,
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    v: Option<Vec<f64>>,
    #[arg(long, global = true)]
    hbar: Option<f64>,
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Suites for `verify`: weyl, cartan, su11, classical, analysis
    #[arg(long = "suite", global = true, value_delimiter = ',', num_args = 0..)]
    suites: Option<Vec<String>>,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficient tables of P_0 .. P_n_max (JSON and text)
    Table(#[command(flatten)] Overrides),
    /// Run identity and numeric suites
    Verify(#[command(flatten)] Overrides),
    /// Normal-order an operator expression
    Normalize { expr: String },
    /// Commutator (or anticommutator) of two operator expressions
    Bracket {
        a: String,
        b: String,
        #[arg(long)]
        anti: bool,
    },
    /// Discrete and continuous orthogonality grids
    Orthogonality(#[command(flatten)] Overrides),
    /// Zero-energy Schrodinger residuals
    Schrodinger(#[command(flatten)] Overrides),
    /// Generating-function coefficients against the polynomials
    Genfun(#[command(flatten)] Overrides),
}

fn resolve(o: &Overrides) -> Result<RunConfig, Error> {
    let mut cfg = match &o.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    let o = o.clone();
    if let Some(v) = o.n_max { cfg.n_max = v; }
    if let Some(v) = o.s { cfg.s = v; }
    if let Some(v) = o.phi { cfg.phi = v; }
    if let Some(v) = o.v { cfg.v = v; }
    if let Some(v) = o.hbar { cfg.hbar = v; }
    if let Some(v) = o.tol { cfg.tol = Some(v); }
    if let Some(v) = o.out { cfg.out = v; }
    if let Some(v) = o.jobs { cfg.jobs = v; }
    if let Some(v) = o.suites { cfg.suites = v; }
    cfg.validate()?;
    Ok(cfg)
}

fn run(cmd: &Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Table(o) => commands::cmd_table(&resolve(o)?),
        Command::Verify(o) => commands::cmd_verify(&resolve(o)?),
        Command::Normalize { expr } => commands::cmd_normalize(expr),
        Command::Bracket { a, b, anti } => commands::cmd_bracket(a, b, *anti),
        Command::Orthogonality(o) => commands::cmd_orthogonality(&resolve(o)?),
        Command::Schrodinger(o) => commands::cmd_schrodinger(&resolve(o)?),
        Command::Genfun(o) => commands::cmd_genfun(&resolve(o)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            println!("{}", out.summary.trim_end());
            for f in &out.files {
                eprintln!("wrote {}", f.display());
            }
            if out.passed { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Err(e @ (Error::Config(_) | Error::Parse { .. } | Error::InvalidParameter(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
