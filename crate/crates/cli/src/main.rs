//! `cactus`: secant/cactus membership decisions and the apolarity tools behind them.

mod commands;
mod error;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "cactus", version, about = "Exact secant/cactus membership tests over F_p")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct Config {
    /// Prime modulus of the coefficient field.
    #[arg(long, global = true, default_value_t = 7919)]
    pub prime: u32,
    /// Largest total degree accepted anywhere; must be below the prime.
    #[arg(long, global = true, default_value_t = 40)]
    pub budget: u32,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Number of variables beyond x0 (defaults to the largest index in the input,
    /// at least 6 for decide-secant14 and 4 for decide-grassmann83).
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Run decide-secant14 on quintics, outside the range the test is proven for.
    #[arg(long = "force-d5", global = true)]
    pub force_d5: bool,
    /// Re-run under these primes as well and report whether the answers agree.
    #[arg(long = "check-primes", global = true, value_delimiter = ',')]
    pub check_primes: Vec<u32>,
    /// Input file: one polynomial per nonblank line.
    #[arg(long, global = true)]
    pub poly: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Is a form assumed in the 14th cactus variety in the 14th secant variety?
    DecideSecant14(DecideArgs),
    /// Is a 3-plane of forms assumed in the (8,3) Grassmann cactus variety in the secant one?
    DecideGrassmann83(DecideArgs),
    /// Generators of Ann(V) (reduced grevlex Gröbner basis).
    Annihilator,
    /// Graded or local Hilbert function of the apolar algebra.
    Hilbert(HilbertArgs),
    /// dim Hom(I, R/I) at the origin, for an ideal in a-variables or Ann of a subspace.
    TangentDim(TangentArgs),
    /// Cactus-rank bounds from re-homogenization.
    Bounds(BoundsArgs),
    /// Hilbert-function obstruction to border cactus rank <= r.
    Obstruction(ObstructionArgs),
    /// Worked examples; without --name, lists them.
    Example(ExampleArgs),
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct DecideArgs {
    /// Also decide after this many random changes of the completed basis in Step 3.
    #[arg(long, default_value_t = 0)]
    pub completions: usize,
}

#[derive(Args, Debug, Clone, Serialize)]
#[group(required = true, multiple = false)]
pub struct HilbertArgs {
    /// Local Hilbert function of Apolar(W) for polynomials in x1..xn.
    #[arg(long)]
    pub local: bool,
    /// Graded Hilbert function for a homogeneous form.
    #[arg(long)]
    pub graded: bool,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct TangentArgs {
    /// Use the I/I^2 model in R/m^t instead of syzygies.
    #[arg(long)]
    pub conormal: bool,
    /// Truncation degree t for --conormal (default 2N).
    #[arg(long, requires = "conormal")]
    pub truncation: Option<u32>,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct BoundsArgs {
    /// Upper bound r >= cactus rank of the re-homogenization.
    #[arg(long = "cactus-upper", group = "claim")]
    pub cactus_upper: bool,
    /// Exact border cactus rank, when the hypotheses hold.
    #[arg(long = "border-exact", group = "claim")]
    pub border_exact: bool,
    /// Extra degree of the re-homogenization.
    #[arg(long)]
    pub d2: u32,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct ObstructionArgs {
    /// Rank to test against.
    #[arg(long)]
    pub r: usize,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct ExampleArgs {
    /// Example name, as listed by `cactus example`.
    #[arg(long)]
    pub name: Option<String>,
    /// Recompute every stated value and compare.
    #[arg(long, requires = "name")]
    pub verify: bool,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::DecideSecant14(_) => "decide-secant14",
            Command::DecideGrassmann83(_) => "decide-grassmann83",
            Command::Annihilator => "annihilator",
            Command::Hilbert(_) => "hilbert",
            Command::TangentDim(_) => "tangent-dim",
            Command::Bounds(_) => "bounds",
            Command::Obstruction(_) => "obstruction",
            Command::Example(_) => "example",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = &cli.config;
    let result = match &cli.command {
        Command::DecideSecant14(a) => commands::decide(cfg, a, commands::Which::Secant14),
        Command::DecideGrassmann83(a) => commands::decide(cfg, a, commands::Which::Grassmann83),
        Command::Annihilator => commands::annihilator(cfg),
        Command::Hilbert(a) => commands::hilbert(cfg, a),
        Command::TangentDim(a) => commands::tangent_dim(cfg, a),
        Command::Bounds(a) => {
            if !a.cactus_upper && !a.border_exact {
                Err(CliError::Usage("bounds needs --cactus-upper or --border-exact".into()))
            } else {
                commands::bounds(cfg, a)
            }
        }
        Command::Obstruction(a) => commands::obstruction(cfg, a),
        Command::Example(a) => commands::example(cfg, a),
    };
    let envelope = |body: serde_json::Value| {
        json!({
            "tool": "cactus",
            "version": env!("CARGO_PKG_VERSION"),
            "command": cli.command.name(),
            "config": cfg,
            "report": body,
        })
    };
    match result {
        Ok(out) => {
            if cfg.json {
                println!("{}", serde_json::to_string_pretty(&envelope(out.json)).unwrap());
            } else {
                print!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = e.exit_code();
            if cfg.json {
                let body = json!({ "error": { "kind": e.kind(), "message": e.to_string(), "exit": code } });
                println!("{}", serde_json::to_string_pretty(&envelope(body)).unwrap());
            }
            eprintln!("error: {e}");
            ExitCode::from(code as u8)
        }
    }
}
