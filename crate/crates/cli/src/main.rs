mod commands;
mod config;
mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use config::{Config, CONFIG_ENV};
use spexlab::Error;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "spexlab", version, about = "Spectral extremal graph experiments")]
pub struct Cli {
    /// Configuration file (key = value lines); defaults to $SPEXLAB_CONFIG
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Override a configuration key, e.g. `--set cap.minor_host=12`
    #[arg(long = "set", value_name = "KEY=VALUE", global = true)]
    set: Vec<String>,

    /// Worker threads (0 = one per core)
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Seed for sampled tree statistics
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Directory to write report files into instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Omit wall-clock fields so identical inputs give identical bytes
    #[arg(long, global = true)]
    no_timestamp: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Spectral radius of one graph
    Lambda(LambdaArgs),
    /// Edge-extremal graphs by exhaustive search
    Ex(SearchArgs),
    /// Spectral-extremal graphs by exhaustive search
    Spex(SearchArgs),
    /// Rank candidate graphs by spectral radius, exactly where possible
    Compare(CompareArgs),
    /// Check a catalog case against exhaustive search
    Verify(VerifyArgs),
    /// Reproduce the seven-item counterexample and its crossover
    Counterexample(CounterexampleArgs),
    /// Good-tree statistics and labelled-tree edge counts
    Trees(TreesArgs),
    /// Full reproduction report
    Report(ReportArgs),
}

#[derive(Args, Debug)]
pub struct LambdaArgs {
    /// Graph expression (e.g. `K3,7`, `K2 + E8`) or `g6:<graph6>`
    pub graph: String,
    #[arg(long, default_value_t = 0.0)]
    pub alpha: f64,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    /// Family, e.g. `list:M4`, `cycles-ge:5`, `minor:K5`
    #[arg(long)]
    pub family: String,
    /// Only connected graphs
    #[arg(long)]
    pub connected: bool,
    /// Restrict to graphs containing K_{k,n-k} (edge objective only)
    #[arg(long)]
    pub restricted_k: Option<usize>,
    /// Comma-separated alpha values (spex only)
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub alpha: Vec<f64>,
    /// Shorthand for `--format csv`
    #[arg(long)]
    pub csv: bool,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    /// Graph expressions or `g6:` strings
    #[arg(required = true)]
    pub graphs: Vec<String>,
    #[arg(long, default_value_t = 0.0)]
    pub alpha: f64,
    /// Also test freeness in this family
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Case name with optional argument, e.g. `matchings:1`
    #[arg(long, required_unless_present = "list")]
    pub case: Option<String>,
    /// Orders: `5..9` (inclusive), `5,7,9` or a single value
    #[arg(long, default_value = "5..8")]
    pub n: String,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub alphas: Vec<f64>,
    /// List the catalog and exit
    #[arg(long)]
    pub list: bool,
}

#[derive(Args, Debug)]
pub struct CounterexampleArgs {
    /// Largest n for the crossover sweep (accepts `1e6`)
    #[arg(long, default_value = "1000000")]
    pub ceiling: String,
    /// Orders for the exact spot checks
    #[arg(long, value_delimiter = ',', default_value = "10,14,50")]
    pub n: Vec<usize>,
}

#[derive(Args, Debug)]
pub struct TreesArgs {
    /// Tree orders
    #[arg(long, value_delimiter = ',', default_value = "4,8,16,32,64")]
    pub m: Vec<usize>,
    #[arg(long, default_value_t = 10_000)]
    pub samples: u64,
    /// Enumerate all labelled trees (fails beyond 10^6 trees)
    #[arg(long, conflicts_with = "sample")]
    pub exhaustive: bool,
    /// Sample even when exhaustive enumeration is cheap
    #[arg(long)]
    pub sample: bool,
    /// Also count labelled trees through fixed edges for these orders
    #[arg(long)]
    pub edge_counts: Option<String>,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    /// Orders for the catalog checks
    #[arg(long, default_value = "5..8")]
    pub n: String,
    #[arg(long, value_delimiter = ',', default_value = "0,0.5")]
    pub alphas: Vec<f64>,
    /// Crossover sweep ceiling
    #[arg(long, default_value = "1000000")]
    pub ceiling: String,
    #[arg(long, default_value_t = 10_000)]
    pub samples: u64,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. } | Error::ParamRange(_) | Error::Graph6(_) | Error::UnknownCase(_) => 2,
        Error::CapExceeded { .. } => 3,
        _ => 1,
    }
}

fn load_config(cli: &Cli) -> spexlab::Result<Config> {
    let mut config = Config::default();
    let path = cli.config.clone().or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
    if let Some(p) = path {
        config.load_file(&p)?;
    }
    for s in &cli.set {
        config.set_assignment(s)?;
    }
    if let Some(w) = cli.workers {
        config.workers = w;
    }
    if let Some(s) = cli.seed {
        config.seed = s;
    }
    if let Some(o) = &cli.out {
        config.out_dir = Some(o.clone());
    }
    config.validated()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = load_config(&cli).and_then(|config| commands::run(&cli, &config));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("spexlab: an exact check failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("spexlab: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
