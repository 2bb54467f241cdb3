use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};

use tourney_core::generators::{
    ascending, chain_minus, chain_plus, condorcet_numbered, descending, perfect_numbered,
    ring_plus, z_tournament,
};
use tourney_core::io::{self as tio, FormatError, TournamentFormat};
use tourney_core::methods::markov;
use tourney_core::paradox::{
    check_condorcet_reducibility, check_long_tournament, check_natural, inversion_check,
    parse_grid, scan_alpha_thresholds, theorem_witness, ParadoxError, PropertyReport,
};
use tourney_core::rational::{is_unit_interval, parse_rational};
use tourney_core::{Method, MethodError, MethodKind, Rational, Tournament, TournamentError};

mod render;

#[derive(Parser)]
#[command(
    name = "tourney",
    version,
    about = "Exact tournament rankings and inversion-paradox experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rate and rank the players of a tournament file
    Rank {
        #[command(flatten)]
        method: MethodArgs,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Write a structured tournament as CSV (text) or JSON
    Generate(GenerateArgs),
    /// Delete the last-ranked player and classify what happens
    Paradox {
        #[command(flatten)]
        method: MethodArgs,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Check the naturality, Condorcet and long tournament axioms
    Properties(PropertiesArgs),
    /// Markov rankings across a grid of damping factors
    ScanAlpha {
        #[command(flatten)]
        io: IoArgs,
        /// start:end:step, fractions or decimals
        #[arg(long, default_value = "0.05:1:0.05")]
        grid: String,
    },
}

#[derive(Args)]
struct MethodArgs {
    #[arg(long, value_parser = parse_method)]
    method: MethodKind,
    /// Markov damping factor, e.g. 17/20 or 0.85
    #[arg(long, value_parser = parse_alpha, default_value = "17/20")]
    alpha: Rational,
}

impl MethodArgs {
    fn method(&self) -> Method {
        Method::with_kind(self.method, &self.alpha)
    }
}

#[derive(Args)]
struct IoArgs {
    /// Tournament file (CSV or JSON); `-` reads stdin
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct OutArgs {
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Perfect,
    Condorcet,
    Ring,
    ChainMinus,
    ChainPlus,
    Z,
    Witness,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    /// Best-first player numbers, e.g. 3,1,2
    #[arg(long, value_delimiter = ',')]
    order: Option<Vec<usize>>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AxiomArg {
    Natural,
    Condorcet,
    LongTournament,
    All,
}

#[derive(Args)]
struct PropertiesArgs {
    #[command(flatten)]
    method: MethodArgs,
    #[arg(long, value_enum, default_value_t = AxiomArg::All)]
    axiom: AxiomArg,
    #[arg(long, default_value_t = 5)]
    n: usize,
    /// Random orders tried by the naturality check when n > 4
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 16)]
    k_max: usize,
    #[command(flatten)]
    out: OutArgs,
}

fn parse_method(s: &str) -> Result<MethodKind, String> {
    s.parse()
}

fn parse_alpha(s: &str) -> Result<Rational, String> {
    let a = parse_rational(s).map_err(|e| e.to_string())?;
    if is_unit_interval(&a) {
        Ok(a)
    } else {
        Err(format!("alpha must lie in [0, 1], got {s}"))
    }
}

enum CliError {
    Input(String),
    Method(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Method(_) => 3,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<TournamentError> for CliError {
    fn from(e: TournamentError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<MethodError> for CliError {
    fn from(e: MethodError) -> Self {
        CliError::Method(e.to_string())
    }
}

impl From<ParadoxError> for CliError {
    fn from(e: ParadoxError) -> Self {
        match e {
            ParadoxError::Method(m) => m.into(),
            ParadoxError::NotStrictOrder(_) => CliError::Method(e.to_string()),
            ParadoxError::Tournament(_) | ParadoxError::InvalidGrid(_) => {
                CliError::Input(e.to_string())
            }
        }
    }
}

fn read_tournament(path: &PathBuf) -> Result<Tournament, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?
    };
    Ok(tio::parse(&text)?)
}

fn emit(out: &OutArgs, body: String) -> Result<(), CliError> {
    let body = if body.ends_with('\n') {
        body
    } else {
        body + "\n"
    };
    match &out.output {
        Some(path) => {
            fs::write(path, body).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
        }
        None => io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| CliError::Input(format!("stdout: {e}"))),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn need(value: Option<usize>, flag: &str, kind: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Input(format!("--kind {kind} needs --{flag}")))
}

fn generate(args: &GenerateArgs) -> Result<Tournament, CliError> {
    let order = |n: Option<usize>, kind: &str| -> Result<Vec<usize>, CliError> {
        match (&args.order, n) {
            (Some(o), _) => Ok(o.clone()),
            (None, Some(n)) => Ok(ascending(n)),
            (None, None) => Err(CliError::Input(format!(
                "--kind {kind} needs --order or --n"
            ))),
        }
    };
    let t = match args.kind {
        Kind::Perfect => perfect_numbered(&order(args.n, "perfect")?)?,
        Kind::Condorcet => condorcet_numbered(&order(args.n, "condorcet")?)?,
        Kind::Ring => ring_plus(need(args.n, "n", "ring")?)?,
        Kind::ChainMinus => chain_minus(need(args.n, "n", "chain-minus")?)?,
        Kind::ChainPlus => chain_plus(need(args.n, "n", "chain-plus")?)?,
        Kind::Z => z_tournament(
            need(args.n, "n", "z")?,
            need(args.k, "k", "z")?,
            need(args.l, "l", "z")?,
        )?,
        Kind::Witness => theorem_witness(need(args.n, "n", "witness")?, args.k.unwrap_or(2))?,
    };
    Ok(t)
}

fn properties(args: &PropertiesArgs) -> Result<Vec<PropertyReport>, CliError> {
    let method = args.method.method();
    let n = args.n;
    let wanted = |a: AxiomArg| args.axiom == a || args.axiom == AxiomArg::All;
    let mut reports = Vec::new();
    if wanted(AxiomArg::Natural) {
        reports.push(check_natural(&method, n, args.trials, args.seed)?);
    }
    if wanted(AxiomArg::Condorcet) {
        let base = perfect_numbered(&ascending(n))?;
        reports.push(check_condorcet_reducibility(
            &method,
            &base,
            &descending(n),
            args.k_max,
        )?);
    }
    if wanted(AxiomArg::LongTournament) {
        let t1 = perfect_numbered(&ascending(n))?;
        let t2 = perfect_numbered(&descending(n))?;
        reports.push(check_long_tournament(&method, &t1, &t2, args.k_max)?);
    }
    Ok(reports)
}

/// Drops the endpoints 0 and 1 when the stationary vector is not unique
/// there; any other failure is reported.
fn usable_grid(
    t: &Tournament,
    grid: Vec<Rational>,
) -> Result<(Vec<Rational>, Vec<String>), CliError> {
    let mut kept = Vec::with_capacity(grid.len());
    let mut notes = Vec::new();
    for a in grid {
        if a.is_zero() || a.is_one() {
            match markov(t, &a) {
                Err(MethodError::NonUniqueStationary { .. }) => {
                    notes.push(format!(
                        "alpha = {a} skipped: stationary vector is not unique"
                    ));
                    continue;
                }
                Err(e) => return Err(e.into()),
                Ok(_) => {}
            }
        }
        kept.push(a);
    }
    Ok((kept, notes))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Rank { method, io } => {
            let t = read_tournament(&io.input)?;
            let rv = method.method().rate(&t)?;
            let body = match io.out.format {
                OutputFormat::Json => json(&rv),
                OutputFormat::Text => render::ratings(&method.method(), &rv),
            };
            emit(&io.out, body)
        }
        Command::Generate(args) => {
            let t = generate(&args)?;
            let fmt = match args.out.format {
                OutputFormat::Text => TournamentFormat::Csv,
                OutputFormat::Json => TournamentFormat::Json,
            };
            emit(&args.out, tio::render(&t, fmt))
        }
        Command::Paradox { method, io } => {
            let t = read_tournament(&io.input)?;
            let report = inversion_check(&t, &method.method())?;
            let body = match io.out.format {
                OutputFormat::Json => json(&report),
                OutputFormat::Text => render::paradox(&report),
            };
            emit(&io.out, body)
        }
        Command::Properties(args) => {
            let reports = properties(&args)?;
            let body = match args.out.format {
                OutputFormat::Json => json(&reports),
                OutputFormat::Text => render::properties(&reports),
            };
            emit(&args.out, body)
        }
        Command::ScanAlpha { io, grid } => {
            let t = read_tournament(&io.input)?;
            let (grid, notes) = usable_grid(&t, parse_grid(&grid)?)?;
            let scan = scan_alpha_thresholds(&t, &grid)?;
            let body = match io.out.format {
                OutputFormat::Json => json(&serde_json::json!({
                    "rows": scan.rows,
                    "change_points": scan.change_points,
                    "notes": notes,
                })),
                OutputFormat::Text => render::scan(&scan, &notes),
            };
            emit(&io.out, body)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let (CliError::Input(msg) | CliError::Method(msg)) = &e;
            eprintln!("error: {msg}");
            ExitCode::from(e.code())
        }
    }
}
