use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod report;

use report::{Outcome, Report};

/// Exact computation in free Zinbiel superalgebras and small Tortkara
/// superalgebras.
#[derive(Debug, Parser)]
#[command(name = "zinbiel", version)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand an expression into canonical words.
    Expand {
        /// Generators as `name:even|odd`, comma-separated.
        #[arg(long)]
        alphabet: String,
        expr: String,
    },
    /// Super shuffle product of two expressions.
    Shuffle {
        #[arg(long)]
        alphabet: String,
        left: String,
        right: String,
    },
    /// Apply the word-reversal map with its Koszul sign.
    Pmap {
        #[arg(long)]
        alphabet: String,
        expr: String,
    },
    /// Decide whether an element lies in the special Tortkara subalgebra.
    IsSpecial {
        #[arg(long)]
        alphabet: String,
        expr: String,
    },
    /// Compare an ideal with its Zinbiel closure at one multidegree.
    IdealCheck {
        #[arg(long)]
        alphabet: String,
        /// Generators separated by `;`.
        #[arg(long)]
        gens: String,
        /// Multidegree such as `x:2,y:2`.
        #[arg(long)]
        degree: String,
    },
    /// Check identities on a structure-constant algebra.
    Verify {
        #[arg(long)]
        algebra: PathBuf,
        /// Identity names, comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        identity: Vec<String>,
    },
    /// Verify the built-in classification of small Tortkara superalgebras.
    Catalog {
        /// Restrict to one entry, such as `T^9_{2|1}`.
        #[arg(long)]
        entry: Option<String>,
        /// Grassmann generators for the envelope cross-check; 0 skips it.
        #[arg(long, default_value_t = 4)]
        envelope_generators: usize,
    },
    /// Check the classical Tortkara identity on a truncated Grassmann envelope.
    Envelope {
        #[arg(long, conflicts_with = "entry", required_unless_present = "entry")]
        algebra: Option<PathBuf>,
        #[arg(long)]
        entry: Option<String>,
        /// Parameter value for catalog families.
        #[arg(long, requires = "entry")]
        parameter: Option<String>,
        #[arg(long, default_value_t = 4)]
        generators: usize,
    },
    /// Build the products induced by a Rota–Baxter operator.
    RbTower {
        /// A supercommutative associative algebra.
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        operator: PathBuf,
        /// Tower levels above the derived product (even operators only).
        #[arg(long, default_value_t = 1)]
        levels: usize,
    },
}

fn run(cli: &Cli) -> Result<Report, String> {
    match &cli.command {
        Command::Expand { alphabet, expr } => commands::expand(alphabet, expr),
        Command::Shuffle { alphabet, left, right } => commands::shuffle(alphabet, left, right),
        Command::Pmap { alphabet, expr } => commands::pmap(alphabet, expr),
        Command::IsSpecial { alphabet, expr } => commands::is_special(alphabet, expr),
        Command::IdealCheck { alphabet, gens, degree } => commands::ideal_check(alphabet, gens, degree),
        Command::Verify { algebra, identity } => commands::verify(algebra, identity),
        Command::Catalog { entry, envelope_generators } => commands::catalog(entry.as_deref(), *envelope_generators),
        Command::Envelope { algebra, entry, parameter, generators } => {
            commands::envelope(algebra.as_deref(), entry.as_deref(), parameter.as_deref(), *generators)
        }
        Command::RbTower { algebra, operator, levels } => commands::rb_tower(algebra, operator, *levels),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", if cli.json { report.to_json() } else { report.to_text() });
            match report.outcome() {
                Outcome::Success => ExitCode::SUCCESS,
                Outcome::Failure => ExitCode::from(1),
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
