//! `flagomega` command-line tool.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{Report, Status};

#[derive(Parser, Debug)]
#[command(name = "flagomega", version, about = "Exact Charney-Davis quantities of weighted flag complexes")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print omega as an exact fraction.
    Omega { file: PathBuf },
    /// Census of simplices by dimension and Coxeter type.
    Classify {
        file: PathBuf,
        /// List every simplex instead of counts.
        #[arg(long)]
        all: bool,
    },
    /// Reduced integral homology.
    Homology { file: PathBuf },
    /// Generalized homology sphere check; exits 1 with a certificate on failure.
    Ghs {
        file: PathBuf,
        #[arg(long)]
        n: isize,
    },
    /// Sign check for an odd-dimensional sphere; exits 1 if the sign is wrong.
    Check { file: PathBuf },
    /// Lower the weight of one edge.
    Reduce {
        file: PathBuf,
        /// Endpoints as `a,b`.
        #[arg(long)]
        edge: String,
        #[arg(long)]
        to: u32,
        /// Write the resulting complex here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lower weights until the complex is right-angled.
    Pipeline {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification battery of identities and constants.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_n: u32,
        #[arg(long, default_value_t = 24)]
        series_order: usize,
    },
}

fn run(cli: &Cli) -> Result<Report, commands::InputError> {
    match &cli.command {
        Command::Omega { file } => commands::omega(file),
        Command::Classify { file, all } => commands::classify(file, *all),
        Command::Homology { file } => commands::homology(file),
        Command::Ghs { file, n } => commands::ghs(file, *n),
        Command::Check { file } => commands::check(file),
        Command::Reduce { file, edge, to, out } => commands::reduce(file, edge, *to, out.as_deref()),
        Command::Pipeline { file, out } => commands::pipeline(file, out.as_deref()),
        Command::Verify { max_n, series_order } => commands::verify(*max_n, *series_order),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report.json).expect("plain JSON values")),
            }
            match report.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Failed => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
