use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gradalg_cli::commands::{self, CliError, Output, Status, UniversalGroupArgs};
use gradalg_cli::format::{parse_group_arg, FieldSpec};

/// Exact computations with group-graded finite-dimensional algebras.
///
/// Exit status: 0 success or property holds, 1 property fails, 2 input
/// error, 3 budget exceeded.
#[derive(Parser)]
#[command(name = "gradalg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify associativity, the unit and the grading condition
    Check { file: PathBuf },
    /// List the support with the basis of each component
    Support { file: PathBuf },
    /// List the pairs (g, h) with A^(g) A^(h) nonzero
    Pairs { file: PathBuf },
    /// Presentation of the universal grading group
    UniversalGroup {
        file: PathBuf,
        #[arg(long)]
        simplify: bool,
        #[arg(long)]
        identify: bool,
        #[arg(long, default_value_t = 100_000)]
        max_cosets: usize,
    },
    /// Verify a weak-equivalence certificate, or search for one
    WeakEquiv {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Equalizer of two graded homomorphisms out of FILE
    Equalizer { file: PathBuf, alpha: PathBuf, beta: PathBuf },
    /// Monomorphism check with a refuting pair on failure
    Mono { hom: PathBuf },
    /// Injectivity on every homogeneous component
    GradedInjective { hom: PathBuf },
    /// Regrade along a group homomorphism
    Regrade {
        file: PathBuf,
        #[arg(long)]
        hom: PathBuf,
    },
    /// Pull back along a group homomorphism with finite domain
    Pullback {
        file: PathBuf,
        #[arg(long)]
        hom: PathBuf,
    },
    /// The product F(F^× × G × H) with its two projections
    TildeProduct {
        #[arg(long)]
        field: FieldSpec,
        first: String,
        second: String,
    },
    /// Replay the counterexample constructions
    Replay {
        names: Vec<String>,
        #[arg(long, conflicts_with = "names")]
        all: bool,
        #[arg(long)]
        field: Vec<FieldSpec>,
        #[arg(long)]
        json: bool,
    },
    /// List the built-in algebras, or print one as a document
    Catalog {
        name: Option<String>,
        #[arg(long, default_value = "Q")]
        field: FieldSpec,
    },
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Check { file } => commands::check(&file),
        Command::Support { file } => commands::support(&file),
        Command::Pairs { file } => commands::pairs(&file),
        Command::UniversalGroup {
            file,
            simplify,
            identify,
            max_cosets,
        } => commands::universal(
            &file,
            &UniversalGroupArgs {
                simplify,
                identify,
                max_cosets,
            },
        ),
        Command::WeakEquiv { first, second, certificate } => commands::weak_equiv(&first, &second, certificate.as_deref()),
        Command::Equalizer { file, alpha, beta } => commands::equalizer_cmd(&file, &alpha, &beta),
        Command::Mono { hom } => commands::mono(&hom),
        Command::GradedInjective { hom } => commands::graded_injective(&hom),
        Command::Regrade { file, hom } => commands::regrade(&file, &hom),
        Command::Pullback { file, hom } => commands::pullback_cmd(&file, &hom),
        Command::TildeProduct { field, first, second } => {
            commands::tilde(field.to_field()?, &parse_group_arg(&first)?, &parse_group_arg(&second)?)
        }
        Command::Replay { names, all: _, field, json } => {
            let fields = field.into_iter().map(FieldSpec::to_field).collect::<Result<Vec<_>, _>>()?;
            commands::replay(&names, &fields, json)
        }
        Command::Catalog { name, field } => commands::catalog_cmd(name.as_deref(), field.to_field()?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            let _ = std::io::stdout().flush();
            ExitCode::from(out.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Status::InputError as u8)
        }
    }
}
