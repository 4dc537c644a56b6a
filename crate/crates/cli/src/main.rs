use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ncalg::liealg::Side;
use ncalg_cli::commands::{self, CliError, CommandOutput};

/// Workbench for graded algebras presented by generators and relations:
/// rewrite-system completion, Hilbert series, resolution checking, graded
/// Lie algebra homology, and numerical classification of resolution shapes.
#[derive(Parser)]
#[command(name = "ncalg", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the machine-readable TSV payload to this path.
    #[arg(long, global = true, value_name = "PATH")]
    tsv: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Complete an algebra presentation into a confluent rewrite system.
    Complete {
        file: PathBuf,
        /// Override the file's degree cap.
        #[arg(long)]
        cap: Option<u32>,
        /// Override the file's monomial order, e.g. "deglex x>y".
        #[arg(long)]
        order: Option<String>,
    },
    /// Count normal words per degree and recognize a product-form series.
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        cap: Option<u32>,
        #[arg(long)]
        order: Option<String>,
        /// Count per bidegree (requires bigraded generators).
        #[arg(long)]
        bigraded: bool,
    },
    /// Verify a free complex over a presented algebra.
    CheckComplex {
        /// Algebra presentation file.
        #[arg(long)]
        algebra: PathBuf,
        /// Complex file over the same generators.
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Graded Lie algebra computations from a presentation file.
    Lie {
        #[command(subcommand)]
        sub: LieCommand,
    },
    /// Scan numerical resolution types of global dimension five on two
    /// generators.
    Enumerate {
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, default_value_t = 30)]
        lmax: u32,
        #[arg(long, default_value_t = 60)]
        cap: u32,
    },
    /// Run the full verification suite on the bundled corpus.
    VerifyPaper,
}

#[derive(Subcommand)]
enum LieCommand {
    /// Graded Betti numbers of the ground field over the enveloping
    /// algebra.
    Betti {
        file: PathBuf,
        #[arg(long)]
        cap: Option<u32>,
    },
    /// The product-formula Hilbert series of the enveloping algebra.
    Pbw {
        file: PathBuf,
        #[arg(long)]
        cap: Option<u32>,
    },
    /// The alternating wedge-bracket form whose vanishing makes the two
    /// standard complexes dual.
    Delta {
        file: PathBuf,
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Emit the standard resolution as a complex file.
    Ce {
        file: PathBuf,
        #[arg(long)]
        cap: Option<u32>,
        #[arg(long, value_parser = parse_side, default_value = "left")]
        side: Side,
    },
    /// Explore bracket forms on four degree-one generators and report the
    /// rank distribution of the deciding differential slice.
    RankScan {
        /// Comma-separated structure-constant values to scan.
        #[arg(long, default_value = "-1,0,1")]
        values: String,
    },
}

fn parse_side(s: &str) -> Result<Side, String> {
    match s {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        other => Err(format!("side must be 'left' or 'right', got {other:?}")),
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.display().to_string(), err: e.to_string() })
}

fn run(cli: &Cli) -> Result<CommandOutput, CliError> {
    match &cli.command {
        Command::Complete { file, cap, order } => {
            let src = read(file)?;
            commands::cmd_complete(&file.display().to_string(), &src, *cap, order.as_deref())
        }
        Command::Hilbert { file, cap, order, bigraded } => {
            let src = read(file)?;
            commands::cmd_hilbert(
                &file.display().to_string(),
                &src,
                *cap,
                order.as_deref(),
                *bigraded,
            )
        }
        Command::CheckComplex { algebra, complex, cap } => {
            let alg_src = read(algebra)?;
            let cpx_src = read(complex)?;
            commands::cmd_check_complex(
                &algebra.display().to_string(),
                &alg_src,
                &complex.display().to_string(),
                &cpx_src,
                *cap,
            )
        }
        Command::Lie { sub } => match sub {
            LieCommand::Betti { file, cap } => {
                let src = read(file)?;
                commands::cmd_lie_betti(&file.display().to_string(), &src, *cap)
            }
            LieCommand::Pbw { file, cap } => {
                let src = read(file)?;
                commands::cmd_lie_pbw(&file.display().to_string(), &src, *cap)
            }
            LieCommand::Delta { file, cap } => {
                let src = read(file)?;
                commands::cmd_lie_delta(&file.display().to_string(), &src, *cap)
            }
            LieCommand::Ce { file, cap, side } => {
                let src = read(file)?;
                commands::cmd_lie_ce(&file.display().to_string(), &src, *cap, *side)
            }
            LieCommand::RankScan { values } => {
                let parsed: Result<Vec<i64>, _> =
                    values.split(',').map(|v| v.trim().parse::<i64>()).collect();
                let values = parsed
                    .map_err(|_| CliError::Usage("values must be comma-separated integers".into()))?;
                commands::cmd_lie_rank_scan(&values)
            }
        },
        Command::Enumerate { nmax, lmax, cap } => commands::cmd_enumerate(*nmax, *lmax, *cap),
        Command::VerifyPaper => commands::cmd_verify_paper(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            if let Some(path) = &cli.tsv {
                if let Err(e) = std::fs::write(path, &out.tsv) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
