use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use cicrit_cli::run::{self, VerifySpec};
use cicrit_cli::Format;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Plain,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Plain => Format::Plain,
        }
    }
}

/// Exact-arithmetic complete-intersection criteria for subvarieties of
/// rational homogeneous varieties.
#[derive(Parser)]
#[command(name = "cicrit", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Plain)]
    format: FormatArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariants of G/P (dimension, index, m, p, sp, ...).
    Variety {
        /// Dynkin type: A, B, C, D, E, F or G.
        r#type: String,
        rank: u32,
        /// Marked node, Bourbaki numbering.
        node: u32,
    },
    /// Classify the 2-codimensional datum (d, n) on G/P.
    Classify {
        r#type: String,
        rank: u32,
        node: u32,
        /// Degree d of the subvariety.
        d: u64,
        /// Determinant twist n of the normal bundle.
        n: u64,
    },
    /// Minimal positive discriminants on P^1 ... P^p_max.
    Deltamin {
        p_max: u32,
        /// Advisory cache file (also via CI_CRITERIA_CACHE).
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Re-run the numerical verifications.
    Verify {
        /// Check delta_min(p) > p^2/6 for p in FROM..=TO.
        #[arg(long, num_args = 2, value_names = ["FROM", "TO"])]
        prop_sch: Option<Vec<u32>>,
        /// Check the quartic/quadratic estimate crossover rank.
        #[arg(long)]
        crossover: bool,
        /// Cross-check index and dimension tables up to this rank.
        #[arg(long, value_name = "RANK_MAX")]
        tables: Option<u32>,
    },
    /// Render the (d, n)-plane of G/P as SVG.
    Plot {
        r#type: String,
        rank: u32,
        node: u32,
        /// Right edge of the d axis.
        #[arg(long)]
        d_max: Option<u64>,
        /// Output file (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            eprint!("{err}");
            return ExitCode::from(1);
        }
    };
    let format: Format = cli.format.into();

    let outcome = match cli.command {
        Command::Variety { r#type, rank, node } => {
            run::cmd_variety(&r#type, rank, node, format).map(|out| {
                print!("{}", out.text);
                0
            })
        }
        Command::Classify {
            r#type,
            rank,
            node,
            d,
            n,
        } => run::cmd_classify(&r#type, rank, node, d, n, format).map(|out| {
            print!("{}", out.text);
            0
        }),
        Command::Deltamin { p_max, cache } => {
            let cache = cache.or_else(|| std::env::var_os("CI_CRITERIA_CACHE").map(PathBuf::from));
            run::cmd_deltamin(p_max, cache.as_deref(), format).map(|out| {
                print!("{}", out.text);
                0
            })
        }
        Command::Verify {
            prop_sch,
            crossover,
            tables,
        } => {
            let spec = VerifySpec {
                prop_sch: prop_sch.map(|v| (v[0], v[1])),
                crossover,
                tables,
            };
            run::cmd_verify(&spec, format).map(|(out, all_pass)| {
                print!("{}", out.text);
                if all_pass {
                    0
                } else {
                    3
                }
            })
        }
        Command::Plot {
            r#type,
            rank,
            node,
            d_max,
            out,
        } => run::cmd_plot(&r#type, rank, node, d_max).and_then(|svg| {
            match out {
                Some(path) => std::fs::write(path, svg)?,
                None => print!("{svg}"),
            }
            Ok(0)
        }),
    };

    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(run::exit_code_for(&err) as u8)
        }
    }
}
