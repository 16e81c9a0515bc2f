//! hopfact: build, verify, analyze, and report on Hopf algebra files.
//!
//! Exit codes: 0 = all assertions passed; 1 = a mathematical assertion
//! failed (the report names the assertion and a counterexample); 2 = input
//! or usage error.

mod output;
mod verbs;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{render, CliReport};

#[derive(Parser)]
#[command(name = "hopfact", version, about = "Exact computations with finite-dimensional Hopf algebras given by structure constants")]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct PairArgs {
    /// Basis indices spanning the left subalgebra A (subgroup element
    /// indices for group-algebra inputs), comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with = "a_basis")]
    a_indices: Option<Vec<usize>>,
    /// Subspace file for A (general case).
    #[arg(long)]
    a_basis: Option<std::path::PathBuf>,
    /// Basis indices spanning the right subalgebra L, comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with = "l_basis")]
    l_indices: Option<Vec<usize>>,
    /// Subspace file for L (general case).
    #[arg(long)]
    l_basis: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify all Hopf algebra axioms of a structure-constant file.
    Verify {
        input: std::path::PathBuf,
    },
    /// Write the dual Hopf algebra to a file.
    Dual {
        input: std::path::PathBuf,
        #[arg(short, long)]
        output: std::path::PathBuf,
    },
    /// Enumerate the lattice of normal Hopf subalgebras.
    Lattice {
        input: std::path::PathBuf,
    },
    /// Compute the socle and its tensor decomposition.
    Socle {
        input: std::path::PathBuf,
    },
    /// Krull-Schmidt-Remak decomposition, or the obstruction witness.
    Ksr {
        input: std::path::PathBuf,
    },
    /// Analyze a factorization H = A·L: kind, matched-pair extraction,
    /// rebuild comparison, and the applicable isomorphisms.
    Factorize {
        input: std::path::PathBuf,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Verify the projection-pair properties of a normal factorization and
    /// both round trips.
    Projections {
        input: std::path::PathBuf,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Verify the lattice anti-isomorphism between H and its dual.
    Duality {
        input: std::path::PathBuf,
    },
    /// Build a Hopf algebra file from a preset or group file.
    Build {
        /// Preset name: C1–C30, Klein4, S3, D4, Q8, A4, or products like C2xD4.
        #[arg(long, conflicts_with = "group_file")]
        preset: Option<String>,
        /// Cayley-table file.
        #[arg(long)]
        group_file: Option<std::path::PathBuf>,
        /// Build the group algebra kG.
        #[arg(long, conflicts_with = "dual_group_algebra")]
        group_algebra: bool,
        /// Build the function algebra k^G.
        #[arg(long)]
        dual_group_algebra: bool,
        #[arg(short, long)]
        output: std::path::PathBuf,
    },
    /// Check the dimension formula |LA| = |L||A|/|L∩A| for a subalgebra pair.
    Dimcheck {
        input: std::path::PathBuf,
        #[command(flatten)]
        pair: PairArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<CliReport, verbs::UsageError> = match &cli.command {
        Command::Verify { input } => verbs::verify(input),
        Command::Dual { input, output } => verbs::dual(input, output),
        Command::Lattice { input } => verbs::lattice(input),
        Command::Socle { input } => verbs::socle(input),
        Command::Ksr { input } => verbs::ksr(input),
        Command::Factorize { input, pair } => verbs::factorize(input, pair),
        Command::Projections { input, pair } => verbs::projections(input, pair),
        Command::Duality { input } => verbs::duality(input),
        Command::Build {
            preset,
            group_file,
            group_algebra,
            dual_group_algebra,
            output,
        } => verbs::build(
            preset.as_deref(),
            group_file.as_deref(),
            *group_algebra,
            *dual_group_algebra,
            output,
        ),
        Command::Dimcheck { input, pair } => verbs::dimcheck(input, pair),
    };
    match result {
        Ok(report) => {
            let passed = report.passed;
            print!("{}", render(&report, cli.format == Format::Json));
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(usage) => {
            eprintln!("error: {}", usage.0);
            ExitCode::from(2)
        }
    }
}
