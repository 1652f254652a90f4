use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mgs_core::green::DEFAULT_BRICK_GATE;
use mgs_core::lattice::DEFAULT_SUBSET_GATE;
use mgs_core::linalg::Field;
use mgs_core::orders::OrderTag;
use mgs_core::verify::Gates;
use mgs_core::{Error, Options};

mod algebra_file;
mod commands;
mod dot;
mod module_expr;
mod reports;

use commands::{PosetFormat, Settings};

/// Maximal green sequences of Nakayama and type-A algebras.
#[derive(Parser)]
#[command(name = "mgs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Refuse to enumerate sequences when the algebra has more bricks than this.
    #[arg(long, global = true, default_value_t = DEFAULT_BRICK_GATE)]
    brick_gate: usize,

    /// Refuse brute-force torsion lattices over more subsets than this.
    #[arg(long, global = true, default_value_t = DEFAULT_SUBSET_GATE)]
    subset_gate: usize,

    /// Use worker threads for the Hom table and enumeration. Output is unchanged.
    #[arg(long, global = true)]
    parallel: bool,

    /// Compute ranks over the rationals instead of modulo a large prime.
    #[arg(long, global = true)]
    exact: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List the indecomposables with ids, descriptors and dimension vectors.
    Catalog { algebra: PathBuf },
    /// List the bricks.
    Bricks { algebra: PathBuf },
    /// Enumerate maximal green sequences.
    Mgs { algebra: PathBuf },
    /// Group sequences into equivalence classes keyed by their summand sets.
    Classes { algebra: PathBuf },
    /// Emit the Hasse diagram of an order on equivalence classes.
    Poset {
        algebra: PathBuf,
        #[arg(long, default_value = "summand")]
        order: OrderTag,
        #[arg(long, value_enum, default_value = "dot")]
        format: PosetFormat,
    },
    /// Harder-Narasimhan filtration of a module along one sequence.
    Hn {
        algebra: PathBuf,
        /// Enumeration index, or a brick list such as "[U(2,1),U(1,2),U(1,1)]".
        #[arg(long)]
        mgs: String,
        /// Terms U(top,len), I[a,b], #id or a module name joined by "+".
        #[arg(long)]
        module: String,
    },
    /// Run a property suite: theoremA, theoremB, theoremC, lemmas or all.
    Verify {
        algebra: PathBuf,
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn run(cli: Cli) -> mgs_core::Result<commands::Output> {
    let field = if cli.exact { Field::Rational } else { Field::default() };
    let settings = Settings {
        gates: Gates { bricks: cli.brick_gate, subsets: cli.subset_gate },
        options: Options { field, parallel: cli.parallel },
    };
    let s = &settings;
    match cli.command {
        Command::Catalog { algebra } => commands::catalog(&algebra_file::load(&algebra)?, s),
        Command::Bricks { algebra } => commands::bricks(&algebra_file::load(&algebra)?, s),
        Command::Mgs { algebra } => commands::mgs(&algebra_file::load(&algebra)?, s),
        Command::Classes { algebra } => commands::classes(&algebra_file::load(&algebra)?, s),
        Command::Poset { algebra, order, format } => commands::poset(&algebra_file::load(&algebra)?, s, order, format),
        Command::Hn { algebra, mgs, module } => commands::hn(&algebra_file::load(&algebra)?, s, &mgs, &module),
        Command::Verify { algebra, suite } => commands::verify(&algebra_file::load(&algebra)?, s, &suite),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.text);
            if out.violation {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvariantViolation(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
