//! `orthoposet`: checks, relation tables, constructions, enumeration and the
//! eighteen-element certificates from the command line.
//!
//! Exit status: 0 success (every requested property holds, every
//! certificate step confirmed), 1 a requested property or certificate step
//! fails, 2 malformed input or usage, 3 a bound beyond the feasibility limit.

mod input;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orthoposet::constructs::{export_dot, horizontal_sum, serialize};
use orthoposet::enumerate::{
    enumerate, verify_minimality, verify_uniqueness_18, EnumJob, ExtensionOrder, Filter, DEFAULT_FEASIBILITY_LIMIT,
};
use orthoposet::Error;

use input::{read_input, virtual_input};
use render::{Format, Requirement};

const LIMIT_VAR: &str = "ORTHOPOSET_FEASIBILITY_LIMIT";

#[derive(Parser)]
#[command(name = "orthoposet", version, about = "Finite orthoposets: checks, tables, constructions, enumeration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Relation {
    Compat,
    Commutator,
    DiscriminatorSlice,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Max,
    Min,
}

impl From<Order> for ExtensionOrder {
    fn from(o: Order) -> Self {
        match o {
            Order::Max => ExtensionOrder::Max,
            Order::Min => ExtensionOrder::Min,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a structure; exit 1 unless every --require holds.
    Check {
        /// Poset document path, `-` for stdin, a fixture name, boolean:k or mo:k.
        input: String,
        #[arg(long = "require", value_enum)]
        require: Vec<Requirement>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print a pairwise relation table.
    Table {
        input: String,
        #[arg(long, value_enum)]
        relation: Relation,
        /// Third argument of the discriminator t(x, y, z), by label.
        #[arg(long)]
        z: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Horizontal sum of the inputs, as a poset document.
    Hsum {
        #[arg(required = true)]
        inputs: Vec<String>,
        #[arg(long, default_value = "hsum")]
        name: String,
    },
    /// A fixture (fig1, fig2, fig3, fig5, fig6, fig7_o6), boolean:k or mo:k, as a poset document.
    Gen { name: String },
    /// Hasse diagram in DOT.
    Dot { input: String },
    /// Count structures up to isomorphism.
    Enum {
        #[arg(long)]
        max_size: usize,
        /// omp, gom, boolean, lattice, non-lattice, orthogonal, orthoposet.
        #[arg(long = "filter")]
        filters: Vec<String>,
        /// Worker threads (0: one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "max")]
        order: Order,
        /// List canonical forms of the counted structures.
        #[arg(long)]
        representatives: bool,
        #[arg(long)]
        checkpoint: Option<std::path::PathBuf>,
        #[arg(long)]
        resume: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exhaustively confirm that small orthomodular posets are lattices.
    VerifyMin {
        #[arg(long)]
        exhaustive_to: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "max")]
        order: Order,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Replay the eighteen-element case analysis.
    #[command(name = "verify-unique18")]
    VerifyUnique18 {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn feasibility_limit() -> Result<usize, Error> {
    match std::env::var(LIMIT_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Invalid(format!("{LIMIT_VAR} must be a size, got {v:?}"))),
        Err(_) => Ok(DEFAULT_FEASIBILITY_LIMIT),
    }
}

/// Output to print and whether the command's claim held.
type Outcome = (String, bool);

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Check { input, require, format } => {
            let i = read_input(&input)?;
            Ok(render::check(&i.name, &i.structure, &require, format))
        }
        Command::Table { input, relation, z, format } => {
            let i = read_input(&input)?;
            let op = &i.structure;
            let out = match relation {
                Relation::Compat => render::compat_table(op, format),
                Relation::Commutator => render::commutator_table(op, format),
                Relation::DiscriminatorSlice => {
                    let label = z.ok_or_else(|| Error::Invalid("--relation discriminator-slice needs --z <label>".into()))?;
                    let z = op
                        .poset()
                        .index_of(&label)
                        .ok_or_else(|| Error::Invalid(format!("no element labelled {label:?}")))?;
                    render::discriminator_table(op, z, format)
                }
            };
            Ok((out, true))
        }
        Command::Hsum { inputs, name } => {
            let parts = inputs.iter().map(|s| read_input(s).map(|i| i.structure)).collect::<Result<Vec<_>, _>>()?;
            let h = horizontal_sum(&parts)?;
            Ok((serialize(&name, &h.result), true))
        }
        Command::Gen { name } => {
            let i = virtual_input(&name).ok_or_else(|| Error::UnknownFixture(name.clone()))??;
            Ok((serialize(&i.name, &i.structure), true))
        }
        Command::Dot { input } => {
            let i = read_input(&input)?;
            Ok((export_dot(&i.name, &i.structure), true))
        }
        Command::Enum { max_size, filters, jobs, order, representatives, checkpoint, resume, format } => {
            let mut job = EnumJob::new(max_size).jobs(jobs).order(order.into());
            for f in &filters {
                job = job.filter(f.parse::<Filter>()?);
            }
            job.keep_representatives = representatives;
            job.feasibility_limit = feasibility_limit()?;
            job.checkpoint = checkpoint;
            job.resume = resume;
            let result = enumerate(&job)?;
            Ok((render::enumeration(&job, &result, format), true))
        }
        Command::VerifyMin { exhaustive_to, jobs, order, format } => {
            let mut job = EnumJob::new(exhaustive_to).jobs(jobs).order(order.into());
            job.feasibility_limit = feasibility_limit()?;
            let result = verify_minimality(&job)?;
            let ok = result.confirmed();
            Ok((render::certificate("verify-min", &result, format), ok))
        }
        Command::VerifyUnique18 { format } => {
            let result = verify_uniqueness_18();
            let ok = result.confirmed();
            Ok((render::certificate("verify-unique18", &result, format), ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e @ Error::Feasibility { .. }) => {
            eprintln!("error: {e} (raise {LIMIT_VAR} to allow larger bounds)");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
