//! `kummer`: enumerate quotient singularity configurations, inspect the group
//! catalog, and run exact lattice computations on Gram matrix files.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kummer_core::kummer::{ConstraintSet, KummerModel, SolutionRecord};
use kummer_core::lattice::{
    compare_invariants, find_hyperbolic_summand, is_isometric_definite, make_standard, morrison_classify,
    short_vectors, transcendental_consistency, SurfaceKind, DEFAULT_SEARCH_BOUND,
};
use kummer_core::{read_gram_file, verify_proposition3, GroupName, IntegralLattice};

#[derive(Debug, Parser)]
#[command(name = "kummer", version, about = "Singularities of generalized Kummer quotients and integral lattice tools")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the admissible singularity configurations of A/G.
    Enumerate {
        #[arg(long)]
        group: String,
        /// `full`, `euler+rank`, `euler`, or any `+`-joined subset of euler/rank/lefschetz.
        #[arg(long, default_value = "full")]
        constraints: String,
    },
    /// Lattice operations on Gram matrix files.
    Lattice {
        #[command(subcommand)]
        action: LatticeAction,
    },
    /// Inspect a catalog group.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Enumerate every catalog group and compare with the expected singularity lists.
    VerifyPaper {
        /// Drop the fixed-point constraints (shows they are needed).
        #[arg(long, hide = true)]
        no_lefschetz: bool,
    },
}

#[derive(Debug, Subcommand)]
enum GroupAction {
    /// Order, conjugacy class sizes and stabilizer classes.
    Info { name: String },
}

#[derive(Debug, Args)]
struct BoundArg {
    /// Coordinate box for the bounded search.
    #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
    bound: u32,
}

#[derive(Debug, Subcommand)]
enum LatticeAction {
    /// Inertia (positive, negative, zero).
    Signature { file: PathBuf },
    /// Determinant of the Gram matrix and parity.
    Discriminant { file: PathBuf },
    /// Invariant factors of the discriminant group.
    DiscGroup { file: PathBuf },
    /// Multiply the form by n.
    Twist {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        file: PathBuf,
    },
    /// Orthogonal direct sum.
    Sum { first: PathBuf, second: PathBuf },
    /// Vectors with 0 < |v·v| <= bound, one per sign pair.
    Shortvec {
        #[arg(long)]
        bound: u64,
        file: PathBuf,
    },
    /// Isometry test for definite lattices.
    Isometric { first: PathBuf, second: PathBuf },
    /// Bounded search for a hyperbolic plane summand.
    Hyperbolic {
        #[command(flatten)]
        bound: BoundArg,
        file: PathBuf,
    },
    /// Shioda-Inose classification of a transcendental lattice.
    Morrison {
        #[command(flatten)]
        bound: BoundArg,
        file: PathBuf,
    },
    /// Check rank and signature against a surface and Picard number.
    Consistency {
        #[arg(long)]
        surface: SurfaceKind,
        #[arg(long)]
        rho: i64,
        file: PathBuf,
    },
    /// Print the Gram file of U, A_k, D_k or E_6..8.
    Standard { name: String },
}

/// Usage-level failure; exits with status 2.
#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

enum Outcome {
    Ok(String),
    /// Computation finished but did not match expectations; exits with status 1.
    Mismatch(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Mismatch(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, UsageError> {
    let fmt = cli.format;
    match &cli.command {
        Command::Enumerate { group, constraints } => {
            let name: GroupName = group.parse()?;
            let constraints: ConstraintSet = constraints.parse()?;
            let model = KummerModel::new(name)?;
            let solutions = model
                .enumerate_configurations_parallel(constraints)?
                .iter()
                .map(|c| SolutionRecord::new(&model, c))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Outcome::Ok(render::enumeration(fmt, name, constraints, &solutions)))
        }
        Command::Group { action: GroupAction::Info { name } } => {
            let name: GroupName = name.parse()?;
            let model = KummerModel::new(name)?;
            Ok(Outcome::Ok(render::group_info(fmt, name, &model)))
        }
        Command::VerifyPaper { no_lefschetz } => {
            let constraints = if *no_lefschetz { ConstraintSet::EULER_RANK } else { ConstraintSet::FULL };
            let report = verify_proposition3(constraints)?;
            let text = render::verification(fmt, &report);
            Ok(if report.passed() { Outcome::Ok(text) } else { Outcome::Mismatch(text) })
        }
        Command::Lattice { action } => lattice(fmt, action).map(Outcome::Ok),
    }
}

fn load(path: &PathBuf) -> Result<IntegralLattice, UsageError> {
    Ok(read_gram_file(path)?)
}

fn lattice(fmt: Format, action: &LatticeAction) -> Result<String, UsageError> {
    use serde_json::json;
    Ok(match action {
        LatticeAction::Signature { file } => {
            let inertia = load(file)?.inertia();
            render::either(fmt, format!("{inertia}\n"), json!({ "inertia": inertia }))
        }
        LatticeAction::Discriminant { file } => {
            let l = load(file)?;
            let disc = l.discriminant();
            let parity = if l.is_even() { "even" } else { "odd" };
            render::either(
                fmt,
                format!("discriminant {disc}\nparity {parity}\n"),
                json!({ "discriminant": render::big(&disc), "even": l.is_even() }),
            )
        }
        LatticeAction::DiscGroup { file } => {
            let factors = load(file)?.discriminant_group()?;
            let order: num_bigint::BigInt = factors.iter().product();
            let list: Vec<String> = factors.iter().map(|d| d.to_string()).collect();
            render::either(
                fmt,
                format!("({})\n", list.join(",")),
                json!({
                    "invariant_factors": factors.iter().map(render::big).collect::<Vec<_>>(),
                    "order": render::big(&order),
                }),
            )
        }
        LatticeAction::Twist { n, file } => render::lattice(fmt, &load(file)?.twist(*n)?),
        LatticeAction::Sum { first, second } => render::lattice(fmt, &load(first)?.direct_sum(&load(second)?)),
        LatticeAction::Shortvec { bound, file } => {
            let vectors = short_vectors(&load(file)?, *bound)?;
            render::short_vectors(fmt, &vectors)
        }
        LatticeAction::Isometric { first, second } => {
            let (a, b) = (load(first)?, load(second)?);
            match is_isometric_definite(&a, &b) {
                Ok(cert) => render::isometry(fmt, cert.as_ref()),
                Err(e @ kummer_core::LatticeError::NotDefinite(_)) => {
                    let cmp = compare_invariants(&a, &b);
                    return Err(UsageError(format!(
                        "{e}\ninvariants: rank {}, inertia {}, parity {}, discriminant group {} (inconclusive)",
                        agree(cmp.rank),
                        agree(cmp.inertia),
                        agree(cmp.parity),
                        agree(cmp.discriminant_group)
                    )));
                }
                Err(e) => return Err(e.into()),
            }
        }
        LatticeAction::Hyperbolic { bound, file } => {
            let l = load(file)?;
            let split = find_hyperbolic_summand(&l, bound.bound)?;
            render::hyperbolic(fmt, bound.bound, split.as_ref())
        }
        LatticeAction::Morrison { bound, file } => {
            let class = morrison_classify(&load(file)?, bound.bound)?;
            render::either(fmt, format!("{class}\n"), json!(class))
        }
        LatticeAction::Consistency { surface, rho, file } => {
            let ok = transcendental_consistency(&load(file)?, *surface, *rho)?;
            render::either(
                fmt,
                format!("{ok}\n"),
                json!({ "surface": surface, "rho": rho, "consistent": ok }),
            )
        }
        LatticeAction::Standard { name } => {
            let l = make_standard(name)?;
            match fmt {
                Format::Text => kummer_core::format_gram(&l),
                Format::Json => render::json_line(&json!(l)),
            }
        }
    })
}

fn agree(b: bool) -> &'static str {
    if b {
        "agree"
    } else {
        "differ"
    }
}
