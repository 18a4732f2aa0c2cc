//! `hcn` — instances, witnesses, and verification for heterochromatic
//! numbers of plane-spanning-tree and matroid-basis hypergraphs.
//!
//! Exit codes: 0 on success, 2 on validation errors, 3 when a run produces
//! a counterexample or refutes a supplied claim.

mod commands;
mod io;
mod report;
mod suites;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

/// Global options threaded through every subcommand.
pub struct Ctx {
    pub seed: u64,
    pub cap_nu: usize,
    pub json: bool,
    pub svg: Option<PathBuf>,
}

#[derive(Parser)]
#[command(
    name = "hcn",
    version,
    about = "Plane spanning trees, matroid bases, and their heterochromatic numbers"
)]
struct Cli {
    /// Seed feeding every randomised operation.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Largest hypergraph vertex count handed to the exact solvers.
    #[arg(long, global = true, default_value_t = hcn_core::hypergraph::DEFAULT_HC_CAP)]
    cap_nu: usize,

    /// Print one machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write an SVG figure of the instance or witness.
    #[arg(long, global = true, value_name = "PATH")]
    svg: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    /// Convex position: every plane tree keeps two hull edges.
    Lemma3,
    /// One interior point: every plane tree keeps two transversal edges.
    Lemma4,
    /// Complement trees exist exactly outside stars and geometric caterpillars.
    Urrutia,
    /// Convex rainbow tree search under maximal colour counts.
    Thm5,
    /// One-interior rainbow tree search under maximal colour counts.
    Thm6,
    /// Rainbow basis search over matroid colourings.
    Thm7,
    /// Complete-graph spanning-tree hypergraph values.
    JiangWest,
    /// Three-component cut number against the basis transversal number.
    GammaTau,
    /// General lower bound and solver cross-checks on random hypergraphs.
    Bound,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FindTarget {
    Tree,
    Basis,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum PointKind {
    Convex,
    OneInterior,
    General,
}

#[derive(Subcommand)]
enum Command {
    /// Report the structure of a points, hypergraph, or matroid file.
    Analyze {
        /// Input JSON file; its kind is detected from the fields present.
        input: PathBuf,
        /// Also write the associated hypergraph as JSON.
        #[arg(long, value_name = "PATH")]
        emit_hypergraph: Option<PathBuf>,
        /// Exhaustively audit the independence axioms (matroid inputs).
        #[arg(long)]
        check_axioms: bool,
    },
    /// Run one verification suite; exits 3 on a counterexample.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Instance size range, e.g. `4..7` (inclusive) or `5`.
        #[arg(long, value_name = "A..B")]
        n: Option<String>,
        /// Seeded instances or colourings per block.
        #[arg(long, default_value_t = 20)]
        trials: u64,
        /// Matroid selector: K<n>, U_<r>_<m>, or a matroid file path.
        #[arg(long)]
        matroid: Option<String>,
        /// Check every canonical colouring instead of sampling.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Search for a heterochromatic witness under a supplied colouring.
    Find {
        #[arg(value_enum)]
        target: FindTarget,
        /// Points file (tree target).
        #[arg(long, value_name = "PATH")]
        points: Option<PathBuf>,
        /// Colouring file assigning a colour to every edge or element.
        #[arg(long, value_name = "PATH")]
        colours: PathBuf,
        /// Matroid selector (basis target).
        #[arg(long)]
        matroid: Option<String>,
        /// Claimed basis transversal number; verified, exit 3 on mismatch.
        #[arg(long)]
        tau: Option<usize>,
    },
    /// Generate a seeded point set.
    Random {
        #[arg(long, value_enum, default_value = "convex")]
        kind: PointKind,
        #[arg(long)]
        n: usize,
        /// Output file (stdout when omitted).
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Test the transversal bound τ ≤ n + i(P) on one instance.
    ConjectureScan {
        input: PathBuf,
        /// Node budget for the transversal search.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
}

fn run(cli: &Cli) -> Result<bool> {
    let ctx = Ctx {
        seed: cli.seed,
        cap_nu: cli.cap_nu,
        json: cli.json,
        svg: cli.svg.clone(),
    };
    match &cli.command {
        Command::Analyze {
            input,
            emit_hypergraph,
            check_axioms,
        } => commands::cmd_analyze(&ctx, input, emit_hypergraph.as_deref(), *check_axioms),
        Command::Verify {
            suite,
            n,
            trials,
            matroid,
            exhaustive,
        } => {
            let params = suites::SuiteParams {
                seed: ctx.seed,
                cap_nu: ctx.cap_nu,
                n: n.as_deref().map(io::parse_range).transpose()?,
                trials: *trials,
                matroid: matroid.clone(),
                exhaustive: *exhaustive,
            };
            let report = suites::run_suite(*suite, &params)?;
            if ctx.json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", report.render_text());
            }
            Ok(report.counterexample.is_none())
        }
        Command::Find {
            target: FindTarget::Tree,
            points,
            colours,
            ..
        } => {
            let points = points.as_ref().context("find tree needs --points")?;
            commands::cmd_find_tree(&ctx, points, colours)
        }
        Command::Find {
            target: FindTarget::Basis,
            matroid,
            colours,
            tau,
            ..
        } => {
            let selector = matroid.as_ref().context("find basis needs --matroid")?;
            commands::cmd_find_basis(&ctx, selector, colours, *tau)
        }
        Command::Random { kind, n, output } => {
            commands::cmd_random(&ctx, *kind, *n, output.as_deref())
        }
        Command::ConjectureScan { input, budget } => {
            commands::cmd_conjecture_scan(&ctx, input, *budget)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
