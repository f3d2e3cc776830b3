//! `tightkit`: command-line front end.
//!
//! Exit codes: 0 when the analysis completed (whatever the verdict), 2 for
//! invalid input or arguments, 3 when an enumeration cap refused the job.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tightkit::io::{self, fixtures};
use tightkit::{Error, FieldSpec, SimplicialComplex};

#[derive(Parser, Debug)]
#[command(
    name = "tightkit",
    version,
    about = "Exact verification of tightness, stackedness and related invariants of simplicial complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// f-vector, manifold flags, Betti numbers, integral homology, link profile.
    Analyze(InputArgs),
    /// Tightness report (brute force and/or 3-manifold criterion).
    Tight {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Connected-sum decomposition of a 2-sphere (or of a vertex link).
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        /// Decompose the link of this vertex instead of the complex itself.
        #[arg(long)]
        link: Option<u32>,
    },
    /// Sigma, sigma-star and mu vectors as exact rationals.
    Sigma {
        #[command(flatten)]
        input: InputArgs,
        /// Vertex cap for subset enumeration.
        #[arg(long, default_value_t = tightkit::tightness::DEFAULT_SIGMA_CAP)]
        cap: usize,
    },
    /// Feasibility arithmetic for tight 3-manifolds.
    Feasible(FeasibleArgs),
    /// List catalog fixtures or write one as a document.
    Fixtures {
        /// Fixture to emit; lists the catalog when absent.
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Complex document (JSON).
    path: Option<PathBuf>,
    /// Catalog fixture instead of a file, e.g. emch-p or stacked-sphere:12.
    #[arg(long, conflicts_with = "path")]
    fixture: Option<String>,
    /// Seed for randomized fixtures.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Coefficient field: q or z<p>. Repeatable; defaults to the primes in
    /// TIGHTKIT_PRIMES (2,3,5,7) plus q.
    #[arg(long = "field")]
    fields: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct FeasibleArgs {
    /// Check a single parameter pair (needs --beta1).
    #[arg(long, requires = "beta1")]
    n: Option<u64>,
    #[arg(long)]
    beta1: Option<u64>,
    /// Regenerate table 1, 2 or 3 (needs --nmax).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3), requires = "nmax")]
    table: Option<u8>,
    #[arg(long)]
    nmax: Option<u64>,
    /// Table 2 only: list every feasible beta1, not just the minimal one.
    #[arg(long)]
    verbose: bool,
    /// List stacked tight topologies with beta1 up to this bound.
    #[arg(long)]
    topology: Option<u64>,
    /// Evaluate the lower bound on beta_ell for n vertices (needs --ell).
    #[arg(long, requires = "ell")]
    spreer: Option<u64>,
    #[arg(long)]
    ell: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Criterion,
    /// Brute force within the cap, plus the criterion for closed 3-manifolds.
    Auto,
}

impl InputArgs {
    fn load(&self) -> Result<(String, SimplicialComplex), Error> {
        match (&self.path, &self.fixture) {
            (Some(p), _) => Ok((p.display().to_string(), io::load(p)?)),
            (None, Some(name)) => Ok((name.clone(), fixtures::load_fixture(name, self.seed)?)),
            (None, None) => Err(Error::InvalidParameter(
                "give a document path or --fixture".into(),
            )),
        }
    }

    fn fields(&self) -> Result<Vec<FieldSpec>, Error> {
        if self.fields.is_empty() {
            io::default_fields()
        } else {
            self.fields.iter().map(|f| f.parse()).collect()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(out) => {
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_cap_refusal() { 3 } else { 2 })
        }
    }
}
