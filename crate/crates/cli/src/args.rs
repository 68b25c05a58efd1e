use clap::{Args, Parser, Subcommand, ValueEnum};
use sop_core::Budget;

#[derive(Parser, Debug)]
#[command(name = "sop", version, about = "Random systems of parameters on projective schemes over finite fields")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Emit a JSON report (the default).
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit a flat CSV table instead of JSON.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Master seed for every random draw.
    #[arg(long, global = true, env = "SOP_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Worker threads. Results do not depend on this.
    #[arg(long, global = true, default_value_t = default_workers())]
    pub workers: usize,
    /// Cap on enumerated points, planes and Monte Carlo cells.
    #[arg(long, global = true, default_value_t = Budget::default().max_points)]
    pub max_points: u64,
    /// Cap on exhaustive tuple, coefficient and unit-pattern enumerations.
    #[arg(long, global = true, default_value_t = Budget::default().max_enum)]
    pub max_enum: u64,
    /// Default trial cap for searches.
    #[arg(long, global = true, default_value_t = Budget::default().max_trials_search)]
    pub max_trials_search: u64,
}

impl GlobalOpts {
    pub fn budget(&self) -> Budget {
        Budget { max_points: self.max_points, max_enum: self.max_enum, max_trials_search: self.max_trials_search }
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, usize::from)
}

#[derive(Args, Debug, Clone)]
pub struct IdealArg {
    /// Path to an ideal file, or the name of a built-in one (see `sop ideals`).
    #[arg(long)]
    pub ideal: String,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct TupleShape {
    /// Degree of every form in the tuple.
    #[arg(long)]
    pub d: u32,
    /// The tuple is `(f_0, …, f_k)`.
    #[arg(long)]
    pub k: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Monte Carlo estimate of the probability that a random tuple is a system of parameters.
    Prob {
        #[command(flatten)]
        ideal: IdealArg,
        #[command(flatten)]
        shape: TupleShape,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
    },
    /// Exact probability by enumerating every tuple.
    ProbExact {
        #[command(flatten)]
        ideal: IdealArg,
        #[command(flatten)]
        shape: TupleShape,
    },
    /// Predicted probability from contained planes (k < n) or the truncated zeta function (k = n).
    Predict {
        #[command(flatten)]
        ideal: IdealArg,
        #[command(flatten)]
        shape: TupleShape,
        /// Largest union of planes (k < n) or closed-point degree (k = n) included.
        #[arg(long, default_value_t = 1)]
        e_lin: u32,
    },
    /// Inverse zeta function truncated to closed points of degree at most e.
    Zeta {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long)]
        s: u32,
        #[arg(long, default_value_t = 1)]
        e: usize,
    },
    /// Point counts over F_{q^ℓ} for ℓ = 1..=e and the closed-point tally.
    Points {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long, default_value_t = 1)]
        e: usize,
    },
    /// Census of m-planes contained in the scheme.
    Lines {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Include the planes themselves (reduced row echelon rows).
        #[arg(long)]
        list: bool,
    },
    /// Hilbert function values for degrees d..=to.
    Hilbert {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        to: Option<u32>,
    },
    /// Dimension, degree bound and reduced Gröbner basis.
    Dim {
        #[command(flatten)]
        ideal: IdealArg,
    },
    /// Whether a tuple of forms is a system of parameters.
    CheckParams {
        #[command(flatten)]
        ideal: IdealArg,
        /// Forms separated by `;`, in the ideal file's variables.
        #[arg(long)]
        tuple: String,
    },
    /// The lower bound 1 - deghat(1 + d + … + d^k) q^{-binom(n-k+d, n-k)} against a measurement.
    Bound {
        #[command(flatten)]
        ideal: IdealArg,
        #[command(flatten)]
        shape: TupleShape,
        /// Measure by exhaustive enumeration instead of Monte Carlo.
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = 10_000, conflicts_with = "exact")]
        trials: u64,
    },
    /// Effective Noether normalization: an equal-degree system of parameters.
    FindSop {
        #[command(flatten)]
        ideal: IdealArg,
        /// Trial cap for each of the two searches (default: --max-trials-search).
        #[arg(long)]
        max_trials: Option<u64>,
    },
    /// Arithmetic examples over Z, F_p[t] and F_q[s, t].
    Lattice {
        #[arg(long, value_enum)]
        preset: LatticePreset,
        #[arg(long, default_value_t = 120)]
        dmax: u32,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long, default_value_t = 3)]
        coeff_degree: u32,
    },
    /// The failure-rate tables for the cubic and quadric surface examples.
    PaperTables {
        #[arg(long, value_enum)]
        example: TableExample,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
    },
    /// List the built-in ideal files.
    Ideals,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticePreset {
    Deg60,
    #[value(name = "flatZZ", alias = "flat-zz")]
    FlatZz,
    #[value(name = "kt_two_points", alias = "kt")]
    KtTwoPoints,
    #[value(name = "st_counterexample", alias = "st")]
    StCounterexample,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableExample {
    /// Coordinate planes and quadric cones over F_2, F_3, F_5.
    #[value(name = "7.1", alias = "surfaces")]
    Surfaces,
    /// Cubic surfaces over F_4 with 27 lines and with none.
    #[value(name = "7.2", alias = "cubics")]
    Cubics,
}
