use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const PRECISION_ENV: &str = "NESTRAD_PRECISION";

#[derive(Debug, Parser)]
#[command(name = "nestrad", version, about = "Exact verification and search for nested radical identities")]
pub struct Cli {
    /// Emit one JSON object per result instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Working precision in bits for numeric evaluation.
    #[arg(long, global = true, env = PRECISION_ENV, default_value_t = nestrad::numeric::DEFAULT_PRECISION)]
    pub precision: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check `lhs = rhs` exactly.
    Verify { lhs: String, rhs: String },
    /// Verify every entry of a JSON Lines corpus against its expectation.
    Corpus {
        path: PathBuf,
        /// Worker threads; 0 picks the number of cores.
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Print `expr^n` on the canonical basis.
    Pow { expr: String, n: i64 },
    /// Powers of `expr` with few terms.
    SearchPow {
        expr: String,
        #[arg(long, default_value_t = 2)]
        min: u32,
        #[arg(long, default_value_t = 30)]
        max: u32,
        #[arg(long, default_value_t = 2)]
        max_terms: usize,
    },
    /// Coefficient template search.
    SearchCoeff(CoeffArgs),
    /// Quotient-form identities `root(n, (x + y r)/(x - y r)) = (z + w r)/(z - w r)`, `r = b^(1/m)`.
    SearchQuotient {
        n: u32,
        m: u32,
        #[arg(long, default_value_t = 10)]
        b_max: u64,
        #[arg(long, default_value_t = 5)]
        c_max: u64,
        /// Accept forms that hold only after negating the right side (even n).
        #[arg(long)]
        fold_signs: bool,
    },
    /// Solutions of `b w^4 = 5 z^4` with coprime `z, w`.
    Dioph {
        #[arg(long, default_value_t = 500)]
        b_max: u64,
        #[arg(long, default_value_t = 50)]
        c_max: u64,
        #[arg(long)]
        no_fourth_power_free: bool,
    },
    /// Geometric-series family members.
    Geom {
        family: Family,
        /// Family index (ignored for `limit`).
        #[arg(default_value_t = 1)]
        m: u32,
    },
    /// Bounded search for `s` with `s^n = expr`.
    Denest(DenestArgs),
    /// Certified decimal enclosure.
    Eval { expr: String },
    /// LaTeX rendering of the canonical form.
    Latex { expr: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Asc,
    Desc,
    Limit,
}

#[derive(Debug, Args)]
pub struct CoeffArgs {
    /// Template terms `expr` (coefficient pinned to 1) or `name:expr` (free).
    #[arg(required = true)]
    pub terms: Vec<String>,
    #[arg(long, default_value_t = 2)]
    pub power: u32,
    /// Monomial whose coefficient must vanish in the power; repeatable.
    #[arg(long)]
    pub vanish: Vec<String>,
    /// Coefficient domain: `int:R`, `frac:P/Q` or `grid:P,Q`.
    #[arg(long, default_value = "int:10")]
    pub domain: String,
}

#[derive(Debug, Args)]
pub struct DenestArgs {
    pub expr: String,
    pub n: u32,
    #[arg(long, default_value_t = 3)]
    pub support: usize,
    /// Coefficient domain: `int:R`, `frac:P/Q` or `grid:P,Q`.
    #[arg(long, default_value = "frac:3/3")]
    pub domain: String,
    /// Extra field component `p:deg`; repeatable.
    #[arg(long = "prime")]
    pub primes: Vec<String>,
    #[arg(long)]
    pub no_prefilter: bool,
    #[arg(long, default_value_t = nestrad::discovery::DEFAULT_CANDIDATE_CEILING)]
    pub ceiling: u64,
}
