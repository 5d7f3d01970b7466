use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "nonrandom", version, about = "Class group statistics at non-random primes")]
pub struct Cli {
    /// key=value file supplying defaults for the chosen subcommand's options.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Write data here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads for scans (default: all cores).
    #[arg(long, global = true, value_name = "K")]
    pub jobs: Option<usize>,
    /// Progress messages on stderr; repeat for more detail.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order, non-random primes, Ω sets and β values of a permutation group.
    #[command(args_override_self = true)]
    Group(GroupArgs),
    /// 2-rank moment and probability scans over imaginary quadratic fields.
    #[command(args_override_self = true)]
    Quadratic(QuadraticArgs),
    /// Exact abelian field counts split by the number of tame primes meeting Ω.
    #[command(args_override_self = true)]
    Abelian(AbelianArgs),
    /// Predicted asymptotic shapes and least-squares fits.
    #[command(subcommand)]
    Asymptotic(AsymptoticCommand),
    /// Class group rank bounds from a ramification profile.
    #[command(args_override_self = true)]
    Bounds(BoundsArgs),
}

#[derive(Args, Debug)]
pub struct GroupArgs {
    /// Cm, C2xC4, Dn@Sn, Dn@reg, Sn, An, A4@S6.
    pub spec: String,
    /// Report only this prime.
    #[arg(long)]
    pub q: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanKind {
    /// Mean of 2^rk2.
    Moment,
    /// Share of fields with rk2 ≤ r.
    Probability,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Radical,
    Absdisc,
}

#[derive(Args, Debug)]
pub struct QuadraticArgs {
    #[arg(value_enum)]
    pub kind: ScanKind,
    /// Ascending bounds on the ordering key, e.g. 1e3,1e4,1e5.
    #[arg(long, required = true, value_delimiter = ',', value_parser = parse_count)]
    pub checkpoints: Vec<u64>,
    #[arg(long, default_value_t = 0)]
    pub r: u32,
    #[arg(long, value_enum, default_value_t = Order::Radical)]
    pub order: Order,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Semantics {
    /// The inertia group meets Ω.
    Meets,
    /// A generator of the inertia group lies in Ω.
    Generator,
}

#[derive(Args, Debug)]
pub struct AbelianArgs {
    /// Product of cyclic groups, e.g. C3 or C2xC4.
    pub spec: String,
    /// none, q (= q^inf), q^l or q^inf.
    #[arg(long, default_value = "none")]
    pub omega: String,
    /// Report only this r; all r up to --max-r otherwise.
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long, default_value_t = 3)]
    pub max_r: u32,
    #[arg(long, required = true, value_delimiter = ',', value_parser = parse_count)]
    pub checkpoints: Vec<u64>,
    /// Count pairs (K, ψ) (the default).
    #[arg(long, overrides_with = "fields")]
    pub pairs: bool,
    /// Count fields, i.e. pairs divided by |Aut(G)|.
    #[arg(long, overrides_with = "pairs")]
    pub fields: bool,
    #[arg(long, value_enum, default_value_t = Semantics::Meets)]
    pub semantics: Semantics,
    /// Raise the default bound on x.
    #[arg(long, value_parser = parse_count)]
    pub cap: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum AsymptoticCommand {
    /// Exponents of a counting theorem; with --checkpoints and --format csv, a synthetic table.
    #[command(args_override_self = true)]
    Predict(PredictArgs),
    /// Fit c·x(log x)^a(log log x)^b to a CSV table.
    #[command(args_override_self = true)]
    Fit(FitArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Abelian,
    DihedralUpper,
    DqUpper,
    D4Upper,
}

#[derive(Args, Debug)]
pub struct PredictArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Derive β values from this group and --omega.
    #[arg(long)]
    pub group: Option<String>,
    /// none, q, q^l or q^inf.
    #[arg(long, default_value = "none")]
    pub omega: String,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long)]
    pub beta_complement: Option<u64>,
    #[arg(long)]
    pub beta_f_complement: Option<u64>,
    #[arg(long)]
    pub beta_f: Option<u64>,
    #[arg(long)]
    pub beta_1: Option<u64>,
    /// Leading constant for the synthetic table.
    #[arg(long, default_value_t = 1.0)]
    pub constant: f64,
    #[arg(long, value_delimiter = ',', value_parser = parse_count)]
    pub checkpoints: Vec<u64>,
}

#[derive(Args, Debug)]
pub struct FitArgs {
    /// CSV with a header row.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = "x")]
    pub x_column: String,
    /// Defaults to the second column.
    #[arg(long)]
    pub y_column: Option<String>,
    /// Hold the log log x exponent fixed.
    #[arg(long, allow_hyphen_values = true)]
    pub loglog: Option<f64>,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    /// Ramification profile file.
    pub profile: PathBuf,
    #[arg(long)]
    pub q: u64,
    #[arg(long, default_value_t = 1)]
    pub l: u32,
    /// Also bound the relative class group for an extension of this degree.
    #[arg(long)]
    pub relative: Option<u64>,
    /// Also compute the D4 tallies (the profile must name group D4@S4).
    #[arg(long)]
    pub d4: bool,
    /// rk_K for the sharp bound; needs --vq-nq and --delta too.
    #[arg(long, requires_all = ["vq_nq", "delta"])]
    pub unit_rank: Option<u64>,
    #[arg(long, requires = "unit_rank")]
    pub vq_nq: Option<u64>,
    #[arg(long, requires = "unit_rank")]
    pub delta: Option<u64>,
}

/// Accepts `12345`, `1e5` and `10^5`.
pub fn parse_count(s: &str) -> Result<u64, String> {
    let s = s.trim();
    if let Ok(n) = s.parse() {
        return Ok(n);
    }
    let bad = || format!("`{s}` is not a nonnegative integer");
    let (mantissa, exp) = if let Some((m, e)) = s.split_once(['e', 'E']) {
        (m.parse::<u64>().map_err(|_| bad())?, e)
    } else if let Some(e) = s.strip_prefix("10^") {
        (1, e)
    } else {
        return Err(bad());
    };
    let exp: u32 = exp.parse().map_err(|_| bad())?;
    10u64
        .checked_pow(exp)
        .and_then(|p| p.checked_mul(mantissa))
        .ok_or_else(|| format!("`{s}` overflows"))
}
