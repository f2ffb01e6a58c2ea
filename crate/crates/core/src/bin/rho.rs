use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rho_core::error::{order, Error};
use rho_core::exact::{parse_rational, Rational};
use rho_core::harmonic::{c, harmonic};
use rho_core::numeric::{coffey_moment, coffey_moment_exact};
use rho_core::output::{check_line, summary_line, Format, TableRow, CSV_HEADER};
use rho_core::pochhammer::{pochhammer_deriv, recip_deriv};
use rho_core::series::{f_k_series, gf_order};
use rho_core::stirling::{gen_bernoulli, stirling_first, stirling_second};
use rho_core::verify::{run_all, run_suite, Suite, VerifyConfig};
use rho_core::Tables;

/// Exact Roman harmonic numbers and their companions.
///
/// Set RHO_CACHE_CAP to bound the number of entries per memo table.
#[derive(Parser)]
#[command(name = "rho", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print c_n^(k) for every n in [n-min, n-max] and k in [0, k-max].
    Table(TableArgs),
    /// Print a single exact value.
    Eval(EvalArgs),
    /// Run identity checks and report the largest residual of each.
    Verify(VerifyArgs),
    /// Derivatives of the Pochhammer symbol (x)_n or of 1/(x)_n.
    Deriv(DerivArgs),
    /// Moments of the distribution 2(D-1) e^(-2t) (1-e^(-2t))^(D-2).
    Moment(MomentArgs),
    /// Coefficients of a generating series.
    Series(SeriesArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct TableArgs {
    #[arg(long)]
    n_min: i64,
    #[arg(long)]
    n_max: i64,
    #[arg(long)]
    k_max: i64,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    /// Roman harmonic number c_n^(k).
    C,
    /// Stirling number of the first kind s(n, k), any integer n.
    Stirling1,
    /// Stirling number of the second kind S(n, k).
    Stirling2,
    /// Generalized Bernoulli number B_k^(n).
    Bernoulli,
    /// Generalized harmonic number H_n^(k).
    Harmonic,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct EvalArgs {
    #[arg(value_enum)]
    object: Object,
    #[arg(short)]
    n: i64,
    #[arg(short)]
    k: i64,
}

#[derive(Args)]
struct VerifyArgs {
    /// defs, nested, generating, transforms, sumrules, pochhammer, numeric or all.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = VerifyConfig::default().n_max)]
    n_max: usize,
    #[arg(long, default_value_t = VerifyConfig::default().k_max)]
    k_max: usize,
    /// Tolerance requested from the quadratures.
    #[arg(long, default_value_t = VerifyConfig::default().tol)]
    tol: f64,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum DerivTarget {
    Pochhammer,
    Reciprocal,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct DerivArgs {
    #[arg(value_enum)]
    target: DerivTarget,
    #[arg(short)]
    n: i64,
    #[arg(short)]
    k: i64,
    /// Evaluation point, an integer or p/q.
    #[arg(long)]
    at: String,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct MomentArgs {
    /// The dimension D (at least 2).
    #[arg(short)]
    n: i64,
    /// The moment order p.
    #[arg(short)]
    k: i64,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    /// sum_k c_n^(k) z^k for the degree given by -n.
    Order,
    /// sum_n c_n^(k) z^n / (n!)^2 for the order given by -k.
    Fk,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct SeriesArgs {
    #[arg(value_enum)]
    kind: SeriesKind,
    #[arg(short, default_value_t = 1)]
    n: i64,
    #[arg(short, default_value_t = 1)]
    k: i64,
    /// Highest power printed.
    #[arg(long, default_value_t = 10)]
    terms: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
}

enum Failure {
    Domain(Error),
    Io(io::Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::Io(e)
    }
}

fn degree(n: i64, min: i64) -> Result<usize, Error> {
    if n < min {
        return Err(Error::DegreeTooSmall { min, got: n });
    }
    Ok(n as usize)
}

fn table(t: &Tables, a: &TableArgs, out: &mut impl Write) -> Result<(), Failure> {
    if a.n_min > a.n_max {
        return Err(Error::InvalidArgument(format!("empty degree range {}..={}", a.n_min, a.n_max)).into());
    }
    let k_max = order(a.k_max)?;
    let format = Format::from(a.format);
    if matches!(format, Format::Csv) {
        writeln!(out, "{CSV_HEADER}")?;
    }
    for n in a.n_min..=a.n_max {
        for k in 0..=k_max {
            let row = TableRow { n, k, value: c(t, n, k)? };
            writeln!(out, "{}", row.render(format))?;
        }
    }
    Ok(())
}

fn eval(t: &Tables, a: &EvalArgs) -> Result<Rational, Error> {
    let k = order(a.k)?;
    match a.object {
        Object::C => c(t, a.n, k),
        Object::Stirling1 => stirling_first(t, a.n, k),
        Object::Stirling2 => Ok(Rational::from_integer(stirling_second(t, degree(a.n, 0)?, k)?)),
        Object::Bernoulli => gen_bernoulli(t, degree(a.n, 1)?, k),
        Object::Harmonic => Ok(harmonic(degree(a.n, 0)?, k)),
    }
}

fn verify(t: &Tables, a: &VerifyArgs, out: &mut impl Write) -> Result<(), Failure> {
    if a.tol.is_nan() || a.tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {}", a.tol)).into());
    }
    let cfg = VerifyConfig { n_max: a.n_max, k_max: a.k_max, tol: a.tol };
    let reports = if a.suite == "all" { run_all(t, &cfg)? } else { run_suite(t, a.suite.parse::<Suite>()?, &cfg)? };
    let format = Format::from(a.format);
    for r in &reports {
        writeln!(out, "{}", check_line(r, format))?;
    }
    if matches!(format, Format::Csv) {
        writeln!(out, "{}", summary_line(&reports))?;
    }
    if reports.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn deriv(t: &Tables, a: &DerivArgs) -> Result<Rational, Error> {
    let n = degree(a.n, 1)?;
    let k = order(a.k)?;
    let x = parse_rational(&a.at)?;
    match a.target {
        DerivTarget::Pochhammer => pochhammer_deriv(t, n, k, &x),
        DerivTarget::Reciprocal => recip_deriv(n, k, &x),
    }
}

fn moment(t: &Tables, a: &MomentArgs, out: &mut impl Write) -> Result<(), Failure> {
    let d = degree(a.n, 2)?;
    let p = order(a.k)?;
    let r = coffey_moment(d, p, a.tol)?;
    let exact = coffey_moment_exact(t, d, p)?;
    writeln!(out, "value={} est_error={:e} evaluations={} exact={exact}", r.value, r.est_error, r.evaluations)?;
    Ok(())
}

fn series(t: &Tables, a: &SeriesArgs, out: &mut impl Write) -> Result<(), Failure> {
    let s = match a.kind {
        SeriesKind::Order => gf_order(degree(a.n, 1)?, a.terms)?,
        SeriesKind::Fk => f_k_series(t, order(a.k)?, a.terms)?,
    };
    let format = Format::from(a.format);
    if matches!(format, Format::Csv) {
        writeln!(out, "power,coefficient")?;
    }
    for (i, v) in s.coeffs().iter().enumerate() {
        match format {
            Format::Csv => writeln!(out, "{i},{v}")?,
            Format::Json => writeln!(out, "{}", serde_json::json!({ "power": i, "coefficient": v.to_string() }))?,
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let t = Tables::from_env()?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Table(a) => table(&t, a, &mut out),
        Command::Eval(a) => eval(&t, a).map_err(Failure::from).and_then(|v| Ok(writeln!(out, "{v}")?)),
        Command::Verify(a) => verify(&t, a, &mut out),
        Command::Deriv(a) => deriv(&t, a).map_err(Failure::from).and_then(|v| Ok(writeln!(out, "{v}")?)),
        Command::Moment(a) => moment(&t, a, &mut out),
        Command::Series(a) => series(&t, a, &mut out),
    };
    out.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Domain(e)) => {
            eprintln!("rho: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("rho: {e}");
            ExitCode::from(2)
        }
    }
}
