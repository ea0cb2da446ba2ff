//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure or numerical error,
//! 2 usage error, 3 dimension budget exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::budget;
use crate::diagram::{jm_sum_brauer, jm_sum_sym};
use crate::extendibility::closed_form::{bipartite_value, LN_2};
use crate::extendibility::dual::{dual_scan, isotropic_dual_minimax, iso_dual_numeric, iso_hamiltonian_parts, q0_dual_value};
use crate::extendibility::oracle::{cycle_werner_value, p_avg_numeric, Which};
use crate::extendibility::states::werner_primal_certificate;
use crate::extendibility::{brauer_is_separable, is_positive_brauer_prime, BrauerParams, Method, StateFamily};
use crate::graphs::{edge_average_hamiltonian, perfect_matchings, Graph};
use crate::operator::{to_f64, SiteOperator};
use crate::spectral::{joint_spectrum, sym_eigen};
use crate::verify::{closed_form, parse_rational, run_suite, Suite, Tolerances};
use crate::{Error, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "monogamy", version, about = "Exact graph-extendibility values and their numerical cross-checks")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Cap on d^n for operators built in memory (overrides MONOGAMY_BUDGET).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Absolute tolerance for floating-point comparisons.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Werner,
    Brauer,
    Isotropic,
    IsotropicPrime,
}

impl From<FamilyArg> for StateFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Werner => StateFamily::Werner,
            FamilyArg::Brauer => StateFamily::Brauer,
            FamilyArg::Isotropic => StateFamily::Isotropic,
            FamilyArg::IsotropicPrime => StateFamily::IsotropicPrime,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    ClosedForm,
    MinimaxDual,
    NumericOracle,
    PrimalCertificate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphArg {
    Complete,
    Star,
    Cycle,
    Path,
    CompleteBipartite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OperatorArg {
    /// Σ F_ij over all pairs.
    Js,
    /// Σ (F_ij − W_ij) over all pairs.
    Jb,
    /// Common eigenvalues of J_S and J_B.
    Joint,
    /// Edge-averaged Π_(1,1) Hamiltonian on the chosen graph.
    Werner,
    /// Edge-averaged W/d Hamiltonian on the chosen graph.
    Brauer,
    /// Isotropic dual Hamiltonian H(x) on K_n.
    IsoDual,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one optimal value.
    Value(ValueArgs),
    /// Print the 2..max grid of closed-form values (rows d, columns n).
    Table(TableArgs),
    /// Cross-check closed forms against exact duals and numerical oracles.
    Verify(VerifyArgs),
    /// Print eigenvalues with multiplicities.
    Spectrum(SpectrumArgs),
    /// List or count perfect matchings.
    Matchings(MatchingsArgs),
    /// Classify a Brauer state: validity, positivity, separability, PPT.
    PptRegion(PptArgs),
    /// Sample the isotropic dual objective on an interval.
    DualScan(DualScanArgs),
    /// Werner values on even cycles at d = 2.
    Cycle(CycleArgs),
}

#[derive(Debug, Args)]
pub struct ValueArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    /// Second part size: the value on K_{n,m} (isotropic and Brauer only).
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, value_enum, default_value_t = MethodArg::ClosedForm)]
    pub method: MethodArg,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long, default_value_t = 9)]
    pub max: usize,
    #[arg(long, default_value_t = 2)]
    pub min: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run every suite (the default when no suite is named).
    #[arg(long)]
    pub all: bool,
    #[arg(long, value_enum)]
    pub suite: Vec<Suite>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long, value_enum)]
    pub operator: OperatorArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    #[arg(long, value_enum, default_value_t = GraphArg::Complete)]
    pub graph: GraphArg,
    #[arg(long)]
    pub m: Option<usize>,
    /// Dual variable for `iso-dual`, as a rational or decimal.
    #[arg(long, default_value = "0")]
    pub x: String,
}

#[derive(Debug, Args)]
pub struct MatchingsArgs {
    /// Use the complete graph on this many vertices.
    #[arg(long, conflicts_with = "graph")]
    pub complete: Option<usize>,
    /// Read a graph from JSON: {"n": .., "edges": [[u, v], ..], "family": ..}.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Only print the number of matchings.
    #[arg(long)]
    pub count: bool,
}

#[derive(Debug, Args)]
pub struct PptArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub p: String,
    #[arg(long, allow_hyphen_values = true)]
    pub q: String,
    #[arg(long)]
    pub d: usize,
    /// Read the pair as (p′, q′) in the W, F, I parametrization.
    #[arg(long)]
    pub prime: bool,
}

#[derive(Debug, Args)]
pub struct DualScanArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    #[arg(long, default_value = "-1/2", allow_hyphen_values = true)]
    pub lo: String,
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    pub hi: String,
    #[arg(long, default_value_t = 101)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct CycleArgs {
    /// Largest even cycle length.
    #[arg(long, default_value_t = 10)]
    pub max: usize,
    /// A single cycle length instead of the range 4..=max.
    #[arg(long)]
    pub n: Option<usize>,
}

/// Parses `argv` (including the program name), runs, and returns the exit
/// code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], writing to the given streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    if let Some(b) = cli.budget {
        budget::set_budget(Some(b));
    }
    let result = dispatch(&cli, out);
    if cli.budget.is_some() {
        budget::set_budget(None);
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Maps a library error to an exit code.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::NoConvergence(_) | Error::NotCommuting | Error::NotSymmetric | Error::Unbounded => EXIT_FAILURE,
        _ => EXIT_USAGE,
    }
}

type CmdResult = std::result::Result<i32, Error>;

fn io(e: std::io::Error) -> Error {
    Error::Parse(format!("output error: {e}"))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::Value(a) => value_cmd(a, cli.format, out),
        Command::Table(a) => table_cmd(a, cli.format, out),
        Command::Verify(a) => verify_cmd(a, cli, out),
        Command::Spectrum(a) => spectrum_cmd(a, cli.format, out),
        Command::Matchings(a) => matchings_cmd(a, cli.format, out),
        Command::PptRegion(a) => ppt_cmd(a, cli.format, out),
        Command::DualScan(a) => dual_scan_cmd(a, cli.format, out),
        Command::Cycle(a) => cycle_cmd(a, cli.format, out),
    }
}

/// `{"num": .., "den": ..}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct RationalJson {
    pub num: i128,
    pub den: i128,
}

impl From<Rational> for RationalJson {
    fn from(r: Rational) -> Self {
        RationalJson { num: *r.numer(), den: *r.denom() }
    }
}

impl From<RationalJson> for Rational {
    fn from(r: RationalJson) -> Self {
        Rational::new(r.num, r.den)
    }
}

/// One value record as emitted in JSON.
#[derive(Clone, Debug, PartialEq, Serialize, serde::Deserialize)]
pub struct ValueRecord {
    pub family: StateFamily,
    pub n: usize,
    pub d: usize,
    pub value: Option<RationalJson>,
    pub method: Method,
    pub graph: String,
    pub decimal: f64,
}

/// `num/den`, including `1/1` for integers.
pub fn fraction(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn value_cmd(a: &ValueArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let family: StateFamily = a.family.into();
    let graph = match a.m {
        Some(m) => format!("K_{{{},{}}}", a.n, m),
        None => format!("K_{}", a.n),
    };
    let (exact, decimal, method): (Option<Rational>, f64, Method) = match (a.m, a.method) {
        (Some(m), MethodArg::ClosedForm) => {
            if !matches!(family, StateFamily::Isotropic | StateFamily::Brauer) {
                return Err(Error::InvalidParameters("K_{n,m} values are available for isotropic and brauer".into()));
            }
            let v = bipartite_value(a.n, m, a.d)?.value;
            (Some(v), to_f64(v), Method::ClosedForm)
        }
        (Some(m), MethodArg::NumericOracle) if family == StateFamily::Brauer => {
            let v = p_avg_numeric(&Graph::complete_bipartite(a.n, m)?, Which::Brauer, a.d)?;
            (None, v, Method::NumericOracle)
        }
        (Some(_), _) => {
            return Err(Error::InvalidParameters(
                "on K_{n,m} use the closed form, or the numeric oracle for brauer".into(),
            ))
        }
        (None, MethodArg::ClosedForm) => {
            let v = crate::extendibility::value(family, a.n, a.d)?.value;
            (Some(v), to_f64(v), Method::ClosedForm)
        }
        (None, MethodArg::MinimaxDual) => {
            let v = match family {
                StateFamily::IsotropicPrime => isotropic_dual_minimax(a.n, a.d)?,
                StateFamily::Isotropic => {
                    crate::extendibility::closed_form::iso_from_prime(isotropic_dual_minimax(a.n, a.d)?, a.d)
                }
                StateFamily::Brauer => q0_dual_value(a.n, a.d)?,
                StateFamily::Werner => {
                    return Err(Error::InvalidParameters(
                        "no minimax dual for werner; use primal-certificate or numeric-oracle".into(),
                    ))
                }
            };
            (Some(v), to_f64(v), Method::MinimaxDual)
        }
        (None, MethodArg::NumericOracle) => {
            let g = Graph::complete(a.n)?;
            let v = match family {
                StateFamily::Werner => p_avg_numeric(&g, Which::Werner, a.d)?,
                StateFamily::Brauer => p_avg_numeric(&g, Which::Brauer, a.d)?,
                StateFamily::IsotropicPrime => iso_dual_numeric(a.n, a.d)?,
                StateFamily::Isotropic => {
                    let inv = 1.0 / (a.d * a.d) as f64;
                    inv + (1.0 - inv) * iso_dual_numeric(a.n, a.d)?
                }
            };
            (None, v, Method::NumericOracle)
        }
        (None, MethodArg::PrimalCertificate) => {
            if family != StateFamily::Werner {
                return Err(Error::InvalidParameters("primal certificates are built for werner only".into()));
            }
            let v = werner_primal_certificate(a.n, a.d)?.1;
            (Some(v), to_f64(v), Method::PrimalCertificate)
        }
    };
    let rec = ValueRecord {
        family,
        n: a.n,
        d: a.d,
        value: exact.map(Into::into),
        method,
        graph,
        decimal,
    };
    match format {
        Format::Text => match exact {
            Some(v) => writeln!(out, "{} ≈ {:.12}", fraction(v), decimal),
            None => writeln!(out, "{decimal:.12}"),
        },
        Format::Csv => {
            writeln!(out, "family,graph,n,d,value,decimal,method").and_then(|_| {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    rec.family,
                    rec.graph,
                    rec.n,
                    rec.d,
                    exact.map(fraction).unwrap_or_default(),
                    decimal,
                    rec.method
                )
            })
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string(&rec).expect("serializable")),
    }
    .map_err(io)?;
    Ok(EXIT_OK)
}

fn table_cmd(a: &TableArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    if a.min < 2 || a.max < a.min {
        return Err(Error::InvalidParameters(format!("need 2 ≤ min ≤ max, got {}..{}", a.min, a.max)));
    }
    let family: StateFamily = a.family.into();
    let range: Vec<usize> = (a.min..=a.max).collect();
    let grid: Vec<Vec<Rational>> =
        range.iter().map(|&d| range.iter().map(|&n| closed_form(family, n, d)).collect()).collect();
    match format {
        Format::Text => {
            let cells: Vec<Vec<String>> =
                grid.iter().map(|row| row.iter().map(|v| v.to_string()).collect()).collect();
            let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1).max(3);
            writeln!(out, "{} (rows d, columns n)", family.symbol()).map_err(io)?;
            let header: Vec<String> = range.iter().map(|n| format!("{n:>width$}")).collect();
            writeln!(out, "d\\n {}", header.join(" ")).map_err(io)?;
            for (d, row) in range.iter().zip(&cells) {
                let body: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                writeln!(out, "{d:>3} {}", body.join(" ")).map_err(io)?;
            }
        }
        Format::Csv => {
            writeln!(out, "family,d,n,value,decimal").map_err(io)?;
            for (d, row) in range.iter().zip(&grid) {
                for (n, v) in range.iter().zip(row) {
                    writeln!(out, "{family},{d},{n},{},{}", fraction(*v), to_f64(*v)).map_err(io)?;
                }
            }
        }
        Format::Json => {
            let recs: Vec<ValueRecord> = range
                .iter()
                .zip(&grid)
                .flat_map(|(&d, row)| {
                    range.iter().zip(row).map(move |(&n, &v)| ValueRecord {
                        family,
                        n,
                        d,
                        value: Some(v.into()),
                        method: Method::ClosedForm,
                        graph: format!("K_{n}"),
                        decimal: to_f64(v),
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string(&recs).expect("serializable")).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn verify_cmd(a: &VerifyArgs, cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let suites: Vec<Suite> = if a.all || a.suite.is_empty() { Suite::ALL.to_vec() } else { a.suite.clone() };
    let mut tol = Tolerances::default();
    if let Some(t) = cli.tolerance {
        tol.oracle = t;
        tol.golden_section = t.max(tol.golden_section);
    }
    let mut failed = 0usize;
    let mut records = Vec::new();
    for suite in suites {
        let start = Instant::now();
        let checks = run_suite(suite, tol)?;
        let secs = start.elapsed().as_secs_f64();
        for c in checks {
            if !c.passed {
                failed += 1;
            }
            match cli.format {
                Format::Text => writeln!(out, "{c} ({secs:.2}s)").map_err(io)?,
                Format::Csv => {
                    if records.is_empty() {
                        writeln!(out, "suite,check,passed,detail").map_err(io)?;
                    }
                    writeln!(out, "{suite},\"{}\",{},\"{}\"", c.name, c.passed, c.detail.replace('"', "'")).map_err(io)?
                }
                Format::Json => {}
            }
            records.push(json!({"suite": suite.to_string(), "check": c.name, "passed": c.passed, "detail": c.detail}));
        }
    }
    match cli.format {
        Format::Json => writeln!(out, "{}", serde_json::Value::Array(records)).map_err(io)?,
        Format::Text => writeln!(
            out,
            "{}",
            if failed == 0 { "all checks passed".to_string() } else { format!("{failed} check(s) failed") }
        )
        .map_err(io)?,
        Format::Csv => {}
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILURE })
}

fn spectrum_graph(a: &SpectrumArgs) -> crate::Result<Graph> {
    match a.graph {
        GraphArg::Complete => Graph::complete(a.n),
        GraphArg::Star => Graph::star(a.n),
        GraphArg::Cycle => Graph::cycle(a.n),
        GraphArg::Path => Graph::path(a.n),
        GraphArg::CompleteBipartite => {
            let m = a.m.ok_or_else(|| Error::InvalidParameters("complete-bipartite needs --m".into()))?;
            Graph::complete_bipartite(a.n, m)
        }
    }
}

fn spectrum_cmd(a: &SpectrumArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let g = spectrum_graph(a)?;
    budget::check(g.vertex_count(), a.d)?;
    if a.operator == OperatorArg::Joint {
        let js = jm_sum_sym(a.n, a.d)?;
        let jb = jm_sum_brauer(a.n, a.d)?;
        let joint = joint_spectrum(&js, &jb)?;
        match format {
            Format::Text | Format::Csv => {
                writeln!(out, "js,jb,multiplicity").map_err(io)?;
                for &(x, y, m) in joint.pairs() {
                    writeln!(out, "{},{},{m}", clean(x), clean(y)).map_err(io)?;
                }
            }
            Format::Json => {
                let v: Vec<_> = joint.pairs().iter().map(|&(x, y, m)| json!({"js": clean(x), "jb": clean(y), "multiplicity": m})).collect();
                writeln!(out, "{}", serde_json::Value::Array(v)).map_err(io)?;
            }
        }
        return Ok(EXIT_OK);
    }
    let op: SiteOperator = match a.operator {
        OperatorArg::Js => jm_sum_sym(a.n, a.d)?,
        OperatorArg::Jb => jm_sum_brauer(a.n, a.d)?,
        OperatorArg::Werner => edge_average_hamiltonian(&g, &Which::Werner.projector(a.d)?)?,
        OperatorArg::Brauer => edge_average_hamiltonian(&g, &Which::Brauer.projector(a.d)?)?,
        OperatorArg::IsoDual => {
            let x = parse_rational(&a.x)?;
            let (h0, h1) = iso_hamiltonian_parts(a.n, a.d)?;
            &h0 + &h1.scaled(x)
        }
        OperatorArg::Joint => unreachable!("handled above"),
    };
    let spec = sym_eigen(&op)?;
    match format {
        Format::Text | Format::Csv => {
            writeln!(out, "eigenvalue,multiplicity").map_err(io)?;
            for &(v, m) in spec.clusters() {
                writeln!(out, "{},{m}", clean(v)).map_err(io)?;
            }
        }
        Format::Json => {
            let v: Vec<_> = spec.clusters().iter().map(|&(x, m)| json!({"eigenvalue": clean(x), "multiplicity": m})).collect();
            writeln!(out, "{}", serde_json::Value::Array(v)).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

/// Rounds away floating-point noise below the clustering tolerance.
fn clean(x: f64) -> f64 {
    let r = (x * 1e9).round() / 1e9;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn matchings_cmd(a: &MatchingsArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let g = match (&a.complete, &a.graph) {
        (Some(n), None) => Graph::complete(*n)?,
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            Graph::from_json(&text)?
        }
        _ => return Err(Error::InvalidParameters("give exactly one of --complete or --graph".into())),
    };
    let ms = perfect_matchings(&g);
    if a.count {
        match format {
            Format::Json => writeln!(out, "{}", json!({"graph": g.to_string(), "count": ms.len()})),
            _ => writeln!(out, "{}", ms.len()),
        }
        .map_err(io)?;
        return Ok(EXIT_OK);
    }
    match format {
        Format::Text => {
            for m in &ms {
                writeln!(out, "{m}").map_err(io)?;
            }
        }
        Format::Csv => {
            writeln!(out, "index,edges").map_err(io)?;
            for (i, m) in ms.iter().enumerate() {
                writeln!(out, "{i},{m}").map_err(io)?;
            }
        }
        Format::Json => {
            let v: Vec<_> = ms.iter().map(|m| m.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>()).collect();
            writeln!(out, "{}", json!({"graph": g.to_string(), "count": ms.len(), "matchings": v})).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn ppt_cmd(a: &PptArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let (x, y) = (parse_rational(&a.p)?, parse_rational(&a.q)?);
    let params = if a.prime { BrauerParams::from_prime(x, y, a.d)? } else { BrauerParams::from_projector(x, y, a.d)? };
    let valid = params.is_valid_state();
    let positive = is_positive_brauer_prime(params.p_prime, params.q_prime, a.d);
    let ppt = is_positive_brauer_prime(params.q_prime, params.p_prime, a.d);
    let separable = if valid { Some(brauer_is_separable(params.p, params.q, a.d)?) } else { None };
    match format {
        Format::Text => {
            writeln!(out, "d = {}", a.d).map_err(io)?;
            writeln!(out, "(p, q)   = ({}, {})", params.p, params.q).map_err(io)?;
            writeln!(out, "(p', q') = ({}, {})", params.p_prime, params.q_prime).map_err(io)?;
            writeln!(out, "valid state: {valid}").map_err(io)?;
            writeln!(out, "positive: {positive}").map_err(io)?;
            writeln!(out, "PPT: {ppt}").map_err(io)?;
            match separable {
                Some(s) => writeln!(out, "separable: {s}"),
                None => writeln!(out, "separable: n/a (not a state)"),
            }
            .map_err(io)?;
        }
        Format::Csv => {
            writeln!(out, "d,p,q,p_prime,q_prime,valid,positive,ppt,separable").map_err(io)?;
            writeln!(
                out,
                "{},{},{},{},{},{valid},{positive},{ppt},{}",
                a.d,
                fraction(params.p),
                fraction(params.q),
                fraction(params.p_prime),
                fraction(params.q_prime),
                separable.map(|s| s.to_string()).unwrap_or_default()
            )
            .map_err(io)?;
        }
        Format::Json => {
            let v = json!({
                "d": a.d,
                "p": RationalJson::from(params.p),
                "q": RationalJson::from(params.q),
                "p_prime": RationalJson::from(params.p_prime),
                "q_prime": RationalJson::from(params.q_prime),
                "valid": valid,
                "positive": positive,
                "ppt": ppt,
                "separable": separable,
            });
            writeln!(out, "{v}").map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn dual_scan_cmd(a: &DualScanArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let (lo, hi) = (parse_rational(&a.lo)?, parse_rational(&a.hi)?);
    let pts = dual_scan(a.n, a.d, lo, hi, a.samples)?;
    match format {
        Format::Text | Format::Csv => {
            writeln!(out, "x,x_decimal,envelope,envelope_decimal,lambda_max").map_err(io)?;
            for p in &pts {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    fraction(p.x),
                    to_f64(p.x),
                    fraction(p.envelope),
                    to_f64(p.envelope),
                    p.numeric.map(|v| v.to_string()).unwrap_or_default()
                )
                .map_err(io)?;
            }
        }
        Format::Json => {
            let v: Vec<_> = pts
                .iter()
                .map(|p| {
                    json!({
                        "x": RationalJson::from(p.x),
                        "envelope": RationalJson::from(p.envelope),
                        "lambda_max": p.numeric,
                    })
                })
                .collect();
            writeln!(out, "{}", json!({"n": a.n, "d": a.d, "samples": v})).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn cycle_cmd(a: &CycleArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let ns: Vec<usize> = match a.n {
        Some(n) => vec![n],
        None => (4..=a.max).step_by(2).collect(),
    };
    let values: Vec<(usize, f64)> = ns.iter().map(|&n| cycle_werner_value(n).map(|v| (n, v))).collect::<crate::Result<_>>()?;
    match format {
        Format::Text => {
            for (n, v) in &values {
                writeln!(out, "C_{n}: {v:.12}").map_err(io)?;
            }
            writeln!(out, "ln 2: {LN_2:.12} (limit as n → ∞, not computed)").map_err(io)?;
        }
        Format::Csv => {
            writeln!(out, "n,value").map_err(io)?;
            for (n, v) in &values {
                writeln!(out, "{n},{v}").map_err(io)?;
            }
        }
        Format::Json => {
            let v: Vec<_> = values.iter().map(|(n, v)| json!({"n": n, "value": v})).collect();
            writeln!(out, "{}", json!({"d": 2, "values": v, "ln2": LN_2})).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}
