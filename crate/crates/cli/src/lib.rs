//! Front end for `orbitdeg`. [`run`] takes the argument list and returns the
//! exit code with everything that would be printed, so the binary is a thin
//! wrapper and the whole surface is testable in-process.
//!
//! Exit codes: 0 success, 1 mathematical inconsistency, 2 input error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use orbit_core::exactpoly::format_factorization;
use orbit_core::flexlab::{f_sums, flex_profile, FlexError, FlexProfile, FlexSums, PlaneCurve};
use orbit_core::orbitformulas::{
    aut_lcm_bound, chow_identity_checks, simple_flex_predegree, table_rows, FormulaError,
    PredegreeReport,
};
use orbit_core::pgl2::{pgl2_oracle, pgl2_predegree, TupleConfig, TupleError};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "orbitdeg",
    version,
    about = "Flex profiles and PGL(3) orbit-closure degrees of smooth plane curves"
)]
pub struct Cli {
    /// Emit JSON (integers as decimal strings) instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the random coordinate changes used to locate flexes.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Flex profile and flex-order power sums of a smooth curve.
    Flexes(CurveInput),
    /// Predegree of the orbit closure, by every route.
    Predegree {
        #[command(flatten)]
        input: CurveInput,
        /// Order of the automorphism group; adds the orbit-closure degree.
        #[arg(long)]
        aut: Option<String>,
    },
    /// Degree of the orbit closure: predegree divided by the automorphism order.
    Degree {
        #[command(flatten)]
        input: CurveInput,
        #[arg(long)]
        aut: String,
    },
    /// Predegrees of curves with only simple flexes, with factorizations.
    Table {
        #[arg(long, default_value_t = 3)]
        from: u32,
        #[arg(long, default_value_t = 10)]
        to: u32,
    },
    /// Checks the intersection computation against the closed formulas.
    VerifyChow,
    /// Orbit-closure predegree of points on a line with multiplicities.
    Pgl2 {
        #[arg(long, value_delimiter = ',', required = true)]
        multiplicities: Vec<String>,
    },
    /// Bound for the l.c.m. of automorphism orders, degrees 3 to 10.
    Bound { d: u32 },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct CurveInput {
    /// Homogeneous ternary form in x, y, z, e.g. "x^3*y + y^3*z + z^3*x".
    curve: Option<String>,
    /// Read the form from a file instead.
    #[arg(long)]
    file: Option<PathBuf>,
}

/// What one invocation prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Math(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Math(_) => 1,
            CliError::Input(_) => 2,
        }
    }
}

impl From<FlexError> for CliError {
    fn from(e: FlexError) -> Self {
        match e {
            FlexError::GenericityFailure { .. } | FlexError::Poly(_) => {
                CliError::Math(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<FormulaError> for CliError {
    fn from(e: FormulaError) -> Self {
        match e {
            FormulaError::NonDivisible { .. } | FormulaError::RouteDisagreement(_) => {
                CliError::Math(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<TupleError> for CliError {
    fn from(e: TupleError) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Serialize, Debug)]
#[serde(tag = "command", rename_all = "kebab-case")]
enum Report {
    Flexes(FlexesOut),
    Predegree(PredegreeOut),
    Degree(PredegreeOut),
    Table {
        rows: Vec<TableOut>,
    },
    VerifyChow {
        checks: Vec<CheckOut>,
        all_passed: bool,
    },
    Pgl2(Pgl2Out),
    Bound(BoundOut),
}

#[derive(Serialize, Debug)]
struct SumsOut {
    f2: String,
    f3: String,
    f4: String,
    f5: String,
}

impl From<&FlexSums> for SumsOut {
    fn from(s: &FlexSums) -> Self {
        SumsOut {
            f2: s.f2.to_string(),
            f3: s.f3.to_string(),
            f4: s.f4.to_string(),
            f5: s.f5.to_string(),
        }
    }
}

#[derive(Serialize, Debug)]
struct FlexesOut {
    curve: String,
    curve_degree: u32,
    seed: String,
    /// Flex order to number of flexes of that order.
    profile: BTreeMap<String, String>,
    flexes: String,
    weighted_total: String,
    sums: SumsOut,
}

#[derive(Serialize, Debug)]
struct RoutesOut {
    blow_up_sum: String,
    closed_form: String,
    power_sums: String,
    chow: String,
}

#[derive(Serialize, Debug)]
struct CorrectionsOut {
    leading: String,
    first_center: String,
    second_center: String,
    flex_centers: String,
}

#[derive(Serialize, Debug)]
struct PredegreeOut {
    curve: String,
    curve_degree: u32,
    seed: String,
    profile: BTreeMap<String, String>,
    sums: SumsOut,
    corrections: CorrectionsOut,
    routes: RoutesOut,
    predegree: String,
    factorization: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    aut_order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbit_degree: Option<String>,
}

#[derive(Serialize, Debug)]
struct TableOut {
    d: u32,
    predegree: String,
    factorization: String,
}

#[derive(Serialize, Debug)]
struct CheckOut {
    name: String,
    status: &'static str,
    statement: String,
}

#[derive(Serialize, Debug)]
struct Pgl2Out {
    multiplicities: Vec<String>,
    d: String,
    formula: String,
    oracle: String,
    agree: bool,
}

#[derive(Serialize, Debug)]
struct BoundOut {
    d: u32,
    predegree: String,
    factorization: String,
    bound: String,
}

fn profile_map(p: &FlexProfile) -> BTreeMap<String, String> {
    // JSON keys are strings; the text renderer re-sorts them numerically
    p.counts()
        .iter()
        .map(|(r, c)| (r.to_string(), c.to_string()))
        .collect()
}

fn parse_aut(s: &str) -> Result<BigInt, CliError> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| CliError::Input(format!("--aut must be a positive integer, got {s:?}")))
}

fn read_curve(input: &CurveInput) -> Result<PlaneCurve, CliError> {
    let src = match (&input.curve, &input.file) {
        (Some(c), _) => c.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => return Err(CliError::Input("no curve given".into())),
    };
    Ok(PlaneCurve::parse(src.trim())?)
}

fn predegree_out(
    input: &CurveInput,
    aut: Option<&str>,
    seed: u64,
) -> Result<PredegreeOut, CliError> {
    let aut = aut.map(parse_aut).transpose()?;
    let curve = read_curve(input)?;
    let profile = flex_profile(&curve, seed)?;
    let report = PredegreeReport::new(&profile, aut)?;
    Ok(PredegreeOut {
        curve: curve.form().to_string(),
        curve_degree: curve.degree(),
        seed: seed.to_string(),
        profile: profile_map(&profile),
        sums: (&report.sums).into(),
        corrections: CorrectionsOut {
            leading: report.corrections.leading.to_string(),
            first_center: report.corrections.first_center.to_string(),
            second_center: report.corrections.second_center.to_string(),
            flex_centers: report.corrections.flex_centers.to_string(),
        },
        routes: RoutesOut {
            blow_up_sum: report.blow_up_sum.to_string(),
            closed_form: report.closed_form.to_string(),
            power_sums: report.power_sums.to_string(),
            chow: report.chow.to_string(),
        },
        predegree: report.predegree.to_string(),
        factorization: report.factorization_string(),
        aut_order: report.aut_order.as_ref().map(BigInt::to_string),
        orbit_degree: report.degree.as_ref().map(BigInt::to_string),
    })
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    let seed = cli.seed;
    Ok(match &cli.command {
        Command::Flexes(input) => {
            let curve = read_curve(input)?;
            let profile = flex_profile(&curve, seed)?;
            let weighted: u128 = profile
                .counts()
                .iter()
                .map(|(&r, &c)| r as u128 * c as u128)
                .sum();
            Report::Flexes(FlexesOut {
                curve: curve.form().to_string(),
                curve_degree: curve.degree(),
                seed: seed.to_string(),
                profile: profile_map(&profile),
                flexes: profile.num_flexes().to_string(),
                weighted_total: weighted.to_string(),
                sums: (&f_sums(&profile)).into(),
            })
        }
        Command::Predegree { input, aut } => {
            Report::Predegree(predegree_out(input, aut.as_deref(), seed)?)
        }
        Command::Degree { input, aut } => Report::Degree(predegree_out(input, Some(aut), seed)?),
        Command::Table { from, to } => Report::Table {
            rows: table_rows(*from, *to)?
                .into_iter()
                .map(|r| TableOut {
                    d: r.d,
                    factorization: r.factorization_string(),
                    predegree: r.predegree.to_string(),
                })
                .collect(),
        },
        Command::VerifyChow => {
            let checks: Vec<CheckOut> = chow_identity_checks()
                .into_iter()
                .map(|c| CheckOut {
                    name: c.name.to_string(),
                    status: if c.holds { "PASS" } else { "FAIL" },
                    statement: c.statement,
                })
                .collect();
            let all_passed = checks.iter().all(|c| c.status == "PASS");
            Report::VerifyChow { checks, all_passed }
        }
        Command::Pgl2 { multiplicities } => {
            let ms = multiplicities
                .iter()
                .map(|m| {
                    m.trim().parse::<u64>().map_err(|_| {
                        CliError::Input(format!("multiplicity {m:?} is not a non-negative integer"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let cfg = TupleConfig::new(ms)?;
            let (formula, oracle) = (pgl2_predegree(&cfg), pgl2_oracle(&cfg));
            Report::Pgl2(Pgl2Out {
                multiplicities: cfg.multiplicities().iter().map(u64::to_string).collect(),
                d: cfg.degree().to_string(),
                agree: formula == oracle,
                formula: formula.to_string(),
                oracle: oracle.to_string(),
            })
        }
        Command::Bound { d } => {
            let bound = aut_lcm_bound(*d)?;
            let row = &table_rows(*d, *d)?[0];
            Report::Bound(BoundOut {
                d: *d,
                predegree: simple_flex_predegree(*d)?.to_string(),
                factorization: format_factorization(&row.factorization),
                bound: bound.to_string(),
            })
        }
    })
}

/// `key  value` lines with the values aligned.
fn aligned(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

fn profile_text(p: &BTreeMap<String, String>) -> String {
    let mut entries: Vec<(u64, &String)> =
        p.iter().map(|(k, v)| (k.parse().unwrap_or(0), v)).collect();
    entries.sort();
    let inner: Vec<String> = entries.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    format!("{{{}}}", inner.join(", "))
}

fn sums_pairs(s: &SumsOut) -> Vec<(&'static str, String)> {
    vec![
        ("f2", s.f2.clone()),
        ("f3", s.f3.clone()),
        ("f4", s.f4.clone()),
        ("f5", s.f5.clone()),
    ]
}

fn render_text(report: &Report) -> String {
    match report {
        Report::Flexes(o) => {
            let mut pairs = vec![
                ("curve", o.curve.clone()),
                ("curve degree", o.curve_degree.to_string()),
                ("seed", o.seed.clone()),
                ("profile", profile_text(&o.profile)),
                ("flexes", o.flexes.clone()),
                ("weighted total", o.weighted_total.clone()),
            ];
            pairs.extend(sums_pairs(&o.sums));
            aligned(&pairs)
        }
        Report::Predegree(o) | Report::Degree(o) => {
            let mut pairs = vec![
                ("curve", o.curve.clone()),
                ("curve degree", o.curve_degree.to_string()),
                ("seed", o.seed.clone()),
                ("profile", profile_text(&o.profile)),
            ];
            pairs.extend(sums_pairs(&o.sums));
            pairs.extend([
                ("d^8", o.corrections.leading.clone()),
                ("first center", o.corrections.first_center.clone()),
                ("second center", o.corrections.second_center.clone()),
                ("flex centers", o.corrections.flex_centers.clone()),
                ("blow-up sum", o.routes.blow_up_sum.clone()),
                ("closed form", o.routes.closed_form.clone()),
                ("power sums", o.routes.power_sums.clone()),
                ("chow", o.routes.chow.clone()),
                ("predegree", o.predegree.clone()),
                ("factorization", o.factorization.clone()),
            ]);
            if let Some(a) = &o.aut_order {
                pairs.push(("aut order", a.clone()));
            }
            if let Some(g) = &o.orbit_degree {
                pairs.push(("orbit degree", g.clone()));
            }
            aligned(&pairs)
        }
        Report::Table { rows } => {
            let w = rows
                .iter()
                .map(|r| r.predegree.len())
                .max()
                .unwrap_or(0)
                .max(4);
            let mut out = format!("{:>2}  {:>w$}  factorization\n", "d", "P(d)");
            for r in rows {
                let _ = writeln!(out, "{:>2}  {:>w$}  {}", r.d, r.predegree, r.factorization);
            }
            out
        }
        Report::VerifyChow { checks, all_passed } => {
            let w = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            let mut out = String::new();
            for c in checks {
                let _ = writeln!(out, "{}  {:<w$}  {}", c.status, c.name, c.statement);
            }
            let verdict = if *all_passed {
                "all identities hold"
            } else {
                "some identities FAIL"
            };
            let _ = writeln!(out, "{verdict}");
            out
        }
        Report::Pgl2(o) => aligned(&[
            ("multiplicities", o.multiplicities.join(",")),
            ("d", o.d.clone()),
            ("formula", o.formula.clone()),
            ("oracle", o.oracle.clone()),
            ("agree", o.agree.to_string()),
        ]),
        Report::Bound(o) => aligned(&[
            ("d", o.d.to_string()),
            ("P(d)", o.predegree.clone()),
            ("factorization", o.factorization.clone()),
            ("bound", o.bound.clone()),
        ]),
    }
}

fn failed(report: &Report) -> Option<&'static str> {
    match report {
        Report::VerifyChow {
            all_passed: false, ..
        } => Some("an identity failed"),
        Report::Pgl2(o) if !o.agree => Some("formula and oracle disagree"),
        _ => None,
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let stdout = if cli.json {
                serde_json::to_string_pretty(&report).expect("reports serialize") + "\n"
            } else {
                render_text(&report)
            };
            let (code, stderr) = match failed(&report) {
                Some(why) => (1, format!("error: {why}\n")),
                None => (0, String::new()),
            };
            Outcome {
                code,
                stdout,
                stderr,
            }
        }
        Err(e) => Outcome {
            code: e.code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
