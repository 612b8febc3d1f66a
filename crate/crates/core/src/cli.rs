//! The `genroof` command line.
//!
//! Every command prints `key = value` lines in a fixed order. Exit code 0
//! means success or "property holds", 1 means the property fails (the report
//! carries a witness or certificate), 2 means a usage or input error.

use std::ffi::OsString;
use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bisub::{check_bisubmodular, HalfFunction, Method, PairLabeling};
use crate::card::{check_card_conditions, expand, CardinalityFn};
use crate::enumerate::EnumBound;
use crate::error::{Error, Result};
use crate::io::{read_file, write_hif, FunctionFile};
use crate::lovasz::{convexity_probe, lovasz_eval, total_integrality_verify, LPoint, ProbeMode, SignedFunction};
use crate::lp::{extension_feasible, pointwise_max_relaxation, tightest_relaxation, LpResult, RelaxationClass};
use crate::pbf::{PbfTable, QuadraticPbf};
use crate::rational::{parse_rational, Rational};
use crate::roof::{build_roofdual, solve_roofdual};

#[derive(Debug, Parser)]
#[command(name = "genroof", version, about = "Exact tools for generalized roof duality and bisubmodular functions")]
struct Cli {
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bisubmodularity of functions on {0, 1/2, 1}^n.
    #[command(subcommand)]
    Bisub(BisubCmd),
    /// The roof dual of a quadratic.
    #[command(subcommand)]
    Roofdual(RoofCmd),
    /// Relaxation linear programs.
    #[command(subcommand)]
    Relax(RelaxCmd),
    /// The Lovász extension.
    #[command(subcommand)]
    Lovasz(LovaszCmd),
    /// Cardinality-dependent functions.
    #[command(subcommand)]
    Card(CardCmd),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    A,
    B,
    C,
    D,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DomainArg {
    Half,
    Binary,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClassArg {
    Bisub,
    Submod,
}

#[derive(Debug, Subcommand)]
enum BisubCmd {
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "c")]
        method: MethodArg,
    },
    Minimize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "half")]
        domain: DomainArg,
    },
}

#[derive(Debug, Subcommand)]
enum RoofCmd {
    Solve {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum RelaxCmd {
    Tightest {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        class: ClassArg,
    },
    Extend {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        symmetrize: bool,
    },
    Dominance {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum LovaszCmd {
    Eval {
        #[arg(long = "in")]
        input: PathBuf,
        /// Comma-separated coordinates in [-1, 1].
        #[arg(long)]
        at: String,
    },
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum CardCmd {
    Check {
        #[arg(long = "in")]
        input: PathBuf,
    },
    Expand {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Ordered `key = value` lines.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.lines.push((key.into(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn lines(&self) -> &[(String, String)] {
        &self.lines
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.lines {
            writeln!(f, "{k} = {v}")?;
        }
        Ok(())
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            return (code, e.to_string());
        }
    };
    let mut report = Report::default();
    match dispatch(&cli, &mut report) {
        Ok(holds) => (if holds { EXIT_OK } else { EXIT_FALSE }, report.to_string()),
        Err(e) => {
            report.push("error", e);
            (EXIT_ERROR, report.to_string())
        }
    }
}

fn load(path: &Path) -> Result<FunctionFile> {
    read_file(path)
}

fn half_function(path: &Path) -> Result<HalfFunction> {
    match load(path)? {
        FunctionFile::Hif(g) => Ok(g),
        FunctionFile::Card(g) => Ok(expand(&g)),
        other => Err(Error::Precondition(format!("expected a hif or card file, found {}", other.kind()))),
    }
}

fn table(path: &Path) -> Result<PbfTable> {
    match load(path)? {
        FunctionFile::Pbf(f) => Ok(f),
        FunctionFile::Qpbf(q) => Ok(q.to_table()),
        other => Err(Error::Precondition(format!("expected a pbf or qpbf file, found {}", other.kind()))),
    }
}

fn quadratic(path: &Path) -> Result<QuadraticPbf> {
    match load(path)? {
        FunctionFile::Qpbf(q) => Ok(q),
        other => Err(Error::Precondition(format!("expected a qpbf file, found {}", other.kind()))),
    }
}

fn cardinality(path: &Path) -> Result<CardinalityFn> {
    match load(path)? {
        FunctionFile::Card(g) => Ok(g),
        other => Err(Error::Precondition(format!("expected a card file, found {}", other.kind()))),
    }
}

fn class_of(c: ClassArg) -> RelaxationClass {
    match c {
        ClassArg::Bisub => RelaxationClass::Bisubmodular,
        ClassArg::Submod => RelaxationClass::Submodular,
    }
}

/// Returns whether the checked property holds.
fn dispatch(cli: &Cli, r: &mut Report) -> Result<bool> {
    match &cli.command {
        Command::Bisub(BisubCmd::Check { input, method }) => bisub_check(input, *method, r),
        Command::Bisub(BisubCmd::Minimize { input, domain }) => {
            let g = half_function(input)?;
            let bound = EnumBound::from_env();
            match domain {
                DomainArg::Half => {
                    let m = g.minimize(bound)?;
                    r.push("domain", "half");
                    r.push("min", &m.value);
                    r.push("argmin", &m.argmins[0]);
                    r.push("minimizers", m.argmins.len());
                }
                DomainArg::Binary => {
                    let m = g.minimize_binary(bound)?;
                    r.push("domain", "binary");
                    r.push("min", &m.value);
                    r.push("argmin", &m.argmins[0]);
                    r.push("minimizers", m.argmins.len());
                }
            }
            Ok(true)
        }
        Command::Roofdual(RoofCmd::Solve { input }) => {
            let q = quadratic(input)?;
            let s = solve_roofdual(&q)?;
            r.push("n", q.n());
            r.push("bound", &s.bound);
            r.push("x_hat", &s.x_hat);
            r.push("u", &s.u);
            let fixed: Vec<String> = s
                .persistent()
                .into_iter()
                .map(|i| format!("x{}={}", i + 1, s.x_hat.doubled()[i] / 2))
                .collect();
            r.push("persistent", if fixed.is_empty() { "none".to_string() } else { fixed.join(" ") });
            Ok(true)
        }
        Command::Relax(RelaxCmd::Tightest { input, class }) => {
            let f = table(input)?;
            let t = tightest_relaxation(&f, class_of(*class))?;
            r.push("class", t.class);
            r.push("t_star", &t.t);
            Ok(true)
        }
        Command::Relax(RelaxCmd::Extend { input, symmetrize }) => relax_extend(input, *symmetrize, r),
        Command::Relax(RelaxCmd::Dominance { input }) => relax_dominance(input, r),
        Command::Lovasz(LovaszCmd::Eval { input, at }) => {
            let h = SignedFunction::from_half(&half_function(input)?);
            let coords = at
                .split(',')
                .map(|s| parse_rational(s.trim()))
                .collect::<Result<Vec<Rational>>>()?;
            let x = LPoint::new(coords)?;
            r.push("at", &x);
            r.push("value", lovasz_eval(&h, &x)?);
            Ok(true)
        }
        Command::Lovasz(LovaszCmd::Verify { input, depth }) => {
            let h = SignedFunction::from_half(&half_function(input)?);
            let report = total_integrality_verify(&h, *depth)?;
            r.push("functions_checked", report.functions_checked);
            let random = convexity_probe(
                &h,
                ProbeMode::Random {
                    pairs: 500,
                    denominator: 8,
                    seed: cli.seed,
                },
            )?;
            r.push("seed", cli.seed);
            match (&report.failure, &random) {
                (None, None) => {
                    r.push("totally_half_integral", true);
                    Ok(true)
                }
                (Some(fail), _) => {
                    r.push("totally_half_integral", false);
                    r.push("failure", fail);
                    Ok(false)
                }
                (None, Some(w)) => {
                    r.push("totally_half_integral", false);
                    r.push("failure", format!("midpoint of {} and {}: {} > {}", w.x, w.y, w.midpoint_value, w.average));
                    Ok(false)
                }
            }
        }
        Command::Card(CardCmd::Check { input }) => {
            let g = cardinality(input)?;
            r.push("n", g.n());
            match check_card_conditions(&g) {
                None => {
                    r.push("conditions", "hold");
                    Ok(true)
                }
                Some(v) => {
                    r.push("conditions", "fail");
                    r.push("violated", &v);
                    Ok(false)
                }
            }
        }
        Command::Card(CardCmd::Expand { input, out }) => {
            let g = cardinality(input)?;
            std::fs::write(out, write_hif(&expand(&g)))
                .map_err(|e| Error::Io(format!("{}: {e}", out.display())))?;
            r.push("n", g.n());
            r.push("wrote", out.display());
            Ok(true)
        }
    }
}

fn bisub_check(input: &Path, method: MethodArg, r: &mut Report) -> Result<bool> {
    let g = half_function(input)?;
    let methods: Vec<Method> = match method {
        MethodArg::A => vec![Method::A],
        MethodArg::B => vec![Method::B],
        MethodArg::C => vec![Method::C],
        MethodArg::D => vec![Method::D],
        MethodArg::All => Method::ALL.to_vec(),
    };
    let verdicts: Vec<_> = methods.iter().map(|&m| check_bisubmodular(&g, m)).collect();
    let holds = verdicts[0].holds();
    if verdicts.iter().any(|v| v.holds() != holds) {
        let summary: Vec<String> = methods.iter().zip(&verdicts).map(|(m, v)| format!("{m}:{}", v.holds())).collect();
        return Err(Error::Precondition(format!("methods disagree ({})", summary.join(" "))));
    }
    r.push("n", g.n());
    r.push("method", methods.iter().map(Method::to_string).collect::<Vec<_>>().join(","));
    r.push("bisubmodular", holds);
    if let Some(v) = verdicts.iter().find_map(|v| v.violation.as_ref()) {
        r.push("violation.method", v.method);
        r.push("violation.u", &v.u);
        r.push("violation.v", &v.v);
        r.push("violation.meet", &v.low);
        r.push("violation.join", &v.high);
        r.push("violation.lhs", &v.lhs);
        r.push("violation.rhs", &v.rhs);
    }
    Ok(holds)
}

fn relax_extend(input: &Path, symmetrize: bool, r: &mut Report) -> Result<bool> {
    let g = half_function(input)?;
    let ext = extension_feasible(&g, symmetrize)?;
    r.push("n", g.n());
    r.push("symmetrize", symmetrize);
    r.push("unknowns", ext.lp.variables().len());
    r.push("constraints", ext.lp.constraints().len());
    r.push("feasible", ext.feasible());
    match &ext.result {
        LpResult::Infeasible(cert) => {
            for k in cert.support() {
                r.push(format!("certificate[{}]", ext.lp.constraints()[k].name), &cert.multipliers[k]);
            }
        }
        result => {
            let x = result.assignment().expect("feasible results carry a point");
            for (v, value) in ext.lp.variables().iter().zip(x) {
                r.push(&v.name, value);
            }
        }
    }
    Ok(ext.feasible())
}

fn relax_dominance(input: &Path, r: &mut Report) -> Result<bool> {
    let q = quadratic(input)?;
    let f = q.to_table();
    let g = build_roofdual(&q);
    let mut checked = 0usize;
    let mut mismatch: Option<(PairLabeling, Rational, Rational)> = None;
    for u in PairLabeling::all_minus(q.n()) {
        let lp = pointwise_max_relaxation(&f, &u, RelaxationClass::Bisubmodular)?;
        let roof = g.eval(&u)?;
        checked += 1;
        if lp != roof && mismatch.is_none() {
            mismatch = Some((u, lp, roof));
        }
    }
    r.push("n", q.n());
    r.push("points", checked);
    r.push("dominates", mismatch.is_none());
    if let Some((u, lp, roof)) = &mismatch {
        r.push("mismatch.u", u);
        r.push("mismatch.lp_max", lp);
        r.push("mismatch.roof_dual", roof);
    }
    Ok(mismatch.is_none())
}
