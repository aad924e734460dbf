//! `loopkit`: command-line front end.
//!
//! Exit codes: 0 success, 2 invalid input, 3 verification failure,
//! 4 resource cap exceeded.

mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::One;

use loopkit::algebra::{format_rational, parse_rational, NVarPoly};
use loopkit::combinatorics::{enumerate_matchings, Matching};
use loopkit::loop_model::ground_state_tau1;
use loopkit::nilp::{g_kratt, g_sratio, s_ratio_raw, CountReport, Family, Method};
use loopkit::qkz::{interpolate_in_n, psi_nested, psi_nested_all, sum_open, sum_rule};
use loopkit::verify::{run_suite, Limits, Suite};
use loopkit::{Error, ErrorKind};

use output::{
    nvar_coeffs, render, ClosedFormOut, CountOut, Format, InterpolationOut, MatchingList,
    MatchingRow, PsiList, PsiOut, Report, SumOpenOut, SumRuleOut, Valued, VerifyOut,
};

const DEFAULT_MAX_N: usize = 6;
const DEFAULT_MAX_P: usize = 6;
const DEFAULT_MAX_R: usize = 5;

#[derive(Parser, Debug)]
#[command(name = "loopkit", version, about = "Exact O(τ) loop model ground-state components")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV.
    #[arg(long, global = true)]
    csv: bool,
    /// `symbolic` for polynomials in τ, or a rational value such as 1 or -3/2.
    #[arg(long, global = true, default_value = "symbolic")]
    tau: String,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Cap on the half-size for full-matrix work.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    #[arg(long, global = true)]
    max_p: Option<usize>,
    #[arg(long, global = true)]
    max_r: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the link patterns of size 2n in canonical order.
    Matchings {
        #[arg(long)]
        n: usize,
    },
    /// Ground state of H = -Σ e_i at τ = 1.
    GroundState {
        #[arg(long)]
        n: usize,
    },
    /// The component ψ_{(π)_p}.
    Psi {
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value_t = 0)]
        p: usize,
    },
    /// ψ_{(π)_p} for every π of size 2r.
    PsiNested {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        p: usize,
    },
    /// Both sides of Σ_π τ^{o_π} ψ_{(π)_p} = ψ_{(()^r)_{p+1}}.
    SumRule {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        p: usize,
    },
    /// Sum of the components whose first p points open.
    SumOpen {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        r: usize,
    },
    /// Weighted lattice-path counts.
    Nilp {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value = "lgv")]
        method: MethodArg,
    },
    /// Closed forms of 𝓖_{p,r} at τ = 1.
    ClosedForm {
        #[arg(value_enum)]
        formula: Formula,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        r: usize,
    },
    /// ψ_{(π)_p} as a polynomial in n = r + p.
    Interpolate {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        p_max: Option<usize>,
    },
    /// Run property suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    #[value(name = "F")]
    F,
    #[value(name = "G")]
    G,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Brute,
    Lgv,
    Ct,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Formula {
    Kratt,
    Sratio,
    SratioRaw,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Tl,
    Coeffs,
    Sumrule,
    Zeileq,
    Oracle,
    Nilp,
    Highp,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Tl => Suite::Tl,
            SuiteArg::Coeffs => Suite::Coeffs,
            SuiteArg::Sumrule => Suite::SumRule,
            SuiteArg::Zeileq => Suite::Zeileq,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::Nilp => Suite::Nilp,
            SuiteArg::Highp => Suite::HighP,
            SuiteArg::All => Suite::All,
        }
    }
}

/// A failed run: message and exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e.kind() {
            ErrorKind::InvalidInput => 2,
            ErrorKind::Verification => 3,
            ErrorKind::Resource => 4,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

struct Caps {
    n: usize,
    p: usize,
    r: usize,
}

impl Caps {
    fn resolve(g: &Global) -> Result<Caps, Failure> {
        let env_n = match std::env::var("LOOPKIT_MAX_N") {
            Ok(v) => Some(
                v.trim()
                    .parse::<usize>()
                    .map_err(|_| invalid(format!("LOOPKIT_MAX_N={v:?} is not a non-negative integer")))?,
            ),
            Err(_) => None,
        };
        let caps = Caps {
            n: g.max_n.or(env_n).unwrap_or(DEFAULT_MAX_N),
            p: g.max_p.unwrap_or(DEFAULT_MAX_P),
            r: g.max_r.unwrap_or(DEFAULT_MAX_R),
        };
        for (name, value, default) in [
            ("n", caps.n, DEFAULT_MAX_N),
            ("p", caps.p, DEFAULT_MAX_P),
            ("r", caps.r, DEFAULT_MAX_R),
        ] {
            if value > default {
                eprintln!("warning: {name} cap raised to {value} (default {default}); run time grows quickly");
            }
        }
        Ok(caps)
    }

    fn check(&self, what: &'static str, value: usize) -> Result<(), Failure> {
        let cap = match what {
            "n" => self.n,
            "p" | "p_max" => self.p,
            _ => self.r,
        };
        if value > cap {
            let flag = match what {
                "n" => "--max-n",
                "p" | "p_max" => "--max-p",
                _ => "--max-r",
            };
            return Err(Failure {
                code: 4,
                message: format!("{what} = {value} exceeds the configured cap {cap} (raise with {flag})"),
            });
        }
        Ok(())
    }
}

fn parse_tau(s: &str) -> Result<Option<BigRational>, Failure> {
    if s == "symbolic" {
        Ok(None)
    } else {
        parse_rational(s).map(Some).map_err(Failure::from)
    }
}

fn parse_pattern(s: &str) -> Result<Matching, Failure> {
    Matching::parse(s).map_err(Failure::from)
}

fn psi_out(v: loopkit::qkz::PsiValue, tau: Option<&BigRational>) -> PsiOut {
    PsiOut {
        pattern: v.pattern.to_string(),
        p: v.p,
        n: v.n,
        value: Valued::new(v.tau_poly, tau),
    }
}

/// The invocation with `--threads` removed, quoted for a POSIX shell.
fn invocation() -> String {
    let mut parts = vec!["loopkit".to_string()];
    let mut args = std::env::args().skip(1);
    while let Some(a) = args.next() {
        if a == "--threads" {
            args.next();
            continue;
        }
        if a.starts_with("--threads=") {
            continue;
        }
        let plain = a
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || "-_./=:".contains(c));
        parts.push(if plain { a } else { format!("'{}'", a.replace('\'', r"'\''")) });
    }
    parts.join(" ")
}

fn run(cli: Cli) -> Result<String, Failure> {
    let g = &cli.global;
    if let Some(t) = g.threads {
        configure_threads(t)?;
    }
    let caps = Caps::resolve(g)?;
    let tau = parse_tau(&g.tau)?;
    let tau = tau.as_ref();
    let format = if g.json {
        Format::Json
    } else if g.csv {
        Format::Csv
    } else {
        Format::Human
    };

    let mut verification_failed: Option<String> = None;
    let report: Box<dyn Report> = match cli.command {
        Command::Matchings { n } => {
            caps.check("n", n)?;
            let rows = enumerate_matchings(n)?
                .into_iter()
                .enumerate()
                .map(|(k, m)| MatchingRow {
                    index: k + 1,
                    matching: m.to_string(),
                    openings: m.openings().entries().to_vec(),
                    young: m.young().rows().to_vec(),
                    even_openings: m.even_openings(),
                })
                .collect();
            Box::new(MatchingList { n, matchings: rows })
        }
        Command::GroundState { n } => {
            caps.check("n", n)?;
            if tau.is_some_and(|t| !t.is_one()) {
                return Err(invalid("the ground state is computed at τ = 1 only"));
            }
            Box::new(ground_state_tau1(n)?)
        }
        Command::Psi { pattern, p } => {
            let pi = parse_pattern(&pattern)?;
            caps.check("n", pi.n())?;
            caps.check("p", p)?;
            Box::new(psi_out(psi_nested(&pi, p)?, tau))
        }
        Command::PsiNested { r, p } => {
            caps.check("r", r)?;
            caps.check("p", p)?;
            Box::new(PsiList(
                psi_nested_all(r, p)?.into_iter().map(|v| psi_out(v, tau)).collect(),
            ))
        }
        Command::SumRule { r, p } => {
            caps.check("r", r)?;
            caps.check("p", p)?;
            let s = sum_rule(r, p)?;
            if !s.equal {
                verification_failed = Some(format!("sum rule fails at r = {r}, p = {p}"));
            }
            Box::new(SumRuleOut {
                r,
                p,
                lhs: Valued::new(s.lhs, tau),
                rhs: Valued::new(s.rhs, tau),
                equal: s.equal,
            })
        }
        Command::SumOpen { p, r } => {
            caps.check("r", r)?;
            caps.check("p", p)?;
            Box::new(SumOpenOut {
                p,
                r,
                value: Valued::new(sum_open(p, r)?, tau),
            })
        }
        Command::Nilp { family, p, r, method } => {
            caps.check("r", r)?;
            caps.check("p", p)?;
            let family = match family {
                FamilyArg::F => Family::F,
                FamilyArg::G => Family::G,
            };
            let method = match method {
                MethodArg::Brute => Method::Brute,
                MethodArg::Lgv => Method::Lgv,
                MethodArg::Ct => Method::Ct,
            };
            let report = CountReport::new(family, method, p, r)?;
            let value = tau.map(|t| format_rational(&report.tau_poly.eval(t)));
            Box::new(CountOut {
                report,
                tau: tau.map(format_rational),
                value,
            })
        }
        Command::ClosedForm { formula, p, r } => {
            caps.check("r", r)?;
            caps.check("p", p)?;
            let (name, value) = match formula {
                Formula::Kratt => ("kratt", g_kratt(p, r)?.to_string()),
                Formula::Sratio => ("sratio", g_sratio(p, r)?.to_string()),
                Formula::SratioRaw => ("sratio-raw", format_rational(&s_ratio_raw(p, r)?)),
            };
            Box::new(ClosedFormOut {
                formula: name.to_string(),
                p,
                r,
                value,
            })
        }
        Command::Interpolate { pattern, p_max } => {
            let pi = parse_pattern(&pattern)?;
            caps.check("n", pi.n())?;
            let y = pi.young().size();
            let p_max = p_max.unwrap_or(y + 2);
            caps.check("p_max", p_max)?;
            let rep = interpolate_in_n(&pi, p_max)?;
            if !rep.holds() {
                verification_failed = Some(format!("large-p structure fails for {pi}"));
            }
            let (by_tau, display) = match tau {
                Some(t) => {
                    let poly: NVarPoly = rep.poly.eval_tau(t);
                    (vec![nvar_coeffs(&poly)], poly.to_string())
                }
                None => (rep.poly.by_tau().iter().map(nvar_coeffs).collect(), rep.poly.to_string()),
            };
            Box::new(InterpolationOut {
                pattern: pi.to_string(),
                young: rep.young.rows().to_vec(),
                p_max,
                tau: tau.map(format_rational),
                by_tau,
                degree_n: rep.degree_n,
                degree_tau: rep.degree_tau,
                integral: rep.integral,
                leading: format_rational(&rep.leading),
                expected_leading: format_rational(&rep.expected_leading),
                holds: rep.holds(),
                display,
            })
        }
        Command::Verify {
            suite,
            n,
            p,
            r,
            trials,
            seed,
        } => {
            let defaults = Limits::default();
            let limits = Limits {
                n: n.unwrap_or(defaults.n),
                p: p.unwrap_or(defaults.p),
                r: r.unwrap_or(defaults.r),
                trials,
                seed,
                ..defaults
            };
            caps.check("n", limits.n)?;
            caps.check("p", limits.p)?;
            caps.check("r", limits.r)?;
            let out = VerifyOut(run_suite(suite.into(), &limits)?);
            if !out.all_passed() {
                verification_failed = Some("some properties failed".into());
            }
            Box::new(out)
        }
    };

    let mut text = render(report.as_ref(), format).map_err(|m| Failure { code: 2, message: m })?;
    if format == Format::Human {
        text = format!("# {}\n{text}", invocation());
    }
    match verification_failed {
        None => Ok(text),
        Some(message) => {
            print!("{text}");
            Err(Failure { code: 3, message })
        }
    }
}

#[cfg(feature = "parallel")]
fn configure_threads(t: usize) -> Result<(), Failure> {
    if t == 0 {
        return Err(invalid("--threads must be at least 1"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(t)
        .build_global()
        .map_err(|e| invalid(format!("cannot configure {t} threads: {e}")))
}

#[cfg(not(feature = "parallel"))]
fn configure_threads(t: usize) -> Result<(), Failure> {
    if t == 0 {
        return Err(invalid("--threads must be at least 1"));
    }
    if t > 1 {
        eprintln!("warning: built without parallel support; ignoring --threads {t}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn tau_argument() {
        assert!(parse_tau("symbolic").ok().unwrap().is_none());
        assert_eq!(
            parse_tau("-3/2").ok().unwrap().unwrap(),
            BigRational::new(BigInt::from(-3), BigInt::from(2))
        );
        assert_eq!(parse_tau("x").err().map(|f| f.code), Some(2));
    }

    #[test]
    fn caps_report_exit_code_4() {
        let caps = Caps { n: 6, p: 6, r: 5 };
        assert!(caps.check("n", 6).is_ok());
        assert_eq!(caps.check("n", 7).err().map(|f| f.code), Some(4));
        assert_eq!(caps.check("r", 6).err().map(|f| f.code), Some(4));
    }

    #[test]
    fn error_kinds_map_to_exit_codes() {
        let code = |e: Error| Failure::from(e).code;
        assert_eq!(code(Error::TheoremViolation("x".into())), 3);
        assert_eq!(code(Error::ContractViolation("x".into())), 2);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
