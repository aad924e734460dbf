//! Serializable result records and their three renderings.

use std::fmt::Write as _;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use loopkit::algebra::{format_rational, NVarPoly, TauPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
    Csv,
}

/// A command result that can be printed in every format.
pub trait Report {
    fn human(&self) -> String;
    fn json(&self) -> serde_json::Result<String>;
    fn csv_header(&self) -> Vec<&'static str>;
    fn csv_rows(&self) -> Vec<Vec<String>>;
}

pub fn render(report: &dyn Report, format: Format) -> Result<String, String> {
    match format {
        Format::Human => Ok(report.human()),
        Format::Json => report.json().map(|s| s + "\n").map_err(|e| e.to_string()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(report.csv_header()).map_err(|e| e.to_string())?;
            for row in report.csv_rows() {
                w.write_record(&row).map_err(|e| e.to_string())?;
            }
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            String::from_utf8(bytes).map_err(|e| e.to_string())
        }
    }
}

/// Space-separated coefficients, lowest power first.
fn coeff_list(t: &TauPoly) -> String {
    t.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// A polynomial in τ, optionally specialized.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Valued {
    pub tau_poly: TauPoly,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

impl Valued {
    pub fn new(tau_poly: TauPoly, tau: Option<&BigRational>) -> Self {
        let value = tau.map(|t| format_rational(&tau_poly.eval(t)));
        Valued {
            tau_poly,
            tau: tau.map(format_rational),
            value,
        }
    }

    pub fn display(&self) -> String {
        self.value.clone().unwrap_or_else(|| self.tau_poly.to_string())
    }

    fn csv(&self) -> Vec<String> {
        vec![
            coeff_list(&self.tau_poly),
            self.tau.clone().unwrap_or_default(),
            self.value.clone().unwrap_or_default(),
        ]
    }
}

const VALUED_HEADER: [&str; 3] = ["tau_coeffs", "tau", "value"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingRow {
    pub index: usize,
    pub matching: String,
    pub openings: Vec<usize>,
    pub young: Vec<usize>,
    pub even_openings: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingList {
    pub n: usize,
    pub matchings: Vec<MatchingRow>,
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

impl Report for MatchingList {
    fn human(&self) -> String {
        let mut s = String::new();
        let width = self.n * 2;
        for m in &self.matchings {
            let _ = writeln!(
                s,
                "{:>4}  {:<width$}  a=({})  Y=[{}]  o={}",
                m.index,
                m.matching,
                join(&m.openings, ","),
                join(&m.young, ","),
                m.even_openings
            );
        }
        let _ = writeln!(s, "{} matchings", self.matchings.len());
        s
    }

    fn json(&self) -> serde_json::Result<String> {
        serde_json::to_string(self)
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["index", "matching", "openings", "young", "even_openings"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.matchings
            .iter()
            .map(|m| {
                vec![
                    m.index.to_string(),
                    m.matching.clone(),
                    join(&m.openings, " "),
                    join(&m.young, " "),
                    m.even_openings.to_string(),
                ]
            })
            .collect()
    }
}

impl Report for loopkit::loop_model::GroundState {
    fn human(&self) -> String {
        let mut s = String::new();
        let width = self.n * 2;
        for c in &self.components {
            let _ = writeln!(s, "{:<width$}  {}", c.matching, format_rational(&c.value));
        }
        let _ = writeln!(s, "sum  {}", format_rational(&self.sum));
        s
    }

    fn json(&self) -> serde_json::Result<String> {
        serde_json::to_string(self)
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["matching", "value"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.components
            .iter()
            .map(|c| vec![c.matching.to_string(), format_rational(&c.value)])
            .collect()
    }
}

/// ψ_{(π)_p}, optionally specialized.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiOut {
    pub pattern: String,
    pub p: usize,
    pub n: usize,
    #[serde(flatten)]
    pub value: Valued,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PsiList(pub Vec<PsiOut>);

fn psi_row(v: &PsiOut) -> Vec<String> {
    let mut row = vec![v.pattern.clone(), v.p.to_string(), v.n.to_string()];
    row.extend(v.value.csv());
    row
}

fn psi_header() -> Vec<&'static str> {
    let mut h = vec!["pattern", "p", "n"];
    h.extend(VALUED_HEADER);
    h
}

impl Report for PsiOut {
    fn human(&self) -> String {
        format!("{}\n", self.value.display())
    }

    fn json(&self) -> serde_json::Result<String> {
        serde_json::to_string(self)
    }

    fn csv_header(&self) -> Vec<&'static str> {
        psi_header()
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![psi_row(self)]
    }
}

impl Report for PsiList {
    fn human(&self) -> String {
        let width = self.0.first().map_or(0, |v| v.pattern.len());
        let mut s = String::new();
        for v in &self.0 {
            let _ = writeln!(s, "{:<width$}  {}", v.pattern, v.value.display());
        }
        s
    }

    fn json(&self) -> serde_json::Result<String> {
        serde_json::to_string(self)
    }

    fn csv_header(&self) -> Vec<&'static str> {
        psi_header()
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.0.iter().map(psi_row).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumRuleOut {
    pub r: usize,
    pub p: usize,
    pub lhs: Valued,
    pub rhs: Valued,
    pub equal: bool,
}

impl Report for SumRuleOut {
    fn human(&self) -> String {
        format!(
            "lhs    {}\nrhs    {}\nequal  {}\n",
            self.lhs.display(),
            self.rhs.display(),
            self.equal
        )
    }

    fn json(&self) -> serde_json::Result<String> {
        serde_json::to_string(self)
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["r", "p", "side", "tau_coeffs", "tau", "value", "equal"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        [("lhs", &self.lhs), ("rhs", &self.rhs)]
            .into_iter()
            .map(|(side, v)| {
                let mut row = vec![self.r.to_string(), self.p.to_string(), side.to_string()];
                row.extend(v.csv());
                row.push(self.equal.to_string());
                row
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumOpenOut {
    pub p: usize,
    pub r: usize,
    #[serde(flatten)]
    pub value: Valued,
}

impl Report for SumOpenOut {
    fn human(&self) -> String {
        format!("{}\n", self.value.display())
    }

    fn json(&self) -> serde_json::Result<String> {
        serde_json::to_string(self)
    }

    fn csv_header(&self) -> Vec<&'static str> {
        let mut h = vec!["p", "r"];
        h.extend(VALUED_HEADER);
        h
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let mut row = vec![self.p.to_string(), self.r.to_string()];
        row.extend(self.value.csv());
        vec![row]
    }
}

/// A lattice-path count; `value` is present when τ was specialized.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountOut {
    #[serde(flatten)]
    pub report: loopkit::nilp::CountReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

impl Report for CountOut {
    fn human(&self) -> String {
        match &self.value {
            Some(v) => format!("{v}\n"),
            None => format!("{}\n", self.report.tau_poly),
        }
    }

    fn json(&self) -> serde_json::Result<String> {
        serde_json::to_string(self)
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["family", "p", "r", "method", "tau_coeffs", "tau1", "tau", "value"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let r = &self.report;
        vec![vec![
            r.family.to_string(),
            r.p.to_string(),
            r.r.to_string(),
            r.method.to_string(),
            coeff_list(&r.tau_poly),
            r.tau1.clone(),
            self.tau.clone().unwrap_or_default(),
            self.value.clone().unwrap_or_default(),
        ]]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormOut {
    pub formula: String,
    pub p: usize,
    pub r: usize,
    pub value: String,
}

impl Report for ClosedFormOut {
    fn human(&self) -> String {
        format!("{}\n", self.value)
    }

    fn json(&self) -> serde_json::Result<String> {
        serde_json::to_string(self)
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["formula", "p", "r", "value"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.formula.clone(),
            self.p.to_string(),
            self.r.to_string(),
            self.value.clone(),
        ]]
    }
}

/// Interpolated ψ_{(π)_p}. `by_tau[k][m]` is the coefficient of τ^k n^m;
/// when τ was specialized `by_tau` has the single entry for the result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InterpolationOut {
    pub pattern: String,
    pub young: Vec<usize>,
    pub p_max: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<String>,
    pub by_tau: Vec<Vec<String>>,
    pub degree_n: Option<usize>,
    pub degree_tau: Option<usize>,
    pub integral: bool,
    pub leading: String,
    pub expected_leading: String,
    pub holds: bool,
    /// Human-readable form of the polynomial.
    pub display: String,
}

pub fn nvar_coeffs(p: &NVarPoly) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

impl Report for InterpolationOut {
    fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "Y                   [{}]", join(&self.young, ","));
        let _ = writeln!(s, "degree in n         {}", opt(self.degree_n));
        let _ = writeln!(s, "degree in τ         {}", opt(self.degree_tau));
        let _ = writeln!(s, "|Y|!·P integral     {}", self.integral);
        let _ = writeln!(s, "leading n^|Y|τ^|Y|  {} (dim Y/|Y|! = {})", self.leading, self.expected_leading);
        let _ = writeln!(s, "structure holds     {}", self.holds);
        let _ = writeln!(s, "P(n{})  {}", if self.tau.is_some() { "" } else { ", τ" }, self.display);
        s
    }

    fn json(&self) -> serde_json::Result<String> {
        serde_json::to_string(self)
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["pattern", "tau_power", "n_coeffs"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.by_tau
            .iter()
            .enumerate()
            .map(|(k, cs)| vec![self.pattern.clone(), k.to_string(), cs.join(" ")])
            .collect()
    }
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "-".to_string(), |d| d.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VerifyOut(pub Vec<loopkit::verify::PropertyResult>);

impl VerifyOut {
    pub fn all_passed(&self) -> bool {
        self.0.iter().all(|r| r.passed)
    }
}

impl Report for VerifyOut {
    fn human(&self) -> String {
        let mut s = String::new();
        for r in &self.0 {
            if r.passed {
                let _ = writeln!(s, "PASS  {:<7} {}", r.suite, r.property);
            } else {
                let _ = writeln!(s, "FAIL  {:<7} {}: {}", r.suite, r.property, r.detail);
            }
        }
        let failed = self.0.iter().filter(|r| !r.passed).count();
        let _ = writeln!(s, "{} properties, {} failed", self.0.len(), failed);
        s
    }

    fn json(&self) -> serde_json::Result<String> {
        serde_json::to_string(self)
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["suite", "property", "passed", "detail"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.0
            .iter()
            .map(|r| vec![r.suite.clone(), r.property.clone(), r.passed.to_string(), r.detail.clone()])
            .collect()
    }
}
