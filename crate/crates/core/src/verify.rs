//! Property suites tying the modules together. Each property is reported
//! separately with a witness on failure.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::TauPoly;
use crate::combinatorics::{enumerate_matchings, Matching};
use crate::error::{Error, ErrorKind, Result};
use crate::loop_model::{check_tl_matrix_relations, check_tl_relations, ground_state_tau1};
use crate::nilp::{f_bruteforce, f_ct, f_lgv, g_bruteforce, g_kratt, g_lgv, g_sratio};
use crate::qkz::{
    coeff_c, coeff_c_product, coeff_c_with, interpolate_in_n, matrix_c, psi, psi_nested,
    psi_nested_all, sum_open, sum_rule, verify_zeileq, zeileq_sides, ArchChoice,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Tl,
    Coeffs,
    SumRule,
    Zeileq,
    Oracle,
    Nilp,
    HighP,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Tl,
        Suite::Coeffs,
        Suite::Oracle,
        Suite::SumRule,
        Suite::Zeileq,
        Suite::Nilp,
        Suite::HighP,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tl => "tl",
            Suite::Coeffs => "coeffs",
            Suite::SumRule => "sumrule",
            Suite::Zeileq => "zeileq",
            Suite::Oracle => "oracle",
            Suite::Nilp => "nilp",
            Suite::HighP => "highp",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                position: 1,
                message: "unknown suite".into(),
            })
    }
}

/// Size limits for the suites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest half-size for the TL, coefficient and oracle suites.
    pub n: usize,
    pub p: usize,
    pub r: usize,
    /// Largest p + r for the τ = 1 closed forms.
    pub closed_form: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            n: 5,
            p: 3,
            r: 4,
            closed_form: 8,
            trials: 20,
            seed: 2024,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub suite: String,
    pub property: String,
    pub passed: bool,
    /// Empty on success, a witness otherwise.
    pub detail: String,
}

struct Recorder {
    suite: Suite,
    out: Vec<PropertyResult>,
}

impl Recorder {
    fn new(suite: Suite) -> Self {
        Recorder {
            suite,
            out: Vec::new(),
        }
    }

    /// Records a property; the closure returns `Some(witness)` on failure.
    /// Verification errors count as failures, other errors propagate.
    fn check(&mut self, property: impl Into<String>, f: impl FnOnce() -> Result<Option<String>>) -> Result<()> {
        let (passed, detail) = match f() {
            Ok(None) => (true, String::new()),
            Ok(Some(w)) => (false, w),
            Err(e) if e.kind() == ErrorKind::Verification => (false, e.to_string()),
            Err(e) => return Err(e),
        };
        self.out.push(PropertyResult {
            suite: self.suite.name().to_string(),
            property: property.into(),
            passed,
            detail,
        });
        Ok(())
    }
}

fn at1(t: &TauPoly) -> BigInt {
    t.eval_int(&BigInt::one())
}

/// Runs one suite (or all of them, in a fixed order).
pub fn run_suite(suite: Suite, limits: &Limits) -> Result<Vec<PropertyResult>> {
    if suite == Suite::All {
        let mut all = Vec::new();
        for s in Suite::EACH {
            all.extend(run_suite(s, limits)?);
        }
        return Ok(all);
    }
    let mut rec = Recorder::new(suite);
    match suite {
        Suite::Tl => tl(&mut rec, limits)?,
        Suite::Coeffs => coeffs(&mut rec, limits)?,
        Suite::Oracle => oracle(&mut rec, limits)?,
        Suite::SumRule => sum_rules(&mut rec, limits)?,
        Suite::Zeileq => zeileq(&mut rec, limits)?,
        Suite::Nilp => nilp(&mut rec, limits)?,
        Suite::HighP => high_p(&mut rec, limits)?,
        Suite::All => unreachable!(),
    }
    Ok(rec.out)
}

fn tl(rec: &mut Recorder, l: &Limits) -> Result<()> {
    for n in 1..=l.n {
        rec.check(format!("TL relations on link patterns, n = {n}"), || {
            let failures = check_tl_relations(n)?;
            Ok(failures.first().map(|f| {
                format!("{} fails on {}: {:?} vs {:?}", f.relation, f.pattern, f.lhs, f.rhs)
            }))
        })?;
        rec.check(format!("TL relations as ℤ[τ] matrix identities, n = {n}"), || {
            Ok(check_tl_matrix_relations(n)?.first().cloned())
        })?;
    }
    Ok(())
}

fn coeffs(rec: &mut Recorder, l: &Limits) -> Result<()> {
    for n in 1..=l.n {
        let c = matrix_c(n)?;
        let size = c.matchings.len();
        rec.check(format!("C is unit lower triangular, n = {n}"), || {
            let diag = (0..size).all(|k| c.entries[(k, k)].is_one());
            Ok((!(diag && c.entries.is_lower_triangular())).then(|| "not unitriangular".into()))
        })?;
        rec.check(format!("C agrees with the arch product, n = {n}"), || {
            for (i, a) in c.sequences.iter().enumerate() {
                for (j, pi) in c.matchings.iter().enumerate() {
                    let prod = coeff_c_product(a, pi)?;
                    if prod != c.entries[(i, j)] {
                        return Ok(Some(format!(
                            "a = {a}, π = {pi}: recursion {}, product {prod}",
                            c.entries[(i, j)]
                        )));
                    }
                }
            }
            Ok(None)
        })?;
        rec.check(format!("C vanishes outside containment and obeys the τ-degree bound, n = {n}"), || {
            for (i, a) in c.sequences.iter().enumerate() {
                let ya = a.young()?;
                for (j, pi) in c.matchings.iter().enumerate() {
                    let yp = pi.young();
                    let v = &c.entries[(i, j)];
                    if !ya.contains(&yp) {
                        if !v.is_zero() {
                            return Ok(Some(format!("a = {a}, π = {pi}: non-zero {v} outside containment")));
                        }
                    } else if ya != yp {
                        let bound = ya.size() as i64 - yp.size() as i64 - 2;
                        if v.degree().is_some_and(|d| d as i64 > bound) {
                            return Ok(Some(format!("a = {a}, π = {pi}: {v} has degree above {bound}")));
                        }
                    }
                }
            }
            Ok(None)
        })?;
        rec.check(format!("C is independent of the little-arch order, n = {n}"), || {
            for a in &c.sequences {
                for pi in &c.matchings {
                    let left = coeff_c(a, pi)?;
                    let right = coeff_c_with(a, pi, ArchChoice::Rightmost)?;
                    if left != right {
                        return Ok(Some(format!("a = {a}, π = {pi}: {left} vs {right}")));
                    }
                }
            }
            Ok(None)
        })?;
    }
    Ok(())
}

fn oracle(rec: &mut Recorder, l: &Limits) -> Result<()> {
    for n in 2..=l.n.max(2) {
        rec.check(format!("ψ(τ=1) equals the TL ground state, n = {n}"), || {
            let gs = ground_state_tau1(n)?;
            for v in psi_nested_all(n, 0)? {
                let expected = gs.get(&v.pattern).expect("same basis");
                let got = BigRational::from_integer(at1(&v.tau_poly));
                if &got != expected {
                    return Ok(Some(format!("{}: a-basis {got}, eigenvector {expected}", v.pattern)));
                }
            }
            Ok(None)
        })?;
    }
    for n in 1..=l.n.min(4) {
        rec.check(format!("ψ(τ=1) is rotation invariant, n = {n}"), || {
            for pi in enumerate_matchings(n)? {
                let a = at1(&psi(&pi)?.tau_poly);
                let b = at1(&psi(&pi.rotate())?.tau_poly);
                if a != b {
                    return Ok(Some(format!("{pi}: {a} vs {b}")));
                }
            }
            Ok(None)
        })?;
    }
    Ok(())
}

fn sum_rules(rec: &mut Recorder, l: &Limits) -> Result<()> {
    for r in 1..=l.r {
        for p in 0..=l.p {
            rec.check(format!("Σ τ^o ψ_(π)_p = ψ_(()^r)_(p+1), r = {r}, p = {p}"), || {
                let s = sum_rule(r, p)?;
                Ok((!s.equal).then(|| format!("lhs {}, rhs {}", s.lhs, s.rhs)))
            })?;
        }
        rec.check(format!("Σ ψ_π(1) = ψ_(()^(r+1))(1), r = {r}"), || {
            let total: BigInt = psi_nested_all(r, 0)?.iter().map(|v| at1(&v.tau_poly)).sum();
            let chain = at1(&psi(&Matching::unit_chain(r + 1))?.tau_poly);
            Ok((total != chain).then(|| format!("{total} vs {chain}")))
        })?;
        rec.check(format!("sum_open(0, r) = Σ ψ_π, r = {r}"), || {
            let total: TauPoly = psi_nested_all(r, 0)?.into_iter().map(|v| v.tau_poly).sum();
            let open = sum_open(0, r)?;
            Ok((total != open).then(|| format!("{total} vs {open}")))
        })?;
    }
    Ok(())
}

fn zeileq(rec: &mut Recorder, l: &Limits) -> Result<()> {
    rec.check("antisymmetrization identity at r = 2, τ = 0, u = (1, 2)", || {
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));
        let (a, b) = zeileq_sides(&q(0), &[q(1), q(2)])?;
        Ok((a != q(3) || b != q(3)).then(|| format!("sides {a} and {b}, expected 3")))
    })?;
    for r in 1..=l.r.max(5) {
        rec.check(format!("antisymmetrization identity, r = {r}, {} trials", l.trials), || {
            verify_zeileq(r, l.trials, l.seed)?;
            Ok(None)
        })?;
    }
    Ok(())
}

fn nilp(rec: &mut Recorder, l: &Limits) -> Result<()> {
    for p in 0..=l.p {
        for r in 1..=l.r {
            rec.check(format!("𝓕 brute force = LGV = constant term, p = {p}, r = {r}"), || {
                let (b, g, c) = (f_bruteforce(p, r)?, f_lgv(p, r)?, f_ct(p, r)?);
                Ok((b != g || g != c).then(|| format!("{b} / {g} / {c}")))
            })?;
            rec.check(format!("𝓕(1) = ψ_(()^r)_(p+1)(1), p = {p}, r = {r}"), || {
                let f = at1(&f_lgv(p, r)?);
                let s = at1(&psi_nested(&Matching::unit_chain(r), p + 1)?.tau_poly);
                Ok((f != s).then(|| format!("{f} vs {s}")))
            })?;
            rec.check(format!("𝓕 has non-negative coefficients and constant term 1, p = {p}, r = {r}"), || {
                let f = f_lgv(p, r)?;
                Ok((!f.has_nonnegative_coeffs() || f.coeff(0) != BigInt::one()).then(|| f.to_string()))
            })?;
        }
    }
    rec.check("𝓕 and the sum rule differ as polynomials at p = 0, r = 2", || {
        let f = f_lgv(0, 2)?;
        let s = psi_nested(&Matching::unit_chain(2), 1)?.tau_poly;
        Ok((f == s).then(|| format!("both are {f}")))
    })?;
    for p in 0..=l.p {
        for r in 1..=l.r.min(3) {
            rec.check(format!("𝓖 brute force = LGV = Σ_α ψ_(_pα), p = {p}, r = {r}"), || {
                let (b, g, s) = (g_bruteforce(p, r)?, g_lgv(p, r)?, sum_open(p, r)?);
                Ok((b != g || g != s).then(|| format!("{b} / {g} / {s}")))
            })?;
        }
    }
    for total in 0..=l.closed_form {
        rec.check(format!("𝓖(1) = product formula = ratio formula, p + r = {total}"), || {
            for p in 0..=total {
                let r = total - p;
                let g = at1(&g_lgv(p, r)?);
                let (k, s) = (g_kratt(p, r)?, g_sratio(p, r)?);
                if g != k || k != s {
                    return Ok(Some(format!("p = {p}, r = {r}: LGV {g}, product {k}, ratio {s}")));
                }
            }
            Ok(None)
        })?;
    }
    Ok(())
}

fn high_p(rec: &mut Recorder, l: &Limits) -> Result<()> {
    for r in 1..=l.r {
        rec.check(format!("large-p structure of ψ_(π)_p, every π with r = {r}"), || {
            for pi in enumerate_matchings(r)? {
                let y = pi.young().size();
                let rep = interpolate_in_n(&pi, y + 2)?;
                if !rep.holds() {
                    return Ok(Some(format!(
                        "{pi}: degrees n {:?}, τ {:?}, integral {}, leading {} vs {}",
                        rep.degree_n, rep.degree_tau, rep.integral, rep.leading, rep.expected_leading
                    )));
                }
            }
            Ok(None)
        })?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let limits = Limits {
            n: 3,
            p: 1,
            r: 2,
            closed_form: 4,
            trials: 3,
            seed: 1,
        };
        for s in Suite::EACH {
            let results = run_suite(s, &limits).unwrap();
            assert!(!results.is_empty());
            for r in results {
                assert!(r.passed, "{}: {} ({})", r.suite, r.property, r.detail);
            }
        }
    }
}
