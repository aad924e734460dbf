//! Weighted non-intersecting lattice paths.
//!
//! Two families of r paths with unit steps E = (1, 0) and S = (0, −1), each
//! S step weighted by τ, ending on the diagonal y = x at L_1 < … < L_r:
//!
//! * 𝓕_{p,r}: path j starts at (j − p, 2j − 1), and L_1 = 1.
//! * 𝓖_{p,r}: path j starts at (j, p + 2j − 1), and L_1 ≥ 1.
//!
//! Each count is available by brute-force enumeration of vertex-disjoint
//! families, by the Lindström–Gessel–Viennot determinant sum, and by a
//! constant-term extraction. For 𝓖 at τ = 1 there are two closed forms.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{binomial, det_taupoly, factorial, format_rational, Matrix, TauPoly};
use crate::error::{Error, Result};
use crate::qkz::{psi_nested, sum_open, PhiIntegrand};
use crate::combinatorics::Matching;
use crate::BRUTE_FORCE_CAP;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::F => "F",
            Family::G => "G",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            _ => Err(Error::Parse {
                input: s.to_string(),
                position: 1,
                message: "expected F or G".into(),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Lgv,
    Ct,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::Lgv => "lgv",
            Method::Ct => "ct",
        })
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Method::Brute),
            "lgv" => Ok(Method::Lgv),
            "ct" => Ok(Method::Ct),
            _ => Err(Error::Parse {
                input: s.to_string(),
                position: 1,
                message: "expected brute, lgv or ct".into(),
            }),
        }
    }
}

type Point = (i64, i64);

/// One lattice path: start, end and its step word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub start: Point,
    pub end: Point,
    /// `true` for an S step.
    pub steps: Vec<bool>,
}

impl Path {
    pub fn south_steps(&self) -> usize {
        self.steps.iter().filter(|&&s| s).count()
    }

    pub fn points(&self) -> Vec<Point> {
        let mut cur = self.start;
        let mut out = vec![cur];
        for &s in &self.steps {
            cur = if s { (cur.0, cur.1 - 1) } else { (cur.0 + 1, cur.1) };
            out.push(cur);
        }
        out
    }
}

/// A vertex-disjoint family of paths and its weight τ^{#S}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFamily {
    pub paths: Vec<Path>,
    pub weight: TauPoly,
}

fn start_point(family: Family, p: usize, j: usize) -> Point {
    let (p, j) = (p as i64, j as i64);
    match family {
        Family::F => (j - p, 2 * j - 1),
        Family::G => (j, p + 2 * j - 1),
    }
}

/// Largest admissible end abscissa for path j.
fn end_bound(family: Family, p: usize, j: usize) -> i64 {
    match family {
        Family::F => 2 * j as i64 - 1,
        Family::G => (p + 2 * j) as i64 - 1,
    }
}

/// Strictly increasing end tuples, L_j ≤ bound_j, with L_1 = 1 for 𝓕.
fn end_tuples(family: Family, p: usize, r: usize) -> Vec<Vec<i64>> {
    fn rec(family: Family, p: usize, r: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let j = cur.len() + 1;
        if j > r {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().map_or(1, |&x| x + 1);
        let hi = if family == Family::F && j == 1 { 1 } else { end_bound(family, p, j) };
        for l in lo..=hi {
            cur.push(l);
            rec(family, p, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(family, p, r, &mut Vec::with_capacity(r), &mut out);
    out
}

fn check_brute_cap(p: usize, r: usize) -> Result<()> {
    if p + r > BRUTE_FORCE_CAP {
        return Err(Error::ResourceCap {
            what: "p + r",
            value: p + r,
            cap: BRUTE_FORCE_CAP,
        });
    }
    Ok(())
}

/// Depth-first search over vertex-disjoint families with fixed ends; calls
/// `visit` with the step words of every complete family.
fn search(
    starts: &[Point],
    ends: &[Point],
    used: &mut HashSet<Point>,
    words: &mut Vec<Vec<bool>>,
    visit: &mut dyn FnMut(&[Vec<bool>]),
) {
    let j = words.len();
    if j == starts.len() {
        visit(words);
        return;
    }
    let (start, end) = (starts[j], ends[j]);
    if end.0 < start.0 || end.1 > start.1 || used.contains(&start) {
        return;
    }
    used.insert(start);
    words.push(Vec::new());
    walk(start, end, starts, ends, used, words, visit);
    words.pop();
    used.remove(&start);
}

fn walk(
    cur: Point,
    end: Point,
    starts: &[Point],
    ends: &[Point],
    used: &mut HashSet<Point>,
    words: &mut Vec<Vec<bool>>,
    visit: &mut dyn FnMut(&[Vec<bool>]),
) {
    if cur == end {
        search(starts, ends, used, words, visit);
        return;
    }
    for south in [false, true] {
        let next = if south { (cur.0, cur.1 - 1) } else { (cur.0 + 1, cur.1) };
        if next.0 > end.0 || next.1 < end.1 || used.contains(&next) {
            continue;
        }
        used.insert(next);
        words.last_mut().expect("a path is being built").push(south);
        walk(next, end, starts, ends, used, words, visit);
        words.last_mut().expect("a path is being built").pop();
        used.remove(&next);
    }
}

/// Every vertex-disjoint family of the given type.
pub fn enumerate_families(family: Family, p: usize, r: usize) -> Result<Vec<PathFamily>> {
    check_brute_cap(p, r)?;
    let starts: Vec<Point> = (1..=r).map(|j| start_point(family, p, j)).collect();
    let mut out = Vec::new();
    for tuple in end_tuples(family, p, r) {
        let ends: Vec<Point> = tuple.iter().map(|&l| (l, l)).collect();
        let mut visit = |words: &[Vec<bool>]| {
            let paths: Vec<Path> = words
                .iter()
                .enumerate()
                .map(|(j, w)| Path {
                    start: starts[j],
                    end: ends[j],
                    steps: w.clone(),
                })
                .collect();
            let s = paths.iter().map(Path::south_steps).sum();
            out.push(PathFamily {
                paths,
                weight: TauPoly::monomial(BigInt::one(), s),
            });
        };
        search(&starts, &ends, &mut HashSet::new(), &mut Vec::new(), &mut visit);
    }
    Ok(out)
}

fn brute_count(family: Family, p: usize, r: usize) -> Result<TauPoly> {
    check_brute_cap(p, r)?;
    let starts: Vec<Point> = (1..=r).map(|j| start_point(family, p, j)).collect();
    let tuples = end_tuples(family, p, r);
    let partial = crate::par::map(&tuples, |tuple| {
        let ends: Vec<Point> = tuple.iter().map(|&l| (l, l)).collect();
        let mut counts: Vec<u64> = Vec::new();
        let mut visit = |words: &[Vec<bool>]| {
            let s: usize = words.iter().map(|w| w.iter().filter(|&&x| x).count()).sum();
            if counts.len() <= s {
                counts.resize(s + 1, 0);
            }
            counts[s] += 1;
        };
        search(&starts, &ends, &mut HashSet::new(), &mut Vec::new(), &mut visit);
        TauPoly::from_coeffs(counts.into_iter().map(BigInt::from).collect())
    });
    Ok(partial.into_iter().sum())
}

pub fn f_bruteforce(p: usize, r: usize) -> Result<TauPoly> {
    brute_count(Family::F, p, r)
}

pub fn g_bruteforce(p: usize, r: usize) -> Result<TauPoly> {
    brute_count(Family::G, p, r)
}

/// Weighted number of single paths from the start of path i to (L, L).
fn single_path(family: Family, p: usize, i: usize, l: i64) -> TauPoly {
    let (pi, ii) = (p as i64, i as i64);
    let south = match family {
        Family::F => 2 * ii - l - 1,
        Family::G => pi + 2 * ii - l - 1,
    };
    if south < 0 {
        return TauPoly::zero();
    }
    TauPoly::monomial(binomial(pi + ii - 1, south), south as usize)
}

fn lgv_count(family: Family, p: usize, r: usize) -> Result<TauPoly> {
    let tuples = end_tuples(family, p, r);
    let dets: Vec<Result<TauPoly>> = crate::par::map(&tuples, |tuple| {
        let m = Matrix::from_fn(r, r, |i, j| single_path(family, p, i + 1, tuple[j]));
        det_taupoly(&m)
    });
    dets.into_iter().sum()
}

/// `Σ_{1 = L_1 < … < L_r} det[τ^{2i−L_j−1} binom(p+i−1, 2i−L_j−1)]`.
pub fn f_lgv(p: usize, r: usize) -> Result<TauPoly> {
    lgv_count(Family::F, p, r)
}

/// `Σ_{1 ≤ L_1 < … < L_r} det[τ^{p+2i−L_j−1} binom(p+i−1, p+2i−L_j−1)]`.
pub fn g_lgv(p: usize, r: usize) -> Result<TauPoly> {
    lgv_count(Family::G, p, r)
}

/// 𝓕 as the coefficient of `∏ u_i^{2i−2}` in
/// `∏_i (1+τu_i)^p (1+u_i) ∏_{i<j} (u_j−u_i)(1+τu_j+u_iu_j)`.
pub fn f_ct(p: usize, r: usize) -> Result<TauPoly> {
    if r == 0 {
        return Ok(TauPoly::one());
    }
    let integrand = PhiIntegrand::for_size(r, 0);
    let target: Vec<u32> = (0..r).map(|l| 2 * l as u32).collect();
    Ok(integrand.extract(p, 1, &target))
}

/// 𝓖 through its constant-term form, i.e. [`sum_open`].
pub fn g_ct(p: usize, r: usize) -> Result<TauPoly> {
    if r == 0 {
        return Ok(TauPoly::one());
    }
    sum_open(p, r)
}

/// Dispatches on family and method.
pub fn count(family: Family, method: Method, p: usize, r: usize) -> Result<TauPoly> {
    match (family, method) {
        (Family::F, Method::Brute) => f_bruteforce(p, r),
        (Family::F, Method::Lgv) => f_lgv(p, r),
        (Family::F, Method::Ct) => f_ct(p, r),
        (Family::G, Method::Brute) => g_bruteforce(p, r),
        (Family::G, Method::Lgv) => g_lgv(p, r),
        (Family::G, Method::Ct) => g_ct(p, r),
    }
}

fn fact(n: usize) -> BigRational {
    BigRational::from_integer(factorial(n as u64))
}

/// 𝓖_{p,r} at τ = 1 as Krattenthaler's factorial product.
pub fn g_kratt(p: usize, r: usize) -> Result<BigInt> {
    let mut v = BigRational::one();
    let ratio = |i: usize| fact(3 * p + 3 * i + 1) / (fact(3 * p + 2 * i + 1) * fact(p + 2 * i));
    if r.is_multiple_of(2) {
        for i in 0..r {
            v *= ratio(i);
        }
        for i in 0..r / 2 {
            v *= fact(2 * p + 2 * i + 1) * fact(2 * i);
        }
    } else {
        v = BigRational::from_integer(BigInt::from(2).pow(p as u32));
        for i in 1..r {
            v *= ratio(i);
        }
        for i in 1..=(r - 1) / 2 {
            v *= fact(2 * p + 2 * i) * fact(2 * i - 1);
        }
    }
    integer(v, "product formula", p, r)
}

fn integer(v: BigRational, what: &str, p: usize, r: usize) -> Result<BigInt> {
    if !v.is_integer() {
        return Err(Error::FormulaViolation(format!(
            "{what} at p = {p}, r = {r} is {}, not an integer",
            format_rational(&v)
        )));
    }
    Ok(v.to_integer())
}

/// The rational function S(L, p) of the ratio formula.
pub fn s_function(l: i64, p: usize) -> Result<BigRational> {
    let l2 = BigInt::from(l * l);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let odd_sq = |j: i64| &l2 - BigInt::from((2 * j + 1) * (2 * j + 1));
    if p.is_multiple_of(2) {
        let h = (p / 2) as i64;
        for ell in 1..=h {
            for k in ell..=2 * ell - 1 {
                num *= &l2 - BigInt::from(4 * k * k);
            }
        }
        for ell in 0..h {
            den *= odd_sq(ell).pow((h - ell) as u32);
        }
    } else {
        let h = p.div_ceil(2) as i64;
        for ell in 1..=h {
            for k in ell..=2 * ell - 2 {
                num *= &l2 - BigInt::from(4 * k * k);
            }
        }
        for ell in 0..=(p as i64 - 3) / 2 {
            if p < 3 {
                break;
            }
            den *= odd_sq(ell).pow(((p as i64 - 1) / 2 - ell) as u32);
        }
    }
    if den.is_zero() {
        return Err(Error::FormulaViolation(format!("S({l}, {p}) has a zero denominator")));
    }
    Ok(BigRational::new(num, den))
}

/// `S(2(p+r), p) / S(2p, p)` exactly as displayed, which is a rational
/// number and in general not 𝓖_{p,r}.
pub fn s_ratio_raw(p: usize, r: usize) -> Result<BigRational> {
    let top = s_function(2 * (p + r) as i64, p)?;
    let bottom = s_function(2 * p as i64, p)?;
    if bottom.is_zero() {
        return Err(Error::FormulaViolation(format!("S({}, {p}) vanishes", 2 * p)));
    }
    Ok(top / bottom)
}

/// A_n = ∏_{j<n} (3j+1)!/(n+j)!, the number of n×n alternating sign
/// matrices and the full τ = 1 component sum at size 2n.
pub fn asm_number(n: usize) -> BigInt {
    let v = (0..n).fold(BigRational::one(), |acc, j| acc * fact(3 * j + 1) / fact(n + j));
    v.to_integer()
}

/// 𝓖_{p,r} at τ = 1 from the S-ratio, which gives the probability that p
/// consecutive points are pairwise disconnected, times the full sums:
/// `(A_{p+r} / A_p) · S(2(p+r), p) / S(2p, p)`.
pub fn g_sratio(p: usize, r: usize) -> Result<BigInt> {
    let asm = BigRational::new(asm_number(p + r), asm_number(p));
    integer(asm * s_ratio_raw(p, r)?, "ratio formula", p, r)
}

/// One computed count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub family: Family,
    pub p: usize,
    pub r: usize,
    pub method: Method,
    pub tau_poly: TauPoly,
    pub tau1: String,
}

impl CountReport {
    pub fn new(family: Family, method: Method, p: usize, r: usize) -> Result<Self> {
        let tau_poly = count(family, method, p, r)?;
        let tau1 = tau_poly.eval_int(&BigInt::one()).to_string();
        Ok(CountReport {
            family,
            p,
            r,
            method,
            tau_poly,
            tau1,
        })
    }
}

/// Runs every route for (p, r) and checks that they agree.
///
/// 𝓕 routes must agree as polynomials and match ψ_{(()^r)_{p+1}} at τ = 1;
/// 𝓖 routes must agree as polynomials and match both closed forms at τ = 1.
pub fn cross_check(p: usize, r: usize) -> Result<Vec<CountReport>> {
    let mut reports = Vec::new();
    for family in [Family::F, Family::G] {
        for method in [Method::Brute, Method::Lgv, Method::Ct] {
            reports.push(CountReport::new(family, method, p, r)?);
        }
    }
    let describe = |rs: &[CountReport]| {
        rs.iter()
            .map(|c| format!("{}/{}: {}", c.family, c.method, c.tau_poly))
            .collect::<Vec<_>>()
            .join("; ")
    };
    let (f, g) = reports.split_at(3);
    if f.iter().any(|c| c.tau_poly != f[0].tau_poly) || g.iter().any(|c| c.tau_poly != g[0].tau_poly) {
        return Err(Error::Discrepancy(format!("p = {p}, r = {r}: {}", describe(&reports))));
    }
    if r >= 1 {
        let psi = psi_nested(&Matching::unit_chain(r), p + 1)?
            .tau_poly
            .eval_int(&BigInt::one());
        if psi.to_string() != f[0].tau1 {
            return Err(Error::Discrepancy(format!(
                "p = {p}, r = {r}: 𝓕(1) = {} but ψ = {psi}",
                f[0].tau1
            )));
        }
    }
    let kratt = g_kratt(p, r)?;
    let sratio = g_sratio(p, r)?;
    if kratt.to_string() != g[0].tau1 || sratio != kratt {
        return Err(Error::Discrepancy(format!(
            "p = {p}, r = {r}: 𝓖(1) = {}, product {kratt}, ratio {sratio}",
            g[0].tau1
        )));
    }
    Ok(reports)
}
