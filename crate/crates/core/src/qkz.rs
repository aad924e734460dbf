//! Homogeneous ground-state components from the a-basis.
//!
//! The components ψ_π are recovered from the basis Φ_a of constant-term
//! integrals through the unitriangular change of basis `C_{a,π}`:
//! `Φ_a = Σ_π C_{a,π} Ψ_π` and `Ψ_π = Σ_a C̃_{π,a} Φ_a`. The homogeneous
//! limit φ of Φ is a single coefficient extraction ([`phi`]).
//!
//! Components of nested patterns (π)_p use the same C̃ as π, with the
//! extra factor ∏(1+τu_l)^p in the integrand ([`psi_nested`]).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    binomial, cheb_u, factorial, interpolate_rational, unitriangular_inverse, Matrix, MultiPoly,
    NTauPoly, TauPoly, TauPolyMatrix,
};
use crate::combinatorics::{enumerate_matchings, strict_sequences, ASequence, Matching, YoungDiagram};
use crate::error::{Error, Result};
use crate::MATRIX_CAP;

/// Which little arch the coefficient recursion removes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArchChoice {
    Leftmost,
    Rightmost,
}

/// `C_{a,π}` by little-arch removal, always taking the leftmost arch.
///
/// `a` may be weakly increasing.
pub fn coeff_c(a: &ASequence, pi: &Matching) -> Result<TauPoly> {
    coeff_c_with(a, pi, ArchChoice::Leftmost)
}

pub fn coeff_c_with(a: &ASequence, pi: &Matching, choice: ArchChoice) -> Result<TauPoly> {
    if a.len() != pi.n() {
        return Err(Error::ContractViolation(format!(
            "sequence {a} has length {} but {pi} has size {}",
            a.len(),
            pi.len()
        )));
    }
    let mut entries = a.entries().to_vec();
    let mut pi = pi.clone();
    let mut acc = TauPoly::one();
    while pi.n() > 0 {
        let arches = pi.little_arches();
        let i = match choice {
            ArchChoice::Leftmost => arches[0],
            ArchChoice::Rightmost => *arches.last().expect("non-empty matching has a little arch"),
        };
        let k = entries.iter().filter(|&&x| x == i).count();
        if k == 0 {
            return Ok(TauPoly::zero());
        }
        let mut next = Vec::with_capacity(entries.len() - 1);
        next.extend(entries.iter().copied().filter(|&x| x < i));
        next.extend(std::iter::repeat_n(i - 1, k - 1));
        next.extend(entries.iter().copied().filter(|&x| x > i).map(|x| x - 2));
        // Φ_a vanishes when a_1 = 0.
        if next.first() == Some(&0) {
            return Ok(TauPoly::zero());
        }
        ASequence::weak(next.clone()).map_err(|e| {
            Error::Internal(format!("coefficient recursion left the sequence space: {e}"))
        })?;
        acc = &acc * &cheb_u(k - 1);
        entries = next;
        pi = pi.remove_little_arch(i)?;
    }
    Ok(acc)
}

/// `C_{a,π}` as a product over the arches (r, s) of π of `U_k`, with
/// `k = #{a_i : r ≤ a_i < s} − (s − r + 1)/2`; zero if some k is negative.
pub fn coeff_c_product(a: &ASequence, pi: &Matching) -> Result<TauPoly> {
    if a.len() != pi.n() {
        return Err(Error::ContractViolation(format!(
            "sequence {a} has length {} but {pi} has size {}",
            a.len(),
            pi.len()
        )));
    }
    let mut acc = TauPoly::one();
    for (r, s) in pi.arches() {
        let inside = a.entries().iter().filter(|&&x| r <= x && x < s).count() as i64;
        let k = inside - (s - r).div_ceil(2) as i64;
        if k < 0 {
            return Ok(TauPoly::zero());
        }
        acc = &acc * &cheb_u(k as usize);
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Rows a, columns π: `Φ_a = Σ_π C_{a,π} Ψ_π`.
    C,
    /// Rows π, columns a: `Ψ_π = Σ_a C̃_{π,a} Φ_a`.
    CTilde,
}

/// One of the two change-of-basis matrices, with labels in canonical order.
/// The k-th sequence is the opening sequence of the k-th matching.
#[derive(Clone, Debug)]
pub struct CoeffMatrix {
    pub n: usize,
    pub direction: Direction,
    pub sequences: Vec<ASequence>,
    pub matchings: Vec<Matching>,
    pub entries: TauPolyMatrix,
}

fn check_cap(n: usize) -> Result<()> {
    if n > MATRIX_CAP {
        return Err(Error::ResourceCap {
            what: "n",
            value: n,
            cap: MATRIX_CAP,
        });
    }
    Ok(())
}

pub fn matrix_c(n: usize) -> Result<CoeffMatrix> {
    check_cap(n)?;
    let matchings = enumerate_matchings(n)?;
    let sequences: Vec<ASequence> = matchings.iter().map(Matching::openings).collect();
    let rows: Vec<Result<Vec<TauPoly>>> = crate::par::map(&sequences, |a| {
        matchings.iter().map(|pi| coeff_c(a, pi)).collect()
    });
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(CoeffMatrix {
        n,
        direction: Direction::C,
        sequences,
        matchings,
        entries: Matrix::from_rows(rows),
    })
}

pub fn matrix_ctilde(n: usize) -> Result<CoeffMatrix> {
    let c = matrix_c(n)?;
    let inv = unitriangular_inverse(&c.entries)?;
    Ok(CoeffMatrix {
        direction: Direction::CTilde,
        entries: inv,
        ..c
    })
}

/// C̃ for size r, computed once per process.
fn ctilde_cached(r: usize) -> Result<Arc<CoeffMatrix>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CoeffMatrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().expect("cache lock").get(&r) {
        return Ok(Arc::clone(m));
    }
    let m = Arc::new(matrix_ctilde(r)?);
    let mut guard = cache.lock().expect("cache lock");
    Ok(Arc::clone(guard.entry(r).or_insert(m)))
}

/// The pairwise part `∏_{l<m} (u_m − u_l)(1 + τu_m + u_l u_m)` of the
/// integrand, truncated at fixed per-variable caps, so that φ for many
/// sequences needs a single expansion.
#[derive(Clone, Debug)]
pub struct PhiIntegrand {
    caps: Vec<u32>,
    pairwise: MultiPoly,
}

impl PhiIntegrand {
    pub fn new(caps: Vec<u32>) -> Self {
        let r = caps.len();
        let mut pairwise = MultiPoly::one(r);
        for m in 0..r {
            for l in 0..m {
                let mut e = vec![0; r];
                let mut factor = MultiPoly::zero(r);
                e[m] = 1;
                factor.add_term(e.clone(), TauPoly::one());
                e[m] = 0;
                e[l] = 1;
                factor.add_term(e.clone(), -TauPoly::one());
                let mut weight = MultiPoly::one(r);
                e[l] = 0;
                e[m] = 1;
                weight.add_term(e.clone(), TauPoly::tau());
                e[l] = 1;
                weight.add_term(e, TauPoly::one());
                pairwise = pairwise.mul_capped(&factor, &caps).mul_capped(&weight, &caps);
            }
        }
        PhiIntegrand { caps, pairwise }
    }

    /// Caps large enough for every relative sequence with `c_i ≤ 2i − 1 + extra`.
    pub fn for_size(r: usize, extra: usize) -> Self {
        Self::new((0..r).map(|l| (2 * l + extra) as u32).collect())
    }

    pub fn r(&self) -> usize {
        self.caps.len()
    }

    /// Coefficient of `∏ u_l^{c_l − 1}` in `∏_l (1 + τu_l)^p` times the
    /// pairwise product.
    pub fn phi(&self, p: usize, c: &[usize]) -> Result<TauPoly> {
        if c.len() != self.r() {
            return Err(Error::ContractViolation(format!(
                "sequence of length {} for an integrand in {} variables",
                c.len(),
                self.r()
            )));
        }
        let mut target = Vec::with_capacity(c.len());
        for (l, &x) in c.iter().enumerate() {
            if x == 0 {
                return Err(Error::InvalidSequence(format!("entry c_{} = 0", l + 1)));
            }
            if (x - 1) as u32 > self.caps[l] {
                return Err(Error::ContractViolation(format!(
                    "entry c_{} = {x} exceeds the integrand cap",
                    l + 1
                )));
            }
            target.push((x - 1) as u32);
        }
        Ok(self.extract(p, 0, &target))
    }

    /// Coefficient of `∏ u_l^{target_l}` in
    /// `∏_l (1 + τu_l)^{p_tau} (1 + u_l)^{p_plain}` times the pairwise product.
    /// Targets must not exceed the caps.
    pub fn extract(&self, p_tau: usize, p_plain: usize, target: &[u32]) -> TauPoly {
        assert!(
            target.iter().zip(&self.caps).all(|(t, c)| t <= c),
            "extraction target above the integrand caps"
        );
        // coefficient of u^d in (1 + τu)^{p_tau} (1 + u)^{p_plain}
        let single = |d: i64| -> TauPoly {
            (0..=d)
                .map(|k| {
                    TauPoly::monomial(
                        binomial(p_tau as i64, k) * binomial(p_plain as i64, d - k),
                        k as usize,
                    )
                })
                .sum()
        };
        let max = target.iter().copied().max().unwrap_or(0) as i64;
        let table: Vec<TauPoly> = (0..=max).map(single).collect();
        let mut acc = TauPoly::zero();
        'terms: for (e, coeff) in self.pairwise.terms() {
            let mut term = coeff.clone();
            for (&have, &want) in e.iter().zip(target) {
                if have > want {
                    continue 'terms;
                }
                let factor = &table[(want - have) as usize];
                if factor.is_zero() {
                    continue 'terms;
                }
                term = &term * factor;
            }
            acc += &term;
        }
        acc
    }
}

/// φ for the sequence `(1, …, p, p+c_1, …, p+c_r)`.
pub fn phi(p: usize, c: &[usize]) -> Result<TauPoly> {
    let caps = c
        .iter()
        .map(|&x| x.checked_sub(1).map(|v| v as u32))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::InvalidSequence("entries of c must be positive".into()))?;
    PhiIntegrand::new(caps).phi(p, c)
}

/// A component ψ_{(π)_p} as a polynomial in τ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiValue {
    pub pattern: Matching,
    pub p: usize,
    pub n: usize,
    pub tau_poly: TauPoly,
}

impl PsiValue {
    /// The full pattern (π)_p of size 2n.
    pub fn full_pattern(&self) -> Matching {
        self.pattern.nest(self.p)
    }
}

/// φ(p, a) for every strict sequence a of size r, in canonical order.
fn phi_row(r: usize, p: usize) -> Result<Vec<TauPoly>> {
    let integrand = PhiIntegrand::for_size(r, 0);
    let seqs = strict_sequences(r);
    crate::par::map(&seqs, |a| integrand.phi(p, a.entries()))
        .into_iter()
        .collect()
}

/// ψ_{(π)_p} for every π of size 2r, in canonical order.
pub fn psi_nested_all(r: usize, p: usize) -> Result<Vec<PsiValue>> {
    let ct = ctilde_cached(r)?;
    let phis = phi_row(r, p)?;
    let values = crate::par::map_range(ct.matchings.len(), |row| {
        ct.entries
            .row(row)
            .iter()
            .zip(&phis)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, f)| c * f)
            .sum::<TauPoly>()
    });
    Ok(ct
        .matchings
        .iter()
        .zip(values)
        .map(|(pi, v)| PsiValue {
            pattern: pi.clone(),
            p,
            n: r + p,
            tau_poly: v,
        })
        .collect())
}

/// ψ_{(π)_p} = Σ_a C̃_{π,a} φ(p, a).
pub fn psi_nested(pi: &Matching, p: usize) -> Result<PsiValue> {
    let r = pi.n();
    let ct = ctilde_cached(r)?;
    let row = ct
        .matchings
        .iter()
        .position(|m| m == pi)
        .expect("every matching of size 2r is enumerated");
    let integrand = PhiIntegrand::for_size(r, 0);
    let terms: Vec<(usize, &TauPoly)> = ct
        .entries
        .row(row)
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let parts: Vec<Result<TauPoly>> = crate::par::map(&terms, |(k, c)| {
        Ok(*c * &integrand.phi(p, ct.sequences[*k].entries())?)
    });
    let value = parts.into_iter().sum::<Result<TauPoly>>()?;
    Ok(PsiValue {
        pattern: pi.clone(),
        p,
        n: r + p,
        tau_poly: value,
    })
}

/// ψ_π for a pattern of size 2n.
pub fn psi(pi: &Matching) -> Result<PsiValue> {
    psi_nested(pi, 0)
}

/// Both sides of `Σ_π τ^{o_π} ψ_{(π)_p} = ψ_{(()^r)_{p+1}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumRule {
    pub lhs: TauPoly,
    pub rhs: TauPoly,
    pub equal: bool,
}

pub fn sum_rule(r: usize, p: usize) -> Result<SumRule> {
    if r == 0 {
        return Err(Error::ContractViolation("sum rule needs r ≥ 1".into()));
    }
    let lhs = psi_nested_all(r, p)?
        .iter()
        .map(|v| v.tau_poly.shift(v.pattern.even_openings()))
        .sum::<TauPoly>();
    let rhs = psi_nested(&Matching::unit_chain(r), p + 1)?.tau_poly;
    let equal = lhs == rhs;
    Ok(SumRule { lhs, rhs, equal })
}

/// Absolute sequences `a_1 < … < a_r` with `p < a_i ≤ 2p + 2i − 1` and
/// `a_{i+1} ≠ a_i + 1` whenever `a_i` is even.
pub fn open_sequences(p: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, p: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i > r {
            out.push(cur.clone());
            return;
        }
        let lo = match cur.last() {
            None => p + 1,
            Some(&x) if x % 2 == 0 => x + 2,
            Some(&x) => x + 1,
        };
        for a in lo..=2 * p + 2 * i - 1 {
            cur.push(a);
            rec(i + 1, p, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, p, r, &mut Vec::with_capacity(r), &mut out);
    out
}

/// `Σ_α ψ_{(_p α}`: the sum of all components of size 2(p + r) whose first
/// p points open, computed as a sum of φ over [`open_sequences`].
pub fn sum_open(p: usize, r: usize) -> Result<TauPoly> {
    if r == 0 {
        return Err(Error::ContractViolation("sum_open needs r ≥ 1".into()));
    }
    let integrand = PhiIntegrand::for_size(r, p);
    let seqs = open_sequences(p, r);
    crate::par::map(&seqs, |a| {
        let c: Vec<usize> = a.iter().map(|x| x - p).collect();
        integrand.phi(p, &c)
    })
    .into_iter()
    .sum()
}

/// ψ_{(π)_p} as an exact polynomial in n = r + p and τ, with the checks
/// of the large-p structure theorem.
#[derive(Clone, Debug)]
pub struct HighPReport {
    pub pattern: Matching,
    pub young: YoungDiagram,
    pub poly: NTauPoly,
    pub degree_n: Option<usize>,
    pub degree_tau: Option<usize>,
    /// Whether `|Y|!·P` has integer coefficients.
    pub integral: bool,
    /// Coefficient of `n^{|Y|} τ^{|Y|}`.
    pub leading: BigRational,
    /// `dim(Y)/|Y|!`.
    pub expected_leading: BigRational,
}

impl HighPReport {
    pub fn holds(&self) -> bool {
        let y = self.young.size();
        self.degree_n.unwrap_or(0) == y
            && self.degree_tau.unwrap_or(0) == y
            && self.integral
            && self.leading == self.expected_leading
    }
}

/// Interpolates ψ_{(π)_p}, sampled at p = 0..=p_max, in n = r + p.
///
/// Needs `p_max ≥ |Y_π|`; with `p_max > |Y_π|` a degree above |Y_π| is
/// detected and reported as a theorem violation.
pub fn interpolate_in_n(pi: &Matching, p_max: usize) -> Result<HighPReport> {
    let young = pi.young();
    let y = young.size();
    // One sample beyond |Y| + 1 so that the degree bound is a real check.
    if p_max <= y {
        return Err(Error::ContractViolation(format!(
            "p_max = {p_max} gives too few samples to test degree |Y| = {y}; use at least {}",
            y + 1
        )));
    }
    let r = pi.n();
    let samples: Vec<Result<TauPoly>> =
        crate::par::map_range(p_max + 1, |p| Ok(psi_nested(pi, p)?.tau_poly));
    let samples = samples.into_iter().collect::<Result<Vec<_>>>()?;
    let top = samples.iter().filter_map(TauPoly::degree).max();
    let by_tau = match top {
        None => Vec::new(),
        Some(d) => (0..=d)
            .map(|k| {
                let pts: Vec<(i64, BigRational)> = samples
                    .iter()
                    .enumerate()
                    .map(|(p, v)| ((r + p) as i64, BigRational::from_integer(v.coeff(k))))
                    .collect();
                interpolate_rational(&pts)
            })
            .collect::<Result<Vec<_>>>()?,
    };
    let poly = NTauPoly::from_tau_coeffs(by_tau);
    let degree_n = poly.n_degree();
    if degree_n.is_some_and(|d| d > y) {
        return Err(Error::TheoremViolation(format!(
            "ψ_(({pi}))_p has degree {} in n, above |Y| = {y}",
            degree_n.unwrap()
        )));
    }
    let fact = BigRational::from_integer(factorial(y as u64));
    let integral = poly
        .by_tau()
        .iter()
        .all(|p| p.scale(&fact).is_integral());
    let leading = poly.tau_coeff(y).coeff(y);
    let expected_leading = BigRational::new(BigInt::from(young.dim()), factorial(y as u64));
    Ok(HighPReport {
        pattern: pi.clone(),
        young,
        degree_tau: poly.tau_degree(),
        degree_n,
        poly,
        integral,
        leading,
        expected_leading,
    })
}

/// Both sides of the antisymmetrization identity at a point.
///
/// Left: `Σ_j (τ+2u_j) ∏_i (1−u_j u_i) ∏_{i≠j} (1+u_i(τ+u_j))
/// / [∏_{i≠j} (u_j−u_i) ∏_i (τ+u_i+u_j)]`; right: `(−1)^{r−1}(1 − ∏ u_i²)`.
/// Errors at a pole.
pub fn zeileq_sides(tau: &BigRational, u: &[BigRational]) -> Result<(BigRational, BigRational)> {
    let r = u.len();
    if r == 0 {
        return Err(Error::ContractViolation("identity needs r ≥ 1".into()));
    }
    let one = BigRational::one();
    let mut lhs = BigRational::zero();
    for j in 0..r {
        let mut num = tau + &u[j] * BigInt::from(2);
        let mut den = BigRational::one();
        for i in 0..r {
            num *= &one - &u[j] * &u[i];
            den *= tau + &u[i] + &u[j];
            if i != j {
                num *= &one + &u[i] * (tau + &u[j]);
                den *= &u[j] - &u[i];
            }
        }
        if den.is_zero() {
            return Err(Error::ContractViolation(format!(
                "evaluation point τ = {tau}, u = {u:?} is a pole"
            )));
        }
        lhs += num / den;
    }
    let prod = u.iter().fold(BigRational::one(), |acc, x| acc * x * x);
    let mut rhs = &one - &prod;
    if r.is_multiple_of(2) {
        rhs = -rhs;
    }
    Ok((lhs, rhs))
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-30..=30);
    let den: i64 = rng.gen_range(1..=12);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn is_pole(tau: &BigRational, u: &[BigRational]) -> bool {
    u.iter().enumerate().any(|(i, a)| {
        u.iter().enumerate().any(|(j, b)| {
            (i != j && a == b) || (tau + a + b).is_zero()
        })
    })
}

/// Checks the identity at `trials` random rational points away from the
/// poles, drawn from a generator seeded with `seed`.
pub fn verify_zeileq(r: usize, trials: usize, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (r as u64).wrapping_mul(0x9e37_79b9));
    for _ in 0..trials {
        let (tau, u) = loop {
            let tau = random_rational(&mut rng);
            let u: Vec<BigRational> = (0..r).map(|_| random_rational(&mut rng)).collect();
            if !is_pole(&tau, &u) {
                break (tau, u);
            }
        };
        let (lhs, rhs) = zeileq_sides(&tau, &u)?;
        if lhs != rhs {
            let us: Vec<String> = u.iter().map(ToString::to_string).collect();
            return Err(Error::IdentityFailure {
                witness: format!(
                    "r = {r}, τ = {tau}, u = ({}): left {lhs}, right {rhs}",
                    us.join(", ")
                ),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Matching {
        Matching::parse(s).unwrap()
    }

    fn t(c: &[i64]) -> TauPoly {
        TauPoly::from_i64s(c)
    }

    fn strict(a: &[usize]) -> ASequence {
        ASequence::strict(a.to_vec()).unwrap()
    }

    fn qi(a: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(a))
    }

    #[test]
    fn coefficient_worked_example() {
        let a = strict(&[1, 3, 5, 6, 7]);
        let pi = m("((()(())))");
        assert_eq!(coeff_c(&a, &pi).unwrap(), t(&[0, -1]));
        assert_eq!(coeff_c_product(&a, &pi).unwrap(), t(&[0, -1]));
        assert_eq!(coeff_c_with(&a, &pi, ArchChoice::Rightmost).unwrap(), t(&[0, -1]));
    }

    #[test]
    fn coefficient_diagonal_and_zero_cases() {
        for pi in enumerate_matchings(4).unwrap() {
            assert_eq!(coeff_c(&pi.openings(), &pi).unwrap(), TauPoly::one());
        }
        assert!(coeff_c(&strict(&[1, 3]), &m("(())")).unwrap().is_zero());
        assert!(coeff_c_product(&strict(&[1, 3]), &m("(())")).unwrap().is_zero());
        assert!(coeff_c(&strict(&[1, 2]), &m("()()")).unwrap().is_zero());
    }

    #[test]
    fn recursion_reaching_a_zero_entry_vanishes() {
        // the first step gives (1,1) on ()(), then (0) on ()
        let a = strict(&[1, 2, 3]);
        assert!(coeff_c(&a, &m("(())()")).unwrap().is_zero());
        assert!(coeff_c_product(&a, &m("(())()")).unwrap().is_zero());
    }

    #[test]
    fn small_matrices() {
        let c1 = matrix_c(1).unwrap();
        assert_eq!(c1.entries, TauPolyMatrix::identity(1));
        let c2 = matrix_c(2).unwrap();
        assert_eq!(c2.entries, TauPolyMatrix::identity(2));
        for n in 1..=5 {
            let c = matrix_c(n).unwrap();
            let ct = matrix_ctilde(n).unwrap();
            assert!(c.entries.mul_matrix(&ct.entries).is_identity(), "n={n}");
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(0, &[1, 2]).unwrap(), t(&[1]));
        assert_eq!(phi(1, &[1, 3]).unwrap(), t(&[0, 2]));
        for p in 0..5 {
            assert_eq!(phi(p, &[1]).unwrap(), t(&[1]));
        }
        assert!(phi(0, &[0]).is_err());
    }

    #[test]
    fn phi_cached_integrand_agrees_with_direct() {
        let integrand = PhiIntegrand::for_size(3, 2);
        for c in [[1, 2, 3], [1, 3, 5], [2, 4, 7], [1, 5, 6]] {
            for p in 0..3 {
                assert_eq!(integrand.phi(p, &c).unwrap(), phi(p, &c).unwrap());
            }
        }
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&m("(())")).unwrap().tau_poly, t(&[1]));
        assert_eq!(psi(&m("()()")).unwrap().tau_poly, t(&[0, 1]));
        assert_eq!(psi_nested(&m("()()"), 1).unwrap().tau_poly, t(&[0, 2]));
        assert_eq!(psi_nested(&m("()()()"), 0).unwrap().tau_poly, t(&[0, 1, 0, 1]));
        let all = psi_nested_all(3, 2).unwrap();
        for v in &all {
            assert_eq!(psi_nested(&v.pattern, 2).unwrap(), *v);
        }
    }

    #[test]
    fn psi_json_round_trip() {
        let v = psi_nested(&m("()()"), 2).unwrap();
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(
            text,
            r#"{"pattern":"()()","p":2,"n":4,"tau_poly":{"var":"tau","coeffs":["0","3"]}}"#
        );
        assert_eq!(serde_json::from_str::<PsiValue>(&text).unwrap(), v);
    }

    #[test]
    fn sum_rule_examples() {
        let s = sum_rule(2, 0).unwrap();
        assert_eq!(s.lhs, t(&[0, 2]));
        assert!(s.equal);
        assert!(sum_rule(1, 0).unwrap().equal);
        assert!(sum_rule(3, 2).unwrap().equal);
    }

    #[test]
    fn sum_open_examples() {
        assert_eq!(open_sequences(0, 2), vec![vec![1, 2], vec![1, 3]]);
        assert_eq!(sum_open(0, 2).unwrap(), t(&[1, 1]));
        assert_eq!(sum_open(1, 1).unwrap(), t(&[1, 1]));
        assert_eq!(sum_open(1, 2).unwrap().eval(&qi(1)), qi(7));
    }

    #[test]
    fn sum_open_at_p0_is_total_sum() {
        for r in 1..=4 {
            let total: TauPoly = psi_nested_all(r, 0).unwrap().into_iter().map(|v| v.tau_poly).sum();
            assert_eq!(sum_open(0, r).unwrap(), total, "r={r}");
        }
    }

    #[test]
    fn interpolation_examples() {
        let rep = interpolate_in_n(&m("()()"), 3).unwrap();
        assert_eq!(rep.poly, NTauPoly::from_terms(&[(1, 1, qi(1)), (1, 0, qi(-1))]));
        assert!(rep.holds());
        let rep = interpolate_in_n(&m("(())()"), 4).unwrap();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let expected = NTauPoly::from_n(&crate::algebra::NVarPoly::n_minus(2) * &crate::algebra::NVarPoly::n_minus(1))
            .scale(&half);
        assert_eq!(rep.poly, &expected * &NTauPoly::tau_power(2));
        assert!(rep.holds());
        let rep = interpolate_in_n(&m("()()()"), 5).unwrap();
        assert_eq!(rep.leading, BigRational::new(BigInt::from(2), BigInt::from(6)));
        assert!(rep.holds());
        assert!(interpolate_in_n(&m("()()()"), 3).is_err());
    }

    #[test]
    fn zeileq_witness_and_trials() {
        let (l, r) = zeileq_sides(&qi(0), &[qi(1), qi(2)]).unwrap();
        assert_eq!((l, r), (qi(3), qi(3)));
        for r in 1..=4 {
            verify_zeileq(r, 5, 7).unwrap();
        }
        assert!(zeileq_sides(&qi(0), &[qi(1), qi(1)]).is_err());
    }

    #[test]
    fn zeileq_fails_without_the_exclusion() {
        // dropping i ≠ j from the numerator factor breaks r = 1
        let (tau, u) = (qi(1), qi(2));
        let broken = (&tau + &u * BigInt::from(2)) * (qi(1) - &u * &u) * (qi(1) + &u * (&tau + &u))
            / (&tau + &u + &u);
        assert_ne!(broken, qi(1) - &u * &u);
    }
}
