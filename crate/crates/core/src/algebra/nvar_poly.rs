//! Univariate polynomials in n with rational coefficients, and exact
//! interpolation.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NVarPoly {
    coeffs: Vec<BigRational>,
}

impl NVarPoly {
    pub fn zero() -> Self {
        NVarPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = NVarPoly { coeffs };
        while p.coeffs.last().is_some_and(|c| c.is_zero()) {
            p.coeffs.pop();
        }
        p
    }

    /// Integer coefficients, lowest power first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// The linear factor `n - root`.
    pub fn n_minus(root: i64) -> Self {
        Self::from_ints(&[-root, 1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> NVarPoly {
        NVarPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, n: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * n + c)
    }

    pub fn eval_int(&self, n: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl Add for &NVarPoly {
    type Output = NVarPoly;
    fn add(self, rhs: &NVarPoly) -> NVarPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        NVarPoly::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &NVarPoly {
    type Output = NVarPoly;
    fn sub(self, rhs: &NVarPoly) -> NVarPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        NVarPoly::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &NVarPoly {
    type Output = NVarPoly;
    fn mul(self, rhs: &NVarPoly) -> NVarPoly {
        if self.is_zero() || rhs.is_zero() {
            return NVarPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        NVarPoly::from_coeffs(out)
    }
}

impl Add for NVarPoly {
    type Output = NVarPoly;
    fn add(self, rhs: NVarPoly) -> NVarPoly {
        &self + &rhs
    }
}

impl Mul for NVarPoly {
    type Output = NVarPoly;
    fn mul(self, rhs: NVarPoly) -> NVarPoly {
        &self * &rhs
    }
}

impl fmt::Display for NVarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if k == 0 || !abs.is_one() {
                if abs.is_integer() {
                    write!(f, "{abs}")?;
                } else {
                    write!(f, "({abs})")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "n")?,
                _ => write!(f, "n^{k}")?,
            }
        }
        Ok(())
    }
}

/// A polynomial in n and τ, stored as one [`NVarPoly`] per power of τ.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NTauPoly {
    by_tau: Vec<NVarPoly>,
}

impl NTauPoly {
    pub fn zero() -> Self {
        NTauPoly { by_tau: Vec::new() }
    }

    /// `by_tau[k]` is the coefficient of τ^k.
    pub fn from_tau_coeffs(mut by_tau: Vec<NVarPoly>) -> Self {
        while by_tau.last().is_some_and(|p| p.is_zero()) {
            by_tau.pop();
        }
        NTauPoly { by_tau }
    }

    /// Builds `Σ c·τ^k·n^m` from `(k, m, c)` triples.
    pub fn from_terms(terms: &[(usize, usize, BigRational)]) -> Self {
        let mut by_tau: Vec<Vec<BigRational>> = Vec::new();
        for (k, m, c) in terms {
            if by_tau.len() <= *k {
                by_tau.resize(k + 1, Vec::new());
            }
            let row = &mut by_tau[*k];
            if row.len() <= *m {
                row.resize(m + 1, BigRational::zero());
            }
            row[*m] += c;
        }
        Self::from_tau_coeffs(by_tau.into_iter().map(NVarPoly::from_coeffs).collect())
    }

    /// A polynomial in n alone.
    pub fn from_n(p: NVarPoly) -> Self {
        Self::from_tau_coeffs(vec![p])
    }

    /// τ^k.
    pub fn tau_power(k: usize) -> Self {
        let mut by_tau = vec![NVarPoly::zero(); k];
        by_tau.push(NVarPoly::constant(BigRational::one()));
        NTauPoly { by_tau }
    }

    pub fn by_tau(&self) -> &[NVarPoly] {
        &self.by_tau
    }

    pub fn tau_coeff(&self, k: usize) -> NVarPoly {
        self.by_tau.get(k).cloned().unwrap_or_default()
    }

    pub fn tau_degree(&self) -> Option<usize> {
        self.by_tau.len().checked_sub(1)
    }

    /// Largest degree in n over all τ-coefficients.
    pub fn n_degree(&self) -> Option<usize> {
        self.by_tau.iter().filter_map(NVarPoly::degree).max()
    }

    pub fn is_zero(&self) -> bool {
        self.by_tau.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> NTauPoly {
        Self::from_tau_coeffs(self.by_tau.iter().map(|p| p.scale(c)).collect())
    }

    /// Specializes τ, leaving a polynomial in n.
    pub fn eval_tau(&self, tau: &BigRational) -> NVarPoly {
        self.by_tau
            .iter()
            .rev()
            .fold(NVarPoly::zero(), |acc, p| &acc.scale(tau) + p)
    }
}

impl Add for &NTauPoly {
    type Output = NTauPoly;
    fn add(self, rhs: &NTauPoly) -> NTauPoly {
        let len = self.by_tau.len().max(rhs.by_tau.len());
        NTauPoly::from_tau_coeffs((0..len).map(|k| &self.tau_coeff(k) + &rhs.tau_coeff(k)).collect())
    }
}

impl Mul for &NTauPoly {
    type Output = NTauPoly;
    fn mul(self, rhs: &NTauPoly) -> NTauPoly {
        if self.is_zero() || rhs.is_zero() {
            return NTauPoly::zero();
        }
        let mut out = vec![NVarPoly::zero(); self.by_tau.len() + rhs.by_tau.len() - 1];
        for (i, a) in self.by_tau.iter().enumerate() {
            for (j, b) in rhs.by_tau.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        NTauPoly::from_tau_coeffs(out)
    }
}

impl Mul for NTauPoly {
    type Output = NTauPoly;
    fn mul(self, rhs: NTauPoly) -> NTauPoly {
        &self * &rhs
    }
}

impl fmt::Display for NTauPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, p) in self.by_tau.iter().enumerate().rev() {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({p})")?,
                1 => write!(f, "({p})τ")?,
                _ => write!(f, "({p})τ^{k}")?,
            }
        }
        Ok(())
    }
}

/// The unique polynomial of degree < `points.len()` through `points`,
/// computed with Newton divided differences over ℚ.
pub fn interpolate_rational(points: &[(i64, BigRational)]) -> Result<NVarPoly> {
    let mut seen = HashSet::new();
    for (x, _) in points {
        if !seen.insert(*x) {
            return Err(Error::DuplicateAbscissa(*x));
        }
    }
    let m = points.len();
    let xs: Vec<BigRational> = points
        .iter()
        .map(|(x, _)| BigRational::from_integer(BigInt::from(*x)))
        .collect();
    let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..m {
        for i in (level..m).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner on the Newton form.
    let mut acc = NVarPoly::zero();
    for i in (0..m).rev() {
        let factor = NVarPoly::from_coeffs(vec![-xs[i].clone(), BigRational::one()]);
        acc = &(&acc * &factor) + &NVarPoly::constant(dd[i].clone());
    }
    Ok(acc)
}
