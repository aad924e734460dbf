//! Univariate polynomials in τ with arbitrary-precision integer coefficients.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of ℤ[τ].
///
/// `coeffs[k]` is the coefficient of τ^k. Trailing zeros are never stored, so
/// the zero polynomial is the empty vector and equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TauPoly {
    coeffs: Vec<BigInt>,
}

impl TauPoly {
    pub fn zero() -> Self {
        TauPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The polynomial `τ`.
    pub fn tau() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · τ^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = TauPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of τ^k (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest power of τ with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn scale(&self, c: &BigInt) -> TauPoly {
        TauPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplication by τ^k.
    pub fn shift(&self, k: usize) -> TauPoly {
        if self.is_zero() {
            return TauPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TauPoly { coeffs }
    }

    pub fn pow(&self, k: u32) -> TauPoly {
        let mut acc = TauPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation at an integer.
    pub fn eval_int(&self, tau: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * tau + c)
    }

    /// Horner evaluation at a rational.
    pub fn eval(&self, tau: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * tau + BigRational::from_integer(c.clone())
            })
    }

    /// Exact quotient `self / divisor` in ℤ[τ], or `None` when the division
    /// leaves a remainder or needs non-integer coefficients.
    pub fn exact_div(&self, divisor: &TauPoly) -> Option<TauPoly> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(TauPoly::zero());
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let nd = rem.len() - 1;
        if nd < dd {
            return None;
        }
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(TauPoly::from_coeffs(quot))
        } else {
            None
        }
    }
}

/// The Chebyshev-type polynomial U_m in τ = −q − q⁻¹, i.e.
/// `(q^{m+1} − q^{−m−1}) / (q − q⁻¹)`.
///
/// `U_0 = 1`, `U_1 = −τ`, `U_{m+1} = −τ U_m − U_{m−1}`.
pub fn cheb_u(m: usize) -> TauPoly {
    let mut prev = TauPoly::zero();
    let mut cur = TauPoly::one();
    let minus_tau = -TauPoly::tau();
    for _ in 0..m {
        let next = &(&minus_tau * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

impl Zero for TauPoly {
    fn zero() -> Self {
        TauPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for TauPoly {
    fn one() -> Self {
        TauPoly::one()
    }
}

impl From<i64> for TauPoly {
    fn from(c: i64) -> Self {
        TauPoly::constant(BigInt::from(c))
    }
}

impl From<BigInt> for TauPoly {
    fn from(c: BigInt) -> Self {
        TauPoly::constant(c)
    }
}

impl<'a> Add<&'a TauPoly> for &'a TauPoly {
    type Output = TauPoly;
    fn add(self, rhs: &'a TauPoly) -> TauPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        TauPoly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a TauPoly> for &'a TauPoly {
    type Output = TauPoly;
    fn sub(self, rhs: &'a TauPoly) -> TauPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        TauPoly::from_coeffs(coeffs)
    }
}

impl<'a> Mul<&'a TauPoly> for &'a TauPoly {
    type Output = TauPoly;
    fn mul(self, rhs: &'a TauPoly) -> TauPoly {
        if self.is_zero() || rhs.is_zero() {
            return TauPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TauPoly::from_coeffs(coeffs)
    }
}

impl Neg for &TauPoly {
    type Output = TauPoly;
    fn neg(self) -> TauPoly {
        TauPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for TauPoly {
    type Output = TauPoly;
    fn neg(self) -> TauPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<TauPoly> for TauPoly {
            type Output = TauPoly;
            fn $m(self, rhs: TauPoly) -> TauPoly { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a TauPoly> for TauPoly {
            type Output = TauPoly;
            fn $m(self, rhs: &'a TauPoly) -> TauPoly { (&self).$m(rhs) }
        }
        impl<'a> $tr<TauPoly> for &'a TauPoly {
            type Output = TauPoly;
            fn $m(self, rhs: TauPoly) -> TauPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&TauPoly> for TauPoly {
    fn add_assign(&mut self, rhs: &TauPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, s) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += s;
        }
        self.trim();
    }
}

impl AddAssign for TauPoly {
    fn add_assign(&mut self, rhs: TauPoly) {
        *self += &rhs;
    }
}

impl SubAssign<&TauPoly> for TauPoly {
    fn sub_assign(&mut self, rhs: &TauPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, s) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        self.trim();
    }
}

impl Sum for TauPoly {
    fn sum<I: Iterator<Item = TauPoly>>(iter: I) -> TauPoly {
        iter.fold(TauPoly::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a TauPoly> for TauPoly {
    fn sum<I: Iterator<Item = &'a TauPoly>>(iter: I) -> TauPoly {
        iter.fold(TauPoly::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

/// Human-readable form, highest power first: `2τ^3 - τ + 1`.
impl fmt::Display for TauPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "τ")?,
                _ => write!(f, "τ^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TauPolyWire {
    var: String,
    coeffs: Vec<String>,
}

impl Serialize for TauPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TauPolyWire {
            var: "tau".to_string(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TauPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = TauPolyWire::deserialize(d)?;
        if wire.var != "tau" {
            return Err(D::Error::custom(format!(
                "expected var \"tau\", found {:?}",
                wire.var
            )));
        }
        let coeffs = wire
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TauPoly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tp(c: &[i64]) -> TauPoly {
        TauPoly::from_i64s(c)
    }

    #[test]
    fn cheb_u_small_values() {
        assert_eq!(cheb_u(0), tp(&[1]));
        assert_eq!(cheb_u(1), tp(&[0, -1]));
        assert_eq!(cheb_u(2), tp(&[-1, 0, 1]));
        assert_eq!(cheb_u(3), tp(&[0, 2, 0, -1]));
    }

    #[test]
    fn cheb_u_degree_is_m() {
        for m in 0..12 {
            assert_eq!(cheb_u(m).degree(), Some(m));
        }
    }

    #[test]
    fn cheb_u_at_one_has_period_six() {
        let one = BigInt::one();
        let pattern = [1, -1, 0, 1, -1, 0];
        for m in 0..=24 {
            assert_eq!(cheb_u(m).eval_int(&one), BigInt::from(pattern[m % 6]), "m={m}");
        }
    }

    #[test]
    fn trimming_and_zero() {
        assert!(tp(&[0, 0, 0]).is_zero());
        assert_eq!(tp(&[0, 0, 0]).degree(), None);
        assert_eq!((tp(&[1, 2]) - tp(&[1, 2])).coeffs().len(), 0);
    }

    #[test]
    fn exact_division() {
        let a = tp(&[1, 1]);
        let b = tp(&[-1, 0, 2]);
        assert_eq!((&a * &b).exact_div(&a), Some(b.clone()));
        assert_eq!(tp(&[1, 0, 1]).exact_div(&tp(&[1, 1])), None);
        assert_eq!(tp(&[1]).exact_div(&tp(&[2])), None);
        assert_eq!(TauPoly::zero().exact_div(&a), Some(TauPoly::zero()));
        assert_eq!(a.exact_div(&TauPoly::zero()), None);
    }

    #[test]
    fn display() {
        assert_eq!(tp(&[1, -1, 0, 2]).to_string(), "2τ^3 - τ + 1");
        assert_eq!(tp(&[0, -1]).to_string(), "-τ");
        assert_eq!(TauPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_wire_format() {
        let p = tp(&[0, 2]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"var":"tau","coeffs":["0","2"]}"#);
        let back: TauPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<TauPoly>(r#"{"var":"q","coeffs":[]}"#).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = TauPoly> {
        prop::collection::vec(-20i64..20, 0..5).prop_map(|c| TauPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), t in -5i64..5) {
            let t = BigInt::from(t);
            prop_assert_eq!((&a * &b).eval_int(&t), a.eval_int(&t) * b.eval_int(&t));
            prop_assert_eq!((&a + &b).eval_int(&t), a.eval_int(&t) + b.eval_int(&t));
        }
    }
}
