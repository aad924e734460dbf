//! Exact arithmetic substrate: ℤ[τ], sparse multivariate polynomials over
//! ℤ[τ], rational polynomials in n, and dense exact linear algebra.

mod matrix;
mod multi_poly;
mod nvar_poly;
mod tau_poly;

pub use matrix::{
    det_bareiss, det_cofactor, det_taupoly, kernel_vector, rank, unitriangular_inverse, Matrix,
    RationalMatrix, Ring, TauPolyMatrix,
};
pub use multi_poly::{binomial_power, coefficient_of, mp_mul, Exponents, MultiPoly};
pub use nvar_poly::{interpolate_rational, NTauPoly, NVarPoly};
pub use tau_poly::{cheb_u, TauPoly};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Formats a rational as `"p"` or `"p/q"`.
pub fn format_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"p"` or `"p/q"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = |message: &str| Error::Parse {
        input: s.to_string(),
        position: 1,
        message: message.to_string(),
    };
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad("invalid numerator"))?;
    let den: BigInt = den.parse().map_err(|_| bad("invalid denominator"))?;
    if den == BigInt::from(0) {
        return Err(bad("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// Serde adapter storing a rational as its `"p/q"` string.
pub mod rational_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}

/// `binom(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for s in ["0", "7", "-3/4", "10/4"] {
            let x = parse_rational(s).unwrap();
            assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
        }
        assert_eq!(format_rational(&parse_rational("10/4").unwrap()), "5/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, -1), BigInt::from(0));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(10), BigInt::from(3628800));
    }
}
