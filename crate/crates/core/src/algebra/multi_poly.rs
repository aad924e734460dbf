//! Sparse multivariate polynomials in u_1..u_r with ℤ[τ] coefficients.
//!
//! Products are truncated by per-variable degree caps. Coefficient
//! extraction only ever asks for exponents at or below the caps, and every
//! factor has non-negative exponents, so truncation never changes an
//! extracted coefficient.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::TauPoly;

pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, TauPoly>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: TauPoly) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, TauPoly::one())
    }

    /// The variable u_{i+1} (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, TauPoly::one());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, TauPoly)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &TauPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e: Exponents, c: TauPoly) {
        assert_eq!(e.len(), self.nvars, "exponent vector has the wrong length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &TauPoly) -> MultiPoly {
        MultiPoly::from_terms(self.nvars, self.terms.iter().map(|(e, x)| (e.clone(), x * c)))
    }

    /// Product with every term exceeding `caps` in some variable dropped.
    pub fn mul_capped(&self, other: &MultiPoly, caps: &[u32]) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        assert_eq!(caps.len(), self.nvars, "caps must have one entry per variable");
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            if !within(ea, caps) {
                continue;
            }
            'inner: for (eb, cb) in &other.terms {
                let mut e = Vec::with_capacity(self.nvars);
                for ((x, y), cap) in ea.iter().zip(eb).zip(caps) {
                    let s = x + y;
                    if s > *cap {
                        continue 'inner;
                    }
                    e.push(s);
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Coefficient of the monomial with exponents `e` (zero if absent).
    pub fn coefficient_of(&self, e: &[u32]) -> TauPoly {
        self.terms.get(e).cloned().unwrap_or_default()
    }
}

fn within(e: &[u32], caps: &[u32]) -> bool {
    e.iter().zip(caps).all(|(x, c)| x <= c)
}

/// `(1 + τu_i)^p` (or `(1 + u_i)^p` without the τ weight) truncated at
/// `cap`, as a polynomial in `nvars` variables.
pub fn binomial_power(nvars: usize, i: usize, tau_weight: bool, p: u32, cap: u32) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars);
    let mut binom = BigInt::from(1);
    for k in 0..=p.min(cap) {
        let mut e = vec![0; nvars];
        e[i] = k;
        let c = if tau_weight {
            TauPoly::monomial(binom.clone(), k as usize)
        } else {
            TauPoly::constant(binom.clone())
        };
        out.add_term(e, c);
        binom = binom * BigInt::from(p - k) / BigInt::from(k + 1);
    }
    out
}

/// Capped product, the free-function form used by the rest of the crate.
pub fn mp_mul(a: &MultiPoly, b: &MultiPoly, caps: &[u32]) -> MultiPoly {
    a.mul_capped(b, caps)
}

pub fn coefficient_of(p: &MultiPoly, e: &[u32]) -> TauPoly {
    p.coefficient_of(e)
}
