//! Periodic Temperley–Lieb action on link patterns and the τ = 1 ground
//! state of `H = -Σ_{i=1}^{2n} e_i`.
//!
//! The generator e_i joins the points i and i+1 (e_{2n} joins 2n and 1).
//! If they were already joined a closed loop appears and the image is the
//! same pattern times τ; otherwise their partners are joined to each other.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{kernel_vector, rational_string, Matrix, RationalMatrix, TauPoly, TauPolyMatrix};
use crate::combinatorics::{enumerate_matchings, Matching};
use crate::error::{Error, Result};
use crate::MATRIX_CAP;

/// Image of a link pattern under a product of generators: a single pattern
/// times `τ^tau_power`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TlResult {
    pub image: Matching,
    pub tau_power: u32,
}

/// Applies e_i (1 ≤ i ≤ 2n) to `pi`.
pub fn apply_e(pi: &Matching, i: usize) -> Result<TlResult> {
    let len = pi.len();
    if len == 0 || i == 0 || i > len {
        return Err(Error::ContractViolation(format!(
            "generator e_{i} does not act on {len} points"
        )));
    }
    let mut partners = pi.partners();
    let x = i - 1;
    let y = i % len;
    if partners[x] == y {
        return Ok(TlResult {
            image: pi.clone(),
            tau_power: 1,
        });
    }
    let (a, b) = (partners[x], partners[y]);
    partners[x] = y;
    partners[y] = x;
    partners[a] = b;
    partners[b] = a;
    Ok(TlResult {
        image: Matching::from_partners(&partners),
        tau_power: 0,
    })
}

/// Applies the word `e_{w_1} e_{w_2} ⋯ e_{w_k}` (rightmost acts first).
pub fn apply_word(pi: &Matching, word: &[usize]) -> Result<TlResult> {
    let mut cur = TlResult {
        image: pi.clone(),
        tau_power: 0,
    };
    for &i in word.iter().rev() {
        let step = apply_e(&cur.image, i)?;
        cur = TlResult {
            image: step.image,
            tau_power: cur.tau_power + step.tau_power,
        };
    }
    Ok(cur)
}

/// One failed relation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure {
    pub relation: String,
    pub pattern: Matching,
    pub lhs: TlResult,
    pub rhs: TlResult,
}

/// Checks e_i² = τ e_i, e_i e_{i±1} e_i = e_i and far commutativity on
/// every link pattern of size 2n, with indices taken modulo 2n.
///
/// For n = 1 both generators act on the same pair and only the quadratic
/// relation is meaningful.
pub fn check_tl_relations(n: usize) -> Result<Vec<RelationFailure>> {
    let patterns = enumerate_matchings(n)?;
    let len = 2 * n;
    let next = |i: usize, d: usize| (i - 1 + d) % len + 1;
    let mut relations: Vec<(String, Vec<usize>, Vec<usize>, u32)> = Vec::new();
    for i in 1..=len {
        relations.push((format!("e_{i}^2 = τ e_{i}"), vec![i, i], vec![i], 1));
        if n >= 2 {
            for j in [next(i, 1), next(i, len - 1)] {
                relations.push((format!("e_{i} e_{j} e_{i} = e_{i}"), vec![i, j, i], vec![i], 0));
            }
            for j in 1..=len {
                let d = (j + len - i) % len;
                if d >= 2 && d <= len - 2 {
                    relations.push((format!("e_{i} e_{j} = e_{j} e_{i}"), vec![i, j], vec![j, i], 0));
                }
            }
        }
    }
    let mut failures = Vec::new();
    for pi in &patterns {
        for (name, lhs_word, rhs_word, extra) in &relations {
            let lhs = apply_word(pi, lhs_word)?;
            let mut rhs = apply_word(pi, rhs_word)?;
            rhs.tau_power += extra;
            if lhs != rhs {
                failures.push(RelationFailure {
                    relation: name.clone(),
                    pattern: pi.clone(),
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(failures)
}

/// The matrix of e_i in the canonical basis (column π holds e_i π).
pub fn generator_matrix(n: usize, i: usize) -> Result<TauPolyMatrix> {
    check_matrix_cap(n)?;
    let basis = enumerate_matchings(n)?;
    let index: HashMap<&Matching, usize> = basis.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut out = TauPolyMatrix::zeros(basis.len(), basis.len());
    for (j, pi) in basis.iter().enumerate() {
        let r = apply_e(pi, i)?;
        out[(index[&r.image], j)] = TauPoly::monomial(BigInt::one(), r.tau_power as usize);
    }
    Ok(out)
}

/// The same relations as [`check_tl_relations`], checked as identities
/// between generator matrices over ℤ[τ]. Returns the failed relations.
pub fn check_tl_matrix_relations(n: usize) -> Result<Vec<String>> {
    let len = 2 * n;
    let gens = crate::par::map_range(len, |k| generator_matrix(n, k + 1))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let e = |i: usize| &gens[i - 1];
    let tau = TauPoly::tau();
    let mut failures = Vec::new();
    for i in 1..=len {
        if e(i).mul_matrix(e(i)) != e(i).map(|x| x * &tau) {
            failures.push(format!("e_{i}^2 = τ e_{i}"));
        }
        if n < 2 {
            continue;
        }
        for j in [i % len + 1, (i + len - 2) % len + 1] {
            if e(i).mul_matrix(e(j)).mul_matrix(e(i)) != *e(i) {
                failures.push(format!("e_{i} e_{j} e_{i} = e_{i}"));
            }
        }
        for j in i + 1..=len {
            let d = j - i;
            if d >= 2 && d <= len - 2 && e(i).mul_matrix(e(j)) != e(j).mul_matrix(e(i)) {
                failures.push(format!("e_{i} e_{j} = e_{j} e_{i}"));
            }
        }
    }
    Ok(failures)
}

fn check_matrix_cap(n: usize) -> Result<()> {
    if n > MATRIX_CAP {
        return Err(Error::ResourceCap {
            what: "n",
            value: n,
            cap: MATRIX_CAP,
        });
    }
    Ok(())
}

/// `H = -Σ e_i` in the canonical basis with entries in ℤ[τ]; column π holds
/// the image of π.
pub fn hamiltonian_symbolic(n: usize) -> Result<TauPolyMatrix> {
    check_matrix_cap(n)?;
    let basis = enumerate_matchings(n)?;
    let index: HashMap<&Matching, usize> = basis.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let columns: Vec<Result<Vec<TauPoly>>> = crate::par::map(&basis, |pi| {
        let mut col = vec![TauPoly::zero(); basis.len()];
        for i in 1..=2 * n {
            let r = apply_e(pi, i)?;
            col[index[&r.image]] -= &TauPoly::monomial(BigInt::one(), r.tau_power as usize);
        }
        Ok(col)
    });
    let columns = columns.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_fn(basis.len(), basis.len(), |i, j| columns[j][i].clone()))
}

/// `H` with τ specialized to a rational value.
pub fn hamiltonian_at(n: usize, tau: &BigRational) -> Result<RationalMatrix> {
    Ok(hamiltonian_symbolic(n)?.map(|x| x.eval(tau)))
}

/// Components of the τ = 1 ground state, normalized so that the fully
/// nested pattern has weight 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroundState {
    pub n: usize,
    pub components: Vec<Component>,
    #[serde(with = "rational_string")]
    pub sum: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub matching: Matching,
    #[serde(with = "rational_string")]
    pub value: BigRational,
}

impl GroundState {
    pub fn get(&self, pi: &Matching) -> Option<&BigRational> {
        self.components
            .iter()
            .find(|c| &c.matching == pi)
            .map(|c| &c.value)
    }
}

/// Solves `(H + 2n) ψ = 0` at τ = 1 exactly and checks the residual.
///
/// At τ = 1 the eigenvalue −2n is the bottom of the spectrum and
/// non-degenerate, so the kernel must be one-dimensional.
pub fn ground_state_tau1(n: usize) -> Result<GroundState> {
    if n == 0 {
        return Err(Error::ContractViolation("ground state needs n ≥ 1".into()));
    }
    let basis = enumerate_matchings(n)?;
    let h = hamiltonian_at(n, &BigRational::one())?;
    let shift = BigRational::from_integer(BigInt::from(2 * n));
    let shifted = Matrix::from_fn(h.rows(), h.cols(), |i, j| {
        if i == j {
            &h[(i, j)] + &shift
        } else {
            h[(i, j)].clone()
        }
    });
    let v = kernel_vector(&shifted)?;
    let nested = basis
        .iter()
        .position(|m| *m == Matching::fully_nested(n))
        .expect("nested pattern is enumerated");
    if v[nested].is_zero() {
        return Err(Error::OracleFailure(
            "ground state vanishes on the fully nested pattern".into(),
        ));
    }
    let norm = v[nested].clone();
    let psi: Vec<BigRational> = v.iter().map(|x| x / &norm).collect();

    let hv = h.mul_vec(&psi);
    for (k, (x, y)) in hv.iter().zip(&psi).enumerate() {
        if *x != -(&shift * y) {
            return Err(Error::OracleFailure(format!(
                "residual (H + 2n)ψ is non-zero at {}",
                basis[k]
            )));
        }
    }
    let sum = psi.iter().fold(BigRational::zero(), |acc, x| acc + x);
    Ok(GroundState {
        n,
        components: basis
            .into_iter()
            .zip(psi)
            .map(|(matching, value)| Component { matching, value })
            .collect(),
        sum,
    })
}
