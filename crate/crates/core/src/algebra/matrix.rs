//! Dense exact matrices: determinants, unitriangular inverses and kernels.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::TauPoly;
use crate::error::{Error, Result};

/// Exact commutative ring operations needed by the generic routines.
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Send
    + Sync
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Send
        + Sync
        + for<'a> Add<&'a T, Output = T>
        + for<'a> Sub<&'a T, Output = T>
        + for<'a> Mul<&'a T, Output = T>
        + Neg<Output = T>
{
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RationalMatrix = Matrix<BigRational>;
pub type TauPolyMatrix = Matrix<TauPoly>;

impl<T> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &T)> {
        let cols = self.cols;
        self.data
            .iter()
            .enumerate()
            .map(move |(k, x)| ((k / cols, k % cols), x))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn mul_matrix(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let rows: Vec<Vec<T>> = crate::par::map_range(self.rows, |i| {
            (0..rhs.cols)
                .map(|j| {
                    let mut acc = T::zero();
                    for k in 0..self.cols {
                        let a = &self[(i, k)];
                        if a.is_zero() {
                            continue;
                        }
                        acc = acc + &(a.clone() * &rhs[(k, j)]);
                    }
                    acc
                })
                .collect()
        });
        Matrix::from_rows(rows)
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, x)| acc + &(a.clone() * x))
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .iter()
                .all(|((i, j), x)| if i == j { x.is_one() } else { x.is_zero() })
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.iter().all(|((i, j), x)| j <= i || x.is_zero())
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.iter().all(|((i, j), x)| j >= i || x.is_zero())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

fn require_square<T>(m: &Matrix<T>) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::ContractViolation(format!(
            "expected a square matrix, got {}x{}",
            m.rows, m.cols
        )))
    }
}

/// Determinant by Laplace expansion along the first row.
pub fn det_cofactor<T: Ring>(m: &Matrix<T>) -> Result<T> {
    require_square(m)?;
    let idx: Vec<usize> = (0..m.cols).collect();
    Ok(cofactor_rec(m, 0, &idx))
}

fn cofactor_rec<T: Ring>(m: &Matrix<T>, row: usize, cols: &[usize]) -> T {
    if cols.is_empty() {
        return T::one();
    }
    let mut acc = T::zero();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[(row, c)];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry.clone() * &cofactor_rec(m, row + 1, &rest);
        acc = if k % 2 == 0 { acc + &term } else { acc - &term };
    }
    acc
}

/// Fraction-free (Bareiss) elimination in ℤ[τ]. Every division is exact.
pub fn det_bareiss(m: &TauPolyMatrix) -> Result<TauPoly> {
    require_square(m)?;
    let n = m.rows;
    if n == 0 {
        return Ok(TauPoly::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = TauPoly::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return Ok(TauPoly::zero()),
            }
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&pivot * &a[(i, j)]) - &(&a[(i, k)] * &a[(k, j)]);
                a[(i, j)] = num.exact_div(&prev).ok_or_else(|| {
                    Error::Internal(format!("Bareiss step {k} left a remainder at ({i},{j})"))
                })?;
            }
            a[(i, k)] = TauPoly::zero();
        }
        prev = pivot;
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if negate { -d } else { d })
}

/// Determinant over ℤ[τ]: cofactor expansion up to 4×4, Bareiss beyond.
pub fn det_taupoly(m: &TauPolyMatrix) -> Result<TauPoly> {
    require_square(m)?;
    if m.rows <= 4 {
        det_cofactor(m)
    } else {
        det_bareiss(m)
    }
}

/// Inverse of a lower or upper triangular matrix with unit diagonal,
/// computed by substitution so that no division is needed.
pub fn unitriangular_inverse<T: Ring>(m: &Matrix<T>) -> Result<Matrix<T>> {
    require_square(m)?;
    let n = m.rows;
    for i in 0..n {
        if !m[(i, i)].is_one() {
            return Err(Error::ContractViolation(format!(
                "diagonal entry {i} is not 1"
            )));
        }
    }
    if m.is_lower_triangular() {
        Ok(lower_unit_inverse(m))
    } else if m.is_upper_triangular() {
        let t = Matrix::from_fn(n, n, |i, j| m[(j, i)].clone());
        let inv = lower_unit_inverse(&t);
        Ok(Matrix::from_fn(n, n, |i, j| inv[(j, i)].clone()))
    } else {
        Err(Error::ContractViolation(
            "matrix is neither lower nor upper triangular".into(),
        ))
    }
}

fn lower_unit_inverse<T: Ring>(m: &Matrix<T>) -> Matrix<T> {
    let n = m.rows;
    // Column j of the inverse solves L x = e_j; columns are independent.
    let columns: Vec<Vec<T>> = crate::par::map_range(n, |j| {
        let mut x = vec![T::zero(); n];
        x[j] = T::one();
        for i in j + 1..n {
            let mut acc = T::zero();
            for k in j..i {
                let l = &m[(i, k)];
                if !l.is_zero() && !x[k].is_zero() {
                    acc = acc + &(l.clone() * &x[k]);
                }
            }
            x[i] = -acc;
        }
        x
    });
    Matrix::from_fn(n, n, |i, j| columns[j][i].clone())
}

/// Reduced row echelon form over ℚ; returns the pivot columns.
fn rref(a: &mut RationalMatrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&i| !a[(i, col)].is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = a[(row, col)].recip();
        for j in col..a.cols {
            let v = &a[(row, j)] * &inv;
            a[(row, j)] = v;
        }
        for i in 0..a.rows {
            if i == row || a[(i, col)].is_zero() {
                continue;
            }
            let factor = a[(i, col)].clone();
            for j in col..a.cols {
                let v = &a[(i, j)] - &(&factor * &a[(row, j)]);
                a[(i, j)] = v;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(m: &RationalMatrix) -> usize {
    rref(&mut m.clone()).len()
}

/// A spanning vector of a one-dimensional kernel, by exact Gaussian
/// elimination. The free variable is set to 1.
pub fn kernel_vector(m: &RationalMatrix) -> Result<Vec<BigRational>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let nullity = a.cols - pivots.len();
    if nullity != 1 {
        return Err(Error::Rank { nullity });
    }
    let free = (0..a.cols)
        .find(|c| !pivots.contains(c))
        .expect("nullity 1 implies a free column");
    let mut v = vec![BigRational::zero(); a.cols];
    v[free] = BigRational::one();
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = -a[(r, free)].clone();
    }
    Ok(v)
}
