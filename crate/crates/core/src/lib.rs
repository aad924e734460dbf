//! Exact computations for the O(τ) loop model on a cylinder of even
//! circumference.
//!
//! The crate computes the homogeneous ground-state components ψ_π of the
//! polynomial solution of the quantum Knizhnik–Zamolodchikov system as
//! polynomials in the loop weight τ, and checks them against three
//! independent routes:
//!
//! * the exact τ = 1 Perron–Frobenius eigenvector of `H = -Σ e_i`
//!   ([`loop_model`]),
//! * the a-basis constant-term formulas ([`qkz`]),
//! * weighted non-intersecting lattice-path counts and their closed forms
//!   ([`nilp`]).
//!
//! All arithmetic is exact: arbitrary precision integers, reduced rationals
//! and polynomials over them ([`algebra`]).

pub mod algebra;
pub mod combinatorics;
pub mod error;
pub mod loop_model;
pub mod nilp;
pub mod par;
pub mod qkz;
pub mod verify;

pub use error::{Error, ErrorKind, Result};

/// Largest half-size accepted by [`combinatorics::enumerate_matchings`].
pub const ENUMERATION_CAP: usize = 12;

/// Largest half-size for which full c_n × c_n matrices are assembled.
pub const MATRIX_CAP: usize = 8;

/// Largest `p + r` accepted by the brute-force path enumerators.
pub const BRUTE_FORCE_CAP: usize = 9;
