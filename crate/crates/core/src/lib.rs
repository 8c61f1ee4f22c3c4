//! Exact computation of quantum SO(3) invariants of rational homology
//! 3-spheres built from lens spaces and diagonal surgery presentations,
//! together with their unified refinements in cyclotomic completion rings.
//!
//! Everything is computed over exact arithmetic: arbitrary-precision
//! rationals with controlled denominators, sparse Laurent polynomials in a
//! formal fractional power of q, and power-basis cyclotomic quotients. There
//! is no floating point anywhere; every identity the crate checks is an
//! exact equality in a cyclotomic ring.
//!
//! Module map:
//! - [`cyclo`]: Laurent/cyclotomic arithmetic, Gauss sums, Galois action.
//! - [`qkit`]: balanced q-combinatorics, the cyclotomic expansion basis
//!   A(n,k), and recovery of expansion coefficients from colored Jones
//!   tables by exact triangular solve.
//! - [`wrt`]: brute-force quantum invariants from surgery presentations,
//!   closed lens-space formulas with Dedekind sums and Jacobi symbols, and
//!   linking-grading arithmetic.
//! - [`habiro`]: finite models of cyclotomic completions: sector elements,
//!   Frobenius maps, Newton-lifted roots of q, and Taylor jets at roots of
//!   unity.
//! - [`laplace`]: the Laplace transform, the sector sums S and Q, and the
//!   specialized Andrews identity verification.
//! - [`unify`]: unified invariants of lens spaces and diagonal manifolds,
//!   their evaluation against the quantum invariants, and Ohtsuki-type
//!   congruences of Taylor coefficients.
//! - [`suites`]: the verification grids run by the CLI and the acceptance
//!   test suite.

pub mod cyclo;
pub mod error;
pub mod laurent;
pub mod scalar;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use scalar::Rat;
