//! Squeeze-transformation calculus for unimodular 2×2 matrices.
//!
//! The central objects are real unimodular 2×2 matrices (the ABCD matrices of
//! ray optics). Every such matrix is a squeeze-similarity transform of one of
//! four core matrices: a rotation, a hyperbolic (boost-like) matrix, or an
//! upper/lower triangular shear. This crate provides:
//!
//! - [`mat2`]: exact 2×2 real and complex matrix algebra, plus an independent
//!   scaling-and-squaring matrix exponential used as an oracle by everything else.
//! - [`conjugacy`]: classification into the four conjugacy classes, the
//!   squeeze-similarity decomposition, and N-th powers in time independent of N.
//! - [`twolevel`]: closed-form transition matrices for a two-level system with
//!   a magnetic coupling `h` and a dissipative coupling `g`, covering the
//!   rotational (`h > g`), hyperbolic (`g > h`) and parabolic (`g = ±h`)
//!   regimes, and parameter sweeps that cross between them.
//! - [`lorentz`]: light-cone coordinates, the boost-as-squeeze picture, and
//!   the six-generator rotation/squeeze algebra.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod conjugacy;
pub mod lorentz;
pub mod mat2;
pub mod twolevel;

mod error;

pub use error::Error;
