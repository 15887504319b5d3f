use thiserror::Error;

/// Domain errors shared across the crate.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Error {
    /// The matrix determinant is too far from 1 for conjugacy operations.
    #[error("NotUnimodular: determinant {det} differs from 1 beyond tolerance")]
    NotUnimodular { det: f64 },

    /// An elliptic/hyperbolic decomposition was requested but an off-diagonal
    /// entry vanished, leaving the squeeze rapidity undefined. The matrix
    /// should be treated as parabolic or identity instead.
    #[error("DegenerateOffDiagonal: off-diagonal entry vanishes, squeeze rapidity undefined")]
    DegenerateOffDiagonal,

    /// Both couplings of the two-level Hamiltonian are zero; the regime
    /// rapidity is a 0/0 and the caller must special-case this.
    #[error("BothCouplingsZero: h and g are both zero")]
    BothCouplingsZero,
}
