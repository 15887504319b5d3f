//! Conjugacy classes of unimodular real 2×2 matrices.
//!
//! Every unimodular 2×2 matrix is a similarity transform of one of four core
//! matrices: a rotation `W(φ)`, a hyperbolic matrix `W(μ)`, or an upper/lower
//! shear `W(α)` / `W(β)`. For a matrix with equal diagonal entries the
//! similarity is a pure squeeze `S(η) = diag(e^{-η/2}, e^{η/2})`; a general
//! matrix needs an extra rotation conjugation in front. Since similarity
//! commutes with powers, `M^N = S W^N S^{-1}` and `W^N` is `W` with its
//! parameter multiplied by N, N-th powers cost O(1).

use std::f64::consts::PI;

use crate::mat2::RealMatrix2;
use crate::Error;

/// Determinant tolerance for the operations in this module.
const UNIMODULAR_TOL: f64 = 1e-9;

/// Width of the trace band around ±2 treated as parabolic/identity.
const TRACE_CLASS_TOL: f64 = 1e-9;

/// Normalized threshold below which an off-diagonal entry counts as zero.
const OFFDIAG_TOL: f64 = 1e-12;

/// Conjugacy class of a unimodular 2×2 matrix.
///
/// The class carries the core parameter and, for the unbounded classes, an
/// overall sign: a matrix with trace < -2 is -1 times a positive-trace core.
/// Elliptic matrices never need a sign since `-W(φ) = W(φ ± π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConjugacyClass {
    /// Rotation core `W(φ)`, trace in (-2, 2). `φ ∈ (-π, π]`, nonzero.
    Elliptic { phi: f64 },
    /// Hyperbolic core `W(μ)` with `μ > 0`; `sign` is the sign of the trace.
    Hyperbolic { mu: f64, sign: f64 },
    /// Upper shear `[[1, α], [0, 1]]` times `sign`.
    ParabolicUpper { alpha: f64, sign: f64 },
    /// Lower shear `[[1, 0], [β, 1]]` times `sign`.
    ParabolicLower { beta: f64, sign: f64 },
    Identity,
}

impl ConjugacyClass {
    pub fn tag(&self) -> &'static str {
        match self {
            ConjugacyClass::Elliptic { .. } => "Elliptic",
            ConjugacyClass::Hyperbolic { .. } => "Hyperbolic",
            ConjugacyClass::ParabolicUpper { .. } => "ParabolicUpper",
            ConjugacyClass::ParabolicLower { .. } => "ParabolicLower",
            ConjugacyClass::Identity => "Identity",
        }
    }

    /// Core parameter (φ, μ, α or β); 0 for the identity.
    pub fn parameter(&self) -> f64 {
        match *self {
            ConjugacyClass::Elliptic { phi } => phi,
            ConjugacyClass::Hyperbolic { mu, .. } => mu,
            ConjugacyClass::ParabolicUpper { alpha, .. } => alpha,
            ConjugacyClass::ParabolicLower { beta, .. } => beta,
            ConjugacyClass::Identity => 0.0,
        }
    }

    /// Overall sign σ; +1 for elliptic and identity.
    pub fn sign(&self) -> f64 {
        match *self {
            ConjugacyClass::Hyperbolic { sign, .. }
            | ConjugacyClass::ParabolicUpper { sign, .. }
            | ConjugacyClass::ParabolicLower { sign, .. } => sign,
            _ => 1.0,
        }
    }
}

/// Squeeze matrix `S(η) = diag(e^{-η/2}, e^{η/2})`; determinant 1 exactly.
pub fn squeeze(eta: f64) -> RealMatrix2 {
    assert!(eta.abs() <= 700.0, "squeeze rapidity would overflow");
    RealMatrix2::new((-eta / 2.0).exp(), 0.0, 0.0, (eta / 2.0).exp())
}

/// The core matrix `σ·W(parameter)` for a class value.
pub fn make_wigner(class: &ConjugacyClass) -> RealMatrix2 {
    match *class {
        ConjugacyClass::Elliptic { phi } => RealMatrix2::rotation(phi),
        ConjugacyClass::Hyperbolic { mu, sign } => {
            RealMatrix2::new(mu.cosh(), mu.sinh(), mu.sinh(), mu.cosh()).scale(sign)
        }
        ConjugacyClass::ParabolicUpper { alpha, sign } => {
            RealMatrix2::new(1.0, alpha, 0.0, 1.0).scale(sign)
        }
        ConjugacyClass::ParabolicLower { beta, sign } => {
            RealMatrix2::new(1.0, 0.0, beta, 1.0).scale(sign)
        }
        ConjugacyClass::Identity => RealMatrix2::identity(),
    }
}

/// Squeeze-similarity decomposition `M = R(θ)·S(η)·W·S(η)⁻¹·R(θ)⁻¹`.
///
/// θ = 0 whenever the input has equal diagonal entries (the pure squeeze
/// case); otherwise a rotation conjugation is prepended to equalize them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decomposition {
    pub eta: f64,
    pub theta: f64,
    pub core: ConjugacyClass,
}

impl Decomposition {
    pub fn reconstruct(&self) -> RealMatrix2 {
        let r = RealMatrix2::rotation(self.theta);
        let s = squeeze(self.eta);
        r * s * make_wigner(&self.core) * squeeze(-self.eta) * RealMatrix2::rotation(-self.theta)
    }
}

fn check_unimodular(m: &RealMatrix2) -> Result<(), Error> {
    let det = m.det();
    // det is quadratic in the entries, so its rounding floor scales with the
    // squared entry magnitude
    let scale = m.max_abs().max(1.0);
    if (det - 1.0).abs() > UNIMODULAR_TOL * scale * scale {
        return Err(Error::NotUnimodular { det });
    }
    Ok(())
}

/// Decomposes a unimodular matrix into rotation angle, squeeze rapidity and
/// conjugacy core.
///
/// The diagonal is first equalized by conjugating with `R(θ)`,
/// `θ = ½·atan2(d - a, b + c)`: the symmetric traceless part of the matrix
/// rotates at twice the angle under rotation conjugation, so this always
/// lands in the equal-diagonal case. The branch is then picked from the
/// trace and η read off the ratio of the off-diagonal entries.
pub fn decompose(m: &RealMatrix2) -> Result<Decomposition, Error> {
    check_unimodular(m)?;
    let scale = m.max_abs().max(1.0);

    let mut theta = if (m.a - m.d).abs() <= OFFDIAG_TOL * scale {
        0.0
    } else {
        0.5 * f64::atan2(m.d - m.a, m.b + m.c)
    };
    let mp = RealMatrix2::rotation(-theta) * *m * RealMatrix2::rotation(theta);

    let tau = m.trace();
    let aeq = 0.5 * (mp.a + mp.d);
    let (mut b, mut c) = (mp.b, mp.c);

    // A hyperbolic matrix whose off-diagonal sign opposes its trace sign is
    // σ·W(-μ); only a quarter-turn conjugation (not a squeeze) can flip the
    // orientation back to the μ > 0 representative.
    if tau.abs() > 2.0 + TRACE_CLASS_TOL && b * c > 0.0 && b.signum() != tau.signum() {
        theta += std::f64::consts::FRAC_PI_2;
        (b, c) = (-c, -b);
    }

    let (eta, core) = if tau.abs() < 2.0 - TRACE_CLASS_TOL {
        // Elliptic: b = -e^{-η} sin φ, c = e^{η} sin φ, so -bc = sin²φ.
        let prod = -b * c;
        if prod <= 0.0 || b.abs() < 1e-300 || c.abs() < 1e-300 {
            return Err(Error::DegenerateOffDiagonal);
        }
        let phi = f64::atan2(c.signum() * prod.sqrt(), aeq);
        (0.5 * (-c / b).ln(), ConjugacyClass::Elliptic { phi })
    } else if tau.abs() > 2.0 + TRACE_CLASS_TOL {
        // Hyperbolic: b = σ e^{-η} sinh μ, c = σ e^{η} sinh μ.
        if b * c <= 0.0 || b.abs() < 1e-300 || c.abs() < 1e-300 {
            return Err(Error::DegenerateOffDiagonal);
        }
        let mu = (tau.abs() / 2.0).acosh();
        let sign = tau.signum();
        (0.5 * (c / b).ln(), ConjugacyClass::Hyperbolic { mu, sign })
    } else {
        // Trace within tolerance of ±2: identity, -I, or a shear.
        let sign = tau.signum();
        let core = if b.abs() <= OFFDIAG_TOL * scale && c.abs() <= OFFDIAG_TOL * scale {
            if sign > 0.0 {
                ConjugacyClass::Identity
            } else {
                ConjugacyClass::Elliptic { phi: PI }
            }
        } else if b.abs() >= c.abs() {
            ConjugacyClass::ParabolicUpper {
                alpha: sign * b,
                sign,
            }
        } else {
            ConjugacyClass::ParabolicLower {
                beta: sign * c,
                sign,
            }
        };
        (0.0, core)
    };

    Ok(Decomposition { eta, theta, core })
}

/// Conjugacy class of a unimodular matrix.
pub fn classify(m: &RealMatrix2) -> Result<ConjugacyClass, Error> {
    decompose(m).map(|d| d.core)
}

/// `M^n` in time independent of `n`: decompose, scale the core parameter by
/// `n` (reducing the elliptic angle mod 2π), and reconstruct.
pub fn power(m: &RealMatrix2, n: u64) -> Result<RealMatrix2, Error> {
    let d = decompose(m)?;
    let nf = n as f64;
    let sign_pow = |sign: f64| if sign < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
    let core = match d.core {
        ConjugacyClass::Identity => ConjugacyClass::Identity,
        ConjugacyClass::Elliptic { phi } => {
            let mut total = (nf * phi).rem_euclid(2.0 * PI);
            if total > PI {
                total -= 2.0 * PI;
            }
            ConjugacyClass::Elliptic { phi: total }
        }
        ConjugacyClass::Hyperbolic { mu, sign } => {
            if n == 0 {
                ConjugacyClass::Identity
            } else {
                ConjugacyClass::Hyperbolic {
                    mu: nf * mu,
                    sign: sign_pow(sign),
                }
            }
        }
        ConjugacyClass::ParabolicUpper { alpha, sign } => {
            if n == 0 {
                ConjugacyClass::Identity
            } else {
                ConjugacyClass::ParabolicUpper {
                    alpha: nf * alpha,
                    sign: sign_pow(sign),
                }
            }
        }
        ConjugacyClass::ParabolicLower { beta, sign } => {
            if n == 0 {
                ConjugacyClass::Identity
            } else {
                ConjugacyClass::ParabolicLower {
                    beta: nf * beta,
                    sign: sign_pow(sign),
                }
            }
        }
    };
    Ok(Decomposition { core, ..d }.reconstruct())
}
