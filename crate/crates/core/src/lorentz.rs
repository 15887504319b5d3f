//! Minkowski four-vectors, light-cone coordinates, boosts as squeezes, and
//! the six-generator rotation/squeeze algebra.
//!
//! In light-cone coordinates `u = z + t`, `v = z - t` a boost along `z` acts
//! diagonally, stretching `u` by `e^{η/2}` and shrinking `v` by `e^{-η/2}`,
//! so `uv = z² - t²` is preserved by construction. Rotating back to `(z, t)`
//! gives the familiar cosh/sinh form of the Lorentz transformation.

use num_complex::Complex64;

use crate::mat2::ComplexMatrix2;

/// Space-time event in natural units (c = 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub t: f64,
}

impl FourVector {
    pub fn new(x: f64, y: f64, z: f64, t: f64) -> Self {
        assert!(x.is_finite() && y.is_finite() && z.is_finite() && t.is_finite());
        Self { x, y, z, t }
    }

    /// Minkowski invariant `x² + y² + z² - t²`.
    pub fn minkowski_norm(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z - self.t * self.t
    }

    /// Boost along z by rapidity η; x and y pass through unchanged.
    pub fn boost_z(&self, eta: f64) -> Self {
        let (z, t) = boost_zt(self.z, self.t, eta);
        Self { z, t, ..*self }
    }
}

/// Event in light-cone coordinates `u = z + t`, `v = z - t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LightConeEvent {
    pub u: f64,
    pub v: f64,
}

pub fn to_lightcone(z: f64, t: f64) -> LightConeEvent {
    LightConeEvent { u: z + t, v: z - t }
}

pub fn from_lightcone(e: &LightConeEvent) -> (f64, f64) {
    ((e.u + e.v) / 2.0, (e.u - e.v) / 2.0)
}

/// Boost in light-cone coordinates: the pure squeeze
/// `(u, v) → (e^{η/2}·u, e^{-η/2}·v)`.
pub fn boost_lightcone(e: &LightConeEvent, eta: f64) -> LightConeEvent {
    assert!(eta.abs() <= 700.0);
    LightConeEvent {
        u: (eta / 2.0).exp() * e.u,
        v: (-eta / 2.0).exp() * e.v,
    }
}

/// Boost in `(z, t)` coordinates:
/// `(z, t) → (z·cosh(η/2) + t·sinh(η/2), z·sinh(η/2) + t·cosh(η/2))`.
pub fn boost_zt(z: f64, t: f64, eta: f64) -> (f64, f64) {
    assert!(eta.abs() <= 700.0);
    let ch = (eta / 2.0).cosh();
    let sh = (eta / 2.0).sinh();
    // fused multiply-adds keep the rounding error at large rapidity down
    (f64::mul_add(z, ch, t * sh), f64::mul_add(z, sh, t * ch))
}

/// The three rotation generators `S_i` (Hermitian) and three squeeze
/// generators `K_i` (anti-Hermitian), all traceless, all with the ½
/// prefactor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSet {
    pub s1: ComplexMatrix2,
    pub s2: ComplexMatrix2,
    pub s3: ComplexMatrix2,
    pub k1: ComplexMatrix2,
    pub k2: ComplexMatrix2,
    pub k3: ComplexMatrix2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorId {
    S1,
    S2,
    S3,
    K1,
    K2,
    K3,
}

fn half(re00: f64, im00: f64, re01: f64, im01: f64, re10: f64, im10: f64) -> ComplexMatrix2 {
    // traceless: e11 = -e00
    ComplexMatrix2::new(
        Complex64::new(re00 / 2.0, im00 / 2.0),
        Complex64::new(re01 / 2.0, im01 / 2.0),
        Complex64::new(re10 / 2.0, im10 / 2.0),
        Complex64::new(-re00 / 2.0, -im00 / 2.0),
    )
}

/// The six generators.
pub fn generators() -> GeneratorSet {
    GeneratorSet {
        s1: half(0.0, 0.0, 1.0, 0.0, 1.0, 0.0),
        s2: half(0.0, 0.0, 0.0, -1.0, 0.0, 1.0),
        s3: half(1.0, 0.0, 0.0, 0.0, 0.0, 0.0),
        k1: half(0.0, 0.0, 0.0, 1.0, 0.0, 1.0),
        k2: half(0.0, 0.0, 1.0, 0.0, -1.0, 0.0),
        k3: half(0.0, 1.0, 0.0, 0.0, 0.0, 0.0),
    }
}

impl GeneratorSet {
    pub fn get(&self, id: GeneratorId) -> ComplexMatrix2 {
        match id {
            GeneratorId::S1 => self.s1,
            GeneratorId::S2 => self.s2,
            GeneratorId::S3 => self.s3,
            GeneratorId::K1 => self.k1,
            GeneratorId::K2 => self.k2,
            GeneratorId::K3 => self.k3,
        }
    }
}

/// `exp(-i·parameter·G)` via the matrix-exponential oracle.
///
/// With this convention `K_3` generates the real squeeze
/// `diag(e^{η/2}, e^{-η/2})` for positive parameter and `S_2` generates a
/// real rotation (by half the parameter, from the ½ prefactor).
pub fn exp_generator(which: GeneratorId, parameter: f64) -> ComplexMatrix2 {
    assert!(parameter.abs() <= 700.0);
    generators()
        .get(which)
        .scale(Complex64::new(0.0, -parameter))
        .expm(1.0)
}
