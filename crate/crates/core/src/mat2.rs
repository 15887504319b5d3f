//! 2×2 real and complex matrices with an independent matrix-exponential oracle.
//!
//! Everything here is plain double-precision arithmetic over immutable values.
//! The exponential deliberately uses scaling-and-squaring with a Taylor series
//! rather than eigendecomposition, so it stays valid for defective (parabolic)
//! generators where the eigenvectors degenerate.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::Error;

/// Taylor terms stop once they fall below this fraction of the running
/// maximum entry of the partial sum.
const EXPM_TERM_TOL: f64 = 1e-18;

/// Determinant tolerance for the unimodular constructor.
const UNIMODULAR_CONSTRUCT_TOL: f64 = 1e-12;

/// Real 2×2 matrix `[[a, b], [c, d]]`, the ABCD / transition-matrix carrier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealMatrix2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl RealMatrix2 {
    /// Builds a matrix from row-major entries. Panics on non-finite input.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        assert!(
            a.is_finite() && b.is_finite() && c.is_finite() && d.is_finite(),
            "RealMatrix2 entries must be finite"
        );
        Self { a, b, c, d }
    }

    /// Builds a matrix and checks `|det - 1| <= 1e-12`.
    pub fn unimodular(a: f64, b: f64, c: f64, d: f64) -> Result<Self, Error> {
        let m = Self::new(a, b, c, d);
        let det = m.det();
        if (det - 1.0).abs() > UNIMODULAR_CONSTRUCT_TOL {
            return Err(Error::NotUnimodular { det });
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Self::new(1.0, 0.0, 0.0, 1.0)
    }

    pub fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0, 0.0)
    }

    /// Counterclockwise rotation `[[cos φ, -sin φ], [sin φ, cos φ]]`.
    pub fn rotation(phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        Self::new(c, -s, s, c)
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    /// Inverse of a unimodular matrix: `[[d, -b], [-c, a]]`.
    pub fn unimodular_inverse(&self) -> Self {
        Self::new(self.d, -self.b, -self.c, self.a)
    }

    pub fn max_abs(&self) -> f64 {
        self.a
            .abs()
            .max(self.b.abs())
            .max(self.c.abs())
            .max(self.d.abs())
    }

    /// Elementwise max |x - y|.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.a - other.a)
            .abs()
            .max((self.b - other.b).abs())
            .max((self.c - other.c).abs())
            .max((self.d - other.d).abs())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    /// `exp(scale · self)` via the scaling-and-squaring oracle.
    ///
    /// Real inputs stay exactly real through the complex path, so this is a
    /// thin wrapper over [`ComplexMatrix2::expm`].
    pub fn expm(&self, scale: f64) -> Self {
        let e = ComplexMatrix2::from_real(self).expm(scale);
        Self {
            a: e.e00.re,
            b: e.e01.re,
            c: e.e10.re,
            d: e.e11.re,
        }
    }
}

impl Mul for RealMatrix2 {
    type Output = RealMatrix2;

    fn mul(self, rhs: RealMatrix2) -> RealMatrix2 {
        RealMatrix2 {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }
}

/// Complex 2×2 matrix, row-major `[[e00, e01], [e10, e11]]`.
///
/// Houses the rotation/squeeze generators and the two-level Hamiltonians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix2 {
    pub e00: Complex64,
    pub e01: Complex64,
    pub e10: Complex64,
    pub e11: Complex64,
}

impl ComplexMatrix2 {
    pub fn new(e00: Complex64, e01: Complex64, e10: Complex64, e11: Complex64) -> Self {
        for e in [e00, e01, e10, e11] {
            assert!(
                e.re.is_finite() && e.im.is_finite(),
                "ComplexMatrix2 entries must be finite"
            );
        }
        Self { e00, e01, e10, e11 }
    }

    pub fn from_real(m: &RealMatrix2) -> Self {
        Self::new(m.a.into(), m.b.into(), m.c.into(), m.d.into())
    }

    pub fn identity() -> Self {
        Self::new(1.0.into(), 0.0.into(), 0.0.into(), 1.0.into())
    }

    pub fn zero() -> Self {
        Self::new(0.0.into(), 0.0.into(), 0.0.into(), 0.0.into())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            e00: self.e00 * s,
            e01: self.e01 * s,
            e10: self.e10 * s,
            e11: self.e11 * s,
        }
    }

    pub fn trace(&self) -> Complex64 {
        self.e00 + self.e11
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.e00
            .norm()
            .max(self.e01.norm())
            .max(self.e10.norm())
            .max(self.e11.norm())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.e00 - other.e00)
            .norm()
            .max((self.e01 - other.e01).norm())
            .max((self.e10 - other.e10).norm())
            .max((self.e11 - other.e11).norm())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self {
            e00: self.e00.conj(),
            e01: self.e10.conj(),
            e10: self.e01.conj(),
            e11: self.e11.conj(),
        }
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    /// `exp(scale · self)` by scaling-and-squaring.
    ///
    /// The scaled matrix is halved until its largest entry magnitude is below
    /// 0.5, the Taylor series is summed until terms drop below 1e-18 of the
    /// running maximum entry, then the result is squared back. Deterministic.
    pub fn expm(&self, scale: f64) -> Self {
        let b = self.scale(Complex64::new(scale, 0.0));
        let mut squarings = 0u32;
        let mut norm = b.max_abs();
        while norm >= 0.5 && squarings < 2048 {
            norm *= 0.5;
            squarings += 1;
        }
        let bs = b.scale(Complex64::new(0.5f64.powi(squarings as i32), 0.0));

        let mut sum = Self::identity();
        let mut term = Self::identity();
        let mut running_max = sum.max_abs();
        for n in 1..200u32 {
            term = term * bs;
            term = term.scale(Complex64::new(1.0 / f64::from(n), 0.0));
            sum = sum + term;
            running_max = running_max.max(sum.max_abs());
            if term.max_abs() < EXPM_TERM_TOL * running_max {
                break;
            }
        }
        for _ in 0..squarings {
            sum = sum * sum;
        }
        sum
    }
}

impl Add for ComplexMatrix2 {
    type Output = ComplexMatrix2;

    fn add(self, rhs: ComplexMatrix2) -> ComplexMatrix2 {
        ComplexMatrix2 {
            e00: self.e00 + rhs.e00,
            e01: self.e01 + rhs.e01,
            e10: self.e10 + rhs.e10,
            e11: self.e11 + rhs.e11,
        }
    }
}

impl Sub for ComplexMatrix2 {
    type Output = ComplexMatrix2;

    fn sub(self, rhs: ComplexMatrix2) -> ComplexMatrix2 {
        ComplexMatrix2 {
            e00: self.e00 - rhs.e00,
            e01: self.e01 - rhs.e01,
            e10: self.e10 - rhs.e10,
            e11: self.e11 - rhs.e11,
        }
    }
}

impl Mul for ComplexMatrix2 {
    type Output = ComplexMatrix2;

    fn mul(self, rhs: ComplexMatrix2) -> ComplexMatrix2 {
        ComplexMatrix2 {
            e00: self.e00 * rhs.e00 + self.e01 * rhs.e10,
            e01: self.e00 * rhs.e01 + self.e01 * rhs.e11,
            e10: self.e10 * rhs.e00 + self.e11 * rhs.e10,
            e11: self.e10 * rhs.e01 + self.e11 * rhs.e11,
        }
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_2, PI};

    use proptest::prelude::*;

    use super::*;

    #[test]
    fn identity_times_matrix_is_matrix() {
        let m = RealMatrix2::new(1.5, -0.3, 2.0, 0.7);
        let p = RealMatrix2::identity() * m;
        assert_eq!(p, m);
    }

    #[test]
    fn inverse_pair_multiplies_to_identity() {
        let x = RealMatrix2::new(2.0, 0.0, 0.0, 0.5);
        let y = RealMatrix2::new(0.5, 0.0, 0.0, 2.0);
        assert!((x * y).max_abs_diff(&RealMatrix2::identity()) == 0.0);
    }

    #[test]
    fn rotations_compose_by_angle_addition() {
        let p = RealMatrix2::rotation(0.3) * RealMatrix2::rotation(0.4);
        let expected = RealMatrix2::rotation(0.7);
        assert!(p.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(RealMatrix2::identity().det(), 1.0);
        assert!((RealMatrix2::rotation(1.234).det() - 1.0).abs() < 1e-15);
        assert_eq!(RealMatrix2::new(1.0, 2.5, 0.0, 1.0).det(), 1.0);
    }

    #[test]
    fn expm_of_zero_is_identity() {
        let e = RealMatrix2::zero().expm(3.7);
        assert_eq!(e, RealMatrix2::identity());
    }

    #[test]
    fn expm_of_rotation_generator() {
        // exp(π/2 · [[0,-1],[1,0]]) is the quarter rotation.
        let g = RealMatrix2::new(0.0, -1.0, 1.0, 0.0);
        let e = g.expm(FRAC_PI_2);
        assert!(e.max_abs_diff(&RealMatrix2::new(0.0, -1.0, 1.0, 0.0)) < 1e-14);
    }

    #[test]
    fn expm_of_symmetric_generator() {
        let g = RealMatrix2::new(0.0, 1.0, 1.0, 0.0);
        let mu = 0.8f64;
        let e = g.expm(mu);
        let expected = RealMatrix2::new(mu.cosh(), mu.sinh(), mu.sinh(), mu.cosh());
        assert!(e.max_abs_diff(&expected) < 1e-14);
    }

    #[test]
    fn max_abs_diff_examples() {
        let m = RealMatrix2::new(1.0, 2.0, 3.0, 4.0);
        assert_eq!(m.max_abs_diff(&m), 0.0);
        assert_eq!(
            RealMatrix2::identity().max_abs_diff(&RealMatrix2::identity().scale(2.0)),
            1.0
        );
        let d = RealMatrix2::rotation(0.3).max_abs_diff(&RealMatrix2::rotation(0.3 + 1e-9));
        assert!(d <= 2e-9);
    }

    #[test]
    fn unimodular_constructor_rejects_bad_determinant() {
        assert!(matches!(
            RealMatrix2::unimodular(2.0, 0.0, 0.0, 2.0),
            Err(Error::NotUnimodular { .. })
        ));
        assert!(RealMatrix2::unimodular(2.0, 0.0, 0.0, 0.5).is_ok());
    }

    #[test]
    fn complex_expm_matches_analytic_rotation() {
        let g = ComplexMatrix2::from_real(&RealMatrix2::new(0.0, -1.0, 1.0, 0.0));
        let e = g.expm(PI);
        let expected = ComplexMatrix2::from_real(&RealMatrix2::new(-1.0, 0.0, 0.0, -1.0));
        assert!(e.max_abs_diff(&expected) < 1e-13);
    }

    fn arb_entry() -> impl Strategy<Value = f64> {
        -10.0..10.0f64
    }

    proptest! {
        #[test]
        fn determinant_is_multiplicative(
            a in arb_entry(), b in arb_entry(), c in arb_entry(), d in arb_entry(),
            e in arb_entry(), f in arb_entry(), g in arb_entry(), h in arb_entry(),
        ) {
            let x = RealMatrix2::new(a, b, c, d);
            let y = RealMatrix2::new(e, f, g, h);
            let lhs = (x * y).det();
            let rhs = x.det() * y.det();
            let scale = lhs.abs().max(rhs.abs()).max(1.0);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
        }

        #[test]
        fn expm_one_parameter_group(
            a in -2.0..2.0f64, b in -2.0..2.0f64, c in -2.0..2.0f64,
            s in 0.0..5.0f64, t in 0.0..5.0f64,
        ) {
            // traceless generator
            let m = RealMatrix2::new(a, b, c, -a);
            let sum = m.expm(s + t);
            let prod = m.expm(s) * m.expm(t);
            let scale = sum.max_abs().max(1.0);
            prop_assert!(sum.max_abs_diff(&prod) <= 1e-10 * scale);
        }

        #[test]
        fn expm_of_traceless_is_unimodular(
            a in -1.0..1.0f64, b in -1.0..1.0f64, c in -1.0..1.0f64,
            t in 0.0..5.0f64,
        ) {
            let m = RealMatrix2::new(a, b, c, -a);
            let e = m.expm(t);
            let scale = e.max_abs().max(1.0);
            prop_assert!((e.det() - 1.0).abs() <= 1e-10 * scale);
        }
    }
}
