//! Two-level dynamics with a magnetic coupling `h` and a dissipative
//! coupling `g`.
//!
//! The generator of the time evolution is `[[0, g - h], [h + g, 0]]`. Its
//! square is `(g² - h²)·I`, so the evolution is rotational for `h² > g²`,
//! hyperbolic for `g² > h²`, and linear in `t` (parabolic) on the `g = ±h`
//! boundary where the generator is nilpotent. The closed forms below are the
//! three branches written so they stay stable across the boundary; each one
//! is checked against the matrix-exponential oracle in the tests.

use crate::conjugacy::{classify, ConjugacyClass};
use crate::mat2::{ComplexMatrix2, RealMatrix2};
use crate::Error;

use num_complex::Complex64;

/// Relative half-width of the parabolic snap band around `g = ±h`.
const BOUNDARY_TOL: f64 = 1e-9;

/// Couplings below this are treated as identically zero.
const ZERO_COUPLING: f64 = 1e-300;

/// Magnetic coupling `h`, dissipative coupling `g`, elapsed time `t`.
///
/// `|h·t|` and `|g·t|` must stay below 300 to keep `cosh` from overflowing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoLevelParams {
    pub h: f64,
    pub g: f64,
    pub t: f64,
}

impl TwoLevelParams {
    pub fn new(h: f64, g: f64, t: f64) -> Self {
        assert!(h.is_finite() && g.is_finite() && t.is_finite());
        assert!(
            (h * t).abs() <= 300.0 && (g * t).abs() <= 300.0,
            "h·t and g·t must stay below the cosh overflow guard"
        );
        Self { h, g, t }
    }
}

/// Dynamical regime of the `(h, g)` couplings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Regime {
    /// `h² > g²`: rotation at `ω = √(h² - g²)` with squeeze rapidity η,
    /// `e^{-η} = √((h - g)/(h + g))`.
    Rotational { omega: f64, eta: f64 },
    /// `g² > h²`: hyperbolic growth at `λ = √(g² - h²)` with
    /// `e^{-η} = √((g - h)/(g + h))`.
    HyperbolicRegime { lambda: f64, eta: f64 },
    /// `g = h`: nilpotent generator, lower shear at rate `h + g` (= 2h).
    ParabolicPlus { rate: f64 },
    /// `g = -h`: nilpotent generator, upper shear at rate `h - g` (= 2h).
    ParabolicMinus { rate: f64 },
}

impl Regime {
    pub fn tag(&self) -> &'static str {
        match self {
            Regime::Rotational { .. } => "Rotational",
            Regime::HyperbolicRegime { .. } => "HyperbolicRegime",
            Regime::ParabolicPlus { .. } => "ParabolicPlus",
            Regime::ParabolicMinus { .. } => "ParabolicMinus",
        }
    }

    /// ω, λ or the shear rate.
    pub fn rate(&self) -> f64 {
        match *self {
            Regime::Rotational { omega, .. } => omega,
            Regime::HyperbolicRegime { lambda, .. } => lambda,
            Regime::ParabolicPlus { rate } | Regime::ParabolicMinus { rate } => rate,
        }
    }

    /// Squeeze rapidity; 0 in the parabolic regimes.
    pub fn eta(&self) -> f64 {
        match *self {
            Regime::Rotational { eta, .. } | Regime::HyperbolicRegime { eta, .. } => eta,
            _ => 0.0,
        }
    }
}

/// Total Hamiltonian `i·[[0, -h + g], [h + g, 0]]`: the magnetic term
/// `h·[[0, -i], [i, 0]]` plus the dissipative term `g·[[0, i], [i, 0]]`.
pub fn hamiltonian(h: f64, g: f64) -> ComplexMatrix2 {
    assert!(h.is_finite() && g.is_finite());
    ComplexMatrix2::new(
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, -h + g),
        Complex64::new(0.0, h + g),
        Complex64::new(0.0, 0.0),
    )
}

/// Regime of the `(h, g)` couplings.
///
/// Inputs within `1e-9` (relative) of the `g = ±h` boundary snap to the
/// parabolic branch; this avoids catastrophic cancellation in `√(h² - g²)`
/// and in the log of a near-zero ratio.
pub fn regime(h: f64, g: f64) -> Result<Regime, Error> {
    assert!(h.is_finite() && g.is_finite());
    if h.abs().max(g.abs()) <= ZERO_COUPLING {
        return Err(Error::BothCouplingsZero);
    }
    let scale = h.abs().max(g.abs()).max(1.0);
    if (h - g).abs() <= BOUNDARY_TOL * scale {
        Ok(Regime::ParabolicPlus { rate: h + g })
    } else if (h + g).abs() <= BOUNDARY_TOL * scale {
        Ok(Regime::ParabolicMinus { rate: h - g })
    } else if h * h > g * g {
        Ok(Regime::Rotational {
            omega: (h * h - g * g).sqrt(),
            eta: 0.5 * ((h + g) / (h - g)).ln(),
        })
    } else {
        Ok(Regime::HyperbolicRegime {
            lambda: (g * g - h * h).sqrt(),
            eta: 0.5 * ((g + h) / (g - h)).ln(),
        })
    }
}

/// Transition matrix `exp([[0, -h + g], [h + g, 0]]·t)` in closed form.
///
/// Rotational: `[[cos ωt, -e^{-η} sin ωt], [e^{η} sin ωt, cos ωt]]`.
/// Hyperbolic: `[[cosh λt, e^{-η} sinh λt], [e^{η} sinh λt, cosh λt]]`.
/// Parabolic: `I + t·generator`. The off-diagonal factors are evaluated as
/// `(g - h)·sin(ωt)/ω` etc., which equals the `e^{±η}` form for positive
/// couplings and stays correct for negative ones.
pub fn transition_matrix(p: &TwoLevelParams) -> Result<RealMatrix2, Error> {
    let p = TwoLevelParams::new(p.h, p.g, p.t);
    let upper = p.g - p.h;
    let lower = p.g + p.h;
    let m = match regime(p.h, p.g)? {
        Regime::Rotational { omega, .. } => {
            let (s, c) = (omega * p.t).sin_cos();
            RealMatrix2::new(c, upper * s / omega, lower * s / omega, c)
        }
        Regime::HyperbolicRegime { lambda, .. } => {
            let x = lambda * p.t;
            RealMatrix2::new(
                x.cosh(),
                upper * x.sinh() / lambda,
                lower * x.sinh() / lambda,
                x.cosh(),
            )
        }
        Regime::ParabolicPlus { .. } => RealMatrix2::new(1.0, 0.0, lower * p.t, 1.0),
        Regime::ParabolicMinus { .. } => RealMatrix2::new(1.0, upper * p.t, 0.0, 1.0),
    };
    Ok(m)
}

/// One row of a dissipative-coupling sweep at fixed `h` and `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub g: f64,
    pub regime: Regime,
    pub matrix: RealMatrix2,
    pub class: ConjugacyClass,
}

/// Transition matrix and conjugacy class for each `g` in an increasing
/// sequence. As `g` passes through `h` the class crosses from elliptic
/// through parabolic to hyperbolic: the circle/hyperbola barrier.
pub fn crossing_sweep(h: f64, g_values: &[f64], t: f64) -> Result<Vec<SweepPoint>, Error> {
    assert!(h > 0.0, "sweep requires h > 0");
    assert!(
        g_values.windows(2).all(|w| w[0] < w[1]),
        "sweep g values must be strictly increasing"
    );
    g_values
        .iter()
        .map(|&g| {
            let reg = regime(h, g)?;
            let matrix = transition_matrix(&TwoLevelParams::new(h, g, t))?;
            let class = classify(&matrix)?;
            Ok(SweepPoint {
                g,
                regime: reg,
                matrix,
                class,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_2, PI};

    use proptest::prelude::*;

    use super::*;
    use crate::conjugacy::decompose;

    /// Oracle: exponentiate the real generator directly.
    fn oracle(h: f64, g: f64, t: f64) -> RealMatrix2 {
        RealMatrix2::new(0.0, -h + g, h + g, 0.0).expm(t)
    }

    #[test]
    fn hamiltonian_examples() {
        let m = hamiltonian(1.0, 0.0);
        assert_eq!(m.e01, Complex64::new(0.0, -1.0));
        assert_eq!(m.e10, Complex64::new(0.0, 1.0));

        let d = hamiltonian(0.0, 1.0);
        assert_eq!(d.e01, Complex64::new(0.0, 1.0));
        assert_eq!(d.e10, Complex64::new(0.0, 1.0));

        assert_eq!(hamiltonian(0.0, 0.0), ComplexMatrix2::zero());
    }

    #[test]
    fn regime_pure_rotation() {
        match regime(1.0, 0.0).unwrap() {
            Regime::Rotational { omega, eta } => {
                assert!((omega - 1.0).abs() < 1e-15);
                assert_eq!(eta, 0.0);
            }
            other => panic!("expected rotational, got {other:?}"),
        }
    }

    #[test]
    fn regime_hyperbolic_values() {
        match regime(0.6, 1.0).unwrap() {
            Regime::HyperbolicRegime { lambda, eta } => {
                assert!((lambda - 0.8).abs() < 1e-15);
                assert!(((-eta).exp() - 0.5).abs() < 1e-15);
            }
            other => panic!("expected hyperbolic, got {other:?}"),
        }
    }

    #[test]
    fn regime_parabolic_boundary() {
        match regime(1.0, 1.0).unwrap() {
            Regime::ParabolicPlus { rate } => assert_eq!(rate, 2.0),
            other => panic!("expected parabolic-plus, got {other:?}"),
        }
        match regime(1.0, -1.0).unwrap() {
            Regime::ParabolicMinus { rate } => assert_eq!(rate, 2.0),
            other => panic!("expected parabolic-minus, got {other:?}"),
        }
    }

    #[test]
    fn regime_rejects_zero_couplings() {
        assert_eq!(regime(0.0, 0.0), Err(Error::BothCouplingsZero));
    }

    #[test]
    fn transition_on_parabolic_boundary() {
        let m = transition_matrix(&TwoLevelParams::new(1.0, 1.0, 2.0)).unwrap();
        assert_eq!(m, RealMatrix2::new(1.0, 0.0, 4.0, 1.0));
    }

    #[test]
    fn transition_pure_rotation_quarter_turn() {
        let m = transition_matrix(&TwoLevelParams::new(1.0, 0.0, FRAC_PI_2)).unwrap();
        assert!(m.max_abs_diff(&RealMatrix2::new(0.0, -1.0, 1.0, 0.0)) < 1e-15);
    }

    #[test]
    fn transition_hyperbolic_closed_form() {
        let m = transition_matrix(&TwoLevelParams::new(0.6, 1.0, 1.0)).unwrap();
        let expected = RealMatrix2::new(1.337435, 0.444053, 1.776211, 1.337435);
        assert!(m.max_abs_diff(&expected) < 1.5e-6);
        assert!(m.max_abs_diff(&oracle(0.6, 1.0, 1.0)) < 1e-12);
    }

    #[test]
    fn transition_propagates_zero_coupling_error() {
        let r = transition_matrix(&TwoLevelParams::new(0.0, 0.0, 1.0));
        assert_eq!(r, Err(Error::BothCouplingsZero));
    }

    #[test]
    fn sweep_crosses_the_barrier() {
        let pts = crossing_sweep(1.0, &[0.5, 1.0, 1.5], 1.0).unwrap();
        let tags: Vec<_> = pts.iter().map(|p| p.class.tag()).collect();
        assert_eq!(tags, ["Elliptic", "ParabolicLower", "Hyperbolic"]);
    }

    #[test]
    fn sweep_half_period_is_minus_identity() {
        let pts = crossing_sweep(1.0, &[0.0], PI).unwrap();
        assert_eq!(pts.len(), 1);
        match pts[0].class {
            ConjugacyClass::Elliptic { phi } => assert!((phi - PI).abs() < 1e-12),
            other => panic!("expected elliptic π, got {other:?}"),
        }
        assert!(pts[0]
            .matrix
            .max_abs_diff(&RealMatrix2::identity().scale(-1.0))
            < 1e-12);
    }

    #[test]
    fn empty_sweep_is_empty() {
        assert!(crossing_sweep(1.0, &[], 1.0).unwrap().is_empty());
    }

    #[test]
    fn boundary_continuity() {
        let at = transition_matrix(&TwoLevelParams::new(1.0, 1.0, 1.0)).unwrap();
        for eps in [1e-6, 1e-8] {
            let bound = 1e-4 * (eps / 1e-8f64).sqrt();
            for g in [1.0 + eps, 1.0 - eps] {
                let m = transition_matrix(&TwoLevelParams::new(1.0, g, 1.0)).unwrap();
                assert!(
                    m.max_abs_diff(&at) <= bound,
                    "g={g}: diff {} > {bound}",
                    m.max_abs_diff(&at)
                );
            }
        }
    }

    fn far_from_boundary(h: f64, g: f64) -> bool {
        (h - g).abs() > 1e-3 && (h + g).abs() > 1e-3
    }

    proptest! {
        #[test]
        fn closed_form_matches_oracle(
            h in -5.0..5.0f64,
            g in -5.0..5.0f64,
            t in 0.0..5.0f64,
        ) {
            prop_assume!(far_from_boundary(h, g));
            let m = transition_matrix(&TwoLevelParams::new(h, g, t)).unwrap();
            let e = oracle(h, g, t);
            let scale = m.max_abs().max(1.0);
            prop_assert!(m.max_abs_diff(&e) <= 1e-9 * scale);
        }

        #[test]
        fn transition_is_unimodular(
            h in -5.0..5.0f64,
            g in -5.0..5.0f64,
            t in 0.0..5.0f64,
        ) {
            prop_assume!(h.abs().max(g.abs()) > 1e-6);
            let m = transition_matrix(&TwoLevelParams::new(h, g, t)).unwrap();
            let scale = m.max_abs().max(1.0);
            prop_assert!((m.det() - 1.0).abs() <= 1e-10 * scale * scale);
        }

        #[test]
        fn evolution_composes_in_time(
            h in -5.0..5.0f64,
            g in -5.0..5.0f64,
            t1 in 0.0..5.0f64,
            t2 in 0.0..5.0f64,
        ) {
            prop_assume!(h.abs().max(g.abs()) > 1e-6);
            let total = transition_matrix(&TwoLevelParams::new(h, g, t1 + t2)).unwrap();
            let split = transition_matrix(&TwoLevelParams::new(h, g, t2)).unwrap()
                * transition_matrix(&TwoLevelParams::new(h, g, t1)).unwrap();
            let scale = total.max_abs().max(1.0);
            prop_assert!(total.max_abs_diff(&split) <= 1e-9 * scale);
        }

        #[test]
        fn regime_and_class_agree(
            h in 0.1..5.0f64,
            g in -5.0..5.0f64,
            t in 0.01..5.0f64,
        ) {
            prop_assume!(far_from_boundary(h, g));
            let reg = regime(h, g).unwrap();
            let m = transition_matrix(&TwoLevelParams::new(h, g, t)).unwrap();
            let class = classify(&m).unwrap();
            match reg {
                Regime::Rotational { omega, .. } => {
                    // avoid ωt at a multiple of π where the matrix is ±I
                    prop_assume!((omega * t / PI - (omega * t / PI).round()).abs() > 1e-3);
                    prop_assert_eq!(class.tag(), "Elliptic");
                }
                Regime::HyperbolicRegime { lambda, .. } => {
                    // λt too small leaves the trace inside the parabolic band
                    prop_assume!(lambda * t > 1e-3);
                    prop_assert_eq!(class.tag(), "Hyperbolic");
                }
                _ => {}
            }
        }

        #[test]
        fn decomposition_recovers_regime_rapidity(
            h in 0.1..5.0f64,
            g in -5.0..5.0f64,
            t in 0.01..5.0f64,
        ) {
            prop_assume!(far_from_boundary(h, g));
            prop_assume!(h > 0.0 && g > -h);
            let reg = regime(h, g).unwrap();
            let m = transition_matrix(&TwoLevelParams::new(h, g, t)).unwrap();
            match reg {
                Regime::Rotational { omega, eta } => {
                    prop_assume!((omega * t / PI - (omega * t / PI).round()).abs() > 1e-3);
                    let d = decompose(&m).unwrap();
                    prop_assert!((d.eta - eta).abs() <= 1e-9);
                }
                Regime::HyperbolicRegime { lambda, eta } => {
                    prop_assume!(lambda * t > 1e-3);
                    let d = decompose(&m).unwrap();
                    prop_assert!((d.eta - eta).abs() <= 1e-9);
                }
                _ => {}
            }
        }
    }
}
