//! Particle-in-a-box eigenstates and eigenvalues.
//!
//! A particle confined to `|x| <= L` by infinite walls has non-degenerate
//! eigenstates that alternate between cosine (even quantum number) and sine
//! (odd quantum number) branches, with energies `(r+1)^2 * eps` where
//! `eps = hbar^2 pi^2 / (8 m L^2)` is the ground-state scale. These states
//! are the trial basis of the variational calculation in [`crate::variational`].

use crate::error::{Error, Result};

use std::f64::consts::PI;

/// Physical constants of the oscillator problem: mass, angular frequency
/// and the reduced Planck constant.
///
/// The derived scales `alpha = m*omega/hbar` (inverse squared length) and
/// `epsilon_omega = hbar*omega` (energy) are recomputed on every access so
/// they can never go stale.
///
/// `omega = 0` is accepted as the free-particle limit (`alpha` and
/// `epsilon_omega` both vanish); mass and `hbar` must be strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    mass: f64,
    omega: f64,
    hbar: f64,
}

impl PhysicalParams {
    pub fn new(mass: f64, omega: f64, hbar: f64) -> Result<Self> {
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(Error::InvalidParameter {
                name: "mass",
                value: mass,
                constraint: "positive and finite",
            });
        }
        if !(omega >= 0.0) || !omega.is_finite() {
            return Err(Error::InvalidParameter {
                name: "omega",
                value: omega,
                constraint: "non-negative and finite",
            });
        }
        if !(hbar > 0.0) || !hbar.is_finite() {
            return Err(Error::InvalidParameter {
                name: "hbar",
                value: hbar,
                constraint: "positive and finite",
            });
        }
        Ok(Self { mass, omega, hbar })
    }

    /// Natural units `m = omega = hbar = 1`, so `alpha = 1` and
    /// `epsilon_omega = 1`.
    pub fn natural() -> Self {
        Self {
            mass: 1.0,
            omega: 1.0,
            hbar: 1.0,
        }
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Inverse squared oscillator length `alpha = m*omega/hbar`.
    pub fn alpha(&self) -> f64 {
        self.mass * self.omega / self.hbar
    }

    /// Oscillator energy quantum `epsilon_omega = hbar*omega`.
    pub fn epsilon_omega(&self) -> f64 {
        self.hbar * self.omega
    }
}

impl Default for PhysicalParams {
    fn default() -> Self {
        Self::natural()
    }
}

/// One box eigenstate: quantum number `r >= 0` and box half-width `L > 0`.
///
/// Even `r` states are cosine-like (even parity), odd `r` states sine-like
/// (odd parity).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxState {
    r: u32,
    half_width: f64,
}

impl BoxState {
    pub fn new(r: u32, half_width: f64) -> Result<Self> {
        if !(half_width > 0.0) {
            return Err(Error::InvalidHalfWidth(half_width));
        }
        Ok(Self { r, half_width })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }
}

/// Ground-state energy scale of the box, `eps = hbar^2 pi^2 / (8 m L^2)`.
pub fn ground_scale(half_width: f64, params: &PhysicalParams) -> Result<f64> {
    if !(half_width > 0.0) {
        return Err(Error::InvalidHalfWidth(half_width));
    }
    Ok(ground_scale_unchecked(half_width, params))
}

fn ground_scale_unchecked(half_width: f64, params: &PhysicalParams) -> f64 {
    let hbar = params.hbar();
    hbar * hbar * PI * PI / (8.0 * params.mass() * half_width * half_width)
}

/// Box eigenvalue `(r+1)^2 * eps`.
pub fn energy(state: &BoxState, params: &PhysicalParams) -> f64 {
    let n = f64::from(state.r() + 1);
    n * n * ground_scale_unchecked(state.half_width(), params)
}

/// Normalized box eigenfunction, extended by zero outside the walls.
///
/// Inside `|x| <= L` this evaluates the parity branch directly:
/// `sqrt(1/L) cos(kx)` for even `r`, `sqrt(1/L) sin(kx)` for odd `r`, with
/// `k = (r+1) pi / (2L)`. Outside the box it returns exactly 0, which keeps
/// overlap integrals over any interval well-defined. The single-cosine
/// compact form is kept in [`wavefunction_compact`] as a tested equivalence
/// rather than the computational path.
pub fn wavefunction(state: &BoxState, x: f64) -> f64 {
    let half_width = state.half_width();
    if x.abs() > half_width {
        return 0.0;
    }
    let amplitude = (1.0 / half_width).sqrt();
    let u = f64::from(state.r() + 1) * PI * x / (2.0 * half_width);
    if state.r() % 2 == 0 {
        amplitude * u.cos()
    } else {
        amplitude * u.sin()
    }
}

/// Analytic spatial derivative of [`wavefunction`], zero outside the box.
pub fn wavefunction_derivative(state: &BoxState, x: f64) -> f64 {
    let half_width = state.half_width();
    if x.abs() > half_width {
        return 0.0;
    }
    let amplitude = (1.0 / half_width).sqrt();
    let k = f64::from(state.r() + 1) * PI / (2.0 * half_width);
    let u = k * x;
    if state.r() % 2 == 0 {
        -amplitude * k * u.sin()
    } else {
        amplitude * k * u.cos()
    }
}

/// The compact single-cosine form of the box eigenfunction,
/// `sqrt(1/L) cos((pi/2) sin^2(r pi/2) - (r+1) pi x / (2L))`.
///
/// Agrees with [`wavefunction`] to well below 1e-12 on the box; kept as an
/// independently evaluated cross-check of the parity-branched path.
pub fn wavefunction_compact(state: &BoxState, x: f64) -> f64 {
    let half_width = state.half_width();
    if x.abs() > half_width {
        return 0.0;
    }
    let amplitude = (1.0 / half_width).sqrt();
    let parity_shift = 0.5 * PI * (0.5 * PI * f64::from(state.r())).sin().powi(2);
    let u = f64::from(state.r() + 1) * PI * x / (2.0 * half_width);
    amplitude * (parity_shift - u).cos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    #[test]
    fn params_reject_bad_values() {
        assert!(PhysicalParams::new(0.0, 1.0, 1.0).is_err());
        assert!(PhysicalParams::new(-1.0, 1.0, 1.0).is_err());
        assert!(PhysicalParams::new(1.0, -0.5, 1.0).is_err());
        assert!(PhysicalParams::new(1.0, 1.0, 0.0).is_err());
        assert!(PhysicalParams::new(f64::NAN, 1.0, 1.0).is_err());
        // free-particle limit is allowed
        assert!(PhysicalParams::new(1.0, 0.0, 1.0).is_ok());
    }

    #[test]
    fn derived_scales_track_fields() {
        let p = PhysicalParams::new(2.0, 3.0, 1.5).unwrap();
        assert_relative_eq!(p.alpha(), 2.0 * 3.0 / 1.5, max_relative = 1e-15);
        assert_relative_eq!(p.epsilon_omega(), 1.5 * 3.0, max_relative = 1e-15);
        let n = PhysicalParams::natural();
        assert_eq!(n.alpha(), 1.0);
        assert_eq!(n.epsilon_omega(), 1.0);
    }

    #[test]
    fn ground_scale_is_one_at_the_special_width() {
        // L = pi hbar / sqrt(8 m) makes eps exactly one energy unit.
        for params in [
            PhysicalParams::natural(),
            PhysicalParams::new(2.0, 3.0, 1.5).unwrap(),
        ] {
            let l = PI * params.hbar() / (8.0 * params.mass()).sqrt();
            assert_relative_eq!(
                ground_scale(l, &params).unwrap(),
                1.0,
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn ground_scale_quarter_on_doubled_width() {
        let params = PhysicalParams::natural();
        let e1 = ground_scale(0.7, &params).unwrap();
        let e2 = ground_scale(1.4, &params).unwrap();
        assert_relative_eq!(e2, e1 / 4.0, max_relative = 1e-15);
    }

    #[test]
    fn ground_scale_near_the_r0_optimum() {
        // hbar^2 pi^2 / (8 m L^2) at L = 2.0845 in natural units.
        let params = PhysicalParams::natural();
        assert_abs_diff_eq!(
            ground_scale(2.0845, &params).unwrap(),
            0.28393,
            epsilon = 1e-5
        );
    }

    #[test]
    fn ground_scale_rejects_nonpositive_width() {
        let params = PhysicalParams::natural();
        assert!(ground_scale(0.0, &params).is_err());
        assert!(ground_scale(-1.0, &params).is_err());
        assert!(BoxState::new(3, 0.0).is_err());
    }

    #[test]
    fn energy_scales_with_square_of_level() {
        let params = PhysicalParams::natural();
        // width chosen so the ground scale is exactly 1
        let l = PI / 8f64.sqrt();
        let eps = ground_scale(l, &params).unwrap();
        let e0 = energy(&BoxState::new(0, l).unwrap(), &params);
        assert_relative_eq!(e0, eps, max_relative = 1e-15);
        let e2 = energy(&BoxState::new(2, l).unwrap(), &params);
        assert_relative_eq!(e2, 9.0, max_relative = 1e-14);
        let e5 = energy(&BoxState::new(5, l).unwrap(), &params);
        assert_relative_eq!(e5, 36.0, max_relative = 1e-14);
    }

    #[test]
    fn wavefunction_center_and_midpoint_values() {
        let l = 1.3;
        let even = BoxState::new(0, l).unwrap();
        assert_relative_eq!(
            wavefunction(&even, 0.0),
            (1.0 / l).sqrt(),
            max_relative = 1e-15
        );
        // odd branch reduces to sin((r+1) pi x / 2L); r = 1, x = L/2 gives sin(pi/2)
        let odd = BoxState::new(1, l).unwrap();
        assert_relative_eq!(
            wavefunction(&odd, l / 2.0),
            (1.0 / l).sqrt(),
            max_relative = 1e-14
        );
        assert_eq!(wavefunction(&odd, 0.0), 0.0);
    }

    #[test]
    fn wavefunction_vanishes_at_and_beyond_walls() {
        let l = 0.9;
        for r in 0..=20 {
            let state = BoxState::new(r, l).unwrap();
            assert!(wavefunction(&state, l).abs() < 1e-12);
            assert!(wavefunction(&state, -l).abs() < 1e-12);
            assert_eq!(wavefunction(&state, l * 1.0000001), 0.0);
            assert_eq!(wavefunction(&state, -l * 42.0), 0.0);
            assert_eq!(wavefunction_derivative(&state, l * 1.1), 0.0);
        }
    }

    #[test]
    fn parity_on_grid() {
        let l = 1.7;
        for r in 0..=20u32 {
            let state = BoxState::new(r, l).unwrap();
            let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
            for i in 0..=100 {
                let x = -l + 2.0 * l * f64::from(i) / 100.0;
                assert_abs_diff_eq!(
                    wavefunction(&state, -x),
                    sign * wavefunction(&state, x),
                    epsilon = 1e-12
                );
            }
        }
    }

    #[test]
    fn compact_form_matches_parity_branches_on_grid() {
        let l = 2.2;
        for r in 0..=20u32 {
            let state = BoxState::new(r, l).unwrap();
            for i in 0..=100 {
                let x = -l + 2.0 * l * f64::from(i) / 100.0;
                assert_abs_diff_eq!(
                    wavefunction_compact(&state, x),
                    wavefunction(&state, x),
                    epsilon = 1e-12
                );
            }
        }
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let l = 1.1;
        let h = 1e-6;
        for r in [0u32, 1, 2, 7, 12] {
            let state = BoxState::new(r, l).unwrap();
            for &x in &[-0.9, -0.3, 0.05, 0.4, 0.83] {
                let fd = (wavefunction(&state, x + h) - wavefunction(&state, x - h)) / (2.0 * h);
                assert_abs_diff_eq!(wavefunction_derivative(&state, x), fd, epsilon = 1e-4);
            }
        }
    }

    proptest! {
        #[test]
        fn prop_parity_and_compact_equivalence(
            r in 0u32..=20,
            l in 0.1f64..10.0,
            frac in -1.0f64..1.0,
        ) {
            let state = BoxState::new(r, l).unwrap();
            let x = frac * l;
            let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
            prop_assert!((wavefunction(&state, -x) - sign * wavefunction(&state, x)).abs() < 1e-12);
            prop_assert!((wavefunction_compact(&state, x) - wavefunction(&state, x)).abs() < 1e-12);
        }
    }
}
