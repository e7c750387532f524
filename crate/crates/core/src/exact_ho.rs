//! Closed-form harmonic oscillator eigenvalues and eigenfunctions, the
//! ground truth every variational result is compared against.

use crate::box_model::PhysicalParams;
use crate::error::{Error, Result};

use std::f64::consts::PI;

/// Largest degree accepted by [`hermite`]. The unnormalized polynomials grow
/// factorially and overflow `f64` shortly above this.
pub const MAX_HERMITE_DEGREE: u32 = 170;

/// Exact eigenvalue `(r + 1/2) * epsilon_omega`.
pub fn energy(r: u32, params: &PhysicalParams) -> f64 {
    (f64::from(r) + 0.5) * params.epsilon_omega()
}

/// Physicists' Hermite polynomial `H_n(y)` by the three-term recurrence
/// `H_{n+1} = 2y H_n - 2n H_{n-1}` with `H_0 = 1`, `H_1 = 2y`.
///
/// Only used to validate the closed-form eigenfunctions at low degree; the
/// wavefunction path below never forms `H_n` or `2^r r!` explicitly.
pub fn hermite(n: u32, y: f64) -> Result<f64> {
    if n > MAX_HERMITE_DEGREE {
        return Err(Error::HermiteDegreeTooLarge(n));
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut current = 2.0 * y;
    for k in 1..n {
        let next = 2.0 * y * current - 2.0 * f64::from(k) * prev;
        prev = current;
        current = next;
    }
    Ok(current)
}

/// Normalized oscillator eigenfunction
/// `(alpha/pi)^{1/4} (2^r r!)^{-1/2} H_r(x sqrt(alpha)) exp(-alpha x^2 / 2)`.
///
/// Evaluated with the recurrence on the *normalized* values,
/// `psi_{n+1} = sqrt(2/(n+1)) y psi_n - sqrt(n/(n+1)) psi_{n-1}`, which stays
/// bounded at any quantum number instead of overflowing near r = 170 the way
/// the explicit `2^r r!` normalization does.
pub fn wavefunction(r: u32, params: &PhysicalParams, x: f64) -> f64 {
    let alpha = params.alpha();
    let y = x * alpha.sqrt();
    let ground = (alpha / PI).powf(0.25) * (-0.5 * y * y).exp();
    if r == 0 {
        return ground;
    }
    let mut prev = ground;
    let mut current = std::f64::consts::SQRT_2 * y * ground;
    for n in 1..r {
        let nf = f64::from(n);
        let next = (2.0 / (nf + 1.0)).sqrt() * y * current - (nf / (nf + 1.0)).sqrt() * prev;
        prev = current;
        current = next;
    }
    current
}

/// Half-width of the integration window that captures exact-state norms to
/// machine accuracy: twelve oscillator lengths, `12 / sqrt(alpha)`.
pub fn norm_half_width(params: &PhysicalParams) -> f64 {
    12.0 / params.alpha().sqrt()
}
