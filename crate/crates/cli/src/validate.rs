//! The oracle suite behind `vho validate`: every closed-form result of the
//! library confronted with an independent numerical route, each check
//! reporting its tolerance and the worst observed error.

use vho_core::box_model::{self, BoxState, PhysicalParams};
use vho_core::exact_ho;
use vho_core::numerics;
use vho_core::report;
use vho_core::variational;

/// One validation check: passes when the observed error is within tolerance.
pub struct Check {
    pub name: &'static str,
    pub tolerance: f64,
    pub observed: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.observed <= self.tolerance
    }
}

const SWEEP_WIDTHS: [f64; 4] = [0.5, 1.0, 2.0, 5.0];
const MAX_BOX_LEVEL: u32 = 20;
const MAX_EXACT_LEVEL: u32 = 10;

/// Run every check. The returned order is stable, so identical inputs give
/// identical output.
pub fn run_all(params: &PhysicalParams, order: usize) -> Vec<Check> {
    vec![
        quadrature_exactness(),
        quadrature_weight_sums(order),
        quadrature_vs_closed_form(params, order),
        kinetic_form_vs_box_spectrum(params, order),
        minimizer_vs_analytic_eps(params),
        minimizer_vs_analytic_energy(params),
        box_orthonormality(),
        exact_orthonormality(params),
        stationarity(params),
        boundary_values(params),
        parity(params),
        peak_ratio_vs_printed_value(params),
        overlap_bound(params),
    ]
}

/// Monomials up to degree 2n-1 integrate exactly for a spread of orders.
fn quadrature_exactness() -> Check {
    let mut worst = 0.0f64;
    for order in [1usize, 2, 5, 20, 64] {
        let rule = numerics::gauss_legendre(order).expect("order in range");
        for degree in 0..2 * order {
            let got = numerics::integrate(|x| x.powi(degree as i32), -1.0, 1.0, &rule)
                .expect("valid interval");
            let want = if degree % 2 == 1 {
                0.0
            } else {
                2.0 / (degree as f64 + 1.0)
            };
            worst = worst.max((got - want).abs() / want.abs().max(1.0));
        }
    }
    Check {
        name: "Gauss-Legendre monomial exactness",
        tolerance: 1e-12,
        observed: worst,
    }
}

fn quadrature_weight_sums(order: usize) -> Check {
    let mut worst = 0.0f64;
    for n in [1usize, 2, 5, 20, 64, order] {
        let rule = numerics::gauss_legendre(n).expect("order in range");
        let sum: f64 = rule.weights().iter().sum();
        worst = worst.max((sum - 2.0).abs());
    }
    Check {
        name: "Gauss-Legendre weight sums",
        tolerance: 1e-13,
        observed: worst,
    }
}

/// The analytically integrated energy functional against direct quadrature
/// of the Hamiltonian expectation, over all levels and box sizes.
fn quadrature_vs_closed_form(params: &PhysicalParams, order: usize) -> Check {
    let mut worst = 0.0f64;
    for r in 0..=MAX_BOX_LEVEL {
        for l in SWEEP_WIDTHS {
            let state = BoxState::new(r, l).expect("positive width");
            let eps = box_model::ground_scale(l, params).expect("positive width");
            let quadrature =
                numerics::expectation_energy(&state, params, order).expect("valid order");
            let closed = variational::energy_functional(r, eps, params).expect("positive eps");
            worst = worst.max(((quadrature - closed) / closed).abs());
        }
    }
    Check {
        name: "quadrature vs closed-form energy",
        tolerance: 1e-9,
        observed: worst,
    }
}

/// First-derivative kinetic form alone reproduces the free box spectrum.
fn kinetic_form_vs_box_spectrum(params: &PhysicalParams, order: usize) -> Check {
    let rule = numerics::gauss_legendre(order).expect("order in range");
    let factor = params.hbar() * params.hbar() / (2.0 * params.mass());
    let mut worst = 0.0f64;
    for r in 0..=MAX_BOX_LEVEL {
        for l in SWEEP_WIDTHS {
            let state = BoxState::new(r, l).expect("positive width");
            let kinetic = factor
                * numerics::integrate(
                    |x| {
                        let d = box_model::wavefunction_derivative(&state, x);
                        d * d
                    },
                    -l,
                    l,
                    &rule,
                )
                .expect("valid interval");
            let expected = box_model::energy(&state, params);
            worst = worst.max(((kinetic - expected) / expected).abs());
        }
    }
    Check {
        name: "Dirichlet kinetic form vs box spectrum",
        tolerance: 1e-10,
        observed: worst,
    }
}

fn minimizer_vs_analytic_eps(params: &PhysicalParams) -> Check {
    let mut worst = 0.0f64;
    for r in 0..=MAX_BOX_LEVEL {
        let analytic = variational::solve(r, params);
        let numeric = variational::minimize_functional(r, params).expect("valid bracket");
        worst = worst.max(((numeric.x_min - analytic.epsilon_star) / analytic.epsilon_star).abs());
    }
    Check {
        name: "golden section vs analytic optimum (eps*)",
        tolerance: 1e-8,
        observed: worst,
    }
}

fn minimizer_vs_analytic_energy(params: &PhysicalParams) -> Check {
    let mut worst = 0.0f64;
    for r in 0..=MAX_BOX_LEVEL {
        let analytic = variational::solve(r, params);
        let numeric = variational::minimize_functional(r, params).expect("valid bracket");
        worst = worst.max(((numeric.f_min - analytic.e_star) / analytic.e_star).abs());
    }
    Check {
        name: "golden section vs analytic optimum (E*)",
        tolerance: 1e-10,
        observed: worst,
    }
}

fn box_orthonormality() -> Check {
    let l = 1.7;
    let mut worst = 0.0f64;
    for r in 0..=MAX_BOX_LEVEL {
        for s in r..=MAX_BOX_LEVEL {
            let a = BoxState::new(r, l).expect("positive width");
            let b = BoxState::new(s, l).expect("positive width");
            let inner = numerics::overlap(
                |x| box_model::wavefunction(&a, x),
                |x| box_model::wavefunction(&b, x),
                -l,
                l,
                numerics::recommended_order(s),
            )
            .expect("valid interval");
            let expected = if r == s { 1.0 } else { 0.0 };
            worst = worst.max((inner - expected).abs());
        }
    }
    Check {
        name: "box-state orthonormality",
        tolerance: 1e-10,
        observed: worst,
    }
}

fn exact_orthonormality(params: &PhysicalParams) -> Check {
    let window = exact_ho::norm_half_width(params);
    let mut worst = 0.0f64;
    for r in 0..=MAX_EXACT_LEVEL {
        for s in r..=MAX_EXACT_LEVEL {
            let inner = numerics::overlap(
                |x| exact_ho::wavefunction(r, params, x),
                |x| exact_ho::wavefunction(s, params, x),
                -window,
                window,
                128,
            )
            .expect("valid interval");
            let expected = if r == s { 1.0 } else { 0.0 };
            worst = worst.max((inner - expected).abs());
        }
    }
    Check {
        name: "exact-state orthonormality",
        tolerance: 1e-8,
        observed: worst,
    }
}

/// Central finite difference of the functional at eps*, in units of
/// eps_omega.
fn stationarity(params: &PhysicalParams) -> Check {
    let eps_omega = params.epsilon_omega();
    let mut worst = 0.0f64;
    for r in 0..=MAX_BOX_LEVEL {
        let eps_star = variational::solve(r, params).epsilon_star;
        let h = 1e-5 * eps_star;
        let above = variational::energy_functional(r, eps_star + h, params).expect("positive eps");
        let below = variational::energy_functional(r, eps_star - h, params).expect("positive eps");
        worst = worst.max(((above - below) / (2.0 * h)).abs() / eps_omega);
    }
    Check {
        name: "stationarity of the functional at eps*",
        tolerance: 1e-6,
        observed: worst,
    }
}

fn boundary_values(params: &PhysicalParams) -> Check {
    let mut worst = 0.0f64;
    for r in 0..=MAX_BOX_LEVEL {
        let l_star = variational::solve(r, params).l_star;
        for l in [0.5, 1.7, l_star] {
            let state = BoxState::new(r, l).expect("positive width");
            worst = worst.max(box_model::wavefunction(&state, l).abs());
            worst = worst.max(box_model::wavefunction(&state, -l).abs());
        }
    }
    Check {
        name: "box boundary values",
        tolerance: 1e-12,
        observed: worst,
    }
}

/// Worst parity asymmetry of box and exact states on a 101-point grid.
fn parity(params: &PhysicalParams) -> Check {
    let mut worst = 0.0f64;
    let l = 1.3;
    for r in 0..=MAX_BOX_LEVEL {
        let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
        let state = BoxState::new(r, l).expect("positive width");
        for i in 0..=100 {
            let x = -l + 2.0 * l * f64::from(i) / 100.0;
            worst = worst.max(
                (box_model::wavefunction(&state, -x) - sign * box_model::wavefunction(&state, x))
                    .abs(),
            );
            let x_wide = 6.0 * x / l / params.alpha().sqrt();
            worst = worst.max(
                (exact_ho::wavefunction(r, params, -x_wide)
                    - sign * exact_ho::wavefunction(r, params, x_wide))
                .abs(),
            );
        }
    }
    Check {
        name: "parity of box and exact states",
        tolerance: 1e-12,
        observed: worst,
    }
}

fn peak_ratio_vs_printed_value(params: &PhysicalParams) -> Check {
    Check {
        name: "peak ratio vs 0.9221215996",
        tolerance: 1e-9,
        observed: (report::peak_ratio(params) - 0.9221215996).abs(),
    }
}

/// Cauchy-Schwarz: overlaps of unit-norm states stay below one, up to
/// quadrature noise.
fn overlap_bound(params: &PhysicalParams) -> Check {
    let mut worst = 0.0f64;
    for (_, value) in report::overlap_diagnostics(MAX_EXACT_LEVEL, params) {
        worst = worst.max((value - 1.0).max(0.0));
    }
    Check {
        name: "overlap bound |<phi*, psi>| <= 1",
        tolerance: 1e-10,
        observed: worst,
    }
}
