//! Comparison tables, wavefunction traces and file emission: the structured
//! records behind the spectrum figure and the ground/first-excited state
//! plots, plus overlap diagnostics between the optimized trial states and
//! the exact eigenstates.

mod svg;

use crate::box_model::{self, BoxState, PhysicalParams};
use crate::error::{Error, Result};
use crate::exact_ho;
use crate::numerics;
use crate::variational;

use std::fmt::Write as _;
use std::path::Path;

/// One row of the spectrum comparison table, everything in units of
/// `epsilon_omega`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyComparisonRow {
    pub r: u32,
    /// Variational energy over `epsilon_omega`.
    pub e_star_over_ew: f64,
    /// Exact energy over `epsilon_omega`, exactly `r + 1/2`.
    pub e_exact_over_ew: f64,
    /// `e_star / e_exact`.
    pub ratio: f64,
    /// Signed relative error `(e_star - e_exact) / e_exact`.
    pub rel_error: f64,
}

/// Which wavefunction a trace samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceKind {
    Approximate,
    Exact,
}

/// A wavefunction sampled on a symmetric grid.
#[derive(Debug, Clone, PartialEq)]
pub struct WavefunctionTrace {
    pub r: u32,
    pub kind: TraceKind,
    pub xs: Vec<f64>,
    pub values: Vec<f64>,
    /// Half-width of the sampled window.
    pub domain_half_width: f64,
}

/// Spectrum comparison for r = 0..=r_max.
pub fn energy_table(r_max: u32, params: &PhysicalParams) -> Vec<EnergyComparisonRow> {
    let eps_omega = params.epsilon_omega();
    (0..=r_max)
        .map(|r| {
            let e_star_over_ew = variational::solve(r, params).e_star / eps_omega;
            let e_exact_over_ew = f64::from(r) + 0.5;
            let rel_error = (e_star_over_ew - e_exact_over_ew) / e_exact_over_ew;
            EnergyComparisonRow {
                r,
                e_star_over_ew,
                e_exact_over_ew,
                ratio: e_star_over_ew / e_exact_over_ew,
                rel_error,
            }
        })
        .collect()
}

/// Ratio of the optimized to the exact ground-state wavefunction at the
/// origin, `(2/pi)^{1/4} ((pi^2 - 6)/3)^{1/8} = 0.9221215996`. Independent
/// of `alpha`; the closed form is cross-checked against the pointwise ratio
/// on every call.
pub fn peak_ratio(params: &PhysicalParams) -> f64 {
    use std::f64::consts::PI;
    let closed = (2.0 / PI).powf(0.25) * ((PI * PI - 6.0) / 3.0).powf(0.125);
    let pointwise = variational::optimized_wavefunction(0, params, 0.0)
        / exact_ho::wavefunction(0, params, 0.0);
    assert!(
        (closed - pointwise).abs() <= 1e-12,
        "peak-ratio closed form {closed} disagrees with pointwise evaluation {pointwise}"
    );
    closed
}

/// Sample the optimized and exact wavefunctions for quantum number `r` on a
/// common symmetric grid of `n_points` points (odd, so x = 0 is sampled)
/// spanning `[-W, W]` with `W = max(L*, 6/sqrt(alpha))`. The approximate
/// trace is zero beyond its box.
pub fn wavefunction_traces(
    r: u32,
    params: &PhysicalParams,
    n_points: usize,
) -> Result<(WavefunctionTrace, WavefunctionTrace)> {
    if n_points < 3 || n_points % 2 == 0 {
        return Err(Error::InvalidGridSize(n_points));
    }
    let l_star = variational::solve(r, params).l_star;
    let half_width = l_star.max(6.0 / params.alpha().sqrt());
    let mid = (n_points - 1) / 2;
    let step = half_width / mid as f64;
    // Centered indexing keeps the grid exactly symmetric with x = 0 in the
    // middle.
    let xs: Vec<f64> = (0..n_points)
        .map(|i| (i as f64 - mid as f64) * step)
        .collect();

    let state = BoxState::new(r, l_star).expect("optimal half-width is positive");
    let approximate = WavefunctionTrace {
        r,
        kind: TraceKind::Approximate,
        values: xs.iter().map(|&x| box_model::wavefunction(&state, x)).collect(),
        xs: xs.clone(),
        domain_half_width: half_width,
    };
    let exact = WavefunctionTrace {
        r,
        kind: TraceKind::Exact,
        values: xs.iter().map(|&x| exact_ho::wavefunction(r, params, x)).collect(),
        xs,
        domain_half_width: half_width,
    };
    Ok((approximate, exact))
}

/// `|<phi_r*, psi_r>|` over the optimized box for r = 0..=r_max, by
/// quadrature at the order recommended for each r. Reported as an absolute
/// value because the overall sign of either wavefunction is a convention.
pub fn overlap_diagnostics(r_max: u32, params: &PhysicalParams) -> Vec<(u32, f64)> {
    (0..=r_max)
        .map(|r| {
            let l_star = variational::solve(r, params).l_star;
            let value = numerics::overlap(
                |x| variational::optimized_wavefunction(r, params, x),
                |x| exact_ho::wavefunction(r, params, x),
                -l_star,
                l_star,
                numerics::recommended_order(r),
            )
            .expect("optimized box is a valid integration interval");
            (r, value.abs())
        })
        .collect()
}

/// 17 significant digits: enough to round-trip any f64 exactly.
fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Write the spectrum table as CSV
/// (`r,e_star_over_ew,e_exact_over_ew,ratio,rel_error`).
pub fn emit_energy_csv(rows: &[EnergyComparisonRow], path: &Path) -> Result<()> {
    let mut out = String::from("r,e_star_over_ew,e_exact_over_ew,ratio,rel_error\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            row.r,
            fmt(row.e_star_over_ew),
            fmt(row.e_exact_over_ew),
            fmt(row.ratio),
            fmt(row.rel_error)
        );
    }
    write_file(path, &out)
}

/// Write a pair of traces sharing one grid as CSV (`x,approximate,exact`).
pub fn emit_trace_csv(
    approximate: &WavefunctionTrace,
    exact: &WavefunctionTrace,
    path: &Path,
) -> Result<()> {
    assert_eq!(
        approximate.xs, exact.xs,
        "trace pair must share its grid; use wavefunction_traces"
    );
    let mut out = String::from("x,approximate,exact\n");
    for ((&x, &a), &e) in approximate
        .xs
        .iter()
        .zip(&approximate.values)
        .zip(&exact.values)
    {
        let _ = writeln!(out, "{},{},{}", fmt(x), fmt(a), fmt(e));
    }
    write_file(path, &out)
}

/// Write overlap diagnostics as CSV (`r,abs_overlap`).
pub fn emit_overlap_csv(rows: &[(u32, f64)], path: &Path) -> Result<()> {
    let mut out = String::from("r,abs_overlap\n");
    for &(r, value) in rows {
        let _ = writeln!(out, "{r},{}", fmt(value));
    }
    write_file(path, &out)
}

/// Render the spectrum table as an SVG plot with one marker series per
/// energy family.
pub fn emit_energy_plot(rows: &[EnergyComparisonRow], path: &Path) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::EmptyPlot("energy table"));
    }
    let plot = svg::Plot {
        title: "Variational vs exact oscillator spectrum".to_string(),
        x_label: "r",
        y_label: "E / εω",
        series: vec![
            svg::Series {
                label: "approximate",
                color: "#1f77b4",
                points: rows
                    .iter()
                    .map(|row| (f64::from(row.r), row.e_star_over_ew))
                    .collect(),
                markers: true,
            },
            svg::Series {
                label: "exact",
                color: "#d62728",
                points: rows
                    .iter()
                    .map(|row| (f64::from(row.r), row.e_exact_over_ew))
                    .collect(),
                markers: true,
            },
        ],
    };
    write_file(path, &plot.render())
}

/// Render a trace pair as an SVG plot. Pass `None` for the exact trace to
/// plot the approximate wavefunction alone.
pub fn emit_trace_plot(
    approximate: &WavefunctionTrace,
    exact: Option<&WavefunctionTrace>,
    path: &Path,
) -> Result<()> {
    if approximate.xs.is_empty() {
        return Err(Error::EmptyPlot("wavefunction trace"));
    }
    let mut series = vec![svg::Series {
        label: "approximate",
        color: "#1f77b4",
        points: approximate
            .xs
            .iter()
            .copied()
            .zip(approximate.values.iter().copied())
            .collect(),
        markers: false,
    }];
    if let Some(exact) = exact {
        series.push(svg::Series {
            label: "exact",
            color: "#d62728",
            points: exact.xs.iter().copied().zip(exact.values.iter().copied()).collect(),
            markers: false,
        });
    }
    let plot = svg::Plot {
        title: format!("Wavefunctions for r = {}", approximate.r),
        x_label: "x",
        y_label: "φ(x)",
        series,
    };
    write_file(path, &plot.render())
}
