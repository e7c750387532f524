//! Acceptance suite: the contract this artifact ships against, one test per
//! criterion. Each test prints a PASS line with the observed margin once its
//! assertions hold (visible under `cargo test -- --nocapture`).

use std::path::Path;
use std::process::{Command, Output};

use vho_core::box_model::{self, BoxState, PhysicalParams};
use vho_core::exact_ho;
use vho_core::numerics;
use vho_core::report;
use vho_core::variational;

fn natural() -> PhysicalParams {
    PhysicalParams::natural()
}

fn vho(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vho"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

/// Criterion 1: the peak ratio reproduces the printed value 0.9221215996 to
/// 1e-9 absolute.
#[test]
fn criterion_1_peak_ratio() {
    let got = report::peak_ratio(&natural());
    let err = (got - 0.9221215996).abs();
    assert!(err <= 1e-9, "peak ratio {got} off by {err:.3e}");
    println!("[PASS] criterion 1: peak ratio = {got:.10} (|err| = {err:.3e} <= 1e-9)");
}

/// Criterion 2: the closed-form spectrum values for r = 0, 1, 2, each
/// confirmed by golden-section minimization of the energy functional to
/// 1e-8 relative.
#[test]
fn criterion_2_closed_form_spectrum() {
    let params = natural();
    // Expected values evaluated from the optimized-energy formula with
    // 40-digit arithmetic and confirmed by the minimizer oracle. (A widely
    // circulated figure for r = 2 reads 2.6272333; both routes here agree on
    // 2.6272045 instead, so that is what this suite pins.)
    let expected = [0.5678618, 1.6702898, 2.6272045];
    for (r, want) in expected.iter().enumerate() {
        let r = r as u32;
        let solution = variational::solve(r, &params);
        let closed = solution.e_star / params.epsilon_omega();
        assert!(
            (closed - want).abs() <= 1e-6,
            "r = {r}: closed form {closed} vs {want}"
        );
        let numeric = variational::minimize_functional(r, &params).unwrap();
        assert!(numeric.converged);
        let rel = ((numeric.f_min - solution.e_star) / solution.e_star).abs();
        assert!(rel <= 1e-8, "r = {r}: minimizer disagrees by {rel:.3e}");
        println!(
            "[PASS] criterion 2: E*_{r}/eps_w = {closed:.7} (minimizer confirms to {rel:.3e} <= 1e-8)"
        );
    }
}

/// Criterion 3: quadrature of the Hamiltonian expectation matches the
/// analytically integrated functional to 1e-9 relative for all r <= 20 and
/// box half-widths {0.5, 1, 2, 5}.
#[test]
fn criterion_3_quadrature_closed_form_equivalence() {
    let params = natural();
    let mut worst = 0.0f64;
    for r in 0..=20u32 {
        for l in [0.5, 1.0, 2.0, 5.0] {
            let state = BoxState::new(r, l).unwrap();
            let eps = box_model::ground_scale(l, &params).unwrap();
            let quadrature =
                numerics::expectation_energy(&state, &params, numerics::DEFAULT_ORDER).unwrap();
            let closed = variational::energy_functional(r, eps, &params).unwrap();
            let rel = ((quadrature - closed) / closed).abs();
            assert!(rel <= 1e-9, "r = {r}, L = {l}: rel {rel:.3e}");
            worst = worst.max(rel);
        }
    }
    println!("[PASS] criterion 3: quadrature vs closed form, worst rel = {worst:.3e} <= 1e-9");
}

/// Criterion 4: central finite difference of the functional at eps* stays
/// below 1e-6 * eps_omega for r <= 20.
#[test]
fn criterion_4_stationarity() {
    let params = natural();
    let eps_omega = params.epsilon_omega();
    let mut worst = 0.0f64;
    for r in 0..=20u32 {
        let eps_star = variational::solve(r, &params).epsilon_star;
        let h = 1e-5 * eps_star;
        let above = variational::energy_functional(r, eps_star + h, &params).unwrap();
        let below = variational::energy_functional(r, eps_star - h, &params).unwrap();
        let derivative = ((above - below) / (2.0 * h)).abs();
        assert!(
            derivative < 1e-6 * eps_omega,
            "r = {r}: |dE/deps| = {derivative:.3e}"
        );
        worst = worst.max(derivative);
    }
    println!("[PASS] criterion 4: stationarity, worst |dE/deps| = {worst:.3e} < 1e-6");
}

/// Criterion 5: the ground-state variational bound holds strictly, and the
/// signed comparison flips from above to below exactly at r = 4.
#[test]
fn criterion_5_bound_and_crossover() {
    let params = natural();
    let e0_star = variational::solve(0, &params).e_star;
    let e0 = exact_ho::energy(0, &params);
    assert!(e0_star >= e0, "variational bound violated: {e0_star} < {e0}");
    for r in 0..=3u32 {
        assert!(
            variational::solve(r, &params).e_star > exact_ho::energy(r, &params),
            "r = {r}: expected E* above exact"
        );
    }
    for r in 4..=50u32 {
        assert!(
            variational::solve(r, &params).e_star < exact_ho::energy(r, &params),
            "r = {r}: expected E* below exact"
        );
    }
    println!(
        "[PASS] criterion 5: bound E*_0 = {e0_star:.7} >= {e0}; crossover sits between r = 3 and r = 4"
    );
}

/// Criterion 6: basis integrity. Box orthonormality to 1e-10 (r, s <= 20),
/// exact orthonormality to 1e-8 (r, s <= 10), boundary and parity
/// invariants on 101-point grids.
#[test]
fn criterion_6_basis_integrity() {
    let params = natural();

    let l = 1.7;
    let mut worst_box = 0.0f64;
    for r in 0..=20u32 {
        for s in r..=20u32 {
            let a = BoxState::new(r, l).unwrap();
            let b = BoxState::new(s, l).unwrap();
            let inner = numerics::overlap(
                |x| box_model::wavefunction(&a, x),
                |x| box_model::wavefunction(&b, x),
                -l,
                l,
                numerics::recommended_order(s),
            )
            .unwrap();
            let expected = if r == s { 1.0 } else { 0.0 };
            let err = (inner - expected).abs();
            assert!(err <= 1e-10, "box <{r}|{s}>: err {err:.3e}");
            worst_box = worst_box.max(err);
        }
    }

    let window = exact_ho::norm_half_width(&params);
    let mut worst_exact = 0.0f64;
    for r in 0..=10u32 {
        for s in r..=10u32 {
            let inner = numerics::overlap(
                |x| exact_ho::wavefunction(r, &params, x),
                |x| exact_ho::wavefunction(s, &params, x),
                -window,
                window,
                128,
            )
            .unwrap();
            let expected = if r == s { 1.0 } else { 0.0 };
            let err = (inner - expected).abs();
            assert!(err <= 1e-8, "exact <{r}|{s}>: err {err:.3e}");
            worst_exact = worst_exact.max(err);
        }
    }

    for r in 0..=20u32 {
        let state = BoxState::new(r, l).unwrap();
        assert!(box_model::wavefunction(&state, l).abs() < 1e-12);
        assert!(box_model::wavefunction(&state, -l).abs() < 1e-12);
        let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
        for i in 0..=100 {
            let x = -l + 2.0 * l * f64::from(i) / 100.0;
            assert!(
                (box_model::wavefunction(&state, -x) - sign * box_model::wavefunction(&state, x))
                    .abs()
                    < 1e-12
            );
            let y = 6.0 * x / l;
            assert!(
                (exact_ho::wavefunction(r, &params, -y)
                    - sign * exact_ho::wavefunction(r, &params, y))
                .abs()
                    < 1e-12
            );
        }
    }

    println!(
        "[PASS] criterion 6: orthonormality worst err box {worst_box:.3e} <= 1e-10, \
         exact {worst_exact:.3e} <= 1e-8; boundary and parity clean"
    );
}

/// Criterion 7: `compare --r-max 10` emits an energy CSV with both series
/// monotone in r and small low-r errors, plus r = 0 and r = 1 trace CSVs
/// that reproduce the library's trace data exactly.
#[test]
fn criterion_7_figure_reproduction() {
    let dir = tempfile::tempdir().unwrap();
    let out = vho(&["compare", "--r-max", "10", "--output-dir", "."], dir.path());
    assert!(out.status.success(), "compare failed: {out:?}");

    let energy_csv = std::fs::read_to_string(dir.path().join("energy_table.csv")).unwrap();
    let mut rows: Vec<(u32, f64, f64, f64)> = Vec::new();
    for line in energy_csv.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        rows.push((
            fields[0].parse().unwrap(),
            fields[1].parse().unwrap(),
            fields[2].parse().unwrap(),
            fields[4].parse().unwrap(),
        ));
    }
    assert_eq!(rows.len(), 11);
    for pair in rows.windows(2) {
        assert!(pair[1].1 > pair[0].1, "approximate series not monotone");
        assert!(pair[1].2 > pair[0].2, "exact series not monotone");
    }
    assert!(rows[0].3.abs() <= 0.14, "r = 0 rel error {}", rows[0].3);
    assert!(rows[1].3.abs() <= 0.12, "r = 1 rel error {}", rows[1].3);

    let params = natural();
    for r in [0u32, 1] {
        let text = std::fs::read_to_string(dir.path().join(format!("trace_r{r}.csv"))).unwrap();
        let (approx, exact) = report::wavefunction_traces(r, &params, 401).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "x,approximate,exact");
        assert_eq!(lines.len(), 402);
        for (i, line) in lines[1..].iter().enumerate() {
            let fields: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
            assert_eq!(fields[0].to_bits(), approx.xs[i].to_bits());
            assert_eq!(fields[1].to_bits(), approx.values[i].to_bits());
            assert_eq!(fields[2].to_bits(), exact.values[i].to_bits());
        }
    }

    println!(
        "[PASS] criterion 7: energy series monotone, rel errors {:.4} (r=0) and {:.4} (r=1); \
         trace CSVs bit-exact against the library",
        rows[0].3, rows[1].3
    );
}

/// Criterion 8: overlaps bounded by one (plus quadrature slack) for
/// r <= 10, with the r = 0 and r = 1 values pinned to frozen goldens at
/// 1e-10.
#[test]
fn criterion_8_overlap_diagnostics() {
    let rows = report::overlap_diagnostics(10, &natural());
    for &(r, value) in &rows {
        assert!(value <= 1.0 + 1e-10, "r = {r}: overlap {value} above bound");
    }
    let golden = [(0usize, 0.99426308799994924), (1, 0.98583102136795026)];
    for (index, want) in golden {
        let got = rows[index].1;
        let err = (got - want).abs();
        assert!(err <= 1e-10, "r = {index}: overlap {got} off golden by {err:.3e}");
    }
    println!(
        "[PASS] criterion 8: overlaps bounded; r = 0, 1 reproduce goldens {:.10}, {:.10}",
        rows[0].1, rows[1].1
    );
}

/// Criterion 9: identical configs produce byte-identical stdout and files.
#[test]
fn criterion_9_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let configs: [&[&str]; 4] = [
        &["energies", "--r-max", "12", "--output-dir", ".", "--format", "both"],
        &["compare", "--r-max", "5", "--output-dir", "."],
        &["wavefunction", "--r", "2", "--exact", "--output-dir", ".", "--format", "both"],
        &["optimize", "--r", "3", "--method", "golden"],
    ];
    for args in configs {
        let first = vho(args, dir.path());
        assert!(first.status.success());
        let mut first_files = read_outputs(dir.path());
        let second = vho(args, dir.path());
        assert!(second.status.success());
        let second_files = read_outputs(dir.path());
        assert_eq!(first.stdout, second.stdout, "stdout differs for {args:?}");
        for (name, bytes) in &second_files {
            let previous = first_files.remove(name).expect("same file set");
            assert_eq!(&previous, bytes, "file {name} differs for {args:?}");
        }
    }
    println!("[PASS] criterion 9: repeated runs byte-identical (stdout and emitted files)");
}

fn read_outputs(dir: &Path) -> std::collections::BTreeMap<String, Vec<u8>> {
    let mut files = std::collections::BTreeMap::new();
    for entry in std::fs::read_dir(dir).unwrap() {
        let entry = entry.unwrap();
        if entry.file_type().unwrap().is_file() {
            files.insert(
                entry.file_name().to_string_lossy().into_owned(),
                std::fs::read(entry.path()).unwrap(),
            );
        }
    }
    files
}
