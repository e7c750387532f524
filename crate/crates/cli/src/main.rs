//! `vho`: command-line driver for the box-basis variational oscillator
//! toolkit. Computes spectra, samples wavefunctions, runs comparisons and
//! executes the full oracle validation suite.

mod validate;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use vho_core::{report, variational, PhysicalParams};

#[derive(Parser)]
#[command(
    name = "vho",
    version,
    about = "Variational treatment of the 1-D harmonic oscillator in a particle-in-a-box basis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PhysicalArgs {
    /// Particle mass.
    #[arg(long, default_value_t = 1.0)]
    mass: f64,
    /// Oscillator angular frequency.
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    /// Reduced Planck constant.
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
}

impl PhysicalArgs {
    fn params(&self) -> Result<PhysicalParams> {
        if !(self.mass > 0.0 && self.omega > 0.0 && self.hbar > 0.0) {
            bail!(
                "mass, omega and hbar must all be positive (got {}, {}, {})",
                self.mass,
                self.omega,
                self.hbar
            );
        }
        Ok(PhysicalParams::new(self.mass, self.omega, self.hbar)?)
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Directory receiving emitted files.
    #[arg(long, default_value = ".")]
    output_dir: PathBuf,
    /// File kinds to emit.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Plot,
    Both,
}

impl Format {
    fn csv(self) -> bool {
        matches!(self, Format::Csv | Format::Both)
    }

    fn plot(self) -> bool {
        matches!(self, Format::Plot | Format::Both)
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Closed-form optimum.
    Analytic,
    /// Golden-section minimization of the energy functional, reported next
    /// to the closed form.
    Golden,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate variational vs exact energies for r = 0..=r_max.
    Energies {
        #[arg(long)]
        r_max: u32,
        #[command(flatten)]
        physical: PhysicalArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sample the optimized wavefunction for one quantum number.
    Wavefunction {
        #[arg(long)]
        r: u32,
        /// Include the exact eigenstate in the plot and summary.
        #[arg(long)]
        exact: bool,
        /// Grid points across the sampling window (odd, so x = 0 is hit).
        #[arg(long, default_value_t = 401)]
        n_points: usize,
        #[command(flatten)]
        physical: PhysicalArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Energy table, overlap diagnostics, peak ratio and the r = 0, 1
    /// wavefunction traces in one run.
    Compare {
        #[arg(long)]
        r_max: u32,
        /// Grid points for the emitted traces.
        #[arg(long, default_value_t = 401)]
        n_points: usize,
        #[command(flatten)]
        physical: PhysicalArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Solve one level analytically or by golden-section minimization.
    Optimize {
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum)]
        method: Method,
        #[command(flatten)]
        physical: PhysicalArgs,
    },
    /// Run the full oracle suite; exits nonzero on any failed check.
    Validate {
        /// Quadrature order for the closed-form comparison sweep.
        #[arg(long, default_value_t = 64)]
        quadrature_order: usize,
        #[command(flatten)]
        physical: PhysicalArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Energies {
            r_max,
            physical,
            output,
        } => {
            let params = physical.params()?;
            let rows = report::energy_table(r_max, &params);
            print_energy_table(&rows);
            emit_energy_files(&rows, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Wavefunction {
            r,
            exact,
            n_points,
            physical,
            output,
        } => {
            let params = physical.params()?;
            let (approx_trace, exact_trace) = report::wavefunction_traces(r, &params, n_points)?;
            let solution = variational::solve(r, &params);
            println!("wavefunction r = {r}");
            println!("  L*      = {:.16}", solution.l_star);
            println!(
                "  window  = [{:.16}, {:.16}]",
                -approx_trace.domain_half_width, approx_trace.domain_half_width
            );
            println!("  points  = {n_points}");
            println!("  phi*(0) = {:.16}", approx_trace.values[n_points / 2]);
            if exact {
                println!("  psi(0)  = {:.16}", exact_trace.values[n_points / 2]);
            }
            if output.format.csv() {
                let path = output.output_dir.join(format!("trace_r{r}.csv"));
                report::emit_trace_csv(&approx_trace, &exact_trace, &path)?;
                println!("wrote {}", path.display());
            }
            if output.format.plot() {
                let path = output.output_dir.join(format!("trace_r{r}.svg"));
                let exact_series = exact.then_some(&exact_trace);
                report::emit_trace_plot(&approx_trace, exact_series, &path)?;
                println!("wrote {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare {
            r_max,
            n_points,
            physical,
            output,
        } => {
            let params = physical.params()?;
            let rows = report::energy_table(r_max, &params);
            print_energy_table(&rows);
            println!();
            let ratio = report::peak_ratio(&params);
            println!(
                "peak ratio phi*_0(0)/psi_0(0) = {ratio:.16} (reference 0.9221215996, |diff| = {:.1e})",
                (ratio - 0.9221215996).abs()
            );
            println!();
            let overlaps = report::overlap_diagnostics(r_max, &params);
            println!("{:>5}  |<phi*_r, psi_r>|", "r");
            for &(r, value) in &overlaps {
                println!("{r:>5}  {value:.10}");
            }
            emit_energy_files(&rows, &output)?;
            if output.format.csv() {
                let path = output.output_dir.join("overlaps.csv");
                report::emit_overlap_csv(&overlaps, &path)?;
                println!("wrote {}", path.display());
            }
            // the two figure states
            for r in [0u32, 1] {
                let (approx_trace, exact_trace) =
                    report::wavefunction_traces(r, &params, n_points)?;
                if output.format.csv() {
                    let path = output.output_dir.join(format!("trace_r{r}.csv"));
                    report::emit_trace_csv(&approx_trace, &exact_trace, &path)?;
                    println!("wrote {}", path.display());
                }
                if output.format.plot() {
                    let path = output.output_dir.join(format!("trace_r{r}.svg"));
                    report::emit_trace_plot(&approx_trace, Some(&exact_trace), &path)?;
                    println!("wrote {}", path.display());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Optimize {
            r,
            method,
            physical,
        } => {
            let params = physical.params()?;
            let analytic = variational::solve(r, &params);
            match method {
                Method::Analytic => {
                    println!("r = {r} (analytic)");
                    println!("  eps* = {:.16}", analytic.epsilon_star);
                    println!("  L*   = {:.16}", analytic.l_star);
                    println!("  E*_r = {:.16}", analytic.e_star);
                }
                Method::Golden => {
                    let numeric = variational::minimize_functional(r, &params)
                        .context("golden-section minimization failed")?;
                    let l_numeric = optimal_half_width(numeric.x_min, &params);
                    println!(
                        "r = {r} (golden-section, {} iterations, converged = {})",
                        numeric.iterations, numeric.converged
                    );
                    println!("  eps* = {:.16}", numeric.x_min);
                    println!("  L*   = {l_numeric:.16}");
                    println!("  E*_r = {:.16}", numeric.f_min);
                    println!("analytic");
                    println!("  eps* = {:.16}", analytic.epsilon_star);
                    println!("  L*   = {:.16}", analytic.l_star);
                    println!("  E*_r = {:.16}", analytic.e_star);
                    println!("difference");
                    println!(
                        "  |delta eps*| = {:.3e}",
                        (numeric.x_min - analytic.epsilon_star).abs()
                    );
                    println!(
                        "  |delta L*|   = {:.3e}",
                        (l_numeric - analytic.l_star).abs()
                    );
                    println!(
                        "  |delta E*_r| = {:.3e}",
                        (numeric.f_min - analytic.e_star).abs()
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate {
            quadrature_order,
            physical,
        } => {
            let params = physical.params()?;
            if quadrature_order == 0 {
                bail!("quadrature order must be at least 1");
            }
            let checks = validate::run_all(&params, quadrature_order);
            let mut failed = 0usize;
            println!(
                "oracle validation (mass = {}, omega = {}, hbar = {}, order = {})",
                params.mass(),
                params.omega(),
                params.hbar(),
                quadrature_order
            );
            for check in &checks {
                let status = if check.passed() { "PASS" } else { "FAIL" };
                if !check.passed() {
                    failed += 1;
                }
                println!(
                    "{status}  {:<46}  tol {:>9.1e}  observed {:>9.3e}",
                    check.name, check.tolerance, check.observed
                );
            }
            println!("{} checks passed, {} failed", checks.len() - failed, failed);
            if failed > 0 {
                Ok(ExitCode::FAILURE)
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

/// Box half-width corresponding to a ground scale, from
/// `L^2 = hbar^2 pi^2 / (8 m eps)`.
fn optimal_half_width(epsilon_star: f64, params: &PhysicalParams) -> f64 {
    let hbar = params.hbar();
    (hbar * hbar * std::f64::consts::PI.powi(2) / (8.0 * params.mass() * epsilon_star)).sqrt()
}

fn print_energy_table(rows: &[vho_core::EnergyComparisonRow]) {
    println!(
        "{:>5}  {:>14}  {:>14}  {:>14}  {:>14}",
        "r", "E*_r/eps_w", "E_r/eps_w", "ratio", "rel_error"
    );
    for row in rows {
        println!(
            "{:>5}  {:>14.8}  {:>14.8}  {:>14.8}  {:>14.8}",
            row.r, row.e_star_over_ew, row.e_exact_over_ew, row.ratio, row.rel_error
        );
    }
}

fn emit_energy_files(rows: &[vho_core::EnergyComparisonRow], output: &OutputArgs) -> Result<()> {
    if output.format.csv() {
        let path = output.output_dir.join("energy_table.csv");
        report::emit_energy_csv(rows, &path)?;
        println!("wrote {}", path.display());
    }
    if output.format.plot() {
        let path = output.output_dir.join("energy_table.svg");
        report::emit_energy_plot(rows, &path)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
