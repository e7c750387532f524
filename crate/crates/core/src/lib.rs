//! Variational treatment of the one-dimensional harmonic oscillator in a
//! particle-in-a-box basis.
//!
//! Box eigenstates serve as trial wavefunctions with the box size as the
//! variation parameter; optimizing it yields closed-form approximate
//! energies and wavefunctions for every oscillator level. Everything
//! closed-form is verified against independent Gauss-Legendre quadrature
//! and golden-section minimization oracles.
//!
//! Module map:
//! - [`box_model`]: the trial basis (box eigenstates, eigenvalues).
//! - [`variational`]: the energy functional and its closed-form optimum.
//! - [`exact_ho`]: exact oscillator eigenvalues and eigenfunctions.
//! - [`numerics`]: quadrature and scalar minimization oracles.
//! - [`report`]: comparison tables, wavefunction traces, CSV/SVG emission.

pub mod box_model;
pub mod error;
pub mod exact_ho;
pub mod numerics;
pub mod report;
pub mod variational;

pub use box_model::{BoxState, PhysicalParams};
pub use error::{Error, Result};
pub use numerics::{MinimizationResult, QuadratureRule};
pub use report::{EnergyComparisonRow, TraceKind, WavefunctionTrace};
pub use variational::{EnergyCoefficients, VariationalSolution};
