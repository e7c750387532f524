//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A physical parameter violated its positivity constraint.
    #[error("invalid physical parameter {name} = {value}: must be {constraint}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    /// Box half-width must be strictly positive.
    #[error("box half-width must be positive and finite, got {0}")]
    InvalidHalfWidth(f64),

    /// The variation parameter of the energy functional must be positive.
    #[error("variation parameter must be positive, got {0}")]
    NonPositiveEpsilon(f64),

    /// Requested quadrature order is outside the supported range.
    #[error("quadrature order {0} out of range 1..={max}", max = crate::numerics::MAX_ORDER)]
    OrderOutOfRange(usize),

    /// Integration interval with a >= b.
    #[error("invalid integration interval [{a}, {b}]: lower bound must be below upper")]
    InvalidInterval { a: f64, b: f64 },

    /// Invalid bracket or tolerance handed to the minimizer.
    #[error("invalid minimization request: {0}")]
    InvalidMinimization(String),

    /// Hermite degree above the overflow-safe cap.
    #[error("Hermite degree {0} exceeds the overflow cap {cap}", cap = crate::exact_ho::MAX_HERMITE_DEGREE)]
    HermiteDegreeTooLarge(u32),

    /// Trace grids need an odd number of points so x = 0 is sampled.
    #[error("trace grid needs an odd point count >= 3, got {0}")]
    InvalidGridSize(usize),

    /// Nothing to render.
    #[error("refusing to render empty {0}")]
    EmptyPlot(&'static str),

    /// File output failed.
    #[error("failed to write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
