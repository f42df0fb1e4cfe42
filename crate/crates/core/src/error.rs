use thiserror::Error;

/// Errors raised by complex construction, spectral analysis, filter design and the applications.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("triangle {triangle:?} is missing its edge {edge:?}")]
    MissingFace { triangle: [usize; 3], edge: [usize; 2] },

    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("simplex {0:?} repeats a vertex")]
    DegenerateSimplex([usize; 3]),

    #[error("simplex {0:?} appears twice")]
    DuplicateSimplex([usize; 3]),

    #[error("unsupported simplex order {0}")]
    UnsupportedOrder(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("symmetric eigensolver did not converge")]
    EigenFailure,

    #[error("design target has no frequencies")]
    EmptySpec,

    #[error("gradient and curl responses disagree at zero: {gradient} vs {curl}")]
    DomainMismatch { gradient: f64, curl: f64 },

    #[error("one-sided filters cannot extract the harmonic component")]
    UnsupportedCombination,

    #[error("reference signal has zero norm")]
    ZeroReference,

    #[error("exchange rate {from}->{to} is not positive")]
    NonPositiveRate { from: usize, to: usize },

    #[error("market is missing the quote {from}->{to}")]
    IncompleteMarket { from: usize, to: usize },

    #[error("linear system is singular")]
    SingularSystem,

    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
