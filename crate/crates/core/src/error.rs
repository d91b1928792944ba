//! Crate-wide error type.
//!
//! Every failure path names the invariant that was violated so that the CLI
//! can surface it verbatim as a machine-readable diagnostic.

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inversion of a series whose retained coefficients are all zero.
    #[error("cannot invert a series with zero leading coefficient")]
    InvertAtZeroLeading,
    /// Matrix or tensor dimensions do not fit together.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// A normalization constant could not be fixed consistently.
    #[error("calibration failure: {0}")]
    CalibrationFailure(String),
    /// The two largest eigenvalues in absolute value coincide.
    #[error("degenerate dominant eigenvalue: {0}")]
    DegenerateDominantEigenvalue(String),
    /// The characteristic polynomial has non-real roots.
    #[error("non-real spectrum: {0}")]
    NonRealSpectrum(String),
    /// A fused transfer-matrix eigenvalue vanishes.
    #[error("zero eigenvalue of the fused transfer matrix at {0}")]
    ZeroEigenvalue(String),
    /// The rewrite system failed to reach a fixpoint.
    #[error("normal ordering did not terminate: {0}")]
    NonTerminating(String),
    /// A pole survives in a variable whose modes are extracted.
    #[error("singular mode extraction: {0}")]
    SingularExtraction(String),
    /// Evaluation of a rational function at one of its poles.
    #[error("pole at {0}")]
    PoleAtZ(String),
    /// An ω-atom survives after functional-equation reduction.
    #[error("residual omega dependence: {0}")]
    ResidualOmega(String),
    /// A negative-order Laurent coefficient survives the homogeneous limit.
    #[error("singular homogeneous limit: {0}")]
    SingularLimit(String),
    /// The constant term of the homogeneous limit depends on the directions.
    #[error("direction dependence: {0}")]
    DirectionDependence(String),
    /// A sign convention was requested that has not been fixed.
    #[error("uncalibrated sign for monomial class {0}")]
    UncalibratedSign(String),
    /// The fitting system has no unique solution.
    #[error("singular system: {0}")]
    SingularSystem(String),
    /// Input is not a valid density matrix.
    #[error("not a density matrix: {0}")]
    NotADensityMatrix(String),
    /// A caller-supplied value could not be parsed or validated.
    #[error("configuration error: {0}")]
    ConfigError(String),
    /// Parse failure for textual input (rationals, words, polynomials).
    #[error("parse error: {0}")]
    Parse(String),
    /// A request exceeds the configured size cap.
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
}

impl Error {
    /// Stable machine-readable name of the violated invariant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvertAtZeroLeading => "InvertAtZeroLeading",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::CalibrationFailure(_) => "CalibrationFailure",
            Error::DegenerateDominantEigenvalue(_) => "DegenerateDominantEigenvalue",
            Error::NonRealSpectrum(_) => "NonRealSpectrum",
            Error::ZeroEigenvalue(_) => "ZeroEigenvalue",
            Error::NonTerminating(_) => "NonTerminating",
            Error::SingularExtraction(_) => "SingularExtraction",
            Error::PoleAtZ(_) => "PoleAtZ",
            Error::ResidualOmega(_) => "ResidualOmega",
            Error::SingularLimit(_) => "SingularLimit",
            Error::DirectionDependence(_) => "DirectionDependence",
            Error::UncalibratedSign(_) => "UncalibratedSign",
            Error::SingularSystem(_) => "SingularSystem",
            Error::NotADensityMatrix(_) => "NotADensityMatrix",
            Error::ConfigError(_) => "ConfigError",
            Error::Parse(_) => "Parse",
            Error::SizeLimit(_) => "SizeLimit",
        }
    }
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
