use thiserror::Error;

/// Errors raised by the kernel, chain model, triangulation and harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    /// An input violates a documented precondition (ranges, triangle
    /// inequality, cardinalities, parse failures).
    #[error("domain error: {0}")]
    Domain(String),

    /// A shape cannot be realized on the requested surface.
    #[error("embeddability error: {0}")]
    Embeddability(String),

    /// Two values bound to different curvatures were combined.
    #[error("curvature mismatch: {left} vs {right}")]
    CurvatureMismatch { left: f64, right: f64 },

    /// Rejection sampling gave up.
    #[error("generator exhausted after {attempts} attempts: {diagnostics}")]
    GeneratorExhausted {
        attempts: usize,
        diagnostics: String,
    },
}

impl GeomError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        GeomError::Domain(msg.into())
    }

    pub(crate) fn embed(msg: impl Into<String>) -> Self {
        GeomError::Embeddability(msg.into())
    }
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;
