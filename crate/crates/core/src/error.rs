//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported dimension n = {n}: supported range is 1 <= p+q <= 4")]
    UnsupportedDimension { n: usize },

    #[error("signature mismatch: expected Cl({expected_p},{expected_q}), got Cl({got_p},{got_q})")]
    SignatureMismatch {
        expected_p: usize,
        expected_q: usize,
        got_p: usize,
        got_q: usize,
    },

    #[error("grade {grade} out of range for dimension {n}")]
    GradeOutOfRange { grade: usize, n: usize },

    #[error("degenerate plane ({i},{j}): axes must be distinct and within dimension {n}")]
    DegeneratePlane { i: usize, j: usize, n: usize },

    #[error("matrix is not pseudo-orthogonal: max |g^T eta g - eta| = {deviation:.3e}")]
    NotPseudoOrthogonal { deviation: f64 },

    #[error("shape mismatch: {context}")]
    ShapeMismatch { context: String },

    #[error("channel mismatch: expected {expected}, got {got}")]
    ChannelMismatch { expected: usize, got: usize },

    #[error("group element does not act exactly on the grid: {context}")]
    NotGridExact { context: String },

    #[error("ring spectrum requires signature (2,0), got ({p},{q})")]
    SpectrumSignature { p: usize, q: usize },

    #[error("sample count {samples} violates the Nyquist margin: need at least {required} for max frequency {max_freq}")]
    NyquistViolation {
        samples: usize,
        required: usize,
        max_freq: usize,
    },

    #[error("parse error in {what}: {detail}")]
    Parse { what: String, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn shape(context: impl Into<String>) -> Self {
        Error::ShapeMismatch {
            context: context.into(),
        }
    }
}
