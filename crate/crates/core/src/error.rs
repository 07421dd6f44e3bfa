//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside an operation's documented range.
    #[error("domain error: {0}")]
    Domain(String),

    /// The supplied jet cannot provide a requested derivative order.
    #[error("missing derivative data: {0}")]
    Capability(String),

    /// A numerical evaluation produced a non-finite value.
    #[error("non-finite evaluation: {0}")]
    Evaluation(String),

    /// A grid state contains a non-finite value at `index`.
    #[error("non-finite grid value at node {index}")]
    NonFinite { index: usize },

    /// A stencil failed a moment precondition at moment index `k`.
    #[error("moment precondition failed at k = {k}: M_k = {actual}, expected {expected}")]
    MomentPrecondition {
        k: usize,
        actual: String,
        expected: String,
    },

    /// Too few residuals above the rounding floor to fit a slope.
    #[error("degenerate fit: {0}")]
    DegenerateFit(String),
}
