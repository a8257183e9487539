//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Failure modes of the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition on the arguments was violated.
    InvalidArgument(String),
    /// The input exceeds a hard size cap of the algorithm.
    UnsupportedSize(String),
    /// Malformed graph6 input; `offset` is the byte position.
    Parse { offset: usize, message: String },
    /// Integer overflow in an exact count.
    Overflow(String),
    /// A series evaluation point does not guarantee convergence.
    DivergenceRisk(String),
    /// The solver bracket assumptions do not hold for these inputs.
    UnsupportedRegime(String),
    /// A numeric solver failed; carries diagnostics.
    Numeric(String),
    /// A theorem hypothesis required for the check is not met.
    HypothesisNotMet(String),
    /// Descriptor enumeration disagrees with the canonical-code oracle.
    DescriptorMismatch(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(m) => write!(f, "invalid argument: {m}"),
            Error::UnsupportedSize(m) => write!(f, "unsupported size: {m}"),
            Error::Parse { offset, message } => {
                write!(f, "parse error at byte {offset}: {message}")
            }
            Error::Overflow(m) => write!(f, "overflow: {m}"),
            Error::DivergenceRisk(m) => write!(f, "divergence risk: {m}"),
            Error::UnsupportedRegime(m) => write!(f, "unsupported regime: {m}"),
            Error::Numeric(m) => write!(f, "numeric failure: {m}"),
            Error::HypothesisNotMet(m) => write!(f, "hypothesis not met: {m}"),
            Error::DescriptorMismatch(m) => write!(f, "descriptor mismatch: {m}"),
        }
    }
}

impl core::error::Error for Error {}
