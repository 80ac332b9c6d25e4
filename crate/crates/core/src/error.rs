use thiserror::Error;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system {0}")]
    UnsupportedRootSystem(String),

    #[error("node {node} of {system} is not cominuscule")]
    NotCominuscule { system: String, node: usize },

    #[error("cannot parse space {text:?}: {reason}")]
    SpaceSyntax { text: String, reason: String },

    #[error("cannot parse position {text:?}: {reason}")]
    PositionSyntax { text: String, reason: String },

    #[error("{what} exceeds the cap of {cap}")]
    CapExceeded { what: String, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("no oracle available for {0}")]
    NoOracle(String),

    /// A structural invariant failed; indicates a bug rather than bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
