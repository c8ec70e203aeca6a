use thiserror::Error;

/// Errors raised by the family, cube and homology operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation (ground size,
    /// mask range, dimension index, enumeration caps).
    #[error("domain error: {0}")]
    Domain(String),
    /// The operation is only defined under a hypothesis the input violates.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A complex is not closed under taking faces.
    #[error("integrity error: {0}")]
    Integrity(String),
    /// Malformed family JSON.
    #[error("invalid family: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
