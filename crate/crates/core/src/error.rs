use alloc::string::String;

/// Errors raised by the algebraic kernels.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("ring mismatch: operands live in different polynomial rings")]
    RingMismatch,
    #[error("exponent {value} exceeds the per-coordinate cap {cap}")]
    ExponentOverflow { value: u64, cap: u32 },
    #[error("the ideal is not square-free")]
    NotSquareFree,
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
    #[error("operation undefined for the unit ideal")]
    UnitIdeal,
    #[error("a variable is set to both 0 and 1 in a minor")]
    OverlappingMinor,
    #[error("variable index {0} out of range")]
    VariableOutOfRange(usize),
    #[error("graph has a loop at vertex {0}")]
    GraphLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("containment precondition violated: {0}")]
    NotContained(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("resource cap exceeded: {what} (limit {limit})")]
    CapExceeded { what: String, limit: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("operation requires positive characteristic")]
    CharacteristicZero,
    #[error("division by zero in the coefficient field")]
    DivisionByZero,
}

pub type Result<T> = core::result::Result<T, Error>;
