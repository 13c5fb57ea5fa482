use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The numerator of a series quotient vanishes to a lower order than the
    /// denominator, so the quotient has a pole at the origin.
    #[error("non-removable singularity: numerator valuation {numerator} < denominator valuation {denominator}")]
    NonRemovableSingularity {
        numerator: usize,
        denominator: usize,
    },
    #[error("division by a series that is zero up to order {order}")]
    ZeroDivisor { order: usize },
    /// A value that must be an integer came out fractional. This always
    /// points at a bug in one of the formula routes.
    #[error("internal inconsistency: {context} produced non-integral value {value}")]
    NonIntegral { context: String, value: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("matrix is not square: {rows} rows, row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
