use thiserror::Error;

/// Failure modes shared across the crate.
///
/// Exact arithmetic turns broken theorems into hard errors: `NotDivisible`
/// in particular signals that a division which is exact by construction
/// produced a remainder, i.e. an invariant upstream is wrong.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division left a nonzero remainder")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("index out of range")]
    IndexOutOfRange,
    #[error("term count exceeds the configured cap")]
    ResourceLimit,
    #[error("partition has more parts than the number of rows")]
    ShapeTooLong,
    #[error("row is not strictly decreasing")]
    NotStrict,
    #[error("pattern top row does not match the expected shape")]
    TopRowMismatch,
    #[error("partition does not fit in the requested box")]
    ShapeOutOfBox,
    #[error("shift index exceeds the desk-scale budget")]
    ShiftBudgetExceeded,
    #[error("parts are not weakly decreasing")]
    NotAPartition,
}

pub type Result<T> = std::result::Result<T, Error>;
