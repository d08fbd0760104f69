use crate::HalfInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AngmomError {
    #[error("spin must be nonnegative, got {j}")]
    NegativeSpin { j: HalfInt },
    #[error("projection {m} is incompatible with spin {j}")]
    InvalidProjection { j: HalfInt, m: HalfInt },
    #[error("series parameter b = {b} must be <= 0 for a terminating 2F1")]
    NonTerminatingSeries { b: i64 },
    #[error("two-row diagram requires row1 >= row2, got [{row1}, {row2}]")]
    InvalidDiagram { row1: u64, row2: u64 },
    #[error("dimension d = {d} is too small for a diagram with {rows} rows")]
    DimensionTooSmall { d: u32, rows: u32 },
}
