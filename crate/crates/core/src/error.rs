use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("series truncation orders differ: {left} vs {right}")]
    MismatchedOrder { left: usize, right: usize },
    #[error("series does not have constant term 1")]
    NotMonic,
    #[error("series must have zero constant term")]
    NonzeroConstant,
    #[error("pole of order {order} at nu = {at}")]
    HigherOrderPole { at: i64, order: usize },
    #[error("pole at nu = {0}")]
    Pole(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("value is not a scalar")]
    NotScalar,
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}
