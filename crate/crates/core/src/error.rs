use thiserror::Error;

use crate::scalar::BaseRingKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base ring mismatch: {0} vs {1}")]
    KindMismatch(BaseRingKind, BaseRingKind),

    #[error("not a unit: {0}")]
    NonUnit(String),

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown generator {name:?} at byte {pos}")]
    UnknownGenerator { name: String, pos: usize },

    #[error("monomial degree requested for a zero coefficient")]
    ZeroMonomial,

    #[error("symbol of the zero element")]
    ZeroElement,

    #[error("level {level} map applied to an element involving generator {generator}")]
    Support { level: String, generator: String },

    #[error("elements belong to different algebras")]
    PresentationMismatch,

    #[error("cannot raise truncation order from {available} to {requested}")]
    OrderRaise { requested: u32, available: u32 },

    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(u32, u32),

    #[error("order {order} exceeds the base ring truncation t^{cap}")]
    OrderExceedsBase { order: u32, cap: u32 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("exponent {0} exceeds the supported bound")]
    ExponentTooLarge(u64),

    #[error("configuration error: {0}")]
    Config(String),
}
