use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a factorial scheme needs at least one factor")]
    NoFactors,

    #[error("factor {index} has size {size}; every factor needs at least 2 points")]
    FactorTooSmall { index: usize, size: u64 },

    #[error("{n} factors exceed the mask word width of {max}")]
    TooManyFactors { n: usize, max: usize },

    #[error("characteristic {0} is neither 0 nor a prime below 2^32")]
    BadCharacteristic(u64),

    #[error("enumeration over {n} factors exceeds the cap of {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("oracle point set has {points} points, above the cap of {cap}")]
    OracleCap { points: u128, cap: usize },

    #[error("mask widths differ ({left} vs {right})")]
    WidthMismatch { left: usize, right: usize },

    #[error("cannot parse mask {text:?}: {reason}")]
    BadMask { text: String, reason: String },

    #[error("cannot parse scalar {0:?}")]
    BadScalar(String),

    #[error("({g},{h},{i}) violates g\u{25b3}i \u{2286} h \u{2286} (g\u{25b3}i)\u{222a}(g\u{2229}i)\u{b0}, so it indexes no basis element")]
    NotInP { g: String, h: String, i: String },

    #[error("operands belong to different schemes")]
    SpecMismatch,

    #[error("{0}")]
    OutOfRange(String),

    #[error("the radical is zero; there is no witness chain")]
    ZeroRadical,

    #[error("point {0:?} does not belong to the scheme")]
    BadPoint(Vec<u64>),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
