use thiserror::Error;

use crate::field::{SquareParam, Subfield};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("binary operation is missing its second operand")]
    MissingOperand,
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("parameters do not give a biquadratic extension: {which} is a square")]
    NotBiquadratic { which: SquareParam },
    #[error("field parameter must be nonzero")]
    ZeroParameter,
    #[error("elements belong to different fields")]
    MixedConfig,
    #[error("element does not lie in {0}")]
    NotInSubfield(Subfield),
    #[error("zero is not a unit")]
    ZeroElement,
    #[error("element does not have norm one down to E{index}")]
    NotNormOne { index: u8 },
    #[error("alpha{index} does not have norm one down to E{index}")]
    NormNotOne { index: u8 },
    #[error("alpha1 * s1(alpha2) differs from alpha2 * s2(alpha1)")]
    CompatibilityFailed,
    #[error("element is not in the kernel of (1 - s1)(1 - s2): its norm to E3 is not rational")]
    NotInKernel,
    #[error("x^2 - a y^2 does not lie in the base field")]
    ValueNotInF,
    #[error("x^2 - a y^2 is zero")]
    ZeroValue,
    #[error("input (0, 0) does not parameterize a triple")]
    ZeroInput,
    #[error("module of order {order} exceeds the enumeration bound {bound}")]
    TooLarge { order: u64, bound: u64 },
    #[error("invalid module: {0}")]
    InvalidModule(String),
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::MissingOperand => "MissingOperand",
            Error::Parse { .. } => "ParseError",
            Error::NotBiquadratic { .. } => "NotBiquadratic",
            Error::ZeroParameter => "ZeroParameter",
            Error::MixedConfig => "MixedConfig",
            Error::NotInSubfield(_) => "NotInSubfield",
            Error::ZeroElement => "ZeroElement",
            Error::NotNormOne { .. } => "NotNormOne",
            Error::NormNotOne { .. } => "NormNotOne",
            Error::CompatibilityFailed => "CompatibilityFailed",
            Error::NotInKernel => "NotInKernel",
            Error::ValueNotInF => "ValueNotInF",
            Error::ZeroValue => "ZeroValue",
            Error::ZeroInput => "ZeroInput",
            Error::TooLarge { .. } => "TooLarge",
            Error::InvalidModule(_) => "InvalidModule",
        }
    }
}
