use thiserror::Error;

use crate::poset::Element;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid dimensions: {0}")]
    InvalidDimensions(String),
    #[error("not a skew shape: {0}")]
    NotSkew(String),
    #[error("wrong poset kind: expected {expected}, found {found}")]
    WrongKind { expected: String, found: String },
    #[error("window index k={k} out of range 1..={max}")]
    BadK { k: u32, max: u32 },
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("invalid plane partition: {0}")]
    InvalidPartition(String),
    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),
    #[error("element {0} is not in the poset")]
    MissingElement(Element),
    #[error("poset has no unique {0}")]
    NoUniqueExtremum(&'static str),
    #[error("division by the additive identity")]
    DivisionBySentinel,
    #[error("no legal endpoint configuration for {0}")]
    NoLegalConfiguration(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
