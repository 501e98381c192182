use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bad input: {0}")]
    BadInput(String),

    #[error("enumeration size {requested} exceeds the bound {bound}")]
    BoundExceeded { requested: u32, bound: u32 },

    #[error("{0} has an even part of odd multiplicity")]
    NotInQ(String),

    #[error("{0} is not a corrected partition")]
    NotInR(String),

    #[error("invalid class {class} for {context}")]
    InvalidClass { class: String, context: String },

    #[error("invalid unipotent class {unipotent} for {context}")]
    InvalidUnipotent { unipotent: String, context: String },

    #[error("operation needs family {expected}, got {got}")]
    WrongFamily { expected: &'static str, got: String },

    #[error("invalid group context: {0}")]
    UnknownContext(String),

    #[error("class {class} does not occur in the table for {context}")]
    UnknownClass { class: String, context: String },

    #[error("unipotent class {unipotent} does not occur in the table for {context}")]
    UnknownUnipotent { unipotent: String, context: String },

    #[error("{0} is not in the pair-sequence set A")]
    NotInA(String),

    #[error("{0} is not in the bipartition set A'")]
    NotInAPrime(String),

    #[error("{0} is not in the pair-sequence set C")]
    NotInC(String),

    #[error("{0} is not in the bipartition set C'")]
    NotInCPrime(String),

    #[error("class {class} is not special in {context}")]
    NotSpecial { class: String, context: String },

    #[error("parse error at byte {pos} of {text:?}: {msg}")]
    Parse {
        text: String,
        pos: usize,
        msg: String,
    },

    #[error("table {table}: {msg}")]
    Table { table: String, msg: String },
}
