use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A value violates a structural invariant (bad generator index,
    /// mismatched generator tables, malformed matrix shape, ...).
    #[error("structural error: {0}")]
    Structural(String),

    /// The requested monomial order is not defined on this alphabet.
    #[error("unsupported order: {0}")]
    UnsupportedOrder(String),

    /// Invalid input data (inhomogeneous relation, zero relation, ...).
    #[error("input error: {0}")]
    Input(String),

    /// A computation would need certification beyond the degree cap of the
    /// rewrite system or table it was given.
    #[error("degree cap exceeded: degree {needed} requested, certified up to {certified}")]
    CapExceeded { needed: u32, certified: u32 },

    /// Completion or confluence checking found an unresolvable ambiguity.
    #[error("ambiguity not resolvable within cap: witness {witness}")]
    NotConfluent { witness: String },

    /// Polynomial or expression text that does not match the grammar.
    /// `pos` is a byte offset into the parsed string.
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
