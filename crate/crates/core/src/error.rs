use std::fmt;

/// Errors surfaced by chain-level operations, term validation and input parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands belong to different coefficient rings.
    RingMismatch,
    /// A modulus that is not a prime number was requested.
    NotAPrime(u32),
    /// A one-line array that is not a bijection on 1..=k.
    NotAPermutation(Vec<usize>),
    /// Permutation length and degree-list length disagree.
    LengthMismatch { expected: usize, found: usize },
    /// Tensor words over cubes of different ambient dimension.
    DimensionMismatch { expected: usize, found: usize },
    /// Composition or application of a term with incompatible arities.
    ArityMismatch { context: &'static str, expected: usize, found: usize },
    /// The permutation of a shuffle spec is not ascending on its blocks.
    NotAShuffle { parts: Vec<usize>, one_line: Vec<usize> },
    /// Coface/codegeneracy index outside the valid range.
    IndexOutOfRange { index: usize, limit: usize },
    /// Parse failure with byte position and what was expected there.
    Parse { pos: usize, expected: String, found: String },
    /// A complex failed validation (face closure, cubical identities, ...).
    InvalidComplex(String),
    /// A cochain handed to a cohomology operation is not a cocycle.
    NotACocycle,
    /// Negative iteration index or similar out-of-domain argument.
    BadArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch => write!(f, "coefficient rings do not match"),
            Error::NotAPrime(p) => write!(f, "{p} is not a prime modulus"),
            Error::NotAPermutation(v) => write!(f, "{v:?} is not a permutation of 1..={}", v.len()),
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "ambient dimension mismatch: expected {expected}, found {found}")
            }
            Error::ArityMismatch { context, expected, found } => {
                write!(f, "arity mismatch in {context}: expected {expected}, found {found}")
            }
            Error::NotAShuffle { parts, one_line } => {
                write!(f, "{one_line:?} is not a {parts:?}-shuffle")
            }
            Error::IndexOutOfRange { index, limit } => {
                write!(f, "index {index} out of range 1..={limit}")
            }
            Error::Parse { pos, expected, found } => {
                write!(f, "parse error at byte {pos}: expected {expected}, found {found}")
            }
            Error::InvalidComplex(msg) => write!(f, "invalid complex: {msg}"),
            Error::NotACocycle => write!(f, "representative is not a cocycle"),
            Error::BadArgument(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}
