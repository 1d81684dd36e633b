//! Error type shared by every module of the crate.
//!
//! Each variant names the violated contract; `Display` prints the variant
//! name first so callers (notably the CLI) can surface it verbatim.

use std::fmt;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Basis element 1 is not a two-sided unit for the structure constants.
    UnitMissing,
    /// The structure constants fail associativity on some basis triple.
    NotAssociative { s: usize, t: usize, u: usize },
    /// Algebra dimension m = 1; the construction requires m > 1.
    DimensionOne,
    /// The m²×m² matrix of sandwich maps x ↦ v_s·x·v_t is singular, so the
    /// maps do not span the endomorphism ring and coordinate functionals
    /// do not exist.
    LemmaMatrixSingular,
    /// The centralizer of the basis has dimension > 1, i.e. the scalars are
    /// not the whole center. Unreachable once the lemma matrix is invertible;
    /// kept as an independent diagnostic.
    CenterTooLarge,
    /// Coordinate vectors of different lengths, or an element that does not
    /// match the algebra's dimension.
    DimensionMismatch { expected: usize, found: usize },
    /// Inverse of the zero element requested.
    ZeroElement,
    /// The element has no inverse (its left-multiplication map is singular).
    ZeroDivisor,
    /// Two polynomials (or a polynomial and a point) built over different
    /// ambient algebras or different variable counts were combined.
    AmbientMismatch,
    /// A conjugation/norm/ideal operation that is only defined over the
    /// rational quaternions was invoked over some other ambient algebra.
    NotQuaternionAmbient,
    /// A point or coefficient list has the wrong length.
    LengthMismatch { expected: usize, found: usize },
    /// A variable, coordinate, or generator index is outside its range.
    IndexOutOfRange { index: usize, limit: usize },
    /// A certificate was requested for a polynomial that is not an identity.
    NotAnIdentity,
    /// A radical certificate carries an exponent below 1.
    BadExponent { found: i64 },
    /// A loaded file's cached fields disagree with what recomputation from
    /// its primary data produces.
    CacheMismatch { what: &'static str },
    /// A file or JSON document could not be decoded.
    BadFile { reason: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnitMissing => write!(f, "UnitMissing: basis element 1 is not a two-sided unit"),
            Error::NotAssociative { s, t, u } => write!(
                f,
                "NotAssociative: (v{s}·v{t})·v{u} differs from v{s}·(v{t}·v{u})"
            ),
            Error::DimensionOne => write!(f, "DimensionOne: algebra dimension must exceed 1"),
            Error::LemmaMatrixSingular => write!(
                f,
                "LemmaMatrixSingular: the sandwich maps v_s·x·v_t are linearly dependent"
            ),
            Error::CenterTooLarge => write!(
                f,
                "CenterTooLarge: the basis centralizer has dimension above 1"
            ),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "DimensionMismatch: expected {expected} coordinates, found {found}")
            }
            Error::ZeroElement => write!(f, "ZeroElement: the zero element has no inverse"),
            Error::ZeroDivisor => write!(f, "ZeroDivisor: element is not invertible"),
            Error::AmbientMismatch => write!(
                f,
                "AmbientMismatch: operands live over different algebras or variable counts"
            ),
            Error::NotQuaternionAmbient => write!(
                f,
                "NotQuaternionAmbient: operation requires the rational quaternion algebra"
            ),
            Error::LengthMismatch { expected, found } => {
                write!(f, "LengthMismatch: expected {expected} entries, found {found}")
            }
            Error::IndexOutOfRange { index, limit } => {
                write!(f, "IndexOutOfRange: index {index} outside 1..={limit}")
            }
            Error::NotAnIdentity => {
                write!(f, "NotAnIdentity: polynomial does not vanish as a function")
            }
            Error::BadExponent { found } => {
                write!(f, "BadExponent: radical certificate exponent must be >= 1, found {found}")
            }
            Error::CacheMismatch { what } => {
                write!(f, "CacheMismatch: stored {what} disagrees with recomputation")
            }
            Error::BadFile { reason } => write!(f, "BadFile: {reason}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
