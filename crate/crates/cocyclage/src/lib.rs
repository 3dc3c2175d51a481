//! Exact combinatorics of cocyclage and charge statistics on tableaux.
//!
//! The crate implements, over exact integer arithmetic:
//!
//! - [`shapes`]: compositions, partitions, box diagrams with their natural
//!   order, the box distance, and the shape operators `grav`, `shift`,
//!   `localshift`, `simp` and the weighted shift.
//! - [`tableaux`]: fillings of (possibly augmented) composition diagrams over
//!   the barred alphabet, reading words, and the shape operators lifted to
//!   natural tableaux.
//! - [`typea`]: the Lascoux-Schutzenberger charge on words, column Schensted
//!   insertion, plactic reconstruction, and type-A cocyclage.
//! - [`typec`]: symplectic (type C) column insertion in recursive and
//!   single-pass form, insertion into tableaux via local steps, reduction,
//!   symplectic cocyclage, orbits and the symplectic charge.
//! - [`direct`]: the direct construction of the k-th cocyclage image of a row
//!   tableau (partner/single content assignment) and its augmented refinement.
//! - [`symfun`]: an independent oracle computing type-C Kostka-Foulkes
//!   polynomials from Weyl characters and Hall-Littlewood polynomials in the
//!   group ring of the weight lattice.
//!
//! All values are immutable and all operations are pure functions.

pub mod direct;
pub mod shapes;
pub mod symfun;
pub mod tableaux;
pub mod typea;
pub mod typec;

use thiserror::Error;

/// Errors raised by the combinatorial operations.
///
/// Each operation documents which variants it can produce; inputs that are
/// well-formed per the constructors never fail silently.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition has an internal zero part: {0:?}")]
    InternalZero(Vec<usize>),
    #[error("parts are not weakly decreasing: {0:?}")]
    NotPartition(Vec<usize>),
    #[error("box ({col},{row}) lies outside the diagram")]
    BoxOutsideDiagram { col: usize, row: usize },
    #[error("boxes are not strictly increasing in the natural order")]
    NotNaturalOrder,
    #[error("letter value must be nonzero")]
    ZeroLetter,
    #[error("entry count {entries} does not match diagram size {boxes}")]
    EntryCountMismatch { entries: usize, boxes: usize },
    #[error("tableau is not natural")]
    NotNatural,
    #[error("tableau is not semistandard")]
    NotSemistandard,
    #[error("expected unbarred entries only")]
    BarredEntry,
    #[error("weight is not a partition")]
    WeightNotPartition,
    #[error("localshift of a column shape is undefined")]
    LocalshiftOfColumn,
    #[error("word is not standard")]
    NotStandardWord,
    #[error("letter multiplicities are not weakly decreasing")]
    MultiplicityCondition,
    #[error("cocyclage is undefined when weight equals shape")]
    WeightEqualsShape,
    #[error("partition has more than {n} parts")]
    TooManyParts { n: usize },
    #[error("|mu| = {mu} exceeds p = {p}")]
    WeightBiggerThanRow { mu: usize, p: usize },
    #[error("column is not strictly increasing")]
    NotAColumn,
    #[error("no insertion rule applies to letter {letter} and column {column:?}")]
    InsertionUndefined { letter: i32, column: Vec<i32> },
    #[error("malformed augmented tableau: {0}")]
    MalformedSplit(String),
    #[error("column has nonzero weight")]
    NonzeroWeight,
    #[error("letter index {letter} exceeds rank {n}")]
    LetterBeyondRank { letter: u32, n: usize },
    #[error("iteration bound {0} exceeded")]
    IterationBound(usize),
    #[error("step index {s} outside [1, {r}]")]
    StepOutOfRange { s: usize, r: usize },
    #[error("rank {n} exceeds the desk-scale guard {max}")]
    DeskScale { n: usize, max: usize },
    #[error("quotient by the Weyl denominator left a remainder")]
    NonExactQuotient,
    #[error("oracle self-check failed: {0}")]
    OracleInconsistency(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape surgery produced an invalid diagram: {0}")]
    InvalidShape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
