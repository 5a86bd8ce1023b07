use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("associativity fails for triple ({i}, {j}, {k})")]
    AssociativityViolation { i: usize, j: usize, k: usize },
    #[error("table entry at ({row}, {col}) is {value}, outside 0..{size}")]
    RangeError {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("expected {expected} rows of {expected} entries, {message}")]
    ShapeError { expected: usize, message: String },
    #[error("generator {index} has degree {found}, expected {expected}")]
    DegreeMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("transformation image {value} is outside 0..{degree}")]
    ImageOutOfRange { value: usize, degree: usize },
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("element {index} is outside 0..{size}")]
    ElementOutOfRange { index: usize, size: usize },
    #[error("not an ideal: product of {a} and {b} leaves the set")]
    NotAnIdeal { a: usize, b: usize },
    #[error("ideal must be nonempty")]
    EmptyIdeal,
    #[error("more than the cap of right congruences; {count} found before aborting")]
    CapExceeded { count: usize },
    #[error("relation is not a two-sided congruence: ({a}, {b}) with multiplier {s}")]
    NotTwoSided { a: usize, b: usize, s: usize },
    #[error("partition is over {found} elements, semigroup has {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("semigroup is not completely regular")]
    NotCompletelyRegular,
    #[error("semigroup is neither completely simple nor completely 0-simple")]
    NotCompletelySimple,
    #[error("semigroup is not commutative: {a}*{b} != {b}*{a}")]
    NotCommutative { a: usize, b: usize },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("ragged sandwich matrix: {0}")]
    RaggedMatrix(String),
    #[error("input does not match the Rees structure: {0}")]
    MismatchedInput(String),
    #[error("internal assertion failed: {0}")]
    InternalAssertFailure(String),
    #[error("the given set does not generate the semigroup")]
    NotGenerating,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("both factors must be monoids")]
    NotMonoids,
    #[error("map is not a homomorphism at ({a}, {b})")]
    NotHomomorphism { a: usize, b: usize },
    #[error("map is not surjective: {missing} has no preimage")]
    NotSurjective { missing: usize },
    #[error("ideal has no identity element")]
    NoInternalIdentity,
    #[error("first congruence does not refine the second: {a} and {b}")]
    NotRefinement { a: usize, b: usize },
    #[error("size {size} exceeds the limit {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
