use thiserror::Error;

use crate::iposet::MAX_POINTS;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation contains a cycle through point {0}")]
    CycleDetected(usize),
    #[error("source point {0} is not minimal")]
    NotMinimal(usize),
    #[error("target point {0} is not maximal")]
    NotMaximal(usize),
    #[error("point {0} occurs twice in one interface")]
    DuplicateInterfacePoint(usize),
    #[error("point index {index} out of range for {n} points")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{0} points exceed the limit of {MAX_POINTS}")]
    Overflow(usize),
    #[error("arity mismatch: codomain {cod} against domain {dom}")]
    ArityMismatch { cod: usize, dom: usize },
    #[error("composition of an empty list")]
    EmptyComposition,
    #[error("not a bijection")]
    NotABijection,
    #[error("iposet is not interface consistent")]
    NotInterfaceConsistent,
    #[error("poset is not an interval order")]
    NotIntervalOrder,
    #[error("invalid characteristic function: {0}")]
    InvalidCharFn(&'static str),
    #[error("middle order is incompatible with the interface order")]
    IncompatibleOrdering,
    #[error("composites are not isomorphic")]
    PreconditionNotSatisfied,
    #[error("lax interchange violated")]
    InternalLawViolation,
    #[error("size {n} exceeds the cap {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
    #[error("census mismatch for {class} at n={n}: closure {closure}, filter {filter}")]
    CensusMismatch {
        class: &'static str,
        n: usize,
        closure: u64,
        filter: u64,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
