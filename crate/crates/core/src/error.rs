use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{u} is not a quadratic non-residue mod {p}")]
    NotNonResidue { p: u64, u: u64 },
    #[error("gamma(pi) = {kappa} violates kappa^2 = (pi,pi) = {expected}")]
    GammaConstraint { kappa: String, expected: i8 },
    #[error("operation `{0}` is not supported over the real field")]
    UnsupportedOnReal(&'static str),
    #[error("invalid field element: {0}")]
    InvalidElement(String),
    #[error("invalid character: {0}")]
    InvalidCharacter(String),
    #[error("root out of range for rank {n}: {detail}")]
    RootOutOfRange { n: usize, detail: String },
    #[error("simple root index {index} out of range 1..={max}")]
    SimpleIndexOutOfRange { index: usize, max: usize },
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("invalid Levi block: {0}")]
    InvalidLevi(String),
    #[error("invalid Weyl word: {0}")]
    InvalidWord(String),
    #[error("element is not in {0}")]
    NotInSubgroup(&'static str),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid stabilizer shape: {0}")]
    InvalidShape(String),
    #[error("search space too large: {size} exceeds bound {bound}")]
    SpaceTooLarge { size: u128, bound: u128 },
}
