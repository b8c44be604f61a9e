use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis index {0} outside the operator domain")]
    UnknownBasisIndex(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operator is not invertible")]
    NotInvertible,
    #[error("declared inverse does not invert basis vector {0}")]
    InverseMismatch(usize),
    #[error("multiplication is not associative")]
    NotAssociative,
    #[error("map is not an algebra endomorphism")]
    NotEndomorphism,
    #[error("twisting maps do not commute")]
    NotCommutingPair,
    #[error("map is not a bialgebra morphism")]
    NotBialgebraMorphism,
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
    #[error("coalgebra twist is not invertible")]
    NotInvertibleBeta,
    #[error("algebra twist is not invertible")]
    NotInvertibleAlpha,
    #[error("carrier map is not invertible")]
    NotInvertibleGamma,
    #[error("map is not a Lie endomorphism")]
    NotLieEndomorphism,
    #[error("input is not a Hom-Lie algebra")]
    NotHomLie,
    #[error("pair is not matched: {0}")]
    NotMatchedPair(String),
    #[error("pair is not mutual: {0}")]
    NotMutualPair(String),
    #[error("product of degree {degree} exceeds truncation degree {bound}")]
    TruncationOverflow { degree: usize, bound: usize },
    #[error("order constraint violated: {0}")]
    OrderConstraintViolated(String),
    #[error("pairing is degenerate")]
    PairingDegenerate,
    #[error("truncated structure map raises degree: {0}")]
    NotFiltered(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("weight {weight} does not fold to a weight-0 representative within bound {bound}")]
    WeightBudget { weight: u32, bound: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
