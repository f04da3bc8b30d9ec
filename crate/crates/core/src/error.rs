use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("squarefree decomposition of the zero polynomial")]
    ZeroPolynomial,

    #[error("rational function has a zero denominator")]
    ZeroDenominator,

    #[error("map is constant")]
    ConstantMap,

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("generators do not act transitively on 1..={0}")]
    NotTransitive(usize),

    #[error("invalid combinatorial type: {0}")]
    InvalidType(String),

    #[error("invalid dessin: {0}")]
    InvalidDessin(String),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("coefficient forms disagree at a_{index}: {product} vs {binomial}")]
    CoefficientFormMismatch {
        index: usize,
        product: String,
        binomial: String,
    },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
