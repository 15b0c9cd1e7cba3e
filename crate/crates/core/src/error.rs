use crate::singsets::Counterexample;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("field of order {p}^{m} is not supported")]
    UnsupportedField { p: u32, m: u32 },
    #[error("modulus {0:?} is reducible")]
    ReducibleModulus(Vec<u8>),
    #[error("element code {code} out of range for GF({q})")]
    InvalidElement { code: u32, q: usize },
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("form is singular")]
    SingularForm,
    #[error("form is not symplectic")]
    NotSymplectic,
    #[error("form has nontrivial automorphisms; plain bilinear form required")]
    NotPlainBilinear,
    #[error("dimension {0} is odd; no non-singular symplectic form exists")]
    OddDimension(usize),
    #[error("invalid plane dimension k={k} for ambient dimension n={n}: {reason}")]
    InvalidDimension { n: usize, k: usize, reason: &'static str },
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("condition S fails: {0}")]
    ConditionS(Box<Counterexample>),
    #[error("line map is not a collineation: {0}")]
    NotCollineation(String),
    #[error("solution space for the Gram matrix has dimension {0}, expected 1")]
    SolutionSpace(usize),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
