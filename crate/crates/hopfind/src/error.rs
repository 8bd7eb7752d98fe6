use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus {0} outside supported range [2, 2^31)")]
    ModulusRange(u64),

    #[error("dimension {dim} exceeds cap {cap} (set HOPFIND_DIM_CAP to raise)")]
    DimCap { dim: usize, cap: usize },

    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u64, u64),

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("insufficient terms: window of length {window} cannot certify degree bound {bound}")]
    InsufficientTerms { window: usize, bound: usize },

    #[error("period search exceeded cap {0}")]
    PeriodCap(u64),

    #[error("polynomial must have nonzero constant term")]
    ZeroConstantTerm,

    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),

    #[error("invalid restricted Lie data: {0}")]
    InvalidLieData(String),

    #[error("straightening step cap exceeded; rewriting did not terminate")]
    RewriteCap,

    #[error("endomorphism has no convolution inverse")]
    NotConvolutionInvertible,

    #[error("constructed algebra failed validation: {0}")]
    ConstructionInvalid(String),

    #[error("coradical is not a Hopf subalgebra")]
    NotHopfSubalgebra,

    #[error("Jacobson radical is not a Hopf ideal")]
    NotHopfIdeal,

    #[error("filtration not multiplicative/comultiplicative: {0}")]
    FiltrationNotGraded(String),

    #[error("window too short: need {need} consecutive indices, have {have}")]
    WindowTooShort { need: usize, have: usize },

    #[error("enumeration cap exceeded: {0}")]
    EnumerationCap(String),

    #[error("Sweedler brute force supports |m| <= {cap}, got {m}")]
    SweedlerRange { m: i64, cap: i64 },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
