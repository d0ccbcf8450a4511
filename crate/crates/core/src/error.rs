use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown constant `{0}`")]
    UnknownConstant(String),
    #[error("galois exponent {0} is not a unit modulo 120")]
    NonUnitGaloisExponent(i64),
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("index ({row}, {col}) out of range for a {rows}x{cols} matrix")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("group closure exceeded the cap of {cap} elements (reached {reached})")]
    ClosureCapExceeded { cap: usize, reached: usize },
    #[error("no projective order found up to {0}")]
    OrderCapExceeded(u64),
    #[error("generator {0} does not have finite projective order")]
    InfiniteOrderGenerator(usize),
    #[error("Gröbner basis computation exceeded {0} S-pairs")]
    GroebnerCapExceeded(usize),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for failures caused by a computation cap rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::ClosureCapExceeded { .. }
                | Error::OrderCapExceeded(_)
                | Error::GroebnerCapExceeded(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
