use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug, Clone)]
pub enum Error {
    #[error("division by zero scalar: {0}")]
    DivisionByZero(String),

    #[error("exponent ({0} + {1}x)/2 cannot be halved within the lattice")]
    ExponentLattice(i32, i32),

    #[error("bad sample: {0}")]
    BadSample(String),

    #[error("diagram mismatch: expected d={expected}, got d={got}")]
    DiagramMismatch { expected: u8, got: u8 },

    #[error("weight height {height} exceeds the configured bound {bound}; raise the height bound")]
    BoundExceeded { height: u32, bound: u32 },

    #[error("index {0} out of domain: {1}")]
    OutOfDomain(i64, &'static str),

    #[error("operation applied to the zero groupoid word")]
    ZeroWord,

    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("non-invertible Cartan image: {0}")]
    NonInvertibleImage(String),
}
