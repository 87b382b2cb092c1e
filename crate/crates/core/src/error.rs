use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is undefined for zero")]
    UndefinedForZero(&'static str),
    #[error("gcd(0, 0) is undefined")]
    GcdUndefined,
    #[error("element is not an Eisenstein integer: {0}")]
    NotIntegral(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("operands belong to different residue rings (3^{0} and 3^{1})")]
    MixedRings(u32, u32),
    #[error("modulus exponent k = {k} outside the supported range 1..={max}")]
    ExponentOutOfRange { k: u32, max: u32 },
    #[error("pi does not divide g({x}, {y})")]
    NotDivisibleByPi { x: String, y: String },
    #[error("invalid witness: g({x}, {y}) != {value}")]
    InvalidWitness { x: String, y: String, value: String },
    #[error("height bound must be at least 1")]
    ZeroHeight,
    #[error("cover polynomial must have degree at least 1")]
    ConstantCover,
    #[error("unknown {kind} '{name}'")]
    Unknown { kind: &'static str, name: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
