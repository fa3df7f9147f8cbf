use core::fmt;

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    InvalidParameter(&'static str),
    /// The field would have more elements than the configured cap allows.
    FieldTooLarge {
        order: u128,
        cap: u64,
    },
    BadModulus(&'static str),
    ReducibleModulus,
    /// An element code outside `[0, p^{s·m})` for the context in use.
    ForeignElement(u64),
    DivisionByZero,
    /// The zero linearized polynomial where a nonzero one is required.
    ZeroPolynomial,
    DependentElements,
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    DegreeOutOfRange(&'static str),
    IndexOutOfRange {
        index: usize,
        len: usize,
    },
    NotSquare {
        rows: usize,
        cols: usize,
    },
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u64,
    },
    HypothesisViolated(&'static str),
    WrongCharacteristic,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::FieldTooLarge { order, cap } => {
                write!(f, "field order {order} exceeds the cap {cap}")
            }
            Error::BadModulus(why) => write!(f, "bad modulus: {why}"),
            Error::ReducibleModulus => write!(f, "modulus is reducible"),
            Error::ForeignElement(code) => {
                write!(f, "element code {code} does not belong to this field")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroPolynomial => write!(f, "zero polynomial not allowed here"),
            Error::DependentElements => write!(f, "elements are linearly dependent"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Error::DegreeOutOfRange(what) => write!(f, "q-degree out of range: {what}"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range 1..={len}")
            }
            Error::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Error::CapExceeded { what, needed, cap } => {
                write!(f, "{what}: {needed} candidates exceed the cap {cap}")
            }
            Error::HypothesisViolated(what) => write!(f, "hypothesis violated: {what}"),
            Error::WrongCharacteristic => write!(f, "operation requires F_2^m with q = 2"),
        }
    }
}

impl core::error::Error for Error {}
