use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vector or row had the wrong number of coordinates.
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    /// Ambient length outside `1..=64`.
    BadLength(usize),
    /// Codeword enumeration refused above this dimension.
    DimensionTooLarge {
        dimension: usize,
        max: usize,
    },
    /// Quotient `GF(2)^n / C` too large to index.
    QuotientTooLarge {
        codimension: usize,
        max: usize,
    },
    /// Permutation degree did not match the object it acts on.
    DegreeMismatch {
        expected: usize,
        found: usize,
    },
    /// Image list is not a bijection.
    InvalidPermutation,
    /// Some unit vector lies in the code, so the coset graph has loops.
    Loops {
        coordinate: usize,
    },
    Disconnected,
    /// Input graph exceeds the size an exhaustive routine accepts.
    TooLarge {
        size: usize,
        max: usize,
    },
    NotTransitive,
    /// A generator does not preserve the code or graph it should.
    NotAutomorphism,
    NotEven,
    /// A named precondition of an algorithm failed.
    HypothesesFail(String),
    /// Quadrangle closure broke while building a covering.
    Inconsistent {
        cube_vertex: u64,
    },
    NonLinearKernel,
    NotLocallyTriangular,
    /// Generators supplied as vertex automorphisms are not automorphisms.
    NotAutomorphismGroup {
        generator: usize,
    },
    InvalidVertex(usize),
    InvalidParameter(String),
    /// Malformed text input.
    Parse {
        line: usize,
        message: String,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Error::BadLength(n) => write!(f, "ambient length {n} outside 1..=64"),
            Error::DimensionTooLarge { dimension, max } => {
                write!(
                    f,
                    "code dimension {dimension} exceeds enumeration limit {max}"
                )
            }
            Error::QuotientTooLarge { codimension, max } => {
                write!(
                    f,
                    "quotient of codimension {codimension} exceeds limit {max}"
                )
            }
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::InvalidPermutation => f.write_str("image list is not a permutation"),
            Error::Loops { coordinate } => {
                write!(f, "unit vector e_{} lies in the code", coordinate + 1)
            }
            Error::Disconnected => f.write_str("graph is disconnected"),
            Error::TooLarge { size, max } => write!(f, "input of size {size} exceeds limit {max}"),
            Error::NotTransitive => f.write_str("group is not transitive"),
            Error::NotAutomorphism => f.write_str("permutation is not an automorphism"),
            Error::NotEven => f.write_str("code is not even"),
            Error::HypothesesFail(why) => write!(f, "hypotheses fail: {why}"),
            Error::Inconsistent { cube_vertex } => {
                write!(
                    f,
                    "quadrangle closure inconsistent at cube vertex {cube_vertex:#x}"
                )
            }
            Error::NonLinearKernel => f.write_str("covering kernel is not a linear code"),
            Error::NotLocallyTriangular => f.write_str("graph is not locally triangular"),
            Error::NotAutomorphismGroup { generator } => {
                write!(f, "generator {generator} is not a graph automorphism")
            }
            Error::InvalidVertex(v) => write!(f, "vertex {v} out of range"),
            Error::InvalidParameter(why) => write!(f, "invalid parameter: {why}"),
            Error::Parse { line, message } => write!(f, "parse error on line {line}: {message}"),
        }
    }
}

impl core::error::Error for Error {}
