use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidVertex { vertex: usize, n: usize },
    LoopEdge { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    LengthMismatch { expected: usize, found: usize },
    /// `t` or `r` is zero.
    InvalidParams { t: u32, r: u32 },
    /// `r > t`: not even the full vertex set dominates.
    InfeasibleParams { t: u32, r: u32 },
    TooLarge { size: usize, limit: usize },
    TooManyEdges { edges: usize, limit: usize },
    InvalidDims,
    OutOfFormulaDomain,
    OutOfRange { value: usize, max: usize },
    NotAMultiple { size: usize, period: usize },
    DegenerateTorus { size: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidVertex { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
            Error::LoopEdge { vertex } => write!(f, "loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u},{v}}}"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected {expected} orientation bits, found {found}")
            }
            Error::InvalidParams { t, r } => write!(f, "t and r must be positive (t={t}, r={r})"),
            Error::InfeasibleParams { t, r } => {
                write!(f, "no dominating set exists when r > t (t={t}, r={r})")
            }
            Error::TooLarge { size, limit } => write!(f, "instance size {size} exceeds limit {limit}"),
            Error::TooManyEdges { edges, limit } => {
                write!(f, "{edges} edges exceeds enumeration limit {limit}")
            }
            Error::InvalidDims => f.write_str("invalid dimensions"),
            Error::OutOfFormulaDomain => f.write_str("arguments outside the closed form's domain"),
            Error::OutOfRange { value, max } => write!(f, "{value} out of range (max {max})"),
            Error::NotAMultiple { size, period } => {
                write!(f, "torus side {size} is not a multiple of period {period}")
            }
            Error::DegenerateTorus { size } => {
                write!(f, "torus side {size} is too small (need at least 3)")
            }
        }
    }
}


impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
