use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A fractional order outside `(0, 1]`.
    InvalidOrder(f64),
    /// A scalar argument outside its admissible range.
    Domain(String),
    /// Too few samples for the requested operation.
    TooFewSamples {
        got: usize,
        min: usize,
    },
    AxisOutOfRange(usize),
    /// Two fields that must share a lattice do not.
    GridMismatch,
    /// Grid endpoints along `axis` disagree with the scheme terminals.
    SchemeMismatch {
        axis: usize,
    },
    /// The continuity equation needs `alpha = beta` with `b = -a` on the
    /// spatial axes and order 1 in time.
    NotSymmetricCausal,
    /// A variation probe is nonzero on the outer layer of the grid.
    ProbeNotCompact,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidOrder(a) => write!(f, "fractional order {a} is outside (0, 1]"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::TooFewSamples { got, min } => {
                write!(f, "need at least {min} samples, got {got}")
            }
            Error::AxisOutOfRange(axis) => write!(f, "axis {axis} is out of range 0..4"),
            Error::GridMismatch => f.write_str("fields are sampled on different grids"),
            Error::SchemeMismatch { axis } => {
                write!(f, "grid endpoints on axis {axis} do not match the scheme terminals")
            }
            Error::NotSymmetricCausal => {
                f.write_str("scheme is not symmetric-causal (need alpha_i = beta_i, b_i = -a_i, alpha_0 = beta_0 = 1)")
            }
            Error::ProbeNotCompact => f.write_str("variation probe does not vanish on the grid boundary"),
        }
    }
}

impl core::error::Error for Error {}
