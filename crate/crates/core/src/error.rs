use thiserror::Error;

/// Errors raised by the circle-map routines.
///
/// Numeric payloads are widened to `f64` so the type stays independent of the
/// scalar parameter.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("zero {index} has modulus {modulus}, outside the admissible disk |z| < 1 - {margin}")]
    ZeroOutsideDisk {
        index: usize,
        modulus: f64,
        margin: f64,
    },

    #[error("evaluation point within {distance:e} of the pole of factor {index}")]
    PoleProximity { index: usize, distance: f64 },

    #[error("point of modulus {modulus} is not on the unit circle")]
    NotOnCircle { modulus: f64 },

    #[error("kernel point of modulus {modulus} lies outside the open unit disk")]
    Domain { modulus: f64 },

    #[error("parameter {name} = {value} outside {expected}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("homotopy times must be strictly increasing within [0, 1]")]
    InvalidTimes,

    #[error("sample count {0} must be a power of two and at least 64")]
    BadResolution(usize),

    #[error("window {window} needs {needed} samples but only {available} are available")]
    WindowTooWide {
        window: usize,
        needed: usize,
        available: usize,
    },

    #[error("sample {index} has modulus {modulus}, expected a unimodular value")]
    NotUnimodular { index: usize, modulus: f64 },

    #[error("sample {index} lies within {distance:e} of the proposed center")]
    CenterOnCurve { index: usize, distance: f64 },

    #[error("h(z) - w0 vanishes (|.| = {distance:e}) at grid angle {angle}")]
    PoleOnCircle { angle: f64, distance: f64 },

    #[error("balance function keeps a constant sign on [0, pi); profile is not a valid starlike lift")]
    NoSignChange,

    #[error("zeros {first} and {second} do not share an argument (difference {difference:e} rad)")]
    Alignment {
        first: usize,
        second: usize,
        difference: f64,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
