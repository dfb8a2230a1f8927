use thiserror::Error;

use crate::surface_core::SurfaceType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("surface S_{{{g},{n}}} has nonnegative Euler characteristic")]
    NotHyperbolic { g: u32, n: u32 },
    #[error("objects live on different surfaces: {0:?} vs {1:?}")]
    SurfaceMismatch(SurfaceType, SurfaceType),
    #[error("weight vector has length {got}, expected {expected}")]
    WeightLength { got: usize, expected: usize },
    #[error("weights violate the matching condition in triangle {0}")]
    Matching(usize),
    #[error("expected a single curve, found {0} components")]
    NotSingleCurve(usize),
    #[error("multicurve has isotopic duplicate components")]
    DuplicateComponents,
    #[error("curve is peripheral")]
    Peripheral,
    #[error("empty multicurve")]
    Empty,
    #[error("signature sums to {got}, Euler characteristic is {chi}")]
    SignatureSum { got: i64, chi: i64 },
    #[error("signature has {got} entries for {n} punctures")]
    SignatureLength { got: usize, n: usize },
    #[error("expected {expected} basis values, got {got}")]
    BasisLength { got: usize, expected: usize },
    #[error("genus-1 gcd condition fails: {0}")]
    GcdCondition(String),
    #[error("operation needs genus at least {need}, surface has genus {have}")]
    GenusTooSmall { need: u32, have: u32 },
    #[error("component {0} does not exist")]
    NoSuchComponent(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("search bound {bound} exhausted: {what}")]
    BoundExhausted { bound: u32, what: String },
    #[error("framing is not of holomorphic type")]
    NotHolomorphic,
    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
