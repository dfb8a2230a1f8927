//! Framed surfaces: curves, framings, witnesses and the curve graphs built
//! from them.

pub mod error;
pub mod framing;
pub mod graphs;
pub mod strata;
pub mod surface_core;
pub mod witness;

pub use error::{Error, Result};
pub use surface_core::{
    canonical_triangulation, NormalMulticurve, OrientedCurve, SurfaceType, Triangulation,
};
