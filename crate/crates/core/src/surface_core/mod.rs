//! Triangulated punctured surfaces and curves on them.

pub mod arcs;
pub mod curve;
pub mod cut;
pub mod enumerate;
pub mod intersection;
pub mod multicurve;
pub mod neighborhood;
pub mod overlay;
pub mod regions;
pub mod triangulation;
pub mod twist;

pub use curve::OrientedCurve;
pub use multicurve::NormalMulticurve;
pub use triangulation::{canonical_triangulation, SurfaceType, Triangulation};
