//! Fixtures shared by the benchmarks.

use framed_core::framing::{framing_from_gsb, Framing};
use framed_core::surface_core::neighborhood::neighborhood_boundary;
use framed_core::{canonical_triangulation, OrientedCurve, Triangulation};

/// S_{3,1} with the zero framing of signature (−5).
pub fn s31() -> (Triangulation, Framing) {
    let t = canonical_triangulation(3, 1).expect("hyperbolic");
    let phi = framing_from_gsb(&t, &[0; 6], &[-5]).expect("valid framing");
    (t, phi)
}

/// The curve cutting off handle `i`.
pub fn handle_curve(t: &Triangulation, i: usize) -> OrientedCurve {
    let (a, b) = t.gsb()[i].clone();
    neighborhood_boundary(t, &[a, b]).expect("handle").boundary.single().expect("one curve").clone()
}
