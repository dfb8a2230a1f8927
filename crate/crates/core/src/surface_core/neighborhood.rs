//! Boundaries of regular neighbourhoods, and the curve cutting off a chosen
//! set of circles inside a component.

use serde::{Deserialize, Serialize};

use super::arcs::{band_sum, commutator};
use super::curve::OrientedCurve;
use super::cut::BoundaryCircle;
use super::intersection::geometric_words;
use super::multicurve::{word_is_simple, NormalMulticurve};
use super::overlay::ordered_crossings;
use super::regions::RegionMap;
use super::triangulation::Triangulation;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborhoodBoundary {
    pub boundary: NormalMulticurve,
    /// boundary components dropped as inessential or peripheral
    pub discarded: Vec<String>,
}

/// ∂N of a connected union of simple curves. Supported unions: one curve,
/// and two curves meeting once.
pub fn neighborhood_boundary(tri: &Triangulation, pieces: &[OrientedCurve]) -> Result<NeighborhoodBoundary> {
    match pieces {
        [] => Err(Error::Empty),
        [c] => Ok(NeighborhoodBoundary { boundary: NormalMulticurve::from_curves(tri, std::slice::from_ref(c))?, discarded: Vec::new() }),
        [a, b] => {
            if a.unoriented(tri) == b.unoriented(tri) {
                return neighborhood_boundary(tri, &pieces[..1]);
            }
            match geometric_words(tri, a, b) {
                0 => Err(Error::Precondition("union of the pieces is disconnected".into())),
                1 => {
                    let x = ordered_crossings(tri, a.word(), &[b.word().to_vec()])[0];
                    let w = commutator(tri, a.word(), x.p_pos, b.word(), x.q_base);
                    let c = OrientedCurve::from_word(w);
                    if c.is_empty() {
                        return Ok(NeighborhoodBoundary { boundary: NormalMulticurve::empty(tri), discarded: vec!["inessential".into()] });
                    }
                    if let Some(p) = tri.peripheral_index(&c) {
                        return Ok(NeighborhoodBoundary {
                            boundary: NormalMulticurve::empty(tri),
                            discarded: vec![format!("peripheral about puncture {p}")],
                        });
                    }
                    Ok(NeighborhoodBoundary { boundary: NormalMulticurve::from_curves(tri, &[c])?, discarded: Vec::new() })
                }
                _ => Err(Error::Precondition("pieces meeting more than once are not supported".into())),
            }
        }
        _ => Err(Error::Precondition("at most two curves are supported".into())),
    }
}

/// A boundary circle of a component or one of its punctures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Circle {
    Boundary(BoundaryCircle),
    Puncture(u32),
}

/// Loop around a circle based where a path can start: (word, base, sign,
/// region beside it).
fn circle_anchor(tri: &Triangulation, map: &RegionMap, c: Circle) -> (Vec<u32>, usize, i64, u32) {
    match c {
        Circle::Boundary(b) => {
            let (l, r) = map.strand_regions(tri, b.curve, 0);
            let word = map.curves()[b.curve].word().to_vec();
            if b.left {
                (word, 0, 1, l)
            } else {
                (word, 0, -1, r)
            }
        }
        Circle::Puncture(p) => {
            let (r, pos) = map.puncture_region(tri, p);
            (tri.peripheral_loops()[p as usize].word().to_vec(), pos, 1, r)
        }
    }
}

fn circle_component(map: &RegionMap, c: Circle, tri: &Triangulation) -> usize {
    match c {
        Circle::Boundary(b) => map.decomposition().side(b.curve, b.left),
        Circle::Puncture(p) => map.component_of(map.puncture_region(tri, p).0),
    }
}

/// Moves a circle of the cut of γ to the matching circle of the cut of a
/// larger multicurve.
fn transfer(from: &RegionMap, to: &RegionMap, c: Circle) -> Circle {
    match c {
        Circle::Boundary(b) => {
            let curve = &from.curves()[b.curve];
            let idx = to.curves().iter().position(|d| d == curve).expect("curve survives in the larger cut");
            Circle::Boundary(BoundaryCircle { curve: idx, left: b.left })
        }
        p => p,
    }
}

/// Band sum of two circles of one component along a shortest region path.
pub fn band_circles(tri: &Triangulation, map: &RegionMap, x: Circle, z: Circle) -> Result<OrientedCurve> {
    let comp = circle_component(map, x, tri);
    if circle_component(map, z, tri) != comp {
        return Err(Error::Precondition("circles lie in different components".into()));
    }
    let (xw, xb, xs, xr) = circle_anchor(tri, map, x);
    let (zw, zb, zs, zr) = circle_anchor(tri, map, z);
    let path = map
        .path(xr, zr, |r| map.component_of(r) == comp)
        .ok_or_else(|| Error::Construction("no region path inside the component".into()))?;
    let w = band_sum(tri, &xw, xb, xs, &path, &zw, zb, zs);
    if !word_is_simple(tri, &w) {
        return Err(Error::Construction("band sum is not simple".into()));
    }
    Ok(OrientedCurve::from_word(w))
}

/// A curve inside component `comp` of S ∖ γ that cuts off exactly the
/// circles `targets` (at least two, all circles of `comp`), built by
/// repeated band sums.
pub fn cut_off(tri: &Triangulation, gamma: &NormalMulticurve, targets: &[Circle]) -> Result<OrientedCurve> {
    if targets.len() < 2 {
        return Err(Error::Precondition("need at least two circles to cut off".into()));
    }
    let base = RegionMap::new(tri, gamma)?;
    let mut current = band_circles(tri, &base, targets[0], targets[1])?;
    for &t in &targets[2..] {
        let grown = gamma.union(tri, &NormalMulticurve::from_curves(tri, &[current.clone()])?)?;
        let map = RegionMap::new(tri, &grown)?;
        let cu = current.unoriented(tri);
        let idx = map.curves().iter().position(|d| *d == cu).expect("new curve is a component");
        let inner = circle_component(&map, transfer(&base, &map, targets[0]), tri);
        let left = map.decomposition().side(idx, true) != inner;
        let from = Circle::Boundary(BoundaryCircle { curve: idx, left });
        current = band_circles(tri, &map, from, transfer(&base, &map, t))?;
    }
    Ok(current)
}
