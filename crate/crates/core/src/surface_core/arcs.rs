//! Arcs of a curve in the components of S ∖ γ, their patterns, and the
//! curves built from arcs by band sums.

use serde::{Deserialize, Serialize};

use super::curve::{reduce_cyclic, reverse_word, OrientedCurve};
use super::cut::BoundaryCircle;
use super::overlay::{based_loop, cyclic_piece, ordered_crossings, StrandCrossing};
use super::regions::RegionMap;
use super::triangulation::Triangulation;
use crate::error::{Error, Result};

/// One arc of `c ∩ Y`, running from crossing `from` to crossing `to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcPiece {
    pub component: usize,
    pub start: BoundaryCircle,
    pub end: BoundaryCircle,
    pub from: usize,
    pub to: usize,
    /// region just after the crossing at the start, just before the end
    pub start_region: u32,
    pub end_region: u32,
    /// exits of `c` along the arc
    pub word: Vec<u32>,
}

/// The curve `c` cut along γ: its crossings in order and the arcs between
/// them. With no crossings, the component holding `c` (or `None` when `c`
/// is a curve of γ).
#[derive(Debug, Clone)]
pub struct ArcSystem {
    pub curve: OrientedCurve,
    pub crossings: Vec<StrandCrossing>,
    pub arcs: Vec<ArcPiece>,
    pub located: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcPattern {
    Disjoint,
    Contained,
    SingleArcSameBoundary,
    ParallelPairDistinctBoundaries,
    Other { arcs: usize, endpoints: Vec<(BoundaryCircle, BoundaryCircle)> },
}

impl ArcPattern {
    /// One of the four patterns a curve of Ψ(α) may show.
    pub fn is_allowed(&self) -> bool {
        !matches!(self, ArcPattern::Other { .. })
    }
}

fn departure(map: &RegionMap, tri: &Triangulation, x: &StrandCrossing) -> (BoundaryCircle, u32) {
    let (l, r) = map.strand_regions(tri, x.q, x.q_base);
    if x.from_left_of_q() {
        (BoundaryCircle { curve: x.q, left: false }, r)
    } else {
        (BoundaryCircle { curve: x.q, left: true }, l)
    }
}

fn arrival(map: &RegionMap, tri: &Triangulation, x: &StrandCrossing) -> (BoundaryCircle, u32) {
    let (l, r) = map.strand_regions(tri, x.q, x.q_base);
    if x.from_left_of_q() {
        (BoundaryCircle { curve: x.q, left: true }, l)
    } else {
        (BoundaryCircle { curve: x.q, left: false }, r)
    }
}

/// Cuts the reduced simple curve `c` along the multicurve of `map`.
pub fn arcs_of(tri: &Triangulation, map: &RegionMap, c: &OrientedCurve) -> Result<ArcSystem> {
    let qs: Vec<Vec<u32>> = map.curves().iter().map(|q| q.word().to_vec()).collect();
    let crossings = ordered_crossings(tri, c.word(), &qs);
    if crossings.is_empty() {
        let located = map.decomposition().locate(tri, c);
        if located.is_none() && !map.curves().contains(&c.unoriented(tri)) {
            return Err(Error::Precondition("curve is neither in a component nor a cut curve".into()));
        }
        return Ok(ArcSystem { curve: c.clone(), crossings, arcs: Vec::new(), located });
    }
    let m = crossings.len();
    let mut arcs = Vec::with_capacity(m);
    for k in 0..m {
        let x = &crossings[k];
        let y = &crossings[(k + 1) % m];
        let (start, start_region) = departure(map, tri, x);
        let (end, end_region) = arrival(map, tri, y);
        let component = map.component_of(start_region);
        if map.component_of(end_region) != component {
            return Err(Error::Construction("arc ends in a different component".into()));
        }
        let full = k == m - 1 && x.p_pos == y.p_pos;
        let word = cyclic_piece(c.word(), x.p_pos, y.p_pos, full);
        arcs.push(ArcPiece { component, start, end, from: k, to: (k + 1) % m, start_region, end_region, word });
    }
    Ok(ArcSystem { curve: c.clone(), crossings, arcs, located: None })
}

impl ArcSystem {
    pub fn arcs_in(&self, comp: usize) -> Vec<&ArcPiece> {
        self.arcs.iter().filter(|a| a.component == comp).collect()
    }

    /// Oriented loop of a boundary circle based at the crossing `k`, with
    /// the component on its left.
    fn circle_loop(&self, tri: &Triangulation, map: &RegionMap, k: usize, circle: BoundaryCircle) -> Vec<u32> {
        let x = &self.crossings[k];
        let q = map.curves()[circle.curve].word();
        based_loop(tri, q, x.q_base, if circle.left { 1 } else { -1 })
    }

    /// The curve ∂N(y₁ ∪ arc ∪ y₂) in the arc's component, y₁ ≠ y₂ its
    /// end circles.
    pub fn band_curve(&self, tri: &Triangulation, map: &RegionMap, arc: &ArcPiece) -> OrientedCurve {
        let mut w = self.circle_loop(tri, map, arc.from, arc.start);
        w.extend_from_slice(&arc.word);
        w.extend(self.circle_loop(tri, map, arc.to, arc.end));
        w.extend(reverse_word(tri, &arc.word));
        OrientedCurve::from_word(reduce_cyclic(tri, &w)).unoriented(tri)
    }

    pub fn pattern(&self, tri: &Triangulation, map: &RegionMap, comp: usize) -> ArcPattern {
        if self.crossings.is_empty() {
            return if self.located == Some(comp) { ArcPattern::Contained } else { ArcPattern::Disjoint };
        }
        let here = self.arcs_in(comp);
        match here.as_slice() {
            [] => ArcPattern::Disjoint,
            [a] if a.start == a.end => ArcPattern::SingleArcSameBoundary,
            [a, b] if a.start != a.end && same_ends(a, b) && self.band_curve(tri, map, a) == self.band_curve(tri, map, b) => {
                ArcPattern::ParallelPairDistinctBoundaries
            }
            _ => ArcPattern::Other { arcs: here.len(), endpoints: here.iter().map(|a| (a.start, a.end)).collect() },
        }
    }
}

fn same_ends(a: &ArcPiece, b: &ArcPiece) -> bool {
    (a.start == b.start && a.end == b.end) || (a.start == b.end && a.end == b.start)
}

/// Pattern of `c ∩ Y` for the component `comp` of the cut recorded in `map`.
pub fn arc_pattern(tri: &Triangulation, map: &RegionMap, c: &OrientedCurve, comp: usize) -> Result<ArcPattern> {
    map.decomposition().component(comp)?;
    Ok(arcs_of(tri, map, c)?.pattern(tri, map, comp))
}

/// Band sum ∂N(x ∪ β ∪ z): `x` based at `xb`, the walk `path` from there to
/// the base `zb` of `z`, then back. Signs pick the orientations; the
/// regular neighbourhood should lie on the left of both.
pub fn band_sum(tri: &Triangulation, x: &[u32], xb: usize, xs: i64, path: &[u32], z: &[u32], zb: usize, zs: i64) -> Vec<u32> {
    let mut w = based_loop(tri, x, xb, xs);
    w.extend_from_slice(path);
    w.extend(based_loop(tri, z, zb, zs));
    w.extend(reverse_word(tri, path));
    reduce_cyclic(tri, &w)
}

/// Commutator of two loops based at their common crossing, the boundary of
/// the one-holed torus around a pair meeting once.
pub fn commutator(tri: &Triangulation, a: &[u32], ab: usize, b: &[u32], bb: usize) -> Vec<u32> {
    let mut w = based_loop(tri, a, ab, 1);
    w.extend(based_loop(tri, b, bb, 1));
    w.extend(based_loop(tri, a, ab, -1));
    w.extend(based_loop(tri, b, bb, -1));
    reduce_cyclic(tri, &w)
}
