//! Vertices and edges of the model graph K, the sets P(μ) and the map Θ.

use std::collections::BTreeSet;

use super::projection::{pi_in_snapshot, psi_construct, MapName, ProjectionResult};
use super::{EdgeKind, GraphSnapshot};
use crate::error::{Error, Result};
use crate::framing::Framing;
use crate::strata::{kbar_vertex, KbarStatus};
use crate::surface_core::cut::cut;
use crate::surface_core::enumerate::{enumerate_multicurves, WeightBound};
use crate::surface_core::intersection::geometric_words;
use crate::surface_core::multicurve::disjoint_weights;
use crate::surface_core::{NormalMulticurve, OrientedCurve, Triangulation};
use crate::witness::witness_in;

/// A nonempty multicurve of distinct nonperipheral curves none of whose
/// complementary components is a witness for the admissible curve graph.
pub fn is_k_vertex(tri: &Triangulation, phi: &Framing, m: &NormalMulticurve) -> Result<bool> {
    m.check_surface(tri)?;
    if m.is_empty() || m.has_duplicates() || !m.peripheral_components(tri).is_empty() {
        return Ok(false);
    }
    let d = cut(tri, m)?;
    Ok((0..d.components().len()).all(|w| !witness_in(tri, phi, &d, w).witness))
}

/// Are `c` and `d` adjacent in the curve graph of the component of
/// S ∖ `rest` holding both? Disjoint when that component has ξ > 1; one
/// crossing on a one-holed torus and two on a four-holed sphere.
pub fn flip_adjacent(tri: &Triangulation, rest: &[OrientedCurve], c: &OrientedCurve, d: &OrientedCurve) -> Result<bool> {
    if c.unoriented(tri) == d.unoriented(tri) {
        return Ok(false);
    }
    let gamma = NormalMulticurve::from_curves(tri, rest)?;
    let dec = cut(tri, &gamma)?;
    let (Some(yc), Some(yd)) = (dec.locate(tri, c), dec.locate(tri, d)) else { return Ok(false) };
    if yc != yd {
        return Ok(false);
    }
    let y = &dec.components()[yc];
    let i = geometric_words(tri, c, d);
    Ok(match y.complexity() {
        1 if y.genus == 1 => i == 1,
        1 => i == 2,
        x if x > 1 => i == 0,
        _ => false,
    })
}

/// Add/remove and flip edges among the given vertices.
pub(crate) fn model_edges(tri: &Triangulation, vs: &[NormalMulticurve]) -> Result<Vec<(usize, usize, EdgeKind)>> {
    let sets: Vec<BTreeSet<OrientedCurve>> = vs.iter().map(|v| v.curves().into_iter().collect()).collect();
    let mut edges = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let (a, b) = (&sets[i], &sets[j]);
            if a.len().abs_diff(b.len()) == 1 {
                let (small, big) = if a.len() < b.len() { (a, b) } else { (b, a) };
                if small.is_subset(big) {
                    edges.push((i, j, EdgeKind::AddRemove));
                }
                continue;
            }
            if a.len() != b.len() {
                continue;
            }
            let only_a: Vec<&OrientedCurve> = a.difference(b).collect();
            let only_b: Vec<&OrientedCurve> = b.difference(a).collect();
            if only_a.len() != 1 || only_b.len() != 1 {
                continue;
            }
            let rest: Vec<OrientedCurve> = a.intersection(b).cloned().collect();
            if flip_adjacent(tri, &rest, only_a[0], only_b[0])? {
                edges.push((i, j, EdgeKind::Flip));
            }
        }
    }
    Ok(edges)
}

/// P(μ): the K-vertices within the bound that contain μ.
pub fn p_set(tri: &Triangulation, phi: &Framing, mu: &NormalMulticurve, bound: u32) -> Result<Vec<NormalMulticurve>> {
    let status = kbar_vertex(tri, phi, mu, bound)?;
    if status.status == KbarStatus::No {
        return Err(Error::Precondition("μ is not a vertex of the coned model".into()));
    }
    let mut out = Vec::new();
    if is_k_vertex(tri, phi, mu)? {
        out.push(mu.clone());
    }
    let mine: BTreeSet<OrientedCurve> = mu.curves().into_iter().collect();
    for nu in enumerate_multicurves(tri, WeightBound::Total(bound), |nu| disjoint_weights(tri, mu.weights(), nu.weights())) {
        if nu.curves().iter().any(|c| mine.contains(c)) {
            continue;
        }
        let alpha = mu.union(tri, &nu)?;
        if is_k_vertex(tri, phi, &alpha)? && !out.contains(&alpha) {
            out.push(alpha);
        }
    }
    out.sort_by(|a, b| a.total_weight().cmp(&b.total_weight()).then_with(|| a.weights().cmp(b.weights())));
    Ok(out)
}

/// Θ(μ) sampled: Π ∘ Ψ over the first `sample` elements of P(μ), landing
/// in the admissible vertices of the snapshot `target` (an E-graph or
/// admissible curve graph snapshot). The diameter is measured there.
pub fn theta(
    tri: &Triangulation,
    phi: &Framing,
    mu: &NormalMulticurve,
    bound: u32,
    sample: usize,
    target: &GraphSnapshot,
) -> Result<ProjectionResult> {
    let p = p_set(tri, phi, mu, bound)?;
    if p.is_empty() {
        return Err(Error::BoundExhausted { bound, what: "P(μ) is empty".into() });
    }
    let picked: Vec<NormalMulticurve> = p.into_iter().take(sample.max(1)).collect();
    theta_over(tri, phi, mu, &picked, bound, target)
}

/// Θ(μ) over a chosen part of P(μ).
pub fn theta_over(
    tri: &Triangulation,
    phi: &Framing,
    mu: &NormalMulticurve,
    alphas: &[NormalMulticurve],
    bound: u32,
    target: &GraphSnapshot,
) -> Result<ProjectionResult> {
    let mut image: BTreeSet<usize> = BTreeSet::new();
    for alpha in alphas {
        let c = psi_construct(tri, phi, alpha)?;
        image.extend(pi_in_snapshot(tri, phi, target, &c));
    }
    let idx: Vec<usize> = image.into_iter().collect();
    Ok(ProjectionResult {
        map_name: MapName::Theta,
        source: mu.clone(),
        image: idx.iter().map(|&i| target.vertices[i].clone()).collect(),
        bound,
        diameter_in_target: target.diameter(&idx),
    })
}
