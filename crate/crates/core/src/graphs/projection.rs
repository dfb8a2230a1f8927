//! The coarse maps Π and Ψ between the curve graphs, plus the anchoring
//! and adjustment steps used when comparing Ψ(α) with a nearby curve.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::model::is_k_vertex;
use super::{admissible_curves, is_genus_separating, GraphSnapshot};
use crate::error::{Error, Result};
use crate::framing::{curves_in_component, Framing};
use crate::surface_core::arcs::{arc_pattern, arcs_of, ArcPattern};
use crate::surface_core::curve::reduce_cyclic;
use crate::surface_core::enumerate::WeightBound;
use crate::surface_core::intersection::geometric_words;
use crate::surface_core::multicurve::word_is_simple;
use crate::surface_core::neighborhood::neighborhood_boundary;
use crate::surface_core::regions::RegionMap;
use crate::surface_core::twist::twist_curve;
use crate::surface_core::{NormalMulticurve, OrientedCurve, Triangulation};
use crate::witness::curve_is_admissible;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapName {
    Pi,
    Psi,
    Theta,
    PSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionResult {
    pub map_name: MapName,
    pub source: NormalMulticurve,
    pub image: Vec<NormalMulticurve>,
    pub bound: u32,
    /// diameter of the image in the snapshot it was measured in
    pub diameter_in_target: Option<u32>,
}

/// Π(c): admissible curves within the bound disjoint from the
/// genus-separating curve `c`.
pub fn pi_projection(tri: &Triangulation, phi: &Framing, c: &OrientedCurve, bound: u32) -> Result<ProjectionResult> {
    if !is_genus_separating(tri, c) {
        return Err(Error::Precondition("Π needs a genus-separating curve".into()));
    }
    let image = admissible_curves(tri, phi, bound)
        .into_iter()
        .filter(|a| geometric_words(tri, a, c) == 0)
        .map(|a| NormalMulticurve::from_curves(tri, &[a]))
        .collect::<Result<Vec<_>>>()?;
    Ok(ProjectionResult {
        map_name: MapName::Pi,
        source: NormalMulticurve::from_curves(tri, std::slice::from_ref(c))?,
        image,
        bound,
        diameter_in_target: None,
    })
}

/// Indices of the admissible single-curve vertices of a snapshot that are
/// disjoint from `c`.
pub fn pi_in_snapshot(tri: &Triangulation, phi: &Framing, snap: &GraphSnapshot, c: &OrientedCurve) -> Vec<usize> {
    snap.vertices
        .iter()
        .enumerate()
        .filter(|(_, v)| match v.single() {
            Ok(a) => curve_is_admissible(tri, phi, a) && geometric_words(tri, a, c) == 0,
            Err(_) => false,
        })
        .map(|(i, _)| i)
        .collect()
}

/// Pattern of `c` in every component of S ∖ α.
pub fn psi_patterns(tri: &Triangulation, alpha: &NormalMulticurve, c: &OrientedCurve) -> Result<Vec<ArcPattern>> {
    let map = RegionMap::new(tri, alpha)?;
    patterns_in(tri, &map, c)
}

fn patterns_in(tri: &Triangulation, map: &RegionMap, c: &OrientedCurve) -> Result<Vec<ArcPattern>> {
    let sys = arcs_of(tri, map, c)?;
    Ok((0..map.decomposition().components().len()).map(|w| sys.pattern(tri, map, w)).collect())
}

/// Is the genus-separating `c` in Ψ(α)?
pub fn psi_member(tri: &Triangulation, phi: &Framing, alpha: &NormalMulticurve, c: &OrientedCurve) -> Result<bool> {
    if !is_k_vertex(tri, phi, alpha)? {
        return Err(Error::Precondition("α is not a K-vertex".into()));
    }
    if !is_genus_separating(tri, c) {
        return Err(Error::Precondition("c is not genus-separating".into()));
    }
    Ok(psi_patterns(tri, alpha, c)?.iter().all(|p| p.is_allowed()))
}

/// One explicit element of Ψ(α).
pub fn psi_construct(tri: &Triangulation, phi: &Framing, alpha: &NormalMulticurve) -> Result<OrientedCurve> {
    if !is_k_vertex(tri, phi, alpha)? {
        return Err(Error::Precondition("α is not a K-vertex".into()));
    }
    if let Some(c) = alpha.curves().into_iter().find(|c| is_genus_separating(tri, c)) {
        return Ok(c);
    }
    let map = RegionMap::new(tri, alpha)?;
    let d = map.decomposition();
    let mut tried = Vec::new();
    for comp in 0..d.components().len() {
        if d.components()[comp].genus == 0 {
            continue;
        }
        if let Some(c) = torus_boundary_in(tri, alpha, &map, comp) {
            if accept(tri, &map, &c)? {
                return Ok(c);
            }
            tried.push("torus boundary");
        }
    }
    if let Some(c) = dual_cycle_curve(tri, &map)? {
        if accept(tri, &map, &c)? {
            return Ok(c);
        }
        tried.push("dual cycle");
    }
    Err(Error::Construction(format!("no element of Ψ(α) found (tried {tried:?})")))
}

fn accept(tri: &Triangulation, map: &RegionMap, c: &OrientedCurve) -> Result<bool> {
    Ok(word_is_simple(tri, c.word()) && is_genus_separating(tri, c) && patterns_in(tri, map, c)?.iter().all(|p| p.is_allowed()))
}

/// ∂N(a ∪ b) for a pair meeting once inside a component with genus.
fn torus_boundary_in(tri: &Triangulation, alpha: &NormalMulticurve, map: &RegionMap, comp: usize) -> Option<OrientedCurve> {
    let mut pool = map.cycles_in_component(tri, comp);
    for round in 0..2 {
        if round == 1 {
            for b in [8, 12, 16] {
                pool.extend(curves_in_component(tri, alpha, map.decomposition(), comp, WeightBound::Total(b)));
                if pool.len() > 40 {
                    break;
                }
            }
        }
        for i in 0..pool.len() {
            for j in i + 1..pool.len() {
                if geometric_words(tri, &pool[i], &pool[j]) != 1 {
                    continue;
                }
                if let Ok(nb) = neighborhood_boundary(tri, &[pool[i].clone(), pool[j].clone()]) {
                    if let Ok(c) = nb.boundary.single() {
                        return Some(c.clone());
                    }
                }
            }
        }
    }
    None
}

/// A simple cycle in the dual graph of α: (component, curve index) steps,
/// curve k of the cycle running from component k to component k + 1.
fn dual_cycle(sides: &[(usize, usize)], nc: usize) -> Option<Vec<(usize, usize)>> {
    if let Some(i) = sides.iter().position(|&(l, r)| l == r) {
        return Some(vec![(sides[i].0, i)]);
    }
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; nc];
    let mut depth = vec![usize::MAX; nc];
    let mut used = vec![false; sides.len()];
    depth[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for (e, &(l, r)) in sides.iter().enumerate() {
            if used[e] || (l != u && r != u) {
                continue;
            }
            used[e] = true;
            let v = if l == u { r } else { l };
            if depth[v] == usize::MAX {
                depth[v] = depth[u] + 1;
                parent[v] = Some((u, e));
                queue.push_back(v);
                continue;
            }
            // non-tree edge u - v closes a cycle through their common ancestor
            let up = |mut x: usize| {
                let mut chain = vec![x];
                while let Some((p, _)) = parent[x] {
                    chain.push(p);
                    x = p;
                }
                chain
            };
            let (cu, cv) = (up(u), up(v));
            let lca = *cu.iter().find(|x| cv.contains(x)).expect("common root");
            let mut cycle = Vec::new();
            // lca down to u
            let mut down: Vec<(usize, usize)> = Vec::new();
            let mut x = u;
            while x != lca {
                let (p, pe) = parent[x].unwrap();
                down.push((p, pe));
                x = p;
            }
            down.reverse();
            cycle.extend(down);
            cycle.push((u, e));
            // v back up to lca
            let mut x = v;
            while x != lca {
                let (p, pe) = parent[x].unwrap();
                cycle.push((x, pe));
                x = p;
            }
            return Some(cycle);
        }
    }
    None
}

/// The curve b crossing each curve of a dual cycle once, then ∂N(b ∪ a)
/// for the last curve a of the cycle.
fn dual_cycle_curve(tri: &Triangulation, map: &RegionMap) -> Result<Option<OrientedCurve>> {
    let d = map.decomposition();
    let Some(cycle) = dual_cycle(d.curve_sides(), d.components().len()) else { return Ok(None) };
    let n = cycle.len();
    // entry and exit regions at position 0 of each cycle curve
    let mut steps: Vec<(u32, u32, usize)> = Vec::with_capacity(n);
    for (k, &(from, q)) in cycle.iter().enumerate() {
        let to = cycle[(k + 1) % n].0;
        let (l, r) = map.strand_regions(tri, q, 0);
        if d.side(q, true) == from && d.side(q, false) == to {
            steps.push((l, r, to));
        } else {
            steps.push((r, l, to));
        }
    }
    let mut word = Vec::new();
    for k in 0..n {
        let (_, arrive, comp) = steps[k];
        let (leave, _, _) = steps[(k + 1) % n];
        let path = map
            .path(arrive, leave, |r| map.component_of(r) == comp)
            .ok_or_else(|| Error::Construction("no region path along the dual cycle".into()))?;
        word.extend(path);
    }
    let w = reduce_cyclic(tri, &word);
    if w.is_empty() || !word_is_simple(tri, &w) {
        return Ok(None);
    }
    let b = OrientedCurve::from_word(w);
    let a = map.curves()[cycle[n - 1].1].clone();
    if geometric_words(tri, &a, &b) != 1 {
        return Ok(None);
    }
    let nb = neighborhood_boundary(tri, &[b, a])?;
    Ok(nb.boundary.single().ok().cloned())
}

/// An admissible curve a missing the component `comp` of S ∖ α and
/// meeting `c` at most four times; the least such intersection wins.
pub fn anchoring(
    tri: &Triangulation,
    phi: &Framing,
    alpha: &NormalMulticurve,
    c: &OrientedCurve,
    comp: usize,
    bound: u32,
) -> Result<Option<(OrientedCurve, u64)>> {
    let map = RegionMap::new(tri, alpha)?;
    map.decomposition().component(comp)?;
    let mut best: Option<(OrientedCurve, u64)> = None;
    for a in admissible_curves(tri, phi, bound) {
        let i = geometric_words(tri, &a, c);
        if i > 4 || best.as_ref().is_some_and(|(_, j)| *j <= i) {
            continue;
        }
        if arc_pattern(tri, &map, &a, comp)? == ArcPattern::Disjoint {
            best = Some((a, i));
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Adjustment {
    pub curve: OrientedCurve,
    /// twists applied in order, each about a curve disjoint from α or in α
    pub steps: Vec<(OrientedCurve, i64)>,
    pub intersection: u64,
}

/// Moves `c` inside Ψ(α) towards `d` by twists that fix α, greedily
/// lowering i(·, d) until it is at most `target` or no twist helps.
pub fn adjust_towards(
    tri: &Triangulation,
    alpha: &NormalMulticurve,
    c: &OrientedCurve,
    d: &OrientedCurve,
    target: u64,
) -> Result<Adjustment> {
    let map = RegionMap::new(tri, alpha)?;
    let mut pool: Vec<OrientedCurve> = alpha.curves();
    for comp in 0..map.decomposition().components().len() {
        pool.extend(map.cycles_in_component(tri, comp));
    }
    let mut cur = c.unoriented(tri);
    let mut i = geometric_words(tri, &cur, d);
    let mut steps = Vec::new();
    while i > target {
        let mut best: Option<(OrientedCurve, OrientedCurve, i64, u64)> = None;
        for z in &pool {
            if geometric_words(tri, z, &cur) == 0 {
                continue;
            }
            for k in [-2i64, -1, 1, 2] {
                let next = twist_curve(tri, &cur, z, k).unoriented(tri);
                let j = geometric_words(tri, &next, d);
                if j < best.as_ref().map_or(i, |b| b.3) {
                    best = Some((next, z.clone(), k, j));
                }
            }
        }
        let Some((next, z, k, j)) = best else { break };
        cur = next;
        steps.push((z, k));
        i = j;
    }
    Ok(Adjustment { curve: cur, steps, intersection: i })
}
