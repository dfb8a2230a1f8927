//! Level structures on multicurves, the two-level divisorial candidates,
//! and the graphs E and K̄ built from them.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::framing::{restrict, ArfData, Framing};
use crate::graphs::{admissible_curves, is_k_vertex, EdgeKind, GraphKind, GraphSnapshot};
use crate::surface_core::cut::{cut, topological_type, ComplementDecomposition};
use crate::surface_core::enumerate::{enumerate_multicurves, WeightBound};
use crate::surface_core::multicurve::disjoint_weights;
use crate::surface_core::{NormalMulticurve, OrientedCurve, Triangulation};
use crate::witness::{complement_pieces, witness_in};

/// A multicurve with its curves oriented by φ < 0 and a level for each
/// component of the complement: the component on the left of every curve
/// sits strictly above the one on its right. Levels run 0, −1, …, 1 − N.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelSplitting {
    pub multicurve: NormalMulticurve,
    /// curves in cut order, each as an exit word
    pub orientations: Vec<Vec<u32>>,
    pub windings: Vec<i64>,
    /// level of each complementary component
    pub levels: Vec<i64>,
    pub n_levels: u32,
}

impl LevelSplitting {
    pub fn top_components(&self) -> Vec<usize> {
        (0..self.levels.len()).filter(|&v| self.levels[v] == 0).collect()
    }
}

/// Every level structure compatible with φ: empty when some curve has
/// φ = 0 or the same component on both sides.
pub fn level_assignments(tri: &Triangulation, phi: &Framing, gamma: &NormalMulticurve) -> Result<Vec<LevelSplitting>> {
    gamma.check_surface(tri)?;
    if gamma.is_empty() {
        return Err(Error::Empty);
    }
    let d = cut(tri, gamma)?;
    let mut orientations = Vec::new();
    let mut windings = Vec::new();
    // (upper, lower) pairs
    let mut above: Vec<(usize, usize)> = Vec::new();
    for (i, c) in d.curves().iter().enumerate() {
        let w = phi.winding(tri, c);
        if w == 0 {
            return Ok(Vec::new());
        }
        let (oc, left) = if w < 0 { (c.clone(), true) } else { (c.reversed(tri), false) };
        let (up, down) = (d.side(i, left), d.side(i, !left));
        if up == down {
            return Ok(Vec::new());
        }
        orientations.push(oc.word().to_vec());
        windings.push(-w.abs());
        above.push((up, down));
    }
    let nc = d.components().len();
    let mut out = Vec::new();
    let mut depth = vec![usize::MAX; nc];
    place_levels(nc, &above, &mut depth, 0, &mut |depth| {
        let n = depth.iter().max().unwrap() + 1;
        out.push(LevelSplitting {
            multicurve: gamma.clone(),
            orientations: orientations.clone(),
            windings: windings.clone(),
            levels: depth.iter().map(|&k| -(k as i64)).collect(),
            n_levels: n as u32,
        });
    });
    if phi.is_holomorphic_type() {
        // top components carry genus when every puncture has negative winding
        debug_assert!(out.iter().all(|s| s.top_components().iter().all(|&v| d.components()[v].genus > 0)));
    }
    Ok(out)
}

/// Fills levels top down: a component may go to depth `k` once everything
/// that must sit above it has a smaller depth.
fn place_levels<F: FnMut(&[usize])>(nc: usize, above: &[(usize, usize)], depth: &mut Vec<usize>, k: usize, emit: &mut F) {
    let open: Vec<usize> = (0..nc).filter(|&v| depth[v] == usize::MAX).collect();
    if open.is_empty() {
        emit(depth);
        return;
    }
    let ready: Vec<usize> = open.iter().copied().filter(|&v| above.iter().all(|&(u, w)| w != v || depth[u] < k)).collect();
    if ready.is_empty() {
        return;
    }
    for mask in 1u64..(1 << ready.len()) {
        for (b, &v) in ready.iter().enumerate() {
            if mask >> b & 1 == 1 {
                depth[v] = k;
            }
        }
        place_levels(nc, above, depth, k + 1, emit);
        for &v in &ready {
            depth[v] = usize::MAX;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorialCandidate {
    pub multicurve: NormalMulticurve,
    pub single_admissible: bool,
    pub splitting: Option<LevelSplitting>,
    pub checks: Vec<(String, bool)>,
    pub candidate: bool,
}

/// Total bounds tried when looking for a basis of a genus-1 top component.
const ARF_BOUNDS: [u32; 4] = [12, 16, 20, 24];

/// A single admissible curve, or a multicurve with one two-level structure
/// whose top components all have genus and whose genus-1 tops have
/// vanishing Arf₁ gcd.
pub fn is_divisorial_candidate(tri: &Triangulation, phi: &Framing, gamma: &NormalMulticurve) -> Result<DivisorialCandidate> {
    if !phi.is_holomorphic_type() {
        return Err(Error::NotHolomorphic);
    }
    gamma.check_surface(tri)?;
    if gamma.is_empty() {
        return Err(Error::Empty);
    }
    let mut out = DivisorialCandidate { multicurve: gamma.clone(), single_admissible: false, splitting: None, checks: Vec::new(), candidate: false };
    if gamma.component_count() == 1 {
        let t = topological_type(tri, gamma)?;
        let adm = !t.separating && phi.winding(tri, gamma.single()?) == 0;
        out.checks.push(("single admissible curve".into(), adm));
        if adm {
            out.single_admissible = true;
            out.candidate = true;
            return Ok(out);
        }
    }
    if gamma.has_duplicates() || !gamma.peripheral_components(tri).is_empty() {
        out.checks.push(("distinct nonperipheral curves".into(), false));
        return Ok(out);
    }
    let two: Vec<LevelSplitting> = level_assignments(tri, phi, gamma)?.into_iter().filter(|s| s.n_levels == 2).collect();
    out.checks.push(("two-level structure".into(), !two.is_empty()));
    if two.is_empty() {
        return Ok(out);
    }
    // a two-level structure is forced by the orientations, so it is unique
    debug_assert_eq!(two.len(), 1);
    let s = two.into_iter().next().unwrap();
    let d = cut(tri, gamma)?;
    let tops = s.top_components();
    let genus_ok = tops.iter().all(|&v| d.components()[v].genus > 0);
    out.checks.push(("top components have genus".into(), genus_ok));
    let mut arf_ok = true;
    for &v in tops.iter().filter(|&&v| d.components()[v].genus == 1) {
        let mut found = None;
        let mut last = Error::Empty;
        for b in ARF_BOUNDS {
            match restrict(tri, phi, gamma, v, Some(WeightBound::Total(b))) {
                Ok(r) => {
                    found = r.arf_data;
                    break;
                }
                Err(e @ Error::BoundExhausted { .. }) => last = e,
                Err(e) => return Err(e),
            }
        }
        let Some(ArfData::Arf1(g)) = found else { return Err(last) };
        if g != 0 {
            arf_ok = false;
        }
    }
    out.checks.push(("genus-1 tops have Arf₁ = 0".into(), arf_ok));
    out.candidate = genus_ok && arf_ok;
    out.splitting = Some(s);
    Ok(out)
}

/// Cheap necessary conditions for a multicurve of several curves to carry
/// a two-level structure.
fn may_be_two_level(tri: &Triangulation, phi: &Framing, m: &NormalMulticurve) -> bool {
    !m.has_duplicates() && m.peripheral_components(tri).is_empty() && m.curves().iter().all(|c| phi.winding(tri, c) != 0)
}

/// Vertices: admissible curves and divisorial candidates within the bound;
/// edges join disjoint vertices.
pub fn build_e_graph(tri: &Triangulation, phi: &Framing, bound: u32) -> Result<GraphSnapshot> {
    if !phi.is_holomorphic_type() {
        return Err(Error::NotHolomorphic);
    }
    let mut vs: Vec<NormalMulticurve> =
        admissible_curves(tri, phi, bound).into_iter().map(|c| NormalMulticurve::from_curves(tri, &[c])).collect::<Result<_>>()?;
    let mut undecided = 0;
    for m in enumerate_multicurves(tri, WeightBound::Total(bound), |m| may_be_two_level(tri, phi, m)) {
        match is_divisorial_candidate(tri, phi, &m) {
            Ok(r) if r.candidate && !r.single_admissible => vs.push(m),
            Ok(_) => {}
            Err(Error::BoundExhausted { .. }) => undecided += 1,
            Err(e) => return Err(e),
        }
    }
    vs.sort_by(|a, b| a.total_weight().cmp(&b.total_weight()).then_with(|| a.weights().cmp(b.weights())));
    let mut edges = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if disjoint_weights(tri, vs[i].weights(), vs[j].weights()) {
                edges.push((i, j, EdgeKind::Disjoint));
            }
        }
    }
    let mut snap = GraphSnapshot::new(GraphKind::EGraph, phi.clone(), bound, vs, edges);
    snap.undecided = undecided;
    Ok(snap)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KbarStatus {
    Yes,
    No,
    /// a witness component was not excluded within the search bound
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KbarComponent {
    pub component: usize,
    pub witness: bool,
    /// a two-level candidate disjoint from the component, when found
    pub excluded_by: Option<NormalMulticurve>,
    /// whether the search for such a candidate was exhaustive
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KbarReport {
    pub status: KbarStatus,
    pub components: Vec<KbarComponent>,
}

/// Does μ span a simplex of the coned model? Every witness component must
/// be disjoint from some two-level candidate. The search is exhaustive when
/// each piece of S ∖ W is too small to hold a curve, when only subsets of
/// ∂W can occur; otherwise it runs to `bound`.
pub fn kbar_vertex(tri: &Triangulation, phi: &Framing, mu: &NormalMulticurve, bound: u32) -> Result<KbarReport> {
    mu.check_surface(tri)?;
    if mu.is_empty() {
        return Err(Error::Empty);
    }
    if mu.has_duplicates() {
        return Err(Error::DuplicateComponents);
    }
    if !mu.peripheral_components(tri).is_empty() {
        return Err(Error::Peripheral);
    }
    let d = cut(tri, mu)?;
    let holo = phi.is_holomorphic_type();
    let mut comps = Vec::new();
    for w in 0..d.components().len() {
        let witness = witness_in(tri, phi, &d, w).witness;
        let mut entry = KbarComponent { component: w, witness, excluded_by: None, exact: true };
        if witness && holo {
            let (found, exact) = exclude(tri, phi, &d, w, bound)?;
            entry.excluded_by = found;
            entry.exact = exact;
        }
        comps.push(entry);
    }
    let open: Vec<&KbarComponent> = comps.iter().filter(|c| c.witness && c.excluded_by.is_none()).collect();
    let status = if open.is_empty() {
        KbarStatus::Yes
    } else if open.iter().any(|c| c.exact) {
        KbarStatus::No
    } else {
        KbarStatus::Unknown
    };
    Ok(KbarReport { status, components: comps })
}

/// Searches for a two-level candidate disjoint from component `w`.
fn exclude(tri: &Triangulation, phi: &Framing, d: &ComplementDecomposition, w: usize, bound: u32) -> Result<(Option<NormalMulticurve>, bool)> {
    let data = &d.components()[w];
    let mut boundary: Vec<usize> = data.boundary.iter().map(|b| b.curve).collect();
    boundary.sort();
    boundary.dedup();
    let bcurves: Vec<OrientedCurve> = boundary.iter().map(|&i| d.curves()[i].clone()).collect();
    let exact = complement_pieces(tri, phi, d, w).iter().all(|p| 3 * p.genus as i64 - 3 + p.circles.len() as i64 <= 0);
    let check = |m: &NormalMulticurve| -> Result<bool> {
        match is_divisorial_candidate(tri, phi, m) {
            Ok(r) => Ok(r.candidate && !r.single_admissible),
            Err(Error::BoundExhausted { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    };
    if bcurves.len() < 20 {
        for mask in 1u32..(1 << bcurves.len()) {
            let sub: Vec<OrientedCurve> = (0..bcurves.len()).filter(|b| mask >> b & 1 == 1).map(|b| bcurves[b].clone()).collect();
            let m = NormalMulticurve::from_curves(tri, &sub)?;
            if check(&m)? {
                return Ok((Some(m), exact));
            }
        }
    }
    if exact {
        return Ok((None, true));
    }
    let dw = NormalMulticurve::from_curves(tri, &bcurves)?;
    let d2 = cut(tri, &dw)?;
    let b0 = data.boundary[0];
    let j = d2.curves().iter().position(|c| *c == d.curves()[b0.curve]).expect("boundary curve survives");
    let w2 = d2.side(j, b0.left);
    let bset: BTreeSet<OrientedCurve> = bcurves.iter().cloned().collect();
    for nu in enumerate_multicurves(tri, WeightBound::Total(bound), |m| may_be_two_level(tri, phi, m) && disjoint_weights(tri, dw.weights(), m.weights())) {
        let off_w = nu.curves().iter().all(|c| bset.contains(c) || d2.locate(tri, c).is_some_and(|y| y != w2));
        if off_w && nu.curves().iter().any(|c| !bset.contains(c)) && check(&nu)? {
            return Ok((Some(nu), false));
        }
    }
    Ok((None, false))
}

/// Vertices: multicurves within the bound spanning a K̄ simplex, with the
/// K edge rule. Multicurves left undecided by the bounded search are
/// counted, not included.
pub fn build_kbar_graph(tri: &Triangulation, phi: &Framing, bound: u32) -> Result<GraphSnapshot> {
    let mut vs = Vec::new();
    let mut undecided = 0;
    for m in enumerate_multicurves(tri, WeightBound::Total(bound), |m| !m.has_duplicates() && m.peripheral_components(tri).is_empty()) {
        if is_k_vertex(tri, phi, &m)? {
            vs.push(m);
            continue;
        }
        match kbar_vertex(tri, phi, &m, bound)?.status {
            KbarStatus::Yes => vs.push(m),
            KbarStatus::No => {}
            KbarStatus::Unknown => undecided += 1,
        }
    }
    vs.sort_by(|a, b| a.total_weight().cmp(&b.total_weight()).then_with(|| a.weights().cmp(b.weights())));
    let edges = crate::graphs::model_edges(tri, &vs)?;
    let mut snap = GraphSnapshot::new(GraphKind::ModelKbar, phi.clone(), bound, vs, edges);
    snap.undecided = undecided;
    Ok(snap)
}
