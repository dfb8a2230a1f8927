//! Finite snapshots of the admissible curve graph, the genus-separating
//! curve graph and the model graphs, with the maps between them.
//!
//! A snapshot holds every qualifying vertex up to a total-weight bound and
//! every edge between those vertices. Distances measured inside a snapshot
//! are upper bounds for the true distances; enlarging the bound can only
//! shrink them.

mod model;
mod projection;
mod surgery;

pub use model::{flip_adjacent, is_k_vertex, p_set, theta, theta_over};
pub use projection::{
    adjust_towards, anchoring, pi_in_snapshot, pi_projection, psi_construct, psi_member, psi_patterns, Adjustment,
    MapName, ProjectionResult,
};
pub use surgery::{surgery_chain, surgery_reduce};
pub(crate) use model::model_edges;

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::framing::Framing;
use crate::surface_core::cut::cut;
use crate::surface_core::enumerate::{enumerate_curves, enumerate_multicurves, WeightBound};
use crate::surface_core::multicurve::disjoint_weights;
use crate::surface_core::{NormalMulticurve, OrientedCurve, SurfaceType, Triangulation};
use crate::witness::curve_is_admissible;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphKind {
    #[serde(rename = "cadm")]
    Cadm,
    #[serde(rename = "genus_sep")]
    GenusSep,
    #[serde(rename = "model_K")]
    ModelK,
    #[serde(rename = "model_Kbar")]
    ModelKbar,
    #[serde(rename = "E_graph")]
    EGraph,
}

impl GraphKind {
    pub fn name(&self) -> &'static str {
        match self {
            GraphKind::Cadm => "cadm",
            GraphKind::GenusSep => "genus_sep",
            GraphKind::ModelK => "model_K",
            GraphKind::ModelKbar => "model_Kbar",
            GraphKind::EGraph => "E_graph",
        }
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cadm" => GraphKind::Cadm,
            "genus_sep" => GraphKind::GenusSep,
            "model_K" => GraphKind::ModelK,
            "model_Kbar" => GraphKind::ModelKbar,
            "E_graph" => GraphKind::EGraph,
            other => return Err(Error::Precondition(format!("unknown graph kind {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    Disjoint,
    AddRemove,
    Flip,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSnapshot {
    pub kind: GraphKind,
    pub surface: SurfaceType,
    /// total-weight bound used for the enumeration
    pub bound: u32,
    pub framing: Framing,
    pub vertices: Vec<NormalMulticurve>,
    pub edges: Vec<(usize, usize, EdgeKind)>,
    /// candidates left out because their status was undecided at the bound
    #[serde(default)]
    pub undecided: usize,
    #[serde(skip)]
    adjacency: Vec<Vec<usize>>,
    #[serde(skip)]
    index: HashMap<Vec<u32>, usize>,
}

impl GraphSnapshot {
    pub fn new(
        kind: GraphKind,
        framing: Framing,
        bound: u32,
        vertices: Vec<NormalMulticurve>,
        edges: Vec<(usize, usize, EdgeKind)>,
    ) -> Self {
        let mut s = GraphSnapshot {
            kind,
            surface: framing.surface(),
            bound,
            framing,
            vertices,
            edges,
            undecided: 0,
            adjacency: Vec::new(),
            index: HashMap::new(),
        };
        s.seal();
        s
    }

    fn seal(&mut self) {
        self.adjacency = vec![Vec::new(); self.vertices.len()];
        for &(u, v, _) in &self.edges {
            self.adjacency[u].push(v);
            self.adjacency[v].push(u);
        }
        for a in &mut self.adjacency {
            a.sort_unstable();
            a.dedup();
        }
        self.index = self.vertices.iter().enumerate().map(|(i, v)| (v.weights().to_vec(), i)).collect();
    }

    /// Restores the caches and component data after deserialization.
    pub fn rehydrate(mut self, tri: &Triangulation) -> Result<Self> {
        self.framing = self.framing.rehydrate(tri)?;
        self.vertices = self.vertices.into_iter().map(|v| v.rehydrate(tri)).collect::<Result<_>>()?;
        let n = self.vertices.len();
        if self.edges.iter().any(|&(u, v, _)| u >= n || v >= n) {
            return Err(Error::Precondition("edge refers to a missing vertex".into()));
        }
        self.seal();
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, m: &NormalMulticurve) -> Option<usize> {
        self.index.get(m.weights()).copied()
    }

    pub fn neighbours(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    /// BFS distances from `u`; `None` for vertices it cannot reach.
    pub fn distances_from(&self, u: usize) -> Vec<Option<u32>> {
        let mut d = vec![None; self.vertices.len()];
        d[u] = Some(0);
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            let dx = d[x].unwrap();
            for &y in &self.adjacency[x] {
                if d[y].is_none() {
                    d[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        d
    }

    /// Shortest path length between two vertex indices.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<u32>> {
        let n = self.vertices.len();
        if u >= n || v >= n {
            return Err(Error::Precondition(format!("vertex {} is not in the snapshot", u.max(v))));
        }
        Ok(self.distances_from(u)[v])
    }

    /// Distance between two multicurves, both required to be vertices.
    pub fn distance_between(&self, a: &NormalMulticurve, b: &NormalMulticurve) -> Result<Option<u32>> {
        let u = self.index_of(a).ok_or_else(|| Error::Precondition("first multicurve is not a vertex".into()))?;
        let v = self.index_of(b).ok_or_else(|| Error::Precondition("second multicurve is not a vertex".into()))?;
        self.distance(u, v)
    }

    /// Largest pairwise distance within `set`; `None` if some pair is not
    /// connected in the snapshot. The empty set has diameter 0.
    pub fn diameter(&self, set: &[usize]) -> Option<u32> {
        let mut best = 0;
        for (k, &u) in set.iter().enumerate() {
            let d = self.distances_from(u);
            for &v in &set[k + 1..] {
                best = best.max(d[v]?);
            }
        }
        Some(best)
    }

    /// Connected components as vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertices.len()];
        let mut out = Vec::new();
        for s in 0..self.vertices.len() {
            if seen[s] {
                continue;
            }
            let d = self.distances_from(s);
            let comp: Vec<usize> = (0..d.len()).filter(|&i| d[i].is_some()).collect();
            for &i in &comp {
                seen[i] = true;
            }
            out.push(comp);
        }
        out
    }

    /// The JSON export `{vertices, edges: [[i, j, kind]], bound}` plus the
    /// kind and surface.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("snapshot serializes")
    }

    pub fn from_json(tri: &Triangulation, s: &str) -> Result<Self> {
        let snap: GraphSnapshot = serde_json::from_str(s).map_err(|e| Error::Precondition(format!("bad snapshot: {e}")))?;
        snap.rehydrate(tri)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {} {{", self.kind.name());
        let _ = writeln!(out, "  // bound {}", self.bound);
        for (i, v) in self.vertices.iter().enumerate() {
            let w: Vec<String> = v.weights().iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "  v{i} [label=\"{i}\", weights=\"{}\", curves={}];", w.join(" "), v.component_count());
        }
        for &(u, v, k) in &self.edges {
            let style = match k {
                EdgeKind::Disjoint => "solid",
                EdgeKind::AddRemove => "dashed",
                EdgeKind::Flip => "dotted",
            };
            let _ = writeln!(out, "  v{u} -- v{v} [style={style}];");
        }
        out.push_str("}\n");
        out
    }

    /// All-pairs distance table `source,target,distance,bound` with
    /// `unreachable` for disconnected pairs.
    pub fn distance_csv(&self) -> String {
        let mut out = String::from("source,target,distance,bound\n");
        for u in 0..self.vertices.len() {
            let d = self.distances_from(u);
            for (v, dv) in d.iter().enumerate().skip(u + 1) {
                match dv {
                    Some(x) => {
                        let _ = writeln!(out, "{u},{v},{x},{}", self.bound);
                    }
                    None => {
                        let _ = writeln!(out, "{u},{v},unreachable,{}", self.bound);
                    }
                }
            }
        }
        out
    }
}

/// Separating with positive genus on both sides.
pub fn is_genus_separating(tri: &Triangulation, c: &OrientedCurve) -> bool {
    let Ok(m) = NormalMulticurve::from_curves(tri, std::slice::from_ref(c)) else { return false };
    if m.single().is_err() || tri.peripheral_index(c).is_some() {
        return false;
    }
    match cut(tri, &m) {
        Ok(d) => d.components().len() == 2 && d.components().iter().all(|x| x.genus > 0),
        Err(_) => false,
    }
}

fn single(tri: &Triangulation, c: &OrientedCurve) -> NormalMulticurve {
    NormalMulticurve::from_curves(tri, std::slice::from_ref(c)).expect("enumerated curve is normal")
}

fn ordered(mut v: Vec<NormalMulticurve>) -> Vec<NormalMulticurve> {
    v.sort_by(|a, b| a.total_weight().cmp(&b.total_weight()).then_with(|| a.weights().cmp(b.weights())));
    v
}

fn disjointness_edges(tri: &Triangulation, vs: &[NormalMulticurve]) -> Vec<(usize, usize, EdgeKind)> {
    let mut edges = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if disjoint_weights(tri, vs[i].weights(), vs[j].weights()) {
                edges.push((i, j, EdgeKind::Disjoint));
            }
        }
    }
    edges
}

/// Admissible curves within the bound, in snapshot order.
pub fn admissible_curves(tri: &Triangulation, phi: &Framing, bound: u32) -> Vec<OrientedCurve> {
    let mut out: Vec<OrientedCurve> =
        enumerate_curves(tri, WeightBound::Total(bound)).into_iter().filter(|c| curve_is_admissible(tri, phi, c)).collect();
    out.sort_by_key(|c| c.len());
    out
}

/// Genus-separating curves within the bound.
pub fn genus_separating_curves(tri: &Triangulation, bound: u32) -> Vec<OrientedCurve> {
    let mut out: Vec<OrientedCurve> =
        enumerate_curves(tri, WeightBound::Total(bound)).into_iter().filter(|c| is_genus_separating(tri, c)).collect();
    out.sort_by_key(|c| c.len());
    out
}

/// Builds the snapshot of the requested graph with every vertex of total
/// weight at most `bound`.
pub fn build_graph(tri: &Triangulation, kind: GraphKind, phi: &Framing, bound: u32) -> Result<GraphSnapshot> {
    let s = tri.surface();
    if s.g < 3 {
        return Err(Error::GenusTooSmall { need: 3, have: s.g });
    }
    if phi.surface() != s {
        return Err(Error::SurfaceMismatch(phi.surface(), s));
    }
    match kind {
        GraphKind::Cadm => {
            let vs = ordered(admissible_curves(tri, phi, bound).iter().map(|c| single(tri, c)).collect());
            let edges = disjointness_edges(tri, &vs);
            Ok(GraphSnapshot::new(kind, phi.clone(), bound, vs, edges))
        }
        GraphKind::GenusSep => {
            let vs = ordered(genus_separating_curves(tri, bound).iter().map(|c| single(tri, c)).collect());
            let edges = disjointness_edges(tri, &vs);
            Ok(GraphSnapshot::new(kind, phi.clone(), bound, vs, edges))
        }
        GraphKind::ModelK => {
            let vs = ordered(enumerate_multicurves(tri, WeightBound::Total(bound), |m| is_k_vertex(tri, phi, m).unwrap_or(false)));
            let edges = model::model_edges(tri, &vs)?;
            Ok(GraphSnapshot::new(kind, phi.clone(), bound, vs, edges))
        }
        GraphKind::ModelKbar => crate::strata::build_kbar_graph(tri, phi, bound),
        GraphKind::EGraph => crate::strata::build_e_graph(tri, phi, bound),
    }
}
