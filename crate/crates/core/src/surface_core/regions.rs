//! The region graph of a cut surface.
//!
//! Regions of S ∖ γ inside each triangle are disks, so a path visiting
//! distinct regions is a simple arc and its sequence of edge crossings is a
//! walk in the dual graph. Paths never cross γ; crossing a strand is done
//! explicitly at a strand position.

use std::collections::VecDeque;

use super::curve::{reduce_cyclic, reverse_word, OrientedCurve};
use super::cut::{cut, ComplementDecomposition};
use super::multicurve::{step, trace_components_at, word_is_simple, NormalMulticurve};
use super::triangulation::{tri_of, Triangulation};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct RegionMap {
    decomposition: ComplementDecomposition,
    /// per region: (neighbour, exit half-edge)
    adjacency: Vec<Vec<(u32, u32)>>,
    /// per cut curve and word position: exit point (half-edge, local position)
    points: Vec<Vec<(u32, u32)>>,
}

fn rotations_match(a: &[u32], b: &[u32]) -> Option<usize> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    (0..n.max(1)).find(|&r| (0..n).all(|k| a[(k + r) % n] == b[k]))
}

impl RegionMap {
    pub fn new(tri: &Triangulation, gamma: &NormalMulticurve) -> Result<Self> {
        let decomposition = cut(tri, gamma)?;
        Self::from_decomposition(tri, decomposition)
    }

    pub fn from_decomposition(tri: &Triangulation, decomposition: ComplementDecomposition) -> Result<Self> {
        let w = decomposition.weights().to_vec();
        let mut adjacency = vec![Vec::new(); decomposition.region_count()];
        for e in 0..tri.num_edges() as u32 {
            let [h, h2] = tri.edge_halves(e);
            let we = w[e as usize];
            for s in 0..=we {
                let r1 = decomposition.segment_region(tri, h, s);
                let r2 = decomposition.segment_region(tri, h2, we - s);
                adjacency[r1 as usize].push((r2, h));
                adjacency[r2 as usize].push((r1, h2));
            }
        }
        let curves = decomposition.curves().to_vec();
        let mut points = vec![Vec::new(); curves.len()];
        for tr in trace_components_at(tri, &w) {
            let mut pts = Vec::with_capacity(tr.word.len());
            let (mut h, mut q) = (tr.h0, tr.p0);
            for _ in 0..tr.word.len() {
                pts.push((h, q));
                let (nh, nq) = step(tri, &w, h, q);
                h = nh;
                q = nq;
            }
            let n = tr.word.len();
            let rev_word = reverse_word(tri, &tr.word);
            let rev_pts: Vec<(u32, u32)> = (0..n)
                .map(|k| {
                    let (h, p) = pts[n - 1 - k];
                    let g = tri.glue(h);
                    (g, w[tri.edge_of(h) as usize] - 1 - p)
                })
                .collect();
            let mut placed = false;
            for (i, c) in curves.iter().enumerate() {
                if let Some(r) = rotations_match(&tr.word, c.word()) {
                    points[i] = (0..n).map(|k| pts[(k + r) % n]).collect();
                    placed = true;
                } else if let Some(r) = rotations_match(&rev_word, c.word()) {
                    points[i] = (0..n).map(|k| rev_pts[(k + r) % n]).collect();
                    placed = true;
                }
                if placed {
                    break;
                }
            }
            if !placed {
                return Err(Error::Construction("traced strand matches no cut curve".into()));
            }
        }
        Ok(RegionMap { decomposition, adjacency, points })
    }

    pub fn decomposition(&self) -> &ComplementDecomposition {
        &self.decomposition
    }

    pub fn curves(&self) -> &[OrientedCurve] {
        self.decomposition.curves()
    }

    pub fn component_of(&self, r: u32) -> usize {
        self.decomposition.region_component(r)
    }

    /// Exit point of curve `q` at word position `pos`.
    pub fn point(&self, q: usize, pos: usize) -> (u32, u32) {
        self.points[q][pos]
    }

    /// Regions (left, right) of curve `q` beside its passage that exits at
    /// word position `pos`.
    pub fn strand_regions(&self, tri: &Triangulation, q: usize, pos: usize) -> (u32, u32) {
        let (h, p) = self.points[q][pos];
        (self.decomposition.segment_region(tri, h, p + 1), self.decomposition.segment_region(tri, h, p))
    }

    /// A region touching puncture `p`, with the position in the peripheral
    /// loop of `p` that exits the same triangle.
    pub fn puncture_region(&self, tri: &Triangulation, p: u32) -> (u32, usize) {
        let word = tri.peripheral_loops()[p as usize].word();
        for (pos, &h) in word.iter().enumerate() {
            let t = tri_of(h);
            let k = h % 3;
            if tri.corner(t, k) == p {
                return (self.decomposition.corner_region(tri, t, k), pos);
            }
        }
        unreachable!("peripheral loop passes a corner at its puncture")
    }

    /// Exit letters of a shortest region path from `from` to `to` that only
    /// visits regions accepted by `allowed`.
    pub fn path<F: Fn(u32) -> bool>(&self, from: u32, to: u32, allowed: F) -> Option<Vec<u32>> {
        if from == to {
            return Some(Vec::new());
        }
        let n = self.adjacency.len();
        let mut prev: Vec<Option<(u32, u32)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[from as usize] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            for &(v, h) in &self.adjacency[u as usize] {
                if seen[v as usize] || !allowed(v) {
                    continue;
                }
                seen[v as usize] = true;
                prev[v as usize] = Some((u, h));
                if v == to {
                    let mut out = Vec::new();
                    let mut x = to;
                    while let Some((p, h)) = prev[x as usize] {
                        out.push(h);
                        x = p;
                    }
                    out.reverse();
                    return Some(out);
                }
                queue.push_back(v);
            }
        }
        None
    }

    /// Simple closed curves inside component `comp` read off the
    /// fundamental cycles of its region graph: essential, nonperipheral,
    /// not parallel to a cut curve, deduplicated (unoriented).
    pub fn cycles_in_component(&self, tri: &Triangulation, comp: usize) -> Vec<OrientedCurve> {
        let n = self.adjacency.len();
        let Some(root) = (0..n as u32).find(|&r| self.component_of(r) == comp) else { return Vec::new() };
        let mut parent: Vec<Option<(u32, u32)>> = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        depth[root as usize] = 0;
        let mut order = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(v, h) in &self.adjacency[u as usize] {
                if depth[v as usize] == usize::MAX {
                    depth[v as usize] = depth[u as usize] + 1;
                    parent[v as usize] = Some((u, h));
                    order.push(v);
                    queue.push_back(v);
                }
            }
        }
        let to_root = |mut x: u32| -> Vec<u32> {
            // letters from root down to x
            let mut out = Vec::new();
            while let Some((p, h)) = parent[x as usize] {
                out.push(h);
                x = p;
            }
            out.reverse();
            out
        };
        let mut found: Vec<OrientedCurve> = Vec::new();
        for &u in &order {
            for &(v, h) in &self.adjacency[u as usize] {
                if parent[v as usize] == Some((u, h)) || parent[u as usize].map(|(p, g)| p == v && tri.glue(g) == h).unwrap_or(false) {
                    continue;
                }
                // each non-tree edge once
                if (u, h) > (v, tri.glue(h)) {
                    continue;
                }
                let mut w = to_root(u);
                w.push(h);
                w.extend(reverse_word(tri, &to_root(v)));
                let r = reduce_cyclic(tri, &w);
                if r.is_empty() || !word_is_simple(tri, &r) {
                    continue;
                }
                let c = OrientedCurve::from_word(r).unoriented(tri);
                if tri.peripheral_index(&c).is_some() || self.curves().contains(&c) || found.contains(&c) {
                    continue;
                }
                found.push(c);
            }
        }
        found
    }
}
