//! Cutting the surface along a multicurve.
//!
//! Inside each triangle the normal arcs of γ split it into corner bands and
//! one central region. Gluing the regions across edge segments and merging
//! with a union-find gives the components of S ∖ γ; a cell count then gives
//! their Euler characteristics.

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use super::curve::OrientedCurve;
use super::multicurve::{corner_counts, trace_components_at, NormalMulticurve};
use super::triangulation::{side_of, tri_of, SurfaceType, Triangulation};
use crate::error::{Error, Result};

/// One side of a cut curve, as seen from a component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundaryCircle {
    /// index into [`ComplementDecomposition::curves`]
    pub curve: usize,
    /// the component lies on the left of the curve's stored orientation
    pub left: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentData {
    pub genus: u32,
    pub euler: i64,
    pub punctures: Vec<u32>,
    pub boundary: Vec<BoundaryCircle>,
}

impl ComponentData {
    /// Number of boundary circles plus punctures.
    pub fn circles(&self) -> usize {
        self.boundary.len() + self.punctures.len()
    }

    /// ξ = 3g − 3 + (boundary circles + punctures).
    pub fn complexity(&self) -> i64 {
        3 * self.genus as i64 - 3 + self.circles() as i64
    }

    pub fn surface_type(&self) -> SurfaceType {
        SurfaceType::new(self.genus, self.circles() as u32)
    }
}

#[derive(Debug, Clone)]
pub struct ComplementDecomposition {
    surface: SurfaceType,
    weights: Vec<u32>,
    curves: Vec<OrientedCurve>,
    components: Vec<ComponentData>,
    /// (component on the left, component on the right) for each curve
    curve_sides: Vec<(usize, usize)>,
    /// first region id of each triangle
    region_base: Vec<u32>,
    region_comp: Vec<usize>,
}

fn region_of(base: u32, c: [u32; 3], i: usize, w: u32, s: u32) -> u32 {
    // region ids inside a triangle: 0 is central, then the bands of corner 0,
    // corner 1, corner 2 in order, innermost first
    let band = |k: usize, j: u32| -> u32 {
        let off: u32 = c[..k].iter().sum();
        base + 1 + off + j
    };
    if s < c[i] {
        band(i, s)
    } else if s == c[i] {
        base
    } else {
        band((i + 1) % 3, w - s)
    }
}

/// Cuts `gamma` open. Components are numbered by their first region.
pub fn cut(tri: &Triangulation, gamma: &NormalMulticurve) -> Result<ComplementDecomposition> {
    gamma.check_surface(tri)?;
    if gamma.has_duplicates() {
        return Err(Error::DuplicateComponents);
    }
    let w = gamma.weights();
    let nt = tri.num_triangles();
    let mut region_base = Vec::with_capacity(nt + 1);
    let mut corners = Vec::with_capacity(nt);
    let mut acc = 0u32;
    for t in 0..nt as u32 {
        let s = tri.tri_edges(t).map(|e| w[e as usize]);
        let c = corner_counts(s);
        region_base.push(acc);
        corners.push((s, c));
        acc += 1 + c.iter().sum::<u32>();
    }
    let nr = acc as usize;
    let seg = |h: u32, s: u32| -> u32 {
        let t = tri_of(h) as usize;
        let i = side_of(h) as usize;
        let (ws, c) = corners[t];
        region_of(region_base[t], c, i, ws[i], s)
    };
    let mut uf = UnionFind::<u32>::new(nr);
    for e in 0..tri.num_edges() as u32 {
        let [h, h2] = tri.edge_halves(e);
        let we = w[e as usize];
        for s in 0..=we {
            uf.union(seg(h, s), seg(h2, we - s));
        }
    }
    let labels = uf.into_labeling();
    // renumber components by first appearance
    let mut comp_of_label = vec![usize::MAX; nr];
    let mut ncomp = 0;
    let mut region_comp = vec![0usize; nr];
    for r in 0..nr {
        let l = labels[r] as usize;
        if comp_of_label[l] == usize::MAX {
            comp_of_label[l] = ncomp;
            ncomp += 1;
        }
        region_comp[r] = comp_of_label[l];
    }
    let mut chi = vec![0i64; ncomp];
    let mut punct: Vec<Vec<u32>> = vec![Vec::new(); ncomp];
    for r in 0..nr {
        chi[region_comp[r]] += 1;
    }
    for e in 0..tri.num_edges() as u32 {
        let h = tri.edge_halves(e)[0];
        let we = w[e as usize];
        for s in 0..=we {
            // one edge segment
            chi[region_comp[seg(h, s) as usize]] -= 1;
        }
        for p in 0..we {
            // a crossing point splits into one vertex on each side
            chi[region_comp[seg(h, p) as usize]] += 1;
            chi[region_comp[seg(h, p + 1) as usize]] += 1;
        }
    }
    for t in 0..nt {
        let (_, c) = corners[t];
        let base = region_base[t];
        let mut off = 0;
        for k in 0..3 {
            for j in 1..=c[k] {
                let inner = base + 1 + off + j - 1;
                let outer = if j == c[k] { base } else { base + 1 + off + j };
                chi[region_comp[inner as usize]] -= 1;
                chi[region_comp[outer as usize]] -= 1;
            }
            let vr = if c[k] > 0 { base + 1 + off } else { base };
            let p = tri.corner(t as u32, k as u32);
            let cc = region_comp[vr as usize];
            if !punct[cc].contains(&p) {
                punct[cc].push(p);
            }
            off += c[k];
        }
    }
    let curves: Vec<OrientedCurve> = gamma.curves();
    let mut curve_sides = vec![(usize::MAX, usize::MAX); curves.len()];
    for tr in trace_components_at(tri, w) {
        let oc = OrientedCurve::from_word(tr.word);
        let (idx, same) = match curves.iter().position(|c| *c == oc) {
            Some(i) => (i, true),
            None => {
                let r = oc.reversed(tri);
                (curves.iter().position(|c| *c == r).expect("traced component is a component"), false)
            }
        };
        let left = region_comp[seg(tr.h0, tr.p0 + 1) as usize];
        let right = region_comp[seg(tr.h0, tr.p0) as usize];
        curve_sides[idx] = if same { (left, right) } else { (right, left) };
    }
    let mut boundary: Vec<Vec<BoundaryCircle>> = vec![Vec::new(); ncomp];
    for (i, &(l, r)) in curve_sides.iter().enumerate() {
        boundary[l].push(BoundaryCircle { curve: i, left: true });
        boundary[r].push(BoundaryCircle { curve: i, left: false });
    }
    let mut components = Vec::with_capacity(ncomp);
    for c in 0..ncomp {
        punct[c].sort();
        let b = boundary[c].len() as i64;
        let p = punct[c].len() as i64;
        let twice_g = 2 - b - p - chi[c];
        if twice_g < 0 || twice_g % 2 != 0 {
            return Err(Error::Construction(format!("inconsistent component {c}: chi {}", chi[c])));
        }
        components.push(ComponentData {
            genus: (twice_g / 2) as u32,
            euler: chi[c],
            punctures: std::mem::take(&mut punct[c]),
            boundary: std::mem::take(&mut boundary[c]),
        });
    }
    Ok(ComplementDecomposition {
        surface: tri.surface(),
        weights: w.to_vec(),
        curves,
        components,
        curve_sides,
        region_base,
        region_comp,
    })
}

impl ComplementDecomposition {
    pub fn surface(&self) -> SurfaceType {
        self.surface
    }

    pub fn curves(&self) -> &[OrientedCurve] {
        &self.curves
    }

    pub fn components(&self) -> &[ComponentData] {
        &self.components
    }

    pub fn component(&self, id: usize) -> Result<&ComponentData> {
        self.components.get(id).ok_or(Error::NoSuchComponent(id))
    }

    pub fn curve_sides(&self) -> &[(usize, usize)] {
        &self.curve_sides
    }

    /// Dual graph: one vertex per component, one edge per cut curve.
    pub fn dual_graph(&self) -> Vec<(usize, usize)> {
        self.curve_sides.clone()
    }

    /// Component on the given side of cut curve `i` (`left` in its stored
    /// orientation).
    pub fn side(&self, i: usize, left: bool) -> usize {
        let (l, r) = self.curve_sides[i];
        if left {
            l
        } else {
            r
        }
    }

    /// Weights of the cut multicurve.
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn region_count(&self) -> usize {
        self.region_comp.len()
    }

    pub fn region_component(&self, r: u32) -> usize {
        self.region_comp[r as usize]
    }

    /// Region ids of triangle `t`.
    pub fn triangle_regions(&self, t: u32) -> std::ops::Range<u32> {
        let lo = self.region_base[t as usize];
        let hi = self.region_base.get(t as usize + 1).copied().unwrap_or(self.region_comp.len() as u32);
        lo..hi
    }

    /// Region touching segment `s` of half-edge `h` (segments counted from
    /// the start corner of `h`, 0 ..= w).
    pub fn segment_region(&self, tri: &Triangulation, h: u32, s: u32) -> u32 {
        let t = tri_of(h);
        let i = side_of(h) as usize;
        let ws = tri.tri_edges(t).map(|e| self.weights[e as usize]);
        let c = corner_counts(ws);
        region_of(self.region_base[t as usize], c, i, ws[i], s)
    }

    /// Region at corner `k` of triangle `t`, touching the puncture.
    pub fn corner_region(&self, tri: &Triangulation, t: u32, k: u32) -> u32 {
        let ws = tri.tri_edges(t).map(|e| self.weights[e as usize]);
        let c = corner_counts(ws);
        let base = self.region_base[t as usize];
        if c[k as usize] > 0 {
            base + 1 + c[..k as usize].iter().sum::<u32>()
        } else {
            base
        }
    }

    fn region_of_segment(&self, tri: &Triangulation, h: u32, s: u32) -> usize {
        self.region_comp[self.segment_region(tri, h, s) as usize]
    }

    /// Component containing the curve `c`, which must be disjoint from the
    /// cut multicurve and not one of its components.
    pub fn locate(&self, tri: &Triangulation, c: &OrientedCurve) -> Option<usize> {
        let cu = c.unoriented(tri);
        if self.curves.contains(&cu) {
            return None;
        }
        let cw = c.weights(tri);
        let u: Vec<u32> = self.weights.iter().zip(&cw).map(|(a, b)| a + b).collect();
        if tri.check_weights(&u).is_err() {
            return None;
        }
        let traced = trace_components_at(tri, &u);
        if traced.len() != self.curves.len() + 1 {
            return None;
        }
        let mut mine = None;
        for tr in &traced {
            let oc = OrientedCurve::from_word(tr.word.clone()).unoriented(tri);
            if oc == cu {
                mine = Some(tr);
            } else if !self.curves.contains(&oc) {
                return None;
            }
        }
        let tr = mine?;
        // γ strands below c's strand on that edge give the segment index
        let e = tri.edge_of(tr.h0) as usize;
        let mut below = 0u32;
        let mut is_c = vec![false; u[e] as usize];
        mark_strands(tri, &u, &tr.word, tr.h0, tr.p0, e, &mut is_c);
        for p in 0..tr.p0 {
            if !is_c[p as usize] {
                below += 1;
            }
        }
        Some(self.region_of_segment(tri, tr.h0, below))
    }
}

/// Marks the positions (lower half-edge coordinates) on edge `e` used by the
/// traced component starting at (`h0`, `p0`).
fn mark_strands(tri: &Triangulation, u: &[u32], word: &[u32], h0: u32, p0: u32, e: usize, out: &mut [bool]) {
    let (mut h, mut q) = (h0, p0);
    for _ in 0..word.len() {
        if tri.edge_of(h) as usize == e {
            out[super::multicurve::edge_position(tri, u, h, q) as usize] = true;
        }
        let (nh, nq) = super::multicurve::step(tri, u, h, q);
        h = nh;
        q = nq;
    }
}

/// Is `c` separating, and its mod-2 class in the symplectic part of
/// homology (coordinates along a_1, b_1, …, a_g, b_g).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologicalType {
    pub separating: bool,
    pub homology_class_mod2: Vec<u8>,
}

pub fn topological_type(tri: &Triangulation, c: &NormalMulticurve) -> Result<TopologicalType> {
    c.check_surface(tri)?;
    let curve = c.single()?;
    if tri.peripheral_index(curve).is_some() {
        return Err(Error::Peripheral);
    }
    let d = cut(tri, c)?;
    let separating = d.components().len() == 2;
    let mut h = Vec::with_capacity(2 * tri.gsb().len());
    for (a, b) in tri.gsb() {
        let x = super::intersection::algebraic_words(tri, curve, b);
        let y = super::intersection::algebraic_words(tri, a, curve);
        h.push(x.rem_euclid(2) as u8);
        h.push(y.rem_euclid(2) as u8);
    }
    Ok(TopologicalType { separating, homology_class_mod2: h })
}

/// Separating test for a single oriented curve without building the full
/// decomposition record.
pub fn is_separating(tri: &Triangulation, c: &OrientedCurve) -> bool {
    let m = NormalMulticurve::from_weights(tri, c.weights(tri)).expect("curve weights are normal");
    cut(tri, &m).map(|d| d.components().len() == 2).unwrap_or(false)
}
