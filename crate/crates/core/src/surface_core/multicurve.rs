use serde::{Deserialize, Serialize};

use super::curve::{is_closed_walk, OrientedCurve};
use super::triangulation::{side_of, tri_of, SurfaceType, Triangulation};
use crate::error::{Error, Result};

/// Corner counts of a triangle with side weights `s`: entry `k` counts the
/// normal arcs cutting off corner `k` (between sides k−1 and k).
#[inline]
pub fn corner_counts(s: [u32; 3]) -> [u32; 3] {
    [(s[2] + s[0] - s[1]) / 2, (s[0] + s[1] - s[2]) / 2, (s[1] + s[2] - s[0]) / 2]
}

/// Follows the strand leaving through half-edge `h` at local position `p`
/// (counted from the start corner of that side) into the next triangle and
/// returns the exit half-edge and local position there.
#[inline]
pub fn step(tri: &Triangulation, w: &[u32], h: u32, p: u32) -> (u32, u32) {
    let e = tri.glue(h);
    let t = tri_of(e);
    let i = side_of(e);
    let s = tri.tri_edges(t).map(|x| w[x as usize]);
    let wi = s[i as usize];
    let q = wi - 1 - p;
    let c = corner_counts(s);
    let base = 3 * t;
    if q < c[i as usize] {
        let j = (i + 2) % 3;
        (base + j, s[j as usize] - 1 - q)
    } else {
        let j = (i + 1) % 3;
        (base + j, wi - 1 - q)
    }
}

/// Position of a strand on its edge, measured in the coordinates of the
/// edge's lower half-edge.
#[inline]
pub fn edge_position(tri: &Triangulation, w: &[u32], h: u32, p: u32) -> u32 {
    let e = tri.edge_of(h);
    if tri.edge_halves(e)[0] == h {
        p
    } else {
        w[e as usize] - 1 - p
    }
}

/// Traces every component of the normal multicurve with weights `w`,
/// returning each as its word of exits.
pub fn trace_components(tri: &Triangulation, w: &[u32]) -> Vec<Vec<u32>> {
    trace_components_at(tri, w).into_iter().map(|t| t.word).collect()
}

/// A traced component together with the strand it was started from.
#[derive(Debug, Clone)]
pub struct Traced {
    pub word: Vec<u32>,
    /// first exit (always the lower half-edge of its edge)
    pub h0: u32,
    /// position of the strand at the first exit
    pub p0: u32,
}

/// Like [`trace_components`], also reporting where each trace started.
pub fn trace_components_at(tri: &Triangulation, w: &[u32]) -> Vec<Traced> {
    let mut offsets = Vec::with_capacity(w.len() + 1);
    let mut acc = 0usize;
    for &x in w {
        offsets.push(acc);
        acc += x as usize;
    }
    offsets.push(acc);
    let mut seen = vec![false; acc];
    let mut out = Vec::new();
    for e in 0..w.len() {
        for p in 0..w[e] {
            if seen[offsets[e] + p as usize] {
                continue;
            }
            let h0 = tri.edge_halves(e as u32)[0];
            let mut word = Vec::new();
            let (mut h, mut q) = (h0, p);
            loop {
                word.push(h);
                let ee = tri.edge_of(h) as usize;
                seen[offsets[ee] + edge_position(tri, w, h, q) as usize] = true;
                let (nh, nq) = step(tri, w, h, q);
                h = nh;
                q = nq;
                if h == h0 && q == p {
                    break;
                }
            }
            out.push(Traced { word, h0, p0: p });
        }
    }
    out
}

/// Isotopy class of a multicurve, stored by its normal coordinates.
///
/// Components are cached with the multiplicity they occur with; the
/// orientation of each cached component is its canonical unoriented form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalMulticurve {
    surface: SurfaceType,
    weights: Vec<u32>,
    #[serde(skip)]
    components: Vec<(OrientedCurve, u32)>,
}

impl NormalMulticurve {
    pub fn from_weights(tri: &Triangulation, weights: Vec<u32>) -> Result<Self> {
        tri.check_weights(&weights)?;
        let mut comps: Vec<(OrientedCurve, u32)> = Vec::new();
        for word in trace_components(tri, &weights) {
            let c = OrientedCurve::from_word(word).unoriented(tri);
            match comps.iter_mut().find(|(d, _)| *d == c) {
                Some((_, m)) => *m += 1,
                None => comps.push((c, 1)),
            }
        }
        comps.sort();
        Ok(NormalMulticurve { surface: tri.surface(), weights, components: comps })
    }

    /// Multicurve made of the given simple curves (each taken once).
    pub fn from_curves(tri: &Triangulation, curves: &[OrientedCurve]) -> Result<Self> {
        let mut w = vec![0u32; tri.num_edges()];
        for c in curves {
            for (x, y) in w.iter_mut().zip(c.weights(tri)) {
                *x += y;
            }
        }
        Self::from_weights(tri, w)
    }

    pub fn empty(tri: &Triangulation) -> Self {
        NormalMulticurve { surface: tri.surface(), weights: vec![0; tri.num_edges()], components: Vec::new() }
    }

    /// Restores the component cache after deserialization.
    pub fn rehydrate(self, tri: &Triangulation) -> Result<Self> {
        if self.surface != tri.surface() {
            return Err(Error::SurfaceMismatch(self.surface, tri.surface()));
        }
        Self::from_weights(tri, self.weights)
    }

    pub fn surface(&self) -> SurfaceType {
        self.surface
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Total normal length Σ_e w_e.
    pub fn total_weight(&self) -> u32 {
        self.weights.iter().sum()
    }

    pub fn component_count(&self) -> usize {
        self.components.iter().map(|(_, m)| *m as usize).sum()
    }

    pub fn components(&self) -> &[(OrientedCurve, u32)] {
        &self.components
    }

    /// Distinct components, each once.
    pub fn curves(&self) -> Vec<OrientedCurve> {
        self.components.iter().map(|(c, _)| c.clone()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn has_duplicates(&self) -> bool {
        self.components.iter().any(|(_, m)| *m > 1)
    }

    pub fn single(&self) -> Result<&OrientedCurve> {
        match self.components.as_slice() {
            [(c, 1)] => Ok(c),
            _ => Err(Error::NotSingleCurve(self.component_count())),
        }
    }

    pub fn peripheral_components(&self, tri: &Triangulation) -> Vec<usize> {
        self.components
            .iter()
            .filter_map(|(c, _)| tri.peripheral_index(c))
            .collect()
    }

    pub fn check_surface(&self, tri: &Triangulation) -> Result<()> {
        if self.surface != tri.surface() {
            return Err(Error::SurfaceMismatch(self.surface, tri.surface()));
        }
        Ok(())
    }

    /// Union with another multicurve (weights add).
    pub fn union(&self, tri: &Triangulation, other: &NormalMulticurve) -> Result<Self> {
        let w = self.weights.iter().zip(&other.weights).map(|(a, b)| a + b).collect();
        Self::from_weights(tri, w)
    }
}

/// Is the reduced closed walk `w` a simple curve? Tracing its edge counts
/// recovers it exactly when it is.
pub fn word_is_simple(tri: &Triangulation, w: &[u32]) -> bool {
    if w.is_empty() || !is_closed_walk(tri, w) {
        return false;
    }
    let c = OrientedCurve::from_word(w.to_vec());
    let weights = c.weights(tri);
    let comps = trace_components(tri, &weights);
    if comps.len() != 1 {
        return false;
    }
    let d = OrientedCurve::from_word(comps.into_iter().next().unwrap());
    d == c || d == c.reversed(tri)
}

/// Fast exact disjointness of two simple multicurves given by weights: the
/// union traces to a multicurve containing `a` as a sub-multicurve exactly
/// when `a` and `b` can be realized disjointly.
pub fn disjoint_weights(tri: &Triangulation, a: &[u32], b: &[u32]) -> bool {
    let s: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
    let Some(e0) = (0..s.len()).find(|&e| s[e] > 0) else { return true };
    // trace one component of the union and check it fits inside a or b
    let h0 = tri.edge_halves(e0 as u32)[0];
    let mut count = vec![0u32; s.len()];
    let (mut h, mut q) = (h0, 0u32);
    let (mut fits_a, mut fits_b) = (true, true);
    loop {
        let e = tri.edge_of(h) as usize;
        count[e] += 1;
        if count[e] > a[e] {
            fits_a = false;
        }
        if count[e] > b[e] {
            fits_b = false;
        }
        if !fits_a && !fits_b {
            return false;
        }
        let (nh, nq) = step(tri, &s, h, q);
        h = nh;
        q = nq;
        if h == h0 && q == 0 {
            break;
        }
    }
    // the traced component is a sub-multicurve of a (or b); the remaining
    // strands must then be exactly the other multicurve
    let rest_is = |x: &[u32], y: &[u32]| -> bool {
        let rem: Vec<u32> = x.iter().zip(&count).map(|(u, c)| u - c).collect();
        if rem.iter().all(|&r| r == 0) {
            return true;
        }
        if tri.check_weights(&rem).is_err() {
            return false;
        }
        disjoint_weights(tri, &rem, y)
    };
    (fits_a && rest_is(a, b)) || (fits_b && rest_is(b, a))
}
