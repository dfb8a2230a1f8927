use serde::{Deserialize, Serialize};

use super::curve::OrientedCurve;
use super::intersection;
use super::multicurve::NormalMulticurve;
use crate::error::{Error, Result};

/// Topological type of a punctured surface S_{g,n}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceType {
    pub g: u32,
    pub n: u32,
}

impl SurfaceType {
    pub fn new(g: u32, n: u32) -> Self {
        SurfaceType { g, n }
    }

    /// ξ(S) = 3g − 3 + n.
    pub fn complexity(&self) -> i64 {
        3 * self.g as i64 - 3 + self.n as i64
    }

    pub fn euler(&self) -> i64 {
        2 - 2 * self.g as i64 - self.n as i64
    }
}

/// Half-edge `3t + i` is side `i` of triangle `t`, running from corner `i` to
/// corner `i + 1` (corners in counterclockwise order).
#[inline]
pub fn tri_of(h: u32) -> u32 {
    h / 3
}

#[inline]
pub fn side_of(h: u32) -> u32 {
    h % 3
}

#[inline]
pub fn next_ccw(h: u32) -> u32 {
    h - h % 3 + (h % 3 + 1) % 3
}

#[inline]
pub fn prev_ccw(h: u32) -> u32 {
    h - h % 3 + (h % 3 + 2) % 3
}

/// Ideal triangulation of S_{g,n}; punctures are the vertices.
#[derive(Debug, Clone)]
pub struct Triangulation {
    surface: SurfaceType,
    glue: Vec<u32>,
    edge_of: Vec<u32>,
    edge_halves: Vec<[u32; 2]>,
    corners: Vec<[u32; 3]>,
    gsb: Vec<(OrientedCurve, OrientedCurve)>,
    peripheral: Vec<OrientedCurve>,
}

struct Builder {
    corners: Vec<[u32; 3]>,
    glue: Vec<u32>,
    /// per-half-edge weights of the basis curves, kept in sync with subdivisions
    curves: Vec<Vec<u32>>,
}

impl Builder {
    fn set_glue(&mut self, a: u32, b: u32) {
        self.glue[a as usize] = b;
        self.glue[b as usize] = a;
    }

    fn subdivide(&mut self, t: u32, c: u32) {
        let [v0, v1, v2] = self.corners[t as usize];
        let b = self.corners.len() as u32;
        let cc = b + 1;
        let relocate = |h: u32| -> u32 {
            if tri_of(h) == t {
                [3 * t, 3 * b, 3 * (b + 1)][side_of(h) as usize]
            } else {
                h
            }
        };
        let old: [u32; 3] = [0, 1, 2].map(|i| relocate(self.glue[3 * t as usize + i]));
        let corner_counts: Vec<[u32; 3]> = self
            .curves
            .iter()
            .map(|w| {
                let s = [w[3 * t as usize], w[3 * t as usize + 1], w[3 * t as usize + 2]];
                [(s[2] + s[0] - s[1]) / 2, (s[0] + s[1] - s[2]) / 2, (s[1] + s[2] - s[0]) / 2]
            })
            .collect();
        self.corners[t as usize] = [v0, v1, c];
        self.corners.push([v1, v2, c]);
        self.corners.push([v2, v0, c]);
        self.glue.extend_from_slice(&[0; 6]);
        for w in self.curves.iter_mut() {
            w.extend_from_slice(&[0; 6]);
        }
        let (a, b, cc) = (t, b, cc);
        // old sides keep their outside partners
        self.set_glue(3 * a, old[0]);
        self.set_glue(3 * b, old[1]);
        self.set_glue(3 * cc, old[2]);
        // spokes: A1-B2 (v1c), B1-C2 (v2c), C1-A2 (v0c)
        self.set_glue(3 * a + 1, 3 * b + 2);
        self.set_glue(3 * b + 1, 3 * cc + 2);
        self.set_glue(3 * cc + 1, 3 * a + 2);
        for (w, k) in self.curves.iter_mut().zip(corner_counts) {
            let s0 = w[3 * a as usize];
            let s1 = w[3 * a as usize + 1];
            let s2 = w[3 * a as usize + 2];
            w[3 * a as usize] = s0;
            w[3 * b as usize] = s1;
            w[3 * cc as usize] = s2;
            w[3 * a as usize + 1] = k[1];
            w[3 * b as usize + 2] = k[1];
            w[3 * b as usize + 1] = k[2];
            w[3 * cc as usize + 2] = k[2];
            w[3 * cc as usize + 1] = k[0];
            w[3 * a as usize + 2] = k[0];
        }
    }
}

/// Deterministic ideal triangulation of S_{g,n}.
///
/// For g ≥ 1 the surface is the 4g-gon with side word a_1 b_1 a_1⁻¹ b_1⁻¹ …,
/// fan-triangulated from its first corner; extra punctures come from stellar
/// subdivision. For g = 0 the base is two triangles glued into S_{0,3}.
pub fn canonical_triangulation(g: u32, n: u32) -> Result<Triangulation> {
    let surface = SurfaceType::new(g, n);
    if n == 0 || surface.euler() >= 0 {
        return Err(Error::NotHyperbolic { g, n });
    }
    let mut b;
    let first_extra;
    if g == 0 {
        b = Builder { corners: vec![[0, 1, 2], [0, 2, 1]], glue: vec![0; 6], curves: Vec::new() };
        b.set_glue(0, 5);
        b.set_glue(1, 4);
        b.set_glue(2, 3);
        first_extra = 3;
    } else {
        let m = 4 * g;
        let nt = m - 2;
        // triangle k-1 is (P0, P_k, P_{k+1}) for k = 1..=m-2
        b = Builder { corners: vec![[0, 0, 0]; nt as usize], glue: vec![0; 3 * nt as usize], curves: Vec::new() };
        for k in 2..=(m - 2) {
            // diagonal P0P_k: side 2 of T_{k-1}, side 0 of T_k
            b.set_glue(3 * (k - 2) + 2, 3 * (k - 1));
        }
        let poly_side = |j: u32| -> u32 {
            if j == 0 {
                0
            } else if j == m - 1 {
                3 * (m - 3) + 2
            } else {
                3 * (j - 1) + 1
            }
        };
        for i in 0..g {
            b.set_glue(poly_side(4 * i), poly_side(4 * i + 2));
            b.set_glue(poly_side(4 * i + 1), poly_side(4 * i + 3));
        }
        let diag = |k: u32| -> u32 { 3 * (k - 2) + 2 };
        let chord = |p: u32, q: u32| -> Vec<u32> {
            let mut w = vec![0u32; 3 * nt as usize];
            let bump = |h: u32, w: &mut Vec<u32>| {
                w[h as usize] += 1;
            };
            bump(poly_side(p), &mut w);
            bump(poly_side(q), &mut w);
            for k in (p + 1).max(2)..=q.min(m - 2) {
                bump(diag(k), &mut w);
                bump(diag(k) + 1, &mut w);
            }
            w
        };
        for i in 0..g {
            b.curves.push(chord(4 * i, 4 * i + 2));
            b.curves.push(chord(4 * i + 1, 4 * i + 3));
        }
        first_extra = 1;
    }
    let mut next_vertex = first_extra;
    let mut target = 0u32;
    while next_vertex < n {
        b.subdivide(target, next_vertex);
        next_vertex += 1;
        target += 1;
    }
    Triangulation::assemble(surface, b)
}

impl Triangulation {
    fn assemble(surface: SurfaceType, b: Builder) -> Result<Self> {
        let nh = b.glue.len();
        let mut edge_of = vec![u32::MAX; nh];
        let mut edge_halves = Vec::new();
        for h in 0..nh as u32 {
            let o = b.glue[h as usize];
            debug_assert_eq!(b.glue[o as usize], h);
            debug_assert_ne!(o, h);
            if h < o {
                edge_of[h as usize] = edge_halves.len() as u32;
                edge_of[o as usize] = edge_halves.len() as u32;
                edge_halves.push([h, o]);
            }
        }
        let mut tri = Triangulation {
            surface,
            glue: b.glue,
            edge_of,
            edge_halves,
            corners: b.corners,
            gsb: Vec::new(),
            peripheral: Vec::new(),
        };
        let v = tri.corners.iter().flatten().copied().max().map_or(0, |m| m + 1);
        let f = tri.num_triangles() as i64;
        let e = tri.num_edges() as i64;
        if v as u32 != surface.n || v as i64 - e + f != surface.euler() + surface.n as i64 {
            return Err(Error::Construction("Euler count mismatch".into()));
        }
        tri.peripheral = (0..surface.n).map(|p| tri.face_cycle(p)).collect();
        let mut gsb = Vec::new();
        for pair in b.curves.chunks(2) {
            let to_edges = |w: &Vec<u32>| -> Vec<u32> {
                tri.edge_halves.iter().map(|[h, _]| w[*h as usize]).collect()
            };
            let a = NormalMulticurve::from_weights(&tri, to_edges(&pair[0]))?;
            let bb = NormalMulticurve::from_weights(&tri, to_edges(&pair[1]))?;
            let a = a.single()?.clone();
            let mut bc = bb.single()?.clone();
            if intersection::algebraic_words(&tri, &a, &bc) < 0 {
                bc = bc.reversed(&tri);
            }
            gsb.push((a, bc));
        }
        tri.gsb = gsb;
        Ok(tri)
    }

    pub fn surface(&self) -> SurfaceType {
        self.surface
    }

    pub fn num_triangles(&self) -> usize {
        self.corners.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_halves.len()
    }

    pub fn num_half_edges(&self) -> usize {
        self.glue.len()
    }

    #[inline]
    pub fn glue(&self, h: u32) -> u32 {
        self.glue[h as usize]
    }

    #[inline]
    pub fn edge_of(&self, h: u32) -> u32 {
        self.edge_of[h as usize]
    }

    pub fn edge_halves(&self, e: u32) -> [u32; 2] {
        self.edge_halves[e as usize]
    }

    /// Edge indices of the three sides of triangle `t`.
    #[inline]
    pub fn tri_edges(&self, t: u32) -> [u32; 3] {
        let h = 3 * t as usize;
        [self.edge_of[h], self.edge_of[h + 1], self.edge_of[h + 2]]
    }

    /// Puncture label at corner `k` of triangle `t`.
    pub fn corner(&self, t: u32, k: u32) -> u32 {
        self.corners[t as usize][k as usize]
    }

    /// Loop around puncture `p` with the surface on its left: it enters each
    /// triangle through side i and leaves through side i + 1.
    fn face_cycle(&self, p: u32) -> OrientedCurve {
        let start = (0..self.num_half_edges() as u32)
            .find(|&h| self.corners[tri_of(h) as usize][side_of(h) as usize] == p)
            .expect("every puncture has a corner");
        let mut word = vec![start];
        let mut x = next_ccw(self.glue(start));
        while x != start {
            word.push(x);
            x = next_ccw(self.glue(x));
        }
        OrientedCurve::from_word(word)
    }

    /// Δ_1, …, Δ_n.
    pub fn peripheral_loops(&self) -> &[OrientedCurve] {
        &self.peripheral
    }

    /// Stored geometric symplectic basis, oriented so that ⟨a_i, b_i⟩ = +1.
    pub fn gsb(&self) -> &[(OrientedCurve, OrientedCurve)] {
        &self.gsb
    }

    /// Basis of H_1(S; Z): a_1, b_1, …, a_g, b_g, Δ_1, …, Δ_{n−1}.
    pub fn homology_basis(&self) -> Vec<OrientedCurve> {
        let mut out = Vec::new();
        for (a, b) in &self.gsb {
            out.push(a.clone());
            out.push(b.clone());
        }
        let n = self.peripheral.len();
        out.extend(self.peripheral[..n - 1].iter().cloned());
        out
    }

    /// Is the reduced word `w` one of the peripheral loops (either direction)?
    pub fn peripheral_index(&self, c: &OrientedCurve) -> Option<usize> {
        self.peripheral.iter().position(|d| d == c || d.word() == c.reversed(self).word())
    }

    pub fn check_weights(&self, w: &[u32]) -> Result<()> {
        if w.len() != self.num_edges() {
            return Err(Error::WeightLength { got: w.len(), expected: self.num_edges() });
        }
        for t in 0..self.num_triangles() as u32 {
            let [x, y, z] = self.tri_edges(t).map(|e| w[e as usize]);
            if x > y + z || y > x + z || z > x + y || (x + y + z) % 2 == 1 {
                return Err(Error::Matching(t as usize));
            }
        }
        Ok(())
    }
}
