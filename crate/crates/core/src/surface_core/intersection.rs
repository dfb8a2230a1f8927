//! Intersection numbers of reduced cyclic words in the dual ribbon graph.
//!
//! Two reduced cyclic words meet along maximal common segments (in the same
//! direction, or with one word reversed). In a trivalent ribbon graph every
//! transverse meeting shows up this way, and a segment contributes a
//! crossing exactly when the two words enter it from one side and leave it
//! towards the other.

use super::curve::{reverse_word, OrientedCurve};
use super::multicurve::NormalMulticurve;
use super::triangulation::{next_ccw, Triangulation};
use crate::error::Result;

/// One crossing between `p` and `q`: a maximal common segment starting at
/// position `i` of `p` and `j` of `q` (or of reversed `q` when `reversed`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub i: usize,
    pub j: usize,
    pub len: usize,
    pub reversed: bool,
    /// `p` enters the segment on the left of `q` (or of reversed `q`)
    pub p_left: bool,
}

impl Crossing {
    /// Local sign of ⟨p, q⟩ at this crossing.
    pub fn sign(&self) -> i64 {
        let s = if self.p_left { 1 } else { -1 };
        if self.reversed {
            -s
        } else {
            s
        }
    }
}

fn linked_segments(tri: &Triangulation, p: &[u32], q: &[u32], reversed: bool, skip_diag: bool, out: &mut Vec<Crossing>) {
    let m = p.len();
    let n = q.len();
    if m == 0 || n == 0 {
        return;
    }
    let cap = m + n;
    for i in 0..m {
        let pi = p[i];
        let pprev = p[(i + m - 1) % m];
        for j in 0..n {
            if q[j] != pi || q[(j + n - 1) % n] == pprev {
                continue;
            }
            if skip_diag && i == j {
                continue;
            }
            let mut len = 1;
            while len < cap && p[(i + len) % m] == q[(j + len) % n] {
                len += 1;
            }
            if len >= cap {
                // the words agree forever: identical curves on this alignment
                continue;
            }
            let h0 = pi;
            let p_in = tri.glue(pprev);
            let p_left = p_in == next_ccw(h0);
            let g0 = tri.glue(p[(i + len - 1) % m]);
            let p_out = p[(i + len) % m];
            let p_right = p_out == next_ccw(g0);
            if p_left == p_right {
                out.push(Crossing { i, j, len, reversed, p_left });
            }
        }
    }
}

/// All crossings of `p` with `q`, each reported once.
pub fn crossings(tri: &Triangulation, p: &OrientedCurve, q: &OrientedCurve) -> Vec<Crossing> {
    let mut out = Vec::new();
    linked_segments(tri, p.word(), q.word(), false, false, &mut out);
    let qr = reverse_word(tri, q.word());
    linked_segments(tri, p.word(), &qr, true, false, &mut out);
    out
}

/// Geometric intersection number of two distinct simple curves.
pub fn geometric_words(tri: &Triangulation, p: &OrientedCurve, q: &OrientedCurve) -> u64 {
    if p == q || *p == q.reversed(tri) {
        return 0;
    }
    crossings(tri, p, q).len() as u64
}

/// Algebraic intersection ⟨p, q⟩ from signed crossings.
pub fn algebraic_words(tri: &Triangulation, p: &OrientedCurve, q: &OrientedCurve) -> i64 {
    if p == q || *p == q.reversed(tri) {
        return 0;
    }
    crossings(tri, p, q).iter().map(|c| c.sign()).sum()
}

/// Number of self-crossings of a reduced closed walk (0 for simple curves).
pub fn self_intersection(tri: &Triangulation, p: &[u32]) -> u64 {
    let mut out = Vec::new();
    linked_segments(tri, p, p, false, true, &mut out);
    let pr = reverse_word(tri, p);
    linked_segments(tri, p, &pr, true, false, &mut out);
    out.len() as u64 / 2
}

/// i(c, d) for multicurves, extended bilinearly over components.
pub fn geometric_intersection(tri: &Triangulation, c: &NormalMulticurve, d: &NormalMulticurve) -> Result<u64> {
    c.check_surface(tri)?;
    d.check_surface(tri)?;
    let mut total = 0;
    for (x, mx) in c.components() {
        for (y, my) in d.components() {
            total += *mx as u64 * *my as u64 * geometric_words(tri, x, y);
        }
    }
    Ok(total)
}

/// ⟨c, d⟩ for oriented curves.
pub fn algebraic_intersection(tri: &Triangulation, c: &OrientedCurve, d: &OrientedCurve) -> i64 {
    algebraic_words(tri, c, d)
}
