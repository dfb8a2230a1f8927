//! Crossings of one curve with a multicurve, in the order the curve meets
//! them.
//!
//! Each crossing is pinned to the triangle where the two words start
//! sharing exits. Several crossings can start in the same triangle when the
//! curve runs alongside parallel strands; those are ordered by lateral
//! position, nearest strand first.

use std::cmp::Ordering;

use super::curve::reverse_word;
use super::triangulation::{next_ccw, Triangulation};

/// A transverse crossing of `p` with component `q` of a multicurve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrandCrossing {
    /// position in `p` where the shared run starts
    pub p_pos: usize,
    /// which component was crossed
    pub q: usize,
    /// position in the forward word of `q` whose start triangle is the
    /// crossing triangle
    pub q_base: usize,
    /// `p` runs along `q` against its orientation
    pub reversed: bool,
    /// `p` arrives on the left of the aligned word
    pub p_left: bool,
    /// position in the aligned word (forward or reversed `q`)
    aligned_pos: usize,
}

impl StrandCrossing {
    /// Sign of this crossing in ⟨p, q⟩.
    pub fn sign(&self) -> i64 {
        let s = if self.p_left { 1 } else { -1 };
        if self.reversed {
            -s
        } else {
            s
        }
    }

    /// Side of `q` (in its stored orientation) that `p` leaves from; `true`
    /// means the left side.
    pub fn from_left_of_q(&self) -> bool {
        self.p_left != self.reversed
    }
}

fn aligned<'a>(fwd: &'a [Vec<u32>], rev: &'a [Vec<u32>], c: &StrandCrossing) -> &'a [u32] {
    if c.reversed {
        &rev[c.q]
    } else {
        &fwd[c.q]
    }
}

/// Lateral comparison of two strands entering the same exit: `Less` means
/// `x` lies to the left of `y`.
fn lateral(tri: &Triangulation, x: &[u32], i: usize, y: &[u32], j: usize) -> Ordering {
    let (m, n) = (x.len(), y.len());
    for t in 1..=(m + n) {
        let a = x[(i + t) % m];
        let b = y[(j + t) % n];
        if a != b {
            let g = tri.glue(x[(i + t - 1) % m]);
            // the strand turning right is on the right
            return if a == next_ccw(g) { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

/// All crossings of the reduced curve `p` with the simple multicurve whose
/// components are `qs`, sorted along `p`.
pub fn ordered_crossings(tri: &Triangulation, p: &[u32], qs: &[Vec<u32>]) -> Vec<StrandCrossing> {
    let m = p.len();
    let revs: Vec<Vec<u32>> = qs.iter().map(|q| reverse_word(tri, q)).collect();
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    for (qi, q) in qs.iter().enumerate() {
        for (reversed, w) in [(false, q), (true, &revs[qi])] {
            let n = w.len();
            let cap = m + n;
            for i in 0..m {
                let pprev = p[(i + m - 1) % m];
                for j in 0..n {
                    if w[j] != p[i] || w[(j + n - 1) % n] == pprev {
                        continue;
                    }
                    let mut len = 1;
                    while len < cap && p[(i + len) % m] == w[(j + len) % n] {
                        len += 1;
                    }
                    if len >= cap {
                        continue;
                    }
                    let p_left = tri.glue(pprev) == next_ccw(p[i]);
                    let g0 = tri.glue(p[(i + len - 1) % m]);
                    let p_right = p[(i + len) % m] == next_ccw(g0);
                    if p_left != p_right {
                        continue;
                    }
                    let q_base = if reversed { (n - j) % n } else { j };
                    out.push(StrandCrossing { p_pos: i, q: qi, q_base, reversed, p_left, aligned_pos: j });
                }
            }
        }
    }
    out.sort_by(|a, b| {
        a.p_pos.cmp(&b.p_pos).then_with(|| {
            let o = lateral(tri, aligned(qs, &revs, a), a.aligned_pos, aligned(qs, &revs, b), b.aligned_pos);
            // p sits on the left of the bundle when p_left: nearest is leftmost
            if a.p_left {
                o
            } else {
                o.reverse()
            }
        })
    });
    out
}

/// The loop `q^k` based at the start triangle of `q[base]`.
pub fn based_loop(tri: &Triangulation, q: &[u32], base: usize, k: i64) -> Vec<u32> {
    let mut rot = q.to_vec();
    rot.rotate_left(base);
    let unit = if k < 0 { reverse_word(tri, &rot) } else { rot };
    let mut out = Vec::with_capacity(unit.len() * k.unsigned_abs() as usize);
    for _ in 0..k.unsigned_abs() {
        out.extend_from_slice(&unit);
    }
    out
}

/// Piece of the cyclic word `p` from position `from` up to (not including)
/// position `to`, going forward; `from == to` gives the empty piece unless
/// `full` is set.
pub fn cyclic_piece(p: &[u32], from: usize, to: usize, full: bool) -> Vec<u32> {
    let m = p.len();
    let mut len = (to + m - from) % m;
    if len == 0 && full {
        len = m;
    }
    (0..len).map(|t| p[(from + t) % m]).collect()
}
