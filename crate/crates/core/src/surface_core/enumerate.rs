//! Exhaustive enumeration of normal coordinates in a bounded box.

use super::multicurve::NormalMulticurve;
use super::triangulation::Triangulation;
use super::curve::OrientedCurve;

/// How big an enumerated multicurve may be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum WeightBound {
    /// every edge weight at most this
    MaxEdge(u32),
    /// sum of edge weights (the length of the dual word) at most this
    Total(u32),
}

impl WeightBound {
    pub fn value(&self) -> u32 {
        match *self {
            WeightBound::MaxEdge(b) | WeightBound::Total(b) => b,
        }
    }

    pub fn admits(&self, w: &[u32]) -> bool {
        match *self {
            WeightBound::MaxEdge(b) => w.iter().all(|&x| x <= b),
            WeightBound::Total(b) => w.iter().sum::<u32>() <= b,
        }
    }
}

struct Plan {
    order: Vec<u32>,
    /// for position k: triangles whose last unassigned edge is order[k],
    /// given as the other two edge indices
    closes: Vec<Vec<[u32; 2]>>,
}

fn plan(tri: &Triangulation) -> Plan {
    let ne = tri.num_edges();
    let nt = tri.num_triangles();
    let mut placed = vec![false; ne];
    let mut order = Vec::with_capacity(ne);
    // greedy: always place the edge that completes the most triangles,
    // breaking ties by index so the order is deterministic
    while order.len() < ne {
        let mut best = None;
        for e in 0..ne {
            if placed[e] {
                continue;
            }
            let mut score = 0i32;
            for t in 0..nt as u32 {
                let es = tri.tri_edges(t);
                if !es.contains(&(e as u32)) {
                    continue;
                }
                let missing = es.iter().filter(|&&x| !placed[x as usize] && x != e as u32).count();
                score += match missing {
                    0 => 4,
                    1 => 1,
                    _ => 0,
                };
            }
            if best.is_none_or(|(s, _)| score > s) {
                best = Some((score, e));
            }
        }
        let (_, e) = best.unwrap();
        placed[e] = true;
        order.push(e as u32);
    }
    let mut pos = vec![0usize; ne];
    for (k, &e) in order.iter().enumerate() {
        pos[e as usize] = k;
    }
    let mut closes = vec![Vec::new(); ne];
    for t in 0..nt as u32 {
        let es = tri.tri_edges(t);
        let last = (0..3).max_by_key(|&i| pos[es[i] as usize]).unwrap();
        let others = [es[(last + 1) % 3], es[(last + 2) % 3]];
        closes[pos[es[last] as usize]].push(others);
    }
    Plan { order, closes }
}

/// Calls `f` on every weight vector satisfying the matching conditions
/// within `bound`, including the zero vector, in a fixed deterministic order.
pub fn for_each_weights<F: FnMut(&[u32])>(tri: &Triangulation, bound: WeightBound, mut f: F) {
    let p = plan(tri);
    let mut w = vec![0u32; tri.num_edges()];
    let (max_edge, total) = match bound {
        WeightBound::MaxEdge(b) => (b, u32::MAX),
        WeightBound::Total(b) => (b, b),
    };
    rec(&p, 0, total, max_edge, &mut w, &mut f);
}

fn rec<F: FnMut(&[u32])>(p: &Plan, k: usize, left: u32, max_edge: u32, w: &mut Vec<u32>, f: &mut F) {
    if k == p.order.len() {
        f(w);
        return;
    }
    let e = p.order[k] as usize;
    let mut lo = 0u32;
    let mut hi = max_edge.min(left);
    let mut parity: Option<u32> = None;
    for &[x, y] in &p.closes[k] {
        let (a, b) = (w[x as usize], w[y as usize]);
        lo = lo.max(a.abs_diff(b));
        hi = hi.min(a + b);
        parity = Some((a + b) % 2);
    }
    if lo > hi {
        return;
    }
    let mut v = lo;
    if let Some(par) = parity {
        if v % 2 != par {
            v += 1;
        }
    }
    let step = if parity.is_some() { 2 } else { 1 };
    while v <= hi {
        // all triangles closed here share the parity constraint
        if p.closes[k].iter().all(|&[x, y]| (w[x as usize] + w[y as usize] + v).is_multiple_of(2)) {
            w[e] = v;
            rec(p, k + 1, left - v, max_edge, w, f);
        }
        v += step;
    }
    w[e] = 0;
}

/// Every nonempty multicurve within `bound` accepted by `pred`.
pub fn enumerate_multicurves<P: FnMut(&NormalMulticurve) -> bool>(
    tri: &Triangulation,
    bound: WeightBound,
    mut pred: P,
) -> Vec<NormalMulticurve> {
    let mut out = Vec::new();
    if bound.value() == 0 {
        return out;
    }
    for_each_weights(tri, bound, |w| {
        if w.iter().all(|&x| x == 0) {
            return;
        }
        let m = NormalMulticurve::from_weights(tri, w.to_vec()).expect("enumerated weights are normal");
        if pred(&m) {
            out.push(m);
        }
    });
    out
}

/// Every essential nonperipheral simple closed curve within `bound`, as its
/// canonical unoriented word.
pub fn enumerate_curves(tri: &Triangulation, bound: WeightBound) -> Vec<OrientedCurve> {
    let mut out = Vec::new();
    if bound.value() == 0 {
        return out;
    }
    for_each_weights(tri, bound, |w| {
        if w.iter().all(|&x| x == 0) {
            return;
        }
        if let Some(c) = single_curve(tri, w) {
            if tri.peripheral_index(&c).is_none() {
                out.push(c);
            }
        }
    });
    out
}

/// The curve with weights `w` when they trace to exactly one component.
pub fn single_curve(tri: &Triangulation, w: &[u32]) -> Option<OrientedCurve> {
    let total: u32 = w.iter().sum();
    let e0 = w.iter().position(|&x| x > 0)?;
    // cheap test: the strand through the first position must use every strand
    let h0 = tri.edge_halves(e0 as u32)[0];
    let (mut h, mut q) = (h0, 0u32);
    let mut word = Vec::with_capacity(total as usize);
    loop {
        word.push(h);
        if word.len() > total as usize {
            return None;
        }
        let (nh, nq) = super::multicurve::step(tri, w, h, q);
        h = nh;
        q = nq;
        if h == h0 && q == 0 {
            break;
        }
    }
    if word.len() != total as usize {
        return None;
    }
    Some(OrientedCurve::from_word(word).unoriented(tri))
}
