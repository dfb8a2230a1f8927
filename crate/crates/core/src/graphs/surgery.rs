//! Surgery of a genus-separating curve along the arcs of another curve,
//! lowering the intersection with it.

use super::is_genus_separating;
use crate::error::{Error, Result};
use crate::surface_core::arcs::{arcs_of, band_sum};
use crate::surface_core::curve::{reduce_cyclic, reverse_word};
use crate::surface_core::cut::is_separating;
use crate::surface_core::intersection::geometric_words;
use crate::surface_core::multicurve::word_is_simple;
use crate::surface_core::overlay::{cyclic_piece, StrandCrossing};
use crate::surface_core::regions::RegionMap;
use crate::surface_core::{NormalMulticurve, OrientedCurve, Triangulation};

/// A genus-separating c' disjoint from `c` with i(a, c') < i(a, c).
pub fn surgery_reduce(tri: &Triangulation, a: &OrientedCurve, c: &OrientedCurve) -> Result<OrientedCurve> {
    if !is_genus_separating(tri, c) {
        return Err(Error::Precondition("c is not genus-separating".into()));
    }
    if !word_is_simple(tri, a.word()) || tri.peripheral_index(a).is_some() {
        return Err(Error::Precondition("a must be a simple nonperipheral curve".into()));
    }
    let i0 = geometric_words(tri, a, c);
    if i0 == 0 {
        return Err(Error::Precondition("a and c are disjoint".into()));
    }
    let cm = NormalMulticurve::from_curves(tri, std::slice::from_ref(c))?;
    let map = RegionMap::new(tri, &cm)?;
    let d = map.decomposition();
    let mut sides: Vec<usize> = (0..d.components().len()).filter(|&u| d.components()[u].genus >= 2).collect();
    sides.sort_by_key(|&u| std::cmp::Reverse(d.components()[u].genus));
    let cw = map.curves()[0].word().to_vec();
    let sys = arcs_of(tri, &map, a)?;
    let good = |x: &OrientedCurve| {
        !x.is_empty()
            && word_is_simple(tri, x.word())
            && tri.peripheral_index(x).is_none()
            && is_genus_separating(tri, x)
            && geometric_words(tri, x, c) == 0
            && geometric_words(tri, a, x) < i0
    };
    let aw = a.word();
    let crw = reverse_word(tri, &cw);
    for u in sides {
        for arc in sys.arcs_in(u) {
            let (x, y) = (&sys.crossings[arc.from], &sys.crossings[arc.to]);
            // a crossing may sit anywhere along the run a shares with c;
            // overlapping runs make the order along c ambiguous, so both
            // ends of each run are tried
            // (offset along a, position on c) for each end of the run
            let ends = |s: &StrandCrossing| {
                let len = run_len(aw, s, &cw, &crw);
                let n = cw.len();
                let c_end = if s.reversed { (s.q_base + n - len % n) % n } else { (s.q_base + len) % n };
                [(0, s.q_base), (len, c_end)]
            };
            for (ox, cx) in ends(x) {
                for (oy, cy) in ends(y) {
                    let Some(len) = (arc.word.len() + oy).checked_sub(ox) else { continue };
                    let aws: Vec<u32> = (0..len).map(|t| aw[(x.p_pos + ox + t) % aw.len()]).collect();
                    let options: &[(bool, bool)] = if cx == cy { &[(false, true), (true, false)] } else { &[(false, false)] };
                    for &(f1, f2) in options {
                        let mut dw = aws.clone();
                        dw.extend(cyclic_piece(&cw, cy, cx, f1));
                        let mut ew = aws.clone();
                        ew.extend(reverse_word(tri, &cyclic_piece(&cw, cx, cy, f2)));
                        let dc = OrientedCurve::from_word(reduce_cyclic(tri, &dw));
                        let ec = OrientedCurve::from_word(reduce_cyclic(tri, &ew));
                        let mut direct: Vec<&OrientedCurve> = [&dc, &ec].into_iter().filter(|x| good(x)).collect();
                        direct.sort_by_key(|x| geometric_words(tri, a, x));
                        if let Some(x) = direct.first() {
                            return Ok(x.unoriented(tri));
                        }
                        if let Some(x) = pants_band(tri, a, c, &dc, &ec, &good)? {
                            return Ok(x);
                        }
                    }
                }
            }
        }
    }
    Err(Error::Construction("no surgery of c along a lowered the intersection".into()))
}

/// When both surgery curves are nonseparating, band them together on the
/// side away from c.
fn pants_band<F: Fn(&OrientedCurve) -> bool>(
    tri: &Triangulation,
    a: &OrientedCurve,
    c: &OrientedCurve,
    dc: &OrientedCurve,
    ec: &OrientedCurve,
    good: &F,
) -> Result<Option<OrientedCurve>> {
    let ok = |x: &OrientedCurve| !x.is_empty() && word_is_simple(tri, x.word()) && tri.peripheral_index(x).is_none() && !is_separating(tri, x);
    if !ok(dc) || !ok(ec) || dc.unoriented(tri) == ec.unoriented(tri) {
        return Ok(None);
    }
    let triple = match NormalMulticurve::from_curves(tri, &[c.clone(), dc.clone(), ec.clone()]) {
        Ok(m) if m.component_count() == 3 && !m.has_duplicates() => m,
        _ => return Ok(None),
    };
    let map = RegionMap::new(tri, &triple)?;
    let dec = map.decomposition();
    let find = |x: &OrientedCurve| map.curves().iter().position(|y| *y == x.unoriented(tri)).expect("curve of the triple");
    let (ci, di, ei) = (find(c), find(dc), find(ec));
    let touches = |v: usize, i: usize| dec.side(i, true) == v || dec.side(i, false) == v;
    let Some(v) = (0..dec.components().len()).find(|&v| touches(v, di) && touches(v, ei) && !touches(v, ci)) else { return Ok(None) };
    let anchor = |i: usize, pos: usize| {
        let (l, r) = map.strand_regions(tri, i, pos);
        if dec.side(i, true) == v {
            (1i64, l)
        } else {
            (-1i64, r)
        }
    };
    let dw = map.curves()[di].word().to_vec();
    let ew = map.curves()[ei].word().to_vec();
    let budget = geometric_words(tri, a, dc) + geometric_words(tri, a, ec);
    let mut best: Option<(OrientedCurve, u64)> = None;
    for pd in 0..dw.len() {
        let (ds, dr) = anchor(di, pd);
        for pe in 0..ew.len() {
            let (es, er) = anchor(ei, pe);
            let Some(path) = map.path(dr, er, |r| map.component_of(r) == v) else { continue };
            let w = band_sum(tri, &dw, pd, ds, &path, &ew, pe, es);
            if w.is_empty() || !word_is_simple(tri, &w) {
                continue;
            }
            let x = OrientedCurve::from_word(w).unoriented(tri);
            if !good(&x) {
                continue;
            }
            let i = geometric_words(tri, a, &x);
            if best.as_ref().is_none_or(|b| i < b.1) {
                best = Some((x, i));
                if i <= budget {
                    return Ok(best.map(|b| b.0));
                }
            }
        }
    }
    Ok(best.map(|b| b.0))
}

/// Repeated surgery down to a curve disjoint from `a`; the chain starts
/// with `c`.
pub fn surgery_chain(tri: &Triangulation, a: &OrientedCurve, c: &OrientedCurve) -> Result<Vec<OrientedCurve>> {
    let mut chain = vec![c.unoriented(tri)];
    let start = geometric_words(tri, a, c);
    for _ in 0..start {
        let last = chain.last().unwrap();
        if geometric_words(tri, a, last) == 0 {
            return Ok(chain);
        }
        let next = surgery_reduce(tri, a, last)?;
        chain.push(next);
    }
    if geometric_words(tri, a, chain.last().unwrap()) == 0 {
        Ok(chain)
    } else {
        Err(Error::Construction("surgery chain did not terminate".into()))
    }
}

/// Letters `a` shares with the aligned word of c from the crossing on.
fn run_len(aw: &[u32], s: &StrandCrossing, cw: &[u32], crw: &[u32]) -> usize {
    let n = cw.len();
    let (w, j) = if s.reversed { (crw, (n - s.q_base) % n) } else { (cw, s.q_base) };
    let mut len = 0;
    while len < aw.len() + n && aw[(s.p_pos + len) % aw.len()] == w[(j + len) % n] {
        len += 1;
    }
    len
}
