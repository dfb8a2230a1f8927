use serde::{Deserialize, Serialize};

use super::curve::{reduce_cyclic, OrientedCurve};
use super::multicurve::NormalMulticurve;
use super::overlay::{based_loop, ordered_crossings};
use super::triangulation::Triangulation;
use crate::error::{Error, Result};

/// `T_a^k(b)` on words. At every crossing the curve `b` picks up a copy of
/// `a^{±k}` based at the crossing, the sign being the local sign of ⟨b, a⟩,
/// so that `[T_a^k b] = [b] + k⟨b, a⟩[a]`.
pub fn twist_word(tri: &Triangulation, b: &[u32], a: &[u32], k: i64) -> Vec<u32> {
    if k == 0 {
        return b.to_vec();
    }
    let qs = [a.to_vec()];
    let xs = ordered_crossings(tri, b, &qs);
    if xs.is_empty() {
        return b.to_vec();
    }
    let mut out = Vec::with_capacity(b.len() + xs.len() * a.len() * k.unsigned_abs() as usize);
    let mut next = 0;
    for (i, &h) in b.iter().enumerate() {
        while next < xs.len() && xs[next].p_pos == i {
            let x = &xs[next];
            out.extend(based_loop(tri, a, x.q_base, k * x.sign()));
            next += 1;
        }
        out.push(h);
    }
    reduce_cyclic(tri, &out)
}

pub fn twist_curve(tri: &Triangulation, b: &OrientedCurve, a: &OrientedCurve, k: i64) -> OrientedCurve {
    OrientedCurve::from_word(twist_word(tri, b.word(), a.word(), k))
}

/// Twists every component of `target` about the single curve `about`.
pub fn twist(tri: &Triangulation, target: &NormalMulticurve, about: &NormalMulticurve, k: i64) -> Result<NormalMulticurve> {
    target.check_surface(tri)?;
    about.check_surface(tri)?;
    let a = about.single()?;
    let mut w = vec![0u32; tri.num_edges()];
    for (c, mult) in target.components() {
        let img = twist_curve(tri, c, a, k);
        for (x, y) in w.iter_mut().zip(img.weights(tri)) {
            *x += y * mult;
        }
    }
    NormalMulticurve::from_weights(tri, w)
}

/// A product of Dehn twists, applied first instruction first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MappingClassWord {
    pub twists: Vec<(OrientedCurve, i64)>,
}

impl MappingClassWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(tri: &Triangulation, twists: Vec<(NormalMulticurve, i64)>) -> Result<Self> {
        let mut out = Vec::with_capacity(twists.len());
        for (c, k) in twists {
            if k == 0 {
                return Err(Error::Precondition("twist power must be nonzero".into()));
            }
            c.check_surface(tri)?;
            out.push((c.single()?.clone(), k));
        }
        Ok(MappingClassWord { twists: out })
    }

    pub fn push(&mut self, c: OrientedCurve, k: i64) {
        self.twists.push((c, k));
    }

    /// Image of an oriented curve; orientation is carried along.
    pub fn apply_curve(&self, tri: &Triangulation, c: &OrientedCurve) -> OrientedCurve {
        let mut w = c.word().to_vec();
        for (a, k) in &self.twists {
            w = twist_word(tri, &w, a.word(), *k);
        }
        OrientedCurve::from_word(w)
    }

    pub fn apply(&self, tri: &Triangulation, m: &NormalMulticurve) -> Result<NormalMulticurve> {
        m.check_surface(tri)?;
        let mut w = vec![0u32; tri.num_edges()];
        for (c, mult) in m.components() {
            for (x, y) in w.iter_mut().zip(self.apply_curve(tri, c).weights(tri)) {
                *x += y * mult;
            }
        }
        NormalMulticurve::from_weights(tri, w)
    }

    /// The inverse word.
    pub fn inverse(&self) -> Self {
        MappingClassWord { twists: self.twists.iter().rev().map(|(c, k)| (c.clone(), -k)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface_core::canonical_triangulation;
    use crate::surface_core::intersection::{algebraic_words, geometric_words};
    use crate::surface_core::multicurve::word_is_simple;

    #[test]
    fn basis_twists() {
        for (g, n) in [(1, 1), (1, 2), (2, 1), (3, 1)] {
            let t = canonical_triangulation(g, n).unwrap();
            let (a, b) = t.gsb()[0].clone();
            for k in -3i64..=3 {
                let c = twist_curve(&t, &b, &a, k);
                assert!(word_is_simple(&t, c.word()), "({g},{n}) k={k}");
                assert_eq!(geometric_words(&t, &c, &b), k.unsigned_abs(), "({g},{n}) k={k}");
                assert_eq!(geometric_words(&t, &c, &a), 1);
                assert_eq!(algebraic_words(&t, &c, &a), algebraic_words(&t, &b, &a));
                let back = twist_curve(&t, &c, &a, -k);
                assert_eq!(back, b, "({g},{n}) k={k}");
            }
        }
    }
}
