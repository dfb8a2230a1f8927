//! Winding-number functions of framings.
//!
//! The reference framing comes from the ribbon structure of the dual graph:
//! each passage through a triangle contributes `q = 1` when the exit side is
//! numbered below the entry side, and each edge crossed against its
//! orientation (lower half-edge to higher) contributes −1. This is the
//! turning number against a line field that is parallel along the ribbon,
//! shifted by an integral cochain. Every other framing differs from it by an
//! integral cochain on the cotree edges, solved exactly from prescribed
//! values on a homology basis.

pub mod homology;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface_core::cut::{cut, ComplementDecomposition};
use crate::surface_core::enumerate::{for_each_weights, single_curve, WeightBound};
use crate::surface_core::intersection::geometric_words;
use crate::surface_core::triangulation::{side_of, SurfaceType, Triangulation};
use crate::surface_core::{NormalMulticurve, OrientedCurve};
pub use homology::HomologyModel;

/// Winding of the reference framing along a closed walk.
pub fn reference_winding(tri: &Triangulation, word: &[u32]) -> i64 {
    let n = word.len();
    let mut total = 0i64;
    for k in 0..n {
        let h = word[k];
        // entry side of the triangle we leave through `word[k]`
        let entry = tri.glue(word[(k + n - 1) % n]);
        if side_of(h) < side_of(entry) {
            total += 1;
        }
        let e = tri.edge_of(h);
        if tri.edge_halves(e)[1] == h {
            total -= 1;
        }
    }
    total
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Framing {
    surface: SurfaceType,
    signature: Vec<i64>,
    gsb_values: Vec<i64>,
    #[serde(skip)]
    correction: Vec<i64>,
    #[serde(skip)]
    homology: Option<HomologyModel>,
}

/// Builds the framing with φ(a_i) = x_i, φ(b_i) = y_i on the stored basis
/// and the given signature. `values` is (x_1, y_1, …, x_g, y_g).
pub fn framing_from_gsb(tri: &Triangulation, values: &[i64], signature: &[i64]) -> Result<Framing> {
    let s = tri.surface();
    if values.len() != 2 * s.g as usize {
        return Err(Error::BasisLength { got: values.len(), expected: 2 * s.g as usize });
    }
    if signature.len() != s.n as usize {
        return Err(Error::SignatureLength { got: signature.len(), n: s.n as usize });
    }
    let sum: i64 = signature.iter().sum();
    if sum != s.euler() {
        return Err(Error::SignatureSum { got: sum, chi: s.euler() });
    }
    let model = HomologyModel::new(tri)?;
    let basis = tri.homology_basis();
    let mut rhs = Vec::with_capacity(basis.len());
    for (k, c) in basis.iter().enumerate() {
        let target = if k < values.len() { values[k] } else { signature[k - values.len()] };
        rhs.push(target - reference_winding(tri, c.word()));
    }
    let c = model.solve(&rhs);
    let f = Framing {
        surface: s,
        signature: signature.to_vec(),
        gsb_values: values.to_vec(),
        correction: c,
        homology: Some(model),
    };
    // the last peripheral value is forced by the sum condition; check it
    let last = tri.peripheral_loops().last().unwrap();
    if f.winding_word(tri, last.word()) != signature[signature.len() - 1] {
        return Err(Error::Construction("peripheral coherence failed".into()));
    }
    Ok(f)
}

impl Framing {
    /// Restores derived data after deserialization.
    pub fn rehydrate(self, tri: &Triangulation) -> Result<Self> {
        if self.surface != tri.surface() {
            return Err(Error::SurfaceMismatch(self.surface, tri.surface()));
        }
        framing_from_gsb(tri, &self.gsb_values, &self.signature)
    }

    pub fn surface(&self) -> SurfaceType {
        self.surface
    }

    pub fn signature(&self) -> &[i64] {
        &self.signature
    }

    pub fn gsb_values(&self) -> &[i64] {
        &self.gsb_values
    }

    pub fn homology(&self) -> &HomologyModel {
        self.homology.as_ref().expect("framing is hydrated")
    }

    /// φ along a reduced closed walk.
    pub fn winding_word(&self, tri: &Triangulation, word: &[u32]) -> i64 {
        let v = self.homology().cotree(tri, word);
        reference_winding(tri, word) + v.iter().zip(&self.correction).map(|(a, b)| a * b).sum::<i64>()
    }

    pub fn winding(&self, tri: &Triangulation, c: &OrientedCurve) -> i64 {
        self.winding_word(tri, c.word())
    }

    /// g ≥ 2 and every φ(Δ_i) odd.
    pub fn is_spin_type(&self) -> bool {
        self.surface.g >= 2 && self.signature.iter().all(|d| d.rem_euclid(2) == 1)
    }

    /// Every φ(Δ_i) negative.
    pub fn is_holomorphic_type(&self) -> bool {
        self.signature.iter().all(|&d| d < 0)
    }

    /// Arf from the stored basis values.
    pub fn arf_from_basis(&self) -> u8 {
        arf_formula(&self.gsb_values)
    }
}

/// φ(c), rejecting nullhomotopic input.
pub fn winding_number(tri: &Triangulation, phi: &Framing, c: &OrientedCurve) -> Result<i64> {
    if c.is_empty() {
        return Err(Error::Empty);
    }
    if phi.surface() != tri.surface() {
        return Err(Error::SurfaceMismatch(phi.surface(), tri.surface()));
    }
    Ok(phi.winding(tri, c))
}

/// Σ (x_i + 1)(y_i + 1) mod 2.
pub fn arf_formula(values: &[i64]) -> u8 {
    let s: i64 = values.chunks(2).map(|p| (p[0] + 1) * (p[1] + 1)).sum();
    s.rem_euclid(2) as u8
}

/// gcd(x, y, z_1 + 1, …) for a genus-1 basis pair and the peripheral data.
pub fn arf1_formula(x: i64, y: i64, circles: &[i64]) -> u64 {
    circles.iter().fold(x.gcd(&y), |g, &z| g.gcd(&(z + 1))) as u64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramingInvariants {
    pub surface: SurfaceType,
    pub signature: Vec<i64>,
    pub spin_type: bool,
    pub holomorphic_type: bool,
    pub arf: Option<u8>,
    pub arf1: Option<u64>,
    /// total-weight bound at which the Arf₁ gcd stabilized
    pub arf1_bound: Option<u32>,
}

/// Arf₁ as the gcd of φ over enumerated nonseparating curves together with
/// the φ(Δ_i) + 1, stopping once it is unchanged across two doublings of the
/// bound. Returns (value, bound).
pub fn arf1_by_enumeration(tri: &Triangulation, phi: &Framing, start: u32, ceiling: u32) -> (u64, u32) {
    let base = phi.signature().iter().fold(0i64, |g, &d| g.gcd(&(d + 1)));
    let mut history = Vec::new();
    let mut b = start.max(2);
    loop {
        let mut g = base;
        for_each_weights(tri, WeightBound::Total(b), |w| {
            if g == 1 {
                return;
            }
            if let Some(c) = single_curve(tri, w) {
                let x = phi.homology().coordinates(tri, c.word());
                if !phi.homology().symplectic_part_zero(&x) {
                    g = g.gcd(&phi.winding(tri, &c));
                }
            }
        });
        history.push(g as u64);
        let n = history.len();
        if (n >= 3 && history[n - 1] == history[n - 2] && history[n - 2] == history[n - 3]) || b >= ceiling {
            return (g as u64, b);
        }
        b *= 2;
    }
}

pub fn invariants(tri: &Triangulation, phi: &Framing) -> FramingInvariants {
    let spin = phi.is_spin_type();
    let (arf1, arf1_bound) = if tri.surface().g == 1 {
        let (v, b) = arf1_by_enumeration(tri, phi, 8, 64);
        (Some(v), Some(b))
    } else {
        (None, None)
    };
    FramingInvariants {
        surface: phi.surface(),
        signature: phi.signature().to_vec(),
        spin_type: spin,
        holomorphic_type: phi.is_holomorphic_type(),
        arf: if spin { Some(phi.arf_from_basis()) } else { None },
        arf1,
        arf1_bound,
    }
}

/// Same Mod(S)-orbit test by the classification of framed surfaces.
pub fn same_orbit(f: &FramingInvariants, g: &FramingInvariants) -> Result<bool> {
    if f.surface != g.surface {
        return Err(Error::SurfaceMismatch(f.surface, g.surface));
    }
    if f.signature != g.signature {
        return Ok(false);
    }
    Ok(match f.surface.g {
        0 => true,
        1 => f.arf1 == g.arf1,
        _ => !(f.spin_type && g.spin_type) || f.arf == g.arf,
    })
}

/// Arf data of a restricted framing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ArfData {
    Arf(u8),
    Arf1(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentFraming {
    pub component: usize,
    pub genus: u32,
    pub euler: i64,
    /// one entry per boundary circle, oriented with the component on its left
    pub boundary_windings: Vec<i64>,
    pub puncture_windings: Vec<i64>,
    pub arf_data: Option<ArfData>,
    /// basis found inside the component, as (a, b) pairs
    pub basis: Vec<(OrientedCurve, OrientedCurve)>,
}

impl ComponentFraming {
    pub fn circle_windings(&self) -> Vec<i64> {
        self.boundary_windings.iter().chain(&self.puncture_windings).copied().collect()
    }

    pub fn coherence_sum(&self) -> i64 {
        self.circle_windings().iter().sum()
    }
}

/// Winding numbers of the circles of one component of S ∖ γ, with the
/// component on the left of each.
pub fn component_windings(tri: &Triangulation, phi: &Framing, d: &ComplementDecomposition, comp: usize) -> Result<(Vec<i64>, Vec<i64>)> {
    let data = d.component(comp)?;
    let bw = data
        .boundary
        .iter()
        .map(|b| {
            let w = phi.winding(tri, &d.curves()[b.curve]);
            if b.left {
                w
            } else {
                -w
            }
        })
        .collect();
    let pw = data.punctures.iter().map(|&p| phi.signature()[p as usize]).collect();
    Ok((bw, pw))
}

/// φ restricted to a component of S ∖ γ. With `arf_bound`, a basis of the
/// component is searched among curves of that size and its Arf data
/// reported.
pub fn restrict(
    tri: &Triangulation,
    phi: &Framing,
    gamma: &NormalMulticurve,
    component: usize,
    arf_bound: Option<WeightBound>,
) -> Result<ComponentFraming> {
    let d = cut(tri, gamma)?;
    let data = d.component(component)?.clone();
    let (bw, pw) = component_windings(tri, phi, &d, component)?;
    let mut out = ComponentFraming {
        component,
        genus: data.genus,
        euler: data.euler,
        boundary_windings: bw,
        puncture_windings: pw,
        arf_data: None,
        basis: Vec::new(),
    };
    if let (Some(bound), true) = (arf_bound, data.genus > 0) {
        let circles = out.circle_windings();
        let spin = data.genus >= 2 && circles.iter().all(|z| z.rem_euclid(2) == 1);
        if data.genus == 1 || spin {
            let basis = component_basis(tri, gamma, &d, component, data.genus as usize, bound)?;
            let vals: Vec<i64> = basis.iter().flat_map(|(a, b)| [phi.winding(tri, a), phi.winding(tri, b)]).collect();
            out.arf_data = Some(if data.genus == 1 {
                ArfData::Arf1(arf1_formula(vals[0], vals[1], &circles))
            } else {
                ArfData::Arf(arf_formula(&vals))
            });
            out.basis = basis;
        }
    }
    Ok(out)
}

/// Curves within `bound` lying in the given component of S ∖ γ (not
/// parallel to γ).
pub fn curves_in_component(
    tri: &Triangulation,
    gamma: &NormalMulticurve,
    d: &ComplementDecomposition,
    component: usize,
    bound: WeightBound,
) -> Vec<OrientedCurve> {
    let mut out = Vec::new();
    let gw = gamma.weights();
    for_each_weights(tri, bound, |w| {
        if let Some(c) = single_curve(tri, w) {
            if tri.peripheral_index(&c).is_some() {
                return;
            }
            if !crate::surface_core::multicurve::disjoint_weights(tri, gw, w) {
                return;
            }
            if d.locate(tri, &c) == Some(component) {
                out.push(c);
            }
        }
    });
    out
}

/// A geometric symplectic basis of a component, by bounded backtracking
/// over the curves it contains.
pub fn component_basis(
    tri: &Triangulation,
    gamma: &NormalMulticurve,
    d: &ComplementDecomposition,
    component: usize,
    genus: usize,
    bound: WeightBound,
) -> Result<Vec<(OrientedCurve, OrientedCurve)>> {
    let pool = curves_in_component(tri, gamma, d, component, bound);
    let mut chosen: Vec<(OrientedCurve, OrientedCurve)> = Vec::new();
    if pick_pairs(tri, &pool, genus, &mut chosen, 0) {
        Ok(chosen)
    } else {
        Err(Error::BoundExhausted { bound: bound.value(), what: "basis inside component".into() })
    }
}

fn pick_pairs(
    tri: &Triangulation,
    pool: &[OrientedCurve],
    genus: usize,
    chosen: &mut Vec<(OrientedCurve, OrientedCurve)>,
    from: usize,
) -> bool {
    if chosen.len() == genus {
        return true;
    }
    let fits = |c: &OrientedCurve, chosen: &[(OrientedCurve, OrientedCurve)]| {
        chosen.iter().all(|(a, b)| geometric_words(tri, a, c) == 0 && geometric_words(tri, b, c) == 0 && a != c && b != c)
    };
    for i in from..pool.len() {
        if !fits(&pool[i], chosen) {
            continue;
        }
        for j in 0..pool.len() {
            if j == i || !fits(&pool[j], chosen) {
                continue;
            }
            if geometric_words(tri, &pool[i], &pool[j]) != 1 {
                continue;
            }
            chosen.push((pool[i].clone(), pool[j].clone()));
            if pick_pairs(tri, pool, genus, chosen, i + 1) {
                return true;
            }
            chosen.pop();
            // one partner per a-curve is enough for this branch
            break;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface_core::canonical_triangulation;
    use crate::surface_core::enumerate::enumerate_curves;
    use crate::surface_core::intersection::algebraic_words;
    use crate::surface_core::twist::twist_curve;

    #[test]
    fn basis_values_and_signature() {
        for (g, n, sig) in [(1, 1, vec![-1]), (1, 2, vec![1, -3]), (2, 2, vec![-1, -3]), (3, 1, vec![-5]), (3, 2, vec![-2, -4])] {
            let t = canonical_triangulation(g, n).unwrap();
            let vals: Vec<i64> = (0..2 * g as i64).map(|i| i * 3 - 4).collect();
            let f = framing_from_gsb(&t, &vals, &sig).unwrap();
            for (i, (a, b)) in t.gsb().iter().enumerate() {
                assert_eq!(f.winding(&t, a), vals[2 * i]);
                assert_eq!(f.winding(&t, b), vals[2 * i + 1]);
                assert_eq!(f.winding(&t, &a.reversed(&t)), -vals[2 * i]);
            }
            for (j, d) in t.peripheral_loops().iter().enumerate() {
                assert_eq!(f.winding(&t, d), sig[j]);
            }
            let r = reference_winding;
            let s: i64 = t.peripheral_loops().iter().map(|d| r(&t, d.word())).sum();
            assert_eq!(s, t.surface().euler());
        }
        let t = canonical_triangulation(3, 1).unwrap();
        assert!(framing_from_gsb(&t, &[0; 6], &[-4]).is_err());
    }

    #[test]
    fn twist_linearity_small() {
        let t = canonical_triangulation(2, 1).unwrap();
        let f = framing_from_gsb(&t, &[2, -1, 0, 5], &[-3]).unwrap();
        let cs = enumerate_curves(&t, WeightBound::Total(10));
        for a in cs.iter().step_by(3) {
            for b in cs.iter().step_by(5) {
                for k in [-2i64, -1, 1, 3] {
                    let c = twist_curve(&t, b, a, k);
                    let want = f.winding(&t, b) + k * algebraic_words(&t, b, a) * f.winding(&t, a);
                    assert_eq!(f.winding(&t, &c), want);
                }
            }
        }
    }

    #[test]
    fn coherence_small() {
        let t = canonical_triangulation(2, 2).unwrap();
        let f = framing_from_gsb(&t, &[1, 0, -2, 3], &[-1, -3]).unwrap();
        let cs = enumerate_curves(&t, WeightBound::Total(10));
        for c in &cs {
            let m = NormalMulticurve::from_curves(&t, std::slice::from_ref(c)).unwrap();
            let d = cut(&t, &m).unwrap();
            for k in 0..d.components().len() {
                let (bw, pw) = component_windings(&t, &f, &d, k).unwrap();
                let s: i64 = bw.iter().chain(&pw).sum();
                assert_eq!(s, d.components()[k].euler);
            }
        }
    }
}
