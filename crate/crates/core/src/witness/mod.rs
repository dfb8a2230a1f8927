//! Admissible curves, witnesses for the admissible curve graph, and the
//! explicit pair of disjoint witnesses.

mod flat;

pub use flat::{find_disjoint_flat, verify_certificate, FlatCertificate, VerifyReport};

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::framing::Framing;
use crate::surface_core::cut::{cut, topological_type, ComplementDecomposition};
use crate::surface_core::{NormalMulticurve, OrientedCurve, Triangulation};

/// Nonseparating with φ = 0.
pub fn is_admissible(tri: &Triangulation, phi: &Framing, c: &NormalMulticurve) -> Result<bool> {
    let t = topological_type(tri, c)?;
    Ok(!t.separating && phi.winding(tri, c.single()?) == 0)
}

/// Fast form for a single curve already known to be nonperipheral.
pub fn curve_is_admissible(tri: &Triangulation, phi: &Framing, c: &OrientedCurve) -> bool {
    if phi.winding(tri, c) != 0 {
        return false;
    }
    let x = phi.homology().coordinates(tri, c.word());
    !phi.homology().symplectic_part_zero(&x)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetSearch {
    /// indices of a subset I with Σ_I z = 1 − |I|
    pub subset: Option<Vec<usize>>,
    pub reason: Option<String>,
}

impl SubsetSearch {
    pub fn found(&self) -> bool {
        self.subset.is_some()
    }
}

/// Is there I with 2 ≤ |I| ≤ k − 2 and Σ_{z∈I} z = 1 − |I|? With `split`,
/// both I and its complement must contain a flagged circle. The first such
/// I in increasing bitmask order is returned.
pub fn wn0_subset_exists(windings: &[i64], split: Option<&[bool]>) -> SubsetSearch {
    let k = windings.len();
    // a pants or smaller holds no nonperipheral curve
    if k < 4 {
        return SubsetSearch { subset: None, reason: Some("no nonperipheral curves".into()) };
    }
    if k > 24 {
        return SubsetSearch { subset: None, reason: Some(format!("{k} circles exceed the exhaustive search limit")) };
    }
    let flags: u32 = match split {
        Some(f) => f.iter().enumerate().filter(|(_, &b)| b).fold(0, |m, (i, _)| m | 1 << i),
        None => 0,
    };
    let full = (1u32 << k) - 1;
    let mut sums = vec![0i64; 1 << k];
    for mask in 1..=full {
        let low = mask.trailing_zeros() as usize;
        sums[mask as usize] = sums[(mask & (mask - 1)) as usize] + windings[low];
        let size = mask.count_ones() as usize;
        if size < 2 || size > k - 2 {
            continue;
        }
        if split.is_some() && (mask & flags == 0 || !mask & full & flags == 0) {
            continue;
        }
        if sums[mask as usize] == 1 - size as i64 {
            let subset = (0..k).filter(|i| mask >> i & 1 == 1).collect();
            return SubsetSearch { subset: Some(subset), reason: None };
        }
    }
    SubsetSearch { subset: None, reason: None }
}

/// One circle of a complementary piece, oriented with the piece on its left.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PieceCircle {
    /// a curve of ∂W (index into the cut curves)
    Boundary { curve: usize, winding: i64 },
    Puncture { puncture: u32, winding: i64 },
}

impl PieceCircle {
    pub fn winding(&self) -> i64 {
        match self {
            PieceCircle::Boundary { winding, .. } | PieceCircle::Puncture { winding, .. } => *winding,
        }
    }
}

/// A component of S ∖ W, glued from components of S ∖ γ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementPiece {
    pub members: Vec<usize>,
    pub genus: u32,
    pub euler: i64,
    pub circles: Vec<PieceCircle>,
}

/// Components of the complement of component `w` of S ∖ γ.
pub fn complement_pieces(tri: &Triangulation, phi: &Framing, d: &ComplementDecomposition, w: usize) -> Vec<ComplementPiece> {
    let nc = d.components().len();
    let mut uf = UnionFind::<usize>::new(nc);
    for &(l, r) in d.curve_sides() {
        if l != w && r != w {
            uf.union(l, r);
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut pieces: Vec<ComplementPiece> = Vec::new();
    for c in 0..nc {
        if c == w {
            continue;
        }
        let root = uf.find(c);
        let idx = match roots.iter().position(|&x| x == root) {
            Some(i) => i,
            None => {
                roots.push(root);
                pieces.push(ComplementPiece { members: Vec::new(), genus: 0, euler: 0, circles: Vec::new() });
                roots.len() - 1
            }
        };
        let data = &d.components()[c];
        let piece = &mut pieces[idx];
        piece.members.push(c);
        piece.euler += data.euler;
        for b in &data.boundary {
            if d.side(b.curve, !b.left) == w {
                let x = phi.winding(tri, &d.curves()[b.curve]);
                piece.circles.push(PieceCircle::Boundary { curve: b.curve, winding: if b.left { x } else { -x } });
            }
        }
        for &p in &data.punctures {
            piece.circles.push(PieceCircle::Puncture { puncture: p, winding: phi.signature()[p as usize] });
        }
    }
    for p in &mut pieces {
        let k = p.circles.len() as i64;
        p.genus = ((2 - k - p.euler) / 2) as u32;
    }
    pieces
}

/// Record of one clause of the witness test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseRecord {
    pub clause: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceTranscript {
    pub piece: ComplementPiece,
    pub subset: SubsetSearch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub witness: bool,
    /// first failing clause, or "witness"
    pub reason: String,
    pub clauses: Vec<ClauseRecord>,
    pub pieces: Vec<PieceTranscript>,
}

/// W is component `component` of S ∖ γ.
#[derive(Debug, Clone, Copy)]
pub struct WitnessQuery<'a> {
    pub gamma: &'a NormalMulticurve,
    pub component: usize,
    pub framing: &'a Framing,
}

pub fn is_witness(tri: &Triangulation, q: &WitnessQuery) -> Result<WitnessReport> {
    q.gamma.check_surface(tri)?;
    if q.framing.surface() != tri.surface() {
        return Err(Error::SurfaceMismatch(q.framing.surface(), tri.surface()));
    }
    if !q.gamma.peripheral_components(tri).is_empty() {
        return Err(Error::Precondition("γ has a peripheral component".into()));
    }
    let d = cut(tri, q.gamma)?;
    d.component(q.component)?;
    Ok(witness_in(tri, q.framing, &d, q.component))
}

/// The witness test on an existing decomposition.
pub fn witness_in(tri: &Triangulation, phi: &Framing, d: &ComplementDecomposition, w: usize) -> WitnessReport {
    let mut clauses = Vec::new();
    let fail = |clauses: Vec<ClauseRecord>, pieces, reason: &str| WitnessReport { witness: false, reason: reason.into(), clauses, pieces };
    let data = &d.components()[w];
    let proper = !d.curves().is_empty();
    clauses.push(ClauseRecord { clause: "proper".into(), passed: proper, detail: format!("{} cut curves", d.curves().len()) });
    if !proper {
        return fail(clauses, Vec::new(), "W must be a proper subsurface");
    }
    let xi = data.complexity();
    clauses.push(ClauseRecord { clause: "complexity".into(), passed: xi >= 1, detail: format!("ξ(W) = {xi}") });
    if xi < 1 {
        return fail(clauses, Vec::new(), "ξ(W) must be positive");
    }
    let mut boundary: Vec<usize> = data.boundary.iter().map(|b| b.curve).collect();
    boundary.sort();
    boundary.dedup();
    let admissible: Vec<usize> = boundary.iter().copied().filter(|&i| curve_is_admissible(tri, phi, &d.curves()[i])).collect();
    let a_ok = admissible.is_empty();
    clauses.push(ClauseRecord {
        clause: "a".into(),
        passed: a_ok,
        detail: if a_ok { "no boundary curve is admissible".into() } else { format!("admissible boundary curves {admissible:?}") },
    });
    if !a_ok {
        return fail(clauses, Vec::new(), "boundary curve is admissible");
    }
    let pieces = complement_pieces(tri, phi, d, w);
    let genus: Vec<u32> = pieces.iter().map(|p| p.genus).collect();
    let b_ok = genus.iter().all(|&g| g == 0);
    clauses.push(ClauseRecord { clause: "b".into(), passed: b_ok, detail: format!("complement genera {genus:?}") });
    let mut transcripts = Vec::with_capacity(pieces.len());
    if !b_ok {
        let t = pieces.into_iter().map(|piece| PieceTranscript { piece, subset: SubsetSearch { subset: None, reason: None } }).collect();
        return fail(clauses, t, "complement has genus, contains admissible curve");
    }
    let mut c_ok = true;
    let mut c_detail = String::from("no winding-0 nonseparating curve in the complement");
    for piece in pieces {
        let z: Vec<i64> = piece.circles.iter().map(|c| c.winding()).collect();
        let flags: Vec<bool> = piece.circles.iter().map(|c| matches!(c, PieceCircle::Boundary { .. })).collect();
        let s = wn0_subset_exists(&z, Some(&flags));
        if let (true, Some(i)) = (c_ok, &s.subset) {
            c_ok = false;
            c_detail = format!("subset {i:?} of windings {z:?} sums to 1 − |I|");
        }
        transcripts.push(PieceTranscript { piece, subset: s });
    }
    clauses.push(ClauseRecord { clause: "c".into(), passed: c_ok, detail: c_detail });
    if !c_ok {
        return fail(clauses, transcripts, "complement contains an admissible curve cutting off a subset");
    }
    WitnessReport { witness: true, reason: "witness".into(), clauses, pieces: transcripts }
}
