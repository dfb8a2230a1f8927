//! A multicurve of g + 1 nonseparating curves cutting S into two genus-0
//! witnesses, together with a framing that makes both sides witnesses.

use serde::{Deserialize, Serialize};

use super::{witness_in, WitnessReport};
use crate::error::{Error, Result};
use crate::framing::{framing_from_gsb, Framing};
use crate::surface_core::cut::{cut, BoundaryCircle};
use crate::surface_core::multicurve::word_is_simple;
use crate::surface_core::neighborhood::{cut_off, Circle};
use crate::surface_core::{canonical_triangulation, NormalMulticurve, OrientedCurve, SurfaceType, Triangulation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatCertificate {
    pub surface: SurfaceType,
    pub framing: Framing,
    pub alpha: NormalMulticurve,
    /// the curves of α as exit words, oriented with W⁺ on the left
    pub alpha_words: Vec<Vec<u32>>,
    pub w_plus: usize,
    pub w_minus: usize,
    /// punctures placed in W⁺ (those with φ(Δ) ≥ 0)
    pub plus_punctures: Vec<u32>,
    /// φ of the curves of α, oriented with W⁺ on the left
    pub x: Vec<i64>,
    pub w_plus_report: WitnessReport,
    pub w_minus_report: WitnessReport,
}

/// The explicit construction: α = a_1, …, a_g of the stored basis plus a
/// curve cutting off their left sides and the punctures of nonnegative
/// winding. Then x_i = i(2K + 1) with K = Σ|φ(Δ_j)|, and x_{g+1} is fixed by
/// homological coherence on W⁺.
pub fn find_disjoint_flat(g: u32, n: u32, signature: &[i64], arf: Option<u8>) -> Result<FlatCertificate> {
    if g < 3 {
        return Err(Error::GenusTooSmall { need: 3, have: g });
    }
    if n == 0 {
        return Err(Error::Precondition("framings need at least one puncture".into()));
    }
    let tri = canonical_triangulation(g, n)?;
    if signature.len() != n as usize {
        return Err(Error::SignatureLength { got: signature.len(), n: n as usize });
    }
    let chi = tri.surface().euler();
    let total: i64 = signature.iter().sum();
    if total != chi {
        return Err(Error::SignatureSum { got: total, chi });
    }
    let a: Vec<OrientedCurve> = tri.gsb().iter().map(|(a, _)| a.clone()).collect();
    let base = NormalMulticurve::from_curves(&tri, &a)?;
    let d = cut(&tri, &base)?;
    let plus_punctures: Vec<u32> = (0..n).filter(|&j| signature[j as usize] >= 0).collect();
    let mut targets: Vec<Circle> = a
        .iter()
        .map(|c| {
            let idx = d.curves().iter().position(|x| *x == c.unoriented(&tri)).expect("basis curve is cut");
            Circle::Boundary(BoundaryCircle { curve: idx, left: d.curves()[idx] == *c })
        })
        .collect();
    targets.extend(plus_punctures.iter().map(|&p| Circle::Puncture(p)));
    let last = cut_off(&tri, &base, &targets)?;
    let mut curves = a.clone();
    curves.push(last);
    let alpha = NormalMulticurve::from_curves(&tri, &curves)?;

    let k = plus_punctures.len() as i64;
    let big_k: i64 = signature.iter().map(|x| x.abs()).sum();
    let mut x: Vec<i64> = (1..=g as i64).map(|i| i * (2 * big_k + 1)).collect();
    let plus_sig: i64 = plus_punctures.iter().map(|&p| signature[p as usize]).sum();
    let last_x = 1 - g as i64 - k - x.iter().sum::<i64>() - plus_sig;
    let mut y = vec![0i64; g as usize];
    let spin = signature.iter().all(|s| s.rem_euclid(2) == 1);
    if let Some(want) = arf {
        if !spin {
            return Err(Error::Precondition("Arf is only defined for spin type".into()));
        }
        let vals: Vec<i64> = x.iter().zip(&y).flat_map(|(a, b)| [*a, *b]).collect();
        if crate::framing::arf_formula(&vals) != want % 2 {
            // (x_i + 1) odd lets y_i toggle the sum
            let i = x.iter().position(|v| v % 2 == 0).ok_or_else(|| Error::Construction("no even x_i to pin Arf".into()))?;
            y[i] = 1;
        }
    }
    let vals: Vec<i64> = x.iter().zip(&y).flat_map(|(a, b)| [*a, *b]).collect();
    let framing = framing_from_gsb(&tri, &vals, signature)?;
    x.push(last_x);
    build_certificate(&tri, framing, alpha, plus_punctures, x)
}

fn build_certificate(
    tri: &Triangulation,
    framing: Framing,
    alpha: NormalMulticurve,
    plus_punctures: Vec<u32>,
    x: Vec<i64>,
) -> Result<FlatCertificate> {
    let d = cut(tri, &alpha)?;
    if d.components().len() != 2 {
        return Err(Error::Construction("α does not cut S in two".into()));
    }
    let a1 = &tri.gsb()[0].0;
    let i1 = d.curves().iter().position(|c| *c == a1.unoriented(tri)).ok_or_else(|| Error::Construction("a_1 missing from α".into()))?;
    let w_plus = d.side(i1, d.curves()[i1] == *a1);
    let w_minus = 1 - w_plus;
    // orient every curve of α with W⁺ on its left, in basis order then the last
    let mut alpha_words = Vec::new();
    for (a, _) in tri.gsb() {
        alpha_words.push(a.word().to_vec());
    }
    for (i, c) in d.curves().iter().enumerate() {
        let is_basis = tri.gsb().iter().any(|(a, _)| a.unoriented(tri) == *c);
        if !is_basis {
            let w = if d.side(i, true) == w_plus { c.clone() } else { c.reversed(tri) };
            alpha_words.push(w.word().to_vec());
        }
    }
    let w_plus_report = witness_in(tri, &framing, &d, w_plus);
    let w_minus_report = witness_in(tri, &framing, &d, w_minus);
    Ok(FlatCertificate {
        surface: tri.surface(),
        framing,
        alpha,
        alpha_words,
        w_plus,
        w_minus,
        plus_punctures,
        x,
        w_plus_report,
        w_minus_report,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub ok: bool,
    pub checks: Vec<(String, bool)>,
    pub first_failure: Option<String>,
}

/// Re-derives everything in a certificate from its framing and α.
pub fn verify_certificate(cert: &FlatCertificate) -> Result<VerifyReport> {
    let s = cert.surface;
    let tri = canonical_triangulation(s.g, s.n)?;
    let phi = cert.framing.clone().rehydrate(&tri)?;
    let alpha = cert.alpha.clone().rehydrate(&tri)?;
    let d = cut(&tri, &alpha)?;
    let mut checks: Vec<(String, bool)> = Vec::new();
    let g = s.g as usize;
    checks.push(("α has g + 1 curves".into(), alpha.component_count() == g + 1 && cert.alpha_words.len() == g + 1 && cert.x.len() == g + 1));
    checks.push(("two complementary components".into(), d.components().len() == 2 && cert.w_plus < 2 && cert.w_minus + cert.w_plus == 1));
    if checks.iter().all(|c| c.1) {
        let mut words_ok = true;
        let mut windings_ok = true;
        for (w, &xi) in cert.alpha_words.iter().zip(&cert.x) {
            if !word_is_simple(&tri, w) {
                words_ok = false;
                continue;
            }
            let c = OrientedCurve::from_word(w.clone());
            let Some(i) = d.curves().iter().position(|x| *x == c.unoriented(&tri)) else {
                words_ok = false;
                continue;
            };
            let left = d.curves()[i] == c;
            if d.side(i, left) != cert.w_plus {
                words_ok = false;
            }
            if phi.winding(&tri, &c) != xi {
                windings_ok = false;
            }
        }
        checks.push(("α words oriented with W⁺ on the left".into(), words_ok));
        checks.push(("x matches the framing".into(), windings_ok));
        let plus = &d.components()[cert.w_plus];
        let k = plus.punctures.len() as i64;
        let sig_plus: i64 = plus.punctures.iter().map(|&p| phi.signature()[p as usize]).sum();
        checks.push(("W⁺ holds exactly the listed punctures".into(), plus.punctures == cert.plus_punctures));
        let lhs = cert.x.iter().sum::<i64>() + sig_plus;
        checks.push(("coherence Σx + Σφ(Δ) = 1 − g − k".into(), lhs == 1 - g as i64 - k));
        checks.push(("genus 0 on both sides".into(), d.components().iter().all(|c| c.genus == 0)));
        let rp = witness_in(&tri, &phi, &d, cert.w_plus);
        let rm = witness_in(&tri, &phi, &d, cert.w_minus);
        checks.push(("W⁺ is a witness".into(), rp.witness));
        checks.push(("W⁻ is a witness".into(), rm.witness));
        checks.push(("stored transcripts match".into(), rp == cert.w_plus_report && rm == cert.w_minus_report));
    }
    let first_failure = checks.iter().find(|c| !c.1).map(|c| c.0.clone());
    Ok(VerifyReport { ok: first_failure.is_none(), checks, first_failure })
}
