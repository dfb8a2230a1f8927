use proptest::prelude::*;

use framed_core::framing::framing_from_gsb;
use framed_core::surface_core::enumerate::{enumerate_curves, WeightBound};
use framed_core::witness::{curve_is_admissible, find_disjoint_flat, is_witness, verify_certificate, wn0_subset_exists, WitnessQuery};
use framed_core::{canonical_triangulation, Error, NormalMulticurve};

/// Plain enumeration of subsets, written without bit tricks shared with
/// the library.
fn oracle(z: &[i64], split: Option<&[bool]>) -> bool {
    let k = z.len();
    if k < 4 {
        return false;
    }
    let mut chosen = vec![false; k];
    loop {
        let size = chosen.iter().filter(|&&b| b).count();
        let sum: i64 = z.iter().zip(&chosen).filter(|p| *p.1).map(|p| *p.0).sum();
        let split_ok = split.is_none_or(|f| f.iter().zip(&chosen).any(|(&a, &b)| a && b) && f.iter().zip(&chosen).any(|(&a, &b)| a && !b));
        if size >= 2 && size + 2 <= k && sum == 1 - size as i64 && split_ok {
            return true;
        }
        let mut i = 0;
        while i < k && chosen[i] {
            chosen[i] = false;
            i += 1;
        }
        if i == k {
            return false;
        }
        chosen[i] = true;
    }
}

#[test]
fn subset_search_examples() {
    assert!(!wn0_subset_exists(&[-1, -1, -1, -1], None).found());
    assert!(wn0_subset_exists(&[0, -1, 0, -1], None).found());
    assert!(!wn0_subset_exists(&[5, -6], None).found());
    let s = wn0_subset_exists(&[0, -1, -3, 5, -2], None);
    let idx = s.subset.unwrap();
    let z = [0, -1, -3, 5, -2];
    assert_eq!(idx.iter().map(|&i| z[i]).sum::<i64>(), 1 - idx.len() as i64);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn subset_search_matches_oracle(z in proptest::collection::vec(-4i64..=3, 0..9), f in proptest::collection::vec(any::<bool>(), 9)) {
        let flags = &f[..z.len()];
        let got = wn0_subset_exists(&z, None);
        prop_assert_eq!(got.found(), oracle(&z, None));
        if let Some(i) = &got.subset {
            prop_assert_eq!(i.iter().map(|&j| z[j]).sum::<i64>(), 1 - i.len() as i64);
        }
        prop_assert_eq!(wn0_subset_exists(&z, Some(flags)).found(), oracle(&z, Some(flags)));
    }
}

#[test]
fn whole_surface_is_not_a_witness() {
    let t = canonical_triangulation(3, 1).unwrap();
    let phi = framing_from_gsb(&t, &[0; 6], &[-5]).unwrap();
    let empty = NormalMulticurve::empty(&t);
    let r = is_witness(&t, &WitnessQuery { gamma: &empty, component: 0, framing: &phi }).unwrap();
    assert!(!r.witness);
    assert_eq!(r.clauses[0].clause, "proper");
    let r = is_witness(&t, &WitnessQuery { gamma: &empty, component: 3, framing: &phi });
    assert!(r.is_err());
}

#[test]
fn admissible_boundary_fails_clause_a() {
    let t = canonical_triangulation(3, 1).unwrap();
    let phi = framing_from_gsb(&t, &[0; 6], &[-5]).unwrap();
    let a = &t.gsb()[0].0;
    assert!(curve_is_admissible(&t, &phi, a));
    let m = NormalMulticurve::from_curves(&t, std::slice::from_ref(a)).unwrap();
    let r = is_witness(&t, &WitnessQuery { gamma: &m, component: 0, framing: &phi }).unwrap();
    assert!(!r.witness);
    assert!(r.clauses.iter().any(|c| c.clause == "a" && !c.passed));
}

#[test]
fn admissibility_against_direct_winding() {
    let t = canonical_triangulation(3, 1).unwrap();
    let phi = framing_from_gsb(&t, &[1, 0, 2, -1, 0, 0], &[-5]).unwrap();
    for c in enumerate_curves(&t, WeightBound::Total(8)) {
        let m = NormalMulticurve::from_curves(&t, std::slice::from_ref(&c)).unwrap();
        let sep = framed_core::surface_core::cut::topological_type(&t, &m).unwrap().separating;
        assert_eq!(curve_is_admissible(&t, &phi, &c), !sep && phi.winding(&t, &c) == 0);
    }
}

#[test]
fn flat_certificates_verify() {
    for (g, n, sig) in [(3, 1, vec![-5]), (3, 2, vec![-2, -4]), (4, 1, vec![-7]), (3, 2, vec![1, -7])] {
        let c = find_disjoint_flat(g, n, &sig, None).unwrap();
        assert!(c.w_plus_report.witness && c.w_minus_report.witness);
        let r = verify_certificate(&c).unwrap();
        assert!(r.ok, "{:?}", r.first_failure);
        assert_eq!(c.x.len(), g as usize + 1);
    }
}

#[test]
fn perturbed_certificates_fail() {
    let c = find_disjoint_flat(3, 1, &[-5], None).unwrap();
    for i in 0..c.x.len() {
        let mut bad = c.clone();
        bad.x[i] -= 1;
        assert!(!verify_certificate(&bad).unwrap().ok);
    }
    let mut bad = c.clone();
    bad.alpha_words.pop();
    assert!(!verify_certificate(&bad).unwrap().ok);
    let mut bad = c;
    std::mem::swap(&mut bad.w_plus, &mut bad.w_minus);
    assert!(!verify_certificate(&bad).unwrap().ok);
}

#[test]
fn flat_arguments_checked() {
    assert!(matches!(find_disjoint_flat(2, 1, &[-3], None), Err(Error::GenusTooSmall { .. })));
    assert!(matches!(find_disjoint_flat(3, 1, &[-4], None), Err(Error::SignatureSum { .. })));
    assert!(matches!(find_disjoint_flat(3, 2, &[-5], None), Err(Error::SignatureLength { .. })));
    let c = find_disjoint_flat(3, 1, &[-5], Some(0)).unwrap();
    assert_eq!(c.framing.arf_from_basis(), 0);
}
