use proptest::prelude::*;

use framed_core::framing::{arf1_by_enumeration, arf1_formula, arf_formula, component_windings, framing_from_gsb, invariants, same_orbit, Framing};
use framed_core::surface_core::cut::cut;
use framed_core::surface_core::enumerate::{enumerate_curves, enumerate_multicurves, WeightBound};
use framed_core::surface_core::intersection::algebraic_words;
use framed_core::surface_core::twist::twist_curve;
use framed_core::{canonical_triangulation, Error, OrientedCurve, Triangulation};

fn zero(t: &Triangulation, sig: &[i64]) -> Framing {
    framing_from_gsb(t, &vec![0; 2 * t.surface().g as usize], sig).unwrap()
}

#[test]
fn input_validation() {
    let t = canonical_triangulation(3, 1).unwrap();
    assert!(matches!(framing_from_gsb(&t, &[0; 5], &[-5]), Err(Error::BasisLength { .. })));
    assert!(matches!(framing_from_gsb(&t, &[0; 6], &[-5, 0]), Err(Error::SignatureLength { .. })));
    assert!(matches!(framing_from_gsb(&t, &[0; 6], &[-4]), Err(Error::SignatureSum { got: -4, chi: -5 })));
}

#[test]
fn basis_values_are_reproduced() {
    let t = canonical_triangulation(3, 1).unwrap();
    let vals = [3, -1, 0, 7, 2, 2];
    let phi = framing_from_gsb(&t, &vals, &[-5]).unwrap();
    for (i, (a, b)) in t.gsb().iter().enumerate() {
        assert_eq!(phi.winding(&t, a), vals[2 * i]);
        assert_eq!(phi.winding(&t, b), vals[2 * i + 1]);
    }
}

#[test]
fn arf_one_examples() {
    assert_eq!(arf1_formula(2, 4, &[-1]), 2);
    assert_eq!(arf1_formula(3, 5, &[-1, -1]), 1);
    assert_eq!(arf1_formula(0, 0, &[-1]), 0);
    assert_eq!(arf1_formula(0, 6, &[2]), 3);
}

#[test]
fn arf_one_enumeration_matches_formula() {
    let t = canonical_triangulation(1, 1).unwrap();
    for (x, y) in [(2, 4), (0, 3), (6, 9), (1, 0)] {
        let phi = framing_from_gsb(&t, &[x, y], &[-1]).unwrap();
        let (v, _) = arf1_by_enumeration(&t, &phi, 8, 64);
        assert_eq!(v, arf1_formula(x, y, &[-1]), "({x}, {y})");
    }
    let t = canonical_triangulation(1, 2).unwrap();
    let phi = framing_from_gsb(&t, &[3, 5], &[-1, -1]).unwrap();
    assert_eq!(arf1_by_enumeration(&t, &phi, 8, 64).0, 1);
}

#[test]
fn arf_examples() {
    assert_eq!(arf_formula(&[0, 0, 0, 0, 0, 0]), 1);
    assert_eq!(arf_formula(&[1, 0, 0, 0, 0, 0]), 0);
    assert_eq!(arf_formula(&[1, 1, 1, 1, 1, 1]), 0);
    let t = canonical_triangulation(3, 1).unwrap();
    let phi = zero(&t, &[-5]);
    assert!(phi.is_spin_type() && phi.is_holomorphic_type());
    assert_eq!(phi.arf_from_basis(), 1);
    assert!(!framing_from_gsb(&t, &[0; 6], &[-5]).unwrap().signature().iter().any(|&s| s >= 0));
}

#[test]
fn orbit_classification() {
    let t = canonical_triangulation(3, 1).unwrap();
    let f = invariants(&t, &zero(&t, &[-5]));
    let g = invariants(&t, &framing_from_gsb(&t, &[2, 0, 0, 0, 0, 0], &[-5]).unwrap());
    let h = invariants(&t, &framing_from_gsb(&t, &[1, 0, 0, 0, 0, 0], &[-5]).unwrap());
    assert!(same_orbit(&f, &g).unwrap());
    assert!(!same_orbit(&f, &h).unwrap());
    let t2 = canonical_triangulation(3, 2).unwrap();
    let k = invariants(&t2, &zero(&t2, &[-3, -3]));
    assert!(same_orbit(&f, &k).is_err());
    // not of spin type: only the signature matters
    let a = invariants(&t2, &zero(&t2, &[-2, -4]));
    let b = invariants(&t2, &framing_from_gsb(&t2, &[1, 0, 0, 0, 0, 0], &[-2, -4]).unwrap());
    assert!(a.arf.is_none() && same_orbit(&a, &b).unwrap());
}

fn curves(t: &Triangulation) -> Vec<OrientedCurve> {
    enumerate_curves(t, WeightBound::Total(10))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reversal_negates(i in 0usize..300, v in proptest::collection::vec(-4i64..=4, 6)) {
        let t = canonical_triangulation(3, 1).unwrap();
        let phi = framing_from_gsb(&t, &v, &[-5]).unwrap();
        let cs = curves(&t);
        let c = &cs[i % cs.len()];
        prop_assert_eq!(phi.winding(&t, &c.reversed(&t)), -phi.winding(&t, c));
    }

    #[test]
    fn twist_linearity(i in 0usize..300, j in 0usize..300, k in -3i64..=3, v in proptest::collection::vec(-4i64..=4, 6)) {
        let t = canonical_triangulation(3, 1).unwrap();
        let phi = framing_from_gsb(&t, &v, &[-5]).unwrap();
        let cs = curves(&t);
        let (a, b) = (&cs[i % cs.len()], &cs[j % cs.len()]);
        let tb = twist_curve(&t, b, a, k);
        let expect = phi.winding(&t, b) + k * algebraic_words(&t, b, a) * phi.winding(&t, a);
        prop_assert_eq!(phi.winding(&t, &tb), expect);
    }

    #[test]
    fn coherence(i in 0usize..400, v in proptest::collection::vec(-4i64..=4, 6), s in -6i64..=0) {
        let t = canonical_triangulation(3, 2).unwrap();
        let sig = [s, -6 - s];
        let phi = framing_from_gsb(&t, &v, &sig).unwrap();
        let ms = enumerate_multicurves(&t, WeightBound::Total(8), |m| !m.has_duplicates());
        let m = &ms[i % ms.len()];
        let d = cut(&t, m).unwrap();
        for (u, c) in d.components().iter().enumerate() {
            let (bw, pw) = component_windings(&t, &phi, &d, u).unwrap();
            prop_assert_eq!(bw.iter().chain(&pw).sum::<i64>(), c.euler);
        }
    }

    #[test]
    fn arf_is_twist_invariant(j in 0usize..300, v in proptest::collection::vec(-3i64..=3, 6)) {
        let t = canonical_triangulation(3, 1).unwrap();
        let phi = framing_from_gsb(&t, &v, &[-5]).unwrap();
        let cs = curves(&t);
        let c = &cs[j % cs.len()];
        // pull back φ along T_c: the basis values after twisting
        let moved: Vec<i64> = t.gsb().iter().flat_map(|(x, y)| [x, y]).map(|x| phi.winding(&t, &twist_curve(&t, x, c, 1))).collect();
        prop_assert_eq!(arf_formula(&moved), arf_formula(&v));
    }
}
