use proptest::prelude::*;

use framed_core::surface_core::cut::{cut, topological_type};
use framed_core::surface_core::enumerate::{enumerate_curves, enumerate_multicurves, WeightBound};
use framed_core::surface_core::intersection::{algebraic_words, geometric_intersection, geometric_words};
use framed_core::surface_core::multicurve::{disjoint_weights, word_is_simple};
use framed_core::surface_core::twist::{twist, twist_curve, MappingClassWord};
use framed_core::{canonical_triangulation, Error, NormalMulticurve, OrientedCurve, Triangulation};

fn s31() -> Triangulation {
    canonical_triangulation(3, 1).unwrap()
}

fn pool(t: &Triangulation) -> Vec<OrientedCurve> {
    enumerate_curves(t, WeightBound::Total(10))
}

fn single(t: &Triangulation, c: &OrientedCurve) -> NormalMulticurve {
    NormalMulticurve::from_curves(t, std::slice::from_ref(c)).unwrap()
}

#[test]
fn hyperbolic_surfaces_only() {
    assert!(matches!(canonical_triangulation(0, 2), Err(Error::NotHyperbolic { .. })));
    assert!(matches!(canonical_triangulation(1, 0), Err(Error::NotHyperbolic { .. })));
    assert!(canonical_triangulation(0, 4).is_ok());
}

#[test]
fn cut_examples() {
    let t = s31();
    let d = cut(&t, &NormalMulticurve::empty(&t)).unwrap();
    assert_eq!(d.components().len(), 1);
    assert_eq!(d.components()[0].genus, 3);
    assert_eq!(d.components()[0].punctures.len(), 1);

    let (a1, b1) = t.gsb()[0].clone();
    let d = cut(&t, &single(&t, &a1)).unwrap();
    assert_eq!(d.components().len(), 1);
    assert_eq!(d.components()[0].genus, 2);
    assert_eq!(d.components()[0].boundary.len(), 2);
    assert!(!topological_type(&t, &single(&t, &a1)).unwrap().separating);

    let c = framed_core::surface_core::neighborhood::neighborhood_boundary(&t, &[a1, b1]).unwrap();
    let d = cut(&t, &c.boundary).unwrap();
    let total: u32 = d.components().iter().map(|x| x.genus).sum();
    assert_eq!(d.components().len(), 2);
    assert_eq!(total, 3);
}

#[test]
fn duplicate_components_rejected() {
    let t = s31();
    let a = &t.gsb()[0].0;
    let m = NormalMulticurve::from_weights(&t, a.weights(&t).iter().map(|w| 2 * w).collect()).unwrap();
    assert!(m.has_duplicates());
    assert_eq!(cut(&t, &m).unwrap_err(), Error::DuplicateComponents);
}

#[test]
fn twist_fixes_core_and_zero_power() {
    let t = s31();
    let (a, b) = t.gsb()[0].clone();
    let am = single(&t, &a);
    let bm = single(&t, &b);
    assert_eq!(twist(&t, &am, &am, 5).unwrap(), am);
    assert_eq!(twist(&t, &bm, &am, 0).unwrap(), bm);
    for k in -3i64..=3 {
        let c = twist_curve(&t, &b, &a, k);
        // i(a, b) = 1, so i(T_a^k b, b) = |k|
        assert_eq!(geometric_words(&t, &c, &b), k.unsigned_abs());
    }
}

#[test]
fn mapping_class_inverse() {
    let t = s31();
    let cs = pool(&t);
    let mut w = MappingClassWord::identity();
    for (i, c) in cs.iter().take(5).enumerate() {
        w.push(c.clone(), if i % 2 == 0 { 1 } else { -2 });
    }
    for c in cs.iter().step_by(7) {
        let back = w.inverse().apply_curve(&t, &w.apply_curve(&t, c));
        assert_eq!(back, *c);
    }
}

#[test]
fn enumeration_sizes_grow() {
    let t = s31();
    let small = enumerate_curves(&t, WeightBound::Total(6)).len();
    let large = enumerate_curves(&t, WeightBound::Total(10)).len();
    assert!(small > 0 && large > small);
    assert!(enumerate_multicurves(&t, WeightBound::Total(0), |_| true).is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn intersection_forms(i in 0usize..200, j in 0usize..200) {
        let t = s31();
        let cs = pool(&t);
        let (a, b) = (&cs[i % cs.len()], &cs[j % cs.len()]);
        let g = geometric_words(&t, a, b);
        let x = algebraic_words(&t, a, b);
        prop_assert_eq!(g, geometric_words(&t, b, a));
        prop_assert_eq!(x, -algebraic_words(&t, b, a));
        prop_assert!(x.unsigned_abs() <= g);
        prop_assert_eq!(x.rem_euclid(2) as u64, g % 2);
        prop_assert_eq!(g == 0, disjoint_weights(&t, &a.weights(&t), &b.weights(&t)));
        prop_assert_eq!(geometric_intersection(&t, &single(&t, a), &single(&t, b)).unwrap(), g);
    }

    #[test]
    fn twists_invert_and_stay_simple(i in 0usize..200, j in 0usize..200, k in -3i64..=3) {
        let t = s31();
        let cs = pool(&t);
        let (a, b) = (&cs[i % cs.len()], &cs[j % cs.len()]);
        let c = twist_curve(&t, b, a, k);
        prop_assert!(word_is_simple(&t, c.word()));
        prop_assert_eq!(twist_curve(&t, &c, a, -k), b.clone());
        prop_assert_eq!(geometric_words(&t, &c, a), geometric_words(&t, b, a));
        let i_ab = geometric_words(&t, a, b);
        prop_assert_eq!(geometric_words(&t, &c, b), k.unsigned_abs() * i_ab * i_ab);
    }

    #[test]
    fn euler_characteristic_is_additive(i in 0usize..400) {
        let t = s31();
        let ms = enumerate_multicurves(&t, WeightBound::Total(10), |m| !m.has_duplicates());
        let m = &ms[i % ms.len()];
        let d = cut(&t, m).unwrap();
        let chi: i64 = d.components().iter().map(|c| c.euler).sum();
        prop_assert_eq!(chi, t.surface().euler());
        let punctures: usize = d.components().iter().map(|c| c.punctures.len()).sum();
        prop_assert_eq!(punctures, 1);
    }
}
