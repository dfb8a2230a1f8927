use std::str::FromStr;

use framed_core::framing::{framing_from_gsb, Framing};
use framed_core::graphs::{
    admissible_curves, build_graph, flip_adjacent, genus_separating_curves, is_genus_separating, is_k_vertex, p_set, pi_projection,
    psi_construct, psi_member, surgery_chain, surgery_reduce, theta, GraphKind, GraphSnapshot,
};
use framed_core::surface_core::enumerate::{enumerate_curves, WeightBound};
use framed_core::surface_core::intersection::geometric_words;
use framed_core::surface_core::neighborhood::neighborhood_boundary;
use framed_core::surface_core::twist::twist_curve;
use framed_core::witness::curve_is_admissible;
use framed_core::{canonical_triangulation, Error, NormalMulticurve, OrientedCurve, Triangulation};

fn setup() -> (Triangulation, Framing) {
    let t = canonical_triangulation(3, 1).unwrap();
    let phi = framing_from_gsb(&t, &[0; 6], &[-5]).unwrap();
    (t, phi)
}

fn single(t: &Triangulation, c: &OrientedCurve) -> NormalMulticurve {
    NormalMulticurve::from_curves(t, std::slice::from_ref(c)).unwrap()
}

/// ∂N(a_i ∪ b_i), cutting off the i-th handle.
fn handle_curve(t: &Triangulation, i: usize) -> OrientedCurve {
    let (a, b) = t.gsb()[i].clone();
    neighborhood_boundary(t, &[a, b]).unwrap().boundary.single().unwrap().clone()
}

#[test]
fn kind_names_round_trip() {
    for k in [GraphKind::Cadm, GraphKind::GenusSep, GraphKind::ModelK, GraphKind::ModelKbar, GraphKind::EGraph] {
        assert_eq!(GraphKind::from_str(k.name()).unwrap(), k);
    }
    assert!(GraphKind::from_str("curve_graph").is_err());
}

#[test]
fn small_genus_rejected() {
    let t = canonical_triangulation(2, 1).unwrap();
    let phi = framing_from_gsb(&t, &[0; 4], &[-3]).unwrap();
    assert!(matches!(build_graph(&t, GraphKind::Cadm, &phi, 8), Err(Error::GenusTooSmall { need: 3, have: 2 })));
}

#[test]
fn cadm_vertices_and_edges_against_direct_checks() {
    let (t, phi) = setup();
    let g = build_graph(&t, GraphKind::Cadm, &phi, 12).unwrap();
    assert!(!g.is_empty());
    let cs: Vec<OrientedCurve> = g.vertices.iter().map(|v| v.single().unwrap().clone()).collect();
    for c in &cs {
        assert_eq!(phi.winding(&t, c), 0);
        assert!(curve_is_admissible(&t, &phi, c));
    }
    for u in 0..cs.len() {
        for v in u + 1..cs.len() {
            let adjacent = g.neighbours(u).contains(&v);
            assert_eq!(adjacent, geometric_words(&t, &cs[u], &cs[v]) == 0);
        }
    }
}

#[test]
fn snapshot_exports() {
    let (t, phi) = setup();
    let g = build_graph(&t, GraphKind::Cadm, &phi, 10).unwrap();
    let back = GraphSnapshot::from_json(&t, &g.to_json()).unwrap();
    assert_eq!(back, g);
    let dot = g.to_dot();
    assert!(dot.starts_with("graph cadm {"));
    assert_eq!(dot.matches(" -- ").count(), g.edges.len());
    let csv = g.distance_csv();
    let n = g.len();
    assert_eq!(csv.lines().next(), Some("source,target,distance,bound"));
    assert_eq!(csv.lines().count(), 1 + n * (n - 1) / 2);
    assert!(GraphSnapshot::from_json(&t, "{not json").is_err());
}

#[test]
fn distances_are_a_metric() {
    let (t, phi) = setup();
    let g = build_graph(&t, GraphKind::Cadm, &phi, 12).unwrap();
    let n = g.len().min(40);
    for u in 0..n {
        assert_eq!(g.distance(u, u).unwrap(), Some(0));
        for v in 0..n {
            assert_eq!(g.distance(u, v).unwrap(), g.distance(v, u).unwrap());
            for w in 0..n {
                if let (Some(a), Some(b), Some(c)) = (g.distance(u, v).unwrap(), g.distance(v, w).unwrap(), g.distance(u, w).unwrap()) {
                    assert!(c <= a + b);
                }
            }
        }
    }
    assert!(g.distance(0, g.len()).is_err());
}

#[test]
fn genus_separating_curves_are_k_vertices() {
    let (t, phi) = setup();
    let k = build_graph(&t, GraphKind::ModelK, &phi, 12).unwrap();
    let gs = genus_separating_curves(&t, 12);
    assert!(!gs.is_empty());
    for c in &gs {
        assert!(k.index_of(&single(&t, c)).is_some());
    }
    for i in 0..3 {
        assert!(is_genus_separating(&t, &handle_curve(&t, i)));
    }
    assert!(!is_genus_separating(&t, &t.gsb()[0].0));
}

#[test]
fn disjoint_admissible_curves_are_close_in_k() {
    let (t, phi) = setup();
    let k = build_graph(&t, GraphKind::ModelK, &phi, 12).unwrap();
    let adm = admissible_curves(&t, &phi, 8);
    let mut checked = 0;
    for (i, a) in adm.iter().enumerate() {
        for b in &adm[i + 1..] {
            if geometric_words(&t, a, b) != 0 {
                continue;
            }
            let pair = NormalMulticurve::from_curves(&t, &[a.clone(), b.clone()]).unwrap();
            if pair.has_duplicates() || k.index_of(&pair).is_none() {
                continue;
            }
            let d = k.distance_between(&single(&t, a), &single(&t, b)).unwrap();
            assert!(d.is_some_and(|d| d <= 2));
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn k_vertex_rules() {
    let (t, phi) = setup();
    assert!(is_k_vertex(&t, &phi, &single(&t, &t.gsb()[0].0)).unwrap());
    assert!(is_k_vertex(&t, &phi, &single(&t, &handle_curve(&t, 0))).unwrap());
    assert!(!is_k_vertex(&t, &phi, &NormalMulticurve::empty(&t)).unwrap());
    // S ∖ {a_1, a_2, a_3} is connected, and its boundary curves have φ = 0
    let a: Vec<OrientedCurve> = t.gsb().iter().map(|p| p.0.clone()).collect();
    let m = NormalMulticurve::from_curves(&t, &a).unwrap();
    assert!(is_k_vertex(&t, &phi, &m).unwrap());
}

#[test]
fn flips_in_a_one_holed_torus() {
    let (t, _) = setup();
    let (a1, b1) = t.gsb()[0].clone();
    let c = handle_curve(&t, 0);
    // a_1 and b_1 live in the torus cut off by c and meet once
    assert!(flip_adjacent(&t, std::slice::from_ref(&c), &a1, &b1).unwrap());
    let a2 = t.gsb()[1].0.clone();
    assert!(!flip_adjacent(&t, &[c], &a1, &a2).unwrap());
}

#[test]
fn pi_projection_checks() {
    let (t, phi) = setup();
    assert!(matches!(pi_projection(&t, &phi, &t.gsb()[0].0, 10), Err(Error::Precondition(_))));
    let c = handle_curve(&t, 0);
    let p = pi_projection(&t, &phi, &c, 12).unwrap();
    assert!(!p.image.is_empty());
    for v in &p.image {
        let a = v.single().unwrap();
        assert!(curve_is_admissible(&t, &phi, a));
        assert_eq!(geometric_words(&t, a, &c), 0);
    }
}

#[test]
fn surgery_preconditions_and_chain() {
    let (t, _) = setup();
    let c = handle_curve(&t, 0);
    let a1 = t.gsb()[0].0.clone();
    assert!(surgery_reduce(&t, &c, &a1).is_err());
    // a_1 lies in the handle, disjoint from c
    assert!(surgery_reduce(&t, &a1, &c).is_err());
    let curves = enumerate_curves(&t, WeightBound::Total(8));
    let x = curves.iter().find(|x| geometric_words(&t, x, &c) > 0).unwrap();
    let moved = twist_curve(&t, &c, x, 1);
    assert!(is_genus_separating(&t, &moved));
    let a = curves.iter().find(|y| (1..=6).contains(&geometric_words(&t, y, &moved))).unwrap().clone();
    for start in [&moved] {
        let chain = surgery_chain(&t, &a, start).unwrap();
        assert_eq!(chain[0], start.unoriented(&t));
        for w in chain.windows(2) {
            assert!(geometric_words(&t, &a, &w[1]) < geometric_words(&t, &a, &w[0]));
            assert_eq!(geometric_words(&t, &w[0], &w[1]), 0);
        }
        for x in &chain {
            assert!(is_genus_separating(&t, x));
        }
        assert_eq!(geometric_words(&t, &a, chain.last().unwrap()), 0);
    }
}

#[test]
fn psi_on_large_k_vertices() {
    let (t, phi) = setup();
    let k = build_graph(&t, GraphKind::ModelK, &phi, 10).unwrap();
    let most = k.vertices.iter().map(|v| v.component_count()).max().unwrap();
    let mut seen = 0;
    for alpha in k.vertices.iter().filter(|v| v.component_count() == most).take(10) {
        let c = psi_construct(&t, &phi, alpha).unwrap();
        assert!(is_genus_separating(&t, &c));
        assert!(psi_member(&t, &phi, alpha, &c).unwrap());
        seen += 1;
    }
    assert!(seen > 0);
    let a = single(&t, &t.gsb()[0].0);
    assert!(psi_member(&t, &phi, &a, &t.gsb()[1].0).is_err());
}

#[test]
fn theta_of_a_single_curve_sees_it() {
    let (t, phi) = setup();
    let a = t.gsb()[0].0.clone();
    let mu = single(&t, &a);
    let p = p_set(&t, &phi, &mu, 8).unwrap();
    assert_eq!(p.first(), Some(&mu));
    let target = build_graph(&t, GraphKind::Cadm, &phi, 12).unwrap();
    let th = theta(&t, &phi, &mu, 8, 4, &target).unwrap();
    assert!(th.image.contains(&mu));
    assert!(th.diameter_in_target.is_some());
}
