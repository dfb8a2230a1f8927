use criterion::{black_box, criterion_group, criterion_main, Criterion};

use framed_bench::{handle_curve, s31};
use framed_core::graphs::{build_graph, psi_construct, surgery_chain, GraphKind};
use framed_core::surface_core::cut::cut;
use framed_core::surface_core::enumerate::{enumerate_curves, WeightBound};
use framed_core::surface_core::intersection::geometric_words;
use framed_core::surface_core::twist::twist_curve;
use framed_core::witness::{find_disjoint_flat, witness_in};
use framed_core::NormalMulticurve;

fn curves(c: &mut Criterion) {
    let (t, _) = s31();
    c.bench_function("enumerate curves, total 12", |b| b.iter(|| enumerate_curves(&t, WeightBound::Total(black_box(12)))));
    let cs = enumerate_curves(&t, WeightBound::Total(10));
    c.bench_function("intersection of 100 pairs", |b| {
        b.iter(|| cs.iter().take(10).flat_map(|x| cs.iter().take(10).map(move |y| (x, y))).map(|(x, y)| geometric_words(&t, x, y)).sum::<u64>())
    });
    let (a, bb) = t.gsb()[0].clone();
    c.bench_function("twist T_a^3 b", |b| b.iter(|| twist_curve(&t, &bb, &a, black_box(3))));
}

fn witnesses(c: &mut Criterion) {
    let (t, phi) = s31();
    let a: Vec<_> = t.gsb().iter().map(|p| p.0.clone()).collect();
    let m = NormalMulticurve::from_curves(&t, &a).unwrap();
    let d = cut(&t, &m).unwrap();
    c.bench_function("witness test on S minus a_1, a_2, a_3", |b| b.iter(|| witness_in(&t, &phi, &d, 0)));
    c.bench_function("disjoint flat certificate (3,1)", |b| b.iter(|| find_disjoint_flat(3, 1, &[-5], None).unwrap()));
}

fn graphs(c: &mut Criterion) {
    let (t, phi) = s31();
    let mut g = c.benchmark_group("graphs");
    g.sample_size(10);
    g.bench_function("cadm, bound 16", |b| b.iter(|| build_graph(&t, GraphKind::Cadm, &phi, 16).unwrap()));
    g.bench_function("model_K, bound 10", |b| b.iter(|| build_graph(&t, GraphKind::ModelK, &phi, 10).unwrap()));
    let k = build_graph(&t, GraphKind::ModelK, &phi, 10).unwrap();
    let alpha = k.vertices.iter().max_by_key(|v| v.component_count()).unwrap().clone();
    g.bench_function("psi_construct on a large K-vertex", |b| b.iter(|| psi_construct(&t, &phi, &alpha).unwrap()));
    let c1 = handle_curve(&t, 0);
    let cs = enumerate_curves(&t, WeightBound::Total(8));
    let x = cs.iter().find(|x| geometric_words(&t, x, &c1) > 0).unwrap();
    let start = twist_curve(&t, &c1, x, 1);
    let a = cs.iter().find(|y| (1..=6).contains(&geometric_words(&t, y, &start))).unwrap().clone();
    g.bench_function("surgery chain", |b| b.iter(|| surgery_chain(&t, &a, &start).unwrap()));
    g.finish();
}

criterion_group!(benches, curves, witnesses, graphs);
criterion_main!(benches);
