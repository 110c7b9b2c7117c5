use std::hint::black_box;

use bruhat_forge::arrangements::{r_poly_graph, ChamberContext, InversionGraph};
use bruhat_forge::bp::complete_bp;
use bruhat_forge::patterns::{classify, parse_perm};
use bruhat_forge::staircase::{enumerate_diagrams, series_coefficients, DiagramFilter, SeriesName, SeriesSpec};
use bruhat_forge::{CoxeterSystem, Family};
use criterion::{criterion_group, criterion_main, Criterion};

fn poincare(c: &mut Criterion) {
    let sys = CoxeterSystem::new(Family::A, 5).unwrap();
    let w0 = sys.longest_element(sys.generators()).unwrap();
    c.bench_function("poincare w0 in S6", |b| b.iter(|| black_box(&w0).poincare()));
}

fn chambers(c: &mut Criterion) {
    let sys = CoxeterSystem::new(Family::D, 4).unwrap();
    let ctx = ChamberContext::new(&sys).unwrap();
    let w0 = sys.longest_element(sys.generators()).unwrap();
    c.bench_function("R_w0 chambers in D4", |b| b.iter(|| ctx.r_poly(black_box(&w0)).unwrap()));
    let g = InversionGraph::from_perm(&parse_perm("654321").unwrap());
    c.bench_function("R acyclic orientations K6", |b| b.iter(|| r_poly_graph(black_box(&g))));
}

fn patterns(c: &mut Criterion) {
    let sys = CoxeterSystem::new(Family::A, 5).unwrap();
    let all = sys.enumerate(None).unwrap();
    let perms: Vec<Vec<usize>> = all.iter().map(|w| w.one_line().unwrap()).collect();
    c.bench_function("classify S6", |b| b.iter(|| perms.iter().filter(|p| classify(p).smooth).count()));
    c.bench_function("complete_bp S6", |b| b.iter(|| all.iter().filter(|w| complete_bp(w).is_some()).count()));
}

fn staircase(c: &mut Criterion) {
    let sys = CoxeterSystem::new(Family::A, 5).unwrap();
    c.bench_function("diagrams over A5", |b| {
        b.iter(|| enumerate_diagrams(black_box(&sys), DiagramFilter::All).unwrap().len())
    });
    let spec = SeriesSpec::new(SeriesName::AffineA);
    c.bench_function("affine series 200 terms", |b| b.iter(|| series_coefficients(&spec, 200).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = poincare, chambers, patterns, staircase
}
criterion_main!(benches);
