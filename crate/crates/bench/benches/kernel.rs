use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use kappachain::lemma_lab::{iterated_midchord, midchord_length};
use kappachain::{
    solve_sas, solve_sss, spherical_excess, walk, Curvature, Heading, SurfacePoint, Triangle,
};

fn solvers(c: &mut Criterion) {
    let k1 = Curvature::UNIT_SPHERE;
    let tri = Triangle::new(0.8, 1.0, 1.2, k1).unwrap();
    c.bench_function("solve_sss sphere", |b| {
        b.iter(|| solve_sss(black_box(&tri)))
    });
    let flat = tri.with_curvature(Curvature::PLANE).unwrap();
    c.bench_function("solve_sss plane", |b| {
        b.iter(|| solve_sss(black_box(&flat)))
    });
    c.bench_function("solve_sas sphere", |b| {
        b.iter(|| solve_sas(black_box(1.0), black_box(1.2), black_box(0.7), k1))
    });
    c.bench_function("spherical_excess", |b| {
        b.iter(|| spherical_excess(black_box(&tri)))
    });
    let start = SurfacePoint::origin(k1);
    let h = Heading::canonical(k1);
    c.bench_function("walk sphere", |b| {
        b.iter(|| walk(&start, &h, black_box(1.3), k1))
    });
    c.bench_function("midchord_length", |b| {
        b.iter(|| midchord_length(black_box(&tri)))
    });
    c.bench_function("iterated_midchord 25", |b| {
        b.iter(|| iterated_midchord(black_box(&tri), 25))
    });
}

criterion_group!(benches, solvers);
criterion_main!(benches);
