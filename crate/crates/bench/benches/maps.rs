use std::f64::consts::PI;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use num_complex::Complex64;
use petal_core::maps::{boundary_trace, map_value};
use petal_core::special::gauss_2f1;
use petal_core::verify::conformality_check;
use petal_core::{Hyp2F1Params, MapFamily, TimeState};

fn hypergeometric(c: &mut Criterion) {
    let p = Hyp2F1Params::new(0.3, -0.45, 0.5).unwrap();
    let mut g = c.benchmark_group("gauss_2f1");
    for (name, t) in [
        ("series", Complex64::new(0.3, 0.2)),
        ("pfaff", Complex64::new(-0.9, 0.1)),
        ("continued", Complex64::new(0.85, 0.45)),
    ] {
        g.bench_function(name, |b| b.iter(|| gauss_2f1(p, black_box(t)).unwrap()));
    }
    g.finish();
}

fn maps(c: &mut Criterion) {
    let one = MapFamily::one_petal(3.0 * PI / 16.0).unwrap();
    let two = MapFamily::two_petal(PI / 8.0, PI / 16.0).unwrap();
    let w = Complex64::from_polar(1.0, 0.7);
    c.bench_function("one_petal_map", |b| b.iter(|| map_value(&one, black_box(w)).unwrap()));
    c.bench_function("two_petal_map", |b| b.iter(|| map_value(&two, black_box(w)).unwrap()));
    let state = TimeState::unit(1.0).unwrap();
    c.bench_function("two_petal_trace_2048", |b| b.iter(|| boundary_trace(&two, state, 2048).unwrap()));
}

fn conformality(c: &mut Criterion) {
    let two = MapFamily::two_petal(PI / 8.0, PI / 16.0).unwrap();
    let mut g = c.benchmark_group("conformality_check");
    g.sample_size(20);
    g.bench_function("two_petal_1024", |b| b.iter(|| conformality_check(&two, 1e-3, 1024).unwrap()));
    g.finish();
}

criterion_group!(benches, hypergeometric, maps, conformality);
criterion_main!(benches);
