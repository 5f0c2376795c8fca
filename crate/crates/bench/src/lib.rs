use std::hint::black_box;

use criterion::Criterion;
use s6q_core::exactfield::ratio;
use s6q_core::groebner::{buchberger, quotient_graded_dim};
use s6q_core::multipoly::{build_pencil_quartic, restrict_to_hyperplane};
use s6q_core::pencil::{cubic_space, nodes, PencilMember};
use s6q_core::{run_certificate, MonomialOrder};

pub fn benchmarks(c: &mut Criterion) {
    let mut group = c.benchmark_group("groebner");
    group.sample_size(10);
    for (label, t) in [
        ("t=1", ratio(1, 1)),
        ("t=7/3", ratio(7, 3)),
        ("t=2", ratio(2, 1)),
    ] {
        let f = restrict_to_hyperplane(&build_pencil_quartic(&t));
        let gens = f.gradient();
        group.bench_function(format!("jacobian_basis/{label}"), |b| {
            b.iter(|| buchberger(black_box(&gens), MonomialOrder::Grevlex))
        });
    }
    let gb = PencilMember::new(ratio(1, 1)).jacobian_basis().clone();
    group.bench_function("hilbert_r7", |b| {
        b.iter(|| quotient_graded_dim(black_box(&gb), 7))
    });
    group.finish();

    let mut group = c.benchmark_group("linear_algebra");
    group.bench_function("cubics_through_nodes", |b| {
        b.iter(|| cubic_space(black_box(nodes())))
    });
    group.finish();

    let mut group = c.benchmark_group("certificate");
    group.sample_size(10);
    for (label, t) in [("t=1", ratio(1, 1)), ("t=10/7", ratio(10, 7))] {
        group.bench_function(label, |b| b.iter(|| run_certificate(black_box(&t))));
    }
    group.finish();
}
