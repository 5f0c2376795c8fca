use criterion::{criterion_group, criterion_main};

criterion_group!(benches, s6q_bench::benchmarks);
criterion_main!(benches);
