use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use skewpbw::oracle::{pbw_freeness_check, DEFAULT_WORD_CAP};
use skewpbw::{DoePresentation, Engine};
use skewpbw_bench::{presentation, random_element, reversed_powers};
use std::hint::black_box;

const ALGEBRAS: [&str; 4] = ["weyl_a2", "diffusion", "a1", "a3_doe"];

fn multiply(c: &mut Criterion) {
    let mut g = c.benchmark_group("multiply");
    for name in ALGEBRAS {
        let p = presentation(name);
        let u = random_element(&p, 1, 3, 4);
        let v = random_element(&p, 2, 3, 4);
        g.bench_function(BenchmarkId::new("random", name), |b| {
            // fresh engine each time so the memo table does not hide the cost
            b.iter(|| Engine::new(&p).unwrap().multiply(black_box(&u), black_box(&v)))
        });
        for n in [4, 8] {
            let (x2n, x1n) = reversed_powers(&p, n);
            g.bench_function(BenchmarkId::new(format!("x2^n*x1^n/{name}"), n), |b| {
                b.iter(|| Engine::new(&p).unwrap().multiply(black_box(&x2n), black_box(&x1n)))
            });
        }
    }
    g.finish();
}

fn consistency(c: &mut Criterion) {
    let mut g = c.benchmark_group("consistency");
    for name in ALGEBRAS {
        let data = presentation(name).data().clone();
        g.bench_function(name, |b| b.iter(|| DoePresentation::new(black_box(data.clone())).unwrap()));
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    for (name, n) in [("quantum_plane", 6), ("a1", 5), ("diffusion", 4), ("weyl_a2", 3)] {
        let p = presentation(name);
        g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
            b.iter(|| pbw_freeness_check(&p, n, DEFAULT_WORD_CAP).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, multiply, consistency, oracle);
criterion_main!(benches);
