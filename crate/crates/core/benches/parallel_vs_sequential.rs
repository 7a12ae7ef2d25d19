use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use liecas::catalog::load_builtin;
use liecas::exact::{int, nullspace_with, RationalMatrix};
use liecas::invariants::invariant_space_with;
use liecas::Parallelism;

const POLICIES: [(&str, Parallelism); 2] = [
    ("sequential", Parallelism::Sequential),
    ("parallel", Parallelism::Parallel),
];

fn invariant_spaces(c: &mut Criterion) {
    let mut group = c.benchmark_group("invariant_space");
    group.sample_size(10);
    for (name, d) in [("extended_galilei", 3), ("extended_poincare_hbar", 4)] {
        let l = load_builtin(name).unwrap().algebra;
        for (label, par) in POLICIES {
            group.bench_with_input(
                BenchmarkId::new(label, format!("{name}/d{d}")),
                &par,
                |b, &par| b.iter(|| invariant_space_with(&l, d, par)),
            );
        }
    }
    group.finish();
}

/// Block-diagonal integer matrix, so the nullspace splits into independent
/// blocks.
fn block_matrix(blocks: usize, size: usize) -> RationalMatrix {
    let n = blocks * size;
    let mut m = RationalMatrix::zeros(n, n + blocks);
    for k in 0..blocks {
        for i in 0..size {
            for j in 0..=size {
                let v = ((7 * i + 3 * j + k) % 11) as i64 - 5;
                m.set(k * size + i, k * (size + 1) + j, int(v)).unwrap();
            }
        }
    }
    m
}

fn nullspaces(c: &mut Criterion) {
    let mut group = c.benchmark_group("nullspace");
    let m = block_matrix(32, 12);
    for (label, par) in POLICIES {
        group.bench_function(label, |b| b.iter(|| nullspace_with(&m, par)));
    }
    group.finish();
}

fn jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi");
    let l = load_builtin("extended_poincare").unwrap().algebra;
    for (label, par) in POLICIES {
        group.bench_function(label, |b| b.iter(|| l.jacobi_check_with(par)));
    }
    group.finish();
}

criterion_group!(benches, invariant_spaces, nullspaces, jacobi);
criterion_main!(benches);
