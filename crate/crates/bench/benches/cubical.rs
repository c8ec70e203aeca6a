use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rooted_cubes::verify::{check_theorem1, run_named};
use rooted_cubes::{boundary_matrix, cubes, homology_of, smith_normal_form};
use rooted_cubes_bench::{power_set, rooted_samples};

fn cube_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("cubes");
    for n in [4, 6, 8] {
        let full = power_set(n);
        group.bench_with_input(BenchmarkId::new("power_set", n), &full, |b, f| b.iter(|| cubes(f)));
    }
    let sparse = rooted_samples(10, 8, 0.3);
    group.bench_function("rooted_n10", |b| {
        b.iter(|| sparse.iter().map(|f| cubes(f).len()).sum::<usize>())
    });
    group.finish();
}

fn homology(c: &mut Criterion) {
    let mut group = c.benchmark_group("homology");
    group.sample_size(20);
    for n in [3, 4, 5] {
        let full = power_set(n);
        group.bench_with_input(BenchmarkId::new("power_set", n), &full, |b, f| {
            b.iter(|| homology_of(f))
        });
    }
    let complex = cubes(&power_set(5));
    let d2 = boundary_matrix(&complex, 2).unwrap();
    group.bench_function("snf_d2_n5", |b| b.iter(|| smith_normal_form(&d2)));
    let rooted = rooted_samples(6, 16, 0.6);
    group.bench_function("rooted_n6", |b| {
        b.iter(|| rooted.iter().filter(|f| homology_of(f).acyclic).count())
    });
    group.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    group.bench_function("theorem1_n3", |b| b.iter(|| check_theorem1(3).unwrap()));
    group.bench_function("duality_n5", |b| b.iter(|| run_named("duality", 5, 200, 1).unwrap()));
    group.finish();
}

criterion_group!(benches, cube_enumeration, homology, sweeps);
criterion_main!(benches);
