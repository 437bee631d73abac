use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use zeromargin::{
    basis_vmn, enumerate_latin, expand, magic_basis, markov_walk, sudoku_basis, ContingencyTable,
    Marginals,
};

fn bench_basis_construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("basis");
    group.bench_function("vmn_8x8", |b| b.iter(|| basis_vmn(8, 8).unwrap()));
    group.bench_function("magic_8", |b| b.iter(|| magic_basis(8).unwrap()));
    group.bench_function("sudoku_9", |b| b.iter(|| sudoku_basis(3).unwrap()));
    group.finish();
}

fn bench_expand(c: &mut Criterion) {
    let basis = basis_vmn(5, 5).unwrap();
    let square = enumerate_latin(5).unwrap().into_iter().next().unwrap();
    let zeroed = square.zeroed();
    c.bench_function("expand_zeroed_order_5", |b| {
        b.iter(|| expand(&zeroed, &basis).unwrap())
    });
}

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_latin_4", |b| b.iter(|| enumerate_latin(4).unwrap()));
}

fn bench_walk(c: &mut Criterion) {
    let marginals = Marginals::from_counts(&[8, 8, 8, 8], &[8, 8, 8, 8]).unwrap();
    let start = ContingencyTable::northwest(&marginals).unwrap();
    c.bench_function("walk_1000_steps_4x4", |b| {
        b.iter_batched(
            || start.clone(),
            |s| markov_walk(&s, 1000, 17),
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(
    benches,
    bench_basis_construction,
    bench_expand,
    bench_enumeration,
    bench_walk
);
criterion_main!(benches);
