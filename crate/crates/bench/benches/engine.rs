use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use platjones::oracle::jones_polynomial;
use platjones::{Automaton, CouplingGraph, QContext, QRacahKey, Spin};
use platjones_bench::{cycling_word, half_spec};
use std::hint::black_box;

fn trefoil(c: &mut Criterion) {
    let spec = half_spec(4, 5);
    let automaton = Automaton::new(&spec).unwrap();
    let word = cycling_word(4, 3);
    c.bench_function("trefoil_eval", |b| b.iter(|| automaton.extended_jones(black_box(&word)).unwrap()));
}

fn words(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_word");
    for strands in [4usize, 6, 8] {
        let automaton = Automaton::new(&half_spec(strands, 8)).unwrap();
        let word = cycling_word(strands, 20);
        group.bench_with_input(BenchmarkId::from_parameter(strands), &word, |b, w| {
            b.iter(|| automaton.run(black_box(w)).unwrap())
        });
    }
    group.finish();
}

fn six_j(c: &mut Criterion) {
    let h = Spin::from_twice(3);
    let o = Spin::ONE;
    c.bench_function("six_j_uncached", |b| {
        b.iter(|| {
            let ctx = QContext::new(black_box(10)).unwrap();
            ctx.six_j(QRacahKey::new([h, h, o], [h, h, o]))
        })
    });
}

fn oracle(c: &mut Criterion) {
    let spec = half_spec(6, 5);
    let word = cycling_word(6, 12);
    c.bench_function("bracket_12_crossings", |b| b.iter(|| jones_polynomial(&spec, black_box(&word)).unwrap()));
}

fn graph(c: &mut Criterion) {
    c.bench_function("twist_graph_n4", |b| b.iter(|| CouplingGraph::build(black_box(4), true).unwrap().vertex_count()));
    c.bench_function("rotation_diameter_n7", |b| {
        b.iter(|| CouplingGraph::build(black_box(7), false).unwrap().diameter())
    });
}

criterion_group!(benches, trefoil, words, six_j, oracle, graph);
criterion_main!(benches);
