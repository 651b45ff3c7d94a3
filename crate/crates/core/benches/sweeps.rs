use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use sdm::algebra::{enumerate_with, heterogenize, validate, Flags};
use sdm::inductive::{inequalities_over_one_variable, is_analytic_inductive_with};
use sdm::syntax::{translate, Formula, Sequent};
use sdm::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_smas");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 6), &6, |b, &n| {
            b.iter(|| enumerate_with(exec, n, &Flags::new()).unwrap().len())
        });
    }
    g.finish();
}

fn translation_sweep(c: &mut Criterion) {
    let algebras: Vec<_> = enumerate_with(Exec::Sequential, 5, &Flags::new())
        .unwrap()
        .iter()
        .map(|a| heterogenize(a).unwrap())
        .collect();
    let fs = Formula::enumerate(&["p", "q"], 2);
    let goals: Vec<Sequent> = fs
        .iter()
        .flat_map(|a| fs.iter().map(move |b| Sequent::new(translate(a), translate(b))))
        .collect();
    let mut g = c.benchmark_group("validate_sweep");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| {
                exec.map(&goals, |s| {
                    algebras.iter().filter(|h| validate(s, h).unwrap().is_valid()).count()
                })
            })
        });
    }
    g.finish();
}

fn classifier(c: &mut Criterion) {
    let ineqs = inequalities_over_one_variable(2);
    let mut g = c.benchmark_group("classify_all");
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| {
                ineqs
                    .iter()
                    .filter(|(l, r)| is_analytic_inductive_with(black_box(l), r, exec).is_some())
                    .count()
            })
        });
    }
    g.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = enumeration, translation_sweep, classifier
}
criterion_main!(benches);
