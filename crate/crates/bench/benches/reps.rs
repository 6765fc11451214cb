use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use crosscap_core::algebra::standard;
use crosscap_core::constraints::{greedy_solve, ConstraintSystem};
use crosscap_core::homology::{
    conjugacy_obstruction, derive_psi, rep_table, verify_relations, RepName,
};
use crosscap_core::mod2::{brute_force_isov, epsilon_word};
use crosscap_core::scenarios::{run_scenario, ScenarioId};
use crosscap_core::surface::{relations_for, Surface, Word};

fn tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("rep_table");
    for g in [6usize, 9, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(g), &g, |b, &g| {
            b.iter(|| rep_table(RepName::Psi1, black_box(g)).unwrap())
        });
    }
    group.finish();
    c.bench_function("derive_psi/8", |b| {
        b.iter(|| derive_psi(black_box(8), 2).unwrap())
    });
}

fn relations(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_relations");
    group.sample_size(20);
    for g in [5usize, 8, 12] {
        let table = rep_table(RepName::Psi2, g).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(g), &table, |b, t| {
            b.iter(|| verify_relations(t).unwrap())
        });
    }
    group.finish();
}

fn linear_algebra(c: &mut Criterion) {
    let m = standard::c(2, 12).unwrap();
    c.bench_function("char_poly/12", |b| {
        b.iter(|| black_box(&m).char_poly().unwrap())
    });
    c.bench_function("det/12", |b| b.iter(|| black_box(&m).det().unwrap()));
    let mut group = c.benchmark_group("conjugacy_obstruction");
    group.sample_size(10);
    group.bench_function("7", |b| {
        b.iter(|| conjugacy_obstruction(black_box(7)).unwrap())
    });
    group.finish();
}

fn symbolic(c: &mut Criterion) {
    let sys = ConstraintSystem::parse(&["x^2 - 1", "y - 2*x", "z^2 - y^2"]).unwrap();
    c.bench_function("greedy_solve", |b| {
        b.iter(|| greedy_solve(black_box(&sys), 16).unwrap())
    });
    let mut group = c.benchmark_group("scenario");
    group.sample_size(10);
    for id in ScenarioId::defaults() {
        group.bench_function(id.to_string(), |b| b.iter(|| run_scenario(id).unwrap()));
    }
    group.finish();
}

fn mod2(c: &mut Criterion) {
    let rels: Vec<Word> = relations_for(8, 0)
        .unwrap()
        .iter()
        .map(|r| r.relator())
        .collect();
    c.bench_function("epsilon/relators-8", |b| {
        b.iter(|| {
            rels.iter()
                .all(|w| epsilon_word(8, w).unwrap().is_identity())
        })
    });
    let w = Word::parse("d1 d2 d3 d4 d5 d6 d7 e2 e3 u7", Surface::closed(8)).unwrap();
    c.bench_function("epsilon/word", |b| {
        b.iter(|| epsilon_word(8, black_box(&w)).unwrap())
    });
    let mut group = c.benchmark_group("brute_force_isov");
    group.sample_size(10);
    group.bench_function("1", |b| b.iter(|| brute_force_isov(1).unwrap()));
    group.finish();
}

criterion_group!(benches, tables, relations, linear_algebra, symbolic, mod2);
criterion_main!(benches);
