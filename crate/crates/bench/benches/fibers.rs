//! Fiber pavings, exceptional classifications and dot actions.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use liehess::hessfibers::{classify_quintuples_exceptional, fiber_paving};
use liehess::dot_action_all;
use liehess_bench::{ideals, orbits, structure_table};

fn g2_fiber_grid(c: &mut Criterion) {
    let st = structure_table("G2");
    let orbits = orbits(&st);
    let ideals = ideals(&st);
    c.bench_function("G2 fiber grid", |b| {
        b.iter(|| {
            let mut cells = 0;
            for ctx in &orbits {
                for ideal in &ideals {
                    cells += fiber_paving(black_box(&st), ctx, ideal).unwrap().cells.len();
                }
            }
            cells
        })
    });
}

fn exceptional(c: &mut Criterion) {
    let mut group = c.benchmark_group("classification");
    group.sample_size(10);
    for label in ["F4", "E6"] {
        let st = structure_table(label);
        let ctx = orbits(&st).remove(0);
        group.bench_function(label, |b| {
            b.iter(|| classify_quintuples_exceptional(black_box(&st), &ctx).unwrap().subspaces.len())
        });
    }
    group.finish();
}

fn dot_actions(c: &mut Criterion) {
    let st = structure_table("G2");
    let mut group = c.benchmark_group("dot_action");
    group.sample_size(10);
    group.bench_function("G2 all ideals", |b| b.iter(|| dot_action_all(black_box(&st)).unwrap().len()));
    group.finish();
}

criterion_group!(benches, g2_fiber_grid, exceptional, dot_actions);
criterion_main!(benches);
