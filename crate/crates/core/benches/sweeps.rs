//! Parallel against sequential sweeps on the same inputs.

use std::sync::Arc;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use malcev_core::enveloping::Envelope;
use malcev_core::loops::{alternating5, group_rep_loop, CheckMode, GroupRep};
use malcev_core::malcev::{m2_table, malcev_check, o0, sl2, PlusMode};
use malcev_core::par;
use malcev_core::smash::SmashAlgebra;

const MODES: [(&str, bool); 2] = [("parallel", false), ("sequential", true)];

fn malcev_identity(c: &mut Criterion) {
    let alg = o0();
    let mut g = c.benchmark_group("malcev-identity-o0");
    for (name, seq) in MODES {
        par::set_sequential(seq);
        g.bench_function(name, |b| b.iter(|| malcev_check(&alg)));
    }
    par::set_sequential(false);
    g.finish();
}

fn moufang_hopf(c: &mut Criterion) {
    let alg = Arc::new(sl2());
    let mut g = c.benchmark_group("moufang-hopf-sl2");
    g.sample_size(10);
    for deg in [3, 4] {
        for (name, seq) in MODES {
            par::set_sequential(seq);
            // fresh envelope per iteration, so the memo tables start empty
            g.bench_with_input(BenchmarkId::new(name, deg), &deg, |b, &d| {
                b.iter(|| {
                    let env = Envelope::build(&alg, PlusMode::SemisimpleLie, d).unwrap();
                    env.moufang_hopf_check(d)
                })
            });
        }
    }
    par::set_sequential(false);
    g.finish();
}

fn smash_paths(c: &mut Criterion) {
    let env = Arc::new(Envelope::build(&Arc::new(sl2()), PlusMode::SemisimpleLie, 2).unwrap());
    let rep = m2_table(env.algebra()).unwrap();
    let mut g = c.benchmark_group("smash-product-paths-sl2-m2");
    g.sample_size(10);
    for (name, seq) in MODES {
        par::set_sequential(seq);
        g.bench_function(name, |b| {
            b.iter(|| SmashAlgebra::build(env.clone(), &rep, 2).unwrap().product_paths_check())
        });
    }
    par::set_sequential(false);
    g.finish();
}

fn loop_sweeps(c: &mut Criterion) {
    let g5 = alternating5();
    let v = GroupRep::deleted_permutation(&g5, 2).unwrap();
    let w = GroupRep::trivial(&g5, 1, 2).unwrap();
    let e = group_rep_loop(&v, &w).unwrap();
    let mut g = c.benchmark_group("moufang-elements-a5-960");
    g.sample_size(10).measurement_time(Duration::from_secs(20));
    for (name, seq) in MODES {
        par::set_sequential(seq);
        g.bench_function(name, |b| b.iter(|| e.table.moufang_elements(CheckMode::Exhaustive)));
    }
    par::set_sequential(false);
    g.finish();
}

fn o0_envelope(c: &mut Criterion) {
    let alg = Arc::new(o0());
    let mut g = c.benchmark_group("envelope-precompute-o0");
    g.sample_size(10);
    for (name, seq) in MODES {
        par::set_sequential(seq);
        g.bench_function(name, |b| {
            b.iter(|| {
                let env = Envelope::build(&alg, PlusMode::MultiplicationAlgebra, 3).unwrap();
                env.precompute().unwrap();
                env
            })
        });
    }
    par::set_sequential(false);
    g.finish();
}

criterion_group!(benches, malcev_identity, moufang_hopf, smash_paths, loop_sweeps, o0_envelope);
criterion_main!(benches);
