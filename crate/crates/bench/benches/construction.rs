use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use dcl_core::{
    build_ledger, count_totals, enumerate_cycles, materialize_subgraph, stream_subgraph,
    validate_params, Mode, ParamInput, SubgraphDescriptor, SubgraphKind,
};

fn params() -> dcl_core::Params {
    validate_params(ParamInput::R(1), None, Mode::Strict, false).unwrap()
}

fn bench_ledger(c: &mut Criterion) {
    let p = params();
    c.bench_function("build_ledger t=1429", |b| {
        b.iter(|| build_ledger(&p).unwrap())
    });
    c.bench_function("count_totals t=1429", |b| {
        b.iter(|| count_totals(&p).unwrap())
    });
}

fn bench_enumeration(c: &mut Criterion) {
    let d = SubgraphDescriptor {
        index: 30010,
        kind: SubgraphKind::ThreeCycleOdd { j: 0 },
    };
    let g = materialize_subgraph(&d, 1429).unwrap();
    c.bench_function("enumerate three-cycle subgraph (49k vertices)", |b| {
        b.iter(|| enumerate_cycles(&g, 1_000_000))
    });

    let ten = SubgraphDescriptor {
        index: 38584,
        kind: SubgraphKind::TenChord { i: 58 },
    };
    let mut group = c.benchmark_group("ten-chord");
    group.sample_size(10);
    group.bench_function("materialize + enumerate (347k vertices)", |b| {
        b.iter_batched(
            || materialize_subgraph(&ten, 1429).unwrap(),
            |g| enumerate_cycles(&g, 1_000_000),
            BatchSize::PerIteration,
        )
    });
    group.finish();
}

fn bench_streaming(c: &mut Criterion) {
    let p = params();
    let d = SubgraphDescriptor {
        index: 38584,
        kind: SubgraphKind::TenChord { i: 58 },
    };
    let mut group = c.benchmark_group("stream");
    group.sample_size(20);
    group.bench_function("ten-chord edge list to sink", |b| {
        b.iter(|| stream_subgraph(&p, &d, std::io::sink()).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_ledger, bench_enumeration, bench_streaming);
criterion_main!(benches);
