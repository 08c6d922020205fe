use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use lyruns::runs::extract_runs;
use lyruns::{LyndonArray, SuffixContext, TwoPeriodIndex};
use lyruns_bench::{Kind, SIZES};

fn stages(c: &mut Criterion) {
    for kind in Kind::ALL {
        let mut group = c.benchmark_group(kind.name());
        group.sample_size(10);
        for n in SIZES {
            let text = kind.text(n);
            group.throughput(Throughput::Elements(n as u64));
            group.bench_with_input(BenchmarkId::new("suffix", n), &text, |b, t| {
                b.iter(|| SuffixContext::build(t).unwrap())
            });
            let ctx = SuffixContext::build(&text).unwrap();
            group.bench_with_input(BenchmarkId::new("lyndon", n), &ctx, |b, ctx| {
                b.iter(|| LyndonArray::compute(ctx))
            });
            let lyndon = LyndonArray::compute(&ctx);
            group.bench_with_input(BenchmarkId::new("runs", n), &ctx, |b, ctx| {
                b.iter(|| extract_runs(ctx, &lyndon))
            });
            let runs = extract_runs(&ctx, &lyndon);
            group.bench_with_input(BenchmarkId::new("trees", n), &ctx, |b, ctx| {
                b.iter(|| TwoPeriodIndex::from_parts(&text, ctx, &lyndon, runs.clone()).unwrap())
            });
            group.bench_with_input(BenchmarkId::new("end-to-end", n), &text, |b, t| {
                b.iter(|| lyruns::compute_all_runs(t).unwrap())
            });
        }
        group.finish();
    }
}

fn queries(c: &mut Criterion) {
    let text = Kind::Random.text(1 << 16);
    let index = TwoPeriodIndex::build(&text).unwrap();
    let n = text.len();
    c.bench_function("two-period query", |b| {
        let mut i = 1;
        b.iter(|| {
            i = i * 7919 % (n - 64) + 1;
            index.query(i, i + 63).unwrap()
        })
    });
}

criterion_group!(benches, stages, queries);
criterion_main!(benches);
