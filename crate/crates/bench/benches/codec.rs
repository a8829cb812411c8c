use criterion::{black_box, criterion_group, criterion_main, Criterion};
use toughcert_bench::random_corpus;
use toughcert_cli::io::{parse_graph6, write_graph6};

fn bench_write(c: &mut Criterion) {
    let graphs = random_corpus(100, 30, 0.5);
    c.bench_function("graph6_write_100_n30", |b| {
        b.iter(|| {
            for g in &graphs {
                black_box(write_graph6(g).unwrap());
            }
        })
    });
}

fn bench_parse(c: &mut Criterion) {
    let lines: Vec<String> = random_corpus(100, 30, 0.5)
        .iter()
        .map(|g| write_graph6(g).unwrap())
        .collect();
    c.bench_function("graph6_parse_100_n30", |b| {
        b.iter(|| {
            for line in &lines {
                black_box(parse_graph6(line).unwrap());
            }
        })
    });
}

criterion_group!(codec, bench_write, bench_parse);
criterion_main!(codec);
