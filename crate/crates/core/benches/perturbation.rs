use std::hint::black_box;
use std::path::PathBuf;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use limelight::corpus::{build_vocabulary, load_corpus, prepare_dataset, PreprocessConfig};
use limelight::lime::{make_instance, predict_perturbations, predict_perturbations_sequential, sample_masks};
use limelight::mlp::init_model;

fn scoring(c: &mut Criterion) {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/mini_corpus");
    let categories = vec!["alt.atheism".to_string(), "soc.religion.christian".to_string()];
    let raw = load_corpus(&root, &categories).unwrap();
    let ds = prepare_dataset(&raw, &categories, &PreprocessConfig::default()).unwrap();
    let vocab = build_vocabulary(&ds.documents, 2, 0.9).unwrap();
    let model = init_model(vocab.len(), 64, 2, 0).unwrap();
    let tokens = ds
        .documents
        .iter()
        .max_by_key(|d| d.tokens.len())
        .unwrap()
        .tokens
        .clone();
    let instance = make_instance(&tokens, 0).unwrap();

    let mut group = c.benchmark_group("predict_perturbations");
    for n in [250, 1000, 4000] {
        let masks = sample_masks(instance.num_features(), n, 1);
        group.bench_with_input(BenchmarkId::new("parallel", n), &masks, |b, m| {
            b.iter(|| predict_perturbations(&model, &vocab, &instance, black_box(m)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sequential", n), &masks, |b, m| {
            b.iter(|| predict_perturbations_sequential(&model, &vocab, &instance, black_box(m)).unwrap())
        });
    }
    group.finish();

    c.bench_function("sample_masks/1000", |b| {
        b.iter(|| sample_masks(black_box(instance.num_features()), 1000, 1))
    });
}

criterion_group!(benches, scoring);
criterion_main!(benches);
