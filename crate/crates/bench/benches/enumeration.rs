use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kummer_core::kummer::{ConstraintSet, KummerModel};
use kummer_core::GroupName;

fn enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_full");
    for name in GroupName::ALL {
        let model = KummerModel::new(name).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &model, |b, m| {
            b.iter(|| m.enumerate_configurations(ConstraintSet::FULL).unwrap())
        });
    }
    group.finish();

    let q12 = KummerModel::new(GroupName::Q12).unwrap();
    c.bench_function("enumerate_euler_q12_sequential", |b| {
        b.iter(|| q12.enumerate_configurations(ConstraintSet::EULER).unwrap())
    });
    c.bench_function("enumerate_euler_q12_parallel", |b| {
        b.iter(|| q12.enumerate_configurations_parallel(ConstraintSet::EULER).unwrap())
    });
}

fn build_models(c: &mut Criterion) {
    c.bench_function("model_t24", |b| b.iter(|| KummerModel::new(GroupName::T24).unwrap()));
}

criterion_group!(benches, enumerate, build_models);
criterion_main!(benches);
