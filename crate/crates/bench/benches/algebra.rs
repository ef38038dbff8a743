use criterion::{criterion_group, criterion_main, Criterion};
use mfkit::hom::{is_stably_isomorphic, stable_hom_basis};
use mfkit::{groebner_basis, FieldSpec};
use mfkit_bench::{big_mf, curve, gb_input, point_mf};

fn groebner(c: &mut Criterion) {
    for (name, field) in [("QQ", FieldSpec::Rationals), ("F_101", FieldSpec::Prime(101))] {
        let gens = gb_input(&curve(field));
        c.bench_function(&format!("groebner/structure-sheaf/{name}"), |b| {
            b.iter(|| groebner_basis(&gens).unwrap())
        });
    }
}

fn resolution(c: &mut Criterion) {
    let k = curve(FieldSpec::Rationals).residue_field();
    c.bench_function("resolution/residue-field/5", |b| {
        b.iter(|| k.minimal_resolution(5).unwrap())
    });
}

fn hom(c: &mut Criterion) {
    let cv = curve(FieldSpec::Rationals);
    let (small, big) = (point_mf(&cv), big_mf(&cv));
    c.bench_function("hom/point-to-big/shift-0", |b| {
        b.iter(|| stable_hom_basis(&small, &big, 0).unwrap())
    });
    c.bench_function("iso/big-self", |b| {
        b.iter(|| is_stably_isomorphic(&big, &big, 0).unwrap())
    });
}

criterion_group! {
    name = algebra;
    config = Criterion::default().sample_size(10);
    targets = groebner, resolution, hom
}
criterion_main!(algebra);
