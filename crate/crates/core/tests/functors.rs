use mfkit::catalog::{CatalogKind, CurvePoint, WeierstrassCurve};
use mfkit::hom::{
    duality_image, is_stably_isomorphic, picard_tensor, stable_hom_basis, twist_functor,
    TwistDirection,
};
use mfkit::mf::{extract_mf, ExtractMode, MatrixFactorization};
use mfkit::FieldSpec;

fn curve() -> WeierstrassCurve {
    WeierstrassCurve::from_ints(FieldSpec::Rationals, 0, 1).unwrap()
}

fn structure_sheaf(c: &WeierstrassCurve) -> MatrixFactorization {
    c.catalog_mf(&CatalogKind::StructureSheaf).unwrap()
}

fn assert_iso(m: &MatrixFactorization, n: &MatrixFactorization) {
    let out = is_stably_isomorphic(m, n, 11).unwrap();
    assert!(out.is_iso(), "{out:?}");
}

/// `Φ(O(e - p))` as the extension of `κ(e)` by `O(-p)`.
fn degree_zero_bundle(c: &WeierstrassCurve, p: &CurvePoint) -> MatrixFactorization {
    let pe = c.catalog_mf(&CatalogKind::PointE).unwrap();
    let lp = c.catalog_mf(&CatalogKind::LBminusP(p.clone())).unwrap();
    let ext = stable_hom_basis(&pe, &lp, -1).unwrap();
    assert_eq!(ext.stable_dim, 1);
    ext.basis[0].cone().unwrap().reduce()
}

#[test]
fn twist_fixes_structure_sheaf() {
    let c = curve();
    let o = structure_sheaf(&c);
    let t = twist_functor(&o, &o, TwistDirection::Forward).unwrap();
    assert_iso(&t, &o);
}

#[test]
fn twist_and_inverse_cancel_on_points() {
    let c = curve();
    let o = structure_sheaf(&c);
    for p in [c.point(2, 3).unwrap(), CurvePoint::Infinity] {
        let k = c.point_mf(&p).unwrap();
        let there = twist_functor(&o, &k, TwistDirection::Forward).unwrap();
        let back = twist_functor(&o, &there, TwistDirection::Inverse).unwrap();
        assert_iso(&back, &k);
    }
}

#[test]
fn twist_is_identity_on_degree_zero_bundles() {
    let c = curve();
    let o = structure_sheaf(&c);
    for p in [c.point(0, 1).unwrap(), c.point(-1, 0).unwrap()] {
        let l = degree_zero_bundle(&c, &p);
        assert!(l.is_valid() && l.rank() > 0);
        let t = twist_functor(&o, &l, TwistDirection::Forward).unwrap();
        assert_iso(&t, &l);
        // not the structure sheaf itself
        assert!(is_stably_isomorphic(&l, &o, 1).unwrap().is_refuted());
    }
}

#[test]
fn point_sheaves_are_fixed_by_line_bundles() {
    let c = curve();
    let o = structure_sheaf(&c);
    let p = c.point(2, 3).unwrap();
    let k = c.point_mf(&p).unwrap();
    assert_iso(&picard_tensor(&o, &k, -1).unwrap(), &k);
    assert_iso(&picard_tensor(&o, &k, 1).unwrap(), &k);
}

#[test]
fn line_bundle_of_minus_point_is_shifted_point() {
    let c = curve();
    for p in [c.point(2, 3).unwrap(), c.point(0, -1).unwrap()] {
        let lp = c.catalog_mf(&CatalogKind::LBminusP(p.clone())).unwrap();
        let k = c.point_mf(&p).unwrap();
        assert_iso(&lp, &k.shift(-1).twist(1));
    }
    let le = c.catalog_mf(&CatalogKind::LBminusE).unwrap();
    let ke = c.point_mf(&CurvePoint::Infinity).unwrap();
    assert_iso(&le, &ke.shift(-1).twist(1));
}

#[test]
fn picard_lowers_degree_of_minus_e() {
    // O(-e) ⊗ O(-1) = O(-4e) has degree -4, so its factorisation has size at least 4
    let c = curve();
    let o = structure_sheaf(&c);
    let le = c.catalog_mf(&CatalogKind::LBminusE).unwrap();
    let down = picard_tensor(&o, &le, -1).unwrap();
    assert!(down.is_valid() && down.is_reduced());
    assert!(down.rank() >= 4, "rank {}", down.rank());
    assert_iso(&picard_tensor(&o, &down, 1).unwrap(), &le);
}

#[test]
fn duality_squares_to_identity() {
    let c = curve();
    let o = structure_sheaf(&c);
    for x in [
        c.point_mf(&c.point(0, 1).unwrap()).unwrap(),
        c.catalog_mf(&CatalogKind::LBminusE).unwrap(),
    ] {
        let dd = duality_image(&o, &duality_image(&o, &x).unwrap()).unwrap();
        assert_iso(&dd, &x);
    }
}

#[test]
fn iso_is_reflexive_and_symmetric_on_catalog() {
    let c = curve();
    let p = c.point(2, 3).unwrap();
    let objs: Vec<MatrixFactorization> = WeierstrassCurve::all_kinds(&[p])
        .iter()
        .map(|k| c.catalog_mf(k).unwrap())
        .collect();
    for a in &objs {
        assert!(is_stably_isomorphic(a, a, 0).unwrap().is_iso());
    }
    for (i, a) in objs.iter().enumerate() {
        for b in &objs[i + 1..] {
            let ab = is_stably_isomorphic(a, b, 0).unwrap();
            let ba = is_stably_isomorphic(b, a, 0).unwrap();
            assert_eq!(ab.is_iso(), ba.is_iso());
            assert_eq!(ab.is_refuted(), ba.is_refuted());
        }
    }
}

#[test]
fn extracted_point_is_iso_to_twisted_catalog_entry_only_at_zero_twist() {
    let c = curve();
    let p = c.point(0, 1).unwrap();
    let ex = extract_mf(&c.point_module(&p).unwrap(), ExtractMode::Point).unwrap();
    let cat = c.point_mf(&p).unwrap();
    assert_iso(&ex, &cat);
    assert!(is_stably_isomorphic(&ex, &cat.twist(1), 0).unwrap().is_refuted());
}

#[test]
fn trivial_summands_do_not_matter() {
    let c = curve();
    let m = c.point_mf(&c.point(2, 3).unwrap()).unwrap();
    let triv = c.catalog_mf(&CatalogKind::Trivial).unwrap();
    assert_iso(&m.direct_sum(&triv).unwrap().reduce(), &m);
}

#[test]
fn shift_range_guard_holds_for_catalog() {
    let c = curve();
    let o = structure_sheaf(&c);
    let p = c.point(2, 3).unwrap();
    for k in WeierstrassCurve::all_kinds(&[p]) {
        let x = c.catalog_mf(&k).unwrap();
        for i in [-4, 4] {
            assert_eq!(stable_hom_basis(&o, &x, i).unwrap().stable_dim, 0, "{k:?} at {i}");
        }
    }
}
