//! Shared fixtures for the benchmarks.

use mfkit::catalog::{CatalogKind, WeierstrassCurve};
use mfkit::mf::MatrixFactorization;
use mfkit::{FieldSpec, ModuleGens, Over};

/// The curve `Y^2 Z = X^3 + Z^3` over the given field.
pub fn curve(field: FieldSpec) -> WeierstrassCurve {
    WeierstrassCurve::from_ints(field, 0, 1).expect("smooth curve")
}

/// Catalog entry for the point `(2, 3)`.
pub fn point_mf(c: &WeierstrassCurve) -> MatrixFactorization {
    let p = c.point(2, 3).expect("point on curve");
    c.catalog_mf(&CatalogKind::Point(p)).expect("catalog entry")
}

/// Catalog entry for `O(2e + p)` at `(2, 3)`, the largest template.
pub fn big_mf(c: &WeierstrassCurve) -> MatrixFactorization {
    let p = c.point(2, 3).expect("point on curve");
    c.catalog_mf(&CatalogKind::LB2ePlusP(p)).expect("catalog entry")
}

/// Column module of the structure sheaf's `alpha` over the hypersurface ring.
pub fn gb_input(c: &WeierstrassCurve) -> ModuleGens {
    let o = c.catalog_mf(&CatalogKind::StructureSheaf).expect("catalog entry");
    ModuleGens::from_columns(&o.alpha, Over::Hypersurface(c.f.clone()))
}
