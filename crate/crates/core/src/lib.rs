//! Graded matrix factorisations over hypersurface rings `K[X, Y, Z]/(f)`.

pub mod catalog;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hom;
pub mod json;
pub mod linalg;
pub mod matrix;
pub mod mf;
pub mod poly;
pub mod resolution;

pub use catalog::{CatalogKind, CurvePoint, WeierstrassCurve};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use groebner::{groebner_basis, GroebnerBasis, ModuleGens, Over};
pub use matrix::GradedMatrix;
pub use poly::{Monomial, Poly, PolyRing};
