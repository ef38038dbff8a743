//! JSON envelopes for factorisations, morphisms, presentations and catalog
//! exports. Polynomials travel as strings in the usual grammar.

use serde::{Deserialize, Serialize};

use crate::catalog::{CatalogKind, CurvePoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::Over;
use crate::hom::{HomBasis, MFMorphism};
use crate::matrix::GradedMatrix;
use crate::mf::MatrixFactorization;
use crate::poly::PolyRing;
use crate::resolution::{Presentation, Resolution};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingJson {
    pub vars: Vec<String>,
    pub field: String,
    pub char: u32,
}

impl RingJson {
    pub fn from_ring(r: &PolyRing) -> Self {
        RingJson {
            vars: r.vars.clone(),
            field: r.field.to_string(),
            char: r.field.characteristic(),
        }
    }

    pub fn to_ring(&self) -> Result<PolyRing> {
        let field: FieldSpec = self.field.parse()?;
        if field.characteristic() != self.char {
            return Err(Error::InvalidField(format!(
                "field `{}` has characteristic {}, not {}",
                self.field,
                field.characteristic(),
                self.char
            )));
        }
        PolyRing::new(field, self.vars.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MfJson {
    pub ring: RingJson,
    pub f: String,
    pub d: i64,
    pub p0_twists: Vec<i64>,
    pub p1_twists: Vec<i64>,
    pub alpha: Vec<Vec<String>>,
    pub beta: Vec<Vec<String>>,
}

impl MfJson {
    pub fn from_mf(m: &MatrixFactorization) -> Self {
        MfJson {
            ring: RingJson::from_ring(&m.ring),
            f: m.ring.format(&m.f),
            d: m.degree(),
            p0_twists: m.p0().to_vec(),
            p1_twists: m.p1().to_vec(),
            alpha: m.alpha.to_strings(&m.ring),
            beta: m.beta.to_strings(&m.ring),
        }
    }

    /// Parse and validate shapes and grading. The factorisation identity
    /// itself is left to `verify` so that broken inputs can be reported.
    pub fn to_mf(&self) -> Result<MatrixFactorization> {
        let ring = self.ring.to_ring()?;
        let f = ring.parse(&self.f)?;
        match f.degree() {
            Some(d) if d as i64 == self.d => {}
            _ => {
                return Err(Error::InconsistentDegrees(format!(
                    "`d` is {} but f has degree {:?}",
                    self.d,
                    f.degree()
                )))
            }
        }
        let alpha = GradedMatrix::from_strings(
            &ring,
            self.p1_twists.clone(),
            self.p0_twists.clone(),
            &self.alpha,
        )?;
        let beta = GradedMatrix::from_strings(
            &ring,
            self.p0_twists.iter().map(|t| t - self.d).collect(),
            self.p1_twists.clone(),
            &self.beta,
        )?;
        MatrixFactorization::new(ring, f, alpha, beta)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismJson {
    pub source: MfJson,
    pub target: MfJson,
    pub shift: i64,
    pub f0: Vec<Vec<String>>,
    pub f1: Vec<Vec<String>>,
}

impl MorphismJson {
    pub fn from_morphism(m: &MFMorphism) -> Self {
        let r = &m.target.ring;
        MorphismJson {
            source: MfJson::from_mf(&m.source),
            target: MfJson::from_mf(&m.target),
            shift: m.shift,
            f0: m.f0.to_strings(r),
            f1: m.f1.to_strings(r),
        }
    }

    pub fn to_morphism(&self) -> Result<MFMorphism> {
        let source = self.source.to_mf()?;
        let target = self.target.to_mf()?;
        if source.ring != target.ring {
            return Err(Error::RingMismatch("source and target rings differ".into()));
        }
        let shifted = source.shift(self.shift);
        let f0 = GradedMatrix::from_strings(
            &target.ring,
            target.p0().to_vec(),
            shifted.p0().to_vec(),
            &self.f0,
        )?;
        let f1 = GradedMatrix::from_strings(
            &target.ring,
            target.p1().to_vec(),
            shifted.p1().to_vec(),
            &self.f1,
        )?;
        MFMorphism::new(source, target, self.shift, f0, f1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub ring: RingJson,
    /// Potential when the module lives over `R/(f)`.
    pub f: Option<String>,
    pub generator_twists: Vec<i64>,
    pub relation_twists: Vec<i64>,
    pub relations: Vec<Vec<String>>,
}

impl PresentationJson {
    pub fn from_presentation(p: &Presentation) -> Self {
        PresentationJson {
            ring: RingJson::from_ring(&p.ring),
            f: p.over.potential().map(|f| p.ring.format(f)),
            generator_twists: p.relations.target_twists.clone(),
            relation_twists: p.relations.source_twists.clone(),
            relations: p.relations.to_strings(&p.ring),
        }
    }

    pub fn to_presentation(&self) -> Result<Presentation> {
        let ring = self.ring.to_ring()?;
        let over = match &self.f {
            Some(f) => Over::Hypersurface(ring.parse(f)?),
            None => Over::Poly,
        };
        let rel = GradedMatrix::from_strings(
            &ring,
            self.generator_twists.clone(),
            self.relation_twists.clone(),
            &self.relations,
        )?;
        Presentation::new(ring, over, rel)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResolutionJson {
    pub ring: RingJson,
    pub f: Option<String>,
    /// Twists of `F_0, F_1, ...`.
    pub twists: Vec<Vec<i64>>,
    /// `maps[k]` is the differential `F_{k+1} -> F_k`.
    pub maps: Vec<Vec<Vec<String>>>,
    pub minimal: bool,
    pub periodic_start: Option<usize>,
}

impl ResolutionJson {
    pub fn from_resolution(r: &Resolution) -> Self {
        ResolutionJson {
            ring: RingJson::from_ring(&r.ring),
            f: r.over.potential().map(|f| r.ring.format(f)),
            twists: r.twists(),
            maps: r.maps.iter().map(|m| m.to_strings(&r.ring)).collect(),
            minimal: r.minimal,
            periodic_start: r.periodic_tail.as_ref().map(|t| t.start),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomJson {
    pub shift: i64,
    pub strict_dim: usize,
    pub homotopy_dim: usize,
    pub stable_dim: usize,
    pub basis: Vec<MorphismJson>,
}

impl HomJson {
    pub fn from_basis(h: &HomBasis) -> Self {
        HomJson {
            shift: h.shift,
            strict_dim: h.strict_dim,
            homotopy_dim: h.homotopy_dim,
            stable_dim: h.stable_dim,
            basis: h.basis.iter().map(MorphismJson::from_morphism).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveJson {
    pub a: String,
    pub b: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointJson {
    Affine { lambda: String, mu: String },
    /// `"e"` for the point at infinity.
    Named(String),
}

impl PointJson {
    pub fn from_point(p: &CurvePoint) -> Self {
        match p {
            CurvePoint::Infinity => PointJson::Named("e".into()),
            CurvePoint::Affine(l, m) => PointJson::Affine {
                lambda: l.to_string(),
                mu: m.to_string(),
            },
        }
    }
}

/// One catalog export record: the envelope plus provenance metadata.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntryJson {
    pub kind: String,
    pub curve: CurveJson,
    pub point: Option<PointJson>,
    pub verified: bool,
    #[serde(flatten)]
    pub mf: MfJson,
}

impl CatalogEntryJson {
    pub fn new(curve: &WeierstrassCurve, kind: &CatalogKind, m: &MatrixFactorization) -> Self {
        let point = match kind {
            CatalogKind::PointE => Some(CurvePoint::Infinity),
            k => k.point().cloned(),
        };
        CatalogEntryJson {
            kind: kind.name().to_string(),
            curve: CurveJson {
                a: curve.a.to_string(),
                b: curve.b.to_string(),
            },
            point: point.as_ref().map(PointJson::from_point),
            verified: m.is_valid(),
            mf: MfJson::from_mf(m),
        }
    }
}

pub fn mf_to_string(m: &MatrixFactorization) -> String {
    serde_json::to_string_pretty(&MfJson::from_mf(m)).expect("serialisable")
}

pub fn mf_from_str(s: &str) -> Result<MatrixFactorization> {
    let j: MfJson = serde_json::from_str(s)?;
    j.to_mf()
}

pub fn morphism_from_str(s: &str) -> Result<MFMorphism> {
    let j: MorphismJson = serde_json::from_str(s)?;
    j.to_morphism()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Fixture;

    fn curve() -> WeierstrassCurve {
        WeierstrassCurve::from_ints(FieldSpec::Rationals, 0, 1).unwrap()
    }

    #[test]
    fn mf_round_trip() {
        let c = curve();
        let p = c.point(2, 3).unwrap();
        for k in [CatalogKind::Point(p.clone()), CatalogKind::LB2ePlusP(p), CatalogKind::Trivial] {
            let m = c.catalog_mf(&k).unwrap();
            let back = mf_from_str(&mf_to_string(&m)).unwrap();
            assert_eq!(back, m);
        }
    }

    #[test]
    fn mf_envelope_field_names() {
        let m = curve().catalog_mf(&CatalogKind::PointE).unwrap();
        let v: serde_json::Value = serde_json::from_str(&mf_to_string(&m)).unwrap();
        for key in ["ring", "f", "d", "p0_twists", "p1_twists", "alpha", "beta"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["ring"]["char"], 0);
        assert_eq!(v["d"], 3);
    }

    #[test]
    fn prime_field_round_trip() {
        let c = WeierstrassCurve::from_ints(FieldSpec::Prime(101), 0, 1).unwrap();
        let m = c.catalog_mf(&CatalogKind::StructureSheaf).unwrap();
        assert_eq!(mf_from_str(&mf_to_string(&m)).unwrap(), m);
    }

    #[test]
    fn morphism_round_trip() {
        let c = curve();
        let phi = c.fixture_morphism(Fixture::MinusEToE).unwrap();
        let s = serde_json::to_string(&MorphismJson::from_morphism(&phi)).unwrap();
        assert_eq!(morphism_from_str(&s).unwrap(), phi);
    }

    #[test]
    fn bad_degrees_reported() {
        let m = curve().catalog_mf(&CatalogKind::PointE).unwrap();
        let mut j = MfJson::from_mf(&m);
        j.alpha[0][0] = "X^2".into();
        let report = j.to_mf().unwrap().verify();
        assert_eq!(report.alpha_degrees.len(), 1);
        assert_eq!((report.alpha_degrees[0].row, report.alpha_degrees[0].col), (0, 0));
        let mut j = MfJson::from_mf(&m);
        j.d = 2;
        assert!(j.to_mf().is_err());
    }

    #[test]
    fn catalog_entry_flattens() {
        let c = curve();
        let k = CatalogKind::Point(c.point(2, 3).unwrap());
        let e = CatalogEntryJson::new(&c, &k, &c.catalog_mf(&k).unwrap());
        let v = serde_json::to_value(&e).unwrap();
        assert_eq!(v["kind"], "point");
        assert_eq!(v["verified"], true);
        assert_eq!(v["point"]["lambda"], "2");
        assert!(v.get("alpha").is_some());
        let back: CatalogEntryJson = serde_json::from_value(v).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn presentation_round_trip() {
        let p = curve().point_module(&CurvePoint::Infinity).unwrap();
        let j = PresentationJson::from_presentation(&p);
        let back = j.to_presentation().unwrap();
        assert_eq!(back.relations, p.relations);
    }
}
