//! Weierstrass cubics `Y^2 Z = X^3 + a X Z^2 + b Z^3` and the explicit rank-one
//! matrix factorisations of their cones.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::groebner::Over;
use crate::hom::{stable_hom_basis, MFMorphism};
use crate::matrix::GradedMatrix;
use crate::mf::{extract_mf, ExtractMode, MatrixFactorization};
use crate::poly::{Monomial, Poly, PolyRing};
use crate::resolution::Presentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassCurve {
    pub ring: PolyRing,
    pub a: Scalar,
    pub b: Scalar,
    pub f: Poly,
}

impl WeierstrassCurve {
    /// Rejects singular cubics (`-4a^3 - 27b^2 = 0`).
    pub fn new(field: FieldSpec, a: Scalar, b: Scalar) -> Result<Self> {
        if !field.contains(&a) || !field.contains(&b) {
            return Err(Error::CoefficientNotInField(format!("{a}, {b} over {field}")));
        }
        let disc = &(&field.from_i64(-4) * &(&(&a * &a) * &a)) - &(&field.from_i64(27) * &(&b * &b));
        if disc.is_zero() {
            return Err(Error::SingularCurve);
        }
        let ring = PolyRing::xyz(field);
        let f = ring
            .parse(&substitute("Y^2*Z - X^3 - {a}*X*Z^2 - {b}*Z^3", &a, &b, None))
            .expect("cubic template parses");
        Ok(WeierstrassCurve { ring, a, b, f })
    }

    /// Recover `(a, b)` from a potential of the form `Y^2 Z - X^3 - aXZ^2 - bZ^3`.
    pub fn from_potential(ring: &PolyRing, f: &Poly) -> Result<Self> {
        let fl = ring.field;
        if *ring != PolyRing::xyz(fl) {
            return Err(Error::InvalidRing("Weierstrass cubics live in K[X, Y, Z]".into()));
        }
        let coeff = |e: [u16; 3]| -> Scalar {
            let m = Monomial::from_exponents(&e);
            f.terms()
                .iter()
                .find(|(t, _)| *t == m)
                .map(|(_, c)| c.clone())
                .unwrap_or_else(|| fl.zero())
        };
        let a = -&coeff([1, 0, 2]);
        let b = -&coeff([0, 0, 3]);
        let curve = WeierstrassCurve::new(fl, a, b)?;
        if &curve.f != f {
            return Err(Error::Invalid(format!(
                "{} is not of the form Y^2*Z - X^3 - a*X*Z^2 - b*Z^3",
                ring.format(f)
            )));
        }
        Ok(curve)
    }

    pub fn from_ints(field: FieldSpec, a: i64, b: i64) -> Result<Self> {
        WeierstrassCurve::new(field, field.from_i64(a), field.from_i64(b))
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field
    }

    pub fn discriminant(&self) -> Scalar {
        let fl = self.field();
        &(&fl.from_i64(-4) * &(&(&self.a * &self.a) * &self.a))
            - &(&fl.from_i64(27) * &(&self.b * &self.b))
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(l, m) => {
                let rhs = &(&(&(l * l) * l) + &(&self.a * l)) + &self.b;
                &(m * m) == &rhs
            }
        }
    }

    pub fn check_point(&self, p: &CurvePoint) -> Result<()> {
        if let CurvePoint::Affine(l, m) = p {
            if !self.field().contains(l) || !self.field().contains(m) {
                return Err(Error::CoefficientNotInField(p.to_string()));
            }
        }
        if !self.contains(p) {
            return Err(Error::PointNotOnCurve(p.to_string()));
        }
        Ok(())
    }

    pub fn point(&self, l: i64, m: i64) -> Result<CurvePoint> {
        let p = CurvePoint::Affine(self.field().from_i64(l), self.field().from_i64(m));
        self.check_point(&p)?;
        Ok(p)
    }

    /// Every affine point over a prime field, by brute force, ordered by `(λ, μ)`.
    pub fn affine_points(&self) -> Option<Vec<CurvePoint>> {
        let elems: Vec<Scalar> = self.field().elements()?.collect();
        let mut out = Vec::new();
        for l in &elems {
            for m in &elems {
                let p = CurvePoint::Affine(l.clone(), m.clone());
                if self.contains(&p) {
                    out.push(p);
                }
            }
        }
        Some(out)
    }

    /// Affine points with integer coordinates `|λ| <= bound`.
    pub fn integral_points(&self, bound: i64) -> Vec<CurvePoint> {
        let fl = self.field();
        let mut out = Vec::new();
        for l in -bound..=bound {
            let ls = fl.from_i64(l);
            let rhs = &(&(&(&ls * &ls) * &ls) + &(&self.a * &ls)) + &self.b;
            let Some(q) = rhs.as_rational() else { continue };
            if !q.is_integer() {
                continue;
            }
            let n = q.to_integer();
            if n < 0.into() {
                continue;
            }
            let r = n.sqrt();
            if &r * &r != n {
                continue;
            }
            let ms = fl.from_bigint(&r);
            out.push(CurvePoint::Affine(ls.clone(), ms.clone()));
            if !ms.is_zero() {
                out.push(CurvePoint::Affine(ls, -ms));
            }
        }
        out
    }

    /// `P_E(λ, μ) = -X^2 - λXZ - (a + λ^2)Z^2`.
    pub fn pe_poly(&self, p: &CurvePoint) -> Result<Poly> {
        self.check_point(p)?;
        let CurvePoint::Affine(l, m) = p else {
            return Err(Error::Invalid("P_E needs an affine point".into()));
        };
        self.template(PE, Some((l, m)))
    }

    fn template(&self, t: &str, point: Option<(&Scalar, &Scalar)>) -> Result<Poly> {
        let s = substitute(t, &self.a, &self.b, point).replace("{PE}", &format!("({})", PE));
        let s = match point {
            Some(_) => substitute(&s, &self.a, &self.b, point),
            None => s,
        };
        self.ring.parse(&s)
    }

    fn matrix(
        &self,
        target: Vec<i64>,
        source: Vec<i64>,
        rows: &[&[&str]],
        point: Option<(&Scalar, &Scalar)>,
    ) -> Result<GradedMatrix> {
        let mut entries = Vec::new();
        for r in rows {
            for t in *r {
                entries.push(self.template(t, point)?);
            }
        }
        GradedMatrix::new(target, source, entries)
    }

    fn pair(
        &self,
        p0: Vec<i64>,
        p1: Vec<i64>,
        alpha: &[&[&str]],
        beta: &[&[&str]],
        point: Option<(&Scalar, &Scalar)>,
    ) -> Result<MatrixFactorization> {
        let a = self.matrix(p1.clone(), p0.clone(), alpha, point)?;
        let b = self.matrix(p0.iter().map(|t| t - 3).collect(), p1, beta, point)?;
        MatrixFactorization::new(self.ring.clone(), self.f.clone(), a, b)
    }

    /// The catalog entry of the given kind.
    pub fn catalog_mf(&self, kind: &CatalogKind) -> Result<MatrixFactorization> {
        let affine = |p: &CurvePoint| -> Result<(Scalar, Scalar)> {
            self.check_point(p)?;
            match p {
                CurvePoint::Affine(l, m) => Ok((l.clone(), m.clone())),
                CurvePoint::Infinity => Err(Error::Invalid(
                    "this family needs an affine point; use the e-variant".into(),
                )),
            }
        };
        match kind {
            CatalogKind::Point(p) => {
                let (l, m) = affine(p)?;
                self.pair(vec![3, 4], vec![2, 2], A_P, B_P, Some((&l, &m)))
            }
            CatalogKind::PointE => self.pair(vec![3, 4], vec![2, 2], A_E, B_E, None),
            CatalogKind::LBminusP(p) => {
                let (l, m) = affine(p)?;
                self.pair(vec![4, 4], vec![2, 3], B_P, A_P, Some((&l, &m)))
            }
            CatalogKind::LBminusE => self.pair(vec![4, 4], vec![2, 3], B_E, A_E, None),
            CatalogKind::LBePlusP(p) => {
                let (l, m) = affine(p)?;
                self.pair(vec![5, 4], vec![3, 3], EP_ALPHA, EP_BETA, Some((&l, &m)))
            }
            CatalogKind::LB2e => self.pair(vec![5, 4], vec![3, 3], E2_ALPHA, E2_BETA, None),
            CatalogKind::LB2ePlusP(p) => {
                let (l, m) = affine(p)?;
                self.pair(vec![5, 5, 5], vec![3, 3, 3], E2P_ALPHA, E2P_BETA, Some((&l, &m)))
            }
            CatalogKind::StructureSheaf | CatalogKind::Fundamental => {
                self.pair(vec![3, 4, 4, 4], vec![2, 2, 2, 3], O_ALPHA, O_BETA, None)
            }
            CatalogKind::Trivial => Ok(MatrixFactorization::trivial(&self.ring, &self.f, 0)),
        }
    }

    /// Every kind for the given affine points, plus the point-free kinds.
    pub fn all_kinds(points: &[CurvePoint]) -> Vec<CatalogKind> {
        let mut out = vec![
            CatalogKind::PointE,
            CatalogKind::LBminusE,
            CatalogKind::LB2e,
            CatalogKind::StructureSheaf,
            CatalogKind::Fundamental,
            CatalogKind::Trivial,
        ];
        for p in points {
            out.push(CatalogKind::Point(p.clone()));
            out.push(CatalogKind::LBminusP(p.clone()));
            out.push(CatalogKind::LBePlusP(p.clone()));
            out.push(CatalogKind::LB2ePlusP(p.clone()));
        }
        out
    }

    pub fn point_module(&self, p: &CurvePoint) -> Result<Presentation> {
        self.check_point(p)?;
        let r = &self.ring;
        let coords = match p {
            CurvePoint::Affine(l, m) => vec![
                Poly::constant(l.clone(), 3),
                Poly::constant(m.clone(), 3),
                r.one(),
            ],
            CurvePoint::Infinity => vec![Poly::zero(), r.one(), Poly::zero()],
        };
        Presentation::point_module(r, &self.f, &coords)
    }

    pub fn residue_field(&self) -> Presentation {
        Presentation::residue_field(&self.ring, &self.f)
    }

    /// The point factorisation of `p`, including `e`.
    pub fn point_mf(&self, p: &CurvePoint) -> Result<MatrixFactorization> {
        match p {
            CurvePoint::Infinity => self.catalog_mf(&CatalogKind::PointE),
            _ => self.catalog_mf(&CatalogKind::Point(p.clone())),
        }
    }

    /// The periodic pair of the residue field's resolution presenting its
    /// third syzygy.
    pub fn fundamental_module_mf(&self) -> Result<MatrixFactorization> {
        extract_mf(&self.residue_field(), ExtractMode::Raw(3))
    }

    /// The displayed generators of the Hom spaces used to build the
    /// `O(-e-p)`, `O(-2e)` and `O(-2e-p)` factorisations as cones.
    pub fn fixture_morphism(&self, which: Fixture) -> Result<MFMorphism> {
        let (source, target, f0, f1, point) = match &which {
            Fixture::MinusEToPoint(p) => {
                let (l, m) = self.affine_pair(p)?;
                (
                    self.catalog_mf(&CatalogKind::LBminusE)?,
                    self.catalog_mf(&CatalogKind::Point(p.clone()))?,
                    &[&["0", "Y + {m}*Z"][..], &["1", "{l}"]][..],
                    &[&["0", "-Y - {m}*Z"][..], &["1", "{l}*X + {l}^2*Z"]][..],
                    Some((l, m)),
                )
            }
            Fixture::MinusEToE => (
                self.catalog_mf(&CatalogKind::LBminusE)?,
                self.catalog_mf(&CatalogKind::PointE)?,
                &[&["X", "-{a}*Z"][..], &["0", "-1"]][..],
                &[&["-1", "{a}*Z"][..], &["0", "X"]][..],
                None,
            ),
            Fixture::Minus2eToPoint(p) => {
                let (l, m) = self.affine_pair(p)?;
                (
                    self.catalog_mf(&CatalogKind::LB2e)?,
                    self.catalog_mf(&CatalogKind::Point(p.clone()))?,
                    &[
                        &["{l}*{m}*Z^2 + X*Y + {m}*X*Z + {l}*Y*Z", "0"][..],
                        &["{l}^2*Z", "1"],
                    ][..],
                    &[&["0", "-Y - {m}*Z"][..], &["X + {l}*Z", "({a} + {l}^2)*Z"]][..],
                    Some((l, m)),
                )
            }
        };
        let pt = point.as_ref().map(|(l, m)| (l, m));
        let f0 = self.matrix(target.p0().to_vec(), source.p0().to_vec(), f0, pt)?;
        let f1 = self.matrix(target.p1().to_vec(), source.p1().to_vec(), f1, pt)?;
        MFMorphism::new(source, target, 0, f0, f1)
    }

    fn affine_pair(&self, p: &CurvePoint) -> Result<(Scalar, Scalar)> {
        self.check_point(p)?;
        match p {
            CurvePoint::Affine(l, m) => Ok((l.clone(), m.clone())),
            CurvePoint::Infinity => Err(Error::Invalid("fixture needs an affine point".into())),
        }
    }

    /// `Φ(O(-3e-p))` as the cone of a degree-zero generator
    /// `Φ(O)(-1) -> Φ(κ(p))`, reduced.
    pub fn size_bound_check(&self, p: &CurvePoint) -> Result<SizeReport> {
        let source = self.catalog_mf(&CatalogKind::StructureSheaf)?.twist(-1);
        let target = self.point_mf(p)?;
        let hom = stable_hom_basis(&source, &target, 0)?;
        let Some(g) = hom.basis.first() else {
            return Err(Error::Invalid(
                "no nonzero degree-zero morphism to the point".into(),
            ));
        };
        let cone = g.cone()?.reduce();
        let rank = cone.rank();
        Ok(SizeReport {
            point: p.clone(),
            hom_dim: hom.stable_dim,
            rank,
            within_bound: rank == 5 || rank == 6,
            at_least_four: rank >= 4,
            cone,
        })
    }

    /// `Hom(Hom(coker M, A), E)` with `E` the fundamental module.
    pub fn ar_middle(&self, m: &MatrixFactorization) -> Result<Presentation> {
        let red = m.reduce();
        if red.rank() == 0 {
            return Err(Error::TrivialFactorization);
        }
        if red.f != self.f {
            return Err(Error::PotentialMismatch);
        }
        let module = red.cokernel_module()?;
        let a = Presentation::free(&self.ring, Over::Hypersurface(self.f.clone()), vec![0]);
        let dual = hom_modules(&module, &a)?;
        let e = self.fundamental_module_mf()?.cokernel_module()?;
        hom_modules(&dual, &e)
    }
}

/// Result of [`WeierstrassCurve::size_bound_check`].
#[derive(Clone, Debug)]
pub struct SizeReport {
    pub point: CurvePoint,
    pub hom_dim: usize,
    pub rank: usize,
    pub within_bound: bool,
    pub at_least_four: bool,
    pub cone: MatrixFactorization,
}

/// The morphisms displayed as commutative diagrams for the cone computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fixture {
    /// `Φ(O(-e)) -> Φ(κ(p))`.
    MinusEToPoint(CurvePoint),
    /// `Φ(O(-e)) -> Φ(κ(e))`.
    MinusEToE,
    /// `Φ(O(-2e)) -> Φ(κ(p))`.
    Minus2eToPoint(CurvePoint),
}

/// Graded `Hom_A(M, N)` of finitely presented modules, as a presentation.
pub fn hom_modules(m: &Presentation, n: &Presentation) -> Result<Presentation> {
    let ring = &m.ring;
    let over = m.over.clone();
    let p = m.minimize()?;
    let n = n.minimize()?;
    let q = &n.relations;
    let f0 = p.twists().to_vec();
    let f1 = p.relations.source_twists.clone();
    let g0 = n.twists().to_vec();
    if f0.is_empty() || g0.is_empty() {
        return Ok(Presentation::free(ring, over, vec![]));
    }
    let tw = |shift: &[i64]| -> Vec<i64> {
        shift
            .iter()
            .flat_map(|t| g0.iter().map(move |g| g - t))
            .collect()
    };
    let src = tw(&f0);
    let tgt = tw(&f1);
    let kg = g0.len();
    // phi sends (x_j) in ⊕ N(t_j) to (Σ_j P_jl x_j)_l
    let mut phi = GradedMatrix::zero(tgt.clone(), src.clone());
    for l in 0..f1.len() {
        for j in 0..f0.len() {
            let e = p.relations.get(j, l);
            if e.is_zero() {
                continue;
            }
            for k in 0..kg {
                phi.set(l * kg + k, j * kg + k, e.clone());
            }
        }
    }
    let q_src = |shift: &[i64]| -> GradedMatrix {
        let mut out = GradedMatrix::zero(vec![], vec![]);
        for t in shift {
            out = GradedMatrix::block_diagonal(&out, &q.twisted(*t));
        }
        out
    };
    let q1 = q_src(&f1);
    let whole = if q1.cols() > 0 { phi.hcat(&q1)? } else { phi.clone() };
    let ker = if whole.cols() == 0 {
        return Ok(Presentation::free(ring, over, vec![]));
    } else {
        crate::groebner::kernel_of_map(&whole, &over)?
    };
    let nsrc = src.len();
    let gens: Vec<Vec<Poly>> = ker
        .generators
        .iter()
        .map(|v| v[..nsrc].to_vec())
        .filter(|v| v.iter().any(|e| !e.is_zero()))
        .collect();
    if gens.is_empty() {
        return Ok(Presentation::free(ring, over, vec![]));
    }
    let gm = crate::groebner::minimalize(&crate::groebner::ModuleGens {
        twists: src.clone(),
        generators: gens,
        over: over.clone(),
    })?;
    let k = gm.to_matrix();
    let q0 = q_src(&f0);
    let whole = if q0.cols() > 0 { k.hcat(&q0)? } else { k.clone() };
    let rel = crate::groebner::kernel_of_map(&whole, &over)?;
    let ng = k.cols();
    let rel_cols: Vec<Vec<Poly>> = rel
        .generators
        .iter()
        .map(|v| v[..ng].to_vec())
        .filter(|v| v.iter().any(|e| !e.is_zero()))
        .collect();
    let relations = if rel_cols.is_empty() {
        GradedMatrix::zero(k.source_twists.clone(), vec![])
    } else {
        crate::groebner::ModuleGens {
            twists: k.source_twists.clone(),
            generators: rel_cols,
            over: over.clone(),
        }
        .to_matrix()
    };
    Presentation::new(ring.clone(), over, relations)?.minimize()
}

/// A point of the curve: the flex `e = [0:1:0]` or an affine `[λ:μ:1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine(Scalar, Scalar),
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "[0:1:0]"),
            CurvePoint::Affine(l, m) => write!(f, "[{l}:{m}:1]"),
        }
    }
}

/// The families of the classification plus the structure sheaf, the
/// trivial factorisation and the fundamental module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CatalogKind {
    /// `Φ(κ(p))`.
    Point(CurvePoint),
    /// `Φ(κ(e))`.
    PointE,
    /// `Φ(O(-p))`.
    LBminusP(CurvePoint),
    /// `Φ(O(-e))`.
    LBminusE,
    /// `Φ(O(-e-p))`.
    LBePlusP(CurvePoint),
    /// `Φ(O(-2e))`.
    LB2e,
    /// `Φ(O(-2e-p))`.
    LB2ePlusP(CurvePoint),
    StructureSheaf,
    Trivial,
    Fundamental,
}

impl CatalogKind {
    pub fn name(&self) -> &'static str {
        match self {
            CatalogKind::Point(_) => "point",
            CatalogKind::PointE => "point-e",
            CatalogKind::LBminusP(_) => "lb-minus-p",
            CatalogKind::LBminusE => "lb-minus-e",
            CatalogKind::LBePlusP(_) => "lb-e-plus-p",
            CatalogKind::LB2e => "lb-2e",
            CatalogKind::LB2ePlusP(_) => "lb-2e-plus-p",
            CatalogKind::StructureSheaf => "structure-sheaf",
            CatalogKind::Trivial => "trivial",
            CatalogKind::Fundamental => "fundamental",
        }
    }

    pub fn point(&self) -> Option<&CurvePoint> {
        match self {
            CatalogKind::Point(p)
            | CatalogKind::LBminusP(p)
            | CatalogKind::LBePlusP(p)
            | CatalogKind::LB2ePlusP(p) => Some(p),
            _ => None,
        }
    }

    /// Parse a kind name, attaching `point` where the family needs one.
    pub fn from_name(name: &str, point: Option<CurvePoint>) -> Result<Self> {
        let need = |p: Option<CurvePoint>| {
            p.ok_or_else(|| Error::Invalid(format!("kind `{name}` needs a point")))
        };
        Ok(match name {
            "point" => match point {
                Some(CurvePoint::Infinity) => CatalogKind::PointE,
                p => CatalogKind::Point(need(p)?),
            },
            "point-e" => CatalogKind::PointE,
            "lb-minus-p" => CatalogKind::LBminusP(need(point)?),
            "lb-minus-e" => CatalogKind::LBminusE,
            "lb-e-plus-p" => CatalogKind::LBePlusP(need(point)?),
            "lb-2e" => CatalogKind::LB2e,
            "lb-2e-plus-p" => CatalogKind::LB2ePlusP(need(point)?),
            "structure-sheaf" => CatalogKind::StructureSheaf,
            "trivial" => CatalogKind::Trivial,
            "fundamental" => CatalogKind::Fundamental,
            _ => return Err(Error::Invalid(format!("unknown kind `{name}`"))),
        })
    }

    pub const NAMES: [&'static str; 10] = [
        "point",
        "point-e",
        "lb-minus-p",
        "lb-minus-e",
        "lb-e-plus-p",
        "lb-2e",
        "lb-2e-plus-p",
        "structure-sheaf",
        "trivial",
        "fundamental",
    ];
}

const PE: &str = "-X^2 - {l}*X*Z - ({a} + {l}^2)*Z^2";

const A_P: &[&[&str]] = &[&["X - {l}*Z", "Z*(Y + {m}*Z)"], &["{m}*Z - Y", "{PE}"]];
const B_P: &[&[&str]] = &[&["{PE}", "-Z*(Y + {m}*Z)"], &["Y - {m}*Z", "X - {l}*Z"]];
const A_E: &[&[&str]] = &[&["X", "{b}*Z^2 - Y^2"], &["-Z", "X^2 + {a}*Z^2"]];
const B_E: &[&[&str]] = &[&["-X^2 - {a}*Z^2", "{b}*Z^2 - Y^2"], &["-Z", "-X"]];
const EP_ALPHA: &[&[&str]] = &[&["{PE}", "-Y - {m}*Z"], &["-Z*(Y - {m}*Z)", "{l}*Z - X"]];
const EP_BETA: &[&[&str]] = &[&["X - {l}*Z", "-Y - {m}*Z"], &["-Z*(Y - {m}*Z)", "-({PE})"]];
const E2_ALPHA: &[&[&str]] = &[&["{a}*Z*X - Y^2 + {b}*Z^2", "-X"], &["-X^2", "-Z"]];
const E2_BETA: &[&[&str]] = &[&["-Z", "X"], &["X^2", "{b}*Z^2 - Y^2 + {a}*X*Z"]];
const E2P_ALPHA: &[&[&str]] = &[
    &[
        "{PE}",
        "-Z*(Y + {m}*Z)",
        "{l}*{m}*Z^2 + X*Y + {m}*X*Z + {l}*Y*Z",
    ],
    &[
        "-X*(Y - {m}*Z)",
        "-X*(X - {l}*Z)",
        "-({a} + {l}^2)*X*Z + Y^2 - {b}*Z^2",
    ],
    &["-Z*(Y - {m}*Z)", "-Z*(X - {l}*Z)", "X^2 - {l}^2*Z^2"],
];
const E2P_BETA: &[&[&str]] = &[
    &["X - {l}*Z", "0", "-Y - {m}*Z"],
    &["{m}*Z - Y", "X + {l}*Z", "({a} + {l}^2)*Z"],
    &["0", "Z", "-X"],
];
const O_ALPHA: &[&[&str]] = &[
    &["Z", "Y*Z", "X^2", "0"],
    &["-Y", "-{b}*Z^2", "{a}*Y*Z", "X^2 + {a}*Z^2"],
    &["X", "0", "-{b}*Z^2 - {a}*X*Z", "-Y*Z"],
    &["0", "X", "Y", "Z"],
];
const O_BETA: &[&[&str]] = &[
    &["-{b}*Z^2 - {a}*X*Z", "-Y*Z", "-X^2", "{a}*Z^2*Y"],
    &["Y", "Z", "0", "-X^2 - {a}*Z^2"],
    &["-X", "0", "Z", "Y*Z"],
    &["0", "-X", "-Y", "-{b}*Z^2"],
];

fn scalar_text(s: &Scalar) -> String {
    format!("({s})")
}

fn substitute(t: &str, a: &Scalar, b: &Scalar, point: Option<(&Scalar, &Scalar)>) -> String {
    let mut s = t.replace("{a}", &scalar_text(a)).replace("{b}", &scalar_text(b));
    if let Some((l, m)) = point {
        s = s.replace("{l}", &scalar_text(l)).replace("{m}", &scalar_text(m));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::is_stably_isomorphic;

    fn curve() -> WeierstrassCurve {
        WeierstrassCurve::from_ints(FieldSpec::Rationals, 0, 1).unwrap()
    }

    #[test]
    fn singular_curves_rejected() {
        let q = FieldSpec::Rationals;
        assert!(matches!(
            WeierstrassCurve::from_ints(q, 0, 0),
            Err(Error::SingularCurve)
        ));
        assert!(matches!(
            WeierstrassCurve::from_ints(q, -3, 2),
            Err(Error::SingularCurve)
        ));
        assert_eq!(curve().discriminant(), q.from_i64(-27));
    }

    #[test]
    fn curve_from_potential() {
        let c = WeierstrassCurve::from_ints(FieldSpec::Rationals, -2, 3).unwrap();
        let back = WeierstrassCurve::from_potential(&c.ring, &c.f).unwrap();
        assert_eq!(back, c);
        let g = c.ring.parse("X^3 + Y^3 + Z^3").unwrap();
        assert!(WeierstrassCurve::from_potential(&c.ring, &g).is_err());
    }

    #[test]
    fn pe_values() {
        let c = curve();
        let r = &c.ring;
        let p = c.point(2, 3).unwrap();
        assert_eq!(c.pe_poly(&p).unwrap(), r.parse("-X^2 - 2*X*Z - 4*Z^2").unwrap());
        let q = c.point(0, 1).unwrap();
        assert_eq!(c.pe_poly(&q).unwrap(), r.parse("-X^2").unwrap());
        assert!(matches!(c.point(1, 1), Err(Error::PointNotOnCurve(_))));
        // (X - λZ) * (-P_E) + Z(Y^2 - μ^2 Z^2) = f
        let lhs = r
            .parse("X - 2*Z")
            .unwrap()
            .mul(&c.pe_poly(&p).unwrap())
            .add(&r.parse("Z*(Y^2 - 9*Z^2)").unwrap());
        assert_eq!(lhs, c.f);
    }

    #[test]
    fn integral_points_of_default_curve() {
        let pts = curve().integral_points(10);
        assert_eq!(pts.len(), 5);
    }

    #[test]
    fn every_kind_verifies() {
        let c = curve();
        let pts = c.integral_points(3);
        for k in WeierstrassCurve::all_kinds(&pts) {
            let m = c.catalog_mf(&k).unwrap();
            assert!(m.is_valid(), "{k:?}: {}", m.verify());
        }
    }

    #[test]
    fn fundamental_matches_structure_sheaf_twists() {
        let c = curve();
        let fm = c.fundamental_module_mf().unwrap();
        assert!(fm.is_valid());
        assert_eq!(fm.twist_multiset(), (vec![3, 4, 4, 4], vec![2, 2, 2, 3]));
    }

    #[test]
    fn fixture_cone_for_e_plus_p() {
        let c = curve();
        let p = c.point(2, 3).unwrap();
        let phi = c.fixture_morphism(Fixture::MinusEToPoint(p.clone())).unwrap();
        let cone = phi.cone().unwrap();
        assert!(cone.is_valid());
        let red = cone.reduce();
        assert_eq!(red.rank(), 2);
        let expect = c.catalog_mf(&CatalogKind::LBePlusP(p)).unwrap().shift(1);
        assert!(is_stably_isomorphic(&red, &expect, 0).unwrap().is_iso());
    }

    #[test]
    fn fixture_cone_for_2e() {
        let c = curve();
        let phi = c.fixture_morphism(Fixture::MinusEToE).unwrap();
        let red = phi.cone().unwrap().reduce();
        assert_eq!(red.rank(), 2);
        let expect = c.catalog_mf(&CatalogKind::LB2e).unwrap().shift(1);
        assert!(is_stably_isomorphic(&red, &expect, 0).unwrap().is_iso());
    }

    #[test]
    fn fixture_cone_for_2e_plus_p() {
        let c = curve();
        let p = c.point(2, 3).unwrap();
        let phi = c.fixture_morphism(Fixture::Minus2eToPoint(p.clone())).unwrap();
        let red = phi.cone().unwrap().reduce();
        assert_eq!(red.rank(), 3);
        let expect = c.catalog_mf(&CatalogKind::LB2ePlusP(p)).unwrap().shift(1);
        assert!(is_stably_isomorphic(&red, &expect, 0).unwrap().is_iso());
    }

    #[test]
    fn size_bound_for_minus_3e_minus_p() {
        let c = curve();
        let p = c.point(0, 1).unwrap();
        let rep = c.size_bound_check(&p).unwrap();
        assert_eq!(rep.hom_dim, 1);
        assert!(rep.cone.is_valid());
        assert!(rep.within_bound, "rank {}", rep.rank);
    }

    #[test]
    fn ar_middle_doubles_hilbert_function() {
        let c = curve();
        let p = c.point(0, 1).unwrap();
        let m = c.catalog_mf(&CatalogKind::Point(p)).unwrap();
        let module = m.cokernel_module().unwrap();
        let mid = c.ar_middle(&m).unwrap();
        for i in -2..=10 {
            assert_eq!(
                mid.hilbert_function(i).unwrap(),
                2 * module.hilbert_function(i).unwrap(),
                "degree {i}"
            );
        }
        let triv = c.catalog_mf(&CatalogKind::Trivial).unwrap();
        assert!(matches!(c.ar_middle(&triv), Err(Error::TrivialFactorization)));
    }
}
