//! Morphisms of matrix factorisations, stable Hom spaces, mapping cones,
//! isomorphism testing and the twist functors built from them.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{self, Echelon, SparseVec};
use crate::matrix::GradedMatrix;
use crate::mf::MatrixFactorization;
use crate::poly::{Monomial, Poly};

/// A pair `(f0, f1)` with `f1 * alpha = gamma * f0` and
/// `f0 * beta = delta * f1`, from `source[shift]` to `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MFMorphism {
    pub source: MatrixFactorization,
    pub target: MatrixFactorization,
    pub shift: i64,
    pub f0: GradedMatrix,
    pub f1: GradedMatrix,
}

impl MFMorphism {
    pub fn new(
        source: MatrixFactorization,
        target: MatrixFactorization,
        shift: i64,
        f0: GradedMatrix,
        f1: GradedMatrix,
    ) -> Result<Self> {
        let m = MFMorphism {
            source,
            target,
            shift,
            f0,
            f1,
        };
        m.check()?;
        Ok(m)
    }

    /// The source with the shift applied.
    pub fn shifted_source(&self) -> MatrixFactorization {
        self.source.shift(self.shift)
    }

    /// Both squares commute and the grading is consistent.
    pub fn check(&self) -> Result<()> {
        let m = self.shifted_source();
        let n = &self.target;
        if m.f != n.f {
            return Err(Error::PotentialMismatch);
        }
        let bad = |what: &str| Error::InvalidMorphism(what.to_string());
        if self.f0.target_twists != n.p0()
            || self.f0.source_twists != m.p0()
            || self.f1.target_twists != n.p1()
            || self.f1.source_twists != m.p1()
        {
            return Err(bad("twists of f0/f1 do not match source and target"));
        }
        if !self.f0.validate().is_empty() || !self.f1.validate().is_empty() {
            return Err(bad("entries of f0/f1 have the wrong degrees"));
        }
        let left = self.f1.mul(&m.alpha)?;
        let right = n.alpha.mul(&self.f0)?;
        if left.entries() != right.entries() {
            return Err(bad("f1 * alpha != gamma * f0"));
        }
        let left = self.f0.mul(&m.beta)?;
        let right = n.beta.mul(&self.f1)?;
        if left.entries() != right.entries() {
            return Err(bad("f0 * beta != delta * f1"));
        }
        Ok(())
    }

    pub fn identity(m: &MatrixFactorization) -> Self {
        MFMorphism {
            source: m.clone(),
            target: m.clone(),
            shift: 0,
            f0: GradedMatrix::identity(&m.ring, m.p0().to_vec()),
            f1: GradedMatrix::identity(&m.ring, m.p1().to_vec()),
        }
    }

    pub fn zero(source: &MatrixFactorization, target: &MatrixFactorization, shift: i64) -> Self {
        let m = source.shift(shift);
        MFMorphism {
            source: source.clone(),
            target: target.clone(),
            shift,
            f0: GradedMatrix::zero(target.p0().to_vec(), m.p0().to_vec()),
            f1: GradedMatrix::zero(target.p1().to_vec(), m.p1().to_vec()),
        }
    }

    /// `other ∘ self`, both unshifted.
    pub fn then(&self, other: &MFMorphism) -> Result<MFMorphism> {
        if self.shift != 0 || other.shift != 0 {
            return Err(Error::InvalidMorphism("composition needs shift 0".into()));
        }
        Ok(MFMorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            shift: 0,
            f0: other.f0.mul(&self.f0)?,
            f1: other.f1.mul(&self.f1)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        let id = MFMorphism::identity(&self.source);
        self.f0 == id.f0 && self.f1 == id.f1
    }

    /// Mapping cone on `target ⊕ source[shift + 1]`.
    pub fn cone(&self) -> Result<MatrixFactorization> {
        self.check()?;
        cone_unchecked(&self.shifted_source(), &self.target, &self.f0, &self.f1)
    }
}

fn cone_unchecked(
    m: &MatrixFactorization,
    n: &MatrixFactorization,
    f0: &GradedMatrix,
    f1: &GradedMatrix,
) -> Result<MatrixFactorization> {
    let d = m.degree();
    let zero_a = GradedMatrix::zero(m.beta.target_twists.clone(), n.alpha.source_twists.clone());
    let alpha = GradedMatrix::block(&n.alpha, f1, &zero_a, &m.beta.neg())?;
    let m_alpha = m.alpha.twisted(d);
    let zero_b = GradedMatrix::zero(m_alpha.target_twists.clone(), n.beta.source_twists.clone());
    let beta = GradedMatrix::block(&n.beta, &f0.twisted(d), &zero_b, &m_alpha.neg())?;
    MatrixFactorization::new(m.ring.clone(), m.f.clone(), alpha, beta)
}

/// Homogeneous coefficient coordinates for graded matrices of a fixed shape.
#[derive(Clone, Debug)]
struct CellSpace {
    rows: usize,
    cols: usize,
    target: Vec<i64>,
    source: Vec<i64>,
    /// `(row, col, monomial)` per coordinate.
    coords: Vec<(usize, usize, Monomial)>,
    index: HashMap<(usize, usize, Monomial), usize>,
}

impl CellSpace {
    fn new(target: &[i64], source: &[i64], nvars: usize, offset: usize) -> Self {
        let mut coords = Vec::new();
        for (i, b) in target.iter().enumerate() {
            for (j, a) in source.iter().enumerate() {
                let deg = a - b;
                if deg < 0 {
                    continue;
                }
                for m in Monomial::all_of_degree(nvars, deg as u32) {
                    coords.push((i, j, m));
                }
            }
        }
        let index = coords
            .iter()
            .enumerate()
            .map(|(k, c)| (c.clone(), k + offset))
            .collect();
        CellSpace {
            rows: target.len(),
            cols: source.len(),
            target: target.to_vec(),
            source: source.to_vec(),
            coords,
            index,
        }
    }

    fn len(&self) -> usize {
        self.coords.len()
    }

    /// Matrix from coordinates `v[offset..offset + len]`.
    fn matrix(&self, v: &SparseVec, offset: usize) -> GradedMatrix {
        let mut cells: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); self.rows * self.cols];
        for (k, c) in v {
            if *k < offset || *k >= offset + self.len() {
                continue;
            }
            let (i, j, m) = &self.coords[k - offset];
            cells[i * self.cols + j].push((m.clone(), c.clone()));
        }
        let entries = cells.into_iter().map(Poly::from_terms).collect();
        GradedMatrix::new(self.target.clone(), self.source.clone(), entries)
            .expect("cell space shape")
    }
}

fn add_poly_to(
    acc: &mut HashMap<usize, Scalar>,
    space: &CellSpace,
    i: usize,
    j: usize,
    p: &Poly,
) {
    for (m, c) in p.terms() {
        let k = space.index[&(i, j, m.clone())];
        let e = acc.entry(k).or_insert_with(|| c.field().zero());
        *e = &*e + c;
    }
}

fn to_sparse(acc: HashMap<usize, Scalar>) -> SparseVec {
    let mut v: SparseVec = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by_key(|t| t.0);
    v
}

/// Stable Hom from `source[shift]` to `target` in degree zero.
#[derive(Clone, Debug)]
pub struct HomBasis {
    pub source: MatrixFactorization,
    pub target: MatrixFactorization,
    pub shift: i64,
    pub strict_dim: usize,
    pub homotopy_dim: usize,
    pub stable_dim: usize,
    /// Representatives of a basis of the stable Hom space.
    pub basis: Vec<MFMorphism>,
}

pub fn stable_hom_basis(
    source: &MatrixFactorization,
    target: &MatrixFactorization,
    shift: i64,
) -> Result<HomBasis> {
    if source.f != target.f {
        return Err(Error::PotentialMismatch);
    }
    if source.ring != target.ring {
        return Err(Error::RingMismatch("Hom between factorisations".into()));
    }
    let m = source.shift(shift);
    let n = target;
    let field = m.ring.field;
    let nv = m.ring.nvars();
    let d = m.degree();

    let s0 = CellSpace::new(n.p0(), m.p0(), nv, 0);
    let s1 = CellSpace::new(n.p1(), m.p1(), nv, s0.len());
    let unknowns = s0.len() + s1.len();

    // f1 * alpha_M - alpha_N * f0 = 0; the second square follows from it
    let eq_space = CellSpace::new(n.p1(), m.p0(), nv, 0);
    let mut rows: Vec<SparseVec> = vec![Vec::new(); eq_space.len()];
    for (k, (i, j, mono)) in s0.coords.iter().enumerate() {
        let mut acc = HashMap::new();
        for r in 0..n.rank() {
            let a = n.alpha.get(r, *i);
            if !a.is_zero() {
                add_poly_to(&mut acc, &eq_space, r, *j, &a.mul_term(mono, &field.one()).neg());
            }
        }
        for (e, c) in to_sparse(acc) {
            rows[e].push((k, c));
        }
    }
    for (k, (i, j, mono)) in s1.coords.iter().enumerate() {
        let mut acc = HashMap::new();
        for l in 0..m.rank() {
            let a = m.alpha.get(*j, l);
            if !a.is_zero() {
                add_poly_to(&mut acc, &eq_space, *i, l, &a.mul_term(mono, &field.one()));
            }
        }
        for (e, c) in to_sparse(acc) {
            rows[e].push((k + s0.len(), c));
        }
    }
    rows.retain(|r| !r.is_empty());

    // null-homotopic maps: f0 = h alpha_M + beta_N s, f1 = alpha_N h + s beta_M
    let hs = CellSpace::new(n.p0(), m.p1(), nv, 0);
    let d_twisted: Vec<i64> = n.p1().iter().map(|t| t + d).collect();
    let ss = CellSpace::new(&d_twisted, m.p0(), nv, 0);
    let mut htpy_rows: Vec<SparseVec> = Vec::with_capacity(hs.len() + ss.len());
    for (i, k, mono) in &hs.coords {
        let mut acc = HashMap::new();
        for j in 0..m.rank() {
            let a = m.alpha.get(*k, j);
            if !a.is_zero() {
                add_poly_to(&mut acc, &s0, *i, j, &a.mul_term(mono, &field.one()));
            }
        }
        for l in 0..n.rank() {
            let a = n.alpha.get(l, *i);
            if !a.is_zero() {
                add_poly_to(&mut acc, &s1, l, *k, &a.mul_term(mono, &field.one()));
            }
        }
        htpy_rows.push(to_sparse(acc));
    }
    for (l, j, mono) in &ss.coords {
        let mut acc = HashMap::new();
        for i in 0..n.rank() {
            let b = n.beta.get(i, *l);
            if !b.is_zero() {
                add_poly_to(&mut acc, &s0, i, *j, &b.mul_term(mono, &field.one()));
            }
        }
        for k in 0..m.rank() {
            let b = m.beta.get(*j, k);
            if !b.is_zero() {
                add_poly_to(&mut acc, &s1, *l, k, &b.mul_term(mono, &field.one()));
            }
        }
        htpy_rows.push(to_sparse(acc));
    }

    if let Some(dim) = modular_zero_certificate(&rows, &htpy_rows, unknowns, field) {
        return Ok(HomBasis {
            source: source.clone(),
            target: target.clone(),
            shift,
            strict_dim: dim,
            homotopy_dim: dim,
            stable_dim: 0,
            basis: Vec::new(),
        });
    }

    let strict = linalg::kernel(&rows, unknowns, &field.one());
    let mut homotopies = Echelon::new();
    for r in &htpy_rows {
        homotopies.insert(r);
    }
    let homotopy_dim = homotopies.rank();
    // homotopies are strict morphisms, so the quotient size is known upfront
    let want = strict.len() - homotopy_dim;
    let mut quotient = homotopies;
    let mut basis = Vec::new();
    for z in &strict {
        if basis.len() == want {
            break;
        }
        if quotient.insert(z) {
            basis.push(MFMorphism {
                source: source.clone(),
                target: target.clone(),
                shift,
                f0: s0.matrix(z, 0),
                f1: s1.matrix(z, s0.len()),
            });
        }
    }
    Ok(HomBasis {
        source: source.clone(),
        target: target.clone(),
        shift,
        strict_dim: strict.len(),
        homotopy_dim,
        stable_dim: basis.len(),
        basis,
    })
}

/// Prime used to certify vanishing stable Hom spaces over the rationals.
const CERT_PRIME: u32 = 2_147_483_647;

/// Rank can only drop modulo a prime, so `n - rank_p(E) = rank_p(H)`
/// forces `strict = homotopies` over the rationals (homotopies are always
/// strict). Returns the common dimension when the check succeeds.
fn modular_zero_certificate(
    equations: &[SparseVec],
    homotopies: &[SparseVec],
    unknowns: usize,
    field: FieldSpec,
) -> Option<usize> {
    if field != FieldSpec::Rationals {
        return None;
    }
    let reduce = |rows: &[SparseVec]| -> Option<Vec<SparseVec>> {
        rows.iter()
            .map(|r| {
                let mut out = Vec::with_capacity(r.len());
                for (i, c) in r {
                    let c = c.reduce_mod(CERT_PRIME)?;
                    if !c.is_zero() {
                        out.push((*i, c));
                    }
                }
                Some(out)
            })
            .collect()
    };
    let eq = reduce(equations)?;
    let ht = reduce(homotopies)?;
    let strict = unknowns - linalg::rank(&eq);
    (strict == linalg::rank(&ht)).then_some(strict)
}

/// `sum_k c_k * basis_k`.
fn combine(basis: &[MFMorphism], coeffs: &[Scalar]) -> MFMorphism {
    let mut out = MFMorphism::zero(&basis[0].source, &basis[0].target, basis[0].shift);
    for (b, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        out.f0 = out.f0.add(&b.f0.scale(c)).expect("same shape");
        out.f1 = out.f1.add(&b.f1.scale(c)).expect("same shape");
    }
    out
}

/// Constant part of a degree-zero map between free modules.
fn constant_part(m: &GradedMatrix, field: FieldSpec) -> Vec<Vec<Scalar>> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| m.get(i, j).constant_term().unwrap_or_else(|| field.zero()))
                .collect()
        })
        .collect()
}

/// Inverse of a degree-zero graded matrix whose constant part is invertible.
fn invert_graded(m: &GradedMatrix, ring: &crate::poly::PolyRing) -> Option<GradedMatrix> {
    let field = ring.field;
    let c = constant_part(m, field);
    let cinv = linalg::invert_dense(&c, field)?;
    let n = m.rows();
    let mut ci = GradedMatrix::zero(m.source_twists.clone(), m.target_twists.clone());
    for i in 0..n {
        for j in 0..n {
            if !cinv[i][j].is_zero() {
                ci.set(i, j, Poly::constant(cinv[i][j].clone(), ring.nvars()));
            }
        }
    }
    // m = C (1 + X) with X = C^{-1}(m - C) raising degrees, so the series ends
    let cm = GradedMatrix::new(
        m.target_twists.clone(),
        m.source_twists.clone(),
        c.iter()
            .flatten()
            .map(|s| Poly::constant(s.clone(), ring.nvars()))
            .collect(),
    )
    .ok()?;
    let x = ci.mul(&m.sub(&cm).ok()?).ok()?;
    let mut term = GradedMatrix::identity(ring, m.source_twists.clone());
    let mut sum = term.clone();
    for _ in 0..=n * 64 {
        term = term.mul(&x).ok()?.neg();
        if term.is_zero() {
            return sum.mul(&ci).ok();
        }
        sum = sum.add(&term).ok()?;
    }
    None
}

/// Outcome of [`is_stably_isomorphic`].
#[derive(Clone, Debug)]
pub enum IsoOutcome {
    Isomorphic {
        forward: MFMorphism,
        backward: MFMorphism,
    },
    NotIsomorphic(String),
    Inconclusive {
        samples: usize,
    },
}

impl IsoOutcome {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic { .. })
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, IsoOutcome::NotIsomorphic(_))
    }
}

pub const ISO_SAMPLES: usize = 1000;

/// Decide whether two factorisations are isomorphic in the stable category.
/// Both are reduced first; an isomorphism of reduced factorisations is a
/// morphism whose constant parts are invertible.
pub fn is_stably_isomorphic(
    m: &MatrixFactorization,
    n: &MatrixFactorization,
    seed: u64,
) -> Result<IsoOutcome> {
    if m.f != n.f {
        return Err(Error::PotentialMismatch);
    }
    let m = m.reduce();
    let n = n.reduce();
    if m.twist_multiset() != n.twist_multiset() {
        return Ok(IsoOutcome::NotIsomorphic(format!(
            "reduced twists differ: {:?} vs {:?}",
            m.twist_multiset(),
            n.twist_multiset()
        )));
    }
    if m.rank() == 0 {
        return Ok(IsoOutcome::Isomorphic {
            forward: MFMorphism::identity(&m),
            backward: MFMorphism::identity(&n),
        });
    }
    let there = stable_hom_basis(&m, &n, 0)?;
    let back = stable_hom_basis(&n, &m, 0)?;
    if there.stable_dim == 0 || back.stable_dim == 0 {
        return Ok(IsoOutcome::NotIsomorphic(format!(
            "stable Hom in degree 0 has dimensions {} and {}",
            there.stable_dim, back.stable_dim
        )));
    }
    let field = m.ring.field;
    let try_coeffs = |coeffs: &[Scalar]| -> Option<(MFMorphism, MFMorphism)> {
        let u = combine(&there.basis, coeffs);
        let c0 = constant_part(&u.f0, field);
        let c1 = constant_part(&u.f1, field);
        if linalg::determinant_dense(&c0, field).is_zero()
            || linalg::determinant_dense(&c1, field).is_zero()
        {
            return None;
        }
        let v0 = invert_graded(&u.f0, &m.ring)?;
        let v1 = invert_graded(&u.f1, &m.ring)?;
        let v = MFMorphism {
            source: n.clone(),
            target: m.clone(),
            shift: 0,
            f0: v0,
            f1: v1,
        };
        let round = u.then(&v).ok()?;
        if v.check().is_err() || !round.is_identity() {
            return None;
        }
        Some((u, v))
    };
    let dim = there.stable_dim;
    let r = m.rank();
    if dim <= 2 {
        let mut candidates: Vec<Vec<Scalar>> = Vec::new();
        if dim == 1 {
            candidates.push(vec![field.one()]);
        } else {
            candidates.push(vec![field.zero(), field.one()]);
            // det of the constant parts is a binary form of degree 2r
            for t in 0..=(2 * r as i64) {
                candidates.push(vec![field.one(), field.from_i64(t)]);
            }
        }
        for c in &candidates {
            if let Some((forward, backward)) = try_coeffs(c) {
                return Ok(IsoOutcome::Isomorphic { forward, backward });
            }
        }
        let exhaustive = match field {
            FieldSpec::Rationals => true,
            FieldSpec::Prime(p) => (p as usize) > 2 * r,
        };
        if exhaustive {
            return Ok(IsoOutcome::NotIsomorphic(
                "no degree-0 morphism has invertible constant part".into(),
            ));
        }
        return Ok(IsoOutcome::Inconclusive {
            samples: candidates.len(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ISO_SAMPLES {
        let coeffs: Vec<Scalar> = (0..dim)
            .map(|_| match field {
                FieldSpec::Rationals => field.from_i64(rng.gen_range(-1000..=1000)),
                FieldSpec::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
            })
            .collect();
        if let Some((forward, backward)) = try_coeffs(&coeffs) {
            return Ok(IsoOutcome::Isomorphic { forward, backward });
        }
    }
    Ok(IsoOutcome::Inconclusive {
        samples: ISO_SAMPLES,
    })
}

/// Shifts scanned by the twist functors; Hom outside must vanish.
pub const SHIFT_WINDOW: (i64, i64) = (-3, 3);

fn scan_guard(
    hom: impl Fn(i64) -> Result<HomBasis>,
) -> Result<Vec<HomBasis>> {
    let (lo, hi) = SHIFT_WINDOW;
    for i in [lo - 1, hi + 1] {
        let h = hom(i)?;
        if h.stable_dim != 0 {
            return Err(Error::ShiftRange(format!(
                "stable Hom of dimension {} at shift {i}",
                h.stable_dim
            )));
        }
    }
    (lo..=hi).map(hom).collect()
}

/// Which twist functor to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistDirection {
    Forward,
    Inverse,
}

/// `T_C(X) = cone(⊕ C[i]^{n_i} -> X)` and
/// `T_C^{-1}(X) = cone(X -> ⊕ C[i]^{n_i})[-1]`, reduced.
pub fn twist_functor(
    c: &MatrixFactorization,
    x: &MatrixFactorization,
    direction: TwistDirection,
) -> Result<MatrixFactorization> {
    if c.f != x.f {
        return Err(Error::PotentialMismatch);
    }
    let x = x.reduce();
    match direction {
        TwistDirection::Forward => {
            let homs = scan_guard(|i| stable_hom_basis(c, &x, i))?;
            let mut sum = MatrixFactorization::zero(&x.ring, &x.f);
            let mut f0 = GradedMatrix::zero(x.p0().to_vec(), vec![]);
            let mut f1 = GradedMatrix::zero(x.p1().to_vec(), vec![]);
            for h in &homs {
                for b in &h.basis {
                    sum = sum.direct_sum(&b.shifted_source())?;
                    f0 = f0.hcat(&b.f0)?;
                    f1 = f1.hcat(&b.f1)?;
                }
            }
            Ok(cone_unchecked(&sum, &x, &f0, &f1)?.reduce())
        }
        TwistDirection::Inverse => {
            let homs = scan_guard(|i| stable_hom_basis(&x, &c.shift(i), 0))?;
            let mut sum = MatrixFactorization::zero(&x.ring, &x.f);
            let mut f0 = GradedMatrix::zero(vec![], x.p0().to_vec());
            let mut f1 = GradedMatrix::zero(vec![], x.p1().to_vec());
            for h in &homs {
                for b in &h.basis {
                    sum = sum.direct_sum(&b.target)?;
                    f0 = f0.vcat(&b.f0)?;
                    f1 = f1.vcat(&b.f1)?;
                }
            }
            Ok(cone_unchecked(&x, &sum, &f0, &f1)?.shift(-1).reduce())
        }
    }
}

/// The autoequivalence induced by `O(sign)` on the category of
/// factorisations, given `C` the image of the structure sheaf.
pub fn picard_tensor(
    c: &MatrixFactorization,
    x: &MatrixFactorization,
    sign: i64,
) -> Result<MatrixFactorization> {
    match sign {
        -1 => Ok(twist_functor(c, x, TwistDirection::Forward)?.twist(-1)),
        1 => twist_functor(c, &x.twist(1), TwistDirection::Inverse),
        _ => Err(Error::Invalid(format!("sign must be +1 or -1, got {sign}"))),
    }
}

/// Transpose of `T_C(X)`: the image of the duality functor.
pub fn duality_image(c: &MatrixFactorization, x: &MatrixFactorization) -> Result<MatrixFactorization> {
    Ok(twist_functor(c, x, TwistDirection::Forward)?
        .transpose()
        .reduce())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    fn ring() -> PolyRing {
        PolyRing::xyz(FieldSpec::Rationals)
    }

    const F: &str = "Y^2*Z - X^3 - Z^3";

    fn point(l: &str, m: &str) -> MatrixFactorization {
        let pe = format!("-X^2 - ({l})*X*Z - ({l})^2*Z^2");
        let a00 = format!("X - ({l})*Z");
        let a01 = format!("Z*(Y + ({m})*Z)");
        let a10 = format!("({m})*Z - Y");
        let b01 = format!("-Z*(Y + ({m})*Z)");
        let b10 = format!("Y - ({m})*Z");
        MatrixFactorization::parse(
            &ring(),
            F,
            vec![3, 4],
            vec![2, 2],
            &[&[&a00, &a01], &[&a10, &pe]],
            &[&[&pe, &b01], &[&b10, &a00]],
        )
        .unwrap()
    }

    #[test]
    fn identity_survives_in_stable_hom() {
        let p = point("2", "3");
        assert!(p.is_valid());
        let h = stable_hom_basis(&p, &p, 0).unwrap();
        assert_eq!(h.stable_dim, 1);
        assert_eq!(h.strict_dim, h.stable_dim + h.homotopy_dim);
    }

    #[test]
    fn distinct_points_are_orthogonal() {
        let p = point("2", "3");
        let q = point("0", "1");
        for i in -3..=3 {
            assert_eq!(stable_hom_basis(&p, &q, i).unwrap().stable_dim, 0, "shift {i}");
        }
    }

    #[test]
    fn self_ext_of_a_point() {
        let p = point("2", "3");
        let dims: Vec<usize> = (-3..=3)
            .map(|i| stable_hom_basis(&p, &p, i).unwrap().stable_dim)
            .collect();
        assert_eq!(dims.iter().sum::<usize>(), 2);
        let nz: Vec<usize> = (0..dims.len()).filter(|&k| dims[k] > 0).collect();
        assert_eq!(nz.len(), 2);
        assert_eq!(nz[1], nz[0] + 1);
    }

    #[test]
    fn cones_of_zero_and_identity() {
        let p = point("2", "3");
        let z = MFMorphism::zero(&p, &p, 0);
        let c = z.cone().unwrap();
        assert!(c.is_valid());
        // N ⊕ M[1] with the suspended block negated, as in the displayed cones
        let s = p.shift(1);
        let negated = MatrixFactorization {
            alpha: s.alpha.neg(),
            beta: s.beta.neg(),
            ..s.clone()
        };
        assert_eq!(c, p.direct_sum(&negated).unwrap());
        assert!(is_stably_isomorphic(&c, &p.direct_sum(&s).unwrap(), 0).unwrap().is_iso());
        let id = MFMorphism::identity(&p);
        let c = id.cone().unwrap();
        assert!(c.is_valid());
        assert_eq!(c.reduce().rank(), 0);
    }

    #[test]
    fn iso_with_trivial_summand() {
        let r = ring();
        let f = r.parse(F).unwrap();
        let p = point("2", "3");
        let s = p.direct_sum(&MatrixFactorization::trivial(&r, &f, 1)).unwrap();
        assert!(is_stably_isomorphic(&p, &s, 7).unwrap().is_iso());
        let q = point("0", "1");
        assert!(is_stably_isomorphic(&p, &q, 7).unwrap().is_refuted());
    }

    #[test]
    fn iso_detects_base_change() {
        let p = point("2", "3");
        // conjugate by an invertible graded change of basis on P1
        let mut g = GradedMatrix::identity(&p.ring, p.p1().to_vec());
        g.set(0, 1, p.ring.constant(5));
        let mut gi = GradedMatrix::identity(&p.ring, p.p1().to_vec());
        gi.set(0, 1, p.ring.constant(-5));
        let q = MatrixFactorization {
            alpha: g.mul(&p.alpha).unwrap(),
            beta: p.beta.mul(&gi).unwrap(),
            ..p.clone()
        };
        assert!(q.is_valid());
        match is_stably_isomorphic(&p, &q, 1).unwrap() {
            IsoOutcome::Isomorphic { forward, backward } => {
                assert!(forward.check().is_ok());
                assert!(forward.then(&backward).unwrap().is_identity());
            }
            other => panic!("{other:?}"),
        }
    }
}
