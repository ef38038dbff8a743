//! Graded matrix factorisations `P0 --alpha--> P1 --beta--> P0(d)` and their
//! object-level operations.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::Over;
use crate::matrix::{DegreeViolation, GradedMatrix};
use crate::poly::{Poly, PolyRing};
use crate::resolution::Presentation;

/// `alpha : P0 -> P1` and `beta : P1 -> P0(d)`, with `P0 = ⊕ R(-p0_j)` and
/// `P1 = ⊕ R(-p1_i)`. The twists live on the matrices: `alpha` has source
/// `p0` and target `p1`, `beta` has source `p1` and target `p0 - d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFactorization {
    pub ring: PolyRing,
    pub f: Poly,
    pub alpha: GradedMatrix,
    pub beta: GradedMatrix,
}

/// Outcome of [`MatrixFactorization::verify`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub shape: Vec<String>,
    pub alpha_degrees: Vec<DegreeViolation>,
    pub beta_degrees: Vec<DegreeViolation>,
    /// Cells `(i, j)` where `beta * alpha` differs from `f * Id`.
    pub beta_alpha: Vec<(usize, usize)>,
    /// Cells `(i, j)` where `alpha * beta` differs from `f * Id`.
    pub alpha_beta: Vec<(usize, usize)>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.shape.is_empty()
            && self.alpha_degrees.is_empty()
            && self.beta_degrees.is_empty()
            && self.beta_alpha.is_empty()
            && self.alpha_beta.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        for s in &self.shape {
            writeln!(f, "shape: {s}")?;
        }
        for v in &self.alpha_degrees {
            writeln!(f, "alpha degree: {v}")?;
        }
        for v in &self.beta_degrees {
            writeln!(f, "beta degree: {v}")?;
        }
        for (i, j) in &self.beta_alpha {
            writeln!(f, "beta*alpha != f*Id at ({i}, {j})")?;
        }
        for (i, j) in &self.alpha_beta {
            writeln!(f, "alpha*beta != f*Id at ({i}, {j})")?;
        }
        Ok(())
    }
}

fn identity_defects(prod: &GradedMatrix, f: &Poly) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    for i in 0..prod.rows() {
        for j in 0..prod.cols() {
            let want = if i == j { f.clone() } else { Poly::zero() };
            if *prod.get(i, j) != want {
                bad.push((i, j));
            }
        }
    }
    bad
}

impl MatrixFactorization {
    /// Assemble a factorisation, checking shapes and twist bookkeeping. The
    /// identities themselves are checked by [`verify`](Self::verify).
    pub fn new(ring: PolyRing, f: Poly, alpha: GradedMatrix, beta: GradedMatrix) -> Result<Self> {
        if !f.is_homogeneous() || f.is_zero() {
            return Err(Error::Invalid("potential must be a nonzero form".into()));
        }
        ring.check(&f)?;
        for p in alpha.entries().iter().chain(beta.entries()) {
            ring.check(p)?;
        }
        let mf = MatrixFactorization {
            ring,
            f,
            alpha,
            beta,
        };
        let shape = mf.shape_problems();
        if let Some(s) = shape.first() {
            return Err(Error::InconsistentDegrees(s.clone()));
        }
        Ok(mf)
    }

    /// Build from twist vectors and string matrices.
    pub fn parse(
        ring: &PolyRing,
        f: &str,
        p0: Vec<i64>,
        p1: Vec<i64>,
        alpha: &[&[&str]],
        beta: &[&[&str]],
    ) -> Result<Self> {
        let f = ring.parse(f)?;
        let d = f.degree().unwrap_or(0) as i64;
        let a = GradedMatrix::parse(ring, p1.clone(), p0.clone(), alpha)?;
        let b = GradedMatrix::parse(ring, p0.iter().map(|t| t - d).collect(), p1, beta)?;
        MatrixFactorization::new(ring.clone(), f, a, b)
    }

    /// The rank-zero factorisation.
    pub fn zero(ring: &PolyRing, f: &Poly) -> Self {
        MatrixFactorization {
            ring: ring.clone(),
            f: f.clone(),
            alpha: GradedMatrix::zero(vec![], vec![]),
            beta: GradedMatrix::zero(vec![], vec![]),
        }
    }

    /// `R --1--> R --f--> R(d)` with `P0 = R(-t)`.
    pub fn trivial(ring: &PolyRing, f: &Poly, t: i64) -> Self {
        let d = f.degree().unwrap_or(0) as i64;
        let mut alpha = GradedMatrix::zero(vec![t], vec![t]);
        alpha.set(0, 0, ring.one());
        let mut beta = GradedMatrix::zero(vec![t - d], vec![t]);
        beta.set(0, 0, f.clone());
        MatrixFactorization {
            ring: ring.clone(),
            f: f.clone(),
            alpha,
            beta,
        }
    }

    pub fn degree(&self) -> i64 {
        self.f.degree().unwrap_or(0) as i64
    }

    pub fn rank(&self) -> usize {
        self.alpha.cols()
    }

    pub fn p0(&self) -> &[i64] {
        &self.alpha.source_twists
    }

    pub fn p1(&self) -> &[i64] {
        &self.alpha.target_twists
    }

    fn shape_problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        let (a, b) = (&self.alpha, &self.beta);
        if a.rows() != a.cols() {
            out.push(format!("alpha is {}x{}, not square", a.rows(), a.cols()));
        }
        if b.rows() != a.cols() || b.cols() != a.rows() {
            out.push(format!(
                "beta is {}x{}, alpha is {}x{}",
                b.rows(),
                b.cols(),
                a.rows(),
                a.cols()
            ));
            return out;
        }
        if b.source_twists != a.target_twists {
            out.push(format!(
                "beta source twists {:?} differ from alpha target twists {:?}",
                b.source_twists, a.target_twists
            ));
        }
        let d = self.degree();
        let expect: Vec<i64> = a.source_twists.iter().map(|t| t - d).collect();
        if b.target_twists != expect {
            out.push(format!(
                "beta target twists {:?} should be {:?}",
                b.target_twists, expect
            ));
        }
        out
    }

    pub fn verify(&self) -> VerifyReport {
        let mut rep = VerifyReport {
            shape: self.shape_problems(),
            alpha_degrees: self.alpha.validate(),
            beta_degrees: self.beta.validate(),
            ..Default::default()
        };
        if !rep.shape.is_empty() {
            return rep;
        }
        match self.beta.mul(&self.alpha) {
            Ok(p) => rep.beta_alpha = identity_defects(&p, &self.f),
            Err(e) => rep.shape.push(e.to_string()),
        }
        match self.alpha.mul(&self.beta) {
            Ok(p) => rep.alpha_beta = identity_defects(&p, &self.f),
            Err(e) => rep.shape.push(e.to_string()),
        }
        rep
    }

    pub fn is_valid(&self) -> bool {
        self.verify().is_valid()
    }

    /// The grading twist `(n)`: every `R(-a)` becomes `R(n - a)`.
    pub fn twist(&self, n: i64) -> Self {
        MatrixFactorization {
            alpha: self.alpha.twisted(n),
            beta: self.beta.twisted(n),
            ..self.clone()
        }
    }

    /// `[1](alpha, beta) = (beta, alpha(d))`.
    fn shift_once(&self) -> Self {
        MatrixFactorization {
            alpha: self.beta.clone(),
            beta: self.alpha.twisted(self.degree()),
            ..self.clone()
        }
    }

    /// The shift `[k]`; `[2]` is the twist `(d)`.
    pub fn shift(&self, k: i64) -> Self {
        let mut m = self.twist(self.degree() * k.div_euclid(2));
        if k.rem_euclid(2) == 1 {
            m = m.shift_once();
        }
        m
    }

    /// `(alpha^t(-2d), beta^t(-d))`; an involution.
    pub fn transpose(&self) -> Self {
        let d = self.degree();
        MatrixFactorization {
            alpha: self.alpha.transpose().twisted(-2 * d),
            beta: self.beta.transpose().twisted(-d),
            ..self.clone()
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.f != other.f {
            return Err(Error::PotentialMismatch);
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch("direct sum of factorisations".into()));
        }
        Ok(MatrixFactorization {
            alpha: GradedMatrix::block_diagonal(&self.alpha, &other.alpha),
            beta: GradedMatrix::block_diagonal(&self.beta, &other.beta),
            ..self.clone()
        })
    }

    /// No entry of either matrix is a nonzero constant.
    pub fn is_reduced(&self) -> bool {
        !self
            .alpha
            .entries()
            .iter()
            .chain(self.beta.entries())
            .any(Poly::is_unit)
    }

    /// Eliminate unit entries until none remain. Scans `alpha` then `beta`,
    /// row-major, and removes the first unit found each round.
    pub fn reduce(&self) -> Self {
        let mut a = self.alpha.clone();
        let mut b = self.beta.clone();
        loop {
            if let Some((i, j)) = first_unit(&a) {
                (a, b) = eliminate(&a, &b, i, j);
            } else if let Some((i, j)) = first_unit(&b) {
                (b, a) = eliminate(&b, &a, i, j);
            } else {
                break;
            }
        }
        MatrixFactorization {
            alpha: a,
            beta: b,
            ..self.clone()
        }
    }

    /// `coker(beta)` as a graded `A`-module.
    pub fn cokernel_module(&self) -> Result<Presentation> {
        Presentation::new(
            self.ring.clone(),
            Over::Hypersurface(self.f.clone()),
            self.beta.clone(),
        )?
        .minimize()
    }

    /// Sorted twists of the reduced form, used as an isomorphism invariant.
    pub fn twist_multiset(&self) -> (Vec<i64>, Vec<i64>) {
        let mut p0 = self.p0().to_vec();
        let mut p1 = self.p1().to_vec();
        p0.sort();
        p1.sort();
        (p0, p1)
    }

    pub fn display(&self) -> String {
        format!(
            "rank {} factorisation of {}\nP0 twists {:?}, P1 twists {:?}\nalpha =\n{}beta =\n{}",
            self.rank(),
            self.ring.format(&self.f),
            self.p0(),
            self.p1(),
            self.alpha.display(&self.ring),
            self.beta.display(&self.ring)
        )
    }
}

fn first_unit(m: &GradedMatrix) -> Option<(usize, usize)> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if m.get(i, j).is_unit() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Clear row `i` and column `j` of `a` around the unit `a[i][j]`, apply the
/// inverse operations to the partner `b`, then drop the split-off trivial
/// summand from both.
fn eliminate(a: &GradedMatrix, b: &GradedMatrix, i: usize, j: usize) -> (GradedMatrix, GradedMatrix) {
    let mut a = a.clone();
    let mut b = b.clone();
    let cinv = a
        .get(i, j)
        .constant_term()
        .expect("unit entry")
        .inv();
    for k in 0..a.cols() {
        if k == j || a.get(i, k).is_zero() {
            continue;
        }
        let t = a.get(i, k).scale(&cinv);
        a.add_col_multiple(k, j, &t.neg());
        b.add_row_multiple(j, k, &t);
    }
    for l in 0..a.rows() {
        if l == i || a.get(l, j).is_zero() {
            continue;
        }
        let t = a.get(l, j).scale(&cinv);
        a.add_row_multiple(l, i, &t.neg());
        b.add_col_multiple(i, l, &t);
    }
    let a_rows: Vec<usize> = (0..a.rows()).filter(|&r| r != i).collect();
    let a_cols: Vec<usize> = (0..a.cols()).filter(|&c| c != j).collect();
    let b_rows: Vec<usize> = (0..b.rows()).filter(|&r| r != j).collect();
    let b_cols: Vec<usize> = (0..b.cols()).filter(|&c| c != i).collect();
    (a.select(&a_rows, &a_cols), b.select(&b_rows, &b_cols))
}

/// How [`extract_mf`] reads a factorisation off a module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtractMode {
    /// Input presents `K`, `A` or `A_{>=1}`.
    StructureSheaf,
    /// Input presents a point module `A_p`.
    Point,
    /// The lifted pair at differential `d^s` of the input's own resolution.
    Raw(usize),
}

/// Read off the matrix factorisation attached to a graded module: truncate,
/// resolve minimally, lift the first periodic differential to `R`.
pub fn extract_mf(p: &Presentation, mode: ExtractMode) -> Result<MatrixFactorization> {
    let Some(f) = p.over.potential().cloned() else {
        return Err(Error::Invalid("extraction needs a hypersurface ring".into()));
    };
    let ring = &p.ring;
    let nv = ring.nvars();
    let p = p.minimize()?;
    let (module, s) = match mode {
        ExtractMode::Raw(s) => (p.clone(), Some(s)),
        ExtractMode::StructureSheaf => (structure_sheaf_input(&p)?, None),
        ExtractMode::Point => {
            if !is_point_module(&p)? {
                return Err(Error::NotConcentrated(
                    "input does not present a point module".into(),
                ));
            }
            let t = p.twists()[0];
            (p.truncate_geq(t + 1)?, None)
        }
    };
    let res = match s {
        Some(s) => module.minimal_resolution(s.max(1) + 1)?,
        None => module.minimal_resolution(nv + 2)?,
    };
    let (alpha, beta) = match s {
        Some(s) => res.lifted_pair(s)?.ok_or_else(|| {
            Error::ResolutionTooShort(format!("d^{s} does not lift to a matrix factorisation"))
        })?,
        None => {
            let tail = res.periodic_tail.ok_or_else(|| {
                Error::ResolutionTooShort("no periodic differential found".into())
            })?;
            (tail.alpha, tail.beta)
        }
    };
    let mf = MatrixFactorization::new(ring.clone(), f, alpha, beta)?;
    Ok(match mode {
        ExtractMode::Raw(_) => mf,
        _ => mf.shift(nv as i64 - 3),
    })
}

fn structure_sheaf_input(p: &Presentation) -> Result<Presentation> {
    let nv = p.ring.nvars() as i64;
    let tw = p.twists().to_vec();
    if tw.len() == 1 {
        let t = tw[0];
        let free = Presentation::free(&p.ring, p.over.clone(), vec![t]);
        let hf1 = p.hilbert_function(t + 1)?;
        let is_free = p.relations.cols() == 0;
        let is_residue = p.hilbert_function(t)? == 1 && hf1 == 0;
        if is_free || is_residue {
            return free.truncate_geq(t + 1);
        }
    }
    if !tw.is_empty() && tw.len() as i64 == nv && tw.iter().all(|&t| t == tw[0]) {
        let t = tw[0] - 1;
        let a = Presentation::free(&p.ring, p.over.clone(), vec![t]);
        let matches = (1..4).all(|k| {
            matches!(
                (p.hilbert_function(t + k), a.hilbert_function(t + k)),
                (Ok(x), Ok(y)) if x == y
            )
        });
        if matches {
            return Ok(p.clone());
        }
    }
    Err(Error::NotConcentrated(
        "input is not K, A or the irrelevant ideal".into(),
    ))
}

fn is_point_module(p: &Presentation) -> Result<bool> {
    if p.twists().len() != 1 {
        return Ok(false);
    }
    let t = p.twists()[0];
    for k in 0..4 {
        if p.hilbert_function(t + k)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
