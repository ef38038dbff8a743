//! Gröbner bases for graded submodules of free modules over `R = K[x]` and
//! over a hypersurface ring `A = R/(f)`.
//!
//! Module terms are ordered position-over-term: a lower component index is
//! larger, ties are broken by degrevlex. Computations over `A` run over `R`
//! with `f * e_i` adjoined to the generators.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::GradedMatrix;
use crate::poly::{Monomial, Poly};

/// Base ring of a module computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Over {
    /// The polynomial ring `R`.
    Poly,
    /// The hypersurface ring `R/(f)`.
    Hypersurface(Poly),
}

impl Over {
    pub fn potential(&self) -> Option<&Poly> {
        match self {
            Over::Poly => None,
            Over::Hypersurface(f) => Some(f),
        }
    }
}

/// Sparse module element: terms `(component, monomial, coefficient)` in
/// descending module order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModVec {
    terms: Vec<(usize, Monomial, Scalar)>,
}

fn cmp_term(a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    match b.0.cmp(&a.0) {
        Ordering::Equal => a.1.cmp(b.1),
        o => o,
    }
}

impl ModVec {
    pub fn zero() -> Self {
        ModVec { terms: Vec::new() }
    }

    pub fn from_dense(v: &[Poly]) -> Self {
        Self::from_dense_offset(v, 0)
    }

    /// Dense vector placed in components `offset..offset + v.len()`.
    pub fn from_dense_offset(v: &[Poly], offset: usize) -> Self {
        let mut terms = Vec::new();
        for (k, p) in v.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push((k + offset, m.clone(), c.clone()));
            }
        }
        // components ascending and each poly already descending
        ModVec { terms }
    }

    pub fn to_dense(&self, ncomp: usize) -> Vec<Poly> {
        let mut buckets: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); ncomp];
        for (k, m, c) in &self.terms {
            buckets[*k].push((m.clone(), c.clone()));
        }
        buckets.into_iter().map(Poly::from_terms).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(usize, Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn leading_component(&self) -> Option<usize> {
        self.terms.first().map(|t| t.0)
    }

    pub fn terms(&self) -> &[(usize, Monomial, Scalar)] {
        &self.terms
    }

    fn mul_term(&self, m: &Monomial, c: &Scalar) -> ModVec {
        ModVec {
            terms: self
                .terms
                .iter()
                .map(|(k, t, a)| (*k, t.mul(m), a * c))
                .collect(),
        }
    }

    fn scale(&self, c: &Scalar) -> ModVec {
        ModVec {
            terms: self
                .terms
                .iter()
                .map(|(k, t, a)| (*k, t.clone(), a * c))
                .collect(),
        }
    }

    /// `self - c * m * other`.
    fn sub_scaled(&self, other: &ModVec, m: &Monomial, c: &Scalar) -> ModVec {
        let a = &self.terms;
        let mut out = Vec::with_capacity(a.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                let bm = b[j].1.mul(m);
                let o = cmp_term((a[i].0, &a[i].1), (b[j].0, &bm));
                if o == Ordering::Equal {
                    let v = &a[i].2 - &(&b[j].2 * c);
                    if !v.is_zero() {
                        out.push((a[i].0, a[i].1.clone(), v));
                    }
                    i += 1;
                    j += 1;
                    continue;
                }
                o
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                _ => {
                    out.push((b[j].0, b[j].1.mul(m), -&(&b[j].2 * c)));
                    j += 1;
                }
            }
        }
        ModVec { terms: out }
    }

    fn monic(&self) -> ModVec {
        match self.leading() {
            Some((_, _, c)) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    /// Degree of a homogeneous element relative to `twists`.
    fn degree(&self, twists: &[i64]) -> Option<i64> {
        self.leading()
            .map(|(k, m, _)| twists[*k] + m.degree() as i64)
    }

    fn is_homogeneous(&self, twists: &[i64]) -> bool {
        match self.degree(twists) {
            None => true,
            Some(d) => self
                .terms
                .iter()
                .all(|(k, m, _)| twists[*k] + m.degree() as i64 == d),
        }
    }
}

/// A finitely generated graded submodule of `⊕ R(-t_i)`, over `R` or `A`.
#[derive(Clone, Debug)]
pub struct ModuleGens {
    pub twists: Vec<i64>,
    pub generators: Vec<Vec<Poly>>,
    pub over: Over,
}

impl ModuleGens {
    pub fn new(twists: Vec<i64>, generators: Vec<Vec<Poly>>, over: Over) -> Result<Self> {
        let g = ModuleGens {
            twists,
            generators,
            over,
        };
        for v in &g.generators {
            if v.len() != g.twists.len() {
                return Err(Error::Shape(format!(
                    "generator of length {} in a free module of rank {}",
                    v.len(),
                    g.twists.len()
                )));
            }
            g.generator_degree(v)?;
        }
        Ok(g)
    }

    /// Columns of a graded matrix as generators of a submodule of its target.
    pub fn from_columns(m: &GradedMatrix, over: Over) -> Self {
        ModuleGens {
            twists: m.target_twists.clone(),
            generators: (0..m.cols()).map(|j| m.column(j)).collect(),
            over,
        }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Degree of a generator; `None` for the zero vector.
    pub fn generator_degree(&self, v: &[Poly]) -> Result<Option<i64>> {
        let mv = ModVec::from_dense(v);
        if !mv.is_homogeneous(&self.twists) {
            return Err(Error::InconsistentDegrees(
                "generator is not homogeneous for the ambient twists".into(),
            ));
        }
        Ok(mv.degree(&self.twists))
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.generators
            .iter()
            .map(|v| {
                ModVec::from_dense(v)
                    .degree(&self.twists)
                    .unwrap_or(i64::MIN)
            })
            .collect()
    }

    /// Generators as the columns of a graded matrix.
    pub fn to_matrix(&self) -> GradedMatrix {
        let degs = self.degrees();
        let r = self.rank();
        let c = self.len();
        let mut entries = vec![Poly::zero(); r * c];
        for (j, v) in self.generators.iter().enumerate() {
            for (i, p) in v.iter().enumerate() {
                entries[i * c + j] = p.clone();
            }
        }
        GradedMatrix::new(self.twists.clone(), degs, entries).expect("consistent shape")
    }

    fn all_generators(&self) -> Vec<ModVec> {
        let mut out: Vec<ModVec> = self
            .generators
            .iter()
            .map(|v| ModVec::from_dense(v))
            .filter(|v| !v.is_zero())
            .collect();
        if let Over::Hypersurface(f) = &self.over {
            let nv = f.leading().map(|(m, _)| m.nvars()).unwrap_or(0);
            for i in 0..self.rank() {
                let mut v = vec![Poly::zero(); self.rank()];
                v[i] = f.clone();
                let _ = nv;
                out.push(ModVec::from_dense(&v));
            }
        }
        out
    }
}

/// A reduced Gröbner basis of a submodule (over `A`: of its preimage in `R^r`).
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub twists: Vec<i64>,
    pub over: Over,
    basis: Vec<ModVec>,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[ModVec] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Basis elements as dense vectors.
    pub fn dense(&self) -> Vec<Vec<Poly>> {
        self.basis
            .iter()
            .map(|v| v.to_dense(self.twists.len()))
            .collect()
    }

    pub fn normal_form(&self, v: &[Poly]) -> Result<Vec<Poly>> {
        if v.len() != self.twists.len() {
            return Err(Error::Shape(format!(
                "vector of length {} against a basis in rank {}",
                v.len(),
                self.twists.len()
            )));
        }
        Ok(reduce_full(&ModVec::from_dense(v), &self.basis).to_dense(self.twists.len()))
    }

    pub fn contains(&self, v: &[Poly]) -> Result<bool> {
        Ok(self.normal_form(v)?.iter().all(Poly::is_zero))
    }

    /// Every S-pair reduces to zero.
    pub fn check_buchberger(&self) -> bool {
        for i in 0..self.basis.len() {
            for j in (i + 1)..self.basis.len() {
                if let Some(s) = spoly(&self.basis[i], &self.basis[j]) {
                    if !reduce_full(&s, &self.basis).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Leading terms `(component, monomial)`.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.basis
            .iter()
            .filter_map(|v| v.leading().map(|(k, m, _)| (*k, m.clone())))
            .collect()
    }
}

pub fn groebner_basis(gens: &ModuleGens) -> Result<GroebnerBasis> {
    for v in &gens.generators {
        gens.generator_degree(v)?;
    }
    let basis = buchberger(gens.all_generators(), &gens.twists);
    Ok(GroebnerBasis {
        twists: gens.twists.clone(),
        over: gens.over.clone(),
        basis,
    })
}

fn spoly(a: &ModVec, b: &ModVec) -> Option<ModVec> {
    let (ka, ma, ca) = a.leading()?;
    let (kb, mb, cb) = b.leading()?;
    if ka != kb {
        return None;
    }
    let l = ma.lcm(mb);
    let ta = ma.quotient_of(&l);
    let tb = mb.quotient_of(&l);
    let left = a.mul_term(&ta, &cb.clone());
    Some(left.sub_scaled(b, &tb, ca))
}

fn find_reducer<'a>(basis: &'a [ModVec], k: usize, m: &Monomial) -> Option<&'a ModVec> {
    basis.iter().find(|g| {
        g.leading()
            .is_some_and(|(gk, gm, _)| *gk == k && gm.divides(m))
    })
}

fn reduce_top(v: &ModVec, basis: &[ModVec]) -> ModVec {
    let mut p = v.clone();
    while let Some((k, m, c)) = p.leading().cloned() {
        match find_reducer(basis, k, &m) {
            Some(g) => {
                let (_, gm, gc) = g.leading().expect("nonzero basis element");
                let t = gm.quotient_of(&m);
                p = p.sub_scaled(g, &t, &(&c / gc));
            }
            None => break,
        }
    }
    p
}

fn reduce_full(v: &ModVec, basis: &[ModVec]) -> ModVec {
    let mut p = v.clone();
    let mut rem: Vec<(usize, Monomial, Scalar)> = Vec::new();
    while let Some((k, m, c)) = p.leading().cloned() {
        match find_reducer(basis, k, &m) {
            Some(g) => {
                let (_, gm, gc) = g.leading().expect("nonzero basis element");
                let t = gm.quotient_of(&m);
                p = p.sub_scaled(g, &t, &(&c / gc));
            }
            None => {
                rem.push((k, m, c));
                p.terms.remove(0);
            }
        }
    }
    ModVec { terms: rem }
}

/// Buchberger's algorithm with the normal selection strategy. Returns the
/// reduced basis sorted by ascending leading term.
fn buchberger(gens: Vec<ModVec>, twists: &[i64]) -> Vec<ModVec> {
    let ideal_case = twists.len() == 1;
    let mut basis: Vec<ModVec> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut queue: Vec<(i64, usize, usize)> = Vec::new();
    let mut inputs: Vec<ModVec> = gens;
    inputs.sort_by_key(|v| v.degree(twists).unwrap_or(i64::MIN));
    let mut inputs = inputs.into_iter().peekable();

    let add = |v: ModVec,
               basis: &mut Vec<ModVec>,
               pending: &mut HashSet<(usize, usize)>,
               queue: &mut Vec<(i64, usize, usize)>| {
        let v = v.monic();
        let n = basis.len();
        let (k, m, _) = v.leading().cloned().expect("nonzero");
        for (i, g) in basis.iter().enumerate() {
            let (gk, gm, _) = g.leading().expect("nonzero");
            if *gk != k {
                continue;
            }
            if ideal_case && gm.coprime(&m) {
                continue;
            }
            let d = twists[k] + gm.lcm(&m).degree() as i64;
            pending.insert((i, n));
            queue.push((d, i, n));
        }
        basis.push(v);
    };

    loop {
        // next pair of minimal degree, unless an input of smaller degree waits
        let best = queue
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 .0, a.1 .2, a.1 .1).cmp(&(b.1 .0, b.1 .2, b.1 .1)))
            .map(|(idx, t)| (idx, *t));
        let next_input_deg = inputs.peek().and_then(|v| v.degree(twists));
        match (best, next_input_deg) {
            (None, None) => break,
            (Some((_, (d, _, _))), Some(di)) if di <= d => {
                let v = inputs.next().expect("peeked");
                let r = reduce_top(&v, &basis);
                if !r.is_zero() {
                    add(r, &mut basis, &mut pending, &mut queue);
                }
            }
            (None, Some(_)) => {
                let v = inputs.next().expect("peeked");
                let r = reduce_top(&v, &basis);
                if !r.is_zero() {
                    add(r, &mut basis, &mut pending, &mut queue);
                }
            }
            (Some((idx, (_, i, j))), _) => {
                queue.swap_remove(idx);
                pending.remove(&(i, j));
                if chain_criterion(&basis, &pending, i, j) {
                    continue;
                }
                if let Some(s) = spoly(&basis[i], &basis[j]) {
                    let r = reduce_top(&s, &basis);
                    if !r.is_zero() {
                        add(r, &mut basis, &mut pending, &mut queue);
                    }
                }
            }
        }
    }
    interreduce(basis)
}

/// Buchberger's second criterion: skip `(i, j)` when some `k` has a leading
/// term dividing `lcm(i, j)` and both `(i, k)` and `(j, k)` are already done.
fn chain_criterion(
    basis: &[ModVec],
    pending: &HashSet<(usize, usize)>,
    i: usize,
    j: usize,
) -> bool {
    let (ki, mi, _) = basis[i].leading().expect("nonzero");
    let (_, mj, _) = basis[j].leading().expect("nonzero");
    let l = mi.lcm(mj);
    for (k, g) in basis.iter().enumerate() {
        if k == i || k == j {
            continue;
        }
        let (gk, gm, _) = g.leading().expect("nonzero");
        if gk != ki || !gm.divides(&l) {
            continue;
        }
        let p1 = (i.min(k), i.max(k));
        let p2 = (j.min(k), j.max(k));
        if !pending.contains(&p1) && !pending.contains(&p2) {
            return true;
        }
    }
    false
}

fn interreduce(basis: Vec<ModVec>) -> Vec<ModVec> {
    // minimal basis: drop elements whose leading term is divisible by another
    let mut keep: Vec<ModVec> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let (k, m, _) = g.leading().expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            if i == j {
                return false;
            }
            let (hk, hm, _) = h.leading().expect("nonzero");
            hk == k && hm.divides(m) && (hm != m || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let (head, rest) = keep[i].terms.split_first().expect("nonzero");
        let others: Vec<ModVec> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let tail = reduce_full(&ModVec { terms: rest.to_vec() }, &others);
        let mut terms = vec![head.clone()];
        terms.extend(tail.terms);
        out.push(ModVec { terms }.monic());
    }
    out.sort_by(|a, b| {
        let (ka, ma, _) = a.leading().expect("nonzero");
        let (kb, mb, _) = b.leading().expect("nonzero");
        cmp_term((*ka, ma), (*kb, mb))
    });
    out
}

/// Generators of the kernel of `m` (a map of free modules over `over`),
/// as a submodule of the source. Over `A` the generators are reduced modulo
/// `f` and minimal.
pub fn kernel_of_map(m: &GradedMatrix, over: &Over) -> Result<ModuleGens> {
    if !m.validate().is_empty() {
        return Err(Error::InconsistentDegrees(
            "matrix entries disagree with twists".into(),
        ));
    }
    let r = m.rows();
    let c = m.cols();
    let Some(one) = unit_poly(m, over) else {
        return Err(Error::Invalid(
            "kernel of a zero matrix over R needs a ring context".into(),
        ));
    };
    if m.is_zero() {
        let generators = (0..c)
            .map(|j| {
                let mut v = vec![Poly::zero(); c];
                v[j] = one.clone();
                v
            })
            .collect();
        return Ok(ModuleGens {
            twists: m.source_twists.clone(),
            generators,
            over: over.clone(),
        });
    }
    let mut twists = m.target_twists.clone();
    twists.extend_from_slice(&m.source_twists);
    let mut gens = Vec::new();
    for j in 0..c {
        let mut v = ModVec::from_dense(&m.column(j));
        v.terms.extend(unit_terms(r + j, m));
        gens.push(v);
    }
    if let Over::Hypersurface(f) = over {
        let d = f.degree().unwrap_or(0) as i64;
        for i in 0..r {
            twists.push(m.target_twists[i] + d);
            let mut terms: Vec<(usize, Monomial, Scalar)> =
                f.terms().iter().map(|(mo, co)| (i, mo.clone(), co.clone())).collect();
            terms.push((r + c + i, Monomial::one(nvars_of(f)), one_of(f)));
            gens.push(ModVec { terms });
        }
    }
    gens.retain(|v| !v.is_zero());
    let basis = buchberger(gens, &twists);
    let ncomp = twists.len();
    let mut kernel: Vec<Vec<Poly>> = Vec::new();
    for g in basis {
        if g.leading_component().is_some_and(|k| k >= r) {
            let dense = g.to_dense(ncomp);
            kernel.push(dense[r..r + c].to_vec());
        }
    }
    let mut out = ModuleGens {
        twists: m.source_twists.clone(),
        generators: kernel,
        over: over.clone(),
    };
    if let Over::Hypersurface(f) = over {
        out.generators = out
            .generators
            .iter()
            .map(|v| v.iter().map(|p| reduce_mod(p, f)).collect::<Vec<_>>())
            .filter(|v: &Vec<Poly>| v.iter().any(|p| !p.is_zero()))
            .collect();
        out = minimalize(&out)?;
    } else {
        out = minimalize(&out)?;
    }
    Ok(out)
}

fn unit_terms(k: usize, m: &GradedMatrix) -> Vec<(usize, Monomial, Scalar)> {
    let sample = m
        .entries()
        .iter()
        .find_map(|p| p.leading().cloned())
        .expect("kernel of a zero matrix handled by caller");
    vec![(k, Monomial::one(sample.0.nvars()), sample.1.field().one())]
}

fn unit_poly(m: &GradedMatrix, over: &Over) -> Option<Poly> {
    let (mono, c) = m
        .entries()
        .iter()
        .find_map(|p| p.leading().cloned())
        .or_else(|| over.potential().and_then(|f| f.leading().cloned()))?;
    Some(Poly::constant(c.field().one(), mono.nvars()))
}

fn nvars_of(f: &Poly) -> usize {
    f.leading().map(|(m, _)| m.nvars()).expect("nonzero potential")
}

fn one_of(f: &Poly) -> Scalar {
    f.leading().map(|(_, c)| c.field().one()).expect("nonzero potential")
}

/// Canonical representative of `p` modulo the principal ideal `(f)`.
pub fn reduce_mod(p: &Poly, f: &Poly) -> Poly {
    let basis = vec![ModVec::from_dense(std::slice::from_ref(f)).monic()];
    let r = reduce_full(&ModVec::from_dense(std::slice::from_ref(p)), &basis);
    r.to_dense(1).pop().expect("one component")
}

/// First syzygies of the generators, as a submodule of `⊕ R(-deg g_j)`.
pub fn syzygy_basis(gens: &ModuleGens) -> Result<ModuleGens> {
    if gens.is_empty() {
        return Ok(ModuleGens {
            twists: vec![],
            generators: vec![],
            over: gens.over.clone(),
        });
    }
    let m = gens.to_matrix();
    kernel_of_map(&m, &gens.over)
}

/// Drop generators lying in the span of the ones kept so far, after a stable
/// sort by degree. The result minimally generates the same module.
pub fn minimalize(gens: &ModuleGens) -> Result<ModuleGens> {
    let degs = gens.degrees();
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by_key(|&i| degs[i]);
    let mut kept: Vec<Vec<Poly>> = Vec::new();
    let mut current = ModuleGens {
        twists: gens.twists.clone(),
        generators: vec![],
        over: gens.over.clone(),
    };
    let mut gb: Option<GroebnerBasis> = None;
    for i in order {
        let v = &gens.generators[i];
        if v.iter().all(Poly::is_zero) {
            continue;
        }
        let member = match &gb {
            Some(b) => b.contains(v)?,
            None => match &gens.over {
                Over::Poly => false,
                Over::Hypersurface(_) => groebner_basis(&current)?.contains(v)?,
            },
        };
        if !member {
            kept.push(v.clone());
            current.generators = kept.clone();
            gb = Some(groebner_basis(&current)?);
        }
    }
    Ok(current)
}

/// Coefficients `c` with `sum_j c_j * columns_j = v` over `R`, if any.
pub fn lift(v: &[Poly], columns: &GradedMatrix) -> Result<Option<Vec<Poly>>> {
    let r = columns.rows();
    let c = columns.cols();
    if v.len() != r {
        return Err(Error::Shape("lift target has wrong length".into()));
    }
    if v.iter().all(Poly::is_zero) {
        return Ok(Some(vec![Poly::zero(); c]));
    }
    if columns.is_zero() {
        return Ok(None);
    }
    let mut twists = columns.target_twists.clone();
    twists.extend_from_slice(&columns.source_twists);
    let mut gens = Vec::new();
    for j in 0..c {
        let mut g = ModVec::from_dense(&columns.column(j));
        g.terms.extend(unit_terms(r + j, columns));
        gens.push(g);
    }
    let basis = buchberger(gens, &twists);
    let nf = reduce_full(&ModVec::from_dense(v), &basis);
    if nf.leading_component().is_some_and(|k| k < r) {
        return Ok(None);
    }
    let dense = nf.to_dense(r + c);
    Ok(Some(dense[r..].iter().map(Poly::neg).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::PolyRing;

    fn ring() -> PolyRing {
        PolyRing::xyz(FieldSpec::Rationals)
    }

    fn ideal(r: &PolyRing, gens: &[&str], over: Over) -> ModuleGens {
        let polys: Vec<Vec<Poly>> = gens.iter().map(|s| vec![r.parse(s).unwrap()]).collect();
        ModuleGens::new(vec![0], polys, over).unwrap()
    }

    #[test]
    fn principal_ideal_basis() {
        let r = ring();
        let f = r.parse("Y^2*Z - X^3 - Z^3").unwrap();
        let gb = groebner_basis(&ideal(&r, &["Y^2*Z - X^3 - Z^3"], Over::Poly)).unwrap();
        assert_eq!(gb.len(), 1);
        assert!(gb.contains(&[f]).unwrap());
        assert!(gb.check_buchberger());
    }

    #[test]
    fn zero_module_has_empty_basis() {
        let gb = groebner_basis(&ModuleGens::new(vec![0, 1], vec![], Over::Poly).unwrap()).unwrap();
        assert!(gb.is_empty());
    }

    #[test]
    fn point_ideal_contains_cubic() {
        let r = ring();
        // (2, 3) lies on Y^2 Z = X^3 + Z^3
        let with_f = groebner_basis(&ideal(
            &r,
            &["X - 2*Z", "Y - 3*Z", "Y^2*Z - X^3 - Z^3"],
            Over::Poly,
        ))
        .unwrap();
        let without = groebner_basis(&ideal(&r, &["X - 2*Z", "Y - 3*Z"], Over::Poly)).unwrap();
        assert_eq!(with_f.dense(), without.dense());
        let f = r.parse("Y^2*Z - X^3 - Z^3").unwrap();
        assert!(without.normal_form(&[f]).unwrap()[0].is_zero());
    }

    #[test]
    fn normal_forms() {
        let r = ring();
        let gb = groebner_basis(&ideal(&r, &["Y"], Over::Poly)).unwrap();
        assert_eq!(gb.normal_form(&[r.var(0)]).unwrap()[0], r.var(0));
        // degrevlex with X > Y > Z leads Y^2 Z - X^3 - Z^3 with X^3
        let gb = groebner_basis(&ideal(&r, &["Y^2*Z - X^3 - Z^3"], Over::Poly)).unwrap();
        let x3 = r.parse("X^3").unwrap();
        assert_eq!(
            gb.normal_form(&[x3]).unwrap()[0],
            r.parse("Y^2*Z - Z^3").unwrap()
        );
        let y2z = r.parse("Y^2*Z").unwrap();
        assert_eq!(gb.normal_form(&[y2z.clone()]).unwrap()[0], y2z);
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring();
        let syz = syzygy_basis(&ideal(&r, &["X", "Y"], Over::Poly)).unwrap();
        assert_eq!(syz.len(), 1);
        let v = &syz.generators[0];
        // proportional to (Y, -X)
        let check = v[0].mul(&r.var(0)).add(&v[1].mul(&r.var(1)));
        assert!(check.is_zero());
        assert_eq!(v[0].degree(), Some(1));
    }

    #[test]
    fn nonzerodivisor_has_no_syzygies() {
        let r = ring();
        let syz = syzygy_basis(&ideal(&r, &["Y^2*Z - X^3 - Z^3"], Over::Poly)).unwrap();
        assert!(syz.is_empty());
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let r = ring();
        let id = GradedMatrix::identity(&r, vec![0, 1]);
        assert!(kernel_of_map(&id, &Over::Poly).unwrap().is_empty());
    }

    #[test]
    fn inhomogeneous_generator_rejected() {
        let r = ring();
        let res = ModuleGens::new(vec![0], vec![vec![r.parse("X + Y^2").unwrap()]], Over::Poly);
        assert!(matches!(res, Err(Error::InconsistentDegrees(_))));
    }

    #[test]
    fn lift_through_columns() {
        let r = ring();
        let m = GradedMatrix::parse(&r, vec![0], vec![1, 1], &[&["X", "Y"]]).unwrap();
        let v = vec![r.parse("X^2 + 3*X*Y - Y^2").unwrap()];
        let c = lift(&v, &m).unwrap().unwrap();
        let back = c[0].mul(&r.var(0)).add(&c[1].mul(&r.var(1)));
        assert_eq!(back, v[0]);
        assert!(lift(&[r.var(2)], &m).unwrap().is_none());
    }
}
