//! Graded module presentations, minimal free resolutions over `A = R/(f)`,
//! Hilbert functions, truncation and the periodic tail of a resolution.

use crate::error::{Error, Result};
use crate::groebner::{self, groebner_basis, kernel_of_map, lift, minimalize, ModuleGens, Over};
use crate::matrix::GradedMatrix;
use crate::poly::{Monomial, Poly, PolyRing};

/// A graded module `coker(relations : F1 -> F0)` with `F0 = ⊕ A(-twists_i)`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub ring: PolyRing,
    pub over: Over,
    pub relations: GradedMatrix,
}

impl Presentation {
    pub fn new(ring: PolyRing, over: Over, relations: GradedMatrix) -> Result<Self> {
        let bad = relations.validate();
        if let Some(v) = bad.first() {
            return Err(Error::InconsistentDegrees(format!("relation matrix: {v}")));
        }
        for p in relations.entries() {
            ring.check(p)?;
        }
        if let Some(f) = over.potential() {
            ring.check(f)?;
        }
        Ok(Presentation {
            ring,
            over,
            relations,
        })
    }

    /// The free module `⊕ A(-t)`.
    pub fn free(ring: &PolyRing, over: Over, twists: Vec<i64>) -> Self {
        Presentation {
            ring: ring.clone(),
            over,
            relations: GradedMatrix::zero(twists, vec![]),
        }
    }

    /// The residue field `K = A/(X_0, ..., X_n)`.
    pub fn residue_field(ring: &PolyRing, f: &Poly) -> Self {
        let vars: Vec<String> = (0..ring.nvars()).map(|i| ring.format(&ring.var(i))).collect();
        let row: Vec<&str> = vars.iter().map(String::as_str).collect();
        let rel = GradedMatrix::parse(ring, vec![0], vec![1; ring.nvars()], &[&row])
            .expect("variables parse");
        Presentation {
            ring: ring.clone(),
            over: Over::Hypersurface(f.clone()),
            relations: rel,
        }
    }

    /// The point module `A/(X_j - p_j X_i : j != i)` of a projective point
    /// with coordinate `p_i = 1`.
    pub fn point_module(ring: &PolyRing, f: &Poly, coords: &[Poly]) -> Result<Self> {
        if coords.len() != ring.nvars() {
            return Err(Error::Shape("point has the wrong number of coordinates".into()));
        }
        let Some(i) = coords.iter().rposition(|c| c.constant_term().is_some_and(|v| v.is_one())) else {
            return Err(Error::Invalid("point needs a coordinate equal to 1".into()));
        };
        let mut rel = Vec::new();
        for (j, c) in coords.iter().enumerate() {
            if j != i {
                rel.push(ring.var(j).sub(&c.mul(&ring.var(i))));
            }
        }
        let n = rel.len();
        let m = GradedMatrix::new(vec![0], vec![1; n], rel)?;
        let eval: Vec<_> = coords
            .iter()
            .map(|c| c.constant_term().unwrap_or_else(|| ring.field.zero()))
            .collect();
        if !f.eval(&eval).is_some_and(|v| v.is_zero()) {
            return Err(Error::PointNotOnCurve(format!("{eval:?}")));
        }
        Presentation::new(ring.clone(), Over::Hypersurface(f.clone()), m)
    }

    pub fn twists(&self) -> &[i64] {
        &self.relations.target_twists
    }

    pub fn generators(&self) -> usize {
        self.relations.rows()
    }

    fn relation_gens(&self) -> ModuleGens {
        ModuleGens::from_columns(&self.relations, self.over.clone())
    }

    /// Remove redundant generators (unit entries) and redundant relations.
    pub fn minimize(&self) -> Result<Presentation> {
        let mut rel = self.reduced_relations()?;
        loop {
            let mut pivot = None;
            'scan: for j in 0..rel.cols() {
                for i in 0..rel.rows() {
                    if rel.get(i, j).is_unit() {
                        pivot = Some((i, j));
                        break 'scan;
                    }
                }
            }
            let Some((i, j)) = pivot else { break };
            let c = rel.get(i, j).clone();
            for l in 0..rel.cols() {
                if l != j && !rel.get(i, l).is_zero() {
                    let t = rel.get(i, l).exact_div(&c)?.neg();
                    rel.add_col_multiple(l, j, &t);
                }
            }
            let rows: Vec<usize> = (0..rel.rows()).filter(|&k| k != i).collect();
            let cols: Vec<usize> = (0..rel.cols()).filter(|&k| k != j).collect();
            rel = rel.select(&rows, &cols);
            let p = Presentation {
                relations: rel,
                ..self.clone()
            };
            rel = p.reduced_relations()?;
        }
        Ok(Presentation {
            relations: rel,
            ..self.clone()
        })
    }

    fn reduced_relations(&self) -> Result<GradedMatrix> {
        let mut gens = self.relation_gens();
        if let Some(f) = self.over.potential() {
            for v in gens.generators.iter_mut() {
                for p in v.iter_mut() {
                    *p = groebner::reduce_mod(p, f);
                }
            }
        }
        gens.generators.retain(|v| v.iter().any(|p| !p.is_zero()));
        let min = minimalize(&gens)?;
        Ok(columns_matrix(&min))
    }

    /// `dim_K` of the degree-`i` part of the module.
    pub fn hilbert_function(&self, i: i64) -> Result<u64> {
        let gb = groebner_basis(&self.relation_gens())?;
        let lts = gb.leading_terms();
        let mut count = 0u64;
        for (k, &t) in self.twists().iter().enumerate() {
            let deg = i - t;
            if deg < 0 {
                continue;
            }
            for m in Monomial::all_of_degree(self.ring.nvars(), deg as u32) {
                if !lts.iter().any(|(c, lm)| *c == k && lm.divides(&m)) {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// Presentation of `tr_{>=k}` of the module, minimised.
    pub fn truncate_geq(&self, k: i64) -> Result<Presentation> {
        let nv = self.ring.nvars();
        let mut gens_cols: Vec<Vec<Poly>> = Vec::new();
        let mut degs = Vec::new();
        for (j, &t) in self.twists().iter().enumerate() {
            let monos = if t >= k {
                vec![Monomial::one(nv)]
            } else {
                Monomial::all_of_degree(nv, (k - t) as u32)
            };
            for m in monos {
                let mut v = vec![Poly::zero(); self.generators()];
                v[j] = Poly::monomial(m.clone(), self.ring.field.one());
                degs.push(t + m.degree() as i64);
                gens_cols.push(v);
            }
        }
        let g = gens_cols.len();
        let r = self.generators();
        let mut entries = vec![Poly::zero(); r * g];
        for (j, v) in gens_cols.iter().enumerate() {
            for (i, p) in v.iter().enumerate() {
                entries[i * g + j] = p.clone();
            }
        }
        let t = GradedMatrix::new(self.twists().to_vec(), degs.clone(), entries)?;
        if g == 0 {
            return Ok(Presentation::free(&self.ring, self.over.clone(), vec![]));
        }
        let whole = t.hcat(&self.relations)?;
        let ker = kernel_of_map(&whole, &self.over)?;
        let projected: Vec<Vec<Poly>> = ker
            .generators
            .iter()
            .map(|v| v[..g].to_vec())
            .filter(|v| v.iter().any(|p| !p.is_zero()))
            .collect();
        let rel_gens = ModuleGens {
            twists: degs,
            generators: projected,
            over: self.over.clone(),
        };
        let p = Presentation {
            ring: self.ring.clone(),
            over: self.over.clone(),
            relations: columns_matrix(&rel_gens),
        };
        p.minimize()
    }

    /// Minimal graded free resolution with at most `length` differentials.
    pub fn minimal_resolution(&self, length: usize) -> Result<Resolution> {
        if length == 0 {
            return Err(Error::Invalid("resolution length must be at least 1".into()));
        }
        let p = self.minimize()?;
        let mut maps: Vec<GradedMatrix> = Vec::new();
        if p.relations.cols() > 0 {
            maps.push(p.relations.clone());
            while maps.len() < length {
                let last = maps.last().expect("nonempty");
                let ker = kernel_of_map(last, &self.over)?;
                if ker.is_empty() {
                    break;
                }
                maps.push(columns_matrix(&ker));
            }
        }
        let minimal = maps
            .iter()
            .all(|m| m.entries().iter().all(|e| e.is_zero() || e.constant_term().is_none()));
        let mut res = Resolution {
            ring: self.ring.clone(),
            over: self.over.clone(),
            f0_twists: p.twists().to_vec(),
            maps,
            minimal,
            periodic_tail: None,
        };
        res.periodic_tail = detect_periodicity(&res)?;
        Ok(res)
    }
}

/// Generators as the columns of a matrix whose source twists are their degrees.
fn columns_matrix(gens: &ModuleGens) -> GradedMatrix {
    if gens.is_empty() {
        return GradedMatrix::zero(gens.twists.clone(), vec![]);
    }
    gens.to_matrix()
}

/// A matrix factorisation pair read off a resolution: `alpha : P0 -> P1` and
/// `beta : P1 -> P0(d)` over `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicTail {
    pub start: usize,
    pub alpha: GradedMatrix,
    pub beta: GradedMatrix,
}

#[derive(Clone, Debug)]
pub struct Resolution {
    pub ring: PolyRing,
    pub over: Over,
    /// Twists of `F_0`.
    pub f0_twists: Vec<i64>,
    /// `maps[k]` is `d^{k+1} : F_{k+1} -> F_k`.
    pub maps: Vec<GradedMatrix>,
    pub minimal: bool,
    pub periodic_tail: Option<PeriodicTail>,
}

impl Resolution {
    /// Twists of `F_0, F_1, ...`.
    pub fn twists(&self) -> Vec<Vec<i64>> {
        let mut out = vec![self.f0_twists.clone()];
        for m in &self.maps {
            out.push(m.source_twists.clone());
        }
        out
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.twists().iter().map(Vec::len).collect()
    }

    /// `d^s` for `s >= 1`.
    pub fn differential(&self, s: usize) -> Option<&GradedMatrix> {
        if s == 0 {
            return None;
        }
        self.maps.get(s - 1)
    }

    /// Every composite `d^k d^{k+1}` vanishes over the base ring.
    pub fn is_complex(&self) -> Result<bool> {
        for w in self.maps.windows(2) {
            let prod = w[0].mul(&w[1])?;
            for p in prod.entries() {
                let r = match self.over.potential() {
                    Some(f) => groebner::reduce_mod(p, f),
                    None => p.clone(),
                };
                if !r.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The pair lifted from `d^s`, if `d^s` presents a maximal Cohen-Macaulay
    /// module.
    pub fn lifted_pair(&self, s: usize) -> Result<Option<(GradedMatrix, GradedMatrix)>> {
        let Some(d) = self.differential(s) else {
            return Err(Error::ResolutionTooShort(format!(
                "no differential d^{s} in a resolution with {} maps",
                self.maps.len()
            )));
        };
        let Some(f) = self.over.potential() else {
            return Ok(None);
        };
        lift_to_factorization(d, f)
    }
}

/// Smallest `s` whose differential lifts to a matrix factorisation.
pub fn detect_periodicity(res: &Resolution) -> Result<Option<PeriodicTail>> {
    for s in 1..=res.maps.len() {
        if let Some((a, b)) = res.lifted_pair(s)? {
            return Ok(Some(PeriodicTail {
                start: s,
                alpha: a,
                beta: b,
            }));
        }
    }
    Ok(None)
}

/// Minimal `R`-generators `alpha` of `im_R(d) + f * F` and the unique `beta`
/// with `alpha * beta = f`. `None` unless `alpha` is square.
pub fn lift_to_factorization(
    d: &GradedMatrix,
    f: &Poly,
) -> Result<Option<(GradedMatrix, GradedMatrix)>> {
    let r = d.rows();
    if r == 0 || d.cols() < r {
        return Ok(None);
    }
    let deg = f.degree().unwrap_or(0) as i64;
    let mut gens: Vec<Vec<Poly>> = (0..d.cols()).map(|j| d.column(j)).collect();
    for i in 0..r {
        let mut v = vec![Poly::zero(); r];
        v[i] = f.clone();
        gens.push(v);
    }
    let mg = ModuleGens::new(d.target_twists.clone(), gens, Over::Poly)?;
    let min = minimalize(&mg)?;
    if min.len() != r {
        return Ok(None);
    }
    let alpha = min.to_matrix();
    let mut beta = GradedMatrix::zero(
        alpha.source_twists.iter().map(|a| a - deg).collect(),
        alpha.target_twists.clone(),
    );
    for k in 0..r {
        let mut v = vec![Poly::zero(); r];
        v[k] = f.clone();
        let Some(c) = lift(&v, &alpha)? else {
            return Ok(None);
        };
        for (j, p) in c.into_iter().enumerate() {
            beta.set(j, k, p);
        }
    }
    Ok(Some((alpha, beta)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn setup() -> (PolyRing, Poly) {
        let r = PolyRing::xyz(FieldSpec::Rationals);
        let f = r.parse("Y^2*Z - X^3 - Z^3").unwrap();
        (r, f)
    }

    fn binom(n: i64, k: i64) -> i64 {
        if n < k || k < 0 {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn hilbert_function_of_a() {
        let (r, f) = setup();
        let a = Presentation::free(&r, Over::Hypersurface(f), vec![0]);
        for i in 0..8 {
            let expected = binom(i + 2, 2) - binom(i - 1, 2);
            assert_eq!(a.hilbert_function(i).unwrap() as i64, expected);
        }
    }

    #[test]
    fn residue_field_resolution_twists() {
        let (r, f) = setup();
        let k = Presentation::residue_field(&r, &f);
        let res = k.minimal_resolution(4).unwrap();
        let mut tw = res.twists();
        for t in tw.iter_mut() {
            t.sort();
        }
        assert_eq!(
            tw,
            vec![
                vec![0],
                vec![1, 1, 1],
                vec![2, 2, 2, 3],
                vec![3, 4, 4, 4],
                vec![5, 5, 5, 6]
            ]
        );
        assert!(res.minimal);
        assert!(res.is_complex().unwrap());
        assert_eq!(res.periodic_tail.as_ref().unwrap().start, 3);
    }

    #[test]
    fn point_module_resolution() {
        let (r, f) = setup();
        let p = Presentation::point_module(&r, &f, &[r.constant(2), r.constant(3), r.one()]).unwrap();
        for i in 0..5 {
            assert_eq!(p.hilbert_function(i).unwrap(), 1);
        }
        let res = p.minimal_resolution(3).unwrap();
        assert_eq!(res.ranks(), vec![1, 2, 2, 2]);
        assert_eq!(res.periodic_tail.as_ref().unwrap().start, 2);
    }

    #[test]
    fn free_module_resolution_is_empty() {
        let (r, f) = setup();
        let p = Presentation::free(&r, Over::Hypersurface(f), vec![2]);
        let res = p.minimal_resolution(2).unwrap();
        assert!(res.maps.is_empty());
        assert!(res.periodic_tail.is_none());
    }

    #[test]
    fn truncations() {
        let (r, f) = setup();
        let a = Presentation::free(&r, Over::Hypersurface(f.clone()), vec![0]);
        let a1 = a.truncate_geq(1).unwrap();
        assert_eq!(a1.twists(), &[1, 1, 1]);
        assert_eq!(a1.hilbert_function(0).unwrap(), 0);
        assert_eq!(a1.hilbert_function(3).unwrap(), 9);
        assert_eq!(a.truncate_geq(0).unwrap().twists(), &[0]);
        let p = Presentation::point_module(&r, &f, &[r.constant(2), r.constant(3), r.one()]).unwrap();
        let p1 = p.truncate_geq(1).unwrap();
        assert_eq!(p1.twists(), &[1]);
        assert_eq!(p1.hilbert_function(0).unwrap(), 0);
        assert_eq!(p1.hilbert_function(4).unwrap(), 1);
    }

    #[test]
    fn point_not_on_curve_rejected() {
        let (r, f) = setup();
        let res = Presentation::point_module(&r, &f, &[r.constant(1), r.constant(1), r.one()]);
        assert!(matches!(res, Err(Error::PointNotOnCurve(_))));
    }
}
