//! Matrices of homogeneous polynomials between twisted free modules.
//!
//! A matrix with `source_twists = [a_j]` and `target_twists = [b_i]` is a
//! degree-zero map `⊕ R(-a_j) -> ⊕ R(-b_i)`; entry `(i, j)` is zero or
//! homogeneous of degree `a_j - b_i`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::poly::{Poly, PolyRing};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
    pub target_twists: Vec<i64>,
    pub source_twists: Vec<i64>,
}

/// One cell whose degree disagrees with the twists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeViolation {
    pub row: usize,
    pub col: usize,
    pub expected: i64,
    pub found: Option<u32>,
}

impl fmt::Display for DegreeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.found {
            Some(d) => write!(
                f,
                "entry ({}, {}) has degree {} but twists require {}",
                self.row, self.col, d, self.expected
            ),
            None => write!(
                f,
                "entry ({}, {}) is not homogeneous (twists require degree {})",
                self.row, self.col, self.expected
            ),
        }
    }
}

impl GradedMatrix {
    pub fn new(
        target_twists: Vec<i64>,
        source_twists: Vec<i64>,
        entries: Vec<Poly>,
    ) -> Result<Self> {
        let rows = target_twists.len();
        let cols = source_twists.len();
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        Ok(GradedMatrix {
            rows,
            cols,
            entries,
            target_twists,
            source_twists,
        })
    }

    pub fn zero(target_twists: Vec<i64>, source_twists: Vec<i64>) -> Self {
        let n = target_twists.len() * source_twists.len();
        GradedMatrix {
            rows: target_twists.len(),
            cols: source_twists.len(),
            entries: vec![Poly::zero(); n],
            target_twists,
            source_twists,
        }
    }

    pub fn identity(ring: &PolyRing, twists: Vec<i64>) -> Self {
        let mut m = Self::zero(twists.clone(), twists);
        for i in 0..m.rows {
            m.set(i, i, ring.one());
        }
        m
    }

    /// Build from rows of polynomial text.
    pub fn parse(
        ring: &PolyRing,
        target_twists: Vec<i64>,
        source_twists: Vec<i64>,
        rows: &[&[&str]],
    ) -> Result<Self> {
        let mut entries = Vec::new();
        for r in rows {
            if r.len() != source_twists.len() {
                return Err(Error::Shape("ragged row".into()));
            }
            for s in *r {
                entries.push(ring.parse(s)?);
            }
        }
        Self::new(target_twists, source_twists, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// Required degree of entry `(i, j)`.
    pub fn entry_degree(&self, i: usize, j: usize) -> i64 {
        self.source_twists[j] - self.target_twists[i]
    }

    /// Every entry violating the degree bookkeeping; empty iff valid.
    pub fn validate(&self) -> Vec<DegreeViolation> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let p = self.get(i, j);
                let expected = self.entry_degree(i, j);
                if !p.is_zero() && !p.is_homogeneous_of(expected) {
                    out.push(DegreeViolation {
                        row: i,
                        col: j,
                        expected,
                        found: if p.is_homogeneous() { p.degree() } else { None },
                    });
                }
            }
        }
        out
    }

    /// Matrix product `self * rhs`. The inner twists may differ by a uniform
    /// offset `k` (`self.source = rhs.target + k`); the product's source is
    /// then `rhs.source + k`.
    pub fn mul(&self, rhs: &GradedMatrix) -> Result<GradedMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let k = uniform_offset(&self.source_twists, &rhs.target_twists).ok_or_else(|| {
            Error::InconsistentDegrees(format!(
                "inner twists {:?} vs {:?}",
                self.source_twists, rhs.target_twists
            ))
        })?;
        let mut out = GradedMatrix::zero(
            self.target_twists.clone(),
            rhs.source_twists.iter().map(|a| a + k).collect(),
        );
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Poly::zero();
                for l in 0..self.cols {
                    let a = self.get(i, l);
                    let b = rhs.get(l, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &GradedMatrix) -> Result<GradedMatrix> {
        self.combine(rhs, false)
    }

    pub fn sub(&self, rhs: &GradedMatrix) -> Result<GradedMatrix> {
        self.combine(rhs, true)
    }

    fn combine(&self, rhs: &GradedMatrix, negate: bool) -> Result<GradedMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape("size mismatch in matrix sum".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| if negate { a.sub(b) } else { a.add(b) })
            .collect();
        Ok(GradedMatrix {
            entries,
            ..self.clone()
        })
    }

    pub fn neg(&self) -> GradedMatrix {
        GradedMatrix {
            entries: self.entries.iter().map(Poly::neg).collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &Scalar) -> GradedMatrix {
        GradedMatrix {
            entries: self.entries.iter().map(|p| p.scale(c)).collect(),
            ..self.clone()
        }
    }

    /// The same map between twisted modules: `(n)` sends `R(-a)` to `R(n - a)`.
    pub fn twisted(&self, n: i64) -> GradedMatrix {
        GradedMatrix {
            target_twists: self.target_twists.iter().map(|b| b - n).collect(),
            source_twists: self.source_twists.iter().map(|a| a - n).collect(),
            ..self.clone()
        }
    }

    /// Transpose as a map of dual modules: `R(-a)^* = R(a)`.
    pub fn transpose(&self) -> GradedMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        GradedMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
            target_twists: self.source_twists.iter().map(|a| -a).collect(),
            source_twists: self.target_twists.iter().map(|b| -b).collect(),
        }
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block(
        a: &GradedMatrix,
        b: &GradedMatrix,
        c: &GradedMatrix,
        d: &GradedMatrix,
    ) -> Result<GradedMatrix> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::Shape("incompatible blocks".into()));
        }
        let rows = a.rows + c.rows;
        let cols = a.cols + b.cols;
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..a.rows {
            entries.extend_from_slice(&a.entries[i * a.cols..(i + 1) * a.cols]);
            entries.extend_from_slice(&b.entries[i * b.cols..(i + 1) * b.cols]);
        }
        for i in 0..c.rows {
            entries.extend_from_slice(&c.entries[i * c.cols..(i + 1) * c.cols]);
            entries.extend_from_slice(&d.entries[i * d.cols..(i + 1) * d.cols]);
        }
        let mut target = a.target_twists.clone();
        target.extend_from_slice(&c.target_twists);
        let mut source = a.source_twists.clone();
        source.extend_from_slice(&b.source_twists);
        GradedMatrix::new(target, source, entries)
    }

    /// `[[a, 0], [0, b]]`.
    pub fn block_diagonal(a: &GradedMatrix, b: &GradedMatrix) -> GradedMatrix {
        let ur = GradedMatrix::zero(a.target_twists.clone(), b.source_twists.clone());
        let ll = GradedMatrix::zero(b.target_twists.clone(), a.source_twists.clone());
        GradedMatrix::block(a, &ur, &ll, b).expect("diagonal blocks fit")
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hcat(&self, rhs: &GradedMatrix) -> Result<GradedMatrix> {
        if self.rows != rhs.rows {
            return Err(Error::Shape("hcat row mismatch".into()));
        }
        let cols = self.cols + rhs.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            entries.extend_from_slice(&self.entries[i * self.cols..(i + 1) * self.cols]);
            entries.extend_from_slice(&rhs.entries[i * rhs.cols..(i + 1) * rhs.cols]);
        }
        let mut source = self.source_twists.clone();
        source.extend_from_slice(&rhs.source_twists);
        GradedMatrix::new(self.target_twists.clone(), source, entries)
    }

    /// Vertical concatenation.
    pub fn vcat(&self, rhs: &GradedMatrix) -> Result<GradedMatrix> {
        if self.cols != rhs.cols {
            return Err(Error::Shape("vcat column mismatch".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&rhs.entries);
        let mut target = self.target_twists.clone();
        target.extend_from_slice(&rhs.target_twists);
        GradedMatrix::new(target, self.source_twists.clone(), entries)
    }

    /// Keep the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> GradedMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        GradedMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
            target_twists: rows.iter().map(|&i| self.target_twists[i]).collect(),
            source_twists: cols.iter().map(|&j| self.source_twists[j]).collect(),
        }
    }

    /// Replace every entry by `g(entry)`.
    pub fn map_entries(&self, g: impl Fn(&Poly) -> Poly) -> GradedMatrix {
        GradedMatrix {
            entries: self.entries.iter().map(g).collect(),
            ..self.clone()
        }
    }

    /// Row operation `row_i += c * row_k`.
    pub fn add_row_multiple(&mut self, i: usize, k: usize, c: &Poly) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = self.get(k, j).mul(c);
            let v = self.get(i, j).add(&t);
            self.set(i, j, v);
        }
    }

    /// Column operation `col_j += c * col_k`.
    pub fn add_col_multiple(&mut self, j: usize, k: usize, c: &Poly) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let t = self.get(i, k).mul(c);
            let v = self.get(i, j).add(&t);
            self.set(i, j, v);
        }
    }

    /// Determinant by cofactor expansion; intended for small matrices.
    pub fn determinant(&self, ring: &PolyRing) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.det_rec(ring, &idx, &idx))
    }

    fn det_rec(&self, ring: &PolyRing, rows: &[usize], cols: &[usize]) -> Poly {
        if rows.is_empty() {
            return ring.one();
        }
        if rows.len() == 1 {
            return self.get(rows[0], cols[0]).clone();
        }
        let r = rows[0];
        let rest: Vec<usize> = rows[1..].to_vec();
        let mut acc = Poly::zero();
        for (k, &c) in cols.iter().enumerate() {
            let e = self.get(r, c);
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = self.det_rec(ring, &rest, &sub_cols);
            let t = e.mul(&minor);
            acc = if k % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
        }
        acc
    }

    /// Rows of entry strings in the ring's canonical format.
    pub fn to_strings(&self, ring: &PolyRing) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| ring.format(self.get(i, j))).collect())
            .collect()
    }

    pub fn from_strings(
        ring: &PolyRing,
        target_twists: Vec<i64>,
        source_twists: Vec<i64>,
        rows: &[Vec<String>],
    ) -> Result<Self> {
        if rows.len() != target_twists.len() {
            return Err(Error::Shape(format!(
                "{} rows but {} target twists",
                rows.len(),
                target_twists.len()
            )));
        }
        let mut entries = Vec::new();
        for r in rows {
            if r.len() != source_twists.len() {
                return Err(Error::Shape(format!(
                    "row of length {} but {} source twists",
                    r.len(),
                    source_twists.len()
                )));
            }
            for s in r {
                entries.push(ring.parse(s)?);
            }
        }
        Self::new(target_twists, source_twists, entries)
    }

    pub fn display(&self, ring: &PolyRing) -> String {
        let rows = self.to_strings(ring);
        let mut s = format!(
            "{:?} <- {:?}\n",
            self.target_twists, self.source_twists
        );
        for r in rows {
            s.push_str("  [");
            s.push_str(&r.join(", "));
            s.push_str("]\n");
        }
        s
    }
}

/// `k` with `a[i] = b[i] + k` for all `i`, if any. Empty lists agree with 0.
pub fn uniform_offset(a: &[i64], b: &[i64]) -> Option<i64> {
    if a.len() != b.len() {
        return None;
    }
    let k = match (a.first(), b.first()) {
        (Some(x), Some(y)) => x - y,
        _ => return Some(0),
    };
    a.iter().zip(b).all(|(x, y)| x - y == k).then_some(k)
}
