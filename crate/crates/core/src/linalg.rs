//! Sparse exact linear algebra over a ground field.

use std::collections::BTreeMap;

use crate::field::{FieldSpec, Scalar};

/// Sparse vector: `(index, value)` pairs with increasing indices and no zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, n: usize, zero: &Scalar) -> Vec<Scalar> {
    let mut out = vec![zero.clone(); n];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// `a + c * b`.
pub fn axpy(a: &SparseVec, c: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(a: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(i, v)| (*i, v * c)).collect()
}

/// Incrementally built row echelon form. Each stored row is normalised to a
/// leading coefficient of one at its pivot.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Reduce `v` against the stored rows, eliminating every pivot position.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut r = v.clone();
        let mut k = 0;
        while k < r.len() {
            let (idx, c) = r[k].clone();
            if let Some(row) = self.rows.get(&idx) {
                r = axpy(&r, &(-&c), row);
                // entries before k are untouched, entry k is gone
            } else {
                k += 1;
            }
        }
        r
    }

    /// Insert `v`; returns whether it was independent of the stored rows.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        match r.first() {
            None => false,
            Some((p, c)) => {
                let p = *p;
                let r = scale(&r, &c.inv());
                self.rows.insert(p, r);
                true
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Back-substitute so every pivot column is zero outside its own row.
    pub fn to_reduced(&self) -> BTreeMap<usize, SparseVec> {
        let mut out: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (&p, row) in self.rows.iter().rev() {
            let mut r = row.clone();
            let mut k = 1;
            while k < r.len() {
                let (idx, c) = r[k].clone();
                if let Some(lower) = out.get(&idx) {
                    r = axpy(&r, &(-&c), lower);
                } else {
                    k += 1;
                }
            }
            out.insert(p, r);
        }
        out
    }
}

/// Basis of `{x : A x = 0}` for the matrix with the given sparse rows and
/// `ncols` columns.
pub fn kernel(rows: &[SparseVec], ncols: usize, one: &Scalar) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    let rref = e.to_reduced();
    let mut slot = vec![usize::MAX; ncols];
    let mut out: Vec<SparseVec> = Vec::new();
    for free in 0..ncols {
        if !rref.contains_key(&free) {
            slot[free] = out.len();
            out.push(vec![(free, one.clone())]);
        }
    }
    // x_free = 1, pivot variables determined by their rows
    for (&p, row) in &rref {
        for (i, c) in &row[1..] {
            out[slot[*i]].push((p, -c));
        }
    }
    for v in &mut out {
        v.sort_by_key(|t| t.0);
    }
    out
}

/// Rank of a set of sparse vectors.
pub fn rank(rows: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    rows.iter().filter(|r| e.insert(r)).count()
}

/// A solution of `sum_j x_j * cols_j = target`, if one exists.
pub fn solve(cols: &[SparseVec], target: &SparseVec, field: FieldSpec) -> Option<Vec<Scalar>> {
    // echelonise the columns while tracking combinations
    let n = cols.len();
    let mut pivots: BTreeMap<usize, (SparseVec, SparseVec)> = BTreeMap::new();
    for (j, c) in cols.iter().enumerate() {
        let (v, comb) = reduce_tracked(&pivots, c.clone(), vec![(j, field.one())]);
        if let Some((p, lc)) = v.first().cloned() {
            let inv = lc.inv();
            pivots.insert(p, (scale(&v, &inv), scale(&comb, &inv)));
        }
    }
    let (rest, comb) = reduce_tracked(&pivots, target.clone(), Vec::new());
    if !rest.is_empty() {
        return None;
    }
    // the reduction subtracted comb-weighted columns from the target
    let mut x = vec![field.zero(); n];
    for (j, c) in comb {
        x[j] = -&c;
    }
    Some(x)
}

/// Inverse of a square dense matrix, or `None` if it is singular.
pub fn invert_dense(m: &[Vec<Scalar>], field: FieldSpec) -> Option<Vec<Vec<Scalar>>> {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut inv: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { field.one() } else { field.zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let c = a[col][col].inv();
        for k in 0..n {
            a[col][k] = &a[col][k] * &c;
            inv[col][k] = &inv[col][k] * &c;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let t = a[r][col].clone();
            for k in 0..n {
                a[r][k] = &a[r][k] - &(&t * &a[col][k]);
                inv[r][k] = &inv[r][k] - &(&t * &inv[col][k]);
            }
        }
    }
    Some(inv)
}

/// Determinant of a square dense matrix by elimination.
pub fn determinant_dense(m: &[Vec<Scalar>], field: FieldSpec) -> Scalar {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut det = field.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return field.zero();
        };
        if piv != col {
            a.swap(col, piv);
            det = -det;
        }
        det = &det * &a[col][col];
        let c = a[col][col].inv();
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let t = &a[r][col] * &c;
            for k in col..n {
                a[r][k] = &a[r][k] - &(&t * &a[col][k]);
            }
        }
    }
    det
}

fn reduce_tracked(
    pivots: &BTreeMap<usize, (SparseVec, SparseVec)>,
    mut v: SparseVec,
    mut comb: SparseVec,
) -> (SparseVec, SparseVec) {
    let mut k = 0;
    while k < v.len() {
        let (idx, c) = v[k].clone();
        if let Some((row, rc)) = pivots.get(&idx) {
            let m = -&c;
            v = axpy(&v, &m, row);
            comb = axpy(&comb, &m, rc);
        } else {
            k += 1;
        }
    }
    (v, comb)
}
