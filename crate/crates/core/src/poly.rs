//! Exact multivariate polynomials with the standard grading `deg(X_i) = 1`.
//!
//! Terms are kept sorted in descending degree-reverse-lexicographic order
//! (with the ring's declared variable order) and never carry a zero
//! coefficient, so structural equality is mathematical equality.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub SmallVec<[u16; 4]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(e: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(e))
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// All monomials of total degree `d` in `nvars` variables, in
    /// descending monomial order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u16; nvars];
        fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left as u16;
                out.push(Monomial::from_exponents(cur));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u16;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl Ord for Monomial {
    /// Degree-reverse-lexicographic order.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    terms: Vec<(Monomial, Scalar)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: Scalar, nvars: usize) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Build from arbitrary terms, combining duplicates and dropping zeros.
    pub fn from_terms(mut terms: Vec<(Monomial, Scalar)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    /// Nonzero constant?
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// The constant term (zero if absent), or `None` for the zero polynomial.
    pub fn constant_term(&self) -> Option<Scalar> {
        self.terms
            .last()
            .filter(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
    }

    /// Total degree of the leading term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(t, _)| t.degree() == d)
            }
        }
    }

    /// Homogeneous of the given degree (zero counts for every degree).
    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.terms.iter().all(|(t, _)| t.degree() as i64 == d)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a * c))
                .collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { terms: out }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                terms.push((m.mul(n), a * b));
            }
        }
        Poly::from_terms(terms)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let nv = self.terms.first().map(|(m, _)| m.nvars()).unwrap_or(0);
        let Some(field) = self.terms.first().map(|(_, c)| c.field()) else {
            return if e == 0 {
                panic!("0^0 of a ringless zero polynomial")
            } else {
                Poly::zero()
            };
        };
        let mut r = Poly::constant(field.one(), nv);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Exact quotient `self / q`; errors if `q` does not divide `self`.
    pub fn exact_div(&self, q: &Poly) -> Result<Poly> {
        let Some((lm, lc)) = q.leading() else {
            return Err(Error::NotDivisible);
        };
        let lc_inv = lc.inv();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading().cloned() {
            if !lm.divides(&m) {
                return Err(Error::NotDivisible);
            }
            let t = lm.quotient_of(&m);
            let tc = &c * &lc_inv;
            rem = rem.sub(&q.mul_term(&t, &tc));
            quot.push((t, tc));
        }
        Ok(Poly::from_terms(quot))
    }

    /// Substitute scalars for all variables.
    pub fn eval(&self, point: &[Scalar]) -> Option<Scalar> {
        let mut acc: Option<Scalar> = None;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, x) in m.0.iter().zip(point) {
                for _ in 0..*e {
                    t = &t * x;
                }
            }
            acc = Some(match acc {
                None => t,
                Some(a) => &a + &t,
            });
        }
        acc
    }
}

/// A standard-graded polynomial ring `K[x_0, ..., x_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRing {
    pub field: FieldSpec,
    pub vars: Vec<String>,
}

impl PolyRing {
    pub fn new(field: FieldSpec, vars: Vec<String>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("at least one variable required".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::InvalidRing(format!("bad variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(PolyRing { field, vars })
    }

    /// `K[X, Y, Z]`.
    pub fn xyz(field: FieldSpec) -> Self {
        PolyRing {
            field,
            vars: vec!["X".into(), "Y".into(), "Z".into()],
        }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::monomial(Monomial::var(i, self.nvars()), self.field.one())
    }

    pub fn constant(&self, c: i64) -> Poly {
        Poly::constant(self.field.from_i64(c), self.nvars())
    }

    pub fn scalar(&self, c: Scalar) -> Poly {
        Poly::constant(c, self.nvars())
    }

    pub fn one(&self) -> Poly {
        self.constant(1)
    }

    /// Check that `p` is an element of this ring.
    pub fn check(&self, p: &Poly) -> Result<()> {
        for (m, c) in p.terms() {
            if m.nvars() != self.nvars() || !self.field.contains(c) {
                return Err(Error::RingMismatch(format!(
                    "term of {} not in {}",
                    self.format(p),
                    self.describe()
                )));
            }
        }
        Ok(())
    }

    pub fn describe(&self) -> String {
        format!("{}[{}]", self.field, self.vars.join(","))
    }

    pub fn parse(&self, text: &str) -> Result<Poly> {
        let mut p = Parser {
            ring: self,
            src: text.as_bytes(),
            pos: 0,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(out)
    }

    /// Canonical text form: descending terms with explicit `*`.
    pub fn format(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in p.terms().iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mono = self.format_monomial(m);
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    s.push_str(&a.to_string());
                    s.push('*');
                }
                s.push_str(&mono);
            }
        }
        s
    }

    fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (v, &e) in self.vars.iter().zip(m.0.iter()) {
            match e {
                0 => {}
                1 => parts.push(v.clone()),
                _ => parts.push(format!("{v}^{e}")),
            }
        }
        parts.join("*")
    }
}

struct Parser<'a> {
    ring: &'a PolyRing,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.factor()
            }
            _ => {
                let base = self.atom()?;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    let e = self.integer()?;
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| self.err("exponent out of range"))?;
                    if base.is_zero() && e == 0 {
                        return Ok(self.ring.one());
                    }
                    Ok(if base.is_zero() { base } else { base.pow(e) })
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    self.integer()?
                } else {
                    BigInt::from(1)
                };
                let c = self.ring.field.from_fraction(&num, &den)?;
                Ok(self.ring.scalar(c))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.ring.vars.iter().position(|v| v == name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => Err(Error::UnknownVariable(name.into())),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}
