use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Field;

/// Exponent vector of a monomial, one entry per variable.
pub type Exponent = Vec<u32>;

/// Sparse multivariate polynomial with exact coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    nvars: usize,
    terms: BTreeMap<Exponent, C>,
}

pub(crate) fn total_degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

/// Descending graded lexicographic comparison: `Less` means `a` is printed
/// before `b`.
pub(crate) fn grlex_desc(a: &[u32], b: &[u32]) -> Ordering {
    total_degree(b).cmp(&total_degree(a)).then_with(|| b.cmp(a))
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl<C: Field> Polynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// The `i`-th coordinate function.
    pub fn variable(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, C::one())
    }

    pub fn monomial(exponent: Exponent, c: C) -> Self {
        let mut p = Self::zero(exponent.len());
        p.add_term(exponent, c);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length must match the variable count");
            p.add_term(e, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, exponent: Exponent, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponent: &[u32]) -> C {
        self.terms.get(exponent).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(&vec![0; self.nvars])
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| total_degree(e)).max()
    }

    /// Lowest total degree of a term (the order at the origin).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|e| total_degree(e)).min()
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a.clone() * c.clone())).collect(),
        }
    }

    /// `c · x^shift · self`.
    pub fn mul_term(&self, shift: &[u32], c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, a)| (e.iter().zip(shift).map(|(x, y)| x + y).collect(), a.clone() * c.clone()))
            .collect();
        Polynomial { nvars: self.nvars, terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let k = C::from_u32(e[i]).expect("exponent fits the field");
            let mut d = e.clone();
            d[i] -= 1;
            out.add_term(d, c.clone() * k);
        }
        out
    }

    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.nvars, "point dimension must match the variable count");
        let mut sum = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = t * x.clone();
                }
            }
            sum = sum + t;
        }
        sum
    }

    /// Replaces variable `i` by `subs[i]`; all substitutes share one
    /// variable count, which becomes that of the result.
    pub fn substitute(&self, subs: &[Polynomial<C>]) -> Self {
        assert_eq!(subs.len(), self.nvars, "one substitute per variable");
        let m = subs.first().map_or(0, |s| s.nvars);
        let mut out = Self::zero(m);
        for (e, c) in &self.terms {
            let mut t = Self::constant(m, c.clone());
            for (s, &k) in subs.iter().zip(e) {
                t = &t * &s.pow(k);
            }
            out = &out + &t;
        }
        out
    }

    /// Drops every term of total degree above `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| total_degree(e) <= max_degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Canonical text with the given variable names: terms in descending
    /// graded lexicographic order, `*` between factors, `^` for powers.
    pub fn format_with(&self, names: &[impl AsRef<str>]) -> String {
        assert_eq!(names.len(), self.nvars, "one name per variable");
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(&Exponent, &C)> = self.terms.iter().collect();
        terms.sort_by(|a, b| grlex_desc(a.0, b.0));
        let mut out = String::new();
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (idx, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mut factors = Vec::new();
            if !abs.is_one() || total_degree(e) == 0 {
                factors.push(abs.to_string());
            }
            for (name, &k) in names.iter().zip(e) {
                match k {
                    0 => {}
                    1 => factors.push(name.as_ref().to_string()),
                    _ => factors.push(format!("{}^{k}", name.as_ref())),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl<C: Field> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: Self) -> Polynomial<C> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<C: Field> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: Self) -> Polynomial<C> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<C: Field> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: Self) -> Polynomial<C> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            for (f, d) in &rhs.terms {
                out.add_term(e.iter().zip(f).map(|(x, y)| x + y).collect(), c.clone() * d.clone());
            }
        }
        out
    }
}

impl<C: Field> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        self.scale(&-C::one())
    }
}
