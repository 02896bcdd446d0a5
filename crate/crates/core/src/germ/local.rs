//! Standard bases in the localization of `C[x]` at the origin.
//!
//! Monomials are compared by the local degree ordering `ds`: lower total
//! degree is larger, ties broken lexicographically. Under a local ordering
//! Buchberger's normal form need not terminate, so reduction uses Mora's
//! ecart-driven normal form.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::germ::poly::{divides, total_degree, Exponent, Polynomial};
use crate::scalar::Field;

/// `ds` comparison: `Greater` when `a` is the larger (leading) monomial.
pub fn local_cmp(a: &[u32], b: &[u32]) -> Ordering {
    total_degree(b).cmp(&total_degree(a)).then_with(|| a.cmp(b))
}

#[derive(Clone, Debug)]
struct Element<C> {
    poly: Polynomial<C>,
    lead: Exponent,
    lead_coeff: C,
    ecart: u32,
}

impl<C: Field> Element<C> {
    fn new(poly: Polynomial<C>) -> Option<Self> {
        let (lead, lead_coeff) = leading_term(&poly)?;
        let ecart = poly.degree().unwrap_or(0) - total_degree(&lead);
        Some(Element { poly, lead, lead_coeff, ecart })
    }
}

/// Leading exponent and coefficient under `ds`.
pub fn leading_term<C: Field>(p: &Polynomial<C>) -> Option<(Exponent, C)> {
    p.terms()
        .max_by(|a, b| local_cmp(a.0, b.0))
        .map(|(e, c)| (e.clone(), c.clone()))
}

/// `h - (lt(h) / lt(g)) · g`, cancelling the leading term of `h`.
fn reduce_once<C: Field>(h: &Element<C>, g: &Element<C>) -> Polynomial<C> {
    let shift: Vec<u32> = h.lead.iter().zip(&g.lead).map(|(a, b)| a - b).collect();
    let c = h.lead_coeff.clone() / g.lead_coeff.clone();
    &h.poly - &g.poly.mul_term(&shift, &c)
}

/// Mora's weak normal form of `f` with respect to `basis`.
fn mora_normal_form<C: Field>(f: Polynomial<C>, basis: &[Element<C>]) -> Polynomial<C> {
    let mut t: Vec<Element<C>> = basis.to_vec();
    let mut h = f;
    while let Some(he) = Element::new(h.clone()) {
        let Some(g) = t
            .iter()
            .filter(|g| divides(&g.lead, &he.lead))
            .min_by_key(|g| g.ecart)
            .cloned()
        else {
            break;
        };
        if g.ecart > he.ecart {
            t.push(he.clone());
        }
        h = reduce_once(&he, &g);
    }
    h
}

fn s_polynomial<C: Field>(f: &Element<C>, g: &Element<C>) -> Polynomial<C> {
    let lcm: Vec<u32> = f.lead.iter().zip(&g.lead).map(|(a, b)| *a.max(b)).collect();
    let sf: Vec<u32> = lcm.iter().zip(&f.lead).map(|(a, b)| a - b).collect();
    let sg: Vec<u32> = lcm.iter().zip(&g.lead).map(|(a, b)| a - b).collect();
    let a = f.poly.mul_term(&sf, &(C::one() / f.lead_coeff.clone()));
    let b = g.poly.mul_term(&sg, &(C::one() / g.lead_coeff.clone()));
    &a - &b
}

/// Standard basis of the ideal generated by `generators` in the local ring,
/// with monic leading coefficients and no redundant leading monomials.
pub fn standard_basis<C: Field>(generators: &[Polynomial<C>]) -> Vec<Polynomial<C>> {
    let mut basis: Vec<Element<C>> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for g in generators {
        let h = mora_normal_form(g.clone(), &basis);
        if let Some(e) = Element::new(monic(h)) {
            for i in 0..basis.len() {
                pairs.push((i, basis.len()));
            }
            basis.push(e);
        }
    }
    while let Some((i, j)) = pairs.pop() {
        if basis.iter().any(|b| total_degree(&b.lead) == 0) {
            break;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let h = mora_normal_form(s, &basis);
        if let Some(e) = Element::new(monic(h)) {
            for k in 0..basis.len() {
                pairs.push((k, basis.len()));
            }
            basis.push(e);
        }
    }
    if let Some(unit) = basis.iter().find(|b| total_degree(&b.lead) == 0) {
        return vec![Polynomial::one(unit.poly.nvars())];
    }
    let mut kept: Vec<Element<C>> = Vec::new();
    for (i, e) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, o)| {
            j != i && divides(&o.lead, &e.lead) && (o.lead != e.lead || j < i)
        });
        if !redundant {
            kept.push(e.clone());
        }
    }
    kept.sort_by(|a, b| local_cmp(&b.lead, &a.lead));
    kept.into_iter().map(|e| e.poly).collect()
}

fn monic<C: Field>(p: Polynomial<C>) -> Polynomial<C> {
    match leading_term(&p) {
        Some((_, c)) => p.scale(&(C::one() / c)),
        None => p,
    }
}

/// The finite-dimensional local algebra `C[x]_(x) / I` of an ideal with an
/// isolated zero at the origin.
#[derive(Clone, Debug)]
pub struct LocalAlgebra<C> {
    nvars: usize,
    standard_basis: Vec<Polynomial<C>>,
    leads: Vec<Exponent>,
    basis: Vec<Exponent>,
    corner: u32,
}

impl<C: Field> LocalAlgebra<C> {
    /// Computes the local algebra of the ideal generated by `generators`;
    /// fails with a non-isolated error when it is infinite-dimensional.
    pub fn new(generators: &[Polynomial<C>]) -> Result<Self> {
        let nvars = generators
            .first()
            .map(Polynomial::nvars)
            .ok_or_else(|| Error::InvalidArgument("empty generator list".into()))?;
        let standard_basis = standard_basis(generators);
        let leads: Vec<Exponent> =
            standard_basis.iter().filter_map(|p| leading_term(p).map(|(e, _)| e)).collect();
        for i in 0..nvars {
            let has_pure_power = leads
                .iter()
                .any(|e| e.iter().enumerate().all(|(j, &k)| if j == i { true } else { k == 0 }));
            if !has_pure_power {
                return Err(Error::NonIsolated(format!(
                    "no pure power of variable {} among the leading monomials",
                    i + 1
                )));
            }
        }
        let mut basis = Vec::new();
        let mut e = vec![0u32; nvars];
        collect_standard(&leads, &mut e, 0, &mut basis);
        basis.sort_by(|a, b| local_cmp(b, a));
        let corner = basis.iter().map(|e| total_degree(e)).max().unwrap_or(0);
        Ok(LocalAlgebra { nvars, standard_basis, leads, basis, corner })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Dimension over the coefficient field.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Monomial basis (standard monomials), largest first under `ds`.
    pub fn basis(&self) -> &[Exponent] {
        &self.basis
    }

    pub fn standard_basis(&self) -> &[Polynomial<C>] {
        &self.standard_basis
    }

    /// Largest degree of a basis monomial; every monomial of higher degree
    /// lies in the ideal.
    pub fn corner_degree(&self) -> u32 {
        self.corner
    }

    fn is_standard(&self, e: &[u32]) -> bool {
        !self.leads.iter().any(|l| divides(l, e))
    }

    /// Coordinates of the class of `p` in the monomial basis.
    pub fn normal_form(&self, p: &Polynomial<C>) -> Vec<C> {
        let mut coords = vec![C::zero(); self.basis.len()];
        if self.basis.is_empty() {
            return coords;
        }
        let mut h = p.truncate(self.corner);
        loop {
            let pivot = h
                .terms()
                .filter(|(e, _)| !self.is_standard(e))
                .max_by(|a, b| local_cmp(a.0, b.0))
                .map(|(e, c)| (e.clone(), c.clone()));
            let Some((e, c)) = pivot else { break };
            let (g, lead) = self
                .standard_basis
                .iter()
                .zip(&self.leads)
                .find(|(_, l)| divides(l, &e))
                .expect("non-standard monomial has a divisor");
            let lc = g.coefficient(lead);
            let shift: Vec<u32> = e.iter().zip(lead).map(|(a, b)| a - b).collect();
            h = (&h - &g.mul_term(&shift, &(c / lc))).truncate(self.corner);
        }
        for (e, c) in h.terms() {
            let i = self.basis.iter().position(|b| b == e).expect("standard monomial");
            coords[i] = c.clone();
        }
        coords
    }
}

fn collect_standard(leads: &[Exponent], e: &mut Vec<u32>, var: usize, out: &mut Vec<Exponent>) {
    if var == e.len() {
        out.push(e.clone());
        return;
    }
    loop {
        if leads.iter().any(|l| divides(l, e)) {
            e[var] = 0;
            return;
        }
        collect_standard(leads, e, var + 1, out);
        e[var] += 1;
    }
}
