//! Polynomial germs at the origin and the local degree of their gradient.

mod elk;
mod local;
mod parse;
mod poly;
mod univariate;
mod winding;

use std::fmt;

pub use elk::{elk_degree, hessian_determinant, DegreeMethod, DegreeResult};
pub use local::{leading_term, local_cmp, standard_basis, LocalAlgebra};
pub use parse::parse_polynomial;
pub use poly::{Exponent, Polynomial};
pub use univariate::Univariate;
pub use winding::{holomorphic_milnor_number, planar_winding_number, winding_degree, MAX_ARCS};

use crate::error::{Error, Result};
use crate::scalar::Field;

/// A polynomial map germ `(C^n, 0) → (C, 0)` with named variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Germ<C> {
    variables: Vec<String>,
    poly: Polynomial<C>,
}

/// A germ with one gradient component per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gradient<C> {
    variables: Vec<String>,
    components: Vec<Polynomial<C>>,
}

fn check_variables(variables: &[String]) -> Result<()> {
    if variables.is_empty() {
        return Err(Error::InvalidArgument("at least one variable is required".into()));
    }
    for (i, v) in variables.iter().enumerate() {
        let mut chars = v.chars();
        let valid = chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
            && chars.all(|c| c.is_alphanumeric() || c == '_');
        if !valid {
            return Err(Error::InvalidArgument(format!("'{v}' is not a valid variable name")));
        }
        if variables[..i].contains(v) {
            return Err(Error::InvalidArgument(format!("variable '{v}' declared twice")));
        }
    }
    Ok(())
}

impl<C: Field> Germ<C> {
    /// Wraps a polynomial, checking that it vanishes at the origin.
    pub fn new(variables: Vec<String>, poly: Polynomial<C>) -> Result<Self> {
        check_variables(&variables)?;
        if poly.nvars() != variables.len() {
            return Err(Error::Dimension(format!(
                "{} variables declared for a polynomial in {}",
                variables.len(),
                poly.nvars()
            )));
        }
        let c = poly.constant_term();
        if !c.is_zero() {
            return Err(Error::NotAGerm(c.to_string()));
        }
        Ok(Germ { variables, poly })
    }

    /// Parses germ text over the declared variables.
    pub fn parse(text: &str, variables: &[impl AsRef<str>]) -> Result<Self> {
        let variables: Vec<String> = variables.iter().map(|v| v.as_ref().to_string()).collect();
        check_variables(&variables)?;
        let poly = parse_polynomial(text, &variables)?;
        Self::new(variables, poly)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn polynomial(&self) -> &Polynomial<C> {
        &self.poly
    }

    /// Formal partial derivatives.
    pub fn gradient(&self) -> Gradient<C> {
        Gradient {
            variables: self.variables.clone(),
            components: (0..self.nvars()).map(|i| self.poly.derivative(i)).collect(),
        }
    }

    /// `x ↦ g(subs(x))`; the substitutes must vanish at the origin.
    pub fn compose(&self, subs: &[Polynomial<C>]) -> Result<Self> {
        if subs.len() != self.nvars() || subs.iter().any(|s| s.nvars() != self.nvars()) {
            return Err(Error::Dimension("one substitute per variable, in the same variables".into()));
        }
        Self::new(self.variables.clone(), self.poly.substitute(subs))
    }
}

impl<C: Field> fmt::Display for Germ<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.format_with(&self.variables))
    }
}

impl<C: Field> Gradient<C> {
    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn components(&self) -> &[Polynomial<C>] {
        &self.components
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }
}

impl<C: Field> fmt::Display for Gradient<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.components.iter().map(|c| c.format_with(&self.variables)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Parses a germ over `variables` with exact rational coefficients.
pub fn parse_germ(text: &str, variables: &[impl AsRef<str>]) -> Result<crate::PolynomialGerm> {
    Germ::parse(text, variables)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::PolynomialGerm;

    #[test]
    fn germ_invariants() {
        let g = parse_germ("x^2 + y*x^2 + y^3 + y*z^2", &["x", "y", "z"]).unwrap();
        assert_eq!(g.to_string(), "x^2*y + y^3 + y*z^2 + x^2");
        assert!(matches!(parse_germ("x + 1", &["x"]), Err(Error::NotAGerm(_))));
        assert!(parse_germ("0", &["x"]).unwrap().polynomial().is_zero());
        assert!(matches!(parse_germ("x", &["x", "x"]), Err(Error::InvalidArgument(_))));
        assert!(matches!(parse_germ("x", &["1x"]), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn gradients() {
        let g = parse_germ("x^3 - 3*x*y^2", &["x", "y"]).unwrap();
        assert_eq!(g.gradient().to_string(), "(3*x^2 - 3*y^2, -6*x*y)");
        let g = parse_germ("x^2+y^2", &["x", "y"]).unwrap();
        assert_eq!(g.gradient().to_string(), "(2*x, 2*y)");
        let g: PolynomialGerm = parse_germ("x", &["x"]).unwrap();
        assert_eq!(g.gradient().to_string(), "(1)");
    }
}
