use crate::scalar::Field;

/// Dense univariate polynomial, coefficients in ascending order with no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Univariate<C> {
    coeffs: Vec<C>,
}

impl<C: Field> Univariate<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Univariate { coeffs }
    }

    pub fn zero() -> Self {
        Univariate { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[C], i: usize| v.get(i).cloned().unwrap_or_else(C::zero);
        Self::new((0..n).map(|i| get(&self.coeffs, i) + get(&other.coeffs, i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(C::one()), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * C::from_usize(i).expect("degree fits the field"))
                .collect(),
        )
    }

    /// Quotient and remainder of division by a nonzero `d`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut r = self.coeffs.clone();
        let dl = d.coeffs.len();
        let lead = d.coeffs[dl - 1].clone();
        let mut q = vec![C::zero(); r.len().saturating_sub(dl - 1)];
        while r.len() >= dl {
            let c = r[r.len() - 1].clone() / lead.clone();
            let shift = r.len() - dl;
            for (i, a) in d.coeffs.iter().enumerate() {
                r[shift + i] = r[shift + i].clone() - c.clone() * a.clone();
            }
            q[shift] = c;
            r.pop();
        }
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        match a.coeffs.last() {
            Some(l) => a.scale(&(C::one() / l.clone())),
            None => a,
        }
    }

    /// Coefficients of `s ↦ self(m + s)`.
    pub fn taylor_shift(&self, m: &C) -> Vec<C> {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                c[j] = c[j].clone() + m.clone() * c[j + 1].clone();
            }
        }
        c
    }

    /// Number of distinct real roots in the closed interval `[a, b]`, `a <= b`.
    pub fn count_roots(&self, a: &C, b: &C) -> usize {
        assert!(!self.is_zero(), "the zero polynomial vanishes everywhere");
        let squarefree = self.div_rem(&self.gcd(&self.derivative())).0;
        let mut seq = vec![squarefree.clone(), squarefree.derivative()];
        while !seq[seq.len() - 1].is_zero() {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            seq.push(r.scale(&-C::one()));
        }
        seq.pop();
        let variations = |t: &C| {
            let signs: Vec<bool> = seq
                .iter()
                .map(|p| p.eval(t))
                .filter(|v| !v.is_zero())
                .map(|v| v.is_positive())
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        // Sturm's theorem counts (a, b]; a root at a is added separately
        variations(a) - variations(b) + usize::from(squarefree.eval(a).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn poly(c: &[i64]) -> Univariate<Rational> {
        Univariate::new(c.iter().map(|&v| q(v)).collect())
    }

    #[test]
    fn gcd_and_remainder() {
        let a = poly(&[-1, 0, 1]);
        let b = poly(&[1, 1]);
        assert_eq!(a.gcd(&b), poly(&[1, 1]));
        assert!(a.rem(&b).is_zero());
        assert_eq!(poly(&[1, 0, 1]).gcd(&poly(&[0, 1])), poly(&[1]));
    }

    #[test]
    fn taylor() {
        let p = poly(&[1, 2, 3]);
        let shifted = Univariate::new(p.taylor_shift(&q(2)));
        for t in -3..4 {
            assert_eq!(shifted.eval(&q(t)), p.eval(&(q(t) + q(2))));
        }
    }

    #[test]
    fn sturm_counts() {
        let p = poly(&[0, -1, 0, 1]);
        assert_eq!(p.count_roots(&q(-1), &q(1)), 3);
        assert_eq!(p.count_roots(&q(0), &q(1)), 2);
        assert_eq!(p.count_roots(&Rational::new(1.into(), 2.into()), &q(2)), 1);
        assert_eq!(poly(&[1, 0, 1]).count_roots(&q(-5), &q(5)), 0);
        assert_eq!(poly(&[1, 2, 1]).count_roots(&q(-5), &q(5)), 1);
        assert_eq!(p.count_roots(&q(1), &q(1)), 1);
    }
}
