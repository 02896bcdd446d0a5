//! Winding number of a planar polynomial map around a circle.
//!
//! The circle is covered by two rational charts, `t ↦ r((1-t²), 2t)/(1+t²)`
//! for the right half and its negative for the left half, `t ∈ [-1, 1]`.
//! Clearing the positive denominator turns each component into a
//! univariate polynomial with the same signs. Each chart is subdivided
//! until every arc is certified to stay in an open half-plane, and the
//! winding number is read off from the signed crossings of the negative
//! real axis.

use crate::error::{Error, Result};
use crate::germ::poly::{total_degree, Polynomial};
use crate::germ::univariate::Univariate;
use crate::germ::{Germ, Gradient};
use crate::scalar::Field;

/// Maximum number of arcs examined before giving up.
pub const MAX_ARCS: usize = 1 << 20;

fn chart<C: Field>(p: &Polynomial<C>, radius: &C, left: bool) -> Univariate<C> {
    let Some(d) = p.degree() else { return Univariate::zero() };
    let two = C::one() + C::one();
    let cos = Univariate::new(vec![C::one(), C::zero(), -C::one()]);
    let sin = Univariate::new(vec![C::zero(), two]);
    let den = Univariate::new(vec![C::one(), C::zero(), C::one()]);
    let mut out = Univariate::zero();
    for (e, c) in p.terms() {
        let k = total_degree(e);
        let mut scale = c.clone();
        for _ in 0..k {
            scale = scale * radius.clone();
        }
        if left && k % 2 == 1 {
            scale = -scale;
        }
        let term = cos.pow(e[0]).mul(&sin.pow(e[1])).mul(&den.pow(d - k)).scale(&scale);
        out = out.add(&term);
    }
    out
}

fn sign<C: Field>(v: &C) -> i64 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Sign of `f` on `[lo, hi]` when a midpoint Taylor bound proves it constant.
fn certified_sign<C: Field>(f: &Univariate<C>, lo: &C, hi: &C) -> Option<i64> {
    let two = C::one() + C::one();
    let mid = (lo.clone() + hi.clone()) / two.clone();
    let half = (hi.clone() - lo.clone()) / two;
    let b = f.taylor_shift(&mid);
    let b0 = b.first().cloned().unwrap_or_else(C::zero);
    if b0.is_zero() {
        return None;
    }
    let mut bound = C::zero();
    let mut power = C::one();
    for c in b.iter().skip(1) {
        power = power * half.clone();
        bound = bound + c.abs() * power.clone();
    }
    (b0.abs() > bound).then(|| sign(&b0))
}

/// Winding number of `(p, q)` around the circle of the given radius about
/// the origin, counterclockwise.
pub fn planar_winding_number<C: Field>(p: &Polynomial<C>, q: &Polynomial<C>, radius: &C) -> Result<i64> {
    if p.nvars() != 2 || q.nvars() != 2 {
        return Err(Error::Dimension("winding numbers need maps of two variables".into()));
    }
    if !radius.is_positive() {
        return Err(Error::InvalidArgument(format!("radius {radius} must be positive")));
    }
    let lo = -C::one();
    let hi = C::one();
    let charts: Vec<(Univariate<C>, Univariate<C>)> = [false, true]
        .iter()
        .map(|&left| (chart(p, radius, left), chart(q, radius, left)))
        .collect();
    for (pt, qt) in &charts {
        let common = pt.gcd(qt);
        if common.is_zero() || common.count_roots(&lo, &hi) > 0 {
            return Err(Error::RadiusTooLarge(radius.to_string()));
        }
    }
    let mut arcs = 0usize;
    let mut doubled = 0i64;
    for (pt, qt) in &charts {
        let mut stack = vec![(lo.clone(), hi.clone())];
        while let Some((a, b)) = stack.pop() {
            arcs += 1;
            if arcs > MAX_ARCS {
                return Err(Error::Inconclusive(MAX_ARCS));
            }
            match certified_sign(pt, &a, &b) {
                Some(1) => continue,
                Some(_) => {
                    doubled += sign(&qt.eval(&a)) - sign(&qt.eval(&b));
                    continue;
                }
                None => {}
            }
            if certified_sign(qt, &a, &b).is_some() {
                continue;
            }
            let mid = (a.clone() + b.clone()) / (C::one() + C::one());
            stack.push((mid.clone(), b));
            stack.push((a, mid));
        }
    }
    debug_assert_eq!(doubled % 2, 0, "crossings pair up around a closed curve");
    Ok(doubled / 2)
}

/// Winding number of a planar gradient on the circle of the given radius;
/// for small radii this is the local degree at the origin.
pub fn winding_degree<C: Field>(grad: &Gradient<C>, radius: &C) -> Result<i64> {
    if grad.nvars() != 2 {
        return Err(Error::Dimension(format!(
            "winding degree needs 2 variables, got {}",
            grad.nvars()
        )));
    }
    let c = grad.components();
    planar_winding_number(&c[0], &c[1], radius)
}

fn binomial<C: Field>(n: u32, k: u32) -> C {
    (0..k).fold(C::one(), |acc, i| {
        acc * C::from_u32(n - i).expect("fits") / C::from_u32(i + 1).expect("fits")
    })
}

/// Milnor number of `z^(m+1)` given as its real and imaginary parts in
/// `(x, y)`, computed as the winding number of the complex derivative
/// `(u_x, v_x)` on the circle of radius 1/2.
pub fn holomorphic_milnor_number<C: Field>(re: &Germ<C>, im: &Germ<C>, m: u32) -> Result<i64> {
    if m < 1 {
        return Err(Error::InvalidArgument("exponent m must be at least 1".into()));
    }
    if re.nvars() != 2 || im.nvars() != 2 {
        return Err(Error::Unsupported("expected a real pair in two variables".into()));
    }
    let k = m + 1;
    let mut u = Polynomial::zero(2);
    let mut v = Polynomial::zero(2);
    for j in 0..=k {
        // i^j splits into the real part (j even) and imaginary part (j odd)
        let sign = if (j / 2) % 2 == 0 { C::one() } else { -C::one() };
        let c = binomial::<C>(k, j) * sign;
        let term = Polynomial::monomial(vec![k - j, j], c);
        if j % 2 == 0 {
            u = &u + &term;
        } else {
            v = &v + &term;
        }
    }
    if re.polynomial() != &u || im.polynomial() != &v {
        return Err(Error::Unsupported(format!("input is not the real pair of z^{k}")));
    }
    let radius = C::one() / (C::one() + C::one());
    planar_winding_number(&u.derivative(0), &v.derivative(0), &radius)
}
