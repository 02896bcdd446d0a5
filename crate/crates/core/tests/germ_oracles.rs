#![allow(clippy::needless_range_loop)]

mod common;

use common::{rat, rational_rank};
use nspairs::germ::{elk_degree, hessian_determinant, winding_degree, Exponent, LocalAlgebra, Polynomial};
use nspairs::linalg::determinant;
use nspairs::germ::parse_germ;
use nspairs::{IntMatrix, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

type P = Polynomial<Rational>;

fn monomials_below(nvars: usize, degree: u32) -> Vec<Exponent> {
    fn go(prefix: &mut Vec<u32>, left: usize, budget: u32, out: &mut Vec<Exponent>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in 0..=budget {
            prefix.push(k);
            go(prefix, left - 1, budget - k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), nvars, degree, &mut out);
    out
}

/// Rows spanning `(I + m^(d+1)) / m^(d+1)` in the monomial coordinates of
/// polynomials of degree at most `d`.
fn macaulay_rows(gens: &[P], d: u32) -> (Vec<Exponent>, Vec<Vec<Rational>>) {
    let n = gens[0].nvars();
    let cols = monomials_below(n, d);
    let mut rows = Vec::new();
    for g in gens {
        for b in monomials_below(n, d) {
            let shifted = g.mul_term(&b, &rat(1, 1)).truncate(d);
            if shifted.is_zero() {
                continue;
            }
            rows.push(cols.iter().map(|e| shifted.coefficient(e)).collect());
        }
    }
    (cols, rows)
}

/// `dim C[x] / (I + m^(d+1))`.
fn truncated_quotient_dim(gens: &[P], d: u32) -> usize {
    let (cols, rows) = macaulay_rows(gens, d);
    cols.len() - rational_rank(&rows)
}

/// Local algebra dimension as the value at which `d ↦ dim C[x]/(I + m^(d+1))`
/// stops growing.
fn macaulay_dimension(gens: &[P], cap: u32) -> Option<usize> {
    let mut prev = truncated_quotient_dim(gens, 0);
    for d in 1..=cap {
        let next = truncated_quotient_dim(gens, d);
        if next == prev {
            return Some(next);
        }
        prev = next;
    }
    None
}

/// Whether `p` lies in `I + m^(d+1)`.
fn in_truncated_ideal(gens: &[P], p: &P, d: u32) -> bool {
    let (cols, mut rows) = macaulay_rows(gens, d);
    let base = rational_rank(&rows);
    rows.push(cols.iter().map(|e| p.truncate(d).coefficient(e)).collect());
    rational_rank(&rows) == base
}

fn names(n: usize) -> Vec<String> {
    ["x", "y", "z", "w"][..n].iter().map(|s| s.to_string()).collect()
}

const PLANAR: &[&str] = &[
    "x^2 + y^2",
    "x^2 - y^2",
    "-x^2 - y^2",
    "x^3 - 3*x*y^2",
    "x^3 + y^2",
    "x^4 - y^4",
    "x^4 + y^4",
    "x^2*y - y^3",
    "x^2*y + y^4",
    "x^3 + x*y^3",
    "x^5 + y^3",
    "1/2*x^2 + x*y + 3*y^2",
    "x^4 + x^2*y^2 - y^4 + x^3",
];

#[test]
fn local_algebra_matches_macaulay_oracle() {
    let spatial = ["x^2 + y*x^2 + y^3 + y*z^2", "x^2 + y^2 + z^3", "x*y*z + x^3 + y^3 + z^3"];
    let cases = PLANAR.iter().map(|t| (*t, 2)).chain(spatial.iter().map(|t| (*t, 3)));
    for (text, n) in cases {
        let g = parse_germ(text, &names(n)).unwrap();
        let grad = g.gradient();
        let alg = LocalAlgebra::new(grad.components()).unwrap();
        let oracle = macaulay_dimension(grad.components(), 12).expect("oracle stabilizes");
        assert_eq!(alg.dim(), oracle, "dimension of the local algebra of {text}");

        // the normal form of the Hessian differs from it by an ideal element
        let d = alg.corner_degree();
        let j = hessian_determinant(&grad);
        let coords = alg.normal_form(&j);
        let rebuilt = alg
            .basis()
            .iter()
            .zip(&coords)
            .fold(P::zero(n), |acc, (e, c)| &acc + &P::monomial(e.clone(), c.clone()));
        assert!(in_truncated_ideal(grad.components(), &(&j - &rebuilt), d), "normal form of {text}");
        assert!(!coords.iter().all(Zero::is_zero), "Hessian is a socle generator for {text}");
    }
}

#[test]
fn elk_agrees_with_winding_at_two_radii() {
    for text in PLANAR {
        let g = parse_germ(text, &["x", "y"]).unwrap();
        let elk = elk_degree(&g).unwrap();
        for r in [rat(1, 8), rat(1, 5)] {
            let w = winding_degree(&g.gradient(), &r).unwrap();
            assert_eq!(elk.degree, w, "{text} at radius {r}");
        }
        assert!(elk.degree.unsigned_abs() as usize <= elk.local_algebra_dim);
    }
}

#[test]
fn real_parts_of_complex_powers() {
    for m in 1..=5u32 {
        let k = m + 1;
        // Re (x + iy)^k = sum over even j of C(k, j) (-1)^(j/2) x^(k-j) y^j
        let mut terms = Vec::new();
        let mut binom: i64 = 1;
        for j in 0..=k {
            if j % 2 == 0 {
                let sign = if (j / 2) % 2 == 0 { 1 } else { -1 };
                terms.push(format!("{}*x^{}*y^{}", sign * binom, k - j, j));
            }
            binom = binom * (k - j) as i64 / (j + 1) as i64;
        }
        let g = parse_germ(&terms.join(" + ").replace("+ -", "- "), &["x", "y"]).unwrap();
        let elk = elk_degree(&g).unwrap();
        assert_eq!(elk.degree, -(m as i64), "Re z^{k}");
        assert_eq!(elk.local_algebra_dim, (m * m) as usize);
        assert_eq!(winding_degree(&g.gradient(), &rat(1, 3)).unwrap(), -(m as i64));
    }
}

#[test]
fn odd_dimensional_map_component_has_degree_zero() {
    let vars = ["x", "y", "z"];
    let f1 = parse_germ("x", &vars).unwrap();
    let f2 = parse_germ("x^2 + y*x^2 + y^3 + y*z^2", &vars).unwrap();
    assert_eq!(elk_degree(&f1).unwrap().degree, 0);
    let r = elk_degree(&f2).unwrap();
    assert_eq!(r.degree, 0);
    assert!(r.local_algebra_dim > 0);
}

#[test]
fn linear_change_of_coordinates_preserves_degree() {
    // the gradient of g∘A is Aᵀ(∇g)∘A, so both sign(det A) factors cancel
    for text in PLANAR {
        let g = parse_germ(text, &["x", "y"]).unwrap();
        let x = P::variable(2, 0);
        let y = P::variable(2, 1);
        let d = elk_degree(&g).unwrap().degree;
        for subs in [
            vec![x.scale(&rat(-1, 1)), y.clone()],
            vec![y.clone(), x.clone()],
            vec![y.scale(&rat(-1, 1)), x.clone()],
            vec![&x + &y, y.clone()],
        ] {
            let h = g.compose(&subs).unwrap();
            assert_eq!(elk_degree(&h).unwrap().degree, d, "{text} under {subs:?}");
        }
    }
}

fn quadratic_form(a: &[Vec<i64>]) -> nspairs::PolynomialGerm {
    let n = a.len();
    let mut p = P::zero(n);
    for i in 0..n {
        for j in 0..n {
            let term = &P::variable(n, i) * &P::variable(n, j);
            p = &p + &term.scale(&rat(a[i][j], 1));
        }
    }
    nspairs::germ::Germ::new(names(n), p).unwrap()
}

fn symmetric(n: usize, vals: &[i64]) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; n]; n];
    let mut it = vals.iter();
    for i in 0..n {
        for j in i..n {
            let v = *it.next().unwrap();
            a[i][j] = v;
            a[j][i] = v;
        }
    }
    a
}

fn separable_degree(coeffs: &[i64], powers: &[u32]) -> (i64, usize) {
    coeffs.iter().zip(powers).fold((1, 1), |(d, m), (&c, &k)| {
        let factor = if k % 2 == 0 { c.signum() } else { 0 };
        (d * factor, m * (k as usize - 1))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn morse_germs(n in 1usize..=4, vals in prop::collection::vec(-5i64..=5, 10), cubic in -3i64..=3) {
        let a = symmetric(n, &vals);
        let h = IntMatrix::from_rows(a.iter().map(|r| r.iter().map(|&v| BigInt::from(2 * v)).collect()).collect()).unwrap();
        let det = determinant(&h).unwrap();
        prop_assume!(!det.is_zero());
        let g = quadratic_form(&a);
        let cube = P::variable(n, 0).pow(3).scale(&rat(cubic, 1));
        let g = nspairs::germ::Germ::new(names(n), g.polynomial() + &cube).unwrap();
        let r = elk_degree(&g).unwrap();
        prop_assert_eq!(r.degree, if det.is_positive() { 1 } else { -1 });
        prop_assert_eq!(r.local_algebra_dim, 1);
    }

    #[test]
    fn separable_germs(
        coeffs in prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 3),
        powers in prop::collection::vec(2u32..=4, 3),
        n in 1usize..=3,
    ) {
        let text: Vec<String> = (0..n).map(|i| format!("{}*{}^{}", coeffs[i], ["x", "y", "z"][i], powers[i])).collect();
        let g = parse_germ(&text.join(" + ").replace("+ -", "- "), &names(n)).unwrap();
        let r = elk_degree(&g).unwrap();
        let (d, m) = separable_degree(&coeffs[..n], &powers[..n]);
        prop_assert_eq!(r.degree, d);
        prop_assert_eq!(r.local_algebra_dim, m);
    }
}
