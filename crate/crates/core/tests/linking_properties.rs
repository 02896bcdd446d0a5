#![allow(clippy::needless_range_loop)]

mod common;

use common::{big, cofactor_det};
use nspairs::invariants::NSInvariantRecord;
use nspairs::linalg::{determinant, smith_normal_form};
use nspairs::linking::{build_r, classify, classify_in_dimension, generate_unimodular_blocks, LinkingMatrix, SymmetrySign};
use nspairs::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn skew(k: usize, upper: &[i64]) -> LinkingMatrix {
    let mut rows = vec![vec![0i64; k]; k];
    let mut it = upper.iter();
    for i in 0..k {
        for j in i + 1..k {
            let v = *it.next().unwrap();
            rows[i][j] = v;
            rows[j][i] = -v;
        }
    }
    let m = IntMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()).unwrap();
    LinkingMatrix::new(SymmetrySign::Skew, m).unwrap()
}

fn as_rows(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    m.to_rows()
}

#[test]
fn r_of_the_elementary_block() {
    let l = generate_unimodular_blocks(1);
    let r = build_r(&l).unwrap();
    assert_eq!(r.shape(), (6, 6));
    assert_eq!(cofactor_det(&as_rows(&r)).abs(), big(1));
    let report = classify(&l);
    assert!(report.is_ns_pair);
    assert_eq!(report.summary(), "NS-pair: yes; link: 3 × S²; fiber: S³_(3)");
    assert_eq!(report.pfaffian_a, Some(big(1)));
}

#[test]
fn doubled_block_obstruction() {
    let l = LinkingMatrix::from_i64(SymmetrySign::Skew, &[&[0, 2], &[-2, 0]]).unwrap();
    let report = classify(&l);
    assert!(!report.is_ns_pair);
    assert_eq!(report.summary(), "NS-pair: no; H₂(X⁵) = ℤ/2 ⊕ ℤ/2");
}

#[test]
fn empty_matrix_is_the_trivial_pair() {
    let l = LinkingMatrix::from_i64(SymmetrySign::Skew, &[]).unwrap();
    let report = classify(&l);
    assert!(report.is_ns_pair);
    assert_eq!(report.link_components, 1);
    assert!(report.fiber.is_contractible());
}

#[test]
fn symmetric_case_uses_a_directly() {
    let l = LinkingMatrix::from_i64(SymmetrySign::Symmetric, &[&[0, 1], &[1, 0]]).unwrap();
    let report = classify(&l);
    assert_eq!(report.dimension, 4);
    assert!(report.is_ns_pair);
    assert_eq!(report.det_r, None);
    assert!(classify_in_dimension(&l, 5).is_err());
    let l = LinkingMatrix::from_i64(SymmetrySign::Symmetric, &[&[0, 3], &[3, 0]]).unwrap();
    assert_eq!(classify(&l).homology, "ℤ/3 ⊕ ℤ/3");
}

#[test]
fn block_sums_stay_unimodular() {
    for half in 0..5 {
        let report = classify(&generate_unimodular_blocks(half));
        assert!(report.is_ns_pair);
        assert_eq!(report.link_components, 2 * half as u64 + 1);
        let rec = NSInvariantRecord::from_classification(&report).unwrap();
        assert_eq!(rec.dims(), (5, 2));
    }
}

fn arb_skew() -> impl Strategy<Value = LinkingMatrix> {
    (0usize..=8).prop_flat_map(|k| {
        prop::collection::vec(-9i64..=9, k * k.saturating_sub(1) / 2).prop_map(move |v| skew(k, &v))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn r_determinant_matches_a(l in arb_skew()) {
        let r = build_r(&l).unwrap();
        let det_r = determinant(&r).unwrap();
        let det_a = determinant(l.matrix()).unwrap();
        prop_assert_eq!(det_r.abs(), det_a.abs());
    }

    #[test]
    fn criterion_agrees_with_smith_form(l in arb_skew()) {
        let report = classify(&l);
        let snf = smith_normal_form(&build_r(&l).unwrap());
        let unimodular = snf.rank == snf.rows && snf.invariant_factors.iter().all(One::is_one);
        prop_assert_eq!(report.is_ns_pair, report.det_a.abs().is_one());
        prop_assert_eq!(report.is_ns_pair, unimodular);
        if l.k() % 2 == 1 {
            prop_assert!(!report.is_ns_pair);
        }
    }

    #[test]
    fn relabelling_and_reorienting_spheres(l in arb_skew(), seed in any::<u64>()) {
        let k = l.k();
        prop_assume!(k > 0);
        let mut perm: Vec<usize> = (0..k).collect();
        let mut s = seed;
        for i in (1..k).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let base = classify(&l);
        let moved = classify(&l.permuted(&perm).unwrap());
        let flipped = classify(&l.with_reversed_sphere((seed as usize) % k).unwrap());
        for other in [&moved, &flipped] {
            prop_assert_eq!(other.is_ns_pair, base.is_ns_pair);
            prop_assert_eq!(other.det_a.abs(), base.det_a.abs());
            prop_assert_eq!(&other.h2_invariant_factors, &base.h2_invariant_factors);
        }
    }
}
