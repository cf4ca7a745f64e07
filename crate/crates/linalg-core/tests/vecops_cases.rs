//! Contract tests for vectorization and the sandwich superoperator — the
//! identities every Liouvillian in the workspace is assembled from.

use linalg_core::{
    C64, CMatrix, devectorize, kron, max_abs, sandwich_superoperator, vectorize,
};
use proptest::prelude::*;

fn random_matrix(n: usize) -> impl Strategy<Value = CMatrix> {
    proptest::collection::vec((-1.0_f64..1.0, -1.0_f64..1.0), n * n).prop_map(move |entries| {
        let mut m = CMatrix::zeros((n, n));
        for i in 0..n {
            for j in 0..n {
                let (re, im) = entries[i * n + j];
                m[(i, j)] = C64::new(re, im);
            }
        }
        m
    })
}

#[test]
fn vectorize_stacks_columns() {
    let mut m = CMatrix::zeros((2, 2));
    m[(0, 0)] = C64::new(1.0, 0.0); // a
    m[(0, 1)] = C64::new(2.0, 0.0); // b
    m[(1, 0)] = C64::new(3.0, 0.0); // c
    m[(1, 1)] = C64::new(4.0, 0.0); // d
    let v = vectorize(&m);
    let flat: Vec<f64> = v.iter().map(|z| z.re).collect();
    assert_eq!(flat, vec![1.0, 3.0, 2.0, 4.0]); // (a, c, b, d)
}

#[test]
fn devectorize_rejects_non_square_length() {
    let v = linalg_core::CVector::zeros(7);
    assert!(matches!(
        devectorize(&v),
        Err(linalg_core::LinalgError::NotSquareLength { len: 7 })
    ));
}

#[test]
fn kron_of_two_by_two_blocks() {
    // kron(A, B) places a_ij·B at block (i, j).
    let mut a = CMatrix::zeros((2, 2));
    a[(0, 0)] = C64::new(1.0, 0.0);
    a[(0, 1)] = C64::new(2.0, 0.0);
    let mut b = CMatrix::zeros((2, 2));
    b[(0, 0)] = C64::new(0.0, 1.0);
    b[(1, 1)] = C64::new(5.0, 0.0);
    let k = kron(&a, &b);
    assert_eq!(k.nrows(), 4);
    assert_eq!(k[(0, 0)], C64::new(0.0, 1.0));
    assert_eq!(k[(1, 1)], C64::new(5.0, 0.0));
    assert_eq!(k[(0, 2)], C64::new(0.0, 2.0));
    assert_eq!(k[(1, 3)], C64::new(10.0, 0.0));
    assert_eq!(k[(2, 0)], C64::new(0.0, 0.0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn vectorize_devectorize_roundtrip(m in random_matrix(4)) {
        let back = devectorize(&vectorize(&m)).unwrap();
        prop_assert!(max_abs(&(&back - &m)) == 0.0);
    }

    #[test]
    fn sandwich_identity_holds(
        x in random_matrix(3),
        rho in random_matrix(3),
        y in random_matrix(3),
    ) {
        // vec(X·ρ·Y) must equal (Yᵀ ⊗ X)·vec(ρ) exactly up to rounding.
        let direct = vectorize(&x.dot(&rho).dot(&y));
        let via_super = sandwich_superoperator(&x, &y).dot(&vectorize(&rho));
        for i in 0..9 {
            prop_assert!((direct[i] - via_super[i]).norm() < 1e-13);
        }
    }

    #[test]
    fn kron_is_associative(
        a in random_matrix(2),
        b in random_matrix(2),
        c in random_matrix(2),
    ) {
        let left = kron(&kron(&a, &b), &c);
        let right = kron(&a, &kron(&b, &c));
        prop_assert!(max_abs(&(&left - &right)) < 1e-14);
    }

    #[test]
    fn kron_respects_matrix_product(
        a in random_matrix(2),
        b in random_matrix(2),
        c in random_matrix(2),
        d in random_matrix(2),
    ) {
        // (A⊗B)(C⊗D) = (AC)⊗(BD).
        let left = kron(&a, &b).dot(&kron(&c, &d));
        let right = kron(&a.dot(&c), &b.dot(&d));
        prop_assert!(max_abs(&(&left - &right)) < 1e-12);
    }
}
