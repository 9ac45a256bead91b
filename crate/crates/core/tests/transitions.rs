use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use spst_core::characters::{decompose, m_character, schur_module_character};
use spst_core::transitions::{
    a_finite, a_stable, b_stable, matrix, matrix_product, schur_to_stable_specht, sign_violations, stable_specht_to_schur,
    transpose, CoeffMatrix, MatrixKind, StableSpechtExpansion,
};
use spst_core::{partitions_up_to, Basis, Partition, SymFunc};

type Sparse = BTreeMap<(Partition, Partition), BigInt>;

fn identity(cap: usize) -> Sparse {
    partitions_up_to(cap).into_iter().map(|p| ((p.clone(), p), BigInt::from(1))).collect()
}

fn entries(kind: MatrixKind, cap: usize) -> Sparse {
    matrix(kind, cap).unwrap().entries().clone()
}

#[test]
fn a_and_b_are_mutually_inverse() {
    let cap = 6;
    let a = entries(MatrixKind::A, cap);
    let b = entries(MatrixKind::B, cap);
    // a is indexed (lambda, mu) and b (kappa, mu) with s_kappa in s†_mu
    assert_eq!(matrix_product(&a, &transpose(&b)), identity(cap));
    assert_eq!(matrix_product(&transpose(&b), &a), identity(cap));
}

#[test]
fn b_alternates_in_sign() {
    let b = matrix(MatrixKind::B, 6).unwrap();
    assert!(sign_violations(&b).is_empty());
    for ((row, col), v) in b.entries() {
        assert!(row.size() <= col.size(), "b_{}^{} = {}", row, col, v);
    }
}

#[test]
fn m_transitions_compose() {
    let cap = 5;
    let s2m = entries(MatrixKind::SToM, cap);
    let m2sp = entries(MatrixKind::MToSp, cap);
    let sp2m = entries(MatrixKind::SpToM, cap);
    let m2s = entries(MatrixKind::MToS, cap);
    assert_eq!(matrix_product(&s2m, &m2sp), entries(MatrixKind::A, cap));
    assert_eq!(matrix_product(&sp2m, &m2s), transpose(&entries(MatrixKind::B, cap)));
    assert_eq!(matrix_product(&m2s, &s2m), identity(cap));
    assert_eq!(matrix_product(&m2sp, &sp2m), identity(cap));
}

#[test]
fn m_transition_signs() {
    let cap = 5;
    for kind in [MatrixKind::SToM, MatrixKind::MToSp] {
        assert!(entries(kind, cap).values().all(|v| v.is_positive()), "{:?}", kind);
    }
    for kind in [MatrixKind::SpToM, MatrixKind::MToS] {
        for ((r, c), v) in entries(kind, cap) {
            let odd = r.size().abs_diff(c.size()) % 2 == 1;
            assert_eq!(v.is_negative(), odd, "{:?} {} {}", kind, r, c);
        }
    }
}

#[test]
fn b_stable_matches_matrix() {
    let b = matrix(MatrixKind::B, 5).unwrap();
    let a = matrix(MatrixKind::A, 5).unwrap();
    for lambda in partitions_up_to(5) {
        for nu in partitions_up_to(5) {
            assert_eq!(b_stable(&lambda, &nu).unwrap(), b.get(&lambda, &nu));
            assert_eq!(a_stable(&lambda, &nu).unwrap(), a.get(&lambda, &nu));
        }
    }
}

#[test]
fn a_is_nonnegative_with_unit_diagonal_block() {
    let a = matrix(MatrixKind::A, 6).unwrap();
    for lambda in partitions_up_to(6) {
        for nu in partitions_up_to(6) {
            let v = a.get(&lambda, &nu);
            assert!(!v.is_negative());
            if lambda.size() <= nu.size() {
                assert_eq!(v, BigInt::from(u8::from(lambda == nu)), "a_{}^{}", lambda, nu);
            }
        }
    }
}

/// Littlewood's finite formula, the character oracle and the stable value
/// agree in the stable range.
#[test]
fn finite_restriction_against_characters() {
    for lambda in partitions_up_to(3) {
        for t in 1..=7 {
            let chi = schur_module_character(&lambda, t).unwrap();
            let mult = decompose(&chi).unwrap();
            for nu in partitions_up_to(3) {
                let Ok(padded) = nu.pad(t) else { continue };
                let oracle = mult.get(&padded).cloned().unwrap_or_default();
                assert_eq!(a_finite(&lambda, &nu, t).unwrap(), oracle, "lambda {} nu {} t {}", lambda, nu, t);
                if t >= lambda.size() + nu.size() {
                    assert_eq!(a_stable(&lambda, &nu).unwrap(), oracle);
                }
            }
        }
    }
}

#[test]
fn m_rows_match_m_characters() {
    let m2sp = matrix(MatrixKind::MToSp, 3).unwrap();
    for mu in partitions_up_to(3) {
        for t in (2 * mu.size()).max(1)..=7 {
            let mult = decompose(&m_character(&mu, t).unwrap()).unwrap();
            let expected: BTreeMap<Partition, BigInt> =
                m2sp.row(&mu).into_iter().map(|(nu, v)| (nu.pad(t).unwrap(), v)).collect();
            assert_eq!(mult, expected, "mu {} t {}", mu, t);
        }
    }
}

#[test]
fn truncation_agrees_with_direct_build() {
    for kind in [MatrixKind::A, MatrixKind::B, MatrixKind::SToM, MatrixKind::MToS, MatrixKind::MToSp, MatrixKind::SpToM] {
        let big = CoeffMatrix::build(kind, 5).unwrap();
        assert_eq!(big.truncate(3), CoeffMatrix::build(kind, 3).unwrap(), "{:?}", kind);
    }
}

fn arb_expansion() -> impl Strategy<Value = StableSpechtExpansion> {
    let all = partitions_up_to(4);
    prop::collection::vec((0..all.len(), -5i64..=5), 0..5).prop_map(move |terms| {
        StableSpechtExpansion::from_terms(4, terms.into_iter().map(|(i, c)| (all[i].clone(), BigInt::from(c))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn stable_specht_round_trip(e in arb_expansion()) {
        let f = stable_specht_to_schur(&e).unwrap();
        prop_assert_eq!(f.basis(), Basis::Schur);
        prop_assert_eq!(schur_to_stable_specht(&f).unwrap(), e);
    }

    #[test]
    fn schur_round_trip(i in 0usize..12, j in 0usize..12, c in -4i64..=4) {
        let all = partitions_up_to(4);
        let (x, y) = (all[i % all.len()].clone(), all[j % all.len()].clone());
        let f = SymFunc::basis_element(Basis::Schur, x, 4)
            .add(&SymFunc::basis_element(Basis::Schur, y, 4).scale(&BigInt::from(c).into()));
        let e = schur_to_stable_specht(&f).unwrap();
        prop_assert_eq!(stable_specht_to_schur(&e).unwrap(), f);
    }
}

#[test]
fn top_degree_of_stable_specht_is_schur() {
    for nu in partitions_up_to(5) {
        let f = stable_specht_to_schur(&StableSpechtExpansion::basis_element(nu.clone(), 5)).unwrap();
        assert_eq!(f.homogeneous_part(nu.size()), SymFunc::basis_element(Basis::Schur, nu.clone(), 5));
        assert!(f.terms().keys().all(|k| k.size() <= nu.size()));
    }
}
