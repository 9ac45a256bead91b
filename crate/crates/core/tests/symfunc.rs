mod common;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use spst_core::{hall_inner, lr_coefficient, part, partitions_of, partitions_up_to, Basis, Partition, Rational, SymFunc};

fn s(p: &Partition, cap: usize) -> SymFunc {
    SymFunc::basis_element(Basis::Schur, p.clone(), cap)
}

/// LR coefficients against a product of Schur polynomials expanded by
/// semistandard tableaux.
#[test]
fn lr_matches_monomial_brute_force() {
    let cases = [
        (part(&[2, 1]), part(&[1]), 5usize),
        (part(&[2, 1]), part(&[2, 1]), 6),
        (part(&[2]), part(&[2]), 4),
        (part(&[3, 1]), part(&[2]), 6),
        (part(&[1, 1]), part(&[2, 1]), 5),
    ];
    for (lambda, mu, n) in cases {
        let d = lambda.size() + mu.size();
        let product = common::mul(&common::schur_poly(&lambda, n), &common::schur_poly(&mu, n));
        let expected = common::schur_coefficients(&product, n, d);
        for nu in partitions_of(d) {
            let want = BigInt::from(expected.get(&nu).copied().unwrap_or(0));
            assert_eq!(lr_coefficient(&lambda, &mu, &nu), want, "c^{}_{{{},{}}}", nu, lambda, mu);
        }
    }
}

#[test]
fn s21_times_s1_is_three_terms() {
    let product = s(&part(&[2, 1]), 5).multiply(&s(&part(&[1]), 5));
    let expected = s(&part(&[3, 1]), 5).add(&s(&part(&[2, 2]), 5)).add(&s(&part(&[2, 1, 1]), 5));
    assert_eq!(product, expected);
}

#[test]
fn schur_functions_are_orthonormal() {
    let parts = partitions_up_to(7);
    for a in &parts {
        // round trip through power sums before pairing
        let fa = s(a, 7).to_power();
        for b in &parts {
            let want = if a == b { Rational::one() } else { Rational::zero() };
            assert_eq!(hall_inner(&fa, &s(b, 7).to_power()), want, "<s{}, s{}>", a, b);
        }
    }
}

#[test]
fn lr_symmetries_up_to_size_8() {
    for n in 0..=8 {
        for a in 0..=n {
            for lambda in partitions_of(a) {
                for mu in partitions_of(n - a) {
                    let prod = s(&lambda, n).multiply(&s(&mu, n));
                    let swapped = s(&mu, n).multiply(&s(&lambda, n));
                    assert_eq!(prod, swapped);
                    let conj = s(&lambda.transpose(), n).multiply(&s(&mu.transpose(), n));
                    for (nu, c) in prod.terms() {
                        assert!(c.is_integer() && c.is_positive(), "LR positivity {} {} {}", lambda, mu, nu);
                        assert_eq!(conj.coeff(&nu.transpose()), *c);
                    }
                    assert_eq!(prod.terms().len(), conj.terms().len());
                }
            }
        }
    }
}

#[test]
fn basis_round_trips_to_power() {
    for basis in Basis::ALL {
        for lambda in partitions_up_to(6) {
            let f = SymFunc::basis_element(basis, lambda.clone(), 6);
            assert_eq!(f.to_power().from_power(basis), f, "{:?} {}", basis, lambda);
        }
    }
}

#[test]
fn omega_matches_across_bases() {
    for lambda in partitions_up_to(5) {
        let f = s(&lambda, 5);
        for basis in Basis::ALL {
            let g = f.to_basis(basis);
            assert_eq!(g.omega().to_basis(Basis::Schur), f.omega(), "{:?} {}", basis, lambda);
        }
    }
}

fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn arb_schur_combination(max: usize) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((arb_partition(max), -3i64..=3), 1..4).prop_map(move |terms| {
        SymFunc::from_terms(
            Basis::Schur,
            8,
            terms.into_iter().map(|(p, c)| (p, Rational::from_integer(BigInt::from(c)))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiply_commutes_and_associates(a in arb_partition(3), b in arb_partition(3), c in arb_partition(2)) {
        let (fa, fb, fc) = (s(&a, 8), s(&b, 8), s(&c, 8));
        prop_assert_eq!(fa.multiply(&fb), fb.multiply(&fa));
        prop_assert_eq!(fa.multiply(&fb).multiply(&fc), fa.multiply(&fb.multiply(&fc)));
    }

    #[test]
    fn omega_is_an_isometric_involution(f in arb_schur_combination(5), g in arb_schur_combination(5)) {
        prop_assert_eq!(f.omega().omega(), f.clone());
        prop_assert_eq!(hall_inner(&f.omega(), &g.omega()), hall_inner(&f, &g));
        let fp = f.to_power();
        prop_assert_eq!(fp.omega().from_power(Basis::Schur), f.omega());
    }

    #[test]
    fn hall_inner_is_bilinear(f in arb_schur_combination(4), g in arb_schur_combination(4), h in arb_schur_combination(4)) {
        prop_assert_eq!(hall_inner(&f.add(&g), &h), hall_inner(&f, &h) + hall_inner(&g, &h));
        prop_assert_eq!(hall_inner(&f.to_power(), &h.to_basis(Basis::Homogeneous)), hall_inner(&f, &h));
    }

    #[test]
    fn products_of_schur_functions_are_schur_positive(a in arb_partition(4), b in arb_partition(4)) {
        let prod = s(&a, 8).multiply(&s(&b, 8));
        prop_assert!(prod.is_integral());
        prop_assert!(prod.terms().values().all(|c| !c.is_negative()));
        prop_assert_eq!(
            prod.terms().values().map(|c| c.to_integer()).fold(BigInt::zero(), |x, y| x + y) > BigInt::zero(),
            true
        );
    }
}
