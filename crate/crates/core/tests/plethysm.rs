mod common;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use spst_core::plethysm::{lyndon, plethysm, series, Series};
use spst_core::{factorial, hall_inner, lr_coefficient, part, partitions_of, partitions_up_to, Basis, Partition, Rational, SymFunc};

fn s(p: &[usize], cap: usize) -> SymFunc {
    SymFunc::basis_element(Basis::Schur, part(p), cap)
}

fn schur(f: &SymFunc) -> SymFunc {
    f.to_basis(Basis::Schur)
}

/// `f[g]` for Schur functions computed by substituting the monomials of
/// `g(x_1..x_n)` as the variables of `f`.
fn brute_plethysm(f: &Partition, g: &Partition, n: usize) -> std::collections::BTreeMap<Partition, i64> {
    let inner = common::schur_poly(g, n);
    let mut ys = Vec::new();
    for (e, &c) in &inner {
        for _ in 0..c {
            ys.push(common::Poly::from([(e.clone(), 1)]));
        }
    }
    let outer = common::schur_poly(f, ys.len());
    let result = common::substitute(&outer, &ys, n);
    common::schur_coefficients(&result, n, f.size() * g.size())
}

#[test]
fn plethysm_matches_monomial_substitution() {
    let n = 4;
    for (f, g) in [(&[2][..], &[2][..]), (&[1, 1], &[2]), (&[2], &[1, 1]), (&[3], &[2]), (&[2, 1], &[2])] {
        let expected = brute_plethysm(&part(f), &part(g), n);
        let cap = f.iter().sum::<usize>() * g.iter().sum::<usize>();
        let got = schur(&plethysm(&s(f, cap), &s(g, cap)));
        for lambda in partitions_of(cap) {
            if lambda.len() > n {
                continue;
            }
            let want = Rational::from_integer(BigInt::from(expected.get(&lambda).copied().unwrap_or(0)));
            assert_eq!(got.coeff(&lambda), want, "{:?}[{:?}] at {}", f, g, lambda);
        }
    }
}

#[test]
fn h2_of_h2() {
    let f = s(&[2], 4);
    assert_eq!(schur(&plethysm(&f, &f)), s(&[4], 4).add(&s(&[2, 2], 4)));
}

/// `s_mu[f + g] = sum c^mu_{alpha,beta} s_alpha[f] s_beta[g]`.
#[test]
fn sum_rule() {
    let cap = 8;
    let f = s(&[2], cap).add(&SymFunc::one(Basis::Schur, cap));
    let g = s(&[1, 1], cap).neg();
    for mu in partitions_up_to(4) {
        let left = schur(&plethysm(&s(mu.parts(), cap), &f.add(&g)));
        let mut right = SymFunc::zero(Basis::Schur, cap);
        for a in 0..=mu.size() {
            for alpha in partitions_of(a) {
                for beta in partitions_of(mu.size() - a) {
                    let c = lr_coefficient(&alpha, &beta, &mu);
                    if c.is_zero() {
                        continue;
                    }
                    let term = plethysm(&s(alpha.parts(), cap), &f).multiply(&plethysm(&s(beta.parts(), cap), &g));
                    right = right.add(&term.scale(&Rational::from_integer(c)));
                }
            }
        }
        assert_eq!(left, schur(&right), "mu = {}", mu);
    }
}

/// `s_lambda[1 + h_1]` sums horizontal strips and `s_lambda[-1 + h_1]`
/// signed vertical strips.
#[test]
fn pieri_strip_identities() {
    let cap = 6;
    for lambda in partitions_up_to(6) {
        let sl = s(lambda.parts(), cap);
        let plus = schur(&plethysm(&sl, &series(Series::OnePlusH1, cap)));
        let minus = schur(&plethysm(&sl, &series(Series::MinusOnePlusH1, cap)));
        let mut want_plus = SymFunc::zero(Basis::Schur, cap);
        for nu in lambda.horizontal_strip_inner() {
            want_plus = want_plus.add(&s(nu.parts(), cap));
        }
        let mut want_minus = SymFunc::zero(Basis::Schur, cap);
        for nu in lambda.vertical_strip_inner() {
            let term = s(nu.parts(), cap);
            want_minus = if (lambda.size() - nu.size()) % 2 == 0 { want_minus.add(&term) } else { want_minus.sub(&term) };
        }
        assert_eq!(plus, want_plus, "{}", lambda);
        assert_eq!(minus, want_minus, "{}", lambda);
    }
}

/// `H[L] = 1 + p_1 + p_1^2 + ...`: the symmetric algebra on the free Lie
/// algebra is the tensor algebra.
#[test]
fn h_of_lyndon_is_the_tensor_algebra() {
    let cap = 8;
    let left = plethysm(&series(Series::HWithOne, cap), &series(Series::Lyndon, cap));
    let mut right = SymFunc::zero(Basis::Power, cap);
    for n in 0..=cap {
        right = right.add(&SymFunc::basis_element(Basis::Power, part(&vec![1; n]), cap));
    }
    assert_eq!(left, right);
}

#[test]
fn plethysm_is_associative() {
    let cap = 8;
    let f = s(&[2], cap);
    let g = s(&[1, 1], cap).add(&s(&[1], cap));
    let h = s(&[2], cap).sub(&s(&[1], cap));
    let left = plethysm(&plethysm(&f, &g), &h);
    let right = plethysm(&f, &plethysm(&g, &h));
    assert_eq!(schur(&left), schur(&right));
}

/// For homogeneous `g` of degree `d`: `omega(f[g]) = f[omega g]` when `d`
/// is even and `(omega f)[omega g]` when `d` is odd.
#[test]
fn omega_twist() {
    let cap = 8;
    for f in partitions_up_to(3) {
        let fs = s(f.parts(), cap);
        for g in partitions_up_to(2).into_iter().filter(|g| !g.is_empty()) {
            let gs = s(g.parts(), cap);
            let left = schur(&plethysm(&fs, &gs)).omega();
            let right = if g.size() % 2 == 0 { plethysm(&fs, &gs.omega()) } else { plethysm(&fs.omega(), &gs.omega()) };
            assert_eq!(left, schur(&right), "{} {}", f, g);
        }
    }
}

#[test]
fn lyndon_functions_are_schur_positive_with_factorial_mass() {
    for m in 1..=7 {
        let l = schur(&lyndon(m));
        assert!(l.is_integral());
        assert!(l.terms().values().all(|c| *c > Rational::zero()), "L_{}", m);
        let h1m = SymFunc::basis_element(Basis::Power, part(&vec![1; m]), m);
        assert_eq!(hall_inner(&lyndon(m), &h1m), Rational::from_integer(factorial(m - 1)), "L_{}", m);
    }
    assert_eq!(schur(&lyndon(2)), s(&[1, 1], 2));
    assert_eq!(schur(&lyndon(3)), s(&[2, 1], 3));
}

#[test]
fn constants_pass_through() {
    let cap = 4;
    let c = SymFunc::constant(Basis::Schur, Rational::from_integer(BigInt::from(3)), cap);
    // h_2[3] = number of multisets of size 2 from 3 elements
    assert_eq!(plethysm(&s(&[2], cap), &c).coeff(&Partition::empty()), Rational::from_integer(BigInt::from(6)));
    assert_eq!(plethysm(&SymFunc::one(Basis::Schur, cap), &s(&[1], cap)).coeff(&Partition::empty()), Rational::one());
}
