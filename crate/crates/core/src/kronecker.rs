//! Stable Kronecker coefficients as structure constants of the stable
//! Specht basis, and a finite-`t` character oracle for them.

use num_bigint::BigInt;

use crate::characters::{kronecker_finite, MAX_T};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::Basis;
use crate::transitions::{schur_to_stable_specht, stable_specht_to_schur, StableSpechtExpansion};

/// `gbar_{alpha,beta,gamma}`: the coefficient of `s†_gamma` in
/// `s†_alpha s†_beta`.
pub fn stable_kronecker(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<BigInt> {
    let cap = alpha.size() + beta.size();
    if gamma.size() > cap {
        return Ok(BigInt::default());
    }
    let product = stable_specht_product(alpha, beta)?;
    Ok(product.coeff(gamma))
}

/// `s†_alpha s†_beta` expanded in the stable Specht basis.
pub fn stable_specht_product(alpha: &Partition, beta: &Partition) -> Result<StableSpechtExpansion> {
    let cap = alpha.size() + beta.size();
    let left = stable_specht_to_schur(&StableSpechtExpansion::basis_element(alpha.clone(), cap))?;
    let right = stable_specht_to_schur(&StableSpechtExpansion::basis_element(beta.clone(), cap))?;
    let product = left.multiply(&right).to_schur_integral("product of Schur functions")?;
    debug_assert_eq!(product.basis(), Basis::Schur);
    schur_to_stable_specht(&product)
}

/// Evaluates `g_{alpha^(t), beta^(t), gamma^(t)}` for increasing `t` from the
/// smallest admissible value and returns the first value seen at two
/// consecutive `t`, together with the first of those `t`.
///
/// Two equal consecutive values are evidence of stabilization, not a proof.
pub fn stable_kronecker_oracle(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<(BigInt, usize)> {
    let t0 = [alpha, beta, gamma].iter().map(|p| p.first() + p.size()).max().unwrap_or(0);
    if t0 + 1 > MAX_T {
        return Err(Error::OracleBudgetExceeded { max_t: MAX_T, last_t: t0 });
    }
    let mut previous = kronecker_finite(alpha, beta, gamma, t0)?;
    for t in t0 + 1..=MAX_T {
        let current = kronecker_finite(alpha, beta, gamma, t)?;
        if current == previous {
            return Ok((current, t - 1));
        }
        previous = current;
    }
    Err(Error::OracleBudgetExceeded { max_t: MAX_T, last_t: MAX_T })
}
