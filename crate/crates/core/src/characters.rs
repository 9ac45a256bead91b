//! Characters of the finite symmetric groups.
//!
//! Irreducible characters come from the Murnaghan–Nakayama rule, computed on
//! beta-sets (rim hooks of length `r` correspond to moving a bead from `b` to
//! `b - r`). Everything else in this module — restricted Schur module
//! characters, the modules `M_mu^t`, injective words, finite Kronecker
//! coefficients — is built from those values and used as an independent
//! oracle for the stable formulas in [`crate::transitions`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use spin::RwLock;

use crate::arith::{binomial, exact_div, factorial};
use crate::error::{Error, Result};
use crate::linalg;
use crate::partition::{partitions_of, Partition};
use crate::Rational;

/// Largest `t` accepted by the oracle operations.
pub const MAX_T: usize = 12;

fn check_t(t: usize) -> Result<()> {
    if t > MAX_T {
        Err(Error::DegreeTooLarge { requested: t, max: MAX_T })
    } else {
        Ok(())
    }
}

/// Centralizer order `z_rho = prod_i i^{m_i} m_i!`.
pub fn z_order(rho: &Partition) -> BigInt {
    let mut z = BigInt::from(1);
    let mut i = 0;
    let parts = rho.parts();
    while i < parts.len() {
        let k = parts[i];
        let m = parts[i..].iter().take_while(|&&p| p == k).count();
        z *= BigInt::from(k).pow(m as u32) * factorial(m);
        i += m;
    }
    z
}

fn beta_set(lambda: &Partition) -> Vec<usize> {
    let l = lambda.len();
    (0..l).map(|i| lambda.part(i) + (l - 1 - i)).collect()
}

fn from_beta_set(beta: &[usize]) -> Partition {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let l = b.len();
    Partition::from_unsorted((0..l).map(|i| b[i] - (l - 1 - i)).collect())
}

/// `chi^lambda(rho)` by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> i64 {
    assert_eq!(lambda.size(), rho.size(), "shape and cycle type must have equal size");
    let mut memo = BTreeMap::new();
    mn_rec(lambda, rho.parts(), &mut memo)
}

fn mn_rec(lambda: &Partition, rho: &[usize], memo: &mut BTreeMap<(Partition, usize), i64>) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return 1;
    };
    let key = (lambda.clone(), rho.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let beta = beta_set(lambda);
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = b - r;
        let value = mn_rec(&from_beta_set(&moved), rest, memo);
        total += if crossed % 2 == 0 { value } else { -value };
    }
    memo.insert(key, total);
    total
}

/// Full character table of `S_n`: rows are irreducibles, columns conjugacy
/// classes, both in canonical partition order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    values: Vec<Vec<i64>>,
    z: Vec<BigInt>,
}

impl CharacterTable {
    fn compute(n: usize) -> Self {
        let partitions = partitions_of(n);
        let mut values = alloc::vec![alloc::vec![0i64; partitions.len()]; partitions.len()];
        for (j, rho) in partitions.iter().enumerate() {
            // shared memo per cycle type: subproblems are keyed by the
            // remaining suffix of rho
            let mut memo = BTreeMap::new();
            for (i, lambda) in partitions.iter().enumerate() {
                values[i][j] = mn_rec(lambda, rho.parts(), &mut memo);
            }
        }
        Self::from_values(n, values)
    }

    /// Rebuilds a table from stored values (rows and columns in canonical
    /// order). Used when loading persisted tables.
    pub fn from_values(n: usize, values: Vec<Vec<i64>>) -> Self {
        let partitions = partitions_of(n);
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let z = partitions.iter().map(z_order).collect();
        CharacterTable { n, partitions, index, values, z }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[rho]]
    }

    pub fn z(&self, class: usize) -> &BigInt {
        &self.z[class]
    }
}

static TABLES: RwLock<BTreeMap<usize, Arc<CharacterTable>>> = RwLock::new(BTreeMap::new());

/// Memoized character table of `S_n`.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    if let Some(t) = TABLES.read().get(&n) {
        return t.clone();
    }
    let table = Arc::new(CharacterTable::compute(n));
    TABLES.write().entry(n).or_insert(table).clone()
}

/// Seeds the memo with a previously computed table. The first table
/// published for a given `n` wins.
pub fn install_character_table(table: CharacterTable) {
    TABLES.write().entry(table.n).or_insert_with(|| Arc::new(table));
}

/// A class function on `S_t` with integer values, stored densely over the
/// cycle types in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterVector {
    t: usize,
    values: Vec<BigInt>,
}

impl CharacterVector {
    pub fn new(t: usize, values: Vec<BigInt>) -> Result<Self> {
        let classes = partitions_of(t).len();
        if values.len() != classes {
            return Err(Error::InvalidArgument(format!(
                "expected {} class values for S_{}, got {}",
                classes,
                t,
                values.len()
            )));
        }
        Ok(CharacterVector { t, values })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn value(&self, rho: &Partition) -> BigInt {
        let table = character_table(self.t);
        self.values[table.index_of(rho).expect("cycle type of t")].clone()
    }

    /// `(cycle type, value)` pairs in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (Partition, &BigInt)> + '_ {
        partitions_of(self.t).into_iter().zip(self.values.iter())
    }

    /// Pointwise product (character of the tensor product).
    pub fn product(&self, other: &CharacterVector) -> CharacterVector {
        assert_eq!(self.t, other.t);
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        CharacterVector { t: self.t, values }
    }

    /// Class-function inner product `sum_rho chi(rho) psi(rho) / z_rho`.
    pub fn inner(&self, other: &CharacterVector) -> Rational {
        assert_eq!(self.t, other.t);
        let table = character_table(self.t);
        let mut acc = Rational::zero();
        for (c, (a, b)) in self.values.iter().zip(&other.values).enumerate() {
            acc += Rational::new(a * b, table.z(c).clone());
        }
        acc
    }
}

/// `chi^lambda` as a class function on `S_{|lambda|}`.
pub fn specht_character(lambda: &Partition) -> CharacterVector {
    let table = character_table(lambda.size());
    let row = &table.values()[table.index_of(lambda).expect("partition of n")];
    CharacterVector { t: lambda.size(), values: row.iter().map(|&v| BigInt::from(v)).collect() }
}

/// Trace of `w^k` on `C^t` for `w` of cycle type `rho`: the number of fixed
/// points of `w^k`.
fn power_trace(rho: &Partition, k: usize) -> BigInt {
    BigInt::from(rho.parts().iter().filter(|&&j| k % j == 0).sum::<usize>())
}

/// Character of `S_lambda(C^t)` restricted to `S_t`: `s_lambda` evaluated at
/// the eigenvalues of permutation matrices, via its power-sum expansion.
pub fn schur_module_character(lambda: &Partition, t: usize) -> Result<CharacterVector> {
    check_t(t)?;
    if t == 0 {
        return Err(Error::InvalidArgument("t must be at least 1".into()));
    }
    let n = lambda.size();
    let inner = character_table(n);
    let n_fact = factorial(n);
    let lambda_row = inner.index_of(lambda).expect("partition of n");
    let mut values = Vec::new();
    for rho in partitions_of(t) {
        // n! * s_lambda(eigenvalues) = sum_sigma chi(sigma) (n!/z_sigma) prod_i tr(w^sigma_i)
        let mut acc = BigInt::zero();
        for (c, sigma) in inner.partitions().iter().enumerate() {
            let chi = inner.values()[lambda_row][c];
            if chi == 0 {
                continue;
            }
            let traces: BigInt = sigma.parts().iter().map(|&k| power_trace(&rho, k)).product();
            acc += BigInt::from(chi) * (&n_fact / inner.z(c)) * traces;
        }
        let v = exact_div(&acc, &n_fact)
            .ok_or_else(|| Error::NonIntegralResult(format!("schur_module_character({}, {})", lambda, t)))?;
        values.push(v);
    }
    Ok(CharacterVector { t, values })
}

/// Multiplicities of the irreducibles in `chi`, keyed by partitions of `t`;
/// zero multiplicities are omitted.
pub fn decompose(chi: &CharacterVector) -> Result<BTreeMap<Partition, BigInt>> {
    let table = character_table(chi.t);
    let mut out = BTreeMap::new();
    for (i, mu) in table.partitions().iter().enumerate() {
        let mut acc = Rational::zero();
        for (c, v) in chi.values.iter().enumerate() {
            acc += Rational::new(v * table.values()[i][c], table.z(c).clone());
        }
        if !acc.is_integer() || acc.is_negative() {
            return Err(Error::NotACharacter { partition: mu.clone(), value: format!("{}", acc) });
        }
        if !acc.is_zero() {
            out.insert(mu.clone(), acc.to_integer());
        }
    }
    Ok(out)
}

/// Kronecker coefficient `g_{alpha^(t), beta^(t), gamma^(t)}`.
pub fn kronecker_finite(alpha: &Partition, beta: &Partition, gamma: &Partition, t: usize) -> Result<BigInt> {
    let (a, b, g) = (alpha.pad(t)?, beta.pad(t)?, gamma.pad(t)?);
    check_t(t)?;
    let table = character_table(t);
    let (ia, ib, ig) = (table.index_of(&a).unwrap(), table.index_of(&b).unwrap(), table.index_of(&g).unwrap());
    let t_fact = factorial(t);
    let mut acc = BigInt::zero();
    for c in 0..table.partitions().len() {
        let prod = table.values()[ia][c] * table.values()[ib][c] * table.values()[ig][c];
        if prod != 0 {
            acc += BigInt::from(prod) * (&t_fact / table.z(c));
        }
    }
    exact_div(&acc, &t_fact).ok_or_else(|| Error::NonIntegralResult("kronecker_finite".into()))
}

/// Enumerates sub-multisets of `rho` of total size `size`, yielding the
/// sub-multiset together with `z_rho / (z_sigma z_tau)` where `tau` is the
/// complement.
fn sub_cycle_types(rho: &Partition, size: usize) -> Vec<(Partition, BigInt)> {
    let mut distinct: Vec<(usize, usize)> = Vec::new();
    for &p in rho.parts() {
        match distinct.last_mut() {
            Some((k, m)) if *k == p => *m += 1,
            _ => distinct.push((p, 1)),
        }
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        distinct: &[(usize, usize)],
        remaining: usize,
        chosen: &mut Vec<usize>,
        weight: BigInt,
        out: &mut Vec<(Partition, BigInt)>,
    ) {
        let Some((&(k, m), rest)) = distinct.split_first() else {
            if remaining == 0 {
                out.push((Partition::from_unsorted(chosen.clone()), weight));
            }
            return;
        };
        for j in 0..=m {
            if j * k > remaining {
                break;
            }
            chosen.extend(core::iter::repeat(k).take(j));
            rec(rest, remaining - j * k, chosen, &weight * binomial(m, j), out);
            chosen.truncate(chosen.len() - j);
        }
    }
    rec(&distinct, size, &mut chosen, BigInt::from(1), &mut out);
    out
}

/// Character of `M_mu^t = Ind_{S_|mu| x S_{t-|mu|}}^{S_t} (Sp_mu ⊠ trivial)`,
/// from the induced-character formula over the Young subgroup.
pub fn m_character(mu: &Partition, t: usize) -> Result<CharacterVector> {
    check_t(t)?;
    if t < mu.size() {
        return Err(Error::InvalidArgument(format!("t = {} is smaller than |{}|", t, mu)));
    }
    let inner = character_table(mu.size());
    let row = inner.index_of(mu).unwrap();
    let values = partitions_of(t)
        .iter()
        .map(|rho| {
            sub_cycle_types(rho, mu.size())
                .into_iter()
                .map(|(sigma, w)| w * inner.values()[row][inner.index_of(&sigma).unwrap()])
                .sum()
        })
        .collect();
    Ok(CharacterVector { t, values })
}

/// A class function on `S_m x S_t`, indexed by pairs of cycle types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCharacter {
    pub m: usize,
    pub t: usize,
    pub values: BTreeMap<(Partition, Partition), BigInt>,
}

fn falling(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    ((n - k + 1)..=n).fold(BigInt::from(1), |acc, v| acc * BigInt::from(v))
}

/// Permutation character of `S_m x S_t` on injective words of length `m`
/// over `t` letters (positions permuted by `S_m`, letters by `S_t`).
///
/// A word is fixed by `(sigma, tau)` iff it maps each `k`-cycle of `sigma`
/// onto a distinct `k`-cycle of `tau`, with `k` choices of rotation.
pub fn injective_words_character(m: usize, t: usize) -> Result<PairCharacter> {
    check_t(t)?;
    if m > t {
        return Err(Error::InvalidArgument(format!("word length {} exceeds alphabet size {}", m, t)));
    }
    let mut values = BTreeMap::new();
    for sigma in partitions_of(m) {
        for tau in partitions_of(t) {
            let mut v = BigInt::from(1);
            for k in 1..=m {
                let need = sigma.multiplicity(k);
                if need > 0 {
                    v *= falling(tau.multiplicity(k), need) * BigInt::from(k).pow(need as u32);
                }
            }
            values.insert((sigma.clone(), tau), v);
        }
    }
    Ok(PairCharacter { m, t, values })
}

/// Writes a pair character as `sum c_{alpha,beta} Sp_alpha ⊠ M_beta^t` with
/// `alpha, beta ⊢ m`; returns the nonzero coefficients.
///
/// For each `alpha` the `S_t`-character `<chi, chi^alpha ⊗ ->` is expanded in
/// the linearly independent characters of `M_beta^t`.
pub fn decompose_pair(chi: &PairCharacter) -> Result<BTreeMap<(Partition, Partition), BigInt>> {
    let (m, t) = (chi.m, chi.t);
    let small = character_table(m);
    let large = character_table(t);
    let betas = partitions_of(m);
    let classes_t = partitions_of(t);

    // Specht multiplicity vectors of each M_beta^t
    let mut columns = Vec::new();
    for beta in &betas {
        let mult = decompose(&m_character(beta, t)?)?;
        columns.push(
            large.partitions().iter().map(|g| Rational::from_integer(mult.get(g).cloned().unwrap_or_default())).collect::<Vec<_>>(),
        );
    }
    let system: linalg::Matrix =
        (0..large.partitions().len()).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();

    let mut out = BTreeMap::new();
    for (ai, alpha) in small.partitions().iter().enumerate() {
        // restrict to the alpha-isotypic part: psi(tau) = <chi(-, tau), chi^alpha>
        let psi_values: Vec<BigInt> = classes_t
            .iter()
            .map(|tau| {
                let mut acc = Rational::zero();
                for (c, sigma) in small.partitions().iter().enumerate() {
                    let v = &chi.values[&(sigma.clone(), tau.clone())];
                    acc += Rational::new(v * small.values()[ai][c], small.z(c).clone());
                }
                acc
            })
            .map(|q| {
                if q.is_integer() {
                    Ok(q.to_integer())
                } else {
                    Err(Error::NotACharacter { partition: alpha.clone(), value: format!("{}", q) })
                }
            })
            .collect::<Result<_>>()?;
        let psi = decompose(&CharacterVector { t, values: psi_values })?;
        let rhs: Vec<Rational> = large
            .partitions()
            .iter()
            .map(|g| Rational::from_integer(psi.get(g).cloned().unwrap_or_default()))
            .collect();
        let coeffs = linalg::solve(&system, &rhs).ok_or_else(|| {
            Error::InvalidArgument(format!("isotypic component of {} is not spanned by M_beta^{}", alpha, t))
        })?;
        for (beta, c) in betas.iter().zip(coeffs) {
            if !c.is_integer() {
                return Err(Error::NonIntegralResult(format!("decompose_pair at ({}, {})", alpha, beta)));
            }
            if !c.is_zero() {
                out.insert((alpha.clone(), beta.clone()), c.to_integer());
            }
        }
    }
    Ok(out)
}
