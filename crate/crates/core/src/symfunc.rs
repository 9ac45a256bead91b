//! Exact symmetric functions in the Schur, power-sum, homogeneous,
//! elementary and monomial bases.
//!
//! Elements are sparse maps from partitions to rationals, truncated at an
//! explicit degree cap. Arithmetic happens in the power-sum basis; basis
//! changes go through memoized per-degree transition matrices.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use spin::RwLock;

use crate::arith::sign;
use crate::characters::character_table;
use crate::error::{Error, Result};
use crate::linalg;
use crate::partition::{partitions_of, Partition};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Schur,
    Power,
    Homogeneous,
    Elementary,
    Monomial,
}

impl Basis {
    pub const ALL: [Basis; 5] =
        [Basis::Schur, Basis::Power, Basis::Homogeneous, Basis::Elementary, Basis::Monomial];

    /// Prefix used in the text rendering, e.g. `s` in `s[2,1]`.
    pub fn prefix(self) -> &'static str {
        match self {
            Basis::Schur => "s",
            Basis::Power => "p",
            Basis::Homogeneous => "h",
            Basis::Elementary => "e",
            Basis::Monomial => "m",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Basis::Schur => "schur",
            Basis::Power => "power",
            Basis::Homogeneous => "homogeneous",
            Basis::Elementary => "elementary",
            Basis::Monomial => "monomial",
        }
    }

    pub fn from_name(name: &str) -> Option<Basis> {
        Basis::ALL.into_iter().find(|b| b.name() == name || b.prefix() == name)
    }
}

/// A finite linear combination of basis elements, truncated at `cap`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, Rational>,
    cap: usize,
}

impl SymFunc {
    pub fn zero(basis: Basis, cap: usize) -> Self {
        SymFunc { basis, terms: BTreeMap::new(), cap }
    }

    /// Builds an element, dropping zero coefficients and terms above `cap`.
    pub fn from_terms<I>(basis: Basis, cap: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut f = SymFunc::zero(basis, cap);
        for (p, c) in terms {
            f.add_term(p, c);
        }
        f
    }

    /// A single basis element `b_lambda` (zero if `|lambda| > cap`).
    pub fn basis_element(basis: Basis, lambda: Partition, cap: usize) -> Self {
        SymFunc::from_terms(basis, cap, [(lambda, Rational::one())])
    }

    pub fn constant(basis: Basis, c: Rational, cap: usize) -> Self {
        SymFunc::from_terms(basis, cap, [(Partition::empty(), c)])
    }

    pub fn one(basis: Basis, cap: usize) -> Self {
        SymFunc::constant(basis, Rational::one(), cap)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Rational::is_integer)
    }

    /// Largest degree present, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    fn add_term(&mut self, p: Partition, c: Rational) {
        if p.size() > self.cap || c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    /// Drops every term above `cap`.
    pub fn truncate(&self, cap: usize) -> SymFunc {
        let cap = cap.min(self.cap);
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().filter(|(p, _)| p.size() <= cap).map(|(p, c)| (p.clone(), c.clone())).collect(),
            cap,
        }
    }

    /// The same element with a new cap; terms above it are dropped.
    pub fn with_cap(&self, cap: usize) -> SymFunc {
        let mut out = self.truncate(cap);
        out.cap = cap;
        out
    }

    /// The homogeneous component of degree `n`.
    pub fn homogeneous_part(&self, n: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().filter(|(p, _)| p.size() == n).map(|(p, c)| (p.clone(), c.clone())).collect(),
            cap: self.cap,
        }
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        SymFunc::from_terms(self.basis, self.cap, self.terms.iter().map(|(p, v)| (p.clone(), v * c)))
    }

    pub fn neg(&self) -> SymFunc {
        self.scale(&-Rational::one())
    }

    /// Sum; `other` is converted to this element's basis and the result
    /// carries the smaller cap.
    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let cap = self.cap.min(other.cap);
        let other = other.to_basis(self.basis);
        let mut out = self.truncate(cap);
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    /// In-place sum of an element in the same basis.
    pub(crate) fn accumulate(&mut self, other: &SymFunc) {
        debug_assert_eq!(self.basis, other.basis);
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.neg())
    }

    /// Expansion in the power-sum basis.
    pub fn to_power(&self) -> SymFunc {
        if self.basis == Basis::Power {
            return self.clone();
        }
        let mut out = SymFunc::zero(Basis::Power, self.cap);
        for (n, group) in self.by_degree() {
            let conv = conversion(self.basis, n);
            for (p, c) in group {
                let row = &conv.to_power[conv.index[p]];
                for (j, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        out.add_term(conv.partitions[j].clone(), c * v);
                    }
                }
            }
        }
        out
    }

    /// Re-expresses a power-sum element in `target`.
    pub fn from_power(&self, target: Basis) -> SymFunc {
        assert_eq!(self.basis, Basis::Power, "from_power expects a power-sum element");
        if target == Basis::Power {
            return self.clone();
        }
        let mut out = SymFunc::zero(target, self.cap);
        for (n, group) in self.by_degree() {
            let conv = conversion(target, n);
            for (p, c) in group {
                let row = &conv.from_power[conv.index[p]];
                for (j, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        out.add_term(conv.partitions[j].clone(), c * v);
                    }
                }
            }
        }
        out
    }

    pub fn to_basis(&self, target: Basis) -> SymFunc {
        if self.basis == target {
            self.clone()
        } else {
            self.to_power().from_power(target)
        }
    }

    /// Schur expansion for results that are integral by construction.
    pub fn to_schur_integral(&self, context: &str) -> Result<SymFunc> {
        let s = self.to_basis(Basis::Schur);
        if s.is_integral() {
            Ok(s)
        } else {
            Err(Error::NonIntegralResult(String::from(context)))
        }
    }

    fn by_degree(&self) -> BTreeMap<usize, Vec<(&Partition, &Rational)>> {
        let mut groups: BTreeMap<usize, Vec<(&Partition, &Rational)>> = BTreeMap::new();
        for (p, c) in &self.terms {
            groups.entry(p.size()).or_default().push((p, c));
        }
        groups
    }

    /// Product, returned in this element's basis and truncated at the smaller
    /// cap.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let cap = self.cap.min(other.cap);
        let product = power_product(&self.to_power(), &other.to_power(), cap);
        product.from_power(self.basis)
    }

    /// `self^k` in the power-sum basis.
    pub fn power(&self, k: usize) -> SymFunc {
        let base = self.to_power();
        let mut acc = SymFunc::one(Basis::Power, self.cap);
        for _ in 0..k {
            acc = power_product(&acc, &base, self.cap);
        }
        acc.from_power(self.basis)
    }

    /// The involution with `omega s_lambda = s_{lambda^T}` and
    /// `omega p_n = (-1)^{n-1} p_n`.
    pub fn omega(&self) -> SymFunc {
        let mapped = |basis: Basis, f: &dyn Fn(&Partition, &Rational) -> (Partition, Rational)| {
            SymFunc::from_terms(basis, self.cap, self.terms.iter().map(|(p, c)| f(p, c)))
        };
        match self.basis {
            Basis::Schur => mapped(Basis::Schur, &|p, c| (p.transpose(), c.clone())),
            Basis::Power => mapped(Basis::Power, &|p, c| {
                (p.clone(), c * Rational::from_integer(sign(p.size() - p.len()).into()))
            }),
            Basis::Homogeneous => mapped(Basis::Elementary, &|p, c| (p.clone(), c.clone())),
            Basis::Elementary => mapped(Basis::Homogeneous, &|p, c| (p.clone(), c.clone())),
            Basis::Monomial => self.to_power().omega().from_power(Basis::Monomial),
        }
    }

    /// Renders with the given prefix in place of the basis letter.
    pub fn render_with_prefix(&self, prefix: &str) -> String {
        render_terms(self.terms.iter(), prefix)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with_prefix(self.basis.prefix()))
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (cap {})", self, self.cap)
    }
}

/// Text rendering of a linear combination: `2 + 2*sdag[1] - 1/2*p[2]`.
/// The constant term is printed bare and unit coefficients are omitted.
pub fn render_terms<'a, C>(terms: impl Iterator<Item = (&'a Partition, &'a C)>, prefix: &str) -> String
where
    C: 'a + Clone + Into<Rational>,
{
    let mut out = String::new();
    for (i, (p, c)) in terms.enumerate() {
        let c: Rational = c.clone().into();
        let negative = c.is_negative();
        let mag = c.abs();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if p.is_empty() {
            out.push_str(&format!("{}", mag));
        } else {
            if !mag.is_one() {
                out.push_str(&format!("{}*", mag));
            }
            out.push_str(&format!("{}{}", prefix, p));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Product of two power-sum elements, truncated at `cap`.
pub(crate) fn power_product(f: &SymFunc, g: &SymFunc, cap: usize) -> SymFunc {
    debug_assert!(f.basis == Basis::Power && g.basis == Basis::Power);
    let mut out = SymFunc::zero(Basis::Power, cap);
    for (a, x) in &f.terms {
        for (b, y) in &g.terms {
            if a.size() + b.size() > cap {
                continue;
            }
            let mut parts = a.parts().to_vec();
            parts.extend_from_slice(b.parts());
            out.add_term(Partition::from_unsorted(parts), x * y);
        }
    }
    out
}

/// Hall inner product.
pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> Rational {
    if f.basis == Basis::Schur && g.basis == Basis::Schur {
        return f.terms.iter().filter_map(|(p, c)| g.terms.get(p).map(|d| c * d)).sum();
    }
    let (fp, gp) = (f.to_power(), g.to_power());
    fp.terms
        .iter()
        .filter_map(|(p, c)| {
            gp.terms.get(p).map(|d| c * d * Rational::from_integer(crate::characters::z_order(p)))
        })
        .sum()
}

/// Littlewood–Richardson coefficient `c^nu_{lambda,mu}`, read off the Schur
/// expansion of `s_lambda s_mu`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if lambda.size() + mu.size() != nu.size() {
        return BigInt::zero();
    }
    let cap = nu.size();
    let product = SymFunc::basis_element(Basis::Schur, lambda.clone(), cap)
        .multiply(&SymFunc::basis_element(Basis::Schur, mu.clone(), cap));
    let c = product.coeff(nu);
    assert!(c.is_integer(), "LR coefficient must be integral");
    c.to_integer()
}

/// Transition matrices between one basis and the power sums in a fixed
/// degree, rows and columns in canonical partition order.
struct Conversion {
    partitions: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    /// row `lambda`: coefficients of `b_lambda` in the power sums
    to_power: linalg::Matrix,
    /// row `rho`: coefficients of `p_rho` in the target basis
    from_power: linalg::Matrix,
}

static CONVERSIONS: RwLock<BTreeMap<(Basis, usize), Arc<Conversion>>> = RwLock::new(BTreeMap::new());

fn conversion(basis: Basis, n: usize) -> Arc<Conversion> {
    if let Some(c) = CONVERSIONS.read().get(&(basis, n)) {
        return c.clone();
    }
    let conv = Arc::new(build_conversion(basis, n));
    CONVERSIONS.write().entry((basis, n)).or_insert(conv).clone()
}

fn build_conversion(basis: Basis, n: usize) -> Conversion {
    let partitions = partitions_of(n);
    let index: BTreeMap<Partition, usize> =
        partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let size = partitions.len();
    let (to_power, from_power) = match basis {
        Basis::Schur => {
            let table = character_table(n);
            // s_lambda = sum_rho chi^lambda(rho)/z_rho p_rho ; p_rho = sum_lambda chi^lambda(rho) s_lambda
            let to: linalg::Matrix = (0..size)
                .map(|l| {
                    (0..size)
                        .map(|r| Rational::new(table.values()[l][r].into(), table.z(r).clone()))
                        .collect()
                })
                .collect();
            let from: linalg::Matrix = (0..size)
                .map(|r| (0..size).map(|l| Rational::from_integer(table.values()[l][r].into())).collect())
                .collect();
            (to, from)
        }
        Basis::Power => {
            let id: linalg::Matrix = (0..size)
                .map(|i| (0..size).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
                .collect();
            (id.clone(), id)
        }
        Basis::Homogeneous | Basis::Elementary => {
            let to: linalg::Matrix = partitions
                .iter()
                .map(|lambda| {
                    let f = multiplicative_power_expansion(basis, lambda);
                    partitions.iter().map(|rho| f.coeff(rho)).collect()
                })
                .collect();
            let from = linalg::invert(&to).expect("h and e are bases");
            (to, from)
        }
        Basis::Monomial => {
            let from: linalg::Matrix = partitions
                .iter()
                .map(|rho| {
                    partitions
                        .iter()
                        .map(|lambda| Rational::from_integer(power_in_monomial(rho, lambda)))
                        .collect()
                })
                .collect();
            let to = linalg::invert(&from).expect("monomials are a basis");
            (to, from)
        }
    };
    Conversion { partitions, index, to_power, from_power }
}

/// `h_lambda` or `e_lambda` in power sums, as products of
/// `h_n = sum_rho p_rho / z_rho` and `e_n = sum_rho eps_rho p_rho / z_rho`.
fn multiplicative_power_expansion(basis: Basis, lambda: &Partition) -> SymFunc {
    let n = lambda.size();
    let mut acc = SymFunc::one(Basis::Power, n);
    for &k in lambda.parts() {
        let factor = SymFunc::from_terms(
            Basis::Power,
            n,
            partitions_of(k).into_iter().map(|rho| {
                let eps = if basis == Basis::Elementary { sign(k - rho.len()) } else { 1 };
                let z = crate::characters::z_order(&rho);
                (rho, Rational::new(BigInt::from(eps), z))
            }),
        );
        acc = power_product(&acc, &factor, n);
    }
    acc
}

/// Coefficient of `m_lambda` in `p_rho`: the number of ways to distribute
/// the parts of `rho` into `len(lambda)` labelled boxes with box sums
/// `lambda`.
fn power_in_monomial(rho: &Partition, lambda: &Partition) -> BigInt {
    fn rec(parts: &[usize], remaining: &mut Vec<usize>) -> u64 {
        let Some((&p, rest)) = parts.split_first() else {
            return u64::from(remaining.iter().all(|&r| r == 0));
        };
        let mut total = 0;
        for j in 0..remaining.len() {
            if remaining[j] >= p {
                remaining[j] -= p;
                total += rec(rest, remaining);
                remaining[j] += p;
            }
        }
        total
    }
    BigInt::from(rec(rho.parts(), &mut lambda.parts().to_vec()))
}
