//! Plethysm, Lyndon symmetric functions and the series that appear as inner
//! arguments of the transition formulas.
//!
//! `p_n[g]` replaces every `p_k` in the power-sum expansion of `g` by
//! `p_{nk}` and leaves the constant term alone; `f[g]` then follows by
//! linearity in `f` and multiplicativity over power-sum monomials. Inner
//! arguments may carry constant terms and negative coefficients.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;
use spin::RwLock;

use crate::arith::{divisors, mobius};
use crate::partition::Partition;
use crate::symfunc::{power_product, Basis, SymFunc};
use crate::Rational;

/// `f[g]` in the basis of `f`, truncated at the smaller of the two caps.
pub fn plethysm(f: &SymFunc, g: &SymFunc) -> SymFunc {
    Plethysm::new(g, f.cap().min(g.cap())).apply(f)
}

/// A fixed inner argument `g` with memoized `p_rho[g]`, for applying many
/// outer functions to the same series.
#[derive(Debug, Clone)]
pub struct Plethysm {
    inner: SymFunc,
    cap: usize,
    has_constant: bool,
    min_inner_degree: Option<usize>,
    adams: BTreeMap<usize, SymFunc>,
    monomials: BTreeMap<Partition, SymFunc>,
}

impl Plethysm {
    pub fn new(g: &SymFunc, cap: usize) -> Self {
        let inner = g.to_power().with_cap(cap.min(g.cap()));
        let cap = inner.cap();
        Plethysm {
            has_constant: !inner.coeff(&Partition::empty()).is_zero(),
            min_inner_degree: inner.terms().keys().map(Partition::size).filter(|&d| d > 0).min(),
            inner,
            cap,
            adams: BTreeMap::new(),
            monomials: BTreeMap::new(),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `f[g]` in the basis of `f`, truncated at `min(cap, f.cap())`.
    pub fn apply(&mut self, f: &SymFunc) -> SymFunc {
        let cap = self.cap.min(f.cap());
        let mut out = SymFunc::zero(Basis::Power, cap);
        for (rho, c) in f.to_power().terms() {
            // without a constant term every factor p_k[g] has degree >= k * min_inner_degree
            if !self.has_constant {
                match self.min_inner_degree {
                    Some(d) if rho.size() * d > cap => continue,
                    None if !rho.is_empty() => continue,
                    _ => {}
                }
            }
            out.accumulate(&self.monomial(rho).truncate(cap).scale(c));
        }
        out.from_power(f.basis())
    }

    /// `p_rho[g]`, built from the memoized `p_{rho minus last part}[g]`.
    fn monomial(&mut self, rho: &Partition) -> SymFunc {
        if let Some(m) = self.monomials.get(rho) {
            return m.clone();
        }
        let value = match rho.parts().split_last() {
            None => SymFunc::one(Basis::Power, self.cap),
            Some((&last, init)) => {
                let prefix = self.monomial(&Partition::new(init.to_vec()).expect("prefix of a partition"));
                let cap = self.cap;
                let inner = &self.inner;
                let factor = self.adams.entry(last).or_insert_with(|| adams_operation(inner, last, cap));
                power_product(&prefix, factor, cap)
            }
        };
        self.monomials.insert(rho.clone(), value.clone());
        value
    }
}

/// `p_k[g]` for `g` in power sums: `p_rho -> p_{k rho}`, constants fixed.
fn adams_operation(g: &SymFunc, k: usize, cap: usize) -> SymFunc {
    SymFunc::from_terms(
        Basis::Power,
        cap,
        g.terms().iter().map(|(rho, c)| {
            let scaled = Partition::from_unsorted(rho.parts().iter().map(|&p| p * k).collect());
            (scaled, c.clone())
        }),
    )
}

static LYNDON: RwLock<BTreeMap<usize, Arc<SymFunc>>> = RwLock::new(BTreeMap::new());

/// The Lyndon symmetric function `L_m = (1/m) sum_{d | m} mu(d) p_d^{m/d}`
/// in the power-sum basis.
pub fn lyndon(m: usize) -> SymFunc {
    assert!(m >= 1, "L_m is defined for m >= 1");
    if let Some(l) = LYNDON.read().get(&m) {
        return (**l).clone();
    }
    let terms = divisors(m).into_iter().filter_map(|d| {
        let mu = mobius(d);
        (mu != 0).then(|| {
            let rho = Partition::new(alloc::vec![d; m / d]).expect("rectangle");
            (rho, Rational::new(BigInt::from(mu), BigInt::from(m)))
        })
    });
    let l = Arc::new(SymFunc::from_terms(Basis::Power, m, terms));
    (*LYNDON.write().entry(m).or_insert(l)).as_ref().clone()
}

/// The named series used as inner plethysm arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Series {
    /// `1 + h_1 + h_2 + ...`
    HWithOne,
    /// `h_1 + h_2 + ...`
    HPositive,
    /// `1 + h_1`
    OnePlusH1,
    /// `-1 + h_1`
    MinusOnePlusH1,
    /// `L_1 + L_2 + L_3 + ...`
    Lyndon,
}

/// The series truncated at `cap`, in power sums.
pub fn series(kind: Series, cap: usize) -> SymFunc {
    let h = |n: usize| SymFunc::basis_element(Basis::Homogeneous, crate::partition::part(&[n]), cap).to_power();
    let one = SymFunc::one(Basis::Power, cap);
    let mut acc = SymFunc::zero(Basis::Power, cap);
    match kind {
        Series::HWithOne | Series::HPositive => {
            if kind == Series::HWithOne {
                acc = acc.add(&one);
            }
            for n in 1..=cap {
                acc = acc.add(&h(n));
            }
        }
        Series::OnePlusH1 => acc = one.add(&h(1)),
        Series::MinusOnePlusH1 => acc = one.neg().add(&h(1)),
        Series::Lyndon => {
            let terms: Vec<SymFunc> = (1..=cap).map(|m| lyndon(m).with_cap(cap)).collect();
            for l in terms {
                acc = acc.add(&l);
            }
        }
    }
    acc
}
