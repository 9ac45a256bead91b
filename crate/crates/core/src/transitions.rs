//! Stable transition matrices between Schur modules `S_lambda(C^t)`, the
//! modules `M_mu^t` and the Specht modules `Sp_{nu^(t)}` in the
//! representation ring of `S_t` for `t` large, and the stable Specht basis.
//!
//! Matrix conventions (`row`, `col`):
//!
//! | kind      | entry                                        |
//! |-----------|----------------------------------------------|
//! | `A`       | `a_lambda^nu`, `s_lambda = sum a s†_nu`       |
//! | `B`       | `b_lambda^nu`, `s†_nu = sum_lambda b s_lambda` |
//! | `SToM`    | `[S_lambda] = sum_mu e(lambda, mu) [M_mu]`    |
//! | `MToS`    | `[M_mu] = sum_lambda e(mu, lambda) [S_lambda]` |
//! | `MToSp`   | `[M_mu] = sum_nu e(mu, nu) [Sp_nu]`            |
//! | `SpToM`   | `[Sp_nu] = sum_mu e(nu, mu) [M_mu]`            |
//!
//! Every kind except `B` reads "row expressed in the column basis"; `B` keeps
//! the `b_lambda^nu` index order, so it is the transpose of the change of
//! basis `s† -> s`.

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
use crate::error::{Error, Result};
use crate::partition::{partitions_up_to, Partition};
use crate::plethysm::{series, Plethysm, Series};
use crate::symfunc::{render_terms, Basis, SymFunc};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MatrixKind {
    A,
    B,
    MToSp,
    SpToM,
    SToM,
    MToS,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 6] =
        [MatrixKind::A, MatrixKind::B, MatrixKind::MToSp, MatrixKind::SpToM, MatrixKind::SToM, MatrixKind::MToS];

    /// Short name used on the command line and in file names.
    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::A => "a",
            MatrixKind::B => "b",
            MatrixKind::MToSp => "m2sp",
            MatrixKind::SpToM => "sp2m",
            MatrixKind::SToM => "s2m",
            MatrixKind::MToS => "m2s",
        }
    }

    /// Name used in the JSON `kind` field.
    pub fn json_name(self) -> &'static str {
        match self {
            MatrixKind::A => "A",
            MatrixKind::B => "B",
            MatrixKind::MToSp => "M_TO_SP",
            MatrixKind::SpToM => "SP_TO_M",
            MatrixKind::SToM => "S_TO_M",
            MatrixKind::MToS => "M_TO_S",
        }
    }

    pub fn from_name(name: &str) -> Option<MatrixKind> {
        MatrixKind::ALL.into_iter().find(|k| k.name() == name || k.json_name() == name)
    }
}

/// A sparse integer matrix indexed by pairs of partitions of size `<= cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffMatrix {
    kind: MatrixKind,
    cap: usize,
    entries: BTreeMap<(Partition, Partition), BigInt>,
}

impl CoeffMatrix {
    /// Assembles a matrix from entries, dropping zeros. Fails if an index
    /// exceeds the cap.
    pub fn from_entries<I>(kind: MatrixKind, cap: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((Partition, Partition), BigInt)>,
    {
        let mut map = BTreeMap::new();
        for ((r, c), v) in entries {
            if r.size() > cap || c.size() > cap {
                return Err(Error::InvalidArgument(format!("entry ({}, {}) exceeds cap {}", r, c, cap)));
            }
            if !v.is_zero() {
                map.insert((r, c), v);
            }
        }
        Ok(CoeffMatrix { kind, cap, entries: map })
    }

    /// Computes the full matrix sequentially.
    pub fn build(kind: MatrixKind, cap: usize) -> Result<Self> {
        let mut builder = LineBuilder::new(kind, cap);
        let mut entries = Vec::new();
        for index in line_indices(cap) {
            entries.extend(builder.line(&index)?);
        }
        CoeffMatrix::from_entries(kind, cap, entries)
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Nonzero entries in (row, col) canonical order.
    pub fn entries(&self) -> &BTreeMap<(Partition, Partition), BigInt> {
        &self.entries
    }

    pub fn get(&self, row: &Partition, col: &Partition) -> BigInt {
        self.entries.get(&(row.clone(), col.clone())).cloned().unwrap_or_default()
    }

    /// Nonzero entries of one row.
    pub fn row(&self, row: &Partition) -> BTreeMap<Partition, BigInt> {
        self.entries.iter().filter(|((r, _), _)| r == row).map(|((_, c), v)| (c.clone(), v.clone())).collect()
    }

    /// Nonzero entries of one column.
    pub fn column(&self, col: &Partition) -> BTreeMap<Partition, BigInt> {
        self.entries.iter().filter(|((_, c), _)| c == col).map(|((r, _), v)| (r.clone(), v.clone())).collect()
    }

    /// The matrix restricted to indices of size `<= cap`.
    pub fn truncate(&self, cap: usize) -> CoeffMatrix {
        CoeffMatrix {
            kind: self.kind,
            cap: cap.min(self.cap),
            entries: self
                .entries
                .iter()
                .filter(|((r, c), _)| r.size() <= cap && c.size() <= cap)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

/// Sparse product `left * right` of two partition-indexed matrices.
pub fn matrix_product(
    left: &BTreeMap<(Partition, Partition), BigInt>,
    right: &BTreeMap<(Partition, Partition), BigInt>,
) -> BTreeMap<(Partition, Partition), BigInt> {
    let mut by_row: BTreeMap<&Partition, Vec<(&Partition, &BigInt)>> = BTreeMap::new();
    for ((r, c), v) in right {
        by_row.entry(r).or_default().push((c, v));
    }
    let mut out: BTreeMap<(Partition, Partition), BigInt> = BTreeMap::new();
    for ((i, k), x) in left {
        if let Some(row) = by_row.get(k) {
            for (j, y) in row {
                *out.entry((i.clone(), (*j).clone())).or_default() += x * *y;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

pub fn transpose(m: &BTreeMap<(Partition, Partition), BigInt>) -> BTreeMap<(Partition, Partition), BigInt> {
    m.iter().map(|((r, c), v)| ((c.clone(), r.clone()), v.clone())).collect()
}

/// Indices over which matrix lines (rows or columns) are computed.
pub fn line_indices(cap: usize) -> Vec<Partition> {
    partitions_up_to(cap)
}

/// Computes one line of a matrix at a time: a column for `A`, `SToM`,
/// `MToS` and a row for `B`, `MToSp`, `SpToM`. Lines are independent, so
/// callers may compute them in parallel with one builder per worker.
pub struct LineBuilder {
    kind: MatrixKind,
    cap: usize,
    pleth: Option<Plethysm>,
}

impl LineBuilder {
    pub fn new(kind: MatrixKind, cap: usize) -> Self {
        let pleth = match kind {
            MatrixKind::A | MatrixKind::SToM => Some(Plethysm::new(&series(Series::HPositive, cap), cap)),
            MatrixKind::B | MatrixKind::MToS => Some(Plethysm::new(&series(Series::Lyndon, cap), cap)),
            MatrixKind::MToSp | MatrixKind::SpToM => None,
        };
        LineBuilder { kind, cap, pleth }
    }

    fn pleth(&mut self) -> &mut Plethysm {
        self.pleth.as_mut().expect("plethysm context for this kind")
    }

    /// `s_mu[h_1 + h_2 + ...]` in Schur functions.
    fn h_plethysm(&mut self, mu: &Partition) -> Result<SymFunc> {
        let cap = self.cap;
        let s = SymFunc::basis_element(Basis::Schur, mu.clone(), cap);
        self.pleth().apply(&s).to_schur_integral("s_mu[h_1 + h_2 + ...]")
    }

    /// `s_{lambda^T}[L_1 + L_2 + ...]` in Schur functions.
    fn lyndon_plethysm(&mut self, lambda: &Partition) -> Result<SymFunc> {
        let cap = self.cap;
        let s = SymFunc::basis_element(Basis::Schur, lambda.transpose(), cap);
        self.pleth().apply(&s).to_schur_integral("s_lambda[L_1 + L_2 + ...]")
    }

    /// The entries of the line indexed by `index`.
    pub fn line(&mut self, index: &Partition) -> Result<Vec<((Partition, Partition), BigInt)>> {
        let cap = self.cap;
        let mut out = Vec::new();
        if index.size() > cap {
            return Ok(out);
        }
        match self.kind {
            MatrixKind::SToM => {
                // column mu: <s_lambda, s_mu[h_1 + h_2 + ...]>
                for (lambda, c) in self.h_plethysm(index)?.terms() {
                    out.push(((lambda.clone(), index.clone()), c.to_integer()));
                }
            }
            MatrixKind::A => {
                // column nu: sum over mu with mu/nu a horizontal strip of column mu of SToM
                let mut acc = SymFunc::zero(Basis::Schur, cap);
                for mu in partitions_up_to(cap) {
                    if Partition::is_horizontal_strip(&mu, index) {
                        acc = acc.add(&self.h_plethysm(&mu)?);
                    }
                }
                for (lambda, c) in acc.terms() {
                    out.push(((lambda.clone(), index.clone()), c.to_integer()));
                }
            }
            MatrixKind::MToS => {
                // column lambda: (-1)^{|mu|-|lambda|} <s_{mu^T}, s_{lambda^T}[L]>
                for (kappa, c) in self.lyndon_plethysm(index)?.terms() {
                    let mu = kappa.transpose();
                    let v = c.to_integer() * sign(mu.size() - index.size());
                    out.push(((mu, index.clone()), v));
                }
            }
            MatrixKind::B => {
                // row lambda: b_lambda^nu = sum_{nu/mu vert. strip} (-1)^{|nu|-|lambda|} <s_{mu^T}, s_{lambda^T}[L]>
                let pleth = self.lyndon_plethysm(index)?;
                for nu in partitions_up_to(cap) {
                    if nu.size() < index.size() {
                        continue;
                    }
                    let total: Rational =
                        nu.vertical_strip_inner().iter().map(|mu| pleth.coeff(&mu.transpose())).sum();
                    let v = total.to_integer() * sign(nu.size() - index.size());
                    out.push(((index.clone(), nu), v));
                }
            }
            MatrixKind::MToSp => {
                for nu in index.horizontal_strip_inner() {
                    out.push(((index.clone(), nu), BigInt::one()));
                }
            }
            MatrixKind::SpToM => {
                for mu in index.vertical_strip_inner() {
                    let v = BigInt::from(sign(index.size() - mu.size()));
                    out.push(((index.clone(), mu), v));
                }
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        Ok(out)
    }
}

static MATRICES: RwLock<BTreeMap<MatrixKind, Arc<CoeffMatrix>>> = RwLock::new(BTreeMap::new());

/// Memoized matrix of the given kind covering at least `cap`. A cached
/// matrix with a larger cap is truncated rather than recomputed.
pub fn matrix(kind: MatrixKind, cap: usize) -> Result<Arc<CoeffMatrix>> {
    if let Some(m) = MATRICES.read().get(&kind) {
        if m.cap == cap {
            return Ok(m.clone());
        }
        if m.cap > cap {
            return Ok(Arc::new(m.truncate(cap)));
        }
    }
    let built = CoeffMatrix::build(kind, cap)?;
    install_matrix(built.clone());
    Ok(Arc::new(built))
}

/// Publishes a matrix to the memo; a matrix with a larger cap is never
/// replaced by a smaller one.
pub fn install_matrix(m: CoeffMatrix) {
    let mut guard = MATRICES.write();
    match guard.get(&m.kind) {
        Some(existing) if existing.cap >= m.cap => {}
        _ => {
            guard.insert(m.kind, Arc::new(m));
        }
    }
}

/// Stable restriction multiplicity `a_lambda^nu`.
pub fn a_stable(lambda: &Partition, nu: &Partition) -> Result<BigInt> {
    if lambda.size() <= nu.size() {
        return Ok(BigInt::from(u8::from(lambda == nu)));
    }
    let line = LineBuilder::new(MatrixKind::A, lambda.size()).line(nu)?;
    Ok(line.into_iter().find(|((r, _), _)| r == lambda).map(|(_, v)| v).unwrap_or_default())
}

/// `b_lambda^nu`, the coefficient of `s_lambda` in `s†_nu`.
pub fn b_stable(lambda: &Partition, nu: &Partition) -> Result<BigInt> {
    if lambda.size() > nu.size() {
        return Ok(BigInt::zero());
    }
    let line = LineBuilder::new(MatrixKind::B, nu.size()).line(lambda)?;
    Ok(line.into_iter().find(|((_, c), _)| c == nu).map(|(_, v)| v).unwrap_or_default())
}

/// `a_lambda^nu(t) = <s_lambda, s_{nu^(t)}[1 + h_1 + h_2 + ...]>`, the
/// multiplicity of `Sp_{nu^(t)}` in `S_lambda(C^t)`.
pub fn a_finite(lambda: &Partition, nu: &Partition, t: usize) -> Result<BigInt> {
    let padded = nu.pad(t)?;
    let cap = lambda.size();
    let outer = SymFunc::basis_element(Basis::Schur, padded, t.max(cap));
    let result = Plethysm::new(&series(Series::HWithOne, cap), cap).apply(&outer);
    let c = result.coeff(lambda);
    if !c.is_integer() {
        return Err(Error::NonIntegralResult(format!("a_finite({}, {}, {})", lambda, nu, t)));
    }
    Ok(c.to_integer())
}

fn strip_row(pairs: Vec<((Partition, Partition), BigInt)>, by_col: bool) -> Vec<(Partition, BigInt)> {
    pairs.into_iter().map(|((r, c), v)| (if by_col { c } else { r }, v)).collect()
}

/// `[M_mu^t]` in Specht modules: `nu` with `mu/nu` a horizontal strip.
pub fn m_to_specht_row(mu: &Partition) -> Vec<(Partition, BigInt)> {
    let lines = LineBuilder::new(MatrixKind::MToSp, mu.size()).line(mu).expect("combinatorial line");
    strip_row(lines, true)
}

/// `[Sp_{nu^(t)}]` in the `M_mu^t`: signed vertical strips below `nu`.
pub fn specht_to_m_row(nu: &Partition) -> Vec<(Partition, BigInt)> {
    let lines = LineBuilder::new(MatrixKind::SpToM, nu.size()).line(nu).expect("combinatorial line");
    strip_row(lines, true)
}

/// `[S_lambda(C^t)]` in the `M_mu^t`.
pub fn schur_to_m_row(lambda: &Partition) -> Result<Vec<(Partition, BigInt)>> {
    let cap = lambda.size();
    let mut builder = LineBuilder::new(MatrixKind::SToM, cap);
    let mut out = Vec::new();
    for mu in partitions_up_to(cap) {
        for ((r, c), v) in builder.line(&mu)? {
            if &r == lambda {
                out.push((c, v));
            }
        }
    }
    Ok(out)
}

/// `[M_mu^t]` in the Schur modules.
pub fn m_to_schur_row(mu: &Partition) -> Result<Vec<(Partition, BigInt)>> {
    let cap = mu.size();
    let mut builder = LineBuilder::new(MatrixKind::MToS, cap);
    let mut out = Vec::new();
    for lambda in partitions_up_to(cap) {
        for ((r, c), v) in builder.line(&lambda)? {
            if &r == mu {
                out.push((c, v));
            }
        }
    }
    Ok(out)
}

/// An integer combination of stable Specht functions `s†_nu`.
#[derive(Clone, PartialEq, Eq)]
pub struct StableSpechtExpansion {
    terms: BTreeMap<Partition, BigInt>,
    cap: usize,
}

impl StableSpechtExpansion {
    pub fn from_terms<I>(cap: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut map: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (p, c) in terms {
            if p.size() <= cap {
                *map.entry(p).or_default() += c;
            }
        }
        map.retain(|_, v| !v.is_zero());
        StableSpechtExpansion { terms: map, cap }
    }

    /// The single basis element `s†_nu`.
    pub fn basis_element(nu: Partition, cap: usize) -> Self {
        StableSpechtExpansion::from_terms(cap, [(nu, BigInt::one())])
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, nu: &Partition) -> BigInt {
        self.terms.get(nu).cloned().unwrap_or_default()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn render(&self) -> String {
        render_terms(self.terms.iter(), "sdag")
    }
}

impl fmt::Display for StableSpechtExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for StableSpechtExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (cap {})", self, self.cap)
    }
}

/// `s_lambda = sum_nu a_lambda^nu s†_nu`, applied to an integral Schur
/// combination.
pub fn schur_to_stable_specht(f: &SymFunc) -> Result<StableSpechtExpansion> {
    let schur = f.to_basis(Basis::Schur);
    if !schur.is_integral() {
        return Err(Error::NonIntegralResult(String::from("schur_to_stable_specht input")));
    }
    let degree = schur.degree().unwrap_or(0);
    let a = matrix(MatrixKind::A, degree)?;
    let mut terms = Vec::new();
    for (lambda, c) in schur.terms() {
        let c = c.to_integer();
        for (nu, v) in a.row(lambda) {
            terms.push((nu, &c * v));
        }
    }
    Ok(StableSpechtExpansion::from_terms(f.cap(), terms))
}

/// `s†_nu = sum_lambda b_lambda^nu s_lambda`.
pub fn stable_specht_to_schur(f: &StableSpechtExpansion) -> Result<SymFunc> {
    let degree = f.degree().unwrap_or(0);
    let b = matrix(MatrixKind::B, degree)?;
    let mut out = SymFunc::zero(Basis::Schur, f.cap);
    for (nu, c) in &f.terms {
        let column = b.column(nu);
        out = out.add(&SymFunc::from_terms(
            Basis::Schur,
            f.cap,
            column.into_iter().map(|(lambda, v)| (lambda, Rational::from_integer(c * v))),
        ));
    }
    Ok(out)
}

/// Checks the sign pattern `(-1)^{|lambda|-|nu|} b_lambda^nu >= 0` on a
/// matrix of kind `B`; returns the offending entries.
pub fn sign_violations(b: &CoeffMatrix) -> Vec<(Partition, Partition, BigInt)> {
    b.entries
        .iter()
        .filter(|((l, n), v)| {
            let signed = *v * sign(l.size().abs_diff(n.size()));
            signed.is_negative()
        })
        .map(|((l, n), v)| (l.clone(), n.clone(), v.clone()))
        .collect()
}
