//! Brute-force multivariate polynomials over the integers, used as an
//! oracle independent of the power-sum machinery in the library.

#![allow(dead_code)]

use std::collections::BTreeMap;

use spst_core::{partitions_of, Partition};

/// Exponent vector -> coefficient, in a fixed number of variables.
pub type Poly = BTreeMap<Vec<u32>, i64>;

pub fn one(n: usize) -> Poly {
    Poly::from([(vec![0; n], 1)])
}

pub fn add(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(e.clone()).or_default() += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn scale(a: &Poly, k: i64) -> Poly {
    a.iter().map(|(e, c)| (e.clone(), c * k)).filter(|(_, c)| *c != 0).collect()
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Schur polynomial `s_lambda(x_1..x_n)` as a sum over semistandard tableaux.
pub fn schur_poly(lambda: &Partition, n: usize) -> Poly {
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut filling: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut out = Poly::new();
    fn rec(
        cells: &[(usize, usize)],
        i: usize,
        n: usize,
        filling: &mut BTreeMap<(usize, usize), usize>,
        out: &mut Poly,
    ) {
        if i == cells.len() {
            let mut e = vec![0u32; n];
            for v in filling.values() {
                e[*v] += 1;
            }
            *out.entry(e).or_default() += 1;
            return;
        }
        let (r, c) = cells[i];
        let lo_row = if c > 0 { filling[&(r, c - 1)] } else { 0 };
        let lo_col = if r > 0 { filling[&(r - 1, c)] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..n {
            filling.insert((r, c), v);
            rec(cells, i + 1, n, filling, out);
            filling.remove(&(r, c));
        }
    }
    rec(&cells, 0, n, &mut filling, &mut out);
    out
}

/// All monomials of degree `k` in `n` variables.
pub fn monomials(k: u32, n: usize) -> Vec<Vec<u32>> {
    fn rec(k: u32, n: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n - 1 {
            prefix.push(k);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=k).rev() {
            prefix.push(a);
            rec(k - a, n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, n, &mut Vec::new(), &mut out);
    out
}

/// Vandermonde `prod_{i<j} (x_i - x_j)`.
pub fn vandermonde(n: usize) -> Poly {
    let mut acc = one(n);
    for i in 0..n {
        for j in i + 1..n {
            let mut xi = vec![0; n];
            xi[i] = 1;
            let mut xj = vec![0; n];
            xj[j] = 1;
            acc = mul(&acc, &Poly::from([(xi, 1), (xj, -1)]));
        }
    }
    acc
}

/// Schur coefficients of a homogeneous symmetric polynomial of degree `d`
/// in `n` variables: `[s_lambda] f` is the coefficient of `x^{lambda+delta}`
/// in `f * a_delta`.
pub fn schur_coefficients(f: &Poly, n: usize, d: usize) -> BTreeMap<Partition, i64> {
    let alt = mul(f, &vandermonde(n));
    let mut out = BTreeMap::new();
    for lambda in partitions_of(d) {
        if lambda.len() > n {
            continue;
        }
        let e: Vec<u32> = (0..n).map(|i| (lambda.part(i) + n - 1 - i) as u32).collect();
        if let Some(&c) = alt.get(&e) {
            if c != 0 {
                out.insert(lambda, c);
            }
        }
    }
    out
}

/// Substitutes the polynomials `ys` for the variables of `f`.
pub fn substitute(f: &Poly, ys: &[Poly], n: usize) -> Poly {
    let mut out = Poly::new();
    for (e, c) in f {
        let mut term = one(n);
        for (i, &k) in e.iter().enumerate() {
            for _ in 0..k {
                term = mul(&term, &ys[i]);
            }
        }
        out = add(&out, &scale(&term, *c));
    }
    out
}
