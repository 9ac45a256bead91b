//! Dense exact linear algebra over the rationals. Matrices here are at most
//! a few dozen rows (one row per partition of a fixed size).

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Row-reduces `[a | b]` and returns the solution of `a x = b` if one exists.
/// `a` may be tall; its columns must be linearly independent.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_row = 0;
    for col in 0..cols {
        let pivot = (pivot_row..rows).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot_row, pivot);
        let inv = Rational::one() / m[pivot_row][col].clone();
        for v in m[pivot_row].iter_mut() {
            *v *= inv.clone();
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=cols {
                    let delta = factor.clone() * m[pivot_row][c].clone();
                    m[r][c] -= delta;
                }
            }
        }
        pivot_row += 1;
    }
    // inconsistent if any leftover row has a nonzero right-hand side
    if m[pivot_row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|c| m[c][cols].clone()).collect())
}

/// Inverse of a square matrix, `None` if singular.
pub fn invert(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut columns = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Rational> = (0..n)
            .map(|i| if i == j { Rational::one() } else { Rational::zero() })
            .collect();
        columns.push(solve(a, &e)?);
    }
    Some((0..n).map(|i| (0..n).map(|j| columns[j][i].clone()).collect()).collect())
}
