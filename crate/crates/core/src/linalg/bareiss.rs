//! Dense fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::Rational;

/// Clears denominators row by row; row scaling preserves rank and kernel.
fn integer_rows(m: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter()
                .map(|q| (q * Rational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect()
}

/// Runs one-step Bareiss elimination in place and returns the pivot columns.
/// Every intermediate entry is an exact integer minor of the input.
fn echelon(a: &mut [Vec<BigInt>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    echelon(&mut integer_rows(m)).len()
}

/// Determinant of a square matrix.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "determinant of non-square matrix");
    if n == 0 {
        return Rational::one();
    }
    // det(M) = det(D M) / prod(D); track the row scales separately.
    let scale = m.iter().fold(Rational::one(), |acc, row| {
        let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        acc * Rational::from_integer(l)
    });
    let mut a = integer_rows(m);
    // Bareiss with sign tracking for row swaps.
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Rational::from_integer(sign * &a[n - 1][n - 1]) / scale
}

/// Kernel dimension via the dense route.
pub fn nullity(m: &[Vec<Rational>]) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    cols - rank(m)
}
