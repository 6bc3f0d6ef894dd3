use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{bernoulli_poly, factorial, int, rat, Poly, Rational};

/// `f_l(r) = 2/(2l+1)! B_{2l+1}(r + n/2 + 1)` for `l = 0..=n`.
pub fn bernoulli_basis(n: usize) -> Vec<Poly> {
    let centre = rat(n as i64 + 2, 2);
    (0..=n)
        .map(|l| {
            let m = 2 * l + 1;
            let scale = int(2) / Rational::from_integer(factorial(m as u32));
            bernoulli_poly(m).shift(&centre).scale(&scale)
        })
        .collect()
}

/// `P(r) + P(-r-n-1)`, zero exactly when `P` has the twistor symmetry.
fn symmetry_residual(poly: &Poly, n: usize) -> Poly {
    poly + &poly.compose(&Poly::linear(int(-1), int(-(n as i64) - 1)))
}

/// Coefficients `c_0..c_n` of `P` in the basis [`bernoulli_basis`].
///
/// The basis spans the polynomials of degree at most `2n+1` that are odd
/// about `-(n+1)/2`, so anything else is rejected.
pub fn bernoulli_expand(poly: &Poly, n: usize) -> Result<Vec<Rational>> {
    let residual = symmetry_residual(poly, n);
    if !residual.is_zero() {
        return Err(Error::SymmetryViolated {
            residual: residual.display_in("r"),
        });
    }
    if poly.degree().is_some_and(|d| d > 2 * n + 1) {
        return Err(Error::DegreeMismatch {
            expected: 2 * n + 1,
            found: poly.degree(),
        });
    }
    let basis = bernoulli_basis(n);
    let mut rest = poly.clone();
    let mut coeffs = vec![Rational::zero(); n + 1];
    for l in (0..=n).rev() {
        let c = rest.coefficient(2 * l + 1) / basis[l].leading_coefficient();
        rest = &rest - &basis[l].scale(&c);
        coeffs[l] = c;
    }
    debug_assert!(rest.is_zero());
    Ok(coeffs)
}

/// `sum_l c_l f_l`.
pub fn reconstruct(coeffs: &[Rational]) -> Poly {
    let n = coeffs.len().saturating_sub(1);
    bernoulli_basis(n)
        .iter()
        .zip(coeffs)
        .fold(Poly::zero(), |acc, (f, c)| acc + f.scale(c))
}

/// Coefficient of `u^l` in the Chern character of `Sym^k H`:
/// `2^{2l+1}/(2l+1)! B_{2l+1}(k/2 + 1)`.
pub fn chern_character_coeff(k: usize, l: usize) -> Rational {
    let m = 2 * l + 1;
    let two_pow = Rational::from_integer(num_bigint::BigInt::from(2).pow(m as u32));
    two_pow / Rational::from_integer(factorial(m as u32)) * bernoulli_poly(m).eval(&rat(k as i64 + 2, 2))
}

/// `sum_{nu=0}^{k} (k - 2 nu)^{2l} / (2l)!`, the same coefficient summed over
/// the weights of `Sym^k H`.
pub fn power_sum(k: usize, l: usize) -> Rational {
    let total: Rational = (0..=k as i64)
        .map(|nu| Rational::from_integer(num_bigint::BigInt::from(k as i64 - 2 * nu).pow(2 * l as u32)))
        .sum();
    total / Rational::from_integer(factorial(2 * l as u32))
}

/// `n_i` with `P(r) = sum_i n_i C(r, i)`: the forward differences of `P` at zero.
pub fn binomial_basis_coeffs(poly: &Poly) -> Vec<Rational> {
    let Some(deg) = poly.degree() else {
        return Vec::new();
    };
    let mut row: Vec<Rational> = (0..=deg as i64).map(|r| poly.eval_int(r)).collect();
    let mut out = Vec::with_capacity(deg + 1);
    while let Some(first) = row.first().cloned() {
        out.push(first);
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    out
}
