use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::{binomial_int, Rational};

/// Bernoulli numbers `B_0..=B_m` with the convention `B_1 = -1/2`.
pub fn bernoulli_numbers(m: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(m + 1);
    b.push(Rational::one());
    for j in 1..=m {
        // sum_{k=0}^{j} C(j+1, k) B_k = 0
        let s = b.iter().enumerate().fold(Rational::zero(), |acc, (k, bk)| {
            acc + bk * Rational::from_integer(binomial_int(j as i64 + 1, k as u32))
        });
        b.push(-s / Rational::from_integer(BigInt::from(j + 1)));
    }
    b
}

pub fn bernoulli_number(m: usize) -> Rational {
    bernoulli_numbers(m).pop().expect("non-empty")
}

/// The Bernoulli polynomial `B_m(x) = sum_k C(m,k) B_k x^(m-k)`, normalized so
/// that `B_m(x+1) - B_m(x) = m x^(m-1)`.
pub fn bernoulli_poly(m: usize) -> Poly {
    let b = bernoulli_numbers(m);
    let mut coeffs = vec![Rational::zero(); m + 1];
    for (k, bk) in b.iter().enumerate() {
        coeffs[m - k] = bk * Rational::from_integer(binomial_int(m as i64, k as u32));
    }
    Poly::from_coeffs(coeffs)
}
