//! Exact scalars, univariate polynomials, binomials and Bernoulli polynomials.

mod bernoulli;
mod poly;
mod rational;

pub use bernoulli::{bernoulli_number, bernoulli_numbers, bernoulli_poly};
pub use poly::Poly;
pub use rational::{
    binomial, binomial_int, factorial, format_rational, int, parse_rational, rat, serde_rational, Rational,
};
