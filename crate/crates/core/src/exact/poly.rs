use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{factorial, Rational};

/// Dense univariate polynomial with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`; trailing zeros are always trimmed,
/// so the zero polynomial has an empty coefficient vector and `degree() == None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `a*x + b`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Product of linear factors `(x - root)`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>) -> Self {
        roots.into_iter().fold(Self::one(), |acc, root| {
            &acc * &Self::linear(Rational::one(), -root.clone())
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficient(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Zero for the zero polynomial.
    pub fn leading_coefficient(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&Rational::from_integer(BigInt::from(x)))
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * inner) + &Poly::constant(c.clone()))
    }

    /// `self(x + c)`.
    pub fn shift(&self, c: &Rational) -> Poly {
        self.compose(&Poly::linear(Rational::one(), c.clone()))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// `self (self - 1) ... (self - b + 1) / b!`, a polynomial of degree
    /// `b * deg(self)`.
    pub fn binomial(&self, b: u32) -> Poly {
        let mut acc = Poly::one();
        for i in 0..b {
            acc = &acc * &(self - &Poly::constant(Rational::from_integer(BigInt::from(i))));
        }
        acc.scale(&Rational::new(BigInt::one(), factorial(b)))
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&super::format_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{mono}", super::format_rational(&mag)));
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coefficient(i) - rhs.coefficient(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{bernoulli_poly, int, rat};

    fn p(cs: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn zero_polynomial_has_sentinel_degree() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p(&[(0, 1), (0, 1)]).degree(), None);
        assert_eq!(Poly::one().degree(), Some(0));
        assert_eq!(Poly::zero().leading_coefficient(), int(0));
    }

    #[test]
    fn evaluate_and_compose() {
        let q = p(&[(-1, 1), (0, 1), (1, 1)]);
        assert_eq!(q.eval(&int(3)), int(8));
        // B_3(3/2) = 3/4
        let shifted = bernoulli_poly(3).shift(&rat(3, 2));
        assert_eq!(shifted.coefficient(0), rat(3, 4));
    }

    #[test]
    fn polynomial_binomial_of_linear_argument() {
        // C(2r+3, 3) = (4/3) r^3 + 4 r^2 + (11/3) r + 1
        let b = Poly::linear(int(2), int(3)).binomial(3);
        assert_eq!(b, p(&[(1, 1), (11, 3), (4, 1), (4, 3)]));
        assert_eq!(Poly::x().binomial(0), Poly::one());
        assert_eq!(b.degree(), Some(3));
    }

    #[test]
    fn from_roots_vanishes_at_roots() {
        let roots = [rat(-1, 2), int(2), int(0)];
        let q = Poly::from_roots(&roots);
        for r in &roots {
            assert_eq!(q.eval(r), int(0));
        }
        assert_eq!(q.leading_coefficient(), int(1));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[(1, 1), (0, 1), (-3, 2)]).display_in("r"), "-3/2*r^2 + 1");
        assert_eq!(Poly::x().display_in("r"), "r");
    }
}
