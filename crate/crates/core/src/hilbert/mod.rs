//! Hilbert polynomials of the twistor spaces of Wolf spaces.
//!
//! [`hilbert_poly`] expands the product over the roots of level one half and
//! cross-checks it against the Weyl dimension formula. The remaining items
//! read off the invariants carried by the polynomial: quaternionic volume,
//! twistor degree, the coefficients in the Bernoulli basis and the binomial
//! basis, and the spectral constants of the twistor operator.

mod checks;
mod expansion;
mod families;
mod spectral;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{factorial, format_rational, int, Poly, Rational};
use crate::rootsys::{dot, weyl_dim, wolf_grading, CartanLabel, Level, RootSystem, RootType};

pub use checks::{verify_report, Check, DEFAULT_R_MAX};
pub use expansion::{
    bernoulli_basis, bernoulli_expand, binomial_basis_coeffs, chern_character_coeff, power_sum, reconstruct,
};
pub use families::{closed_form, Family};
pub use spectral::{lambda_min, phi, SpectralParams};

/// Hilbert polynomial of one Wolf space with its derived invariants.
#[derive(Clone, Debug, PartialEq)]
pub struct HilbertReport {
    pub label: CartanLabel,
    /// Quaternionic dimension.
    pub n: usize,
    /// `dim g`, from the root table.
    pub algebra_dim: usize,
    pub poly: Poly,
    pub volume: Rational,
    pub twistor_degree: Rational,
    /// Coefficients in the Bernoulli basis, `c_0..c_n`.
    pub char_coeffs: Vec<Rational>,
    /// `n = 0`: the grading has no roots of level one half (`A1`).
    pub degenerate: bool,
    pub checks: Vec<Check>,
}

impl HilbertReport {
    pub fn value(&self, r: i64) -> Rational {
        self.poly.eval_int(r)
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Rerun the check suite with another scan range.
    pub fn with_checks(mut self, r_max: i64) -> Self {
        self.checks = verify_report(&self, r_max);
        self
    }
}

/// Algebras whose Wolf space is a quaternionic projective space.
pub fn is_symplectic(label: CartanLabel) -> bool {
    matches!(
        (label.kind(), label.rank()),
        (RootType::C, _) | (RootType::B, 2) | (RootType::A, 1)
    )
}

/// `C(2n + 1 + 2r, 2n + 1)`, the Hilbert polynomial of `HP^n`.
pub fn projective_bound(n: usize) -> Poly {
    Poly::linear(int(2), int(2 * n as i64 + 1)).binomial(2 * n as u32 + 1)
}

/// `(n + 1 + 2r)/(n + 1) * prod_{mu in level 1/2} (1 + 2r / (4 <rho, mu>))`
/// with the highest root of length one.
pub fn product_formula(rs: &RootSystem) -> Result<(usize, Poly)> {
    let grading = wolf_grading(rs)?;
    let n = grading.quaternionic_dim();
    let w = grading.wolf_root();
    let unit = dot(w, w);
    let m = int(n as i64 + 1);
    let mut poly = Poly::linear(int(2) / &m, int(1));
    for mu in grading.level(Level::Half) {
        let pairing = dot(grading.rho(), mu) / &unit;
        poly = poly * Poly::linear((int(2) * pairing).recip(), int(1));
    }
    Ok((n, poly))
}

/// The Hilbert polynomial of the Wolf space of `rs`, with every invariant
/// and the default check suite filled in.
///
/// Errors with [`Error::OracleMismatch`] if the product formula and the
/// Weyl dimension of `r * highest root` disagree for some `r` in `0..=2n+3`.
pub fn hilbert_poly(rs: &RootSystem) -> Result<HilbertReport> {
    let (n, poly) = product_formula(rs)?;
    let w = rs.highest_root();
    for r in 0..=(2 * n as i64 + 3) {
        let weight: Vec<Rational> = w.iter().map(|x| x * int(r)).collect();
        let weyl = Rational::from_integer(weyl_dim(&weight, rs)?);
        let product = poly.eval_int(r);
        if product != weyl {
            return Err(Error::OracleMismatch {
                r,
                product: product.to_string(),
                weyl: weyl.to_string(),
            });
        }
    }
    let volume = quaternionic_volume(&poly, n)?;
    let char_coeffs = bernoulli_expand(&poly, n)?;
    let report = HilbertReport {
        label: rs.label(),
        n,
        algebra_dim: rs.dimension(),
        poly,
        twistor_degree: &volume * int(2),
        volume,
        char_coeffs,
        degenerate: n == 0,
        checks: Vec::new(),
    };
    Ok(report.with_checks(DEFAULT_R_MAX))
}

/// `v = lead(P) (2n+1)! / 2`.
///
/// The coefficient of `r^{2n}` must then be `(n+1)/(2n)! v`; a mismatch means
/// `P` is not symmetric about `-(n+1)/2` and is reported as such.
pub fn quaternionic_volume(poly: &Poly, n: usize) -> Result<Rational> {
    let top = 2 * n + 1;
    if poly.degree() != Some(top) {
        return Err(Error::DegreeMismatch {
            expected: top,
            found: poly.degree(),
        });
    }
    let volume = poly.leading_coefficient() * Rational::from_integer(factorial(top as u32)) / int(2);
    let expected = &volume * int(n as i64 + 1) / Rational::from_integer(factorial(2 * n as u32));
    let found = poly.coefficient(2 * n);
    if found != expected {
        return Err(Error::SymmetryViolated {
            residual: format!(
                "coefficient of r^{} is {}, expected {}",
                2 * n,
                format_rational(&found),
                format_rational(&expected)
            ),
        });
    }
    Ok(volume)
}

fn pow4(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(4).pow(n as u32))
}
