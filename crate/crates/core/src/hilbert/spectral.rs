use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{int, Rational};

/// Scalar curvature and the twistor weight, in the caller's normalization.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralParams {
    n: usize,
    kappa: Rational,
    r: usize,
}

impl SpectralParams {
    pub fn new(n: usize, kappa: Rational, r: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "quaternionic dimension must be at least 1".into(),
            ));
        }
        if kappa <= Rational::zero() {
            return Err(Error::InvalidParameter(format!(
                "scalar curvature must be positive, got {kappa}"
            )));
        }
        Ok(SpectralParams { n, kappa, r })
    }

    /// Killing normalization, where `kappa = 2n`.
    pub fn killing(n: usize, r: usize) -> Result<Self> {
        Self::new(n, int(2 * n as i64), r)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kappa(&self) -> &Rational {
        &self.kappa
    }

    pub fn r(&self) -> usize {
        self.r
    }

    fn scale(&self) -> Rational {
        let n = self.n as i64;
        self.kappa.clone() / int(n * (n + 2))
    }
}

/// `kappa r (n + 1 + r) / (2n(n+2))`, the lower eigenvalue bound on `Sym^{2r} H`.
pub fn lambda_min(sp: &SpectralParams) -> Rational {
    let (n, r) = (sp.n as i64, sp.r as i64);
    sp.scale() * int(r * (n + 1 + r)) / int(2)
}

/// `kappa / (8n(n+2)) (l + d - n)(l - d + n + 2)`.
pub fn phi(sp: &SpectralParams, l: i64, d: i64) -> Rational {
    let n = sp.n as i64;
    sp.scale() * int((l + d - n) * (l - d + n + 2)) / int(8)
}
