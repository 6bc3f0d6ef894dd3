use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial_int, int, rat, Poly, Rational};
use crate::rootsys::{CartanLabel, RootType};

/// The Wolf spaces with a closed-form Hilbert polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Quaternionic projective space, `Sp(n+1)/Sp(n)Sp(1)`.
    HPn,
    /// Complex Grassmannian of 2-planes in `C^{n+2}`.
    Gr2C,
    /// Real Grassmannian of oriented 4-planes in `R^{n+4}`.
    Gr4R,
    /// `G2/SO(4)`, with `n = 2`.
    G2,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::HPn, Family::Gr2C, Family::Gr4R, Family::G2];

    pub fn check_n(&self, n: usize) -> Result<()> {
        let ok = match self {
            Family::G2 => n == 2,
            _ => n >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("{self} is not defined for n = {n}")))
        }
    }

    /// The isometry algebra of the family member of quaternionic dimension `n`.
    pub fn algebra(&self, n: usize) -> Result<CartanLabel> {
        self.check_n(n)?;
        match self {
            Family::HPn => CartanLabel::new(RootType::C, n + 1),
            Family::Gr2C => CartanLabel::new(RootType::A, n + 1),
            Family::Gr4R if n % 2 == 1 => CartanLabel::new(RootType::B, (n + 3) / 2),
            Family::Gr4R => CartanLabel::new(RootType::D, (n + 4) / 2),
            Family::G2 => CartanLabel::new(RootType::G, 2),
        }
    }

    /// The quaternionic volume stated for the family.
    pub fn volume(&self, n: usize) -> Result<Rational> {
        self.check_n(n)?;
        let central = Rational::from_integer(binomial_int(2 * n as i64 + 1, n as u32));
        Ok(match self {
            Family::HPn => Rational::from_integer(BigInt::from(4).pow(n as u32)),
            Family::Gr2C => central,
            Family::Gr4R => rat(4, n as i64 + 2) * central,
            Family::G2 => int(9),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {s:?}; expected HPn, Gr2C, Gr4R or G2")))
    }
}

/// `C(r + c, k)` as a polynomial in `r`.
fn shifted_binomial(c: i64, k: usize) -> Poly {
    Poly::linear(int(1), int(c)).binomial(k as u32)
}

/// The closed formula for the Hilbert polynomial, expanded in `r`.
pub fn closed_form(family: Family, n: usize) -> Result<Poly> {
    family.check_n(n)?;
    let m = n as i64;
    Ok(match family {
        Family::HPn => Poly::linear(int(2), int(2 * m + 1)).binomial(2 * n as u32 + 1),
        Family::Gr2C => {
            let c = shifted_binomial(m, n);
            Poly::linear(rat(2, m + 1), int(1)) * (&c * &c)
        }
        Family::Gr4R => {
            let cubic = [0, 1, 2]
                .iter()
                .fold(Poly::one(), |acc, k| acc * Poly::linear(int(2), int(m + k)));
            let denom = int(m * m * (m + 1) * (m + 2));
            cubic.scale(&denom.recip()) * shifted_binomial(m, n - 1) * shifted_binomial(m - 1, n - 1)
        }
        Family::G2 => [(1, 2), (3, 5), (2, 3), (3, 4), (1, 1)]
            .iter()
            .fold(Poly::constant(rat(1, 120)), |acc, &(a, b)| {
                acc * Poly::linear(int(a), int(b))
            }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(closed_form(Family::HPn, 3).unwrap().eval_int(1), int(36));
        let gr4 = closed_form(Family::Gr4R, 2).unwrap();
        assert_eq!(gr4.eval_int(1), int(15));
        assert_eq!(gr4.leading_coefficient(), rat(8, 2 * 24));
        assert_eq!(
            closed_form(Family::Gr4R, 1).unwrap(),
            closed_form(Family::HPn, 1).unwrap()
        );
        assert_eq!(closed_form(Family::G2, 2).unwrap().leading_coefficient(), rat(3, 20));
    }

    #[test]
    fn values_at_one_are_isometry_dimensions() {
        for n in 1..8usize {
            let dim = |f: Family| f.algebra(n).unwrap().dimension();
            for f in [Family::HPn, Family::Gr2C, Family::Gr4R] {
                assert_eq!(closed_form(f, n).unwrap().eval_int(1), int(dim(f) as i64), "{f} n={n}");
                assert_eq!(closed_form(f, n).unwrap().eval_int(0), int(1));
            }
        }
    }

    #[test]
    fn domain_and_names() {
        assert!(closed_form(Family::G2, 3).is_err());
        assert!(closed_form(Family::HPn, 0).is_err());
        assert_eq!("gr4r".parse::<Family>().unwrap(), Family::Gr4R);
        assert!("Gr3R".parse::<Family>().is_err());
        assert_eq!(Family::Gr4R.algebra(1).unwrap().to_string(), "B2");
        assert_eq!(Family::Gr4R.algebra(2).unwrap().to_string(), "D3");
        assert_eq!(Family::Gr4R.algebra(5).unwrap().to_string(), "B4");
    }
}
