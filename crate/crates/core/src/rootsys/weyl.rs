use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{dot, format_vector, RootSystem, Vector};
use crate::error::{Error, Result};
use crate::exact::{int, Rational};

/// `rho`, half the sum of the positive roots.
pub fn half_sum_positive(rs: &RootSystem) -> Vector {
    let mut rho = vec![Rational::zero(); rs.ambient_dim()];
    for r in rs.positive_roots() {
        for (a, b) in rho.iter_mut().zip(r) {
            *a += b;
        }
    }
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    rho.iter().map(|x| x * &half).collect()
}

/// Scale of the invariant inner product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// The adjoint Casimir is one.
    Killing,
    /// The highest root has length one.
    WolfUnit,
    /// The coordinate dot product.
    Raw,
}

impl FromStr for Normalization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "killing" => Ok(Normalization::Killing),
            "wolf_unit" | "wolf-unit" => Ok(Normalization::WolfUnit),
            "raw" => Ok(Normalization::Raw),
            _ => Err(Error::InvalidParameter(format!("unknown normalization {s:?}"))),
        }
    }
}

impl Normalization {
    /// Factor multiplying the coordinate dot product.
    pub fn factor(&self, rs: &RootSystem) -> Rational {
        let w = rs.highest_root();
        match self {
            Normalization::Raw => Rational::one(),
            Normalization::WolfUnit => dot(w, w).recip(),
            Normalization::Killing => raw_casimir(w, &half_sum_positive(rs)).recip(),
        }
    }
}

fn raw_casimir(lambda: &[Rational], rho: &[Rational]) -> Rational {
    let shifted: Vector = lambda.iter().zip(rho).map(|(l, r)| l + r * int(2)).collect();
    dot(lambda, &shifted)
}

/// `<lambda, lambda + 2 rho>` in the requested normalization.
pub fn casimir(lambda: &[Rational], rs: &RootSystem, normalization: Normalization) -> Rational {
    raw_casimir(lambda, &half_sum_positive(rs)) * normalization.factor(rs)
}

/// `prod_{alpha > 0} <lambda + rho, alpha> / <rho, alpha>`.
///
/// Rejects `lambda` unless `<lambda + rho, alpha> > 0` for every simple root,
/// and rejects non-integral results.
pub fn weyl_dim(lambda: &[Rational], rs: &RootSystem) -> Result<BigInt> {
    let rho = half_sum_positive(rs);
    let shifted: Vector = lambda.iter().zip(&rho).map(|(l, r)| l + r).collect();
    for a in rs.simple_roots() {
        let pairing = dot(&shifted, a);
        if !pairing.is_positive() {
            return Err(Error::NonDominantWeight {
                simple_root: format_vector(a),
                pairing,
            });
        }
    }
    let mut value = Rational::one();
    for a in rs.positive_roots() {
        value *= dot(&shifted, a) / dot(&rho, a);
    }
    if !value.is_integer() {
        return Err(Error::NonIntegralDimension(value));
    }
    Ok(value.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::rootsys::{build_root_system, wolf_grading, CartanLabel};

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap()).unwrap()
    }

    fn scaled(v: &[Rational], c: i64) -> Vector {
        v.iter().map(|x| x * int(c)).collect()
    }

    #[test]
    fn rank_one_rho() {
        assert_eq!(half_sum_positive(&rs("A1")), vec![rat(1, 2), rat(-1, 2)]);
    }

    #[test]
    fn adjoint_dimensions() {
        for label in CartanLabel::all_up_to_rank(8) {
            let r = build_root_system(label).unwrap();
            let dim = weyl_dim(r.highest_root(), &r).unwrap();
            assert_eq!(dim, BigInt::from(label.dimension()), "{label}");
            assert_eq!(weyl_dim(&vec![int(0); r.ambient_dim()], &r).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn g2_powers_of_the_adjoint() {
        let g2 = rs("G2");
        assert_eq!(weyl_dim(&scaled(g2.highest_root(), 2), &g2).unwrap(), BigInt::from(77));
    }

    #[test]
    fn small_representations_by_hand() {
        // vector representations: sl(3) on C^3, so(7) on C^7, sp(4) on C^4
        assert_eq!(
            weyl_dim(&[rat(2, 3), rat(-1, 3), rat(-1, 3)], &rs("A2")).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(weyl_dim(&[int(1), int(0), int(0)], &rs("B3")).unwrap(), BigInt::from(7));
        assert_eq!(weyl_dim(&[int(1), int(0)], &rs("C2")).unwrap(), BigInt::from(4));
        // spin representation of so(7)
        assert_eq!(
            weyl_dim(&[rat(1, 2), rat(1, 2), rat(1, 2)], &rs("B3")).unwrap(),
            BigInt::from(8)
        );
    }

    #[test]
    fn rejects_non_dominant_and_non_integral() {
        let a2 = rs("A2");
        let neg: Vector = a2.highest_root().iter().map(|x| -x * int(3)).collect();
        assert!(matches!(weyl_dim(&neg, &a2), Err(Error::NonDominantWeight { .. })));
        let half: Vector = a2.highest_root().iter().map(|x| x * rat(1, 3)).collect();
        assert!(matches!(weyl_dim(&half, &a2), Err(Error::NonIntegralDimension(_))));
    }

    #[test]
    fn normalizations() {
        for label in CartanLabel::all_up_to_rank(8) {
            let r = build_root_system(label).unwrap();
            let n = wolf_grading(&r).unwrap().quaternionic_dim() as i64;
            let w = r.highest_root();
            assert_eq!(casimir(w, &r, Normalization::Killing), int(1));
            let k = Normalization::Killing.factor(&r);
            assert_eq!(dot(w, w) * &k, rat(1, n + 2), "{label}");
            assert_eq!(dot(w, w) * Normalization::WolfUnit.factor(&r), int(1));
            for m in 0..5 {
                let c = casimir(&scaled(w, m), &r, Normalization::Killing);
                assert_eq!(c, rat(m * (n + 1 + m), n + 2), "{label} r={m}");
            }
        }
        assert_eq!(
            casimir(&scaled(rs("F4").highest_root(), 3), &rs("F4"), Normalization::Killing),
            rat(11, 3)
        );
        let g2 = rs("G2");
        let w = g2.highest_root();
        assert_eq!(dot(w, w) * Normalization::Killing.factor(&g2), rat(1, 4));
    }

    #[test]
    fn level_zero_factors_are_trivial_on_multiples_of_the_highest_root() {
        for s in ["F4", "E6", "C3", "A4"] {
            let r = rs(s);
            let w = r.highest_root();
            let rho = half_sum_positive(&r);
            for a in r.positive_roots().filter(|a| dot(w, a).is_zero()) {
                let lam = scaled(w, 5);
                let shifted: Vector = lam.iter().zip(&rho).map(|(x, y)| x + y).collect();
                assert_eq!(dot(&shifted, a), dot(&rho, a));
            }
        }
    }

    #[test]
    fn normalization_names() {
        assert_eq!("wolf_unit".parse::<Normalization>().unwrap(), Normalization::WolfUnit);
        assert!("unit".parse::<Normalization>().is_err());
    }
}
