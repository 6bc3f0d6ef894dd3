use serde::Serialize;

use super::weyl::half_sum_positive;
use super::{dot, format_vector, RootSystem, Vector};
use crate::error::{Error, Result};
use crate::exact::{int, rat, Rational};

/// Eigenvalue of `ad` of the grading element on a root space: the pairing
/// with the highest root relative to its length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Level {
    MinusOne,
    MinusHalf,
    Zero,
    Half,
    One,
}

impl Level {
    pub const ALL: [Level; 5] = [Level::MinusOne, Level::MinusHalf, Level::Zero, Level::Half, Level::One];

    pub fn value(&self) -> Rational {
        match self {
            Level::MinusOne => int(-1),
            Level::MinusHalf => rat(-1, 2),
            Level::Zero => int(0),
            Level::Half => rat(1, 2),
            Level::One => int(1),
        }
    }

    pub fn from_value(q: &Rational) -> Option<Level> {
        Level::ALL.into_iter().find(|l| l.value() == *q)
    }

    fn slot(&self) -> usize {
        *self as usize
    }
}

/// The five-grading of the roots by the highest root.
#[derive(Clone, Debug, PartialEq)]
pub struct WolfGrading {
    wolf_root: Vector,
    levels: [Vec<Vector>; 5],
    quaternionic_dim: usize,
    rho: Vector,
    rho_k0: Vector,
}

pub fn wolf_grading(rs: &RootSystem) -> Result<WolfGrading> {
    let wolf = rs.highest_root().clone();
    let ww = dot(&wolf, &wolf);
    let mut levels: [Vec<Vector>; 5] = Default::default();
    for root in rs.roots() {
        let value = dot(&wolf, root) / &ww;
        let level = Level::from_value(&value).ok_or_else(|| Error::InconsistentGrading {
            root: format_vector(root),
            level: value.clone(),
        })?;
        if matches!(level, Level::Half | Level::One) && !rs.is_positive(root) {
            return Err(Error::InvalidRootTable(format!(
                "root {} of positive level is not positive",
                format_vector(root)
            )));
        }
        levels[level.slot()].push(root.clone());
    }
    if levels[Level::One.slot()].len() != 1 || levels[Level::MinusOne.slot()].len() != 1 {
        return Err(Error::InvalidRootTable(
            "highest root is not the only root of level one".into(),
        ));
    }
    let half = levels[Level::Half.slot()].len();
    if !half.is_multiple_of(2) || levels[Level::MinusHalf.slot()].len() != half {
        return Err(Error::InvalidRootTable(format!("{half} roots of level one half")));
    }
    let n = half / 2;
    let rho = half_sum_positive(rs);
    let c = rat(n as i64 + 1, 2);
    let rho_k0 = rho.iter().zip(&wolf).map(|(p, w)| p - &c * w).collect();
    Ok(WolfGrading {
        wolf_root: wolf,
        levels,
        quaternionic_dim: n,
        rho,
        rho_k0,
    })
}

impl WolfGrading {
    pub fn wolf_root(&self) -> &Vector {
        &self.wolf_root
    }

    pub fn level(&self, level: Level) -> &[Vector] {
        &self.levels[level.slot()]
    }

    /// `n = |Delta_{1/2}| / 2`.
    pub fn quaternionic_dim(&self) -> usize {
        self.quaternionic_dim
    }

    /// `n = 0` happens only for `A1`; the Wolf space is then a point.
    pub fn degenerate(&self) -> bool {
        self.quaternionic_dim == 0
    }

    pub fn rho(&self) -> &Vector {
        &self.rho
    }

    /// `rho - (n + 1)/2 lambda_Wolf`.
    pub fn rho_k0(&self) -> &Vector {
        &self.rho_k0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, CartanLabel};
    use num_traits::Zero;

    fn grading(s: &str) -> (RootSystem, WolfGrading) {
        let rs = build_root_system(s.parse().unwrap()).unwrap();
        let g = wolf_grading(&rs).unwrap();
        (rs, g)
    }

    fn counts(g: &WolfGrading) -> Vec<usize> {
        Level::ALL.iter().map(|&l| g.level(l).len()).collect()
    }

    #[test]
    fn exceptional_quaternionic_dimensions() {
        let (_, g) = grading("G2");
        assert_eq!(g.quaternionic_dim(), 2);
        let (_, g) = grading("F4");
        assert_eq!((g.quaternionic_dim(), g.level(Level::Zero).len()), (7, 18));
        let (_, g) = grading("E6");
        assert_eq!(g.quaternionic_dim(), 10);
        let (_, g) = grading("E7");
        assert_eq!(g.quaternionic_dim(), 16);
        let (_, g) = grading("E8");
        assert_eq!(counts(&g), vec![1, 56, 126, 56, 1]);
        assert_eq!(g.quaternionic_dim(), 28);
    }

    #[test]
    fn classical_quaternionic_dimensions() {
        // C_{n+1}: n; A_{n+1}: n; so(n+4): n
        for n in 1..6 {
            assert_eq!(grading(&format!("C{}", n + 1)).1.quaternionic_dim(), n);
            assert_eq!(grading(&format!("A{}", n + 1)).1.quaternionic_dim(), n);
            let so = if n % 2 == 1 {
                format!("B{}", (n + 3) / 2)
            } else {
                format!("D{}", (n + 4) / 2)
            };
            assert_eq!(grading(&so).1.quaternionic_dim(), n, "{so}");
        }
        assert!(grading("A1").1.degenerate());
    }

    #[test]
    fn grading_invariants_for_every_algebra() {
        for label in CartanLabel::all_up_to_rank(8) {
            let (rs, g) = grading(&label.to_string());
            let n = g.quaternionic_dim();
            assert_eq!(counts(&g).iter().sum::<usize>(), rs.roots().len(), "{label}");
            assert_eq!(g.level(Level::One), &[rs.highest_root().clone()]);
            // rho_k0 is orthogonal to the highest root and is the half sum of the positive level-zero roots
            assert!(dot(g.rho_k0(), g.wolf_root()).is_zero(), "{label}");
            let mut half_zero = vec![Rational::zero(); rs.ambient_dim()];
            for r in g.level(Level::Zero).iter().filter(|r| rs.is_positive(r)) {
                for (a, b) in half_zero.iter_mut().zip(r) {
                    *a += b / int(2);
                }
            }
            assert_eq!(&half_zero, g.rho_k0(), "{label}");
            // sum over Delta_{1/2} equals n lambda_Wolf
            let mut sum = vec![Rational::zero(); rs.ambient_dim()];
            for r in g.level(Level::Half) {
                for (a, b) in sum.iter_mut().zip(r) {
                    *a += b;
                }
            }
            let expected: Vector = g.wolf_root().iter().map(|w| w * int(n as i64)).collect();
            assert_eq!(sum, expected, "{label}");
            // 2<rho, lambda>/<lambda, lambda> = n + 1
            let ratio = int(2) * dot(g.rho(), g.wolf_root()) / dot(g.wolf_root(), g.wolf_root());
            assert_eq!(ratio, int(n as i64 + 1), "{label}");
        }
    }

    #[test]
    fn isomorphic_pairs_have_equal_gradings() {
        for (a, b) in [("B2", "C2"), ("D3", "A3")] {
            assert_eq!(counts(&grading(a).1), counts(&grading(b).1));
        }
    }
}
