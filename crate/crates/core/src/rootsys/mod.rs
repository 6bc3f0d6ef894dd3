//! Root systems of the simple Lie algebras in rational coordinates.
//!
//! Classical types use the orthonormal models (`A_l` in `Q^{l+1}`, `B`, `C`,
//! `D` in `Q^l`), `G2` sits in the sum-zero plane of `Q^3`, `F4` in `Q^4`
//! and the `E` series in `Q^8`, with `E7` and `E6` cut out of `E8` by
//! orthogonality. The positive system is chosen so that the highest root and
//! the roots of level one half are positive.

mod grading;
mod model;
mod weyl;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{format_rational, Rational};

pub use grading::{wolf_grading, Level, WolfGrading};
pub use model::{build_root_system, RootSystem};
pub use weyl::{casimir, half_sum_positive, weyl_dim, Normalization};

pub type Vector = Vec<Rational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A Cartan type such as `A3` or `E8`, validated on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanLabel {
    kind: RootType,
    rank: usize,
}

impl CartanLabel {
    pub fn new(kind: RootType, rank: usize) -> Result<Self> {
        let ok = match kind {
            RootType::A => rank >= 1,
            RootType::B | RootType::C => rank >= 2,
            RootType::D => rank >= 3,
            RootType::E => (6..=8).contains(&rank),
            RootType::F => rank == 4,
            RootType::G => rank == 2,
        };
        if !ok {
            return Err(Error::InadmissibleAlgebra {
                label: format!("{kind:?}{rank}"),
            });
        }
        Ok(CartanLabel { kind, rank })
    }

    pub fn kind(&self) -> RootType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of roots of the type.
    pub fn root_count(&self) -> usize {
        let l = self.rank;
        match self.kind {
            RootType::A => l * (l + 1),
            RootType::B | RootType::C => 2 * l * l,
            RootType::D => 2 * l * (l - 1),
            RootType::E => [72, 126, 240][l - 6],
            RootType::F => 48,
            RootType::G => 12,
        }
    }

    /// Number of roots shorter than the longest ones.
    pub fn short_root_count(&self) -> usize {
        let l = self.rank;
        match self.kind {
            RootType::B => 2 * l,
            RootType::C => 2 * l * (l - 1),
            RootType::F => 24,
            RootType::G => 6,
            RootType::A | RootType::D | RootType::E => 0,
        }
    }

    /// `dim g = |roots| + rank`.
    pub fn dimension(&self) -> usize {
        self.root_count() + self.rank
    }

    /// All admissible labels of rank at most `max_rank`, in a fixed order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<CartanLabel> {
        let mut out = Vec::new();
        for kind in [
            RootType::A,
            RootType::B,
            RootType::C,
            RootType::D,
            RootType::E,
            RootType::F,
            RootType::G,
        ] {
            for rank in 1..=max_rank {
                if let Ok(l) = CartanLabel::new(kind, rank) {
                    out.push(l);
                }
            }
        }
        out
    }
}

impl fmt::Display for CartanLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

impl FromStr for CartanLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InadmissibleAlgebra { label: s.to_string() };
        let t = s.trim();
        let mut chars = t.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => RootType::A,
            Some('B') => RootType::B,
            Some('C') => RootType::C,
            Some('D') => RootType::D,
            Some('E') => RootType::E,
            Some('F') => RootType::F,
            Some('G') => RootType::G,
            _ => return Err(bad()),
        };
        let digits = chars.as_str().trim_start_matches('_');
        let rank: usize = digits.parse().map_err(|_| bad())?;
        CartanLabel::new(kind, rank).map_err(|_| bad())
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_parse_and_validate() {
        assert_eq!(
            "G2".parse::<CartanLabel>().unwrap(),
            CartanLabel::new(RootType::G, 2).unwrap()
        );
        assert_eq!("e_8".parse::<CartanLabel>().unwrap().to_string(), "E8");
        for bad in ["B1", "C1", "D2", "E5", "E9", "F3", "G3", "A0", "X2", "A", ""] {
            assert!(bad.parse::<CartanLabel>().is_err(), "{bad}");
        }
        let err = "D2".parse::<CartanLabel>().unwrap_err().to_string();
        assert!(err.contains("D_l (l>=3)"));
    }

    #[test]
    fn dimensions_of_exceptional_algebras() {
        let dims: Vec<usize> = ["G2", "F4", "E6", "E7", "E8"]
            .iter()
            .map(|s| s.parse::<CartanLabel>().unwrap().dimension())
            .collect();
        assert_eq!(dims, vec![14, 52, 78, 133, 248]);
    }

    #[test]
    fn admissible_list_up_to_rank_eight() {
        let all = CartanLabel::all_up_to_rank(8);
        // A1..A8, B2..B8, C2..C8, D3..D8, E6..E8, F4, G2
        assert_eq!(all.len(), 8 + 7 + 7 + 6 + 3 + 1 + 1);
    }
}
