use super::symtensor::SymTensorSpace;
use super::tower::ProlongationTower;
use crate::error::{Error, Result};
use crate::linalg::{Elimination, LinearMap, SparseVec};

/// Index of `e_i ^ e_j`, `i < j`, among ordered pairs.
fn pair_index(d: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < d);
    i * (2 * d - i - 1) / 2 + (j - i - 1)
}

/// The Spencer differential `V (x) Sym^m V (x) E0 -> Lambda^2 V (x) Sym^{m-1} V (x) E0`,
/// `e_i (x) e^(alpha) (x) e -> sum_j (e_i ^ e_j) (x) e^(alpha - e_j) (x) e`,
/// restricted to `V (x) B` for the subspace spanned by `basis`.
///
/// Column `(i, b)` sits at `i * basis.len() + b`.
pub fn spencer_map(v_dim: usize, e0_dim: usize, m: usize, basis: &[SparseVec]) -> LinearMap {
    let src = SymTensorSpace::new(v_dim, m);
    let dst = SymTensorSpace::new(v_dim, m.saturating_sub(1));
    let piece = dst.dim() * e0_dim;
    let rows = v_dim * (v_dim.saturating_sub(1)) / 2 * piece;
    let mut triplets = Vec::new();
    for i in 0..v_dim {
        for (b, vec) in basis.iter().enumerate() {
            let col = i * basis.len() + b;
            for (coord, x) in vec.entries() {
                let (alpha, e) = (&src.basis()[coord / e0_dim], coord % e0_dim);
                for j in (0..v_dim).filter(|&j| j != i && alpha[j] > 0) {
                    let mut lowered = alpha.clone();
                    lowered[j] -= 1;
                    let (pair, value) = if i < j {
                        (pair_index(v_dim, i, j), x.clone())
                    } else {
                        (pair_index(v_dim, j, i), -x.clone())
                    };
                    triplets.push((pair * piece + dst.index_of(&lowered) * e0_dim + e, col, value));
                }
            }
        }
    }
    LinearMap::from_triplets(rows, v_dim * basis.len(), triplets)
}

/// Outcome of checking `0 -> A^(l+1) -> V (x) A^(l) -> Lambda^2 V (x) A^(l-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpencerCheck {
    pub level: usize,
    pub kernel_dim: usize,
    pub next_level_dim: usize,
    /// Every first-derivative slice of every element of `A^(l+1)` lies in `A^(l)`.
    pub image_contained: bool,
}

impl SpencerCheck {
    pub fn exact(&self) -> bool {
        self.image_contained && self.kernel_dim == self.next_level_dim
    }
}

/// Exactness of the Spencer sequence at `V (x) A^(l)`.
///
/// For `l = 0` the target is `Lambda^2 V (x) Sym^{k-1} V (x) E0`.
pub fn spencer_exactness(tower: &ProlongationTower, l: usize) -> Result<SpencerCheck> {
    let sym = tower.symbol();
    let (d, e0, k) = (sym.v_dim(), sym.e0_dim(), sym.order());
    let current = tower
        .level(l)
        .ok_or_else(|| Error::InvalidParameter(format!("level {l} has not been computed")))?;
    let next = match tower.level(l + 1) {
        Some(b) => b.vectors().to_vec(),
        None if current.dim() == 0 => Vec::new(),
        None => {
            return Err(Error::InvalidParameter(format!(
                "level {} has not been computed",
                l + 1
            )));
        }
    };
    let kernel_dim = spencer_map(d, e0, k + l, current.vectors()).kernel().dim();

    let mut span = Elimination::new(current.ambient_dim());
    for v in current.vectors() {
        span.push_row(v);
    }
    let upper = SymTensorSpace::new(d, k + l + 1);
    let lower = SymTensorSpace::new(d, k + l);
    let image_contained = next.iter().all(|v| {
        (0..d).all(|i| {
            let slice = SparseVec::from_pairs(v.entries().iter().filter_map(|(coord, x)| {
                let mut alpha = upper.basis()[coord / e0].clone();
                if alpha[i] == 0 {
                    return None;
                }
                alpha[i] -= 1;
                Some((lower.index_of(&alpha) * e0 + coord % e0, x.clone()))
            }));
            span.row_space_contains(&slice)
        })
    });
    Ok(SpencerCheck {
        level: l,
        kernel_dim,
        next_level_dim: next.len(),
        image_contained,
    })
}
