use std::collections::HashMap;

use num_traits::One;

use crate::exact::{binomial_int, Rational};
use crate::linalg::LinearMap;

/// Exponent vector of a divided-power monomial `e^(alpha) = e^alpha / alpha!`.
pub type MultiIndex = Vec<u8>;

/// `Sym^m V` for `dim V = d`, in the divided-power basis, ordered
/// graded-lexicographically (`e_0^(m)` first).
#[derive(Clone, Debug)]
pub struct SymTensorSpace {
    base_dim: usize,
    degree: usize,
    basis: Vec<MultiIndex>,
    index: HashMap<MultiIndex, usize>,
}

impl SymTensorSpace {
    pub fn new(base_dim: usize, degree: usize) -> Self {
        let mut basis = Vec::new();
        let mut current = vec![0u8; base_dim];
        fill(&mut basis, &mut current, 0, degree);
        let index = basis.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect();
        SymTensorSpace {
            base_dim,
            degree,
            basis,
            index,
        }
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[MultiIndex] {
        &self.basis
    }

    pub fn index_of(&self, alpha: &[u8]) -> usize {
        self.index[alpha]
    }

    /// `C(d + m - 1, m)`.
    pub fn expected_dim(base_dim: usize, degree: usize) -> usize {
        if base_dim == 0 {
            return usize::from(degree == 0);
        }
        usize::try_from(binomial_int((base_dim + degree - 1) as i64, degree as u32)).expect("dimension fits in usize")
    }
}

fn fill(out: &mut Vec<MultiIndex>, current: &mut MultiIndex, pos: usize, remaining: usize) {
    if pos + 1 == current.len() {
        current[pos] = remaining as u8;
        out.push(current.clone());
        current[pos] = 0;
        return;
    }
    if current.is_empty() {
        if remaining == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for take in (0..=remaining).rev() {
        current[pos] = take as u8;
        fill(out, current, pos + 1, remaining - take);
    }
    current[pos] = 0;
}

/// All `gamma <= alpha` (componentwise) with `|gamma| = size`, in
/// graded-lexicographic order.
pub fn sub_indices(alpha: &[u8], size: usize) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut current = vec![0u8; alpha.len()];
    sub_fill(alpha, &mut out, &mut current, 0, size);
    out
}

fn sub_fill(alpha: &[u8], out: &mut Vec<MultiIndex>, cur: &mut MultiIndex, pos: usize, rem: usize) {
    if pos == alpha.len() {
        if rem == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let tail_cap: usize = alpha[pos + 1..].iter().map(|&a| a as usize).sum();
    let hi = rem.min(alpha[pos] as usize);
    for take in (0..=hi).rev() {
        if rem - take > tail_cap {
            break;
        }
        cur[pos] = take as u8;
        sub_fill(alpha, out, cur, pos + 1, rem - take);
    }
    cur[pos] = 0;
}

pub fn difference(alpha: &[u8], gamma: &[u8]) -> MultiIndex {
    alpha.iter().zip(gamma).map(|(a, g)| a - g).collect()
}

/// The diagonal `Sym^{k+l} V -> Sym^k V (x) Sym^l V`,
/// `e^(alpha) -> sum_{beta + gamma = alpha} e^(beta) (x) e^(gamma)`.
///
/// Row index of `e^(beta) (x) e^(gamma)` is `beta_idx * dim Sym^l + gamma_idx`.
/// Entries are 0/1 in the divided-power basis.
pub fn comultiplication(d: usize, k: usize, l: usize) -> LinearMap {
    let src = SymTensorSpace::new(d, k + l);
    let left = SymTensorSpace::new(d, k);
    let right = SymTensorSpace::new(d, l);
    let one = Rational::one();
    let triplets = src.basis().iter().enumerate().flat_map(|(col, alpha)| {
        let (left, right, one) = (&left, &right, &one);
        sub_indices(alpha, k).into_iter().map(move |beta| {
            let gamma = difference(alpha, &beta);
            let row = left.index_of(&beta) * right.dim() + right.index_of(&gamma);
            (row, col, one.clone())
        })
    });
    LinearMap::from_triplets(left.dim() * right.dim(), src.dim(), triplets.collect::<Vec<_>>())
}

/// The embedding `iota: Sym^m V -> (x)^m V`, `xi^m / m! -> xi (x) ... (x) xi`.
///
/// Tensor words are indexed in base `d` with the first factor most
/// significant; `e^(alpha)` maps to the sum of all words with content `alpha`.
pub fn iota(d: usize, m: usize) -> LinearMap {
    let src = SymTensorSpace::new(d, m);
    let words = d.pow(m as u32);
    let one = Rational::one();
    let triplets = (0..words).map(|w| {
        let mut content = vec![0u8; d];
        let mut rest = w;
        for _ in 0..m {
            content[rest % d] += 1;
            rest /= d;
        }
        (w, src.index_of(&content), one.clone())
    });
    LinearMap::from_triplets(words, src.dim(), triplets.collect::<Vec<_>>())
}

/// Kronecker product `a (x) b` with row/column index `i_a * dim_b + i_b`.
pub fn kron(a: &LinearMap, b: &LinearMap) -> LinearMap {
    let mut triplets = Vec::with_capacity(a.nnz() * b.nnz());
    for ia in 0..a.rows() {
        for (ja, va) in a.row(ia).entries() {
            for ib in 0..b.rows() {
                for (jb, vb) in b.row(ib).entries() {
                    triplets.push((ia * b.rows() + ib, ja * b.cols() + jb, va * vb));
                }
            }
        }
    }
    LinearMap::from_triplets(a.rows() * b.rows(), a.cols() * b.cols(), triplets)
}
