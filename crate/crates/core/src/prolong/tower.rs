use super::symbol::SymbolData;
use super::symtensor::{difference, sub_indices, SymTensorSpace};
use crate::error::{Error, Result};
use crate::linalg::{Elimination, LinearMap, SubspaceBasis};

/// `(id (x) P_j) o Delta_{l,j}: Sym^{l+j} V (x) E0 -> Sym^l V (x) F`.
///
/// Column `(alpha, e)` sits at `alpha_idx * dim E0 + e`, row `(beta, f)` at
/// `beta_idx * dim F + f`.
pub fn graded_block(sym: &SymbolData, l: usize, j: usize) -> LinearMap {
    let (d, e0, f) = (sym.v_dim(), sym.e0_dim(), sym.f_dim());
    let src = SymTensorSpace::new(d, l + j);
    let low = SymTensorSpace::new(d, l);
    let rows = low.dim() * f;
    let cols = src.dim() * e0;
    if j > sym.order() || sym.component(j).is_zero() {
        return LinearMap::zero(rows, cols);
    }
    let part = SymTensorSpace::new(d, j);
    let p_cols = sym.component(j).columns();
    let mut triplets = Vec::new();
    for (a_idx, alpha) in src.basis().iter().enumerate() {
        for gamma in sub_indices(alpha, j) {
            let row_base = low.index_of(&difference(alpha, &gamma)) * f;
            let g_idx = part.index_of(&gamma);
            for e in 0..e0 {
                for (fi, v) in p_cols[g_idx * e0 + e].entries() {
                    triplets.push((row_base + fi, a_idx * e0 + e, v.clone()));
                }
            }
        }
    }
    LinearMap::from_triplets(rows, cols, triplets)
}

/// The map whose kernel is the `l`-th prolongation: `graded_block(sym, l, k)`.
pub fn level_map(sym: &SymbolData, l: usize) -> LinearMap {
    graded_block(sym, l, sym.order())
}

/// Basis of the prolongation `A^(l) = ker (id (x) res P) o Delta` inside
/// `Sym^{k+l} V (x) E0`.
pub fn prolong_level(sym: &SymbolData, l: usize) -> SubspaceBasis {
    Elimination::of_rows(&level_map(sym, l)).kernel()
}

/// `A = ker P` on `J_{<=k} = Sym^{<=k} V (x) E0`, graded pieces stacked by degree.
pub fn equation_kernel(sym: &SymbolData) -> SubspaceBasis {
    let blocks: Vec<LinearMap> = (0..=sym.order()).map(|j| graded_block(sym, 0, j)).collect();
    let joined = blocks[1..].iter().fold(blocks[0].clone(), |acc, b| acc.hstack(b));
    joined.kernel()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Termination {
    /// `A^(degree+1) = 0`, with `degree` the smallest such.
    Terminated { degree: usize },
    /// Every level up to and including `cap` is nonzero.
    NotTerminated { cap: usize },
}

impl Termination {
    pub fn degree(&self) -> Option<usize> {
        match self {
            Termination::Terminated { degree } => Some(*degree),
            Termination::NotTerminated { .. } => None,
        }
    }
}

/// One computed level: the kernel together with the factorization of the
/// level map, which the partial inverse is read from.
#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub(crate) map: LinearMap,
    pub(crate) elimination: Elimination,
    pub(crate) basis: SubspaceBasis,
}

impl Level {
    pub(crate) fn compute(sym: &SymbolData, l: usize) -> Self {
        let map = level_map(sym, l);
        let elimination = Elimination::of_rows(&map);
        let basis = elimination.kernel();
        Level {
            map,
            elimination,
            basis,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ProlongationTower {
    symbol: SymbolData,
    equation_kernel: SubspaceBasis,
    levels: Vec<Level>,
    termination: Termination,
}

/// Computes `A^(0), A^(1), ...` until a level vanishes or level `cap` has been
/// computed.
pub fn prolongation_tower(sym: &SymbolData, cap: usize) -> Result<ProlongationTower> {
    if cap < 1 {
        return Err(Error::InvalidParameter("cap must be at least 1".into()));
    }
    let mut levels = Vec::new();
    let mut termination = Termination::NotTerminated { cap };
    for l in 0..=cap {
        let level = Level::compute(sym, l);
        let zero = level.basis.dim() == 0;
        levels.push(level);
        if zero {
            termination = Termination::Terminated {
                degree: l.saturating_sub(1),
            };
            break;
        }
    }
    Ok(ProlongationTower {
        symbol: sym.clone(),
        equation_kernel: equation_kernel(sym),
        levels,
        termination,
    })
}

impl ProlongationTower {
    pub fn symbol(&self) -> &SymbolData {
        &self.symbol
    }

    /// `A` itself, not `A^(0)`.
    pub fn equation_kernel(&self) -> &SubspaceBasis {
        &self.equation_kernel
    }

    pub fn level(&self, l: usize) -> Option<&SubspaceBasis> {
        self.levels.get(l).map(|lv| &lv.basis)
    }

    pub fn computed_levels(&self) -> usize {
        self.levels.len()
    }

    pub fn level_dims(&self) -> Vec<usize> {
        self.levels.iter().map(|lv| lv.basis.dim()).collect()
    }

    pub fn termination(&self) -> Termination {
        self.termination
    }

    /// `dim A^(l)` for any `l`, using that levels stay zero once they vanish.
    pub fn level_dim(&self, l: usize) -> Option<usize> {
        match self.levels.get(l) {
            Some(lv) => Some(lv.basis.dim()),
            None => self.termination.degree().map(|_| 0),
        }
    }

    /// `dim A + dim A^(1) + ... + dim A^(l)`.
    pub fn dim_up_to(&self, l: usize) -> Option<usize> {
        (1..=l).try_fold(self.equation_kernel.dim(), |acc, i| Some(acc + self.level_dim(i)?))
    }

    /// `dim A^{<=d}` for the termination degree `d`.
    pub fn total_dim(&self) -> Option<usize> {
        self.dim_up_to(self.termination.degree()?)
    }

    pub(crate) fn level_data(&self, l: usize) -> Option<&Level> {
        self.levels.get(l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::linalg::SparseVec;
    use crate::prolong::symbol::{divergence_symbol, twistor_symbol, TwistorSymbolSpec};

    fn twistor(n: usize, r: usize) -> SymbolData {
        twistor_symbol(&TwistorSymbolSpec::new(n, r).unwrap())
    }

    #[test]
    fn level_zero_block_is_the_principal_part() {
        let s = twistor(1, 2);
        assert_eq!(level_map(&s, 0), *s.principal());
        assert_eq!(graded_block(&s, 0, 0), *s.component(0));
    }

    #[test]
    fn smallest_twistor_levels() {
        let s = twistor(1, 1);
        assert_eq!(prolong_level(&s, 0).dim(), 4);
        assert_eq!(prolong_level(&s, 1).dim(), 3);
        assert_eq!(prolong_level(&s, 2).dim(), 0);
        let t = prolongation_tower(&s, 5).unwrap();
        assert_eq!(t.level_dims(), vec![4, 3, 0]);
        assert_eq!(t.termination(), Termination::Terminated { degree: 1 });
        assert_eq!(t.equation_kernel().dim(), 7);
        assert_eq!(t.total_dim(), Some(10));
    }

    #[test]
    fn cap_below_need_is_not_terminated() {
        let t = prolongation_tower(&twistor(1, 1), 1).unwrap();
        assert_eq!(t.termination(), Termination::NotTerminated { cap: 1 });
        assert_eq!(t.total_dim(), None);
        assert!(prolongation_tower(&twistor(1, 1), 0).is_err());
    }

    #[test]
    fn divergence_is_infinite_type() {
        let t = prolongation_tower(&divergence_symbol(2).unwrap(), 5).unwrap();
        assert_eq!(t.termination(), Termination::NotTerminated { cap: 5 });
        // div on the plane: dim A^(l) = 2 (l+2) - (l+1)
        assert_eq!(t.level_dims(), vec![3, 4, 5, 6, 7, 8]);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let s = twistor(2, 1);
        let m = level_map(&s, 1);
        for v in prolong_level(&s, 1).vectors() {
            assert!(m.apply(v).is_zero());
        }
    }

    #[test]
    fn lower_order_term_enters_the_equation_kernel() {
        // psi' = psi on the line
        let p0 = LinearMap::from_dense(&[vec![int(-1)]]);
        let p1 = LinearMap::from_dense(&[vec![int(1)]]);
        let s = SymbolData::new(1, 1, 1, vec![p0, p1]).unwrap();
        let t = prolongation_tower(&s, 3).unwrap();
        assert_eq!(t.level_dims(), vec![0]);
        assert_eq!(t.termination(), Termination::Terminated { degree: 0 });
        assert_eq!(
            t.equation_kernel().vectors(),
            &[SparseVec::from_dense(&[int(1), int(1)])]
        );
        assert_eq!(t.total_dim(), Some(1));
    }
}
