use std::ops::Range;

use num_traits::One;

use super::symbol::SymbolData;
use super::symtensor::SymTensorSpace;
use super::tower::{graded_block, Level, ProlongationTower};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::linalg::{LinearMap, SubspaceBasis};

/// `Sym^{<=m} V (x) W`, graded pieces stacked by degree; inside a piece the
/// index is `alpha_idx * dim W + w`.
#[derive(Clone, Debug)]
pub struct JetSpace {
    fibre_dim: usize,
    pieces: Vec<SymTensorSpace>,
    offsets: Vec<usize>,
}

impl JetSpace {
    pub fn new(v_dim: usize, fibre_dim: usize, max_degree: usize) -> Self {
        let pieces: Vec<SymTensorSpace> = (0..=max_degree).map(|m| SymTensorSpace::new(v_dim, m)).collect();
        let mut offsets = Vec::with_capacity(pieces.len() + 1);
        let mut acc = 0;
        for p in &pieces {
            offsets.push(acc);
            acc += p.dim() * fibre_dim;
        }
        offsets.push(acc);
        JetSpace {
            fibre_dim,
            pieces,
            offsets,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.pieces.len() - 1
    }

    pub fn dim(&self) -> usize {
        *self.offsets.last().expect("nonempty")
    }

    pub fn piece(&self, m: usize) -> &SymTensorSpace {
        &self.pieces[m]
    }

    /// Coordinate range of the degree-`m` piece.
    pub fn range(&self, m: usize) -> Range<usize> {
        self.offsets[m]..self.offsets[m + 1]
    }

    pub fn index_of(&self, alpha: &[u8], w: usize) -> usize {
        let m = alpha.iter().map(|&a| a as usize).sum::<usize>();
        self.offsets[m] + self.pieces[m].index_of(alpha) * self.fibre_dim + w
    }
}

/// `P^l: J_{<=k+l} -> Sym^l V (x) F`, the `l`-th prolonged operator in the
/// flat model; its block on the degree-`m` piece is
/// `(id (x) P_{m-l}) o Delta_{l, m-l}`, zero for `m < l`.
#[allow(non_snake_case)]
pub fn build_P_l(sym: &SymbolData, l: usize) -> LinearMap {
    prolonged_blocks(sym, l, sym.order() + l + 1)
}

/// The blocks of `P^l` on the pieces of degree `< upto`, side by side.
fn prolonged_blocks(sym: &SymbolData, l: usize, upto: usize) -> LinearMap {
    let rows = SymTensorSpace::expected_dim(sym.v_dim(), l) * sym.f_dim();
    (0..upto)
        .map(|m| {
            if m < l {
                LinearMap::zero(rows, SymTensorSpace::expected_dim(sym.v_dim(), m) * sym.e0_dim())
            } else {
                graded_block(sym, l, m - l)
            }
        })
        .fold(LinearMap::zero(rows, 0), |acc, b| acc.hstack(&b))
}

/// `I^{<=l}: A (+) A^(1) (+) ... (+) A^(l) -> J_{<=k+l}` for `l = 0..=L`,
/// together with the partial inverses `S^l` they were built from.
#[derive(Clone, Debug)]
pub struct IMaps {
    maps: Vec<LinearMap>,
    partial_inverses: Vec<LinearMap>,
    summand_dims: Vec<usize>,
    generalized_inverse: Vec<bool>,
    unitriangular: bool,
}

impl IMaps {
    /// `I^{<=l}`.
    pub fn map(&self, l: usize) -> &LinearMap {
        &self.maps[l]
    }

    pub fn maps(&self) -> &[LinearMap] {
        &self.maps
    }

    /// `S^l` for `l >= 1`: `Sym^l V (x) F -> Sym^{k+l} V (x) E0`.
    pub fn partial_inverse(&self, l: usize) -> Option<&LinearMap> {
        l.checked_sub(1).and_then(|i| self.partial_inverses.get(i))
    }

    /// `dim A, dim A^(1), ..., dim A^(L)`.
    pub fn summand_dims(&self) -> &[usize] {
        &self.summand_dims
    }

    /// Whether `P S P = P` held for the top block of each `P^l`, `l >= 1`.
    pub fn generalized_inverse_checks(&self) -> &[bool] {
        &self.generalized_inverse
    }

    /// Whether each summand `A^(l)` maps to `Sym^{k+l} V (x) E0` by the
    /// inclusion and to nothing of lower degree.
    pub fn unitriangular(&self) -> bool {
        self.unitriangular
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.maps.iter().map(LinearMap::rank).collect()
    }
}

/// Builds `I^{<=0}, ..., I^{<=top}` for a terminated tower with `top >= d`.
///
/// Fails with [`Error::RankDeficient`] if some `I^{<=l}` is not injective.
pub fn build_i_maps(tower: &ProlongationTower, top: usize) -> Result<IMaps> {
    let Some(d) = tower.termination().degree() else {
        return Err(Error::InvalidParameter("tower has not terminated".into()));
    };
    if top < d {
        return Err(Error::InvalidParameter(format!("I-maps need L >= d = {d}, got {top}")));
    }
    let sym = tower.symbol();
    let k = sym.order();
    let a = tower.equation_kernel();
    let mut current = a.inclusion();
    let mut maps = vec![current.clone()];
    let mut partial_inverses = Vec::new();
    let mut generalized_inverse = Vec::new();
    let mut summand_dims = vec![a.dim()];
    let mut inclusions = vec![a.clone()];
    for l in 1..=top {
        let computed;
        let level = match tower.level_data(l) {
            Some(lv) => lv,
            None => {
                computed = Level::compute(sym, l);
                &computed
            }
        };
        let s = level.elimination.partial_inverse();
        generalized_inverse.push(level.map.compose(&s.compose(&level.map)) == level.map);
        let low = prolonged_blocks(sym, l, k + l);
        let correction = s.compose(&low.compose(&current)).scale(&-Rational::one());
        let incl = level.basis.inclusion();
        let upper = current.hstack(&LinearMap::zero(current.rows(), incl.cols()));
        current = upper.vstack(&correction.hstack(&incl));
        let rank = current.rank();
        if rank != current.cols() {
            return Err(Error::RankDeficient {
                maps: format!("I^{{<={l}}}"),
                rank,
                expected: current.cols(),
            });
        }
        summand_dims.push(incl.cols());
        inclusions.push(level.basis.clone());
        partial_inverses.push(s);
        maps.push(current.clone());
    }
    let jets = JetSpace::new(sym.v_dim(), sym.e0_dim(), k + top);
    let unitriangular = is_unitriangular(&current, &inclusions, &jets, k);
    Ok(IMaps {
        maps,
        partial_inverses,
        summand_dims,
        generalized_inverse,
        unitriangular,
    })
}

fn is_unitriangular(map: &LinearMap, summands: &[SubspaceBasis], jets: &JetSpace, k: usize) -> bool {
    let columns = map.columns();
    let mut col = 0;
    for (l, basis) in summands.iter().enumerate() {
        let rows = if l == 0 {
            0..jets.range(k).end
        } else {
            jets.range(k + l)
        };
        for v in basis.vectors() {
            let c = &columns[col];
            col += 1;
            let below_ok = c.entries().iter().all(|(i, _)| *i >= rows.start);
            let diagonal: Vec<(usize, Rational)> = c
                .entries()
                .iter()
                .filter(|(i, _)| rows.contains(i))
                .map(|(i, x)| (i - rows.start, x.clone()))
                .collect();
            if !below_ok || diagonal != v.entries() {
                return false;
            }
        }
    }
    col == columns.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::prolong::symbol::{twistor_symbol, TwistorSymbolSpec};
    use crate::prolong::tower::prolongation_tower;

    fn twistor(n: usize, r: usize) -> SymbolData {
        twistor_symbol(&TwistorSymbolSpec::new(n, r).unwrap())
    }

    #[test]
    fn jet_space_layout() {
        let j = JetSpace::new(2, 3, 2);
        assert_eq!(j.dim(), (1 + 2 + 3) * 3);
        assert_eq!(j.range(1), 3..9);
        assert_eq!(j.index_of(&[0, 1], 2), 3 + 3 + 2);
        assert_eq!(j.index_of(&[0, 0], 1), 1);
    }

    #[test]
    fn level_zero_operator_is_the_symbol_itself() {
        let s = twistor(1, 1);
        let p = build_P_l(&s, 0);
        assert_eq!(p.select_columns(&(3..15).collect::<Vec<_>>()), *s.principal());
        assert!(p.select_columns(&[0, 1, 2]).is_zero());
    }

    #[test]
    fn restriction_to_top_degree_is_the_level_map() {
        let s = twistor(1, 1);
        let p = build_P_l(&s, 1);
        let jets = JetSpace::new(4, 3, 2);
        let top: Vec<usize> = jets.range(2).collect();
        assert_eq!(p.select_columns(&top).kernel().dim(), 3);
        let low: Vec<usize> = (0..jets.range(1).start).collect();
        assert!(p.select_columns(&low).is_zero());
    }

    #[test]
    fn smallest_twistor_i_maps() {
        let t = prolongation_tower(&twistor(1, 1), 4).unwrap();
        let i = build_i_maps(&t, 3).unwrap();
        assert_eq!(i.ranks(), vec![7, 10, 10, 10]);
        assert_eq!(i.summand_dims(), &[7, 3, 0, 0]);
        assert!(i.generalized_inverse_checks().iter().all(|&b| b));
        assert!(i.unitriangular());
        assert_eq!(i.map(0), &t.equation_kernel().inclusion());
    }

    #[test]
    fn lower_order_term_feeds_the_correction() {
        // psi' = psi: I^{<=2}(eta) = eta (1, 1, 1, 1), the jet of eta exp
        let p0 = LinearMap::from_dense(&[vec![int(-1)]]);
        let p1 = LinearMap::from_dense(&[vec![int(1)]]);
        let s = SymbolData::new(1, 1, 1, vec![p0, p1]).unwrap();
        let t = prolongation_tower(&s, 3).unwrap();
        let i = build_i_maps(&t, 2).unwrap();
        assert_eq!(i.map(2).to_dense(), vec![vec![int(1)]; 4]);
        assert!(i.unitriangular());
        assert!(i.partial_inverse(0).is_none());
        assert_eq!(i.partial_inverse(1).unwrap().to_dense(), vec![vec![int(1)]]);
    }

    #[test]
    fn needs_terminated_tower_and_large_enough_top() {
        let t = prolongation_tower(&twistor(1, 1), 1).unwrap();
        assert!(build_i_maps(&t, 3).is_err());
        let t = prolongation_tower(&twistor(1, 2), 6).unwrap();
        assert!(build_i_maps(&t, 2).is_err());
    }
}
