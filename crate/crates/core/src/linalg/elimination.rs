use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{LinearMap, SparseVec, SubspaceBasis};
use crate::exact::Rational;

/// One row of the echelon form, normalized so its leading entry is one.
#[derive(Clone, Debug)]
struct EchelonRow {
    lead: usize,
    /// Entries strictly right of `lead`.
    tail: Vec<(usize, Rational)>,
}

/// Incremental row elimination `M[sel] = L U`.
///
/// Rows are fed in order; each is reduced against the existing echelon rows
/// by leading column until it either vanishes or exposes a column with no
/// pivot yet, which becomes its leading column. Only rows that survive are
/// kept (`selected`), together with their multipliers, so `L` is
/// lower-triangular in insertion order and `U` has unit leading entries.
/// The resulting kernel basis and rank do not depend on the insertion order;
/// kernel vectors are the canonical reduced-echelon ones (one per free
/// column, one at that column and zero at every other free column).
#[derive(Clone, Debug)]
pub struct Elimination {
    cols: usize,
    rows_seen: usize,
    echelon: Vec<EchelonRow>,
    pivot_of_col: Vec<Option<usize>>,
    selected: Vec<usize>,
    /// For echelon row `i`: `(j, f)` with `j < i`, plus the scale of row `i`
    /// itself, such that `M[selected[i]] = sum_j f_j U_j + scale_i U_i`.
    multipliers: Vec<Vec<(usize, Rational)>>,
    scales: Vec<Rational>,
}

impl Elimination {
    pub fn new(cols: usize) -> Self {
        Elimination {
            cols,
            rows_seen: 0,
            echelon: Vec::new(),
            pivot_of_col: vec![None; cols],
            selected: Vec::new(),
            multipliers: Vec::new(),
            scales: Vec::new(),
        }
    }

    pub fn of_rows(m: &LinearMap) -> Self {
        let mut e = Elimination::new(m.cols());
        for r in m.row_vecs() {
            e.push_row(r);
        }
        e
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.echelon.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Indices (in feeding order) of the rows that became pivots.
    pub fn selected_rows(&self) -> &[usize] {
        &self.selected
    }

    /// Leading columns of the echelon rows, ascending.
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|c| self.pivot_of_col[*c].is_some()).collect()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|c| self.pivot_of_col[*c].is_none()).collect()
    }

    /// Number of nonzeros held by the factors `L` and `U`.
    pub fn fill(&self) -> usize {
        self.echelon.iter().map(|r| r.tail.len() + 1).sum::<usize>()
            + self.multipliers.iter().map(Vec::len).sum::<usize>()
    }

    /// Feeds the next row; returns true if it increased the rank.
    pub fn push_row(&mut self, row: &SparseVec) -> bool {
        let index = self.rows_seen;
        self.rows_seen += 1;
        let mut work: BTreeMap<usize, Rational> = row.entries().iter().cloned().collect();
        let mut mults = Vec::new();
        let mut cursor = 0;
        let lead = loop {
            let Some((&c, _)) = work.range(cursor..).next() else {
                return false;
            };
            let Some(p) = self.pivot_of_col[c] else {
                break c;
            };
            let f = work.remove(&c).expect("present");
            for (cc, v) in &self.echelon[p].tail {
                let slot = work.entry(*cc).or_insert_with(Rational::zero);
                *slot -= &f * v;
                if slot.is_zero() {
                    work.remove(cc);
                }
            }
            mults.push((p, f));
            cursor = c + 1;
        };
        let scale = work.remove(&lead).expect("lead present");
        let inv = scale.recip();
        let tail = work.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        let id = self.echelon.len();
        self.echelon.push(EchelonRow { lead, tail });
        self.pivot_of_col[lead] = Some(id);
        self.selected.push(index);
        self.multipliers.push(mults);
        self.scales.push(scale);
        true
    }

    /// Whether `v` lies in the span of the rows fed so far.
    pub fn row_space_contains(&self, v: &SparseVec) -> bool {
        let mut probe = self.clone();
        !probe.push_row(v)
    }

    /// Echelon row ids sorted by decreasing leading column.
    fn back_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.echelon.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.echelon[i].lead));
        order
    }

    /// Solves `U x = w` with every free coordinate of `x` set from `free`
    /// (missing entries mean zero).
    fn back_substitute(&self, w: &[Rational], free: &[(usize, Rational)], order: &[usize]) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.cols];
        for (c, v) in free {
            x[*c] = v.clone();
        }
        for &i in order {
            let row = &self.echelon[i];
            let mut acc = w[i].clone();
            for (c, v) in &row.tail {
                if !x[*c].is_zero() {
                    acc -= v * &x[*c];
                }
            }
            x[row.lead] = acc;
        }
        x
    }

    /// Canonical kernel basis of the fed rows.
    pub fn kernel(&self) -> SubspaceBasis {
        let order = self.back_order();
        let zeros = vec![Rational::zero(); self.echelon.len()];
        let vectors = self
            .free_columns()
            .into_iter()
            .map(|f| SparseVec::from_dense(&self.back_substitute(&zeros, &[(f, Rational::one())], &order)))
            .collect();
        SubspaceBasis::new(self.cols, vectors)
    }

    /// The partial inverse attached to this factorization.
    ///
    /// Reads only the selected coordinates of `y`, solves `L w = y[sel]`, then
    /// `U x = w` with all free coordinates zero. It is linear and defined on
    /// the whole codomain; on the image `M S y = y`, hence `M S M = M`.
    pub fn solve(&self, y: &SparseVec) -> SparseVec {
        let mut w: Vec<Rational> = Vec::with_capacity(self.echelon.len());
        for (i, &src) in self.selected.iter().enumerate() {
            let mut acc = y.get(src);
            for (j, f) in &self.multipliers[i] {
                if !w[*j].is_zero() {
                    acc -= f * &w[*j];
                }
            }
            w.push(acc / &self.scales[i]);
        }
        SparseVec::from_dense(&self.back_substitute(&w, &[], &self.back_order()))
    }

    /// The partial inverse as a matrix `cols x rows_seen`.
    pub fn partial_inverse(&self) -> LinearMap {
        let columns: Vec<SparseVec> = (0..self.rows_seen).map(|r| self.solve(&SparseVec::unit(r))).collect();
        LinearMap::from_columns(self.cols, &columns)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::linalg::bareiss;
    use proptest::prelude::*;

    fn dense(rows: &[&[i64]]) -> LinearMap {
        LinearMap::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn rank_and_kernel_of_small_matrix() {
        let m = dense(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let e = Elimination::of_rows(&m);
        assert_eq!(e.rank(), 2);
        let k = e.kernel();
        assert_eq!(k.dim(), 1);
        // canonical vector: one at the free column 2
        assert_eq!(k.vectors()[0].to_dense(3), vec![int(-1), int(-1), int(1)]);
        assert!(m.apply(&k.vectors()[0]).is_zero());
    }

    #[test]
    fn pivot_in_later_row_with_smaller_column() {
        let m = dense(&[&[0, 1], &[1, 0]]);
        let e = Elimination::of_rows(&m);
        assert_eq!(e.rank(), 2);
        let y = SparseVec::from_dense(&[int(3), int(5)]);
        assert_eq!(m.apply(&e.solve(&y)), y);
    }

    #[test]
    fn zero_matrix_has_full_kernel() {
        let m = LinearMap::zero(3, 4);
        let e = Elimination::of_rows(&m);
        assert_eq!(e.rank(), 0);
        assert_eq!(e.kernel().dim(), 4);
        assert!(e.selected_rows().is_empty());
    }

    #[test]
    fn partial_inverse_identity_on_rank_deficient_matrix() {
        let m = dense(&[&[1, 1, 0], &[0, 0, 0], &[2, 2, 0], &[0, 3, 1]]);
        let s = Elimination::of_rows(&m).partial_inverse();
        assert_eq!(s.rows(), 3);
        assert_eq!(s.cols(), 4);
        assert_eq!(m.compose(&s).compose(&m), m);
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..7, 1usize..7)
            .prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-3i64..4, c), r))
    }

    fn to_map(rows: &[Vec<i64>]) -> LinearMap {
        LinearMap::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    proptest! {
        #[test]
        fn rank_nullity_and_bareiss_agree(rows in arb_matrix()) {
            let m = to_map(&rows);
            let e = Elimination::of_rows(&m);
            let k = e.kernel();
            prop_assert_eq!(e.rank() + k.dim(), m.cols());
            prop_assert_eq!(e.rank(), bareiss::rank(&m.to_dense()));
            for v in k.vectors() {
                prop_assert!(m.apply(v).is_zero());
            }
        }

        #[test]
        fn kernel_does_not_depend_on_row_order(rows in arb_matrix()) {
            let m = to_map(&rows);
            let mut rev = rows.clone();
            rev.reverse();
            let a = Elimination::of_rows(&m).kernel();
            let b = Elimination::of_rows(&to_map(&rev)).kernel();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn generalized_inverse_property(rows in arb_matrix()) {
            let m = to_map(&rows).scale(&rat(2, 3));
            let s = Elimination::of_rows(&m).partial_inverse();
            prop_assert_eq!(m.compose(&s).compose(&m), m);
        }
    }
}
