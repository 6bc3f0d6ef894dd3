use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::exact::Rational;

/// Sparse vector: strictly increasing indices, no explicit zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    /// Accumulates duplicate indices and drops zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, v) in pairs {
            *acc.entry(i).or_insert_with(Rational::zero) += v;
        }
        SparseVec {
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec {
            entries: vec![(i, Rational::from_integer(1.into()))],
        }
    }

    pub(crate) fn from_sorted_unchecked(entries: Vec<(usize, Rational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        SparseVec { entries }
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Rational)> {
        self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Rational, other: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(
            self.entries
                .iter()
                .cloned()
                .chain(other.entries.iter().map(|(i, v)| (*i, v * c))),
        )
    }

    pub fn dot_dense(&self, dense: &[Rational]) -> Rational {
        self.entries
            .iter()
            .filter(|(i, _)| !dense[*i].is_zero())
            .fold(Rational::zero(), |acc, (i, v)| acc + v * &dense[*i])
    }

    /// Re-indexes through `f`; the map must be strictly increasing on the support.
    pub fn reindex(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().map(|(i, v)| (f(*i), v.clone())))
    }
}

/// An exact rational matrix `rows x cols`, stored row-sparse.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl LinearMap {
    pub fn zero(rows: usize, cols: usize) -> Self {
        LinearMap {
            rows,
            cols,
            data: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap {
            rows: n,
            cols: n,
            data: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.entries().last().is_none_or(|(j, _)| *j < cols)));
        LinearMap {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Self {
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); rows];
        for (i, j, v) in triplets {
            assert!(i < rows && j < cols, "entry ({i},{j}) outside {rows}x{cols}");
            buckets[i].push((j, v));
        }
        LinearMap {
            rows,
            cols,
            data: buckets.into_iter().map(SparseVec::from_pairs).collect(),
        }
    }

    /// Builds from column vectors.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        Self::from_triplets(
            rows,
            columns.len(),
            columns
                .iter()
                .enumerate()
                .flat_map(|(j, c)| c.entries().iter().map(move |(i, v)| (*i, j, v.clone()))),
        )
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        LinearMap {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| SparseVec::from_dense(r)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn row_vecs(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SparseVec::is_zero)
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.data[i].get(j)
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.data.iter().map(|r| r.to_dense(self.cols)).collect()
    }

    pub fn transpose(&self) -> LinearMap {
        LinearMap::from_triplets(
            self.cols,
            self.rows,
            self.data
                .iter()
                .enumerate()
                .flat_map(|(i, r)| r.entries().iter().map(move |(j, v)| (*j, i, v.clone()))),
        )
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        let dense = x.to_dense(self.cols);
        SparseVec::from_pairs(self.data.iter().enumerate().map(|(i, r)| (i, r.dot_dense(&dense))))
    }

    /// Matrix product `self * rhs`, i.e. the map "`rhs` first, then `self`".
    pub fn compose(&self, rhs: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in compose");
        let data = self
            .data
            .iter()
            .map(|r| {
                SparseVec::from_pairs(
                    r.entries()
                        .iter()
                        .flat_map(|(k, a)| rhs.data[*k].entries().iter().map(move |(j, b)| (*j, a * b))),
                )
            })
            .collect();
        LinearMap {
            rows: self.rows,
            cols: rhs.cols,
            data,
        }
    }

    pub fn scale(&self, c: &Rational) -> LinearMap {
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| r.scale(c)).collect(),
        }
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.axpy(&Rational::from_integer(1.into()), b))
                .collect(),
        }
    }

    /// Restricts the domain to the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> LinearMap {
        let mut position = vec![usize::MAX; self.cols];
        for (k, c) in cols.iter().enumerate() {
            position[*c] = k;
        }
        LinearMap {
            rows: self.rows,
            cols: cols.len(),
            data: self
                .data
                .iter()
                .map(|r| {
                    SparseVec::from_pairs(
                        r.entries()
                            .iter()
                            .filter(|(j, _)| position[*j] != usize::MAX)
                            .map(|(j, v)| (position[*j], v.clone())),
                    )
                })
                .collect(),
        }
    }

    /// Rows of `self` followed by rows of `lower`.
    pub fn vstack(&self, lower: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, lower.cols);
        let mut data = self.data.clone();
        data.extend(lower.data.iter().cloned());
        LinearMap {
            rows: self.rows + lower.rows,
            cols: self.cols,
            data,
        }
    }

    /// Columns of `self` followed by columns of `right`.
    pub fn hstack(&self, right: &LinearMap) -> LinearMap {
        assert_eq!(self.rows, right.rows);
        let shift = self.cols;
        LinearMap {
            rows: self.rows,
            cols: self.cols + right.cols,
            data: self
                .data
                .iter()
                .zip(&right.data)
                .map(|(a, b)| {
                    let mut e = a.entries().to_vec();
                    e.extend(b.entries().iter().map(|(j, v)| (j + shift, v.clone())));
                    SparseVec::from_sorted_unchecked(e)
                })
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        super::Elimination::of_rows(self).rank()
    }

    pub fn kernel(&self) -> super::SubspaceBasis {
        super::Elimination::of_rows(self).kernel()
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearMap({}x{}, nnz={})", self.rows, self.cols, self.nnz())
    }
}
