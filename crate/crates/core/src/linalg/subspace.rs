use super::{Elimination, LinearMap, SparseVec};

/// A list of linearly independent vectors spanning a subspace of `Q^ambient`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    vectors: Vec<SparseVec>,
}

impl SubspaceBasis {
    pub fn new(ambient: usize, vectors: Vec<SparseVec>) -> Self {
        SubspaceBasis { ambient, vectors }
    }

    pub fn zero(ambient: usize) -> Self {
        Self::new(ambient, Vec::new())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[SparseVec] {
        &self.vectors
    }

    /// Inclusion map `Q^dim -> Q^ambient` (basis vectors as columns).
    pub fn inclusion(&self) -> LinearMap {
        LinearMap::from_columns(self.ambient, &self.vectors)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut e = Elimination::new(self.ambient);
        for b in &self.vectors {
            e.push_row(b);
        }
        e.row_space_contains(v)
    }
}
