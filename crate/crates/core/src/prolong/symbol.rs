use num_bigint::BigInt;
use num_traits::One;

use super::symtensor::SymTensorSpace;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::linalg::LinearMap;

/// A constant-coefficient linear equation `P(jet^{<=k} psi) = 0` for maps
/// `psi: V -> E0`, given by its graded components
/// `P_j: Sym^j V (x) E0 -> F`, `j = 0..=k`.
///
/// Component `j` has `dim F` rows and `dim Sym^j V * dim E0` columns, column
/// index `alpha_idx * dim E0 + e`. Component `k` is the principal part.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolData {
    v_dim: usize,
    e0_dim: usize,
    f_dim: usize,
    components: Vec<LinearMap>,
}

impl SymbolData {
    pub fn new(v_dim: usize, e0_dim: usize, f_dim: usize, components: Vec<LinearMap>) -> Result<Self> {
        if components.len() < 2 {
            return Err(Error::InvalidParameter("symbol needs order k >= 1".into()));
        }
        for (j, c) in components.iter().enumerate() {
            let cols = SymTensorSpace::expected_dim(v_dim, j) * e0_dim;
            if c.rows() != f_dim || c.cols() != cols {
                return Err(Error::InvalidParameter(format!(
                    "component {j} is {}x{}, expected {f_dim}x{cols}",
                    c.rows(),
                    c.cols()
                )));
            }
        }
        if components.iter().all(LinearMap::is_zero) {
            return Err(Error::InvalidParameter("symbol has no nonzero component".into()));
        }
        Ok(SymbolData {
            v_dim,
            e0_dim,
            f_dim,
            components,
        })
    }

    pub fn order(&self) -> usize {
        self.components.len() - 1
    }

    pub fn v_dim(&self) -> usize {
        self.v_dim
    }

    pub fn e0_dim(&self) -> usize {
        self.e0_dim
    }

    pub fn f_dim(&self) -> usize {
        self.f_dim
    }

    pub fn component(&self, j: usize) -> &LinearMap {
        &self.components[j]
    }

    /// `res P`, the component of top degree.
    pub fn principal(&self) -> &LinearMap {
        &self.components[self.order()]
    }
}

/// The first-order symbol `(h (x) e) (x) psi -> (h . psi) (x) e` of the
/// twistor operator on `Sym^{2r} H`, over a point of a quaternionic Kähler
/// manifold of quaternionic dimension `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwistorSymbolSpec {
    n: usize,
    r: usize,
}

impl TwistorSymbolSpec {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if n < 1 || r < 1 {
            return Err(Error::InvalidParameter(format!(
                "twistor symbol needs n >= 1 and r >= 1, got n={n}, r={r}"
            )));
        }
        Ok(TwistorSymbolSpec { n, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `dim H (x) E = 4n`; basis `h_a (x) e_i` at index `a * 2n + i`.
    pub fn v_dim(&self) -> usize {
        4 * self.n
    }

    /// `dim Sym^{2r} H = 2r + 1`.
    pub fn e0_dim(&self) -> usize {
        2 * self.r + 1
    }

    /// `dim Sym^{2r+1} H (x) E = (2r + 2) 2n`; index `mono_idx * 2n + i`.
    pub fn f_dim(&self) -> usize {
        (2 * self.r + 2) * 2 * self.n
    }
}

/// Builds the twistor symbol with the normalization constant fixed to one.
///
/// Sym^p H uses the divided-power basis `h^(a, b)`, so that
/// `h_0 . h^(a, b) = (a + 1) h^(a + 1, b)`.
pub fn twistor_symbol(spec: &TwistorSymbolSpec) -> SymbolData {
    let two_n = 2 * spec.n;
    let e0 = SymTensorSpace::new(2, 2 * spec.r);
    let f_sym = SymTensorSpace::new(2, 2 * spec.r + 1);
    let mut triplets = Vec::new();
    for a in 0..2usize {
        for i in 0..two_n {
            let v = a * two_n + i;
            for (p, mono) in e0.basis().iter().enumerate() {
                let mut raised = mono.clone();
                raised[a] += 1;
                let row = f_sym.index_of(&raised) * two_n + i;
                let col = v * e0.dim() + p;
                triplets.push((row, col, Rational::from_integer(BigInt::from(raised[a]))));
            }
        }
    }
    let principal = LinearMap::from_triplets(spec.f_dim(), spec.v_dim() * spec.e0_dim(), triplets);
    SymbolData::new(
        spec.v_dim(),
        spec.e0_dim(),
        spec.f_dim(),
        vec![LinearMap::zero(spec.f_dim(), spec.e0_dim()), principal],
    )
    .expect("twistor symbol dimensions are consistent")
}

/// `div psi = 0` for vector fields `psi: V -> V`; infinite type whenever
/// `dim V >= 2`.
pub fn divergence_symbol(v_dim: usize) -> Result<SymbolData> {
    if v_dim < 1 {
        return Err(Error::InvalidParameter("divergence symbol needs dim V >= 1".into()));
    }
    let one = Rational::one();
    let principal = LinearMap::from_triplets(1, v_dim * v_dim, (0..v_dim).map(|i| (0, i * v_dim + i, one.clone())));
    SymbolData::new(v_dim, v_dim, 1, vec![LinearMap::zero(1, v_dim), principal])
}
