use num_bigint::BigInt;
use num_traits::One;

use super::jets::{IMaps, JetSpace};
use super::symbol::SymbolData;
use super::symtensor::{difference, sub_indices, SymTensorSpace};
use crate::exact::{factorial, Rational};
use crate::linalg::{Elimination, LinearMap, SparseVec, SubspaceBasis};

/// `alpha! / (alpha - gamma)!`, the coefficient of `x^(alpha - gamma)` in
/// `d^gamma x^alpha`.
fn falling(alpha: &[u8], gamma: &[u8]) -> Rational {
    let mut acc = BigInt::one();
    for (&a, &g) in alpha.iter().zip(gamma) {
        for t in 0..g {
            acc *= BigInt::from(a - t);
        }
    }
    Rational::from_integer(acc)
}

/// The equation applied to a polynomial `psi = sum a_(alpha, e) x^alpha e`
/// of degree `<= degree_bound`, as a matrix from the coefficients `a`
/// (laid out like `J_{<=degree_bound}`) to the coefficients of the
/// resulting `F`-valued polynomial.
pub fn polynomial_equation(sym: &SymbolData, degree_bound: usize) -> LinearMap {
    let (d, e0, f) = (sym.v_dim(), sym.e0_dim(), sym.f_dim());
    let unknowns = JetSpace::new(d, e0, degree_bound);
    let values = JetSpace::new(d, f, degree_bound);
    let p_cols: Vec<Vec<SparseVec>> = (0..=sym.order()).map(|j| sym.component(j).columns()).collect();
    let mut triplets = Vec::new();
    for m in 0..=degree_bound {
        let piece = unknowns.piece(m);
        for alpha in piece.basis() {
            for (j, cols) in p_cols.iter().enumerate().take(sym.order().min(m) + 1) {
                let part = SymTensorSpace::new(d, j);
                for gamma in sub_indices(alpha, j) {
                    let coeff = falling(alpha, &gamma);
                    let rest = difference(alpha, &gamma);
                    let g_idx = part.index_of(&gamma);
                    for e in 0..e0 {
                        let col = unknowns.index_of(alpha, e);
                        for (fi, v) in cols[g_idx * e0 + e].entries() {
                            triplets.push((values.index_of(&rest, *fi), col, v * &coeff));
                        }
                    }
                }
            }
        }
    }
    LinearMap::from_triplets(values.dim(), unknowns.dim(), triplets)
}

/// Polynomial solutions `psi: V -> E0` of degree `<= degree_bound`, in the
/// monomial coefficients `x^alpha e` laid out like `J_{<=degree_bound}`.
pub fn polynomial_solution_space(sym: &SymbolData, degree_bound: usize) -> SubspaceBasis {
    polynomial_equation(sym, degree_bound).kernel()
}

/// `jet^{<=m} psi(0)` of a polynomial given by monomial coefficients on
/// `J_{<=degree_bound}`: `c_alpha = alpha! a_alpha`, zero above the degree.
pub fn jet_of_polynomial(sym: &SymbolData, degree_bound: usize, coefficients: &SparseVec, m: usize) -> SparseVec {
    let e0 = sym.e0_dim();
    let src = JetSpace::new(sym.v_dim(), e0, degree_bound);
    let dst = JetSpace::new(sym.v_dim(), e0, m);
    SparseVec::from_pairs(coefficients.entries().iter().filter_map(|(idx, a)| {
        let degree = (0..=degree_bound).find(|&j| src.range(j).contains(idx))?;
        if degree > m {
            return None;
        }
        let local = idx - src.range(degree).start;
        let alpha = &src.piece(degree).basis()[local / e0];
        let weight: BigInt = alpha.iter().map(|&x| factorial(u32::from(x))).product();
        Some((dst.index_of(alpha, local % e0), a * Rational::from_integer(weight)))
    }))
}

/// Whether the `(k+l)`-jets of all given solutions lie in the image of `I^{<=l}`.
pub fn jets_in_image(
    sym: &SymbolData,
    solutions: &SubspaceBasis,
    degree_bound: usize,
    i_maps: &IMaps,
    l: usize,
) -> bool {
    let image = i_maps.map(l);
    let mut span = Elimination::new(image.rows());
    for c in image.columns() {
        span.push_row(&c);
    }
    solutions
        .vectors()
        .iter()
        .all(|s| span.row_space_contains(&jet_of_polynomial(sym, degree_bound, s, sym.order() + l)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::prolong::jets::build_i_maps;
    use crate::prolong::symbol::{twistor_symbol, TwistorSymbolSpec};
    use crate::prolong::tower::prolongation_tower;

    fn twistor(n: usize, r: usize) -> SymbolData {
        twistor_symbol(&TwistorSymbolSpec::new(n, r).unwrap())
    }

    #[test]
    fn constants_solve_an_equation_without_zeroth_order_part() {
        assert_eq!(polynomial_solution_space(&twistor(1, 1), 0).dim(), 3);
        assert_eq!(polynomial_solution_space(&twistor(2, 3), 0).dim(), 7);
    }

    #[test]
    fn small_twistor_solution_dimensions() {
        let s = twistor(1, 1);
        assert_eq!(polynomial_solution_space(&s, 3).dim(), 10);
        assert_eq!(polynomial_solution_space(&s, 4).dim(), 10);
        assert_eq!(polynomial_solution_space(&twistor(1, 2), 5).dim(), 35);
    }

    #[test]
    fn ode_with_exponential_solutions_has_no_polynomial_ones() {
        let p0 = LinearMap::from_dense(&[vec![int(-1)]]);
        let p1 = LinearMap::from_dense(&[vec![int(1)]]);
        let s = SymbolData::new(1, 1, 1, vec![p0, p1]).unwrap();
        assert_eq!(polynomial_solution_space(&s, 6).dim(), 0);
    }

    #[test]
    fn second_derivative_on_the_line() {
        // psi'' = 0: solutions 1, x
        let p2 = LinearMap::from_dense(&[vec![int(1)]]);
        let s = SymbolData::new(1, 1, 1, vec![LinearMap::zero(1, 1), LinearMap::zero(1, 1), p2]).unwrap();
        let sols = polynomial_solution_space(&s, 4);
        assert_eq!(sols.dim(), 2);
        let t = prolongation_tower(&s, 3).unwrap();
        assert_eq!(t.total_dim(), Some(2));
    }

    #[test]
    fn jets_scale_by_factorials() {
        let s = twistor(1, 1);
        // x_0^2 h^(2,0): coefficient index of alpha = (2,0,0,0), e = 0
        let src = JetSpace::new(4, 3, 2);
        let idx = src.index_of(&[2, 0, 0, 0], 0);
        let jet = jet_of_polynomial(&s, 2, &SparseVec::unit(idx), 2);
        assert_eq!(jet.entries(), &[(idx, int(2))]);
        assert!(jet_of_polynomial(&s, 2, &SparseVec::unit(idx), 1).is_zero());
    }

    #[test]
    fn solution_jets_are_reached_by_the_i_maps() {
        let s = twistor(1, 1);
        let t = prolongation_tower(&s, 4).unwrap();
        let i = build_i_maps(&t, 2).unwrap();
        let sols = polynomial_solution_space(&s, 3);
        for l in 0..=2 {
            assert!(jets_in_image(&s, &sols, 3, &i, l), "l={l}");
        }
    }
}
