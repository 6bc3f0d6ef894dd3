use serde::Serialize;

use super::jets::build_i_maps;
use super::solutions::{jets_in_image, polynomial_solution_space};
use super::spencer::{spencer_exactness, SpencerCheck};
use super::symbol::{twistor_symbol, TwistorSymbolSpec};
use super::tower::{prolongation_tower, ProlongationTower, Termination};
use crate::error::Result;
use crate::exact::binomial_int;

/// `dim Sym^{2r-l-1} H (x) Sym^{l+1} E = (2r - l) C(2n + l, l + 1)`, zero from `l = 2r` on.
pub fn expected_level_dim(n: usize, r: usize, l: usize) -> usize {
    if l >= 2 * r {
        return 0;
    }
    let b = binomial_int((2 * n + l) as i64, (l + 1) as u32);
    (2 * r - l) * usize::try_from(b).expect("fits")
}

/// `dim Sym^{2r}(H (+) E) = C(2n + 1 + 2r, 2n + 1)`.
pub fn expected_total_dim(n: usize, r: usize) -> usize {
    usize::try_from(binomial_int((2 * n + 1 + 2 * r) as i64, (2 * n + 1) as u32)).expect("fits")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelCheck {
    pub level: usize,
    pub computed: usize,
    pub expected: usize,
}

impl LevelCheck {
    pub fn passed(&self) -> bool {
        self.computed == self.expected
    }
}

/// Computed prolongation dimensions of the twistor equation against the
/// closed formula, with Spencer exactness at every computed level.
#[derive(Clone, Debug)]
pub struct ProlongationLemmaReport {
    pub n: usize,
    pub r: usize,
    pub levels: Vec<LevelCheck>,
    pub termination: Termination,
    pub equation_kernel_dim: usize,
    pub total_dim: Option<usize>,
    pub expected_total_dim: usize,
    pub spencer: Vec<SpencerCheck>,
}

impl ProlongationLemmaReport {
    pub fn levels_pass(&self) -> bool {
        self.levels.len() == 2 * self.r + 1 && self.levels.iter().all(LevelCheck::passed)
    }

    pub fn termination_pass(&self) -> bool {
        self.termination == Termination::Terminated { degree: 2 * self.r - 1 }
    }

    pub fn total_pass(&self) -> bool {
        self.total_dim == Some(self.expected_total_dim)
    }

    pub fn spencer_pass(&self) -> bool {
        !self.spencer.is_empty() && self.spencer.iter().all(SpencerCheck::exact)
    }

    pub fn passed(&self) -> bool {
        self.levels_pass() && self.termination_pass() && self.total_pass() && self.spencer_pass()
    }
}

pub fn twistor_tower(n: usize, r: usize) -> Result<ProlongationTower> {
    let sym = twistor_symbol(&TwistorSymbolSpec::new(n, r)?);
    prolongation_tower(&sym, 2 * r)
}

pub fn verify_prolongation_lemma(n: usize, r: usize) -> Result<ProlongationLemmaReport> {
    let tower = twistor_tower(n, r)?;
    lemma_report(&tower, n, r)
}

pub fn lemma_report(tower: &ProlongationTower, n: usize, r: usize) -> Result<ProlongationLemmaReport> {
    let levels = tower
        .level_dims()
        .into_iter()
        .enumerate()
        .map(|(l, computed)| LevelCheck {
            level: l,
            computed,
            expected: expected_level_dim(n, r, l),
        })
        .collect();
    let checkable = |l: usize| tower.level(l + 1).is_some() || tower.level(l).is_some_and(|b| b.dim() == 0);
    let spencer = (0..tower.computed_levels())
        .filter(|&l| checkable(l))
        .map(|l| spencer_exactness(tower, l))
        .collect::<Result<Vec<_>>>()?;
    Ok(ProlongationLemmaReport {
        n,
        r,
        levels,
        termination: tower.termination(),
        equation_kernel_dim: tower.equation_kernel().dim(),
        total_dim: tower.total_dim(),
        expected_total_dim: expected_total_dim(n, r),
        spencer,
    })
}

/// The `I^{<=l}` construction and the polynomial-solution oracle on the flat
/// model.
#[derive(Clone, Debug)]
pub struct FlatModelReport {
    pub n: usize,
    pub r: usize,
    /// `(rank I^{<=l}, dim A^{<=l})` for `l = 0..=d`.
    pub i_map_ranks: Vec<(usize, usize)>,
    pub generalized_inverse: bool,
    pub unitriangular: bool,
    /// `(degree bound, dim of polynomial solutions)` at `k + d` and `k + d + 1`.
    pub solution_dims: Vec<(usize, usize)>,
    pub jets_in_image: bool,
    pub total_dim: usize,
}

impl FlatModelReport {
    pub fn stationary(&self) -> bool {
        self.solution_dims.windows(2).all(|w| w[0].1 == w[1].1)
    }

    pub fn bound_holds(&self) -> bool {
        self.solution_dims.iter().all(|(_, s)| *s <= self.total_dim)
    }

    pub fn equality_observed(&self) -> bool {
        self.solution_dims.iter().all(|(_, s)| *s == self.total_dim)
    }

    pub fn passed(&self) -> bool {
        self.i_map_ranks.iter().all(|(a, b)| a == b)
            && self.generalized_inverse
            && self.unitriangular
            && self.jets_in_image
            && self.stationary()
            && self.bound_holds()
    }
}

pub fn verify_flat_model(n: usize, r: usize) -> Result<FlatModelReport> {
    let tower = twistor_tower(n, r)?;
    flat_model_report(&tower, n, r)
}

pub fn flat_model_report(tower: &ProlongationTower, n: usize, r: usize) -> Result<FlatModelReport> {
    let sym = tower.symbol();
    let Some(d) = tower.termination().degree() else {
        return Err(crate::Error::InvalidParameter(format!(
            "twistor tower for n={n}, r={r} did not terminate"
        )));
    };
    let k = sym.order();
    let i_maps = build_i_maps(tower, d)?;
    let i_map_ranks = i_maps
        .ranks()
        .into_iter()
        .enumerate()
        .map(|(l, rank)| (rank, tower.dim_up_to(l).expect("terminated")))
        .collect();
    let bound = k + d;
    let solutions = polynomial_solution_space(sym, bound);
    let next = polynomial_solution_space(sym, bound + 1).dim();
    Ok(FlatModelReport {
        n,
        r,
        i_map_ranks,
        generalized_inverse: i_maps.generalized_inverse_checks().iter().all(|&b| b),
        unitriangular: i_maps.unitriangular(),
        solution_dims: vec![(bound, solutions.dim()), (bound + 1, next)],
        jets_in_image: jets_in_image(sym, &solutions, bound, &i_maps, d),
        total_dim: tower.total_dim().expect("terminated"),
    })
}
