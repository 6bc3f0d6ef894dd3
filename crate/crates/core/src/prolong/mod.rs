//! Spencer prolongation of constant-coefficient linear differential
//! equations, and the twistor equation on quaternionic Kähler manifolds.
//!
//! A symbol is a list of graded components `P_j: Sym^j V (x) E0 -> F`. The
//! tower of prolongations, the partial inverses `S^l`, the maps `I^{<=l}`
//! and the Spencer complex are built over exact rationals; the space of
//! polynomial solutions on the flat model serves as an independent check.

mod jets;
mod lemma;
mod solutions;
mod spencer;
mod symbol;
mod symtensor;
mod tower;

pub use jets::build_P_l;
pub use jets::{build_i_maps, IMaps, JetSpace};
pub use lemma::{
    expected_level_dim, expected_total_dim, flat_model_report, lemma_report, twistor_tower, verify_flat_model,
    verify_prolongation_lemma, FlatModelReport, LevelCheck, ProlongationLemmaReport,
};
pub use solutions::{jet_of_polynomial, jets_in_image, polynomial_equation, polynomial_solution_space};
pub use spencer::{spencer_exactness, spencer_map, SpencerCheck};
pub use symbol::{divergence_symbol, twistor_symbol, SymbolData, TwistorSymbolSpec};
pub use symtensor::{comultiplication, difference, iota, kron, sub_indices, MultiIndex, SymTensorSpace};
pub use tower::{
    equation_kernel, graded_block, level_map, prolong_level, prolongation_tower, ProlongationTower, Termination,
};
