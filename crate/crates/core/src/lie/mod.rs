//! Structure constants, the operators `J`, `N_k`, `SN_k`, series, constructions
//! and the structure-table notation `ab = c`.

mod construct;
mod expr;
pub mod json;
mod operators;
mod series;
mod structure;
mod table;

pub use construct::{
    abelian, basis_matrix, change_basis, direct_sum, heisenberg, heisenberg_shift_derivation, is_derivation,
    semidirect_by_derivation,
};
pub use expr::{parse_expr, SymMonomial, SymPoly};
pub use operators::{is_lie, jacobi, n_k, nilpotency_step, sn_k, Tensor};
pub(crate) use operators::{basis_vec, bracket_right, bracket_vv, is_zero_vec};
pub use series::{center, derived_series, lower_central_series, nil_index, solvable_length, Subspace};
pub use structure::{letter, pair_index, pairs, render_vector, BracketMismatch, StructureConstants, TwoCochain};
pub use table::{default_letters, parse_table, parse_table_str, ParametricTable, TableText};
