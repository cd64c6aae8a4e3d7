//! The ideals `I_{n,k}` cut out by `J` and `N_k` in the upper-triangular chart,
//! membership certificates and small Gröbner bases.

mod generators;
mod groebner;
mod membership;
mod poly;
pub mod reference;

pub use generators::{eval_at, generators, ideal, operator_polys, same_up_to_scalar, Generator, IdealPresentation, Kind};
pub use groebner::{groebner_small, non_membership, normal_form, GroebnerCaps, NonMembership};
pub use membership::{member_bounded, MembershipCertificate, MAX_UNKNOWNS};
pub use poly::{Monomial, MonomialOrder, MultiPoly, Var};
