//! Deformation cohomology from ranks of the differentials at `μ`.
//!
//! `H²_{k-nil} = (Ker d² ∩ Ker dN_k) / Im d¹`, so with `z` the dimension of the
//! kernel intersection and `b = rank d¹` the quotient has dimension `z − b`.

mod differentials;
mod exactness;

pub use differentials::{
    cochain_dim, d1_matrix, d2_matrix, dj_matrix, dnk_apply, dnk_matrix, dnk_rows, dsnk_apply, dsnk_matrix, dsnk_rows,
};
pub use exactness::{augmented_exactness, default_samples, Constraint, ExactnessReport};

use serde::Serialize;

use crate::error::CohomologyError;
use crate::lie::{is_lie, n_k, StructureConstants};
use crate::linalg::{rank, streaming_rank, SparseVec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub algebra: Option<String>,
    pub n: usize,
    /// `None` for the ordinary adjoint `H²`.
    pub k: Option<usize>,
    pub z: usize,
    pub b: usize,
    pub h: usize,
    pub rigid_certificate: bool,
    pub orbit_dim: usize,
}

impl CohomologyReport {
    fn new(mu: &StructureConstants, k: Option<usize>, z: usize, b: usize) -> Self {
        debug_assert!(b <= z);
        CohomologyReport {
            algebra: mu.name().map(str::to_string),
            n: mu.dim(),
            k,
            z,
            b,
            h: z - b,
            rigid_certificate: z == b,
            orbit_dim: b,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// `dim Ker d²` stacked with extra rows, i.e. `C(n,2)·n − rank`.
fn kernel_dim<I: IntoIterator<Item = SparseVec>>(mu: &StructureConstants, extra: I) -> usize {
    let ncols = cochain_dim(mu.dim());
    let d2 = d2_matrix(mu);
    let rows = d2.rows().iter().cloned().chain(extra);
    ncols - streaming_rank(rows, ncols).expect("rows have cochain width")
}

/// `dim Der(μ) = dim Ker d¹`.
pub fn derivation_dim(mu: &StructureConstants) -> usize {
    let n = mu.dim();
    n * n - rank(&d1_matrix(mu)).rank
}

/// Dimension of the `GL(n)` orbit, `n² − dim Der(μ) = rank d¹`.
pub fn orbit_dim(mu: &StructureConstants) -> usize {
    rank(&d1_matrix(mu)).rank
}

/// `H²_{k-nil}(g, g)`; `h = 0` certifies rigidity in `N_{n,k}`.
pub fn h2_knil(mu: &StructureConstants, k: usize) -> Result<CohomologyReport, CohomologyError> {
    if !is_lie(mu) || !n_k(mu, k).is_zero() {
        return Err(CohomologyError::NotInVariety(mu.name().unwrap_or("input").to_string(), k));
    }
    let z = kernel_dim(mu, dnk_rows(mu, k));
    Ok(CohomologyReport::new(mu, Some(k), z, orbit_dim(mu)))
}

/// The ordinary adjoint `H²(g, g)`.
pub fn h2_dim(mu: &StructureConstants) -> Result<CohomologyReport, CohomologyError> {
    if !is_lie(mu) {
        return Err(CohomologyError::NotLie);
    }
    let z = kernel_dim(mu, std::iter::empty());
    Ok(CohomologyReport::new(mu, None, z, orbit_dim(mu)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::parse_table_str;

    #[test]
    fn abelian_reports() {
        let z = StructureConstants::zero(2);
        let r = h2_dim(&z).unwrap();
        assert_eq!((r.z, r.b, r.h), (2, 0, 2));
        let z3 = StructureConstants::zero(3);
        let r = h2_knil(&z3, 2).unwrap();
        assert_eq!((r.z, r.b, r.h), (9, 0, 9));
        assert_eq!(derivation_dim(&z3), 9);
    }

    #[test]
    fn rejects_points_outside_the_variety() {
        let f4 = parse_table_str("ab = c, ac = d", 4).unwrap();
        assert!(matches!(h2_knil(&f4, 2), Err(CohomologyError::NotInVariety(_, 2))));
        let bad = parse_table_str("ab = c, cd = e", 5).unwrap();
        assert_eq!(h2_dim(&bad).unwrap_err(), CohomologyError::NotLie);
    }

    #[test]
    fn g53_three_nil() {
        let mu = parse_table_str("ab = d, ad = e, bc = e", 5).unwrap();
        let r = h2_knil(&mu, 3).unwrap();
        assert_eq!((r.z, r.b, r.h), (17, 15, 2));
    }

    #[test]
    fn report_json_fields() {
        let mu = parse_table_str("ab = c", 3).unwrap().with_name("f3");
        let json = h2_knil(&mu, 2).unwrap().to_json();
        assert!(json.starts_with(r#"{"algebra":"f3","n":3,"k":2,"#));
        assert!(json.contains(r#""rigid_certificate":true"#));
    }
}
