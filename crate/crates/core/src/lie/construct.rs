use super::operators::basis_vec;
use super::StructureConstants;
use crate::error::{LieError, LinalgError};
use crate::linalg::{ExactMatrix, SparseVec};
use crate::scalar::Scalar;

/// Rewrites `μ` in a new basis.
///
/// Column `j` of `p` holds the new basis vector `e'_j` in old coordinates; the
/// result is `[e'_i, e'_j] = P⁻¹ μ(P e_i, P e_j)`, i.e. the action
/// `g·μ = g μ(g⁻¹·, g⁻¹·)` with `g = P⁻¹`.
pub fn change_basis(mu: &StructureConstants, p: &ExactMatrix) -> Result<StructureConstants, LieError> {
    let n = mu.dim();
    if p.nrows() != n || p.ncols() != n {
        return Err(LieError::DimensionMismatch { expected: n, found: p.nrows().max(p.ncols()) });
    }
    let pinv = p.inverse().map_err(|e| match e {
        LinalgError::Singular => LieError::SingularBasis,
        LinalgError::DimensionMismatch { expected, found } => LieError::DimensionMismatch { expected, found },
    })?;
    let cols: Vec<Vec<Scalar>> = p.transpose().to_dense();
    let mut out = StructureConstants::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            let v = mu.bracket(&cols[i], &cols[j])?;
            let w = pinv.mul_vec(&v).expect("square");
            out.set_bracket(i, j, SparseVec::from_dense(&w));
        }
    }
    Ok(out)
}

/// Matrix whose columns are the given vectors.
pub fn basis_matrix(columns: &[Vec<Scalar>]) -> Result<ExactMatrix, LieError> {
    let n = columns.len();
    if let Some(c) = columns.iter().find(|c| c.len() != n) {
        return Err(LieError::DimensionMismatch { expected: n, found: c.len() });
    }
    let rows: Vec<Vec<Scalar>> = (0..n).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    ExactMatrix::from_dense(rows).map_err(|_| LieError::DimensionMismatch { expected: n, found: 0 })
}

/// `μ₁ ⊕ μ₂` with the basis of `μ₁` first.
pub fn direct_sum(a: &StructureConstants, b: &StructureConstants) -> StructureConstants {
    let shift = a.dim();
    let entries = a
        .entries()
        .map(|(i, j, k, c)| (i, j, k, c.clone()))
        .chain(b.entries().map(|(i, j, k, c)| (i + shift, j + shift, k + shift, c.clone())))
        .collect::<Vec<_>>();
    StructureConstants::from_entries(a.dim() + b.dim(), entries).expect("indices in range")
}

/// Abelian algebra of dimension `n`.
pub fn abelian(n: usize) -> StructureConstants {
    StructureConstants::zero(n)
}

/// Checks `D[x, y] = [Dx, y] + [x, Dy]` on basis pairs; `d[r][c]` is the `e_r` coefficient of `D e_c`.
pub fn is_derivation(mu: &StructureConstants, d: &ExactMatrix) -> bool {
    let n = mu.dim();
    if d.nrows() != n || d.ncols() != n {
        return false;
    }
    let cols = d.transpose().to_dense();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = d.mul_vec(&mu.basis_bracket(i, j).to_dense()).expect("square");
            let a = mu.bracket(&cols[i], &basis_vec(n, j)).expect("dims");
            let b = mu.bracket(&basis_vec(n, i), &cols[j]).expect("dims");
            if lhs.iter().zip(a.iter().zip(&b)).any(|(l, (x, y))| !l.value_eq(&(x + y))) {
                return false;
            }
        }
    }
    true
}

/// `ℝD ⋉ μ`: a new first basis vector `e₀` with `[e₀, x] = Dx`; old indices shift by one.
pub fn semidirect_by_derivation(mu: &StructureConstants, d: &ExactMatrix) -> Result<StructureConstants, LieError> {
    if !is_derivation(mu, d) {
        return Err(LieError::NotDerivation);
    }
    let n = mu.dim();
    let mut entries: Vec<_> = mu.entries().map(|(i, j, k, c)| (i + 1, j + 1, k + 1, c.clone())).collect();
    for (r, row) in d.rows().iter().enumerate() {
        for (c, v) in row.entries() {
            entries.push((0, c + 1, r + 1, v.clone()));
        }
    }
    StructureConstants::from_entries(n + 1, entries)
}

/// Heisenberg algebra `h_m` in the basis `x₁…x_m, y₁…y_m, z` with `[x_i, y_i] = z`.
pub fn heisenberg(m: usize) -> StructureConstants {
    assert!(m >= 1);
    let z = 2 * m;
    let entries: Vec<_> = (0..m).map(|i| (i, m + i, z, Scalar::one())).collect();
    StructureConstants::from_entries(2 * m + 1, entries).expect("in range")
}

/// The derivation of `h_m` with `D x_i = x_{i+1}` and `D y_i = −y_{i−1}`.
pub fn heisenberg_shift_derivation(m: usize) -> ExactMatrix {
    let n = 2 * m + 1;
    let mut rows = vec![Vec::new(); n];
    for i in 0..m.saturating_sub(1) {
        rows[i + 1].push((i, Scalar::one()));
    }
    for i in 1..m {
        rows[m + i - 1].push((m + i, Scalar::from_int(-1)));
    }
    let rows = rows.into_iter().map(|e| SparseVec::from_entries(n, e).expect("in range")).collect();
    ExactMatrix::from_rows(n, rows).expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{nil_index, parse_table_str};

    #[test]
    fn identity_change_of_basis() {
        let mu = parse_table_str("ab = c, ac = d", 4).unwrap();
        let out = change_basis(&mu, &ExactMatrix::identity(4)).unwrap();
        assert!(out.table_eq(&mu));
    }

    #[test]
    fn singular_basis_rejected() {
        let mu = parse_table_str("ab = c", 3).unwrap();
        assert_eq!(change_basis(&mu, &ExactMatrix::zeros(3, 3)).unwrap_err(), LieError::SingularBasis);
    }

    #[test]
    fn sums_with_abelian() {
        let s = direct_sum(&abelian(0), &abelian(0));
        assert!(s.is_abelian());
        let f3 = parse_table_str("ab = c", 3).unwrap();
        let s = direct_sum(&f3, &abelian(2));
        assert_eq!(s.dim(), 5);
        assert_eq!(nil_index(&s).unwrap(), Some(2));
    }

    #[test]
    fn zero_derivation_adds_abelian_factor() {
        let h = heisenberg(1);
        let ext = semidirect_by_derivation(&h, &ExactMatrix::zeros(3, 3)).unwrap();
        let expected = direct_sum(&abelian(1), &h);
        assert!(ext.table_eq(&expected));
    }

    #[test]
    fn non_derivation_rejected() {
        let h = heisenberg(1);
        // D = identity is not a derivation of h_1: D[x,y] = z but [Dx,y] + [x,Dy] = 2z
        assert_eq!(
            semidirect_by_derivation(&h, &ExactMatrix::identity(3)).unwrap_err(),
            LieError::NotDerivation
        );
    }

    #[test]
    fn heisenberg_one_is_f3() {
        assert!(heisenberg(1).table_eq(&parse_table_str("ab = c", 3).unwrap()));
    }
}
