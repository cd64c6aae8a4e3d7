//! Sparse exact linear algebra over ℚ and ℚ(i).
//!
//! Everything reduces to one incremental echelon form ([`Echelon`]) that is
//! fraction-free on rational input: rows are kept as primitive integer vectors
//! and a new row is reduced by cross-multiplication against the stored rows.

mod echelon;
mod matrix;

pub use echelon::{Echelon, StreamingRank};
pub use matrix::{ExactMatrix, SparseVec};

use serde::{Deserialize, Serialize};

use crate::error::LinalgError;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankProfile {
    pub rank: usize,
    /// Sorted pivot columns; their count equals `rank`.
    pub pivots: Vec<usize>,
}

pub fn rank(m: &ExactMatrix) -> RankProfile {
    let mut ech = Echelon::new(m.ncols());
    for row in m.rows() {
        ech.insert(row.entries().to_vec());
        if ech.rank() == m.ncols() {
            break;
        }
    }
    ech.profile()
}

/// Rank of a stream of sparse rows, never holding more than `ncols` reduced rows.
///
/// Duplicate rows (up to a nonzero scalar) are skipped before reduction, and the
/// stream is abandoned early once the rank reaches `ncols`; row lengths are still
/// validated until then.
pub fn streaming_rank<I>(rows: I, ncols: usize) -> Result<usize, LinalgError>
where
    I: IntoIterator<Item = SparseVec>,
{
    let mut acc = StreamingRank::new(ncols);
    for row in rows {
        acc.push(row)?;
        if acc.is_full() {
            break;
        }
    }
    Ok(acc.rank())
}

/// A basis of the right kernel `{v : Mv = 0}`.
pub fn kernel_basis(m: &ExactMatrix) -> Vec<Vec<Scalar>> {
    let mut ech = Echelon::new(m.ncols());
    for row in m.rows() {
        ech.insert(row.entries().to_vec());
    }
    ech.kernel_basis()
        .into_iter()
        .map(|v| v.to_dense_in(m.field()))
        .collect()
}

/// One exact solution of `Ax = b`, or `None` when the system is inconsistent.
pub fn solve(a: &ExactMatrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
    if b.len() != a.nrows() {
        return Err(LinalgError::DimensionMismatch { expected: a.nrows(), found: b.len() });
    }
    let n = a.ncols();
    let mut ech = Echelon::with_pivot_limit(n + 1, n);
    for (row, rhs) in a.rows().iter().zip(b) {
        let mut entries = row.entries().to_vec();
        if !rhs.is_zero() {
            entries.push((n, rhs.clone()));
        }
        ech.insert(entries);
    }
    let field = b.iter().fold(a.field(), |f, s| f.join(s.field()));
    let mut x = vec![Scalar::zero().promote(field); n];
    for (row, &p) in ech.rows().iter().zip(ech.pivot_columns()) {
        if p == n {
            return Ok(None);
        }
        let lead = row.iter().find(|(c, _)| *c == p).map(|(_, v)| v).expect("pivot present");
        if let Some((_, rhs)) = row.iter().find(|(c, _)| *c == n) {
            x[p] = (rhs / lead).promote(field);
        }
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_dense(
            rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_rank() {
        assert_eq!(rank(&ExactMatrix::identity(3)).rank, 3);
        assert_eq!(rank(&ExactMatrix::identity(3)).pivots, vec![0, 1, 2]);
    }

    #[test]
    fn proportional_rows() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])).rank, 1);
    }

    #[test]
    fn streaming_powers_of_two() {
        let rows = (0..4).map(|e| {
            let s = Scalar::from_int(1 << e);
            SparseVec::from_dense(&[s.clone(), s, Scalar::zero()])
        });
        assert_eq!(streaming_rank(rows, 3).unwrap(), 1);
        assert_eq!(streaming_rank(std::iter::empty(), 3).unwrap(), 0);
    }

    #[test]
    fn streaming_rejects_wrong_length() {
        let rows = vec![SparseVec::from_dense(&[Scalar::one(), Scalar::one()])];
        assert_eq!(
            streaming_rank(rows, 3),
            Err(LinalgError::DimensionMismatch { expected: 3, found: 2 })
        );
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        assert_eq!(kernel_basis(&ExactMatrix::zeros(2, 3)).len(), 3);
        assert!(kernel_basis(&ExactMatrix::identity(4)).is_empty());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, -1, 2]]);
        let ker = kernel_basis(&a);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(a.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_cases() {
        let id = ExactMatrix::identity(2);
        let x = solve(&id, &[Scalar::from_int(1), Scalar::from_int(2)]).unwrap().unwrap();
        assert_eq!(x, vec![Scalar::from_int(1), Scalar::from_int(2)]);

        let a = m(&[&[1, 1]]);
        let x = solve(&a, &[Scalar::from_int(5)]).unwrap().unwrap();
        assert_eq!(&x[0] + &x[1], Scalar::from_int(5));

        let a = m(&[&[1], &[1]]);
        assert_eq!(solve(&a, &[Scalar::zero(), Scalar::one()]).unwrap(), None);

        assert!(solve(&a, &[Scalar::zero()]).is_err());
    }

    #[test]
    fn gaussian_rank() {
        // rows (1, i) and (i, -1) are proportional over Q(i)
        let i = Scalar::i();
        let a = ExactMatrix::from_dense(vec![
            vec![Scalar::one(), i.clone()],
            vec![i.clone(), Scalar::from_int(-1)],
        ])
        .unwrap();
        assert_eq!(rank(&a).rank, 1);
        let ker = kernel_basis(&a);
        assert_eq!(ker.len(), 1);
        assert!(a.mul_vec(&ker[0]).unwrap().iter().all(Scalar::is_zero));
    }
}
