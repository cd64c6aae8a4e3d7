use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{RankProfile, SparseVec};
use crate::error::LinalgError;
use crate::scalar::Scalar;

type Row = Vec<(usize, Scalar)>;

/// `alpha * x + beta * y` on sorted sparse rows.
fn lincomb(alpha: &Scalar, x: &[(usize, Scalar)], beta: &Scalar, y: &[(usize, Scalar)]) -> Row {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, alpha * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, beta * &y[j].1));
            j += 1;
        } else {
            let v = &(alpha * &x[i].1) + &(beta * &y[j].1);
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn coeff(row: &[(usize, Scalar)], col: usize) -> Option<&Scalar> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|pos| &row[pos].1)
}

/// Scales a row to a canonical representative of its line.
///
/// Rational rows become primitive integer vectors with a positive leading
/// entry; Gaussian rows get leading entry 1.
pub(crate) fn normalize(row: &mut Row) {
    let Some((_, lead)) = row.first() else { return };
    let rational: Option<Vec<&BigRational>> = row
        .iter()
        .map(|(_, v)| match v {
            Scalar::Rational(r) => Some(r),
            Scalar::Gaussian(..) => None,
        })
        .collect();
    match rational {
        Some(vals) => {
            let lcm = vals.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            let ints: Vec<BigInt> = vals.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
            let mut g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
            if ints[0].is_negative() {
                g = -g;
            }
            for ((_, v), n) in row.iter_mut().zip(ints) {
                *v = Scalar::Rational(BigRational::from_integer(n / &g));
            }
        }
        None => {
            let inv = lead.inv().expect("stored entries are nonzero");
            for (_, v) in row.iter_mut() {
                *v = &*v * &inv;
            }
        }
    }
}

/// Incremental, fully reduced row echelon form.
///
/// Every stored row is zero in the pivot columns of all other stored rows, so
/// an incoming row is reduced in a single pass. Pivots are chosen by minimal
/// bit size among the admissible columns (ties broken by column index).
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    pivot_limit: usize,
    rows: Vec<Row>,
    pivots: Vec<usize>,
    owner: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self::with_pivot_limit(ncols, ncols)
    }

    /// Columns `>= limit` only become pivots when a row has nothing else left.
    pub fn with_pivot_limit(ncols: usize, limit: usize) -> Self {
        Echelon { ncols, pivot_limit: limit, rows: Vec::new(), pivots: Vec::new(), owner: vec![None; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    pub fn profile(&self) -> RankProfile {
        let mut pivots = self.pivots.clone();
        pivots.sort_unstable();
        RankProfile { rank: pivots.len(), pivots }
    }

    /// Reduces `row` against the stored rows; the result is zero iff `row` is in their span.
    pub fn reduce(&self, mut row: Row) -> Row {
        let hits: Vec<usize> = row.iter().filter_map(|(c, _)| self.owner[*c]).collect();
        for (step, r) in hits.into_iter().enumerate() {
            let p = self.pivots[r];
            let Some(x) = coeff(&row, p).cloned() else { continue };
            let stored = &self.rows[r];
            let lead = coeff(stored, p).expect("pivot entry");
            row = lincomb(lead, &row, &(-&x), stored);
            if step % 8 == 7 {
                normalize(&mut row);
            }
        }
        normalize(&mut row);
        row
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn insert(&mut self, row: Row) -> bool {
        debug_assert!(row.iter().all(|(c, v)| *c < self.ncols && !v.is_zero()));
        let row = self.reduce(row);
        self.insert_reduced(row)
    }

    fn insert_reduced(&mut self, row: Row) -> bool {
        if row.is_empty() {
            return false;
        }
        let limit = self.pivot_limit;
        let pick = |admissible: &dyn Fn(usize) -> bool| {
            row.iter()
                .filter(|(c, _)| admissible(*c))
                .min_by_key(|(c, v)| (v.bit_size(), *c))
                .map(|(c, _)| *c)
        };
        let p = pick(&|c| c < limit).or_else(|| pick(&|_| true)).expect("nonempty row");
        let lead = coeff(&row, p).expect("pivot").clone();
        for stored in &mut self.rows {
            if let Some(x) = coeff(stored, p).cloned() {
                let mut next = lincomb(&lead, stored, &(-&x), &row);
                normalize(&mut next);
                *stored = next;
            }
        }
        self.owner[p] = Some(self.rows.len());
        self.pivots.push(p);
        self.rows.push(row);
        true
    }

    /// Basis of `{v : row · v = 0 for every stored row}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        (0..self.ncols)
            .filter(|c| self.owner[*c].is_none())
            .map(|free| {
                let mut entries = vec![(free, Scalar::one())];
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if let Some(x) = coeff(row, free) {
                        let lead = coeff(row, p).expect("pivot");
                        entries.push((p, -(x / lead)));
                    }
                }
                SparseVec::from_entries(self.ncols, entries).expect("indices in range")
            })
            .collect()
    }
}

/// Rank accumulator for very tall matrices given row by row.
#[derive(Clone, Debug)]
pub struct StreamingRank {
    echelon: Echelon,
    seen: HashSet<Row>,
    rows_seen: usize,
}

/// Beyond this many distinct rows the duplicate filter stops growing.
const SEEN_CAP: usize = 1 << 20;

impl StreamingRank {
    pub fn new(ncols: usize) -> Self {
        StreamingRank { echelon: Echelon::new(ncols), seen: HashSet::new(), rows_seen: 0 }
    }

    pub fn push(&mut self, row: SparseVec) -> Result<bool, LinalgError> {
        let ncols = self.echelon.ncols();
        if row.len() != ncols {
            return Err(LinalgError::DimensionMismatch { expected: ncols, found: row.len() });
        }
        self.rows_seen += 1;
        if row.is_zero() || self.is_full() {
            return Ok(false);
        }
        let mut entries = row.into_entries();
        normalize(&mut entries);
        if self.seen.contains(&entries) {
            return Ok(false);
        }
        if self.seen.len() < SEEN_CAP {
            self.seen.insert(entries.clone());
        }
        Ok(self.echelon.insert(entries))
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn is_full(&self) -> bool {
        self.echelon.rank() == self.echelon.ncols()
    }

    pub fn rows_seen(&self) -> usize {
        self.rows_seen
    }

    pub fn distinct_rows(&self) -> usize {
        self.seen.len()
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    pub fn into_echelon(self) -> Echelon {
        self.echelon
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(vals: &[(usize, i64)]) -> Row {
        vals.iter().map(|&(c, v)| (c, Scalar::from_int(v))).collect()
    }

    #[test]
    fn normalize_makes_primitive() {
        let mut r: Row = vec![(1, Scalar::from_frac(-2, 3)), (4, Scalar::from_frac(4, 9))];
        normalize(&mut r);
        assert_eq!(r, row(&[(1, 3), (4, -2)]));
    }

    #[test]
    fn min_bit_size_pivot() {
        let mut e = Echelon::new(3);
        e.insert(row(&[(0, 1000), (1, 1), (2, 7)]));
        assert_eq!(e.pivot_columns(), &[1]);
    }

    #[test]
    fn rows_stay_fully_reduced() {
        let mut e = Echelon::new(4);
        e.insert(row(&[(0, 2), (1, 3), (3, 1)]));
        e.insert(row(&[(0, 1), (2, 5)]));
        e.insert(row(&[(1, 4), (2, 1), (3, 3)]));
        for (i, r) in e.rows().iter().enumerate() {
            for (j, &p) in e.pivot_columns().iter().enumerate() {
                if i != j {
                    assert!(coeff(r, p).is_none());
                }
            }
        }
    }
}
