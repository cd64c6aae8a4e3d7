use crate::error::LinalgError;
use crate::scalar::{Field, Scalar};

/// A sparse vector of known length; entries sorted by index, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SparseVec {
    len: usize,
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new(len: usize) -> Self {
        SparseVec { len, entries: Vec::new() }
    }

    /// Builds from unsorted `(index, value)` pairs, summing repeats and dropping zeros.
    pub fn from_entries(len: usize, mut entries: Vec<(usize, Scalar)>) -> Result<Self, LinalgError> {
        if let Some(&(c, _)) = entries.iter().find(|(c, _)| *c >= len) {
            return Err(LinalgError::DimensionMismatch { expected: len, found: c + 1 });
        }
        entries.sort_by_key(|(c, _)| *c);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            match out.last_mut() {
                Some((lc, lv)) if *lc == c => *lv = &*lv + &v,
                _ => out.push((c, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        Ok(SparseVec { len, entries: out })
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            len: values.len(),
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }

    pub fn get(&self, idx: usize) -> Scalar {
        self.entries
            .binary_search_by_key(&idx, |(c, _)| *c)
            .map(|pos| self.entries[pos].1.clone())
            .unwrap_or_default()
    }

    pub fn field(&self) -> Field {
        self.entries.iter().fold(Field::Rational, |f, (_, v)| f.join(v.field()))
    }

    pub fn to_dense_in(&self, field: Field) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero().promote(field); self.len];
        for (c, v) in &self.entries {
            out[*c] = v.clone().promote(field);
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        self.to_dense_in(self.field())
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            len: self.len,
            entries: self.entries.iter().map(|(c, v)| (*c, -v)).collect(),
        }
    }
}

/// Sparse matrix stored as a list of sparse rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    ncols: usize,
    field: Field,
    rows: Vec<SparseVec>,
}

impl ExactMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        ExactMatrix { ncols, field: Field::Rational, rows: vec![SparseVec::new(ncols); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for (i, row) in m.rows.iter_mut().enumerate() {
            row.entries.push((i, Scalar::one()));
        }
        m
    }

    pub fn from_dense(rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let ncols = rows.first().map_or(0, Vec::len);
        let sparse = rows
            .iter()
            .map(|r| {
                if r.len() != ncols {
                    Err(LinalgError::DimensionMismatch { expected: ncols, found: r.len() })
                } else {
                    Ok(SparseVec::from_dense(r))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(ncols, sparse)
    }

    pub fn from_rows(ncols: usize, rows: Vec<SparseVec>) -> Result<Self, LinalgError> {
        let mut m = ExactMatrix { ncols, field: Field::Rational, rows: Vec::with_capacity(rows.len()) };
        for r in rows {
            m.push_row(r)?;
        }
        Ok(m)
    }

    pub fn push_row(&mut self, row: SparseVec) -> Result<(), LinalgError> {
        if row.len != self.ncols {
            return Err(LinalgError::DimensionMismatch { expected: self.ncols, found: row.len });
        }
        let f = row.field();
        if f != self.field {
            self.promote(f.join(self.field));
        }
        let field = self.field;
        let row = if row.field() == field {
            row
        } else {
            SparseVec {
                len: row.len,
                entries: row.entries.into_iter().map(|(c, v)| (c, v.promote(field))).collect(),
            }
        };
        self.rows.push(row);
        Ok(())
    }

    fn promote(&mut self, field: Field) {
        self.field = field;
        for r in &mut self.rows {
            for (_, v) in &mut r.entries {
                *v = std::mem::take(v).promote(field);
            }
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.entries.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SparseVec::is_zero)
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.rows[r].get(c)
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|r| r.to_dense_in(self.field)).collect()
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.ncols];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in &row.entries {
                cols[*c].push((r, v.clone()));
            }
        }
        let nrows = self.rows.len();
        ExactMatrix {
            ncols: nrows,
            field: self.field,
            rows: cols.into_iter().map(|entries| SparseVec { len: nrows, entries }).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.ncols {
            return Err(LinalgError::DimensionMismatch { expected: self.ncols, found: v.len() });
        }
        Ok(self
            .rows
            .iter()
            .map(|row| {
                row.entries
                    .iter()
                    .fold(Scalar::zero(), |acc, (c, x)| &acc + &(x * &v[*c]))
            })
            .collect())
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if other.nrows() != self.ncols {
            return Err(LinalgError::DimensionMismatch { expected: self.ncols, found: other.nrows() });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = Vec::new();
                for (k, a) in &row.entries {
                    for (c, b) in &other.rows[*k].entries {
                        acc.push((*c, a * b));
                    }
                }
                SparseVec::from_entries(other.ncols, acc)
            })
            .collect::<Result<Vec<_>, _>>()?;
        ExactMatrix::from_rows(other.ncols, rows)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        let mut out = self.clone();
        for r in &other.rows {
            out.push_row(r.clone())?;
        }
        Ok(out)
    }

    /// Places the columns of `other` to the right of `self`.
    pub fn hstack(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if other.nrows() != self.nrows() {
            return Err(LinalgError::DimensionMismatch { expected: self.nrows(), found: other.nrows() });
        }
        let ncols = self.ncols + other.ncols;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut entries = a.entries.clone();
                entries.extend(b.entries.iter().map(|(c, v)| (c + self.ncols, v.clone())));
                SparseVec { len: ncols, entries }
            })
            .collect();
        ExactMatrix::from_rows(ncols, rows)
    }

    /// A single-column matrix.
    pub fn column(values: &[Scalar]) -> ExactMatrix {
        let rows = values.iter().map(|v| SparseVec::from_dense(std::slice::from_ref(v))).collect();
        ExactMatrix::from_rows(1, rows).expect("width 1")
    }

    /// Inverse of a square matrix, or `Singular`.
    pub fn inverse(&self) -> Result<ExactMatrix, LinalgError> {
        let n = self.nrows();
        if n != self.ncols {
            return Err(LinalgError::DimensionMismatch { expected: n, found: self.ncols });
        }
        let aug = self.hstack(&ExactMatrix::identity(n))?;
        let mut ech = super::Echelon::with_pivot_limit(2 * n, n);
        for row in aug.rows() {
            ech.insert(row.entries.clone());
        }
        if ech.rank() < n || ech.pivot_columns().iter().any(|&p| p >= n) {
            return Err(LinalgError::Singular);
        }
        let mut out = vec![Vec::new(); n];
        for (row, &p) in ech.rows().iter().zip(ech.pivot_columns()) {
            let lead = row.iter().find(|(c, _)| *c == p).map(|(_, v)| v.clone()).expect("pivot");
            let inv = lead.inv().expect("nonzero pivot");
            out[p] = row
                .iter()
                .filter(|(c, _)| *c >= n)
                .map(|(c, v)| (c - n, v * &inv))
                .collect();
        }
        let rows = out
            .into_iter()
            .map(|e| SparseVec::from_entries(n, e))
            .collect::<Result<Vec<_>, _>>()?;
        ExactMatrix::from_rows(n, rows)
    }
}
