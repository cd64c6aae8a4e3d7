use std::collections::BTreeMap;
use std::fmt;

use crate::error::LieError;
use crate::linalg::SparseVec;
use crate::scalar::{Field, Scalar};

/// Index of the unordered pair `i < j` among all pairs of `0..n`, lexicographic.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// All pairs `i < j` of `0..n` in `pair_index` order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// An element of Λ²g*⊗g: the bracket `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
///
/// Only `i < j` is stored. Nothing here requires the Jacobi identity, so the
/// same type doubles as a 2-cochain.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    dim: usize,
    field: Field,
    name: Option<String>,
    brackets: Vec<SparseVec>,
}

pub type TwoCochain = StructureConstants;

impl StructureConstants {
    pub fn zero(dim: usize) -> Self {
        let npairs = dim * dim.saturating_sub(1) / 2;
        StructureConstants { dim, field: Field::Rational, name: None, brackets: vec![SparseVec::new(dim); npairs] }
    }

    /// Builds from `(i, j, k, c)` entries, 0-based; `(j, i)` entries are negated.
    pub fn from_entries<I>(dim: usize, entries: I) -> Result<Self, LieError>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let mut acc: BTreeMap<(usize, usize), Vec<(usize, Scalar)>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            let bad = i.max(j).max(k);
            if bad >= dim {
                return Err(LieError::DimensionMismatch { expected: dim, found: bad + 1 });
            }
            if i == j {
                if c.is_zero() {
                    continue;
                }
                return Err(LieError::Table(crate::error::TableError::SelfBracket { line: 0 }));
            }
            let (a, b, c) = if i < j { (i, j, c) } else { (j, i, -c) };
            acc.entry((a, b)).or_default().push((k, c));
        }
        let mut out = Self::zero(dim);
        for ((i, j), terms) in acc {
            let v = SparseVec::from_entries(dim, terms).expect("k < dim checked");
            out.set_bracket(i, j, v);
        }
        Ok(out)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Sets `[e_i, e_j]` for `i < j`.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: SparseVec) {
        assert!(i < j && j < self.dim && value.len() == self.dim);
        self.field = self.field.join(value.field());
        let idx = pair_index(self.dim, i, j);
        self.brackets[idx] = value;
        if self.field == Field::Gaussian {
            self.promote_all();
        }
    }

    /// Moves the table into a larger field; a no-op when already there.
    pub fn promote(&mut self, field: Field) {
        self.field = self.field.join(field);
        if self.field == Field::Gaussian {
            self.promote_all();
        }
    }

    fn promote_all(&mut self) {
        for b in &mut self.brackets {
            if b.field() != Field::Gaussian && !b.is_zero() {
                let entries = b.entries().iter().map(|(k, v)| (*k, v.clone().promote(Field::Gaussian))).collect();
                *b = SparseVec::from_entries(self.dim, entries).expect("same length");
            }
        }
    }

    /// `[e_i, e_j]` for any ordered pair.
    pub fn basis_bracket(&self, i: usize, j: usize) -> SparseVec {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.brackets[pair_index(self.dim, i, j)].clone(),
            std::cmp::Ordering::Greater => self.brackets[pair_index(self.dim, j, i)].neg(),
            std::cmp::Ordering::Equal => SparseVec::new(self.dim),
        }
    }

    /// Borrowing access to `[e_i, e_j]`, `i < j`.
    pub fn stored_bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.brackets[pair_index(self.dim, i, j)]
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Scalar {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.brackets[pair_index(self.dim, i, j)].get(k),
            std::cmp::Ordering::Greater => -self.brackets[pair_index(self.dim, j, i)].get(k),
            std::cmp::Ordering::Equal => Scalar::zero(),
        }
    }

    /// Nonzero `(i, j, k, c)` with `i < j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        pairs(self.dim).zip(&self.brackets).flat_map(|((i, j), v)| {
            v.entries().iter().map(move |(k, c)| (i, j, *k, c))
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.iter().all(SparseVec::is_zero)
    }

    /// Bilinear evaluation on coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, LieError> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(LieError::DimensionMismatch { expected: self.dim, found: v.len() });
            }
        }
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, j) in pairs(self.dim) {
            let b = self.stored_bracket(i, j);
            if b.is_zero() {
                continue;
            }
            let w = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            if w.is_zero() {
                continue;
            }
            for (k, c) in b.entries() {
                out[*k] = &out[*k] + &(&w * c);
            }
        }
        Ok(out)
    }

    /// `μ + t·σ`.
    pub fn add_scaled(&self, t: &Scalar, sigma: &StructureConstants) -> Result<Self, LieError> {
        if sigma.dim != self.dim {
            return Err(LieError::DimensionMismatch { expected: self.dim, found: sigma.dim });
        }
        let entries = self
            .entries()
            .map(|(i, j, k, c)| (i, j, k, c.clone()))
            .chain(sigma.entries().map(|(i, j, k, c)| (i, j, k, t * c)));
        Self::from_entries(self.dim, entries.collect::<Vec<_>>())
    }

    /// Coordinates in Λ²g*⊗g, index `pair_index(i, j) * n + k`.
    pub fn to_cochain_vector(&self) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero().promote(self.field); self.brackets.len() * n];
        for (p, b) in self.brackets.iter().enumerate() {
            for (k, c) in b.entries() {
                out[p * n + k] = c.clone();
            }
        }
        out
    }

    pub fn from_cochain_vector(dim: usize, v: &[Scalar]) -> Result<Self, LieError> {
        let expected = dim * dim.saturating_sub(1) / 2 * dim;
        if v.len() != expected {
            return Err(LieError::DimensionMismatch { expected, found: v.len() });
        }
        let entries: Vec<_> = pairs(dim)
            .enumerate()
            .flat_map(|(p, (i, j))| (0..dim).map(move |k| (i, j, k, p)))
            .filter_map(|(i, j, k, p)| {
                let c = &v[p * dim + k];
                (!c.is_zero()).then(|| (i, j, k, c.clone()))
            })
            .collect();
        Self::from_entries(dim, entries)
    }

    /// Exact equality of tables (names ignored, fields compared by value).
    pub fn table_eq(&self, other: &StructureConstants) -> bool {
        self.diff(other).is_empty()
    }

    /// Brackets `(i, j)`, `i < j`, where the two tables disagree.
    pub fn diff(&self, other: &StructureConstants) -> Vec<BracketMismatch> {
        if self.dim != other.dim {
            return vec![BracketMismatch { i: 0, j: 0, left: Vec::new(), right: Vec::new() }];
        }
        pairs(self.dim)
            .filter_map(|(i, j)| {
                let a = self.stored_bracket(i, j);
                let b = other.stored_bracket(i, j);
                let same = (0..self.dim).all(|k| a.get(k).value_eq(&b.get(k)));
                (!same).then(|| BracketMismatch {
                    i,
                    j,
                    left: a.entries().to_vec(),
                    right: b.entries().to_vec(),
                })
            })
            .collect()
    }

    /// Renders in the table notation, e.g. `ab = c, ac = d`.
    pub fn to_table_text(&self) -> String {
        let parts: Vec<String> = pairs(self.dim)
            .filter(|&(i, j)| !self.stored_bracket(i, j).is_zero())
            .map(|(i, j)| {
                let rhs = render_vector(self.stored_bracket(i, j).entries());
                format!("{}{} = {}", letter(i), letter(j), rhs)
            })
            .collect();
        parts.join(", ")
    }
}

/// Default basis letter for index `i` (`a`, `b`, ...).
pub fn letter(i: usize) -> char {
    (b'a' + i as u8) as char
}

pub fn render_vector(terms: &[(usize, Scalar)]) -> String {
    let mut s = String::new();
    for (n, (k, c)) in terms.iter().enumerate() {
        let txt = c.to_string();
        let (neg, body) = match c {
            Scalar::Rational(_) => match txt.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, txt),
            },
            Scalar::Gaussian(..) => (false, format!("({txt})")),
        };
        if n > 0 {
            s.push_str(if neg { " - " } else { " + " });
        } else if neg {
            s.push('-');
        }
        if body != "1" {
            s.push_str(&body);
            if body.contains('/') && !body.starts_with('(') {
                s.push(' ');
            }
        }
        s.push(letter(*k));
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketMismatch {
    pub i: usize,
    pub j: usize,
    pub left: Vec<(usize, Scalar)>,
    pub right: Vec<(usize, Scalar)>,
}

impl fmt::Display for BracketMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |t: &[(usize, Scalar)]| if t.is_empty() { "0".to_string() } else { render_vector(t) };
        write!(f, "[{},{}]: {} vs {}", letter(self.i), letter(self.j), show(&self.left), show(&self.right))
    }
}

impl fmt::Display for StructureConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            write!(f, "{name}: ")?;
        }
        if self.is_abelian() {
            write!(f, "abelian of dimension {}", self.dim)
        } else {
            f.write_str(&self.to_table_text())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_is_dense() {
        for n in 1..8 {
            let idx: Vec<usize> = pairs(n).map(|(i, j)| pair_index(n, i, j)).collect();
            assert_eq!(idx, (0..n * (n - 1) / 2).collect::<Vec<_>>());
        }
    }

    #[test]
    fn antisymmetric_reads() {
        let mu = StructureConstants::from_entries(3, [(1, 0, 2, Scalar::one())]).unwrap();
        assert_eq!(mu.coeff(0, 1, 2), Scalar::from_int(-1));
        assert_eq!(mu.coeff(1, 0, 2), Scalar::one());
        let x = [Scalar::one(), Scalar::from_int(2), Scalar::zero()];
        assert!(mu.bracket(&x, &x).unwrap().iter().all(Scalar::is_zero));
    }

    #[test]
    fn cochain_vector_round_trip() {
        let mu = StructureConstants::from_entries(
            4,
            [(0, 1, 2, Scalar::one()), (0, 2, 3, Scalar::from_frac(-1, 2))],
        )
        .unwrap();
        let v = mu.to_cochain_vector();
        assert_eq!(v.len(), 24);
        assert!(StructureConstants::from_cochain_vector(4, &v).unwrap().table_eq(&mu));
    }

    #[test]
    fn table_text_rendering() {
        let mu = StructureConstants::from_entries(
            4,
            [(0, 1, 2, Scalar::one()), (0, 2, 3, Scalar::from_int(-2)), (0, 2, 1, Scalar::from_frac(1, 2))],
        )
        .unwrap();
        assert_eq!(mu.to_table_text(), "ab = c, ac = 1/2 b - 2d");
    }
}
