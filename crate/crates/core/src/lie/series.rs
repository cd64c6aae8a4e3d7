use super::operators::{basis_vec, bracket_vv, is_lie};
use super::StructureConstants;
use crate::error::LieError;
use crate::linalg::Echelon;
use crate::scalar::Scalar;

/// A linear subspace of `g`, given by an independent spanning list.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn full(n: usize) -> Self {
        Subspace { ambient: n, basis: (0..n).map(|i| basis_vec(n, i)).collect() }
    }

    /// Span of arbitrary vectors; dependent ones are dropped.
    pub fn span<I: IntoIterator<Item = Vec<Scalar>>>(ambient: usize, vectors: I) -> Self {
        let mut ech = Echelon::new(ambient);
        let mut basis = Vec::new();
        for v in vectors {
            assert_eq!(v.len(), ambient);
            let entries: Vec<_> = v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect();
            if ech.insert(entries) {
                basis.push(v);
            }
        }
        Subspace { ambient, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Whether `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Subspace) -> bool {
        let joined = Subspace::span(self.ambient, other.basis.iter().chain(&self.basis).cloned());
        joined.dim() == other.dim()
    }
}

fn bracket_spaces(mu: &StructureConstants, u: &Subspace, v: &Subspace) -> Subspace {
    let mut prods = Vec::with_capacity(u.dim() * v.dim());
    for x in u.basis() {
        for y in v.basis() {
            prods.push(bracket_vv(mu, x, y));
        }
    }
    Subspace::span(mu.dim(), prods)
}

/// `g⁰ = g, gⁱ = [gⁱ⁻¹, g]`, until the series reaches zero or stops shrinking.
pub fn lower_central_series(mu: &StructureConstants) -> Result<Vec<Subspace>, LieError> {
    if !is_lie(mu) {
        return Err(LieError::NotLie);
    }
    let full = Subspace::full(mu.dim());
    let mut series = vec![full.clone()];
    loop {
        let last = series.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        let next = bracket_spaces(mu, last, &full);
        let stalled = next.dim() == last.dim();
        if stalled {
            break;
        }
        series.push(next);
    }
    Ok(series)
}

/// `g⁽⁰⁾ = g, g⁽ⁱ⁾ = [g⁽ⁱ⁻¹⁾, g⁽ⁱ⁻¹⁾]`, until zero or stable.
pub fn derived_series(mu: &StructureConstants) -> Result<Vec<Subspace>, LieError> {
    if !is_lie(mu) {
        return Err(LieError::NotLie);
    }
    let mut series = vec![Subspace::full(mu.dim())];
    loop {
        let last = series.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        let next = bracket_spaces(mu, last, last);
        if next.dim() == last.dim() {
            break;
        }
        series.push(next);
    }
    Ok(series)
}

/// First `i` with `gⁱ = 0`; `None` when the algebra is not nilpotent.
pub fn nil_index(mu: &StructureConstants) -> Result<Option<usize>, LieError> {
    let s = lower_central_series(mu)?;
    Ok(s.last().filter(|sp| sp.is_zero()).map(|_| s.len() - 1))
}

/// First `i` with `g⁽ⁱ⁾ = 0`; `None` when the algebra is not solvable.
pub fn solvable_length(mu: &StructureConstants) -> Result<Option<usize>, LieError> {
    let s = derived_series(mu)?;
    Ok(s.last().filter(|sp| sp.is_zero()).map(|_| s.len() - 1))
}

/// The center `{x : [x, g] = 0}`.
pub fn center(mu: &StructureConstants) -> Subspace {
    use crate::linalg::{kernel_basis, ExactMatrix, SparseVec};
    let n = mu.dim();
    // row (y, k): Σ_x x_i c[i][y][k]
    let mut rows = Vec::new();
    for y in 0..n {
        for k in 0..n {
            let entries = (0..n).map(|i| (i, mu.coeff(i, y, k))).filter(|(_, c)| !c.is_zero()).collect();
            rows.push(SparseVec::from_entries(n, entries).expect("in range"));
        }
    }
    let m = ExactMatrix::from_rows(n, rows).expect("width n");
    Subspace::span(n, kernel_basis(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::parse_table_str;

    #[test]
    fn filiform_five_series() {
        let f5 = parse_table_str("ab = c, ac = d, ad = e", 5).unwrap();
        let dims: Vec<usize> = lower_central_series(&f5).unwrap().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![5, 3, 2, 1, 0]);
        assert_eq!(nil_index(&f5).unwrap(), Some(4));
    }

    #[test]
    fn abelian_series() {
        let z = StructureConstants::zero(4);
        let dims: Vec<usize> = lower_central_series(&z).unwrap().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![4, 0]);
        assert_eq!(solvable_length(&z).unwrap(), Some(1));
    }

    #[test]
    fn non_lie_rejected() {
        let mu = parse_table_str("ab = c, cd = e", 5).unwrap();
        assert_eq!(lower_central_series(&mu).unwrap_err(), LieError::NotLie);
        assert_eq!(derived_series(&mu).unwrap_err(), LieError::NotLie);
    }

    #[test]
    fn center_of_heisenberg() {
        let h = parse_table_str("ab = e, cd = e", 5).unwrap();
        assert_eq!(center(&h).dim(), 1);
    }
}
