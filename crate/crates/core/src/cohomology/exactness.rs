//! Exactness of `T ⊕ gl(g) --dF--> Λ²g*⊗g --dG--> …` at a point of a family,
//! where `dF = [∂_s μ for free s, d¹_μ]` and `dG` stacks `d²` (`= −dJ`) with
//! the derivative of the extra constraint.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::differentials::{cochain_dim, d1_matrix, d2_matrix, dnk_apply, dnk_rows, dsnk_apply, dsnk_rows};
use crate::error::CohomologyError;
use crate::lie::{is_lie, n_k, sn_k, ParametricTable, StructureConstants};
use crate::linalg::{rank, streaming_rank, ExactMatrix, SparseVec};
use crate::scalar::Scalar;

/// The variety a family is tested in: `J = 0` plus optionally `N_k = 0` or `SN_k = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    J,
    JN(usize),
    JSN(usize),
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::J => write!(f, "J"),
            Constraint::JN(k) => write!(f, "J+N{k}"),
            Constraint::JSN(k) => write!(f, "J+SN{k}"),
        }
    }
}

impl FromStr for Constraint {
    type Err = String;

    /// Accepts `j`, `n<k>` and `sn<k>`, optionally prefixed by `j+`.
    fn from_str(s: &str) -> Result<Self, String> {
        let lower = s.trim().to_ascii_lowercase();
        let body = lower.strip_prefix("j+").unwrap_or(&lower);
        let num = |digits: &str| digits.parse::<usize>().map_err(|_| format!("bad constraint {s:?}"));
        if body == "j" {
            Ok(Constraint::J)
        } else if let Some(d) = body.strip_prefix("sn") {
            let k = num(d)?;
            if k < 3 {
                return Err("SN_k needs k >= 3".into());
            }
            Ok(Constraint::JSN(k))
        } else if let Some(d) = body.strip_prefix('n') {
            let k = num(d)?;
            if k < 1 {
                return Err("N_k needs k >= 1".into());
            }
            Ok(Constraint::JN(k))
        } else {
            Err(format!("bad constraint {s:?}; expected j, n<k> or sn<k>"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub family: Option<String>,
    pub point: BTreeMap<String, Scalar>,
    pub free: Vec<String>,
    pub constraint: String,
    /// `len(free) + n²`, `C(n,2)·n` and the row count of `dG`.
    pub dims: [usize; 3],
    pub rank_d1: usize,
    pub rank_df: usize,
    pub dim_ker_dg: usize,
    /// `dG ∘ dF = 0`, checked column by column.
    pub containment: bool,
    pub exact: bool,
}

/// The default sample points `(r, t)`, before removing excluded loci.
pub fn default_samples() -> Vec<(Scalar, Scalar)> {
    [(1, 1, 1, 1), (2, 1, 3, 1), (-1, 1, 2, 1), (1, 2, 1, 3)]
        .into_iter()
        .map(|(a, b, c, d)| (Scalar::from_frac(a, b), Scalar::from_frac(c, d)))
        .collect()
}

fn satisfies(mu: &StructureConstants, c: Constraint) -> bool {
    is_lie(mu)
        && match c {
            Constraint::J => true,
            Constraint::JN(k) => n_k(mu, k).is_zero(),
            Constraint::JSN(k) => sn_k(mu, k).is_zero(),
        }
}

fn constraint_rows<'a>(mu: &'a StructureConstants, c: Constraint) -> Box<dyn Iterator<Item = SparseVec> + 'a> {
    match c {
        Constraint::J => Box::new(std::iter::empty()),
        Constraint::JN(k) => Box::new(dnk_rows(mu, k)),
        Constraint::JSN(k) => Box::new(dsnk_rows(mu, k)),
    }
}

fn in_kernel(mu: &StructureConstants, d2: &ExactMatrix, c: Constraint, v: &[Scalar]) -> bool {
    if d2.mul_vec(v).expect("cochain width").iter().any(|x| !x.is_zero()) {
        return false;
    }
    let sigma = StructureConstants::from_cochain_vector(mu.dim(), v).expect("cochain width");
    match c {
        Constraint::J => true,
        Constraint::JN(k) => dnk_apply(mu, &sigma, k).is_zero(),
        Constraint::JSN(k) => dsnk_apply(mu, &sigma, k).is_zero(),
    }
}

/// Checks `Im dF = Ker dG` for `family` at `point`, with one tangent column per free parameter.
///
/// Parameters not in `free` are frozen at their value in `point`.
pub fn augmented_exactness(
    family: &ParametricTable,
    point: &BTreeMap<char, Scalar>,
    free: &[char],
    constraint: Constraint,
) -> Result<ExactnessReport, CohomologyError> {
    let symbols = family.symbols();
    if let Some(&s) = free.iter().find(|s| !symbols.contains(s)) {
        return Err(CohomologyError::UnknownParameter(s));
    }
    let free: Vec<char> = free.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let mu = family.eval(point).map_err(|e| CohomologyError::Lie(e.into()))?;
    if !satisfies(&mu, constraint) {
        return Err(CohomologyError::ConstraintViolated);
    }
    let n = mu.dim();
    let ncols = cochain_dim(n);

    // columns of dF, as vectors in Λ²g*⊗g
    let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(free.len() + n * n);
    for &s in &free {
        let tangent = family.derivative(s).eval(point).map_err(|e| CohomologyError::Lie(e.into()))?;
        columns.push(tangent.to_cochain_vector());
    }
    let d1 = d1_matrix(&mu);
    let d1t = d1.transpose();
    columns.extend(d1t.rows().iter().map(|r| r.to_dense_in(mu.field())));
    let df_t = ExactMatrix::from_rows(ncols, columns.iter().map(|c| SparseVec::from_dense(c)).collect())?;
    let rank_d1 = rank(&d1).rank;
    let rank_df = rank(&df_t).rank;

    let d2 = d2_matrix(&mu);
    let containment = columns.iter().all(|c| in_kernel(&mu, &d2, constraint, c));
    let rows = d2.rows().iter().cloned().chain(constraint_rows(&mu, constraint));
    let rank_dg = streaming_rank(rows, ncols)?;
    let dim_ker_dg = ncols - rank_dg;

    let extra_rows = match constraint {
        Constraint::J => 0,
        Constraint::JN(k) | Constraint::JSN(k) => n.pow(k as u32 + 1) * n,
    };
    Ok(ExactnessReport {
        family: None,
        point: point.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        free: free.iter().map(char::to_string).collect(),
        constraint: constraint.to_string(),
        dims: [free.len() + n * n, ncols, d2.nrows() + extra_rows],
        rank_d1,
        rank_df,
        dim_ker_dg,
        containment,
        exact: containment && rank_df == dim_ker_dg,
    })
}

impl ExactnessReport {
    pub fn with_family(mut self, name: impl Into<String>) -> Self {
        self.family = Some(name.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(pairs: &[(char, i64)]) -> BTreeMap<char, Scalar> {
        pairs.iter().map(|&(c, v)| (c, Scalar::from_int(v))).collect()
    }

    #[test]
    fn constraint_parsing() {
        assert_eq!("sn5".parse::<Constraint>().unwrap(), Constraint::JSN(5));
        assert_eq!("J+N3".parse::<Constraint>().unwrap(), Constraint::JN(3));
        assert_eq!("j".parse::<Constraint>().unwrap(), Constraint::J);
        assert!("sn2".parse::<Constraint>().is_err());
        assert!("x".parse::<Constraint>().is_err());
    }

    #[test]
    fn unknown_free_parameter() {
        let fam = ParametricTable::parse("ab = tc", 3).unwrap();
        let err = augmented_exactness(&fam, &at(&[('t', 1)]), &['r'], Constraint::J).unwrap_err();
        assert_eq!(err, CohomologyError::UnknownParameter('r'));
    }

    #[test]
    fn violated_constraint() {
        let fam = ParametricTable::parse("ab = c, ac = td", 4).unwrap();
        let err = augmented_exactness(&fam, &at(&[('t', 1)]), &['t'], Constraint::JN(2)).unwrap_err();
        assert_eq!(err, CohomologyError::ConstraintViolated);
    }

    #[test]
    fn scaling_family_is_not_a_deformation() {
        // t·f3 stays in one orbit for t ≠ 0, so ∂_t μ is already in Im d¹
        let fam = ParametricTable::parse("ab = tc", 3).unwrap();
        let rep = augmented_exactness(&fam, &at(&[('t', 1)]), &['t'], Constraint::JN(2)).unwrap();
        assert!(rep.containment);
        assert_eq!(rep.rank_df, rep.rank_d1);
    }
}
