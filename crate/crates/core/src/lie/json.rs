//! JSON form of a structure table, 1-based indices:
//! `{"name", "dim", "field": "Q"|"Qi", "brackets": [{"i", "j", "terms": [{"k", "c"}]}]}`.

use serde::{Deserialize, Serialize};

use super::StructureConstants;
use crate::error::TableError;
use crate::linalg::SparseVec;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub name: Option<String>,
    pub dim: usize,
    pub field: Field,
    pub brackets: Vec<BracketJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub k: usize,
    pub c: Scalar,
}

impl From<&StructureConstants> for TableJson {
    fn from(mu: &StructureConstants) -> Self {
        let n = mu.dim();
        let brackets = super::structure::pairs(n)
            .filter(|&(i, j)| !mu.stored_bracket(i, j).is_zero())
            .map(|(i, j)| BracketJson {
                i: i + 1,
                j: j + 1,
                terms: mu
                    .stored_bracket(i, j)
                    .entries()
                    .iter()
                    .map(|(k, c)| TermJson { k: k + 1, c: c.clone() })
                    .collect(),
            })
            .collect();
        TableJson { name: mu.name().map(str::to_string), dim: n, field: mu.field(), brackets }
    }
}

impl TryFrom<TableJson> for StructureConstants {
    type Error = TableError;

    fn try_from(t: TableJson) -> Result<Self, TableError> {
        let bad = |msg: String| TableError::Json(msg);
        let mut mu = StructureConstants::zero(t.dim);
        let mut seen = std::collections::BTreeSet::new();
        for b in &t.brackets {
            if !(1 <= b.i && b.i < b.j && b.j <= t.dim) {
                return Err(bad(format!("bracket ({}, {}) needs 1 <= i < j <= {}", b.i, b.j, t.dim)));
            }
            if !seen.insert((b.i, b.j)) {
                return Err(bad(format!("bracket ({}, {}) listed twice", b.i, b.j)));
            }
            let mut ks = std::collections::BTreeSet::new();
            let mut entries = Vec::with_capacity(b.terms.len());
            for term in &b.terms {
                if !(1 <= term.k && term.k <= t.dim) || !ks.insert(term.k) {
                    return Err(bad(format!("bad or repeated k = {} in bracket ({}, {})", term.k, b.i, b.j)));
                }
                if t.field == Field::Rational && term.c.field() == Field::Gaussian {
                    return Err(bad(format!("Gaussian coefficient {} in a \"Q\" table", term.c)));
                }
                entries.push((term.k - 1, term.c.clone().promote(t.field)));
            }
            let v = SparseVec::from_entries(t.dim, entries).expect("k checked");
            if !v.is_zero() {
                mu.set_bracket(b.i - 1, b.j - 1, v);
            }
        }
        mu.promote(t.field);
        mu.set_name(t.name);
        Ok(mu)
    }
}

pub fn to_json(mu: &StructureConstants) -> String {
    serde_json::to_string(&TableJson::from(mu)).expect("serializable")
}

pub fn to_json_pretty(mu: &StructureConstants) -> String {
    serde_json::to_string_pretty(&TableJson::from(mu)).expect("serializable")
}

pub fn from_json(src: &str) -> Result<StructureConstants, TableError> {
    let t: TableJson = serde_json::from_str(src).map_err(|e| TableError::Json(e.to_string()))?;
    StructureConstants::try_from(t)
}
