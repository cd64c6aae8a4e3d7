use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::Catalog;
use crate::error::CatalogError;
use crate::lie::{basis_matrix, change_basis, default_letters, parse_expr};
use crate::scalar::{Field, Scalar};

/// A change of basis taking `source` to `target`, possibly depending on one parameter.
#[derive(Clone, Debug, Serialize)]
pub struct IsomorphismWitness {
    pub name: String,
    pub source: String,
    pub target: String,
    /// Parameter values fixed for both sides.
    pub fixed: Vec<(char, Scalar)>,
    /// Free parameter shared by the basis and the family on either side.
    pub param: Option<char>,
    /// New basis vectors written in the letters of the source.
    pub basis: Vec<String>,
    pub field: Field,
    /// The witness is claimed where this polynomial is nonzero.
    pub nonvanishing: Option<String>,
    pub samples: Vec<Scalar>,
    pub citation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub witness: String,
    pub at: Option<Scalar>,
    pub ok: bool,
    pub mismatches: Vec<String>,
}

#[allow(clippy::too_many_arguments)]
fn w(
    name: &str,
    source: &str,
    target: &str,
    fixed: &[(char, i64)],
    param: Option<char>,
    basis: &[&str],
    samples: &[(i64, i64)],
    citation: &str,
) -> IsomorphismWitness {
    IsomorphismWitness {
        name: name.into(),
        source: source.into(),
        target: target.into(),
        fixed: fixed.iter().map(|&(c, v)| (c, Scalar::from_int(v))).collect(),
        param,
        basis: basis.iter().map(|s| s.to_string()).collect(),
        field: Field::Rational,
        nonvanishing: param.map(|p| p.to_string()),
        samples: samples.iter().map(|&(a, b)| Scalar::from_frac(a, b)).collect(),
        citation: citation.into(),
    }
}

pub(crate) fn builtin() -> Vec<IsomorphismWitness> {
    let mut item4 = w(
        "item4",
        "g_{247H}",
        "g_{(4)}(t)",
        &[],
        Some('t'),
        &["-ia", "-it^2(a-b)", "tc", "t^2d", "-ite", "-it^2f", "t^3g"],
        &[(1, 1), (2, 1), (1, 2)],
        "g_{247H} → g_{247K} over C",
    );
    item4.field = Field::Gaussian;
    vec![
        w(
            "item1",
            "g_{(1)}(t)",
            "g_{137B}",
            &[],
            Some('t'),
            &["ta+c", "2t(tb-d)", "-ta+c", "-2t(tb+d)", "4t^2(te-f)", "4t^2(te+f)", "-8t^3g"],
            &[(1, 1), (2, 1), (1, 2)],
            "g_{137B} → g_{137D}",
        ),
        w(
            "item2",
            "g_{147E_1}(t)",
            "g_{147D}",
            &[('t', 1)],
            None,
            &["-a", "a+b", "c", "-d", "e-f", "-f", "-g"],
            &[],
            "g_{147E_1}(t) → g_{147D} as t → 1",
        ),
        w(
            "item3",
            "g_{247H}",
            "g_{(3)}(t)",
            &[],
            Some('t'),
            &[
                "2t^2a+(1/2-t^2)b+1/2c",
                "1/2(1+t)b+1/2(1-t)c",
                "1/2(1-t)b+1/2(1+t)c",
                "t^2(1+t)d+t^2(1-t)e",
                "t^2(1-t)d+t^2(1+t)e",
                "t^2(1+t^2)f+t^2(1-t^2)g",
                "t^2(1-t^2)f+t^2(1+t^2)g",
            ],
            &[(1, 1), (2, 1), (1, 2)],
            "g_{247H} → g_{247G}",
        ),
        item4,
        w(
            "GR",
            "g_{GR}",
            "g_{247K}",
            &[],
            None,
            &["b", "-a+b", "e", "c", "f", "d", "-g"],
            &[],
            "the [GR] algebra is g_{247K}",
        ),
        w(
            "137B-rescale",
            "g_{137B}",
            "g_{137B}(s)",
            &[],
            Some('s'),
            &["a", "sb", "c", "sd", "se", "sf", "sg"],
            &[(1, 1), (2, 1), (1, 3)],
            "g_{137B} → g_{137A}",
        ),
        w(
            "137B1-rescale",
            "g_{137B_1}",
            "g_{137B_1}(s)",
            &[],
            Some('s'),
            &["a", "b", "sc", "sd", "se", "sf", "sg"],
            &[(1, 1), (2, 1), (1, 3)],
            "g_{137B_1} → g_{137A_1}",
        ),
    ]
}

impl Catalog {
    pub fn witnesses(&self) -> &[IsomorphismWitness] {
        &self.witnesses
    }

    pub fn witness(&self, name: &str) -> Result<&IsomorphismWitness, CatalogError> {
        self.witnesses.iter().find(|w| w.name == name).ok_or_else(|| CatalogError::UnknownName(name.to_string()))
    }

    /// Checks `change_basis(source, P) = target` exactly at one parameter value.
    pub fn verify_witness(&self, w: &IsomorphismWitness, at: Option<&Scalar>) -> Result<WitnessReport, CatalogError> {
        let mut params: BTreeMap<char, Scalar> = w.fixed.iter().cloned().collect();
        if let Some(p) = w.param {
            let v = at.ok_or(CatalogError::MissingParameter(p))?;
            params.insert(p, v.clone());
        }
        if let Some(nv) = &w.nonvanishing {
            let poly = parse_expr(nv, &BTreeSet::new())?;
            if poly.eval(&params).map_err(CatalogError::MissingParameter)?.is_zero() {
                return Err(CatalogError::OutsideValidity(nv.clone()));
            }
        }
        let source = self.eval(&w.source, &params)?;
        let target = self.eval(&w.target, &params)?;
        let n = source.dim();
        let letters = default_letters(n);
        let plain: BTreeSet<char> = letters.iter().copied().collect();
        let mut columns = Vec::with_capacity(n);
        for expr in &w.basis {
            let poly = parse_expr(expr, &plain)?.substitute(&params);
            let coefs = poly
                .linear_coefficients(&plain)
                .ok_or_else(|| CatalogError::Pack(format!("basis entry {expr:?} is not linear")))?;
            let mut col = vec![Scalar::zero(); n];
            for (l, c) in coefs {
                let idx = letters.iter().position(|&x| x == l).expect("basis letter");
                col[idx] = c.eval(&params).map_err(CatalogError::MissingParameter)?;
            }
            columns.push(col);
        }
        let p = basis_matrix(&columns)?;
        let image = change_basis(&source, &p)?;
        let mismatches: Vec<String> = image.diff(&target).iter().map(ToString::to_string).collect();
        Ok(WitnessReport { witness: w.name.clone(), at: at.cloned(), ok: mismatches.is_empty(), mismatches })
    }

    /// Whether `family` at `limit` is `target`, by equal tables or by a recorded witness.
    pub fn verify_degeneration(
        &self,
        family: &str,
        limit: &BTreeMap<char, Scalar>,
        target: &str,
    ) -> Result<bool, CatalogError> {
        let lim = self.eval(family, limit)?;
        let tgt = self.eval(target, &BTreeMap::new())?;
        if lim.table_eq(&tgt) {
            return Ok(true);
        }
        let family = &self.get(family)?.name;
        let target = &self.get(target)?.name;
        for w in &self.witnesses {
            let fixed_match = w.fixed.iter().all(|(c, v)| limit.get(c).is_some_and(|x| x.value_eq(v)));
            if &w.source == family && &w.target == target && w.param.is_none() && fixed_match {
                return Ok(self.verify_witness(w, None)?.ok);
            }
        }
        Ok(false)
    }
}
