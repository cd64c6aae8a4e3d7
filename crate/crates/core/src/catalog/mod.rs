//! Named algebras and families, isomorphism witnesses and the optional data pack.

mod pack;
mod records;
mod witness;

pub use pack::{DataPack, PackRecord, PACK_ENV};
pub use records::{AlgebraRecord, Provenance};
pub use witness::{IsomorphismWitness, WitnessReport};

use std::collections::{BTreeMap, BTreeSet};

use crate::error::CatalogError;
use crate::lie::{parse_expr, parse_table_str, ParametricTable, StructureConstants};
use crate::scalar::Scalar;

/// Names that are cited but whose tables only ship in the data pack.
pub const PACK_ONLY: &[&str] = &["g_{247H_1}", "g_{147E}(2)", "36", "13+13", "246_E", "136_A", "1246", "1346_C"];

#[derive(Clone, Debug)]
pub struct Catalog {
    records: Vec<AlgebraRecord>,
    witnesses: Vec<IsomorphismWitness>,
    pack: Option<DataPack>,
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog::builtin()
    }
}

impl Catalog {
    pub fn builtin() -> Self {
        Catalog { records: records::builtin(), witnesses: witness::builtin(), pack: None }
    }

    /// The builtin catalog plus the pack named by `NILRIGID_DATA_PACK`, if set.
    pub fn from_env() -> Result<Self, CatalogError> {
        let mut cat = Catalog::builtin();
        if let Some(pack) = DataPack::from_env() {
            cat.pack = Some(pack?);
        }
        Ok(cat)
    }

    pub fn with_pack(mut self, pack: DataPack) -> Self {
        self.pack = Some(pack);
        self
    }

    pub fn records(&self) -> &[AlgebraRecord] {
        &self.records
    }

    pub fn pack(&self) -> Option<&DataPack> {
        self.pack.as_ref()
    }

    pub fn pack_checksum(&self) -> Option<&str> {
        self.pack.as_ref().map(|p| p.checksum.as_str())
    }

    /// Looks up a builtin record by name or alias.
    pub fn get(&self, name: &str) -> Result<&AlgebraRecord, CatalogError> {
        if let Some(r) = self.records.iter().find(|r| r.name == name || r.aliases.iter().any(|a| a == name)) {
            return Ok(r);
        }
        if PACK_ONLY.contains(&name) || self.pack.as_ref().is_some_and(|p| p.find(name).is_some()) {
            return Err(CatalogError::ExternalDataRequired(name.to_string()));
        }
        Err(CatalogError::UnknownName(name.to_string()))
    }

    pub fn family(&self, name: &str) -> Result<ParametricTable, CatalogError> {
        let r = self.get(name)?;
        Ok(ParametricTable::parse(&r.table, r.dim)?)
    }

    /// A builtin record at parameter values, or a record from the loaded pack.
    pub fn eval(&self, name: &str, params: &BTreeMap<char, Scalar>) -> Result<StructureConstants, CatalogError> {
        let r = match self.get(name) {
            Ok(r) => r,
            Err(CatalogError::ExternalDataRequired(n)) => {
                return match self.pack.as_ref().and_then(|p| p.find(&n)) {
                    Some(p) => Ok(p.constants.clone()),
                    None => Err(CatalogError::ExternalDataRequired(n)),
                };
            }
            Err(e) => return Err(e),
        };
        if let Some(&p) = r.params.iter().find(|p| !params.contains_key(p)) {
            return Err(CatalogError::MissingParameter(p));
        }
        if let Some(nv) = &r.nonvanishing {
            let poly = parse_expr(nv, &BTreeSet::new())?;
            if poly.eval(params).map_err(CatalogError::MissingParameter)?.is_zero() {
                return Err(CatalogError::OutsideValidity(nv.clone()));
            }
        }
        let mut mu = self.family(name)?.eval(params)?;
        mu.set_name(Some(r.name.clone()));
        Ok(mu)
    }

    /// A parameter-free record.
    pub fn algebra(&self, name: &str) -> Result<StructureConstants, CatalogError> {
        self.eval(name, &BTreeMap::new())
    }

    /// The `H²₃-nil` classes `ν₁, ν₂` of `g_{5,3}`, as cochains.
    pub fn nu1(&self) -> StructureConstants {
        parse_table_str(records::NU1, 5).expect("builtin").with_name("nu1")
    }

    pub fn nu2(&self) -> StructureConstants {
        parse_table_str(records::NU2, 5).expect("builtin").with_name("nu2")
    }
}
