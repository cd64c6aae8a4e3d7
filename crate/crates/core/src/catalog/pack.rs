//! Optional data pack: a directory with `manifest.json` and one table file per record.
//!
//! ```json
//! {"records": [{"name": "g_{247H_1}", "aliases": ["247H1"], "file": "247H1.json", "citation": "..."}]}
//! ```
//! Table files use the JSON schema of [`crate::lie::json`].

use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::error::CatalogError;
use crate::lie::{json, StructureConstants};

pub const PACK_ENV: &str = "NILRIGID_DATA_PACK";

#[derive(Deserialize)]
struct Manifest {
    records: Vec<ManifestEntry>,
}

#[derive(Deserialize)]
struct ManifestEntry {
    name: String,
    #[serde(default)]
    aliases: Vec<String>,
    file: String,
    citation: String,
}

#[derive(Clone, Debug)]
pub struct PackRecord {
    pub name: String,
    pub aliases: Vec<String>,
    pub citation: String,
    pub constants: StructureConstants,
}

#[derive(Clone, Debug)]
pub struct DataPack {
    pub root: PathBuf,
    pub records: Vec<PackRecord>,
    /// SHA-256 over the manifest followed by every table file, in manifest order.
    pub checksum: String,
}

impl DataPack {
    pub fn load(root: impl AsRef<Path>) -> Result<Self, CatalogError> {
        let root = root.as_ref().to_path_buf();
        let read = |p: &Path| fs::read(p).map_err(|e| CatalogError::Pack(format!("{}: {e}", p.display())));
        let manifest_bytes = read(&root.join("manifest.json"))?;
        let manifest: Manifest =
            serde_json::from_slice(&manifest_bytes).map_err(|e| CatalogError::Pack(format!("manifest.json: {e}")))?;
        let mut hasher = Sha256::new();
        hasher.update(&manifest_bytes);
        let mut records = Vec::with_capacity(manifest.records.len());
        for entry in manifest.records {
            let bytes = read(&root.join(&entry.file))?;
            hasher.update(&bytes);
            let text = String::from_utf8(bytes).map_err(|e| CatalogError::Pack(format!("{}: {e}", entry.file)))?;
            let mut constants = json::from_json(&text).map_err(|e| CatalogError::Pack(format!("{}: {e}", entry.file)))?;
            constants.set_name(Some(entry.name.clone()));
            records.push(PackRecord { name: entry.name, aliases: entry.aliases, citation: entry.citation, constants });
        }
        let checksum = hasher.finalize().iter().map(|b| format!("{b:02x}")).collect();
        Ok(DataPack { root, records, checksum })
    }

    /// The pack named by `NILRIGID_DATA_PACK`, if the variable is set.
    pub fn from_env() -> Option<Result<Self, CatalogError>> {
        std::env::var_os(PACK_ENV).filter(|v| !v.is_empty()).map(DataPack::load)
    }

    pub fn find(&self, name: &str) -> Option<&PackRecord> {
        self.records.iter().find(|r| r.name == name || r.aliases.iter().any(|a| a == name))
    }
}
