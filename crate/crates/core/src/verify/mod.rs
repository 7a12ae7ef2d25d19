//! End-to-end reproduction checks over the catalog, collected into a report.
//!
//! Every check becomes one [`CheckRecord`]. A check that cannot run (for
//! example because an algebra was replaced by one missing a generator) is
//! recorded as a failure rather than aborting the run.

mod checks;
mod report;

use std::collections::HashMap;

use crate::algebra::LieAlgebra;
use crate::catalog::{load_builtin, CatalogEntry, CatalogError};
use crate::par::Parallelism;

pub use report::{CheckRecord, Status, VerificationReport};

/// Builtin catalog with optional algebra replacements.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    overrides: HashMap<String, LieAlgebra>,
}

impl Catalog {
    pub fn builtin() -> Self {
        Catalog::default()
    }

    /// Replaces the algebra of builtin `name`; reference data is kept.
    pub fn with_algebra(mut self, name: &str, algebra: LieAlgebra) -> Self {
        self.overrides.insert(name.to_string(), algebra);
        self
    }

    pub fn load(&self, name: &str) -> Result<CatalogEntry, CatalogError> {
        let mut entry = load_builtin(name)?;
        if let Some(l) = self.overrides.get(name) {
            entry.algebra = l.clone();
        }
        Ok(entry)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Highest invariant degree solved for.
    pub degree_cap: u32,
    /// Seeds for the two generic-rank runs.
    pub seeds: [u64; 2],
    pub parallelism: Parallelism,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            degree_cap: 4,
            seeds: [1, 2],
            parallelism: Parallelism::default(),
        }
    }
}

/// Runs every check against `catalog`.
pub fn verify_catalog(catalog: &Catalog, opts: &VerifyOptions) -> VerificationReport {
    let mut report = VerificationReport::default();
    checks::run_all(catalog, opts, &mut report);
    report
}

#[cfg(test)]
mod tests;
