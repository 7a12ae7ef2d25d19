//! Builtin kinematical algebras with their reference Casimir polynomials.

mod algebras;
pub mod operator_table;
pub mod quartic;

use thiserror::Error;

use crate::algebra::LieAlgebra;
use crate::exact::{rat, MultiPoly};

pub use algebras::{
    extended_galilei, extended_poincare, extended_poincare_hbar, galilei, hbar_basis_change,
    iso3_h, lorentz4_relabel, poincare, poincare_lorentz4, so3,
};
pub use quartic::{Printing, QuarticFamily, TermGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("no builtin algebra named `{0}`")]
    UnknownCatalogName(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceInvariant {
    pub label: String,
    pub anchor: String,
    pub polynomial: MultiPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub algebra: LieAlgebra,
    pub reference_invariants: Vec<ReferenceInvariant>,
    /// Printed quartic sign variants, when the algebra has a quartic Casimir.
    pub quartic: Option<QuarticFamily>,
    pub expected_invariant_count: usize,
}

/// Sign pattern of the invariant relativistic quartic over
/// [`quartic::relativistic`] groups.
pub const RELATIVISTIC_QUARTIC_SIGNS: [i64; 5] = [1, -1, 1, -1, 2];
/// Sign pattern of the invariant Galilean quartic over [`quartic::galilean`] groups.
pub const GALILEAN_QUARTIC_SIGNS: [i64; 4] = [1, 1, -1, 2];

pub const BUILTIN_NAMES: [&str; 8] = [
    "so3",
    "iso3_h",
    "galilei",
    "extended_galilei",
    "poincare",
    "poincare_lorentz4",
    "extended_poincare",
    "extended_poincare_hbar",
];

/// `(name, dimension)` for every builtin.
pub fn list_builtins() -> Vec<(&'static str, usize)> {
    BUILTIN_NAMES
        .iter()
        .map(|&n| (n, load_builtin(n).expect("listed").algebra.dim()))
        .collect()
}

fn reference(algebra: &LieAlgebra, label: &str, anchor: &str, text: &str) -> ReferenceInvariant {
    ReferenceInvariant {
        label: label.to_string(),
        anchor: anchor.to_string(),
        polynomial: MultiPoly::parse(algebra.coordinates(), text).expect("catalog polynomial"),
    }
}

fn resolved(family: &QuarticFamily, signs: &[i64], label: &str) -> ReferenceInvariant {
    ReferenceInvariant {
        label: label.to_string(),
        anchor: format!("{}, sign-resolved", family.label),
        polynomial: family.combine(signs),
    }
}

pub fn load_builtin(name: &str) -> Result<CatalogEntry, CatalogError> {
    let entry = match name {
        "so3" => {
            let l = so3();
            CatalogEntry {
                reference_invariants: vec![reference(
                    &l,
                    "C2",
                    "rotational scalar",
                    "j1^2 + j2^2 + j3^2",
                )],
                quartic: None,
                expected_invariant_count: 1,
                algebra: l,
            }
        }
        "iso3_h" => {
            let l = iso3_h();
            CatalogEntry {
                reference_invariants: vec![
                    reference(&l, "H", "central energy", "h"),
                    reference(&l, "P2", "momentum squared", "p1^2 + p2^2 + p3^2"),
                    reference(&l, "JP", "helicity scalar", "j1*p1 + j2*p2 + j3*p3"),
                ],
                quartic: None,
                expected_invariant_count: 3,
                algebra: l,
            }
        }
        "galilei" => {
            let l = galilei();
            CatalogEntry {
                reference_invariants: vec![reference(
                    &l,
                    "P2",
                    "momentum squared",
                    "p1^2 + p2^2 + p3^2",
                )],
                quartic: None,
                expected_invariant_count: 2,
                algebra: l,
            }
        }
        "extended_galilei" => {
            let l = extended_galilei();
            let family = quartic::galilean(&l, "C4G");
            let mut refs = vec![
                reference(&l, "C1G", "mass", "m"),
                reference(
                    &l,
                    "C2G",
                    "mass times internal energy",
                    "m*h - 1/2*p1^2 - 1/2*p2^2 - 1/2*p3^2",
                ),
            ];
            refs.push(resolved(&family, &GALILEAN_QUARTIC_SIGNS, "C4G"));
            CatalogEntry {
                reference_invariants: refs,
                quartic: Some(family),
                expected_invariant_count: 3,
                algebra: l,
            }
        }
        "poincare" => {
            let l = poincare();
            let family = quartic::relativistic(&l, "kp", &["h"], "C4P");
            let refs = vec![
                reference(&l, "C2P", "mass squared", "h^2 - p1^2 - p2^2 - p3^2"),
                resolved(&family, &RELATIVISTIC_QUARTIC_SIGNS, "C4P"),
            ];
            CatalogEntry {
                reference_invariants: refs,
                quartic: Some(family),
                expected_invariant_count: 2,
                algebra: l,
            }
        }
        "poincare_lorentz4" => {
            let l = poincare_lorentz4();
            CatalogEntry {
                reference_invariants: vec![reference(
                    &l,
                    "C2P",
                    "mass squared",
                    "p0^2 - p1^2 - p2^2 - p3^2",
                )],
                quartic: None,
                expected_invariant_count: 2,
                algebra: l,
            }
        }
        "extended_poincare" => {
            let l = extended_poincare();
            let family = quartic::relativistic(&l, "kp", &["h"], "C4P");
            let refs = vec![
                reference(&l, "C1PE", "central mass", "m"),
                reference(&l, "C2P", "mass squared", "h^2 - p1^2 - p2^2 - p3^2"),
                resolved(&family, &RELATIVISTIC_QUARTIC_SIGNS, "C4P"),
            ];
            CatalogEntry {
                reference_invariants: refs,
                quartic: Some(family),
                expected_invariant_count: 3,
                algebra: l,
            }
        }
        "extended_poincare_hbar" => {
            let l = extended_poincare_hbar();
            let family = quartic::relativistic(&l, "kp", &["hbar", "m"], "C4PE");
            let refs = vec![
                reference(&l, "C1PE", "central mass", "m"),
                reference(
                    &l,
                    "C2PE",
                    "mass squared, shifted energy",
                    "-p1^2 - p2^2 - p3^2 + hbar^2 + m^2 + 2*hbar*m",
                ),
                resolved(&family, &RELATIVISTIC_QUARTIC_SIGNS, "C4PE"),
            ];
            CatalogEntry {
                reference_invariants: refs,
                quartic: Some(family),
                expected_invariant_count: 3,
                algebra: l,
            }
        }
        other => return Err(CatalogError::UnknownCatalogName(other.to_string())),
    };
    Ok(entry)
}

impl CatalogEntry {
    pub fn reference(&self, label: &str) -> Option<&ReferenceInvariant> {
        self.reference_invariants.iter().find(|r| r.label == label)
    }
}

/// The quadratic `m·h − ½ p·p` written over arbitrary momentum stems, used
/// when comparing contracted polynomials.
pub fn galilean_quadratic(
    vars: &std::sync::Arc<crate::exact::VarSet>,
    m: &str,
    h: &str,
) -> MultiPoly {
    let mh = &MultiPoly::var(vars, m).expect("mass") * &MultiPoly::var(vars, h).expect("energy");
    &mh - &quartic::square(vars, "p", rat(1, 2))
}
