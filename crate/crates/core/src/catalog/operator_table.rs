//! Hand-printed coadjoint operators of the extended Poincaré algebra in the
//! `hbar` basis, kept verbatim (typos included) for auditing the derived ones.

use crate::algebra::LieAlgebra;
use crate::exact::MultiPoly;
use crate::invariants::{coadjoint_operator, DiffOperator, InvariantError};

const PRINTED: &[(&str, &[(&str, &str)])] = &[
    (
        "j1",
        &[
            ("j3", "j2"),
            ("-j2", "j3"),
            ("p3", "p2"),
            ("-p2", "p3"),
            ("kp3", "kp2"),
            ("-p2", "kp3"),
        ],
    ),
    (
        "j2",
        &[
            ("-j3", "j1"),
            ("j1", "j3"),
            ("-p3", "p1"),
            ("p1", "p3"),
            ("-kp3", "kp1"),
            ("-kp1", "kp3"),
        ],
    ),
    (
        "j3",
        &[
            ("j2", "j1"),
            ("-j1", "j2"),
            ("p2", "p1"),
            ("-p1", "p2"),
            ("kp2", "kp1"),
            ("-kp1", "kp2"),
        ],
    ),
    ("p1", &[("p3", "j2"), ("-p2", "j3"), ("-hbar - m", "kp1")]),
    ("p2", &[("-p3", "j1"), ("p1", "j3"), ("-hbar - m", "kp2")]),
    ("p3", &[("p2", "j1"), ("-p1", "j2"), ("-hbar - m", "kp3")]),
    (
        "kp1",
        &[
            ("kp3", "j2"),
            ("-kp2", "j3"),
            ("hbar + m", "p1"),
            ("-j3", "kp2"),
            ("j2", "kp3"),
            ("p1", "hbar"),
        ],
    ),
    (
        "kp2",
        &[
            ("-kp3", "j1"),
            ("kp1", "j3"),
            ("hbar + m", "p2"),
            ("j3", "kp1"),
            ("-j1", "kp3"),
            ("p2", "hbar"),
        ],
    ),
    (
        "kp3",
        &[
            ("kp2", "j1"),
            ("-kp1", "j2"),
            ("hbar + m", "p3"),
            ("-j2", "kp1"),
            ("j1", "kp2"),
            ("p3", "hbar"),
        ],
    ),
    ("hbar", &[("p1", "kp1"), ("p2", "kp2"), ("p3", "kp3")]),
    ("m", &[]),
];

/// `(operator, differentiation variable)` pairs where the printed table is
/// known to disagree with the bracket table.
pub const LISTED_DISCREPANCIES: [(&str, &str); 5] = [
    ("j1", "kp3"),
    ("j2", "kp3"),
    ("hbar", "kp1"),
    ("hbar", "kp2"),
    ("hbar", "kp3"),
];

/// The printed operators over `algebra`'s coordinates, in table order.
/// Fails when `algebra` lacks one of the printed variables.
pub fn printed_operators(
    algebra: &LieAlgebra,
) -> Result<Vec<(String, DiffOperator)>, InvariantError> {
    let vars = algebra.coordinates();
    PRINTED
        .iter()
        .map(|(g, terms)| {
            let mut parsed = Vec::with_capacity(terms.len());
            for (c, x) in terms.iter() {
                parsed.push((MultiPoly::parse(vars, c)?, x.to_string()));
            }
            Ok((g.to_string(), DiffOperator::from_terms(vars, parsed)?))
        })
        .collect()
}

/// A differentiation term where printed and derived coefficients differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorDiscrepancy {
    pub generator: String,
    pub variable: String,
    pub printed: MultiPoly,
    pub derived: MultiPoly,
}

/// Term-by-term comparison of the printed operators against
/// [`coadjoint_operator`].
pub fn audit(algebra: &LieAlgebra) -> Result<Vec<OperatorDiscrepancy>, InvariantError> {
    let vars = algebra.coordinates();
    let mut out = Vec::new();
    for (g, printed) in printed_operators(algebra)? {
        let derived = coadjoint_operator(algebra, &g)?;
        for i in 0..vars.len() {
            let (a, b) = (printed.coefficient(i), derived.coefficient(i));
            if a != b {
                out.push(OperatorDiscrepancy {
                    generator: g.clone(),
                    variable: vars.name(i).to_string(),
                    printed: a,
                    derived: b,
                });
            }
        }
    }
    Ok(out)
}
