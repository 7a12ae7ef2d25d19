//! Quartic Casimir candidates as signed sums of fixed term groups.
//!
//! The quartic invariants of the kinematical algebras are combinations of
//! five rotation scalars built from `j`, `p`, the boosts `k` and an energy-like
//! scalar `e`:
//!
//! ```text
//! e²(j·j)   (j·p)²   (p·p)(k·k)   (p·k)²   e·Σ ε_ijk p_i k_j j_k
//! ```
//!
//! Printed forms of these invariants differ only in the signs of the groups,
//! so candidate sign patterns can be enumerated and tested exactly.

use std::sync::Arc;

use crate::algebra::LieAlgebra;
use crate::exact::{int, MultiPoly, Rational, VarSet};
use crate::invariants::is_invariant;

/// A named summand of a quartic candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermGroup {
    pub name: String,
    pub poly: MultiPoly,
}

/// One printed sign pattern together with where it was printed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Printing {
    pub anchor: String,
    pub coefficients: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticFamily {
    pub label: String,
    pub groups: Vec<TermGroup>,
    pub printings: Vec<Printing>,
}

impl QuarticFamily {
    pub fn combine(&self, coefficients: &[i64]) -> MultiPoly {
        assert_eq!(coefficients.len(), self.groups.len());
        let vars = self.groups[0].poly.vars().clone();
        let mut out = MultiPoly::zero(&vars);
        for (g, &c) in self.groups.iter().zip(coefficients) {
            out = &out + &g.poly.scale(&int(c));
        }
        out
    }

    /// Coefficient magnitudes shared by every printing.
    pub fn magnitudes(&self) -> Vec<i64> {
        self.printings[0]
            .coefficients
            .iter()
            .map(|c| c.abs())
            .collect()
    }

    /// Every sign pattern (first group positive) whose sum is invariant.
    pub fn sign_resolutions(&self, algebra: &LieAlgebra) -> Vec<Vec<i64>> {
        let mags = self.magnitudes();
        let free = mags.len() - 1;
        (0..1u32 << free)
            .map(|mask| {
                let mut c = mags.clone();
                for (bit, x) in c.iter_mut().skip(1).enumerate() {
                    if mask & (1 << bit) != 0 {
                        *x = -*x;
                    }
                }
                c
            })
            .filter(|c| is_invariant(algebra, &self.combine(c)).unwrap_or(false))
            .collect()
    }
}

fn v(vars: &Arc<VarSet>, name: &str) -> MultiPoly {
    MultiPoly::var(vars, name).expect("catalog coordinate")
}

fn dot(vars: &Arc<VarSet>, a: &str, b: &str) -> MultiPoly {
    let mut out = MultiPoly::zero(vars);
    for i in 1..=3 {
        out = &out + &(&v(vars, &format!("{a}{i}")) * &v(vars, &format!("{b}{i}")));
    }
    out
}

/// `Σ ε_ijk p_i k_j j_k`.
fn triple(vars: &Arc<VarSet>, boost: &str) -> MultiPoly {
    let mut out = MultiPoly::zero(vars);
    for (i, j, k) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
        let plus = &(&v(vars, &format!("p{i}")) * &v(vars, &format!("{boost}{j}")))
            * &v(vars, &format!("j{k}"));
        let minus = &(&v(vars, &format!("p{j}")) * &v(vars, &format!("{boost}{i}")))
            * &v(vars, &format!("j{k}"));
        out = &(&out + &plus) - &minus;
    }
    out
}

/// `e` as a polynomial, e.g. `h` or `hbar + m`.
fn energy(vars: &Arc<VarSet>, parts: &[&str]) -> MultiPoly {
    let mut out = MultiPoly::zero(vars);
    for p in parts {
        out = &out + &v(vars, p);
    }
    out
}

/// Relativistic family: groups `e²(j·j), (j·p)², (p·p)(k·k), (p·k)², e·ε p k j`.
pub fn relativistic(algebra: &LieAlgebra, boost: &str, e: &[&str], label: &str) -> QuarticFamily {
    let vars = algebra.coordinates();
    let e = energy(vars, e);
    let jj = dot(vars, "j", "j");
    let jp = dot(vars, "j", "p");
    let groups = vec![
        TermGroup {
            name: "e^2 (j.j)".into(),
            poly: &(&e * &e) * &jj,
        },
        TermGroup {
            name: "(j.p)^2".into(),
            poly: &jp * &jp,
        },
        TermGroup {
            name: "(p.p)(k.k)".into(),
            poly: &dot(vars, "p", "p") * &dot(vars, boost, boost),
        },
        TermGroup {
            name: "(p.k)^2".into(),
            poly: dot(vars, "p", boost).pow(2),
        },
        TermGroup {
            name: "e eps p k j".into(),
            poly: &e * &triple(vars, boost),
        },
    ];
    QuarticFamily {
        label: label.to_string(),
        groups,
        printings: vec![
            Printing {
                anchor: "quartic Casimir, kinematical basis printing".into(),
                coefficients: vec![1, 1, -1, -1, -2],
            },
            Printing {
                anchor: "quartic Casimir, extended basis printing".into(),
                coefficients: vec![1, -1, -1, 1, -2],
            },
        ],
    }
}

/// Galilean family: groups `m²(j·j), (p·p)(k·k), (p·k)², m·ε p k j`.
pub fn galilean(algebra: &LieAlgebra, label: &str) -> QuarticFamily {
    let vars = algebra.coordinates();
    let m = v(vars, "m");
    let groups = vec![
        TermGroup {
            name: "m^2 (j.j)".into(),
            poly: &(&m * &m) * &dot(vars, "j", "j"),
        },
        TermGroup {
            name: "(p.p)(k.k)".into(),
            poly: &dot(vars, "p", "p") * &dot(vars, "kg", "kg"),
        },
        TermGroup {
            name: "(p.k)^2".into(),
            poly: dot(vars, "p", "kg").pow(2),
        },
        TermGroup {
            name: "m eps p k j".into(),
            poly: &m * &triple(vars, "kg"),
        },
    ];
    QuarticFamily {
        label: label.to_string(),
        groups,
        printings: vec![Printing {
            anchor: "quartic Casimir, extended Galilei printing".into(),
            coefficients: vec![1, -1, 1, -2],
        }],
    }
}

/// `Σ c·x_i²` over a three-vector.
pub(crate) fn square(vars: &Arc<VarSet>, stem: &str, c: Rational) -> MultiPoly {
    dot(vars, stem, stem).scale(&c)
}
