//! Bracket tables of the builtin algebras.
//!
//! Constants are real: a bracket `[A, B] = i C` of the physics convention is
//! stored as `[A, B] = C`. Dropping the common factor rescales every
//! operator uniformly and leaves the invariants unchanged.

use crate::algebra::{BasisChange, BracketSpec, LieAlgebra};
use crate::exact::{int, Rational};

fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

fn names(stem: &str) -> [String; 3] {
    [1, 2, 3].map(|i| format!("{stem}{i}"))
}

/// `[a_i, b_j] = sign · ε_ijk c_k` for all `i < j` when `a == b`, else all `i, j`.
fn vector_brackets(out: &mut Vec<BracketSpec>, a: &str, b: &str, c: &str, sign: i64) {
    let (a, b, c) = (names(a), names(b), names(c));
    for i in 0..3 {
        for j in 0..3 {
            if a == b && i >= j {
                continue;
            }
            let terms: Vec<(String, Rational)> = (0..3)
                .filter(|&k| levi_civita(i, j, k) != 0)
                .map(|k| (c[k].clone(), int(sign * levi_civita(i, j, k))))
                .collect();
            if !terms.is_empty() {
                out.push(BracketSpec {
                    left: a[i].clone(),
                    right: b[j].clone(),
                    terms,
                });
            }
        }
    }
}

fn rotations(out: &mut Vec<BracketSpec>, vectors: &[&str]) {
    vector_brackets(out, "j", "j", "j", 1);
    for v in vectors {
        vector_brackets(out, "j", v, v, 1);
    }
}

fn build(name: &str, generators: &[String], brackets: &[BracketSpec]) -> LieAlgebra {
    let gens: Vec<&str> = generators.iter().map(String::as_str).collect();
    LieAlgebra::new(name, &gens, brackets).expect("builtin table is well formed")
}

fn kinematical(boost: &str, extra: &[&str]) -> Vec<String> {
    let mut g: Vec<String> = names("j")
        .into_iter()
        .chain(names("p"))
        .chain(names(boost))
        .collect();
    g.extend(extra.iter().map(|s| s.to_string()));
    g
}

pub fn so3() -> LieAlgebra {
    let mut b = Vec::new();
    rotations(&mut b, &[]);
    build("so3", &names("j"), &b)
}

/// Rotations, translations and a central energy.
pub fn iso3_h() -> LieAlgebra {
    let mut b = Vec::new();
    rotations(&mut b, &["p"]);
    let g: Vec<String> = names("j")
        .into_iter()
        .chain(names("p"))
        .chain(["h".to_string()])
        .collect();
    build("iso3_h", &g, &b)
}

fn galilei_brackets(with_mass: bool) -> Vec<BracketSpec> {
    let mut b = Vec::new();
    rotations(&mut b, &["p", "kg"]);
    for i in 1..=3 {
        b.push(BracketSpec::new(
            "h",
            &format!("kg{i}"),
            &[(&format!("p{i}"), int(-1))],
        ));
        if with_mass {
            b.push(BracketSpec::new(
                &format!("p{i}"),
                &format!("kg{i}"),
                &[("m", int(-1))],
            ));
        }
    }
    b
}

pub fn galilei() -> LieAlgebra {
    build(
        "galilei",
        &kinematical("kg", &["h"]),
        &galilei_brackets(false),
    )
}

/// Galilei with the mass charge: `[p_i, kg_j] = −δ_ij m`.
pub fn extended_galilei() -> LieAlgebra {
    build(
        "extended_galilei",
        &kinematical("kg", &["h", "m"]),
        &galilei_brackets(true),
    )
}

pub fn poincare() -> LieAlgebra {
    let mut b = Vec::new();
    rotations(&mut b, &["p", "kp"]);
    vector_brackets(&mut b, "kp", "kp", "j", -1);
    for i in 1..=3 {
        b.push(BracketSpec::new(
            "h",
            &format!("kp{i}"),
            &[(&format!("p{i}"), int(-1))],
        ));
        b.push(BracketSpec::new(
            &format!("p{i}"),
            &format!("kp{i}"),
            &[("h", int(-1))],
        ));
    }
    build("poincare", &kinematical("kp", &["h"]), &b)
}

/// Direct sum of Poincaré with a central `m`.
pub fn extended_poincare() -> LieAlgebra {
    poincare()
        .trivial_central_extension("m")
        .expect("m is new")
        .renamed("extended_poincare")
}

/// The basis change taking `h` to `hbar = h − m`.
pub fn hbar_basis_change(extended: &LieAlgebra) -> BasisChange {
    BasisChange::replace(extended, "h", "hbar", &[("h", int(1)), ("m", int(-1))])
        .expect("extended Poincaré has h and m")
}

pub fn extended_poincare_hbar() -> LieAlgebra {
    let ext = extended_poincare();
    ext.change_basis(&hbar_basis_change(&ext))
        .expect("invertible")
        .renamed("extended_poincare_hbar")
}

/// Index pairs of the six Lorentz generators, named `m01 m02 m03 m23 m31 m12`.
const LORENTZ_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2)];

/// Metric with signature (+, −, −, −).
fn eta(mu: usize, nu: usize) -> i64 {
    match (mu == nu, mu) {
        (false, _) => 0,
        (true, 0) => 1,
        (true, _) => -1,
    }
}

/// `M_{μν}` as (generator index, sign) among the six stored generators;
/// `None` on the diagonal.
fn lorentz(mu: usize, nu: usize) -> Option<(usize, i64)> {
    LORENTZ_PAIRS.iter().enumerate().find_map(|(k, &(a, b))| {
        if (a, b) == (mu, nu) {
            Some((4 + k, 1))
        } else if (b, a) == (mu, nu) {
            Some((4 + k, -1))
        } else {
            None
        }
    })
}

/// Poincaré over the covariant basis: momenta `p0..p3` (upper index) and
/// `m_{μν}` (lower indices), with
/// `[M_μν, M_ρσ] = −(η_μρ M_νσ − η_μσ M_νρ − η_νρ M_μσ + η_νσ M_μρ)` and
/// `[M_μν, P^ρ] = −(δ_μ^ρ η_νβ − δ_ν^ρ η_μβ) P^β`.
pub fn poincare_lorentz4() -> LieAlgebra {
    let mut gens: Vec<String> = (0..4).map(|m| format!("p{m}")).collect();
    gens.extend(LORENTZ_PAIRS.iter().map(|(a, b)| format!("m{a}{b}")));
    let mut acc = std::collections::BTreeMap::<(usize, usize), Vec<(usize, i64)>>::new();
    let mut push = |l: usize, r: usize, terms: Vec<(usize, i64)>| {
        let entry = acc.entry((l, r)).or_default();
        entry.extend(terms);
    };
    for (x, &(mu, nu)) in LORENTZ_PAIRS.iter().enumerate() {
        let left = 4 + x;
        for (y, &(rho, sigma)) in LORENTZ_PAIRS.iter().enumerate().skip(x + 1) {
            let mut terms = Vec::new();
            for (coef, a, b) in [
                (eta(mu, rho), nu, sigma),
                (-eta(mu, sigma), nu, rho),
                (-eta(nu, rho), mu, sigma),
                (eta(nu, sigma), mu, rho),
            ] {
                if coef == 0 {
                    continue;
                }
                if let Some((g, s)) = lorentz(a, b) {
                    terms.push((g, -coef * s));
                }
            }
            push(left, 4 + y, terms);
        }
        for rho in 0..4 {
            let mut terms = Vec::new();
            for beta in 0..4 {
                let c = i64::from(mu == rho) * eta(nu, beta) - i64::from(nu == rho) * eta(mu, beta);
                if c != 0 {
                    terms.push((beta, -c));
                }
            }
            push(left, rho, terms);
        }
    }
    let brackets: Vec<BracketSpec> = acc
        .into_iter()
        .map(|((l, r), terms)| BracketSpec {
            left: gens[l].clone(),
            right: gens[r].clone(),
            terms: terms
                .into_iter()
                .map(|(g, v)| (gens[g].clone(), int(v)))
                .collect(),
        })
        .collect();
    build("poincare_lorentz4", &gens, &brackets)
}

/// Renaming from the covariant basis onto the kinematical one.
pub fn lorentz4_relabel() -> std::collections::HashMap<String, String> {
    [
        ("p0", "h"),
        ("m01", "kp1"),
        ("m02", "kp2"),
        ("m03", "kp3"),
        ("m23", "j1"),
        ("m31", "j2"),
        ("m12", "j3"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect()
}
