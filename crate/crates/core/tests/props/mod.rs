//! Randomized properties shared by the `properties` and `acceptance` targets.

use std::collections::HashMap;

use liecas::algebra::{AlgebraElement, LieAlgebra};
use liecas::catalog::{load_builtin, BUILTIN_NAMES};
use liecas::contraction::{contraction_limit, ContractionError, GradedScaling};
use liecas::exact::{
    int, nullspace, EpsilonSeries, Monomial, MultiPoly, Rational, RationalMatrix, VarSet,
};
use liecas::invariants::coadjoint_operator;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub const CASES: u32 = 200;

pub fn runner() -> TestRunner {
    TestRunner::new(Config::with_cases(CASES))
}

fn algebra(i: usize) -> LieAlgebra {
    load_builtin(BUILTIN_NAMES[i % BUILTIN_NAMES.len()])
        .unwrap()
        .algebra
}

fn element(l: &LieAlgebra, coeffs: &[i64]) -> AlgebraElement {
    let terms: Vec<(&str, Rational)> = l
        .generators()
        .iter()
        .zip(coeffs)
        .map(|(g, &c)| (g.as_str(), int(c)))
        .collect();
    AlgebraElement::from_terms(&terms)
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, 11)
}

/// Small polynomials in the first `n` variables of `vars`.
fn polynomial(vars: &std::sync::Arc<VarSet>, terms: &[(Vec<u32>, i64)]) -> MultiPoly {
    let mut p = MultiPoly::zero(vars);
    for (exps, c) in terms {
        let mut e = vec![0; vars.len()];
        for (i, x) in exps.iter().enumerate().take(vars.len()) {
            e[i] = *x;
        }
        p.add_term(Monomial::from_exponents(e), int(*c));
    }
    p
}

fn poly_terms() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..=2, 11), -4i64..=4), 0..5)
}

pub fn bracket_bilinear_antisymmetric(r: &mut TestRunner) -> Result<(), String> {
    let strat = (
        0usize..8,
        coeffs(),
        coeffs(),
        coeffs(),
        -4i64..=4,
        -4i64..=4,
    );
    r.run(&strat, |(i, u, v, w, a, b)| {
        let l = algebra(i);
        let (u, v, w) = (element(&l, &u), element(&l, &v), element(&l, &w));
        let (a, b) = (int(a), int(b));
        let left = l.bracket(&u.scale(&a).add(&v.scale(&b)), &w).unwrap();
        let right = l
            .bracket(&u, &w)
            .unwrap()
            .scale(&a)
            .add(&l.bracket(&v, &w).unwrap().scale(&b));
        prop_assert_eq!(left, right);
        let uv = l.bracket(&u, &v).unwrap();
        let vu = l.bracket(&v, &u).unwrap();
        prop_assert!(uv.add(&vu).is_zero());
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn leibniz(r: &mut TestRunner) -> Result<(), String> {
    let strat = (0usize..8, 0usize..11, poly_terms(), poly_terms());
    r.run(&strat, |(i, g, p, q)| {
        let l = algebra(i);
        let op = coadjoint_operator(&l, l.generator(g % l.dim())).unwrap();
        let (p, q) = (
            polynomial(l.coordinates(), &p),
            polynomial(l.coordinates(), &q),
        );
        let lhs = op.apply(&(&p * &q));
        let rhs = &(&op.apply(&p) * &q) + &(&p * &op.apply(&q));
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn substitution_homomorphism(r: &mut TestRunner) -> Result<(), String> {
    let strat = (
        poly_terms(),
        poly_terms(),
        prop::collection::vec(-3i64..=3, 4),
    );
    r.run(&strat, |(p, q, exps)| {
        let vars = VarSet::new(["a", "b", "c", "d"]).unwrap();
        let (p, q) = (polynomial(&vars, &p), polynomial(&vars, &q));
        let images: HashMap<String, EpsilonSeries> = vars
            .names()
            .iter()
            .zip(&exps)
            .map(|(n, &k)| {
                (
                    n.clone(),
                    EpsilonSeries::term(k, MultiPoly::var(&vars, n).unwrap()),
                )
            })
            .collect();
        let s = |x: &MultiPoly| x.substitute(&images, &vars).unwrap();
        prop_assert_eq!(s(&(&p * &q)), &s(&p) * &s(&q));
        prop_assert_eq!(s(&(&p + &q)), &s(&p) + &s(&q));
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn nullspace_correct(r: &mut TestRunner) -> Result<(), String> {
    let strat = (1usize..6, 1usize..7).prop_flat_map(|(rows, cols)| {
        (
            Just(cols),
            prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows),
        )
    });
    r.run(&strat, |(cols, rows)| {
        let dense: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        let m = RationalMatrix::from_dense(cols, dense).unwrap();
        let basis = nullspace(&m);
        for n in &basis {
            prop_assert!(m.apply(n).iter().all(|x| *x == int(0)));
        }
        prop_assert_eq!(basis.len() + m.rank(), cols);
        let stacked = RationalMatrix::from_dense(cols, basis.clone()).unwrap();
        prop_assert_eq!(stacked.rank(), basis.len());
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn contraction_preserves_jacobi(r: &mut TestRunner) -> Result<(), String> {
    let strat = (0usize..8, prop::collection::vec(0i64..=3, 11));
    r.run(&strat, |(i, exps)| {
        let l = algebra(i);
        let s = GradedScaling::from_map(
            l.generators()
                .iter()
                .cloned()
                .zip(exps.iter().copied())
                .collect(),
        );
        match contraction_limit(&l, &s) {
            Ok(limit) => prop_assert!(limit.jacobi_check().is_empty()),
            Err(ContractionError::IllDefinedContraction { .. }) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub type Property = fn(&mut TestRunner) -> Result<(), String>;

#[allow(dead_code)]
pub const ALL: [(&str, Property); 5] = [
    (
        "bracket bilinearity and antisymmetry",
        bracket_bilinear_antisymmetric,
    ),
    ("Leibniz rule", leibniz),
    ("substitution homomorphism", substitution_homomorphism),
    ("nullspace correctness", nullspace_correct),
    ("contraction preserves Jacobi", contraction_preserves_jacobi),
];
