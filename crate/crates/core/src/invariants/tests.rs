use super::*;
use crate::algebra::BracketSpec;
use crate::exact::int;
use crate::par::Parallelism;

fn so3() -> LieAlgebra {
    LieAlgebra::new(
        "so3",
        &["j1", "j2", "j3"],
        &[
            BracketSpec::new("j1", "j2", &[("j3", int(1))]),
            BracketSpec::new("j2", "j3", &[("j1", int(1))]),
            BracketSpec::new("j3", "j1", &[("j2", int(1))]),
        ],
    )
    .unwrap()
}

fn heis() -> LieAlgebra {
    LieAlgebra::new(
        "heis",
        &["x", "p", "z"],
        &[BracketSpec::new("x", "p", &[("z", int(1))])],
    )
    .unwrap()
}

fn texts(b: &InvariantBasis) -> Vec<String> {
    b.polynomials.iter().map(ToString::to_string).collect()
}

#[test]
fn rotation_operator() {
    let op = coadjoint_operator(&so3(), "j1").unwrap();
    assert_eq!(op.to_string(), "j3*d_j2 - j2*d_j3");
    assert!(coadjoint_operator(&heis(), "z").unwrap().is_zero());
    assert!(coadjoint_operator(&so3(), "q").is_err());
}

#[test]
fn rotation_invariants_by_degree() {
    let l = so3();
    assert!(invariant_space(&l, 1).polynomials.is_empty());
    assert_eq!(texts(&invariant_space(&l, 2)), ["j1^2 + j2^2 + j3^2"]);
    assert!(invariant_space(&l, 3).polynomials.is_empty());
    let d4 = invariant_space(&l, 4);
    assert_eq!(d4.dim(), 1);
    let lower = [invariant_space(&l, 2)];
    assert!(new_invariants(&l, 4, &lower).polynomials.is_empty());
    assert_eq!(texts(&invariant_space(&l, 0)), ["1"]);
}

#[test]
fn policies_agree() {
    let l = heis();
    for d in 0..4 {
        assert_eq!(
            invariant_space_with(&l, d, Parallelism::Sequential),
            invariant_space_with(&l, d, Parallelism::Parallel)
        );
    }
}

#[test]
fn central_invariants() {
    let l = heis();
    assert_eq!(texts(&invariant_space(&l, 1)), ["z"]);
    assert_eq!(texts(&invariant_space(&l, 2)), ["z^2"]);
    let lower = [invariant_space(&l, 1)];
    assert!(new_invariants(&l, 2, &lower).polynomials.is_empty());
    assert_eq!(invariant_count(&l, 1).unwrap(), 1);
    assert_eq!(invariant_count(&so3(), 1).unwrap(), 1);
}

#[test]
fn membership() {
    let l = so3();
    let v = l.coordinates();
    assert!(is_invariant(&l, &MultiPoly::parse(v, "j1^2 + j2^2 + j3^2").unwrap()).unwrap());
    assert!(!is_invariant(&l, &MultiPoly::parse(v, "j1^2").unwrap()).unwrap());
    assert!(is_invariant(&l, &MultiPoly::parse(v, "7").unwrap()).unwrap());
    let other = heis();
    let foreign = MultiPoly::parse(other.coordinates(), "z").unwrap();
    assert!(matches!(
        is_invariant(&l, &foreign),
        Err(InvariantError::ForeignVariable(_))
    ));
}

#[test]
fn contracted_rotation_invariant() {
    let l = so3();
    let s = GradedScaling::new(&[("j1", 1), ("j2", 1), ("j3", 0)]);
    let c = MultiPoly::parse(l.coordinates(), "j1^2 + j2^2 + j3^2").unwrap();
    let out = contract_invariant(&l, &s, &c).unwrap();
    assert_eq!(out.shift, 2);
    assert_eq!(out.limit.to_string(), "j1^2 + j2^2");
    assert_eq!(out.normalized().coefficient(2).to_string(), "j3^2");

    let not_inv = MultiPoly::parse(l.coordinates(), "j1").unwrap();
    assert!(matches!(
        contract_invariant(&l, &s, &not_inv),
        Err(InvariantError::NotInvariant(_))
    ));
    let bad = GradedScaling::new(&[("j1", 0), ("j2", 0), ("j3", 1)]);
    assert!(matches!(
        contract_invariant(&l, &bad, &c),
        Err(InvariantError::Contraction(
            ContractionError::IllDefinedContraction { .. }
        ))
    ));
}

#[test]
fn rest_frame_needs_momenta() {
    let l = so3();
    let c = MultiPoly::parse(l.coordinates(), "j1^2").unwrap();
    assert_eq!(
        evaluate_at_rest(&c),
        Err(InvariantError::ForeignVariable("p1".into()))
    );
}
