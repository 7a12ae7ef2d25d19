use std::collections::{BTreeMap, BTreeSet};

use super::{Catalog, Status, VerificationReport, VerifyOptions};
use crate::algebra::LieAlgebra;
use crate::catalog::{
    hbar_basis_change, lorentz4_relabel, operator_table, CatalogEntry, BUILTIN_NAMES,
};
use crate::contraction::{
    contract_and_compare, contraction_limit, parse_relabel, parse_scale, ContractionError,
};
use crate::exact::{int, Monomial, MultiPoly, RationalMatrix};
use crate::invariants::{
    contract_invariant, evaluate_at_rest, invariant_count, invariant_space_with, is_invariant,
    new_invariants_from, InvariantBasis,
};

type Outcome = Result<(bool, Vec<String>), String>;

fn record(
    rep: &mut VerificationReport,
    id: &str,
    description: &str,
    anchor: &str,
    outcome: Outcome,
) {
    match outcome {
        Ok((ok, detail)) => rep.check(id, description, anchor, ok, detail),
        Err(e) => rep.push(
            id,
            description,
            anchor,
            Status::Fail,
            vec![format!("error: {e}")],
        ),
    }
}

fn load(cat: &Catalog, name: &str) -> Result<CatalogEntry, String> {
    cat.load(name).map_err(|e| e.to_string())
}

/// Extended Poincaré in the shifted-energy basis.
pub const CONTRACTION_SOURCE: &str = "extended_poincare_hbar";
pub const CONTRACTION_SCALE: &str = "J=0,P=1,K=1,Hbar=0,M=2";
pub const CONTRACTION_MAP: &str = "KP=KG,Hbar=H";

pub(super) fn run_all(cat: &Catalog, opts: &VerifyOptions, rep: &mut VerificationReport) {
    jacobi(cat, rep);
    shared_subalgebra(cat, rep);
    transcription(cat, rep);
    boost_brackets(cat, rep);
    extension(cat, rep);
    contraction(cat, rep);
    let spaces = invariant_spaces(cat, opts, rep);
    membership(cat, &spaces, rep);
    quartic_signs(cat, rep);
    casimir_limits(cat, rep);
    operator_table_audit(cat, &spaces, rep);
    rest_frame(cat, rep);
    counts(cat, opts, rep);
}

fn jacobi(cat: &Catalog, rep: &mut VerificationReport) {
    for name in BUILTIN_NAMES {
        let outcome = load(cat, name).map(|e| {
            let bad = e.algebra.jacobi_check();
            let detail = bad
                .iter()
                .map(|v| format!("[{}] residual {}", v.triple.join(", "), v.residual))
                .collect();
            (bad.is_empty(), detail)
        });
        record(
            rep,
            &format!("jacobi.{name}"),
            &format!("{name} satisfies the Jacobi identity"),
            "builtin bracket tables",
            outcome,
        );
    }
}

const SHARED: [&str; 7] = ["j1", "j2", "j3", "p1", "p2", "p3", "h"];

fn shared_subalgebra(cat: &Catalog, rep: &mut VerificationReport) {
    let outcome = (|| {
        let p = load(cat, "poincare")?
            .algebra
            .subalgebra(&SHARED)
            .map_err(|e| e.to_string())?;
        let g = load(cat, "galilei")?
            .algebra
            .subalgebra(&SHARED)
            .map_err(|e| e.to_string())?;
        let iso = load(cat, "iso3_h")?.algebra;
        let same = p.generators() == g.generators()
            && p.structure_constants() == g.structure_constants()
            && p.structure_constants() == iso.structure_constants();
        let detail = vec![
            format!("dimension {}", p.dim()),
            format!("{} nonzero constants", p.structure_constants().len()),
        ];
        Ok((same && p.dim() == 7, detail))
    })();
    record(
        rep,
        "subalgebra.iso3_h",
        "rotations, momenta and energy span the same 7-dimensional subalgebra in both groups",
        "shared seven-dimensional subgroup",
        outcome,
    );
}

fn transcription(cat: &Catalog, rep: &mut VerificationReport) {
    let outcome = (|| {
        let l4 = load(cat, "poincare_lorentz4")?.algebra;
        let p = load(cat, "poincare")?.algebra;
        let same = l4
            .same_structure(&p, &lorentz4_relabel())
            .map_err(|e| e.to_string())?;
        let mut map: Vec<String> = lorentz4_relabel()
            .into_iter()
            .map(|(a, b)| format!("{a} -> {b}"))
            .collect();
        map.sort();
        Ok((same, map))
    })();
    record(
        rep,
        "transcription.lorentz4",
        "covariant tensor basis maps onto the kinematical Poincare basis",
        "covariant Poincare brackets",
        outcome,
    );
}

fn boost_brackets(cat: &Catalog, rep: &mut VerificationReport) {
    let outcome = (|| {
        let p = load(cat, "poincare")?.algebra;
        let g = load(cat, "galilei")?.algebra;
        let mut differing = BTreeSet::new();
        for a in 0..p.dim() {
            for b in a + 1..p.dim() {
                let (x, y) = (p.generator(a), p.generator(b));
                let left = p
                    .bracket_generators(x, y)
                    .map_err(|e| e.to_string())?
                    .to_string()
                    .replace("kp", "kg");
                let right = g
                    .bracket_generators(&x.replace("kp", "kg"), &y.replace("kp", "kg"))
                    .map_err(|e| e.to_string())?
                    .to_string();
                if left != right {
                    differing.insert(format!("[{x}, {y}]"));
                }
            }
        }
        let expected: BTreeSet<String> = (1..=3)
            .flat_map(|i| {
                let mut v = vec![format!("[p{i}, kp{i}]")];
                for j in i + 1..=3 {
                    v.push(format!("[kp{i}, kp{j}]"));
                }
                v
            })
            .collect();
        Ok((differing == expected, differing.into_iter().collect()))
    })();
    record(
        rep,
        "catalog.boost_brackets",
        "relativistic and Galilean tables differ exactly in [K, K] and [P, K]",
        "kinematical bracket tables",
        outcome,
    );
}

fn extension(cat: &Catalog, rep: &mut VerificationReport) {
    let outcome = (|| {
        let p = load(cat, "poincare")?.algebra;
        let e = load(cat, "extended_poincare")?.algebra;
        let direct = p
            .trivial_central_extension("m")
            .map_err(|e| e.to_string())?;
        Ok((
            direct.generators() == e.generators()
                && direct.structure_constants() == e.structure_constants(),
            vec![],
        ))
    })();
    record(
        rep,
        "catalog.extension",
        "extended Poincare is the direct sum with a central m",
        "trivial extension",
        outcome,
    );
}

fn bracket_lines(l: &LieAlgebra) -> Vec<String> {
    l.nonzero_brackets()
        .into_iter()
        .map(|(a, b)| {
            format!(
                "[{}, {}] = {}",
                l.generator(a),
                l.generator(b),
                l.format_terms(l.bracket_terms(a, b))
            )
        })
        .collect()
}

fn contraction(cat: &Catalog, rep: &mut VerificationReport) {
    let outcome = (|| {
        let ext = load(cat, "extended_poincare")?.algebra;
        let hb = ext
            .change_basis(&hbar_basis_change(&ext))
            .map_err(|e| e.to_string())?;
        let stored = load(cat, CONTRACTION_SOURCE)?.algebra;
        let stored_ok = hb.structure_constants() == stored.structure_constants()
            && hb.generators() == stored.generators();
        let scaling = parse_scale(CONTRACTION_SCALE, &hb).map_err(|e| e.to_string())?;
        let relabel = parse_relabel(CONTRACTION_MAP, &hb).map_err(|e| e.to_string())?;
        let target = load(cat, "extended_galilei")?.algebra;
        let cmp =
            contract_and_compare(&hb, &scaling, &target, &relabel).map_err(|e| e.to_string())?;
        let mut detail = vec![format!(
            "scaling {CONTRACTION_SCALE}, relabel {CONTRACTION_MAP}"
        )];
        if !stored_ok {
            detail.push(
                "stored shifted-energy algebra differs from the computed basis change".into(),
            );
        }
        detail.extend(bracket_lines(&cmp.limit));
        Ok((cmp.matches && stored_ok, detail))
    })();
    record(
        rep,
        "contraction.extended_galilei",
        "shifted-energy extended Poincare contracts onto extended Galilei",
        "generalized contraction of the trivial extension",
        outcome,
    );

    let outcome = (|| {
        let p = load(cat, "poincare")?.algebra;
        let s = parse_scale("H=1,P=0,K=0,J=0", &p).map_err(|e| e.to_string())?;
        match contraction_limit(&p, &s) {
            Err(ContractionError::IllDefinedContraction { triples }) => {
                let got: BTreeSet<(String, String, String)> = triples
                    .iter()
                    .map(|t| (t.left.clone(), t.right.clone(), t.result.clone()))
                    .collect();
                let want: BTreeSet<(String, String, String)> = (1..=3)
                    .map(|i| (format!("p{i}"), format!("kp{i}"), "h".to_string()))
                    .collect();
                Ok((
                    got == want,
                    triples.iter().map(ToString::to_string).collect(),
                ))
            }
            Err(e) => Err(e.to_string()),
            Ok(_) => Ok((false, vec!["limit unexpectedly exists".into()])),
        }
    })();
    record(
        rep,
        "contraction.ill_defined",
        "scaling the energy alone makes [p_i, kp_i] diverge",
        "rescaling exponents",
        outcome,
    );
}

/// `(algebra, degree, full dimension, new dimension)`; `None` is reported
/// without being asserted.
const DIMENSIONS: &[(&str, u32, Option<usize>, Option<usize>)] = &[
    ("poincare", 1, Some(0), None),
    ("poincare", 2, Some(1), None),
    ("poincare", 3, Some(0), None),
    ("poincare", 4, Some(2), Some(1)),
    ("extended_galilei", 1, Some(1), None),
    ("extended_galilei", 2, Some(2), Some(1)),
    ("extended_galilei", 3, None, Some(0)),
    ("extended_galilei", 4, None, Some(1)),
    ("extended_poincare_hbar", 1, Some(1), None),
    ("extended_poincare_hbar", 2, None, Some(1)),
    ("extended_poincare_hbar", 4, None, Some(1)),
];

pub(crate) type Spaces = BTreeMap<(String, u32), InvariantBasis>;

fn invariant_spaces(cat: &Catalog, opts: &VerifyOptions, rep: &mut VerificationReport) -> Spaces {
    let mut spaces = Spaces::new();
    let names: BTreeSet<&str> = DIMENSIONS.iter().map(|d| d.0).collect();
    for name in names {
        let Ok(entry) = cat.load(name) else { continue };
        for d in 1..=opts.degree_cap {
            spaces.insert(
                (name.to_string(), d),
                invariant_space_with(&entry.algebra, d, opts.parallelism),
            );
        }
    }
    for &(name, d, full, new) in DIMENSIONS {
        if d > opts.degree_cap {
            continue;
        }
        let id = format!("invariants.{name}.d{d}");
        let Some(space) = spaces.get(&(name.to_string(), d)) else {
            rep.push(
                &id,
                "invariant space dimension",
                "differential-operator method",
                Status::Fail,
                vec![format!("{name} unavailable")],
            );
            continue;
        };
        let lower: Vec<InvariantBasis> = (1..d)
            .filter_map(|k| spaces.get(&(name.to_string(), k)).cloned())
            .collect();
        let fresh = new_invariants_from(space, &lower);
        let mut ok = full.is_none_or(|f| f == space.dim()) && new.is_none_or(|n| n == fresh.dim());
        let entry = cat.load(name).expect("loaded above");
        let sound = space
            .polynomials
            .iter()
            .chain(&fresh.polynomials)
            .all(|p| is_invariant(&entry.algebra, p).unwrap_or(false));
        ok &= sound;
        let mut detail = vec![format!("dimension {}, new {}", space.dim(), fresh.dim())];
        detail.extend(fresh.polynomials.iter().map(|p| format!("new: {p}")));
        if !sound {
            detail.push("a basis polynomial is not annihilated by every operator".into());
        }
        rep.check(
            &id,
            &format!("degree-{d} invariants of {name}"),
            "differential-operator method",
            ok,
            detail,
        );
    }
    spaces
}

/// True when `p` lies in the span of `basis`.
fn in_span(basis: &[MultiPoly], p: &MultiPoly) -> bool {
    let mut monos: BTreeSet<&Monomial> = BTreeSet::new();
    for q in basis.iter().chain([p]) {
        monos.extend(q.terms().map(|(m, _)| m));
    }
    let cols: Vec<&Monomial> = monos.into_iter().collect();
    let rows = |qs: &[&MultiPoly]| {
        RationalMatrix::from_dense(
            cols.len(),
            qs.iter()
                .map(|q| cols.iter().map(|m| q.coefficient(m)).collect())
                .collect(),
        )
        .expect("uniform rows")
    };
    let base: Vec<&MultiPoly> = basis.iter().collect();
    let mut with = base.clone();
    with.push(p);
    rows(&base).rank() == rows(&with).rank()
}

fn membership(cat: &Catalog, spaces: &Spaces, rep: &mut VerificationReport) {
    for name in ["poincare", "extended_galilei", "extended_poincare_hbar"] {
        let Ok(entry) = cat.load(name) else { continue };
        for r in &entry.reference_invariants {
            let Some(d) = r.polynomial.degree() else {
                continue;
            };
            let id = format!("membership.{name}.{}", r.label);
            let invariant = is_invariant(&entry.algebra, &r.polynomial).unwrap_or(false);
            let mut detail = vec![r.polynomial.to_string()];
            let spanned = spaces
                .get(&(name.to_string(), d))
                .map(|s| in_span(&s.polynomials, &r.polynomial));
            if spanned.is_none() {
                detail.push(format!("degree {d} above the cap; span not checked"));
            }
            rep.check(
                &id,
                &format!("{} ({}) is an invariant of {name}", r.label, r.anchor),
                &r.anchor,
                invariant && spanned.unwrap_or(true),
                detail,
            );
        }
    }
}

fn quartic_signs(cat: &Catalog, rep: &mut VerificationReport) {
    for name in ["poincare", "extended_poincare_hbar", "extended_galilei"] {
        let Ok(entry) = cat.load(name) else { continue };
        let Some(fam) = &entry.quartic else { continue };
        for (k, p) in fam.printings.iter().enumerate() {
            let poly = fam.combine(&p.coefficients);
            let inv = is_invariant(&entry.algebra, &poly).unwrap_or(false);
            rep.push(
                &format!("quartic.{name}.printed{}", k + 1),
                &format!(
                    "{} as printed ({})",
                    fam.label,
                    if inv { "invariant" } else { "not invariant" }
                ),
                &p.anchor,
                Status::Info,
                vec![format!("signs {:?}", p.coefficients), poly.to_string()],
            );
        }
        let found = fam.sign_resolutions(&entry.algebra);
        let mut detail: Vec<String> = fam
            .groups
            .iter()
            .map(|g| format!("group: {}", g.name))
            .collect();
        for s in &found {
            detail.push(format!("invariant signs {s:?}"));
            for p in &fam.printings {
                let flipped: Vec<&str> = fam
                    .groups
                    .iter()
                    .zip(s.iter().zip(&p.coefficients))
                    .filter(|(_, (a, b))| a != b)
                    .map(|(g, _)| g.name.as_str())
                    .collect();
                detail.push(format!(
                    "differs from \"{}\" in: {}",
                    p.anchor,
                    flipped.join("; ")
                ));
            }
            detail.push(fam.combine(s).to_string());
        }
        rep.check(
            &format!("quartic.{name}.resolution"),
            &format!("exactly one sign pattern makes {} invariant", fam.label),
            "quartic Casimir sign resolution",
            found.len() == 1,
            detail,
        );
    }
}

fn casimir_limits(cat: &Catalog, rep: &mut VerificationReport) {
    const ANCHOR: &str = "contracted Casimir operators";
    let setup = (|| {
        let src = load(cat, CONTRACTION_SOURCE)?;
        let gal = load(cat, "extended_galilei")?;
        let scaling = parse_scale(CONTRACTION_SCALE, &src.algebra).map_err(|e| e.to_string())?;
        let relabel = parse_relabel(CONTRACTION_MAP, &src.algebra).map_err(|e| e.to_string())?;
        Ok::<_, String>((src, gal, scaling, relabel))
    })();
    let (src, gal, scaling, relabel) = match setup {
        Ok(s) => s,
        Err(e) => {
            for label in ["C1PE", "C2PE", "C4PE"] {
                rep.push(
                    &format!("limits.{label}"),
                    "contracted Casimir",
                    ANCHOR,
                    Status::Fail,
                    vec![e.clone()],
                );
            }
            return;
        }
    };
    let to_gal = |p: &MultiPoly| {
        p.rename(gal.algebra.coordinates(), &relabel)
            .map_err(|e| e.to_string())
    };
    let reference = |label: &str| {
        src.reference(label)
            .map(|r| r.polynomial.clone())
            .ok_or_else(|| format!("missing {label}"))
    };
    let gal_ref = |label: &str| {
        gal.reference(label)
            .map(|r| r.polynomial.clone())
            .ok_or_else(|| format!("missing {label}"))
    };
    let limit =
        |p: &MultiPoly| contract_invariant(&src.algebra, &scaling, p).map_err(|e| e.to_string());

    let outcome = (|| {
        let c = limit(&reference("C1PE")?)?;
        let lim = to_gal(&c.limit)?;
        let ok = c.shift == 2 && lim == gal_ref("C1G")?;
        Ok((
            ok,
            vec![format!("shift {}", c.shift), format!("limit {lim}")],
        ))
    })();
    record(
        rep,
        "limits.C1PE",
        "linear Casimir contracts to the mass",
        ANCHOR,
        outcome,
    );

    let outcome = (|| {
        let c = limit(&reference("C2PE")?)?;
        let lim = to_gal(&c.limit)?;
        let sub = to_gal(&c.normalized().coefficient(2))?;
        let c1 = gal_ref("C1G")?;
        let c2 = gal_ref("C2G")?;
        let ok = c.shift == 4 && lim == &c1 * &c1 && sub == c2.scale(&int(2));
        let detail = vec![
            format!("shift {}", c.shift),
            format!("limit {lim}"),
            format!("eps^2 coefficient {sub}"),
            format!("expansion {}", c.expansion),
        ];
        Ok((ok, detail))
    })();
    record(
        rep,
        "limits.C2PE",
        "quadratic Casimir: leading order m^2, next order 2*C2G",
        ANCHOR,
        outcome,
    );
    rep.push(
        "limits.C2PE.identification",
        "the leading limit of C2PE is the square of C1G, while C2G appears as half the eps^2 coefficient",
        ANCHOR,
        Status::Info,
        vec![],
    );

    let outcome = (|| {
        let c = limit(&reference("C4PE")?)?;
        let lim = to_gal(&c.limit)?;
        let want = gal_ref("C4G")?;
        let inv = is_invariant(&gal.algebra, &lim).unwrap_or(false);
        Ok((
            c.shift == 4 && lim == want && inv,
            vec![format!("shift {}", c.shift), format!("limit {lim}")],
        ))
    })();
    record(
        rep,
        "limits.C4PE",
        "quartic Casimir contracts to the Galilean quartic",
        ANCHOR,
        outcome,
    );
}

fn operator_table_audit(cat: &Catalog, spaces: &Spaces, rep: &mut VerificationReport) {
    const ANCHOR: &str = "printed coadjoint operator table";
    let Ok(entry) = cat.load(CONTRACTION_SOURCE) else {
        rep.push(
            "operator_table",
            "operator audit",
            ANCHOR,
            Status::Fail,
            vec!["algebra unavailable".into()],
        );
        return;
    };
    let (found, printed) = match operator_table::audit(&entry.algebra)
        .and_then(|f| Ok((f, operator_table::printed_operators(&entry.algebra)?)))
    {
        Ok(x) => x,
        Err(e) => {
            rep.push(
                "operator_table.audit",
                "operator audit",
                ANCHOR,
                Status::Fail,
                vec![format!("error: {e}")],
            );
            return;
        }
    };
    for d in &found {
        rep.push(
            &format!("operator_table.{}.{}", d.generator, d.variable),
            &format!("operator for {} differs at d/d{}", d.generator, d.variable),
            ANCHOR,
            Status::Info,
            vec![
                format!("printed {}", d.printed),
                format!("derived {}", d.derived),
            ],
        );
    }
    let got: BTreeSet<(String, String)> = found
        .iter()
        .map(|d| (d.generator.clone(), d.variable.clone()))
        .collect();
    let listed: BTreeSet<(String, String)> = operator_table::LISTED_DISCREPANCIES
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    rep.check(
        "operator_table.audit",
        "derived operators match the printed table except at the listed terms",
        ANCHOR,
        got == listed,
        vec![format!("{} differing terms", got.len())],
    );

    let mut verified: Vec<MultiPoly> = entry
        .reference_invariants
        .iter()
        .map(|r| r.polynomial.clone())
        .collect();
    for ((name, _), s) in spaces {
        if name == CONTRACTION_SOURCE {
            verified.extend(s.polynomials.iter().cloned());
        }
    }
    let derived_ok = verified
        .iter()
        .all(|p| is_invariant(&entry.algebra, p).unwrap_or(false));
    rep.check(
        "operator_table.derived_annihilate",
        "derived operators annihilate every verified invariant",
        ANCHOR,
        derived_ok,
        vec![format!("{} polynomials", verified.len())],
    );
    let failing: Vec<String> = entry
        .reference_invariants
        .iter()
        .flat_map(|r| {
            printed
                .iter()
                .filter(|(_, op)| !op.apply(&r.polynomial).is_zero())
                .map(move |(g, _)| format!("{} not annihilated by printed {g}", r.label))
        })
        .collect();
    rep.push(
        "operator_table.printed_annihilate",
        "printed operators applied to the reference invariants",
        ANCHOR,
        Status::Info,
        failing,
    );
}

fn rest_frame(cat: &Catalog, rep: &mut VerificationReport) {
    const ANCHOR: &str = "centre of mass values";
    let cases: &[(&str, &str, &str)] = &[
        ("poincare", "C2P", "h^2"),
        ("poincare", "C4P", "h^2*j1^2 + h^2*j2^2 + h^2*j3^2"),
        ("extended_poincare_hbar", "C1PE", "m"),
        ("extended_poincare_hbar", "C2PE", "hbar^2 + 2*hbar*m + m^2"),
        (
            "extended_poincare_hbar",
            "C4PE",
            "(hbar + m)^2*(j1^2 + j2^2 + j3^2)",
        ),
        ("extended_galilei", "C1G", "m"),
        ("extended_galilei", "C2G", "m*h"),
        ("extended_galilei", "C4G", "m^2*j1^2 + m^2*j2^2 + m^2*j3^2"),
    ];
    for &(name, label, want) in cases {
        let outcome = (|| {
            let e = load(cat, name)?;
            let r = e
                .reference(label)
                .ok_or_else(|| format!("missing {label}"))?;
            let got = evaluate_at_rest(&r.polynomial).map_err(|e| e.to_string())?;
            let want = parse_product(&e.algebra, want)?;
            Ok((got == want, vec![got.to_string()]))
        })();
        record(
            rep,
            &format!("rest.{name}.{label}"),
            &format!("{label} with p = 0"),
            ANCHOR,
            outcome,
        );
    }
    rep.push(
        "rest.extended_galilei.C2G.identification",
        "C2G at rest is m times the rest energy; it reduces to m^2 only once the rest energy is identified with m",
        ANCHOR,
        Status::Info,
        vec![],
    );
}

/// Parses `a*b` products of parenthesized canonical polynomials.
fn parse_product(l: &LieAlgebra, text: &str) -> Result<MultiPoly, String> {
    let vars = l.coordinates();
    let mut out = MultiPoly::one(vars);
    let mut rest = text.trim();
    if !rest.starts_with('(') {
        return MultiPoly::parse(vars, rest).map_err(|e| e.to_string());
    }
    while let Some(open) = rest.strip_prefix('(') {
        let close = open.find(')').ok_or("unbalanced")?;
        let mut factor = MultiPoly::parse(vars, &open[..close]).map_err(|e| e.to_string())?;
        rest = &open[close + 1..];
        if let Some(r) = rest.strip_prefix("^2") {
            factor = factor.pow(2);
            rest = r;
        }
        out = &out * &factor;
        rest = rest.strip_prefix('*').unwrap_or(rest);
    }
    Ok(out)
}

/// Expected counts per algebra; the two seeds must agree with it.
fn counts(cat: &Catalog, opts: &VerifyOptions, rep: &mut VerificationReport) {
    for name in BUILTIN_NAMES {
        let outcome = (|| {
            let e = load(cat, name)?;
            let mut got = Vec::new();
            for seed in opts.seeds {
                got.push(invariant_count(&e.algebra, seed).map_err(|e| e.to_string())?);
            }
            let ok = got.iter().all(|&c| c == e.expected_invariant_count);
            Ok((ok, vec![format!("seeds {:?} give {:?}", opts.seeds, got)]))
        })();
        record(
            rep,
            &format!("count.{name}"),
            &format!("number of independent invariants of {name}"),
            "generic rank",
            outcome,
        );
    }
}
