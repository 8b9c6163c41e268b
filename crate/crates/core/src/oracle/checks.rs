//! Verification sweeps comparing the combinatorial rules with the explicit
//! algebra. Every check yields a [`CheckReport`]; sweeps run their instances
//! in parallel and return reports in a fixed order.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::algebra::{Algebra, AlgebraParams};
use super::module::{
    build_induced_module, build_m_i, check_order_lemma, check_socle, cross_check_m_i, one_dim_characters,
};
use super::relations::{check_associativity, verify_on_algebra};
use crate::composition::Composition;
use crate::error::Result;
use crate::hopf::qmr::product_f_labels;
use crate::linear::format_q;
use crate::perm::{InverseColors, ShuffleConvention};
use crate::rep::{character_of_simple, simple_labels, Character, SimpleLabel};
use crate::ribbon::enumerate_cycloribbons;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub instance: Value,
    pub pass: bool,
    pub counterexample: Option<Value>,
}

impl CheckReport {
    fn new(check: &str, instance: Value, counterexample: Option<Value>) -> Self {
        CheckReport {
            check: check.to_string(),
            instance,
            pass: counterexample.is_none(),
            counterexample,
        }
    }
}

pub fn all_pass(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

fn params_json(p: &AlgebraParams) -> Value {
    json!({
        "n": p.n(),
        "r": p.r(),
        "u": p.us().iter().map(format_q).collect::<Vec<_>>(),
    })
}

/// Relations, basis size and a sample of associativity triples on one algebra.
pub fn verify_relations(params: &AlgebraParams, max_dim: u64) -> Result<Vec<CheckReport>> {
    let alg = Algebra::new(params.clone(), max_dim)?;
    let inst = params_json(params);
    let mut out = Vec::new();

    let expected = params.dimension().expect("bounded by max_dim");
    let found = alg.basis_keys().count() as u64;
    out.push(CheckReport::new(
        "dimension",
        inst.clone(),
        (found != expected).then(|| json!({ "expected": expected, "found": found })),
    ));

    let failures = verify_on_algebra(&alg);
    let mut by_family: BTreeMap<u8, Vec<_>> = BTreeMap::new();
    for f in failures {
        by_family.entry(f.family).or_default().push(f);
    }
    for family in 1..=8u8 {
        let cx = by_family
            .get(&family)
            .map(|fs| json!({ "failures": fs.len(), "first": fs[0] }));
        out.push(CheckReport::new(&format!("relation-{family}"), inst.clone(), cx));
    }

    // A deterministic spread of triples: every basis element occurs as the
    // first factor once, with the other two chosen by fixed strides.
    let keys: Vec<_> = alg.basis_keys().collect();
    let d = keys.len();
    let triples: Vec<_> = (0..d.min(400))
        .map(|i| [keys[i * d / d.min(400)], keys[(7 * i + 3) % d], keys[(13 * i + 5) % d]])
        .collect();
    let bad = check_associativity(&alg, &triples);
    out.push(CheckReport::new(
        "associativity",
        inst,
        bad.first().map(|t| json!({ "triple": t, "failures": bad.len() })),
    ));
    Ok(out)
}

/// Every `(n, r)` with `r^n n! ≤ max_dim`, `n ≥ 1`, `r ≥ 1`.
pub fn instances_up_to(max_dim: u64) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    for n in 1..=20usize {
        let mut r = 1u32;
        while AlgebraParams::standard(n, r).dimension().is_some_and(|d| d <= max_dim) {
            out.push((n, r));
            r += 1;
        }
        if r == 1 {
            break;
        }
    }
    out
}

/// [`verify_relations`] over [`instances_up_to`], each instance with `u_k = k`
/// and with `u_k = k² - k + 1`.
pub fn relation_sweep(max_dim: u64) -> Result<Vec<CheckReport>> {
    let jobs: Vec<AlgebraParams> = instances_up_to(max_dim)
        .into_iter()
        .flat_map(|(n, r)| [AlgebraParams::standard(n, r), AlgebraParams::alternate(n, r)])
        .collect();
    let results: Vec<Result<Vec<CheckReport>>> = jobs.par_iter().map(|p| verify_relations(p, max_dim)).collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// Brute-force one-dimensional characters against the characters of the
/// cycloribbons.
pub fn character_census(params: &AlgebraParams) -> CheckReport {
    let (n, r) = (params.n(), params.r());
    let found = one_dim_characters(params);
    let mut expected: Vec<Character> = enumerate_cycloribbons(n, r, None)
        .into_iter()
        .map(|rb| character_of_simple(&SimpleLabel::new(rb).expect("cycloribbon")))
        .collect();
    expected.sort();
    let count = r as u64 * (r as u64 + 1).pow(n.saturating_sub(1) as u32);
    let cx = if found != expected || found.len() as u64 != count {
        let missing: Vec<String> = expected.iter().filter(|c| !found.contains(c)).map(|c| c.to_string()).collect();
        let extra: Vec<String> = found.iter().filter(|c| !expected.contains(c)).map(|c| c.to_string()).collect();
        Some(json!({ "count": count, "found": found.len(), "missing": missing, "extra": extra }))
    } else {
        None
    };
    CheckReport::new("character-census", params_json(params), cx)
}

fn factor_multiset(
    a: &SimpleLabel,
    b: &SimpleLabel,
    convention: ShuffleConvention,
) -> Vec<Character> {
    let prod = product_f_labels(a.ribbon(), b.ribbon(), convention);
    let mut out = Vec::new();
    for (label, m) in prod.integer_terms().expect("integral product") {
        let ch = character_of_simple(&SimpleLabel::new(label).expect("cycloribbon"));
        for _ in 0..m {
            out.push(ch.clone());
        }
    }
    out.sort();
    out
}

fn show(chars: &[Character]) -> Vec<String> {
    chars.iter().map(|c| c.to_string()).collect()
}

/// All ordered pairs of simples with sizes `m, k ≥ 1` and `m + k ≤ max_grade`.
pub fn simple_pairs(max_grade: usize, r: u32) -> Vec<(SimpleLabel, SimpleLabel)> {
    let mut out = Vec::new();
    for m in 1..max_grade {
        for k in 1..=max_grade - m {
            for a in simple_labels(m, r) {
                for b in simple_labels(k, r) {
                    out.push((a.clone(), b));
                }
            }
        }
    }
    out
}

/// Oracle factors of one induced module, under the given parameters.
pub fn oracle_factors(a: &SimpleLabel, b: &SimpleLabel, params: &AlgebraParams, max_dim: u64) -> Result<Vec<Character>> {
    let alg = Algebra::new(params.clone(), max_dim)?;
    let m = build_induced_module(&alg, &[character_of_simple(a), character_of_simple(b)])?;
    let mut f = m.composition_factors()?;
    f.sort();
    Ok(f)
}

/// Shuffle conventions compared by [`induction_cross_check`].
pub fn conventions(r: u32) -> [(&'static str, ShuffleConvention); 4] {
    use ShuffleConvention::{Direct, Inverse};
    [
        ("direct", Direct),
        ("inverse-positional", Inverse(InverseColors::Positional)),
        ("inverse-value-transport", Inverse(InverseColors::ValueTransport)),
        ("inverse-value-transport-reflected", Inverse(InverseColors::ValueTransportReflected { r })),
    ]
}

/// How one shuffle convention fares against the oracle.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConventionSummary {
    pub convention: String,
    /// The convention the reports were judged by.
    pub selected: bool,
    pub agrees: bool,
    pub disagreements: usize,
    pub first_disagreement: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossCheck {
    pub reports: Vec<CheckReport>,
    pub conventions: Vec<ConventionSummary>,
}

impl CrossCheck {
    /// Every report passes and the selected convention agrees everywhere.
    pub fn passed(&self) -> bool {
        all_pass(&self.reports) && self.conventions.iter().filter(|c| c.selected).all(|c| c.agrees)
    }
}

/// Composition factors of explicitly induced modules against the shuffle rule.
///
/// Reports: one per pair and parameter vector for the default convention,
/// and one per pair checking that the factors do not depend on `u`. Every
/// convention of [`conventions`] is also scored against the oracle.
pub fn induction_cross_check(max_grade: usize, r: u32, max_dim: u64) -> Result<CrossCheck> {
    induction_cross_check_with(max_grade, r, max_dim, ShuffleConvention::default())
}

/// As [`induction_cross_check`], judging the reports by `selected`.
pub fn induction_cross_check_with(
    max_grade: usize,
    r: u32,
    max_dim: u64,
    selected: ShuffleConvention,
) -> Result<CrossCheck> {
    let pairs = simple_pairs(max_grade, r);
    let computed: Vec<Result<(Vec<Character>, Vec<Character>)>> = pairs
        .par_iter()
        .map(|(a, b)| {
            let n = a.size() + b.size();
            let std = oracle_factors(a, b, &AlgebraParams::standard(n, r), max_dim)?;
            let alt = oracle_factors(a, b, &AlgebraParams::alternate(n, r), max_dim)?;
            Ok((std, alt))
        })
        .collect();
    let mut reports = Vec::new();
    let mut summaries: Vec<ConventionSummary> = conventions(r)
        .iter()
        .map(|(name, conv)| ConventionSummary {
            convention: name.to_string(),
            selected: *conv == selected,
            agrees: true,
            disagreements: 0,
            first_disagreement: None,
        })
        .collect();
    for ((a, b), res) in pairs.iter().zip(computed) {
        let (std, alt) = res?;
        let inst = json!({ "lhs": a.to_string(), "rhs": b.to_string(), "r": r });
        let expected = factor_multiset(a, b, selected);
        for (name, got) in [("standard", &std), ("alternate", &alt)] {
            let cx = (got != &expected).then(|| {
                json!({ "parameters": name, "oracle": show(got), "combinatorial": show(&expected) })
            });
            reports.push(CheckReport::new("induce-simples", inst.clone(), cx));
        }
        reports.push(CheckReport::new(
            "parameter-independence",
            inst.clone(),
            (std != alt).then(|| json!({ "standard": show(&std), "alternate": show(&alt) })),
        ));
        for (summary, (_, conv)) in summaries.iter_mut().zip(conventions(r)) {
            let rule = factor_multiset(a, b, conv);
            if rule != std {
                summary.agrees = false;
                summary.disagreements += 1;
                summary.first_disagreement.get_or_insert_with(|| {
                    json!({
                        "lhs": a.to_string(), "rhs": b.to_string(),
                        "oracle": show(&std), "combinatorial": show(&rule),
                    })
                });
            }
        }
    }
    Ok(CrossCheck { reports, conventions: summaries })
}

/// `M_I` against the quotient construction, plus the order and socle lemmas,
/// for every composition of every `n ≤ max_n`.
pub fn m_i_suite(max_n: usize, r: u32, max_dim: u64) -> Result<Vec<CheckReport>> {
    let shapes: Vec<Composition> = (1..=max_n).flat_map(Composition::all).collect();
    let results: Vec<Result<Vec<CheckReport>>> = shapes
        .par_iter()
        .map(|shape| {
            let alg = Algebra::new(AlgebraParams::standard(shape.size(), r), max_dim)?;
            let inst = json!({ "shape": shape.to_string(), "r": r });
            let m = build_m_i(shape, &alg)?;
            let relations = m.check_relations();
            let factors = m.composition_factors()?;
            let count = (r as usize).pow(shape.size() as u32);
            Ok(vec![
                CheckReport::new(
                    "m-i-relations",
                    inst.clone(),
                    relations.first().map(|f| json!(f)),
                ),
                CheckReport::new(
                    "m-i-factors",
                    inst.clone(),
                    (factors.len() != count).then(|| json!({ "expected": count, "found": factors.len() })),
                ),
                CheckReport::new(
                    "m-i-quotient",
                    inst.clone(),
                    cross_check_m_i(shape, &alg)?.map(|s| json!(s)),
                ),
                CheckReport::new(
                    "order-lemma",
                    inst.clone(),
                    check_order_lemma(shape, &alg)?
                        .map(|(lo, hi)| json!({ "lower": lo.to_string(), "upper": hi.to_string() })),
                ),
                CheckReport::new("socle", inst, check_socle(shape, &alg)?.map(|s| json!(s))),
            ])
        })
        .collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}
