use serde_json::{json, Value};

use cycloribbon::hopf::mr::{coproduct_r, coproduct_s, product_r, product_s};
use cycloribbon::hopf::qmr::{coproduct_f, product_f};
use cycloribbon::hopf::{MrR, MrS, QmrF};
use cycloribbon::linear::{parse_q, Basis};
use cycloribbon::oracle::algebra::AlgebraParams;
use cycloribbon::oracle::checks::{all_pass, conventions, induction_cross_check_with, verify_relations, CheckReport};
use cycloribbon::parse::{parse_colored_composition, parse_composition, parse_ribbon};
use cycloribbon::rep::{
    cartan_matrix, decomposition_matrix, dim_projective, induce_hecke_projective, induce_simples, projective_labels,
    ProjectiveLabel, SimpleLabel,
};
use cycloribbon::ribbon::{enumerate_anticycloribbons, enumerate_cycloribbons};
use cycloribbon::{ColoredComposition, ColoredRibbon, LinComb};

use crate::{Command, Format, OracleCommand, ProductBasis};

pub const MAX_DIM_VAR: &str = "CYCLORIBBON_MAX_DIM";
const DEFAULT_MAX_DIM: u64 = 2000;

/// Labels a single command may list before it refuses.
const MAX_LABELS: u64 = 1_000_000;
/// Matrix commands build one row per label; keep them square-sized.
const MAX_MATRIX_LABELS: u64 = 5_000;

pub enum Failure {
    Invalid(String),
    /// An oracle check failed: the full report for stdout, failing reports for stderr.
    Oracle { stdout: String, stderr: String },
}

impl From<cycloribbon::Error> for Failure {
    fn from(e: cycloribbon::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn invalid<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Invalid(msg.into()))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn max_dim() -> Result<u64, Failure> {
    match std::env::var(MAX_DIM_VAR) {
        Err(_) => Ok(DEFAULT_MAX_DIM),
        Ok(s) => match s.trim().parse::<u64>() {
            Ok(v) if v > 0 => Ok(v),
            _ => invalid(format!("{MAX_DIM_VAR} must be a positive integer, got {s:?}")),
        },
    }
}

fn check_r(r: u32) -> Result<(), Failure> {
    if r == 0 {
        return invalid("--r must be at least 1");
    }
    Ok(())
}

/// Number of cycloribbons of size n: r(r+1)^(n-1), saturating.
fn label_count(n: usize, r: u32) -> u64 {
    if n == 0 {
        return 1;
    }
    let base = r as u64 + 1;
    (1..n).fold(r as u64, |acc, _| acc.saturating_mul(base))
}

fn check_labels(n: usize, r: u32, limit: u64) -> Result<(), Failure> {
    check_r(r)?;
    let count = label_count(n, r);
    if count > limit {
        return invalid(format!("n={n}, r={r} has {count} labels, more than the limit of {limit}"));
    }
    Ok(())
}

fn ribbon_json(x: &ColoredRibbon) -> Value {
    json!({
        "label": x.to_string(),
        "parts": x.shape().parts(),
        "colors": x.colors().as_slice(),
    })
}

fn simple(s: &str) -> Result<SimpleLabel, Failure> {
    Ok(SimpleLabel::new(parse_ribbon(s)?)?)
}

pub fn run(command: &Command) -> Outcome {
    match command {
        Command::Enumerate { n, r, shape, anti } => enumerate(*n, *r, shape.as_deref(), *anti),
        Command::Phi { ribbon } => phi(ribbon),
        Command::Product { basis, lhs, rhs } => product(*basis, lhs, rhs),
        Command::Coproduct { basis, elt } => coproduct(*basis, elt),
        Command::InduceSimples { lhs, rhs } => induce(lhs, rhs),
        Command::InduceHeckeProjective { shape, r } => hecke(shape, *r),
        Command::Cartan { n, r, format } => {
            check_labels(*n, *r, MAX_MATRIX_LABELS)?;
            matrix(cartan_matrix(*n, *r)?, *format)
        }
        Command::Decomp { n, r, format } => {
            check_labels(*n, *r, MAX_MATRIX_LABELS)?;
            matrix(decomposition_matrix(*n, *r)?, *format)
        }
        Command::Dims { n, r } => dims(*n, *r),
        Command::Oracle { command } => match command {
            OracleCommand::Verify { n, r, u } => verify(*n, *r, u.as_deref()),
            OracleCommand::CrossCheck { max_grade, r, convention } => cross_check(*max_grade, *r, convention),
        },
    }
}

fn enumerate(n: usize, r: u32, shape: Option<&str>, anti: bool) -> Outcome {
    check_labels(n, r, MAX_LABELS)?;
    let shape = shape.map(parse_composition).transpose()?;
    if let Some(s) = &shape {
        if s.size() != n {
            return invalid(format!("--shape {s} has size {} but --n is {n}", s.size()));
        }
    }
    let mut ribbons = if anti {
        enumerate_anticycloribbons(n, r, shape.as_ref())
    } else {
        enumerate_cycloribbons(n, r, shape.as_ref())
    };
    ribbons.sort_by(|a, b| a.canonical_key().cmp(&b.canonical_key()));
    Ok(pretty(&json!({
        "kind": if anti { "anticycloribbon" } else { "cycloribbon" },
        "n": n,
        "r": r,
        "shape": shape.map(|s| s.to_string()),
        "count": ribbons.len(),
        "ribbons": ribbons.iter().map(ribbon_json).collect::<Vec<_>>(),
    })))
}

fn phi(ribbon: &str) -> Outcome {
    let x = parse_ribbon(ribbon)?;
    let y = x.phi();
    Ok(pretty(&json!({
        "input": ribbon_json(&x),
        "output": ribbon_json(&y),
        "input_is_cycloribbon": x.is_cycloribbon(),
        "input_is_anticycloribbon": x.is_anticycloribbon(),
    })))
}

/// A JSON linear combination, or a single basis label in the textual grammar.
fn element<B: Basis>(s: &str, literal: impl Fn(&str) -> cycloribbon::Result<B::Label>) -> Result<LinComb<B>, Failure> {
    if s.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(s).map_err(|e| Failure::Invalid(format!("malformed JSON element: {e}")))?;
        return Ok(LinComb::from_json(&v)?);
    }
    let label = literal(s)?;
    if !B::is_well_formed(&label) {
        return invalid(format!("{label} is not a valid {} label", B::TAG));
    }
    Ok(LinComb::basis(label))
}

fn colored_composition(s: &str) -> cycloribbon::Result<ColoredComposition> {
    parse_colored_composition(s)
}

fn product(basis: ProductBasis, lhs: &str, rhs: &str) -> Outcome {
    let out = match basis {
        ProductBasis::F => {
            product_f(&element::<QmrF>(lhs, parse_ribbon)?, &element::<QmrF>(rhs, parse_ribbon)?).to_json()
        }
        ProductBasis::R => product_r(
            &element::<MrR>(lhs, colored_composition)?,
            &element::<MrR>(rhs, colored_composition)?,
        )
        .to_json(),
        ProductBasis::S => product_s(
            &element::<MrS>(lhs, colored_composition)?,
            &element::<MrS>(rhs, colored_composition)?,
        )
        .to_json(),
    };
    Ok(pretty(&out))
}

fn coproduct(basis: ProductBasis, elt: &str) -> Outcome {
    let out = match basis {
        ProductBasis::F => coproduct_f(&element::<QmrF>(elt, parse_ribbon)?).to_json(),
        ProductBasis::R => coproduct_r(&element::<MrR>(elt, colored_composition)?).to_json(),
        ProductBasis::S => coproduct_s(&element::<MrS>(elt, colored_composition)?).to_json(),
    };
    Ok(pretty(&out))
}

fn induce(lhs: &str, rhs: &str) -> Outcome {
    let (a, b) = (simple(lhs)?, simple(rhs)?);
    let factors = induce_simples(&a, &b);
    Ok(pretty(&json!({
        "lhs": a.to_string(),
        "rhs": b.to_string(),
        "factors": factors.iter().map(|(s, m)| json!({
            "simple": s.to_string(),
            "multiplicity": m,
        })).collect::<Vec<_>>(),
    })))
}

fn projective_json(p: &ProjectiveLabel, dim: u64) -> Value {
    json!({
        "projective": p.to_string(),
        "anticycloribbon": p.anticycloribbon().to_string(),
        "head": p.head().to_string(),
        "dimension": dim,
    })
}

fn hecke(shape: &str, r: u32) -> Outcome {
    let shape = parse_composition(shape)?;
    check_labels(shape.size(), r, MAX_LABELS)?;
    let summands = induce_hecke_projective(&shape, r);
    Ok(pretty(&json!({
        "shape": shape.to_string(),
        "r": r,
        "summands": summands.iter().map(|(p, d)| projective_json(p, *d)).collect::<Vec<_>>(),
    })))
}

fn matrix(m: cycloribbon::matrix::LabeledMatrix, format: Format) -> Outcome {
    Ok(match format {
        Format::Csv => m.to_csv(),
        Format::Json => pretty(&m.to_json()),
    })
}

fn dims(n: usize, r: u32) -> Outcome {
    check_labels(n, r, MAX_LABELS)?;
    let labels = projective_labels(n, r);
    Ok(pretty(&json!({
        "n": n,
        "r": r,
        "projectives": labels.iter().map(|p| projective_json(p, dim_projective(p))).collect::<Vec<_>>(),
    })))
}

fn parse_u(s: &str, r: u32) -> Result<Vec<cycloribbon::Q>, Failure> {
    let us = s.split(',').map(|x| parse_q(x.trim())).collect::<cycloribbon::Result<Vec<_>>>()?;
    if us.len() != r as usize {
        return invalid(format!("--u lists {} parameters but --r is {r}", us.len()));
    }
    Ok(us)
}

fn oracle_outcome(stdout: Value, counterexample: Value, passed: bool) -> Outcome {
    if passed {
        return Ok(pretty(&stdout));
    }
    Err(Failure::Oracle {
        stdout: pretty(&stdout),
        stderr: counterexample.to_string(),
    })
}

fn failing(reports: &[CheckReport]) -> Vec<&CheckReport> {
    reports.iter().filter(|c| !c.pass).collect()
}

fn verify(n: usize, r: u32, u: Option<&str>) -> Outcome {
    check_r(r)?;
    if n == 0 {
        return invalid("--n must be at least 1");
    }
    let params = match u {
        Some(s) => AlgebraParams::new(n, r, parse_u(s, r)?)?,
        None => AlgebraParams::standard(n, r),
    };
    let reports = verify_relations(&params, max_dim()?)?;
    let passed = all_pass(&reports);
    let failures = json!({ "failures": failing(&reports) });
    oracle_outcome(json!({ "pass": passed, "reports": reports }), failures, passed)
}

fn cross_check(max_grade: usize, r: u32, convention: &str) -> Outcome {
    check_r(r)?;
    if max_grade < 2 {
        return invalid("--max-grade must be at least 2");
    }
    let all = conventions(r);
    let Some((_, selected)) = all.iter().find(|(name, _)| *name == convention) else {
        let names: Vec<&str> = all.iter().map(|(name, _)| *name).collect();
        return invalid(format!("unknown convention {convention:?}; expected one of {}", names.join(", ")));
    };
    let cc = induction_cross_check_with(max_grade, r, max_dim()?, *selected)?;
    let passed = cc.passed();
    let failures = json!({
        "failures": failing(&cc.reports),
        "conventions": cc.conventions.iter().filter(|c| c.selected && !c.agrees).collect::<Vec<_>>(),
    });
    let mut out = serde_json::to_value(&cc).expect("reports serialize");
    out["pass"] = json!(passed);
    oracle_outcome(out, failures, passed)
}
