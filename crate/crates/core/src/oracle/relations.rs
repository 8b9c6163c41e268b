//! The defining relations of `AKS_{n,r}(0)` as operator identities, and their
//! verification on the left regular representation.

use std::collections::HashSet;

use num::{One, Zero};
use serde::Serialize;

use super::algebra::{Algebra, AlgebraElement, Op};
use crate::linear::Q;

/// `Σ coeff · word = 0`, each word acting on the left (last operator first).
#[derive(Clone, Debug)]
pub struct Relation {
    pub family: u8,
    pub name: String,
    pub terms: Vec<(Q, Vec<Op>)>,
}

fn rel(family: u8, name: String, terms: Vec<(Q, Vec<Op>)>) -> Relation {
    Relation { family, name, terms }
}

/// Families 1-3 and 5-8 at `q = 0`:
///
/// ```text
/// (1) T_i² + T_i = 0                         (2) T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}
/// (3) T_i T_j = T_j T_i, |i-j| ≥ 2           (5) ξ_i ξ_j = ξ_j ξ_i
/// (6) T_i ξ_i = ξ_{i+1} T_i + Σ_{a<b} (u_b - u_a) P_a(ξ_i) P_b(ξ_{i+1})
/// (7) T_i (ξ_i + ξ_{i+1}) = (ξ_i + ξ_{i+1}) T_i
/// (8) T_i ξ_j = ξ_j T_i,  j ∉ {i, i+1}
/// ```
///
/// Family 4, `∏_l (ξ_j - u_l) = 0`, is handled separately by the callers.
pub fn relations(n: usize, us: &[Q]) -> Vec<Relation> {
    use Op::{Lagrange, Xi, T};
    let one = Q::one();
    let m1 = -Q::one();
    let mut out = Vec::new();
    for i in 1..n {
        out.push(rel(1, format!("T{i}^2 + T{i}"), vec![(one.clone(), vec![T(i), T(i)]), (one.clone(), vec![T(i)])]));
    }
    for i in 1..n.saturating_sub(1) {
        out.push(rel(
            2,
            format!("braid T{i} T{}", i + 1),
            vec![
                (one.clone(), vec![T(i), T(i + 1), T(i)]),
                (m1.clone(), vec![T(i + 1), T(i), T(i + 1)]),
            ],
        ));
    }
    for i in 1..n {
        for j in i + 2..n {
            out.push(rel(
                3,
                format!("T{i} T{j} commute"),
                vec![(one.clone(), vec![T(i), T(j)]), (m1.clone(), vec![T(j), T(i)])],
            ));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(rel(
                5,
                format!("xi{i} xi{j} commute"),
                vec![(one.clone(), vec![Xi(i), Xi(j)]), (m1.clone(), vec![Xi(j), Xi(i)])],
            ));
        }
    }
    for i in 1..n {
        let mut terms = vec![(one.clone(), vec![T(i), Xi(i)]), (m1.clone(), vec![Xi(i + 1), T(i)])];
        for a in 1..=us.len() as u32 {
            for b in a + 1..=us.len() as u32 {
                let coeff = -(&us[b as usize - 1] - &us[a as usize - 1]);
                terms.push((coeff, vec![Lagrange { k: a, j: i }, Lagrange { k: b, j: i + 1 }]));
            }
        }
        out.push(rel(6, format!("T{i} xi{i}"), terms));
        out.push(rel(
            7,
            format!("T{i} (xi{i} + xi{})", i + 1),
            vec![
                (one.clone(), vec![T(i), Xi(i)]),
                (one.clone(), vec![T(i), Xi(i + 1)]),
                (m1.clone(), vec![Xi(i), T(i)]),
                (m1.clone(), vec![Xi(i + 1), T(i)]),
            ],
        ));
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            out.push(rel(
                8,
                format!("T{i} xi{j} commute"),
                vec![(one.clone(), vec![T(i), Xi(j)]), (m1.clone(), vec![Xi(j), T(i)])],
            ));
        }
    }
    out
}

/// A relation that does not vanish on some vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationFailure {
    pub family: u8,
    pub relation: String,
    pub on: String,
    pub residual: String,
}

fn evaluate(alg: &Algebra, relation: &Relation, x: &AlgebraElement) -> AlgebraElement {
    let mut acc = AlgebraElement::zero();
    for (c, word) in &relation.terms {
        acc.add_scaled(&alg.apply_word(word, x), c);
    }
    acc
}

fn show(alg: &Algebra, x: &AlgebraElement) -> String {
    let terms: Vec<String> = x.iter().take(6).map(|(k, c)| format!("{c}*{}", alg.describe(*k))).collect();
    let more = if x.len() > 6 { " + ..." } else { "" };
    format!("{}{more}", terms.join(" + "))
}

/// Checks every relation on every basis element of the regular representation.
/// Family 4 is checked by confirming that each `ξ_j` acts on `B_{c,σ}` by a
/// scalar that is a root of `∏_l (X - u_l)`.
pub fn verify_on_algebra(alg: &Algebra) -> Vec<RelationFailure> {
    let rels = relations(alg.n(), alg.params().us());
    let roots: HashSet<&Q> = alg.params().us().iter().collect();
    let mut failures = Vec::new();
    for key in alg.basis_keys() {
        let b = alg.basis(key.0, key.1);
        for j in 1..=alg.n() {
            let image = alg.left_mult_xi(j, &b);
            let scalar = image.coeff(key.0, key.1);
            let diagonal = image.len() <= 1 && (image.is_empty() || !scalar.is_zero());
            if !diagonal || !roots.contains(&scalar) {
                failures.push(RelationFailure {
                    family: 4,
                    relation: format!("prod_l (xi{j} - u_l)"),
                    on: alg.describe(key),
                    residual: show(alg, &image),
                });
            }
        }
        for r in &rels {
            let res = evaluate(alg, r, &b);
            if !res.is_zero() {
                failures.push(RelationFailure {
                    family: r.family,
                    relation: r.name.clone(),
                    on: alg.describe(key),
                    residual: show(alg, &res),
                });
            }
        }
    }
    failures
}

/// `(xy)z = x(yz)` on the given triples of basis keys.
pub fn check_associativity(alg: &Algebra, triples: &[[(usize, usize); 3]]) -> Vec<String> {
    triples
        .iter()
        .filter_map(|[a, b, c]| {
            let (x, y, z) = (alg.basis(a.0, a.1), alg.basis(b.0, b.1), alg.basis(c.0, c.1));
            let lhs = alg.multiply(&alg.multiply(&x, &y), &z);
            let rhs = alg.multiply(&x, &alg.multiply(&y, &z));
            (lhs != rhs).then(|| format!("{} {} {}", alg.describe(*a), alg.describe(*b), alg.describe(*c)))
        })
        .collect()
}
