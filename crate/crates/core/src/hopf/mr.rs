//! The Mantaci-Reutenauer algebra `MR^(r)`: free on `S_j^(i)`, with the
//! ribbon basis `R` defined by `S^(I,u) = Σ_{(J,v) ≤ (I,u)} R_(J,v)`, where
//! `(J,v)` runs over the anti-refinements of `(I,u)`.

use num::One;

use super::{MrR, MrS};
use crate::linear::{LinComb, Tensor, Q};
use crate::ribbon::ColoredComposition;

/// Every colored composition obtained by merging runs of consecutive parts
/// that share a color, `(I,u)` itself included. Sorted.
pub fn anti_refinements(cc: &ColoredComposition) -> Vec<ColoredComposition> {
    let pairs: Vec<(usize, u32)> = cc.pairs().collect();
    // boundaries between equal colors are the free choices
    let free: Vec<usize> = (1..pairs.len()).filter(|&k| pairs[k - 1].1 == pairs[k].1).collect();
    let mut out: Vec<ColoredComposition> = (0u64..1u64 << free.len())
        .map(|mask| merge_at(&pairs, &free, mask))
        .collect();
    out.sort();
    out
}

fn merge_at(pairs: &[(usize, u32)], free: &[usize], mask: u64) -> ColoredComposition {
    let mut merged: Vec<(usize, u32)> = Vec::with_capacity(pairs.len());
    let mut j = 0;
    for (k, &(p, c)) in pairs.iter().enumerate() {
        let glue = j < free.len() && free[j] == k && {
            let g = mask >> j & 1 == 1;
            j += 1;
            g
        };
        match merged.last_mut() {
            Some(last) if glue => last.0 += p,
            _ => merged.push((p, c)),
        }
    }
    ColoredComposition::from_pairs(&merged).expect("merging keeps parts positive")
}

/// Number of parts removed when passing from `fine` to an anti-refinement.
fn length_drop(fine: &ColoredComposition, coarse: &ColoredComposition) -> usize {
    fine.len() - coarse.len()
}

pub fn product_s(a: &LinComb<MrS>, b: &LinComb<MrS>) -> LinComb<MrS> {
    a.bilinear(b, |x, y| LinComb::basis(x.concat(y)))
}

/// `R_(I,u) R_(J,v) = R_(I·J, u·v) + [u_p = v_1] R_(I▷J, ...)` where `▷`
/// merges the last part of `I` with the first of `J`.
pub fn product_r_labels(x: &ColoredComposition, y: &ColoredComposition) -> LinComb<MrR> {
    let mut out = LinComb::basis(x.concat(y));
    if let (Some((p, c)), Some((q, d))) = (x.pairs().last(), y.pairs().next()) {
        if c == d {
            let mut pairs: Vec<(usize, u32)> = x.pairs().collect();
            pairs.last_mut().expect("non-empty").0 = p + q;
            pairs.extend(y.pairs().skip(1));
            out.add_term(
                ColoredComposition::from_pairs(&pairs).expect("positive parts"),
                Q::one(),
            );
        }
    }
    out
}

pub fn product_r(a: &LinComb<MrR>, b: &LinComb<MrR>) -> LinComb<MrR> {
    a.bilinear(b, product_r_labels)
}

pub fn s_to_r(a: &LinComb<MrS>) -> LinComb<MrR> {
    a.map_linear(|l| LinComb::from_labels(anti_refinements(l)))
}

/// Möbius inversion on the (boolean) anti-refinement interval.
pub fn r_to_s(a: &LinComb<MrR>) -> LinComb<MrS> {
    a.map_linear(|l| {
        LinComb::from_terms(anti_refinements(l).into_iter().map(|j| {
            let sign = if length_drop(l, &j) % 2 == 0 { Q::one() } else { -Q::one() };
            (j, sign)
        }))
    })
}

/// `Δ S^(I,u) = ∏_k Σ_{a+b=i_k} S_a^(u_k) ⊗ S_b^(u_k)`.
pub fn coproduct_s_label(l: &ColoredComposition) -> Tensor<MrS, MrS> {
    let mut acc: Vec<(Vec<(usize, u32)>, Vec<(usize, u32)>)> = vec![(Vec::new(), Vec::new())];
    for (p, c) in l.pairs() {
        let mut next = Vec::with_capacity(acc.len() * (p + 1));
        for (left, right) in &acc {
            for a in 0..=p {
                let mut left = left.clone();
                let mut right = right.clone();
                if a > 0 {
                    left.push((a, c));
                }
                if a < p {
                    right.push((p - a, c));
                }
                next.push((left, right));
            }
        }
        acc = next;
    }
    let mut out = Tensor::zero();
    for (left, right) in acc {
        out.add_term(
            ColoredComposition::from_pairs(&left).expect("positive parts"),
            ColoredComposition::from_pairs(&right).expect("positive parts"),
            Q::one(),
        );
    }
    out
}

pub fn coproduct_s(a: &LinComb<MrS>) -> Tensor<MrS, MrS> {
    let mut out = Tensor::zero();
    for (l, c) in a.iter() {
        out.add_scaled(&coproduct_s_label(l), c);
    }
    out
}

pub fn coproduct_r(a: &LinComb<MrR>) -> Tensor<MrR, MrR> {
    let to_r = |l: &ColoredComposition| s_to_r(&LinComb::basis(l.clone()));
    coproduct_s(&r_to_s(a)).map(to_r, to_r)
}
