#![allow(dead_code)]

use std::collections::BTreeMap;

use num::Zero;
use rand::Rng;

use cycloribbon::hopf::mr::{coproduct_r, product_r};
use cycloribbon::hopf::qmr::{coproduct_f, pairing, product_f, tensor_pairing};
use cycloribbon::hopf::{MrR, QmrF};
use cycloribbon::linear::{q, Basis};
use cycloribbon::ribbon::enumerate_cycloribbons;
use cycloribbon::{ColorWord, ColoredComposition, Composition, LinComb, Tensor, Q};

pub fn random_composition<R: Rng>(rng: &mut R, n: usize) -> Composition {
    let steps: Vec<bool> = (1..n).map(|_| rng.gen_bool(0.5)).collect();
    if n == 0 {
        Composition::empty()
    } else {
        Composition::from_steps(&steps)
    }
}

pub fn random_colored_composition<R: Rng>(rng: &mut R, n: usize, r: u32) -> ColoredComposition {
    let parts = random_composition(rng, n);
    let colors: Vec<u32> = (0..parts.len()).map(|_| rng.gen_range(1..=r)).collect();
    ColoredComposition::new(parts, ColorWord::new(colors).unwrap()).unwrap()
}

fn random_coeff<R: Rng>(rng: &mut R) -> Q {
    let v = rng.gen_range(1..=3i64);
    q(if rng.gen_bool(0.5) { v } else { -v })
}

/// One to three random terms of grade `n`.
pub fn random_r<R: Rng>(rng: &mut R, n: usize, r: u32) -> LinComb<MrR> {
    let mut x = LinComb::zero();
    for _ in 0..rng.gen_range(1..=3) {
        x.add_term(random_colored_composition(rng, n, r), random_coeff(rng));
    }
    x
}

/// One to three random cycloribbon terms of grade `n`.
pub fn random_f<R: Rng>(rng: &mut R, n: usize, r: u32) -> LinComb<QmrF> {
    let all = enumerate_cycloribbons(n, r, None);
    let mut x = LinComb::zero();
    for _ in 0..rng.gen_range(1..=3) {
        x.add_term(all[rng.gen_range(0..all.len())].clone(), random_coeff(rng));
    }
    x
}

/// Every cycloribbon of grade `n` with a random coefficient in `-3..=3`.
pub fn dense_f<R: Rng>(rng: &mut R, n: usize, r: u32) -> LinComb<QmrF> {
    LinComb::from_terms(
        enumerate_cycloribbons(n, r, None)
            .into_iter()
            .map(|l| (l, q(rng.gen_range(-3..=3)))),
    )
}

/// Every colored composition of grade `n` with a random coefficient in `-3..=3`.
pub fn dense_r<R: Rng>(rng: &mut R, n: usize, r: u32) -> LinComb<MrR> {
    LinComb::from_terms(ColoredComposition::all(n, r).into_iter().map(|l| (l, q(rng.gen_range(-3..=3)))))
}

/// Splits of `total` into `parts` non-negative grades.
pub fn random_grades<R: Rng>(rng: &mut R, total: usize, parts: usize) -> Vec<usize> {
    let mut cuts: Vec<usize> = (0..parts - 1).map(|_| rng.gen_range(0..=total)).collect();
    cuts.sort();
    let mut out = Vec::with_capacity(parts);
    let mut prev = 0;
    for c in cuts {
        out.push(c - prev);
        prev = c;
    }
    out.push(total - prev);
    out
}

pub type Triple<B> = BTreeMap<(<B as Basis>::Label, <B as Basis>::Label, <B as Basis>::Label), Q>;

fn add_triple<B: Basis>(acc: &mut Triple<B>, key: (B::Label, B::Label, B::Label), c: Q) {
    let e = acc.entry(key.clone()).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&key);
    }
}

/// `(Δ ⊗ 1)Δ x` and `(1 ⊗ Δ)Δ x`.
pub fn both_iterated_coproducts<B: Basis>(
    x: &LinComb<B>,
    delta: impl Fn(&LinComb<B>) -> Tensor<B, B>,
) -> (Triple<B>, Triple<B>) {
    let d = delta(x);
    let mut left = Triple::<B>::new();
    let mut right = Triple::<B>::new();
    for (a, b, c) in d.iter() {
        for (a1, a2, c2) in delta(&LinComb::basis(a.clone())).iter() {
            add_triple::<B>(&mut left, (a1.clone(), a2.clone(), b.clone()), c * c2);
        }
        for (b1, b2, c2) in delta(&LinComb::basis(b.clone())).iter() {
            add_triple::<B>(&mut right, (a.clone(), b1.clone(), b2.clone()), c * c2);
        }
    }
    (left, right)
}

/// Outcome of a randomized identity check.
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn lb<B: Basis>(label: &B::Label) -> LinComb<B> {
    LinComb::basis(label.clone())
}

/// The Hopf identities on random inputs of total grade at most `max_grade`.
pub fn hopf_suites<R: Rng>(rng: &mut R, cases: usize, max_grade: usize, max_r: u32) -> Vec<SuiteResult> {
    let mut results = Vec::new();
    let mut run = |name: &'static str, f: &mut dyn FnMut(&mut R, usize, u32) -> Option<String>| {
        let mut failures = Vec::new();
        for _ in 0..cases {
            let total = rng.gen_range(0..=max_grade);
            let r = rng.gen_range(1..=max_r);
            if let Some(msg) = f(rng, total, r) {
                failures.push(msg);
            }
        }
        results.push(SuiteResult { name, cases, failures });
    };

    run("R product associativity", &mut |rng, total, r| {
        let g = random_grades(rng, total, 3);
        let (x, y, z) = (random_r(rng, g[0], r), random_r(rng, g[1], r), random_r(rng, g[2], r));
        let lhs = product_r(&product_r(&x, &y), &z);
        let rhs = product_r(&x, &product_r(&y, &z));
        (lhs != rhs).then(|| format!("{x} | {y} | {z}"))
    });
    run("F product associativity", &mut |rng, total, r| {
        let g = random_grades(rng, total, 3);
        let (x, y, z) = (random_f(rng, g[0], r), random_f(rng, g[1], r), random_f(rng, g[2], r));
        let lhs = product_f(&product_f(&x, &y), &z);
        let rhs = product_f(&x, &product_f(&y, &z));
        (lhs != rhs).then(|| format!("{x} | {y} | {z}"))
    });
    run("R coproduct coassociativity", &mut |rng, total, r| {
        let x = random_r(rng, total, r);
        let (l, rr) = both_iterated_coproducts(&x, coproduct_r);
        (l != rr).then(|| format!("{x}"))
    });
    run("F coproduct coassociativity", &mut |rng, total, r| {
        let x = random_f(rng, total, r);
        let (l, rr) = both_iterated_coproducts(&x, coproduct_f);
        (l != rr).then(|| format!("{x}"))
    });
    run("R coproduct is multiplicative", &mut |rng, total, r| {
        let g = random_grades(rng, total, 2);
        let (x, y) = (random_r(rng, g[0], r), random_r(rng, g[1], r));
        let lhs = coproduct_r(&product_r(&x, &y));
        let rhs = coproduct_r(&x).multiply(
            &coproduct_r(&y),
            |a, b| product_r(&lb(a), &lb(b)),
            |a, b| product_r(&lb(a), &lb(b)),
        );
        (lhs != rhs).then(|| format!("{x} | {y}"))
    });
    run("F coproduct is multiplicative", &mut |rng, total, r| {
        let g = random_grades(rng, total, 2);
        let (x, y) = (random_f(rng, g[0], r), random_f(rng, g[1], r));
        let lhs = coproduct_f(&product_f(&x, &y));
        let rhs = coproduct_f(&x).multiply(
            &coproduct_f(&y),
            |a, b| product_f(&lb(a), &lb(b)),
            |a, b| product_f(&lb(a), &lb(b)),
        );
        (lhs != rhs).then(|| format!("{x} | {y}"))
    });
    run("<ab, f> = <a (x) b, Delta f>", &mut |rng, total, r| {
        let g = random_grades(rng, total, 2);
        let (a, b) = (random_r(rng, g[0], r), random_r(rng, g[1], r));
        let f = dense_f(rng, total, r);
        let lhs = pairing(&product_r(&a, &b), &f);
        let rhs = tensor_pairing(&Tensor::product_of(&a, &b), &coproduct_f(&f));
        (lhs != rhs).then(|| format!("{a} | {b} | {f}: {lhs} vs {rhs}"))
    });
    run("<Delta a, f (x) g> = <a, fg>", &mut |rng, total, r| {
        let g = random_grades(rng, total, 2);
        let (f, h) = (random_f(rng, g[0], r), random_f(rng, g[1], r));
        let a = dense_r(rng, total, r);
        let lhs = tensor_pairing(&coproduct_r(&a), &Tensor::product_of(&f, &h));
        let rhs = pairing(&a, &product_f(&f, &h));
        (lhs != rhs).then(|| format!("{a} | {f} | {h}: {lhs} vs {rhs}"))
    });
    results
}
