//! `AKS_{n,r}(0)` as a vector space with basis `B_{c,σ} = L_c T_σ` and the
//! left action of its generators.
//!
//! `ξ_j` acts on `B_{c,σ}` by `u_{c_j}`. `T_i` acts by
//! `T_i L_c = L_{c s_i} T_i + {-L_c if c_i < c_{i+1}; 0 if equal; L_{c s_i} if c_i > c_{i+1}}`
//! followed by the 0-Hecke rule `T_i T_σ = T_{s_i σ}` when the length grows
//! and `-T_σ` otherwise. Products of basis elements are obtained by letting
//! a reduced word of `σ` act and then projecting with `L_c`.
//!
//! (For generic `q` the second rule reads `T_i T_σ = q T_σ + (q - 1) T_σ`
//! on length-decreasing steps; only `q = 0` is implemented.)

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use num::{One, Zero};

use crate::composition::factorial;
use crate::error::{Error, Result};
use crate::linear::{q, Q};
use crate::ribbon::ColorWord;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraParams {
    n: usize,
    r: u32,
    u: Vec<Q>,
}

impl AlgebraParams {
    pub fn new(n: usize, r: u32, u: Vec<Q>) -> Result<Self> {
        if r == 0 {
            return Err(Error::Oracle("at least one color is needed".into()));
        }
        if u.len() != r as usize {
            return Err(Error::Oracle(format!("{} parameters given for r = {r}", u.len())));
        }
        let mut sorted = u.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Oracle("parameters u_k must be pairwise distinct".into()));
        }
        Ok(AlgebraParams { n, r, u })
    }

    /// `u_k = k`.
    pub fn standard(n: usize, r: u32) -> Self {
        Self::new(n, r, (1..=r as i64).map(q).collect()).expect("distinct integers")
    }

    /// `u_k = k² - k + 1`, i.e. `1, 3, 7, 13, ...`.
    pub fn alternate(n: usize, r: u32) -> Self {
        Self::new(n, r, (1..=r as i64).map(|k| q(k * k - k + 1)).collect()).expect("strictly increasing")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn u(&self, k: u32) -> &Q {
        &self.u[k as usize - 1]
    }

    pub fn us(&self) -> &[Q] {
        &self.u
    }

    /// `r^n n!`, or `None` on overflow.
    pub fn dimension(&self) -> Option<u64> {
        (self.r as u64)
            .checked_pow(self.n as u32)
            .and_then(|w| w.checked_mul(factorial(self.n.min(20))))
            .filter(|_| self.n <= 20)
    }

    /// `P_k(x) = ∏_{l ≠ k} (x - u_l) / (u_k - u_l)`.
    pub fn lagrange(&self, k: u32, x: &Q) -> Q {
        let uk = self.u(k);
        let mut acc = Q::one();
        for (l, ul) in self.u.iter().enumerate() {
            if l + 1 != k as usize {
                acc = acc * (x - ul) / (uk - ul);
                if acc.is_zero() {
                    break;
                }
            }
        }
        acc
    }
}

/// Sparse element of the algebra: `(color word index, permutation index) -> coefficient`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<(usize, usize), Q>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Q)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: (usize, usize), coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(Q::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &AlgebraElement, factor: &Q) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(*k, c * factor);
        }
    }

    pub fn scale(&self, factor: &Q) -> AlgebraElement {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn coeff(&self, word: usize, perm: usize) -> Q {
        self.terms.get(&(word, perm)).cloned().unwrap_or_else(Q::zero)
    }
}

/// A generator, or a Lagrange projector `P_k(ξ_j)`, acting on the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    T(usize),
    Xi(usize),
    Lagrange { k: u32, j: usize },
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::T(i) => write!(f, "T{i}"),
            Op::Xi(j) => write!(f, "xi{j}"),
            Op::Lagrange { k, j } => write!(f, "P{k}(xi{j})"),
        }
    }
}

pub struct Algebra {
    params: AlgebraParams,
    perms: Vec<Vec<usize>>,
    perm_index: HashMap<Vec<usize>, usize>,
    /// `left[i-1][p] = (index of s_i ∘ σ_p, length grows)`.
    left: Vec<Vec<(usize, bool)>>,
    words: usize,
    /// `lagrange[k-1][l-1] = P_k(u_l)`.
    lagrange: OnceLock<Vec<Vec<Q>>>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Vec<usize>| {
                let free: Vec<usize> = (1..=n).filter(|v| !w.contains(v)).collect();
                free.into_iter().map(move |v| {
                    let mut w = w.clone();
                    w.push(v);
                    w
                })
            })
            .collect();
    }
    out
}

impl Algebra {
    /// Fails when `r^n n!` exceeds `max_dim`.
    pub fn new(params: AlgebraParams, max_dim: u64) -> Result<Self> {
        let dim = params.dimension().unwrap_or(u64::MAX);
        if dim > max_dim {
            return Err(Error::Oracle(format!(
                "AKS_{{{},{}}}(0) has dimension {dim}, above the limit {max_dim}",
                params.n, params.r
            )));
        }
        let n = params.n;
        let perms = permutations(n);
        let perm_index: HashMap<Vec<usize>, usize> =
            perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let left = (1..n)
            .map(|i| {
                perms
                    .iter()
                    .map(|p| {
                        let pi = p.iter().position(|&v| v == i).expect("permutation");
                        let pj = p.iter().position(|&v| v == i + 1).expect("permutation");
                        let moved: Vec<usize> = p
                            .iter()
                            .map(|&v| if v == i { i + 1 } else if v == i + 1 { i } else { v })
                            .collect();
                        (perm_index[&moved], pi < pj)
                    })
                    .collect()
            })
            .collect();
        let words = (params.r as usize).pow(n as u32);
        Ok(Algebra {
            params,
            perms,
            perm_index,
            left,
            words,
            lagrange: OnceLock::new(),
        })
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn dimension(&self) -> usize {
        self.words * self.perms.len()
    }

    pub fn num_words(&self) -> usize {
        self.words
    }

    pub fn permutations(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn perm_index(&self, word: &[usize]) -> Option<usize> {
        self.perm_index.get(word).copied()
    }

    /// Index of the identity permutation.
    pub fn identity(&self) -> usize {
        0
    }

    /// Color `c_j` (1-based `j`) of the word with the given index.
    pub fn color(&self, word: usize, j: usize) -> u32 {
        let r = self.params.r as usize;
        let shift = r.pow((self.n() - j) as u32);
        (word / shift % r) as u32 + 1
    }

    pub fn word_index(&self, word: &ColorWord) -> Option<usize> {
        if word.len() != self.n() || word.max_color() > self.params.r {
            return None;
        }
        let r = self.params.r as usize;
        Some(word.as_slice().iter().fold(0, |acc, &c| acc * r + c as usize - 1))
    }

    pub fn word(&self, index: usize) -> ColorWord {
        ColorWord::new((1..=self.n()).map(|j| self.color(index, j)).collect()).expect("positive colors")
    }

    /// Index of `c s_i`.
    fn swap(&self, word: usize, i: usize) -> usize {
        let r = self.params.r as usize;
        let (a, b) = (self.color(word, i) as usize, self.color(word, i + 1) as usize);
        let hi = r.pow((self.n() - i) as u32);
        let lo = hi / r;
        word - (a - 1) * hi - (b - 1) * lo + (b - 1) * hi + (a - 1) * lo
    }

    pub fn basis(&self, word: usize, perm: usize) -> AlgebraElement {
        let mut e = AlgebraElement::zero();
        e.add_term((word, perm), Q::one());
        e
    }

    pub fn one(&self) -> AlgebraElement {
        let mut e = AlgebraElement::zero();
        for w in 0..self.words {
            e.add_term((w, self.identity()), Q::one());
        }
        e
    }

    /// The element `T_i = Σ_c B_{c, s_i}`.
    pub fn t_generator(&self, i: usize) -> AlgebraElement {
        self.left_mult_t(i, &self.one())
    }

    fn lagrange_table(&self) -> &Vec<Vec<Q>> {
        self.lagrange.get_or_init(|| {
            (1..=self.params.r)
                .map(|k| self.params.u.iter().map(|ul| self.params.lagrange(k, ul)).collect())
                .collect()
        })
    }

    pub fn left_mult_t(&self, i: usize, x: &AlgebraElement) -> AlgebraElement {
        assert!(i >= 1 && i < self.n(), "T_{i} undefined for n = {}", self.n());
        let mut out = AlgebraElement::zero();
        for (&(w, p), coeff) in &x.terms {
            let sw = self.swap(w, i);
            let (moved, grows) = self.left[i - 1][p];
            if grows {
                out.add_term((sw, moved), coeff.clone());
            } else {
                out.add_term((sw, p), -coeff.clone());
            }
            match self.color(w, i).cmp(&self.color(w, i + 1)) {
                std::cmp::Ordering::Less => out.add_term((w, p), -coeff.clone()),
                std::cmp::Ordering::Equal => {}
                std::cmp::Ordering::Greater => out.add_term((sw, p), coeff.clone()),
            }
        }
        out
    }

    pub fn left_mult_xi(&self, j: usize, x: &AlgebraElement) -> AlgebraElement {
        assert!(j >= 1 && j <= self.n(), "xi_{j} undefined for n = {}", self.n());
        let mut out = AlgebraElement::zero();
        for (&(w, p), coeff) in &x.terms {
            out.add_term((w, p), coeff * self.params.u(self.color(w, j)));
        }
        out
    }

    /// `P_k(ξ_j) x`.
    pub fn left_mult_lagrange(&self, k: u32, j: usize, x: &AlgebraElement) -> AlgebraElement {
        let table = self.lagrange_table();
        let mut out = AlgebraElement::zero();
        for (&(w, p), coeff) in &x.terms {
            let v = &table[k as usize - 1][self.color(w, j) as usize - 1];
            if !v.is_zero() {
                out.add_term((w, p), coeff * v);
            }
        }
        out
    }

    /// `L_c x`: keep the terms whose color word is `c`.
    pub fn project(&self, word: usize, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            terms: x
                .terms
                .iter()
                .filter(|((w, _), _)| *w == word)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    pub fn apply(&self, op: Op, x: &AlgebraElement) -> AlgebraElement {
        match op {
            Op::T(i) => self.left_mult_t(i, x),
            Op::Xi(j) => self.left_mult_xi(j, x),
            Op::Lagrange { k, j } => self.left_mult_lagrange(k, j, x),
        }
    }

    /// `w_1 w_2 ... w_k x`: the last operator acts first.
    pub fn apply_word(&self, word: &[Op], x: &AlgebraElement) -> AlgebraElement {
        word.iter().rev().fold(x.clone(), |acc, &op| {
            if acc.is_zero() {
                acc
            } else {
                self.apply(op, &acc)
            }
        })
    }

    /// `T_σ x`, peeling left descents of `σ` (`σ = s_i (s_i σ)` when `i + 1`
    /// comes before `i` in the word of `σ`).
    pub fn left_mult_t_perm(&self, perm: usize, x: &AlgebraElement) -> AlgebraElement {
        let p = &self.perms[perm];
        for i in 1..self.n() {
            let (shorter, grows) = self.left[i - 1][perm];
            if !grows {
                debug_assert!(p.iter().position(|&v| v == i + 1) < p.iter().position(|&v| v == i));
                let inner = self.left_mult_t_perm(shorter, x);
                return self.left_mult_t(i, &inner);
            }
        }
        x.clone()
    }

    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (&(w, p), coeff) in &x.terms {
            let moved = self.left_mult_t_perm(p, y);
            out.add_scaled(&self.project(w, &moved), coeff);
        }
        out
    }

    /// Every basis element as `(word index, permutation index)`.
    pub fn basis_keys(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.words).flat_map(move |w| (0..self.perms.len()).map(move |p| (w, p)))
    }

    pub fn describe(&self, key: (usize, usize)) -> String {
        let p: Vec<String> = self.perms[key.1].iter().map(|v| v.to_string()).collect();
        format!("B[{}; {}]", self.word(key.0), p.join(""))
    }
}
