//! Integer compositions, their descent sets, and descent classes of permutations.
//!
//! A composition `I = (i_1, ..., i_k)` of `n` is identified with its descent set
//! `D(I) = {i_1, i_1 + i_2, ...} ⊂ {1, ..., n-1}`. In ribbon language a position
//! `i ∈ D(I)` is a column (down) step between cells `i` and `i + 1`; every other
//! position is a row (right) step.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidComposition(format!(
                "part {} is zero in {:?}",
                pos + 1,
                parts
            )));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// The one-part composition `(n)`; empty when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Composition(vec![n])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn descent_set(&self) -> BTreeSet<usize> {
        self.descents().into_iter().collect()
    }

    /// Sorted descent positions (partial sums without the last one).
    pub fn descents(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.0.len().saturating_sub(1));
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Step pattern of length `n - 1`: entry `i - 1` is `true` iff `i` is a descent.
    pub fn steps(&self) -> Vec<bool> {
        let n = self.size();
        let mut steps = vec![false; n.saturating_sub(1)];
        for d in self.descents() {
            steps[d - 1] = true;
        }
        steps
    }

    /// Inverse of [`Composition::steps`]: `steps.len() + 1` cells.
    pub fn from_steps(steps: &[bool]) -> Self {
        let mut parts = Vec::new();
        let mut current = 1;
        for &down in steps {
            if down {
                parts.push(current);
                current = 1;
            } else {
                current += 1;
            }
        }
        parts.push(current);
        Composition(parts)
    }

    /// Composition of `n` with the given descent set.
    ///
    /// Rejects positions outside `{1, ..., n-1}`. For `n = 0` only the empty
    /// set is accepted and the empty composition is returned.
    pub fn from_descents<I: IntoIterator<Item = usize>>(n: usize, descents: I) -> Result<Self> {
        let set: BTreeSet<usize> = descents.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&d| d == 0 || d >= n) {
            return Err(Error::InvalidComposition(format!(
                "descent {bad} outside 1..{}",
                n.saturating_sub(1)
            )));
        }
        if n == 0 {
            return Ok(Self::empty());
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for d in set {
            parts.push(d - prev);
            prev = d;
        }
        parts.push(n - prev);
        Ok(Composition(parts))
    }

    /// Bitmask with bit `i - 1` set for every descent `i`. Requires `n <= 64`.
    pub fn descent_mask(&self) -> u64 {
        assert!(self.size() <= 64, "descent masks support n <= 64");
        self.descents()
            .into_iter()
            .fold(0u64, |m, d| m | (1u64 << (d - 1)))
    }

    pub fn is_descent(&self, i: usize) -> bool {
        self.descents().contains(&i)
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// All `2^(n-1)` compositions of `n`, ordered by descent mask.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Self::empty()];
        }
        (0u64..(1u64 << (n - 1)))
            .map(|mask| {
                let steps: Vec<bool> = (0..n - 1).map(|i| mask >> i & 1 == 1).collect();
                Self::from_steps(&steps)
            })
            .collect()
    }

    /// Every composition `J` with `D(J) ⊆ D(I)` (including `I`).
    pub fn coarsenings(&self) -> Vec<Composition> {
        let n = self.size();
        let descents = self.descents();
        let k = descents.len();
        (0u64..(1u64 << k))
            .map(|mask| {
                let kept = (0..k).filter(|j| mask >> j & 1 == 1).map(|j| descents[j]);
                Self::from_descents(n, kept).expect("subset of valid descents")
            })
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).fold(1u64, |acc, k| {
        acc.checked_mul(k).expect("factorial overflows u64")
    })
}

/// `n! / (p_1! p_2! ...)` for parts summing to `n`.
pub fn multinomial(parts: &[usize]) -> u64 {
    let mut acc: u64 = 1;
    let mut total: u64 = 0;
    for &p in parts {
        // binom = C(total + j, j) after step j
        let mut binom: u64 = 1;
        for j in 1..=p as u64 {
            binom = binom.checked_mul(total + j).expect("multinomial overflows u64") / j;
        }
        acc = acc.checked_mul(binom).expect("multinomial overflows u64");
        total += p as u64;
    }
    acc
}

/// Number of permutations of `n` whose descent composition is `I`,
/// by inclusion-exclusion over the coarsenings of `I`.
pub fn descent_class_size(shape: &Composition) -> u64 {
    let len = shape.len() as i64;
    let mut total: i128 = 0;
    for coarse in shape.coarsenings() {
        let sign = if (len - coarse.len() as i64) % 2 == 0 { 1 } else { -1 };
        total += sign * multinomial(coarse.parts()) as i128;
    }
    u64::try_from(total).expect("descent class sizes are non-negative")
}

/// The permutation of maximal length whose descent composition is `I`.
///
/// Blocks are filled with the largest available values first, each block
/// increasing; e.g. `(2,1) -> 231`. Values are 1-based.
pub fn max_inversion_perm(shape: &Composition) -> Vec<usize> {
    let n = shape.size();
    let mut word = Vec::with_capacity(n);
    let mut top = n;
    for &p in shape.parts() {
        word.extend(top + 1 - p..=top);
        top -= p;
    }
    word
}

/// Descent composition `C(σ)` of a word of distinct integers.
pub fn descent_composition(word: &[usize]) -> Composition {
    let steps: Vec<bool> = word.windows(2).map(|w| w[0] > w[1]).collect();
    if word.is_empty() {
        Composition::empty()
    } else {
        Composition::from_steps(&steps)
    }
}
