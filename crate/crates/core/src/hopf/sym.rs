//! `Sym^(r) = Sym(X_1) ⊗ ... ⊗ Sym(X_r)` on products of complete functions,
//! and Schur functions through the Jacobi-Trudi determinant.

use std::collections::HashMap;
use std::fmt;

use num::One;

use super::SymH;
use crate::error::{Error, Result};
use crate::linear::{LinComb, Q};

/// A commutative monomial `h_{j_1}(X_{i_1}) h_{j_2}(X_{i_2}) ...`, stored as
/// `(color, degree)` factors sorted by color, then degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HMonomial(Vec<(u32, usize)>);

impl HMonomial {
    /// Factors in any order; `h_0 = 1` factors are rejected, as is color 0.
    pub fn new(mut factors: Vec<(u32, usize)>) -> Result<Self> {
        if let Some(f) = factors.iter().find(|f| f.0 == 0 || f.1 == 0) {
            return Err(Error::InvalidLabel(format!(
                "h-monomial factor h_{}(X_{}) needs positive color and degree",
                f.1, f.0
            )));
        }
        factors.sort_unstable();
        Ok(HMonomial(factors))
    }

    pub fn one() -> Self {
        HMonomial(Vec::new())
    }

    /// `h_j(X_i)`; the unit when `j = 0`.
    pub fn h(color: u32, degree: usize) -> Self {
        assert!(color >= 1, "colors start at 1");
        if degree == 0 {
            Self::one()
        } else {
            HMonomial(vec![(color, degree)])
        }
    }

    pub fn factors(&self) -> &[(u32, usize)] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|f| f.1).sum()
    }

    pub fn mul(&self, other: &HMonomial) -> HMonomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable();
        HMonomial(v)
    }
}

impl fmt::Display for HMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (c, d) in &self.0 {
            write!(f, "h{d}(X{c})")?;
        }
        Ok(())
    }
}

/// `(λ^(1), ..., λ^(r))`, stored without trailing empty partitions so that
/// the label does not depend on the ambient `r`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multipartition(Vec<Vec<usize>>);

impl Multipartition {
    pub fn new(mut components: Vec<Vec<usize>>) -> Result<Self> {
        for (i, p) in components.iter().enumerate() {
            if p.contains(&0) || p.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidLabel(format!(
                    "component {} of multipartition is not a partition: {p:?}",
                    i + 1
                )));
            }
        }
        while components.last().is_some_and(|p| p.is_empty()) {
            components.pop();
        }
        Ok(Multipartition(components))
    }

    pub fn empty() -> Self {
        Multipartition(Vec::new())
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.0
    }

    /// Partition of color `i` (1-based); empty beyond the stored ones.
    pub fn component(&self, i: u32) -> &[usize] {
        self.0.get(i as usize - 1).map(|p| p.as_slice()).unwrap_or(&[])
    }

    pub fn size(&self) -> usize {
        self.0.iter().flatten().sum()
    }

    /// Number of colors actually used (index of the last non-empty component).
    pub fn width(&self) -> u32 {
        self.0.len() as u32
    }

    /// Parts listed color by color, with the matching color of each part.
    pub fn flatten(&self) -> (Vec<usize>, Vec<u32>) {
        let mut parts = Vec::new();
        let mut colors = Vec::new();
        for (i, p) in self.0.iter().enumerate() {
            parts.extend_from_slice(p);
            colors.extend(std::iter::repeat(i as u32 + 1).take(p.len()));
        }
        (parts, colors)
    }

    pub fn from_flat(parts: &[usize], colors: &[u32]) -> Result<Self> {
        if parts.len() != colors.len() {
            return Err(Error::InvalidLabel("multipartition needs one color per part".into()));
        }
        if colors.contains(&0) || colors.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidLabel(
                "multipartition parts must be listed by weakly increasing color".into(),
            ));
        }
        let mut components = vec![Vec::new(); colors.last().copied().unwrap_or(0) as usize];
        for (&p, &c) in parts.iter().zip(colors) {
            components[c as usize - 1].push(p);
        }
        Self::new(components)
    }

    /// Text form padded to `r` components, e.g. `1,1/` for `((1,1), ())`.
    pub fn display_with(&self, r: u32) -> String {
        let r = (r as usize).max(self.0.len());
        (0..r)
            .map(|i| {
                self.0
                    .get(i)
                    .map(|p| p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                    .unwrap_or_default()
            })
            .collect::<Vec<_>>()
            .join("/")
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(0))
    }
}

/// Partitions of `n`, lexicographically increasing as part sequences
/// (`1^n` first, `(n)` last).
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=rest.min(max) {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All `r`-multipartitions of `n`: by the size vector `(|λ^(1)|, ..., |λ^(r)|)`
/// lexicographically, then component by component in [`partitions`] order.
pub fn multipartitions(n: usize, r: u32) -> Vec<Multipartition> {
    let mut out = Vec::new();
    for sizes in weak_compositions(n, r as usize) {
        let mut acc: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
        for &s in &sizes {
            let choices = partitions(s);
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    choices.iter().map(move |p| {
                        let mut v = prefix.clone();
                        v.push(p.clone());
                        v
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(|c| Multipartition::new(c).expect("built from partitions")));
    }
    out
}

/// Weak compositions of `n` into `k` parts, lexicographically increasing.
fn weak_compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in weak_compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Complete monomials `h_λ = ∏_i h_{λ^(i)}(X_i)` of degree `n`, in
/// [`multipartitions`] order. They form a basis of the degree-`n` part.
pub fn h_monomials(n: usize, r: u32) -> Vec<HMonomial> {
    multipartitions(n, r).iter().map(h_of_multipartition).collect()
}

pub fn h_of_multipartition(lambda: &Multipartition) -> HMonomial {
    let factors = lambda
        .components()
        .iter()
        .enumerate()
        .flat_map(|(i, p)| p.iter().map(move |&d| (i as u32 + 1, d)))
        .collect();
    HMonomial::new(factors).expect("positive parts and colors")
}

pub fn product(a: &LinComb<SymH>, b: &LinComb<SymH>) -> LinComb<SymH> {
    a.bilinear(b, |x, y| LinComb::basis(x.mul(y)))
}

/// `s_λ(X_color)` expanded on complete functions by the Jacobi-Trudi
/// determinant `det(h_{λ_i - i + j})`, with `h_0 = 1` and `h_{<0} = 0`.
pub fn schur_in_h(lambda: &[usize], color: u32) -> LinComb<SymH> {
    let l = lambda.len();
    let entry = |i: usize, j: usize| -> LinComb<SymH> {
        let d = lambda[i] as i64 - i as i64 + j as i64;
        if d < 0 {
            LinComb::zero()
        } else {
            LinComb::basis(HMonomial::h(color, d as usize))
        }
    };
    // Laplace expansion along rows, memoized on the set of used columns.
    let mut memo: HashMap<u64, LinComb<SymH>> = HashMap::new();
    fn minor(
        row: usize,
        used: u64,
        l: usize,
        entry: &dyn Fn(usize, usize) -> LinComb<SymH>,
        memo: &mut HashMap<u64, LinComb<SymH>>,
    ) -> LinComb<SymH> {
        if row == l {
            return LinComb::one();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut total = LinComb::zero();
        let mut sign = Q::one();
        for col in 0..l {
            if used >> col & 1 == 1 {
                continue;
            }
            let e = entry(row, col);
            if !e.is_zero() {
                let rest = minor(row + 1, used | 1 << col, l, entry, memo);
                total.add_scaled(&product(&e, &rest), &sign);
            }
            sign = -sign;
        }
        memo.insert(used, total.clone());
        total
    }
    minor(0, 0, l, &entry, &mut memo)
}

/// `S_λ = s_{λ^(1)}(X_1) ... s_{λ^(r)}(X_r)` on complete monomials.
pub fn multipartition_class(lambda: &Multipartition) -> LinComb<SymH> {
    lambda
        .components()
        .iter()
        .enumerate()
        .fold(LinComb::one(), |acc, (i, p)| product(&acc, &schur_in_h(p, i as u32 + 1)))
}
