//! Colored ribbons, cycloribbons and anticycloribbons, the involution `φ`,
//! colored compositions, and the order `≤_I` on fillings of a ribbon.
//!
//! Everything is phrased through the descent set of the shape: position `i`
//! is a column step when `i ∈ D(shape)` and a row step otherwise. Rows are read
//! left to right and columns top to bottom (French notation), so no drawing
//! convention ever enters the code.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::composition::Composition;
use crate::error::{Error, Result};

/// A word over the color set `{1, ..., r}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorWord(Vec<u32>);

impl ColorWord {
    /// Colors must be at least 1; use [`ColorWord::with_colors`] to also bound them by `r`.
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(pos) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidColors(format!(
                "color at position {} is 0; colors start at 1",
                pos + 1
            )));
        }
        Ok(ColorWord(colors))
    }

    pub fn with_colors(colors: Vec<u32>, r: u32) -> Result<Self> {
        if let Some((pos, c)) = colors.iter().enumerate().find(|(_, &c)| c > r) {
            return Err(Error::InvalidColors(format!(
                "color {c} at position {} exceeds r = {r}",
                pos + 1
            )));
        }
        Self::new(colors)
    }

    pub fn constant(n: usize, color: u32) -> Self {
        assert!(color >= 1);
        ColorWord(vec![color; n])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_color(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn concat(&self, other: &ColorWord) -> ColorWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ColorWord(v)
    }

    /// The word with letters `i` and `i + 1` (1-based) exchanged.
    pub fn swapped(&self, i: usize) -> ColorWord {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        ColorWord(v)
    }

    /// All `r^n` words of length `n`, in lexicographic order.
    pub fn all(n: usize, r: u32) -> Vec<ColorWord> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w: Vec<u32>| {
                    (1..=r).map(move |c| {
                        let mut w = w.clone();
                        w.push(c);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(ColorWord).collect()
    }
}

impl std::ops::Index<usize> for ColorWord {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Display for ColorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A filling `[I, c]` of the ribbon of shape `I`, read row by row.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredRibbon {
    shape: Composition,
    colors: ColorWord,
}

impl ColoredRibbon {
    pub fn new(shape: Composition, colors: ColorWord) -> Result<Self> {
        if shape.size() != colors.len() {
            return Err(Error::InvalidLabel(format!(
                "ribbon of size {} filled with {} colors",
                shape.size(),
                colors.len()
            )));
        }
        Ok(ColoredRibbon { shape, colors })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    fn from_steps(steps: &[bool], colors: Vec<u32>) -> Self {
        let shape = if colors.is_empty() {
            Composition::empty()
        } else {
            Composition::from_steps(steps)
        };
        ColoredRibbon {
            shape,
            colors: ColorWord(colors),
        }
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn colors(&self) -> &ColorWord {
        &self.colors
    }

    pub fn size(&self) -> usize {
        self.colors.len()
    }

    /// Weakly increasing along rows, weakly decreasing down columns.
    pub fn is_cycloribbon(&self) -> bool {
        let c = self.colors.as_slice();
        self.shape
            .steps()
            .iter()
            .enumerate()
            .all(|(i, &down)| if down { c[i] >= c[i + 1] } else { c[i] <= c[i + 1] })
    }

    /// Weakly decreasing along rows, weakly increasing down columns.
    pub fn is_anticycloribbon(&self) -> bool {
        let c = self.colors.as_slice();
        self.shape
            .steps()
            .iter()
            .enumerate()
            .all(|(i, &down)| if down { c[i] <= c[i + 1] } else { c[i] >= c[i + 1] })
    }

    /// The involution `φ` on colored ribbons: colors are kept, and each step is
    /// kept when the two cells carry the same color and flipped otherwise.
    pub fn phi(&self) -> ColoredRibbon {
        let c = self.colors.as_slice();
        let steps: Vec<bool> = self
            .shape
            .steps()
            .iter()
            .enumerate()
            .map(|(i, &down)| if c[i] == c[i + 1] { down } else { !down })
            .collect();
        Self::from_steps(&steps, c.to_vec())
    }

    /// First `k` cells and the remaining cells, each with its induced shape.
    pub fn split_at(&self, k: usize) -> (ColoredRibbon, ColoredRibbon) {
        assert!(k <= self.size(), "split position {k} beyond ribbon size");
        let steps = self.shape.steps();
        let c = self.colors.as_slice();
        let left_steps = if k == 0 { &steps[..0] } else { &steps[..k - 1] };
        let right_steps = if k == self.size() { &steps[..0] } else { &steps[k..] };
        (
            Self::from_steps(left_steps, c[..k].to_vec()),
            Self::from_steps(right_steps, c[k..].to_vec()),
        )
    }

    /// Sort key used for matrix rows and columns: descent mask, then colors.
    pub fn canonical_key(&self) -> (u64, &[u32]) {
        (self.shape.descent_mask(), self.colors.as_slice())
    }
}

impl fmt::Display for ColoredRibbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.shape, self.colors)
    }
}

/// Which monotonicity the enumeration should produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RibbonKind {
    Cyclo,
    AntiCyclo,
}

/// All cycloribbons (or anticycloribbons) of size `n` over `r` colors,
/// optionally restricted to one shape, sorted lexicographically.
///
/// Cells are added one at a time: a new color different from the previous
/// one forces the direction of the step, an equal color allows both.
pub fn enumerate_ribbons(
    n: usize,
    r: u32,
    shape: Option<&Composition>,
    kind: RibbonKind,
) -> Vec<ColoredRibbon> {
    if n == 0 {
        return match shape {
            Some(s) if !s.is_empty() => Vec::new(),
            _ => vec![ColoredRibbon::empty()],
        };
    }
    if r == 0 {
        return Vec::new();
    }
    if let Some(s) = shape {
        if s.size() != n {
            return Vec::new();
        }
    }
    let wanted = shape.map(|s| s.steps());
    let mut out = Vec::new();
    let mut colors = Vec::with_capacity(n);
    let mut steps = Vec::with_capacity(n - 1);
    for first in 1..=r {
        colors.push(first);
        extend_ribbons(n, r, kind, wanted.as_deref(), &mut colors, &mut steps, &mut out);
        colors.pop();
    }
    out.sort();
    out
}

fn extend_ribbons(
    n: usize,
    r: u32,
    kind: RibbonKind,
    wanted: Option<&[bool]>,
    colors: &mut Vec<u32>,
    steps: &mut Vec<bool>,
    out: &mut Vec<ColoredRibbon>,
) {
    if colors.len() == n {
        out.push(ColoredRibbon::from_steps(steps, colors.clone()));
        return;
    }
    let prev = *colors.last().expect("at least one cell");
    let pos = steps.len();
    for next in 1..=r {
        let options: &[bool] = match (next.cmp(&prev), kind) {
            (std::cmp::Ordering::Equal, _) => &[false, true],
            (std::cmp::Ordering::Greater, RibbonKind::Cyclo) => &[false],
            (std::cmp::Ordering::Less, RibbonKind::Cyclo) => &[true],
            (std::cmp::Ordering::Greater, RibbonKind::AntiCyclo) => &[true],
            (std::cmp::Ordering::Less, RibbonKind::AntiCyclo) => &[false],
        };
        for &down in options {
            if let Some(w) = wanted {
                if w[pos] != down {
                    continue;
                }
            }
            colors.push(next);
            steps.push(down);
            extend_ribbons(n, r, kind, wanted, colors, steps, out);
            steps.pop();
            colors.pop();
        }
    }
}

pub fn enumerate_cycloribbons(n: usize, r: u32, shape: Option<&Composition>) -> Vec<ColoredRibbon> {
    enumerate_ribbons(n, r, shape, RibbonKind::Cyclo)
}

pub fn enumerate_anticycloribbons(
    n: usize,
    r: u32,
    shape: Option<&Composition>,
) -> Vec<ColoredRibbon> {
    enumerate_ribbons(n, r, shape, RibbonKind::AntiCyclo)
}

/// Every colored ribbon of size `n` over `r` colors (`2^(n-1) r^n` of them).
pub fn enumerate_colored_ribbons(n: usize, r: u32) -> Vec<ColoredRibbon> {
    let words = ColorWord::all(n, r);
    Composition::all(n)
        .into_iter()
        .flat_map(|shape| {
            words
                .iter()
                .map(move |w| ColoredRibbon::new(shape.clone(), w.clone()).expect("sizes agree"))
        })
        .collect()
}

/// A composition with one color per part, e.g. `(2,1,2,1,3; 1,2,2,1,1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredComposition {
    parts: Composition,
    colors: ColorWord,
}

impl ColoredComposition {
    pub fn new(parts: Composition, colors: ColorWord) -> Result<Self> {
        if parts.len() != colors.len() {
            return Err(Error::InvalidLabel(format!(
                "colored composition with {} parts and {} colors",
                parts.len(),
                colors.len()
            )));
        }
        Ok(ColoredComposition { parts, colors })
    }

    pub fn from_pairs(pairs: &[(usize, u32)]) -> Result<Self> {
        let parts = Composition::new(pairs.iter().map(|p| p.0).collect())?;
        let colors = ColorWord::new(pairs.iter().map(|p| p.1).collect())?;
        Self::new(parts, colors)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &Composition {
        &self.parts
    }

    pub fn colors(&self) -> &ColorWord {
        &self.colors
    }

    pub fn size(&self) -> usize {
        self.parts.size()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.parts
            .parts()
            .iter()
            .copied()
            .zip(self.colors.as_slice().iter().copied())
    }

    pub fn concat(&self, other: &ColoredComposition) -> ColoredComposition {
        ColoredComposition {
            parts: self.parts.concat(&other.parts),
            colors: self.colors.concat(&other.colors),
        }
    }

    /// Maximal runs of consecutive parts sharing a color.
    pub fn color_blocks(&self) -> Vec<ColoredComposition> {
        let mut blocks: Vec<Vec<(usize, u32)>> = Vec::new();
        for (p, c) in self.pairs() {
            match blocks.last_mut() {
                Some(b) if b.last().map(|x| x.1) == Some(c) => b.push((p, c)),
                _ => blocks.push(vec![(p, c)]),
            }
        }
        blocks
            .iter()
            .map(|b| Self::from_pairs(b).expect("parts come from a valid label"))
            .collect()
    }

    /// Cells of part `k` get color `u_k`; a part boundary becomes a column
    /// step iff `u_k <= u_{k+1}`.
    pub fn to_anticycloribbon(&self) -> ColoredRibbon {
        let mut colors = Vec::with_capacity(self.size());
        let mut steps = Vec::with_capacity(self.size().saturating_sub(1));
        let pairs: Vec<(usize, u32)> = self.pairs().collect();
        for (k, &(len, color)) in pairs.iter().enumerate() {
            if k > 0 {
                steps.push(pairs[k - 1].1 <= color);
            }
            colors.extend(std::iter::repeat(color).take(len));
            steps.extend(std::iter::repeat(false).take(len - 1));
        }
        ColoredRibbon::from_steps(&steps, colors)
    }

    /// Inverse of [`ColoredComposition::to_anticycloribbon`]: parts are cut at
    /// every color change and at every column step between equal colors.
    pub fn from_anticycloribbon(ribbon: &ColoredRibbon) -> Result<Self> {
        if !ribbon.is_anticycloribbon() {
            return Err(Error::InvalidLabel(format!(
                "{ribbon} is not an anticycloribbon"
            )));
        }
        let c = ribbon.colors().as_slice();
        if c.is_empty() {
            return Ok(Self::empty());
        }
        let steps = ribbon.shape().steps();
        let mut pairs = Vec::new();
        let mut len = 1;
        for i in 0..steps.len() {
            if c[i] != c[i + 1] || steps[i] {
                pairs.push((len, c[i]));
                len = 1;
            } else {
                len += 1;
            }
        }
        pairs.push((len, c[c.len() - 1]));
        Self::from_pairs(&pairs)
    }

    /// All colored compositions of `n` with colors in `1..=r`, sorted.
    pub fn all(n: usize, r: u32) -> Vec<ColoredComposition> {
        let mut out = Vec::new();
        for parts in Composition::all(n) {
            for colors in ColorWord::all(parts.len(), r) {
                out.push(ColoredComposition {
                    parts: parts.clone(),
                    colors,
                });
            }
        }
        out.sort();
        out
    }

    pub fn canonical_key(&self) -> (u64, &[u32]) {
        (self.parts.descent_mask(), self.colors.as_slice())
    }
}

impl fmt::Display for ColoredComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs().map(|(p, c)| format!("{p}^{c}")).collect();
        write!(f, "{}", parts.join("."))
    }
}

/// Words covered by `c` in `≤_I`: an adjacent decreasing pair in a row is
/// sorted increasingly, an adjacent increasing pair in a column is sorted
/// decreasingly.
pub fn leq_covers(shape: &Composition, colors: &ColorWord) -> Vec<ColorWord> {
    let c = colors.as_slice();
    let mut out: Vec<ColorWord> = shape
        .steps()
        .iter()
        .enumerate()
        .filter(|&(i, &down)| if down { c[i] < c[i + 1] } else { c[i] > c[i + 1] })
        .map(|(i, _)| colors.swapped(i + 1))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Every word strictly below `c` in `≤_I` (transitive closure of the covers).
pub fn leq_down_set(shape: &Composition, colors: &ColorWord) -> BTreeSet<ColorWord> {
    let mut seen = BTreeSet::new();
    let mut queue: VecDeque<ColorWord> = leq_covers(shape, colors).into();
    while let Some(w) = queue.pop_front() {
        if seen.insert(w.clone()) {
            queue.extend(leq_covers(shape, &w));
        }
    }
    seen
}

/// `lower ≤_I upper`.
pub fn leq(shape: &Composition, lower: &ColorWord, upper: &ColorWord) -> bool {
    lower == upper || leq_down_set(shape, upper).contains(lower)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn word(c: &[u32]) -> ColorWord {
        ColorWord::new(c.to_vec()).unwrap()
    }

    fn ribbon(shape: &[usize], colors: &[u32]) -> ColoredRibbon {
        ColoredRibbon::new(comp(shape), word(colors)).unwrap()
    }

    fn cc(parts: &[usize], colors: &[u32]) -> ColoredComposition {
        ColoredComposition::new(comp(parts), word(colors)).unwrap()
    }

    #[test]
    fn five_cycloribbons_of_shape_21() {
        let got = enumerate_cycloribbons(3, 2, Some(&comp(&[2, 1])));
        let want = vec![
            ribbon(&[2, 1], &[1, 1, 1]),
            ribbon(&[2, 1], &[1, 2, 1]),
            ribbon(&[2, 1], &[1, 2, 2]),
            ribbon(&[2, 1], &[2, 2, 1]),
            ribbon(&[2, 1], &[2, 2, 2]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn counts_match_closed_form() {
        assert_eq!(enumerate_cycloribbons(2, 2, None).len(), 6);
        assert_eq!(enumerate_cycloribbons(4, 3, None).len(), 192);
        assert_eq!(enumerate_anticycloribbons(4, 3, None).len(), 192);
    }

    #[test]
    fn exhaustive_filter_agrees_with_generation() {
        for n in 1..=4 {
            for r in 1..=3 {
                let mut filtered: Vec<_> = enumerate_colored_ribbons(n, r)
                    .into_iter()
                    .filter(|x| x.is_cycloribbon())
                    .collect();
                filtered.sort();
                assert_eq!(filtered, enumerate_cycloribbons(n, r, None));
            }
        }
    }

    #[test]
    fn empty_ribbon() {
        assert_eq!(enumerate_cycloribbons(0, 3, None), vec![ColoredRibbon::empty()]);
    }

    #[test]
    fn phi_on_the_large_example() {
        let r = ribbon(&[3, 1, 1, 1, 4], &[1, 1, 3, 3, 3, 2, 1, 1, 4, 5]);
        assert!(r.is_cycloribbon());
        let image = r.phi();
        assert_eq!(image, ribbon(&[2, 1, 1, 4, 1, 1], &[1, 1, 3, 3, 3, 2, 1, 1, 4, 5]));
        assert!(image.is_anticycloribbon());
        assert_eq!(image.phi(), r);
    }

    #[test]
    fn phi_small_cases() {
        assert_eq!(ribbon(&[4], &[2, 2, 2, 2]).phi(), ribbon(&[4], &[2, 2, 2, 2]));
        assert_eq!(ribbon(&[1, 1], &[2, 1]).phi(), ribbon(&[2], &[2, 1]));
    }

    #[test]
    fn colored_composition_examples() {
        assert_eq!(cc(&[2, 1], &[2, 2]).to_anticycloribbon(), ribbon(&[2, 1], &[2, 2, 2]));
        assert_eq!(cc(&[1, 1, 1], &[2, 1, 2]).to_anticycloribbon(), ribbon(&[2, 1], &[2, 1, 2]));
        assert_eq!(cc(&[3], &[4]).to_anticycloribbon(), ribbon(&[3], &[4, 4, 4]));
        assert_eq!(
            ColoredComposition::from_anticycloribbon(&ribbon(&[2, 1], &[2, 1, 2])).unwrap(),
            cc(&[1, 1, 1], &[2, 1, 2])
        );
    }

    #[test]
    fn from_anticycloribbon_rejects_cycloribbons() {
        assert!(ColoredComposition::from_anticycloribbon(&ribbon(&[2], &[1, 2])).is_err());
    }

    #[test]
    fn color_blocks_split_on_changes() {
        let blocks = cc(&[2, 1, 2, 1, 3], &[1, 2, 2, 1, 1]).color_blocks();
        assert_eq!(blocks, vec![cc(&[2], &[1]), cc(&[1, 2], &[2, 2]), cc(&[1, 3], &[1, 1])]);
    }

    #[test]
    fn covers_of_the_tableau_example() {
        // Rows "2 1 / 1 3 3 / 4 / 3": shape (2,3,1,1).
        let shape = comp(&[2, 3, 1, 1]);
        let t = word(&[2, 1, 1, 3, 3, 4, 3]);
        let covers = leq_covers(&shape, &t);
        assert_eq!(
            covers,
            vec![word(&[1, 2, 1, 3, 3, 4, 3]), word(&[2, 1, 1, 3, 4, 3, 3])]
        );
        let below: Vec<ColorWord> = leq_down_set(&shape, &t).into_iter().collect();
        let mut want = vec![
            word(&[1, 2, 1, 3, 3, 4, 3]),
            word(&[2, 1, 1, 3, 4, 3, 3]),
            word(&[1, 2, 1, 3, 4, 3, 3]),
        ];
        want.sort();
        assert_eq!(below, want);
    }

    #[test]
    fn covers_trivial_cases() {
        assert!(leq_covers(&comp(&[2]), &word(&[1, 2])).is_empty());
        assert_eq!(leq_covers(&comp(&[1, 1]), &word(&[1, 2])), vec![word(&[2, 1])]);
    }

    #[test]
    fn cycloribbons_are_minimal() {
        for r in enumerate_cycloribbons(4, 3, None) {
            assert!(leq_covers(r.shape(), r.colors()).is_empty());
        }
    }

    #[test]
    fn split_keeps_induced_shapes() {
        let r = ribbon(&[1, 3], &[2, 1, 1, 2]);
        assert_eq!(r.split_at(2), (ribbon(&[1, 1], &[2, 1]), ribbon(&[2], &[1, 2])));
        assert_eq!(r.split_at(0), (ColoredRibbon::empty(), r.clone()));
        assert_eq!(r.split_at(4), (r.clone(), ColoredRibbon::empty()));
    }
}
