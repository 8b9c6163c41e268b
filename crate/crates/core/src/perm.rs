//! Colored permutations and the shifted shuffle that computes induction
//! products of simple modules.

use std::fmt;

use crate::composition::{max_inversion_perm, Composition};
use crate::error::{Error, Result};
use crate::ribbon::{ColorWord, ColoredRibbon};

/// A permutation word of `{1, ..., n}` with one color per position.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredPermutation {
    word: Vec<usize>,
    colors: ColorWord,
}

/// How colors travel when a colored permutation is inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InverseColors {
    /// Position `k` of `σ⁻¹` keeps the color `u_k`, i.e. letter `j` of the
    /// inverse carries `u_{σ(j)}`.
    Positional,
    /// Letter `j` of the inverse carries the color of value `j` in `σ`, `u_{σ⁻¹(j)}`.
    ValueTransport,
    /// As `ValueTransport`, followed by the color reflection `c ↦ r + 1 - c`.
    ValueTransportReflected { r: u32 },
}

/// Which colored permutation stands for a cycloribbon `[I, c]` in the
/// shifted shuffle computing `F_[I,c] F_[J,c']`.
///
/// The explicit-algebra oracle selects [`ShuffleConvention::Direct`]; the
/// others are kept so that the cross-check can show they disagree with the
/// induced modules.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ShuffleConvention {
    /// `(σ, c)` with `σ` the longest permutation of descent class `I`.
    #[default]
    Direct,
    /// The inverse of `(σ, c)`, colors moved as given.
    Inverse(InverseColors),
}

impl ColoredPermutation {
    pub fn new(word: Vec<usize>, colors: ColorWord) -> Result<Self> {
        if word.len() != colors.len() {
            return Err(Error::InvalidPermutation(format!(
                "{} letters but {} colors",
                word.len(),
                colors.len()
            )));
        }
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{word:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(ColoredPermutation { word, colors })
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn colors(&self) -> &ColorWord {
        &self.colors
    }

    pub fn size(&self) -> usize {
        self.word.len()
    }

    /// Color carried by each value: entry `j - 1` is the color of letter `j`.
    pub fn value_colors(&self) -> Vec<u32> {
        let mut out = vec![0; self.size()];
        for (pos, &v) in self.word.iter().enumerate() {
            out[v - 1] = self.colors[pos];
        }
        out
    }

    /// The colored permutation attached to a cycloribbon `[I, c]`: the
    /// longest permutation of descent class `I`, colored by `c`.
    pub fn from_cycloribbon(ribbon: &ColoredRibbon) -> Self {
        ColoredPermutation {
            word: max_inversion_perm(ribbon.shape()),
            colors: ribbon.colors().clone(),
        }
    }

    /// [`ColoredPermutation::from_cycloribbon`] under a shuffle convention.
    pub fn for_shuffle(ribbon: &ColoredRibbon, convention: ShuffleConvention) -> Self {
        let p = Self::from_cycloribbon(ribbon);
        match convention {
            ShuffleConvention::Direct => p,
            ShuffleConvention::Inverse(colors) => p.inverse(colors),
        }
    }

    pub fn inverse(&self, convention: InverseColors) -> ColoredPermutation {
        let n = self.size();
        let mut inv = vec![0; n];
        for (pos, &v) in self.word.iter().enumerate() {
            inv[v - 1] = pos + 1;
        }
        let u = self.colors.as_slice();
        let colors: Vec<u32> = match convention {
            InverseColors::Positional => u.to_vec(),
            // letter j sits at position inv[j-1] of σ
            InverseColors::ValueTransport => inv.iter().map(|&j| u[inv[j - 1] - 1]).collect(),
            InverseColors::ValueTransportReflected { r } => inv
                .iter()
                .map(|&j| r + 1 - u[inv[j - 1] - 1])
                .collect(),
        };
        ColoredPermutation {
            word: inv,
            colors: ColorWord::new(colors).expect("colors stay positive"),
        }
    }

    /// Position `i` is a descent iff the color drops, or the colors agree
    /// and the letter drops. The result is always a cycloribbon.
    pub fn colored_descent_composition(&self) -> ColoredRibbon {
        let u = self.colors.as_slice();
        let steps: Vec<bool> = (0..self.size().saturating_sub(1))
            .map(|i| u[i] > u[i + 1] || (u[i] == u[i + 1] && self.word[i] > self.word[i + 1]))
            .collect();
        let shape = if self.word.is_empty() {
            Composition::empty()
        } else {
            Composition::from_steps(&steps)
        };
        ColoredRibbon::new(shape, self.colors.clone()).expect("sizes agree")
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self
            .word
            .iter()
            .zip(self.colors.as_slice())
            .map(|(v, c)| format!("{v}^{c}"))
            .collect();
        write!(f, "{}", letters.join(" "))
    }
}

/// All interleavings of `a` with `b` shifted by `|a|`, each letter keeping
/// its color. Order: interleavings taking from `a` first come first.
pub fn shifted_shuffle(a: &ColoredPermutation, b: &ColoredPermutation) -> Vec<ColoredPermutation> {
    let m = a.size();
    let left: Vec<(usize, u32)> = a.word.iter().copied().zip(a.colors.as_slice().iter().copied()).collect();
    let right: Vec<(usize, u32)> = b
        .word
        .iter()
        .map(|&v| v + m)
        .zip(b.colors.as_slice().iter().copied())
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(left.len() + right.len());
    shuffle_into(&left, &right, &mut current, &mut out);
    out.into_iter()
        .map(|letters: Vec<(usize, u32)>| {
            let (word, colors): (Vec<usize>, Vec<u32>) = letters.into_iter().unzip();
            ColoredPermutation {
                word,
                colors: ColorWord::new(colors).expect("colors stay positive"),
            }
        })
        .collect()
}

fn shuffle_into(
    left: &[(usize, u32)],
    right: &[(usize, u32)],
    current: &mut Vec<(usize, u32)>,
    out: &mut Vec<Vec<(usize, u32)>>,
) {
    if left.is_empty() || right.is_empty() {
        let mut w = current.clone();
        w.extend_from_slice(left);
        w.extend_from_slice(right);
        out.push(w);
        return;
    }
    current.push(left[0]);
    shuffle_into(&left[1..], right, current, out);
    current.pop();
    current.push(right[0]);
    shuffle_into(left, &right[1..], current, out);
    current.pop();
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(word: &[usize], colors: &[u32]) -> ColoredPermutation {
        ColoredPermutation::new(word.to_vec(), ColorWord::new(colors.to_vec()).unwrap()).unwrap()
    }

    fn ribbon(shape: &[usize], colors: &[u32]) -> ColoredRibbon {
        ColoredRibbon::new(
            Composition::new(shape.to_vec()).unwrap(),
            ColorWord::new(colors.to_vec()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(ColoredPermutation::new(vec![1, 1], ColorWord::new(vec![1, 1]).unwrap()).is_err());
        assert!(ColoredPermutation::new(vec![1, 3], ColorWord::new(vec![1, 1]).unwrap()).is_err());
        assert!(ColoredPermutation::new(vec![1], ColorWord::new(vec![1, 1]).unwrap()).is_err());
    }

    #[test]
    fn colored_descents_of_shuffle_words() {
        assert_eq!(
            cp(&[2, 1, 3, 4], &[2, 1, 1, 2]).colored_descent_composition(),
            ribbon(&[1, 3], &[2, 1, 1, 2])
        );
        assert_eq!(
            cp(&[3, 2, 1, 4], &[1, 2, 1, 2]).colored_descent_composition(),
            ribbon(&[2, 2], &[1, 2, 1, 2])
        );
        assert_eq!(
            cp(&[1, 2, 3], &[3, 3, 3]).colored_descent_composition(),
            ribbon(&[3], &[3, 3, 3])
        );
    }

    #[test]
    fn inverse_examples() {
        // value 1 carries color 1 and value 2 carries color 2 in both cases
        let inv = cp(&[2, 1], &[2, 1]).inverse(InverseColors::Positional);
        assert_eq!(inv.word(), &[2, 1]);
        assert_eq!(inv.value_colors(), vec![1, 2]);
        let inv = cp(&[1, 2], &[1, 2]).inverse(InverseColors::Positional);
        assert_eq!(inv.value_colors(), vec![1, 2]);
        let id = cp(&[1, 2, 3], &[2, 2, 2]);
        assert_eq!(id.inverse(InverseColors::Positional), id);
        assert_eq!(id.inverse(InverseColors::ValueTransport), id);
    }

    #[test]
    fn conventions_differ_only_off_involutions() {
        let p = cp(&[3, 1, 2], &[2, 1, 2]);
        let a = p.inverse(InverseColors::Positional);
        let b = p.inverse(InverseColors::ValueTransport);
        assert_eq!(a.word(), &[2, 3, 1]);
        assert_eq!(a.colors().as_slice(), &[2, 1, 2]);
        assert_eq!(b.colors().as_slice(), &[2, 2, 1]);
        let q = cp(&[2, 1], &[2, 1]);
        assert_eq!(q.inverse(InverseColors::Positional), q.inverse(InverseColors::ValueTransport));
    }

    #[test]
    fn shuffle_of_the_two_factor_example() {
        let a = cp(&[2, 1], &[2, 1]).inverse(InverseColors::Positional);
        let b = cp(&[1, 2], &[1, 2]).inverse(InverseColors::Positional);
        let words: Vec<Vec<usize>> = shifted_shuffle(&a, &b).iter().map(|p| p.word().to_vec()).collect();
        assert_eq!(
            words,
            vec![
                vec![2, 1, 3, 4],
                vec![2, 3, 1, 4],
                vec![2, 3, 4, 1],
                vec![3, 2, 1, 4],
                vec![3, 2, 4, 1],
                vec![3, 4, 2, 1],
            ]
        );
        for p in shifted_shuffle(&a, &b) {
            assert_eq!(p.value_colors(), vec![1, 2, 1, 2]);
        }
    }

    #[test]
    fn shuffle_edge_cases() {
        let a = cp(&[1], &[1]);
        let empty = cp(&[], &[]);
        assert_eq!(shifted_shuffle(&a, &empty), vec![a.clone()]);
        assert_eq!(shifted_shuffle(&empty, &a), vec![a.clone()]);
        assert_eq!(shifted_shuffle(&a, &a).len(), 2);
    }

    #[test]
    fn cycloribbon_roundtrip_through_its_permutation() {
        for r in crate::ribbon::enumerate_cycloribbons(5, 3, None) {
            assert_eq!(ColoredPermutation::from_cycloribbon(&r).colored_descent_composition(), r);
        }
    }
}
