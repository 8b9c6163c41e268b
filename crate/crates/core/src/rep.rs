//! Simple and projective `AKS_{n,r}(0)`-modules through their labels:
//! characters, induction and restriction, dimensions, Cartan and
//! decomposition matrices.
//!
//! Matrix rows and columns are ordered by `(descent mask of the shape, colors)`.
//! Projectives are labelled by colored compositions `(I,u)`; the simple head
//! of `P_(I,u)` is `φ` of the anticycloribbon of `(I,u)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::composition::{descent_class_size, Composition};
use crate::error::{Error, Result};
use crate::hopf::sym::{h_monomials, multipartition_class, multipartitions, Multipartition};
use crate::hopf::{maps, mr, qmr, MrR, QmrF, SymH};
use crate::linear::LinComb;
use crate::matrix::LabeledMatrix;
use crate::ribbon::{enumerate_anticycloribbons, enumerate_cycloribbons, ColorWord, ColoredComposition, ColoredRibbon};

/// Label of a simple module: a cycloribbon.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleLabel(ColoredRibbon);

impl SimpleLabel {
    pub fn new(ribbon: ColoredRibbon) -> Result<Self> {
        if !ribbon.is_cycloribbon() {
            return Err(Error::InvalidLabel(format!("{ribbon} is not a cycloribbon")));
        }
        Ok(SimpleLabel(ribbon))
    }

    pub fn ribbon(&self) -> &ColoredRibbon {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn empty() -> Self {
        SimpleLabel(ColoredRibbon::empty())
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Label of an indecomposable projective module.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectiveLabel(ColoredComposition);

impl ProjectiveLabel {
    pub fn new(cc: ColoredComposition) -> Self {
        ProjectiveLabel(cc)
    }

    pub fn from_anticycloribbon(ribbon: &ColoredRibbon) -> Result<Self> {
        Ok(ProjectiveLabel(ColoredComposition::from_anticycloribbon(ribbon)?))
    }

    pub fn composition(&self) -> &ColoredComposition {
        &self.0
    }

    pub fn anticycloribbon(&self) -> ColoredRibbon {
        self.0.to_anticycloribbon()
    }

    /// The simple quotient `φ(anticycloribbon)`.
    pub fn head(&self) -> SimpleLabel {
        SimpleLabel(self.anticycloribbon().phi())
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }
}

impl fmt::Display for ProjectiveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A one-dimensional representation: `ξ_i ↦ u_{xi[i]}` and `T_i ↦ t[i] ∈ {0, -1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Character {
    pub xi: Vec<u32>,
    pub t: Vec<i8>,
}

impl Character {
    pub fn new(xi: Vec<u32>, t: Vec<i8>) -> Result<Self> {
        if xi.contains(&0) {
            return Err(Error::InvalidColors("eigenvalue indices start at 1".into()));
        }
        if t.len() + 1 != xi.len().max(1) || t.iter().any(|&v| v != 0 && v != -1) {
            return Err(Error::InvalidLabel(format!(
                "character needs n-1 values in {{0,-1}} for T, got {t:?} with n = {}",
                xi.len()
            )));
        }
        Ok(Character { xi, t })
    }

    pub fn size(&self) -> usize {
        self.xi.len()
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xi: Vec<String> = self.xi.iter().map(|x| x.to_string()).collect();
        let t: Vec<String> = self.t.iter().map(|x| x.to_string()).collect();
        write!(f, "xi=({}) T=({})", xi.join(","), t.join(","))
    }
}

pub fn character_of_simple(s: &SimpleLabel) -> Character {
    let n = s.size();
    let image = s.ribbon().phi();
    let descents = image.shape().steps();
    Character {
        xi: s.ribbon().colors().as_slice().to_vec(),
        t: (0..n.saturating_sub(1)).map(|i| if descents[i] { -1 } else { 0 }).collect(),
    }
}

/// Inverse of [`character_of_simple`]. A color rise forces `T_i = -1` and a
/// color drop forces `T_i = 0`; other values are rejected.
pub fn simple_from_character(ch: &Character) -> Result<SimpleLabel> {
    let c = &ch.xi;
    let mut steps = Vec::with_capacity(ch.t.len());
    for (i, &t) in ch.t.iter().enumerate() {
        let forced = match c[i].cmp(&c[i + 1]) {
            std::cmp::Ordering::Less => Some(-1),
            std::cmp::Ordering::Greater => Some(0),
            std::cmp::Ordering::Equal => None,
        };
        if forced.is_some_and(|f| f != t) {
            return Err(Error::InvalidLabel(format!("{ch} is not the character of a simple module")));
        }
        steps.push(c[i] > c[i + 1] || (c[i] == c[i + 1] && t == -1));
    }
    let shape = if c.is_empty() { Composition::empty() } else { Composition::from_steps(&steps) };
    SimpleLabel::new(ColoredRibbon::new(shape, ColorWord::new(c.clone())?)?)
}

fn multiset<L: Clone>(x: &LinComb<impl crate::linear::Basis<Label = L>>) -> Vec<(L, u64)> {
    x.integer_terms()
        .expect("module multiplicities are integers")
        .into_iter()
        .map(|(l, m)| (l, u64::try_from(m).expect("module multiplicities are non-negative")))
        .collect()
}

/// Composition factors of the induction product of two simples, with multiplicities.
pub fn induce_simples(a: &SimpleLabel, b: &SimpleLabel) -> Vec<(SimpleLabel, u64)> {
    let prod = qmr::product_f(&LinComb::basis(a.0.clone()), &LinComb::basis(b.0.clone()));
    multiset::<ColoredRibbon>(&prod)
        .into_iter()
        .map(|(r, m)| (SimpleLabel(r), m))
        .collect()
}

/// Restriction to `AKS_m ⊗ AKS_{n-m}`: the unique split of the ribbon.
pub fn restrict_simple(s: &SimpleLabel, m: usize) -> Result<(SimpleLabel, SimpleLabel)> {
    if m > s.size() {
        return Err(Error::InvalidLabel(format!("cannot restrict size {} at {m}", s.size())));
    }
    let (l, r) = s.0.split_at(m);
    Ok((SimpleLabel(l), SimpleLabel(r)))
}

pub fn induce_projectives(a: &ProjectiveLabel, b: &ProjectiveLabel) -> Vec<(ProjectiveLabel, u64)> {
    let prod = mr::product_r_labels(&a.0, &b.0);
    multiset::<ColoredComposition>(&prod)
        .into_iter()
        .map(|(c, m)| (ProjectiveLabel(c), m))
        .collect()
}

/// Dimension of `P_(I,u)`: the dimension of its restriction to `H_n(0)`.
pub fn dim_projective(p: &ProjectiveLabel) -> u64 {
    let restricted = maps::pi_r(&LinComb::basis(p.0.clone()));
    multiset::<Composition>(&restricted)
        .iter()
        .map(|(i, m)| m * descent_class_size(i))
        .sum()
}

/// Induction of the projective `H_n(0)`-module `P_I`: one indecomposable
/// summand per anticycloribbon of shape `I`, with its dimension.
pub fn induce_hecke_projective(shape: &Composition, r: u32) -> Vec<(ProjectiveLabel, u64)> {
    let mut out: Vec<(ProjectiveLabel, u64)> = enumerate_anticycloribbons(shape.size(), r, Some(shape))
        .iter()
        .map(|a| {
            let p = ProjectiveLabel::from_anticycloribbon(a).expect("enumerated anticycloribbon");
            let d = dim_projective(&p);
            (p, d)
        })
        .collect();
    out.sort_by(|x, y| x.0 .0.canonical_key().cmp(&y.0 .0.canonical_key()));
    out
}

pub fn simple_labels(n: usize, r: u32) -> Vec<SimpleLabel> {
    let mut v: Vec<SimpleLabel> = enumerate_cycloribbons(n, r, None).into_iter().map(SimpleLabel).collect();
    v.sort_by(|a, b| a.0.canonical_key().cmp(&b.0.canonical_key()));
    v
}

pub fn projective_labels(n: usize, r: u32) -> Vec<ProjectiveLabel> {
    let mut v: Vec<ProjectiveLabel> = ColoredComposition::all(n, r).into_iter().map(ProjectiveLabel).collect();
    v.sort_by(|a, b| a.0.canonical_key().cmp(&b.0.canonical_key()));
    v
}

fn integer_row<B: crate::linear::Basis>(x: &LinComb<B>, cols: &[B::Label]) -> Result<Vec<i64>> {
    let index: std::collections::BTreeMap<&B::Label, usize> = cols.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let mut row = vec![0; cols.len()];
    for (l, v) in x.integer_terms()? {
        let j = *index
            .get(&l)
            .ok_or_else(|| Error::InvalidLabel(format!("{l} lies outside the matrix columns")))?;
        row[j] = v;
    }
    Ok(row)
}

fn ribbon_columns(n: usize, r: u32) -> (Vec<String>, Vec<ColoredRibbon>) {
    let simples = simple_labels(n, r);
    (
        simples.iter().map(|s| s.to_string()).collect(),
        simples.into_iter().map(|s| s.0).collect(),
    )
}

/// `C[p][s]` = multiplicity of the simple `s` in the projective `p`.
pub fn cartan_matrix(n: usize, r: u32) -> Result<LabeledMatrix> {
    let rows = projective_labels(n, r);
    let (col_names, cols) = ribbon_columns(n, r);
    let entries = rows
        .iter()
        .map(|p| integer_row(&maps::cartan_map(&LinComb::basis(p.0.clone())), &cols))
        .collect::<Result<Vec<_>>>()?;
    Ok(LabeledMatrix::new(rows.iter().map(|p| p.to_string()).collect(), col_names, entries))
}

/// Matrix of `e` from the ribbon basis of `MR^(r)_n` to complete monomials.
pub fn e_matrix(n: usize, r: u32) -> Result<LabeledMatrix> {
    let rows = projective_labels(n, r);
    let monomials = h_monomials(n, r);
    let entries = rows
        .iter()
        .map(|p| integer_row::<SymH>(&maps::e_r(&LinComb::<MrR>::basis(p.0.clone())), &monomials))
        .collect::<Result<Vec<_>>>()?;
    Ok(LabeledMatrix::new(
        rows.iter().map(|p| p.to_string()).collect(),
        monomials.iter().map(|m| m.to_string()).collect(),
        entries,
    ))
}

/// Matrix of `d` from complete monomials to the `F` basis.
pub fn d_matrix(n: usize, r: u32) -> Result<LabeledMatrix> {
    let monomials = h_monomials(n, r);
    let (col_names, cols) = ribbon_columns(n, r);
    let entries = monomials
        .iter()
        .map(|m| integer_row::<QmrF>(&maps::d(&LinComb::basis(m.clone())), &cols))
        .collect::<Result<Vec<_>>>()?;
    Ok(LabeledMatrix::new(
        monomials.iter().map(|m| m.to_string()).collect(),
        col_names,
        entries,
    ))
}

/// Rows: multipartitions `λ`; entry = coefficient of `F_s` in `d(s_λ)`.
pub fn decomposition_matrix(n: usize, r: u32) -> Result<LabeledMatrix> {
    let rows: Vec<Multipartition> = multipartitions(n, r);
    let (col_names, cols) = ribbon_columns(n, r);
    let entries = rows
        .iter()
        .map(|l| integer_row::<QmrF>(&maps::d(&multipartition_class(l)), &cols))
        .collect::<Result<Vec<_>>>()?;
    Ok(LabeledMatrix::new(
        rows.iter().map(|l| l.display_with(r)).collect(),
        col_names,
        entries,
    ))
}
