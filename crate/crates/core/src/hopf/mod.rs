//! The graded (Hopf) algebras in play and the maps between them.
//!
//! | marker    | algebra                         | labels                  |
//! |-----------|---------------------------------|-------------------------|
//! | [`MrS`]   | Mantaci-Reutenauer, S basis     | colored compositions    |
//! | [`MrR`]   | Mantaci-Reutenauer, ribbon basis| colored compositions    |
//! | [`QmrF`]  | Poirier quasi-symmetric, F basis| cycloribbons            |
//! | [`SymH`]  | `Sym(X_1) ⊗ ... ⊗ Sym(X_r)`, h  | colored h-monomials     |
//! | [`SymS`]  | same, products of Schur         | multipartitions         |
//! | [`NcsfR`] | noncommutative Sym, ribbons     | compositions            |

pub mod maps;
pub mod mr;
pub mod ncsf;
pub mod qmr;
pub mod sym;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::linear::{Basis, BasisTag, LabelRepr};
use crate::ribbon::{ColorWord, ColoredComposition, ColoredRibbon};

pub use sym::{HMonomial, Multipartition};

fn colored_composition_repr(label: &ColoredComposition) -> LabelRepr {
    LabelRepr {
        parts: label.parts().parts().to_vec(),
        colors: label.colors().as_slice().to_vec(),
    }
}

fn colored_composition_from_repr(repr: &LabelRepr) -> Result<ColoredComposition> {
    ColoredComposition::new(
        Composition::new(repr.parts.clone())?,
        ColorWord::new(repr.colors.clone())?,
    )
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MrS;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MrR;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct QmrF;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SymH;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SymS;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NcsfR;

impl Basis for MrS {
    type Label = ColoredComposition;
    const TAG: BasisTag = BasisTag::MrS;
    fn grade(label: &ColoredComposition) -> usize {
        label.size()
    }
    fn unit() -> ColoredComposition {
        ColoredComposition::empty()
    }
    fn to_repr(label: &ColoredComposition) -> LabelRepr {
        colored_composition_repr(label)
    }
    fn from_repr(repr: &LabelRepr) -> Result<ColoredComposition> {
        colored_composition_from_repr(repr)
    }
}

impl Basis for MrR {
    type Label = ColoredComposition;
    const TAG: BasisTag = BasisTag::MrR;
    fn grade(label: &ColoredComposition) -> usize {
        label.size()
    }
    fn unit() -> ColoredComposition {
        ColoredComposition::empty()
    }
    fn to_repr(label: &ColoredComposition) -> LabelRepr {
        colored_composition_repr(label)
    }
    fn from_repr(repr: &LabelRepr) -> Result<ColoredComposition> {
        colored_composition_from_repr(repr)
    }
}

impl Basis for QmrF {
    type Label = ColoredRibbon;
    const TAG: BasisTag = BasisTag::QmrF;
    fn grade(label: &ColoredRibbon) -> usize {
        label.size()
    }
    fn unit() -> ColoredRibbon {
        ColoredRibbon::empty()
    }
    fn is_well_formed(label: &ColoredRibbon) -> bool {
        label.is_cycloribbon()
    }
    fn to_repr(label: &ColoredRibbon) -> LabelRepr {
        LabelRepr {
            parts: label.shape().parts().to_vec(),
            colors: label.colors().as_slice().to_vec(),
        }
    }
    fn from_repr(repr: &LabelRepr) -> Result<ColoredRibbon> {
        ColoredRibbon::new(
            Composition::new(repr.parts.clone())?,
            ColorWord::new(repr.colors.clone())?,
        )
    }
}

impl Basis for SymH {
    type Label = HMonomial;
    const TAG: BasisTag = BasisTag::SymH;
    fn grade(label: &HMonomial) -> usize {
        label.degree()
    }
    fn unit() -> HMonomial {
        HMonomial::one()
    }
    fn to_repr(label: &HMonomial) -> LabelRepr {
        LabelRepr {
            parts: label.factors().iter().map(|f| f.1).collect(),
            colors: label.factors().iter().map(|f| f.0).collect(),
        }
    }
    fn from_repr(repr: &LabelRepr) -> Result<HMonomial> {
        if repr.parts.len() != repr.colors.len() {
            return Err(Error::InvalidLabel("h-monomial needs one color per degree".into()));
        }
        let factors: Vec<(u32, usize)> = repr.colors.iter().copied().zip(repr.parts.iter().copied()).collect();
        let m = HMonomial::new(factors.clone())?;
        if m.factors() != factors.as_slice() {
            return Err(Error::InvalidLabel("h-monomial factors must be sorted by (color, degree)".into()));
        }
        Ok(m)
    }
}

impl Basis for SymS {
    type Label = Multipartition;
    const TAG: BasisTag = BasisTag::SymS;
    fn grade(label: &Multipartition) -> usize {
        label.size()
    }
    fn unit() -> Multipartition {
        Multipartition::empty()
    }
    fn to_repr(label: &Multipartition) -> LabelRepr {
        let (parts, colors) = label.flatten();
        LabelRepr { parts, colors }
    }
    fn from_repr(repr: &LabelRepr) -> Result<Multipartition> {
        Multipartition::from_flat(&repr.parts, &repr.colors)
    }
}

impl Basis for NcsfR {
    type Label = Composition;
    const TAG: BasisTag = BasisTag::NcsfR;
    fn grade(label: &Composition) -> usize {
        label.size()
    }
    fn unit() -> Composition {
        Composition::empty()
    }
    fn to_repr(label: &Composition) -> LabelRepr {
        LabelRepr {
            parts: label.parts().to_vec(),
            colors: Vec::new(),
        }
    }
    fn from_repr(repr: &LabelRepr) -> Result<Composition> {
        if !repr.colors.is_empty() {
            return Err(Error::InvalidLabel("NCSF ribbons carry no colors".into()));
        }
        Composition::new(repr.parts.clone())
    }
}
