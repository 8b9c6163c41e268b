//! Noncommutative symmetric functions on the ribbon basis, i.e. `MR^(1)`.

use super::{mr, MrR, NcsfR};
use crate::composition::Composition;
use crate::linear::LinComb;
use crate::ribbon::{ColorWord, ColoredComposition};

fn monochrome(c: &Composition) -> ColoredComposition {
    ColoredComposition::new(c.clone(), ColorWord::constant(c.len(), 1)).expect("one color per part")
}

fn forget(x: LinComb<MrR>) -> LinComb<NcsfR> {
    x.map_linear(|l| LinComb::basis(l.parts().clone()))
}

/// `R_I R_J = R_{I·J} + R_{I▷J}` (for non-empty `I`, `J`).
pub fn product_labels(x: &Composition, y: &Composition) -> LinComb<NcsfR> {
    forget(mr::product_r_labels(&monochrome(x), &monochrome(y)))
}

pub fn product(a: &LinComb<NcsfR>, b: &LinComb<NcsfR>) -> LinComb<NcsfR> {
    a.bilinear(b, product_labels)
}

/// `S^I = Σ_{D(J) ⊆ D(I)} R_J`.
pub fn s_to_r(i: &Composition) -> LinComb<NcsfR> {
    LinComb::from_labels(i.coarsenings())
}
