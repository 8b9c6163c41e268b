//! Morphisms between the algebras: restriction `π: MR^(r) → NCSF`, the
//! commutative image `e: MR^(r) → Sym^(r)`, `d: Sym^(r) → QMR^(r)` and the
//! Cartan map `c = d ∘ e`.

use super::sym::HMonomial;
use super::{mr, ncsf, qmr, MrR, MrS, NcsfR, QmrF, SymH};
use crate::composition::Composition;
use crate::linear::LinComb;
use crate::perm::ShuffleConvention;
use crate::ribbon::{ColorWord, ColoredRibbon};

/// Splits each label into maximal one-colored blocks and multiplies the
/// corresponding ordinary ribbons.
pub fn pi_r(a: &LinComb<MrR>) -> LinComb<NcsfR> {
    a.map_linear(|l| {
        l.color_blocks().iter().fold(LinComb::one(), |acc, block| {
            ncsf::product(&acc, &LinComb::basis(block.parts().clone()))
        })
    })
}

/// `S_j^(i) ↦ S_j`, then `S^I` on ribbons.
pub fn pi_s(a: &LinComb<MrS>) -> LinComb<NcsfR> {
    a.map_linear(|l| ncsf::s_to_r(l.parts()))
}

pub fn e_s(a: &LinComb<MrS>) -> LinComb<SymH> {
    a.map_linear(|l| {
        let m = HMonomial::new(l.pairs().map(|(p, c)| (c, p)).collect()).expect("positive parts");
        LinComb::basis(m)
    })
}

pub fn e_r(a: &LinComb<MrR>) -> LinComb<SymH> {
    e_s(&mr::r_to_s(a))
}

/// `F_[(j), i^j]`.
pub fn d_of_h(color: u32, degree: usize) -> LinComb<QmrF> {
    LinComb::basis(
        ColoredRibbon::new(Composition::row(degree), ColorWord::constant(degree, color))
            .expect("row of one color"),
    )
}

/// `d` on a monomial, multiplying the factors in the given order.
pub fn d_of_factors(factors: &[(u32, usize)], convention: ShuffleConvention) -> LinComb<QmrF> {
    factors.iter().fold(LinComb::one(), |acc, &(c, j)| {
        qmr::product_f_with(&acc, &d_of_h(c, j), convention)
    })
}

pub fn d(a: &LinComb<SymH>) -> LinComb<QmrF> {
    a.map_linear(|m| d_of_factors(m.factors(), ShuffleConvention::default()))
}

pub fn cartan_map(a: &LinComb<MrR>) -> LinComb<QmrF> {
    d(&e_r(a))
}
