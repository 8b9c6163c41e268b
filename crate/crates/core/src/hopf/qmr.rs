//! Poirier's quasi-symmetric functions `QMR^(r)` on the basis `F_[I,c]`
//! indexed by cycloribbons, dual to `MR^(r)` on the ribbon basis.

use num::{One, Zero};

use super::{MrR, QmrF};
use crate::linear::{LinComb, Tensor, Q};
use crate::perm::{shifted_shuffle, ColoredPermutation, ShuffleConvention};
use crate::ribbon::{ColoredComposition, ColoredRibbon};

/// `F_x F_y`: shifted-shuffle the longest colored permutations of both
/// labels and collect the colored descent compositions.
pub fn product_f_labels(x: &ColoredRibbon, y: &ColoredRibbon, convention: ShuffleConvention) -> LinComb<QmrF> {
    let a = ColoredPermutation::for_shuffle(x, convention);
    let b = ColoredPermutation::for_shuffle(y, convention);
    LinComb::from_labels(
        shifted_shuffle(&a, &b)
            .iter()
            .map(|w| w.colored_descent_composition()),
    )
}

pub fn product_f_with(a: &LinComb<QmrF>, b: &LinComb<QmrF>, convention: ShuffleConvention) -> LinComb<QmrF> {
    a.bilinear(b, |x, y| product_f_labels(x, y, convention))
}

pub fn product_f(a: &LinComb<QmrF>, b: &LinComb<QmrF>) -> LinComb<QmrF> {
    product_f_with(a, b, ShuffleConvention::default())
}

/// Deconcatenation of the cells: `Δ F_R = Σ_k F_{R[..k]} ⊗ F_{R[k..]}`.
pub fn coproduct_f_label(x: &ColoredRibbon) -> Tensor<QmrF, QmrF> {
    let mut out = Tensor::zero();
    for k in 0..=x.size() {
        let (l, r) = x.split_at(k);
        out.add_term(l, r, Q::one());
    }
    out
}

pub fn coproduct_f(a: &LinComb<QmrF>) -> Tensor<QmrF, QmrF> {
    let mut out = Tensor::zero();
    for (l, c) in a.iter() {
        out.add_scaled(&coproduct_f_label(l), c);
    }
    out
}

/// The cycloribbon dual to `R_(I,u)`: `φ` of its anticycloribbon.
pub fn dual_label(cc: &ColoredComposition) -> ColoredRibbon {
    cc.to_anticycloribbon().phi()
}

/// Inverse of [`dual_label`].
pub fn dual_composition(ribbon: &ColoredRibbon) -> ColoredComposition {
    ColoredComposition::from_anticycloribbon(&ribbon.phi())
        .expect("φ of a cycloribbon is an anticycloribbon")
}

pub fn pairing(a: &LinComb<MrR>, f: &LinComb<QmrF>) -> Q {
    let mut total = Q::zero();
    for (l, c) in a.iter() {
        let d = f.coeff(&dual_label(l));
        if !d.is_zero() {
            total += c * d;
        }
    }
    total
}

/// `⟨a ⊗ b, f ⊗ g⟩ = ⟨a, f⟩⟨b, g⟩`, extended bilinearly.
pub fn tensor_pairing(a: &Tensor<MrR, MrR>, f: &Tensor<QmrF, QmrF>) -> Q {
    let mut total = Q::zero();
    for (l, r, c) in a.iter() {
        let d = f.coeff(&dual_label(l), &dual_label(r));
        if !d.is_zero() {
            total += c * d;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_colored_composition, parse_ribbon};
    use crate::ribbon::enumerate_cycloribbons;

    fn f(s: &str) -> LinComb<QmrF> {
        LinComb::basis(parse_ribbon(s).unwrap())
    }

    fn sum(labels: &[&str]) -> LinComb<QmrF> {
        LinComb::from_labels(labels.iter().map(|s| parse_ribbon(s).unwrap()))
    }

    #[test]
    fn two_letter_products() {
        assert_eq!(product_f(&f("1|1"), &f("1|2")), sum(&["2|1,2", "1,1|2,1"]));
        assert_eq!(product_f(&f("1|1"), &f("1|1")), sum(&["2|1,1", "1,1|1,1"]));
        assert_eq!(product_f(&f("1|2"), &LinComb::one()), f("1|2"));
    }

    #[test]
    fn six_factor_product() {
        let got = product_f(&f("1,1|2,1"), &f("2|1,2"));
        let want = sum(&[
            "1,3|2,1,1,2",
            "1,1,2|2,1,1,2",
            "2,2|1,2,1,2",
            "1,2,1|2,1,2,1",
            "3,1|1,2,2,1",
            "2,1,1|1,2,2,1",
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn one_color_product_is_the_quasi_symmetric_one() {
        // 1 ⧢ 423 has descent compositions (2,2), (1,3), (1,1,2), (1,2,1)
        let got = product_f(&f("1|1"), &f("1,2|1,1,1"));
        let want = sum(&["2,2|1,1,1,1", "1,3|1,1,1,1", "1,1,2|1,1,1,1", "1,2,1|1,1,1,1"]);
        assert_eq!(got, want);
        let inverted = product_f_with(
            &f("1|1"),
            &f("1,2|1,1,1"),
            ShuffleConvention::Inverse(crate::perm::InverseColors::Positional),
        );
        assert_ne!(inverted, want);
    }

    #[test]
    fn deconcatenation() {
        let d = coproduct_f(&f("1,1|2,1"));
        let mut want = Tensor::zero();
        let x = parse_ribbon("1,1|2,1").unwrap();
        want.add_term(ColoredRibbon::empty(), x.clone(), Q::one());
        want.add_term(parse_ribbon("1|2").unwrap(), parse_ribbon("1|1").unwrap(), Q::one());
        want.add_term(x, ColoredRibbon::empty(), Q::one());
        assert_eq!(d, want);
    }

    #[test]
    fn pairing_is_a_permutation_matrix_in_grade_two() {
        let rs = ColoredComposition::all(2, 2);
        let fs = enumerate_cycloribbons(2, 2, None);
        assert_eq!(rs.len(), fs.len());
        for x in &rs {
            let row: Vec<Q> = fs
                .iter()
                .map(|y| pairing(&LinComb::basis(x.clone()), &LinComb::basis(y.clone())))
                .collect();
            assert_eq!(row.iter().filter(|v| v.is_one()).count(), 1);
            assert_eq!(row.iter().filter(|v| v.is_zero()).count(), fs.len() - 1);
        }
        let mixed = parse_colored_composition("1^1.1^2").unwrap();
        assert_eq!(dual_label(&mixed), parse_ribbon("2|1,2").unwrap());
        assert_eq!(dual_composition(&dual_label(&mixed)), mixed);
    }
}
