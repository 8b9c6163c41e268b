mod common;

use num::One;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cycloribbon::hopf::maps::{cartan_map, d, e_r, pi_r};
use cycloribbon::hopf::mr::{anti_refinements, coproduct_r, coproduct_s, product_r, product_s, r_to_s, s_to_r};
use cycloribbon::hopf::qmr::{coproduct_f, product_f};
use cycloribbon::hopf::sym::{h_monomials, product as product_h};
use cycloribbon::hopf::{ncsf, MrR, MrS, SymH};
use cycloribbon::linear::q;
use cycloribbon::ribbon::enumerate_cycloribbons;
use cycloribbon::{ColoredComposition, LinComb, Tensor, Q};

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

#[test]
fn basis_changes_are_inverse_and_unitriangular() {
    for n in 0..=4 {
        for r in 1..=3 {
            for cc in ColoredComposition::all(n, r) {
                let s = LinComb::<MrS>::basis(cc.clone());
                let rr = LinComb::<MrR>::basis(cc.clone());
                assert_eq!(r_to_s(&s_to_r(&s)), s);
                assert_eq!(s_to_r(&r_to_s(&rr)), rr);
                let expansion = s_to_r(&s);
                assert_eq!(expansion.coeff(&cc), Q::one());
                let coarser = anti_refinements(&cc);
                assert!(expansion.labels().all(|l| coarser.contains(l)));
                assert!(expansion.iter().all(|(_, c)| *c == Q::one()));
            }
        }
    }
}

#[test]
fn f_products_have_binomial_size() {
    for (m, k, r) in [(1, 1, 3), (2, 2, 2), (1, 3, 2), (3, 2, 2), (2, 3, 1), (2, 1, 3)] {
        for x in enumerate_cycloribbons(m, r, None) {
            for y in enumerate_cycloribbons(k, r, None) {
                let p = product_f(&LinComb::basis(x.clone()), &LinComb::basis(y.clone()));
                assert!(p.is_nonnegative() && p.is_integral());
                assert_eq!(p.coefficient_sum(), q(binomial((m + k) as u64, m as u64) as i64));
                assert_eq!(p.homogeneous_grade(), Some(m + k));
            }
        }
    }
}

#[test]
fn grades_split_under_coproducts() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 0..=5 {
        let x = common::random_r(&mut rng, n, 3);
        for (a, b, _) in coproduct_r(&x).iter() {
            assert_eq!(a.size() + b.size(), n);
        }
        let f = common::random_f(&mut rng, n, 3);
        for (a, b, _) in coproduct_f(&f).iter() {
            assert_eq!(a.size() + b.size(), n);
        }
    }
}

#[test]
fn s_coproduct_is_multiplicative_on_labels() {
    for r in 1..=2 {
        for m in 0..=3 {
            for k in 0..=(4 - m) {
                for x in ColoredComposition::all(m, r) {
                    for y in ColoredComposition::all(k, r) {
                        let (a, b) = (LinComb::<MrS>::basis(x.clone()), LinComb::<MrS>::basis(y.clone()));
                        let lhs = coproduct_s(&product_s(&a, &b));
                        let rhs = coproduct_s(&a).multiply(
                            &coproduct_s(&b),
                            |u, v| product_s(&LinComb::basis(u.clone()), &LinComb::basis(v.clone())),
                            |u, v| product_s(&LinComb::basis(u.clone()), &LinComb::basis(v.clone())),
                        );
                        assert_eq!(lhs, rhs, "{x} {y}");
                    }
                }
            }
        }
    }
}

#[test]
fn units() {
    let x = LinComb::<MrR>::basis(cycloribbon::parse::parse_colored_composition("2^1.1^2").unwrap());
    assert_eq!(product_r(&x, &LinComb::one()), x);
    assert_eq!(product_r(&LinComb::one(), &x), x);
    let mut want = Tensor::<MrR, MrR>::zero();
    want.add_term(ColoredComposition::empty(), ColoredComposition::empty(), Q::one());
    assert_eq!(coproduct_r(&LinComb::one()), want);
}

fn h_element<R: rand::Rng>(rng: &mut R, n: usize, r: u32) -> LinComb<SymH> {
    let all = h_monomials(n, r);
    LinComb::basis(all[rng.gen_range(0..all.len())].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn r_product_is_associative(seed in any::<u64>(), a in 0usize..=3, b in 0usize..=3, c in 0usize..=3, r in 1u32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y, z) = (common::random_r(&mut rng, a, r), common::random_r(&mut rng, b, r), common::random_r(&mut rng, c, r));
        prop_assert_eq!(product_r(&product_r(&x, &y), &z), product_r(&x, &product_r(&y, &z)));
    }

    #[test]
    fn grade_is_additive(seed in any::<u64>(), a in 0usize..=3, b in 0usize..=3, r in 1u32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (common::random_r(&mut rng, a, r), common::random_r(&mut rng, b, r));
        let p = product_r(&x, &y);
        prop_assert!(p.is_zero() || p.homogeneous_grade() == Some(a + b));
        let (f, g) = (common::random_f(&mut rng, a, r), common::random_f(&mut rng, b, r));
        let pf = product_f(&f, &g);
        prop_assert!(pf.is_zero() || pf.homogeneous_grade() == Some(a + b));
    }

    #[test]
    fn pi_is_multiplicative(seed in any::<u64>(), a in 0usize..=3, b in 0usize..=3, r in 1u32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (common::random_r(&mut rng, a, r), common::random_r(&mut rng, b, r));
        prop_assert_eq!(pi_r(&product_r(&x, &y)), ncsf::product(&pi_r(&x), &pi_r(&y)));
    }

    #[test]
    fn e_is_multiplicative(seed in any::<u64>(), a in 0usize..=3, b in 0usize..=3, r in 1u32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (common::random_r(&mut rng, a, r), common::random_r(&mut rng, b, r));
        prop_assert_eq!(e_r(&product_r(&x, &y)), product_h(&e_r(&x), &e_r(&y)));
    }

    #[test]
    fn d_is_multiplicative(seed in any::<u64>(), a in 0usize..=3, b in 0usize..=3, r in 1u32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (h_element(&mut rng, a, r), h_element(&mut rng, b, r));
        prop_assert_eq!(d(&product_h(&x, &y)), product_f(&d(&x), &d(&y)));
    }

    #[test]
    fn cartan_map_is_multiplicative(seed in any::<u64>(), a in 0usize..=3, b in 0usize..=3, r in 1u32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (common::random_r(&mut rng, a, r), common::random_r(&mut rng, b, r));
        prop_assert_eq!(cartan_map(&product_r(&x, &y)), product_f(&cartan_map(&x), &cartan_map(&y)));
    }
}

#[test]
fn hopf_suites_small() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for s in common::hopf_suites(&mut rng, 60, 4, 3) {
        assert!(s.passed(), "{}: {}", s.name, s.failures[0]);
    }
}
