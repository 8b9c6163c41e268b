mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cycloribbon::composition::{descent_class_size, descent_composition, factorial};
use cycloribbon::parse::{parse_color_word, parse_composition, parse_ribbon};
use cycloribbon::ribbon::{
    enumerate_anticycloribbons, enumerate_colored_ribbons, enumerate_cycloribbons, leq_covers, leq_down_set,
};
use cycloribbon::{ColorWord, ColoredComposition, ColoredPermutation, Composition};

#[test]
fn phi_exchanges_cyclo_and_anticyclo_bijectively() {
    for n in 0..=6 {
        for r in 1..=3 {
            let cyclo = enumerate_cycloribbons(n, r, None);
            let mut images: Vec<_> = cyclo.iter().map(|x| x.phi()).collect();
            assert!(images.iter().all(|x| x.is_anticycloribbon()));
            images.sort();
            images.dedup();
            assert_eq!(images, enumerate_anticycloribbons(n, r, None));
            for a in enumerate_anticycloribbons(n, r, None) {
                assert!(a.phi().is_cycloribbon());
            }
        }
    }
}

#[test]
fn anticycloribbons_and_colored_compositions_correspond() {
    for n in 0..=6 {
        for r in 1..=3 {
            let all = ColoredComposition::all(n, r);
            assert_eq!(all.len(), enumerate_anticycloribbons(n, r, None).len());
            for cc in all {
                let a = cc.to_anticycloribbon();
                assert!(a.is_anticycloribbon());
                assert_eq!(ColoredComposition::from_anticycloribbon(&a).unwrap(), cc);
            }
        }
    }
}

#[test]
fn descent_classes_partition_the_symmetric_group() {
    for n in 0..=8 {
        let total: u64 = Composition::all(n).iter().map(descent_class_size).sum();
        assert_eq!(total, factorial(n));
    }
}

#[test]
fn descent_class_sizes_by_enumeration() {
    let perms = |n: usize| -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w: Vec<usize>| {
                    (1..=n).filter(|v| !w.contains(v)).map(|v| {
                        let mut x = w.clone();
                        x.push(v);
                        x
                    }).collect::<Vec<_>>()
                })
                .collect();
        }
        out
    };
    for n in 1..=6 {
        for shape in Composition::all(n) {
            let count = perms(n).iter().filter(|w| descent_composition(w) == shape).count() as u64;
            assert_eq!(count, descent_class_size(&shape), "{shape}");
        }
    }
}

#[test]
fn order_cover_digraph_is_acyclic() {
    for n in 1..=5 {
        for r in 1..=3 {
            for shape in Composition::all(n) {
                for c in ColorWord::all(n, r) {
                    assert!(!leq_down_set(&shape, &c).contains(&c), "{shape} {c}");
                }
            }
        }
    }
}

#[test]
fn order_example_down_set() {
    let shape = parse_composition("2,3,1,1").unwrap();
    let c = parse_color_word("2,1,1,3,3,4,3").unwrap();
    assert_eq!(leq_covers(&shape, &c).len(), 2);
    assert_eq!(leq_down_set(&shape, &c).len(), 3);
}

#[test]
fn cycloribbons_are_exactly_the_minimal_fillings() {
    for n in 1..=5 {
        for r in 1..=3 {
            for x in enumerate_colored_ribbons(n, r) {
                assert_eq!(leq_covers(x.shape(), x.colors()).is_empty(), x.is_cycloribbon(), "{x}");
            }
        }
    }
}

#[test]
fn literal_round_trip() {
    for s in ["1,3|2,1,1,2", "4|1,1,2,3", "1|5"] {
        assert_eq!(parse_ribbon(s).unwrap().to_string(), s);
    }
}

fn colored_permutation(seed: u64, n: usize, r: u32) -> ColoredPermutation {
    use rand::seq::SliceRandom;
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut word: Vec<usize> = (1..=n).collect();
    word.shuffle(&mut rng);
    let colors: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=r)).collect();
    ColoredPermutation::new(word, ColorWord::new(colors).unwrap()).unwrap()
}

proptest! {
    #[test]
    fn colored_descent_compositions_are_cycloribbons(seed in any::<u64>(), n in 0usize..=8, r in 1u32..=4) {
        let p = colored_permutation(seed, n, r);
        prop_assert!(p.colored_descent_composition().is_cycloribbon());
    }

    #[test]
    fn phi_is_an_involution_on_random_ribbons(seed in any::<u64>(), n in 0usize..=12, r in 1u32..=5) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shape = common::random_composition(&mut rng, n);
        let colors = ColorWord::new((0..n).map(|_| rng.gen_range(1..=r)).collect()).unwrap();
        let x = cycloribbon::ColoredRibbon::new(shape, colors).unwrap();
        prop_assert_eq!(x.phi().phi(), x.clone());
        prop_assert_eq!(x.is_cycloribbon(), x.phi().is_anticycloribbon());
    }

    #[test]
    fn the_longest_colored_permutation_recovers_its_cycloribbon(seed in any::<u64>(), n in 1usize..=7, r in 1u32..=3) {
        let all = enumerate_cycloribbons(n, r, None);
        let x = &all[(seed % all.len() as u64) as usize];
        prop_assert_eq!(&ColoredPermutation::from_cycloribbon(x).colored_descent_composition(), x);
    }
}
