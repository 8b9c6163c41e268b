//! Acceptance criteria 1-15. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cycloribbon::composition::factorial;
use cycloribbon::hopf::maps::pi_r;
use cycloribbon::hopf::mr::{r_to_s, s_to_r};
use cycloribbon::hopf::{MrR, MrS, NcsfR};
use cycloribbon::oracle::algebra::AlgebraParams;
use cycloribbon::oracle::checks::{
    all_pass, character_census, induction_cross_check, m_i_suite, relation_sweep, CheckReport,
};
use cycloribbon::parse::{parse_colored_composition, parse_composition, parse_ribbon};
use cycloribbon::rep::{
    cartan_matrix, decomposition_matrix, dim_projective, d_matrix, e_matrix, induce_hecke_projective,
    induce_simples, projective_labels, SimpleLabel,
};
use cycloribbon::ribbon::{enumerate_colored_ribbons, enumerate_cycloribbons};
use cycloribbon::{Composition, LinComb};

const MAX_DIM: u64 = 2000;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn first_failure(reports: &[CheckReport]) -> Outcome {
    match reports.iter().find(|r| !r.pass) {
        None => Ok(()),
        Some(r) => Err(serde_json::to_string(r).unwrap()),
    }
}

fn ribbon(s: &str) -> cycloribbon::ColoredRibbon {
    parse_ribbon(s).unwrap()
}

fn c1_cycloribbon_count() -> Outcome {
    for n in 1..=8usize {
        for r in 1..=4u32 {
            let got = enumerate_cycloribbons(n, r, None).len() as u64;
            let want = r as u64 * (r as u64 + 1).pow(n as u32 - 1);
            ensure(got == want, || format!("n={n} r={r}: {got} != {want}"))?;
        }
    }
    Ok(())
}

fn c2_shape_21() -> Outcome {
    let got = enumerate_cycloribbons(3, 2, Some(&parse_composition("2,1").unwrap()));
    let want: Vec<_> = ["2,1|1,1,1", "2,1|1,2,1", "2,1|1,2,2", "2,1|2,2,1", "2,1|2,2,2"]
        .iter()
        .map(|s| ribbon(s))
        .collect();
    ensure(got == want, || format!("{got:?}"))
}

fn c3_phi() -> Outcome {
    let cyclo = ribbon("3,1,1,1,4|1,1,3,3,3,2,1,1,4,5");
    let anti = ribbon("2,1,1,4,1,1|1,1,3,3,3,2,1,1,4,5");
    ensure(cyclo.is_cycloribbon() && anti.is_anticycloribbon(), || "example pair misclassified".into())?;
    ensure(cyclo.phi() == anti && anti.phi() == cyclo, || format!("phi gives {}", cyclo.phi()))?;
    for n in 0..=6 {
        for r in 1..=3 {
            for x in enumerate_colored_ribbons(n, r) {
                ensure(x.phi().phi() == x, || format!("phi is not an involution on {x}"))?;
            }
        }
    }
    Ok(())
}

fn c4_worked_induction_product() -> Outcome {
    let a = SimpleLabel::new(ribbon("1,1|2,1")).unwrap();
    let b = SimpleLabel::new(ribbon("2|1,2")).unwrap();
    let mut got: Vec<(String, u64)> = induce_simples(&a, &b).into_iter().map(|(s, m)| (s.to_string(), m)).collect();
    got.sort();
    let mut want: Vec<(String, u64)> = [
        "1,3|2,1,1,2",
        "1,1,2|2,1,1,2",
        "2,2|1,2,1,2",
        "1,2,1|2,1,2,1",
        "3,1|1,2,2,1",
        "2,1,1|1,2,2,1",
    ]
    .iter()
    .map(|s| (s.to_string(), 1))
    .collect();
    want.sort();
    ensure(got == want, || format!("{got:?}"))
}

fn c5_s_to_r() -> Outcome {
    let s = LinComb::<MrS>::basis(parse_colored_composition("2^1.1^2.2^2.1^1.3^1").unwrap());
    let want = LinComb::<MrR>::from_labels(
        ["2^1.1^2.2^2.1^1.3^1", "2^1.3^2.1^1.3^1", "2^1.1^2.2^2.4^1", "2^1.3^2.4^1"]
            .iter()
            .map(|x| parse_colored_composition(x).unwrap()),
    );
    let got = s_to_r(&s);
    ensure(got == want, || format!("{got}"))?;
    ensure(r_to_s(&got) == s, || "R to S does not invert".into())
}

fn c6_pi() -> Outcome {
    let x = LinComb::<MrR>::basis(parse_colored_composition("2^1.1^2.2^2.1^1.3^1").unwrap());
    let want = LinComb::<NcsfR>::from_labels(
        ["2,1,2,1,3", "2,1,3,3", "3,2,1,3", "3,3,3"].iter().map(|x| parse_composition(x).unwrap()),
    );
    let got = pi_r(&x);
    ensure(got == want, || format!("{got}"))
}

fn c7_hecke_projective() -> Outcome {
    let got = induce_hecke_projective(&parse_composition("2,1").unwrap(), 2);
    let mut dims: Vec<u64> = got.iter().map(|(_, d)| *d).collect();
    dims.sort();
    ensure(got.len() == 5 && dims == vec![2, 2, 3, 3, 6] && dims.iter().sum::<u64>() == 16, || {
        format!("{got:?}")
    })
}

fn c8_dimension_identity() -> Outcome {
    for n in 1..=5 {
        for r in 1..=3u32 {
            let total: u64 = projective_labels(n, r).iter().map(dim_projective).sum();
            let want = (r as u64).pow(n as u32) * factorial(n);
            ensure(total == want, || format!("n={n} r={r}: {total} != {want}"))?;
        }
    }
    Ok(())
}

fn c9_relations() -> Outcome {
    let reports = relation_sweep(MAX_DIM).map_err(|e| e.to_string())?;
    first_failure(&reports)?;
    let instances = reports.iter().filter(|r| r.check == "dimension").count();
    ensure(instances > 0, || "no instances".into())
}

fn c10_census() -> Outcome {
    let mut reports = Vec::new();
    for n in 1..=4 {
        reports.push(character_census(&AlgebraParams::standard(n, 2)));
    }
    for n in 1..=3 {
        reports.push(character_census(&AlgebraParams::standard(n, 3)));
    }
    first_failure(&reports)
}

fn c11_arbitration() -> Outcome {
    for (grade, r) in [(4, 2), (3, 3)] {
        let cc = induction_cross_check(grade, r, MAX_DIM).map_err(|e| e.to_string())?;
        for c in &cc.conventions {
            let verdict = if c.agrees { "agrees" } else { "disagrees" };
            println!("    r={r}, grade <= {grade}: convention {} {verdict}", c.convention);
        }
        first_failure(&cc.reports)?;
        ensure(cc.passed(), || format!("{:?}", cc.conventions.iter().find(|c| c.selected)))?;
    }
    Ok(())
}

fn c12_hopf() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let suites = common::hopf_suites(&mut rng, 500, 5, 3);
    for s in &suites {
        println!("    {}: {}/{} cases pass", s.name, s.cases - s.failures.len(), s.cases);
    }
    match suites.iter().find(|s| !s.passed()) {
        None => Ok(()),
        Some(s) => Err(format!("{}: {}", s.name, s.failures[0])),
    }
}

fn c13_cartan() -> Outcome {
    for n in 1..=4 {
        for r in 1..=2u32 {
            let c = cartan_matrix(n, r).map_err(|e| e.to_string())?;
            let dims: Vec<i64> = projective_labels(n, r).iter().map(|p| dim_projective(p) as i64).collect();
            // Every simple is one-dimensional, so a row sum is the dimension.
            ensure(c.row_sums() == dims, || format!("n={n} r={r}: row sums {:?} vs {dims:?}", c.row_sums()))?;
            let ed = e_matrix(n, r).and_then(|e| e.multiply(&d_matrix(n, r)?)).map_err(|e| e.to_string())?;
            ensure(ed == c, || format!("n={n} r={r}: e*d differs from the Cartan matrix"))?;
        }
    }
    for r in 1..=4u32 {
        let c = cartan_matrix(1, r).map_err(|e| e.to_string())?;
        ensure(c.is_identity() && c.rows.len() == r as usize, || format!("n=1 r={r}: {c:?}"))?;
    }
    Ok(())
}

fn c14_decomposition() -> Outcome {
    for n in 1..=4 {
        for r in 1..=2u32 {
            let m = decomposition_matrix(n, r).map_err(|e| e.to_string())?;
            ensure(m.entries.iter().flatten().all(|&v| v >= 0), || format!("n={n} r={r}: negative entry"))?;
        }
    }
    let m = decomposition_matrix(2, 2).map_err(|e| e.to_string())?;
    let row = m.rows.iter().position(|l| l == "1,1/").ok_or("row 1,1/ missing")?;
    let terms: Vec<(&str, i64)> = m.cols.iter().map(|s| s.as_str()).zip(m.entries[row].iter().copied()).filter(|(_, v)| *v != 0).collect();
    ensure(terms == vec![("1,1|1,1", 1)], || format!("{terms:?}"))
}

fn c15_order_socle() -> Outcome {
    for r in 1..=2 {
        let reports = m_i_suite(3, r, MAX_DIM).map_err(|e| e.to_string())?;
        ensure(all_pass(&reports), || format!("{:?}", reports.iter().find(|x| !x.pass)))?;
        ensure(reports.len() == 5 * Composition::all(1).len() + 5 * Composition::all(2).len() + 5 * Composition::all(3).len(), || "missing shapes".into())?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 15] = [
        ("cycloribbon count r(r+1)^(n-1), n <= 8, r <= 4", c1_cycloribbon_count),
        ("five cycloribbons of shape (2,1), r = 2", c2_shape_21),
        ("phi on the example pair; phi is an involution, n <= 6, r <= 3", c3_phi),
        ("six composition factors of [(1,1),21] x [(2),12]", c4_worked_induction_product),
        ("S to R expansion of (2,1b,2b,1,3) and its inverse", c5_s_to_r),
        ("restriction of R(2,1b,2b,1,3) to H_9(0)", c6_pi),
        ("induced Hecke projective (2,1), r = 2: dims {3,6,3,2,2}", c7_hecke_projective),
        ("sum of projective dimensions = r^n n!, n <= 5, r <= 3", c8_dimension_identity),
        ("oracle relations for r^n n! <= 2000, two parameter vectors", c9_relations),
        ("oracle one-dimensional character census", c10_census),
        ("oracle induced modules agree with the shuffle rule", c11_arbitration),
        ("Hopf identities, 500 random cases each", c12_hopf),
        ("Cartan matrix: row sums, n = 1 identity, C = E D", c13_cartan),
        ("decomposition matrix sanity", c14_decomposition),
        ("order and socle lemmas for M_I, n <= 3, r <= 2", c15_order_socle),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({secs:.1}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.1}s): {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
