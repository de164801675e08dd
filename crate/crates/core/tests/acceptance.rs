//! Acceptance gate: one check per release criterion, each printed as a
//! single PASS/FAIL line with its wall time and budget. The process exits
//! nonzero if any check fails or overruns its budget.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{collect_models, det_oracle, random_design, random_distinct_design};
use ffd_core::{
    approx_f64, canonicalize, check_proposition_orderings, closed_form_s2, coefficients_s31,
    coefficients_sf0, coefficients_sfg, d_fg, exchange_search, exhaustive_search, hadamard_designs,
    information_matrix, is_affinely_full_dimensional, s2_optimal_12x5, s2_oracle,
    ClosedFormCriterion, Design, ModelDistribution, ModelPair, Rat, RowCode, Scenario,
    SearchConfig, SearchMethod, SubsetIndex,
};
use itertools::Itertools;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 5e-5;

fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}

fn assert_close(value: &Rat, printed: f64, what: &str) {
    let approx = approx_f64(value);
    assert!(
        (approx - printed).abs() <= TOL,
        "{what}: {approx} vs printed {printed}"
    );
}

/// 1. The reference 12×5 design's aliasing spectrum, exact and against the
///    printed decimals.
fn reference_spectrum() {
    let d = s2_optimal_12x5();
    let bs = d.bs_spectrum();
    let exact = [rat(5, 36), rat(0, 1), rat(5, 18), rat(5, 9), rat(25, 36)];
    let printed = [0.138889, 0.0, 0.27778, 0.5556, 0.694444];
    for s in 1..=5 {
        assert_eq!(bs.value(s), exact[s - 1], "B_{s}");
        assert_close(&bs.value(s), printed[s - 1], &format!("B_{s}"));
    }
}

/// 2. Every 12×5 orthogonal-column design cut from the order-12 Hadamard
///    matrix has the same spectrum: B1 = B2 = 0 exactly, B3 = 10/9, B4 = 5/9.
fn hadamard_spectra() {
    let mut count = 0usize;
    for d in hadamard_designs(5).unwrap() {
        let bs = d.bs_spectrum();
        assert_eq!(bs.numerator(1), 0, "B1 exact zero");
        assert_eq!(bs.numerator(2), 0, "B2 exact zero");
        assert_eq!(bs.value(3), rat(10, 9));
        assert_eq!(bs.value(4), rat(5, 9));
        assert_close(&bs.value(3), 1.1111, "B3");
        assert_close(&bs.value(4), 0.5556, "B4");
        count += 1;
    }
    assert_eq!(count, 462, "C(11,5) column selections");
}

/// 3. All twelve reference criterion values: pairs-only f = 1..5 and the
///    triple-with-margins criterion, for both reference designs.
fn reference_criterion_values() {
    let ds = s2_optimal_12x5();
    let dh = hadamard_designs(5).unwrap().next().unwrap();
    let ds_expect = [
        (rat(5, 9), 0.5556),
        (rat(49, 54), 0.9074),
        (rat(4, 3), 1.3333),
        (rat(11, 6), 1.8333),
        (rat(65, 27), 2.4074),
    ];
    let dh_expect = [
        (rat(2, 3), 0.6667),
        (rat(38, 27), 1.4074),
        (rat(20, 9), 2.2222),
        (rat(28, 9), 3.1111),
        (rat(110, 27), 4.0741),
    ];
    for f in 1..=5usize {
        let coeffs = coefficients_sf0(5, f).unwrap();
        let vs = closed_form_s2(&ds, &coeffs).unwrap().value;
        assert_eq!(
            vs,
            ds_expect[f - 1].0,
            "pairs-only f={f} on the 12x5 optimum"
        );
        assert_close(&vs, ds_expect[f - 1].1, "pairs-only value");
        let vh = closed_form_s2(&dh, &coeffs).unwrap().value;
        assert_eq!(
            vh,
            dh_expect[f - 1].0,
            "pairs-only f={f} on the Hadamard design"
        );
        assert_close(&vh, dh_expect[f - 1].1, "pairs-only value");
    }
    let coeffs = coefficients_s31(5).unwrap();
    let vs = closed_form_s2(&ds, &coeffs).unwrap().value;
    assert_eq!(vs, rat(16, 9));
    assert_close(&vs, 1.7778, "triple-with-margins value");
    let vh = closed_form_s2(&dh, &coeffs).unwrap().value;
    assert_eq!(vh, rat(8, 3));
    assert_close(&vh, 2.6667, "triple-with-margins value");
}

/// 4. Closed forms equal the streaming expectation oracle exactly on seeded
///    random designs for every scenario family.
fn oracle_theorem_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(20260817);
    for (m, n) in [(4usize, 8usize), (5, 12)] {
        let big_f = m * (m - 1) / 2;
        for k in 0..50 {
            // Mix distinct-row and multiset draws.
            let design = if k % 2 == 0 {
                random_design(&mut rng, m, n)
            } else {
                random_distinct_design(&mut rng, m, n)
            };
            let spectrum = design.bs_spectrum();
            for f in 1..=big_f {
                let coeffs = coefficients_sf0(m, f).unwrap();
                let dist = ModelDistribution::new(m, Scenario::UniformPairs { f }).unwrap();
                assert_eq!(
                    coeffs.evaluate(&spectrum).unwrap(),
                    s2_oracle(&design, &dist).unwrap().value,
                    "pairs-only f={f} m={m}"
                );
            }
            for g in 0..=3usize {
                let coeffs = coefficients_sfg(m, g).unwrap();
                let dist =
                    ModelDistribution::new(m, Scenario::AllPairsUniformTriples { g }).unwrap();
                assert_eq!(
                    coeffs.evaluate(&spectrum).unwrap(),
                    s2_oracle(&design, &dist).unwrap().value,
                    "all-pairs g={g} m={m}"
                );
            }
            let coeffs = coefficients_s31(m).unwrap();
            let dist = ModelDistribution::new(m, Scenario::Hierarchical31).unwrap();
            assert_eq!(
                coeffs.evaluate(&spectrum).unwrap(),
                s2_oracle(&design, &dist).unwrap().value,
                "triple-with-margins m={m}"
            );
        }
    }
}

/// 5. Coefficient orderings hold with exact arithmetic across the stated
///    ranges.
fn proposition_suite() {
    for m in 4..=10usize {
        let report = check_proposition_orderings(m).unwrap();
        assert!(report.passed(), "m={m}: {report:?}");
        assert!(report.checks[0].applicable, "pairs-only ordering at m={m}");
        assert!(
            report.checks[2].applicable,
            "triple-with-margins ordering at m={m}"
        );
        if m >= 6 {
            assert!(report.checks[1].applicable, "all-pairs ordering at m={m}");
        }
    }
}

/// 6. The pairs-only family at full pool coincides with the all-pairs
///    family at zero triples.
fn theorem_cross_consistency() {
    for m in 3..=8usize {
        let big_f = m * (m - 1) / 2;
        let a = coefficients_sf0(m, big_f).unwrap();
        let b = coefficients_sfg(m, 0).unwrap();
        assert_eq!(a.values(), b.values(), "m={m}");
    }
}

/// 7. Affine full dimensionality: rank characterization matches the
///    J-bound characterization everywhere; reference designs are AFD.
fn afd_properties() {
    let cross_check = |design: &Design| {
        let n = design.runs() as i64;
        let jv = design.j_vector();
        let strict =
            (1..1u16 << design.factors()).all(|s| jv.get(SubsetIndex::from_bits(s)).abs() < n);
        assert_eq!(is_affinely_full_dimensional(design), strict);
    };
    // (a) exhaustively for m = 3, n ≤ 5; every n = 5 design is AFD.
    for n in 1..=5usize {
        for codes in (0..8u16).combinations(n) {
            let design =
                Design::new(3, codes.into_iter().map(RowCode::from_bits).collect()).unwrap();
            cross_check(&design);
            if n == 5 {
                assert!(
                    is_affinely_full_dimensional(&design),
                    "5 distinct points of the 3-cube never fit a plane"
                );
            }
        }
    }
    // (a) continued: 200 random 12-run, 5-factor designs.
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for _ in 0..200 {
        cross_check(&random_design(&mut rng, 5, 12));
    }
    // (c) both reference families.
    assert!(is_affinely_full_dimensional(&s2_optimal_12x5()));
    for d in hadamard_designs(5).unwrap() {
        assert!(is_affinely_full_dimensional(&d));
    }
}

/// 8. The multi-restart exchange search reproduces the known 12×5 optima —
///    value and canonical class — for every pairs-only criterion and the
///    triple-with-margins criterion.
fn search_recovery() {
    let reference = canonicalize(&s2_optimal_12x5()).unwrap();
    let targets: Vec<(ClosedFormCriterion, Rat)> = vec![
        (ClosedFormCriterion::PairsOnly { f: 1 }, rat(5, 9)),
        (ClosedFormCriterion::PairsOnly { f: 2 }, rat(49, 54)),
        (ClosedFormCriterion::PairsOnly { f: 3 }, rat(4, 3)),
        (ClosedFormCriterion::PairsOnly { f: 4 }, rat(11, 6)),
        (ClosedFormCriterion::PairsOnly { f: 5 }, rat(65, 27)),
        (ClosedFormCriterion::ThreeOne, rat(16, 9)),
    ];
    for (criterion, optimum) in targets {
        let mut cfg = SearchConfig::new(12, 5, criterion);
        cfg.method = SearchMethod::Exchange;
        cfg.restarts = 100;
        cfg.seed = 2026;
        let res = exchange_search(&cfg).unwrap();
        assert_eq!(
            res.value,
            optimum,
            "{} best over 100 restarts",
            criterion.label()
        );
        assert_eq!(
            res.best,
            vec![reference.clone()],
            "{} witnesses form the single reference class",
            criterion.label()
        );
    }
}

/// 9. Orderly-generation exhaustive search equals an independent
///    brute-force sweep at n = 12, m = 4 (1820 distinct-row designs).
fn exhaustive_ground_truth() {
    for criterion in [
        ClosedFormCriterion::PairsOnly { f: 1 },
        ClosedFormCriterion::ThreeOne,
    ] {
        let mut cfg = SearchConfig::new(12, 4, criterion);
        cfg.method = SearchMethod::Exhaustive;
        let res = exhaustive_search(&cfg).unwrap();

        let coeffs = criterion.coefficients(4).unwrap();
        let mut best: Option<Rat> = None;
        let mut witnesses: std::collections::BTreeSet<ffd_core::CanonicalForm> =
            std::collections::BTreeSet::new();
        for codes in (0..16u16).combinations(12) {
            let design =
                Design::new(4, codes.into_iter().map(RowCode::from_bits).collect()).unwrap();
            let value = closed_form_s2(&design, &coeffs).unwrap().value;
            match &best {
                Some(b) if value > *b => {}
                Some(b) if value == *b => {
                    witnesses.insert(canonicalize(&design).unwrap());
                }
                _ => {
                    best = Some(value);
                    witnesses.clear();
                    witnesses.insert(canonicalize(&design).unwrap());
                }
            }
        }
        assert_eq!(res.value, best.unwrap(), "{}", criterion.label());
        let found: std::collections::BTreeSet<_> = res.best.iter().cloned().collect();
        assert_eq!(found, witnesses, "{} witness classes", criterion.label());
    }
}

/// 10. The fraction-free determinant path agrees with a naive cofactor
///     expansion on every support point, and the expected determinant follows.
fn determinant_validation() {
    let mut rng = ChaCha8Rng::seed_from_u64(1870);
    let scenarios = [
        Scenario::UniformPairs { f: 1 },
        Scenario::UniformPairs { f: 6 },
        Scenario::Hierarchical31,
        Scenario::AllPairsUniformTriples { g: 1 },
    ];
    for _ in 0..20 {
        let design = random_design(&mut rng, 4, 8);
        for scenario in &scenarios {
            let dist = ModelDistribution::new(4, scenario.clone()).unwrap();
            let mut expect = Rat::zero();
            for (mp, w) in collect_models(&dist) {
                let im = information_matrix(&design, &mp).unwrap();
                assert!(im.order() <= 12);
                let direct = det_oracle(&im);
                assert_eq!(im.det_fraction_free(), direct, "{}", dist.label());
                expect += w * direct;
            }
            assert_eq!(d_fg(&design, &dist).unwrap(), expect);
        }
    }
    // Trivial cases: a full factorial's information matrix is the identity
    // (determinant 1); a design with a duplicated factor is singular.
    let full = Design::full_factorial(3).unwrap();
    let dist = ModelDistribution::new(3, Scenario::Hierarchical31).unwrap();
    assert!(d_fg(&full, &dist).unwrap().is_one());
    let dup = Design::new(2, vec![RowCode::from_bits(0b00), RowCode::from_bits(0b11)]).unwrap();
    let dist = ModelDistribution::new(2, Scenario::UniformPairs { f: 1 }).unwrap();
    assert!(d_fg(&dup, &dist).unwrap().is_zero());
}

/// 11. Squared Frobenius norm = order + off-diagonal sum of squares (the
///     diagonal of the scaled information matrix is identically 1).
fn trace_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(5150);
    let dist = ModelDistribution::new(4, Scenario::HierarchicalJoint { f: 4, g: 1 }).unwrap();
    let support: Vec<(ModelPair, Rat)> = collect_models(&dist);
    for k in 0..100 {
        let design = random_design(&mut rng, 4, 8);
        let (mp, _) = &support[k % support.len()];
        let im = information_matrix(&design, mp).unwrap();
        let p = im.order();
        let mut frob = Rat::zero();
        for r in 0..p {
            for c in 0..p {
                let e = im.entry(r, c);
                frob += &e * &e;
            }
        }
        assert_eq!(
            frob,
            Rat::from_integer((p as u64).into()) + im.ss_offdiagonal()
        );
    }
}

struct Check {
    id: &'static str,
    name: &'static str,
    budget: Duration,
    run: fn(),
}

fn main() {
    let checks: Vec<Check> = vec![
        Check {
            id: "01",
            name: "reference-spectrum",
            budget: Duration::from_secs(1),
            run: reference_spectrum,
        },
        Check {
            id: "02",
            name: "hadamard-spectra",
            budget: Duration::from_secs(1),
            run: hadamard_spectra,
        },
        Check {
            id: "03",
            name: "reference-criterion-values",
            budget: Duration::from_secs(1),
            run: reference_criterion_values,
        },
        Check {
            id: "04",
            name: "oracle-theorem-identity",
            budget: Duration::from_secs(300),
            run: oracle_theorem_identity,
        },
        Check {
            id: "05",
            name: "proposition-suite",
            budget: Duration::from_secs(10),
            run: proposition_suite,
        },
        Check {
            id: "06",
            name: "theorem-cross-consistency",
            budget: Duration::from_secs(1),
            run: theorem_cross_consistency,
        },
        Check {
            id: "07",
            name: "afd-properties",
            budget: Duration::from_secs(30),
            run: afd_properties,
        },
        Check {
            id: "08",
            name: "search-recovery",
            budget: Duration::from_secs(600),
            run: search_recovery,
        },
        Check {
            id: "09",
            name: "exhaustive-ground-truth",
            budget: Duration::from_secs(60),
            run: exhaustive_ground_truth,
        },
        Check {
            id: "10",
            name: "determinant-validation",
            budget: Duration::from_secs(60),
            run: determinant_validation,
        },
        Check {
            id: "11",
            name: "trace-identity",
            budget: Duration::from_secs(10),
            run: trace_identity,
        },
    ];

    let mut failures = 0usize;
    for check in &checks {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check.run));
        let elapsed = start.elapsed();
        match outcome {
            Ok(()) if elapsed <= check.budget => {
                println!(
                    "ACCEPTANCE {} {}: PASS ({:.2?} <= {:?})",
                    check.id, check.name, elapsed, check.budget
                );
            }
            Ok(()) => {
                failures += 1;
                println!(
                    "ACCEPTANCE {} {}: FAIL (budget exceeded: {:.2?} > {:?})",
                    check.id, check.name, elapsed, check.budget
                );
            }
            Err(panic) => {
                failures += 1;
                let msg = panic
                    .downcast_ref::<String>()
                    .map(String::as_str)
                    .or_else(|| panic.downcast_ref::<&str>().copied())
                    .unwrap_or("panic without message");
                println!("ACCEPTANCE {} {}: FAIL ({})", check.id, check.name, msg);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        checks.len() - failures,
        checks.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
