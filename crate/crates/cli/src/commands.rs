//! Implementations of the `ffd` subcommands. Each returns the process exit
//! code: `0` success, `2` verification failure; usage and input errors
//! propagate as `anyhow` errors and exit `1`.

use std::fs;
use std::path::Path;
use std::time::Instant;

use anyhow::{anyhow, bail, ensure, Context, Result};
use ffd_core::criteria::DET_ORDER_CAP;
use ffd_core::{
    affine_dimension, binomial, check_proposition_orderings, closed_form_s2, d_fg, exchange_search,
    exhaustive_search, hadamard_designs, is_affinely_full_dimensional, s2_oracle,
    ClosedFormCriterion, Design, Encoding, ModelDistribution, Provenance, RowCode, SearchConfig,
    SearchMethod,
};
use itertools::Itertools;
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::output::{
    design_rows, elapsed_ms, emit, write_stdout, AfdOut, ClassOut, CriterionOut, EvalReport,
    OracleReport, RatOut, SearchReport, VerifyCheck, VerifyReport,
};
use crate::scenario::{
    parse_criteria, parse_inclusive_range, parse_search_criterion, EvalCriterion, ScenarioSpec,
};
use crate::{EvalArgs, HadamardArgs, OracleArgs, SearchArgs, VerifyArgs};

/// First 16 hex digits of SHA-256 over `"m;n;"` plus the sorted row codes,
/// so any two row orderings of the same design share a digest.
fn design_digest(design: &Design) -> String {
    let mut codes: Vec<u16> = design.row_codes().iter().map(|r| r.bits()).collect();
    codes.sort_unstable();
    let mut hasher = Sha256::new();
    hasher.update(format!("{};{};", design.factors(), design.runs()));
    hasher.update(
        codes
            .iter()
            .map(u16::to_string)
            .collect::<Vec<_>>()
            .join(","),
    );
    hex::encode(&hasher.finalize()[..8])
}

fn read_design(path: &Path, encoding: Encoding) -> Result<Design> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Design::parse(&text, encoding).with_context(|| format!("parsing {}", path.display()))
}

/// Refuses model spaces whose enumeration would exceed `cap` models.
fn check_support(dist: &ModelDistribution, cap: u64) -> Result<()> {
    let cap_big = BigUint::from(cap);
    if dist.support_upper_bound() <= cap_big {
        return Ok(());
    }
    // Hierarchy pruning can pull the exact count under the cap, but counting
    // itself walks the triple choices — only attempt it while that is cheap.
    if dist.support_upper_bound() <= BigUint::from(1_000_000_000u64) {
        let size = dist.support_size();
        if size <= cap_big {
            return Ok(());
        }
        bail!(
            "scenario {} spans {size} models; enumerating them walks {size} information \
             matrices, above the cap of {cap} (raise --max-support to proceed)",
            dist.label()
        );
    }
    bail!(
        "scenario {} spans up to {} models, above the cap of {cap} (raise --max-support \
         to proceed)",
        dist.label(),
        dist.support_upper_bound()
    );
}

/// `--workers` wins over the `FFD_WORKERS` environment variable.
fn resolve_workers(flag: Option<usize>) -> Result<Option<usize>> {
    let value = match flag {
        Some(w) => w,
        None => match std::env::var("FFD_WORKERS") {
            Err(_) => return Ok(None),
            Ok(text) => text
                .trim()
                .parse()
                .map_err(|_| anyhow!("FFD_WORKERS must be a positive integer, got `{text}`"))?,
        },
    };
    ensure!(value >= 1, "worker count must be at least 1");
    Ok(Some(value))
}

fn provenance_name(p: Provenance) -> String {
    match p {
        Provenance::ClosedForm => "closed-form".to_string(),
        Provenance::Oracle => "oracle".to_string(),
    }
}

pub fn cmd_eval(args: &EvalArgs) -> Result<i32> {
    let start = Instant::now();
    let encoding: Encoding = args.encoding.into();
    let design = read_design(&args.file, encoding)?;
    let m = design.factors();
    let specs = if args.criteria.is_empty() {
        vec![
            EvalCriterion::Spectrum,
            EvalCriterion::GmaKey,
            EvalCriterion::Afd,
        ]
    } else {
        parse_criteria(&args.criteria)?
    };

    let spectrum = design.bs_spectrum();
    let mut report = EvalReport {
        digest: design_digest(&design),
        runs: design.runs(),
        factors: m,
        distinct_rows: design.has_distinct_rows(),
        design: design_rows(&design, encoding),
        spectrum: None,
        gma_key: None,
        afd: None,
        criteria: Vec::new(),
        elapsed_ms: None,
    };
    for spec in &specs {
        match spec {
            EvalCriterion::Spectrum => {
                report.spectrum = Some((1..=m).map(|s| RatOut::new(&spectrum.value(s))).collect());
            }
            EvalCriterion::GmaKey => {
                report.gma_key = Some((1..=m).map(|s| spectrum.value(s).to_string()).collect());
            }
            EvalCriterion::Afd => {
                report.afd = Some(AfdOut {
                    affinely_full_dimensional: is_affinely_full_dimensional(&design),
                    affine_dimension: affine_dimension(&design),
                });
            }
            EvalCriterion::ClosedForm(criterion) => {
                let value = closed_form_s2(&design, &criterion.coefficients(m)?)?;
                report.criteria.push(CriterionOut {
                    criterion: value.label,
                    value: RatOut::new(&value.value),
                    provenance: provenance_name(value.provenance),
                });
            }
            EvalCriterion::ExpectedDeterminant(spec) => {
                let dist = spec.build(m)?;
                check_support(&dist, args.max_support)?;
                let value = d_fg(&design, &dist)?;
                report.criteria.push(CriterionOut {
                    criterion: format!("dfg[{}]", dist.label()),
                    value: RatOut::new(&value),
                    provenance: provenance_name(Provenance::Oracle),
                });
            }
        }
    }
    if !args.no_timing {
        report.elapsed_ms = Some(elapsed_ms(start.elapsed()));
    }
    emit(args.format.json(), &report, report.render_text())?;
    Ok(0)
}

pub fn cmd_oracle(args: &OracleArgs) -> Result<i32> {
    let start = Instant::now();
    let design = read_design(&args.file, args.encoding.into())?;
    let m = design.factors();
    let spec = ScenarioSpec::parse(&args.scenario)?;
    let dist = spec.build(m)?;
    check_support(&dist, args.max_support)?;

    let oracle = s2_oracle(&design, &dist)?;
    let closed = match spec.closed_form() {
        Some(criterion) => Some(closed_form_s2(&design, &criterion.coefficients(m)?)?),
        None => None,
    };
    let verdict = match &closed {
        None => "ORACLE_ONLY",
        Some(cf) if cf.value == oracle.value => "EQUAL",
        Some(_) => "UNEQUAL",
    };
    let report = OracleReport {
        digest: design_digest(&design),
        runs: design.runs(),
        factors: m,
        scenario: dist.label(),
        support: dist.support_size().to_string(),
        oracle: RatOut::new(&oracle.value),
        closed_form: closed.as_ref().map(|cf| RatOut::new(&cf.value)),
        verdict: verdict.to_string(),
        elapsed_ms: (!args.no_timing).then(|| elapsed_ms(start.elapsed())),
    };
    emit(args.format.json(), &report, report.render_text())?;
    Ok(if verdict == "UNEQUAL" { 2 } else { 0 })
}

pub fn cmd_search(args: &SearchArgs) -> Result<i32> {
    let criterion = parse_search_criterion(&args.criterion)?;
    let tolerance = ffd_core::parse_rational(&args.tolerance).ok_or_else(|| {
        anyhow!(
            "invalid --tolerance `{}`; write an integer, fraction p/q, or plain decimal",
            args.tolerance
        )
    })?;
    let mut config = SearchConfig::new(args.runs, args.factors, criterion);
    config.method = args.method.into();
    config.distinct_rows = !args.allow_repeats;
    config.restarts = args.restarts;
    config.seed = args.seed;
    config.improvement_tolerance = tolerance;
    config.allow_large_space = args.long_running;
    config.workers = resolve_workers(args.workers)?;

    let result = match config.method {
        SearchMethod::Exhaustive => exhaustive_search(&config)?,
        SearchMethod::Exchange => exchange_search(&config)?,
    };
    let exchange = config.method == SearchMethod::Exchange;
    let classes: Vec<ClassOut> = result
        .best
        .iter()
        .map(|form| ClassOut {
            codes: form.rows().iter().map(|r| r.bits()).collect(),
            design: design_rows(&form.to_design(), Encoding::PlusMinus),
        })
        .collect();
    let witness = classes
        .first()
        .map(|c| c.design.clone())
        .unwrap_or_default();
    let report = SearchReport {
        criterion: result.criterion_label.clone(),
        method: if exchange { "exchange" } else { "exhaustive" }.to_string(),
        runs: args.runs,
        factors: args.factors,
        distinct_rows: config.distinct_rows,
        restarts: exchange.then_some(args.restarts),
        seed: exchange.then_some(args.seed),
        value: RatOut::new(&result.value),
        design: witness,
        classes,
        visited: result.visited,
        trace: if args.trace {
            result.trace.clone()
        } else {
            Vec::new()
        },
        elapsed_ms: (!args.no_timing).then(|| elapsed_ms(result.elapsed)),
    };
    emit(args.format.json(), &report, report.render_text())?;
    Ok(0)
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<i32> {
    let start = Instant::now();
    let run_all = !(args.props || args.oracle || args.afd);
    let mut checks = Vec::new();
    if args.props || run_all {
        checks.extend(verify_props(&args.m)?);
    }
    if args.oracle || run_all {
        checks.push(verify_oracle(
            args.samples,
            args.runs,
            args.factors,
            args.seed,
        )?);
    }
    if args.afd || run_all {
        checks.push(verify_afd(args.exhaustive_m)?);
    }
    let passed = checks.iter().all(|c| c.passed);
    let report = VerifyReport {
        checks,
        passed,
        elapsed_ms: (!args.no_timing).then(|| elapsed_ms(start.elapsed())),
    };
    emit(args.format.json(), &report, report.render_text())?;
    Ok(if passed { 0 } else { 2 })
}

/// Checks the three coefficient-ordering propositions over an `m` range.
fn verify_props(m_range: &str) -> Result<Vec<VerifyCheck>> {
    let range = parse_inclusive_range(m_range).context("invalid --m")?;
    let mut checks = Vec::new();
    for m in range {
        let report = check_proposition_orderings(m)?;
        let parts: Vec<String> = report
            .checks
            .iter()
            .map(|c| {
                if !c.applicable {
                    format!("prop {} n/a", c.proposition)
                } else if c.violations.is_empty() {
                    format!("prop {} holds", c.proposition)
                } else {
                    format!(
                        "prop {} violated: {}",
                        c.proposition,
                        c.violations.join("; ")
                    )
                }
            })
            .collect();
        checks.push(VerifyCheck {
            name: format!("props m={m}"),
            passed: report.passed(),
            detail: parts.join(", "),
        });
    }
    Ok(checks)
}

/// Closed-form criteria whose enumeration stays under the matrix-order cap
/// at `m` factors.
fn oracle_candidates(m: usize) -> Vec<ClosedFormCriterion> {
    let big_f = m * (m - 1) / 2;
    let big_g = if m >= 3 { m * (m - 1) * (m - 2) / 6 } else { 0 };
    let mut out = Vec::new();
    for f in 1..=big_f.min(3) {
        out.push(ClosedFormCriterion::PairsOnly { f });
    }
    if m >= 3 {
        for g in 0..=big_g.min(2) {
            if 1 + m + big_f + g <= DET_ORDER_CAP {
                out.push(ClosedFormCriterion::AllPairsTriples { g });
            }
        }
        out.push(ClosedFormCriterion::ThreeOne);
    }
    out
}

/// Draws seeded random distinct-row designs and compares every closed form
/// against the enumeration oracle, exactly.
fn verify_oracle(samples: usize, runs: usize, factors: usize, seed: u64) -> Result<VerifyCheck> {
    ensure!(factors >= 2, "--oracle needs at least 2 factors");
    ensure!(
        factors <= 16 && runs >= 1 && runs <= 1 << factors,
        "{runs} distinct runs do not exist over {factors} factors"
    );
    let candidates = oracle_candidates(factors);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = Vec::new();
    for i in 0..samples {
        let picks = rand::seq::index::sample(&mut rng, 1 << factors, runs);
        let rows: Vec<RowCode> = picks.iter().map(|c| RowCode::from_bits(c as u16)).collect();
        let design = Design::new(factors, rows)?;
        let criterion = &candidates[i % candidates.len()];
        let closed = closed_form_s2(&design, &criterion.coefficients(factors)?)?;
        let oracle = s2_oracle(&design, &criterion.distribution(factors)?)?;
        if closed.value != oracle.value {
            mismatches.push(format!(
                "sample {i} ({}): closed form {} vs oracle {}",
                criterion.label(),
                closed.value,
                oracle.value
            ));
        }
    }
    let passed = mismatches.is_empty();
    let detail = if passed {
        format!("{samples}/{samples} EQUAL ({runs} runs × {factors} factors, seed {seed})")
    } else {
        format!(
            "{}/{samples} EQUAL; {}",
            samples - mismatches.len(),
            mismatches.join("; ")
        )
    };
    Ok(VerifyCheck {
        name: "oracle".to_string(),
        passed,
        detail,
    })
}

/// Sweeps every run multiset at `m` factors (up to 6 runs) and cross-checks
/// the three equivalent full-dimensionality characterizations: affine rank,
/// the AFD flag, and `|j_S| < n` for every nonempty subset.
fn verify_afd(m: usize) -> Result<VerifyCheck> {
    ensure!(
        (2..=5).contains(&m),
        "--exhaustive-m must be in 2..=5, got {m}"
    );
    let size = 1u16 << m;
    let mut designs = 0u64;
    let mut afd_count = 0u64;
    let mut mismatches = Vec::new();
    for n in 1..=(size as usize).min(6) {
        for combo in (0..size).combinations_with_replacement(n) {
            let design = Design::new(m, combo.iter().map(|&c| RowCode::from_bits(c)).collect())?;
            let afd = is_affinely_full_dimensional(&design);
            let by_rank = affine_dimension(&design) == m;
            let j = design.j_vector();
            let by_j = (1..1usize << m).all(|s| j.values()[s].unsigned_abs() < n as u64);
            designs += 1;
            afd_count += u64::from(afd);
            if afd != by_rank || afd != by_j {
                mismatches.push(format!(
                    "codes {combo:?}: flag {afd}, rank {by_rank}, j {by_j}"
                ));
            }
        }
    }
    let passed = mismatches.is_empty();
    let detail = if passed {
        format!(
            "m={m}: {designs} designs (n ≤ {}), {afd_count} AFD, characterizations agree",
            (size as usize).min(6)
        )
    } else {
        format!(
            "m={m}: {} disagreements — {}",
            mismatches.len(),
            mismatches[..mismatches.len().min(3)].join("; ")
        )
    };
    Ok(VerifyCheck {
        name: format!("afd m={m}"),
        passed,
        detail,
    })
}

pub fn cmd_hadamard(args: &HadamardArgs) -> Result<i32> {
    if args.count {
        write_stdout(&format!("{}\n", hadamard_designs(args.factors)?.count()))?;
        return Ok(0);
    }
    let index = args.index.unwrap_or(0);
    let design = hadamard_designs(args.factors)?.nth(index).ok_or_else(|| {
        anyhow!(
            "index {index} outside 0..{}",
            binomial(11, args.factors as u64)
        )
    })?;
    write_stdout(&format!(
        "# 12-run projection of a Hadamard matrix of order 12: factors={}, index={index}\n{}",
        args.factors,
        design.to_text(args.encoding.into())
    ))?;
    Ok(0)
}
