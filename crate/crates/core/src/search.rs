//! Design search: canonical forms under the equivalence group, exhaustive
//! orderly generation, a multi-restart exchange heuristic, and 12-run
//! designs carved out of a Hadamard matrix of order 12.
//!
//! Two designs are equivalent when one maps to the other by permuting
//! columns, switching column signs, and permuting rows. Every criterion in
//! this crate is invariant under that group, so search spaces are walked per
//! equivalence class: the canonical form of a design is the
//! lexicographically smallest sorted row-code sequence over its orbit.
//!
//! The exhaustive search uses orderly generation: grow sorted row sequences
//! one code at a time and prune any prefix that is not canonical. Removing
//! the largest row of a canonical sequence leaves a canonical sequence, so
//! every class is reached exactly once, at its canonical representative,
//! and subtree pruning is sound.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::criteria::{closed_form_s2, ClosedFormCriterion};
use crate::design::{map_code, Design, RowCode};
use crate::error::{Error, Result};
use crate::rat::{binomial, decimal_string, Rat};

/// Canonicalization enumerates the full column group (`m! · 2^m` elements).
pub const MAX_CANONICAL_FACTORS: usize = 8;

/// Exhaustive spaces beyond this many raw designs need an explicit opt-in.
pub const EXHAUSTIVE_SPACE_BOUND: u64 = 10_000_000;

/// Largest run count any search accepts; keeps integer criterion keys
/// comfortably inside `u128`.
pub const MAX_SEARCH_RUNS: usize = 1 << 14;

/// The canonical representative of a design's equivalence class: the
/// lexicographically smallest sorted row-code sequence over all column
/// permutations and sign switches (row order is quotiented out by sorting).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    m: u8,
    rows: Vec<RowCode>,
}

impl CanonicalForm {
    pub fn factors(&self) -> usize {
        self.m as usize
    }

    /// Sorted row codes of the representative.
    pub fn rows(&self) -> &[RowCode] {
        &self.rows
    }

    pub fn to_design(&self) -> Design {
        Design::new(self.factors(), self.rows.clone()).expect("canonical form is a valid design")
    }
}

/// All non-identity code maps of the column group for `m ≤ 6`, as lookup
/// tables `code → code`. (`6! · 2^6 = 46080` tables of 64 entries; beyond
/// `m = 6` the tables no longer fit comfortably and callers map on the fly.)
fn group_tables(m: usize) -> Vec<Vec<u16>> {
    debug_assert!(m <= 6);
    let size = 1usize << m;
    let mut tables = Vec::with_capacity((1..=m).product::<usize>() * size - 1);
    for perm in (0..m).permutations(m) {
        for signs in 0..size as u16 {
            if signs == 0 && perm.iter().enumerate().all(|(j, &p)| j == p) {
                continue;
            }
            let table = (0..size as u16)
                .map(|c| map_code(c, &perm, signs))
                .collect();
            tables.push(table);
        }
    }
    tables
}

/// Lexicographic comparison of the sorted image of `rows` under `table`
/// against `rows` itself, without materializing the full sort: selection
/// pulls out successive minima and bails at the first strict difference.
fn image_lex_less(rows: &[u16], table: &[u16], buf: &mut Vec<u16>) -> bool {
    buf.clear();
    buf.extend(rows.iter().map(|&r| table[r as usize]));
    let k = buf.len();
    for i in 0..k {
        let mut mi = i;
        for t in i + 1..k {
            if buf[t] < buf[mi] {
                mi = t;
            }
        }
        buf.swap(i, mi);
        match buf[i].cmp(&rows[i]) {
            std::cmp::Ordering::Less => return true,
            std::cmp::Ordering::Greater => return false,
            std::cmp::Ordering::Equal => {}
        }
    }
    false
}

/// True when the sorted sequence `rows` is lexicographically minimal over
/// the whole column group.
fn is_canonical(rows: &[u16], tables: &[Vec<u16>], buf: &mut Vec<u16>) -> bool {
    !tables.iter().any(|t| image_lex_less(rows, t, buf))
}

/// Canonical form of a design: minimum of the sorted row codes over the
/// column group. Supports `m ≤ 8`; the group has `m! · 2^m` elements.
pub fn canonicalize(design: &Design) -> Result<CanonicalForm> {
    let m = design.factors();
    if m > MAX_CANONICAL_FACTORS {
        return Err(Error::GroupTooLarge {
            got: m,
            max: MAX_CANONICAL_FACTORS,
        });
    }
    let mut rows: Vec<u16> = design.row_codes().iter().map(|r| r.bits()).collect();
    rows.sort_unstable();
    // Every orbit element is the sorted image of the *original* rows under
    // some group element, so mapping the fixed `rows` through each element
    // and keeping the minimum is exact.
    let mut best = rows.clone();
    let mut buf: Vec<u16> = Vec::with_capacity(rows.len());
    if m <= 6 {
        for table in &group_tables(m) {
            buf.clear();
            buf.extend(rows.iter().map(|&r| table[r as usize]));
            buf.sort_unstable();
            if buf < best {
                std::mem::swap(&mut best, &mut buf);
            }
        }
    } else {
        for perm in (0..m).permutations(m) {
            for signs in 0..(1u32 << m) as u16 {
                buf.clear();
                buf.extend(rows.iter().map(|&r| map_code(r, &perm, signs)));
                buf.sort_unstable();
                if buf < best {
                    std::mem::swap(&mut best, &mut buf);
                }
            }
        }
    }
    Ok(CanonicalForm {
        m: m as u8,
        rows: best.into_iter().map(RowCode::from_bits).collect(),
    })
}

/// How a search walks the space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchMethod {
    /// Orderly generation over equivalence classes; exact optimum.
    Exhaustive,
    /// Multi-restart best-improvement row exchange; heuristic.
    Exchange,
}

/// Configuration shared by both search methods.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Run count `n`.
    pub runs: usize,
    /// Factor count `m`.
    pub factors: usize,
    /// Criterion to minimize (spectrum closed form).
    pub criterion: ClosedFormCriterion,
    pub method: SearchMethod,
    /// Restrict to designs without repeated runs (default true).
    pub distinct_rows: bool,
    /// Exchange restarts (default 100).
    pub restarts: usize,
    /// Seed for the restart stream; identical configurations reproduce
    /// identical results, bit for bit.
    pub seed: u64,
    /// Minimum improvement an exchange move must achieve (default exact 0,
    /// i.e. any strict improvement is taken).
    pub improvement_tolerance: Rat,
    /// Opt-in for exhaustive spaces beyond [`EXHAUSTIVE_SPACE_BOUND`].
    pub allow_large_space: bool,
    /// Worker threads for exchange restarts (`None` = library default).
    pub workers: Option<usize>,
}

impl SearchConfig {
    pub fn new(runs: usize, factors: usize, criterion: ClosedFormCriterion) -> Self {
        SearchConfig {
            runs,
            factors,
            criterion,
            method: SearchMethod::Exchange,
            distinct_rows: true,
            restarts: 100,
            seed: 0,
            improvement_tolerance: Rat::zero(),
            allow_large_space: false,
            workers: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.runs == 0 || self.runs > MAX_SEARCH_RUNS {
            return Err(Error::InvalidConfig(format!(
                "run count {} outside 1..={MAX_SEARCH_RUNS}",
                self.runs
            )));
        }
        if self.factors == 0 || self.factors > MAX_CANONICAL_FACTORS {
            return Err(Error::InvalidConfig(format!(
                "search reports canonical classes and needs 1 ≤ m ≤ {}, got {}",
                MAX_CANONICAL_FACTORS, self.factors
            )));
        }
        if self.distinct_rows && self.runs > 1 << self.factors {
            return Err(Error::InvalidConfig(format!(
                "{} distinct runs do not exist over {} factors",
                self.runs, self.factors
            )));
        }
        if self.improvement_tolerance < Rat::zero() {
            return Err(Error::InvalidConfig(
                "improvement tolerance must be nonnegative".into(),
            ));
        }
        Ok(())
    }
}

/// Outcome of a search.
#[derive(Clone, Debug)]
pub struct SearchResult {
    /// Tag of the optimized criterion.
    pub criterion_label: String,
    /// Best criterion value found, exact.
    pub value: Rat,
    /// Canonical forms of every distinct class attaining `value`,
    /// generalized-minimum-aberration order first, then lexicographic.
    pub best: Vec<CanonicalForm>,
    /// Criterion evaluations performed.
    pub visited: u64,
    /// Human-readable progress notes.
    pub trace: Vec<String>,
    /// Wall-clock time of the search.
    pub elapsed: Duration,
}

/// Per-subset-size weight table indexed by row-code mask: `wmask[mask] =
/// w_{popcount(mask)}` with `w_0 = 0`, so a criterion key is
/// `Σ_mask wmask[mask] · j_mask²`.
fn mask_weights(m: usize, weights: &[u128]) -> Vec<u128> {
    (0..1usize << m)
        .map(|mask| {
            let s = (mask as u16).count_ones() as usize;
            if s == 0 || s > weights.len() {
                0
            } else {
                weights[s - 1]
            }
        })
        .collect()
}

/// `(−1)^{|c ∧ s|}` as `i64`.
#[inline]
fn parity(c: u16, s: u16) -> i64 {
    1 - 2 * (((c & s).count_ones() & 1) as i64)
}

/// Scaled integer criterion key of a J-vector:
/// `Σ_mask wmask[mask] · j_mask² = S² · scale · n²`.
fn criterion_key(jvec: &[i64], wmask: &[u128]) -> u128 {
    let mut key = 0u128;
    for (mask, &w) in wmask.iter().enumerate() {
        if w != 0 {
            let j = jvec[mask];
            key += w * (j * j) as u128;
        }
    }
    key
}

fn key_to_value(key: u128, scale: u128, runs: usize) -> Rat {
    let n2 = BigInt::from(runs as u128 * runs as u128);
    Rat::new(BigInt::from(key), BigInt::from(scale) * n2)
}

/// Re-evaluates each winning class from scratch through the closed form and
/// confirms it reproduces the search's key-derived value. A mismatch means
/// the incremental bookkeeping broke, which is a bug worth halting over.
fn verify_winners(
    best: &[CanonicalForm],
    value: &Rat,
    coeffs: &crate::criteria::CriterionCoefficients,
) {
    for cf in best {
        let check = closed_form_s2(&cf.to_design(), coeffs).expect("winner evaluates");
        assert_eq!(
            &check.value, value,
            "internal error: search key disagrees with direct evaluation"
        );
    }
}

/// Sorts winning classes by generalized minimum aberration, breaking ties
/// lexicographically on the canonical rows.
fn sort_winners(best: &mut [CanonicalForm]) {
    best.sort_by(|a, b| {
        let sa = a.to_design().bs_spectrum();
        let sb = b.to_design().bs_spectrum();
        sa.gma_cmp(&sb)
            .expect("same factor count")
            .then_with(|| a.cmp(b))
    });
}

/// Exact minimization over all equivalence classes of `n`-run designs by
/// orderly generation. Every class is visited exactly once. The raw space
/// (`C(2^m, n)` for distinct rows, `C(2^m + n − 1, n)` with repetition)
/// must stay within [`EXHAUSTIVE_SPACE_BOUND`] unless
/// [`SearchConfig::allow_large_space`] is set.
pub fn exhaustive_search(config: &SearchConfig) -> Result<SearchResult> {
    let start = Instant::now();
    config.validate()?;
    let m = config.factors;
    let n = config.runs;
    if m > 6 {
        return Err(Error::InvalidConfig(format!(
            "exhaustive search supports m ≤ 6 (group tables), got {m}"
        )));
    }
    let size = 1u64 << m;
    let raw_space = if config.distinct_rows {
        binomial(size, n as u64)
    } else {
        binomial(size + n as u64 - 1, n as u64)
    };
    if raw_space > EXHAUSTIVE_SPACE_BOUND.into() && !config.allow_large_space {
        return Err(Error::SearchSpace(format!(
            "{raw_space} raw designs exceed the bound of {EXHAUSTIVE_SPACE_BOUND}; \
             set allow_large_space to proceed"
        )));
    }

    let coeffs = config.criterion.coefficients(m)?;
    let (weights, scale) = coeffs.scaled_integer_weights();
    let wmask = mask_weights(m, &weights);
    let tables = group_tables(m);

    struct Ctx<'a> {
        n: usize,
        size: u16,
        distinct: bool,
        tables: &'a [Vec<u16>],
        wmask: &'a [u128],
        rows: Vec<u16>,
        jvec: Vec<i64>,
        cmp_buf: Vec<u16>,
        best_key: Option<u128>,
        best_rows: Vec<Vec<u16>>,
        leaves: u64,
        nodes: u64,
    }

    fn dfs(ctx: &mut Ctx, from: u16) {
        if ctx.rows.len() == ctx.n {
            ctx.leaves += 1;
            let key = criterion_key(&ctx.jvec, ctx.wmask);
            match ctx.best_key {
                Some(b) if key > b => {}
                Some(b) if key == b => ctx.best_rows.push(ctx.rows.clone()),
                _ => {
                    ctx.best_key = Some(key);
                    ctx.best_rows.clear();
                    ctx.best_rows.push(ctx.rows.clone());
                }
            }
            return;
        }
        for c in from..ctx.size {
            ctx.rows.push(c);
            ctx.nodes += 1;
            for (mask, j) in ctx.jvec.iter_mut().enumerate() {
                *j += parity(c, mask as u16);
            }
            if is_canonical(&ctx.rows, ctx.tables, &mut ctx.cmp_buf) {
                dfs(ctx, if ctx.distinct { c + 1 } else { c });
            }
            for (mask, j) in ctx.jvec.iter_mut().enumerate() {
                *j -= parity(c, mask as u16);
            }
            ctx.rows.pop();
        }
    }

    let mut ctx = Ctx {
        n,
        size: size as u16,
        distinct: config.distinct_rows,
        tables: &tables,
        wmask: &wmask,
        rows: Vec::with_capacity(n),
        jvec: vec![0i64; size as usize],
        cmp_buf: Vec::with_capacity(n),
        best_key: None,
        best_rows: Vec::new(),
        leaves: 0,
        nodes: 0,
    };
    dfs(&mut ctx, 0);

    let best_key = ctx.best_key.expect("space is nonempty for n ≥ 1");
    let value = key_to_value(best_key, scale, n);
    // Leaves of the orderly tree are canonical representatives already.
    let mut best: Vec<CanonicalForm> = ctx
        .best_rows
        .iter()
        .map(|rows| CanonicalForm {
            m: m as u8,
            rows: rows.iter().map(|&c| RowCode::from_bits(c)).collect(),
        })
        .collect();
    sort_winners(&mut best);
    verify_winners(&best, &value, &coeffs);

    let trace = vec![
        format!(
            "orderly generation over {raw_space} raw designs: {} nodes, {} canonical classes",
            ctx.nodes, ctx.leaves
        ),
        format!(
            "optimum {} attained by {} class(es)",
            decimal_string(&value, 6),
            best.len()
        ),
    ];
    Ok(SearchResult {
        criterion_label: config.criterion.label(),
        value,
        best,
        visited: ctx.leaves,
        trace,
        elapsed: start.elapsed(),
    })
}

struct RestartOutcome {
    restart: usize,
    key: u128,
    rows: Vec<u16>,
    moves: u32,
    evals: u64,
}

/// Best-improvement exchange from one random start. Every accepted move is
/// cross-checked against a from-scratch J-vector recomputation.
fn exchange_restart<F: Fn(u128) -> bool>(
    restart: usize,
    config: &SearchConfig,
    wmask: &[u128],
    tol_check: &F,
) -> RestartOutcome {
    let m = config.factors;
    let n = config.runs;
    let size = 1usize << m;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(restart as u64);

    let mut rows: Vec<u16> = if config.distinct_rows {
        rand::seq::index::sample(&mut rng, size, n)
            .into_iter()
            .map(|v| v as u16)
            .collect()
    } else {
        (0..n).map(|_| rng.gen_range(0..size) as u16).collect()
    };
    let mut occupancy = vec![0u32; size];
    for &r in &rows {
        occupancy[r as usize] += 1;
    }
    let mut jvec = vec![0i64; size];
    for &r in &rows {
        for (mask, j) in jvec.iter_mut().enumerate() {
            *j += parity(r, mask as u16);
        }
    }
    let mut key = criterion_key(&jvec, wmask);
    let mut moves = 0u32;
    let mut evals = 0u64;

    loop {
        let mut best_move: Option<(u128, usize, u16)> = None;
        for (a, &old) in rows.iter().enumerate() {
            for c in 0..size as u16 {
                if c == old || (config.distinct_rows && occupancy[c as usize] > 0) {
                    continue;
                }
                let mut cand = 0u128;
                for (mask, &w) in wmask.iter().enumerate() {
                    if w != 0 {
                        let j = jvec[mask] - parity(old, mask as u16) + parity(c, mask as u16);
                        cand += w * (j * j) as u128;
                    }
                }
                evals += 1;
                let better = match best_move {
                    None => true,
                    Some((bk, ba, bc)) => cand < bk || (cand == bk && (a, c) < (ba, bc)),
                };
                if better {
                    best_move = Some((cand, a, c));
                }
            }
        }
        let Some((cand_key, a, c)) = best_move else {
            break;
        };
        if cand_key >= key || !tol_check(key - cand_key) {
            break;
        }
        let old = rows[a];
        occupancy[old as usize] -= 1;
        occupancy[c as usize] += 1;
        rows[a] = c;
        for (mask, j) in jvec.iter_mut().enumerate() {
            *j += parity(c, mask as u16) - parity(old, mask as u16);
        }
        key = cand_key;
        moves += 1;

        // Invariant: incremental J-vector equals recomputation, every move.
        let mut fresh = vec![0i64; size];
        for &r in &rows {
            for (mask, j) in fresh.iter_mut().enumerate() {
                *j += parity(r, mask as u16);
            }
        }
        assert_eq!(
            fresh, jvec,
            "internal error: incremental J-vector diverged from recomputation"
        );
        assert_eq!(
            criterion_key(&fresh, wmask),
            key,
            "internal error: incremental key diverged from recomputation"
        );
    }

    RestartOutcome {
        restart,
        key,
        rows,
        moves,
        evals,
    }
}

/// Multi-restart best-improvement exchange: from a random start, repeatedly
/// swap one in-design run for the out-of-design code that most improves the
/// criterion, accepting only strict exact improvements (beyond the
/// configured tolerance), until a local optimum. Deterministic for a fixed
/// configuration; restarts use independent, order-independent RNG streams.
pub fn exchange_search(config: &SearchConfig) -> Result<SearchResult> {
    let start = Instant::now();
    config.validate()?;
    if config.restarts == 0 {
        return Err(Error::InvalidConfig("need at least one restart".into()));
    }
    let m = config.factors;
    let n = config.runs;
    let coeffs = config.criterion.coefficients(m)?;
    let (weights, scale) = coeffs.scaled_integer_weights();
    let wmask = mask_weights(m, &weights);

    // Accept a move iff improvement/(scale·n²) > tolerance, exactly.
    let tol = config.improvement_tolerance.clone();
    let tol_scaled_den = BigInt::from(scale) * BigInt::from(n as u128 * n as u128);
    let tol_check = move |improvement: u128| -> bool {
        if improvement == 0 {
            return false;
        }
        if tol.is_zero() {
            return true;
        }
        BigInt::from(improvement) * tol.denom() > tol.numer() * &tol_scaled_den
    };

    let run_one = |r: usize| exchange_restart(r, config, &wmask, &tol_check);
    let outcomes: Vec<RestartOutcome> = match config.workers {
        Some(1) => (0..config.restarts).map(run_one).collect(),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| Error::InvalidConfig(format!("worker pool: {e}")))?;
            pool.install(|| {
                use rayon::prelude::*;
                (0..config.restarts).into_par_iter().map(run_one).collect()
            })
        }
        None => {
            use rayon::prelude::*;
            (0..config.restarts).into_par_iter().map(run_one).collect()
        }
    };

    let best_key = outcomes.iter().map(|o| o.key).min().expect("restarts ≥ 1");
    let value = key_to_value(best_key, scale, n);

    let mut classes: BTreeSet<CanonicalForm> = BTreeSet::new();
    for o in &outcomes {
        if o.key == best_key {
            let design = Design::new(m, o.rows.iter().map(|&c| RowCode::from_bits(c)).collect())?;
            classes.insert(canonicalize(&design)?);
        }
    }
    let mut best: Vec<CanonicalForm> = classes.into_iter().collect();
    sort_winners(&mut best);
    verify_winners(&best, &value, &coeffs);

    let mut trace: Vec<String> = outcomes
        .iter()
        .map(|o| {
            format!(
                "restart {}: local optimum {} after {} move(s), {} evaluations",
                o.restart,
                decimal_string(&key_to_value(o.key, scale, n), 6),
                o.moves,
                o.evals
            )
        })
        .collect();
    let hits = outcomes.iter().filter(|o| o.key == best_key).count();
    trace.push(format!(
        "best value {} reached by {hits}/{} restart(s), {} canonical class(es)",
        decimal_string(&value, 6),
        config.restarts,
        best.len()
    ));

    Ok(SearchResult {
        criterion_label: config.criterion.label(),
        value,
        best,
        visited: outcomes.iter().map(|o| o.evals).sum(),
        trace,
        elapsed: start.elapsed(),
    })
}

/// A Hadamard matrix of order 12 (entries `±1`, `H'H = 12·I`), built by the
/// quadratic-residue construction over GF(11): border row and column of
/// `+1`s; core entry `(i, j)` is `−1` on the diagonal and otherwise `+1`
/// exactly when `j − i` is a nonzero square mod 11.
pub fn hadamard_matrix_12() -> [[i32; 12]; 12] {
    const Q: usize = 11;
    let mut is_square = [false; Q];
    for v in 1..Q {
        is_square[v * v % Q] = true;
    }
    let mut h = [[1i32; 12]; 12];
    for i in 0..Q {
        for j in 0..Q {
            h[i + 1][j + 1] = if i == j {
                -1
            } else if is_square[(j + Q - i) % Q] {
                1
            } else {
                -1
            };
        }
    }
    h
}

fn verify_hadamard(h: &[[i32; 12]; 12]) -> Result<()> {
    for a in 0..12 {
        for b in 0..12 {
            let dot: i32 = (0..12).map(|i| h[i][a] * h[i][b]).sum();
            let want = if a == b { 12 } else { 0 };
            if dot != want {
                return Err(Error::HadamardVerification);
            }
        }
    }
    Ok(())
}

/// Streams every 12-run, `m`-factor design formed by selecting `m` of the
/// 11 non-constant columns of the order-12 Hadamard matrix (`C(11, m)`
/// designs, in lexicographic column order). The matrix is re-verified
/// orthogonal before any design is produced.
pub fn hadamard_designs(m: usize) -> Result<impl Iterator<Item = Design>> {
    if m == 0 || m > 11 {
        return Err(Error::InvalidConfig(format!(
            "Hadamard designs use 1..=11 of the non-constant columns, got {m}"
        )));
    }
    let h = hadamard_matrix_12();
    verify_hadamard(&h)?;
    Ok((1..12usize).combinations(m).map(move |cols| {
        let rows: Vec<Vec<i32>> = (0..12)
            .map(|i| cols.iter().map(|&j| h[i][j]).collect())
            .collect();
        Design::from_sign_rows(&rows).expect("Hadamard columns form a valid design")
    }))
}

/// The 12-run, 5-factor design minimizing the pairs-only `S²` criteria
/// (simultaneously for every `f`) and the triple-with-margins criterion.
/// Its aliasing spectrum is `B = (5/36, 0, 5/18, 5/9, 25/36)`.
pub fn s2_optimal_12x5() -> Design {
    let rows: &[[i32; 5]] = &[
        [1, 1, 1, 1, 1],
        [1, 1, -1, -1, -1],
        [1, -1, 1, 1, -1],
        [1, -1, 1, -1, 1],
        [1, -1, -1, 1, 1],
        [-1, 1, 1, 1, -1],
        [-1, 1, 1, -1, 1],
        [-1, 1, -1, 1, 1],
        [-1, -1, 1, 1, 1],
        [-1, -1, 1, -1, -1],
        [-1, -1, -1, 1, -1],
        [-1, -1, -1, -1, 1],
    ];
    let sign_rows: Vec<Vec<i32>> = rows.iter().map(|r| r.to_vec()).collect();
    Design::from_sign_rows(&sign_rows).expect("reference design is valid")
}
