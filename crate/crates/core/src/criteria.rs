//! Model-robustness criteria: the expected squared off-diagonal criterion
//! `S²` (enumerated and in closed form), the expected determinant criterion,
//! generalized minimum aberration, and coefficient-ordering checks.
//!
//! For a design `d` with `n` runs and a model pair `(F, G)` the information
//! matrix is `M = (1/n) X'X` where `X` has the intercept, main-effect,
//! two-factor and three-factor interaction columns. Every entry of `M` is
//! `j_{A △ B}/n` for effect subsets `A, B`, so the whole matrix reads off
//! the design's J-vector. `S²` is the expected sum of squared off-diagonal
//! entries under a model distribution; for the standard scenarios it
//! collapses to a fixed linear combination `Σ a_s B_s` of the aliasing
//! spectrum, which is what makes large-scale search affordable.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::design::{BsSpectrum, Design, SubsetIndex};
use crate::error::{Error, Result};
use crate::model::{ModelDistribution, ModelPair, Scenario, ScenarioCounts};
use crate::rat::{rat, rat_int, ratio_or_zero, Rat};

/// Hard cap on information-matrix order for determinant work; Bareiss
/// elimination on exact integers is comfortable well past the sizes the
/// standard scenarios produce, but unbounded orders would silently eat time.
pub const DET_ORDER_CAP: usize = 30;

/// How a criterion value was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    /// Spectrum-based closed form.
    ClosedForm,
    /// Direct enumeration of the model distribution.
    Oracle,
}

/// An exact criterion value with its identifying tag.
#[derive(Clone, PartialEq, Debug)]
pub struct CriterionValue {
    pub label: String,
    pub value: Rat,
    pub provenance: Provenance,
}

/// The information matrix `M = (1/n) X'X`, stored exactly as the integer
/// matrix `n·M` of J-values plus the run count.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InformationMatrix {
    n: u64,
    effects: Vec<SubsetIndex>,
    /// Row-major `j_{e_i △ e_j}`; diagonal entries are all `n`.
    entries: Vec<i64>,
}

impl InformationMatrix {
    /// Builds from raw J-values, validating shape, symmetry, and that the
    /// diagonal equals `n` (every effect column has unit squared length).
    pub fn from_j_entries(n: u64, effects: Vec<SubsetIndex>, entries: Vec<i64>) -> Result<Self> {
        let p = effects.len();
        if entries.len() != p * p {
            return Err(Error::InvalidConfig(format!(
                "{} entries do not fill a {p}×{p} matrix",
                entries.len()
            )));
        }
        for r in 0..p {
            if entries[r * p + r] != n as i64 {
                return Err(Error::InvalidConfig(format!(
                    "diagonal entry {r} is {} but n = {n}",
                    entries[r * p + r]
                )));
            }
            for c in 0..r {
                if entries[r * p + c] != entries[c * p + r] {
                    return Err(Error::InvalidConfig(format!(
                        "entries ({r},{c}) and ({c},{r}) disagree"
                    )));
                }
            }
        }
        Ok(InformationMatrix {
            n,
            effects,
            entries,
        })
    }

    /// Matrix order `p = 1 + m + f + g`.
    pub fn order(&self) -> usize {
        self.effects.len()
    }

    pub fn runs(&self) -> u64 {
        self.n
    }

    /// Effect subsets labelling rows/columns: intercept, main effects,
    /// two-factor then three-factor interactions.
    pub fn effects(&self) -> &[SubsetIndex] {
        &self.effects
    }

    /// Integer entry `n·M[r][c] = j_{e_r △ e_c}`.
    pub fn j_entry(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.order() + c]
    }

    /// Exact entry `M[r][c]`.
    pub fn entry(&self, r: usize, c: usize) -> Rat {
        Rat::new(BigInt::from(self.j_entry(r, c)), BigInt::from(self.n))
    }

    /// Sum of squared off-diagonal entries, exactly.
    pub fn ss_offdiagonal(&self) -> Rat {
        let p = self.order();
        let mut sum: u128 = 0;
        for r in 0..p {
            for c in 0..p {
                if r != c {
                    let j = self.entries[r * p + c] as i128;
                    sum += (j * j) as u128;
                }
            }
        }
        Rat::new(
            BigInt::from(sum),
            BigInt::from(self.n as u128 * self.n as u128),
        )
    }

    /// Exact determinant via fraction-free (Bareiss) elimination on the
    /// integer matrix `n·M`, then division by `n^p`.
    pub fn det_fraction_free(&self) -> Rat {
        let p = self.order();
        let mat: Vec<Vec<BigInt>> = (0..p)
            .map(|r| (0..p).map(|c| BigInt::from(self.j_entry(r, c))).collect())
            .collect();
        let det = bareiss_det(mat);
        let mut denom = BigInt::one();
        for _ in 0..p {
            denom *= BigInt::from(self.n);
        }
        Rat::new(det, denom)
    }
}

/// Fraction-free Gaussian elimination: every intermediate value is an exact
/// integer (a minor of the input), so no rational arithmetic is needed and
/// entries stay polynomially sized.
fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let p = a.len();
    if p == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..p - 1 {
        if a[k][k].is_zero() {
            match (k + 1..p).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..p {
            for j in k + 1..p {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // Exact by the Sylvester identity; `prev` divides `num`.
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = std::mem::take(&mut a[p - 1][p - 1]);
    if negate {
        -det
    } else {
        det
    }
}

/// Information matrix of a design under one model pair. Effects are ordered
/// intercept, main effects, pairs, triples; entry `(A,B)` is `j_{A△B}/n`.
pub fn information_matrix(design: &Design, model: &ModelPair) -> Result<InformationMatrix> {
    let m = design.factors();
    if model.min_factors() > m {
        return Err(Error::FactorMismatch(format!(
            "model references factor {} but the design has {m}",
            model.min_factors()
        )));
    }
    let mut effects = Vec::with_capacity(1 + m + model.f() + model.g());
    effects.push(SubsetIndex::EMPTY);
    for j in 0..m {
        effects.push(SubsetIndex::from_bits(1 << j));
    }
    effects.extend_from_slice(model.pairs().members());
    effects.extend_from_slice(model.triples().members());

    let jv = design.j_vector();
    let p = effects.len();
    let mut entries = vec![0i64; p * p];
    for r in 0..p {
        for c in 0..p {
            entries[r * p + c] = jv.get(effects[r].symmetric_difference(effects[c]));
        }
    }
    InformationMatrix::from_j_entries(design.runs() as u64, effects, entries)
}

/// Free-function form of [`InformationMatrix::ss_offdiagonal`].
pub fn ss_offdiagonal(matrix: &InformationMatrix) -> Rat {
    matrix.ss_offdiagonal()
}

/// `S²` by direct enumeration: the expectation over the model distribution
/// of the sum of squared off-diagonal information-matrix entries. Exact and
/// scenario-agnostic; the reference the closed forms are tested against.
pub fn s2_oracle(design: &Design, dist: &ModelDistribution) -> Result<CriterionValue> {
    if dist.factors() != design.factors() {
        return Err(Error::FactorMismatch(format!(
            "distribution is over {} factors, design has {}",
            dist.factors(),
            design.factors()
        )));
    }
    let mut acc = Rat::zero();
    dist.for_each(|mp, w| {
        let im = information_matrix(design, mp)?;
        acc += w * im.ss_offdiagonal();
        Ok(())
    })?;
    Ok(CriterionValue {
        label: format!("s2[{}]", dist.label()),
        value: acc,
        provenance: Provenance::Oracle,
    })
}

/// Expected determinant of the information matrix under a model
/// distribution. No spectrum shortcut exists here; every support point is
/// evaluated exactly with fraction-free elimination.
pub fn d_fg(design: &Design, dist: &ModelDistribution) -> Result<Rat> {
    if dist.factors() != design.factors() {
        return Err(Error::FactorMismatch(format!(
            "distribution is over {} factors, design has {}",
            dist.factors(),
            design.factors()
        )));
    }
    let mut acc = Rat::zero();
    dist.for_each(|mp, w| {
        let im = information_matrix(design, mp)?;
        if im.order() > DET_ORDER_CAP {
            return Err(Error::OrderCap {
                order: im.order(),
                cap: DET_ORDER_CAP,
            });
        }
        acc += w * im.det_fraction_free();
        Ok(())
    })?;
    Ok(acc)
}

/// The scenarios whose `S²` admits a spectrum closed form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClosedFormCriterion {
    /// `f` two-factor interactions uniform, no triples.
    PairsOnly { f: usize },
    /// All two-factor interactions plus `g` uniform three-factor ones.
    AllPairsTriples { g: usize },
    /// One uniform triple with its three margins.
    ThreeOne,
}

impl ClosedFormCriterion {
    /// Stable tag used by configuration and reports.
    pub fn label(&self) -> String {
        match self {
            ClosedFormCriterion::PairsOnly { f } => format!("sf0:f={f}"),
            ClosedFormCriterion::AllPairsTriples { g } => format!("sfg:g={g}"),
            ClosedFormCriterion::ThreeOne => "s31".to_string(),
        }
    }

    /// Spectrum coefficients of this criterion at `m` factors.
    pub fn coefficients(&self, m: usize) -> Result<CriterionCoefficients> {
        match *self {
            ClosedFormCriterion::PairsOnly { f } => coefficients_sf0(m, f),
            ClosedFormCriterion::AllPairsTriples { g } => coefficients_sfg(m, g),
            ClosedFormCriterion::ThreeOne => coefficients_s31(m),
        }
    }

    /// The model distribution this closed form averages over.
    pub fn distribution(&self, m: usize) -> Result<ModelDistribution> {
        let scenario = match *self {
            ClosedFormCriterion::PairsOnly { f } => Scenario::UniformPairs { f },
            ClosedFormCriterion::AllPairsTriples { g } => Scenario::AllPairsUniformTriples { g },
            ClosedFormCriterion::ThreeOne => Scenario::Hierarchical31,
        };
        ModelDistribution::new(m, scenario)
    }
}

/// Exact spectrum coefficients `a_1..a_6` of a closed-form criterion:
/// `S² = Σ_s a_s B_s` (terms with `s > m` vanish since `B_s = 0`).
#[derive(Clone, Debug)]
pub struct CriterionCoefficients {
    m: usize,
    criterion: ClosedFormCriterion,
    a: [Rat; 6],
}

impl CriterionCoefficients {
    pub fn factors(&self) -> usize {
        self.m
    }

    pub fn criterion(&self) -> ClosedFormCriterion {
        self.criterion
    }

    /// Coefficient `a_s` for `s` in `1..=6`.
    pub fn a(&self, s: usize) -> &Rat {
        assert!((1..=6).contains(&s), "coefficient index {s} outside 1..=6");
        &self.a[s - 1]
    }

    /// All six coefficients, `a_1` first.
    pub fn values(&self) -> &[Rat; 6] {
        &self.a
    }

    /// `Σ_s a_s B_s` against a spectrum of the same factor count.
    pub fn evaluate(&self, spectrum: &BsSpectrum) -> Result<Rat> {
        if spectrum.factors() != self.m {
            return Err(Error::FactorMismatch(format!(
                "coefficients are for m = {}, spectrum has m = {}",
                self.m,
                spectrum.factors()
            )));
        }
        let mut acc = Rat::zero();
        for s in 1..=6usize.min(self.m) {
            if !self.a[s - 1].is_zero() {
                acc += &self.a[s - 1] * spectrum.value(s);
            }
        }
        Ok(acc)
    }

    /// Integer form for fast exact search keys: returns `(w, scale)` with
    /// `w_s = a_s · scale` integral, so
    /// `S² · scale · n² = Σ_s w_s · (Σ_{|S|=s} j_S²)` is a plain integer.
    /// All coefficients are nonnegative, and sizes are bounded well inside
    /// `u128` for `m ≤ 16`.
    pub fn scaled_integer_weights(&self) -> (Vec<u128>, u128) {
        let mut scale = BigInt::one();
        for a in &self.a {
            scale = scale.lcm(a.denom());
        }
        debug_assert!(scale.is_positive());
        let weights = self
            .a
            .iter()
            .map(|a| {
                let w = (a * Rat::from_integer(scale.clone())).to_integer();
                debug_assert!(!w.is_negative());
                w.to_u128().expect("scaled coefficient fits u128")
            })
            .collect();
        (weights, scale.to_u128().expect("scale fits u128"))
    }
}

/// Coefficients of `S²` for the pairs-only scenario (`f` uniform two-factor
/// interactions, no triples), `2 ≤ m ≤ 16`, `0 ≤ f ≤ C(m,2)`:
///
/// ```text
/// a1 = 2(1 + f(m−1)/F)
/// a2 = 2(1 + f/F + f(f−1)(m−2)/(F(F−1)))
/// a3 = 6f/F
/// a4 = 6f(f−1)/(F(F−1))        (F = C(m,2); a5 = a6 = 0)
/// ```
pub fn coefficients_sf0(m: usize, f: usize) -> Result<CriterionCoefficients> {
    if m < 2 {
        return Err(Error::InfeasibleScenario(format!(
            "pairs-only coefficients need m ≥ 2, got {m}"
        )));
    }
    ScenarioCounts::new(m, f, 0)?;
    let mm = m as i64;
    let ff = f as i64;
    let big_f = mm * (mm - 1) / 2;
    let a1 = rat_int(2) + ratio_or_zero(2 * ff * (mm - 1), big_f);
    let a2 = rat_int(2)
        + ratio_or_zero(2 * ff, big_f)
        + ratio_or_zero(2 * ff * (ff - 1) * (mm - 2), big_f * (big_f - 1));
    let a3 = ratio_or_zero(6 * ff, big_f);
    let a4 = ratio_or_zero(6 * ff * (ff - 1), big_f * (big_f - 1));
    Ok(CriterionCoefficients {
        m,
        criterion: ClosedFormCriterion::PairsOnly { f },
        a: [a1, a2, a3, a4, Rat::zero(), Rat::zero()],
    })
}

/// Coefficients of `S²` for the all-pairs-plus-triples scenario (every
/// two-factor interaction, `g` uniform three-factor ones), `3 ≤ m ≤ 16`,
/// `0 ≤ g ≤ C(m,3)`:
///
/// ```text
/// a1 = 2m + g(m−1)(m−2)/G
/// a2 = 2m + 2g(m−2)/G + g(g−1)(m−2)(m−3)/(G(G−1))
/// a3 = 6 + 2g/G + 6g(m−3)/G
/// a4 = 6 + 8g/G + 6g(g−1)(m−4)/(G(G−1))
/// a5 = 20g/G
/// a6 = 20g(g−1)/(G(G−1))       (G = C(m,3))
/// ```
pub fn coefficients_sfg(m: usize, g: usize) -> Result<CriterionCoefficients> {
    if m < 3 {
        return Err(Error::InfeasibleScenario(format!(
            "all-pairs coefficients need m ≥ 3, got {m}"
        )));
    }
    ScenarioCounts::new(m, 0, g)?;
    let mm = m as i64;
    let gg = g as i64;
    let big_g = mm * (mm - 1) * (mm - 2) / 6;
    let a1 = rat_int(2 * mm) + ratio_or_zero(gg * (mm - 1) * (mm - 2), big_g);
    let a2 = rat_int(2 * mm)
        + ratio_or_zero(2 * gg * (mm - 2), big_g)
        + ratio_or_zero(gg * (gg - 1) * (mm - 2) * (mm - 3), big_g * (big_g - 1));
    let a3 = rat_int(6) + ratio_or_zero(2 * gg, big_g) + ratio_or_zero(6 * gg * (mm - 3), big_g);
    let a4 = rat_int(6)
        + ratio_or_zero(8 * gg, big_g)
        + ratio_or_zero(6 * gg * (gg - 1) * (mm - 4), big_g * (big_g - 1));
    let a5 = ratio_or_zero(20 * gg, big_g);
    let a6 = ratio_or_zero(20 * gg * (gg - 1), big_g * (big_g - 1));
    Ok(CriterionCoefficients {
        m,
        criterion: ClosedFormCriterion::AllPairsTriples { g },
        a: [a1, a2, a3, a4, a5, a6],
    })
}

/// Coefficients of `S²` for the one-triple-with-margins scenario,
/// `3 ≤ m ≤ 16`:
///
/// ```text
/// a1 = 2(1 + 9/m)
/// a2 = 2 + 6(m−2)/G
/// a3 = 2(3m−5)/G
/// a4 = 8/G                     (G = C(m,3); a5 = a6 = 0)
/// ```
///
/// `a2` collects one aggregate per off-diagonal class touching the pair
/// effects: main-effect column products contribute `2` over the full pair
/// pool, while the margin-restricted classes (intercept × pair,
/// main effect × triple, pair × pair) each contribute `2(m−2)/G` because a
/// given pair lies under `m−2` of the `G` equiprobable triples. The sum is
/// pinned down by the expectation oracle: on the one-run design every
/// `J_S = 1` and the off-diagonal count forces `Σ a_s·B_s = (m+5)(m+4)`,
/// which only these coefficients satisfy.
pub fn coefficients_s31(m: usize) -> Result<CriterionCoefficients> {
    if m < 3 {
        return Err(Error::InfeasibleScenario(format!(
            "the triple-plus-margins criterion needs m ≥ 3, got {m}"
        )));
    }
    if m > crate::design::MAX_FACTORS {
        return Err(Error::InfeasibleScenario(format!(
            "factor count {m} outside 1..={}",
            crate::design::MAX_FACTORS
        )));
    }
    let mm = m as i64;
    let big_g = mm * (mm - 1) * (mm - 2) / 6;
    let a1 = rat_int(2) + rat(18, mm);
    let a2 = rat_int(2) + rat(6 * (mm - 2), big_g);
    let a3 = rat(2 * (3 * mm - 5), big_g);
    let a4 = rat(8, big_g);
    Ok(CriterionCoefficients {
        m,
        criterion: ClosedFormCriterion::ThreeOne,
        a: [a1, a2, a3, a4, Rat::zero(), Rat::zero()],
    })
}

/// `S²` from the spectrum closed form. Exact; equals [`s2_oracle`] on the
/// criterion's distribution.
pub fn closed_form_s2(design: &Design, coeffs: &CriterionCoefficients) -> Result<CriterionValue> {
    let value = coeffs.evaluate(&design.bs_spectrum())?;
    Ok(CriterionValue {
        label: format!("s2[{}]", coeffs.criterion().label()),
        value,
        provenance: Provenance::ClosedForm,
    })
}

/// Generalized minimum aberration comparison: lexicographic order on
/// `(B_1, …, B_m)`, smaller is better. `Less` means `a` is preferred.
pub fn gma_compare(a: &Design, b: &Design) -> Result<Ordering> {
    if a.factors() != b.factors() {
        return Err(Error::FactorMismatch(format!(
            "cannot compare designs with {} and {} factors",
            a.factors(),
            b.factors()
        )));
    }
    Ok(a.bs_spectrum()
        .gma_cmp(&b.bs_spectrum())
        .expect("factor counts match"))
}

/// Outcome of checking one coefficient-ordering proposition at a given `m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PropositionCheck {
    /// 1: pairs-only ordering `a1 > a2 > a3 > a4` for `1 ≤ f < F`, `m > 3`.
    /// 2: all-pairs ordering `a1 > … > a6` for `1 ≤ g < G`, `m > 5`.
    /// 3: triple-with-margins ordering `a1 > a2 > a3 > a4`, `m > 3`.
    pub proposition: u8,
    /// Whether `m` is inside the proposition's stated range.
    pub applicable: bool,
    /// Strict-inequality failures inside the stated range (empty = holds).
    pub violations: Vec<String>,
    /// Equalities observed at the boundary parameter (`f = F` or `g = G`),
    /// where the strict ordering intentionally degenerates.
    pub boundary_equalities: Vec<String>,
}

/// Results of checking all three orderings at one factor count.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PropositionReport {
    pub m: usize,
    pub checks: Vec<PropositionCheck>,
}

impl PropositionReport {
    /// True when every applicable proposition held strictly in range.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.violations.is_empty())
    }
}

fn chain_violations(names: &[&str], values: &[&Rat], context: &str) -> Vec<String> {
    let mut out = Vec::new();
    for w in 0..values.len() - 1 {
        if values[w] <= values[w + 1] {
            out.push(format!(
                "{context}: {} ≤ {} ({} ≤ {})",
                names[w],
                names[w + 1],
                values[w],
                values[w + 1]
            ));
        }
    }
    out
}

/// Checks the three coefficient-ordering propositions at `m` factors,
/// sweeping the full parameter ranges and recording boundary equalities.
pub fn check_proposition_orderings(m: usize) -> Result<PropositionReport> {
    if !(2..=crate::design::MAX_FACTORS).contains(&m) {
        return Err(Error::InvalidConfig(format!(
            "proposition checks need 2 ≤ m ≤ {}, got {m}",
            crate::design::MAX_FACTORS
        )));
    }
    let big_f = m * (m - 1) / 2;
    let big_g = if m >= 3 { m * (m - 1) * (m - 2) / 6 } else { 0 };

    // Proposition 1: pairs-only, strict for 1 ≤ f < F when m > 3.
    let mut p1 = PropositionCheck {
        proposition: 1,
        applicable: m > 3,
        violations: Vec::new(),
        boundary_equalities: Vec::new(),
    };
    if p1.applicable {
        for f in 1..big_f {
            let c = coefficients_sf0(m, f)?;
            p1.violations.extend(chain_violations(
                &["a1", "a2", "a3", "a4"],
                &[c.a(1), c.a(2), c.a(3), c.a(4)],
                &format!("f={f}"),
            ));
        }
        let c = coefficients_sf0(m, big_f)?;
        if c.a(1) == c.a(2) {
            p1.boundary_equalities.push(format!("f=F={big_f}: a1 = a2"));
        }
        if c.a(3) == c.a(4) {
            p1.boundary_equalities.push(format!("f=F={big_f}: a3 = a4"));
        }
    }

    // Proposition 2: all-pairs, strict for 1 ≤ g < G when m > 5.
    let mut p2 = PropositionCheck {
        proposition: 2,
        applicable: m > 5,
        violations: Vec::new(),
        boundary_equalities: Vec::new(),
    };
    if p2.applicable {
        for g in 1..big_g {
            let c = coefficients_sfg(m, g)?;
            p2.violations.extend(chain_violations(
                &["a1", "a2", "a3", "a4", "a5", "a6"],
                &[c.a(1), c.a(2), c.a(3), c.a(4), c.a(5), c.a(6)],
                &format!("g={g}"),
            ));
        }
        let c = coefficients_sfg(m, big_g)?;
        for (lo, hi) in [(1, 2), (3, 4), (5, 6)] {
            if c.a(lo) == c.a(hi) {
                p2.boundary_equalities
                    .push(format!("g=G={big_g}: a{lo} = a{hi}"));
            }
        }
    }

    // Proposition 3: triple-with-margins, strict a1 > a2 > a3 > a4 when
    // m > 3 (at m = 3 all four coefficients coincide at 8, reported as
    // boundary equalities).
    let mut p3 = PropositionCheck {
        proposition: 3,
        applicable: m > 3,
        violations: Vec::new(),
        boundary_equalities: Vec::new(),
    };
    if p3.applicable {
        let c = coefficients_s31(m)?;
        p3.violations.extend(chain_violations(
            &["a1", "a2", "a3", "a4"],
            &[c.a(1), c.a(2), c.a(3), c.a(4)],
            "s31",
        ));
    } else if m == 3 {
        let c = coefficients_s31(3)?;
        for (lo, hi) in [(1, 2), (2, 3), (3, 4)] {
            if c.a(lo) == c.a(hi) {
                p3.boundary_equalities.push(format!("m=3: a{lo} = a{hi}"));
            }
        }
    }

    Ok(PropositionReport {
        m,
        checks: vec![p1, p2, p3],
    })
}
