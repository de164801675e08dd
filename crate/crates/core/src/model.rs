//! Candidate model pairs and probability distributions over model spaces.
//!
//! A *model pair* `(F, G)` is a set of two-factor interactions `F` and a set
//! of three-factor interactions `G`; the fitted model is always main effects
//! plus the interactions named by the pair. Robustness criteria average over
//! a distribution on model pairs; this module provides the standard
//! scenarios with streaming enumeration so nothing materializes the whole
//! support unless a caller collects it.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::design::{SubsetIndex, MAX_FACTORS};
use crate::error::{Error, Result};
use crate::rat::{binomial, Rat};

pub use crate::rat::parse_rat as parse_rational;

/// A sorted, duplicate-free set of two-factor interaction subsets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct PairSet {
    members: Vec<SubsetIndex>,
}

/// A sorted, duplicate-free set of three-factor interaction subsets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct TripleSet {
    members: Vec<SubsetIndex>,
}

fn normalize_subsets(mut members: Vec<SubsetIndex>, card: usize) -> Result<Vec<SubsetIndex>> {
    for s in &members {
        if s.cardinality() != card {
            return Err(Error::InvalidSubset(format!(
                "subset {s} has {} factors, expected {card}",
                s.cardinality()
            )));
        }
    }
    members.sort_unstable();
    if members.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidSubset("duplicate subset in set".into()));
    }
    Ok(members)
}

impl PairSet {
    pub fn new(members: Vec<SubsetIndex>) -> Result<Self> {
        Ok(PairSet {
            members: normalize_subsets(members, 2)?,
        })
    }

    /// Builds from 0-based index pairs.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        let members = pairs
            .iter()
            .map(|&(i, j)| SubsetIndex::from_members(&[i, j]))
            .collect::<Result<Vec<_>>>()?;
        PairSet::new(members)
    }

    /// Every two-subset of `0..m`, ascending by bit pattern.
    pub fn all_pairs(m: usize) -> Self {
        PairSet {
            members: all_pair_subsets(m),
        }
    }

    pub fn members(&self) -> &[SubsetIndex] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: SubsetIndex) -> bool {
        self.members.binary_search(&s).is_ok()
    }
}

impl TripleSet {
    pub fn new(members: Vec<SubsetIndex>) -> Result<Self> {
        Ok(TripleSet {
            members: normalize_subsets(members, 3)?,
        })
    }

    /// Builds from 0-based index triples.
    pub fn from_triples(triples: &[(usize, usize, usize)]) -> Result<Self> {
        let members = triples
            .iter()
            .map(|&(i, j, k)| SubsetIndex::from_members(&[i, j, k]))
            .collect::<Result<Vec<_>>>()?;
        TripleSet::new(members)
    }

    /// Every three-subset of `0..m`, ascending by bit pattern.
    pub fn all_triples(m: usize) -> Self {
        TripleSet {
            members: all_triple_subsets(m),
        }
    }

    pub fn members(&self) -> &[SubsetIndex] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: SubsetIndex) -> bool {
        self.members.binary_search(&s).is_ok()
    }
}

fn all_pair_subsets(m: usize) -> Vec<SubsetIndex> {
    let mut v = Vec::new();
    for j in 1..m {
        for i in 0..j {
            v.push(SubsetIndex::from_bits((1 << i) | (1 << j)));
        }
    }
    v.sort_unstable();
    v
}

fn all_triple_subsets(m: usize) -> Vec<SubsetIndex> {
    let mut v = Vec::new();
    for k in 2..m {
        for j in 1..k {
            for i in 0..j {
                v.push(SubsetIndex::from_bits((1 << i) | (1 << j) | (1 << k)));
            }
        }
    }
    v.sort_unstable();
    v
}

/// The three two-subsets of a three-subset.
fn pairs_of_triple(t: SubsetIndex) -> [SubsetIndex; 3] {
    let m = t.members();
    debug_assert_eq!(m.len(), 3);
    [
        SubsetIndex::from_bits((1 << m[0]) | (1 << m[1])),
        SubsetIndex::from_bits((1 << m[0]) | (1 << m[2])),
        SubsetIndex::from_bits((1 << m[1]) | (1 << m[2])),
    ]
}

/// One candidate model: main effects plus the two-factor interactions in
/// `pairs` and the three-factor interactions in `triples`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ModelPair {
    pairs: PairSet,
    triples: TripleSet,
}

impl ModelPair {
    pub fn new(pairs: PairSet, triples: TripleSet) -> Self {
        ModelPair { pairs, triples }
    }

    pub(crate) fn from_sorted_parts(pairs: Vec<SubsetIndex>, triples: Vec<SubsetIndex>) -> Self {
        debug_assert!(pairs.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(triples.windows(2).all(|w| w[0] < w[1]));
        ModelPair {
            pairs: PairSet { members: pairs },
            triples: TripleSet { members: triples },
        }
    }

    pub fn pairs(&self) -> &PairSet {
        &self.pairs
    }

    pub fn triples(&self) -> &TripleSet {
        &self.triples
    }

    /// Number of two-factor interactions `f`.
    pub fn f(&self) -> usize {
        self.pairs.len()
    }

    /// Number of three-factor interactions `g`.
    pub fn g(&self) -> usize {
        self.triples.len()
    }

    /// Largest factor index referenced, plus one; 0 for the empty model.
    pub fn min_factors(&self) -> usize {
        self.pairs
            .members()
            .iter()
            .chain(self.triples.members())
            .map(|s| s.members().last().map_or(0, |&j| j + 1))
            .max()
            .unwrap_or(0)
    }
}

/// A model pair obeys effect hierarchy when every three-factor interaction
/// brings all three of its two-factor margins along.
pub fn is_hierarchically_consistent(mp: &ModelPair) -> bool {
    mp.triples()
        .members()
        .iter()
        .all(|&t| pairs_of_triple(t).iter().all(|&p| mp.pairs().contains(p)))
}

/// Sizes that parametrize a scenario: `m` factors, `f` two-factor and `g`
/// three-factor interactions, with `F = C(m,2)` and `G = C(m,3)` the pool
/// sizes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ScenarioCounts {
    pub m: usize,
    pub f: usize,
    pub g: usize,
}

impl ScenarioCounts {
    pub fn new(m: usize, f: usize, g: usize) -> Result<Self> {
        let c = ScenarioCounts { m, f, g };
        if m == 0 || m > MAX_FACTORS {
            return Err(Error::InfeasibleScenario(format!(
                "factor count {m} outside 1..={MAX_FACTORS}"
            )));
        }
        if BigUint::from(f) > c.pair_pool() {
            return Err(Error::InfeasibleScenario(format!(
                "f = {f} exceeds the {} two-subsets of {m} factors",
                c.pair_pool()
            )));
        }
        if BigUint::from(g) > c.triple_pool() {
            return Err(Error::InfeasibleScenario(format!(
                "g = {g} exceeds the {} three-subsets of {m} factors",
                c.triple_pool()
            )));
        }
        Ok(c)
    }

    /// `F = C(m, 2)`.
    pub fn pair_pool(&self) -> BigUint {
        binomial(self.m as u64, 2)
    }

    /// `G = C(m, 3)`.
    pub fn triple_pool(&self) -> BigUint {
        binomial(self.m as u64, 3)
    }
}

/// The supported model-space scenarios.
#[derive(Clone, PartialEq, Debug)]
pub enum Scenario {
    /// `f` two-factor interactions drawn uniformly from all `C(F, f)`
    /// subsets; no three-factor interactions.
    UniformPairs { f: usize },
    /// All `F` two-factor interactions always present; `g` three-factor
    /// interactions drawn uniformly from all `C(G, g)` subsets.
    AllPairsUniformTriples { g: usize },
    /// One three-factor interaction uniform over the `G` triples, together
    /// with exactly its three two-factor margins (`f = 3`, `g = 1`,
    /// hierarchy holds by construction).
    Hierarchical31,
    /// Uniform over *all* hierarchically consistent pairs with exactly `f`
    /// two-factor and `g` three-factor interactions.
    HierarchicalJoint { f: usize, g: usize },
    /// Two-stage uniform: first the `g` triples uniform over feasible
    /// choices, then the remaining two-factor interactions uniform given
    /// the triples. Differs from [`Scenario::HierarchicalJoint`] whenever
    /// feasible triple choices admit different numbers of completions.
    HierarchicalTriplesFirst { f: usize, g: usize },
    /// Arbitrary positive weights summing to one.
    Explicit(Vec<(ModelPair, Rat)>),
}

/// A validated probability distribution over model pairs for `m` factors.
#[derive(Clone, PartialEq, Debug)]
pub struct ModelDistribution {
    m: usize,
    scenario: Scenario,
}

impl ModelDistribution {
    pub fn new(m: usize, scenario: Scenario) -> Result<Self> {
        if m == 0 || m > MAX_FACTORS {
            return Err(Error::InfeasibleScenario(format!(
                "factor count {m} outside 1..={MAX_FACTORS}"
            )));
        }
        match &scenario {
            Scenario::UniformPairs { f } => {
                ScenarioCounts::new(m, *f, 0)?;
            }
            Scenario::AllPairsUniformTriples { g } => {
                ScenarioCounts::new(m, 0, *g)?;
            }
            Scenario::Hierarchical31 => {
                if m < 3 {
                    return Err(Error::InfeasibleScenario(format!(
                        "the triple-plus-margins scenario needs m ≥ 3, got {m}"
                    )));
                }
            }
            Scenario::HierarchicalJoint { f, g } | Scenario::HierarchicalTriplesFirst { f, g } => {
                ScenarioCounts::new(m, *f, *g)?;
                // A g-set of triples covers at least 3 pairs when g ≥ 1;
                // deeper feasibility (does any g-set cover ≤ f pairs?) is
                // established during enumeration, which reports an empty
                // support as an error.
                if *g >= 1 && *f < 3 {
                    return Err(Error::InfeasibleScenario(format!(
                        "hierarchy needs f ≥ 3 to support any triple, got f = {f}"
                    )));
                }
            }
            Scenario::Explicit(entries) => {
                if entries.is_empty() {
                    return Err(Error::EmptySupport);
                }
                let mut total = Rat::zero();
                for (mp, w) in entries {
                    if mp.min_factors() > m {
                        return Err(Error::FactorMismatch(format!(
                            "model references factor {} but the distribution has {m}",
                            mp.min_factors()
                        )));
                    }
                    if *w <= Rat::zero() {
                        return Err(Error::InvalidConfig(
                            "explicit model weights must be positive".into(),
                        ));
                    }
                    total += w;
                }
                if total != Rat::one() {
                    return Err(Error::InvalidConfig(format!(
                        "explicit model weights sum to {total}, expected 1"
                    )));
                }
            }
        }
        Ok(ModelDistribution { m, scenario })
    }

    pub fn factors(&self) -> usize {
        self.m
    }

    pub fn scenario(&self) -> &Scenario {
        &self.scenario
    }

    /// Short stable tag for reports.
    pub fn label(&self) -> String {
        match &self.scenario {
            Scenario::UniformPairs { f } => format!("sf0:f={f}"),
            Scenario::AllPairsUniformTriples { g } => format!("sfg:g={g}"),
            Scenario::Hierarchical31 => "s31".to_string(),
            Scenario::HierarchicalJoint { f, g } => format!("hier-joint:f={f},g={g}"),
            Scenario::HierarchicalTriplesFirst { f, g } => {
                format!("hier-triples:f={f},g={g}")
            }
            Scenario::Explicit(entries) => format!("weights[{}]", entries.len()),
        }
    }

    /// Cheap upper bound on the support size (exact except for the
    /// hierarchical scenarios, where it ignores feasibility pruning).
    pub fn support_upper_bound(&self) -> BigUint {
        let counts = |f: usize, g: usize| {
            let big_f = binomial(self.m as u64, 2);
            let big_g = binomial(self.m as u64, 3);
            (big_f, big_g, f as u64, g as u64)
        };
        match &self.scenario {
            Scenario::UniformPairs { f } => {
                let (big_f, _, f, _) = counts(*f, 0);
                binomial(biguint_to_u64(&big_f), f)
            }
            Scenario::AllPairsUniformTriples { g } => {
                let (_, big_g, _, g) = counts(0, *g);
                binomial(biguint_to_u64(&big_g), g)
            }
            Scenario::Hierarchical31 => binomial(self.m as u64, 3),
            Scenario::HierarchicalJoint { f, g } | Scenario::HierarchicalTriplesFirst { f, g } => {
                let (big_f, big_g, f, g) = counts(*f, *g);
                binomial(biguint_to_u64(&big_g), g) * binomial(biguint_to_u64(&big_f), f)
            }
            Scenario::Explicit(entries) => BigUint::from(entries.len()),
        }
    }

    /// Exact number of models in the support. For the hierarchical
    /// scenarios this walks the `C(G, g)` triple choices (not the full
    /// support), so cost grows with `C(G, g)`.
    pub fn support_size(&self) -> BigUint {
        match &self.scenario {
            Scenario::UniformPairs { .. }
            | Scenario::AllPairsUniformTriples { .. }
            | Scenario::Hierarchical31
            | Scenario::Explicit(_) => self.support_upper_bound(),
            Scenario::HierarchicalJoint { f, g } | Scenario::HierarchicalTriplesFirst { f, g } => {
                self.hier_totals(*f, *g).0
            }
        }
    }

    /// Streams `(model, weight)` over the support. Weights are exact and sum
    /// to one. Fails with [`Error::EmptySupport`] when nothing is feasible.
    pub fn for_each<F>(&self, mut visit: F) -> Result<()>
    where
        F: FnMut(&ModelPair, &Rat) -> Result<()>,
    {
        let mut emitted = false;
        match &self.scenario {
            Scenario::UniformPairs { f } => {
                let pool = all_pair_subsets(self.m);
                let total = binomial(pool.len() as u64, *f as u64);
                let w = uniform_weight(&total);
                for combo in pool.iter().copied().combinations(*f) {
                    let mp = ModelPair::from_sorted_parts(combo, vec![]);
                    visit(&mp, &w)?;
                    emitted = true;
                }
            }
            Scenario::AllPairsUniformTriples { g } => {
                let pairs = all_pair_subsets(self.m);
                let pool = all_triple_subsets(self.m);
                let total = binomial(pool.len() as u64, *g as u64);
                let w = uniform_weight(&total);
                for combo in pool.iter().copied().combinations(*g) {
                    let mp = ModelPair::from_sorted_parts(pairs.clone(), combo);
                    visit(&mp, &w)?;
                    emitted = true;
                }
            }
            Scenario::Hierarchical31 => {
                let pool = all_triple_subsets(self.m);
                let total = BigUint::from(pool.len());
                let w = uniform_weight(&total);
                for &t in &pool {
                    let mut margins = pairs_of_triple(t).to_vec();
                    margins.sort_unstable();
                    let mp = ModelPair::from_sorted_parts(margins, vec![t]);
                    visit(&mp, &w)?;
                    emitted = true;
                }
            }
            Scenario::HierarchicalJoint { f, g } => {
                let (total, _) = self.hier_totals(*f, *g);
                if total.is_zero() {
                    return Err(Error::EmptySupport);
                }
                let w = uniform_weight(&total);
                self.hier_stream(*f, *g, |mp, _ext_count| visit(mp, &w))?;
                emitted = true;
            }
            Scenario::HierarchicalTriplesFirst { f, g } => {
                let (_, feasible) = self.hier_totals(*f, *g);
                if feasible.is_zero() {
                    return Err(Error::EmptySupport);
                }
                self.hier_stream(*f, *g, |mp, ext_count| {
                    let den = BigInt::from(feasible.clone() * ext_count);
                    let w = Rat::new(BigInt::one(), den);
                    visit(mp, &w)
                })?;
                emitted = true;
            }
            Scenario::Explicit(entries) => {
                for (mp, w) in entries {
                    visit(mp, w)?;
                    emitted = true;
                }
            }
        }
        if emitted {
            Ok(())
        } else {
            Err(Error::EmptySupport)
        }
    }

    /// `(total completions, feasible triple choices)` for the hierarchical
    /// scenarios.
    fn hier_totals(&self, f: usize, g: usize) -> (BigUint, BigUint) {
        let pairs = all_pair_subsets(self.m);
        let triples = all_triple_subsets(self.m);
        let mut total = BigUint::zero();
        let mut feasible = BigUint::zero();
        for combo in triples.iter().copied().combinations(g) {
            let required = required_margins(&combo);
            if required.len() <= f {
                feasible += BigUint::one();
                total += binomial(
                    (pairs.len() - required.len()) as u64,
                    (f - required.len()) as u64,
                );
            }
        }
        (total, feasible)
    }

    /// Streams every hierarchically consistent `(F, G)` with the given
    /// sizes, passing each model and the completion count of its triple
    /// choice.
    fn hier_stream<F>(&self, f: usize, g: usize, mut visit: F) -> Result<()>
    where
        F: FnMut(&ModelPair, &BigUint) -> Result<()>,
    {
        let pairs = all_pair_subsets(self.m);
        for combo in all_triple_subsets(self.m).iter().copied().combinations(g) {
            let required = required_margins(&combo);
            if required.len() > f {
                continue;
            }
            let pool: Vec<SubsetIndex> = pairs
                .iter()
                .copied()
                .filter(|p| !required.contains(p))
                .collect();
            let ext_count = binomial(pool.len() as u64, (f - required.len()) as u64);
            for extras in pool.iter().copied().combinations(f - required.len()) {
                let mut members: Vec<SubsetIndex> =
                    required.iter().copied().chain(extras).collect();
                members.sort_unstable();
                let mp = ModelPair::from_sorted_parts(members, combo.clone());
                visit(&mp, &ext_count)?;
            }
        }
        Ok(())
    }

    /// Parses an explicit-weights file. Grammar per line:
    /// `WEIGHT : PAIR… [| TRIPLE…]` with subsets written `{i,j}` in 1-based
    /// indices, e.g. `1/10 : {1,2} {1,3} {2,3} | {1,2,3}`. `#` lines and
    /// blank lines are skipped. Weights must be positive and sum to one.
    pub fn parse_weights_file(m: usize, text: &str) -> Result<ModelDistribution> {
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (weight_text, rest) = line.split_once(':').ok_or_else(|| Error::Parse {
                line: line_no,
                message: "expected `WEIGHT : SUBSETS`".into(),
            })?;
            let weight = parse_rational(weight_text).ok_or_else(|| Error::Parse {
                line: line_no,
                message: format!("unreadable weight `{}`", weight_text.trim()),
            })?;
            let (pair_part, triple_part) = match rest.split_once('|') {
                Some((p, t)) => (p, t),
                None => (rest, ""),
            };
            let pairs = parse_subset_list(pair_part, 2, line_no)?;
            let triples = parse_subset_list(triple_part, 3, line_no)?;
            let mp = ModelPair::new(
                PairSet::new(pairs).map_err(|e| Error::Parse {
                    line: line_no,
                    message: e.to_string(),
                })?,
                TripleSet::new(triples).map_err(|e| Error::Parse {
                    line: line_no,
                    message: e.to_string(),
                })?,
            );
            entries.push((mp, weight));
        }
        ModelDistribution::new(m, Scenario::Explicit(entries))
    }
}

fn uniform_weight(total: &BigUint) -> Rat {
    Rat::new(BigInt::one(), BigInt::from(total.clone()))
}

fn biguint_to_u64(v: &BigUint) -> u64 {
    use num_traits::ToPrimitive;
    v.to_u64().expect("pool size fits u64 for m ≤ 16")
}

/// Union of the margins of a set of triples, sorted.
fn required_margins(triples: &[SubsetIndex]) -> Vec<SubsetIndex> {
    let mut set = BTreeSet::new();
    for &t in triples {
        set.extend(pairs_of_triple(t));
    }
    set.into_iter().collect()
}

/// Parses a whitespace-separated list of `{i,j,…}` subsets with the given
/// cardinality; indices are 1-based in the file.
fn parse_subset_list(text: &str, card: usize, line_no: usize) -> Result<Vec<SubsetIndex>> {
    let mut out = Vec::new();
    for token in text.split_whitespace() {
        let inner = token
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Parse {
                line: line_no,
                message: format!("expected `{{i,j}}` subset, found `{token}`"),
            })?;
        let mut members = Vec::new();
        for part in inner.split(',') {
            let idx: usize = part.trim().parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("unreadable factor index `{part}`"),
            })?;
            if idx == 0 {
                return Err(Error::Parse {
                    line: line_no,
                    message: "factor indices are 1-based".into(),
                });
            }
            members.push(idx - 1);
        }
        if members.len() != card {
            return Err(Error::Parse {
                line: line_no,
                message: format!(
                    "subset {token} has {} factors, expected {card}",
                    members.len()
                ),
            });
        }
        out.push(
            SubsetIndex::from_members(&members).map_err(|e| Error::Parse {
                line: line_no,
                message: e.to_string(),
            })?,
        );
    }
    Ok(out)
}
