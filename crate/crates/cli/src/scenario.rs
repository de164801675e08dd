//! Parsers for the criterion and scenario specifiers accepted on the
//! command line.

use std::fs;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use ffd_core::{ClosedFormCriterion, ModelDistribution, Scenario};

/// A model-space scenario as written on the command line. The factor count
/// is bound later, once the design file has been read.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ScenarioSpec {
    /// `sf0:f=N` — `N` two-factor interactions, uniform.
    PairsOnly { f: usize },
    /// `sfg:g=N` — all two-factor interactions plus `N` uniform triples.
    AllPairsTriples { g: usize },
    /// `s31` — one uniform triple with its three two-factor margins.
    ThreeOne,
    /// `hier-joint:f=A,g=B` — uniform over hierarchically consistent models.
    HierJoint { f: usize, g: usize },
    /// `hier-triples:f=A,g=B` — triples uniform first, completions second.
    HierTriplesFirst { f: usize, g: usize },
    /// `weights:PATH` — explicit weights file.
    Weights(PathBuf),
}

impl ScenarioSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let (head, rest) = match text.split_once(':') {
            Some((head, rest)) => (head, Some(rest)),
            None => (text, None),
        };
        match (head.to_ascii_lowercase().as_str(), rest) {
            ("s31", None) => Ok(ScenarioSpec::ThreeOne),
            ("sf0", Some(rest)) => Ok(ScenarioSpec::PairsOnly {
                f: parse_param(rest, "f")?,
            }),
            ("sfg", Some(rest)) => Ok(ScenarioSpec::AllPairsTriples {
                g: parse_param(rest, "g")?,
            }),
            ("hier-joint", Some(rest)) => {
                let (f, g) = parse_fg(rest)?;
                Ok(ScenarioSpec::HierJoint { f, g })
            }
            ("hier-triples", Some(rest)) => {
                let (f, g) = parse_fg(rest)?;
                Ok(ScenarioSpec::HierTriplesFirst { f, g })
            }
            ("weights", Some(rest)) if !rest.is_empty() => {
                Ok(ScenarioSpec::Weights(PathBuf::from(rest)))
            }
            _ => bail!(
                "unrecognized scenario `{text}`; expected s31, sf0:f=N, sfg:g=N, \
                 hier-joint:f=N,g=N, hier-triples:f=N,g=N, or weights:PATH"
            ),
        }
    }

    /// The matching spectrum closed form, when one exists.
    pub fn closed_form(&self) -> Option<ClosedFormCriterion> {
        match *self {
            ScenarioSpec::PairsOnly { f } => Some(ClosedFormCriterion::PairsOnly { f }),
            ScenarioSpec::AllPairsTriples { g } => Some(ClosedFormCriterion::AllPairsTriples { g }),
            ScenarioSpec::ThreeOne => Some(ClosedFormCriterion::ThreeOne),
            _ => None,
        }
    }

    /// Binds the scenario to `m` factors, reading the weights file if any.
    pub fn build(&self, m: usize) -> Result<ModelDistribution> {
        let scenario = match self {
            ScenarioSpec::PairsOnly { f } => Scenario::UniformPairs { f: *f },
            ScenarioSpec::AllPairsTriples { g } => Scenario::AllPairsUniformTriples { g: *g },
            ScenarioSpec::ThreeOne => Scenario::Hierarchical31,
            ScenarioSpec::HierJoint { f, g } => Scenario::HierarchicalJoint { f: *f, g: *g },
            ScenarioSpec::HierTriplesFirst { f, g } => {
                Scenario::HierarchicalTriplesFirst { f: *f, g: *g }
            }
            ScenarioSpec::Weights(path) => {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("reading weights file {}", path.display()))?;
                return ModelDistribution::parse_weights_file(m, &text)
                    .with_context(|| format!("parsing weights file {}", path.display()));
            }
        };
        Ok(ModelDistribution::new(m, scenario)?)
    }
}

/// One element of `--criteria`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EvalCriterion {
    /// `bs` — the aliasing spectrum `B_1..B_m`.
    Spectrum,
    /// `gma` — the generalized-minimum-aberration key `(B_1, …, B_m)`.
    GmaKey,
    /// `afd` — affine dimension and the full-dimensionality flag.
    Afd,
    /// `s31`, `sf0:f=…`, `sfg:g=…` — a spectrum closed form.
    ClosedForm(ClosedFormCriterion),
    /// `dfg:SCENARIO` — expected information determinant, by enumeration.
    ExpectedDeterminant(ScenarioSpec),
}

/// Expands `--criteria` tokens; `sf0:f=1..5` yields one entry per `f`.
pub fn parse_criteria(tokens: &[String]) -> Result<Vec<EvalCriterion>> {
    let mut out = Vec::new();
    for token in tokens {
        let (head, rest) = match token.split_once(':') {
            Some((head, rest)) => (head, Some(rest)),
            None => (token.as_str(), None),
        };
        match (head.to_ascii_lowercase().as_str(), rest) {
            ("bs", None) => out.push(EvalCriterion::Spectrum),
            ("gma", None) => out.push(EvalCriterion::GmaKey),
            ("afd", None) => out.push(EvalCriterion::Afd),
            ("s31", None) => out.push(EvalCriterion::ClosedForm(ClosedFormCriterion::ThreeOne)),
            ("sf0", Some(rest)) => {
                for f in parse_param_range(rest, "f")? {
                    out.push(EvalCriterion::ClosedForm(ClosedFormCriterion::PairsOnly {
                        f,
                    }));
                }
            }
            ("sfg", Some(rest)) => {
                for g in parse_param_range(rest, "g")? {
                    out.push(EvalCriterion::ClosedForm(
                        ClosedFormCriterion::AllPairsTriples { g },
                    ));
                }
            }
            ("dfg", Some(rest)) => {
                out.push(EvalCriterion::ExpectedDeterminant(ScenarioSpec::parse(
                    rest,
                )?));
            }
            _ => bail!(
                "unrecognized criterion `{token}`; expected bs, gma, afd, s31, \
                 sf0:f=N (or f=A..B), sfg:g=N (or g=A..B), or dfg:SCENARIO"
            ),
        }
    }
    Ok(out)
}

/// Search minimizes spectrum closed forms only.
pub fn parse_search_criterion(text: &str) -> Result<ClosedFormCriterion> {
    let spec = ScenarioSpec::parse(text).context("invalid --criterion")?;
    spec.closed_form().ok_or_else(|| {
        anyhow!("search needs a criterion with a spectrum closed form (s31, sf0:f=N, or sfg:g=N), got `{text}`")
    })
}

/// `A..B` (inclusive) or a single integer.
pub fn parse_inclusive_range(text: &str) -> Result<std::ops::RangeInclusive<usize>> {
    let parse = |s: &str| -> Result<usize> {
        s.trim()
            .parse()
            .map_err(|_| anyhow!("`{s}` is not a nonnegative integer"))
    };
    match text.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b)?);
            if a > b {
                bail!("empty range `{text}`");
            }
            Ok(a..=b)
        }
        None => {
            let v = parse(text)?;
            Ok(v..=v)
        }
    }
}

/// `f=A,g=B` → `(A, B)`.
fn parse_fg(text: &str) -> Result<(usize, usize)> {
    match text.split_once(',') {
        Some((f, g)) => Ok((parse_param(f, "f")?, parse_param(g, "g")?)),
        None => bail!("expected `f=A,g=B`, got `{text}`"),
    }
}

/// `key=N` → `N`.
fn parse_param(text: &str, key: &str) -> Result<usize> {
    let range = parse_param_range(text, key)?;
    if range.start() != range.end() {
        bail!("`{key}` takes a single value here, got the range `{text}`");
    }
    Ok(*range.start())
}

/// `key=N` or `key=A..B`.
fn parse_param_range(text: &str, key: &str) -> Result<std::ops::RangeInclusive<usize>> {
    match text.split_once('=') {
        Some((k, v)) if k.trim().eq_ignore_ascii_case(key) => parse_inclusive_range(v)
            .with_context(|| format!("invalid value for `{key}` in `{text}`")),
        _ => bail!("expected `{key}=…`, got `{text}`"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scenario_specs_parse() {
        assert_eq!(ScenarioSpec::parse("s31").unwrap(), ScenarioSpec::ThreeOne);
        assert_eq!(
            ScenarioSpec::parse("sf0:f=3").unwrap(),
            ScenarioSpec::PairsOnly { f: 3 }
        );
        assert_eq!(
            ScenarioSpec::parse("sFg:g=0").unwrap(),
            ScenarioSpec::AllPairsTriples { g: 0 }
        );
        assert_eq!(
            ScenarioSpec::parse("hier-joint:f=4,g=1").unwrap(),
            ScenarioSpec::HierJoint { f: 4, g: 1 }
        );
        assert_eq!(
            ScenarioSpec::parse("hier-triples:f=3,g=1").unwrap(),
            ScenarioSpec::HierTriplesFirst { f: 3, g: 1 }
        );
        assert_eq!(
            ScenarioSpec::parse("weights:w/o spaces.txt").unwrap(),
            ScenarioSpec::Weights(PathBuf::from("w/o spaces.txt"))
        );
        for bad in [
            "s32",
            "sf0",
            "sf0:f",
            "sf0:g=1",
            "hier-joint:f=1",
            "weights:",
        ] {
            assert!(ScenarioSpec::parse(bad).is_err(), "`{bad}` should fail");
        }
    }

    #[test]
    fn criteria_expand_ranges_in_order() {
        let specs = parse_criteria(&[
            "s31".into(),
            "sf0:f=1..3".into(),
            "bs".into(),
            "dfg:sfg:g=1".into(),
        ])
        .unwrap();
        assert_eq!(specs.len(), 6);
        assert_eq!(
            specs[0],
            EvalCriterion::ClosedForm(ClosedFormCriterion::ThreeOne)
        );
        assert_eq!(
            specs[2],
            EvalCriterion::ClosedForm(ClosedFormCriterion::PairsOnly { f: 2 })
        );
        assert_eq!(specs[4], EvalCriterion::Spectrum);
        assert_eq!(
            specs[5],
            EvalCriterion::ExpectedDeterminant(ScenarioSpec::AllPairsTriples { g: 1 })
        );
        assert!(parse_criteria(&["spectra".into()]).is_err());
        assert!(parse_criteria(&["sf0:f=5..2".into()]).is_err());
    }

    #[test]
    fn search_criterion_requires_closed_form() {
        assert_eq!(
            parse_search_criterion("sf0:f=2").unwrap(),
            ClosedFormCriterion::PairsOnly { f: 2 }
        );
        assert!(parse_search_criterion("hier-joint:f=3,g=1").is_err());
        assert!(parse_search_criterion("sf0:f=1..5").is_err());
    }

    #[test]
    fn inclusive_ranges() {
        assert_eq!(parse_inclusive_range("4..8").unwrap(), 4..=8);
        assert_eq!(parse_inclusive_range("7").unwrap(), 7..=7);
        assert!(parse_inclusive_range("8..4").is_err());
        assert!(parse_inclusive_range("a..b").is_err());
    }
}
