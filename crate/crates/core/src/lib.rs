//! Evaluation and search of two-level fractional factorial designs under
//! model-robustness criteria.
//!
//! A design is an `n × m` matrix over `{−1, +1}` whose rows are runs and whose
//! columns are factors. Everything an evaluation needs flows from the J-vector
//! — the Walsh–Hadamard transform of the design's row-count table — and all
//! criterion values are exact rationals, never floats:
//!
//! * [`design`] — design matrices, parsing/serialization, the J-vector, the
//!   aliasing spectrum `B_1..B_m`, and design transforms (column permutation,
//!   column sign switching, row permutation).
//! * [`f2`] — affine geometry over GF(2): affine dimension of the run set and
//!   the affinely-full-dimensional (AFD) test.
//! * [`model`] — candidate model pairs (two-factor plus three-factor
//!   interaction sets), hierarchical consistency, and probability
//!   distributions over model spaces with streaming enumeration.
//! * [`criteria`] — information matrices, the expected squared off-diagonal
//!   criterion `S²` (enumerated oracle and closed forms), the expected
//!   determinant criterion, generalized minimum aberration comparison, and
//!   coefficient-ordering checks.
//! * [`search`] — canonical forms under the design-equivalence group,
//!   exhaustive orderly-generation search, a multi-restart exchange heuristic,
//!   and 12-run designs drawn from a Hadamard matrix of order 12.

pub mod criteria;
pub mod design;
pub mod error;
pub mod f2;
pub mod model;
pub mod rat;
pub mod search;

pub use criteria::{
    check_proposition_orderings, closed_form_s2, coefficients_s31, coefficients_sf0,
    coefficients_sfg, d_fg, gma_compare, information_matrix, s2_oracle, ss_offdiagonal,
    ClosedFormCriterion, CriterionCoefficients, CriterionValue, InformationMatrix,
    PropositionCheck, PropositionReport, Provenance,
};
pub use design::{
    BsSpectrum, Design, DesignTransform, Encoding, JVector, RowCode, SubsetIndex, MAX_FACTORS,
};
pub use error::{Error, Result};
pub use f2::{affine_dimension, is_affinely_full_dimensional, F2Matrix};
pub use model::{
    is_hierarchically_consistent, parse_rational, ModelDistribution, ModelPair, PairSet, Scenario,
    ScenarioCounts, TripleSet,
};
pub use rat::{approx_f64, binomial, decimal_string, Rat};
pub use search::{
    canonicalize, exchange_search, exhaustive_search, hadamard_designs, hadamard_matrix_12,
    s2_optimal_12x5, CanonicalForm, SearchConfig, SearchMethod, SearchResult,
};
