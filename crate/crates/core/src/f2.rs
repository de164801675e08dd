//! Affine geometry of the run set over GF(2).
//!
//! Identifying level `+1` with `0` and level `−1` with `1` turns each run
//! into a point of `GF(2)^m` — exactly the bits of its [`RowCode`]. A design
//! is *affinely full-dimensional* (AFD) when its distinct runs span an
//! affine subspace of dimension `m`, i.e. they fit in no affine hyperplane.
//! Designs confined to a hyperplane collapse: some interaction column is
//! constant, so model-robustness criteria degrade.

use crate::design::Design;

/// A matrix over GF(2) with at most 16 columns; each row is a bitmask.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F2Matrix {
    width: usize,
    rows: Vec<u16>,
}

impl F2Matrix {
    pub fn new(width: usize, rows: Vec<u16>) -> Self {
        debug_assert!(width <= 16);
        F2Matrix { width, rows }
    }

    /// The design's runs as points of `GF(2)^m` (`+1 ↦ 0`, `−1 ↦ 1`).
    pub fn from_design(design: &Design) -> Self {
        F2Matrix {
            width: design.factors(),
            rows: design.row_codes().iter().map(|r| r.bits()).collect(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[u16] {
        &self.rows
    }

    /// Rank over GF(2) by bitmask Gaussian elimination: `pivot[b]` holds a
    /// basis vector whose leading set bit is `b`.
    pub fn rank(&self) -> usize {
        let mut pivot = [0u16; 16];
        let mut rank = 0;
        for &row in &self.rows {
            let mut v = row;
            while v != 0 {
                let lead = 15 - v.leading_zeros() as usize;
                if pivot[lead] == 0 {
                    pivot[lead] = v;
                    rank += 1;
                    break;
                }
                v ^= pivot[lead];
            }
        }
        rank
    }
}

/// Dimension of the affine span of the design's distinct runs in `GF(2)^m`:
/// the GF(2) rank of `{ r ⊕ r_0 : r ∈ runs }` for any anchor run `r_0`
/// (translation-invariant, so anchor choice is irrelevant). A single
/// distinct run has affine dimension 0.
pub fn affine_dimension(design: &Design) -> usize {
    let codes = design.row_codes();
    let anchor = codes[0].bits();
    let diffs: Vec<u16> = codes.iter().skip(1).map(|r| r.bits() ^ anchor).collect();
    F2Matrix::new(design.factors(), diffs).rank()
}

/// True when the affine span of the runs is all of `GF(2)^m`. Equivalent
/// characterization: `|j_S| < n` for every nonempty subset `S` — a design is
/// confined to an affine hyperplane exactly when some interaction column is
/// constant over its runs.
pub fn is_affinely_full_dimensional(design: &Design) -> bool {
    affine_dimension(design) == design.factors()
}
