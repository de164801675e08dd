//! Two-level designs, their J-vector, and the aliasing spectrum.
//!
//! A design is an `n × m` matrix over `{−1, +1}`. Rows form a multiset: runs
//! may repeat and row order never affects any criterion. Each row is packed
//! into a [`RowCode`] (bit `j` set ⇔ factor `j` sits at level `−1`), which
//! makes column products popcount parities and lets the whole J-vector come
//! out of one Walsh–Hadamard transform of the row-count table.

use std::fmt;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Hard cap on the number of factors; row codes and subset indices are `u16`.
pub const MAX_FACTORS: usize = 16;

/// One run of a design packed into bits: bit `j` set ⇔ factor `j` is at
/// level `−1`, clear ⇔ `+1`. Factor indices are 0-based throughout the API;
/// display uses the conventional 1-based labels.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct RowCode(u16);

impl RowCode {
    pub fn from_bits(bits: u16) -> Self {
        RowCode(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    /// Sign of factor `factor` in this run: `+1` or `−1`.
    pub fn sign(self, factor: usize) -> i32 {
        debug_assert!(factor < MAX_FACTORS);
        if self.0 >> factor & 1 == 1 {
            -1
        } else {
            1
        }
    }

    /// Packs a slice of `±1` signs, index 0 first.
    pub fn from_signs(signs: &[i32]) -> Result<Self> {
        if signs.len() > MAX_FACTORS {
            return Err(Error::InvalidDesign(format!(
                "row has {} entries, maximum is {MAX_FACTORS}",
                signs.len()
            )));
        }
        let mut bits = 0u16;
        for (j, &s) in signs.iter().enumerate() {
            match s {
                1 => {}
                -1 => bits |= 1 << j,
                other => {
                    return Err(Error::InvalidDesign(format!(
                        "entry {other} is not +1 or -1"
                    )))
                }
            }
        }
        Ok(RowCode(bits))
    }

    /// Product of the signs of the factors in `subset`:
    /// `(−1)^(|code ∧ subset|)`.
    pub fn subset_product(self, subset: SubsetIndex) -> i32 {
        1 - 2 * ((self.0 & subset.bits()).count_ones() as i32 & 1)
    }
}

/// A subset of factors packed into bits (bit `j` set ⇔ factor `j` belongs).
/// Doubles as the index into a [`JVector`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct SubsetIndex(u16);

impl SubsetIndex {
    pub const EMPTY: SubsetIndex = SubsetIndex(0);

    pub fn from_bits(bits: u16) -> Self {
        SubsetIndex(bits)
    }

    /// Builds a subset from 0-based factor indices. Duplicates are rejected:
    /// a subset is a set, and a repeated index is almost always a bug.
    pub fn from_members(members: &[usize]) -> Result<Self> {
        let mut bits = 0u16;
        for &j in members {
            if j >= MAX_FACTORS {
                return Err(Error::InvalidSubset(format!(
                    "factor index {j} out of range (max {})",
                    MAX_FACTORS - 1
                )));
            }
            if bits >> j & 1 == 1 {
                return Err(Error::InvalidSubset(format!("duplicate factor index {j}")));
            }
            bits |= 1 << j;
        }
        Ok(SubsetIndex(bits))
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    /// Number of factors in the subset.
    pub fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, factor: usize) -> bool {
        factor < MAX_FACTORS && self.0 >> factor & 1 == 1
    }

    /// 0-based member indices in ascending order.
    pub fn members(self) -> Vec<usize> {
        (0..MAX_FACTORS).filter(|&j| self.contains(j)).collect()
    }

    /// Symmetric difference (bitwise XOR). The product of two interaction
    /// columns is the column of the symmetric difference of their subsets.
    pub fn symmetric_difference(self, other: SubsetIndex) -> SubsetIndex {
        SubsetIndex(self.0 ^ other.0)
    }

    pub fn union(self, other: SubsetIndex) -> SubsetIndex {
        SubsetIndex(self.0 | other.0)
    }
}

impl fmt::Display for SubsetIndex {
    /// Human-readable, 1-based: `{1,3,4}`; the empty subset is `{}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for j in self.members() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", j + 1)?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// Text encodings for design files.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Encoding {
    /// Tokens `+1`/`1` and `-1`.
    #[default]
    PlusMinus,
    /// Tokens `1` ↦ `+1` and `0` ↦ `−1`.
    ZeroOne,
}

/// An `n × m` two-level design. Rows are a multiset of [`RowCode`]s; columns
/// are factors. Invariants enforced at construction: `1 ≤ m ≤ 16`, `n ≥ 1`,
/// and every row code fits in `m` bits.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Design {
    m: u8,
    rows: Vec<RowCode>,
}

impl Design {
    pub fn new(factors: usize, rows: Vec<RowCode>) -> Result<Self> {
        if factors == 0 || factors > MAX_FACTORS {
            return Err(Error::InvalidDesign(format!(
                "factor count {factors} outside 1..={MAX_FACTORS}"
            )));
        }
        if rows.is_empty() {
            return Err(Error::InvalidDesign("design needs at least one run".into()));
        }
        let mask = width_mask(factors);
        if let Some(bad) = rows.iter().find(|r| r.bits() & !mask != 0) {
            return Err(Error::InvalidDesign(format!(
                "row code {:#06x} uses factors beyond the first {factors}",
                bad.bits()
            )));
        }
        Ok(Design {
            m: factors as u8,
            rows,
        })
    }

    /// Builds a design from rows of `±1` signs. All rows must share a length.
    pub fn from_sign_rows(rows: &[Vec<i32>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidDesign("design needs at least one run".into()));
        }
        let m = rows[0].len();
        let mut codes = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != m {
                return Err(Error::InvalidDesign(format!(
                    "ragged rows: expected {m} entries, found {}",
                    row.len()
                )));
            }
            codes.push(RowCode::from_signs(row)?);
        }
        Design::new(m, codes)
    }

    /// The full two-level factorial: all `2^m` distinct runs once each.
    pub fn full_factorial(factors: usize) -> Result<Self> {
        if factors == 0 || factors > MAX_FACTORS {
            return Err(Error::InvalidDesign(format!(
                "factor count {factors} outside 1..={MAX_FACTORS}"
            )));
        }
        let rows = (0..1u32 << factors)
            .map(|c| RowCode::from_bits(c as u16))
            .collect();
        Design::new(factors, rows)
    }

    /// Parses a design file: one run per line, entries separated by spaces,
    /// tabs, or commas; blank lines and lines whose first token starts with
    /// `#` are skipped. Error messages carry 1-based line numbers.
    pub fn parse(text: &str, encoding: Encoding) -> Result<Self> {
        let mut rows: Vec<RowCode> = Vec::new();
        let mut m: Option<usize> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut signs = Vec::new();
            for token in line.split([' ', '\t', ',']) {
                if token.is_empty() {
                    continue;
                }
                let sign = match (encoding, token) {
                    (Encoding::PlusMinus, "+1") | (Encoding::PlusMinus, "1") => 1,
                    (Encoding::PlusMinus, "-1") => -1,
                    (Encoding::ZeroOne, "1") => 1,
                    (Encoding::ZeroOne, "0") => -1,
                    _ => {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("unrecognized entry `{token}`"),
                        })
                    }
                };
                signs.push(sign);
            }
            match m {
                None => {
                    if signs.len() > MAX_FACTORS {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!(
                                "{} factors exceeds the maximum of {MAX_FACTORS}",
                                signs.len()
                            ),
                        });
                    }
                    m = Some(signs.len());
                }
                Some(m) if m != signs.len() => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("expected {m} entries per run, found {}", signs.len()),
                    });
                }
                _ => {}
            }
            rows.push(RowCode::from_signs(&signs).map_err(|e| Error::Parse {
                line: line_no,
                message: e.to_string(),
            })?);
        }
        match m {
            None => Err(Error::Parse {
                line: text.lines().count().max(1),
                message: "no runs found".into(),
            }),
            Some(m) => Design::new(m, rows),
        }
    }

    /// Serializes in the same format [`Design::parse`] reads.
    pub fn to_text(&self, encoding: Encoding) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let mut first = true;
            for j in 0..self.factors() {
                if !first {
                    out.push(' ');
                }
                let token = match (encoding, row.sign(j)) {
                    (Encoding::PlusMinus, 1) => "1",
                    (Encoding::PlusMinus, _) => "-1",
                    (Encoding::ZeroOne, 1) => "1",
                    (Encoding::ZeroOne, _) => "0",
                };
                out.push_str(token);
                first = false;
            }
            out.push('\n');
        }
        out
    }

    /// Number of runs `n`.
    pub fn runs(&self) -> usize {
        self.rows.len()
    }

    /// Number of factors `m`.
    pub fn factors(&self) -> usize {
        self.m as usize
    }

    pub fn row_codes(&self) -> &[RowCode] {
        &self.rows
    }

    /// Sign (`±1`) of factor `factor` in run `run`.
    pub fn sign(&self, run: usize, factor: usize) -> i32 {
        debug_assert!(factor < self.factors());
        self.rows[run].sign(factor)
    }

    /// True when no run repeats.
    pub fn has_distinct_rows(&self) -> bool {
        let mut seen = [false; 1 << MAX_FACTORS];
        self.rows.iter().all(|r| {
            let b = r.bits() as usize;
            !std::mem::replace(&mut seen[b], true)
        })
    }

    /// Validates that `subset` only references this design's factors.
    fn check_subset(&self, subset: SubsetIndex) -> Result<()> {
        if subset.bits() & !width_mask(self.factors()) != 0 {
            return Err(Error::InvalidSubset(format!(
                "subset {subset} references factors beyond the first {}",
                self.factors()
            )));
        }
        Ok(())
    }

    /// All `2^m` interaction sums `j_S = Σ_runs Π_{j∈S} x_ij` in one pass:
    /// tally how often each row code occurs, then apply the Walsh–Hadamard
    /// transform. `O(n + m·2^m)` instead of `O(n·2^m)`.
    pub fn j_vector(&self) -> JVector {
        let size = 1usize << self.factors();
        let mut values = vec![0i64; size];
        for row in &self.rows {
            values[row.bits() as usize] += 1;
        }
        walsh_hadamard(&mut values);
        JVector { m: self.m, values }
    }

    /// The aliasing spectrum `B_0..B_m` where
    /// `B_s = (1/n²) Σ_{|S|=s} j_S²`.
    pub fn bs_spectrum(&self) -> BsSpectrum {
        self.j_vector().bs_spectrum(self.runs() as u64)
    }

    /// `j_S / n` for a nonempty subset `S`: the correlation between the
    /// interaction column of `S` and the constant column.
    pub fn indicator_ratio(&self, subset: SubsetIndex) -> Result<Rat> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        self.check_subset(subset)?;
        let jv = self.j_vector();
        Ok(Rat::new(
            BigInt::from(jv.get(subset)),
            BigInt::from(self.runs() as i64),
        ))
    }

    /// Applies a design transform (column permutation + column sign switch +
    /// row permutation). Output column `j` takes input column `col_perm[j]`,
    /// negated when bit `j` of `col_signs` is set; output run `i` takes input
    /// run `row_perm[i]`.
    pub fn transform(&self, t: &DesignTransform) -> Result<Design> {
        t.validate(self.factors(), self.runs())?;
        let rows = t
            .row_perm
            .iter()
            .map(|&src| {
                RowCode::from_bits(map_code(self.rows[src].bits(), &t.col_perm, t.col_signs))
            })
            .collect();
        Design::new(self.factors(), rows)
    }
}

/// Maps a row code through a column permutation and sign switch: output bit
/// `j` is input bit `col_perm[j]`, flipped when bit `j` of `signs` is set.
pub(crate) fn map_code(code: u16, col_perm: &[usize], signs: u16) -> u16 {
    let mut out = signs;
    for (j, &src) in col_perm.iter().enumerate() {
        out ^= ((code >> src) & 1) << j;
    }
    out
}

fn width_mask(m: usize) -> u16 {
    if m >= 16 {
        u16::MAX
    } else {
        (1u16 << m) - 1
    }
}

/// In-place Walsh–Hadamard transform:
/// `out[S] = Σ_v (−1)^(|S∧v|) in[v]`. Self-inverse up to a factor `2^m`.
pub(crate) fn walsh_hadamard(values: &mut [i64]) {
    debug_assert!(values.len().is_power_of_two());
    let n = values.len();
    let mut half = 1;
    while half < n {
        let mut base = 0;
        while base < n {
            for i in base..base + half {
                let a = values[i];
                let b = values[i + half];
                values[i] = a + b;
                values[i + half] = a - b;
            }
            base += half * 2;
        }
        half *= 2;
    }
}

/// The element of the design-equivalence group applied by
/// [`Design::transform`]: permute columns, switch column signs, permute rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DesignTransform {
    /// Output column `j` reads input column `col_perm[j]`; must be a
    /// permutation of `0..m`.
    pub col_perm: Vec<usize>,
    /// Bit `j` set ⇔ output column `j` is negated.
    pub col_signs: u16,
    /// Output run `i` reads input run `row_perm[i]`; must be a permutation
    /// of `0..n`.
    pub row_perm: Vec<usize>,
}

impl DesignTransform {
    pub fn identity(m: usize, n: usize) -> Self {
        DesignTransform {
            col_perm: (0..m).collect(),
            col_signs: 0,
            row_perm: (0..n).collect(),
        }
    }

    /// Uniformly random group element; handy for invariance tests.
    pub fn random<R: Rng>(rng: &mut R, m: usize, n: usize) -> Self {
        let mut col_perm: Vec<usize> = (0..m).collect();
        col_perm.shuffle(rng);
        let mut row_perm: Vec<usize> = (0..n).collect();
        row_perm.shuffle(rng);
        let col_signs = rng.gen_range(0..(1u32 << m)) as u16;
        DesignTransform {
            col_perm,
            col_signs,
            row_perm,
        }
    }

    fn validate(&self, m: usize, n: usize) -> Result<()> {
        if !is_permutation(&self.col_perm, m) {
            return Err(Error::InvalidTransform(format!(
                "column map {:?} is not a permutation of 0..{m}",
                self.col_perm
            )));
        }
        if !is_permutation(&self.row_perm, n) {
            return Err(Error::InvalidTransform(format!(
                "row map of length {} is not a permutation of 0..{n}",
                self.row_perm.len()
            )));
        }
        if self.col_signs & !width_mask(m) != 0 {
            return Err(Error::InvalidTransform(format!(
                "sign mask {:#06x} switches columns beyond the first {m}",
                self.col_signs
            )));
        }
        Ok(())
    }
}

fn is_permutation(map: &[usize], len: usize) -> bool {
    if map.len() != len {
        return false;
    }
    let mut seen = vec![false; len];
    map.iter()
        .all(|&v| v < len && !std::mem::replace(&mut seen[v], true))
}

/// All `2^m` interaction sums of a design, indexed by [`SubsetIndex`].
/// `get(EMPTY)` is always `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JVector {
    m: u8,
    values: Vec<i64>,
}

impl JVector {
    pub fn factors(&self) -> usize {
        self.m as usize
    }

    pub fn get(&self, subset: SubsetIndex) -> i64 {
        self.values[subset.bits() as usize]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Recovers the row-count table (how many runs have each code) by the
    /// inverse transform; exact, and a useful round-trip check.
    pub fn counts(&self) -> Vec<i64> {
        let mut table = self.values.clone();
        walsh_hadamard(&mut table);
        let size = table.len() as i64;
        for c in &mut table {
            debug_assert!(*c % size == 0);
            *c /= size;
        }
        table
    }

    /// Aggregates the squared sums by subset cardinality.
    pub fn bs_spectrum(&self, runs: u64) -> BsSpectrum {
        let m = self.factors();
        let mut numerators = vec![0u128; m + 1];
        for (bits, &j) in self.values.iter().enumerate() {
            let s = (bits as u16).count_ones() as usize;
            numerators[s] += (j as i128 * j as i128) as u128;
        }
        BsSpectrum {
            n: runs,
            numerators,
        }
    }
}

/// The spectrum `B_0..B_m` with `B_s = (1/n²) Σ_{|S|=s} j_S²`, held exactly:
/// integer numerators over the common denominator `n²`. `B_0` is always 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BsSpectrum {
    n: u64,
    numerators: Vec<u128>,
}

impl BsSpectrum {
    pub fn runs(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> usize {
        self.numerators.len() - 1
    }

    /// `Σ_{|S|=s} j_S²`, the numerator of `B_s` over `n²`.
    pub fn numerator(&self, s: usize) -> u128 {
        self.numerators[s]
    }

    /// `B_s` as an exact rational; `s` beyond `m` is exactly zero (no
    /// subsets of that size exist).
    pub fn value(&self, s: usize) -> Rat {
        let num = if s < self.numerators.len() {
            self.numerators[s]
        } else {
            0
        };
        Rat::new(
            BigInt::from(num),
            BigInt::from(self.n as u128 * self.n as u128),
        )
    }

    /// `B_1..B_m` as exact rationals (the generalized word-length pattern).
    pub fn values(&self) -> Vec<Rat> {
        (1..=self.factors()).map(|s| self.value(s)).collect()
    }

    /// Lexicographic comparison of `(B_1, …, B_m)` — the generalized
    /// minimum aberration order; smaller is better. `None` when the factor
    /// counts differ. Exact via cross-multiplication.
    pub fn gma_cmp(&self, other: &BsSpectrum) -> Option<std::cmp::Ordering> {
        if self.factors() != other.factors() {
            return None;
        }
        let lhs_den = self.n as u128 * self.n as u128;
        let rhs_den = other.n as u128 * other.n as u128;
        for s in 1..=self.factors() {
            // Numerators are bounded by C(m, m/2)·n⁴ so these products fit
            // u128 for every n this crate admits (n ≤ 2^16).
            let l = self.numerators[s] * rhs_den;
            let r = other.numerators[s] * lhs_den;
            match l.cmp(&r) {
                std::cmp::Ordering::Equal => continue,
                ord => return Some(ord),
            }
        }
        Some(std::cmp::Ordering::Equal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use num_traits::Zero;

    fn brute_force_j(d: &Design, subset: SubsetIndex) -> i64 {
        (0..d.runs())
            .map(|i| {
                subset
                    .members()
                    .iter()
                    .map(|&j| d.sign(i, j) as i64)
                    .product::<i64>()
            })
            .sum()
    }

    #[test]
    fn row_code_packs_signs() {
        let code = RowCode::from_signs(&[1, -1, -1]).unwrap();
        assert_eq!(code.bits(), 0b110);
        assert_eq!(code.sign(0), 1);
        assert_eq!(code.sign(1), -1);
        assert_eq!(code.sign(2), -1);
        assert!(RowCode::from_signs(&[2]).is_err());
    }

    #[test]
    fn subset_index_members_and_display() {
        let s = SubsetIndex::from_members(&[0, 2, 3]).unwrap();
        assert_eq!(s.bits(), 0b1101);
        assert_eq!(s.cardinality(), 3);
        assert_eq!(s.members(), vec![0, 2, 3]);
        assert_eq!(s.to_string(), "{1,3,4}");
        assert_eq!(SubsetIndex::EMPTY.to_string(), "{}");
        assert!(SubsetIndex::from_members(&[1, 1]).is_err());
        assert!(SubsetIndex::from_members(&[16]).is_err());
        let t = SubsetIndex::from_members(&[2]).unwrap();
        assert_eq!(s.symmetric_difference(t).members(), vec![0, 3]);
    }

    #[test]
    fn parse_plus_minus_and_zero_one() {
        let d = Design::parse("# comment\n1 -1\n-1 1\n\n+1 +1\n", Encoding::PlusMinus).unwrap();
        assert_eq!(d.runs(), 3);
        assert_eq!(d.factors(), 2);
        assert_eq!(d.sign(0, 0), 1);
        assert_eq!(d.sign(0, 1), -1);
        assert_eq!(d.sign(2, 0), 1);

        let z = Design::parse("1 0\n0 1\n", Encoding::ZeroOne).unwrap();
        assert_eq!(z.sign(0, 0), 1);
        assert_eq!(z.sign(0, 1), -1);
        assert_eq!(z.sign(1, 0), -1);
        assert_eq!(z.sign(1, 1), 1);

        let commas = Design::parse("1,-1,1\n-1,\t1 , 1\n", Encoding::PlusMinus).unwrap();
        assert_eq!(commas.factors(), 3);
        assert_eq!(commas.sign(1, 1), 1);
    }

    #[test]
    fn parse_rejects_bad_input() {
        match Design::parse("1 -1\n1\n", Encoding::PlusMinus) {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("expected ragged-row error, got {other:?}"),
        }
        match Design::parse("1 2\n", Encoding::PlusMinus) {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("expected token error, got {other:?}"),
        }
        match Design::parse("0 1\n", Encoding::PlusMinus) {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("expected token error for 0 in ±1 encoding, got {other:?}"),
        }
        assert!(Design::parse("# only a comment\n", Encoding::PlusMinus).is_err());
        let seventeen = vec!["1"; 17].join(" ");
        assert!(Design::parse(&seventeen, Encoding::PlusMinus).is_err());
    }

    #[test]
    fn text_round_trip_both_encodings() {
        let d = Design::from_sign_rows(&[vec![1, -1, 1], vec![-1, -1, 1], vec![1, 1, -1]]).unwrap();
        for enc in [Encoding::PlusMinus, Encoding::ZeroOne] {
            let text = d.to_text(enc);
            let back = Design::parse(&text, enc).unwrap();
            assert_eq!(back, d);
        }
    }

    #[test]
    fn full_factorial_j_vector_is_delta() {
        let d = Design::full_factorial(3).unwrap();
        let jv = d.j_vector();
        assert_eq!(jv.get(SubsetIndex::EMPTY), 8);
        for bits in 1..8u16 {
            assert_eq!(jv.get(SubsetIndex::from_bits(bits)), 0, "j at {bits:#b}");
        }
        let bs = d.bs_spectrum();
        for s in 1..=3 {
            assert!(bs.value(s).is_zero());
        }
        assert_eq!(bs.value(0), rat_int(1));
    }

    #[test]
    fn j_vector_matches_brute_force_small() {
        let d = Design::from_sign_rows(&[
            vec![1, 1, -1],
            vec![1, -1, -1],
            vec![-1, -1, -1],
            vec![1, 1, 1],
            vec![1, 1, 1],
        ])
        .unwrap();
        let jv = d.j_vector();
        for bits in 0..8u16 {
            let s = SubsetIndex::from_bits(bits);
            assert_eq!(jv.get(s), brute_force_j(&d, s), "subset {s}");
        }
        // Round-trip: inverse transform recovers the row tallies.
        let counts = jv.counts();
        assert_eq!(counts.iter().sum::<i64>(), d.runs() as i64);
        assert_eq!(counts[0b111], 1); // the all −1 run
        assert_eq!(counts[0b000], 2); // the repeated all +1 run
    }

    #[test]
    fn single_factor_all_high() {
        // One factor, both runs at +1: j_{1} = 2 = n, B_1 = 1.
        let d = Design::from_sign_rows(&[vec![1], vec![1]]).unwrap();
        let bs = d.bs_spectrum();
        assert_eq!(bs.value(1), rat_int(1));
    }

    #[test]
    fn indicator_ratio_regular_fraction() {
        // 2^(3−1) fraction defined by x1·x2·x3 = +1: even-parity codes.
        let rows = [0b000u16, 0b011, 0b101, 0b110]
            .iter()
            .map(|&b| RowCode::from_bits(b))
            .collect();
        let d = Design::new(3, rows).unwrap();
        let all = SubsetIndex::from_members(&[0, 1, 2]).unwrap();
        assert_eq!(d.indicator_ratio(all).unwrap(), rat_int(1));
        let pair = SubsetIndex::from_members(&[0, 1]).unwrap();
        assert_eq!(d.indicator_ratio(pair).unwrap(), rat_int(0));
        assert!(matches!(
            d.indicator_ratio(SubsetIndex::EMPTY),
            Err(Error::EmptySubset)
        ));
        assert!(d.indicator_ratio(SubsetIndex::from_bits(0b1000)).is_err());

        let full = Design::full_factorial(2).unwrap();
        let s01 = SubsetIndex::from_members(&[0, 1]).unwrap();
        assert_eq!(full.indicator_ratio(s01).unwrap(), rat_int(0));
    }

    #[test]
    fn transform_identity_and_negation() {
        let d = Design::from_sign_rows(&[vec![1, -1], vec![-1, -1], vec![1, 1]]).unwrap();
        let id = DesignTransform::identity(2, 3);
        assert_eq!(d.transform(&id).unwrap(), d);

        // Negating a column of the full factorial permutes its rows.
        let full = Design::full_factorial(3).unwrap();
        let neg = DesignTransform {
            col_perm: vec![0, 1, 2],
            col_signs: 0b010,
            row_perm: (0..8).collect(),
        };
        let moved = full.transform(&neg).unwrap();
        let mut a: Vec<u16> = moved.row_codes().iter().map(|r| r.bits()).collect();
        let mut b: Vec<u16> = full.row_codes().iter().map(|r| r.bits()).collect();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    #[test]
    fn transform_validation() {
        let d = Design::full_factorial(2).unwrap();
        let bad_col = DesignTransform {
            col_perm: vec![0, 0],
            col_signs: 0,
            row_perm: (0..4).collect(),
        };
        assert!(matches!(
            d.transform(&bad_col),
            Err(Error::InvalidTransform(_))
        ));
        let bad_signs = DesignTransform {
            col_perm: vec![0, 1],
            col_signs: 0b100,
            row_perm: (0..4).collect(),
        };
        assert!(d.transform(&bad_signs).is_err());
        let bad_rows = DesignTransform {
            col_perm: vec![0, 1],
            col_signs: 0,
            row_perm: vec![0, 1, 2],
        };
        assert!(d.transform(&bad_rows).is_err());
    }

    #[test]
    fn spectrum_invariant_under_transforms() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let d = Design::from_sign_rows(&[
            vec![1, 1, -1, 1],
            vec![1, -1, -1, -1],
            vec![-1, -1, 1, 1],
            vec![-1, 1, 1, 1],
            vec![1, 1, 1, 1],
            vec![-1, -1, -1, -1],
        ])
        .unwrap();
        let reference = d.bs_spectrum();
        for _ in 0..50 {
            let t = DesignTransform::random(&mut rng, d.factors(), d.runs());
            let moved = d.transform(&t).unwrap();
            assert_eq!(moved.bs_spectrum(), reference);
        }
    }

    #[test]
    fn distinct_rows_detection() {
        let d = Design::from_sign_rows(&[vec![1, 1], vec![1, -1]]).unwrap();
        assert!(d.has_distinct_rows());
        let dup = Design::from_sign_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(!dup.has_distinct_rows());
    }

    #[test]
    fn gma_cmp_orders_spectra() {
        let full = Design::full_factorial(3).unwrap();
        let rep = Design::from_sign_rows(&[
            vec![1, 1, 1],
            vec![1, 1, 1],
            vec![-1, -1, -1],
            vec![-1, -1, -1],
            vec![1, -1, 1],
            vec![-1, 1, -1],
            vec![1, -1, -1],
            vec![-1, 1, 1],
        ])
        .unwrap();
        let a = full.bs_spectrum();
        let b = rep.bs_spectrum();
        assert_eq!(a.gma_cmp(&b), Some(std::cmp::Ordering::Less));
        assert_eq!(b.gma_cmp(&a), Some(std::cmp::Ordering::Greater));
        assert_eq!(a.gma_cmp(&a), Some(std::cmp::Ordering::Equal));
        let other = Design::full_factorial(2).unwrap().bs_spectrum();
        assert_eq!(a.gma_cmp(&other), None);
    }

    #[test]
    fn spectrum_beyond_m_is_zero() {
        let d = Design::full_factorial(2).unwrap();
        let bs = d.bs_spectrum();
        assert!(bs.value(5).is_zero());
        assert_eq!(bs.value(0), rat(4 * 4, 16));
    }
}
