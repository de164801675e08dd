//! Helpers shared by the integration test targets: seeded random designs,
//! brute-force J-characteristics, and an independent determinant oracle.

#![allow(dead_code)]

use ffd_core::{
    Design, InformationMatrix, ModelDistribution, ModelPair, Rat, RowCode, SubsetIndex,
};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

/// Seeded multiset design: codes drawn uniformly with replacement.
pub fn random_design<R: Rng>(rng: &mut R, m: usize, n: usize) -> Design {
    let size = 1u32 << m;
    let rows = (0..n)
        .map(|_| RowCode::from_bits(rng.gen_range(0..size) as u16))
        .collect();
    Design::new(m, rows).expect("random codes are valid")
}

/// Seeded design with pairwise distinct runs.
pub fn random_distinct_design<R: Rng>(rng: &mut R, m: usize, n: usize) -> Design {
    let size = 1usize << m;
    assert!(n <= size);
    let rows = rand::seq::index::sample(rng, size, n)
        .into_iter()
        .map(|v| RowCode::from_bits(v as u16))
        .collect();
    Design::new(m, rows).expect("sampled codes are valid")
}

/// `J_S` straight from the definition: sum over runs of the product of the
/// factor levels in `S`.
pub fn brute_force_j(design: &Design, subset: SubsetIndex) -> i64 {
    design
        .row_codes()
        .iter()
        .map(|r| r.subset_product(subset) as i64)
        .sum()
}

/// Every distinct-row design with `n` runs over `m` factors, one
/// representative per row *set* (rows ascending).
pub fn all_distinct_designs(m: usize, n: usize) -> Vec<Design> {
    (0..1u16 << m)
        .combinations(n)
        .map(|codes| Design::new(m, codes.into_iter().map(RowCode::from_bits).collect()).unwrap())
        .collect()
}

/// Every multiset design with `n` runs over `m` factors, one representative
/// per multiset (rows non-decreasing).
pub fn all_multiset_designs(m: usize, n: usize) -> Vec<Design> {
    (0..1u16 << m)
        .combinations_with_replacement(n)
        .map(|codes| Design::new(m, codes.into_iter().map(RowCode::from_bits).collect()).unwrap())
        .collect()
}

/// Materializes a model distribution's support.
pub fn collect_models(dist: &ModelDistribution) -> Vec<(ModelPair, Rat)> {
    let mut out = Vec::new();
    dist.for_each(&mut |mp: &ModelPair, w: &Rat| {
        out.push((mp.clone(), w.clone()));
        Ok(())
    })
    .expect("support is nonempty");
    out
}

/// Determinant by cofactor (Laplace) expansion, memoized over column
/// subsets: `D(mask)` is the determinant of the submatrix on the first
/// `popcount(mask)` rows and the columns in `mask`. O(2^p · p) exact
/// arithmetic — an implementation deliberately unrelated to fraction-free
/// elimination.
pub fn laplace_det(a: &[Vec<BigInt>]) -> BigInt {
    let p = a.len();
    assert!(p <= 20, "cofactor oracle is exponential; keep p small");
    for row in a {
        assert_eq!(row.len(), p);
    }
    if p == 0 {
        return BigInt::one();
    }
    let mut memo: Vec<Option<BigInt>> = vec![None; 1 << p];
    memo[0] = Some(BigInt::one());

    fn rec(a: &[Vec<BigInt>], mask: usize, memo: &mut [Option<BigInt>]) -> BigInt {
        if let Some(v) = &memo[mask] {
            return v.clone();
        }
        // Expand along the last row in play.
        let r = mask.count_ones() as usize - 1;
        let mut acc = BigInt::zero();
        let mut rest = mask;
        let mut k = 0usize;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if !a[r][j].is_zero() {
                let sub = rec(a, mask & !(1 << j), memo);
                let term = &a[r][j] * sub;
                if (r + k).is_multiple_of(2) {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            k += 1;
        }
        memo[mask] = Some(acc.clone());
        acc
    }

    rec(a, (1 << p) - 1, &mut memo)
}

/// Determinant of an information matrix through [`laplace_det`]: the matrix
/// is `J/n` entrywise, so `det = laplace_det(J) / n^p`.
pub fn det_oracle(im: &InformationMatrix) -> Rat {
    let p = im.order();
    let j: Vec<Vec<BigInt>> = (0..p)
        .map(|r| (0..p).map(|c| BigInt::from(im.j_entry(r, c))).collect())
        .collect();
    let n_pow = num_traits::pow(BigInt::from(im.runs()), p);
    Rat::new(laplace_det(&j), n_pow)
}
