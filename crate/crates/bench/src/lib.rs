//! Shared fixtures for the criterion benchmarks in `benches/`.

use ffd_core::{s2_optimal_12x5, Design};

/// The 12-run, 5-factor reference design exercised by most benchmarks.
pub fn reference_design() -> Design {
    s2_optimal_12x5()
}

/// A larger, structured input: the full 2^10 factorial (1024 runs).
pub fn full_factorial_10() -> Design {
    Design::full_factorial(10).expect("10 factors is within range")
}
