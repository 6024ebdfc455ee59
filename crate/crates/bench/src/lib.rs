//! Shared inputs for the benchmark targets.

use cbcones::divisors::{Linearization, WeightData};
use cbcones::rational::rat;

/// The weight datum (4, (1,2,3,1,3,2,2)) on seven points; nontrivial level 2.
pub fn sample_weights() -> WeightData {
    WeightData::new(4, vec![1, 2, 3, 1, 3, 2, 2]).expect("valid weights")
}

/// A denominator-12 interior point of Δ(3,7).
pub fn sample_linearization() -> Linearization {
    let twelfths = [5i64, 7, 3, 8, 6, 4, 3];
    Linearization::new(2, twelfths.iter().map(|&p| rat(p, 12)).collect()).expect("valid point")
}
