//! Pairwise (cascade) summation.

use num_complex::Complex64;

const LEAF: usize = 8;

/// Pairwise sum; rounding error grows as O(log n) instead of O(n).
pub fn pairwise(values: &[Complex64]) -> Complex64 {
    if values.len() <= LEAF {
        values.iter().fold(Complex64::new(0.0, 0.0), |acc, v| acc + v)
    } else {
        let (left, right) = values.split_at(values.len() / 2);
        pairwise(left) + pairwise(right)
    }
}

pub fn pairwise_real(values: &[f64]) -> f64 {
    if values.len() <= LEAF {
        values.iter().sum()
    } else {
        let (left, right) = values.split_at(values.len() / 2);
        pairwise_real(left) + pairwise_real(right)
    }
}
