//! The six-function v-PSO comparison suite, all in maximization sense.

use std::f64::consts::{E, PI};

use super::constants::SCHWEFEL_OFFSET_PER_DIM;

/// Ackley, maximum 0 at the origin.
pub fn ackley(x: &[f64]) -> f64 {
    let nd = x.len() as f64;
    let sum_sq: f64 = x.iter().map(|&v| v * v).sum();
    let sum_cos: f64 = x.iter().map(|&v| (2.0 * PI * v).cos()).sum();
    20.0 * (-0.2 * (sum_sq / nd).sqrt()).exp() + (sum_cos / nd).exp() - 20.0 - E
}

/// Cosine mixture, maximum 0.1·Nd at the origin.
pub fn cosine_mixture(x: &[f64]) -> f64 {
    let sum_cos: f64 = x.iter().map(|&v| (5.0 * PI * v).cos()).sum();
    let sum_sq: f64 = x.iter().map(|&v| v * v).sum();
    0.1 * sum_cos - sum_sq
}

/// Exponential, maximum 1 at the origin.
pub fn exponential(x: &[f64]) -> f64 {
    let sum_sq: f64 = x.iter().map(|&v| v * v).sum();
    (-0.5 * sum_sq).exp()
}

/// Griewank (unshifted), maximum 0 at the origin.
pub fn griewank(x: &[f64]) -> f64 {
    let sum_sq: f64 = x.iter().map(|&v| v * v).sum();
    let prod_cos: f64 = x
        .iter()
        .enumerate()
        .map(|(i, &v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    -sum_sq / 4000.0 + prod_cos - 1.0
}

/// Rastrigin, maximum 0 at the origin.
pub fn rastrigin(x: &[f64]) -> f64 {
    -x.iter()
        .map(|&v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
        .sum::<f64>()
}

/// Schwefel 2.26 with the conventional −418.9829·Nd offset; the maximum is
/// a small negative residue near x_i ≈ 420.9687.
pub fn schwefel(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|&v| v * (v.abs().sqrt().sin())).sum();
    sum - SCHWEFEL_OFFSET_PER_DIM * x.len() as f64
}
