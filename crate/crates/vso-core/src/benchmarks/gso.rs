//! The 23-function global-search suite f1–f23, negated where necessary so
//! every entry is a maximization problem.

use std::f64::consts::{E, PI};

use super::constants::{
    FOXHOLES_A, HARTMAN3_A, HARTMAN3_C, HARTMAN3_P, HARTMAN6_A, HARTMAN6_C, HARTMAN6_P, KOWALIK_A,
    KOWALIK_B, SHEKEL_A, SHEKEL_C,
};

/// f1 — sphere, maximum 0 at the origin.
pub fn f1_sphere(x: &[f64]) -> f64 {
    -x.iter().map(|&v| v * v).sum::<f64>()
}

/// f2 — |x| sum plus |x| product, maximum 0 at the origin.
pub fn f2_abs_sum_prod(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|&v| v.abs()).sum();
    let prod: f64 = x.iter().map(|&v| v.abs()).product();
    -(sum + prod)
}

/// f3 — sum of squared prefix sums, maximum 0 at the origin.
pub fn f3_prefix_sums(x: &[f64]) -> f64 {
    let mut total = 0.0;
    let mut prefix = 0.0;
    for &v in x {
        prefix += v;
        total += prefix * prefix;
    }
    -total
}

/// f4 — max absolute coordinate, maximum 0 at the origin.
pub fn f4_max_abs(x: &[f64]) -> f64 {
    -x.iter().map(|&v| v.abs()).fold(0.0, f64::max)
}

/// f5 — Rosenbrock, maximum 0 at (1, …, 1).
pub fn f5_rosenbrock(x: &[f64]) -> f64 {
    -x.windows(2)
        .map(|w| {
            let d = w[1] - w[0] * w[0];
            100.0 * d * d + (w[0] - 1.0) * (w[0] - 1.0)
        })
        .sum::<f64>()
}

/// f6 — step function, maximum 0 on the unit cell around the origin.
pub fn f6_step(x: &[f64]) -> f64 {
    -x.iter()
        .map(|&v| {
            let s = (v + 0.5).floor();
            s * s
        })
        .sum::<f64>()
}

/// f7 — quartic with one uniform [0, 1) noise draw subtracted per
/// evaluation; the noiseless maximum is 0 at the origin.
pub fn f7_noisy_quartic(x: &[f64], noise_draw: f64) -> f64 {
    let sum: f64 = x
        .iter()
        .enumerate()
        .map(|(i, &v)| (i + 1) as f64 * v * v * v * v)
        .sum();
    -sum - noise_draw
}

/// f8 — Schwefel 2.26 without offset, maximum ≈ 12,569.487 at
/// x_i ≈ 420.9687.
pub fn f8_schwefel(x: &[f64]) -> f64 {
    x.iter().map(|&v| v * v.abs().sqrt().sin()).sum()
}

/// f9 — Rastrigin, maximum 0 at the origin.
pub fn f9_rastrigin(x: &[f64]) -> f64 {
    -x.iter()
        .map(|&v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
        .sum::<f64>()
}

/// f10 — Ackley, maximum 0 at the origin.
pub fn f10_ackley(x: &[f64]) -> f64 {
    let nd = x.len() as f64;
    let sum_sq: f64 = x.iter().map(|&v| v * v).sum();
    let sum_cos: f64 = x.iter().map(|&v| (2.0 * PI * v).cos()).sum();
    20.0 * (-0.2 * (sum_sq / nd).sqrt()).exp() + (sum_cos / nd).exp() - 20.0 - E
}

/// f11 — Griewank shifted by 100, maximum 0 at (100, …, 100).
pub fn f11_shifted_griewank(x: &[f64]) -> f64 {
    let sum_sq: f64 = x.iter().map(|&v| (v - 100.0) * (v - 100.0)).sum();
    let prod_cos: f64 = x
        .iter()
        .enumerate()
        .map(|(i, &v)| ((v - 100.0) / ((i + 1) as f64).sqrt()).cos())
        .product();
    -(sum_sq / 4000.0 - prod_cos + 1.0)
}

/// Boundary penalty used by f12 and f13: 0 inside [-a, a], growing as
/// k(|x|-a)^m outside.
pub fn u(x: f64, a: f64, k: f64, m: f64) -> f64 {
    if x > a {
        k * (x - a).powf(m)
    } else if x < -a {
        k * (-x - a).powf(m)
    } else {
        0.0
    }
}

/// f12 — penalized sine function on y = 1 + (x+1)/4, maximum 0 at
/// (−1, …, −1).
pub fn f12_penalized_sine(x: &[f64]) -> f64 {
    let nd = x.len();
    let y = |v: f64| 1.0 + (v + 1.0) / 4.0;
    let mut core = 10.0 * (PI * y(x[0])).sin().powi(2);
    for i in 0..nd - 1 {
        let yi = y(x[i]);
        let yn = y(x[i + 1]);
        core += (yi - 1.0) * (yi - 1.0) * (1.0 + 10.0 * (PI * yn).sin().powi(2));
    }
    let ylast = y(x[nd - 1]);
    core += (ylast - 1.0) * (ylast - 1.0);
    let penalty: f64 = x.iter().map(|&v| u(v, 10.0, 100.0, 4.0)).sum();
    -(PI / nd as f64) * core - penalty
}

/// f13 — second penalized sine function, maximum ≈ 0 at (1, …, 1).
pub fn f13_penalized_sine2(x: &[f64]) -> f64 {
    let nd = x.len();
    let mut core = (3.0 * PI * x[0]).sin().powi(2);
    for i in 0..nd - 1 {
        let d = x[i] - 1.0;
        core += d * d * (1.0 + (3.0 * PI * x[i + 1]).sin().powi(2));
    }
    let dl = x[nd - 1] - 1.0;
    core += dl * dl * (1.0 + (2.0 * PI * x[nd - 1]).sin().powi(2));
    let penalty: f64 = x.iter().map(|&v| u(v, 5.0, 100.0, 4.0)).sum();
    -0.1 * core - penalty
}

/// f14 — Shekel's foxholes (2-D), maximum ≈ −0.998004 near (−32, −32).
pub fn f14_foxholes(x: &[f64]) -> f64 {
    let mut sum = 1.0 / 500.0;
    for (j, (a0, a1)) in FOXHOLES_A[0].iter().zip(&FOXHOLES_A[1]).enumerate() {
        let d0 = x[0] - a0;
        let d1 = x[1] - a1;
        sum += 1.0 / ((j + 1) as f64 + d0.powi(6) + d1.powi(6));
    }
    -1.0 / sum
}

/// f15 — Kowalik 11-point rational fit (4-D), maximum ≈ −3.0749e−4.
pub fn f15_kowalik(x: &[f64]) -> f64 {
    let mut ssr = 0.0;
    for j in 0..11 {
        let b = KOWALIK_B[j];
        let model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
        let r = KOWALIK_A[j] - model;
        ssr += r * r;
    }
    -ssr
}

/// f16 — six-hump camel back (2-D), maximum ≈ 1.0316285.
pub fn f16_camel(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    let x1s = x1 * x1;
    let x2s = x2 * x2;
    -(4.0 * x1s - 2.1 * x1s * x1s + x1s * x1s * x1s / 3.0 + x1 * x2 - 4.0 * x2s
        + 4.0 * x2s * x2s)
}

/// f17 — Branin (2-D), maximum −10/(8π) ≈ −0.39789.
pub fn f17_branin(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    let t = x2 - 5.1 * x1 * x1 / (4.0 * PI * PI) + 5.0 * x1 / PI - 6.0;
    -(t * t + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * x1.cos() + 10.0)
}

/// f18 — Goldstein–Price (2-D), maximum exactly −3 at (0, −1).
pub fn f18_goldstein_price(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    let a = x1 + x2 + 1.0;
    let t1 = 1.0
        + a * a
            * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 * x2);
    let b = 2.0 * x1 - 3.0 * x2;
    let t2 = 30.0
        + b * b
            * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 * x2);
    -(t1 * t2)
}

/// f19 — Hartman 3-D, maximum ≈ 3.8628.
pub fn f19_hartman3(x: &[f64]) -> f64 {
    let mut sum = 0.0;
    for i in 0..4 {
        let mut arg = 0.0;
        for j in 0..3 {
            let d = x[j] - HARTMAN3_P[i][j];
            arg += HARTMAN3_A[i][j] * d * d;
        }
        sum += HARTMAN3_C[i] * (-arg).exp();
    }
    sum
}

/// f20 — Hartman 6-D, maximum ≈ 3.3224.
pub fn f20_hartman6(x: &[f64]) -> f64 {
    let mut sum = 0.0;
    for i in 0..4 {
        let mut arg = 0.0;
        for j in 0..6 {
            let d = x[j] - HARTMAN6_P[i][j];
            arg += HARTMAN6_A[i][j] * d * d;
        }
        sum += HARTMAN6_C[i] * (-arg).exp();
    }
    sum
}

/// f21/f22/f23 — Shekel wells (4-D) with m = 5, 7, or 10 terms; maxima
/// ≈ 10.15, 10.40, 10.54 near (4, 4, 4, 4).
pub fn shekel(x: &[f64], m: usize) -> f64 {
    let mut sum = 0.0;
    for j in 0..m {
        let mut dist = 0.0;
        for i in 0..4 {
            let d = x[i] - SHEKEL_A[j][i];
            dist += d * d;
        }
        sum += 1.0 / (dist + SHEKEL_C[j]);
    }
    sum
}
