//! Coefficient tables for the low-dimensional benchmark functions and the
//! frozen optima the registry reports. Optima without a closed form were
//! refined numerically to full f64 precision.

/// Foxholes grid: row 0 cycles -32..32 fastest, row 1 slowest, giving the
/// 25 lattice points of {-32, -16, 0, 16, 32}^2 in column-major order.
pub const FOXHOLES_A: [[f64; 25]; 2] = [
    [
        -32.0, -16.0, 0.0, 16.0, 32.0, -32.0, -16.0, 0.0, 16.0, 32.0, -32.0, -16.0, 0.0, 16.0,
        32.0, -32.0, -16.0, 0.0, 16.0, 32.0, -32.0, -16.0, 0.0, 16.0, 32.0,
    ],
    [
        -32.0, -32.0, -32.0, -32.0, -32.0, -16.0, -16.0, -16.0, -16.0, -16.0, 0.0, 0.0, 0.0, 0.0,
        0.0, 16.0, 16.0, 16.0, 16.0, 16.0, 32.0, 32.0, 32.0, 32.0, 32.0,
    ],
];

/// Kowalik measured rate data.
pub const KOWALIK_A: [f64; 11] = [
    0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
];

/// Kowalik inverse concentrations 1/b.
pub const KOWALIK_B: [f64; 11] = [
    4.0,
    2.0,
    1.0,
    0.5,
    0.25,
    1.0 / 6.0,
    1.0 / 8.0,
    0.1,
    1.0 / 12.0,
    1.0 / 14.0,
    1.0 / 16.0,
];

pub const HARTMAN3_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];

pub const HARTMAN3_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];

pub const HARTMAN3_P: [[f64; 3]; 4] = [
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.038150, 0.5743, 0.8828],
];

pub const HARTMAN6_A: [[f64; 6]; 4] = [
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
];

pub const HARTMAN6_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];

pub const HARTMAN6_P: [[f64; 6]; 4] = [
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1415, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
];

/// Shekel attractor locations, one row per attractor.
pub const SHEKEL_A: [[f64; 4]; 10] = [
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
];

pub const SHEKEL_C: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];

/// Per-dimension shift that recenters the Schwefel sine function so its
/// maximum sits near zero.
pub const SCHWEFEL_OFFSET_PER_DIM: f64 = 418.9829;

/// Argmax of x sin(sqrt(|x|)) on [-500, 500] and the value there.
pub const SCHWEFEL_ARGMAX: f64 = 420.96874655497675;
pub const SCHWEFEL_DIM_MAX: f64 = 418.9828872724338;

/// Maximum of the (negated) foxholes function; the nearby lattice point
/// (-32, -32) evaluates within 2e-9 of it.
pub const FOXHOLES_FMAX: f64 = -0.9980038377944498;

/// Kowalik: the negated least-squares residual at the best fit.
pub const KOWALIK_FMAX: f64 = -0.0003074859878056047;
pub const KOWALIK_XSTAR: [f64; 4] = [
    0.19283345287914908,
    0.1908362365641155,
    0.12311729421798151,
    0.1357659891269626,
];

/// Six-hump camel back (negated); one of the two symmetric maxima.
pub const CAMEL_FMAX: f64 = 1.0316284534898779;
pub const CAMEL_XSTAR: [f64; 2] = [0.08984201003469172, -0.7126564061737863];

/// Branin (negated), attained at (pi, 2.275) among others.
pub const BRANIN_FMAX: f64 = -0.39788735772973816;

pub const HARTMAN3_FMAX: f64 = 3.862782147820756;
pub const HARTMAN3_XSTAR: [f64; 3] =
    [0.11461433977731039, 0.5556488498419703, 0.8525469539195112];

pub const HARTMAN6_FMAX: f64 = 3.321995171584242;
pub const HARTMAN6_XSTAR: [f64; 6] = [
    0.20170761788515482,
    0.14678094565327277,
    0.47674485123221866,
    0.27534239096212715,
    0.31165187529951177,
    0.6572751642210496,
];

pub const SHEKEL5_FMAX: f64 = 10.15319967905823;
pub const SHEKEL5_XSTAR: [f64; 4] = [
    4.000037151533384,
    4.000133276066714,
    4.000037151775734,
    4.000133277653639,
];

pub const SHEKEL7_FMAX: f64 = 10.402940566818666;
pub const SHEKEL7_XSTAR: [f64; 4] = [
    4.000572917323749,
    4.000689365577449,
    3.9994897075956723,
    3.999606156700567,
];

pub const SHEKEL10_FMAX: f64 = 10.536409816692046;
pub const SHEKEL10_XSTAR: [f64; 4] = [
    4.000746531574904,
    4.000592934926746,
    3.9996633971687863,
    3.9995098014808548,
];
