//! Built-in benchmark objectives: a six-function suite of classic scalable
//! maximization problems and a 23-function suite mixing high-dimensional
//! unimodal/multimodal functions with low-dimensional fixed ones. Every
//! function is posed for maximization; the registry carries each one's
//! search box, dimensionality rules, and true optimum.

pub mod constants;
pub mod gso;
pub mod vpso;

use std::sync::Mutex;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::objective::{EvalError, Objective, UniformStream};
use crate::space::DecisionSpace;
use crate::EngineError;

use constants::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    AckleyV,
    CosineMixture,
    Exponential,
    GriewankV,
    RastriginV,
    SchwefelShifted,
    Sphere,
    AbsSumProd,
    PrefixSums,
    MaxAbs,
    Rosenbrock,
    Step,
    NoisyQuartic,
    Schwefel,
    Rastrigin,
    Ackley,
    Griewank,
    Penalized1,
    Penalized2,
    Foxholes,
    Kowalik,
    Camel,
    Branin,
    GoldsteinPrice,
    Hartman3,
    Hartman6,
    Shekel(usize),
}

#[derive(Debug, Clone, Copy)]
enum Bounds {
    Uniform(f64, f64),
    PerDim(&'static [(f64, f64)]),
}

/// One registry entry: identity, search box, dimensionality rules, and the
/// true maximum used for reporting residuals.
#[derive(Debug)]
pub struct BenchmarkSpec {
    pub id: &'static str,
    pub label: &'static str,
    pub suite: &'static str,
    pub nd_default: usize,
    /// Fixed-dimension functions reject any other `nd`.
    pub nd_fixed: bool,
    /// False only for objectives with a stochastic component.
    pub deterministic: bool,
    kind: Kind,
    bounds: Bounds,
}

impl BenchmarkSpec {
    /// The search box at dimension `nd`.
    pub fn space(&self, nd: usize) -> Result<DecisionSpace, EngineError> {
        if self.nd_fixed && nd != self.nd_default {
            return Err(EngineError::InvalidConfig(format!(
                "{} is fixed at {} dimensions, got {nd}",
                self.id, self.nd_default
            )));
        }
        let ds = match self.bounds {
            Bounds::Uniform(lo, hi) => DecisionSpace::uniform(lo, hi, nd)?,
            Bounds::PerDim(pairs) => {
                let (mins, maxs) = pairs.iter().copied().unzip();
                DecisionSpace::new(mins, maxs)?
            }
        };
        Ok(ds)
    }

    /// The true maximum at dimension `nd`.
    pub fn fmax(&self, nd: usize) -> f64 {
        let ndf = nd as f64;
        match self.kind {
            Kind::CosineMixture => 0.1 * ndf,
            Kind::Exponential => 1.0,
            Kind::SchwefelShifted => ndf * (SCHWEFEL_DIM_MAX - SCHWEFEL_OFFSET_PER_DIM),
            Kind::Schwefel => ndf * SCHWEFEL_DIM_MAX,
            Kind::Foxholes => FOXHOLES_FMAX,
            Kind::Kowalik => KOWALIK_FMAX,
            Kind::Camel => CAMEL_FMAX,
            Kind::Branin => BRANIN_FMAX,
            Kind::GoldsteinPrice => -3.0,
            Kind::Hartman3 => HARTMAN3_FMAX,
            Kind::Hartman6 => HARTMAN6_FMAX,
            Kind::Shekel(5) => SHEKEL5_FMAX,
            Kind::Shekel(7) => SHEKEL7_FMAX,
            Kind::Shekel(10) => SHEKEL10_FMAX,
            _ => 0.0,
        }
    }

    /// A point attaining the maximum at dimension `nd`.
    pub fn xstar(&self, nd: usize) -> Vec<f64> {
        match self.kind {
            Kind::Rosenbrock | Kind::Penalized2 => vec![1.0; nd],
            Kind::Penalized1 => vec![-1.0; nd],
            Kind::Griewank => vec![100.0; nd],
            Kind::SchwefelShifted | Kind::Schwefel => vec![SCHWEFEL_ARGMAX; nd],
            Kind::Foxholes => vec![-32.0, -32.0],
            Kind::Kowalik => KOWALIK_XSTAR.to_vec(),
            Kind::Camel => CAMEL_XSTAR.to_vec(),
            Kind::Branin => vec![std::f64::consts::PI, 2.275],
            Kind::GoldsteinPrice => vec![0.0, -1.0],
            Kind::Hartman3 => HARTMAN3_XSTAR.to_vec(),
            Kind::Hartman6 => HARTMAN6_XSTAR.to_vec(),
            Kind::Shekel(5) => SHEKEL5_XSTAR.to_vec(),
            Kind::Shekel(7) => SHEKEL7_XSTAR.to_vec(),
            Kind::Shekel(10) => SHEKEL10_XSTAR.to_vec(),
            _ => vec![0.0; nd],
        }
    }

    /// An evaluator for this function. `seed` feeds the noise stream of
    /// stochastic objectives and is ignored by deterministic ones.
    pub fn objective(&self, seed: u64) -> BenchObjective {
        let noise = (!self.deterministic).then(|| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            // A stream index no restart loop uses, so noise draws never
            // collide with placement draws.
            rng.set_stream(u64::MAX);
            Mutex::new(rng)
        });
        BenchObjective {
            kind: self.kind,
            nd_required: self.nd_fixed.then_some(self.nd_default),
            noise,
        }
    }
}

/// A registry function bound to a concrete evaluator.
#[derive(Debug)]
pub struct BenchObjective {
    kind: Kind,
    nd_required: Option<usize>,
    noise: Option<Mutex<ChaCha8Rng>>,
}

impl Objective for BenchObjective {
    fn eval(&self, x: &[f64]) -> Result<f64, EvalError> {
        if let Some(expected) = self.nd_required {
            if x.len() != expected {
                return Err(EvalError::DimensionMismatch {
                    expected,
                    got: x.len(),
                });
            }
        }
        Ok(match self.kind {
            Kind::AckleyV => vpso::ackley(x),
            Kind::CosineMixture => vpso::cosine_mixture(x),
            Kind::Exponential => vpso::exponential(x),
            Kind::GriewankV => vpso::griewank(x),
            Kind::RastriginV => vpso::rastrigin(x),
            Kind::SchwefelShifted => vpso::schwefel(x),
            Kind::Sphere => gso::f1_sphere(x),
            Kind::AbsSumProd => gso::f2_abs_sum_prod(x),
            Kind::PrefixSums => gso::f3_prefix_sums(x),
            Kind::MaxAbs => gso::f4_max_abs(x),
            Kind::Rosenbrock => gso::f5_rosenbrock(x),
            Kind::Step => gso::f6_step(x),
            Kind::NoisyQuartic => {
                let rng = self.noise.as_ref().ok_or(EvalError::MissingNoise)?;
                let draw = rng.lock().expect("noise stream poisoned").next_unit();
                gso::f7_noisy_quartic(x, draw)
            }
            Kind::Schwefel => gso::f8_schwefel(x),
            Kind::Rastrigin => gso::f9_rastrigin(x),
            Kind::Ackley => gso::f10_ackley(x),
            Kind::Griewank => gso::f11_shifted_griewank(x),
            Kind::Penalized1 => gso::f12_penalized_sine(x),
            Kind::Penalized2 => gso::f13_penalized_sine2(x),
            Kind::Foxholes => gso::f14_foxholes(x),
            Kind::Kowalik => gso::f15_kowalik(x),
            Kind::Camel => gso::f16_camel(x),
            Kind::Branin => gso::f17_branin(x),
            Kind::GoldsteinPrice => gso::f18_goldstein_price(x),
            Kind::Hartman3 => gso::f19_hartman3(x),
            Kind::Hartman6 => gso::f20_hartman6(x),
            Kind::Shekel(m) => gso::shekel(x, m),
        })
    }

    fn concurrent_safe(&self) -> bool {
        self.noise.is_none()
    }
}

macro_rules! spec {
    ($id:literal, $label:literal, $suite:literal, $nd:literal, $fixed:literal,
     $det:literal, $kind:expr, $bounds:expr) => {
        BenchmarkSpec {
            id: $id,
            label: $label,
            suite: $suite,
            nd_default: $nd,
            nd_fixed: $fixed,
            deterministic: $det,
            kind: $kind,
            bounds: $bounds,
        }
    };
}

static BRANIN_BOUNDS: [(f64, f64); 2] = [(-5.0, 10.0), (0.0, 15.0)];

static REGISTRY: [BenchmarkSpec; 29] = [
    spec!("vpso/ackley", "Ackley", "vpso", 30, false, true, Kind::AckleyV, Bounds::Uniform(-30.0, 30.0)),
    spec!("vpso/cosine_mixture", "Cosine Mixture", "vpso", 30, false, true, Kind::CosineMixture, Bounds::Uniform(-1.0, 1.0)),
    spec!("vpso/exponential", "Exponential", "vpso", 30, false, true, Kind::Exponential, Bounds::Uniform(-1.0, 1.0)),
    spec!("vpso/griewank", "Griewank", "vpso", 30, false, true, Kind::GriewankV, Bounds::Uniform(-600.0, 600.0)),
    spec!("vpso/rastrigin", "Rastrigin", "vpso", 30, false, true, Kind::RastriginV, Bounds::Uniform(-5.12, 5.12)),
    spec!("vpso/schwefel", "Schwefel 2.26 (shifted)", "vpso", 30, false, true, Kind::SchwefelShifted, Bounds::Uniform(-500.0, 500.0)),
    spec!("gso/f1", "Sphere", "gso", 30, false, true, Kind::Sphere, Bounds::Uniform(-100.0, 100.0)),
    spec!("gso/f2", "Schwefel 2.22", "gso", 30, false, true, Kind::AbsSumProd, Bounds::Uniform(-10.0, 10.0)),
    spec!("gso/f3", "Schwefel 1.2", "gso", 30, false, true, Kind::PrefixSums, Bounds::Uniform(-100.0, 100.0)),
    spec!("gso/f4", "Schwefel 2.21", "gso", 30, false, true, Kind::MaxAbs, Bounds::Uniform(-100.0, 100.0)),
    spec!("gso/f5", "Rosenbrock", "gso", 30, false, true, Kind::Rosenbrock, Bounds::Uniform(-30.0, 30.0)),
    spec!("gso/f6", "Step", "gso", 30, false, true, Kind::Step, Bounds::Uniform(-100.0, 100.0)),
    spec!("gso/f7", "Quartic with noise", "gso", 30, false, false, Kind::NoisyQuartic, Bounds::Uniform(-1.28, 1.28)),
    spec!("gso/f8", "Schwefel 2.26", "gso", 30, false, true, Kind::Schwefel, Bounds::Uniform(-500.0, 500.0)),
    spec!("gso/f9", "Rastrigin", "gso", 30, false, true, Kind::Rastrigin, Bounds::Uniform(-5.12, 5.12)),
    spec!("gso/f10", "Ackley", "gso", 30, false, true, Kind::Ackley, Bounds::Uniform(-32.0, 32.0)),
    spec!("gso/f11", "Griewank", "gso", 30, false, true, Kind::Griewank, Bounds::Uniform(-600.0, 600.0)),
    spec!("gso/f12", "Penalized 1", "gso", 30, false, true, Kind::Penalized1, Bounds::Uniform(-50.0, 50.0)),
    spec!("gso/f13", "Penalized 2", "gso", 30, false, true, Kind::Penalized2, Bounds::Uniform(-50.0, 50.0)),
    spec!("gso/f14", "Shekel's Foxholes", "gso", 2, true, true, Kind::Foxholes, Bounds::Uniform(-65.536, 65.536)),
    spec!("gso/f15", "Kowalik", "gso", 4, true, true, Kind::Kowalik, Bounds::Uniform(-5.0, 5.0)),
    spec!("gso/f16", "Six-Hump Camel-Back", "gso", 2, true, true, Kind::Camel, Bounds::Uniform(-5.0, 5.0)),
    spec!("gso/f17", "Branin", "gso", 2, true, true, Kind::Branin, Bounds::PerDim(&BRANIN_BOUNDS)),
    spec!("gso/f18", "Goldstein-Price", "gso", 2, true, true, Kind::GoldsteinPrice, Bounds::Uniform(-2.0, 2.0)),
    spec!("gso/f19", "Hartman 3", "gso", 3, true, true, Kind::Hartman3, Bounds::Uniform(0.0, 1.0)),
    spec!("gso/f20", "Hartman 6", "gso", 6, true, true, Kind::Hartman6, Bounds::Uniform(0.0, 1.0)),
    spec!("gso/f21", "Shekel 5", "gso", 4, true, true, Kind::Shekel(5), Bounds::Uniform(0.0, 10.0)),
    spec!("gso/f22", "Shekel 7", "gso", 4, true, true, Kind::Shekel(7), Bounds::Uniform(0.0, 10.0)),
    spec!("gso/f23", "Shekel 10", "gso", 4, true, true, Kind::Shekel(10), Bounds::Uniform(0.0, 10.0)),
];

/// All built-in benchmark functions, suite order.
pub fn registry() -> &'static [BenchmarkSpec] {
    &REGISTRY
}

/// Finds a function by id, e.g. `"gso/f15"`.
pub fn lookup(id: &str) -> Option<&'static BenchmarkSpec> {
    REGISTRY.iter().find(|s| s.id == id)
}
