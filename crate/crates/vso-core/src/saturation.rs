//! Two-register saturation detector shared by both search engines.

/// Tracks the best fitness at successive checkpoints; the run stops once the
/// gain across a full checkpoint period falls to the tolerance.
#[derive(Debug, Clone)]
pub(crate) struct Saturation {
    fbest1: f64,
    fbest2: f64,
}

impl Saturation {
    pub fn new() -> Self {
        Self {
            fbest1: f64::NEG_INFINITY,
            fbest2: f64::NEG_INFINITY,
        }
    }

    /// Re-arms the detector after an improvement during the initial scan:
    /// the newest best fills the first register, the second returns to the
    /// sentinel so at least two checkpoints must pass before an exit.
    pub fn reset(&mut self, fstar: f64) {
        self.fbest1 = fstar;
        self.fbest2 = f64::NEG_INFINITY;
    }

    /// Checkpoint shift. Returns true when the improvement over the last
    /// full period is within `tol`, i.e. the search has saturated.
    pub fn shift(&mut self, fstar: f64, tol: f64) -> bool {
        self.fbest1 = self.fbest2;
        self.fbest2 = fstar;
        self.fbest2 - self.fbest1 <= tol
    }
}
