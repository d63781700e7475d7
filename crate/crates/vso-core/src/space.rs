//! Decision-space geometry and the run bookkeeping shared by both engines.

use serde::Serialize;
use thiserror::Error;

/// Errors from [`DecisionSpace`] construction.
#[derive(Debug, Error, PartialEq)]
pub enum SpaceError {
    #[error("bound vectors are empty")]
    Empty,
    #[error("bound vectors disagree in length: {mins} mins vs {maxs} maxs")]
    DimensionMismatch { mins: usize, maxs: usize },
    #[error("degenerate bound at index {index}: min {min} is not below max {max}")]
    DegenerateBound { index: usize, min: f64, max: f64 },
    #[error("gamma {gamma} outside [0, 1]")]
    GammaOutOfRange { gamma: f64 },
}

/// An axis-aligned box `mins[i] <= x_i <= maxs[i]` with its principal
/// diagonal length cached.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecisionSpace {
    mins: Vec<f64>,
    maxs: Vec<f64>,
    diag_length: f64,
}

impl DecisionSpace {
    /// Builds a decision space, validating that every lower bound lies
    /// strictly below its upper bound.
    pub fn new(mins: Vec<f64>, maxs: Vec<f64>) -> Result<Self, SpaceError> {
        if mins.is_empty() || maxs.is_empty() {
            return Err(SpaceError::Empty);
        }
        if mins.len() != maxs.len() {
            return Err(SpaceError::DimensionMismatch {
                mins: mins.len(),
                maxs: maxs.len(),
            });
        }
        for (i, (&lo, &hi)) in mins.iter().zip(&maxs).enumerate() {
            if !lo.is_finite() || !hi.is_finite() || lo >= hi {
                return Err(SpaceError::DegenerateBound {
                    index: i,
                    min: lo,
                    max: hi,
                });
            }
        }
        let diag_length = mins
            .iter()
            .zip(&maxs)
            .map(|(&lo, &hi)| (hi - lo) * (hi - lo))
            .sum::<f64>()
            .sqrt();
        Ok(Self {
            mins,
            maxs,
            diag_length,
        })
    }

    /// Convenience constructor for the common symmetric box `[lo, hi]^nd`.
    pub fn uniform(lo: f64, hi: f64, nd: usize) -> Result<Self, SpaceError> {
        Self::new(vec![lo; nd], vec![hi; nd])
    }

    /// Lower bounds, one per dimension.
    pub fn mins(&self) -> &[f64] {
        &self.mins
    }

    /// Upper bounds, one per dimension.
    pub fn maxs(&self) -> &[f64] {
        &self.maxs
    }

    /// Dimension count.
    pub fn nd(&self) -> usize {
        self.mins.len()
    }

    /// Euclidean length of the principal diagonal from `mins` to `maxs`.
    pub fn diag_length(&self) -> f64 {
        self.diag_length
    }

    /// The point `mins + gamma * (maxs - mins)` on the principal diagonal.
    ///
    /// `gamma` must lie in `[0, 1]`; 0 returns the lower corner exactly and
    /// 1 the upper corner exactly.
    pub fn diagonal_point(&self, gamma: f64) -> Result<Vec<f64>, SpaceError> {
        if !(0.0..=1.0).contains(&gamma) {
            return Err(SpaceError::GammaOutOfRange { gamma });
        }
        Ok(self
            .mins
            .iter()
            .zip(&self.maxs)
            .map(|(&lo, &hi)| {
                // Exact at the corners; the lerp form is used in between so
                // the point tracks the diagonal without overshoot.
                if gamma == 0.0 {
                    lo
                } else if gamma == 1.0 {
                    hi
                } else {
                    lo + gamma * (hi - lo)
                }
            })
            .collect())
    }

    /// Whether `x` lies inside the closed box.
    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.nd()
            && x.iter()
                .zip(self.mins.iter().zip(&self.maxs))
                .all(|(&v, (&lo, &hi))| v >= lo && v <= hi)
    }
}

/// A set of sample-point position vectors at one iteration: `np` rows of
/// `nd` coordinates, stored row-major.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointSet {
    positions: Vec<f64>,
    np: usize,
    nd: usize,
    /// Iteration index `j` this distribution belongs to.
    pub iteration: usize,
}

impl PointSet {
    /// Builds a point set from a flat row-major coordinate buffer.
    ///
    /// Panics if the buffer length is not `np * nd`.
    pub fn from_flat(positions: Vec<f64>, np: usize, nd: usize, iteration: usize) -> Self {
        assert_eq!(
            positions.len(),
            np * nd,
            "flat buffer length must equal np * nd"
        );
        Self {
            positions,
            np,
            nd,
            iteration,
        }
    }

    /// Number of sample points.
    pub fn np(&self) -> usize {
        self.np
    }

    /// Coordinates per point.
    pub fn nd(&self) -> usize {
        self.nd
    }

    /// Coordinates of point `p`.
    pub fn point(&self, p: usize) -> &[f64] {
        &self.positions[p * self.nd..(p + 1) * self.nd]
    }

    /// Mutable coordinates of point `p`.
    pub fn point_mut(&mut self, p: usize) -> &mut [f64] {
        &mut self.positions[p * self.nd..(p + 1) * self.nd]
    }

    /// Iterates points in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = &[f64]> {
        self.positions.chunks_exact(self.nd)
    }

    /// The flat row-major coordinate buffer.
    pub fn as_flat(&self) -> &[f64] {
        &self.positions
    }
}

/// The elitist best record: fitness `F*` and position `R*`, plus where the
/// record was set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BestRecord {
    /// Best fitness found so far (maximization sense).
    pub fstar: f64,
    /// Coordinates of the best point.
    pub rstar: Vec<f64>,
    /// Point index that produced the record.
    pub found_at_point: usize,
    /// Iteration at which the record was set.
    pub found_at_iteration: usize,
}

/// Outcome of one engine run: the best record, exact evaluation accounting,
/// and the per-iteration fitness trace.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunResult {
    pub best: BestRecord,
    /// Total objective evaluations performed.
    pub n_eval: u64,
    /// Final iteration index reached.
    pub last_iteration: usize,
    /// `(iteration, best-fitness-so-far)` pairs; the fitness component is
    /// non-decreasing.
    pub trace: Vec<(usize, f64)>,
    /// Wall-clock duration of the run in seconds.
    pub wall_time: f64,
}
