//! Numerical layer: pair-copula families and h-functions, the vine density
//! via the h-function recursion, cherry-tree copula densities, and the full
//! Gaussian copula density they are verified against.
//!
//! Only copula densities (uniform marginals) are evaluated. Pair-copulas are
//! simplified: their parameters do not depend on the conditioning values.

mod gaussian;
mod linalg;
pub mod normal;
mod pair;
mod pcc;

pub use gaussian::{
    cherry_log_density, gaussian_copula_log_density, markov_projection, partial_correlation, CorrelationMatrix,
};
pub use linalg::Lu;
pub use pair::{h_func, pc_density, Family, PairCopula};
pub use pcc::{vine_log_density, CopulaAssignment, VinePlan};

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::set::Vertex;

/// Lower clamp applied to every coordinate of a [`UnitPoint`].
pub const UNIT_EPS: f64 = 1e-9;

/// Point of the open unit cube. Coordinate `i` (0-based) belongs to vertex
/// `i + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitPoint(Vec<f64>);

impl UnitPoint {
    /// Accepts coordinates in `[0, 1]` and clamps them to
    /// `[UNIT_EPS, 1 - UNIT_EPS]`.
    pub fn new(u: Vec<f64>) -> Result<Self> {
        let mut u = u;
        for (index, x) in u.iter_mut().enumerate() {
            if !(0.0..=1.0).contains(x) {
                return Err(Error::PointOutOfRange { index, value: *x });
            }
            *x = x.clamp(UNIT_EPS, 1.0 - UNIT_EPS);
        }
        Ok(UnitPoint(u))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn at(&self, v: Vertex) -> Result<f64> {
        (v as usize)
            .checked_sub(1)
            .and_then(|i| self.0.get(i))
            .copied()
            .ok_or(Error::VertexOutOfRange(v))
    }
}
