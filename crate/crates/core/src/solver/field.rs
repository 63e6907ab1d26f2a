use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::point::WirtingerPair;

/// Largest radius a grid may reach.
pub const MAX_GRID_RADIUS: f64 = 0.999;

/// Polar lattice rᵢ = r_max·i/n_r (i < n_r), θⱼ = 2πj/n_theta. With the
/// default r_max = 1 every radius stays strictly inside the disk.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub n_r: usize,
    pub n_theta: usize,
    pub r_max: f64,
    /// Skip the circle-rule resolution check.
    pub allow_near_boundary: bool,
}

impl GridSpec {
    pub fn new(n_r: usize, n_theta: usize) -> Self {
        GridSpec::with_r_max(n_r, n_theta, 1.0)
    }

    pub fn with_r_max(n_r: usize, n_theta: usize, r_max: f64) -> Self {
        GridSpec {
            n_r,
            n_theta,
            r_max,
            allow_near_boundary: false,
        }
    }

    pub fn allow_near_boundary(mut self, allow: bool) -> Self {
        self.allow_near_boundary = allow;
        self
    }

    pub fn outer_radius(&self) -> f64 {
        self.radius(self.n_r - 1)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_r < 2 || self.n_theta < 2 {
            return Err(Error::validation("grid", "need at least 2 radii and 2 angles"));
        }
        if !(self.r_max > 0.0 && self.r_max <= 1.0) {
            return Err(Error::validation(
                "grid",
                format!("r_max = {} must lie in (0, 1]", self.r_max),
            ));
        }
        if self.outer_radius() > MAX_GRID_RADIUS {
            return Err(Error::validation(
                "grid",
                format!("outer radius {} exceeds {MAX_GRID_RADIUS}", self.outer_radius()),
            ));
        }
        Ok(())
    }

    pub fn radius(&self, i: usize) -> f64 {
        self.r_max * i as f64 / self.n_r as f64
    }

    pub fn theta(&self, j: usize) -> f64 {
        TAU * j as f64 / self.n_theta as f64
    }

    /// (r, θ) of every node, radius-major.
    pub fn points(&self) -> Vec<(f64, f64)> {
        (0..self.n_r)
            .flat_map(|i| (0..self.n_theta).map(move |j| (i, j)))
            .map(|(i, j)| (self.radius(i), self.theta(j)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.n_r * self.n_theta
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Φ (and optionally its gradient) on a polar grid. Failed nodes are holes
/// (`None`) listed in `failures`.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionField {
    pub grid: GridSpec,
    pub values: Vec<Option<Complex64>>,
    pub gradients: Option<Vec<Option<WirtingerPair>>>,
    pub failures: Vec<(usize, String)>,
    pub fingerprint: String,
}

impl SolutionField {
    pub fn new(
        grid: GridSpec,
        values: Vec<Option<Complex64>>,
        gradients: Option<Vec<Option<WirtingerPair>>>,
        failures: Vec<(usize, String)>,
        fingerprint: String,
    ) -> Self {
        SolutionField {
            grid,
            values,
            gradients,
            failures,
            fingerprint,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn point(&self, idx: usize) -> Complex64 {
        let (i, j) = (idx / self.grid.n_theta, idx % self.grid.n_theta);
        Complex64::from_polar(self.grid.radius(i), self.grid.theta(j))
    }

    /// (z, Φ(z)) at every node without a hole.
    pub fn samples(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(idx, v)| v.map(|v| (self.point(idx), v)))
    }

    pub fn is_complete(&self) -> bool {
        self.failures.is_empty()
    }
}
