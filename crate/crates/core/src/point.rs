//! Points of the unit disk and Wirtinger derivative pairs.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Kernels are only evaluated for |z| ≤ 1 − `BOUNDARY_MARGIN`; every kernel
/// denominator degenerates on the unit circle.
pub const BOUNDARY_MARGIN: f64 = 1e-12;

/// A point of the closed unit disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskPoint(Complex64);

impl DiskPoint {
    pub const ORIGIN: DiskPoint = DiskPoint(Complex64 { re: 0.0, im: 0.0 });

    /// Accepts any point of the closed disk.
    pub fn new(re: f64, im: f64) -> Result<Self> {
        Self::from_complex(Complex64::new(re, im))
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::Domain(format!("non-finite point {z}")));
        }
        if z.norm_sqr() > 1.0 {
            return Err(Error::Domain(format!("|z| = {} exceeds 1", z.norm())));
        }
        Ok(DiskPoint(z))
    }

    pub fn polar(r: f64, theta: f64) -> Result<Self> {
        Self::from_complex(Complex64::from_polar(r, theta))
    }

    /// Accepts only points where the kernels are defined, i.e.
    /// |z| ≤ 1 − [`BOUNDARY_MARGIN`].
    pub fn interior(z: Complex64) -> Result<Self> {
        let p = Self::from_complex(z)?;
        p.require_interior()?;
        Ok(p)
    }

    pub fn require_interior(&self) -> Result<()> {
        if self.0.norm() > 1.0 - BOUNDARY_MARGIN {
            Err(Error::Domain(format!(
                "|z| = {} is not inside the open disk (margin {BOUNDARY_MARGIN:e})",
                self.0.norm()
            )))
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn z(&self) -> Complex64 {
        self.0
    }

    #[inline]
    pub fn re(&self) -> f64 {
        self.0.re
    }

    #[inline]
    pub fn im(&self) -> f64 {
        self.0.im
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    #[inline]
    pub fn norm_sqr(&self) -> f64 {
        self.0.norm_sqr()
    }
}

impl From<DiskPoint> for Complex64 {
    fn from(p: DiskPoint) -> Self {
        p.0
    }
}

/// The pair (∂/∂z, ∂/∂z̄) of a function at a point.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct WirtingerPair {
    pub d_z: Complex64,
    pub d_zbar: Complex64,
}

impl WirtingerPair {
    pub fn new(d_z: Complex64, d_zbar: Complex64) -> Self {
        WirtingerPair { d_z, d_zbar }
    }

    /// Pair of a real-valued function, whose ∂/∂z̄ is the conjugate of ∂/∂z.
    pub fn real(d_z: Complex64) -> Self {
        WirtingerPair {
            d_z,
            d_zbar: d_z.conj(),
        }
    }

    /// Operator norm of the real Jacobian, |p_z| + |p_z̄|.
    pub fn norm(&self) -> f64 {
        self.d_z.norm() + self.d_zbar.norm()
    }

    /// Minimum stretch of the real Jacobian, ||p_z| − |p_z̄||.
    pub fn min_stretch(&self) -> f64 {
        (self.d_z.norm() - self.d_zbar.norm()).abs()
    }

    /// Jacobian determinant |p_z|² − |p_z̄|².
    pub fn jacobian(&self) -> f64 {
        self.d_z.norm_sqr() - self.d_zbar.norm_sqr()
    }
}

impl std::ops::Add for WirtingerPair {
    type Output = WirtingerPair;
    fn add(self, rhs: Self) -> Self {
        WirtingerPair::new(self.d_z + rhs.d_z, self.d_zbar + rhs.d_zbar)
    }
}

impl std::ops::Sub for WirtingerPair {
    type Output = WirtingerPair;
    fn sub(self, rhs: Self) -> Self {
        WirtingerPair::new(self.d_z - rhs.d_z, self.d_zbar - rhs.d_zbar)
    }
}

impl std::ops::Mul<Complex64> for WirtingerPair {
    type Output = WirtingerPair;
    fn mul(self, rhs: Complex64) -> Self {
        WirtingerPair::new(self.d_z * rhs, self.d_zbar * rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_outside_and_boundary_for_interior() {
        assert!(DiskPoint::new(1.0, 0.1).is_err());
        assert!(DiskPoint::new(1.0, 0.0).is_ok());
        assert!(DiskPoint::interior(Complex64::new(1.0, 0.0)).is_err());
        assert!(DiskPoint::interior(Complex64::new(1.0 - 1e-13, 0.0)).is_err());
        assert!(DiskPoint::interior(Complex64::new(0.999, 0.0)).is_ok());
        assert!(DiskPoint::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn matrix_stats() {
        let p = WirtingerPair::new(Complex64::new(3.0, 0.0), Complex64::new(0.0, 1.0));
        assert_eq!(p.norm(), 4.0);
        assert_eq!(p.min_stretch(), 2.0);
        assert_eq!(p.jacobian(), 8.0);
        assert!((p.jacobian().abs() - p.norm() * p.min_stretch()).abs() < 1e-15);
    }
}
