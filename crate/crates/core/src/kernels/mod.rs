//! Boundary kernels of the biharmonic Dirichlet problem on the unit disk.
//!
//! `H₀(z) = ½(1−|z|²)²/|1−z|²` reproduces the inward normal derivative and
//! `F₀(z) = H₀(z) + ½(1−|z|²)³/|1−z|⁴` reproduces the boundary trace. The
//! transforms integrate them as functions of `z·e^{−iθ}`, so the derivative
//! routines take θ explicitly.

mod gamma;
mod moments;

pub use gamma::gamma;
pub use moments::{
    holder_moment_bound, kernel_moment, kernel_moment_quadrature, kernel_moment_series, polylog_integral,
    MAX_SERIES_TERMS, SERIES_REL_CUTOFF,
};

use num_complex::Complex64;

use crate::error::Result;
use crate::point::{DiskPoint, WirtingerPair};

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// Classical Poisson kernel (1−|z|²)/|1−z|².
pub fn poisson_eval(z: DiskPoint) -> Result<f64> {
    z.require_interior()?;
    let w = z.z();
    Ok((1.0 - w.norm_sqr()) / (ONE - w).norm_sqr())
}

pub fn h0_eval(z: DiskPoint) -> Result<f64> {
    z.require_interior()?;
    Ok(h0(z.z()))
}

pub fn f0_eval(z: DiskPoint) -> Result<f64> {
    z.require_interior()?;
    Ok(f0(z.z()))
}

/// Wirtinger derivatives of θ ↦ H₀(z e^{−iθ}) with respect to z.
pub fn h0_dz(z: DiskPoint, theta: f64) -> Result<WirtingerPair> {
    z.require_interior()?;
    Ok(WirtingerPair::real(h0_dz_raw(z.z(), Complex64::cis(-theta))))
}

/// Wirtinger derivatives of θ ↦ F₀(z e^{−iθ}) with respect to z.
pub fn f0_dz(z: DiskPoint, theta: f64) -> Result<WirtingerPair> {
    z.require_interior()?;
    Ok(WirtingerPair::real(f0_dz_raw(z.z(), Complex64::cis(-theta))))
}

// Unchecked forms for the quadrature loops. Callers guarantee |w| < 1.

#[inline]
pub(crate) fn h0(w: Complex64) -> f64 {
    let s = 1.0 - w.norm_sqr();
    0.5 * s * s / (ONE - w).norm_sqr()
}

#[inline]
pub(crate) fn f0(w: Complex64) -> f64 {
    let s = 1.0 - w.norm_sqr();
    let d = (ONE - w).norm_sqr();
    0.5 * s * s / d + 0.5 * s * s * s / (d * d)
}

/// ∂/∂z H₀(z·rot), with `rot = e^{−iθ}`.
#[inline]
pub(crate) fn h0_dz_raw(z: Complex64, rot: Complex64) -> Complex64 {
    let s = 1.0 - z.norm_sqr();
    let w = z * rot;
    let a = ONE - w;
    let num = (rot * s - z.conj() * a * 2.0) * s;
    num / (a.conj() * a * a * 2.0)
}

/// ∂/∂z F₀(z·rot), with `rot = e^{−iθ}`.
#[inline]
pub(crate) fn f0_dz_raw(z: Complex64, rot: Complex64) -> Complex64 {
    let s = 1.0 - z.norm_sqr();
    let w = z * rot;
    let a = ONE - w;
    let ac = a.conj();
    let first = (rot * s - z.conj() * a * 2.0) * s / (ac * a * a * 2.0);
    let second = (rot * (2.0 * s) - z.conj() * a * 3.0) * (s * s) / (ac * ac * a * a * a * 2.0);
    first + second
}
