//! The biharmonic Green function of the unit disk,
//!
//! ```text
//! G(z, ζ) = |z−ζ|² log|(1−ζ̄z)/(z−ζ)|² − (1−|z|²)(1−|ζ|²),
//! ```
//!
//! its z-derivatives, and the disk automorphism that moves a singular point
//! to the origin.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::{DiskPoint, WirtingerPair};

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

fn check_pair(z: DiskPoint, zeta: DiskPoint) -> Result<()> {
    z.require_interior()?;
    zeta.require_interior()
}

pub fn g_eval(z: DiskPoint, zeta: DiskPoint) -> Result<f64> {
    check_pair(z, zeta)?;
    Ok(green(z.z(), zeta.z()))
}

/// Wirtinger derivatives of G in its first argument.
///
/// On the diagonal this returns the continuous extension
/// `∂G/∂z (z, z) = z̄(1−|z|²)`.
pub fn g_dz(z: DiskPoint, zeta: DiskPoint) -> Result<WirtingerPair> {
    check_pair(z, zeta)?;
    Ok(WirtingerPair::real(green_dz(z.z(), zeta.z())))
}

/// `H₂ = ∂²G/∂z∂z̄` off the diagonal.
pub fn h2_eval(z: DiskPoint, zeta: DiskPoint) -> Result<f64> {
    check_pair(z, zeta)?;
    if z.z() == zeta.z() {
        return Err(Error::Singular(format!(
            "H2 has a logarithmic pole at z = zeta = {}",
            z.z()
        )));
    }
    Ok(green_h2(z.z(), zeta.z()))
}

/// `H₃ = ∂³G/∂z∂z̄∂z` off the diagonal.
pub fn h3_eval(z: DiskPoint, zeta: DiskPoint) -> Result<Complex64> {
    check_pair(z, zeta)?;
    if z.z() == zeta.z() {
        return Err(Error::Singular(format!("H3 has a simple pole at z = zeta = {}", z.z())));
    }
    Ok(green_h3(z.z(), zeta.z()))
}

/// log|(1−ζ̄z)/(z−ζ)|², the pseudo-hyperbolic log factor of G.
#[inline]
pub(crate) fn log_ratio(z: Complex64, zeta: Complex64) -> f64 {
    (ONE - zeta.conj() * z).norm_sqr().ln() - (z - zeta).norm_sqr().ln()
}

#[inline]
pub(crate) fn green(z: Complex64, zeta: Complex64) -> f64 {
    let d2 = (z - zeta).norm_sqr();
    // d² log d² → 0; evaluating the logs separately keeps 0·∞ out.
    let log_term = if d2 == 0.0 {
        0.0
    } else {
        d2 * ((ONE - zeta.conj() * z).norm_sqr().ln() - d2.ln())
    };
    log_term - (1.0 - z.norm_sqr()) * (1.0 - zeta.norm_sqr())
}

#[inline]
pub(crate) fn green_dz(z: Complex64, zeta: Complex64) -> Complex64 {
    let s_zeta = 1.0 - zeta.norm_sqr();
    let third = z.conj() * s_zeta;
    let diff_bar = (z - zeta).conj();
    if diff_bar == Complex64::new(0.0, 0.0) {
        return third;
    }
    let q = ONE - zeta.conj() * z;
    diff_bar * log_ratio(z, zeta) - diff_bar * s_zeta / q + third
}

#[inline]
pub(crate) fn green_h2(z: Complex64, zeta: Complex64) -> f64 {
    let s_zeta = 1.0 - zeta.norm_sqr();
    let q = ONE - z * zeta.conj();
    log_ratio(z, zeta) - s_zeta * (1.0 - z.norm_sqr() * zeta.norm_sqr()) / q.norm_sqr()
}

#[inline]
pub(crate) fn green_h3(z: Complex64, zeta: Complex64) -> Complex64 {
    let s_zeta = 1.0 - zeta.norm_sqr();
    let q = ONE - zeta.conj() * z;
    -(s_zeta / ((z - zeta) * q)) - zeta.conj() * s_zeta / (q * q)
}

/// The involutive disk automorphism φ(ζ) = (c − ζ)/(1 − ζc̄) centred at c.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MobiusMap {
    center: DiskPoint,
}

impl MobiusMap {
    pub fn new(center: DiskPoint) -> Result<Self> {
        center.require_interior()?;
        Ok(MobiusMap { center })
    }

    pub fn center(&self) -> DiskPoint {
        self.center
    }

    #[inline]
    pub fn apply(&self, zeta: Complex64) -> Complex64 {
        let c = self.center.z();
        (c - zeta) / (ONE - zeta * c.conj())
    }

    /// Jacobian of the area measure, dA(ζ) = jacobian(η)·dA(η) for ζ = φ(η).
    #[inline]
    pub fn jacobian(&self, eta: Complex64) -> f64 {
        let c = self.center.z();
        let s = 1.0 - c.norm_sqr();
        let d = (ONE - eta * c.conj()).norm_sqr();
        s * s / (d * d)
    }

    /// Pre-image ζ = φ(η) of a point of the η-disk and the area Jacobian.
    pub fn pullback(&self, eta: DiskPoint) -> Result<(DiskPoint, f64)> {
        eta.require_interior()?;
        let zeta = DiskPoint::from_complex(self.apply(eta.z()))?;
        Ok((zeta, self.jacobian(eta.z())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pt(re: f64, im: f64) -> DiskPoint {
        DiskPoint::new(re, im).unwrap()
    }

    fn random_point(rng: &mut ChaCha8Rng, rmax: f64) -> DiskPoint {
        let r = rmax * rng.gen::<f64>().sqrt();
        DiskPoint::polar(r, rng.gen::<f64>() * std::f64::consts::TAU).unwrap()
    }

    // Central-difference Wirtinger derivative ∂/∂z of a scalar function.
    fn fd_dz<F: Fn(Complex64) -> Complex64>(f: F, z: Complex64, h: f64) -> Complex64 {
        let i = Complex64::new(0.0, 1.0);
        let dx = (f(z + h) - f(z - h)) / (2.0 * h);
        let dy = (f(z + i * h) - f(z - i * h)) / (2.0 * h);
        (dx - i * dy) * 0.5
    }

    fn fd_dzbar<F: Fn(Complex64) -> Complex64>(f: F, z: Complex64, h: f64) -> Complex64 {
        let i = Complex64::new(0.0, 1.0);
        let dx = (f(z + h) - f(z - h)) / (2.0 * h);
        let dy = (f(z + i * h) - f(z - i * h)) / (2.0 * h);
        (dx + i * dy) * 0.5
    }

    #[test]
    fn green_values() {
        let v = g_eval(pt(0.0, 0.0), pt(0.5, 0.0)).unwrap();
        assert!((v - (0.25 * 4f64.ln() - 0.75)).abs() < 1e-15);
        assert!((v + 0.403_426_409_720_027_3).abs() < 1e-12);
        assert_eq!(g_eval(pt(0.0, 0.0), pt(0.0, 0.0)).unwrap(), -1.0);
        let z = pt(0.4, -0.3);
        assert!((g_eval(z, z).unwrap() + (1.0 - z.norm_sqr()).powi(2)).abs() < 1e-15);
        assert_eq!(
            g_eval(pt(0.3, 0.0), pt(0.7, 0.0)).unwrap(),
            g_eval(pt(0.7, 0.0), pt(0.3, 0.0)).unwrap()
        );
    }

    #[test]
    fn green_dz_values() {
        let d = g_dz(pt(0.0, 0.0), pt(0.5, 0.0)).unwrap();
        // true derivative: −(−0.5·ln 0.25 − 0.375)
        assert!((d.d_z - Complex64::new(-0.318_147_180_559_945_3, 0.0)).norm() < 1e-12);
        assert_eq!(g_dz(pt(0.0, 0.0), pt(0.0, 0.0)).unwrap().d_z, Complex64::new(0.0, 0.0));
        let z = pt(0.3, 0.6);
        let diag = g_dz(z, z).unwrap().d_z;
        assert!((diag - z.z().conj() * (1.0 - z.norm_sqr())).norm() < 1e-15);
    }

    #[test]
    fn green_dz_near_diagonal_is_continuous() {
        let z = Complex64::new(0.3, 0.6);
        let near = green_dz(z, z + Complex64::new(1e-9, -1e-9));
        assert!((near - green_dz(z, z)).norm() < 1e-6);
        let g_near = green(z, z + Complex64::new(1e-10, 0.0));
        assert!((g_near - green(z, z)).abs() < 1e-9);
        assert!(g_near.is_finite());
    }

    #[test]
    fn h2_h3_values() {
        let h2 = h2_eval(pt(0.0, 0.0), pt(0.5, 0.0)).unwrap();
        assert!((h2 - (4f64.ln() - 0.75)).abs() < 1e-15);
        let h3 = h3_eval(pt(0.0, 0.0), pt(0.5, 0.0)).unwrap();
        assert!((h3 - Complex64::new(1.125, 0.0)).norm() < 1e-15);
        let h3i = h3_eval(pt(0.0, 0.0), pt(0.0, 0.5)).unwrap();
        assert!((h3i - Complex64::new(0.0, -1.125)).norm() < 1e-15);
    }

    #[test]
    fn h2_diverges_and_refuses_diagonal() {
        let o = pt(0.0, 0.0);
        let mut last = 0.0;
        for k in 1..8 {
            let v = h2_eval(o, pt(10f64.powi(-k), 0.0)).unwrap();
            assert!(v > last);
            last = v;
        }
        assert!(last > 30.0);
        assert!(matches!(h2_eval(o, o), Err(Error::Singular(_))));
        assert!(matches!(h3_eval(o, o), Err(Error::Singular(_))));
    }

    #[test]
    fn derivative_chain_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut zs = vec![(pt(0.3, 0.0), pt(0.6, 0.0))];
        while zs.len() < 30 {
            let z = random_point(&mut rng, 0.9);
            let zeta = random_point(&mut rng, 0.9);
            if (z.z() - zeta.z()).norm() > 0.05 {
                zs.push((z, zeta));
            }
        }
        for (z, zeta) in zs {
            let c = zeta.z();
            let g = |w: Complex64| Complex64::new(green(w, c), 0.0);
            let fd1 = fd_dz(g, z.z(), 1e-5);
            assert!(
                (g_dz(z, zeta).unwrap().d_z - fd1).norm() < 1e-6,
                "G_z at {z:?} {zeta:?}"
            );

            let gz = |w: Complex64| green_dz(w, c);
            let fd2 = fd_dzbar(gz, z.z(), 1e-4);
            assert!((Complex64::new(h2_eval(z, zeta).unwrap(), 0.0) - fd2).norm() < 1e-4);

            let h2 = |w: Complex64| Complex64::new(green_h2(w, c), 0.0);
            let fd3 = fd_dz(h2, z.z(), 1e-4);
            assert!((h3_eval(z, zeta).unwrap() - fd3).norm() < 1e-4 * (1.0 + fd3.norm()));
        }
    }

    #[test]
    fn symmetric_in_arguments() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let z = random_point(&mut rng, 0.99);
            let zeta = random_point(&mut rng, 0.99);
            let a = g_eval(z, zeta).unwrap();
            let b = g_eval(zeta, z).unwrap();
            assert!((a - b).abs() <= 1e-14);
        }
    }

    #[test]
    fn nonpositive_on_bidisk() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..32 {
            let z = random_point(&mut rng, 0.999);
            for _ in 0..32 {
                let zeta = random_point(&mut rng, 0.999);
                assert!(g_eval(z, zeta).unwrap() <= 1e-12);
            }
        }
    }

    #[test]
    fn vanishes_at_boundary() {
        let zeta = pt(0.2, -0.4);
        for k in 0..8 {
            let z = DiskPoint::polar(1.0 - 1e-6, k as f64 * 0.8).unwrap();
            assert!(g_eval(z, zeta).unwrap().abs() < 1e-4);
            assert!(g_dz(z, zeta).unwrap().norm() < 1e-4);
        }
    }

    #[test]
    fn growth_envelope() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..500 {
            let z = random_point(&mut rng, 0.99);
            let zeta = random_point(&mut rng, 0.99);
            if z == zeta {
                continue;
            }
            let bound = 2.0 * (1.0 + log_ratio(z.z(), zeta.z()));
            assert!(g_dz(z, zeta).unwrap().d_z.norm() <= bound);
            // |H₂| ≤ 5(1 − log|(z−ζ)/(1−ζ̄z)|²)
            assert!(h2_eval(z, zeta).unwrap().abs() <= 2.5 * bound);
        }
    }

    #[test]
    fn mobius_pullback() {
        let m0 = MobiusMap::new(pt(0.0, 0.0)).unwrap();
        let (zeta, jac) = m0.pullback(pt(0.4, 0.0)).unwrap();
        assert!((zeta.z() - Complex64::new(-0.4, 0.0)).norm() < 1e-16);
        assert_eq!(jac, 1.0);

        let m = MobiusMap::new(pt(0.5, 0.0)).unwrap();
        let (zeta, jac) = m.pullback(pt(0.0, 0.0)).unwrap();
        assert!((zeta.z() - Complex64::new(0.5, 0.0)).norm() < 1e-16);
        assert!((jac - 0.5625).abs() < 1e-16);
        assert!(m.pullback(pt(1.0, 0.0)).is_err());
    }

    #[test]
    fn mobius_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let m = MobiusMap::new(random_point(&mut rng, 0.95)).unwrap();
            let eta = random_point(&mut rng, 0.95);
            let (zeta, _) = m.pullback(eta).unwrap();
            let (back, _) = m.pullback(zeta).unwrap();
            assert!((back.z() - eta.z()).norm() <= 1e-14);
            assert!(m.apply(m.center().z()).norm() < 1e-15);
        }
    }
}
