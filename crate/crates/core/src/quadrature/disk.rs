//! Rules for the normalized area measure dA = dx dy/π on the unit disk.

use std::f64::consts::TAU;

use num_complex::Complex64;

use super::gauss::{gauss_legendre, gauss_legendre_on};
use crate::error::{Error, Result};
use crate::green::MobiusMap;
use crate::point::DiskPoint;

pub const DEFAULT_RADIAL: usize = 128;
pub const DEFAULT_ANGULAR: usize = 256;

/// Innermost radius of the centred rule; the mass of the excluded disk is
/// below 1e-24.
pub const CENTERED_INNER_RADIUS: f64 = 1e-12;
/// Gauss points on each geometric panel near the singular point.
pub const CENTERED_INNER_POINTS: usize = 6;
/// Gauss points on each outer panel.
pub const CENTERED_OUTER_POINTS: usize = 10;
/// The geometric (ratio 2) inner panels run up to this radius.
const CENTERED_SPLIT: f64 = 0.25;
/// Minimum ring size; covers the angular modes of source terms of degree ≤ 16.
pub const CENTERED_MIN_RING: usize = 40;
/// Target decay exponent for the angular Fourier tail on each ring.
const RING_DECAY: f64 = 40.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DiskScheme {
    Plain,
    Centered(DiskPoint),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskNode {
    pub zeta: Complex64,
    pub weight: f64,
}

/// A fixed rule Σ wₖ f(ζₖ) ≈ ∫_D f dA. Nodes are stored in ascending
/// radius, then angle, and summed in that order.
#[derive(Debug, Clone)]
pub struct DiskRule {
    n_radial: usize,
    n_angular: usize,
    scheme: DiskScheme,
    nodes: Vec<DiskNode>,
}

impl DiskRule {
    /// Gauss–Legendre in r (weighted by 2r) times equal-weight angles.
    pub fn plain(n_radial: usize, n_angular: usize) -> Result<Self> {
        check_sizes(n_radial, n_angular)?;
        let (x, w) = gauss_legendre(n_radial);
        let mut nodes = Vec::with_capacity(n_radial * n_angular);
        let dtheta = TAU / n_angular as f64;
        for (x, w) in x.iter().zip(&w) {
            let r = 0.5 * (x + 1.0);
            let wr = 0.5 * w * 2.0 * r / n_angular as f64;
            for j in 0..n_angular {
                nodes.push(DiskNode {
                    zeta: Complex64::from_polar(r, j as f64 * dtheta),
                    weight: wr,
                });
            }
        }
        Ok(DiskRule {
            n_radial,
            n_angular,
            scheme: DiskScheme::Plain,
            nodes,
        })
    }

    /// Rule built in the variable η = φ(ζ) of the automorphism centred at
    /// `center`, so an integrand singular at ζ = center is singular at η = 0.
    ///
    /// Radially: geometric panels (ratio 2) from 1e-12 to 1/4, then panels
    /// whose widths halve towards |η| = 1 until they are no wider than half the
    /// gap 1/|c| − 1 to the pole of the pulled-back measure. Each ring gets enough
    /// angles for (r|c|)^n to fall below e^{−60}, but never fewer than
    /// `CENTERED_MIN_RING` and, on rings beyond |η| = 1/2, never fewer than
    /// `n_angular`.
    pub fn centered(center: DiskPoint, n_angular: usize) -> Result<Self> {
        check_sizes(1, n_angular)?;
        let map = MobiusMap::new(center)?;
        let c = center.norm();

        let mut radial: Vec<(f64, f64)> = Vec::new();
        let mut a = CENTERED_INNER_RADIUS;
        while a < CENTERED_SPLIT {
            let b = (2.0 * a).min(CENTERED_SPLIT);
            radial.extend(gauss_legendre_on(CENTERED_INNER_POINTS, a, b));
            a = b;
        }
        let pole_gap = if c > 0.0 { 1.0 / c - 1.0 } else { f64::INFINITY };
        let mut gap = 1.0 - CENTERED_SPLIT;
        let mut a = CENTERED_SPLIT;
        loop {
            if gap <= 0.5 * pole_gap || gap < 1e-14 {
                radial.extend(gauss_legendre_on(CENTERED_OUTER_POINTS, a, 1.0));
                break;
            }
            let b = a + 0.5 * gap;
            radial.extend(gauss_legendre_on(CENTERED_OUTER_POINTS, a, b));
            gap = 1.0 - b;
            a = b;
        }

        let mut nodes = Vec::new();
        for (r, w) in radial {
            let ring = ring_size(r * c, if r > 0.5 { n_angular } else { CENTERED_MIN_RING });
            let dtheta = TAU / ring as f64;
            let wr = w * 2.0 * r / ring as f64;
            for j in 0..ring {
                let eta = Complex64::from_polar(r, (j as f64 + 0.5) * dtheta);
                nodes.push(DiskNode {
                    zeta: map.apply(eta),
                    weight: wr * map.jacobian(eta),
                });
            }
        }
        Ok(DiskRule {
            n_radial: 0,
            n_angular,
            scheme: DiskScheme::Centered(center),
            nodes,
        })
    }

    pub fn n_radial(&self) -> usize {
        self.n_radial
    }

    pub fn n_angular(&self) -> usize {
        self.n_angular
    }

    pub fn scheme(&self) -> DiskScheme {
        self.scheme
    }

    pub fn nodes(&self) -> &[DiskNode] {
        &self.nodes
    }

    pub fn total_weight(&self) -> f64 {
        self.nodes.iter().map(|n| n.weight).sum()
    }

    pub fn integrate<F: FnMut(Complex64) -> Complex64>(&self, mut f: F) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for n in &self.nodes {
            acc += f(n.zeta) * n.weight;
        }
        acc
    }

    pub fn integrate_real<F: FnMut(Complex64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes.iter().map(|n| f(n.zeta) * n.weight).sum()
    }

    pub fn try_integrate<F: FnMut(Complex64) -> Result<Complex64>>(&self, mut f: F) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for n in &self.nodes {
            acc += f(n.zeta)? * n.weight;
        }
        Ok(acc)
    }
}

fn check_sizes(n_radial: usize, n_angular: usize) -> Result<()> {
    if n_radial == 0 {
        return Err(Error::validation("n_radial", "must be positive"));
    }
    if n_angular == 0 {
        return Err(Error::validation("n_angular", "must be positive"));
    }
    Ok(())
}

/// Number of angles for a ring on which the integrand's Fourier modes decay
/// like `rho^k`; rounded up to a multiple of 8.
fn ring_size(rho: f64, floor: usize) -> usize {
    let needed = if rho <= 0.0 {
        0.0
    } else {
        (RING_DECAY / -rho.ln()).ceil()
    };
    let n = (needed as usize).max(floor);
    n.div_ceil(8) * 8
}

/// ∫_D f dA with a plain rule.
pub fn disk_integrate<F: FnMut(Complex64) -> Result<Complex64>>(rule: &DiskRule, f: F) -> Result<Complex64> {
    if rule.scheme() != DiskScheme::Plain {
        return Err(Error::validation("scheme", "disk_integrate expects a plain rule"));
    }
    rule.try_integrate(f)
}

/// ∫_D f dA with the rule centred at `center`, for integrands with a
/// logarithmic singularity at ζ = center.
pub fn disk_integrate_centered<F: FnMut(Complex64) -> Result<Complex64>>(
    center: DiskPoint,
    n_angular: usize,
    f: F,
) -> Result<Complex64> {
    DiskRule::centered(center, n_angular)?.try_integrate(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::green::{green, log_ratio};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn pt(re: f64, im: f64) -> DiskPoint {
        DiskPoint::new(re, im).unwrap()
    }

    #[test]
    fn plain_basic_integrals() {
        let rule = DiskRule::plain(DEFAULT_RADIAL, DEFAULT_ANGULAR).unwrap();
        assert!((rule.total_weight() - 1.0).abs() < 1e-13);
        let one = disk_integrate(&rule, |_| Ok(c(1.0))).unwrap();
        assert!((one - 1.0).norm() < 1e-13);
        let bump = disk_integrate(&rule, |z| Ok(c(1.0 - z.norm_sqr()))).unwrap();
        assert!((bump - 0.5).norm() < 1e-13);
        // |ζ|² log(1/|ζ|²) has a mild singularity at 0 only.
        let log = disk_integrate(&rule, |z| {
            let r2 = z.norm_sqr();
            Ok(c(-r2 * r2.ln()))
        })
        .unwrap();
        assert!((log - 0.25).norm() < 1e-10, "{log}");
    }

    #[test]
    fn plain_monomial_exactness() {
        let rule = DiskRule::plain(DEFAULT_RADIAL, DEFAULT_ANGULAR).unwrap();
        for a in 0..=10 {
            for b in 0..=10 {
                let v = rule.integrate(|z| z.powu(a) * z.conj().powu(b));
                let exact = if a == b { 1.0 / (a as f64 + 1.0) } else { 0.0 };
                assert!((v - exact).norm() < 1e-12, "a {a} b {b}: {v}");
            }
        }
    }

    #[test]
    fn centered_measure_and_log_identity() {
        for center in [pt(0.0, 0.0), pt(0.3, 0.0), pt(-0.5, 0.5), pt(0.0, 0.9)] {
            let rule = DiskRule::centered(center, DEFAULT_ANGULAR).unwrap();
            assert!((rule.total_weight() - 1.0).abs() < 1e-12, "{center:?}");
        }
        let z = c(0.3);
        let v = disk_integrate_centered(pt(0.3, 0.0), DEFAULT_ANGULAR, |zeta| Ok(c(log_ratio(z, zeta)))).unwrap();
        assert!((v - 0.91).norm() < 1e-8, "{v}");
        assert!(DiskRule::centered(pt(1.0, 0.0), 64).is_err());
    }

    #[test]
    fn centered_nodes_avoid_center() {
        let center = pt(0.4, -0.2);
        let rule = DiskRule::centered(center, 64).unwrap();
        assert!(rule.nodes().iter().all(|n| n.zeta != center.z()));
        assert!(rule.nodes().iter().all(|n| n.zeta.norm() < 1.0));
    }

    #[test]
    fn centered_agrees_with_plain_on_green() {
        let z = c(0.3);
        let plain = DiskRule::plain(256, 256).unwrap();
        let centered = DiskRule::centered(pt(0.3, 0.0), 256).unwrap();
        let a = plain.integrate_real(|zeta| green(z, zeta));
        let b = centered.integrate_real(|zeta| green(z, zeta));
        assert!((a - b).abs() < 1e-8, "{a} vs {b}");
    }

    #[test]
    fn doubling_changes_little() {
        let z = c(0.3);
        let cases: [fn(Complex64, Complex64) -> f64; 2] = [green, log_ratio];
        for f in cases {
            let a = DiskRule::centered(pt(0.3, 0.0), 256)
                .unwrap()
                .integrate_real(|zeta| f(z, zeta));
            let b = DiskRule::centered(pt(0.3, 0.0), 512)
                .unwrap()
                .integrate_real(|zeta| f(z, zeta));
            assert!((a - b).abs() < 1e-8);
        }
        let p1 = DiskRule::plain(128, 256).unwrap().integrate_real(|zeta| green(z, zeta));
        let p2 = DiskRule::plain(256, 512).unwrap().integrate_real(|zeta| green(z, zeta));
        assert!((p1 - p2).abs() < 1e-8, "{p1} vs {p2}");
    }
}
