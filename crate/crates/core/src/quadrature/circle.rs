use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const DEFAULT_CIRCLE_NODES: usize = 4096;

/// Equal-weight rule for the mean (1/2π)∫₀^{2π}·dθ, nodes θₖ = 2πk/n.
#[derive(Debug, Clone, PartialEq)]
pub struct CircleRule {
    n_nodes: usize,
    thetas: Vec<f64>,
    // e^{−iθₖ}, the rotation the kernels are composed with.
    rotations: Vec<Complex64>,
}

impl CircleRule {
    pub fn new(n_nodes: usize) -> Result<Self> {
        if n_nodes == 0 {
            return Err(Error::validation("n_nodes", "circle rule needs at least one node"));
        }
        let thetas: Vec<f64> = (0..n_nodes).map(|k| TAU * k as f64 / n_nodes as f64).collect();
        let rotations = thetas.iter().map(|&t| Complex64::cis(-t)).collect();
        Ok(CircleRule {
            n_nodes,
            thetas,
            rotations,
        })
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    /// e^{−iθₖ} at every node.
    pub fn rotations(&self) -> &[Complex64] {
        &self.rotations
    }

    pub fn weight(&self) -> f64 {
        1.0 / self.n_nodes as f64
    }

    pub fn integrate<F: FnMut(f64) -> Complex64>(&self, mut f: F) -> Complex64 {
        let sum: Complex64 = self.thetas.iter().map(|&t| f(t)).sum();
        sum * self.weight()
    }

    pub fn try_integrate<F: FnMut(f64) -> Result<Complex64>>(&self, mut f: F) -> Result<Complex64> {
        let mut sum = Complex64::new(0.0, 0.0);
        for &t in &self.thetas {
            sum += f(t)?;
        }
        Ok(sum * self.weight())
    }
}

impl Default for CircleRule {
    fn default() -> Self {
        CircleRule::new(DEFAULT_CIRCLE_NODES).expect("default circle rule")
    }
}

pub fn circle_integrate<F: FnMut(f64) -> Result<Complex64>>(rule: &CircleRule, f: F) -> Result<Complex64> {
    rule.try_integrate(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::f0_eval;
    use crate::point::DiskPoint;

    #[test]
    fn constant_and_modes() {
        for n in [1, 3, 8, 64] {
            let r = CircleRule::new(n).unwrap();
            assert!((r.integrate(|_| Complex64::new(1.0, 0.0)) - 1.0).norm() < 1e-15);
        }
        let r = CircleRule::new(8).unwrap();
        let v = r.integrate(|t| Complex64::cis(3.0 * t));
        assert!(v.norm() <= 1e-15);
        assert!(CircleRule::new(0).is_err());
    }

    #[test]
    fn f0_mean_is_one() {
        let r = CircleRule::new(64).unwrap();
        let z = Complex64::new(0.5, 0.0);
        let v = circle_integrate(&r, |t| {
            let p = DiskPoint::from_complex(z * Complex64::cis(-t))?;
            Ok(Complex64::new(f0_eval(p)?, 0.0))
        })
        .unwrap();
        assert!((v - 1.0).norm() < 1e-12);
    }

    #[test]
    fn failures_propagate() {
        let r = CircleRule::new(4).unwrap();
        let out = circle_integrate(&r, |_| Err(Error::Domain("boom".into())));
        assert!(matches!(out, Err(Error::Domain(_))));
    }
}
