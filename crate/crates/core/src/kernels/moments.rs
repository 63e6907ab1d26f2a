//! Circle means of |1 − r e^{iθ}|^{−2β} and the polylogarithmic radial
//! integrals used in the Green-potential estimates.

use std::f64::consts::PI;

use super::gamma::gamma;
use crate::error::{Error, Result};

/// Hard cap on series terms.
pub const MAX_SERIES_TERMS: usize = 100_000;

/// Relative size of a series term, against the partial sum, at which
/// summation stops.
pub const SERIES_REL_CUTOFF: f64 = 1e-16;

fn check_moment_args(beta: f64, r: f64) -> Result<()> {
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::Domain(format!("moment order beta = {beta} must be positive")));
    }
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("moment radius r = {r} must lie in [0, 1)")));
    }
    Ok(())
}

/// (1/2π)∫₀^{2π} |1 − r e^{iθ}|^{−2β} dθ.
///
/// Closed forms are used for β = 1 and β = 2; every other order is summed
/// from the series Σₙ (Γ(n+β)/(n!Γ(β)))² r^{2n}.
pub fn kernel_moment(beta: f64, r: f64) -> Result<f64> {
    check_moment_args(beta, r)?;
    let r2 = r * r;
    if beta == 1.0 {
        Ok(1.0 / (1.0 - r2))
    } else if beta == 2.0 {
        Ok((1.0 + r2) / (1.0 - r2).powi(3))
    } else {
        kernel_moment_series(beta, r)
    }
}

/// Series form of [`kernel_moment`] for any β > 0.
///
/// The coefficients Γ(n+β)/(n!Γ(β)) are generated by their ratio
/// (n+β)/(n+1), so Γ itself is never evaluated. Summation stops once the
/// terms are decreasing and the next one is below
/// [`SERIES_REL_CUTOFF`] times the partial sum.
pub fn kernel_moment_series(beta: f64, r: f64) -> Result<f64> {
    check_moment_args(beta, r)?;
    let r2 = r * r;
    let mut coeff = 1.0_f64;
    let mut power = 1.0_f64;
    let mut sum = 1.0_f64;
    for n in 0..MAX_SERIES_TERMS {
        let ratio = (n as f64 + beta) / (n as f64 + 1.0);
        coeff *= ratio;
        power *= r2;
        let term = coeff * coeff * power;
        sum += term;
        let decreasing = ratio * ratio * r2 < 1.0;
        if decreasing && term < SERIES_REL_CUTOFF * sum {
            break;
        }
    }
    Ok(sum)
}

/// The Hölder upper bound √(1+r²)/(1−r²)² on the β = 3/2 moment.
pub fn holder_moment_bound(r: f64) -> Result<f64> {
    check_moment_args(1.5, r)?;
    let r2 = r * r;
    Ok((1.0 + r2).sqrt() / (1.0 - r2).powi(2))
}

/// ∫₀¹ t^a (log 1/t)^{p−1} dt = Γ(p)/(1+a)^p, or with `radial` set the
/// substituted form ∫₀¹ r^{2a+1} (log 1/r²)^{p−1} dr = Γ(p)/(2(1+a)^p).
pub fn polylog_integral(a: f64, p: f64, radial: bool) -> Result<f64> {
    if !(a > -1.0 && a.is_finite()) {
        return Err(Error::Domain(format!("exponent a = {a} must exceed -1")));
    }
    if !(p >= 1.0 && p.is_finite()) {
        return Err(Error::Domain(format!("log power p = {p} must be at least 1")));
    }
    let value = gamma(p) / (1.0 + a).powf(p);
    Ok(if radial { 0.5 * value } else { value })
}

/// Trapezoidal circle mean of |1 − z e^{iθ}|^{−2β}; used to test the
/// moment formulas against direct quadrature.
pub fn kernel_moment_quadrature(beta: f64, z: num_complex::Complex64, n_nodes: usize) -> f64 {
    let step = 2.0 * PI / n_nodes as f64;
    let mut acc = 0.0;
    for k in 0..n_nodes {
        let w = z * num_complex::Complex64::cis(k as f64 * step);
        acc += (num_complex::Complex64::new(1.0, 0.0) - w).norm_sqr().powf(-beta);
    }
    acc / n_nodes as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn spot_values() {
        assert!((kernel_moment(1.0, 0.5).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert!((kernel_moment(2.0, 0.5).unwrap() - 80.0 / 27.0).abs() < 1e-14);
        assert_eq!(kernel_moment(3.0, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn closed_forms_match_series() {
        for &r in &[0.0, 0.25, 0.5, 0.75, 0.9] {
            for beta in [1.0, 2.0] {
                let closed = kernel_moment(beta, r).unwrap();
                let series = kernel_moment_series(beta, r).unwrap();
                assert!(
                    ((closed - series) / closed).abs() < 1e-12,
                    "beta {beta}, r {r}: {closed} vs {series}"
                );
            }
        }
    }

    #[test]
    fn beta_three_series_matches_explicit_coefficients() {
        // coefficients (n+1)²(n+2)²/4
        for &r in &[0.3f64, 0.6, 0.85] {
            let explicit: f64 = (0..4000)
                .map(|n| {
                    let n = n as f64;
                    (n + 1.0).powi(2) * (n + 2.0).powi(2) / 4.0 * r.powf(2.0 * n)
                })
                .sum();
            let series = kernel_moment(3.0, r).unwrap();
            assert!(((series - explicit) / explicit).abs() < 1e-13);
        }
    }

    #[test]
    fn fractional_order_matches_quadrature() {
        for &beta in &[0.5, 1.5, 2.5] {
            for &r in &[0.2, 0.7] {
                let q = kernel_moment_quadrature(beta, Complex64::new(r, 0.0), 2048);
                let s = kernel_moment(beta, r).unwrap();
                assert!(((q - s) / s).abs() < 1e-12, "beta {beta} r {r}: {q} vs {s}");
            }
        }
    }

    #[test]
    fn rotation_invariance() {
        for beta in [1.0, 2.0, 3.0] {
            let r = 0.6;
            let a = kernel_moment_quadrature(beta, Complex64::new(r, 0.0), 512);
            let b = kernel_moment_quadrature(beta, Complex64::from_polar(r, PI / 3.0), 512);
            assert!((a - b).abs() < 1e-12 * a.max(1.0));
        }
    }

    #[test]
    fn holder_bound_holds() {
        for i in 0..20 {
            let r = i as f64 * 0.049;
            let q = kernel_moment_quadrature(1.5, Complex64::new(r, 0.0), 4096);
            assert!(q <= holder_moment_bound(r).unwrap() + 1e-12, "r {r}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(kernel_moment(1.0, 1.0).is_err());
        assert!(kernel_moment(0.0, 0.5).is_err());
        assert!(kernel_moment(-1.0, 0.5).is_err());
        assert!(polylog_integral(-1.0, 2.0, false).is_err());
        assert!(polylog_integral(0.0, 0.5, false).is_err());
    }

    #[test]
    fn polylog_values() {
        assert!((polylog_integral(0.0, 1.0, false).unwrap() - 1.0).abs() < 1e-14);
        assert!((polylog_integral(1.0, 2.0, false).unwrap() - 0.25).abs() < 1e-14);
        assert!((polylog_integral(1.0, 2.0, true).unwrap() - 0.125).abs() < 1e-14);
    }

    #[test]
    fn polylog_matches_midpoint_oracle() {
        // ∫ t^a log(1/t)^{p-1} dt with a substitution t = e^{-s}, midpoint rule in s.
        for &(a, p) in &[(0.5, 2.0), (2.0, 3.0), (-0.5, 2.5)] {
            let h = 1e-3;
            let oracle: f64 = (0..60_000)
                .map(|k| {
                    let s = (k as f64 + 0.5) * h;
                    (-(a + 1.0) * s).exp() * s.powf(p - 1.0) * h
                })
                .sum();
            let exact = polylog_integral(a, p, false).unwrap();
            assert!((oracle - exact).abs() < 1e-6, "a {a} p {p}: {oracle} vs {exact}");
        }
    }
}
