use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;

use super::CheckResult;
use crate::green::log_ratio;
use crate::kernels::{f0, h0};
use crate::kernels::{kernel_moment, kernel_moment_quadrature, kernel_moment_series};
use crate::point::DiskPoint;
use crate::quadrature::{CircleRule, DiskRule};
use crate::solver::Rules;

pub const IDENTITY_TOLERANCE: f64 = 1e-8;

const MOMENT_RADII: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 0.9];

/// 0, 0.25, 0.5e^{iπ/4}, 0.75, 0.9.
pub fn sample_points() -> Vec<DiskPoint> {
    vec![
        DiskPoint::ORIGIN,
        DiskPoint::polar(0.25, 0.0).unwrap(),
        DiskPoint::polar(0.5, FRAC_PI_4).unwrap(),
        DiskPoint::polar(0.75, 0.0).unwrap(),
        DiskPoint::polar(0.9, 0.0).unwrap(),
    ]
}

pub(crate) fn label(z: DiskPoint) -> String {
    let z = z.z();
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{:.4}{:+.4}i", z.re, z.im)
    }
}

/// Circle mean of `kernel(z e^{−iθ})` against 1 at every sample point.
pub fn kernel_mean_checks(kernel: &dyn Fn(Complex64) -> f64, rule: &CircleRule, tolerance: f64) -> Vec<CheckResult> {
    sample_points()
        .into_iter()
        .map(|z| {
            let mean: f64 = rule.rotations().iter().map(|rot| kernel(z.z() * rot)).sum::<f64>() * rule.weight();
            CheckResult::equal_real(format!("F0 mean, z={}", label(z)), mean, 1.0, tolerance)
        })
        .collect()
}

pub fn identity_suite(rules: &Rules, tolerance: f64) -> Vec<CheckResult> {
    let mut out = kernel_mean_checks(&f0, &rules.circle, tolerance);
    let circle = &rules.circle;

    for z in sample_points() {
        let mean: f64 = circle.rotations().iter().map(|rot| h0(z.z() * rot)).sum::<f64>() * circle.weight();
        out.push(CheckResult::equal_real(
            format!("H0 mean, z={}", label(z)),
            mean,
            (1.0 - z.norm_sqr()) / 2.0,
            tolerance,
        ));
    }

    for beta in [1.0, 2.0, 3.0] {
        for r in MOMENT_RADII {
            let series = kernel_moment_series(beta, r).expect("valid moment arguments");
            let quad = kernel_moment_quadrature(beta, Complex64::new(r, 0.0), circle.n_nodes());
            if beta < 3.0 {
                let closed = kernel_moment(beta, r).expect("valid moment arguments");
                out.push(CheckResult::equal_real(
                    format!("moment b={beta} r={r} series"),
                    series,
                    closed,
                    tolerance,
                ));
                out.push(CheckResult::equal_real(
                    format!("moment b={beta} r={r} quadrature"),
                    quad,
                    closed,
                    tolerance,
                ));
            } else {
                out.push(CheckResult::equal_real(
                    format!("moment b={beta} r={r} quadrature"),
                    quad,
                    series,
                    tolerance,
                ));
            }
        }
    }

    for z in sample_points() {
        let rule = match DiskRule::centered(z, rules.disk_angular) {
            Ok(rule) => rule,
            Err(_) => continue,
        };
        let w = z.z();
        let s = z.norm_sqr();
        let green_rep = rule.integrate_real(|zeta| log_ratio(w, zeta));
        out.push(CheckResult::equal_real(
            format!("log-ratio integral, z={}", label(z)),
            green_rep,
            1.0 - s,
            tolerance,
        ));
        let i = rule.integrate_real(|zeta| (w - zeta).norm_sqr() * log_ratio(w, zeta));
        out.push(CheckResult::equal_real(
            format!("I, z={}", label(z)),
            i,
            (1.0 - s * s) / 4.0,
            tolerance,
        ));
        // second slot fixed at the sample point, integrated over the first
        let j4 = rule.integrate_real(|x| (x - w).norm_sqr() * log_ratio(x, w));
        out.push(CheckResult::equal_real(
            format!("J4, zeta={}", label(z)),
            j4,
            (1.0 - s * s) / 4.0,
            tolerance,
        ));
    }
    out
}
