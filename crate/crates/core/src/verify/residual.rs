use std::collections::HashMap;

use num_complex::Complex64;

use super::{CheckResult, ManufacturedCase};
use crate::error::{Error, Result};
use crate::lipschitz::{estimate_boundary_lipschitz, p_bound};
use crate::point::DiskPoint;
use crate::solver::Problem;

/// Stencil support must stay inside this radius.
pub const FD_MAX_RADIUS: f64 = 0.85;
/// Approximate spacing between residual stencil centres.
pub const FD_CENTER_STEP: f64 = 0.2;
pub const FD_MAX_SPACING: f64 = 0.05;
/// Central-difference step for gradient cross-checks.
pub const FD_STEP: f64 = 1e-5;

/// Bilaplacian stencil: 5-point Laplacian applied twice, as offsets in
/// units of the spacing with weights before the 1/h⁴ factor.
const STENCIL: [(i64, i64, f64); 13] = [
    (0, 0, 20.0),
    (1, 0, -8.0),
    (-1, 0, -8.0),
    (0, 1, -8.0),
    (0, -1, -8.0),
    (1, 1, 2.0),
    (1, -1, 2.0),
    (-1, 1, 2.0),
    (-1, -1, 2.0),
    (2, 0, 1.0),
    (-2, 0, 1.0),
    (0, 2, 1.0),
    (0, -2, 1.0),
];

fn check_spacing(spacing: f64) -> Result<()> {
    if !(spacing > 0.0 && spacing <= FD_MAX_SPACING) {
        return Err(Error::Domain(format!(
            "spacing {spacing} must lie in (0, {FD_MAX_SPACING}]"
        )));
    }
    Ok(())
}

/// Stencil centres: lattice points at multiples of `stride` spacings whose
/// stencil stays within [`FD_MAX_RADIUS`].
fn centres(spacing: f64, stride: i64) -> Vec<(i64, i64)> {
    let reach = ((FD_MAX_RADIUS - 2.0 * spacing) / spacing).floor() as i64;
    let mut out = Vec::new();
    let lim = reach / stride;
    for a in -lim..=lim {
        for b in -lim..=lim {
            let (i, j) = (a * stride, b * stride);
            let r = spacing * ((i * i + j * j) as f64).sqrt();
            if r + 2.0 * spacing <= FD_MAX_RADIUS {
                out.push((i, j));
            }
        }
    }
    out
}

/// Max over centres of |Δ²ₕΦ − g|, with Δ²ₕ the iterated 5-point stencil
/// scaled by 1/16 for Δ = ∂²/∂z∂z̄.
fn residual_at(problem: &Problem, spacing: f64, centres: &[(i64, i64)]) -> Result<f64> {
    let mut cache: HashMap<(i64, i64), Complex64> = HashMap::new();
    let scale = 1.0 / (16.0 * spacing.powi(4));
    let mut worst = 0.0f64;
    for &(i, j) in centres {
        let mut acc = Complex64::new(0.0, 0.0);
        for &(di, dj, w) in &STENCIL {
            let key = (i + di, j + dj);
            let v = match cache.get(&key) {
                Some(v) => *v,
                None => {
                    let z = DiskPoint::new(key.0 as f64 * spacing, key.1 as f64 * spacing)?;
                    let v = problem.value(z)?;
                    cache.insert(key, v);
                    v
                }
            };
            acc += w * v;
        }
        let c = Complex64::new(i as f64 * spacing, j as f64 * spacing);
        worst = worst.max((acc * scale - problem.case().g.eval(c)).norm());
    }
    Ok(worst)
}

fn stride_for(spacing: f64) -> i64 {
    ((FD_CENTER_STEP / spacing).round() as i64).max(1)
}

pub fn fd_bilaplacian_residual(problem: &Problem, spacing: f64, tolerance: f64) -> Result<CheckResult> {
    check_spacing(spacing)?;
    let res = residual_at(problem, spacing, &centres(spacing, stride_for(spacing)))?;
    Ok(CheckResult::equal_real(
        format!("bilaplacian residual, h={spacing}"),
        res,
        0.0,
        tolerance,
    ))
}

/// Residuals at spacing h and h/2 on the same centres.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdOrder {
    pub coarse: f64,
    pub fine: f64,
    pub order: f64,
}

pub fn fd_residual_order(problem: &Problem, spacing: f64) -> Result<FdOrder> {
    check_spacing(spacing)?;
    let stride = stride_for(spacing);
    let coarse_centres = centres(spacing, stride);
    let fine_centres: Vec<_> = coarse_centres.iter().map(|&(i, j)| (2 * i, 2 * j)).collect();
    let coarse = residual_at(problem, spacing, &coarse_centres)?;
    let fine = residual_at(problem, spacing / 2.0, &fine_centres)?;
    Ok(FdOrder {
        coarse,
        fine,
        order: (coarse / fine).log2(),
    })
}

/// Compares Φ(re^{iθ}) with f and the one-sided radial difference with h at
/// `n_angles` angles. Φ − f is bounded by (1 − r)·P through the Lipschitz
/// bound; the normal-derivative tolerance 4(1 − r₁)(L + ‖h‖ + ‖g‖) is a
/// second-derivative heuristic.
pub fn boundary_trace_check(problem: &Problem, radii: &[f64], n_angles: usize) -> Result<Vec<CheckResult>> {
    let case = problem.case();
    for &r in radii {
        if !(0.0..1.0).contains(&r) {
            return Err(Error::Domain(format!("trace radius {r} must lie in [0, 1)")));
        }
        problem.rules().check_resolution(r)?;
    }
    let l = estimate_boundary_lipschitz(&case.f)?;
    let (h_sup, g_sup) = (case.h.sup_norm(), case.g.sup_norm_bound());
    let p = p_bound(l, h_sup, g_sup)?;
    let mut out = Vec::new();
    let thetas: Vec<f64> = (0..n_angles)
        .map(|k| std::f64::consts::TAU * k as f64 / n_angles as f64)
        .collect();
    let value = |r: f64, t: f64| problem.value(DiskPoint::polar(r, t)?);

    for &r in radii {
        let mut worst = 0.0f64;
        for &t in &thetas {
            worst = worst.max((value(r, t)? - case.f.eval(t)).norm());
        }
        out.push(CheckResult::bound(
            format!("trace at r={r}"),
            worst,
            (1.0 - r) * p,
            1e-8,
        ));
    }
    for pair in radii.windows(2) {
        let (r1, r2) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
        let mut worst = 0.0f64;
        for &t in &thetas {
            let inward = -(value(r2, t)? - value(r1, t)?) / (r2 - r1);
            worst = worst.max((inward - case.h.eval(t)).norm());
        }
        let limit = 4.0 * (1.0 - r1) * (l + h_sup + g_sup);
        out.push(CheckResult::bound(
            format!("normal trace at r={r1},{r2}"),
            worst,
            limit,
            1e-8,
        ));
    }
    Ok(out)
}

/// Kernel-derivative gradient against central differences of Φ.
pub fn gradient_crosscheck(problem: &Problem, points: &[DiskPoint], tolerance: f64) -> Result<Vec<CheckResult>> {
    let i = Complex64::i();
    let mut out = Vec::new();
    for &z in points {
        if z.norm() > 0.9 {
            return Err(Error::Domain(format!(
                "cross-check point |z| = {} exceeds 0.9",
                z.norm()
            )));
        }
        let w = z.z();
        let at = |p: Complex64| problem.value(DiskPoint::from_complex(p)?);
        let dx = (at(w + FD_STEP)? - at(w - FD_STEP)?) / (2.0 * FD_STEP);
        let dy = (at(w + i * FD_STEP)? - at(w - i * FD_STEP)?) / (2.0 * FD_STEP);
        let grad = problem.gradient(z)?;
        let tag = super::identities::label(z);
        out.push(CheckResult::equal(
            format!("d_z at z={tag}"),
            grad.d_z,
            (dx - i * dy) / 2.0,
            tolerance,
        ));
        out.push(CheckResult::equal(
            format!("d_zbar at z={tag}"),
            grad.d_zbar,
            (dx + i * dy) / 2.0,
            tolerance,
        ));
    }
    Ok(out)
}

/// Largest |Φ̃ − Φ*| where Φ̃ adds the Green term instead of subtracting it.
pub fn wrong_sign_error(mc: &ManufacturedCase, problem: &Problem, points: &[DiskPoint]) -> Result<f64> {
    let mut worst = 0.0f64;
    for &z in points {
        let s = problem.value_split(z)?;
        worst = worst.max((s.boundary - s.green - mc.exact(z.z())).norm());
    }
    Ok(worst)
}
