use std::io::Write;
use std::path::Path;

use biharm_core::green::{g_dz, g_eval};
use biharm_core::kernels::{f0_dz, f0_eval, h0_dz, h0_eval};
use biharm_core::lipschitz::{analyze, CaseAnalysis};
use biharm_core::solver::{GridSpec, Problem, Rules, SolutionField};
use biharm_core::verify::{
    all_passed, bound_suite, boundary_trace_check, fd_bilaplacian_residual, fd_residual_order, gradient_crosscheck,
    identity_suite, CheckResult, FdOrder,
};
use biharm_core::DiskPoint;
use num_complex::Complex64;
use serde::Serialize;

use crate::case::LoadedCase;
use crate::error::{CliError, CliResult};
use crate::field::{write_atomic, FieldFile};

/// Radii for the boundary-trace comparison in `verify`.
pub const TRACE_RADII: [f64; 2] = [0.98, 0.99];
pub const TRACE_ANGLES: usize = 16;
pub const DEFAULT_FD_SPACING: f64 = 0.02;
pub const DEFAULT_FD_TOLERANCE: f64 = 1e-6;
pub const GRADIENT_TOLERANCE: f64 = 1e-6;

fn io(e: std::io::Error) -> CliError {
    CliError::Write {
        path: "<stdout>".into(),
        source: e,
    }
}

fn print_checks(out: &mut dyn Write, checks: &[CheckResult]) -> CliResult<()> {
    for c in checks {
        writeln!(out, "{c}").map_err(io)?;
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    writeln!(out, "{} checks, {} failed", checks.len(), failed).map_err(io)?;
    Ok(())
}

fn require_passed(checks: &[CheckResult]) -> CliResult<()> {
    if all_passed(checks) {
        Ok(())
    } else {
        Err(CliError::ChecksFailed {
            failed: checks.iter().filter(|c| !c.passed).count(),
            total: checks.len(),
        })
    }
}

fn write_report<T: Serialize>(path: Option<&Path>, report: &T) -> CliResult<()> {
    if let Some(path) = path {
        let mut text = serde_json::to_string_pretty(report).expect("reports always serialize");
        text.push('\n');
        write_atomic(path, &text)?;
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct ChecksReport<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    fingerprint: Option<&'a str>,
    checks: &'a [CheckResult],
    #[serde(skip_serializing_if = "Option::is_none")]
    fd_order: Option<FdOrderRecord>,
}

#[derive(Debug, Serialize)]
struct FdOrderRecord {
    coarse: f64,
    fine: f64,
    order: f64,
}

impl From<FdOrder> for FdOrderRecord {
    fn from(o: FdOrder) -> Self {
        FdOrderRecord {
            coarse: o.coarse,
            fine: o.fine,
            order: o.order,
        }
    }
}

pub fn cmd_identities(tolerance: f64, report: Option<&Path>, out: &mut dyn Write) -> CliResult<Vec<CheckResult>> {
    if !(tolerance >= 0.0) {
        return Err(CliError::invalid("tol", "must be nonnegative"));
    }
    let rules = Rules::default();
    let mut checks = identity_suite(&rules, tolerance);
    checks.extend(bound_suite(&rules));
    print_checks(out, &checks)?;
    write_report(
        report,
        &ChecksReport {
            fingerprint: None,
            checks: &checks,
            fd_order: None,
        },
    )?;
    require_passed(&checks)?;
    Ok(checks)
}

pub fn cmd_solve(
    loaded: &LoadedCase,
    grid: &GridSpec,
    with_gradient: bool,
    out_path: &Path,
    out: &mut dyn Write,
) -> CliResult<SolutionField> {
    let problem = Problem::new(loaded.case.clone(), loaded.rules.clone());
    let field = problem.solve_grid(grid, with_gradient)?;
    write_atomic(out_path, &FieldFile::from_field(&field).to_json())?;
    writeln!(
        out,
        "wrote {} nodes ({} holes) to {}",
        field.len(),
        field.failures.len(),
        out_path.display()
    )
    .map_err(io)?;
    if !field.is_complete() {
        return Err(CliError::Core(biharm_core::Error::Degenerate(format!(
            "{} nodes failed; see the holes in the header",
            field.failures.len()
        ))));
    }
    Ok(field)
}

pub fn cmd_verify(
    loaded: &LoadedCase,
    fd_spacing: f64,
    fd_tolerance: f64,
    report: Option<&Path>,
    out: &mut dyn Write,
) -> CliResult<Vec<CheckResult>> {
    let problem = Problem::new(loaded.case.clone(), loaded.rules.clone());
    let mut checks = vec![fd_bilaplacian_residual(&problem, fd_spacing, fd_tolerance)?];
    let order = fd_residual_order(&problem, fd_spacing)?;
    let points = [
        DiskPoint::new(0.3, 0.2)?,
        DiskPoint::new(-0.5, 0.1)?,
        DiskPoint::new(0.1, -0.7)?,
    ];
    checks.extend(gradient_crosscheck(&problem, &points, GRADIENT_TOLERANCE)?);
    checks.extend(boundary_trace_check(&problem, &TRACE_RADII, TRACE_ANGLES)?);
    print_checks(out, &checks)?;
    writeln!(
        out,
        "residual {:.3e} at h={}, {:.3e} at h={}: observed order {:.2}",
        order.coarse,
        fd_spacing,
        order.fine,
        fd_spacing / 2.0,
        order.order
    )
    .map_err(io)?;
    write_report(
        report,
        &ChecksReport {
            fingerprint: Some(problem.fingerprint()),
            checks: &checks,
            fd_order: Some(order.into()),
        },
    )?;
    require_passed(&checks)?;
    Ok(checks)
}

pub fn cmd_lipschitz(
    loaded: &LoadedCase,
    grid: &GridSpec,
    report: Option<&Path>,
    out: &mut dyn Write,
) -> CliResult<CaseAnalysis> {
    let problem = Problem::new(loaded.case.clone(), loaded.rules.clone());
    let a = analyze(&problem, grid, loaded.seed)?;
    let r = &a.report;
    let b = &a.gradient_bounds;
    let lines = [
        ("L", r.l_boundary),
        ("h_sup", r.h_sup),
        ("g_sup", r.g_sup),
        ("g_sup_sampled", a.g_sup_sampled),
        ("P", r.p_upper),
        ("A", r.a_value),
        ("B", r.b_value),
        ("Q", r.q_value),
        ("A_literal", a.ab.literal_a),
        ("B_literal", a.ab.literal_b),
        ("A_flipped", a.ab.flipped_a),
        ("B_flipped", a.ab.flipped_b),
        ("A_fd", a.ab.fd_a),
        ("B_fd", a.ab.fd_b),
        ("lower_bound", r.lower_bound),
        ("upper_bound", r.upper_bound),
        ("empirical_quotient", a.empirical_quotient),
        ("sup_grad", b.total_norm),
        ("sup_grad_boundary", b.boundary_norm),
        ("limit_boundary", b.boundary_limit),
        ("sup_dz_boundary", b.boundary_dz),
        ("limit_dz_boundary", b.boundary_dz_limit),
        ("sup_grad_green", b.green_norm),
        ("limit_green", b.green_limit),
    ];
    for (name, v) in lines {
        writeln!(out, "{name:<20} {v:.12e}").map_err(io)?;
    }
    writeln!(out, "{:<20} {}", "verdict", r.verdict).map_err(io)?;
    write_report(report, &a)?;
    let checks = [
        CheckResult::bound("empirical quotient <= P", a.empirical_quotient, r.p_upper, 1e-9),
        CheckResult::bound("boundary gradient bound", b.boundary_norm, b.boundary_limit, 1e-9),
        CheckResult::bound("boundary d_z bound", b.boundary_dz, b.boundary_dz_limit, 1e-9),
        CheckResult::bound("green gradient bound", b.green_norm, b.green_limit, 1e-9),
    ];
    for c in checks.iter().filter(|c| !c.passed) {
        writeln!(out, "{c}").map_err(io)?;
    }
    require_passed(&checks)?;
    Ok(a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelKind {
    F0,
    H0,
    G,
}

#[derive(Debug, Serialize)]
struct KernelOutput {
    which: &'static str,
    z: (f64, f64),
    #[serde(skip_serializing_if = "Option::is_none")]
    zeta: Option<(f64, f64)>,
    value: f64,
    d_z: (f64, f64),
}

pub fn cmd_kernel(which: KernelKind, z: Complex64, zeta: Option<Complex64>, out: &mut dyn Write) -> CliResult<()> {
    let zp = DiskPoint::from_complex(z)?;
    let (name, value, d_z, zeta) = match which {
        KernelKind::F0 | KernelKind::H0 if zeta.is_some() => {
            return Err(CliError::invalid("zeta", "only the G kernel takes a second point"));
        }
        KernelKind::F0 => ("F0", f0_eval(zp)?, f0_dz(zp, 0.0)?.d_z, None),
        KernelKind::H0 => ("H0", h0_eval(zp)?, h0_dz(zp, 0.0)?.d_z, None),
        KernelKind::G => {
            let zeta = zeta.ok_or_else(|| CliError::invalid("zeta", "the G kernel needs --zeta"))?;
            let zq = DiskPoint::from_complex(zeta)?;
            ("G", g_eval(zp, zq)?, g_dz(zp, zq)?.d_z, Some((zeta.re, zeta.im)))
        }
    };
    let record = KernelOutput {
        which: name,
        z: (z.re, z.im),
        zeta,
        value,
        d_z: (d_z.re, d_z.im),
    };
    writeln!(out, "{}", serde_json::to_string(&record).expect("serializable")).map_err(io)?;
    Ok(())
}
