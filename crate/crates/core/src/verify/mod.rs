//! Machine checks of the exact identities and inequalities satisfied by
//! the kernels, plus manufactured-solution and residual checks of the
//! solver.

mod bounds;
mod identities;
mod residual;

pub use bounds::{bound_suite, BOUND_TOLERANCE};
pub use identities::{identity_suite, kernel_mean_checks, sample_points, IDENTITY_TOLERANCE};
pub use residual::{
    boundary_trace_check, fd_bilaplacian_residual, fd_residual_order, gradient_crosscheck, wrong_sign_error, FdOrder,
    FD_CENTER_STEP, FD_MAX_RADIUS, FD_STEP,
};

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::solver::{fingerprint, BoundaryData, Case, Rules, SolutionField, SourceTerm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// |computed − expected| ≤ tolerance
    Equality,
    /// computed ≤ expected + tolerance
    Bound,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub kind: CheckKind,
    pub computed: Complex64,
    pub expected: Complex64,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckResult {
    pub fn equal(name: impl Into<String>, computed: Complex64, expected: Complex64, tolerance: f64) -> Self {
        let passed = (computed - expected).norm() <= tolerance;
        CheckResult {
            name: name.into(),
            kind: CheckKind::Equality,
            computed,
            expected,
            tolerance,
            passed,
        }
    }

    pub fn equal_real(name: impl Into<String>, computed: f64, expected: f64, tolerance: f64) -> Self {
        Self::equal(name, computed.into(), expected.into(), tolerance)
    }

    pub fn bound(name: impl Into<String>, computed: f64, limit: f64, tolerance: f64) -> Self {
        CheckResult {
            name: name.into(),
            kind: CheckKind::Bound,
            computed: computed.into(),
            expected: limit.into(),
            tolerance,
            passed: computed <= limit + tolerance,
        }
    }

    /// Distance from failing: tolerance − |error| for equalities, limit −
    /// value for bounds.
    pub fn margin(&self) -> f64 {
        match self.kind {
            CheckKind::Equality => self.tolerance - (self.computed - self.expected).norm(),
            CheckKind::Bound => self.expected.re - self.computed.re,
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |c: Complex64| {
            if c.im == 0.0 {
                format!("{:.12e}", c.re)
            } else {
                format!("{:.6e}{:+.6e}i", c.re, c.im)
            }
        };
        let op = match self.kind {
            CheckKind::Equality => "==",
            CheckKind::Bound => "<=",
        };
        write!(
            f,
            "{} {:<44} {} {op} {}  margin {:.3e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            show(self.computed),
            show(self.expected),
            self.margin()
        )
    }
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.passed)
}

/// An exact polynomial solution Φ* with the data it induces.
#[derive(Debug, Clone, PartialEq)]
pub struct ManufacturedCase {
    pub phi_star: SourceTerm,
    pub f: BoundaryData,
    pub h: BoundaryData,
    pub g: SourceTerm,
}

impl ManufacturedCase {
    pub fn case(&self) -> Case {
        Case::new(self.f.clone(), self.h.clone(), self.g.clone())
    }

    pub fn exact(&self, z: Complex64) -> Complex64 {
        self.phi_star.eval(z)
    }
}

/// g = Δ²Φ*, f = Φ*|_T, h = −∂Φ*/∂r|_T, all term-wise.
pub fn manufactured_case(phi_star: &SourceTerm) -> Result<ManufacturedCase> {
    let (f, h) = phi_star.boundary_data()?;
    Ok(ManufacturedCase {
        phi_star: phi_star.clone(),
        f,
        h,
        g: phi_star.bilaplacian(),
    })
}

/// The closed-form solutions 1, (1 − |z|²)², 1 − |z|⁴ and |z|⁴, which between
/// them drive all three data channels.
pub fn standard_manufactured() -> Vec<(&'static str, ManufacturedCase)> {
    let one = Complex64::new(1.0, 0.0);
    let poly = |t: &[(u32, u32, f64)]| {
        let t: Vec<_> = t.iter().map(|&(a, b, c)| (a, b, Complex64::new(c, 0.0))).collect();
        SourceTerm::from_triples(&t).expect("small exponents")
    };
    vec![
        ("1", SourceTerm::constant(one)),
        ("(1-|z|^2)^2", poly(&[(0, 0, 1.0), (1, 1, -2.0), (2, 2, 1.0)])),
        ("1-|z|^4", poly(&[(0, 0, 1.0), (2, 2, -1.0)])),
        ("|z|^4", poly(&[(2, 2, 1.0)])),
    ]
    .into_iter()
    .map(|(name, p)| (name, manufactured_case(&p).expect("valid manufactured case")))
    .collect()
}

/// Largest |Φ − Φ*| over the field nodes with r ≤ `r_limit`.
pub fn solution_error(
    mc: &ManufacturedCase,
    field: &SolutionField,
    rules: &Rules,
    r_limit: f64,
    tolerance: f64,
) -> Result<CheckResult> {
    let expected = fingerprint(&mc.case(), rules);
    if expected != field.fingerprint {
        return Err(Error::Fingerprint {
            expected,
            found: field.fingerprint.clone(),
        });
    }
    if !field.is_complete() {
        return Err(Error::Degenerate(format!("field has {} holes", field.failures.len())));
    }
    let err = field
        .samples()
        .filter(|(z, _)| z.norm() <= r_limit + 1e-15)
        .map(|(z, v)| (v - mc.exact(z)).norm())
        .fold(0.0, f64::max);
    Ok(CheckResult::equal_real("solution error", err, 0.0, tolerance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{GridSpec, Problem};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn assert_const(d: &BoundaryData, v: f64) {
        assert!(
            d.samples().iter().all(|s| (s - v).norm() < 1e-13),
            "{:?}",
            &d.samples()[..2]
        );
    }

    #[test]
    fn manufactured_examples() {
        let m = standard_manufactured();
        let (_, sq) = &m[1];
        assert_eq!(sq.g, SourceTerm::constant(c(4.0)));
        assert_const(&sq.f, 0.0);
        assert_const(&sq.h, 0.0);
        let (_, quartic) = &m[2];
        assert_eq!(quartic.g, SourceTerm::constant(c(-4.0)));
        assert_const(&quartic.f, 0.0);
        assert_const(&quartic.h, 4.0);
        let (_, modulus) = &m[3];
        assert_eq!(modulus.g, SourceTerm::constant(c(4.0)));
        assert_const(&modulus.f, 1.0);
        assert_const(&modulus.h, -4.0);
        let (_, one) = &m[0];
        assert!(one.g.is_zero());
    }

    #[test]
    fn check_result_semantics() {
        let r = CheckResult::equal_real("x", 1.0, 1.0 + 1e-9, 1e-8);
        assert!(r.passed && r.margin() > 0.0);
        let r = CheckResult::equal_real("x", 1.0, 1.1, 1e-8);
        assert!(!r.passed && r.margin() < 0.0);
        let r = CheckResult::bound("b", 0.7, 0.75, 0.0);
        assert!(r.passed && (r.margin() - 0.05).abs() < 1e-12);
        assert!(!CheckResult::bound("b", 0.8, 0.75, 1e-6).passed);
        assert!(r.to_string().starts_with("PASS"));
    }

    #[test]
    fn solution_error_checks_fingerprint() {
        let rules = Rules::new(512, 32, 64).unwrap();
        let m = standard_manufactured();
        let (_, sq) = &m[1];
        let field = Problem::new(sq.case(), rules.clone())
            .solve_grid(&GridSpec::new(8, 8), false)
            .unwrap();
        let r = solution_error(sq, &field, &rules, 0.9, 1e-8).unwrap();
        assert!(r.passed, "{r}");
        let (_, other) = &m[2];
        assert!(matches!(
            solution_error(other, &field, &rules, 0.9, 1e-8),
            Err(Error::Fingerprint { .. })
        ));
    }
}
