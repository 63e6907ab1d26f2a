//! Constants of the two-sided Lipschitz estimate
//! P(Q/P² − 2)|z₁ − z₂| ≤ |Φ(z₁) − Φ(z₂)| ≤ P|z₁ − z₂|.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::point::{DiskPoint, WirtingerPair};
use crate::quadrature::DiskRule;
use crate::solver::{BoundaryData, GridSpec, Problem, SolutionField};

pub const P_COEFF_L: f64 = 220.0 / 3.0;
pub const P_COEFF_H: f64 = 4.0;
pub const P_COEFF_G: f64 = 23.0 / 3.0;

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_MAX_PAIRS: usize = 100_000;
pub const MIN_LIPSCHITZ_SAMPLES: usize = 8;

/// Step for the finite-difference cross-check of Φ_z(0), Φ_z̄(0).
pub const FD_STEP: f64 = 1e-5;

/// ‖∇p‖ = |p_z| + |p_z̄|, l(∇p) = ||p_z| − |p_z̄||, J = |p_z|² − |p_z̄|².
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GradientMatrixStats {
    pub norm: f64,
    pub min_stretch: f64,
    pub jacobian: f64,
}

impl From<WirtingerPair> for GradientMatrixStats {
    fn from(p: WirtingerPair) -> Self {
        GradientMatrixStats {
            norm: p.norm(),
            min_stretch: p.min_stretch(),
            jacobian: p.jacobian(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    BiLipschitz,
    LipschitzOnly,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::BiLipschitz => "bi-lipschitz",
            Verdict::LipschitzOnly => "lipschitz-only",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LipschitzReport {
    pub l_boundary: f64,
    pub h_sup: f64,
    pub g_sup: f64,
    pub p_upper: f64,
    pub a_value: f64,
    pub b_value: f64,
    pub q_value: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub verdict: Verdict,
}

/// Largest chord quotient |f_j − f_k| / |e^{iθ_j} − e^{iθ_k}| over all
/// sample pairs. Approaches the Lipschitz constant of f from below.
pub fn estimate_boundary_lipschitz(f: &BoundaryData) -> Result<f64> {
    let n = f.len();
    if n < MIN_LIPSCHITZ_SAMPLES {
        return Err(Error::Degenerate(format!(
            "need at least {MIN_LIPSCHITZ_SAMPLES} boundary samples, got {n}"
        )));
    }
    let s = f.samples();
    // chord length depends only on the index gap
    let chords: Vec<f64> = (0..n)
        .map(|d| 2.0 * (std::f64::consts::PI * d as f64 / n as f64).sin())
        .collect();
    let mut best = 0.0f64;
    for j in 0..n {
        for k in j + 1..n {
            best = best.max((s[j] - s[k]).norm() / chords[k - j]);
        }
    }
    Ok(best)
}

pub fn p_bound(l: f64, h_sup: f64, g_sup: f64) -> Result<f64> {
    for (name, v) in [("L", l), ("h_sup", h_sup), ("g_sup", g_sup)] {
        if !(v >= 0.0) {
            return Err(Error::Domain(format!("{name} = {v} must be nonnegative")));
        }
    }
    Ok(P_COEFF_L * l + P_COEFF_H * h_sup + P_COEFF_G * g_sup)
}

pub fn classify(l_boundary: f64, h_sup: f64, g_sup: f64, a_value: f64, b_value: f64) -> Result<LipschitzReport> {
    let p = p_bound(l_boundary, h_sup, g_sup)?;
    if p == 0.0 {
        return Err(Error::Degenerate("P = 0: all data vanish".into()));
    }
    let q = a_value - b_value;
    Ok(LipschitzReport {
        l_boundary,
        h_sup,
        g_sup,
        p_upper: p,
        a_value,
        b_value,
        q_value: q,
        lower_bound: q / p - 2.0 * p,
        upper_bound: p,
        verdict: if q > 2.0 * p * p {
            Verdict::BiLipschitz
        } else {
            Verdict::LipschitzOnly
        },
    })
}

/// A and B at the origin, obtained three ways.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AbValues {
    /// |Φ_z(0)|² from the kernel-derivative quadrature.
    pub a_value: f64,
    /// |Φ_z̄(0)|².
    pub b_value: f64,
    pub q_value: f64,
    pub phi_z0: Complex64,
    pub phi_zbar0: Complex64,
    /// (1/4π)∫e^{∓iθ}(3f + h)dθ.
    pub boundary_z: Complex64,
    pub boundary_zbar: Complex64,
    /// ∫ζ̄(log|ζ|² + 1 − |ζ|²)g dA and its ζ counterpart.
    pub green_z: Complex64,
    pub green_zbar: Complex64,
    /// Closed-form A, B with the Green integral subtracted.
    pub literal_a: f64,
    pub literal_b: f64,
    /// The same with the Green integral added.
    pub flipped_a: f64,
    pub flipped_b: f64,
    /// |Φ_z(0)|², |Φ_z̄(0)|² from central differences of Φ.
    pub fd_a: f64,
    pub fd_b: f64,
}

pub fn compute_ab(problem: &Problem) -> Result<AbValues> {
    let grad = problem.gradient(DiskPoint::ORIGIN)?;
    let case = problem.case();
    let circle = &problem.rules().circle;

    let n = circle.n_nodes();
    let f = case.f.resample(n);
    let h = case.h.resample(n);
    let mut bz = Complex64::new(0.0, 0.0);
    let mut bzbar = Complex64::new(0.0, 0.0);
    // rotations are e^{−iθ}
    for ((f, h), rot) in f.iter().zip(&h).zip(circle.rotations()) {
        let data = 3.0 * f + h;
        bz += rot * data;
        bzbar += rot.conj() * data;
    }
    bz *= circle.weight() / 2.0;
    bzbar *= circle.weight() / 2.0;

    let (mut gz, mut gzbar) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    if !case.g.is_zero() {
        let rule = DiskRule::centered(DiskPoint::ORIGIN, problem.rules().disk_angular)?;
        for node in rule.nodes() {
            let s = node.zeta.norm_sqr();
            let w = (s.ln() + 1.0 - s) * case.g.eval(node.zeta) * node.weight;
            gz += node.zeta.conj() * w;
            gzbar += node.zeta * w;
        }
    }

    let at = |w: Complex64| problem.value(DiskPoint::from_complex(w)?);
    let i = Complex64::i();
    let dx = (at(Complex64::new(FD_STEP, 0.0))? - at(Complex64::new(-FD_STEP, 0.0))?) / (2.0 * FD_STEP);
    let dy = (at(Complex64::new(0.0, FD_STEP))? - at(Complex64::new(0.0, -FD_STEP))?) / (2.0 * FD_STEP);
    let fd_z = (dx - i * dy) / 2.0;
    let fd_zbar = (dx + i * dy) / 2.0;

    let a = grad.d_z.norm_sqr();
    let b = grad.d_zbar.norm_sqr();
    Ok(AbValues {
        a_value: a,
        b_value: b,
        q_value: a - b,
        phi_z0: grad.d_z,
        phi_zbar0: grad.d_zbar,
        boundary_z: bz,
        boundary_zbar: bzbar,
        green_z: gz,
        green_zbar: gzbar,
        literal_a: (bz - gz).norm_sqr(),
        literal_b: (bzbar - gzbar).norm_sqr(),
        flipped_a: (bz + gz).norm_sqr(),
        flipped_b: (bzbar + gzbar).norm_sqr(),
        fd_a: fd_z.norm_sqr(),
        fd_b: fd_zbar.norm_sqr(),
    })
}

/// Largest |Φ(z₁) − Φ(z₂)| / |z₁ − z₂| over every pair of grid neighbours
/// plus up to `max_pairs` random pairs (all pairs when that is fewer).
pub fn empirical_quotient(field: &SolutionField, max_pairs: usize, seed: u64) -> Result<f64> {
    let pts: Vec<(Complex64, Complex64)> = field.samples().collect();
    if pts.len() < 2 {
        return Err(Error::Degenerate("need at least two field values".into()));
    }
    let quotient = |a: usize, b: usize| {
        let (z1, v1) = pts[a];
        let (z2, v2) = pts[b];
        let d = (z1 - z2).norm();
        if d < 1e-12 {
            0.0
        } else {
            (v1 - v2).norm() / d
        }
    };
    let mut best = 0.0f64;
    let n = pts.len();
    let total = n * (n - 1) / 2;
    if total <= max_pairs {
        for a in 0..n {
            for b in a + 1..n {
                best = best.max(quotient(a, b));
            }
        }
        return Ok(best);
    }
    for (a, b) in neighbour_pairs(field) {
        best = best.max(quotient(a, b));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_pairs {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            best = best.max(quotient(a, b));
        }
    }
    Ok(best)
}

/// Index pairs (into the hole-free sample list) of radial and angular
/// neighbours.
fn neighbour_pairs(field: &SolutionField) -> Vec<(usize, usize)> {
    let GridSpec { n_r, n_theta, .. } = field.grid;
    let mut compact = vec![None; field.values.len()];
    let mut next = 0;
    for (idx, v) in field.values.iter().enumerate() {
        if v.is_some() {
            compact[idx] = Some(next);
            next += 1;
        }
    }
    let mut pairs = Vec::new();
    let mut push = |a: usize, b: usize| {
        if let (Some(a), Some(b)) = (compact[a], compact[b]) {
            pairs.push((a, b));
        }
    };
    for i in 0..n_r {
        for j in 0..n_theta {
            let idx = i * n_theta + j;
            push(idx, i * n_theta + (j + 1) % n_theta);
            if i + 1 < n_r {
                push(idx, idx + n_theta);
            }
        }
    }
    pairs
}

/// Suprema over a grid of the gradient of u = F₀[f] + H₀[h] and of
/// w = −G[g], next to the limits they must respect.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GradientBounds {
    /// sup (|u_z| + |u_z̄|)
    pub boundary_norm: f64,
    /// sup |u_z|
    pub boundary_dz: f64,
    /// sup (|w_z| + |w_z̄|)
    pub green_norm: f64,
    /// sup ‖∇Φ‖
    pub total_norm: f64,
    /// (220/3)L + 4‖h‖
    pub boundary_limit: f64,
    /// (110/3)L + 2‖h‖
    pub boundary_dz_limit: f64,
    /// (23/3)‖g‖
    pub green_limit: f64,
}

impl GradientBounds {
    pub fn holds(&self, slack: f64) -> bool {
        self.boundary_norm <= self.boundary_limit + slack
            && self.boundary_dz <= self.boundary_dz_limit + slack
            && self.green_norm <= self.green_limit + slack
    }
}

pub fn gradient_bounds(problem: &Problem, grid: &GridSpec, l: f64, h_sup: f64, g_sup: f64) -> Result<GradientBounds> {
    Ok(scan_grid(problem, grid, l, h_sup, g_sup)?.1)
}

/// Φ on the grid together with the gradient suprema, from one pass.
fn scan_grid(
    problem: &Problem,
    grid: &GridSpec,
    l: f64,
    h_sup: f64,
    g_sup: f64,
) -> Result<(SolutionField, GradientBounds)> {
    grid.validate()?;
    if !grid.allow_near_boundary {
        problem.rules().check_resolution(grid.outer_radius())?;
    }
    let mut out = GradientBounds {
        boundary_norm: 0.0,
        boundary_dz: 0.0,
        green_norm: 0.0,
        total_norm: 0.0,
        boundary_limit: P_COEFF_L * l + P_COEFF_H * h_sup,
        boundary_dz_limit: P_COEFF_L / 2.0 * l + P_COEFF_H / 2.0 * h_sup,
        green_limit: P_COEFF_G * g_sup,
    };
    let mut values = Vec::with_capacity(grid.len());
    for (r, t) in grid.points() {
        let (v, d) = problem.split(DiskPoint::polar(r, t)?)?;
        values.push(Some(v.boundary + v.green));
        out.boundary_norm = out.boundary_norm.max(d.boundary.norm());
        out.boundary_dz = out.boundary_dz.max(d.boundary.d_z.norm());
        out.green_norm = out.green_norm.max(d.green.norm());
        out.total_norm = out.total_norm.max((d.boundary + d.green).norm());
    }
    let field = SolutionField::new(
        grid.clone(),
        values,
        None,
        Vec::new(),
        problem.fingerprint().to_string(),
    );
    Ok((field, out))
}

/// Everything reported for one case.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseAnalysis {
    pub report: LipschitzReport,
    pub ab: AbValues,
    /// Dense-sampling estimate of ‖g‖∞; `report.g_sup` is the certified
    /// bound Σ|c|.
    pub g_sup_sampled: f64,
    pub empirical_quotient: f64,
    pub gradient_bounds: GradientBounds,
}

pub fn analyze(problem: &Problem, grid: &GridSpec, seed: u64) -> Result<CaseAnalysis> {
    let case = problem.case();
    let l = estimate_boundary_lipschitz(&case.f)?;
    let h_sup = case.h.sup_norm();
    let g_sup = case.g.sup_norm_bound();
    let ab = compute_ab(problem)?;
    let report = classify(l, h_sup, g_sup, ab.a_value, ab.b_value)?;
    let (field, gradient_bounds) = scan_grid(problem, grid, l, h_sup, g_sup)?;
    let quotient = empirical_quotient(&field, DEFAULT_MAX_PAIRS, seed)?;
    Ok(CaseAnalysis {
        report,
        ab,
        g_sup_sampled: case.g.sup_norm_sampled(),
        empirical_quotient: quotient,
        gradient_bounds,
    })
}
