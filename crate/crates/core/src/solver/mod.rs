//! Assembly of Φ(z) = F₀[f](z) + H₀[h](z) − G[g](z) and its Wirtinger
//! gradient, pointwise and on polar grids.

mod data;
mod field;
mod source;

pub use data::{BoundaryData, MIN_FOURIER_SAMPLES};
pub use field::{GridSpec, SolutionField};
pub use source::{Monomial, SourceTerm, MAX_EXPONENT, SUP_GRID};

use num_complex::Complex64;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::green::{green, green_dz};
use crate::kernels::{f0, f0_dz_raw, h0, h0_dz_raw};
use crate::point::{DiskPoint, WirtingerPair};
use crate::quadrature::{CircleRule, DiskRule, DEFAULT_ANGULAR, DEFAULT_CIRCLE_NODES, DEFAULT_RADIAL};

/// (1 − r)·n_nodes below this means the circle rule cannot resolve the
/// O(1 − r) angular width of F₀(r e^{i(φ−θ)}).
pub const MIN_NODES_PER_WIDTH: f64 = 10.0;

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

/// Boundary trace f, inward normal derivative h and source g.
#[derive(Debug, Clone, PartialEq)]
pub struct Case {
    pub f: BoundaryData,
    pub h: BoundaryData,
    pub g: SourceTerm,
}

impl Case {
    pub fn new(f: BoundaryData, h: BoundaryData, g: SourceTerm) -> Self {
        Case { f, h, g }
    }

    pub fn zero() -> Self {
        Case::new(BoundaryData::zero(), BoundaryData::zero(), SourceTerm::zero())
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Case::new(self.f.scale(factor), self.h.scale(factor), self.g.scale(factor))
    }

    pub fn add(&self, other: &Case) -> Self {
        Case::new(self.f.add(&other.f), self.h.add(&other.h), self.g.add(&other.g))
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.h.is_zero() && self.g.is_zero()
    }
}

/// Quadrature sizes. The Green potential at z uses a rule centred at z with
/// `disk_angular` angles on its outer rings; `disk_radial` sizes the plain
/// rules used for smooth area integrals.
#[derive(Debug, Clone, PartialEq)]
pub struct Rules {
    pub circle: CircleRule,
    pub disk_radial: usize,
    pub disk_angular: usize,
}

impl Rules {
    pub fn new(circle_nodes: usize, disk_radial: usize, disk_angular: usize) -> Result<Self> {
        if disk_radial == 0 || disk_angular == 0 {
            return Err(Error::validation("quadrature", "disk rule sizes must be positive"));
        }
        Ok(Rules {
            circle: CircleRule::new(circle_nodes)?,
            disk_radial,
            disk_angular,
        })
    }

    /// Largest radius the circle rule resolves.
    pub fn max_resolved_radius(&self) -> f64 {
        1.0 - MIN_NODES_PER_WIDTH / self.circle.n_nodes() as f64
    }

    pub fn check_resolution(&self, r: f64) -> Result<()> {
        if (1.0 - r) * (self.circle.n_nodes() as f64) < MIN_NODES_PER_WIDTH {
            return Err(Error::Policy(format!(
                "radius {r} is beyond {} for a {}-node circle rule",
                self.max_resolved_radius(),
                self.circle.n_nodes()
            )));
        }
        Ok(())
    }

    pub fn plain_disk(&self) -> Result<DiskRule> {
        DiskRule::plain(self.disk_radial, self.disk_angular)
    }

    pub fn centered_disk(&self, center: DiskPoint) -> Result<DiskRule> {
        DiskRule::centered(center, self.disk_angular)
    }
}

impl Default for Rules {
    fn default() -> Self {
        Rules::new(DEFAULT_CIRCLE_NODES, DEFAULT_RADIAL, DEFAULT_ANGULAR).expect("default rules")
    }
}

/// F₀[f](z) = (1/2π)∫ F₀(z e^{−iθ}) f(e^{iθ}) dθ.
pub fn f0_transform(f: &BoundaryData, z: DiskPoint, rule: &CircleRule) -> Result<Complex64> {
    z.require_interior()?;
    Ok(boundary_transform(&f.resample(rule.n_nodes()), z.z(), rule, f0))
}

/// H₀[h](z) = (1/2π)∫ H₀(z e^{−iθ}) h(e^{iθ}) dθ.
pub fn h0_transform(h: &BoundaryData, z: DiskPoint, rule: &CircleRule) -> Result<Complex64> {
    z.require_interior()?;
    Ok(boundary_transform(&h.resample(rule.n_nodes()), z.z(), rule, h0))
}

/// G[g](z) = ∫ G(z, ζ) g(ζ) dA(ζ), integrated with the rule centred at z.
pub fn green_potential(g: &SourceTerm, z: DiskPoint, n_angular: usize) -> Result<Complex64> {
    z.require_interior()?;
    if g.is_zero() {
        return Ok(ZERO);
    }
    let rule = DiskRule::centered(z, n_angular)?;
    let z = z.z();
    Ok(rule.integrate(|zeta| g.eval(zeta) * green(z, zeta)))
}

fn boundary_transform(
    values: &[Complex64],
    z: Complex64,
    rule: &CircleRule,
    kernel: fn(Complex64) -> f64,
) -> Complex64 {
    let mut acc = ZERO;
    for (v, rot) in values.iter().zip(rule.rotations()) {
        acc += v * kernel(z * rot);
    }
    acc * rule.weight()
}

pub fn solve_point(case: &Case, z: DiskPoint, rules: &Rules) -> Result<Complex64> {
    Problem::new(case.clone(), rules.clone()).value(z)
}

pub fn gradient_point(case: &Case, z: DiskPoint, rules: &Rules) -> Result<WirtingerPair> {
    Problem::new(case.clone(), rules.clone()).gradient(z)
}

pub fn solve_grid(case: &Case, grid: &GridSpec, with_gradient: bool, rules: &Rules) -> Result<SolutionField> {
    Problem::new(case.clone(), rules.clone()).solve_grid(grid, with_gradient)
}

/// The two halves of the representation at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Split<T> {
    /// u = F₀[f] + H₀[h]
    pub boundary: T,
    /// −G[g]
    pub green: T,
}

/// A case bound to its quadrature, with the boundary data resampled once
/// onto the circle nodes.
#[derive(Debug, Clone)]
pub struct Problem {
    case: Case,
    rules: Rules,
    f_nodes: Vec<Complex64>,
    h_nodes: Vec<Complex64>,
    fingerprint: String,
}

impl Problem {
    pub fn new(case: Case, rules: Rules) -> Self {
        let n = rules.circle.n_nodes();
        let f_nodes = case.f.resample(n);
        let h_nodes = case.h.resample(n);
        let fingerprint = fingerprint(&case, &rules);
        Problem {
            case,
            rules,
            f_nodes,
            h_nodes,
            fingerprint,
        }
    }

    pub fn case(&self) -> &Case {
        &self.case
    }

    pub fn rules(&self) -> &Rules {
        &self.rules
    }

    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    pub fn value(&self, z: DiskPoint) -> Result<Complex64> {
        let s = self.value_split(z)?;
        Ok(s.boundary + s.green)
    }

    pub fn gradient(&self, z: DiskPoint) -> Result<WirtingerPair> {
        let s = self.gradient_split(z)?;
        Ok(s.boundary + s.green)
    }

    pub fn value_split(&self, z: DiskPoint) -> Result<Split<Complex64>> {
        z.require_interior()?;
        let circle = &self.rules.circle;
        let w = z.z();
        let boundary =
            boundary_transform(&self.f_nodes, w, circle, f0) + boundary_transform(&self.h_nodes, w, circle, h0);
        let green = if self.case.g.is_zero() {
            ZERO
        } else {
            let rule = self.rules.centered_disk(z)?;
            -rule.integrate(|zeta| self.case.g.eval(zeta) * green(w, zeta))
        };
        Ok(Split { boundary, green })
    }

    pub fn gradient_split(&self, z: DiskPoint) -> Result<Split<WirtingerPair>> {
        z.require_interior()?;
        let w = z.z();
        let circle = &self.rules.circle;
        let mut d_z = ZERO;
        let mut d_zbar = ZERO;
        for ((f, h), rot) in self.f_nodes.iter().zip(&self.h_nodes).zip(circle.rotations()) {
            let kf = f0_dz_raw(w, *rot);
            let kh = h0_dz_raw(w, *rot);
            d_z += kf * f + kh * h;
            d_zbar += kf.conj() * f + kh.conj() * h;
        }
        let boundary = WirtingerPair::new(d_z * circle.weight(), d_zbar * circle.weight());

        let green = if self.case.g.is_zero() {
            WirtingerPair::default()
        } else {
            let rule = self.rules.centered_disk(z)?;
            let mut gz = ZERO;
            let mut gzbar = ZERO;
            for node in rule.nodes() {
                let gv = self.case.g.eval(node.zeta) * node.weight;
                let k = green_dz(w, node.zeta);
                gz += k * gv;
                gzbar += k.conj() * gv;
            }
            WirtingerPair::new(-gz, -gzbar)
        };
        Ok(Split { boundary, green })
    }

    /// Both halves of value and gradient from one pass over the nodes.
    pub fn split(&self, z: DiskPoint) -> Result<(Split<Complex64>, Split<WirtingerPair>)> {
        z.require_interior()?;
        let w = z.z();
        let circle = &self.rules.circle;
        let mut value = ZERO;
        let mut d_z = ZERO;
        let mut d_zbar = ZERO;
        for ((f, h), rot) in self.f_nodes.iter().zip(&self.h_nodes).zip(circle.rotations()) {
            let p = w * rot;
            value += f * f0(p) + h * h0(p);
            let kf = f0_dz_raw(w, *rot);
            let kh = h0_dz_raw(w, *rot);
            d_z += kf * f + kh * h;
            d_zbar += kf.conj() * f + kh.conj() * h;
        }
        let wt = circle.weight();
        let mut gv = ZERO;
        let mut gz = ZERO;
        let mut gzbar = ZERO;
        if !self.case.g.is_zero() {
            let rule = self.rules.centered_disk(z)?;
            for node in rule.nodes() {
                let g = self.case.g.eval(node.zeta) * node.weight;
                gv -= g * green(w, node.zeta);
                let k = green_dz(w, node.zeta);
                gz -= k * g;
                gzbar -= k.conj() * g;
            }
        }
        Ok((
            Split {
                boundary: value * wt,
                green: gv,
            },
            Split {
                boundary: WirtingerPair::new(d_z * wt, d_zbar * wt),
                green: WirtingerPair::new(gz, gzbar),
            },
        ))
    }

    /// Value and gradient from one pass over the Green-potential nodes.
    pub fn value_and_gradient(&self, z: DiskPoint) -> Result<(Complex64, WirtingerPair)> {
        z.require_interior()?;
        let w = z.z();
        let circle = &self.rules.circle;
        let mut value = ZERO;
        let mut d_z = ZERO;
        let mut d_zbar = ZERO;
        for ((f, h), rot) in self.f_nodes.iter().zip(&self.h_nodes).zip(circle.rotations()) {
            let p = w * rot;
            value += f * f0(p) + h * h0(p);
            let kf = f0_dz_raw(w, *rot);
            let kh = h0_dz_raw(w, *rot);
            d_z += kf * f + kh * h;
            d_zbar += kf.conj() * f + kh.conj() * h;
        }
        value *= circle.weight();
        d_z *= circle.weight();
        d_zbar *= circle.weight();
        if !self.case.g.is_zero() {
            let rule = self.rules.centered_disk(z)?;
            for node in rule.nodes() {
                let gv = self.case.g.eval(node.zeta) * node.weight;
                value -= gv * green(w, node.zeta);
                let k = green_dz(w, node.zeta);
                d_z -= k * gv;
                d_zbar -= k.conj() * gv;
            }
        }
        Ok((value, WirtingerPair::new(d_z, d_zbar)))
    }

    pub fn solve_grid(&self, grid: &GridSpec, with_gradient: bool) -> Result<SolutionField> {
        grid.validate()?;
        if !grid.allow_near_boundary {
            self.rules.check_resolution(grid.outer_radius())?;
        }
        let points = grid.points();
        let mut values = Vec::with_capacity(points.len());
        let mut gradients = with_gradient.then(|| Vec::with_capacity(points.len()));
        let mut failures = Vec::new();
        for (idx, &(r, theta)) in points.iter().enumerate() {
            let result = DiskPoint::polar(r, theta).and_then(|z| {
                if with_gradient {
                    self.value_and_gradient(z).map(|(v, g)| (v, Some(g)))
                } else {
                    self.value(z).map(|v| (v, None))
                }
            });
            match result {
                Ok((v, g)) if v.re.is_finite() && v.im.is_finite() => {
                    values.push(Some(v));
                    if let Some(gs) = gradients.as_mut() {
                        gs.push(g);
                    }
                }
                Ok(_) => {
                    failures.push((idx, "non-finite value".to_string()));
                    values.push(None);
                    if let Some(gs) = gradients.as_mut() {
                        gs.push(None);
                    }
                }
                Err(e) => {
                    failures.push((idx, e.to_string()));
                    values.push(None);
                    if let Some(gs) = gradients.as_mut() {
                        gs.push(None);
                    }
                }
            }
        }
        Ok(SolutionField::new(
            grid.clone(),
            values,
            gradients,
            failures,
            self.fingerprint.clone(),
        ))
    }
}

/// Content hash of the case data and quadrature sizes.
pub fn fingerprint(case: &Case, rules: &Rules) -> String {
    let mut hasher = Sha256::new();
    let mut put = |label: &str, values: &[f64]| {
        hasher.update(label.as_bytes());
        hasher.update((values.len() as u64).to_le_bytes());
        for v in values {
            hasher.update(v.to_le_bytes());
        }
    };
    let flat = |d: &BoundaryData| d.samples().iter().flat_map(|c| [c.re, c.im]).collect::<Vec<_>>();
    put("f", &flat(&case.f));
    put("h", &flat(&case.h));
    let g: Vec<f64> = case
        .g
        .terms()
        .iter()
        .flat_map(|t| [t.a as f64, t.b as f64, t.coeff.re, t.coeff.im])
        .collect();
    put("g", &g);
    put(
        "rules",
        &[
            rules.circle.n_nodes() as f64,
            rules.disk_radial as f64,
            rules.disk_angular as f64,
        ],
    );
    hex::encode(&hasher.finalize()[..16])
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn pt(re: f64, im: f64) -> DiskPoint {
        DiskPoint::new(re, im).unwrap()
    }

    fn e_i(m: i64) -> BoundaryData {
        BoundaryData::from_fourier(&[(m, c(1.0))], None).unwrap()
    }

    fn case(f: BoundaryData, h: BoundaryData, g: SourceTerm) -> Case {
        Case::new(f, h, g)
    }

    fn rules() -> Rules {
        Rules::new(1024, 64, 128).unwrap()
    }

    #[test]
    fn transforms_of_constants() {
        let r = CircleRule::new(512).unwrap();
        for z in [pt(0.0, 0.0), pt(0.5, 0.0), pt(-0.3, 0.6), pt(0.0, 0.9)] {
            let v = f0_transform(&BoundaryData::constant(c(1.0)), z, &r).unwrap();
            assert!((v - 1.0).norm() < 1e-10);
        }
        let v = f0_transform(&BoundaryData::constant(c(2.0)), pt(0.5, 0.0), &r).unwrap();
        assert!((v - 2.0).norm() < 1e-10);
        let v = f0_transform(&e_i(1), DiskPoint::ORIGIN, &r).unwrap();
        assert!(v.norm() < 1e-14);
        let v = h0_transform(&BoundaryData::constant(c(1.0)), pt(0.5, 0.0), &r).unwrap();
        assert!((v - 0.375).norm() < 1e-10);
        let v = h0_transform(&e_i(1), DiskPoint::ORIGIN, &r).unwrap();
        assert!(v.norm() < 1e-14);
        assert!(f0_transform(&BoundaryData::zero(), DiskPoint::new(1.0, 0.0).unwrap(), &r).is_err());
    }

    #[test]
    fn green_potential_of_constant() {
        let g = SourceTerm::constant(c(4.0));
        let v = green_potential(&g, DiskPoint::ORIGIN, 128).unwrap();
        assert!((v + 1.0).norm() < 1e-8, "{v}");
        let v = green_potential(&g, pt(0.5, 0.0), 128).unwrap();
        assert!((v + 0.5625).norm() < 1e-8, "{v}");
        assert_eq!(green_potential(&SourceTerm::zero(), pt(0.5, 0.0), 128).unwrap(), ZERO);
    }

    #[test]
    fn solve_point_reference_cases() {
        let rules = rules();
        let one = case(BoundaryData::constant(c(1.0)), BoundaryData::zero(), SourceTerm::zero());
        assert!((solve_point(&one, pt(0.3, -0.7), &rules).unwrap() - 1.0).norm() < 1e-10);
        let h1 = case(BoundaryData::zero(), BoundaryData::constant(c(1.0)), SourceTerm::zero());
        assert!((solve_point(&h1, pt(0.6, 0.0), &rules).unwrap() - 0.32).norm() < 1e-10);
        let g4 = case(BoundaryData::zero(), BoundaryData::zero(), SourceTerm::constant(c(4.0)));
        assert!((solve_point(&g4, pt(0.5, 0.0), &rules).unwrap() - 0.5625).norm() < 1e-8);
    }

    #[test]
    fn quartic_modulus_from_three_channels() {
        let rules = rules();
        let k = case(
            BoundaryData::constant(c(1.0)),
            BoundaryData::constant(c(-4.0)),
            SourceTerm::constant(c(4.0)),
        );
        let p = Problem::new(k, rules);
        for (r, t) in [(0.0, 0.0), (0.3, 1.0), (0.7, 2.5), (0.9, -1.2)] {
            let v = p.value(DiskPoint::polar(r, t).unwrap()).unwrap();
            assert!((v - r.powi(4)).norm() < 1e-8, "r={r}: {v}");
        }
    }

    #[test]
    fn gradient_reference_cases() {
        let rules = rules();
        let h1 = case(BoundaryData::zero(), BoundaryData::constant(c(1.0)), SourceTerm::zero());
        assert!(gradient_point(&h1, DiskPoint::ORIGIN, &rules).unwrap().d_z.norm() < 1e-14);
        let g4 = case(BoundaryData::zero(), BoundaryData::zero(), SourceTerm::constant(c(4.0)));
        let d = gradient_point(&g4, pt(0.5, 0.0), &rules).unwrap();
        assert!((d.d_z + 0.75).norm() < 1e-7, "{d:?}");
        let f1 = case(e_i(1), BoundaryData::zero(), SourceTerm::zero());
        let d = gradient_point(&f1, DiskPoint::ORIGIN, &rules).unwrap();
        assert!((d.d_z - 1.5).norm() < 1e-10, "{d:?}");
        assert!(d.d_zbar.norm() < 1e-10);
    }

    #[test]
    fn gradient_matches_central_differences() {
        let rules = rules();
        let k = case(
            BoundaryData::from_fourier(&[(1, Complex64::new(0.5, 0.2)), (-2, c(0.3))], None).unwrap(),
            BoundaryData::from_fourier(&[(0, c(1.0)), (3, Complex64::new(0.0, 0.4))], None).unwrap(),
            SourceTerm::from_triples(&[(1, 0, c(2.0)), (0, 0, Complex64::new(0.0, -1.0))]).unwrap(),
        );
        let p = Problem::new(k, rules);
        let step = 1e-5;
        for z in [
            Complex64::new(0.3, 0.2),
            Complex64::new(-0.6, 0.1),
            Complex64::new(0.0, -0.9),
        ] {
            let at = |w: Complex64| p.value(DiskPoint::from_complex(w).unwrap()).unwrap();
            let dx = (at(z + step) - at(z - step)) / (2.0 * step);
            let dy = (at(z + Complex64::new(0.0, step)) - at(z - Complex64::new(0.0, step))) / (2.0 * step);
            let i = Complex64::i();
            let fd_z = (dx - i * dy) / 2.0;
            let fd_zbar = (dx + i * dy) / 2.0;
            let g = p.gradient(DiskPoint::from_complex(z).unwrap()).unwrap();
            assert!((g.d_z - fd_z).norm() < 1e-6, "{z}: {} vs {}", g.d_z, fd_z);
            assert!((g.d_zbar - fd_zbar).norm() < 1e-6, "{z}: {} vs {}", g.d_zbar, fd_zbar);
            let (v, g2) = p.value_and_gradient(DiskPoint::from_complex(z).unwrap()).unwrap();
            assert!((v - at(z)).norm() < 1e-13);
            assert!((g2.d_z - g.d_z).norm() < 1e-13);
            let (sv, sg) = p.split(DiskPoint::from_complex(z).unwrap()).unwrap();
            assert!((sv.boundary + sv.green - v).norm() < 1e-13);
            assert!(
                (sg.boundary + sg.green).d_zbar == g2.d_zbar
                    || ((sg.boundary + sg.green).d_zbar - g2.d_zbar).norm() < 1e-13
            );
        }
    }

    #[test]
    fn linearity() {
        let rules = Rules::new(256, 32, 64).unwrap();
        let a = case(
            e_i(2),
            BoundaryData::constant(c(0.5)),
            SourceTerm::from_triples(&[(1, 1, c(1.0))]).unwrap(),
        );
        let b = case(
            BoundaryData::constant(c(-1.0)),
            e_i(-1),
            SourceTerm::from_triples(&[(0, 2, Complex64::new(0.0, 1.0))]).unwrap(),
        );
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..4 {
            let s = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let t = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let z = DiskPoint::polar(rng.gen_range(0.0..0.9), rng.gen_range(0.0..6.3)).unwrap();
            let lhs = solve_point(&a.scale(s).add(&b.scale(t)), z, &rules).unwrap();
            let rhs = s * solve_point(&a, z, &rules).unwrap() + t * solve_point(&b, z, &rules).unwrap();
            assert!((lhs - rhs).norm() < 1e-9);
        }
    }

    #[test]
    fn grid_reference_cases() {
        let rules = rules();
        let one = case(BoundaryData::constant(c(1.0)), BoundaryData::zero(), SourceTerm::zero());
        let field = solve_grid(&one, &GridSpec::new(8, 8), false, &rules).unwrap();
        assert_eq!(field.len(), 64);
        assert!(field.values.iter().all(|v| (v.unwrap() - 1.0).norm() < 1e-10));

        let h1 = case(BoundaryData::zero(), BoundaryData::constant(c(1.0)), SourceTerm::zero());
        let field = solve_grid(&h1, &GridSpec::new(8, 8), true, &rules).unwrap();
        for (z, v) in field.samples() {
            assert!((v - (1.0 - z.norm_sqr()) / 2.0).norm() < 1e-10);
        }
        assert_eq!(field.gradients.as_ref().unwrap().len(), 64);

        let field = solve_grid(&Case::zero(), &GridSpec::new(2, 2), false, &rules).unwrap();
        assert!(field.values.iter().all(|v| *v == Some(ZERO)));
        assert!(field.is_complete());
    }

    #[test]
    fn grid_validation_and_policy() {
        let rules = Rules::new(256, 16, 32).unwrap();
        assert!(solve_grid(&Case::zero(), &GridSpec::new(1, 8), false, &rules).is_err());
        assert!(solve_grid(&Case::zero(), &GridSpec::new(2000, 2), false, &rules).is_err());
        // 256 circle nodes resolve radii up to 1 − 10/256 ≈ 0.961
        let near = GridSpec::new(40, 2);
        assert!(matches!(
            solve_grid(&Case::zero(), &near, false, &rules),
            Err(Error::Policy(_))
        ));
        let near = near.allow_near_boundary(true);
        assert!(solve_grid(&Case::zero(), &near, false, &rules).is_ok());
        assert!(solve_grid(&Case::zero(), &GridSpec::with_r_max(40, 2, 0.9), false, &rules).is_ok());
    }

    #[test]
    fn fingerprint_tracks_data_and_sizes() {
        let r1 = rules();
        let r2 = Rules::new(512, 64, 128).unwrap();
        let a = case(BoundaryData::constant(c(1.0)), BoundaryData::zero(), SourceTerm::zero());
        let b = case(BoundaryData::constant(c(2.0)), BoundaryData::zero(), SourceTerm::zero());
        assert_eq!(fingerprint(&a, &r1), fingerprint(&a.clone(), &r1));
        assert_ne!(fingerprint(&a, &r1), fingerprint(&b, &r1));
        assert_ne!(fingerprint(&a, &r1), fingerprint(&a, &r2));
    }
}
