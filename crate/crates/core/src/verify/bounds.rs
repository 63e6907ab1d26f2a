use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::identities::{label, sample_points};
use super::CheckResult;
use crate::green::{green, green_dz, green_h2, green_h3, log_ratio};
use crate::kernels::{holder_moment_bound, kernel_moment_series};
use crate::quadrature::DiskRule;
use crate::solver::Rules;

pub const BOUND_TOLERANCE: f64 = 1e-6;

/// Random (z, ζ) pairs for the pointwise growth bounds.
const POINTWISE_PAIRS: usize = 20_000;
const POINTWISE_SEED: u64 = 42;

pub fn bound_suite(rules: &Rules) -> Vec<CheckResult> {
    let tol = BOUND_TOLERANCE;
    let mut out = Vec::new();
    for z in sample_points() {
        let rule = match DiskRule::centered(z, rules.disk_angular) {
            Ok(rule) => rule,
            Err(_) => continue,
        };
        let w = z.z();
        let at = label(z);
        let int = |f: &dyn Fn(Complex64) -> f64| rule.integrate_real(f);

        out.push(CheckResult::bound(
            format!("int |G| dA(zeta), z={at}"),
            int(&|s| green(w, s).abs()),
            0.75,
            tol,
        ));
        out.push(CheckResult::bound(
            format!("int |G_z| dA(zeta), z={at}"),
            int(&|s| green_dz(w, s).norm()),
            23.0 / 6.0,
            tol,
        ));
        out.push(CheckResult::bound(
            format!("J1, z={at}"),
            int(&|s| (w - s).norm() * log_ratio(w, s)),
            0.5,
            tol,
        ));
        out.push(CheckResult::bound(
            format!("J2, z={at}"),
            int(&|s| (1.0 - s.norm_sqr()) * (w - s).norm() / (1.0 - s.conj() * w).norm()),
            17.0 / 6.0,
            tol,
        ));
        out.push(CheckResult::bound(
            format!("J3, z={at}"),
            int(&|s| w.norm() * (1.0 - s.norm_sqr())),
            0.5,
            tol,
        ));
        out.push(CheckResult::bound(
            format!("I1^2, z={at}"),
            int(&|s| (w - s).norm_sqr().powi(2) * log_ratio(w, s).powi(2)),
            1.0 / 3.0,
            tol,
        ));
        out.push(CheckResult::bound(
            format!("int |H2| dA(zeta), z={at}"),
            int(&|s| green_h2(w, s).abs()),
            1.0 - z.norm_sqr() + 23.0 / 6.0,
            tol,
        ));
        let piece1 = int(&|s| (1.0 - s.norm_sqr()) / ((w - s).norm() * (1.0 - s.conj() * w).norm()));
        let piece2 = int(&|s| (1.0 - s.norm_sqr()) / (1.0 - s.conj() * w).norm_sqr());
        out.push(CheckResult::bound(
            format!("H3 singular piece, z={at}"),
            piece1,
            4.0 / 3.0,
            tol,
        ));
        out.push(CheckResult::bound(
            format!("H3 regular piece, z={at}"),
            piece2,
            1.0,
            tol,
        ));
        out.push(CheckResult::bound(
            format!("int |H3| dA(zeta), z={at}"),
            int(&|s| green_h3(w, s).norm()),
            7.0 / 3.0,
            tol,
        ));

        // first slot integrated, second fixed at the sample point
        out.push(CheckResult::bound(
            format!("int |G| dA(z), zeta={at}"),
            int(&|x| green(x, w).abs()),
            0.75,
            tol,
        ));
        out.push(CheckResult::bound(
            format!("int |G_z| dA(z), zeta={at}"),
            int(&|x| green_dz(x, w).norm()),
            2.5,
            tol,
        ));

        let r = z.norm();
        let moment = kernel_moment_series(1.5, r).expect("valid radius");
        let holder = holder_moment_bound(r).expect("valid radius");
        out.push(CheckResult::bound(
            format!("Holder moment bound, r={r}"),
            moment,
            holder,
            tol * holder,
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(POINTWISE_SEED);
    let mut worst_dz = 0.0f64;
    let mut worst_h2 = 0.0f64;
    for _ in 0..POINTWISE_PAIRS {
        let z = Complex64::from_polar(
            rng.gen::<f64>().sqrt() * 0.999,
            rng.gen_range(0.0..std::f64::consts::TAU),
        );
        let s = Complex64::from_polar(
            rng.gen::<f64>().sqrt() * 0.999,
            rng.gen_range(0.0..std::f64::consts::TAU),
        );
        if (z - s).norm() < 1e-9 {
            continue;
        }
        let l = log_ratio(z, s);
        worst_dz = worst_dz.max(green_dz(z, s).norm() / (2.0 * (1.0 + l)));
        worst_h2 = worst_h2.max(green_h2(z, s).abs() / (5.0 * (1.0 + l)));
    }
    out.push(CheckResult::bound("max |G_z| / 2(1+log-ratio)", worst_dz, 1.0, tol));
    out.push(CheckResult::bound("max |H2| / 5(1+log-ratio)", worst_h2, 1.0, tol));

    out
}
