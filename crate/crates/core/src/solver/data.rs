//! Boundary data on the unit circle.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Sample count used when boundary data is given only by Fourier modes.
pub const MIN_FOURIER_SAMPLES: usize = 64;

/// A boundary function sampled at θₖ = 2πk/N (N even, N ≥ 4), together
/// with the coefficients of its trigonometric interpolant.
///
/// Evaluation between samples uses the interpolant, with the Nyquist mode
/// split evenly between ±N/2, so band-limited data with |mode| < N/2 is
/// reproduced exactly. The samples are canonical: two values are equal
/// when their samples are.
#[derive(Debug, Clone)]
pub struct BoundaryData {
    samples: Vec<Complex64>,
    modes: Vec<(i64, Complex64)>,
}

impl PartialEq for BoundaryData {
    fn eq(&self, other: &Self) -> bool {
        self.samples == other.samples
    }
}

impl BoundaryData {
    pub fn from_samples(samples: Vec<Complex64>) -> Result<Self> {
        let n = samples.len();
        if n < 4 || !n.is_multiple_of(2) {
            return Err(Error::validation(
                "samples",
                format!("need an even number of samples, at least 4 (got {n})"),
            ));
        }
        if samples.iter().any(|s| !(s.re.is_finite() && s.im.is_finite())) {
            return Err(Error::validation("samples", "non-finite sample"));
        }
        let modes = interpolant_modes(&samples);
        Ok(BoundaryData { samples, modes })
    }

    /// Band-limited data Σ cₘ e^{imθ}. `n_samples` defaults to the smallest
    /// even count above 2·max|m| that is at least [`MIN_FOURIER_SAMPLES`].
    pub fn from_fourier(terms: &[(i64, Complex64)], n_samples: Option<usize>) -> Result<Self> {
        let max_mode = terms.iter().map(|(m, _)| m.unsigned_abs() as usize).max().unwrap_or(0);
        let n = match n_samples {
            Some(n) => n,
            None => (2 * max_mode + 2).max(MIN_FOURIER_SAMPLES).next_multiple_of(2),
        };
        if n < 4 || !n.is_multiple_of(2) {
            return Err(Error::validation(
                "samples",
                format!("sample count {n} must be even and at least 4"),
            ));
        }
        if 2 * max_mode >= n {
            return Err(Error::validation(
                "fourier",
                format!("mode {max_mode} is not below the Nyquist limit of {n} samples"),
            ));
        }
        let mut modes: Vec<(i64, Complex64)> = Vec::new();
        for &(m, c) in terms {
            if !(c.re.is_finite() && c.im.is_finite()) {
                return Err(Error::validation(
                    "fourier",
                    format!("non-finite coefficient for mode {m}"),
                ));
            }
            match modes.iter_mut().find(|(k, _)| *k == m) {
                Some((_, acc)) => *acc += c,
                None => modes.push((m, c)),
            }
        }
        modes.sort_by_key(|(m, _)| *m);
        let samples = (0..n).map(|k| eval_modes(&modes, TAU * k as f64 / n as f64)).collect();
        Ok(BoundaryData { samples, modes })
    }

    pub fn constant(value: Complex64) -> Self {
        BoundaryData::from_fourier(&[(0, value)], None).expect("constant data")
    }

    pub fn zero() -> Self {
        BoundaryData::from_fourier(&[], None).expect("zero data")
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Interpolant coefficients (mode, coefficient), ascending by mode.
    pub fn modes(&self) -> &[(i64, Complex64)] {
        &self.modes
    }

    pub fn is_zero(&self) -> bool {
        self.modes.iter().all(|(_, c)| *c == Complex64::new(0.0, 0.0))
    }

    pub fn theta(&self, k: usize) -> f64 {
        TAU * k as f64 / self.samples.len() as f64
    }

    /// Value of the interpolant at e^{iθ}.
    pub fn eval(&self, theta: f64) -> Complex64 {
        eval_modes(&self.modes, theta)
    }

    /// Interpolant values at θₖ = 2πk/n.
    pub fn resample(&self, n: usize) -> Vec<Complex64> {
        if n == self.samples.len() {
            return self.samples.clone();
        }
        (0..n).map(|k| self.eval(TAU * k as f64 / n as f64)).collect()
    }

    /// sup |f| estimated on a grid 16 times finer than the samples.
    pub fn sup_norm(&self) -> f64 {
        let dense = 16 * self.samples.len();
        self.resample(dense)
            .into_iter()
            .chain(self.samples.iter().copied())
            .map(|v| v.norm())
            .fold(0.0, f64::max)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        BoundaryData {
            samples: self.samples.iter().map(|s| s * factor).collect(),
            modes: self.modes.iter().map(|&(m, c)| (m, c * factor)).collect(),
        }
    }

    /// Pointwise sum; the result uses the finer of the two sample sets.
    pub fn add(&self, other: &BoundaryData) -> Self {
        let n = self.len().max(other.len());
        let mut modes = self.modes.clone();
        for &(m, c) in &other.modes {
            match modes.iter_mut().find(|(k, _)| *k == m) {
                Some((_, acc)) => *acc += c,
                None => modes.push((m, c)),
            }
        }
        modes.sort_by_key(|(m, _)| *m);
        let samples = (0..n).map(|k| eval_modes(&modes, TAU * k as f64 / n as f64)).collect();
        BoundaryData { samples, modes }
    }
}

fn eval_modes(modes: &[(i64, Complex64)], theta: f64) -> Complex64 {
    modes.iter().map(|&(m, c)| c * Complex64::cis(m as f64 * theta)).sum()
}

fn interpolant_modes(samples: &[Complex64]) -> Vec<(i64, Complex64)> {
    let n = samples.len();
    let half = (n / 2) as i64;
    let mut modes = Vec::with_capacity(n + 1);
    for m in -half..=half {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, s) in samples.iter().enumerate() {
            // reduce the phase index mod n to keep the angle small
            let idx = (m.rem_euclid(n as i64) as usize * k) % n;
            acc += s * Complex64::cis(-TAU * idx as f64 / n as f64);
        }
        let mut c = acc / n as f64;
        if m.abs() == half {
            c *= 0.5;
        }
        modes.push((m, c));
    }
    modes
}
