//! Source terms g(ζ) = Σ c·ζ^a·ζ̄^b.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::data::BoundaryData;
use crate::error::{Error, Result};

pub const MAX_EXPONENT: u32 = 16;

/// Sampling resolution (radii × angles) for the sup-norm estimate.
pub const SUP_GRID: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
    pub coeff: Complex64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct SourceTerm {
    terms: Vec<Monomial>,
}

impl SourceTerm {
    pub fn new(terms: Vec<Monomial>) -> Result<Self> {
        for t in &terms {
            if t.a > MAX_EXPONENT || t.b > MAX_EXPONENT {
                return Err(Error::validation(
                    "terms",
                    format!("exponent ({}, {}) exceeds {MAX_EXPONENT}", t.a, t.b),
                ));
            }
            if !(t.coeff.re.is_finite() && t.coeff.im.is_finite()) {
                return Err(Error::validation("terms", "non-finite coefficient"));
            }
        }
        let mut merged: Vec<Monomial> = Vec::new();
        for t in terms {
            match merged.iter_mut().find(|m| m.a == t.a && m.b == t.b) {
                Some(m) => m.coeff += t.coeff,
                None => merged.push(t),
            }
        }
        merged.retain(|m| m.coeff != Complex64::new(0.0, 0.0));
        Ok(SourceTerm { terms: merged })
    }

    /// Convenience constructor from (a, b, coefficient) triples.
    pub fn from_triples(triples: &[(u32, u32, Complex64)]) -> Result<Self> {
        SourceTerm::new(triples.iter().map(|&(a, b, coeff)| Monomial { a, b, coeff }).collect())
    }

    pub fn constant(c: Complex64) -> Self {
        SourceTerm::from_triples(&[(0, 0, c)]).expect("constant source")
    }

    pub fn zero() -> Self {
        SourceTerm::default()
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_exponents(&self) -> (u32, u32) {
        self.terms.iter().fold((0, 0), |(a, b), t| (a.max(t.a), b.max(t.b)))
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.a + t.b).max().unwrap_or(0)
    }

    #[inline]
    pub fn eval(&self, zeta: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for t in &self.terms {
            acc += t.coeff * zeta.powu(t.a) * zeta.conj().powu(t.b);
        }
        acc
    }

    /// Δ² with Δ = ∂²/∂z∂z̄: z^a z̄^b ↦ a(a−1)b(b−1) z^{a−2} z̄^{b−2}.
    pub fn bilaplacian(&self) -> SourceTerm {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.a >= 2 && t.b >= 2)
            .map(|t| {
                let k = (t.a * (t.a - 1) * t.b * (t.b - 1)) as f64;
                Monomial {
                    a: t.a - 2,
                    b: t.b - 2,
                    coeff: t.coeff * k,
                }
            })
            .collect();
        SourceTerm::new(terms).expect("exponents only decrease")
    }

    /// Restriction to the unit circle: z^a z̄^b ↦ e^{i(a−b)θ}.
    pub fn boundary_trace(&self) -> Vec<(i64, Complex64)> {
        self.terms.iter().map(|t| (t.a as i64 - t.b as i64, t.coeff)).collect()
    }

    /// Inward normal derivative −∂/∂r on the circle: z^a z̄^b ↦ −(a+b)e^{i(a−b)θ}.
    pub fn inward_normal_trace(&self) -> Vec<(i64, Complex64)> {
        self.terms
            .iter()
            .map(|t| (t.a as i64 - t.b as i64, -t.coeff * (t.a + t.b) as f64))
            .collect()
    }

    pub fn boundary_data(&self) -> Result<(BoundaryData, BoundaryData)> {
        Ok((
            BoundaryData::from_fourier(&self.boundary_trace(), None)?,
            BoundaryData::from_fourier(&self.inward_normal_trace(), None)?,
        ))
    }

    /// Σ|c|, a certified upper bound for sup over the closed disk.
    pub fn sup_norm_bound(&self) -> f64 {
        self.terms.iter().fold(0.0, |acc, t| acc + t.coeff.norm())
    }

    /// max |g| over a polar grid of the closed disk that includes the
    /// origin and the unit circle.
    pub fn sup_norm_sampled(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let mut best = self.eval(Complex64::new(0.0, 0.0)).norm();
        for i in 1..=SUP_GRID {
            let r = i as f64 / SUP_GRID as f64;
            for j in 0..SUP_GRID {
                let z = Complex64::from_polar(r, TAU * j as f64 / SUP_GRID as f64);
                best = best.max(self.eval(z).norm());
            }
        }
        best
    }

    pub fn scale(&self, factor: Complex64) -> SourceTerm {
        SourceTerm::new(
            self.terms
                .iter()
                .map(|t| Monomial {
                    coeff: t.coeff * factor,
                    ..*t
                })
                .collect(),
        )
        .expect("scaling keeps exponents")
    }

    pub fn add(&self, other: &SourceTerm) -> SourceTerm {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        SourceTerm::new(terms).expect("sum keeps exponents")
    }
}
