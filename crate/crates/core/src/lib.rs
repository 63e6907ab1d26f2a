//! Solver and verification toolkit for the inhomogeneous biharmonic
//! Dirichlet problem on the unit disk,
//!
//! ```text
//! Δ²Φ = g in D,   Φ = f on T,   ∂ₙΦ = h on T,
//! ```
//!
//! with Δ = ∂²/∂z∂z̄ and ∂ₙ the inward normal derivative. The solution is
//! assembled from the explicit kernel representation
//! `Φ = F₀[f] + H₀[h] − G[g]`.

pub mod error;
pub mod green;
pub mod kernels;
pub mod lipschitz;
pub mod point;
pub mod quadrature;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use point::{DiskPoint, WirtingerPair};
