//! Fractional-degree spherical harmonics.
//!
//! The angular-momentum eigenequation admits, besides the textbook integer
//! family built on associated Legendre polynomials, a family of closed-form
//! solutions Y(θ,φ) = N (sin θ)^{1/n} e^{±iφ/n} with degree and order ±1/n
//! and azimuthal period 2nπ. This crate evaluates and normalizes both
//! families, verifies them against the defining ODEs, analyzes the symmetry
//! and seam structure of their plots, exports plot geometry, and implements
//! the exact rational calculus that splits a spin 1/n into signed
//! unit-fraction components.
//!
//! Modules:
//! * [`numerics`]: gamma, adaptive quadrature, finite differences;
//! * [`harmonics`]: specs, evaluation, normalization, residual checks;
//! * [`analysis`]: sample clouds, symmetry classification, continuity,
//!   particle classes;
//! * [`geometry`]: surface meshes, planar curves, OBJ/PLY/CSV export;
//! * [`decomposition`]: exact unit-fraction spin splitting.

pub mod analysis;
pub mod decomposition;
pub mod geometry;
pub mod harmonics;
pub mod numerics;
pub mod rational;

pub use harmonics::{Form, Harmonic, HarmonicSpec};
pub use numerics::Tolerances;
pub use rational::Rational;
