//! Foundation numerics: gamma function, adaptive quadrature and finite
//! differences. Everything here is a pure function of its arguments.

mod diff;
mod gamma;
mod quad;

pub use diff::second_derivative;
pub use gamma::gamma;
pub use quad::{integrate, QuadratureResult};

/// Numeric tolerances shared across the crate.
///
/// * `quad_abs_tol`: absolute tolerance handed to the adaptive quadrature
///   when computing normalization constants.
/// * `residual_tol`: pass threshold for the analytic Legendre ODE residual.
/// * `pole_margin`: radians kept clear of θ ∈ {0, π} when a formula divides
///   by sin θ.
/// * `match_tol`: set-level symmetry matching tolerance, relative to the
///   largest radius in a sample cloud.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    pub quad_abs_tol: f64,
    pub residual_tol: f64,
    pub pole_margin: f64,
    pub match_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            quad_abs_tol: 1e-10,
            residual_tol: 1e-9,
            pole_margin: 1e-2,
            match_tol: 1e-6,
        }
    }
}

impl Tolerances {
    /// All tolerances must be finite and strictly positive.
    pub fn validate(&self) -> Result<(), NumericsError> {
        let ok = [
            self.quad_abs_tol,
            self.residual_tol,
            self.pole_margin,
            self.match_tol,
        ]
        .iter()
        .all(|v| v.is_finite() && *v > 0.0);
        if ok {
            Ok(())
        } else {
            Err(NumericsError::InvalidTolerances)
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumericsError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid integration interval [{a}, {b}]: need finite a < b")]
    InvalidInterval { a: f64, b: f64 },
    #[error("tolerances must be finite and strictly positive")]
    InvalidTolerances,
}
