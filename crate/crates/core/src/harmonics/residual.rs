//! Residual verification: substitute the claimed eigenfunctions back into
//! the defining equations and measure what is left over.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::numerics::{gamma, Tolerances};
use crate::rational::Rational;

use super::{Harmonic, HarmonicError, HarmonicSpec};

/// Analytic residual of Θ = (sin θ)^l / (2^l Γ(l+1)) in the θ equation
///
///   (1/sin θ) d/dθ (sin θ dΘ/dθ) − m²Θ/sin²θ + kΘ
///
/// with k = l(l+1). Uses the analytic first and second derivatives of
/// (sin θ)^l, not finite differences; the three operator terms are summed
/// numerically, so the cancellation is the thing being tested. Identically
/// zero in exact arithmetic for |m| = l.
pub fn legendre_ode_residual(
    l: Rational,
    m: Rational,
    theta: f64,
    tols: &Tolerances,
) -> Result<f64, HarmonicError> {
    legendre_ode_residual_with_k(l, m, theta, l.to_f64() * (l.to_f64() + 1.0), tols)
}

/// Same residual with an explicit eigenvalue k; by linearity the result is
/// (k − l(l+1))·Θ, which is how a deliberately wrong k shows up.
pub fn legendre_ode_residual_with_k(
    l: Rational,
    m: Rational,
    theta: f64,
    k: f64,
    tols: &Tolerances,
) -> Result<f64, HarmonicError> {
    tols.validate()?;
    if l <= Rational::ZERO {
        return Err(HarmonicError::InvalidSpec(format!(
            "ODE residual requires l > 0, got {l}"
        )));
    }
    if m.abs() != l {
        return Err(HarmonicError::InvalidSpec(format!(
            "ODE residual is defined for |m| = l, got l = {l}, m = {m}"
        )));
    }
    if !theta.is_finite()
        || theta < tols.pole_margin
        || theta > PI - tols.pole_margin
    {
        return Err(HarmonicError::PoleProximity {
            theta,
            margin: tols.pole_margin,
        });
    }

    let nu = l.to_f64();
    let mf = m.to_f64();
    let scale = 1.0 / (2f64.powf(nu) * gamma(nu + 1.0)?);
    let s = theta.sin();
    let c = theta.cos();

    // (1/sin) d/dθ (sin Θ') = ν² s^{ν−2} c² − ν s^ν, times the DLMF scale.
    let sturm = scale * (nu * nu * s.powf(nu - 2.0) * c * c - nu * s.powf(nu));
    let centrifugal = -scale * mf * mf * s.powf(nu - 2.0);
    let eigen = k * scale * s.powf(nu);
    Ok(sturm + centrifugal + eigen)
}

/// θ band excluded around each pole when applying the grid operator. The
/// second-order stencil truncation error scales like h²·(sin θ)^{l−4}, so a
/// band much wider than the analytic-residual pole margin is needed for the
/// grid residual to converge at its nominal rate.
pub const EIGEN_POLE_BAND: f64 = PI / 8.0;

/// Max relative residual of the full angular operator applied to Y by
/// second-order finite differences on an nθ × (nφ·q) grid:
///
///   max |L²Y − l(l+1)Y| / max |Y|
///
/// over the grid interior, θ restricted to [EIGEN_POLE_BAND, π − band].
/// φ wraps modulo the extended period. Halving the spacing cuts the
/// residual by ~4.
pub fn eigen_residual(
    spec: &HarmonicSpec,
    n_theta: usize,
    n_phi_per_2pi: usize,
    tols: &Tolerances,
) -> Result<f64, HarmonicError> {
    let k = spec.eigenvalue().to_f64();
    eigen_residual_with_k(spec, n_theta, n_phi_per_2pi, k, tols)
}

/// `eigen_residual` with an eigenvalue override (used to demonstrate that a
/// wrong k leaves a nonzero residual).
pub fn eigen_residual_with_k(
    spec: &HarmonicSpec,
    n_theta: usize,
    n_phi_per_2pi: usize,
    k: f64,
    tols: &Tolerances,
) -> Result<f64, HarmonicError> {
    if n_theta < 8 {
        return Err(HarmonicError::GridTooCoarse(n_theta));
    }
    if n_phi_per_2pi < 8 {
        return Err(HarmonicError::GridTooCoarse(n_phi_per_2pi));
    }
    let harmonic = Harmonic::new(*spec, tols)?;
    let n_phi = n_phi_per_2pi * spec.sheets();
    let period = spec.period();

    let lo = EIGEN_POLE_BAND;
    let hi = PI - EIGEN_POLE_BAND;
    let h = (hi - lo) / (n_theta - 1) as f64;
    let hp = period / n_phi as f64;

    // Evaluate Y over the full grid once.
    let mut grid = vec![Complex64::new(0.0, 0.0); n_theta * n_phi];
    let mut max_abs: f64 = 0.0;
    for i in 0..n_theta {
        let theta = lo + i as f64 * h;
        for j in 0..n_phi {
            let phi = j as f64 * hp;
            let y = harmonic.eval(theta, phi)?;
            max_abs = max_abs.max(y.norm());
            grid[i * n_phi + j] = y;
        }
    }
    if max_abs == 0.0 {
        return Err(HarmonicError::InvalidSpec(
            "harmonic vanishes on the whole grid".into(),
        ));
    }

    let mut worst: f64 = 0.0;
    for i in 1..n_theta - 1 {
        let theta = lo + i as f64 * h;
        let s = theta.sin();
        let cot = theta.cos() / s;
        let row = i * n_phi;
        let up = (i + 1) * n_phi;
        let down = (i - 1) * n_phi;
        for j in 0..n_phi {
            let jp = (j + 1) % n_phi;
            let jm = (j + n_phi - 1) % n_phi;
            let y = grid[row + j];
            let d2t = (grid[up + j] - 2.0 * y + grid[down + j]) / (h * h);
            let dt = (grid[up + j] - grid[down + j]) / (2.0 * h);
            let d2p = (grid[row + jp] - 2.0 * y + grid[row + jm]) / (hp * hp);
            let l2 = -(d2t + cot * dt + d2p / (s * s));
            worst = worst.max((l2 - k * y).norm());
        }
    }
    Ok(worst / max_abs)
}
