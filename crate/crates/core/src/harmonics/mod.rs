//! Fractional and integer spherical harmonics.
//!
//! The fractional family is Y(θ,φ) = N (sin θ)^l e^{±ilφ} with l = p/q > 0
//! and m = ±l, living on the extended azimuthal interval [0, 2πq). The
//! closed θ-form is the degree-ν Legendre function P_ν^ν(cos θ) =
//! (sin θ)^ν / (2^ν Γ(ν+1)); the integer family is the associated Legendre
//! polynomial baseline. `Harmonic` bundles a spec with its quadrature-derived
//! normalization constant so grid evaluation stays cheap.

mod residual;

pub use residual::{
    eigen_residual, eigen_residual_with_k, legendre_ode_residual, legendre_ode_residual_with_k,
    EIGEN_POLE_BAND,
};

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::numerics::{gamma, integrate, NumericsError, Tolerances};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HarmonicError {
    #[error("invalid harmonic spec: {0}")]
    InvalidSpec(String),
    #[error("theta = {0} out of range [0, pi]")]
    ThetaRange(f64),
    #[error("theta = {theta} within {margin} of a pole")]
    PoleProximity { theta: f64, margin: f64 },
    #[error("grid too coarse: {0} points (need at least 8 per axis)")]
    GridTooCoarse(usize),
    #[error("normalization quadrature did not converge (error estimate {0:.3e})")]
    NormalizationUnconverged(f64),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// Which of the four standard combinations of e^{±imφ} a spec evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Form {
    ComplexPlus,
    ComplexMinus,
    Cos,
    Sin,
}

impl Form {
    pub fn is_real(self) -> bool {
        matches!(self, Form::Cos | Form::Sin)
    }
}

impl std::fmt::Display for Form {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Form::ComplexPlus => "complex_plus",
            Form::ComplexMinus => "complex_minus",
            Form::Cos => "cos",
            Form::Sin => "sin",
        };
        f.write_str(s)
    }
}

/// Degree, order and form of one harmonic.
///
/// Invariants enforced at construction:
/// * degree l ≥ 0;
/// * fractional l (non-integer) requires |m| = l;
/// * integer l requires integer m with |m| ≤ l;
/// * complex_plus carries m ≥ 0, complex_minus m ≤ 0;
/// * sin form with m = 0 is rejected (identically zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HarmonicSpec {
    degree: Rational,
    order: Rational,
    form: Form,
}

impl HarmonicSpec {
    /// The principal family with m locked to the degree: order = ±l by form.
    pub fn new(degree: Rational, form: Form) -> Result<Self, HarmonicError> {
        let order = match form {
            Form::ComplexMinus => -degree,
            _ => degree,
        };
        Self::with_order(degree, order, form)
    }

    /// General constructor, needed for the integer baseline (e.g. l=1, m=0).
    pub fn with_order(
        degree: Rational,
        order: Rational,
        form: Form,
    ) -> Result<Self, HarmonicError> {
        if degree.is_negative() {
            return Err(HarmonicError::InvalidSpec(format!(
                "degree must be >= 0, got {degree}"
            )));
        }
        if degree.is_integer() {
            // the P_l^m recurrence overflows f64 long before this bound
            if degree.numer() > 10_000 {
                return Err(HarmonicError::InvalidSpec(format!(
                    "integer degree {degree} is out of the supported range (<= 10000)"
                )));
            }
            if !order.is_integer() || order.abs() > degree {
                return Err(HarmonicError::InvalidSpec(format!(
                    "integer degree {degree} requires integer |m| <= l, got m = {order}"
                )));
            }
        } else if order.abs() != degree {
            return Err(HarmonicError::InvalidSpec(format!(
                "fractional degree {degree} requires m = ±{degree}, got m = {order}"
            )));
        }
        match form {
            Form::ComplexPlus if order.is_negative() => {
                return Err(HarmonicError::InvalidSpec(format!(
                    "complex_plus requires m >= 0, got {order}"
                )));
            }
            Form::ComplexMinus if order > Rational::ZERO => {
                return Err(HarmonicError::InvalidSpec(format!(
                    "complex_minus requires m <= 0, got {order}"
                )));
            }
            Form::Sin if order.is_zero() => {
                return Err(HarmonicError::InvalidSpec(
                    "sin form with m = 0 is identically zero".into(),
                ));
            }
            _ => {}
        }
        Ok(HarmonicSpec {
            degree,
            order,
            form,
        })
    }

    pub fn degree(&self) -> Rational {
        self.degree
    }

    pub fn order(&self) -> Rational {
        self.order
    }

    pub fn form(&self) -> Form {
        self.form
    }

    /// Azimuthal period 2πq for l = p/q in lowest terms (2π for integers).
    pub fn period(&self) -> f64 {
        2.0 * PI * self.degree.denom() as f64
    }

    /// Number of 2π sheets the harmonic wraps through before closing.
    pub fn sheets(&self) -> usize {
        self.degree.denom() as usize
    }

    /// Eigenvalue k = l(l+1) of the squared angular momentum operator,
    /// kept exact until evaluation.
    pub fn eigenvalue(&self) -> Rational {
        self.degree * (self.degree + Rational::ONE)
    }
}

/// A validated evaluation point: θ ∈ [0, π], φ reduced modulo the period.
#[derive(Debug, Clone, Copy)]
pub struct EvalPoint {
    pub theta: f64,
    pub phi: f64,
}

impl EvalPoint {
    pub fn new(theta: f64, phi: f64, period: f64) -> Result<Self, HarmonicError> {
        if !theta.is_finite() || !(0.0..=PI).contains(&theta) {
            return Err(HarmonicError::ThetaRange(theta));
        }
        if !phi.is_finite() {
            return Err(HarmonicError::InvalidSpec(format!("non-finite phi {phi}")));
        }
        let mut phi = phi.rem_euclid(period);
        if phi >= period {
            phi = 0.0;
        }
        Ok(EvalPoint { theta, phi })
    }
}

/// Θ closed form for fractional degree: (sin θ)^l / (2^l Γ(l+1)).
/// Exactly zero at the poles.
pub fn theta_fractional(l: Rational, theta: f64) -> Result<f64, HarmonicError> {
    if l <= Rational::ZERO {
        return Err(HarmonicError::InvalidSpec(format!(
            "theta_fractional requires l > 0, got {l}"
        )));
    }
    if !theta.is_finite() || !(0.0..=PI).contains(&theta) {
        return Err(HarmonicError::ThetaRange(theta));
    }
    if theta == 0.0 || theta == PI {
        return Ok(0.0);
    }
    let nu = l.to_f64();
    let scale = 1.0 / (2f64.powf(nu) * gamma(nu + 1.0)?);
    Ok(scale * theta.sin().powf(nu))
}

/// Associated Legendre polynomial P_l^|m|(cos θ) in the Rodrigues
/// convention without the Condon–Shortley phase. Standard upward
/// recurrence from P_m^m = (2m−1)!! (sin θ)^m.
pub fn theta_integer(l: u32, m: i32, theta: f64) -> Result<f64, HarmonicError> {
    if m.unsigned_abs() > l {
        return Err(HarmonicError::InvalidSpec(format!(
            "|m| = {} exceeds l = {l}",
            m.unsigned_abs()
        )));
    }
    if !theta.is_finite() || !(0.0..=PI).contains(&theta) {
        return Err(HarmonicError::ThetaRange(theta));
    }
    let m = m.unsigned_abs();
    let s = theta.sin();
    let c = theta.cos();

    let mut pmm = 1.0;
    let mut odd = 1.0;
    for _ in 0..m {
        pmm *= odd * s;
        odd += 2.0;
    }
    if l == m {
        return Ok(pmm);
    }
    let mut pm1 = c * (2.0 * m as f64 + 1.0) * pmm;
    if l == m + 1 {
        return Ok(pm1);
    }
    let mut p = 0.0;
    for i in (m + 2)..=l {
        let i = i as f64;
        let mf = m as f64;
        p = (c * (2.0 * i - 1.0) * pm1 - (i + mf - 1.0) * pmm) / (i - mf);
        pmm = pm1;
        pm1 = p;
    }
    Ok(p)
}

/// Azimuthal factor. Complex forms return e^{imφ}/√(2πq); cos/sin forms
/// return the bare cos(mφ), sin(mφ) (normalization happens in `Harmonic`).
pub fn phi_eval(m: Rational, form: Form, phi: f64) -> Complex64 {
    let mf = m.to_f64();
    match form {
        Form::ComplexPlus | Form::ComplexMinus => {
            let period = 2.0 * PI * m.denom() as f64;
            Complex64::from_polar(1.0 / period.sqrt(), mf * phi)
        }
        Form::Cos => Complex64::new((mf * phi).cos(), 0.0),
        Form::Sin => Complex64::new((mf * phi).sin(), 0.0),
    }
}

/// Bare θ basis used for normalization and evaluation: (sin θ)^l for
/// fractional degree, P_l^|m|(cos θ) for integer degree.
fn theta_basis(spec: &HarmonicSpec, theta: f64) -> f64 {
    if spec.degree.is_integer() {
        theta_integer(
            spec.degree.numer() as u32,
            spec.order.numer() as i32,
            theta,
        )
        .expect("spec invariants guarantee valid integer orders")
    } else {
        if theta == 0.0 || theta == PI {
            return 0.0;
        }
        theta.sin().powf(spec.degree.to_f64())
    }
}

fn phi_basis(spec: &HarmonicSpec, phi: f64) -> Complex64 {
    let m = spec.order.to_f64();
    match spec.form {
        Form::ComplexPlus | Form::ComplexMinus => Complex64::from_polar(1.0, m * phi),
        Form::Cos => Complex64::new((m * phi).cos(), 0.0),
        Form::Sin => Complex64::new((m * phi).sin(), 0.0),
    }
}

/// N such that ∫₀^{2πq} ∫₀^π |N·Θ(θ)·A(φ)|² sin θ dθ dφ = 1, with Θ the bare
/// θ basis and A the unit-amplitude azimuthal factor. Both integrals are
/// evaluated by adaptive quadrature; non-convergence is surfaced.
pub fn normalization_constant(spec: &HarmonicSpec, tol: f64) -> Result<f64, HarmonicError> {
    let theta_part = integrate(
        |t| {
            let b = theta_basis(spec, t);
            b * b * t.sin()
        },
        0.0,
        PI,
        tol,
    )?;
    if !theta_part.converged {
        return Err(HarmonicError::NormalizationUnconverged(
            theta_part.error_estimate,
        ));
    }
    let phi_part = integrate(
        |p| phi_basis(spec, p).norm_sqr(),
        0.0,
        spec.period(),
        tol,
    )?;
    if !phi_part.converged {
        return Err(HarmonicError::NormalizationUnconverged(
            phi_part.error_estimate,
        ));
    }
    let norm_sq = theta_part.value * phi_part.value;
    if !norm_sq.is_finite() || norm_sq <= 0.0 {
        return Err(HarmonicError::InvalidSpec(format!(
            "|Y|^2 integral of {spec:?} is not positive"
        )));
    }
    Ok(1.0 / norm_sq.sqrt())
}

/// A spec plus its precomputed normalization constant.
#[derive(Debug, Clone)]
pub struct Harmonic {
    spec: HarmonicSpec,
    norm: f64,
}

impl Harmonic {
    pub fn new(spec: HarmonicSpec, tols: &Tolerances) -> Result<Self, HarmonicError> {
        tols.validate()?;
        let norm = normalization_constant(&spec, tols.quad_abs_tol)?;
        Ok(Harmonic { spec, norm })
    }

    pub fn spec(&self) -> &HarmonicSpec {
        &self.spec
    }

    pub fn normalization(&self) -> f64 {
        self.norm
    }

    pub fn point(&self, theta: f64, phi: f64) -> Result<EvalPoint, HarmonicError> {
        EvalPoint::new(theta, phi, self.spec.period())
    }

    /// Y(θ, φ). Real forms come back with zero imaginary part.
    pub fn eval(&self, theta: f64, phi: f64) -> Result<Complex64, HarmonicError> {
        let p = self.point(theta, phi)?;
        Ok(self.eval_point(&p))
    }

    pub fn eval_point(&self, p: &EvalPoint) -> Complex64 {
        self.norm * theta_basis(&self.spec, p.theta) * phi_basis(&self.spec, p.phi)
    }

    /// Signed real value used for plotting: the value itself for cos/sin
    /// forms, the real part for complex forms.
    pub fn signed_real(&self, theta: f64, phi: f64) -> Result<f64, HarmonicError> {
        Ok(self.eval(theta, phi)?.re)
    }
}
