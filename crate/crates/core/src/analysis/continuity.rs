//! Seam continuity and precession of the X-Y plane curves.
//!
//! For rational degree l = p/q the full curve closes after q spatial turns
//! (azimuthal length 2πq), but its repeating pattern has length 2πq/p. When
//! p > 1 the pattern re-enters rotated by δ = 2πq/p mod 2π, and chained
//! pattern copies of the cos form no longer join up: the gap between the end
//! anchor of one pattern and the start anchor of the next, measured at
//! θ = π/2, is the chord 2R·sin(δ/2) with R the anchor radius. Sin-form
//! patterns anchor at the origin (r = 0), so their chaining stays continuous.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::harmonics::{Form, Harmonic, HarmonicSpec};
use crate::numerics::Tolerances;
use crate::rational::Rational;

use super::AnalysisError;

/// Threshold on the extrapolated closure jump below which the full curve is
/// considered closed.
const CLOSURE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Serialize)]
pub struct ContinuityReport {
    pub degree: Rational,
    pub form: Form,
    /// |Y(π/2, period − ε) − Y(π/2, 0)| extrapolated ε → 0.
    pub closure_jump: f64,
    /// 2πq/p: azimuthal length after which the curve shape repeats.
    pub pattern_period: f64,
    /// δ = pattern_period mod 2π, computed in exact rational multiples of π.
    #[serde(rename = "delta")]
    pub precession_angle: f64,
    /// Spatial distance between consecutive pattern anchor points at θ = π/2.
    pub seam_chord_gap: f64,
    pub closes: bool,
}

/// Continuity report for the cos or sin form of a rational degree l > 0.
pub fn continuity_report(
    l: Rational,
    form: Form,
    tols: &Tolerances,
) -> Result<ContinuityReport, AnalysisError> {
    if !form.is_real() {
        return Err(AnalysisError::ComplexForm);
    }
    if l <= Rational::ZERO {
        return Err(AnalysisError::Harmonic(
            crate::harmonics::HarmonicError::InvalidSpec(format!(
                "continuity requires l > 0, got {l}"
            )),
        ));
    }
    let spec = HarmonicSpec::new(l, form)?;
    let harmonic = Harmonic::new(spec, tols)?;
    let period = spec.period();

    // Extrapolate the boundary difference to ε → 0. The smooth approach of
    // the periodic value contributes O(ε) (sin forms) and O(ε²) (cos forms)
    // terms; two Richardson stages remove both, isolating a genuine
    // discontinuity (zero for every rational l).
    let start = harmonic.eval(FRAC_PI_2, 0.0)?.re;
    let diff = |eps: f64| -> Result<f64, AnalysisError> {
        Ok(harmonic.eval(FRAC_PI_2, period - eps)?.re - start)
    };
    let eps = 1e-4;
    let (d1, d2, d3) = (diff(eps)?, diff(eps / 2.0)?, diff(eps / 4.0)?);
    let r1 = 2.0 * d2 - d1;
    let r2 = 2.0 * d3 - d2;
    let closure_jump = ((4.0 * r2 - r1) / 3.0).abs();

    // pattern period 2πq/p, precession δ = (2q/p mod 2) · π, both exact.
    let turns = Rational::new(2 * l.denom(), l.numer());
    let wrapped = turns - Rational::integer(2 * (turns / Rational::integer(2)).floor());
    let pattern_period = turns.to_f64() * PI;
    let precession_angle = wrapped.to_f64() * PI;

    // Anchor = the curve point at the pattern boundary (φ = 0): radius N'
    // for cos forms, 0 for sin forms.
    let anchor_r = start.abs();
    let seam_chord_gap = 2.0 * anchor_r * (precession_angle / 2.0).sin().abs();

    Ok(ContinuityReport {
        degree: l,
        form,
        closure_jump,
        pattern_period,
        precession_angle,
        seam_chord_gap,
        closes: closure_jump < CLOSURE_TOL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn unit_fraction_cos_has_no_precession() {
        let r = continuity_report(rat(1, 3), Form::Cos, &Tolerances::default()).unwrap();
        assert_abs_diff_eq!(r.precession_angle, 0.0);
        assert_abs_diff_eq!(r.seam_chord_gap, 0.0);
        assert_relative_eq!(r.pattern_period, 6.0 * PI, max_relative = 1e-14);
        assert!(r.closes);
    }

    #[test]
    fn two_thirds_cos_breaks_at_the_seam() {
        let r = continuity_report(rat(2, 3), Form::Cos, &Tolerances::default()).unwrap();
        // δ = 3π mod 2π = π, exactly.
        assert_abs_diff_eq!(r.precession_angle, PI);
        // gap = 2R sin(π/2) = 2R with R = N' > 0.
        assert!(r.seam_chord_gap > 0.0);
        let anchor = r.seam_chord_gap / 2.0;
        assert!(r.seam_chord_gap > 0.1 * anchor);
        assert!(r.closure_jump < 1e-10);
        assert!(r.closes);
    }

    #[test]
    fn sin_patterns_chain_continuously() {
        for l in [rat(2, 3), rat(3, 4), rat(2, 5)] {
            let r = continuity_report(l, Form::Sin, &Tolerances::default()).unwrap();
            assert_abs_diff_eq!(r.seam_chord_gap, 0.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn three_quarters_precesses_by_two_thirds_pi() {
        let r = continuity_report(rat(3, 4), Form::Cos, &Tolerances::default()).unwrap();
        assert_abs_diff_eq!(r.precession_angle, 2.0 * PI / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn complex_forms_rejected() {
        assert!(matches!(
            continuity_report(rat(1, 2), Form::ComplexPlus, &Tolerances::default()),
            Err(AnalysisError::ComplexForm)
        ));
    }
}
