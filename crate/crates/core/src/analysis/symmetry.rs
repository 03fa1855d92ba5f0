//! Numeric symmetry classification of the Y_{1/n} plots, cross-checked
//! against the parity rules the plots are claimed to obey:
//!
//! * n even: positive and negative regions coincide, X-Z mirror symmetry;
//!   n ≡ 2 (mod 4) makes the sin plot a left-right mirror of the cos plot,
//!   n ≡ 0 (mod 4) makes them identical.
//! * n odd: X-Z symmetric, Y-Z antisymmetric, and the sin plot is the cos
//!   plot rotated 90° about z.
//!
//! Disagreements between the numeric set-level tests and the rules are
//! reported, never silently resolved.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::harmonics::{Form, HarmonicSpec};
use crate::numerics::Tolerances;
use crate::rational::Rational;

use super::cloud::{match_clouds, sample_cloud, PointTransform, SampleCloud, Transform};
use super::AnalysisError;

/// How the sin-form plot maps onto the cos-form plot.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SinCosRelation {
    Identical,
    MirrorFlip,
    Rotated90,
    /// Fallback: rotation by an arbitrary angle δ ∈ [0, 2π).
    RotatedBy(f64),
}

/// Set-level symmetry flags for Y_{1/n,cos} plus the sin↔cos relation.
#[derive(Debug, Clone, Serialize)]
pub struct SymmetryReport {
    pub n: u32,
    pub xy_plane_symmetric: bool,
    pub xz_plane_symmetric: bool,
    pub yz_plane_symmetric: bool,
    pub yz_plane_antisymmetric: bool,
    pub pos_neg_overlap: bool,
    pub sin_vs_cos_relation: SinCosRelation,
    /// Statements where the numeric result contradicts the parity rules.
    /// Empty means full agreement.
    pub rule_mismatches: Vec<String>,
}

/// Cloud resolution for classification; symmetries here are exact lattice
/// identities, so this only needs to be fine enough to be representative.
const RESOLUTION: usize = 128;

fn relation_of(
    cos_cloud: &SampleCloud,
    sin_cloud: &SampleCloud,
    match_tol: f64,
) -> Result<SinCosRelation, AnalysisError> {
    let identical = match_clouds(
        cos_cloud,
        sin_cloud,
        Transform::plain(PointTransform::PhiShift(0.0)),
        match_tol,
    )?;
    if identical.matched {
        return Ok(SinCosRelation::Identical);
    }
    let mirrored = match_clouds(
        cos_cloud,
        sin_cloud,
        Transform::plain(PointTransform::PhiReflectPi),
        match_tol,
    )?;
    if mirrored.matched {
        return Ok(SinCosRelation::MirrorFlip);
    }
    for delta in [FRAC_PI_2, -FRAC_PI_2] {
        let rotated = match_clouds(
            cos_cloud,
            sin_cloud,
            Transform::plain(PointTransform::PhiShift(delta)),
            match_tol,
        )?;
        if rotated.matched {
            return Ok(SinCosRelation::Rotated90);
        }
    }
    // Scan the lattice rotations for the best fit.
    let k = cos_cloud.n_phi_per_2pi();
    let step = 2.0 * PI / k as f64;
    let mut best = (f64::INFINITY, 0.0);
    for s in 0..k {
        let delta = s as f64 * step;
        let r = match_clouds(
            cos_cloud,
            sin_cloud,
            Transform::plain(PointTransform::PhiShift(delta)),
            match_tol,
        )?;
        if r.max_mismatch < best.0 {
            best = (r.max_mismatch, delta);
        }
    }
    Ok(SinCosRelation::RotatedBy(best.1))
}

/// Classify Y_{1/n}: run the numeric set-level tests and compare the result
/// against the parity rules for n.
pub fn classify_symmetry(n: u32, tols: &Tolerances) -> Result<SymmetryReport, AnalysisError> {
    if n < 2 {
        return Err(AnalysisError::InvalidN(n));
    }
    let l = Rational::new(1, n as i64);
    let cos_spec = HarmonicSpec::new(l, Form::Cos)?;
    let sin_spec = HarmonicSpec::new(l, Form::Sin)?;
    let cos_cloud = sample_cloud(&cos_spec, RESOLUTION, RESOLUTION, tols)?;
    let sin_cloud = sample_cloud(&sin_spec, RESOLUTION, RESOLUTION, tols)?;

    let invariant = |t: Transform| -> Result<bool, AnalysisError> {
        Ok(match_clouds(&cos_cloud, &cos_cloud, t, tols.match_tol)?.matched)
    };

    let xy = invariant(Transform::plain(PointTransform::ThetaReflect))?;
    let xz = invariant(Transform::plain(PointTransform::PhiNegate))?;
    let yz_sym = invariant(Transform::plain(PointTransform::PhiReflectPi))?;
    let yz_anti = invariant(Transform::with_sign_flip(PointTransform::PhiReflectPi))?;
    let overlap = invariant(Transform::with_sign_flip(PointTransform::PhiShift(0.0)))?;
    let relation = relation_of(&cos_cloud, &sin_cloud, tols.match_tol)?;

    let mut mismatches = Vec::new();
    let mut expect = |what: &str, rule: bool, numeric: bool| {
        if rule != numeric {
            mismatches.push(format!(
                "{what}: rule says {rule}, numeric test says {numeric}"
            ));
        }
    };

    expect("xy_plane_symmetric", true, xy);
    expect("xz_plane_symmetric", true, xz);
    expect("pos_neg_overlap", n % 2 == 0, overlap);
    if n % 2 == 1 {
        expect("yz_plane_antisymmetric", true, yz_anti);
    }
    let expected_relation = if n % 2 == 1 {
        SinCosRelation::Rotated90
    } else if n % 4 == 0 {
        SinCosRelation::Identical
    } else {
        SinCosRelation::MirrorFlip
    };
    if relation != expected_relation {
        mismatches.push(format!(
            "sin_vs_cos_relation: rule says {expected_relation:?}, numeric test says {relation:?}"
        ));
    }

    Ok(SymmetryReport {
        n,
        xy_plane_symmetric: xy,
        xz_plane_symmetric: xz,
        yz_plane_symmetric: yz_sym,
        yz_plane_antisymmetric: yz_anti,
        pos_neg_overlap: overlap,
        sin_vs_cos_relation: relation,
        rule_mismatches: mismatches,
    })
}
