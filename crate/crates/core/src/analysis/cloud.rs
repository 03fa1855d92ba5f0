//! Signed point-sample clouds and set-level transform matching.
//!
//! A cloud samples a harmonic over its full extended period and folds the
//! azimuth into spatial angle φ mod 2π. Graph symmetries in this domain are
//! claims about these point sets across all sheets, not pointwise function
//! identities, so invariance is tested by multiset comparison per spatial
//! grid cell.

use std::f64::consts::PI;

use crate::harmonics::{Harmonic, HarmonicSpec};
use crate::numerics::Tolerances;

use super::AnalysisError;

/// One cloud sample. `sign` is −1/0/+1, zero when |value| falls below
/// `match_tol · max_r`.
#[derive(Debug, Clone, Copy)]
pub struct CloudPoint {
    pub theta: f64,
    pub phi_spatial: f64,
    pub r: f64,
    pub sign: i8,
}

/// Samples of one harmonic on a θ × φ grid, with a per-cell index of signed
/// values used for fast set-level matching.
#[derive(Debug, Clone)]
pub struct SampleCloud {
    spec: HarmonicSpec,
    n_theta: usize,
    n_phi_per_2pi: usize,
    sheets: usize,
    max_r: f64,
    match_tol: f64,
    points: Vec<CloudPoint>,
    /// Signed values grouped by (θ row, spatial φ column), each group sorted.
    cells: Vec<f64>,
}

/// Coordinate part of a cloud transform. All of these map the sampling
/// lattice onto itself (φ shifts must be lattice-aligned).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PointTransform {
    /// θ → π − θ (reflection through the X-Y plane).
    ThetaReflect,
    /// φ → −φ (reflection through the X-Z plane).
    PhiNegate,
    /// φ → π − φ (reflection through the Y-Z plane).
    PhiReflectPi,
    /// φ → φ + δ (rotation about the z axis).
    PhiShift(f64),
}

/// A coordinate transform optionally composed with a sign flip.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transform {
    pub point: PointTransform,
    pub flip_sign: bool,
}

impl Transform {
    pub fn plain(point: PointTransform) -> Self {
        Transform {
            point,
            flip_sign: false,
        }
    }

    pub fn with_sign_flip(point: PointTransform) -> Self {
        Transform {
            point,
            flip_sign: true,
        }
    }
}

/// Outcome of a set-level match; `max_mismatch` is relative to the largest
/// radius of the participating clouds.
#[derive(Debug, Clone, Copy)]
pub struct MatchReport {
    pub matched: bool,
    pub max_mismatch: f64,
}

/// Sample `spec` over θ ∈ [0, π] (nθ rows, poles included) and the full
/// extended period (nφ columns per 2π sheet). Deterministic row-major order.
pub fn sample_cloud(
    spec: &HarmonicSpec,
    n_theta: usize,
    n_phi_per_2pi: usize,
    tols: &Tolerances,
) -> Result<SampleCloud, AnalysisError> {
    if n_theta < 16 {
        return Err(AnalysisError::ResolutionTooCoarse(n_theta));
    }
    if n_phi_per_2pi < 16 {
        return Err(AnalysisError::ResolutionTooCoarse(n_phi_per_2pi));
    }
    let harmonic = Harmonic::new(*spec, tols)?;
    let sheets = spec.sheets();
    let k = n_phi_per_2pi;
    let n_phi_total = k * sheets;
    let dphi = 2.0 * PI / k as f64;

    let mut values = vec![0.0f64; n_theta * n_phi_total];
    let mut max_r: f64 = 0.0;
    for i in 0..n_theta {
        let theta = PI * i as f64 / (n_theta - 1) as f64;
        for j in 0..n_phi_total {
            let phi = j as f64 * dphi;
            let v = harmonic.signed_real(theta, phi)?;
            max_r = max_r.max(v.abs());
            values[i * n_phi_total + j] = v;
        }
    }
    if max_r == 0.0 {
        return Err(AnalysisError::EmptyCloud);
    }

    let zero_band = tols.match_tol * max_r;
    let mut points = Vec::with_capacity(n_theta * n_phi_total);
    for i in 0..n_theta {
        let theta = PI * i as f64 / (n_theta - 1) as f64;
        for j in 0..n_phi_total {
            let v = values[i * n_phi_total + j];
            let sign = if v.abs() < zero_band {
                0
            } else if v > 0.0 {
                1
            } else {
                -1
            };
            points.push(CloudPoint {
                theta,
                phi_spatial: (j % k) as f64 * dphi,
                r: v.abs(),
                sign,
            });
        }
    }

    // Regroup by (row, spatial column): the `sheets` values that share one
    // spatial cell, sorted for multiset comparison.
    let mut cells = vec![0.0f64; n_theta * n_phi_total];
    for i in 0..n_theta {
        for js in 0..k {
            let base = (i * k + js) * sheets;
            for sheet in 0..sheets {
                cells[base + sheet] = values[i * n_phi_total + sheet * k + js];
            }
            cells[base..base + sheets].sort_by(f64::total_cmp);
        }
    }

    Ok(SampleCloud {
        spec: *spec,
        n_theta,
        n_phi_per_2pi: k,
        sheets,
        max_r,
        match_tol: tols.match_tol,
        points,
        cells,
    })
}

impl SampleCloud {
    pub fn spec(&self) -> &HarmonicSpec {
        &self.spec
    }

    pub fn points(&self) -> &[CloudPoint] {
        &self.points
    }

    pub fn max_r(&self) -> f64 {
        self.max_r
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn n_phi_per_2pi(&self) -> usize {
        self.n_phi_per_2pi
    }

    fn cell(&self, row: usize, col: usize) -> &[f64] {
        let base = (row * self.n_phi_per_2pi + col) * self.sheets;
        &self.cells[base..base + self.sheets]
    }

    /// Map (row, column) indices under a lattice-aligned transform.
    fn map_indices(
        &self,
        t: PointTransform,
        row: usize,
        col: usize,
    ) -> Result<(usize, usize), AnalysisError> {
        let k = self.n_phi_per_2pi;
        let out = match t {
            PointTransform::ThetaReflect => (self.n_theta - 1 - row, col),
            PointTransform::PhiNegate => (row, (k - col) % k),
            PointTransform::PhiReflectPi => {
                if k % 2 != 0 {
                    return Err(AnalysisError::UnalignedTransform(
                        "phi -> pi - phi needs an even azimuthal resolution".into(),
                    ));
                }
                (row, (k / 2 + k - col) % k)
            }
            PointTransform::PhiShift(delta) => {
                let step = 2.0 * PI / k as f64;
                let steps = (delta / step).round();
                if (delta - steps * step).abs() > 1e-9 {
                    return Err(AnalysisError::UnalignedTransform(format!(
                        "phi shift {delta} is not a multiple of the grid step {step}"
                    )));
                }
                let steps = (steps as i64).rem_euclid(k as i64) as usize;
                (row, (col + steps) % k)
            }
        };
        Ok(out)
    }
}

/// Does `t` map cloud `a` onto cloud `b` as a point set? Every transformed
/// cell of `a` is compared as a sorted multiset against the target cell of
/// `b`; the report carries the worst relative value mismatch.
pub fn match_clouds(
    a: &SampleCloud,
    b: &SampleCloud,
    t: Transform,
    match_tol: f64,
) -> Result<MatchReport, AnalysisError> {
    if a.n_theta != b.n_theta || a.n_phi_per_2pi != b.n_phi_per_2pi || a.sheets != b.sheets {
        return Err(AnalysisError::IncompatibleClouds);
    }
    let scale = a.max_r.max(b.max_r);
    let mut worst: f64 = 0.0;
    let mut buf = vec![0.0f64; a.sheets];
    for row in 0..a.n_theta {
        for col in 0..a.n_phi_per_2pi {
            let (tr, tc) = a.map_indices(t.point, row, col)?;
            let src = a.cell(row, col);
            let dst = b.cell(tr, tc);
            if t.flip_sign {
                // negation reverses sorted order
                for (slot, v) in buf.iter_mut().zip(src.iter().rev()) {
                    *slot = -v;
                }
            } else {
                buf.copy_from_slice(src);
            }
            for (x, y) in buf.iter().zip(dst.iter()) {
                worst = worst.max((x - y).abs());
            }
        }
    }
    let max_mismatch = worst / scale;
    Ok(MatchReport {
        matched: max_mismatch <= match_tol,
        max_mismatch,
    })
}

/// Is the cloud invariant under `t`? Set-level comparison of the cloud with
/// its own image.
pub fn test_transform_invariance(
    cloud: &SampleCloud,
    t: Transform,
) -> Result<MatchReport, AnalysisError> {
    match_clouds(cloud, cloud, t, cloud.match_tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonics::Form;
    use crate::rational::Rational;

    fn cloud(p: i64, q: i64, form: Form, res: usize) -> SampleCloud {
        let tols = Tolerances::default();
        let spec = HarmonicSpec::new(Rational::new(p, q), form).unwrap();
        sample_cloud(&spec, res, res, &tols).unwrap()
    }

    #[test]
    fn point_count_and_poles() {
        let c = cloud(1, 2, Form::Cos, 64);
        // period 4π: two sheets of 64 columns each
        assert_eq!(c.points().len(), 64 * 128);
        assert!(c.max_r() > 0.0);
        // θ = 0 row has r = 0
        assert!(c.points()[..128].iter().all(|p| p.r == 0.0 && p.sign == 0));
    }

    #[test]
    fn resolution_bounds() {
        let tols = Tolerances::default();
        let spec = HarmonicSpec::new(Rational::new(1, 3), Form::Cos).unwrap();
        assert!(matches!(
            sample_cloud(&spec, 8, 64, &tols),
            Err(AnalysisError::ResolutionTooCoarse(8))
        ));
        assert!(sample_cloud(&spec, 64, 8, &tols).is_err());
    }

    #[test]
    fn theta_reflection_always_holds() {
        for form in [Form::Cos, Form::Sin] {
            let c = cloud(1, 3, form, 32);
            let r = test_transform_invariance(&c, Transform::plain(PointTransform::ThetaReflect))
                .unwrap();
            assert!(r.matched, "mismatch {:.3e}", r.max_mismatch);
        }
    }

    #[test]
    fn xz_mirror_holds_for_cos_forms() {
        let c = cloud(1, 2, Form::Cos, 64);
        let r = test_transform_invariance(&c, Transform::plain(PointTransform::PhiNegate)).unwrap();
        assert!(r.matched);
    }

    #[test]
    fn yz_antisymmetry_for_odd_n() {
        // odd n: anti-symmetric about the Y-Z mirror
        let c = cloud(1, 3, Form::Cos, 64);
        let anti =
            test_transform_invariance(&c, Transform::with_sign_flip(PointTransform::PhiReflectPi))
                .unwrap();
        assert!(anti.matched, "mismatch {:.3e}", anti.max_mismatch);
        let plain =
            test_transform_invariance(&c, Transform::plain(PointTransform::PhiReflectPi)).unwrap();
        assert!(!plain.matched);
    }

    #[test]
    fn overlap_separates_even_and_odd() {
        let even = cloud(1, 2, Form::Cos, 64);
        let r = test_transform_invariance(
            &even,
            Transform::with_sign_flip(PointTransform::PhiShift(0.0)),
        )
        .unwrap();
        assert!(r.matched);
        let odd = cloud(1, 3, Form::Cos, 64);
        let r = test_transform_invariance(
            &odd,
            Transform::with_sign_flip(PointTransform::PhiShift(0.0)),
        )
        .unwrap();
        assert!(!r.matched);
    }

    #[test]
    fn unaligned_shift_rejected() {
        let c = cloud(1, 2, Form::Cos, 32);
        let r = test_transform_invariance(
            &c,
            Transform::plain(PointTransform::PhiShift(0.1234567)),
        );
        assert!(matches!(r, Err(AnalysisError::UnalignedTransform(_))));
    }
}
