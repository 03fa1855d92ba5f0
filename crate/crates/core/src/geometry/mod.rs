//! Surface meshes r(θ,φ) = |Y| and X-Y plane curves.
//!
//! The spatial embedding always uses φ mod 2π; the extended period only
//! controls how many times the surface wraps around the z axis, which is
//! what produces the overlapping spiral sheets. |Y| (not Y²) is the radius,
//! and the sign travels as a vertex attribute because for even n the
//! positive and negative regions occupy the same locations.

mod export;

pub use export::{
    export_cloud_csv, export_curve_csv, export_mesh_csv, export_obj, export_ply, fmt_g,
};

use std::f64::consts::{FRAC_PI_2, PI};

use crate::harmonics::{Harmonic, HarmonicError, HarmonicSpec};
use crate::numerics::Tolerances;

#[derive(Debug, Clone, thiserror::Error)]
pub enum GeometryError {
    #[error("resolution too coarse: {0}")]
    ResolutionTooCoarse(usize),
    #[error("invalid phi range [{lo}, {hi}]: must be an increasing sub-interval of [0, period]")]
    InvalidRange { lo: f64, hi: f64 },
    #[error("nothing to export: empty {0}")]
    Empty(&'static str),
    #[error("write failed: {0}")]
    Io(String),
    #[error(transparent)]
    Harmonic(#[from] HarmonicError),
}

/// One mesh vertex: embedded position plus the signed harmonic value it was
/// built from.
#[derive(Debug, Clone, Copy)]
pub struct Vertex {
    pub position: [f64; 3],
    pub theta: f64,
    pub phi: f64,
    /// Signed Y value; the radius is its absolute value.
    pub value: f64,
}

impl Vertex {
    pub fn sign(&self) -> i8 {
        if self.value < 0.0 {
            -1
        } else {
            1
        }
    }
}

/// Quad mesh over a θ × φ patch. Vertices are row-major (θ rows), faces are
/// 0-based quads; exporters re-base as needed.
#[derive(Debug, Clone)]
pub struct SurfaceMesh {
    pub spec: HarmonicSpec,
    pub vertices: Vec<Vertex>,
    pub faces: Vec<[u32; 4]>,
    pub n_theta: usize,
    pub n_phi: usize,
    pub phi_range: (f64, f64),
}

/// Build the surface r = |Y| over θ ∈ [0, π] and φ in `phi_range` (defaults
/// to the full extended period). Both grid directions include their
/// endpoints, so a full-period mesh duplicates the φ = 0 column at
/// φ = period and is watertight along the closure seam. Vertex count is
/// exactly nθ·nφ with (nθ−1)(nφ−1) quads.
pub fn build_surface(
    spec: &HarmonicSpec,
    n_theta: usize,
    n_phi: usize,
    phi_range: Option<(f64, f64)>,
    tols: &Tolerances,
) -> Result<SurfaceMesh, GeometryError> {
    if n_theta < 8 {
        return Err(GeometryError::ResolutionTooCoarse(n_theta));
    }
    if n_phi < 8 {
        return Err(GeometryError::ResolutionTooCoarse(n_phi));
    }
    let period = spec.period();
    let (lo, hi) = phi_range.unwrap_or((0.0, period));
    if !lo.is_finite() || !hi.is_finite() || lo < 0.0 || hi > period + 1e-9 || lo >= hi {
        return Err(GeometryError::InvalidRange { lo, hi });
    }
    let harmonic = Harmonic::new(*spec, tols)?;

    let mut vertices = Vec::with_capacity(n_theta * n_phi);
    for i in 0..n_theta {
        let theta = PI * i as f64 / (n_theta - 1) as f64;
        let (st, ct) = (theta.sin(), theta.cos());
        for j in 0..n_phi {
            let phi = lo + (hi - lo) * j as f64 / (n_phi - 1) as f64;
            let value = harmonic.signed_real(theta, phi.min(period))?;
            let r = value.abs();
            let spatial = phi.rem_euclid(2.0 * PI);
            vertices.push(Vertex {
                position: [r * st * spatial.cos(), r * st * spatial.sin(), r * ct],
                theta,
                phi,
                value,
            });
        }
    }

    let mut faces = Vec::with_capacity((n_theta - 1) * (n_phi - 1));
    for i in 0..n_theta - 1 {
        for j in 0..n_phi - 1 {
            let a = (i * n_phi + j) as u32;
            let b = ((i + 1) * n_phi + j) as u32;
            faces.push([a, b, b + 1, a + 1]);
        }
    }

    Ok(SurfaceMesh {
        spec: *spec,
        vertices,
        faces,
        n_theta,
        n_phi,
        phi_range: (lo, hi),
    })
}

/// One sample of the equatorial curve.
#[derive(Debug, Clone, Copy)]
pub struct CurveSample {
    pub phi: f64,
    pub r: f64,
    pub sign: i8,
}

/// The view in the X-Y plane: r(φ) = |Y(π/2, φ)| over the full period.
#[derive(Debug, Clone)]
pub struct PlanarCurve {
    pub spec: HarmonicSpec,
    pub samples: Vec<CurveSample>,
}

/// Trace the equatorial curve with `n_phi` samples over [0, period).
/// For l = p/q cos forms this is the rose-type curve |N' cos(lφ)| traced
/// over q spatial turns.
pub fn xy_view(
    spec: &HarmonicSpec,
    n_phi: usize,
    tols: &Tolerances,
) -> Result<PlanarCurve, GeometryError> {
    if n_phi < 64 {
        return Err(GeometryError::ResolutionTooCoarse(n_phi));
    }
    let harmonic = Harmonic::new(*spec, tols)?;
    let period = spec.period();
    let mut samples = Vec::with_capacity(n_phi);
    for j in 0..n_phi {
        let phi = period * j as f64 / n_phi as f64;
        let v = harmonic.signed_real(FRAC_PI_2, phi)?;
        samples.push(CurveSample {
            phi,
            r: v.abs(),
            sign: if v == 0.0 {
                0
            } else if v > 0.0 {
                1
            } else {
                -1
            },
        });
    }
    Ok(PlanarCurve {
        spec: *spec,
        samples,
    })
}
