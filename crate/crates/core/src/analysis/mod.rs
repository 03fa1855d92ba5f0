//! Plot-symmetry classification, seam continuity and the three spin classes.

mod cloud;
mod continuity;
mod symmetry;

pub use cloud::{
    match_clouds, sample_cloud, test_transform_invariance, CloudPoint, MatchReport,
    PointTransform, SampleCloud, Transform,
};
pub use continuity::{continuity_report, ContinuityReport};
pub use symmetry::{classify_symmetry, SinCosRelation, SymmetryReport};

use serde::Serialize;

use crate::harmonics::HarmonicError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AnalysisError {
    #[error("resolution too coarse: {0} (need at least 16 per axis)")]
    ResolutionTooCoarse(usize),
    #[error("cloud has no nonzero samples")]
    EmptyCloud,
    #[error("clouds have different grids and cannot be compared")]
    IncompatibleClouds,
    #[error("transform not aligned with the sampling lattice: {0}")]
    UnalignedTransform(String),
    #[error("n must be at least 2, got {0}")]
    InvalidN(u32),
    #[error("continuity analysis requires a real form (cos or sin)")]
    ComplexForm,
    #[error(transparent)]
    Harmonic(#[from] HarmonicError),
}

/// The three spin classes, keyed by the denominator n of s = 1/n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClassId {
    I,
    II,
    III,
}

impl std::fmt::Display for ClassId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassId::I => f.write_str("I"),
            ClassId::II => f.write_str("II"),
            ClassId::III => f.write_str("III"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ParticleClass {
    pub class_id: ClassId,
    pub spins_covered: String,
}

/// Class assignment for spin s = 1/n:
/// n ≡ 2 (mod 4) → I (electron-like: parallel spins repel),
/// n odd → II (no repulsion either way),
/// n ≡ 0 (mod 4) → III (always repel).
pub fn particle_class(n: u32) -> Result<ParticleClass, AnalysisError> {
    if n < 2 {
        return Err(AnalysisError::InvalidN(n));
    }
    let (class_id, spins_covered) = if n % 2 == 1 {
        (ClassId::II, "s = 1/3, 1/5, 1/7, ... (n odd)")
    } else if n % 4 == 2 {
        (ClassId::I, "s = 1/2, 1/6, 1/10, ... (n = 2 mod 4)")
    } else {
        (ClassId::III, "s = 1/4, 1/8, 1/12, ... (n = 0 mod 4)")
    };
    Ok(ParticleClass {
        class_id,
        spins_covered: spins_covered.to_string(),
    })
}
