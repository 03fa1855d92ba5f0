//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with the measured numbers (run with `--nocapture` to see them).

use std::f64::consts::PI;
use std::time::Instant;

use fracsh::analysis::{classify_symmetry, continuity_report, SinCosRelation};
use fracsh::decomposition::{
    expand, main_sum, ratio_to, validate_split, RuleId, RuleSet, Scheme,
};
use fracsh::geometry::{build_surface, export_curve_csv, export_obj, export_ply, xy_view};
use fracsh::harmonics::{
    eigen_residual, legendre_ode_residual, normalization_constant, Form, Harmonic, HarmonicSpec,
};
use fracsh::numerics::{gamma, integrate};
use fracsh::{Rational, Tolerances};

fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

#[test]
fn acceptance_1_ode_residual_suite() {
    let tols = Tolerances::default();
    let degrees = [
        rat(1, 2),
        rat(1, 3),
        rat(1, 4),
        rat(1, 5),
        rat(1, 6),
        rat(1, 7),
        rat(1, 8),
        rat(1, 9),
        rat(2, 3),
        rat(3, 4),
        rat(2, 5),
    ];
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for &l in &degrees {
        for i in 0..1000 {
            let theta = 0.01 + (PI - 0.02) * i as f64 / 999.0;
            let r = legendre_ode_residual(l, l, theta, &tols).unwrap();
            worst = worst.max(r.abs());
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(worst < 1e-9, "max ODE residual {worst:.3e} >= 1e-9");
    assert!(elapsed < 1.0, "residual suite took {elapsed:.2} s");
    println!(
        "criterion 1 (ODE residual suite): PASS: max residual {worst:.3e} over {} degrees x 1000 samples in {elapsed:.3} s",
        degrees.len()
    );
}

#[test]
fn acceptance_2_eigen_residual_convergence() {
    let tols = Tolerances::default();
    let spec = HarmonicSpec::new(rat(1, 2), Form::ComplexPlus).unwrap();
    let start = Instant::now();
    let coarse = eigen_residual(&spec, 400, 400, &tols).unwrap();
    let fine = eigen_residual(&spec, 800, 800, &tols).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    let ratio = coarse / fine;
    assert!(coarse < 1e-3, "eigen residual {coarse:.3e} >= 1e-3 on 400x800");
    assert!(ratio >= 3.5, "convergence ratio {ratio:.2} < 3.5");
    assert!(elapsed < 10.0, "eigen residual took {elapsed:.2} s");
    println!(
        "criterion 2 (eigen residual): PASS: 400x800 residual {coarse:.3e}, halving ratio {ratio:.2}, {elapsed:.2} s"
    );
}

#[test]
fn acceptance_3_normalization() {
    let tols = Tolerances::default();
    // analytic oracle for l = 1/2 complex
    let spec = HarmonicSpec::new(rat(1, 2), Form::ComplexPlus).unwrap();
    let n = normalization_constant(&spec, tols.quad_abs_tol).unwrap();
    let oracle = 1.0 / (PI * 2f64.sqrt());
    let defect_half = (n - oracle).abs();
    assert!(
        defect_half < 1e-8,
        "N(1/2) = {n:.12} differs from 1/(pi*sqrt(2)) by {defect_half:.3e}"
    );

    // |Y|^2 integral through the public eval path, plus the gamma-based
    // Wallis identity, for every l = 1/n.
    let mut worst_defect: f64 = 0.0;
    for den in 2..=9i64 {
        let l = rat(1, den);
        let spec = HarmonicSpec::new(l, Form::ComplexPlus).unwrap();
        let harmonic = Harmonic::new(spec, &tols).unwrap();
        // |Y| is phi-independent for complex forms, so the full integral is
        // period * integral over theta.
        let theta_part = integrate(
            |t| harmonic.eval(t, 0.0).unwrap().norm_sqr() * t.sin(),
            0.0,
            PI,
            1e-12,
        )
        .unwrap();
        assert!(theta_part.converged);
        let total = theta_part.value * spec.period();
        worst_defect = worst_defect.max((total - 1.0).abs());

        let lf = l.to_f64();
        let w = PI.sqrt() * gamma(lf + 1.0).unwrap() / gamma(lf + 1.5).unwrap();
        let nv = harmonic.normalization();
        let wallis_defect = (nv * nv * spec.period() * w - 1.0).abs();
        worst_defect = worst_defect.max(wallis_defect);
    }
    assert!(
        worst_defect < 1e-8,
        "worst |Y|^2 normalization defect {worst_defect:.3e} >= 1e-8"
    );
    println!(
        "criterion 3 (normalization): PASS: N(1/2) defect {defect_half:.3e}, worst |Y|^2 defect {worst_defect:.3e} for n=2..9"
    );
}

#[test]
fn acceptance_4_integer_baseline_regression() {
    let tols = Tolerances::default();
    let y00 = Harmonic::new(
        HarmonicSpec::with_order(Rational::ZERO, Rational::ZERO, Form::Cos).unwrap(),
        &tols,
    )
    .unwrap();
    let expected = 1.0 / (4.0 * PI).sqrt();
    let mut worst: f64 = 0.0;
    for (t, p) in [(0.0, 0.0), (0.7, 2.0), (PI / 2.0, 4.4), (2.9, 0.3)] {
        worst = worst.max((y00.eval(t, p).unwrap().re - expected).abs());
    }
    assert!(worst < 1e-12, "Y00 defect {worst:.3e} >= 1e-12");

    let spec = HarmonicSpec::with_order(rat(1, 1), Rational::ZERO, Form::Cos).unwrap();
    let n = normalization_constant(&spec, tols.quad_abs_tol).unwrap();
    let p10 = (3.0 / (4.0 * PI)).sqrt();
    let defect = (n - p10).abs();
    assert!(defect < 1e-10, "l=1,m=0 normalization defect {defect:.3e}");
    println!(
        "criterion 4 (integer baseline): PASS: Y00 defect {worst:.3e}, l=1 m=0 normalization defect {defect:.3e}"
    );
}

#[test]
fn acceptance_5_symmetry_table() {
    let tols = Tolerances::default();
    let mut summary = String::new();
    for n in 2..=9u32 {
        let report = classify_symmetry(n, &tols).unwrap();
        assert!(
            report.rule_mismatches.is_empty(),
            "n = {n}: numeric/rule disagreement {:?}",
            report.rule_mismatches
        );
        let expected_relation = match n {
            2 | 6 => SinCosRelation::MirrorFlip,
            4 | 8 => SinCosRelation::Identical,
            _ => SinCosRelation::Rotated90,
        };
        assert_eq!(
            report.sin_vs_cos_relation, expected_relation,
            "n = {n}: relation"
        );
        assert_eq!(
            report.pos_neg_overlap,
            n % 2 == 0,
            "n = {n}: pos/neg overlap must hold exactly for even n"
        );
        assert!(report.xy_plane_symmetric && report.xz_plane_symmetric);
        summary.push_str(&format!(
            "n={n}:{:?} ",
            report.sin_vs_cos_relation
        ));
    }
    println!("criterion 5 (symmetry table n=2..9): PASS: {summary}zero disagreement flags");
}

#[test]
fn acceptance_6_continuity_and_precession() {
    let tols = Tolerances::default();
    // sin forms of the multi-numerator degrees chain continuously
    for l in [rat(2, 3), rat(3, 4), rat(2, 5)] {
        let r = continuity_report(l, Form::Sin, &tols).unwrap();
        assert!(
            r.seam_chord_gap.abs() <= 1e-10,
            "sin gap for {l} = {:.3e}",
            r.seam_chord_gap
        );
        assert!(r.closure_jump < 1e-10);
    }
    // cos forms of l = 1/n close without precession
    for den in 2..=9i64 {
        let r = continuity_report(rat(1, den), Form::Cos, &tols).unwrap();
        assert!(r.seam_chord_gap.abs() <= 1e-10, "cos gap for 1/{den}");
        assert!(r.closure_jump < 1e-10);
        assert_eq!(r.precession_angle, 0.0);
    }
    // cos forms of 2/3, 3/4, 2/5: pinned precession angles and visible gaps
    let cases = [
        (rat(2, 3), PI),
        (rat(3, 4), 2.0 * PI / 3.0),
        (rat(2, 5), PI),
    ];
    let mut gaps = String::new();
    for (l, delta) in cases {
        let r = continuity_report(l, Form::Cos, &tols).unwrap();
        assert!(
            (r.precession_angle - delta).abs() < 1e-12,
            "delta for {l}: {} vs {delta}",
            r.precession_angle
        );
        let spec = HarmonicSpec::new(l, Form::Cos).unwrap();
        let amplitude = xy_view(&spec, 512, &tols)
            .unwrap()
            .samples
            .iter()
            .map(|s| s.r)
            .fold(0.0f64, f64::max);
        assert!(
            r.seam_chord_gap > 0.1 * amplitude,
            "cos gap for {l}: {:.3e} vs amplitude {amplitude:.3e}",
            r.seam_chord_gap
        );
        assert!(r.closure_jump < 1e-10);
        gaps.push_str(&format!("{l}:gap/amp={:.2} ", r.seam_chord_gap / amplitude));
    }
    println!(
        "criterion 6 (continuity): PASS: {gaps}deltas pi, 2pi/3, pi exact; all closure jumps < 1e-10"
    );
}

#[test]
fn acceptance_7_decomposition_ladder() {
    let half = rat(1, 2);
    let tree = expand(half, 3, Scheme::Canonical).unwrap();

    // step 1: {1/3, 1/3, -1/6}, exactly
    let mut level1: Vec<Rational> = tree.level(1).unwrap().iter().map(|n| n.value).collect();
    level1.sort();
    let mut expected = vec![rat(1, 3), rat(1, 3), rat(-1, 6)];
    expected.sort();
    assert_eq!(level1, expected);
    assert_eq!(tree.level_sum(1).unwrap(), half);

    // step 2/3 main sums and printed ratios
    let m2 = main_sum(&tree, 2).unwrap();
    assert_eq!(m2, rat(9, 35));
    assert_eq!(ratio_to(half, m2).unwrap().to_string(), "51.4%");
    let m3 = main_sum(&tree, 3).unwrap();
    assert_eq!(m3, rat(1, 7));
    assert_eq!(ratio_to(half, m3).unwrap().to_string(), "28.6%");

    // admissibility verdicts with the pinned rule ids
    let rules = RuleSet::default();
    let v = validate_split(half, &[rat(1, 4), rat(1, 4)], &rules).unwrap();
    assert!(!v.valid);
    assert_eq!(v.violations, vec![RuleId::R3]);
    let v = validate_split(half, &[rat(1, 6), rat(1, 6), rat(1, 6)], &rules).unwrap();
    assert!(!v.valid);
    assert_eq!(v.violations, vec![RuleId::R2]);

    println!(
        "criterion 7 (decomposition): PASS: step 1 exact, main sums 9/35 (51.4%) and 1/7 (28.6%), R3/R2 rejections exact"
    );
}

#[test]
fn acceptance_8_export_integrity() {
    let tols = Tolerances::default();
    let spec = HarmonicSpec::new(rat(1, 2), Form::Cos).unwrap();
    let mesh = build_surface(&spec, 8, 8, None, &tols).unwrap();

    // OBJ: counts pinned, every value re-parses
    let mut obj = Vec::new();
    export_obj(&mesh, &mut obj).unwrap();
    let text = String::from_utf8(obj).unwrap();
    let mut vertices = Vec::new();
    let mut faces = 0usize;
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("v ") {
            let xyz: Vec<f64> = rest
                .split_whitespace()
                .map(|t| t.parse().expect("obj coordinate parses"))
                .collect();
            assert_eq!(xyz.len(), 3);
            vertices.push(xyz);
        } else if let Some(rest) = line.strip_prefix("f ") {
            faces += 1;
            for t in rest.split_whitespace() {
                let i: usize = t.parse().expect("obj index parses");
                assert!((1..=mesh.vertices.len()).contains(&i), "index out of range");
            }
        }
    }
    assert_eq!(vertices.len(), 64);
    assert_eq!(faces, 49);
    let max_in = mesh
        .vertices
        .iter()
        .flat_map(|v| v.position)
        .fold(0.0f64, |a, c| a.max(c.abs()));
    let max_obj = vertices
        .iter()
        .flatten()
        .fold(0.0f64, |a, c| a.max(c.abs()));
    assert!((max_in - max_obj).abs() <= 1e-9 * max_in.max(1.0));

    // PLY: binary little-endian round-trip
    let mut ply = Vec::new();
    export_ply(&mesh, &mut ply).unwrap();
    let header_end = ply
        .windows(11)
        .position(|w| w == b"end_header\n")
        .expect("ply header terminator")
        + 11;
    let header = std::str::from_utf8(&ply[..header_end]).unwrap();
    let count_after = |tag: &str| -> usize {
        header
            .lines()
            .find_map(|l| l.strip_prefix(tag))
            .and_then(|s| s.trim().parse().ok())
            .expect("ply element count")
    };
    let n_vertices = count_after("element vertex");
    let n_faces = count_after("element face");
    assert_eq!(n_vertices, mesh.vertices.len());
    assert_eq!(n_faces, mesh.faces.len());
    let body = &ply[header_end..];
    assert_eq!(body.len(), n_vertices * 16 + n_faces * 17);
    let mut max_ply = 0.0f32;
    for i in 0..n_vertices {
        for c in 0..3 {
            let off = i * 16 + c * 4;
            let v = f32::from_le_bytes(body[off..off + 4].try_into().unwrap());
            max_ply = max_ply.max(v.abs());
        }
    }
    assert!(
        (max_ply - max_in as f32).abs() <= f32::EPSILON * 8.0 * max_in as f32,
        "ply max coordinate {max_ply} vs {max_in}"
    );
    for i in 0..n_faces {
        let off = n_vertices * 16 + i * 17;
        assert_eq!(body[off], 4);
        for c in 0..4 {
            let idx =
                i32::from_le_bytes(body[off + 1 + c * 4..off + 5 + c * 4].try_into().unwrap());
            assert!((0..n_vertices as i32).contains(&idx));
        }
    }

    // CSV: curve round-trip
    let curve = xy_view(&spec, 128, &tols).unwrap();
    let mut csv = Vec::new();
    export_curve_csv(&curve, &mut csv).unwrap();
    let text = String::from_utf8(csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("phi,r,sign"));
    let mut parsed = 0usize;
    for (line, sample) in lines.zip(curve.samples.iter()) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 3);
        let phi: f64 = fields[0].parse().unwrap();
        let r: f64 = fields[1].parse().unwrap();
        assert!((phi - sample.phi).abs() <= 1e-9 * sample.phi.max(1.0));
        assert!((r - sample.r).abs() <= 1e-9);
        parsed += 1;
    }
    assert_eq!(parsed, curve.samples.len());

    println!(
        "criterion 8 (export integrity): PASS: OBJ 64 v / 49 f re-parsed, PLY {} B body round-trip, CSV {} rows",
        body.len(),
        parsed
    );
}
