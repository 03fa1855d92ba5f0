//! Mesh and curve writers: ASCII OBJ, binary little-endian PLY, CSV.

use std::io::{self, Write};

use crate::analysis::SampleCloud;

use super::{GeometryError, PlanarCurve, SurfaceMesh};

/// C's `%.*g` formatting: `sig` significant digits, fixed or scientific
/// depending on magnitude, trailing zeros trimmed. Keeps every exporter
/// byte-deterministic.
pub fn fmt_g(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", sig.saturating_sub(1), x);
    let (mant, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if exp < -4 || exp >= sig as i32 {
        let mant = mant.trim_end_matches('0').trim_end_matches('.');
        format!("{mant}e{exp:+03}")
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        let fixed = format!("{:.*}", decimals, x);
        if fixed.contains('.') {
            fixed
                .trim_end_matches('0')
                .trim_end_matches('.')
                .to_string()
        } else {
            fixed
        }
    }
}

/// ASCII OBJ: `v x y z` lines, then quads as 1-based `f` lines split into
/// `g positive` / `g negative` groups by the dominant vertex sign.
pub fn export_obj<W: Write>(mesh: &SurfaceMesh, w: &mut W) -> Result<(), GeometryError> {
    if mesh.vertices.is_empty() || mesh.faces.is_empty() {
        return Err(GeometryError::Empty("mesh"));
    }
    let mut out = io::BufWriter::new(w);
    for v in &mesh.vertices {
        writeln!(
            out,
            "v {} {} {}",
            fmt_g(v.position[0], 12),
            fmt_g(v.position[1], 12),
            fmt_g(v.position[2], 12)
        )
        .map_err(io_err)?;
    }
    let face_sign = |f: &[u32; 4]| -> f64 {
        f.iter().map(|&i| mesh.vertices[i as usize].value).sum()
    };
    let positive: Vec<&[u32; 4]> = mesh.faces.iter().filter(|f| face_sign(f) >= 0.0).collect();
    let negative: Vec<&[u32; 4]> = mesh.faces.iter().filter(|f| face_sign(f) < 0.0).collect();
    for (name, faces) in [("positive", positive), ("negative", negative)] {
        if faces.is_empty() {
            continue;
        }
        writeln!(out, "g {name}").map_err(io_err)?;
        for f in faces {
            writeln!(
                out,
                "f {} {} {} {}",
                f[0] + 1,
                f[1] + 1,
                f[2] + 1,
                f[3] + 1
            )
            .map_err(io_err)?;
        }
    }
    out.flush().map_err(io_err)
}

/// Binary little-endian PLY with float32 coordinates and a per-vertex
/// float32 `quality` carrying the signed value.
pub fn export_ply<W: Write>(mesh: &SurfaceMesh, w: &mut W) -> Result<(), GeometryError> {
    if mesh.vertices.is_empty() || mesh.faces.is_empty() {
        return Err(GeometryError::Empty("mesh"));
    }
    let mut out = io::BufWriter::new(w);
    write!(
        out,
        "ply\nformat binary_little_endian 1.0\nelement vertex {}\nproperty float x\nproperty float y\nproperty float z\nproperty float quality\nelement face {}\nproperty list uchar int vertex_indices\nend_header\n",
        mesh.vertices.len(),
        mesh.faces.len()
    )
    .map_err(io_err)?;
    for v in &mesh.vertices {
        for c in v.position {
            out.write_all(&(c as f32).to_le_bytes()).map_err(io_err)?;
        }
        out.write_all(&(v.value as f32).to_le_bytes())
            .map_err(io_err)?;
    }
    for f in &mesh.faces {
        out.write_all(&[4u8]).map_err(io_err)?;
        for &i in f {
            out.write_all(&(i as i32).to_le_bytes()).map_err(io_err)?;
        }
    }
    out.flush().map_err(io_err)
}

/// CSV of an equatorial curve: header `phi,r,sign`.
pub fn export_curve_csv<W: Write>(curve: &PlanarCurve, w: &mut W) -> Result<(), GeometryError> {
    if curve.samples.is_empty() {
        return Err(GeometryError::Empty("curve"));
    }
    let mut out = io::BufWriter::new(w);
    writeln!(out, "phi,r,sign").map_err(io_err)?;
    for s in &curve.samples {
        writeln!(out, "{},{},{}", fmt_g(s.phi, 12), fmt_g(s.r, 12), s.sign).map_err(io_err)?;
    }
    out.flush().map_err(io_err)
}

/// CSV of a sample cloud: header `theta,phi,value` with the signed value.
pub fn export_cloud_csv<W: Write>(cloud: &SampleCloud, w: &mut W) -> Result<(), GeometryError> {
    if cloud.points().is_empty() {
        return Err(GeometryError::Empty("cloud"));
    }
    let mut out = io::BufWriter::new(w);
    writeln!(out, "theta,phi,value").map_err(io_err)?;
    for p in cloud.points() {
        let value = if p.sign < 0 { -p.r } else { p.r };
        writeln!(
            out,
            "{},{},{}",
            fmt_g(p.theta, 12),
            fmt_g(p.phi_spatial, 12),
            fmt_g(value, 12)
        )
        .map_err(io_err)?;
    }
    out.flush().map_err(io_err)
}

/// CSV of mesh vertices: header `theta,phi,value` with the signed value.
pub fn export_mesh_csv<W: Write>(mesh: &SurfaceMesh, w: &mut W) -> Result<(), GeometryError> {
    if mesh.vertices.is_empty() {
        return Err(GeometryError::Empty("mesh"));
    }
    let mut out = io::BufWriter::new(w);
    writeln!(out, "theta,phi,value").map_err(io_err)?;
    for v in &mesh.vertices {
        writeln!(
            out,
            "{},{},{}",
            fmt_g(v.theta, 12),
            fmt_g(v.phi, 12),
            fmt_g(v.value, 12)
        )
        .map_err(io_err)?;
    }
    out.flush().map_err(io_err)
}

fn io_err(e: io::Error) -> GeometryError {
    GeometryError::Io(e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::build_surface;
    use crate::harmonics::{Form, HarmonicSpec};
    use crate::numerics::Tolerances;
    use crate::rational::Rational;

    #[test]
    fn g_format_matches_c_conventions() {
        assert_eq!(fmt_g(0.0, 12), "0");
        assert_eq!(fmt_g(1.5, 12), "1.5");
        assert_eq!(fmt_g(-0.25, 12), "-0.25");
        assert_eq!(fmt_g(100.0, 12), "100");
        assert_eq!(fmt_g(1e-13, 12), "1e-13");
        assert_eq!(fmt_g(1.23e15, 12), "1.23e+15");
        assert_eq!(fmt_g(std::f64::consts::PI, 12), "3.14159265359");
    }

    #[test]
    fn obj_counts_for_single_patch() {
        let spec = HarmonicSpec::new(Rational::new(1, 2), Form::Cos).unwrap();
        let mesh = build_surface(&spec, 8, 8, None, &Tolerances::default()).unwrap();
        let mut buf = Vec::new();
        export_obj(&mesh, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let v_lines = text.lines().filter(|l| l.starts_with("v ")).count();
        let f_lines = text.lines().filter(|l| l.starts_with("f ")).count();
        assert_eq!(v_lines, 64);
        assert_eq!(f_lines, 49);
        // 1-based indices within range
        for line in text.lines().filter(|l| l.starts_with("f ")) {
            for idx in line[2..].split_whitespace() {
                let i: usize = idx.parse().unwrap();
                assert!((1..=64).contains(&i));
            }
        }
    }

    #[test]
    fn empty_curve_is_an_error() {
        let spec = HarmonicSpec::new(Rational::new(1, 2), Form::Cos).unwrap();
        let curve = PlanarCurve {
            spec,
            samples: Vec::new(),
        };
        let mut buf = Vec::new();
        assert!(matches!(
            export_curve_csv(&curve, &mut buf),
            Err(GeometryError::Empty("curve"))
        ));
        assert!(buf.is_empty());
    }

    #[test]
    fn cloud_csv_schema() {
        use crate::analysis::sample_cloud;
        let spec = HarmonicSpec::new(Rational::new(1, 3), Form::Sin).unwrap();
        let cloud = sample_cloud(&spec, 16, 16, &Tolerances::default()).unwrap();
        let mut buf = Vec::new();
        export_cloud_csv(&cloud, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("theta,phi,value"));
        assert_eq!(lines.count(), 16 * 16 * 3); // three sheets for q = 3
    }

    #[test]
    fn ply_header_and_size() {
        let spec = HarmonicSpec::new(Rational::new(1, 2), Form::Cos).unwrap();
        let mesh = build_surface(&spec, 8, 8, None, &Tolerances::default()).unwrap();
        let mut buf = Vec::new();
        export_ply(&mesh, &mut buf).unwrap();
        let header_end = buf
            .windows(11)
            .position(|w| w == b"end_header\n")
            .expect("header terminator")
            + 11;
        let header = std::str::from_utf8(&buf[..header_end]).unwrap();
        assert!(header.contains("element vertex 64"));
        assert!(header.contains("element face 49"));
        assert!(header.contains("property float quality"));
        assert_eq!(buf.len() - header_end, 64 * 16 + 49 * 17);
    }
}
