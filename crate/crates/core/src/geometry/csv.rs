//! Curve files: one vertex per line as `x,y,z` or `x,y,z,nx,ny,nz`; a blank
//! line ends a curve and `#` starts a comment.

use std::fmt::Write as _;

use super::{GeometryError, SpaceCurve, Vec3};

pub fn parse_curves(text: &str) -> Result<Vec<SpaceCurve>, GeometryError> {
    let mut curves = Vec::new();
    let mut verts: Vec<Vec3> = Vec::new();
    let mut normals: Vec<Vec3> = Vec::new();
    let mut width = 0;
    let mut start = 1;
    let mut flush = |verts: &mut Vec<Vec3>, normals: &mut Vec<Vec3>, width: usize, line: usize| {
        if verts.is_empty() {
            return Ok(());
        }
        let ns = (width == 6).then(|| std::mem::take(normals));
        let c = SpaceCurve::new(std::mem::take(verts), ns).map_err(|e| GeometryError::Csv {
            line,
            message: e.to_string(),
        })?;
        curves.push(c);
        Ok(())
    };
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            if raw.trim().is_empty() {
                flush(&mut verts, &mut normals, width, start)?;
            }
            continue;
        }
        if verts.is_empty() {
            start = i + 1;
        }
        let nums = line
            .split(',')
            .map(|f| f.trim().parse::<f64>())
            .collect::<Result<Vec<f64>, _>>()
            .map_err(|e| GeometryError::Csv {
                line: i + 1,
                message: e.to_string(),
            })?;
        if nums.len() != 3 && nums.len() != 6 {
            return Err(GeometryError::Csv {
                line: i + 1,
                message: format!("expected 3 or 6 fields, found {}", nums.len()),
            });
        }
        if !verts.is_empty() && nums.len() != width {
            return Err(GeometryError::Csv {
                line: i + 1,
                message: "mixed rows with and without normals".into(),
            });
        }
        width = nums.len();
        verts.push(Vec3::new(nums[0], nums[1], nums[2]));
        if width == 6 {
            normals.push(Vec3::new(nums[3], nums[4], nums[5]));
        }
    }
    flush(&mut verts, &mut normals, width, start)?;
    Ok(curves)
}

pub fn write_curves(curves: &[SpaceCurve]) -> String {
    let mut s = String::new();
    for (k, c) in curves.iter().enumerate() {
        if k > 0 {
            s.push('\n');
        }
        for (i, v) in c.vertices().iter().enumerate() {
            let _ = write!(s, "{},{},{}", v.x, v.y, v.z);
            if let Some(n) = c.normals() {
                let _ = write!(s, ",{},{},{}", n[i].x, n[i].y, n[i].z);
            }
            s.push('\n');
        }
    }
    s
}
