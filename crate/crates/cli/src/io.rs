use std::fs;
use std::path::Path;

use projdim_core::projective::{Coords, PointCloud};
use projdim_core::SystemSpec;

use crate::error::{CliError, CliResult};

pub fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_text(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_system(path: &Path) -> CliResult<SystemSpec> {
    Ok(SystemSpec::from_json(&read_text(path)?)?)
}

/// Column names; the first one also identifies the coordinate system.
pub fn header(coords: Coords) -> &'static [&'static str] {
    match coords {
        Coords::PlaneP => &["plane_p_x", "plane_p_y"],
        Coords::SimplexS => &["simplex_s_1", "simplex_s_2", "simplex_s_3"],
    }
}

pub fn write_cloud(path: &Path, cloud: &PointCloud) -> CliResult<()> {
    let werr = |e: csv::Error| CliError::Write {
        path: path.to_path_buf(),
        source: e.into(),
    };
    let mut w = csv::Writer::from_path(path).map_err(werr)?;
    w.write_record(header(cloud.coords)).map_err(werr)?;
    for p in cloud.iter() {
        w.write_record(p.iter().map(|x| format!("{x:e}")))
            .map_err(werr)?;
    }
    w.flush().map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_cloud(path: &Path) -> CliResult<PointCloud> {
    let bad = |reason: String| CliError::Cloud {
        path: path.to_path_buf(),
        reason,
    };
    let mut r = csv::Reader::from_path(path).map_err(|e| bad(e.to_string()))?;
    let head: Vec<String> = r
        .headers()
        .map_err(|e| bad(e.to_string()))?
        .iter()
        .map(str::to_string)
        .collect();
    let coords = [Coords::PlaneP, Coords::SimplexS]
        .into_iter()
        .find(|&c| {
            header(c)
                .iter()
                .copied()
                .eq(head.iter().map(String::as_str))
        })
        .ok_or_else(|| bad(format!("unrecognized header {head:?}")))?;
    let mut pts = Vec::new();
    for (line, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| bad(e.to_string()))?;
        let p = rec
            .iter()
            .map(|f| f.trim().parse::<f64>().ok().filter(|x| x.is_finite()))
            .collect::<Option<Vec<f64>>>()
            .ok_or_else(|| bad(format!("row {} is not numeric", line + 2)))?;
        pts.push(p);
    }
    Ok(PointCloud::from_points(coords, &pts)?)
}

/// Rasterized scatter: each occupied pixel of a `size × size` grid becomes
/// one square. Simplex points are drawn in an equilateral triangle.
pub fn render_svg(cloud: &PointCloud, size: usize) -> String {
    let planar: Vec<(f64, f64)> = cloud
        .iter()
        .map(|p| match cloud.coords {
            Coords::SimplexS => (p[1] + 0.5 * p[2], p[2] * 3f64.sqrt() / 2.0),
            Coords::PlaneP => (p[0], p[1]),
        })
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
    );
    for &(x, y) in &planar {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
    let cell =
        |v: f64, lo: f64| (((v - lo) / span * (size as f64 - 1.0)).round() as usize).min(size - 1);
    let mut grid = vec![false; size * size];
    for &(x, y) in &planar {
        let (i, j) = (cell(x, x0), size - 1 - cell(y, y0));
        grid[j * size + i] = true;
    }
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n\
         <rect width=\"{size}\" height=\"{size}\" fill=\"white\"/>\n<g fill=\"black\">\n"
    );
    for (k, _) in grid.iter().enumerate().filter(|(_, &on)| on) {
        out.push_str(&format!(
            "<rect x=\"{}\" y=\"{}\" width=\"1\" height=\"1\"/>\n",
            k % size,
            k / size
        ));
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cloud_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        let cloud =
            PointCloud::from_points(Coords::PlaneP, &[vec![0.25, 1.5], vec![1e-7, 3.0]]).unwrap();
        write_cloud(&path, &cloud).unwrap();
        assert_eq!(read_cloud(&path).unwrap(), cloud);
        let text = read_text(&path).unwrap();
        assert!(text.starts_with("plane_p_x,plane_p_y\n"));
    }

    #[test]
    fn rejects_unknown_header_and_text() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        write_text(&path, "x,y\n1,2\n").unwrap();
        assert!(read_cloud(&path).is_err());
        write_text(&path, "plane_p_x,plane_p_y\n1,two\n").unwrap();
        assert!(read_cloud(&path).is_err());
    }

    #[test]
    fn svg_has_one_square_per_pixel() {
        let cloud = PointCloud::from_points(
            Coords::PlaneP,
            &[vec![0.0, 0.0], vec![1.0, 1.0], vec![1.0, 1.0]],
        )
        .unwrap();
        let svg = render_svg(&cloud, 8);
        assert_eq!(svg.matches("width=\"1\"").count(), 2);
    }
}
