//! File formats: the `x,y` curve CSV (strip coordinates, 17 significant
//! digits) and atomic file writes (temp file + rename).

use std::fs;
use std::path::Path;

use crate::curve::{CurveSample, CLOSURE_TOL};
use crate::error::{Error, Result};
use crate::point::StripPoint;

/// Serializes a curve to the `x,y` CSV format.
pub fn curve_to_csv(curve: &CurveSample) -> String {
    let mut out = String::with_capacity(curve.len() * 48 + 8);
    out.push_str("x,y\n");
    for p in curve.points() {
        out.push_str(&format!("{:.16e},{:.16e}\n", p.x, p.y));
    }
    out
}

/// Parses the `x,y` CSV format. Closure and winding are inferred: a final
/// point equal to the first shifted by an integer number of turns (and equal
/// in `y`) marks a closed curve.
pub fn curve_from_csv(text: &str) -> Result<CurveSample> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h.trim() == "x,y" => {}
        other => {
            return Err(Error::Csv(format!(
                "expected header \"x,y\", found {other:?}"
            )))
        }
    }
    let mut pts = Vec::new();
    for (ln, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut cells = line.split(',');
        let x = parse_cell(cells.next(), ln)?;
        let y = parse_cell(cells.next(), ln)?;
        if cells.next().is_some() {
            return Err(Error::Csv(format!("line {}: too many columns", ln + 2)));
        }
        pts.push(StripPoint::new(x, y));
    }
    if pts.len() < 2 {
        return Err(Error::Csv("fewer than two points".into()));
    }
    let first = pts[0];
    let last = pts[pts.len() - 1];
    let turns = (last.x - first.x).round();
    let closed = (last.x - first.x - turns).abs() <= CLOSURE_TOL
        && (last.y - first.y).abs() <= CLOSURE_TOL
        && turns != 0.0;
    if closed {
        CurveSample::new(pts, true, turns as i32)
    } else {
        CurveSample::new(pts, false, 0)
    }
}

fn parse_cell(cell: Option<&str>, ln: usize) -> Result<f64> {
    let cell = cell.ok_or_else(|| Error::Csv(format!("line {}: missing column", ln + 2)))?;
    cell.trim()
        .parse::<f64>()
        .map_err(|e| Error::Csv(format!("line {}: {e}", ln + 2)))
}

/// Writes bytes atomically: to `<path>.tmp`, then rename onto `path`.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = Path::new(&tmp);
    fs::write(tmp, bytes)?;
    fs::rename(tmp, path)?;
    Ok(())
}

/// Writes a curve CSV atomically.
pub fn write_curve_csv(path: &Path, curve: &CurveSample) -> Result<()> {
    write_atomic(path, curve_to_csv(curve).as_bytes())
}

/// Reads a curve CSV from disk.
pub fn read_curve_csv(path: &Path) -> Result<CurveSample> {
    let text = fs::read_to_string(path)?;
    curve_from_csv(&text)
}
