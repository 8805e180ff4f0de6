use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use petal_core::Complex64;
use serde::{Deserialize, Serialize};

/// `phi,x,y` rows with 17 significant digits and LF line endings.
pub fn trace_csv(samples: &[(f64, Complex64)]) -> String {
    let mut s = String::with_capacity(64 * samples.len() + 16);
    s.push_str("phi,x,y\n");
    for (phi, z) in samples {
        let _ = writeln!(s, "{phi:.16e},{:.16e},{:.16e}", z.re, z.im);
    }
    s
}

pub fn read_trace_csv(path: &Path) -> Result<Vec<(f64, Complex64)>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h.trim() == "phi,x,y" => {}
        _ => bail!("{}: expected header `phi,x,y`", path.display()),
    }
    let mut out = Vec::new();
    for (i, line) in lines.enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 3 {
            bail!("{}:{}: expected 3 columns", path.display(), i + 2);
        }
        let parse = |c: &str| -> Result<f64> {
            c.trim().parse().with_context(|| format!("{}:{}: bad number `{c}`", path.display(), i + 2))
        };
        out.push((parse(cols[0])?, Complex64::new(parse(cols[1])?, parse(cols[2])?)));
    }
    Ok(out)
}

/// Metadata written next to a trace as `<out>.meta.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceMeta {
    pub family: String,
    pub alpha: f64,
    pub beta: Option<f64>,
    #[serde(rename = "T")]
    pub t: f64,
    #[serde(rename = "A")]
    pub a: f64,
    pub n: usize,
    pub conformal: Option<bool>,
    pub warning: Option<String>,
}

pub fn sidecar_path(csv: &Path) -> PathBuf {
    let mut s = csv.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

pub fn read_sidecar(csv: &Path) -> Result<Option<TraceMeta>> {
    let p = sidecar_path(csv);
    if !p.exists() {
        return Ok(None);
    }
    let text = fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))?;
    Ok(Some(serde_json::from_str(&text).with_context(|| format!("parsing {}", p.display()))?))
}

/// A closed polyline scaled into a 600-pixel square, y pointing up.
pub fn trace_svg(points: &[Complex64], title: &str) -> String {
    let (mut x0, mut x1, mut y0, mut y1) = (0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64);
    for z in points {
        x0 = x0.min(z.re);
        x1 = x1.max(z.re);
        y0 = y0.min(z.im);
        y1 = y1.max(z.im);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-12);
    let (size, pad) = (600.0, 20.0);
    let k = (size - 2.0 * pad) / span;
    let cx = pad + 0.5 * (size - 2.0 * pad) - k * 0.5 * (x0 + x1);
    let cy = pad + 0.5 * (size - 2.0 * pad) + k * 0.5 * (y0 + y1);
    let mut pts = String::new();
    for z in points {
        let _ = write!(pts, "{:.3},{:.3} ", cx + k * z.re, cy - k * z.im);
    }
    let axis_y = cy;
    format!(
        concat!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{s}\" height=\"{s}\" viewBox=\"0 0 {s} {s}\">\n",
            "<title>{title}</title>\n",
            "<line x1=\"0\" y1=\"{ay:.3}\" x2=\"{s}\" y2=\"{ay:.3}\" stroke=\"#bbb\" stroke-width=\"1\"/>\n",
            "<polygon points=\"{pts}\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\"/>\n",
            "</svg>\n"
        ),
        s = size,
        title = title,
        ay = axis_y,
        pts = pts.trim_end(),
    )
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}
