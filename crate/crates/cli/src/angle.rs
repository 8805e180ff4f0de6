use std::f64::consts::PI;

/// Parses an angle in radians: a decimal number, `pi`, `pi/m`, `kpi/m` or `k*pi/m`.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim().to_ascii_lowercase().replace(' ', "");
    if t.is_empty() {
        return Err("empty angle".into());
    }
    let value = match t.find("pi") {
        None => t.parse::<f64>().map_err(|_| format!("`{s}` is not a number or a multiple of pi"))?,
        Some(at) => {
            let head = t[..at].trim_end_matches('*');
            let tail = &t[at + 2..];
            let k = match head {
                "" => 1.0,
                "-" => -1.0,
                h => h.parse::<f64>().map_err(|_| format!("bad multiplier in `{s}`"))?,
            };
            let m = match tail {
                "" => 1.0,
                rest => {
                    let d = rest
                        .strip_prefix('/')
                        .ok_or_else(|| format!("expected `/` after pi in `{s}`"))?;
                    d.parse::<f64>().map_err(|_| format!("bad divisor in `{s}`"))?
                }
            };
            if m == 0.0 {
                return Err(format!("zero divisor in `{s}`"));
            }
            k * PI / m
        }
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

/// A uniform grid `lo:hi:count` with inclusive ends.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid(pub Vec<f64>);

pub fn parse_grid(s: &str) -> Result<Grid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, count] = parts[..] else {
        return Err(format!("grid `{s}` must have the form lo:hi:count"));
    };
    let (lo, hi) = (parse_angle(lo)?, parse_angle(hi)?);
    let count: usize = count.trim().parse().map_err(|_| format!("bad grid count in `{s}`"))?;
    match count {
        0 => Err("grid count must be positive".into()),
        1 => Ok(Grid(vec![lo])),
        n => Ok(Grid((0..n).map(|j| lo + (hi - lo) * j as f64 / (n - 1) as f64).collect())),
    }
}

/// A complex number written `x,y`.
pub fn parse_point(s: &str) -> Result<(f64, f64), String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("point `{s}` must be x,y"))?;
    let x: f64 = x.trim().parse().map_err(|_| format!("bad x in `{s}`"))?;
    let y: f64 = y.trim().parse().map_err(|_| format!("bad y in `{s}`"))?;
    Ok((x, y))
}

/// A tolerance override `name=value`.
pub fn parse_override(s: &str) -> Result<(String, f64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("override `{s}` must be name=value"))?;
    let v: f64 = v.trim().parse().map_err(|_| format!("bad value in `{s}`"))?;
    Ok((k.trim().to_string(), v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_forms() {
        assert_eq!(parse_angle("pi").unwrap(), PI);
        assert_eq!(parse_angle("pi/8").unwrap(), PI / 8.0);
        assert_eq!(parse_angle("3pi/8").unwrap(), 3.0 * PI / 8.0);
        assert_eq!(parse_angle("3*pi/16").unwrap(), 3.0 * PI / 16.0);
        assert_eq!(parse_angle("0.5").unwrap(), 0.5);
        assert_eq!(parse_angle(" PI/4 ").unwrap(), PI / 4.0);
        for bad in ["", "pi8", "pi/0", "x", "pi/", "2pi/a"] {
            assert!(parse_angle(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn grids() {
        assert_eq!(parse_grid("0:1:3").unwrap().0, vec![0.0, 0.5, 1.0]);
        assert_eq!(parse_grid("pi/4:pi/4:1").unwrap().0, vec![PI / 4.0]);
        assert!(parse_grid("0:1:0").is_err());
        assert!(parse_grid("0:1").is_err());
    }

    #[test]
    fn points_and_overrides() {
        assert_eq!(parse_point("0,0.8").unwrap(), (0.0, 0.8));
        assert!(parse_point("0.8").is_err());
        assert_eq!(parse_override("ode=1e-6").unwrap(), ("ode".into(), 1e-6));
        assert!(parse_override("ode").is_err());
    }
}
