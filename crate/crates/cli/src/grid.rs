use buchwald::fields::{Axis, GridSpec};

/// Parse `r,theta,z,t` axes, each either `start:end:count` or a single value.
pub fn parse_grid(text: &str) -> Result<GridSpec, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!(
            "expected 4 comma-separated axes (r,theta,z,t), got {}",
            parts.len()
        ));
    }
    let axes = ["r", "theta", "z", "t"]
        .iter()
        .zip(&parts)
        .map(|(name, p)| parse_axis(p).map_err(|e| format!("axis {name}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GridSpec {
        r: axes[0],
        theta: axes[1],
        z: axes[2],
        t: axes[3],
    })
}

fn number(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("'{s}' is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("'{s}' is not finite"))
    }
}

fn parse_axis(s: &str) -> Result<Axis, String> {
    let fields: Vec<&str> = s.split(':').collect();
    match fields.as_slice() {
        [v] => Ok(Axis::point(number(v)?)),
        [a, b, n] => {
            let count: usize = n.parse().map_err(|_| format!("'{n}' is not a count"))?;
            if count == 0 {
                return Err("count must be at least 1".into());
            }
            Ok(Axis::new(number(a)?, number(b)?, count))
        }
        _ => Err(format!("'{s}' is neither a value nor start:end:count")),
    }
}
