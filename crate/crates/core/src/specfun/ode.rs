//! Taylor-series integration of x² y'' + x y' + (σ x² + q) y = 0 along the
//! positive real axis. σ = 1 gives the Bessel family, σ = −1 the modified one.

const MAX_TERMS: usize = 120;

/// Result of a propagation: the states at the end point and an
/// accumulated round-off estimate per state.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Propagated<const N: usize> {
    pub states: [[f64; 2]; N],
    pub rounding: [f64; N],
}

/// Step size limited by the radius of convergence (x0) and the local
/// oscillation or growth rate.
fn step_length(x0: f64, sigma: f64, q: f64) -> f64 {
    let rate = (sigma.abs() + q.abs() / (x0 * x0)).sqrt();
    (0.4 * x0).min(1.5 / rate)
}

/// Advance every `[y, y']` state from `x0` to `x1` (both > 0).
pub(crate) fn propagate<const N: usize>(
    x0: f64,
    x1: f64,
    sigma: f64,
    q: f64,
    mut states: [[f64; 2]; N],
) -> Propagated<N> {
    let mut rounding = [0.0; N];
    let mut x = x0;
    let dir = if x1 >= x0 { 1.0 } else { -1.0 };
    while (x1 - x) * dir > 0.0 {
        let h = dir * step_length(x, sigma, q).min((x1 - x).abs());
        for (state, err) in states.iter_mut().zip(rounding.iter_mut()) {
            let (y, dy, mag) = taylor_step(x, h, sigma, q, *state);
            *state = [y, dy];
            *err += 4.0 * f64::EPSILON * mag;
        }
        x = if (x1 - (x + h)) * dir <= 0.0 { x1 } else { x + h };
    }
    Propagated { states, rounding }
}

/// One Taylor step of length h from x0. Returns (y, y', Σ|terms|).
fn taylor_step(x0: f64, h: f64, sigma: f64, q: f64, state: [f64; 2]) -> (f64, f64, f64) {
    // d_n = c_n h^n, where c_n are the Taylor coefficients about x0.
    let mut d = [0.0f64; MAX_TERMS + 2];
    d[0] = state[0];
    d[1] = state[1] * h;
    let x02 = x0 * x0;
    let mut y = d[0] + d[1];
    let mut dy = d[1];
    let mut mag = d[0].abs() + d[1].abs();
    let mut small = 0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let mut acc = (nf + 1.0) * (2.0 * nf + 1.0) * x0 * h * d[n + 1] + (nf * nf + sigma * x02 + q) * h * h * d[n];
        if n >= 1 {
            acc += 2.0 * sigma * x0 * h * h * h * d[n - 1];
        }
        if n >= 2 {
            acc += sigma * h * h * h * h * d[n - 2];
        }
        let next = -acc / (x02 * (nf + 1.0) * (nf + 2.0));
        d[n + 2] = next;
        y += next;
        dy += (nf + 2.0) * next;
        mag += next.abs();
        if next.abs() <= f64::EPSILON * 1e-2 * mag {
            small += 1;
            if small >= 4 {
                break;
            }
        } else {
            small = 0;
        }
    }
    (y, dy / h, mag)
}
