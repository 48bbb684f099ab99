//! Bessel functions of purely imaginary order iν with real argument,
//! reported through the real combinations
//!
//! J̄ = sech(πν/2) Re J_{iν},  Ȳ = sech(πν/2) Re Y_{iν} = Im J_{iν} / sinh(πν/2),
//! Ī = Re I_{iν},             K_{iν} (already real).

use super::gamma::ln_gamma;
use super::ode::propagate;
use num_complex::Complex64;
use std::f64::consts::PI;

const EPS: f64 = f64::EPSILON;
const MAX_SERIES_TERMS: usize = 20_000;

/// Value, derivative, error estimate.
pub(crate) type Triple = (f64, f64, f64);

#[derive(Debug, Clone, Copy)]
struct Series {
    sum: Complex64,
    deriv: Complex64,
    /// Σ|t_k| over the whole sum, for cancellation-aware error estimates.
    abs_sum: f64,
    abs_deriv: f64,
}

/// Σ_k s^k (x/2)^{2k+iν} / (k! Γ(k+1+iν)) multiplied by e^{−scale},
/// with s = +1 for I_{iν} and s = −1 for J_{iν}.
fn ascending(nu: f64, x: f64, sign: f64, scale: f64) -> Series {
    let inu = Complex64::new(0.0, nu);
    let half = 0.5 * x;
    let mut t = (inu * half.ln() - ln_gamma(Complex64::new(1.0, nu)) - scale).exp();
    let q = sign * half * half;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut deriv = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    let mut abs_deriv = 0.0;
    for k in 0..MAX_SERIES_TERMS {
        let kf = k as f64;
        let dt = t * Complex64::new(2.0 * kf, nu);
        sum += t;
        deriv += dt;
        abs_sum += t.norm();
        abs_deriv += dt.norm();
        t *= q / ((kf + 1.0) * Complex64::new(kf + 1.0, nu));
        if kf + 1.0 > half && t.norm() <= 0.1 * EPS * abs_sum {
            break;
        }
    }
    Series {
        sum,
        deriv: deriv / x,
        abs_sum,
        abs_deriv: abs_deriv / x,
    }
}

/// Ī_ν(x) = Re I_{iν}(x).
pub(crate) fn ibar(nu: f64, x: f64) -> Triple {
    let scale = if x > 30.0 { x } else { 0.0 };
    let s = ascending(nu, x, 1.0, scale);
    let f = scale.exp();
    (s.sum.re * f, s.deriv.re * f, 8.0 * EPS * (s.abs_sum + s.abs_deriv) * f)
}

/// Crossover between the ascending series and the contour integral for K.
fn k_uses_series(nu: f64, x: f64) -> bool {
    x <= nu + 2.0
}

/// K_{iν}(x).
pub(crate) fn k(nu: f64, x: f64) -> Triple {
    if k_uses_series(nu, x) {
        let s = ascending(nu, x, 1.0, 0.0);
        let f = -PI / (nu * PI).sinh();
        (
            s.sum.im * f,
            s.deriv.im * f,
            8.0 * EPS * (s.abs_sum + s.abs_deriv) * f.abs(),
        )
    } else {
        k_contour(nu, x)
    }
}

/// K_{iν}(x) = ½∫ e^{−x cosh t + iνt} dt along Im t = β with sin β = ν/x,
/// which removes the fast oscillation of the straight-line integrand.
fn k_contour(nu: f64, x: f64) -> Triple {
    let sb = nu / x;
    let beta = sb.asin();
    let cb = beta.cos();
    let a = x * cb;
    let s_max = (1.0 + 60.0 / a).acosh();
    let integrand = |s: f64| -> (f64, f64) {
        let damp = (-a * (s.cosh() - 1.0)).exp();
        let phi = nu * (s - s.sinh());
        let (sp, cp) = phi.sin_cos();
        (damp * cp, damp * (s.cosh() * cb * cp - s.sinh() * sb * sp))
    };

    let mut n = 16usize;
    let mut h = s_max / n as f64;
    let (g0, d0) = integrand(0.0);
    let mut sum_g = 0.5 * g0;
    let mut sum_d = 0.5 * d0;
    let mut abs_g = 0.5 * g0.abs();
    for j in 1..=n {
        let (g, d) = integrand(j as f64 * h);
        sum_g += g;
        sum_d += d;
        abs_g += g.abs();
    }
    let mut tg = h * sum_g;
    let mut td = h * sum_d;
    let mut err = f64::INFINITY;
    for _ in 0..18 {
        let h_new = 0.5 * h;
        for j in 0..n {
            let (g, d) = integrand((2 * j + 1) as f64 * h_new);
            sum_g += g;
            sum_d += d;
            abs_g += g.abs();
        }
        n *= 2;
        h = h_new;
        let (ng, nd) = (h * sum_g, h * sum_d);
        let diff = (ng - tg).abs().max((nd - td).abs());
        tg = ng;
        td = nd;
        err = diff;
        if diff <= 4.0 * EPS * h * abs_g {
            break;
        }
    }
    let f = (-a - nu * beta).exp();
    (tg * f, -td * f, (err + 16.0 * EPS * h * abs_g) * f)
}

/// Largest x at which the ascending series for J_{iν} is used.
fn j_series_limit(nu: f64) -> f64 {
    3.0 + 0.35 * nu
}

/// (J̄, Ȳ) with derivatives and error estimates.
pub(crate) fn jbar_ybar(nu: f64, x: f64) -> (Triple, Triple) {
    let ch = (0.5 * PI * nu).cosh();
    let sh = (0.5 * PI * nu).sinh();
    let xs = j_series_limit(nu);
    let x0 = x.min(xs);
    let s = ascending(nu, x0, -1.0, 0.0);
    let series_err = 8.0 * EPS * (s.abs_sum + s.abs_deriv);
    let j = (s.sum.re / ch, s.deriv.re / ch, series_err / ch);
    let y = (s.sum.im / sh, s.deriv.im / sh, series_err / sh);
    if x <= xs {
        return (j, y);
    }
    let out = propagate(x0, x, 1.0, nu * nu, [[j.0, j.1], [y.0, y.1]]);
    let [js, ys] = out.states;
    // Errors carried from the start point scale with the amplitude ratio,
    // which is bounded by sqrt(x0/x) times a modest factor for these equations.
    (
        (js[0], js[1], j.2 + out.rounding[0]),
        (ys[0], ys[1], y.2 + out.rounding[1]),
    )
}
