//! Bessel and modified Bessel functions of real order ν and of purely
//! imaginary order iν, with first derivatives.
//!
//! For imaginary order the returned functions are the real-valued set
//! J̄_ν, Ȳ_ν, Ī_ν and K_{iν}; at ν = 0 they coincide exactly with the
//! real-order functions of order zero.

mod gamma;
mod imag_order;
mod ode;
mod real_order;

pub use gamma::{gamma_real, ln_gamma, recip_gamma_real};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Smallest supported argument.
pub const X_MIN: f64 = 1e-8;
/// Largest supported argument.
pub const X_MAX: f64 = 700.0;
/// Largest supported order magnitude.
pub const NU_MAX: f64 = 50.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BesselError {
    #[error("bessel argument must be positive (got x = {x})")]
    Domain { x: f64 },
    #[error("bessel argument x = {x} outside the supported range [{X_MIN}, {X_MAX}]")]
    Range { x: f64 },
    #[error("bessel order magnitude {nu} outside [0, {NU_MAX}]")]
    Order { nu: f64 },
    #[error("{kind} of order {order} overflows at x = {x}")]
    Overflow {
        kind: BesselKind,
        order: BesselOrder,
        x: f64,
    },
    #[error("{kind} of order {order} at x = {x}: {what} did not converge")]
    NoConvergence {
        kind: BesselKind,
        order: BesselOrder,
        x: f64,
        what: &'static str,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BesselKind {
    J,
    Y,
    I,
    K,
}

impl std::fmt::Display for BesselKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BesselKind::J => "J",
            BesselKind::Y => "Y",
            BesselKind::I => "I",
            BesselKind::K => "K",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Real,
    Imaginary,
}

/// Order ν (real) or iν (imaginary); `magnitude` is ν ≥ 0 in both cases.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BesselOrder {
    pub kind: OrderKind,
    pub magnitude: f64,
}

impl BesselOrder {
    pub fn real(nu: f64) -> Self {
        Self {
            kind: OrderKind::Real,
            magnitude: nu,
        }
    }

    pub fn imaginary(nu: f64) -> Self {
        Self {
            kind: OrderKind::Imaginary,
            magnitude: nu,
        }
    }
}

impl std::fmt::Display for BesselOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            OrderKind::Real => write!(f, "{}", self.magnitude),
            OrderKind::Imaginary => write!(f, "{}i", self.magnitude),
        }
    }
}

/// A single evaluation. `est_abs_error` is a heuristic, not an enclosure.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BesselEval {
    pub value: f64,
    pub derivative: f64,
    pub est_abs_error: f64,
}

pub fn bessel_j(order: BesselOrder, x: f64) -> Result<BesselEval, BesselError> {
    bessel(BesselKind::J, order, x)
}

pub fn bessel_y(order: BesselOrder, x: f64) -> Result<BesselEval, BesselError> {
    bessel(BesselKind::Y, order, x)
}

pub fn bessel_i(order: BesselOrder, x: f64) -> Result<BesselEval, BesselError> {
    bessel(BesselKind::I, order, x)
}

pub fn bessel_k(order: BesselOrder, x: f64) -> Result<BesselEval, BesselError> {
    bessel(BesselKind::K, order, x)
}

/// Evaluate one of the four functions.
pub fn bessel(kind: BesselKind, order: BesselOrder, x: f64) -> Result<BesselEval, BesselError> {
    let nu = order.magnitude;
    if !(nu.is_finite() && (0.0..=NU_MAX).contains(&nu)) {
        return Err(BesselError::Order { nu });
    }
    if x.is_nan() || x <= 0.0 {
        return Err(BesselError::Domain { x });
    }
    if !(X_MIN..=X_MAX).contains(&x) {
        return Err(BesselError::Range { x });
    }

    let (value, derivative, est) = if order.kind == OrderKind::Real || nu == 0.0 {
        real(kind, order, nu, x)?
    } else {
        match kind {
            BesselKind::J => imag_order::jbar_ybar(nu, x).0,
            BesselKind::Y => imag_order::jbar_ybar(nu, x).1,
            BesselKind::I => imag_order::ibar(nu, x),
            BesselKind::K => imag_order::k(nu, x),
        }
    };
    if !(value.is_finite() && derivative.is_finite() && est.is_finite()) {
        return Err(BesselError::Overflow { kind, order, x });
    }
    Ok(BesselEval {
        value,
        derivative,
        est_abs_error: est,
    })
}

fn real(kind: BesselKind, order: BesselOrder, nu: f64, x: f64) -> Result<(f64, f64, f64), BesselError> {
    let fail = |e: real_order::NoConvergence| BesselError::NoConvergence {
        kind,
        order,
        x,
        what: e.0,
    };
    let pair = match kind {
        BesselKind::J | BesselKind::Y => real_order::jy(nu, x).map_err(fail)?,
        BesselKind::I | BesselKind::K => real_order::ik(nu, x).map_err(fail)?,
    };
    let (v, d) = match kind {
        BesselKind::J | BesselKind::I => (pair.first, pair.first_deriv),
        BesselKind::Y | BesselKind::K => (pair.second, pair.second_deriv),
    };
    Ok((v, d, 64.0 * f64::EPSILON * (v.abs() + d.abs() * x.min(1.0))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WronskianPair {
    /// (J̄_ν, Ȳ_ν)
    JbarYbar,
    /// (Ī_ν, K_{iν})
    IbarK,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WronskianReport {
    /// (x, x·W(x)) per sample.
    pub samples: Vec<(f64, f64)>,
    pub mean: f64,
    /// (max − min) / |mean| of x·W.
    pub rel_spread: f64,
    pub nonzero: bool,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WronskianError {
    #[error("no sample points given")]
    Empty,
    #[error(transparent)]
    Bessel(#[from] BesselError),
}

/// Evaluate x·W(x) for an imaginary-order pair, W = f g' − f' g.
pub fn wronskian_check(pair: WronskianPair, nu: f64, x_samples: &[f64]) -> Result<WronskianReport, WronskianError> {
    if x_samples.is_empty() {
        return Err(WronskianError::Empty);
    }
    let order = BesselOrder::imaginary(nu);
    let (fk, gk) = match pair {
        WronskianPair::JbarYbar => (BesselKind::J, BesselKind::Y),
        WronskianPair::IbarK => (BesselKind::I, BesselKind::K),
    };
    let mut samples = Vec::with_capacity(x_samples.len());
    for &x in x_samples {
        let f = bessel(fk, order, x)?;
        let g = bessel(gk, order, x)?;
        samples.push((x, x * (f.value * g.derivative - f.derivative * g.value)));
    }
    let n = samples.len() as f64;
    let mean = samples.iter().map(|s| s.1).sum::<f64>() / n;
    let (lo, hi) = samples.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| {
        (lo.min(s.1), hi.max(s.1))
    });
    let rel_spread = if mean != 0.0 {
        (hi - lo) / mean.abs()
    } else {
        f64::INFINITY
    };
    Ok(WronskianReport {
        samples,
        mean,
        rel_spread,
        nonzero: mean != 0.0 && lo.signum() == hi.signum(),
    })
}
