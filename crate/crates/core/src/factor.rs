//! One-dimensional separated factors solving f'' = c f.

use serde::{Deserialize, Serialize};

/// `f(x) = P cos(√|c| x) + Q sin(√|c| x)` for c < 0, `P + Q x` for c = 0,
/// `P e^{−√c x} + Q e^{√c x}` for c > 0.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Factor {
    pub c: f64,
    pub p: f64,
    pub q: f64,
}

impl Factor {
    pub fn new(c: f64, p: f64, q: f64) -> Self {
        Self { c, p, q }
    }

    /// The constant factor 1 (with c = 0).
    pub fn unit() -> Self {
        Self::new(0.0, 1.0, 0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.p == 0.0 && self.q == 0.0
    }

    /// True when f' vanishes identically.
    pub fn derivative_vanishes(&self) -> bool {
        self.is_zero() || (self.c == 0.0 && self.q == 0.0)
    }

    /// True when f'' vanishes identically.
    pub fn second_derivative_vanishes(&self) -> bool {
        self.is_zero() || self.c == 0.0
    }

    /// [f, f', f''] at x.
    pub fn eval(&self, x: f64) -> [f64; 3] {
        let (p, q, c) = (self.p, self.q, self.c);
        if c < 0.0 {
            let k = (-c).sqrt();
            let (s, co) = (k * x).sin_cos();
            let f = p * co + q * s;
            [f, k * (q * co - p * s), c * f]
        } else if c == 0.0 {
            [p + q * x, q, 0.0]
        } else {
            let k = c.sqrt();
            let a = if p == 0.0 { 0.0 } else { p * (-k * x).exp() };
            let b = if q == 0.0 { 0.0 } else { q * (k * x).exp() };
            [a + b, k * (b - a), c * (a + b)]
        }
    }
}
