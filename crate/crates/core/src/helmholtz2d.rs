//! Separable solutions f = R(r) Θ(θ) of the polar Helmholtz equation
//! ∇⊥² f = Λ f, i.e. Θ'' = −η Θ and r² R'' + r R' − (Λ r² + η) R = 0.
//!
//! Λ < 0 gives Bessel functions of argument √|Λ| r, Λ > 0 modified Bessel
//! functions and Λ = 0 the equidimensional solutions. A negative η turns the
//! order imaginary.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::factor::Factor;
use crate::specfun::{self, recip_gamma_real, BesselError, BesselKind, BesselOrder, OrderKind};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HelmholtzError {
    #[error("derivative order {0} is not supported")]
    DerivOrder(u8),
    #[error("non-finite input {0}")]
    NonFinite(&'static str),
    #[error("radius must be non-negative (got {0})")]
    NegativeRadius(f64),
    #[error("radial term {term} is singular at r = {r}")]
    Singular { term: &'static str, r: f64 },
    #[error("branch tag {tag:?} does not match Lambda = {lambda}, eta = {eta}")]
    TagMismatch { tag: RadialKind, lambda: f64, eta: f64 },
    #[error("angular eta {angular} differs from radial eta {radial}")]
    EtaMismatch { angular: f64, radial: f64 },
    #[error(transparent)]
    Bessel(#[from] BesselError),
}

/// Θ(θ) = C e^{−√|η|θ} + D e^{√|η|θ} (η < 0), C + Dθ (η = 0),
/// C cos √η θ + D sin √η θ (η > 0).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct AngularBranch {
    pub eta: f64,
    pub coeff_c: f64,
    pub coeff_d: f64,
}

impl AngularBranch {
    pub fn new(eta: f64, coeff_c: f64, coeff_d: f64) -> Self {
        Self { eta, coeff_c, coeff_d }
    }

    pub fn factor(&self) -> Factor {
        Factor::new(-self.eta, self.coeff_c, self.coeff_d)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff_c == 0.0 && self.coeff_d == 0.0
    }
}

pub fn theta_eval(branch: &AngularBranch, theta: f64, deriv_order: u8) -> Result<f64, HelmholtzError> {
    if deriv_order > 2 {
        return Err(HelmholtzError::DerivOrder(deriv_order));
    }
    if !(theta.is_finite() && branch.eta.is_finite()) {
        return Err(HelmholtzError::NonFinite("theta"));
    }
    Ok(branch.factor().eval(theta)[deriv_order as usize])
}

/// The nine sign cases of (Λ, η).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RadialKind {
    /// Λ < 0, η > 0: A J_√η + B Y_√η
    BesselPositiveOrder,
    /// Λ < 0, η = 0: A J₀ + B Y₀
    BesselOrderZero,
    /// Λ < 0, η < 0: A J̄_√|η| + B Ȳ_√|η|
    BesselImaginaryOrder,
    /// Λ > 0, η > 0: A I_√η + B K_√η
    ModifiedPositiveOrder,
    /// Λ > 0, η = 0: A I₀ + B K₀
    ModifiedOrderZero,
    /// Λ > 0, η < 0: A Ī_√|η| + B K_{i√|η|}
    ModifiedImaginaryOrder,
    /// Λ = 0, η > 0: A r^√η + B r^−√η
    PowerLaw,
    /// Λ = 0, η = 0: A + B ln r
    Logarithmic,
    /// Λ = 0, η < 0: A cos(√|η| ln r) + B sin(√|η| ln r)
    LogTrigonometric,
}

impl RadialKind {
    pub fn classify(lambda: f64, eta: f64) -> Self {
        use std::cmp::Ordering::*;
        let s = |v: f64| v.partial_cmp(&0.0).unwrap_or(Equal);
        match (s(lambda), s(eta)) {
            (Less, Greater) => RadialKind::BesselPositiveOrder,
            (Less, Equal) => RadialKind::BesselOrderZero,
            (Less, Less) => RadialKind::BesselImaginaryOrder,
            (Greater, Greater) => RadialKind::ModifiedPositiveOrder,
            (Greater, Equal) => RadialKind::ModifiedOrderZero,
            (Greater, Less) => RadialKind::ModifiedImaginaryOrder,
            (Equal, Greater) => RadialKind::PowerLaw,
            (Equal, Equal) => RadialKind::Logarithmic,
            (Equal, Less) => RadialKind::LogTrigonometric,
        }
    }

    pub const ALL: [RadialKind; 9] = [
        RadialKind::BesselPositiveOrder,
        RadialKind::BesselOrderZero,
        RadialKind::BesselImaginaryOrder,
        RadialKind::ModifiedPositiveOrder,
        RadialKind::ModifiedOrderZero,
        RadialKind::ModifiedImaginaryOrder,
        RadialKind::PowerLaw,
        RadialKind::Logarithmic,
        RadialKind::LogTrigonometric,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialBranch {
    pub helmholtz_lambda: f64,
    pub eta: f64,
    pub coeff_a: f64,
    pub coeff_b: f64,
    pub branch_tag: RadialKind,
}

/// R and the combinations that enter displacements and stresses. At r = 0
/// an entry is `None` when it diverges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialJet {
    pub value: Option<f64>,
    pub d1: Option<f64>,
    pub d2: Option<f64>,
    pub over_r: Option<f64>,
    pub d1_over_r: Option<f64>,
    pub over_r2: Option<f64>,
}

impl RadialJet {
    fn zero() -> Self {
        Self::finite([0.0; 6])
    }

    fn finite(v: [f64; 6]) -> Self {
        Self {
            value: Some(v[0]),
            d1: Some(v[1]),
            d2: Some(v[2]),
            over_r: Some(v[3]),
            d1_over_r: Some(v[4]),
            over_r2: Some(v[5]),
        }
    }

    fn from_entries(e: [Option<f64>; 6]) -> Self {
        Self {
            value: e[0],
            d1: e[1],
            d2: e[2],
            over_r: e[3],
            d1_over_r: e[4],
            over_r2: e[5],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Term {
    Bessel(BesselKind, BesselOrder),
    /// r^p
    Power(f64),
    /// ln r
    Log,
    /// cos(β ln r)
    CosLog(f64),
    /// sin(β ln r)
    SinLog(f64),
}

impl Term {
    fn name(&self) -> &'static str {
        match self {
            Term::Bessel(BesselKind::J, _) => "J",
            Term::Bessel(BesselKind::Y, _) => "Y",
            Term::Bessel(BesselKind::I, _) => "I",
            Term::Bessel(BesselKind::K, _) => "K",
            Term::Power(_) => "r^p",
            Term::Log => "ln r",
            Term::CosLog(_) => "cos(beta ln r)",
            Term::SinLog(_) => "sin(beta ln r)",
        }
    }

    /// Leading behaviour a r^p + b r^{p+2} near r = 0, if regular there.
    fn small_r(&self, alpha: f64) -> Option<(f64, f64, f64)> {
        match *self {
            Term::Bessel(kind @ (BesselKind::J | BesselKind::I), order)
                if order.kind == OrderKind::Real || order.magnitude == 0.0 =>
            {
                let nu = order.magnitude;
                let h = 0.5 * alpha;
                let a = h.powf(nu) * recip_gamma_real(nu + 1.0);
                let b = h.powf(nu + 2.0) * recip_gamma_real(nu + 2.0);
                let b = if kind == BesselKind::J { -b } else { b };
                Some((a, b, nu))
            }
            Term::Power(p) if p >= 0.0 => Some((1.0, 0.0, p)),
            _ => None,
        }
    }

    /// (f, f') at r > 0.
    fn eval(&self, r: f64, alpha: f64) -> Result<(f64, f64), HelmholtzError> {
        match *self {
            Term::Bessel(kind, order) => {
                let x = alpha * r;
                if x < specfun::X_MIN {
                    if let Some((a, b, p)) = self.small_r(alpha) {
                        let v = a * r.powf(p) + b * r.powf(p + 2.0);
                        let d = a * p * r.powf(p - 1.0) + b * (p + 2.0) * r.powf(p + 1.0);
                        return Ok((v, d));
                    }
                }
                let e = specfun::bessel(kind, order, x)?;
                Ok((e.value, alpha * e.derivative))
            }
            Term::Power(p) => {
                let v = r.powf(p);
                Ok((v, p * v / r))
            }
            Term::Log => Ok((r.ln(), 1.0 / r)),
            Term::CosLog(beta) => {
                let (s, c) = (beta * r.ln()).sin_cos();
                Ok((c, -beta * s / r))
            }
            Term::SinLog(beta) => {
                let (s, c) = (beta * r.ln()).sin_cos();
                Ok((s, beta * c / r))
            }
        }
    }
}

/// Values at r → 0 of [R, R', R'', R/r, R'/r, R/r²] for a r^p + b r^{p+2}.
fn small_r_limits(a: f64, b: f64, p: f64) -> [Option<f64>; 6] {
    let value = if p == 0.0 { Some(a) } else { Some(0.0) };
    let d1 = match p {
        0.0 => Some(0.0),
        p if p < 1.0 => None,
        1.0 => Some(a),
        _ => Some(0.0),
    };
    let d2 = match p {
        0.0 => Some(2.0 * b),
        p if p < 1.0 => None,
        1.0 => Some(0.0),
        p if p < 2.0 => None,
        2.0 => Some(2.0 * a),
        _ => Some(0.0),
    };
    let over_r = match p {
        p if p < 1.0 => None,
        1.0 => Some(a),
        _ => Some(0.0),
    };
    let d1_over_r = match p {
        0.0 => Some(2.0 * b),
        p if p < 2.0 => None,
        2.0 => Some(2.0 * a),
        _ => Some(0.0),
    };
    let over_r2 = match p {
        p if p < 2.0 => None,
        2.0 => Some(a),
        _ => Some(0.0),
    };
    [value, d1, d2, over_r, d1_over_r, over_r2]
}

impl RadialBranch {
    pub fn new(helmholtz_lambda: f64, eta: f64, coeff_a: f64, coeff_b: f64) -> Self {
        Self {
            helmholtz_lambda,
            eta,
            coeff_a,
            coeff_b,
            branch_tag: RadialKind::classify(helmholtz_lambda, eta),
        }
    }

    pub fn validate(&self) -> Result<(), HelmholtzError> {
        for (name, v) in [
            ("helmholtz_lambda", self.helmholtz_lambda),
            ("eta", self.eta),
            ("coeff_a", self.coeff_a),
            ("coeff_b", self.coeff_b),
        ] {
            if !v.is_finite() {
                return Err(HelmholtzError::NonFinite(name));
            }
        }
        if RadialKind::classify(self.helmholtz_lambda, self.eta) != self.branch_tag {
            return Err(HelmholtzError::TagMismatch {
                tag: self.branch_tag,
                lambda: self.helmholtz_lambda,
                eta: self.eta,
            });
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.coeff_a == 0.0 && self.coeff_b == 0.0
    }

    /// Radial wavenumber √|Λ|.
    pub fn alpha(&self) -> f64 {
        self.helmholtz_lambda.abs().sqrt()
    }

    fn terms(&self) -> (Term, Term) {
        let nu = self.eta.abs().sqrt();
        let real = BesselOrder::real(nu);
        let imag = BesselOrder::imaginary(nu);
        use BesselKind::*;
        match self.branch_tag {
            RadialKind::BesselPositiveOrder | RadialKind::BesselOrderZero => {
                (Term::Bessel(J, real), Term::Bessel(Y, real))
            }
            RadialKind::BesselImaginaryOrder => (Term::Bessel(J, imag), Term::Bessel(Y, imag)),
            RadialKind::ModifiedPositiveOrder | RadialKind::ModifiedOrderZero => {
                (Term::Bessel(I, real), Term::Bessel(K, real))
            }
            RadialKind::ModifiedImaginaryOrder => (Term::Bessel(I, imag), Term::Bessel(K, imag)),
            RadialKind::PowerLaw => (Term::Power(nu), Term::Power(-nu)),
            RadialKind::Logarithmic => (Term::Power(0.0), Term::Log),
            RadialKind::LogTrigonometric => (Term::CosLog(nu), Term::SinLog(nu)),
        }
    }

    /// (R, R') at r > 0.
    fn value_and_slope(&self, r: f64) -> Result<(f64, f64), HelmholtzError> {
        let (ta, tb) = self.terms();
        let alpha = self.alpha();
        let mut v = 0.0;
        let mut d = 0.0;
        for (coef, term) in [(self.coeff_a, ta), (self.coeff_b, tb)] {
            if coef != 0.0 {
                let (f, fp) = term.eval(r, alpha)?;
                v += coef * f;
                d += coef * fp;
            }
        }
        Ok((v, d))
    }

    /// The radial jet; at r = 0 only regular terms are allowed.
    pub fn jet(&self, r: f64) -> Result<RadialJet, HelmholtzError> {
        self.validate()?;
        if r.is_nan() || r.is_infinite() {
            return Err(HelmholtzError::NonFinite("r"));
        }
        if r < 0.0 {
            return Err(HelmholtzError::NegativeRadius(r));
        }
        if self.is_zero() {
            return Ok(RadialJet::zero());
        }
        if r == 0.0 {
            return self.jet_at_axis();
        }
        let (v, d) = self.value_and_slope(r)?;
        let d2 = self.helmholtz_lambda * v + self.eta * v / (r * r) - d / r;
        Ok(RadialJet::finite([v, d, d2, v / r, d / r, v / (r * r)]))
    }

    fn jet_at_axis(&self) -> Result<RadialJet, HelmholtzError> {
        let (ta, tb) = self.terms();
        let alpha = self.alpha();
        let mut acc = [Some(0.0); 6];
        for (coef, term) in [(self.coeff_a, ta), (self.coeff_b, tb)] {
            if coef == 0.0 {
                continue;
            }
            let (a, b, p) = term.small_r(alpha).ok_or(HelmholtzError::Singular {
                term: term.name(),
                r: 0.0,
            })?;
            let lim = small_r_limits(a, b, p);
            for (slot, l) in acc.iter_mut().zip(lim) {
                *slot = match (*slot, l) {
                    (Some(s), Some(l)) => Some(s + coef * l),
                    _ => None,
                };
            }
        }
        Ok(RadialJet::from_entries(acc))
    }
}

/// R (order 0) or R' (order 1).
pub fn radial_eval(branch: &RadialBranch, r: f64, deriv_order: u8) -> Result<f64, HelmholtzError> {
    if deriv_order > 1 {
        return Err(HelmholtzError::DerivOrder(deriv_order));
    }
    let jet = branch.jet(r)?;
    let v = if deriv_order == 0 { jet.value } else { jet.d1 };
    v.ok_or(HelmholtzError::Singular {
        term: if deriv_order == 0 { "R" } else { "R'" },
        r,
    })
}

/// max |(∇⊥² − Λ) f| / max(term magnitudes) over the points (r, θ), r > 0.
///
/// R'' is taken from a fourth-order difference of the reported R', so the
/// check tests value/derivative consistency rather than restating the ODE.
pub fn helmholtz_residual(
    radial: &RadialBranch,
    angular: &AngularBranch,
    points: &[(f64, f64)],
) -> Result<f64, HelmholtzError> {
    if radial.eta != angular.eta {
        return Err(HelmholtzError::EtaMismatch {
            angular: angular.eta,
            radial: radial.eta,
        });
    }
    radial.validate()?;
    let alpha = radial.alpha();
    let mut max_res = 0.0f64;
    let mut scale = 1e-30f64;
    for &(r, theta) in points {
        if r.is_nan() || r <= 0.0 {
            return Err(HelmholtzError::NegativeRadius(r));
        }
        let mut ell = r;
        if alpha > 0.0 {
            ell = ell.min(1.0 / alpha);
        }
        if radial.eta.abs() > 1.0 {
            ell = ell.min(r / radial.eta.abs().sqrt());
        }
        let h = 1e-3 * ell;
        let slope = |x: f64| radial.value_and_slope(x).map(|p| p.1);
        let r2 = (slope(r - 2.0 * h)? - 8.0 * slope(r - h)? + 8.0 * slope(r + h)? - slope(r + 2.0 * h)?) / (12.0 * h);
        let (rv, r1) = radial.value_and_slope(r)?;
        let th = angular.factor().eval(theta);
        let terms = [
            r2 * th[0],
            r1 * th[0] / r,
            rv * th[2] / (r * r),
            -radial.helmholtz_lambda * rv * th[0],
        ];
        let res: f64 = terms.iter().sum();
        max_res = max_res.max(res.abs());
        scale = scale.max(terms.iter().map(|t| t.abs()).fold(0.0, f64::max));
    }
    Ok(max_res / scale)
}
