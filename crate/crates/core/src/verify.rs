//! Finite-difference residuals of the Navier-Lamé equation and of the
//! coupled potential system, plus boundary-condition checks.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::buchwald::BuchwaldSolution;
use crate::fields::{self, FieldError};
use crate::helmholtz2d::HelmholtzError;
use crate::model::{Material, SpacetimePoint};

/// Floor that keeps relative residuals of trivial fields at 0/floor.
pub const SCALE_FLOOR: f64 = 1e-30;

/// Default step as a fraction of the local characteristic length.
pub const DEFAULT_STEP_FRACTION: f64 = 2e-3;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("no sample points")]
    NoPoints,
    #[error("step sizes must be positive and finite")]
    BadSteps,
    #[error("stencil at r = {r} with h_r = {h_r} reaches the axis")]
    TooCloseToAxis { r: f64, h_r: f64 },
    #[error("evaluation failed at {point:?}: {source}")]
    Field { point: SpacetimePoint, source: FieldError },
}

/// Anything that yields a displacement in a known medium.
pub trait DisplacementField: Sync {
    fn material(&self) -> &Material;
    fn displacement_at(&self, p: &SpacetimePoint) -> Result<[f64; 3], FieldError>;
}

impl DisplacementField for BuchwaldSolution {
    fn material(&self) -> &Material {
        &self.material
    }

    fn displacement_at(&self, p: &SpacetimePoint) -> Result<[f64; 3], FieldError> {
        fields::displacement(self, p).map(|d| d.as_array())
    }
}

/// A displacement given by a closure, for manufactured fields.
pub struct FnField<F> {
    pub material: Material,
    pub f: F,
}

impl<F> DisplacementField for FnField<F>
where
    F: Fn(&SpacetimePoint) -> [f64; 3] + Sync,
{
    fn material(&self) -> &Material {
        &self.material
    }

    fn displacement_at(&self, p: &SpacetimePoint) -> Result<[f64; 3], FieldError> {
        Ok((self.f)(p))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Steps {
    pub h_r: f64,
    pub h_theta: f64,
    pub h_z: f64,
    pub h_t: f64,
}

impl Steps {
    pub fn uniform(h: f64) -> Self {
        Self {
            h_r: h,
            h_theta: h,
            h_z: h,
            h_t: h,
        }
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            h_r: self.h_r * s,
            h_theta: self.h_theta * s,
            h_z: self.h_z * s,
            h_t: self.h_t * s,
        }
    }

    fn validate(&self) -> Result<(), VerifyError> {
        let ok = [self.h_r, self.h_theta, self.h_z, self.h_t]
            .iter()
            .all(|h| h.is_finite() && *h > 0.0);
        if ok {
            Ok(())
        } else {
            Err(VerifyError::BadSteps)
        }
    }

    fn get(&self, axis: usize) -> f64 {
        [self.h_r, self.h_theta, self.h_z, self.h_t][axis]
    }
}

/// How step sizes are picked.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StepRule {
    /// The same steps everywhere.
    Fixed(Steps),
    /// `fraction` × the solution's local characteristic lengths.
    Auto { fraction: f64 },
}

impl Default for StepRule {
    fn default() -> Self {
        StepRule::Auto {
            fraction: DEFAULT_STEP_FRACTION,
        }
    }
}

fn rate(c: f64) -> f64 {
    c.abs().sqrt()
}

/// Local length scales (radial, angular, axial, temporal) of a solution.
pub fn characteristic_lengths(sol: &BuchwaldSolution, r: f64) -> Steps {
    let mut radial_rate = 0.0f64;
    let mut eta_rate = 0.0f64;
    let mut axial_rate = rate(sol.axial.c);
    let mut time_rate = rate(sol.temporal.c);
    for t in &sol.terms {
        if !t.radial.is_zero() {
            radial_rate = radial_rate.max(rate(t.radial.helmholtz_lambda));
            eta_rate = eta_rate.max(rate(t.radial.eta));
        }
    }
    if !sol.chi.is_zero() {
        radial_rate = radial_rate.max(rate(sol.chi.radial.helmholtz_lambda));
        eta_rate = eta_rate.max(rate(sol.chi.radial.eta));
        axial_rate = axial_rate.max(rate(sol.chi.axial.c));
        time_rate = time_rate.max(rate(sol.chi.temporal.c));
    }
    let angular = 1.0 / eta_rate.max(1.0);
    let mut radial = r * angular;
    if radial_rate > 0.0 {
        radial = radial.min(1.0 / radial_rate);
    }
    Steps {
        h_r: radial,
        h_theta: angular,
        h_z: if axial_rate > 0.0 { 1.0 / axial_rate } else { 1.0 },
        h_t: if time_rate > 0.0 { 1.0 / time_rate } else { 1.0 },
    }
}

fn steps_for(sol: Option<&BuchwaldSolution>, rule: StepRule, p: &SpacetimePoint) -> Steps {
    match (rule, sol) {
        (StepRule::Fixed(s), _) => s,
        (StepRule::Auto { fraction }, Some(sol)) => {
            let mut s = characteristic_lengths(sol, p.r).scaled(fraction);
            s.h_r = s.h_r.min(0.1 * p.r);
            s
        }
        (StepRule::Auto { fraction }, None) => {
            let mut s = Steps::uniform(fraction);
            s.h_r = s.h_r.min(0.1 * p.r);
            s
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub max_abs: f64,
    pub max_rel: f64,
    pub worst_point: SpacetimePoint,
    pub field_scale: f64,
}

const D1: [(f64, f64); 4] = [
    (-2.0, 1.0 / 12.0),
    (-1.0, -8.0 / 12.0),
    (1.0, 8.0 / 12.0),
    (2.0, -1.0 / 12.0),
];
const D2: [(f64, f64); 4] = [
    (-2.0, -1.0 / 12.0),
    (-1.0, 16.0 / 12.0),
    (1.0, 16.0 / 12.0),
    (2.0, -1.0 / 12.0),
];
const D2_CENTER: f64 = -30.0 / 12.0;

fn shifted(p: &SpacetimePoint, axis: usize, d: f64) -> SpacetimePoint {
    let mut q = *p;
    match axis {
        0 => q.r += d,
        1 => q.theta += d,
        2 => q.z += d,
        _ => q.t += d,
    }
    q
}

/// First and second derivatives along each axis, and mixed rθ, rz, θz.
struct Derivs<const N: usize> {
    f: [f64; N],
    d1: [[f64; N]; 4],
    d2: [[f64; N]; 4],
    /// (r,θ), (r,z), (θ,z)
    mixed: [[f64; N]; 3],
}

fn derivs<const N: usize, E>(
    eval: &dyn Fn(&SpacetimePoint) -> Result<[f64; N], E>,
    p: &SpacetimePoint,
    h: &Steps,
    with_mixed: bool,
) -> Result<Derivs<N>, (SpacetimePoint, E)> {
    let at = |q: SpacetimePoint| eval(&q).map_err(|e| (q, e));
    let f = at(*p)?;
    let mut d1 = [[0.0; N]; 4];
    let mut d2 = [[0.0; N]; 4];
    for axis in 0..4 {
        let hh = h.get(axis);
        for k in 0..N {
            d2[axis][k] = D2_CENTER * f[k];
        }
        for (i, &(off, c1)) in D1.iter().enumerate() {
            let v = at(shifted(p, axis, off * hh))?;
            let c2 = D2[i].1;
            for k in 0..N {
                d1[axis][k] += c1 * v[k];
                d2[axis][k] += c2 * v[k];
            }
        }
        for k in 0..N {
            d1[axis][k] /= hh;
            d2[axis][k] /= hh * hh;
        }
    }
    let mut mixed = [[0.0; N]; 3];
    if with_mixed {
        for (slot, (a, b)) in [(0usize, 1usize), (0, 2), (1, 2)].into_iter().enumerate() {
            let (ha, hb) = (h.get(a), h.get(b));
            // (16 g(1) − g(2)) / (48 ha hb), g(s) the four-corner difference at scale s.
            for (s, w) in [(1.0, 16.0), (2.0, -1.0)] {
                for (sa, sb, sign) in [(1.0, 1.0, 1.0), (1.0, -1.0, -1.0), (-1.0, 1.0, -1.0), (-1.0, -1.0, 1.0)] {
                    let q = shifted(&shifted(p, a, sa * s * ha), b, sb * s * hb);
                    let v = at(q)?;
                    for k in 0..N {
                        mixed[slot][k] += w * sign * v[k];
                    }
                }
            }
            for m in mixed[slot].iter_mut() {
                *m /= 48.0 * ha * hb;
            }
        }
    }
    Ok(Derivs { f, d1, d2, mixed })
}

/// The three Navier-Lamé residual components at p and the magnitude of the
/// largest term that entered them.
fn nl_point<F: DisplacementField + ?Sized>(
    field: &F,
    p: &SpacetimePoint,
    h: &Steps,
) -> Result<([f64; 3], f64), VerifyError> {
    let eval = |q: &SpacetimePoint| field.displacement_at(q);
    let d =
        derivs::<3, FieldError>(&eval, p, h, true).map_err(|(point, source)| VerifyError::Field { point, source })?;
    let m = field.material();
    let (lam, mu, rho) = (m.lambda_lame, m.mu_lame, m.rho);
    let r = p.r;
    let (ur, ut, uz) = (0, 1, 2);
    let (ar, ath, az, at) = (0, 1, 2, 3);
    let lap = |k: usize| d.d2[ar][k] + d.d1[ar][k] / r + d.d2[ath][k] / (r * r) + d.d2[az][k];
    let vec_lap = [
        lap(ur) - d.f[ur] / (r * r) - 2.0 * d.d1[ath][ut] / (r * r),
        lap(ut) - d.f[ut] / (r * r) + 2.0 * d.d1[ath][ur] / (r * r),
        lap(uz),
    ];
    let (rth, rz, thz) = (0, 1, 2);
    let grad_div = [
        d.d2[ar][ur] + d.d1[ar][ur] / r - d.f[ur] / (r * r) + d.mixed[rth][ut] / r - d.d1[ath][ut] / (r * r)
            + d.mixed[rz][uz],
        (d.mixed[rth][ur] + d.d1[ath][ur] / r + d.d2[ath][ut] / r + d.mixed[thz][uz]) / r,
        d.mixed[rz][ur] + d.d1[az][ur] / r + d.mixed[thz][ut] / r + d.d2[az][uz],
    ];
    let mut res = [0.0; 3];
    let mut scale = 0.0f64;
    for i in 0..3 {
        let terms = [mu * vec_lap[i], (lam + mu) * grad_div[i], -rho * d.d2[at][i]];
        res[i] = terms.iter().sum();
        scale = scale.max(terms.iter().fold(0.0, |a, t| a.max(t.abs())));
    }
    Ok((res, scale))
}

/// Residual components (r, θ, z) at one point with explicit steps.
pub fn nl_residual_at<F: DisplacementField + ?Sized>(
    field: &F,
    p: &SpacetimePoint,
    steps: &Steps,
) -> Result<[f64; 3], VerifyError> {
    check_points(std::slice::from_ref(p), std::slice::from_ref(steps))?;
    nl_point(field, p, steps).map(|(r, _)| r)
}

fn check_points(points: &[SpacetimePoint], steps: &[Steps]) -> Result<(), VerifyError> {
    if points.is_empty() {
        return Err(VerifyError::NoPoints);
    }
    for (p, h) in points.iter().zip(steps) {
        h.validate()?;
        if p.r - 2.0 * h.h_r <= 0.0 {
            return Err(VerifyError::TooCloseToAxis { r: p.r, h_r: h.h_r });
        }
    }
    Ok(())
}

fn summarize(results: Vec<(SpacetimePoint, f64, f64)>) -> ResidualReport {
    let mut worst = results[0].0;
    let mut max_abs = 0.0f64;
    let mut scale = SCALE_FLOOR;
    for (p, abs, s) in results {
        if abs > max_abs {
            max_abs = abs;
            worst = p;
        }
        scale = scale.max(s);
    }
    ResidualReport {
        max_abs,
        max_rel: max_abs / scale,
        worst_point: worst,
        field_scale: scale,
    }
}

fn nl_residual_impl<F: DisplacementField + ?Sized>(
    field: &F,
    sol: Option<&BuchwaldSolution>,
    points: &[SpacetimePoint],
    rule: StepRule,
) -> Result<ResidualReport, VerifyError> {
    use rayon::prelude::*;
    let steps: Vec<Steps> = points.iter().map(|p| steps_for(sol, rule, p)).collect();
    check_points(points, &steps)?;
    let results = points
        .par_iter()
        .zip(steps.par_iter())
        .map(|(p, h)| {
            let (res, scale) = nl_point(field, p, h)?;
            Ok((*p, res.iter().fold(0.0f64, |a, r| a.max(r.abs())), scale))
        })
        .collect::<Result<Vec<_>, VerifyError>>()?;
    Ok(summarize(results))
}

/// Residual of μ∇²u + (λ+μ)∇(∇·u) − ρ ü by fourth-order central differences.
pub fn nl_residual<F: DisplacementField + ?Sized>(
    field: &F,
    points: &[SpacetimePoint],
    rule: StepRule,
) -> Result<ResidualReport, VerifyError> {
    nl_residual_impl(field, None, points, rule)
}

/// As [`nl_residual`], with automatic steps adapted to the solution's scales.
pub fn nl_residual_solution(
    sol: &BuchwaldSolution,
    points: &[SpacetimePoint],
    rule: StepRule,
) -> Result<ResidualReport, VerifyError> {
    nl_residual_impl(sol, Some(sol), points, rule)
}

/// Residuals of the coupled potential system
/// (λ+2μ)∇²Φ + (λ+μ)(Ψ_zz − Φ_zz) − ρΦ_tt = 0,
/// (λ+μ)(∇²Φ − Φ_zz) + μ∇²Ψ + (λ+μ)Ψ_zz − ρΨ_tt = 0,
/// μ∇²χ − ρχ_tt = 0.
pub fn potential_residual(
    sol: &BuchwaldSolution,
    points: &[SpacetimePoint],
    rule: StepRule,
) -> Result<ResidualReport, VerifyError> {
    use rayon::prelude::*;
    let steps: Vec<Steps> = points.iter().map(|p| steps_for(Some(sol), rule, p)).collect();
    check_points(points, &steps)?;
    let m = sol.material;
    let (lam, mu, rho) = (m.lambda_lame, m.mu_lame, m.rho);
    let results = points
        .par_iter()
        .zip(steps.par_iter())
        .map(|(p, h)| {
            let eval = |q: &SpacetimePoint| -> Result<[f64; 3], HelmholtzError> { sol.potentials(q) };
            let d = derivs::<3, HelmholtzError>(&eval, p, h, false).map_err(|(point, e)| VerifyError::Field {
                point,
                source: FieldError::Helmholtz(e),
            })?;
            let r = p.r;
            let lap_perp = |k: usize| d.d2[0][k] + d.d1[0][k] / r + d.d2[1][k] / (r * r);
            let (phi, psi, chi) = (0, 1, 2);
            let eqs = [
                vec![
                    (lam + 2.0 * mu) * (lap_perp(phi) + d.d2[2][phi]),
                    (lam + mu) * d.d2[2][psi],
                    -(lam + mu) * d.d2[2][phi],
                    -rho * d.d2[3][phi],
                ],
                vec![
                    (lam + mu) * lap_perp(phi),
                    mu * (lap_perp(psi) + d.d2[2][psi]),
                    (lam + mu) * d.d2[2][psi],
                    -rho * d.d2[3][psi],
                ],
                vec![mu * (lap_perp(chi) + d.d2[2][chi]), -rho * d.d2[3][chi]],
            ];
            let mut abs = 0.0f64;
            let mut scale = 0.0f64;
            for eq in &eqs {
                abs = abs.max(eq.iter().sum::<f64>().abs());
                scale = scale.max(eq.iter().fold(0.0, |a, t| a.max(t.abs())));
            }
            Ok((*p, abs, scale))
        })
        .collect::<Result<Vec<_>, VerifyError>>()?;
    Ok(summarize(results))
}

/// A field component addressed by boundary constraints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Component {
    UR,
    UTheta,
    UZ,
    SigmaRR,
    SigmaTT,
    SigmaZZ,
    SigmaRT,
    SigmaRZ,
    SigmaTZ,
}

impl Component {
    pub fn of(&self, s: &fields::FieldSample) -> f64 {
        let d = &s.displacement;
        let t = &s.stress;
        match self {
            Component::UR => d.u_r,
            Component::UTheta => d.u_theta,
            Component::UZ => d.u_z,
            Component::SigmaRR => t.sigma_rr,
            Component::SigmaTT => t.sigma_tt,
            Component::SigmaZZ => t.sigma_zz,
            Component::SigmaRT => t.sigma_rt,
            Component::SigmaRZ => t.sigma_rz,
            Component::SigmaTZ => t.sigma_tz,
        }
    }
}

type Target = Box<dyn Fn(&SpacetimePoint) -> f64 + Sync + Send>;

/// `component(p) = target(p)` on a set of boundary points.
pub struct Constraint {
    pub name: String,
    pub component: Component,
    pub target: Target,
    pub points: Vec<SpacetimePoint>,
    /// Prescribed amplitude used to normalize violations.
    pub amplitude: f64,
}

impl Constraint {
    pub fn new(
        name: impl Into<String>,
        component: Component,
        amplitude: f64,
        points: Vec<SpacetimePoint>,
        target: impl Fn(&SpacetimePoint) -> f64 + Sync + Send + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            component,
            target: Box::new(target),
            points,
            amplitude,
        }
    }

    /// Homogeneous condition `component = 0`.
    pub fn zero(name: impl Into<String>, component: Component, amplitude: f64, points: Vec<SpacetimePoint>) -> Self {
        Self::new(name, component, amplitude, points, |_| 0.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstraintReport {
    pub name: String,
    pub component: Component,
    pub max_abs: f64,
    /// max_abs / max(amplitude, floor)
    pub max_rel: f64,
    pub worst_point: Option<SpacetimePoint>,
    pub pass: bool,
}

/// Evaluate each constraint; evaluation failures count as infinite violations.
pub fn bc_check(sol: &BuchwaldSolution, constraints: &[Constraint], tol: f64) -> Vec<ConstraintReport> {
    use rayon::prelude::*;
    constraints
        .iter()
        .map(|c| {
            let errs: Vec<(SpacetimePoint, f64)> = c
                .points
                .par_iter()
                .map(|p| {
                    let v = fields::evaluate(sol, p)
                        .map(|s| (c.component.of(&s) - (c.target)(p)).abs())
                        .unwrap_or(f64::INFINITY);
                    (*p, if v.is_nan() { f64::INFINITY } else { v })
                })
                .collect();
            let mut max_abs = 0.0f64;
            let mut worst = None;
            for (p, e) in errs {
                if worst.is_none() || e > max_abs {
                    max_abs = max_abs.max(e);
                    worst = Some(p);
                }
            }
            let max_rel = max_abs / c.amplitude.abs().max(SCALE_FLOOR);
            ConstraintReport {
                name: c.name.clone(),
                component: c.component,
                max_abs,
                max_rel,
                worst_point: worst,
                pass: max_rel <= tol,
            }
        })
        .collect()
}
