//! Displacement and stress fields of a Buchwald solution.
//!
//! u = ∇Φ + ∇×(χ ẑ) + ẑ ∂_z(Ψ − Φ), so
//! u_r = Φ_r + χ_θ/r, u_θ = Φ_θ/r − χ_r, u_z = Ψ_z.
//! All derivatives are analytic; R'' comes from the radial equation.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::io::{self, Write};
use thiserror::Error;

use crate::buchwald::BuchwaldSolution;
use crate::helmholtz2d::{HelmholtzError, RadialJet};
use crate::model::SpacetimePoint;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FieldError {
    #[error("point has a non-finite coordinate")]
    NonFinite,
    #[error(transparent)]
    Helmholtz(#[from] HelmholtzError),
    #[error("field diverges on the axis: {0}")]
    AxisSingular(&'static str),
    #[error("solution is not theta-independent")]
    NotThetaIndependent,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct DisplacementSample {
    pub u_r: f64,
    pub u_theta: f64,
    pub u_z: f64,
}

impl DisplacementSample {
    pub fn as_array(&self) -> [f64; 3] {
        [self.u_r, self.u_theta, self.u_z]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct StressSample {
    pub sigma_rr: f64,
    pub sigma_tt: f64,
    pub sigma_zz: f64,
    pub sigma_rt: f64,
    pub sigma_rz: f64,
    pub sigma_tz: f64,
}

impl StressSample {
    pub fn as_array(&self) -> [f64; 6] {
        [
            self.sigma_rr,
            self.sigma_tt,
            self.sigma_zz,
            self.sigma_rt,
            self.sigma_rz,
            self.sigma_tz,
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldSample {
    pub point: SpacetimePoint,
    pub displacement: DisplacementSample,
    pub stress: StressSample,
}

/// A factor's [f, f', f''] with flags marking derivatives that vanish identically.
#[derive(Debug, Clone, Copy)]
struct Angular {
    v: [f64; 3],
    zero: [bool; 3],
}

/// Radial jet, angular part and the scalar multipliers of one separated term.
struct Local {
    jet: RadialJet,
    ang: Angular,
    /// [Z, Z', Z''] · T, pre-multiplied.
    zt: [f64; 3],
    phi_w: f64,
    psi_w: f64,
}

fn angular(f: &crate::factor::Factor, theta: f64) -> Angular {
    Angular {
        v: f.eval(theta),
        zero: [f.is_zero(), f.derivative_vanishes(), f.second_derivative_vanishes()],
    }
}

impl Local {
    /// rad · Θ^(k) · w · Z^(j)T, where a divergent radial entry is allowed only
    /// against an identically vanishing companion factor.
    fn prod(&self, rad: Option<f64>, k: usize, w: f64, j: usize, what: &'static str) -> Result<f64, FieldError> {
        let c = w * self.zt[j];
        if c == 0.0 || self.ang.zero[k] {
            return Ok(0.0);
        }
        rad.map(|r| r * self.ang.v[k] * c).ok_or(FieldError::AxisSingular(what))
    }
}

struct Locals {
    terms: Vec<Local>,
    chi: Option<Local>,
}

fn locals(sol: &BuchwaldSolution, p: &SpacetimePoint) -> Result<Locals, FieldError> {
    if !p.is_finite() {
        return Err(FieldError::NonFinite);
    }
    let z = sol.axial.eval(p.z);
    let t = sol.temporal.eval(p.t)[0];
    let mut terms = Vec::with_capacity(2);
    for term in &sol.terms {
        if term.radial.is_zero() || term.angular.is_zero() {
            continue;
        }
        terms.push(Local {
            jet: term.radial.jet(p.r)?,
            ang: angular(&term.angular.factor(), p.theta),
            zt: [z[0] * t, z[1] * t, z[2] * t],
            phi_w: term.phi_weight,
            psi_w: term.psi_weight,
        });
    }
    let chi = if sol.chi.is_zero() {
        None
    } else {
        let cz = sol.chi.axial.eval(p.z);
        let ct = sol.chi.temporal.eval(p.t)[0];
        Some(Local {
            jet: sol.chi.radial.jet(p.r)?,
            ang: angular(&sol.chi.angular.factor(), p.theta),
            zt: [cz[0] * ct, cz[1] * ct, cz[2] * ct],
            phi_w: 1.0,
            psi_w: 0.0,
        })
    };
    Ok(Locals { terms, chi })
}

/// Displacement gradient pieces needed by the stress relations.
#[derive(Debug, Default)]
struct Gradient {
    u: [f64; 3],
    ur_r: f64,
    ur_z: f64,
    /// (u_θ,θ + u_r)/r
    hoop: f64,
    /// u_r,θ/r + u_θ,r − u_θ/r
    shear_rt: f64,
    ut_z: f64,
    uz_r: f64,
    /// u_z,θ / r
    uz_t_over_r: f64,
    uz_z: f64,
}

fn add(a: Option<f64>, b: Option<f64>, scale_b: f64) -> Option<f64> {
    Some(a? + scale_b * b?)
}

fn displacement_from(l: &Locals) -> Result<[f64; 3], FieldError> {
    let mut u = [0.0; 3];
    for s in &l.terms {
        u[0] += s.prod(s.jet.d1, 0, s.phi_w, 0, "u_r")?;
        u[1] += s.prod(s.jet.over_r, 1, s.phi_w, 0, "u_theta")?;
        u[2] += s.prod(s.jet.value, 0, s.psi_w, 1, "u_z")?;
    }
    if let Some(c) = &l.chi {
        u[0] += c.prod(c.jet.over_r, 1, 1.0, 0, "u_r")?;
        u[1] -= c.prod(c.jet.d1, 0, 1.0, 0, "u_theta")?;
    }
    Ok(u)
}

fn gradient_from(l: &Locals) -> Result<Gradient, FieldError> {
    let mut g = Gradient {
        u: displacement_from(l)?,
        ..Default::default()
    };
    for s in &l.terms {
        let j = &s.jet;
        let w = s.phi_w;
        g.ur_r += s.prod(j.d2, 0, w, 0, "u_r,r")?;
        g.ur_z += s.prod(j.d1, 0, w, 1, "u_r,z")?;
        g.hoop += s.prod(j.over_r2, 2, w, 0, "u_theta,theta/r")?;
        g.hoop += s.prod(j.d1_over_r, 0, w, 0, "u_r/r")?;
        g.shear_rt += s.prod(j.d1_over_r, 1, w, 0, "u_r,theta/r")?;
        g.shear_rt += s.prod(add(j.d1_over_r, j.over_r2, -2.0), 1, w, 0, "u_theta,r")?;
        g.ut_z += s.prod(j.over_r, 1, w, 1, "u_theta,z")?;
        let gw = s.psi_w;
        g.uz_r += s.prod(j.d1, 0, gw, 1, "u_z,r")?;
        g.uz_t_over_r += s.prod(j.over_r, 1, gw, 1, "u_z,theta/r")?;
        g.uz_z += s.prod(j.value, 0, gw, 2, "u_z,z")?;
    }
    if let Some(c) = &l.chi {
        let j = &c.jet;
        // u_r = (χ_r/r) χ_θ', u_θ = −χ_r' χ_θ
        g.ur_r += c.prod(add(j.d1_over_r, j.over_r2, -1.0), 1, 1.0, 0, "u_r,r")?;
        g.ur_z += c.prod(j.over_r, 1, 1.0, 1, "u_r,z")?;
        g.hoop += c.prod(add(j.over_r2, j.d1_over_r, -1.0), 1, 1.0, 0, "hoop strain")?;
        g.shear_rt += c.prod(j.over_r2, 2, 1.0, 0, "u_r,theta/r")?;
        g.shear_rt -= c.prod(add(j.d2, j.d1_over_r, -1.0), 0, 1.0, 0, "u_theta,r")?;
        g.ut_z -= c.prod(j.d1, 0, 1.0, 1, "u_theta,z")?;
    }
    Ok(g)
}

fn stress_from(sol: &BuchwaldSolution, g: &Gradient) -> StressSample {
    let lam = sol.material.lambda_lame;
    let mu = sol.material.mu_lame;
    let p = lam + 2.0 * mu;
    StressSample {
        sigma_rr: p * g.ur_r + lam * g.hoop + lam * g.uz_z,
        sigma_tt: lam * g.ur_r + p * g.hoop + lam * g.uz_z,
        sigma_zz: lam * g.ur_r + lam * g.hoop + p * g.uz_z,
        sigma_rt: mu * g.shear_rt,
        sigma_rz: mu * (g.ur_z + g.uz_r),
        sigma_tz: mu * (g.ut_z + g.uz_t_over_r),
    }
}

fn to_displacement(u: [f64; 3]) -> DisplacementSample {
    DisplacementSample {
        u_r: u[0],
        u_theta: u[1],
        u_z: u[2],
    }
}

pub fn displacement(sol: &BuchwaldSolution, p: &SpacetimePoint) -> Result<DisplacementSample, FieldError> {
    Ok(to_displacement(displacement_from(&locals(sol, p)?)?))
}

pub fn stress(sol: &BuchwaldSolution, p: &SpacetimePoint) -> Result<StressSample, FieldError> {
    let g = gradient_from(&locals(sol, p)?)?;
    Ok(stress_from(sol, &g))
}

/// Displacement and stress in one pass.
pub fn evaluate(sol: &BuchwaldSolution, p: &SpacetimePoint) -> Result<FieldSample, FieldError> {
    let g = gradient_from(&locals(sol, p)?)?;
    Ok(FieldSample {
        point: *p,
        displacement: to_displacement(g.u),
        stress: stress_from(sol, &g),
    })
}

/// Reduced evaluator for solutions whose angular parts are constants C_s:
/// u_r = (Σ w_s C_s R_s') Z T, u_θ = −C₃ χ_r' χ_z χ_t, u_z = (Σ g_s C_s R_s) Z' T.
pub fn displacement_theta_independent(
    sol: &BuchwaldSolution,
    p: &SpacetimePoint,
) -> Result<DisplacementSample, FieldError> {
    if !sol.is_theta_independent() {
        return Err(FieldError::NotThetaIndependent);
    }
    if !p.is_finite() {
        return Err(FieldError::NonFinite);
    }
    let z = sol.axial.eval(p.z);
    let t = sol.temporal.eval(p.t)[0];
    let mut radial_sum = 0.0;
    let mut axial_sum = 0.0;
    for term in &sol.terms {
        let c = term.angular.coeff_c;
        if term.radial.is_zero() || c == 0.0 {
            continue;
        }
        let jet = term.radial.jet(p.r)?;
        if term.phi_weight != 0.0 {
            radial_sum += term.phi_weight * c * jet.d1.ok_or(FieldError::AxisSingular("u_r"))?;
        }
        if term.psi_weight != 0.0 {
            axial_sum += term.psi_weight * c * jet.value.ok_or(FieldError::AxisSingular("u_z"))?;
        }
    }
    let mut u_theta = 0.0;
    if !sol.chi.is_zero() && sol.chi.angular.coeff_c != 0.0 {
        let d1 = sol.chi.radial.jet(p.r)?.d1.ok_or(FieldError::AxisSingular("u_theta"))?;
        u_theta = -sol.chi.angular.coeff_c * d1 * sol.chi.axial.eval(p.z)[0] * sol.chi.temporal.eval(p.t)[0];
    }
    Ok(DisplacementSample {
        u_r: radial_sum * z[0] * t,
        u_theta,
        u_z: axial_sum * z[1] * t,
    })
}

/// Evenly spaced samples on [start, end]; a single sample sits at `start`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub start: f64,
    pub end: f64,
    pub count: usize,
}

impl Axis {
    pub fn new(start: f64, end: f64, count: usize) -> Self {
        Self { start, end, count }
    }

    pub fn point(start: f64) -> Self {
        Self::new(start, start, 1)
    }

    pub fn value(&self, i: usize) -> f64 {
        if self.count <= 1 {
            self.start
        } else if i + 1 == self.count {
            self.end
        } else {
            self.start + (self.end - self.start) * i as f64 / (self.count - 1) as f64
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub r: Axis,
    pub theta: Axis,
    pub z: Axis,
    pub t: Axis,
}

impl GridSpec {
    pub fn len(&self) -> usize {
        self.r.count * self.theta.count * self.z.count * self.t.count
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Row-major: r varies slowest, t fastest.
    pub fn point(&self, index: usize) -> SpacetimePoint {
        let it = index % self.t.count;
        let rest = index / self.t.count;
        let iz = rest % self.z.count;
        let rest = rest / self.z.count;
        let ith = rest % self.theta.count;
        let ir = rest / self.theta.count;
        SpacetimePoint::new(
            self.r.value(ir),
            self.theta.value(ith),
            self.z.value(iz),
            self.t.value(it),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GridError {
    #[error("grid axis {0} is empty")]
    EmptyAxis(&'static str),
    #[error("grid axis {0} has a non-finite bound")]
    NonFiniteAxis(&'static str),
    #[error("{} of {total} grid points failed; first at index {}: {}", failures.len(), failures[0].0, failures[0].1)]
    Points {
        total: usize,
        failures: Vec<(usize, FieldError)>,
    },
}

pub fn sample_grid(sol: &BuchwaldSolution, grid: &GridSpec) -> Result<Vec<FieldSample>, GridError> {
    for (name, ax) in [("r", grid.r), ("theta", grid.theta), ("z", grid.z), ("t", grid.t)] {
        if ax.count == 0 {
            return Err(GridError::EmptyAxis(name));
        }
        if !(ax.start.is_finite() && ax.end.is_finite()) {
            return Err(GridError::NonFiniteAxis(name));
        }
    }
    let total = grid.len();
    let results: Vec<Result<FieldSample, FieldError>> = (0..total)
        .into_par_iter()
        .map(|i| evaluate(sol, &grid.point(i)))
        .collect();
    let mut rows = Vec::with_capacity(total);
    let mut failures = Vec::new();
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(s) => rows.push(s),
            Err(e) => failures.push((i, e)),
        }
    }
    if failures.is_empty() {
        Ok(rows)
    } else {
        Err(GridError::Points { total, failures })
    }
}

pub const CSV_HEADER: &str = "r,theta,z,t,u_r,u_t,u_z,s_rr,s_tt,s_zz,s_rt,s_rz,s_tz";

fn row_values(s: &FieldSample) -> [f64; 13] {
    let d = s.displacement.as_array();
    let st = s.stress.as_array();
    [
        s.point.r,
        s.point.theta,
        s.point.z,
        s.point.t,
        d[0],
        d[1],
        d[2],
        st[0],
        st[1],
        st[2],
        st[3],
        st[4],
        st[5],
    ]
}

/// 17 significant digits, so values round-trip exactly.
pub fn format_number(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_csv<W: Write>(rows: &[FieldSample], mut out: W) -> io::Result<()> {
    out.write_all(CSV_HEADER.as_bytes())?;
    out.write_all(b"\n")?;
    for s in rows {
        let line: Vec<String> = row_values(s).iter().map(|v| format_number(*v)).collect();
        out.write_all(line.join(",").as_bytes())?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// One JSON object per row keyed by the CSV column names.
pub fn write_json<W: Write>(rows: &[FieldSample], mut out: W) -> io::Result<()> {
    let keys: Vec<&str> = CSV_HEADER.split(',').collect();
    let records: Vec<serde_json::Map<String, serde_json::Value>> = rows
        .iter()
        .map(|s| {
            keys.iter()
                .zip(row_values(s))
                .map(|(k, v)| (k.to_string(), serde_json::Value::from(v)))
                .collect()
        })
        .collect();
    serde_json::to_writer_pretty(&mut out, &records)?;
    out.write_all(b"\n")
}
