//! Closed-form solvers for four forced-vibration boundary-value problems.
//!
//! * S: closed solid cylinder, simply supported ends, ω = c_L kπ/L.
//! * A: open clamped shell, linear circumferential variation, ω = c_T kπ/L.
//! * B: open clamped shell, exponential circumferential variation, ω = c_T kπ/L.
//! * C: open solid cylinder on 0 ≤ θ ≤ π/√101, arbitrary ω > 0.
//!
//! Every solver builds the field, checks the Navier-Lamé residual inside the
//! body and each boundary condition on random boundary points, and returns
//! only verified solutions.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::buchwald::{
    build_general, build_kappa_zero, BuchwaldError, BuchwaldSolution, ChiCoefficients, ChiConstants, ChiMode,
    PotentialCoefficients, TermCoefficients,
};
use crate::fields;
use crate::model::{finite, Material, ModalParams, ModelError, SpacetimePoint};
use crate::specfun::{bessel_i, bessel_j, BesselError, BesselOrder};
use crate::verify::{
    bc_check, nl_residual_solution, Component, Constraint, ConstraintReport, ResidualReport, StepRule, VerifyError,
};

/// Relative tolerance of the solvability and consistency checks.
pub const SOLVABILITY_TOL: f64 = 1e-10;

/// Angular order of Problem C.
pub const PROBLEM_C_ETA: f64 = 101.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BvpError {
    #[error("invalid input {field}: {reason}")]
    InvalidInput { field: &'static str, reason: String },
    #[error("no unique solution: {condition} (value {value:e})")]
    Solvability { condition: &'static str, value: f64 },
    #[error("inconsistent input {name}: given {given:e}, required {required:e}")]
    Inconsistent { name: String, given: f64, required: f64 },
    #[error("near-singular boundary system (determinant {determinant:e})")]
    Resonance { determinant: f64 },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Build(#[from] BuchwaldError),
    #[error(transparent)]
    Bessel(#[from] BesselError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("verification failed: {check} = {value:e} exceeds {tol:e}")]
    Verification { check: String, value: f64, tol: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProblemId {
    S,
    A,
    B,
    C,
}

/// Sampling and thresholds used to verify a solved problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerifyOptions {
    /// Random points per boundary constraint.
    pub boundary_points: usize,
    /// Random interior points for the Navier-Lamé residual.
    pub interior_points: usize,
    pub residual_tol: f64,
    pub boundary_tol: f64,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            boundary_points: 200,
            interior_points: 50,
            residual_tol: 1e-5,
            boundary_tol: 1e-9,
            seed: 0x5eed,
        }
    }
}

impl VerifyOptions {
    pub fn for_problem(id: ProblemId) -> Self {
        match id {
            ProblemId::C => Self {
                boundary_points: 500,
                boundary_tol: 1e-8,
                ..Self::default()
            },
            _ => Self::default(),
        }
    }
}

/// A solved and verified problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BvpSolution {
    pub problem: ProblemId,
    pub coefficients: BTreeMap<String, f64>,
    /// Boundary stresses the field requires (Problems A and B).
    pub required_stresses: BTreeMap<String, f64>,
    pub solution: BuchwaldSolution,
    pub residual: ResidualReport,
    pub boundary: Vec<ConstraintReport>,
}

fn positive(field: &'static str, v: f64) -> Result<(), BvpError> {
    finite(field, v)?;
    if v <= 0.0 {
        return Err(BvpError::InvalidInput {
            field,
            reason: format!("must be positive (got {v})"),
        });
    }
    Ok(())
}

fn mode(field: &'static str, k: u32) -> Result<f64, BvpError> {
    if k == 0 {
        return Err(BvpError::InvalidInput {
            field,
            reason: "must be a positive integer".into(),
        });
    }
    Ok(f64::from(k))
}

fn coeffs(items: &[(&str, f64)]) -> BTreeMap<String, f64> {
    // + 0.0 turns -0.0 into 0.0
    items.iter().map(|(k, v)| (k.to_string(), *v + 0.0)).collect()
}

struct Sampler(ChaCha8Rng);

impl Sampler {
    fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    fn in_range(&mut self, lo: f64, hi: f64) -> f64 {
        if lo == hi {
            lo
        } else {
            self.0.gen_range(lo..=hi)
        }
    }

    /// `n` points with each coordinate drawn from its range (or fixed).
    fn points(&mut self, n: usize, r: (f64, f64), th: (f64, f64), z: (f64, f64), t: (f64, f64)) -> Vec<SpacetimePoint> {
        (0..n)
            .map(|_| {
                SpacetimePoint::new(
                    self.in_range(r.0, r.1),
                    self.in_range(th.0, th.1),
                    self.in_range(z.0, z.1),
                    self.in_range(t.0, t.1),
                )
            })
            .collect()
    }
}

/// Largest displacement magnitude seen at the given points.
fn displacement_scale(sol: &BuchwaldSolution, points: &[SpacetimePoint]) -> f64 {
    points
        .iter()
        .filter_map(|p| fields::displacement(sol, p).ok())
        .flat_map(|d| d.as_array())
        .fold(0.0, |a, v| a.max(v.abs()))
}

fn verify(
    problem: ProblemId,
    sol: BuchwaldSolution,
    interior: &[SpacetimePoint],
    constraints: &[Constraint],
    coefficients: BTreeMap<String, f64>,
    required_stresses: BTreeMap<String, f64>,
    opts: &VerifyOptions,
) -> Result<BvpSolution, BvpError> {
    let residual = nl_residual_solution(&sol, interior, StepRule::default())?;
    if residual.max_rel > opts.residual_tol {
        return Err(BvpError::Verification {
            check: "navier-lame residual".into(),
            value: residual.max_rel,
            tol: opts.residual_tol,
        });
    }
    let boundary = bc_check(&sol, constraints, opts.boundary_tol);
    if let Some(bad) = boundary.iter().find(|c| !c.pass) {
        return Err(BvpError::Verification {
            check: bad.name.clone(),
            value: bad.max_rel,
            tol: opts.boundary_tol,
        });
    }
    Ok(BvpSolution {
        problem,
        coefficients,
        required_stresses,
        solution: sol,
        residual,
        boundary,
    })
}

/// Closed solid cylinder of length L and radius R with curved-surface stresses
/// σ_rr = 𝒜 sin(kπz/L) sin ωt, σ_rθ = ℬ sin(mπz/L), σ_rz = 𝒞 cos(kπz/L) sin ωt,
/// simply supported at z = 0, L.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemS {
    pub material: Material,
    pub length: f64,
    pub radius: f64,
    pub k: u32,
    pub m: u32,
    pub stress_a: f64,
    pub stress_b: f64,
    pub stress_c: f64,
}

/// Solved constants of Problem S.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProblemSCoefficients {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
}

impl ProblemS {
    fn validate(&self) -> Result<(), BvpError> {
        self.material.validate()?;
        positive("length", self.length)?;
        positive("radius", self.radius)?;
        mode("k", self.k)?;
        mode("m", self.m)?;
        finite("stress_a", self.stress_a)?;
        finite("stress_b", self.stress_b)?;
        finite("stress_c", self.stress_c)?;
        Ok(())
    }

    /// kπ/L.
    pub fn axial_wavenumber(&self) -> f64 {
        f64::from(self.k) * PI / self.length
    }

    /// mπ/L.
    pub fn torsional_wavenumber(&self) -> f64 {
        f64::from(self.m) * PI / self.length
    }

    /// ω = c_L kπ/L.
    pub fn omega(&self) -> f64 {
        self.material.longitudinal_speed() * self.axial_wavenumber()
    }

    /// α = √|Λ₂|.
    pub fn alpha(&self) -> f64 {
        let k = self.axial_wavenumber();
        let m = &self.material;
        (m.rho * self.omega().powi(2) / m.mu_lame - k * k).sqrt()
    }

    /// The 3×3 system for (A₁, A₂, A₃) from the curved-surface conditions.
    pub fn system(&self) -> Result<([[f64; 3]; 3], [f64; 3]), BvpError> {
        self.validate()?;
        let (lam, mu) = (self.material.lambda_lame, self.material.mu_lame);
        let k = self.axial_wavenumber();
        let mw = self.torsional_wavenumber();
        let alpha = self.alpha();
        let r = self.radius;
        let j1 = bessel_j(BesselOrder::real(1.0), alpha * r)?;
        // d/dr J₁(αr) at r = R
        let dj1 = alpha * j1.derivative;
        let i2 = bessel_i(BesselOrder::real(2.0), mw * r)?.value;
        Ok((
            [
                [-lam * k * k, -2.0 * mu * alpha * dj1, 0.0],
                [0.0, 0.0, -mu * mw * mw * i2],
                [0.0, lam * k * alpha * j1.value, 0.0],
            ],
            [self.stress_a, self.stress_b, self.stress_c],
        ))
    }

    /// Closed-form solution of [`ProblemS::system`].
    pub fn coefficients(&self) -> Result<ProblemSCoefficients, BvpError> {
        self.validate()?;
        let (lam, mu) = (self.material.lambda_lame, self.material.mu_lame);
        let k = self.axial_wavenumber();
        let mw = self.torsional_wavenumber();
        let alpha = self.alpha();
        let r = self.radius;
        if lam.abs() <= SOLVABILITY_TOL * self.material.p_wave_modulus() {
            return Err(BvpError::Solvability {
                condition: "lambda != 0",
                value: lam,
            });
        }
        let j1 = bessel_j(BesselOrder::real(1.0), alpha * r)?;
        if j1.value.abs() <= SOLVABILITY_TOL {
            return Err(BvpError::Solvability {
                condition: "J1(alpha R) != 0",
                value: j1.value,
            });
        }
        let i0 = bessel_i(BesselOrder::real(0.0), mw * r)?.value;
        let i2 = bessel_i(BesselOrder::real(2.0), mw * r)?.value;
        if i2.abs() <= SOLVABILITY_TOL * i0 {
            return Err(BvpError::Solvability {
                condition: "I2(m pi R / L) != 0",
                value: i2,
            });
        }
        let dj1 = alpha * j1.derivative;
        let (sa, sb, sc) = (self.stress_a, self.stress_b, self.stress_c);
        Ok(ProblemSCoefficients {
            a1: -(sa + 2.0 * mu * dj1 * sc / (lam * k * j1.value)) / (lam * k * k),
            a2: sc / (lam * k * alpha * j1.value),
            a3: -sb / (mu * mw * mw * i2),
        })
    }

    /// The field for given constants.
    pub fn build(&self, c: &ProblemSCoefficients) -> Result<BuchwaldSolution, BvpError> {
        let k = self.axial_wavenumber();
        let mw = self.torsional_wavenumber();
        let omega = self.omega();
        let params = ModalParams::new(-k * k, -omega * omega, 0.0);
        let chi = ChiMode::Independent {
            constants: ChiConstants::new(mw * mw, -mw * mw, 0.0),
            coefficients: ChiCoefficients {
                a: c.a3,
                c: 1.0,
                f: 1.0,
                g: 1.0,
                ..Default::default()
            },
        };
        Ok(build_general(
            &self.material,
            &params,
            &PotentialCoefficients {
                s1: TermCoefficients::new(c.a1, 0.0, 1.0, 0.0),
                s2: TermCoefficients::new(c.a2, 0.0, 1.0, 0.0),
                f: 1.0,
                h: 1.0,
                ..Default::default()
            },
            &chi,
        )?)
    }
}

pub fn solve_problem_s(p: &ProblemS, opts: &VerifyOptions) -> Result<BvpSolution, BvpError> {
    let c = p.coefficients()?;
    let sol = p.build(&c)?;
    let (l, r) = (p.length, p.radius);
    let k = p.axial_wavenumber();
    let mw = p.torsional_wavenumber();
    let omega = p.omega();
    let period = 2.0 * PI / omega;
    let n = opts.boundary_points;
    let mut s = Sampler::new(opts.seed);
    let full = (0.0, 2.0 * PI);
    let interior = s.points(opts.interior_points, (0.05 * r, r), full, (0.0, l), (0.0, period));
    let stress_amp = p.stress_a.abs().max(p.stress_b.abs()).max(p.stress_c.abs());
    let disp_amp = displacement_scale(&sol, &interior);
    let (sa, sb, sc) = (p.stress_a, p.stress_b, p.stress_c);
    let mut constraints = vec![
        Constraint::new(
            "sigma_rr(R)",
            Component::SigmaRR,
            stress_amp,
            s.points(n, (r, r), full, (0.0, l), (0.0, period)),
            move |q| sa * (k * q.z).sin() * (omega * q.t).sin(),
        ),
        Constraint::new(
            "sigma_rtheta(R)",
            Component::SigmaRT,
            stress_amp,
            s.points(n, (r, r), full, (0.0, l), (0.0, period)),
            move |q| sb * (mw * q.z).sin(),
        ),
        Constraint::new(
            "sigma_rz(R)",
            Component::SigmaRZ,
            stress_amp,
            s.points(n, (r, r), full, (0.0, l), (0.0, period)),
            move |q| sc * (k * q.z).cos() * (omega * q.t).sin(),
        ),
    ];
    for (zname, z) in [("0", 0.0), ("L", l)] {
        for (name, comp, amp) in [
            ("u_r", Component::UR, disp_amp),
            ("u_theta", Component::UTheta, disp_amp),
            ("sigma_zz", Component::SigmaZZ, stress_amp),
        ] {
            constraints.push(Constraint::zero(
                format!("{name}(z={zname})"),
                comp,
                amp,
                s.points(n, (0.0, r), full, (z, z), (0.0, period)),
            ));
        }
    }
    verify(
        ProblemId::S,
        sol,
        &interior,
        &constraints,
        coeffs(&[("A1", c.a1), ("A2", c.a2), ("A3", c.a3)]),
        BTreeMap::new(),
        opts,
    )
}

/// Open shell R₁ ≤ r ≤ R₂, θ₁ ≤ θ ≤ θ₂, 0 ≤ z ≤ L, clamped ends, with
/// u_r(r, θ_i) = 𝒰_i R/r sin(kπz/L) sin ωt on the circumferential faces.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemA {
    pub material: Material,
    pub length: f64,
    pub r1: f64,
    pub r2: f64,
    pub theta1: f64,
    pub theta2: f64,
    pub k: u32,
    pub u1: f64,
    pub u2: f64,
    /// Optional face stresses 𝒮₁, 𝒮₂; checked against the required values.
    #[serde(default)]
    pub s: Option<[f64; 2]>,
}

fn check_shell(
    material: &Material,
    length: f64,
    r1: f64,
    r2: f64,
    theta1: f64,
    theta2: f64,
    k: u32,
) -> Result<(), BvpError> {
    material.validate()?;
    positive("length", length)?;
    positive("r1", r1)?;
    positive("r2", r2)?;
    finite("theta1", theta1)?;
    finite("theta2", theta2)?;
    mode("k", k)?;
    if r2 <= r1 {
        return Err(BvpError::InvalidInput {
            field: "r2",
            reason: format!("must exceed r1 (got r1 = {r1}, r2 = {r2})"),
        });
    }
    if !(0.0 <= theta1 && theta1 < theta2 && theta2 < 2.0 * PI) {
        return Err(BvpError::InvalidInput {
            field: "theta2",
            reason: format!("need 0 <= theta1 < theta2 < 2 pi (got {theta1}, {theta2})"),
        });
    }
    Ok(())
}

/// κ = −(kπ/L)², τ = −ω² with ω = c_T kπ/L, so that Λ₂ = 0.
fn shell_params(material: &Material, length: f64, k: u32, eta: f64) -> (ModalParams, f64, f64) {
    let kw = f64::from(k) * PI / length;
    let omega = material.transverse_speed() * kw;
    (ModalParams::new(-kw * kw, -omega * omega, eta), kw, omega)
}

fn shell_constraints(
    s: &mut Sampler,
    n: usize,
    geom: (f64, f64, f64, f64, f64),
    period: f64,
    disp_amp: f64,
) -> Vec<Constraint> {
    let (length, r1, r2, th1, th2) = geom;
    let mut out = Vec::new();
    for (zname, z) in [("0", 0.0), ("L", length)] {
        for (name, comp) in [
            ("u_r", Component::UR),
            ("u_theta", Component::UTheta),
            ("u_z", Component::UZ),
        ] {
            out.push(Constraint::zero(
                format!("{name}(z={zname})"),
                comp,
                disp_amp,
                s.points(n, (r1, r2), (th1, th2), (z, z), (0.0, period)),
            ));
        }
    }
    out
}

impl ProblemA {
    fn validate(&self) -> Result<(), BvpError> {
        check_shell(
            &self.material,
            self.length,
            self.r1,
            self.r2,
            self.theta1,
            self.theta2,
            self.k,
        )?;
        finite("u1", self.u1)?;
        finite("u2", self.u2)?;
        if self.u1 == self.u2 {
            return Err(BvpError::InvalidInput {
                field: "u2",
                reason: "the face displacements must differ".into(),
            });
        }
        Ok(())
    }

    pub fn mean_radius(&self) -> f64 {
        0.5 * (self.r1 + self.r2)
    }

    /// (C̄, D̄) fitted to the face displacements.
    pub fn constants(&self) -> Result<(f64, f64), BvpError> {
        self.validate()?;
        let span = self.theta2 - self.theta1;
        let r = self.mean_radius();
        Ok((
            (self.u1 * self.theta2 - self.u2 * self.theta1) * r / span,
            (self.u2 - self.u1) * r / span,
        ))
    }

    /// Curved- and circumferential-face stresses the solved field carries.
    pub fn required_stresses(&self) -> Result<BTreeMap<String, f64>, BvpError> {
        let (cb, db) = self.constants()?;
        let mu = self.material.mu_lame;
        let kw = f64::from(self.k) * PI / self.length;
        let r = self.mean_radius();
        let mut out = BTreeMap::new();
        for (i, ri, th) in [(1, self.r1, self.theta1), (2, self.r2, self.theta2)] {
            out.insert(format!("A{i}"), -2.0 * mu * cb / (ri * ri));
            out.insert(format!("B{i}"), -2.0 * mu * db / (ri * ri));
            out.insert(format!("C{i}"), -2.0 * mu * ri.ln() * db / (ri * ri));
            out.insert(format!("F{i}"), mu * kw * cb / ri);
            out.insert(format!("G{i}"), mu * kw * db / ri);
            out.insert(format!("S{i}"), 2.0 * mu * (cb + db * th) / (r * r));
        }
        Ok(out)
    }

    pub fn build(&self) -> Result<BuchwaldSolution, BvpError> {
        let (cb, db) = self.constants()?;
        let (params, _, _) = shell_params(&self.material, self.length, self.k, 0.0);
        // φ⊥ = (1 + ln r)(C̄ + D̄θ): Ā = A₂D₂ = D̄, B₂ = 1; χ vanishes.
        Ok(build_general(
            &self.material,
            &params,
            &PotentialCoefficients {
                s2: TermCoefficients::new(1.0, 1.0, cb, db),
                f: 1.0,
                h: 1.0,
                ..Default::default()
            },
            &ChiMode::zero(),
        )?)
    }
}

pub fn solve_problem_a(p: &ProblemA, opts: &VerifyOptions) -> Result<BvpSolution, BvpError> {
    let (cb, db) = p.constants()?;
    let table = p.required_stresses()?;
    if let Some(given) = p.s {
        for (i, g) in given.iter().enumerate() {
            finite("s", *g)?;
            let name = format!("S{}", i + 1);
            let want = table[&name];
            if (g - want).abs() > SOLVABILITY_TOL * want.abs().max(g.abs()) {
                return Err(BvpError::Inconsistent {
                    name,
                    given: *g,
                    required: want,
                });
            }
        }
    }
    let sol = p.build()?;
    let (_, kw, omega) = shell_params(&p.material, p.length, p.k, 0.0);
    let period = 2.0 * PI / omega;
    let (l, r1, r2, th1, th2) = (p.length, p.r1, p.r2, p.theta1, p.theta2);
    let rm = p.mean_radius();
    let n = opts.boundary_points;
    let mut s = Sampler::new(opts.seed);
    let pad = 0.05 * (r2 - r1);
    let interior = s.points(
        opts.interior_points,
        (r1 + pad, r2 - pad),
        (th1, th2),
        (0.0, l),
        (0.0, period),
    );
    let stress_amp = table.values().fold(0.0f64, |a, v| a.max(v.abs()));
    let disp_amp = p.u1.abs().max(p.u2.abs()) * rm / r1;
    let sz = move |q: &SpacetimePoint| (kw * q.z).sin() * (omega * q.t).sin();
    let cz = move |q: &SpacetimePoint| (kw * q.z).cos() * (omega * q.t).sin();
    let mut constraints = Vec::new();
    for (i, ri) in [(1, r1), (2, r2)] {
        let t = |key: &str| table[&format!("{key}{i}")];
        let (a, b, c, f, g) = (t("A"), t("B"), t("C"), t("F"), t("G"));
        let mut face = || s.points(n, (ri, ri), (th1, th2), (0.0, l), (0.0, period));
        constraints.push(Constraint::new(
            format!("sigma_rr(R{i})"),
            Component::SigmaRR,
            stress_amp,
            face(),
            move |q| (a + b * q.theta) * sz(q),
        ));
        constraints.push(Constraint::new(
            format!("sigma_rtheta(R{i})"),
            Component::SigmaRT,
            stress_amp,
            face(),
            move |q| c * sz(q),
        ));
        constraints.push(Constraint::new(
            format!("sigma_rz(R{i})"),
            Component::SigmaRZ,
            stress_amp,
            face(),
            move |q| (f + g * q.theta) * cz(q),
        ));
    }
    for (i, th, u) in [(1, th1, p.u1), (2, th2, p.u2)] {
        let si = table[&format!("S{i}")];
        let mut face = || s.points(n, (r1, r2), (th, th), (0.0, l), (0.0, period));
        constraints.push(Constraint::new(
            format!("u_r(theta{i})"),
            Component::UR,
            disp_amp,
            face(),
            move |q| u * rm / q.r * sz(q),
        ));
        constraints.push(Constraint::zero(
            format!("u_z(theta{i})"),
            Component::UZ,
            disp_amp,
            face(),
        ));
        constraints.push(Constraint::new(
            format!("sigma_thetatheta(theta{i})"),
            Component::SigmaTT,
            stress_amp,
            face(),
            move |q| si * rm * rm / (q.r * q.r) * sz(q),
        ));
    }
    constraints.extend(shell_constraints(&mut s, n, (l, r1, r2, th1, th2), period, disp_amp));
    verify(
        ProblemId::A,
        sol,
        &interior,
        &constraints,
        coeffs(&[("C_bar", cb), ("D_bar", db), ("A_bar", db), ("C3", 0.0)]),
        table,
        opts,
    )
}

/// Open shell as in Problem A with u_r, u_θ on the faces θ_i proportional to
/// 𝒟_i R sin(β ln r)/r and 𝒟_i R cos(β ln r)/r, where 𝒟₂ = 𝒟₁e^{−β(θ₂−θ₁)}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemB {
    pub material: Material,
    pub length: f64,
    pub r1: f64,
    pub r2: f64,
    pub theta1: f64,
    pub theta2: f64,
    pub k: u32,
    pub beta: f64,
    pub d1: f64,
    /// Optional; derived from d1 when absent and checked when present.
    #[serde(default)]
    pub d2: Option<f64>,
}

impl ProblemB {
    fn validate(&self) -> Result<(), BvpError> {
        check_shell(
            &self.material,
            self.length,
            self.r1,
            self.r2,
            self.theta1,
            self.theta2,
            self.k,
        )?;
        positive("beta", self.beta)?;
        finite("d1", self.d1)?;
        if let Some(d2) = self.d2 {
            finite("d2", d2)?;
            let want = self.d2_required();
            if (d2 - want).abs() > 1e-12 * want.abs().max(d2.abs()) {
                return Err(BvpError::Inconsistent {
                    name: "d2".into(),
                    given: d2,
                    required: want,
                });
            }
        }
        Ok(())
    }

    pub fn mean_radius(&self) -> f64 {
        0.5 * (self.r1 + self.r2)
    }

    /// 𝒟₁e^{−β(θ₂−θ₁)}.
    pub fn d2_required(&self) -> f64 {
        self.d1 * (-self.beta * (self.theta2 - self.theta1)).exp()
    }

    /// C̄ from each face: (𝒟₁e^{βθ₁}R, 𝒟₂e^{βθ₂}R).
    pub fn c_bar_pair(&self) -> Result<(f64, f64), BvpError> {
        self.validate()?;
        let r = self.mean_radius();
        let d2 = self.d2.unwrap_or_else(|| self.d2_required());
        Ok((
            self.d1 * (self.beta * self.theta1).exp() * r,
            d2 * (self.beta * self.theta2).exp() * r,
        ))
    }

    pub fn c_bar(&self) -> Result<f64, BvpError> {
        Ok(self.c_bar_pair()?.0)
    }

    pub fn required_stresses(&self) -> Result<BTreeMap<String, f64>, BvpError> {
        let cb = self.c_bar()?;
        let mu = self.material.mu_lame;
        let kw = f64::from(self.k) * PI / self.length;
        let beta = self.beta;
        let mut out = BTreeMap::new();
        for (i, ri) in [(1, self.r1), (2, self.r2)] {
            let (s, c) = (beta * ri.ln()).sin_cos();
            out.insert(format!("A{i}"), 2.0 * mu / (ri * ri) * (beta * c - s) * cb);
            out.insert(format!("B{i}"), -2.0 * mu / (ri * ri) * (beta * s + c) * cb);
            out.insert(format!("C{i}"), mu * kw * s / ri * cb);
        }
        Ok(out)
    }

    pub fn build(&self) -> Result<BuchwaldSolution, BvpError> {
        let cb = self.c_bar()?;
        let beta = self.beta;
        let (params, _, _) = shell_params(&self.material, self.length, self.k, -beta * beta);
        // φ⊥ = cos(β ln r)·(−C̄/β)e^{−βθ}; χ vanishes.
        Ok(build_general(
            &self.material,
            &params,
            &PotentialCoefficients {
                s2: TermCoefficients::new(1.0, 0.0, -cb / beta, 0.0),
                f: 1.0,
                h: 1.0,
                ..Default::default()
            },
            &ChiMode::zero(),
        )?)
    }
}

pub fn solve_problem_b(p: &ProblemB, opts: &VerifyOptions) -> Result<BvpSolution, BvpError> {
    let cb = p.c_bar()?;
    let table = p.required_stresses()?;
    let sol = p.build()?;
    let (_, kw, omega) = shell_params(&p.material, p.length, p.k, 0.0);
    let period = 2.0 * PI / omega;
    let (l, r1, r2, th1, th2, beta) = (p.length, p.r1, p.r2, p.theta1, p.theta2, p.beta);
    let rm = p.mean_radius();
    let n = opts.boundary_points;
    let mut s = Sampler::new(opts.seed);
    let pad = 0.05 * (r2 - r1);
    let interior = s.points(
        opts.interior_points,
        (r1 + pad, r2 - pad),
        (th1, th2),
        (0.0, l),
        (0.0, period),
    );
    let decay_max = (-beta * th1).exp();
    let stress_amp = table.values().fold(0.0f64, |a, v| a.max(v.abs())) * decay_max;
    let d2 = p.d2.unwrap_or_else(|| p.d2_required());
    let disp_amp = p.d1.abs().max(d2.abs()) * rm / r1;
    let sz = move |q: &SpacetimePoint| (-beta * q.theta).exp() * (kw * q.z).sin() * (omega * q.t).sin();
    let cz = move |q: &SpacetimePoint| (-beta * q.theta).exp() * (kw * q.z).cos() * (omega * q.t).sin();
    let mut constraints = Vec::new();
    for (i, ri) in [(1, r1), (2, r2)] {
        let t = |key: &str| table[&format!("{key}{i}")];
        let (a, b, c) = (t("A"), t("B"), t("C"));
        let mut face = || s.points(n, (ri, ri), (th1, th2), (0.0, l), (0.0, period));
        constraints.push(Constraint::new(
            format!("sigma_rr(R{i})"),
            Component::SigmaRR,
            stress_amp,
            face(),
            move |q| a * sz(q),
        ));
        constraints.push(Constraint::new(
            format!("sigma_rtheta(R{i})"),
            Component::SigmaRT,
            stress_amp,
            face(),
            move |q| b * sz(q),
        ));
        constraints.push(Constraint::new(
            format!("sigma_rz(R{i})"),
            Component::SigmaRZ,
            stress_amp,
            face(),
            move |q| c * cz(q),
        ));
    }
    for (i, th, d) in [(1, th1, p.d1), (2, th2, d2)] {
        let mut face = || s.points(n, (r1, r2), (th, th), (0.0, l), (0.0, period));
        let st = move |q: &SpacetimePoint| (kw * q.z).sin() * (omega * q.t).sin();
        constraints.push(Constraint::new(
            format!("u_r(theta{i})"),
            Component::UR,
            disp_amp,
            face(),
            move |q| d * rm * (beta * q.r.ln()).sin() / q.r * st(q),
        ));
        constraints.push(Constraint::new(
            format!("u_theta(theta{i})"),
            Component::UTheta,
            disp_amp,
            face(),
            move |q| d * rm * (beta * q.r.ln()).cos() / q.r * st(q),
        ));
        constraints.push(Constraint::zero(
            format!("u_z(theta{i})"),
            Component::UZ,
            disp_amp,
            face(),
        ));
    }
    constraints.extend(shell_constraints(&mut s, n, (l, r1, r2, th1, th2), period, disp_amp));
    verify(
        ProblemId::B,
        sol,
        &interior,
        &constraints,
        coeffs(&[("C_bar", cb)]),
        table,
        opts,
    )
}

/// Open solid cylinder r ≤ R, 0 ≤ θ ≤ π/√101, 0 ≤ z ≤ L with
/// σ_rr(R) = 𝒜 sin(√101 θ) sin ωt and σ_rθ(R) = ℬ cos(√101 θ) sin ωt.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemC {
    pub material: Material,
    pub radius: f64,
    pub length: f64,
    pub omega: f64,
    pub stress_a: f64,
    pub stress_b: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProblemCCoefficients {
    pub a1: f64,
    pub a3: f64,
}

impl ProblemC {
    fn validate(&self) -> Result<(), BvpError> {
        self.material.validate()?;
        positive("radius", self.radius)?;
        positive("length", self.length)?;
        positive("omega", self.omega)?;
        finite("stress_a", self.stress_a)?;
        finite("stress_b", self.stress_b)?;
        Ok(())
    }

    /// π/√101.
    pub fn theta_max() -> f64 {
        PI / PROBLEM_C_ETA.sqrt()
    }

    /// (α₁, α₂) = (ω/c_L, ω/c_T).
    pub fn alphas(&self) -> (f64, f64) {
        let m = &self.material;
        let w2 = m.rho * self.omega * self.omega;
        ((w2 / m.p_wave_modulus()).sqrt(), (w2 / m.mu_lame).sqrt())
    }

    /// The 2×2 system for (A₁, A₃).
    pub fn system(&self) -> Result<([[f64; 2]; 2], [f64; 2]), BvpError> {
        self.validate()?;
        let (lam, mu) = (self.material.lambda_lame, self.material.mu_lame);
        let nu2 = PROBLEM_C_ETA;
        let nu = nu2.sqrt();
        let r = self.radius;
        let (a1, a2) = self.alphas();
        // J, dJ/dr, d²J/dr² of J_ν(αr) at r = R, the second from the Bessel equation.
        let jet = |alpha: f64| -> Result<[f64; 3], BvpError> {
            let x = alpha * r;
            let e = bessel_j(BesselOrder::real(nu), x)?;
            let d2 = -e.derivative / x - (1.0 - nu2 / (x * x)) * e.value;
            Ok([e.value, alpha * e.derivative, alpha * alpha * d2])
        };
        let [j1, dj1, ddj1] = jet(a1)?;
        let [j2, dj2, ddj2] = jet(a2)?;
        let p = self.material.p_wave_modulus();
        Ok((
            [
                [
                    p * ddj1 + lam / r * dj1 - nu2 * lam / (r * r) * j1,
                    2.0 * mu * nu / r * (j2 / r - dj2),
                ],
                [
                    2.0 * mu * nu / r * (dj1 - j1 / r),
                    mu * (-ddj2 + dj2 / r - nu2 / (r * r) * j2),
                ],
            ],
            [self.stress_a, self.stress_b],
        ))
    }

    pub fn coefficients(&self) -> Result<ProblemCCoefficients, BvpError> {
        let ([[a11, a12], [a21, a22]], [sa, sb]) = self.system()?;
        let det = a11 * a22 - a12 * a21;
        if det.abs() <= SOLVABILITY_TOL * ((a11 * a22).abs() + (a12 * a21).abs()) {
            return Err(BvpError::Resonance { determinant: det });
        }
        Ok(ProblemCCoefficients {
            a1: (a22 * sa - a12 * sb) / det,
            a3: (a11 * sb - a21 * sa) / det,
        })
    }

    pub fn build(&self, c: &ProblemCCoefficients) -> Result<BuchwaldSolution, BvpError> {
        let tau = -self.omega * self.omega;
        Ok(build_kappa_zero(
            &self.material,
            tau,
            PROBLEM_C_ETA,
            &PotentialCoefficients {
                s1: TermCoefficients::new(c.a1, 0.0, 0.0, 1.0),
                e: 1.0,
                h: 1.0,
                ..Default::default()
            },
            &ChiMode::prescribed(ChiCoefficients {
                a: c.a3,
                c: 1.0,
                e: 1.0,
                h: 1.0,
                ..Default::default()
            }),
        )?)
    }
}

pub fn solve_problem_c(p: &ProblemC, opts: &VerifyOptions) -> Result<BvpSolution, BvpError> {
    let c = p.coefficients()?;
    let sol = p.build(&c)?;
    let (r, l, omega) = (p.radius, p.length, p.omega);
    let th = ProblemC::theta_max();
    let nu = PROBLEM_C_ETA.sqrt();
    let period = 2.0 * PI / omega;
    let n = opts.boundary_points;
    let mut s = Sampler::new(opts.seed);
    let interior = s.points(opts.interior_points, (0.05 * r, r), (0.0, th), (0.0, l), (0.0, period));
    let stress_amp = p.stress_a.abs().max(p.stress_b.abs());
    let disp_amp = displacement_scale(&sol, &interior);
    let (sa, sb) = (p.stress_a, p.stress_b);
    let mut curved = || s.points(n, (r, r), (0.0, th), (0.0, l), (0.0, period));
    let mut constraints = vec![
        Constraint::new("sigma_rr(R)", Component::SigmaRR, stress_amp, curved(), move |q| {
            sa * (nu * q.theta).sin() * (omega * q.t).sin()
        }),
        Constraint::new("sigma_rtheta(R)", Component::SigmaRT, stress_amp, curved(), move |q| {
            sb * (nu * q.theta).cos() * (omega * q.t).sin()
        }),
        Constraint::zero("sigma_rz(R)", Component::SigmaRZ, stress_amp, curved()),
    ];
    for (zname, z) in [("0", 0.0), ("L", l)] {
        for (name, comp, amp) in [
            ("sigma_rz", Component::SigmaRZ, stress_amp),
            ("sigma_thetaz", Component::SigmaTZ, stress_amp),
            ("u_z", Component::UZ, disp_amp),
        ] {
            constraints.push(Constraint::zero(
                format!("{name}(z={zname})"),
                comp,
                amp,
                s.points(n, (0.0, r), (0.0, th), (z, z), (0.0, period)),
            ));
        }
    }
    for (tname, t) in [("0", 0.0), ("max", th)] {
        for (name, comp, amp) in [
            ("u_r", Component::UR, disp_amp),
            ("sigma_thetatheta", Component::SigmaTT, stress_amp),
            ("u_z", Component::UZ, disp_amp),
        ] {
            constraints.push(Constraint::zero(
                format!("{name}(theta={tname})"),
                comp,
                amp,
                s.points(n, (0.0, r), (t, t), (0.0, l), (0.0, period)),
            ));
        }
    }
    verify(
        ProblemId::C,
        sol,
        &interior,
        &constraints,
        coeffs(&[("A1", c.a1), ("A3", c.a3)]),
        BTreeMap::new(),
        opts,
    )
}

/// A problem document, tagged by `"problem": "S" | "A" | "B" | "C"`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "problem")]
pub enum ProblemSpec {
    S(ProblemS),
    A(ProblemA),
    B(ProblemB),
    C(ProblemC),
}

impl ProblemSpec {
    pub fn id(&self) -> ProblemId {
        match self {
            ProblemSpec::S(_) => ProblemId::S,
            ProblemSpec::A(_) => ProblemId::A,
            ProblemSpec::B(_) => ProblemId::B,
            ProblemSpec::C(_) => ProblemId::C,
        }
    }

    pub fn solve(&self, opts: &VerifyOptions) -> Result<BvpSolution, BvpError> {
        match self {
            ProblemSpec::S(p) => solve_problem_s(p, opts),
            ProblemSpec::A(p) => solve_problem_a(p, opts),
            ProblemSpec::B(p) => solve_problem_b(p, opts),
            ProblemSpec::C(p) => solve_problem_c(p, opts),
        }
    }
}
