//! Buchwald potential triples (Φ, Ψ, χ) in separated form.
//!
//! Φ = φ⊥ φ_z φ_t and Ψ = ψ⊥ φ_z φ_t with φ⊥ = Σ_s w_s R_s Θ_s and
//! ψ⊥ = Σ_s g_s R_s Θ_s, where ∇⊥²(R_s Θ_s) = Λ_s R_s Θ_s. For κ ≠ 0 the
//! weights are w = (1, 1), g = (γ₁, γ₂); for κ = 0 they are w = (1, 0),
//! g = (1, 1). The third potential χ = χ_r χ_θ χ_z χ_t solves μ∇²χ = ρχ_tt.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::factor::Factor;
use crate::helmholtz2d::{AngularBranch, HelmholtzError, RadialBranch};
use crate::model::{finite, validate_modal, Material, ModalParams, ModelError, SolutionCase, SpacetimePoint};

/// Roots below this fraction of their natural scale are treated as exactly zero.
pub const ROOT_SNAP_REL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BuchwaldError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Helmholtz(#[from] HelmholtzError),
    #[error("kappa = 0 must be built with build_kappa_zero")]
    KappaZero,
    #[error("chi constants violate upsilon_r + upsilon_z = upsilon_t ({upsilon_r} + {upsilon_z} != {upsilon_t})")]
    ChiConstraint {
        upsilon_t: f64,
        upsilon_z: f64,
        upsilon_r: f64,
    },
}

fn snap(value: f64, scale: f64) -> f64 {
    if value.abs() <= ROOT_SNAP_REL * scale {
        0.0
    } else {
        value
    }
}

/// Roots of a₂Λ² + a₁Λ + a₀ = 0 together with its coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LambdaRoots {
    pub lambda1: f64,
    pub lambda2: f64,
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
}

impl LambdaRoots {
    /// |a₂Λ² + a₁Λ + a₀| / (|a₂Λ²| + |a₁Λ| + |a₀|) for each root.
    pub fn quadratic_residual(&self) -> [f64; 2] {
        [self.lambda1, self.lambda2].map(|l| {
            let terms = [self.a2 * l * l, self.a1 * l, self.a0];
            let scale: f64 = terms.iter().map(|t| t.abs()).sum();
            if scale == 0.0 {
                0.0
            } else {
                terms.iter().sum::<f64>().abs() / scale
            }
        })
    }
}

/// Helmholtz constants for κ ≠ 0: Λ₁ = ρτ/(λ+2μ) − κ, Λ₂ = ρτ/μ − κ.
pub fn lambda_roots(material: &Material, kappa: f64, tau: f64) -> LambdaRoots {
    let (lam, mu, rho) = (material.lambda_lame, material.mu_lame, material.rho);
    let p = material.p_wave_modulus();
    let l1_shift = rho * tau / p;
    let l2_shift = rho * tau / mu;
    LambdaRoots {
        lambda1: snap(l1_shift - kappa, l1_shift.abs().max(kappa.abs())),
        lambda2: snap(l2_shift - kappa, l2_shift.abs().max(kappa.abs())),
        a2: mu * p,
        a1: 2.0 * mu * p * kappa - (lam + 3.0 * mu) * rho * tau,
        a0: (mu * kappa - rho * tau) * (p * kappa - rho * tau),
    }
}

/// Λ₁⁽⁰⁾ = ρτ/(λ+2μ) and Λ₂⁽⁰⁾ = ρτ/μ for κ = 0.
pub fn kappa_zero_constants(material: &Material, tau: f64) -> (f64, f64) {
    (
        material.rho * tau / material.p_wave_modulus(),
        material.rho * tau / material.mu_lame,
    )
}

/// ψ⊥ coupling: γ₁ = 1, γ₂ = (κ − ρτ/μ)/κ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaPair {
    pub gamma1: f64,
    pub gamma2: f64,
}

pub fn gamma_pair(material: &Material, kappa: f64, tau: f64) -> Result<GammaPair, BuchwaldError> {
    if kappa == 0.0 {
        return Err(BuchwaldError::KappaZero);
    }
    let roots = lambda_roots(material, kappa, tau);
    // γ₂ = −Λ₂/κ, so a snapped root gives exactly zero coupling.
    let gamma2 = if roots.lambda2 == 0.0 {
        0.0
    } else {
        (kappa - material.rho * tau / material.mu_lame) / kappa
    };
    Ok(GammaPair { gamma1: 1.0, gamma2 })
}

/// Separation constants of χ: χ_z'' = υ_z χ_z, χ_t'' = c_T² υ_t χ_t,
/// χ_θ'' = −υ_θ χ_θ, and χ_r on the Helmholtz branch with Λ = υ_r.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChiConstants {
    upsilon_t: f64,
    upsilon_z: f64,
    upsilon_theta: f64,
    upsilon_r: f64,
}

impl ChiConstants {
    /// υ_t is derived as υ_r + υ_z.
    pub fn new(upsilon_r: f64, upsilon_z: f64, upsilon_theta: f64) -> Self {
        Self {
            upsilon_t: upsilon_r + upsilon_z,
            upsilon_z,
            upsilon_theta,
            upsilon_r,
        }
    }

    /// Accepts all four constants; the constraint must hold to 1e-12
    /// relative, after which υ_t is re-derived so it holds exactly.
    pub fn from_parts(
        upsilon_t: f64,
        upsilon_z: f64,
        upsilon_theta: f64,
        upsilon_r: f64,
    ) -> Result<Self, BuchwaldError> {
        finite("upsilon_t", upsilon_t)?;
        finite("upsilon_z", upsilon_z)?;
        finite("upsilon_theta", upsilon_theta)?;
        finite("upsilon_r", upsilon_r)?;
        let scale = upsilon_t.abs().max(upsilon_z.abs()).max(upsilon_r.abs());
        if (upsilon_r + upsilon_z - upsilon_t).abs() > 1e-12 * scale {
            return Err(BuchwaldError::ChiConstraint {
                upsilon_t,
                upsilon_z,
                upsilon_r,
            });
        }
        Ok(Self::new(upsilon_r, upsilon_z, upsilon_theta))
    }

    /// (ρτ/μ, κ, η, ρτ/μ − κ), with υ_r equal to the stored second root.
    pub fn prescribed(material: &Material, params: &ModalParams) -> Self {
        let upsilon_r = if params.kappa == 0.0 {
            kappa_zero_constants(material, params.tau).1
        } else {
            lambda_roots(material, params.kappa, params.tau).lambda2
        };
        Self::new(upsilon_r, params.kappa, params.eta)
    }

    pub fn upsilon_t(&self) -> f64 {
        self.upsilon_t
    }
    pub fn upsilon_z(&self) -> f64 {
        self.upsilon_z
    }
    pub fn upsilon_theta(&self) -> f64 {
        self.upsilon_theta
    }
    pub fn upsilon_r(&self) -> f64 {
        self.upsilon_r
    }
}

impl<'de> Deserialize<'de> for ChiConstants {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            upsilon_t: f64,
            upsilon_z: f64,
            upsilon_theta: f64,
            upsilon_r: f64,
        }
        let r = Raw::deserialize(d)?;
        ChiConstants::from_parts(r.upsilon_t, r.upsilon_z, r.upsilon_theta, r.upsilon_r)
            .map_err(serde::de::Error::custom)
    }
}

/// {A, B} radial and {C, D} angular coefficients of one transverse term.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TermCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl TermCoefficients {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self { a, b, c, d }
    }
}

/// Coefficients of Φ and Ψ: two transverse terms, axial (E, F), temporal (G, H).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PotentialCoefficients {
    pub s1: TermCoefficients,
    pub s2: TermCoefficients,
    pub e: f64,
    pub f: f64,
    pub g: f64,
    pub h: f64,
}

/// {A₃, B₃, C₃, D₃, Ẽ, F̃, G̃, H̃}.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ChiCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
    pub g: f64,
    pub h: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum ChiMode {
    /// Separation constants fixed to (ρτ/μ, κ, η, ρτ/μ − κ).
    Prescribed { coefficients: ChiCoefficients },
    /// Explicit separation constants.
    Independent {
        constants: ChiConstants,
        coefficients: ChiCoefficients,
    },
}

impl ChiMode {
    pub fn prescribed(coefficients: ChiCoefficients) -> Self {
        ChiMode::Prescribed { coefficients }
    }

    pub fn zero() -> Self {
        ChiMode::prescribed(ChiCoefficients::default())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChiModeTag {
    Prescribed,
    Independent,
}

/// R_s Θ_s with its weights in φ⊥ and ψ⊥.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransverseTerm {
    pub radial: RadialBranch,
    pub angular: AngularBranch,
    pub phi_weight: f64,
    pub psi_weight: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChiPart {
    pub constants: ChiConstants,
    pub radial: RadialBranch,
    pub angular: AngularBranch,
    pub axial: Factor,
    pub temporal: Factor,
}

impl ChiPart {
    pub fn is_zero(&self) -> bool {
        self.radial.is_zero() || self.angular.is_zero() || self.axial.is_zero() || self.temporal.is_zero()
    }
}

/// Build χ from explicit separation constants.
pub fn chi_separated(
    material: &Material,
    constants: ChiConstants,
    coefficients: &ChiCoefficients,
) -> Result<ChiPart, BuchwaldError> {
    material.validate()?;
    check_coefficients(&[
        ("chi.a", coefficients.a),
        ("chi.b", coefficients.b),
        ("chi.c", coefficients.c),
        ("chi.d", coefficients.d),
        ("chi.e", coefficients.e),
        ("chi.f", coefficients.f),
        ("chi.g", coefficients.g),
        ("chi.h", coefficients.h),
    ])?;
    let c_t2 = material.mu_lame / material.rho;
    Ok(ChiPart {
        constants,
        radial: RadialBranch::new(
            constants.upsilon_r,
            constants.upsilon_theta,
            coefficients.a,
            coefficients.b,
        ),
        angular: AngularBranch::new(constants.upsilon_theta, coefficients.c, coefficients.d),
        axial: Factor::new(constants.upsilon_z, coefficients.e, coefficients.f),
        temporal: Factor::new(constants.upsilon_t * c_t2, coefficients.g, coefficients.h),
    })
}

fn check_coefficients(items: &[(&'static str, f64)]) -> Result<(), BuchwaldError> {
    for &(name, v) in items {
        finite(name, v)?;
    }
    Ok(())
}

/// A fully determined potential triple.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BuchwaldSolution {
    pub material: Material,
    pub params: ModalParams,
    pub case: SolutionCase,
    /// Helmholtz constants of the two transverse terms.
    pub lambda1: f64,
    pub lambda2: f64,
    /// Present for κ ≠ 0.
    pub gamma: Option<GammaPair>,
    pub terms: [TransverseTerm; 2],
    /// φ_z = ψ_z.
    pub axial: Factor,
    /// φ_t = ψ_t.
    pub temporal: Factor,
    pub chi: ChiPart,
    pub chi_mode: ChiModeTag,
}

fn transverse(lambda: f64, eta: f64, c: &TermCoefficients, phi_weight: f64, psi_weight: f64) -> TransverseTerm {
    TransverseTerm {
        radial: RadialBranch::new(lambda, eta, c.a, c.b),
        angular: AngularBranch::new(eta, c.c, c.d),
        phi_weight,
        psi_weight,
    }
}

fn check_potential_coefficients(c: &PotentialCoefficients) -> Result<(), BuchwaldError> {
    check_coefficients(&[
        ("s1.a", c.s1.a),
        ("s1.b", c.s1.b),
        ("s1.c", c.s1.c),
        ("s1.d", c.s1.d),
        ("s2.a", c.s2.a),
        ("s2.b", c.s2.b),
        ("s2.c", c.s2.c),
        ("s2.d", c.s2.d),
        ("e", c.e),
        ("f", c.f),
        ("g", c.g),
        ("h", c.h),
    ])
}

fn build_chi(material: &Material, params: &ModalParams, chi: &ChiMode) -> Result<(ChiPart, ChiModeTag), BuchwaldError> {
    match chi {
        ChiMode::Prescribed { coefficients } => Ok((
            chi_separated(material, ChiConstants::prescribed(material, params), coefficients)?,
            ChiModeTag::Prescribed,
        )),
        ChiMode::Independent {
            constants,
            coefficients,
        } => Ok((
            chi_separated(material, *constants, coefficients)?,
            ChiModeTag::Independent,
        )),
    }
}

/// κ ≠ 0 construction.
pub fn build_general(
    material: &Material,
    params: &ModalParams,
    coefficients: &PotentialCoefficients,
    chi: &ChiMode,
) -> Result<BuchwaldSolution, BuchwaldError> {
    if params.kappa == 0.0 {
        return Err(BuchwaldError::KappaZero);
    }
    validate_modal(material, params)?;
    check_potential_coefficients(coefficients)?;
    let roots = lambda_roots(material, params.kappa, params.tau);
    let gamma = gamma_pair(material, params.kappa, params.tau)?;
    let (chi, chi_mode) = build_chi(material, params, chi)?;
    let eta = params.eta;
    Ok(BuchwaldSolution {
        material: *material,
        params: *params,
        case: SolutionCase::General,
        lambda1: roots.lambda1,
        lambda2: roots.lambda2,
        gamma: Some(gamma),
        terms: [
            transverse(roots.lambda1, eta, &coefficients.s1, 1.0, gamma.gamma1),
            transverse(roots.lambda2, eta, &coefficients.s2, 1.0, gamma.gamma2),
        ],
        axial: Factor::new(params.kappa, coefficients.e, coefficients.f),
        temporal: Factor::new(params.tau, coefficients.g, coefficients.h),
        chi,
        chi_mode,
    })
}

/// κ = 0 construction: φ⊥ = R₁Θ₁, ψ⊥ = R₁Θ₁ + R₂Θ₂, φ_z = ψ_z = E + Fz.
pub fn build_kappa_zero(
    material: &Material,
    tau: f64,
    eta: f64,
    coefficients: &PotentialCoefficients,
    chi: &ChiMode,
) -> Result<BuchwaldSolution, BuchwaldError> {
    let params = ModalParams::new(0.0, tau, eta);
    validate_modal(material, &params)?;
    check_potential_coefficients(coefficients)?;
    let (l1, l2) = kappa_zero_constants(material, tau);
    let (chi, chi_mode) = build_chi(material, &params, chi)?;
    Ok(BuchwaldSolution {
        material: *material,
        params,
        case: SolutionCase::KappaZero,
        lambda1: l1,
        lambda2: l2,
        gamma: None,
        terms: [
            transverse(l1, eta, &coefficients.s1, 1.0, 1.0),
            transverse(l2, eta, &coefficients.s2, 0.0, 1.0),
        ],
        axial: Factor::new(0.0, coefficients.e, coefficients.f),
        temporal: Factor::new(tau, coefficients.g, coefficients.h),
        chi,
        chi_mode,
    })
}

/// Dispatch on κ.
pub fn build(
    material: &Material,
    params: &ModalParams,
    coefficients: &PotentialCoefficients,
    chi: &ChiMode,
) -> Result<BuchwaldSolution, BuchwaldError> {
    if params.kappa == 0.0 {
        build_kappa_zero(material, params.tau, params.eta, coefficients, chi)
    } else {
        build_general(material, params, coefficients, chi)
    }
}

impl BuchwaldSolution {
    /// Replace the ψ⊥ weights (used to study deliberately inconsistent fields).
    pub fn with_psi_weights(mut self, g1: f64, g2: f64) -> Self {
        self.terms[0].psi_weight = g1;
        self.terms[1].psi_weight = g2;
        self
    }

    /// (φ⊥, ψ⊥) at (r, θ), r > 0 or regular on the axis.
    pub fn transverse_potentials(&self, r: f64, theta: f64) -> Result<(f64, f64), HelmholtzError> {
        let mut phi = 0.0;
        let mut psi = 0.0;
        for term in &self.terms {
            if term.radial.is_zero() || term.angular.is_zero() {
                continue;
            }
            let rv = term
                .radial
                .jet(r)?
                .value
                .ok_or(HelmholtzError::Singular { term: "R", r })?;
            let th = term.angular.factor().eval(theta)[0];
            phi += term.phi_weight * rv * th;
            psi += term.psi_weight * rv * th;
        }
        Ok((phi, psi))
    }

    /// (Φ, Ψ, χ) at a point.
    pub fn potentials(&self, p: &SpacetimePoint) -> Result<[f64; 3], HelmholtzError> {
        let (phi_t, psi_t) = self.transverse_potentials(p.r, p.theta)?;
        let zt = self.axial.eval(p.z)[0] * self.temporal.eval(p.t)[0];
        let chi = if self.chi.is_zero() {
            0.0
        } else {
            let rv = self
                .chi
                .radial
                .jet(p.r)?
                .value
                .ok_or(HelmholtzError::Singular { term: "chi_r", r: p.r })?;
            rv * self.chi.angular.factor().eval(p.theta)[0]
                * self.chi.axial.eval(p.z)[0]
                * self.chi.temporal.eval(p.t)[0]
        };
        Ok([phi_t * zt, psi_t * zt, chi])
    }

    /// True when every angular factor is constant in θ.
    pub fn is_theta_independent(&self) -> bool {
        let angular_const = |a: &AngularBranch| a.is_zero() || a.factor().derivative_vanishes();
        self.terms
            .iter()
            .all(|t| t.radial.is_zero() || angular_const(&t.angular))
            && (self.chi.is_zero() || angular_const(&self.chi.angular))
    }
}
