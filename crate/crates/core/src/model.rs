//! Shared domain types: the elastic medium, the separation parameters that
//! pick a solution family, and points in cylindrical spacetime.
//!
//! All quantities are SI. Every type here is a plain `Copy` value object.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::buchwald;

/// Largest integer whose square is tested when flagging `eta = N^2`.
const MAX_SQUARE_ROOT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("{name} must be finite (got {value})")]
    NonFinite { name: &'static str, value: f64 },
    #[error("tau must be nonzero")]
    ZeroTau,
    #[error("invalid material: {0}")]
    Material(String),
}

/// Isotropic linear-elastic medium.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Material {
    /// First Lamé constant λ, Pa.
    pub lambda_lame: f64,
    /// Shear modulus μ, Pa.
    pub mu_lame: f64,
    /// Density, kg/m³.
    pub rho: f64,
}

impl Material {
    pub fn new(lambda_lame: f64, mu_lame: f64, rho: f64) -> Result<Self, ModelError> {
        let m = Self {
            lambda_lame,
            mu_lame,
            rho,
        };
        m.validate()?;
        Ok(m)
    }

    /// A structural steel (λ = 115 GPa, μ = 77 GPa, ρ = 7850 kg/m³).
    pub fn steel() -> Self {
        Self {
            lambda_lame: 115e9,
            mu_lame: 77e9,
            rho: 7850.0,
        }
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        finite("lambda_lame", self.lambda_lame)?;
        finite("mu_lame", self.mu_lame)?;
        finite("rho", self.rho)?;
        if self.mu_lame <= 0.0 {
            return Err(ModelError::Material(format!(
                "mu_lame must be positive (got {})",
                self.mu_lame
            )));
        }
        if self.rho <= 0.0 {
            return Err(ModelError::Material(format!("rho must be positive (got {})", self.rho)));
        }
        if self.p_wave_modulus() <= 0.0 {
            return Err(ModelError::Material(format!(
                "lambda + 2 mu must be positive (got {})",
                self.p_wave_modulus()
            )));
        }
        Ok(())
    }

    /// λ + 2μ.
    pub fn p_wave_modulus(&self) -> f64 {
        self.lambda_lame + 2.0 * self.mu_lame
    }

    /// c_T = sqrt(μ/ρ).
    pub fn transverse_speed(&self) -> f64 {
        (self.mu_lame / self.rho).sqrt()
    }

    /// c_L = sqrt((λ+2μ)/ρ).
    pub fn longitudinal_speed(&self) -> f64 {
        (self.p_wave_modulus() / self.rho).sqrt()
    }
}

/// Separation constants: φ_z'' = κ φ_z, φ_t'' = τ φ_t, Θ'' = −η Θ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModalParams {
    /// Axial constant κ, 1/m².
    pub kappa: f64,
    /// Time constant τ, 1/s². Never zero.
    pub tau: f64,
    /// Angular constant η (dimensionless).
    pub eta: f64,
}

impl ModalParams {
    pub fn new(kappa: f64, tau: f64, eta: f64) -> Self {
        Self { kappa, tau, eta }
    }
}

/// A point (r, θ, z, t) in cylindrical coordinates and time.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct SpacetimePoint {
    pub r: f64,
    pub theta: f64,
    pub z: f64,
    pub t: f64,
}

impl SpacetimePoint {
    pub fn new(r: f64, theta: f64, z: f64, t: f64) -> Self {
        Self { r, theta, z, t }
    }

    pub fn is_finite(&self) -> bool {
        self.r.is_finite() && self.theta.is_finite() && self.z.is_finite() && self.t.is_finite()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(value: f64) -> Self {
        if value > 0.0 {
            Sign::Positive
        } else if value < 0.0 {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Negative => '-',
            Sign::Zero => '0',
            Sign::Positive => '+',
        }
    }
}

/// Which of the two constructions applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolutionCase {
    /// κ ≠ 0: coupled pair resolved through the characteristic quadratic.
    General,
    /// κ = 0: the coupled pair decouples.
    KappaZero,
}

/// Sign pattern of (Λ₁, Λ₂, η) that selects the radial and angular branches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyTag {
    pub case: SolutionCase,
    pub lambda1: Sign,
    pub lambda2: Sign,
    pub eta: Sign,
}

impl std::fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let case = match self.case {
            SolutionCase::General => "general",
            SolutionCase::KappaZero => "kappa0",
        };
        write!(
            f,
            "{case}[L1{} L2{} eta{}]",
            self.lambda1.symbol(),
            self.lambda2.symbol(),
            self.eta.symbol()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub family: FamilyTag,
    /// Helmholtz constants of the Φ part and of the second transverse part.
    pub lambda1: f64,
    pub lambda2: f64,
    /// `Some(N)` when η = N² exactly.
    pub eta_integer_square: Option<u64>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_aperiodic(&self) -> bool {
        self.eta_integer_square.is_none()
    }
}

/// Classify a parameter set and flag inputs outside the aperiodic catalog.
pub fn validate_modal(material: &Material, params: &ModalParams) -> Result<ValidationReport, ModelError> {
    material.validate()?;
    finite("kappa", params.kappa)?;
    finite("tau", params.tau)?;
    finite("eta", params.eta)?;
    if params.tau == 0.0 {
        return Err(ModelError::ZeroTau);
    }

    let (case, lambda1, lambda2) = if params.kappa == 0.0 {
        let (l1, l2) = buchwald::kappa_zero_constants(material, params.tau);
        (SolutionCase::KappaZero, l1, l2)
    } else {
        let roots = buchwald::lambda_roots(material, params.kappa, params.tau);
        (SolutionCase::General, roots.lambda1, roots.lambda2)
    };

    let eta_integer_square = integer_square_root(params.eta);
    let mut warnings = Vec::new();
    if let Some(n) = eta_integer_square {
        warnings.push(format!(
            "eta = {n}^2 is an integer square; the aperiodic catalog excludes it \
             (the angular parts are 2pi-periodic)"
        ));
    }

    Ok(ValidationReport {
        family: FamilyTag {
            case,
            lambda1: Sign::of(lambda1),
            lambda2: Sign::of(lambda2),
            eta: Sign::of(params.eta),
        },
        lambda1,
        lambda2,
        eta_integer_square,
        warnings,
    })
}

/// `Some(N)` if `value == N^2` exactly for some integer 1 ≤ N ≤ 10⁶.
pub fn integer_square_root(value: f64) -> Option<u64> {
    if value.is_nan() || value < 1.0 || value.fract() != 0.0 {
        return None;
    }
    let max = (MAX_SQUARE_ROOT * MAX_SQUARE_ROOT) as f64;
    if value > max {
        return None;
    }
    let v = value as u64;
    let n = (value.sqrt()).round() as u64;
    (n * n == v).then_some(n)
}

pub(crate) fn finite(name: &'static str, value: f64) -> Result<(), ModelError> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(ModelError::NonFinite { name, value })
    }
}
