//! The catalog of solution families and random draws from each of them.
//!
//! A family is the sign pattern of (Λ₁, Λ₂, η). Because μ < λ + 2μ, the two
//! Helmholtz constants differ by ρτ(1/μ − 1/(λ+2μ)), which has the sign of τ.
//! They can therefore never both vanish, which leaves 8 of the 9 sign pairs
//! reachable for κ ≠ 0. For κ = 0 both constants carry the sign of τ.

use rand::Rng;
use thiserror::Error;

use crate::buchwald::{
    build, BuchwaldError, BuchwaldSolution, ChiCoefficients, ChiMode, PotentialCoefficients, TermCoefficients,
};
use crate::model::{FamilyTag, Material, ModalParams, Sign, SolutionCase, SpacetimePoint};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("family {0} is not reachable")]
    Unreachable(FamilyTag),
    #[error(transparent)]
    Build(#[from] BuchwaldError),
}

const SIGNS: [Sign; 3] = [Sign::Negative, Sign::Zero, Sign::Positive];

/// Whether some (κ, τ, η) produces this sign pattern.
pub fn is_reachable(tag: &FamilyTag) -> bool {
    match tag.case {
        SolutionCase::General => !(tag.lambda1 == Sign::Zero && tag.lambda2 == Sign::Zero),
        SolutionCase::KappaZero => tag.lambda1 == tag.lambda2 && tag.lambda1 != Sign::Zero,
    }
}

/// Every reachable family: 24 with κ ≠ 0, then 6 with κ = 0.
pub fn reachable_families() -> Vec<FamilyTag> {
    let mut out = Vec::new();
    for case in [SolutionCase::General, SolutionCase::KappaZero] {
        for l1 in SIGNS {
            for l2 in SIGNS {
                for eta in SIGNS {
                    let tag = FamilyTag {
                        case,
                        lambda1: l1,
                        lambda2: l2,
                        eta,
                    };
                    if is_reachable(&tag) {
                        out.push(tag);
                    }
                }
            }
        }
    }
    out
}

fn magnitude<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.gen_range(0.5..6.0)
}

/// The sign τ must have for a κ ≠ 0 pattern, if forced.
fn forced_tau_sign(l1: Sign, l2: Sign) -> Option<Sign> {
    use Sign::*;
    match (l1, l2) {
        (Positive, Negative) | (Positive, Zero) | (Zero, Negative) => Some(Negative),
        (Negative, Positive) | (Zero, Positive) | (Negative, Zero) => Some(Positive),
        _ => None,
    }
}

/// Draw (κ, τ, η) in the family, with |Λ| and |η| of order one per metre².
pub fn sample_params<R: Rng + ?Sized>(
    material: &Material,
    tag: &FamilyTag,
    rng: &mut R,
) -> Result<ModalParams, CatalogError> {
    if !is_reachable(tag) {
        return Err(CatalogError::Unreachable(*tag));
    }
    let p = material.p_wave_modulus();
    let eta = match tag.eta {
        Sign::Negative => -rng.gen_range(0.05..9.0),
        Sign::Zero => 0.0,
        // a random real is never an integer square
        Sign::Positive => rng.gen_range(0.05..9.0),
    };
    if tag.case == SolutionCase::KappaZero {
        let s = if tag.lambda1 == Sign::Positive { 1.0 } else { -1.0 };
        let tau = s * magnitude(rng) * p / material.rho;
        return Ok(ModalParams::new(0.0, tau, eta));
    }
    loop {
        let tau_sign = match forced_tau_sign(tag.lambda1, tag.lambda2) {
            Some(Sign::Negative) => -1.0,
            Some(_) => 1.0,
            None => {
                if rng.gen_bool(0.5) {
                    1.0
                } else {
                    -1.0
                }
            }
        };
        let tau = tau_sign * magnitude(rng) * p / material.rho;
        // a = ρτ/(λ+2μ), b = ρτ/μ; Λ₁ = a − κ, Λ₂ = b − κ
        let a = material.rho * tau / p;
        let b = material.rho * tau / material.mu_lame;
        let (lo, hi) = (a.min(b), a.max(b));
        let kappa = match (tag.lambda1, tag.lambda2) {
            (Sign::Zero, _) => a,
            (_, Sign::Zero) => b,
            (Sign::Positive, Sign::Positive) => lo - magnitude(rng),
            (Sign::Negative, Sign::Negative) => hi + magnitude(rng),
            _ => lo + rng.gen_range(0.1..0.9) * (hi - lo),
        };
        if kappa.abs() > 0.1 {
            return Ok(ModalParams::new(kappa, tau, eta));
        }
    }
}

/// A random solution in the family with all coefficients drawn from [−1, 1].
pub fn sample_solution<R: Rng + ?Sized>(
    material: &Material,
    tag: &FamilyTag,
    rng: &mut R,
) -> Result<BuchwaldSolution, CatalogError> {
    let params = sample_params(material, tag, rng)?;
    let mut u = || rng.gen_range(-1.0..=1.0);
    let mut term = || TermCoefficients::new(u(), u(), u(), u());
    let coefficients = PotentialCoefficients {
        s1: term(),
        s2: term(),
        e: u(),
        f: u(),
        g: u(),
        h: u(),
    };
    let chi = ChiCoefficients {
        a: u(),
        b: u(),
        c: u(),
        d: u(),
        e: u(),
        f: u(),
        g: u(),
        h: u(),
    };
    Ok(build(material, &params, &coefficients, &ChiMode::prescribed(chi))?)
}

/// Interior sample points: r ∈ [0.2, 2], θ ∈ [0, 2], z ∈ [−1, 1] and t within
/// one characteristic time 1/√|τ|.
pub fn sample_points<R: Rng + ?Sized>(sol: &BuchwaldSolution, n: usize, rng: &mut R) -> Vec<SpacetimePoint> {
    let t_scale = 1.0 / sol.params.tau.abs().sqrt();
    (0..n)
        .map(|_| {
            SpacetimePoint::new(
                rng.gen_range(0.2..2.0),
                rng.gen_range(0.0..2.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(0.0..t_scale),
            )
        })
        .collect()
}
