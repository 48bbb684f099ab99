//! Gamma function helpers: complex log-gamma and the small-argument
//! reciprocal-gamma pieces used by the Temme series.

use num_complex::Complex64;

/// Taylor coefficients of 1/Γ(1+z) about z = 0.
#[allow(clippy::excessive_precision)]
const RGAMMA_TAYLOR: [f64; 26] = [
    1.0,
    0.577_215_664_901_532_861,
    -0.655_878_071_520_253_881,
    -0.042_002_635_034_095_235_5,
    0.166_538_611_382_291_49,
    -0.042_197_734_555_544_336_7,
    -0.009_621_971_527_876_973_56,
    0.007_218_943_246_663_099_54,
    -0.001_165_167_591_859_065_11,
    -0.000_215_241_674_114_950_973,
    0.000_128_050_282_388_116_186,
    -2.013_485_478_078_823_87e-5,
    -1.250_493_482_142_670_66e-6,
    1.133_027_231_981_695_88e-6,
    -2.056_338_416_977_607_1e-7,
    6.116_095_104_481_415_82e-9,
    5.002_007_644_469_222_93e-9,
    -1.181_274_570_487_020_14e-9,
    1.043_426_711_691_100_51e-10,
    7.782_263_439_905_071_25e-12,
    -3.696_805_618_642_205_71e-12,
    5.100_370_287_454_475_98e-13,
    -2.058_326_053_566_506_78e-14,
    -5.348_122_539_423_017_98e-15,
    1.226_778_628_238_260_79e-15,
    -1.181_259_301_697_458_77e-16,
];

/// Values needed by the Temme series at |mu| <= 1/2.
#[derive(Debug, Clone, Copy)]
pub(crate) struct TemmeGammas {
    /// (1/Γ(1−μ) − 1/Γ(1+μ)) / (2μ), finite at μ = 0.
    pub gam1: f64,
    /// (1/Γ(1−μ) + 1/Γ(1+μ)) / 2.
    pub gam2: f64,
    /// 1/Γ(1+μ).
    pub gampl: f64,
    /// 1/Γ(1−μ).
    pub gammi: f64,
}

pub(crate) fn temme_gammas(mu: f64) -> TemmeGammas {
    debug_assert!(mu.abs() <= 0.5 + 1e-12);
    let mu2 = mu * mu;
    let mut gam1 = 0.0;
    let mut gam2 = 0.0;
    let mut p = 1.0;
    for k in (0..RGAMMA_TAYLOR.len()).step_by(2) {
        gam2 += RGAMMA_TAYLOR[k] * p;
        p *= mu2;
    }
    p = 1.0;
    for k in (1..RGAMMA_TAYLOR.len()).step_by(2) {
        gam1 -= RGAMMA_TAYLOR[k] * p;
        p *= mu2;
    }
    TemmeGammas {
        gam1,
        gam2,
        gampl: gam2 - mu * gam1,
        gammi: gam2 + mu * gam1,
    }
}

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_7;

/// B_{2k} / (2k (2k−1)) for k = 1..8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// ln Γ(z) for Re z > 0. The imaginary part is correct modulo 2π.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0);
    let mut shift = Complex64::new(1.0, 0.0);
    let mut w = z;
    let mut log_acc = Complex64::new(0.0, 0.0);
    while w.re < 16.0 {
        shift *= w;
        if shift.norm() > 1e200 {
            log_acc += shift.ln();
            shift = Complex64::new(1.0, 0.0);
        }
        w += 1.0;
    }
    log_acc += shift.ln();
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    for c in STIRLING.iter().rev() {
        series = series * inv2 + c;
    }
    series *= inv;
    (w - 0.5) * w.ln() - w + HALF_LN_2PI + series - log_acc
}

/// 1/Γ(x) for x > 0 by reduction to 1/Γ(1+μ) with |μ| ≤ 1/2.
pub fn recip_gamma_real(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let m = (x - 1.0).round();
    let mu = x - 1.0 - m;
    let mut r = temme_gammas(mu).gampl;
    if m < 0.0 {
        r *= x;
    } else {
        for k in 1..=(m as usize) {
            r /= mu + k as f64;
        }
    }
    r
}

/// Γ(x) for x > 0.
pub fn gamma_real(x: f64) -> f64 {
    1.0 / recip_gamma_real(x)
}
