use buchwald::specfun::{bessel, wronskian_check, BesselKind, BesselOrder, WronskianPair};
use proptest::prelude::*;
use std::f64::consts::PI;

use BesselKind::*;

/// y'' by a fourth-order difference of the reported derivative.
fn second_derivative(kind: BesselKind, order: BesselOrder, x: f64) -> f64 {
    let h = 1e-3 * x.min(1.0);
    let d = |s: f64| bessel(kind, order, x + s * h).unwrap().derivative;
    (d(-2.0) - 8.0 * d(-1.0) + 8.0 * d(1.0) - d(2.0)) / (12.0 * h)
}

/// |x²y'' + xy' + q y| / (|x²y''| + |xy'| + |q y|) with q from the kind and order.
fn ode_residual(kind: BesselKind, order: BesselOrder, x: f64) -> f64 {
    let e = bessel(kind, order, x).unwrap();
    let y2 = second_derivative(kind, order, x);
    let nu2 = order.magnitude * order.magnitude;
    let imag = order.kind == buchwald::specfun::OrderKind::Imaginary;
    let q = match (kind, imag) {
        (J | Y, false) => x * x - nu2,
        (J | Y, true) => x * x + nu2,
        (I | K, false) => -(x * x + nu2),
        (I | K, true) => nu2 - x * x,
    };
    let terms = [x * x * y2, x * e.derivative, q * e.value];
    terms.iter().sum::<f64>().abs() / terms.iter().map(|t| t.abs()).sum::<f64>()
}

fn kind_strategy() -> impl Strategy<Value = BesselKind> {
    prop_oneof![Just(J), Just(Y), Just(I), Just(K)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn imaginary_order_ode_residual(kind in kind_strategy(), nu in 0.01f64..12.0, x in 0.1f64..30.0) {
        let r = ode_residual(kind, BesselOrder::imaginary(nu), x);
        prop_assert!(r <= 1e-7, "{kind:?} nu={nu} x={x}: {r}");
    }

    #[test]
    fn real_order_ode_residual(kind in kind_strategy(), nu in 0.0f64..20.0, x in 0.1f64..50.0) {
        let r = ode_residual(kind, BesselOrder::real(nu), x);
        prop_assert!(r <= 1e-7, "{kind:?} nu={nu} x={x}: {r}");
    }

    #[test]
    fn wronskian_constancy(nu in 0.0f64..12.0, x0 in 0.1f64..1.0) {
        let xs: Vec<f64> = (0..12).map(|i| x0 + i as f64 * (30.0 - x0) / 11.0).collect();
        let jy = wronskian_check(WronskianPair::JbarYbar, nu, &xs).unwrap();
        prop_assert!(jy.rel_spread <= 1e-8, "{jy:?}");
        prop_assert!((jy.mean - 2.0 / PI).abs() <= 1e-9);
        let ik = wronskian_check(WronskianPair::IbarK, nu, &xs).unwrap();
        prop_assert!(ik.rel_spread <= 1e-8, "{ik:?}");
        prop_assert!((ik.mean + 1.0).abs() <= 1e-9);
    }

    #[test]
    fn continuity_in_order(kind in kind_strategy(), eps in 1e-9f64..1e-5, x in 0.1f64..30.0) {
        let a = bessel(kind, BesselOrder::imaginary(eps), x).unwrap();
        let b = bessel(kind, BesselOrder::real(0.0), x).unwrap();
        let scale = a.value.abs().max(b.value.abs()).max(b.derivative.abs());
        prop_assert!((a.value - b.value).abs() <= 1e-6 * scale, "{kind:?} {a:?} {b:?}");
    }

    #[test]
    fn derivative_consistency(
        kind in kind_strategy(),
        imag in any::<bool>(),
        nu in 0.0f64..12.0,
        x in 0.1f64..30.0,
    ) {
        let order = if imag { BesselOrder::imaginary(nu) } else { BesselOrder::real(nu) };
        let h = 1e-3 * x.min(1.0);
        let v = |s: f64| bessel(kind, order, x + s * h).unwrap().value;
        let fd = (v(-2.0) - 8.0 * v(-1.0) + 8.0 * v(1.0) - v(2.0)) / (12.0 * h);
        let e = bessel(kind, order, x).unwrap();
        let scale = e.derivative.abs().max(e.value.abs() / x);
        prop_assert!((fd - e.derivative).abs() <= 1e-6 * scale, "{kind:?} {order} x={x}: {fd} vs {}", e.derivative);
    }
}

#[test]
fn order_zero_coincidence() {
    for kind in [J, Y, I, K] {
        for x in [0.1, 1.0, 7.3, 29.0] {
            let a = bessel(kind, BesselOrder::imaginary(0.0), x).unwrap();
            let b = bessel(kind, BesselOrder::real(0.0), x).unwrap();
            assert!((a.value - b.value).abs() <= 1e-12 * b.value.abs().max(1e-300));
            assert!((a.derivative - b.derivative).abs() <= 1e-12 * b.derivative.abs().max(1e-300));
        }
    }
}
