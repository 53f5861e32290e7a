//! The closed forms of the analytic kernel checked against numerical
//! differentiation and contour quadrature of the extremal functions.

use std::f64::consts::TAU;

use proptest::prelude::*;
use starlike_core::{
    eval_extremal_f, eval_extremal_w, logderiv_bound, mobius_disk_image, ClassId, Complex64,
    MobiusKind,
};

fn central_difference<F: Fn(Complex64) -> Complex64>(f: F, z: Complex64) -> Complex64 {
    let h = 1e-6 * z.norm().max(1.0);
    (f(z + h) - f(z - h)) / (2.0 * h)
}

fn class_strategy() -> impl Strategy<Value = ClassId> {
    prop::sample::select(ClassId::ALL.to_vec())
}

fn point_in_disk(max: f64) -> impl Strategy<Value = Complex64> {
    (0.01..max, 0.0..TAU).prop_map(|(rho, t)| Complex64::from_polar(rho, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn logderiv_matches_finite_difference(class in class_strategy(), z in point_in_disk(0.9)) {
        let f = |u: Complex64| eval_extremal_f(class, u).unwrap();
        let oracle = z * central_difference(f, z) / f(z);
        let closed = eval_extremal_w(class, z).unwrap();
        prop_assert!((closed - oracle).norm() <= 1e-6 * closed.norm().max(1.0),
            "{class} z={z}: closed {closed} vs oracle {oracle}");
    }
}

proptest! {
    #[test]
    fn mobius_images_lie_on_disk_boundary(r in 0.0..0.95f64, t in 0.0..TAU) {
        let z = Complex64::from_polar(r, t);
        let one = Complex64::new(1.0, 0.0);
        for (kind, w) in [
            (MobiusKind::ReciprocalOnePlus, one / (one + z)),
            (MobiusKind::Cayley, (one - z) / (one + z)),
        ] {
            let d = mobius_disk_image(kind, r).unwrap();
            let gap = ((w - d.center).norm() - d.radius).abs();
            prop_assert!(gap <= 1e-12 * d.radius.max(1.0), "{kind:?} r={r}: {gap:e}");
        }
    }

    #[test]
    fn extremal_w_is_conjugate_symmetric(class in class_strategy(), z in point_in_disk(0.95)) {
        let a = eval_extremal_w(class, z.conj()).unwrap();
        let b = eval_extremal_w(class, z).unwrap().conj();
        prop_assert!((a - b).norm() <= 1e-14 * a.norm().max(1.0));
    }

    // p(z) = (1 + (1 - 2a) z)/(1 - z) attains the bound at z = r; the
    // classes only use alpha in {0, 1/2}.
    #[test]
    fn logderiv_bound_is_attained(alpha in 0.0..=0.5f64, r in 0.0..0.95f64) {
        let p = |z: Complex64| (1.0 + (1.0 - 2.0 * alpha) * z) / (1.0 - z);
        let z = Complex64::new(r, 0.0);
        let value = (z * central_difference(p, z) / p(z)).norm();
        let bound = logderiv_bound(alpha, r).unwrap();
        prop_assert!((value - bound).abs() <= 1e-7 * bound.max(1.0), "{value} vs {bound}");
        // and no point of the circle exceeds it
        for k in 0..64 {
            let z = Complex64::from_polar(r, k as f64 * TAU / 64.0);
            let v = (z * central_difference(p, z) / p(z)).norm();
            prop_assert!(v <= bound * (1.0 + 1e-7) + 1e-12);
        }
    }
}

// Taylor coefficient by the trapezoidal rule on |z| = 1/2.
fn taylor_coefficient(class: ClassId, n: i32) -> Complex64 {
    let m = 256;
    let rho: f64 = 0.5;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..m {
        let z = Complex64::from_polar(rho, k as f64 * TAU / m as f64);
        sum += eval_extremal_f(class, z).unwrap() * z.powi(-n);
    }
    sum / m as f64
}

#[test]
fn extremal_functions_are_normalized() {
    for class in ClassId::ALL {
        let a1 = taylor_coefficient(class, 1);
        assert!((a1 - 1.0).norm() < 1e-13, "{class}: a1 = {a1}");
        assert!(taylor_coefficient(class, 0).norm() < 1e-13);
    }
    let a2 = taylor_coefficient(ClassId::F3, 2);
    assert!((a2 + 3.0).norm() < 1e-13, "a2 = {a2}");
}

#[test]
fn fourth_extremal_is_critical_at_univalence_radius() {
    let f = |z: Complex64| eval_extremal_f(ClassId::F4, z).unwrap();
    let x = Complex64::new(2.0 - 3f64.sqrt(), 0.0);
    assert!(central_difference(f, x).norm() < 1e-9);
    let first = |z: Complex64| eval_extremal_f(ClassId::F1, z).unwrap();
    assert!(central_difference(first, Complex64::new(0.2, 0.0)).norm() < 1e-9);
}
