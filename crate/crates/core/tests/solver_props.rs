use proptest::prelude::*;
use starlike_core::solver::AGREEMENT_TOL;
use starlike_core::{
    closed_form_radius, disk_at, janowski_disk_radius, region, solve_radius, starlike_order_radius,
    strong_starlike_radius, verify_containment, ClassId, RegionId, DEFAULT_TOL,
};

fn class_strategy() -> impl Strategy<Value = ClassId> {
    prop::sample::select(ClassId::ALL.to_vec())
}

/// `G(r) = radius(r) - rho_max(center(r))` while the center is admissible.
fn margin_g(class: ClassId, id: RegionId, r: f64) -> Option<f64> {
    let reg = region(id).unwrap();
    let d = disk_at(class, r).unwrap();
    reg.max_inradius(d.center).ok().map(|rho| d.radius - rho)
}

#[test]
fn margin_is_strictly_increasing() {
    for class in ClassId::ALL {
        for id in RegionId::catalogue(0.0, 1.0) {
            let upper = class.univalence_radius();
            let mut prev = f64::NEG_INFINITY;
            for k in 0..=1000 {
                let r = upper * k as f64 / 1000.0;
                let Some(g) = margin_g(class, id, r) else {
                    break;
                };
                assert!(g > prev, "{class} {id} r={r}");
                prev = g;
            }
        }
    }
}

#[test]
fn solved_radius_is_a_root_of_the_margin() {
    for class in ClassId::ALL {
        for id in RegionId::catalogue(0.0, 1.0) {
            let r = solve_radius(class, id, DEFAULT_TOL).unwrap().numeric;
            if r == class.univalence_radius() {
                continue;
            }
            assert!(margin_g(class, id, r).unwrap() <= 0.0, "{class} {id}");
            assert!(
                margin_g(class, id, r * (1.0 + 1e-12)).unwrap() > 0.0,
                "{class} {id}"
            );
        }
    }
}

#[test]
fn order_radius_decreases_to_zero() {
    for class in ClassId::ALL {
        let mut prev = f64::INFINITY;
        for k in 0..100 {
            let alpha = k as f64 / 100.0;
            let r = starlike_order_radius(class, alpha).unwrap();
            assert!(r < prev, "{class} alpha={alpha}");
            prev = r;
        }
        assert!(starlike_order_radius(class, 1.0 - 1e-12).unwrap() < 1e-11);
    }
}

#[test]
fn sector_of_full_opening_is_the_half_plane() {
    for class in ClassId::ALL {
        let sector = strong_starlike_radius(class, 1.0).unwrap().numeric;
        let order = starlike_order_radius(class, 0.0).unwrap();
        assert!((sector - order).abs() <= 1e-12, "{class}");
        assert!(
            (order - class.univalence_radius()).abs() <= 1e-12,
            "{class}"
        );
    }
}

#[test]
fn reverse_lemniscate_equation_roots_match_bisection() {
    for class in ClassId::ALL {
        let root = closed_form_radius(class, RegionId::ReverseLemniscate).unwrap();
        let bis = solve_radius(class, RegionId::ReverseLemniscate, DEFAULT_TOL)
            .unwrap()
            .numeric;
        assert!(
            (root - bis).abs() <= AGREEMENT_TOL,
            "{class}: {root} vs {bis}"
        );
    }
}

#[test]
fn first_class_disk_equalities() {
    let class = ClassId::F1;
    let parabola = solve_radius(class, RegionId::Parabola, DEFAULT_TOL)
        .unwrap()
        .numeric;
    assert!((parabola - starlike_order_radius(class, 0.5).unwrap()).abs() <= 1e-10);
    let lem = solve_radius(class, RegionId::Lemniscate, DEFAULT_TOL)
        .unwrap()
        .numeric;
    let disk = janowski_disk_radius(class, 1.0, 2f64.sqrt() - 1.0).unwrap();
    assert!((lem - disk).abs() <= 1e-10);
    // the |w - 1| < 1/2 disk does not reproduce the parabola radius
    let half = janowski_disk_radius(class, 1.0, 0.5).unwrap();
    assert!(parabola - half > 3e-3);
    let d = disk_at(class, parabola).unwrap();
    assert!((d.center - 1.0).abs() + d.radius > 0.52);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parametric_closed_forms_agree(class in class_strategy(), alpha in 0.0..0.99f64, gamma in 0.01..=1.0f64) {
        for id in [RegionId::HalfPlane { alpha }, RegionId::Sector { gamma }] {
            let row = solve_radius(class, id, DEFAULT_TOL).unwrap();
            prop_assert!(row.residual <= AGREEMENT_TOL, "{class} {id}: {:e}", row.residual);
        }
    }

    #[test]
    fn radius_is_critical(class in class_strategy(), alpha in 0.0..0.95f64, gamma in 0.05..=1.0f64) {
        for id in [RegionId::HalfPlane { alpha }, RegionId::Sector { gamma }] {
            let r = solve_radius(class, id, DEFAULT_TOL).unwrap().numeric;
            prop_assert!(verify_containment(class, id, r * (1.0 - 1e-6), 1024).unwrap().pass);
            prop_assert!(!verify_containment(class, id, r * (1.0 + 1e-3), 1024).unwrap().pass);
        }
    }

    #[test]
    fn janowski_radius_fits_the_disk(class in class_strategy(), c0 in 0.8..1.2f64, d in 0.25..0.8f64) {
        let r = janowski_disk_radius(class, c0, d).unwrap();
        let disk = disk_at(class, r).unwrap();
        prop_assert!((disk.center - c0).abs() + disk.radius <= d * (1.0 + 1e-12));
        if r < class.univalence_radius() {
            let bigger = disk_at(class, r * (1.0 + 1e-9)).unwrap();
            prop_assert!((bigger.center - c0).abs() + bigger.radius > d);
        }
    }
}
