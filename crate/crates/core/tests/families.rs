use nil3::families::{
    audit_case, family_profiles, family_surface, missing_case_surface, safe_family_surface, CaseId, FamilySpec,
    Params, ProfileFn, ProfileKind, Variant, FAMILY_VARIANTS,
};
use nil3::group::group_mul;
use nil3::ode::{geometric_residual, ode_residual};
use nil3::surface::{grid_points, mean_curvature_scan, Domain, SINGULAR_MARGIN};
use nil3::Point3;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn spec_strategy() -> impl Strategy<Value = FamilySpec> {
    (0..FAMILY_VARIANTS.len(), any::<u64>()).prop_map(|(i, seed)| {
        let (f, v) = FAMILY_VARIANTS[i];
        FamilySpec::random(f, v, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn every_family_member_is_minimal(spec in spec_strategy()) {
        let s = safe_family_surface(&spec, 1.0).unwrap();
        let r = mean_curvature_scan(&s, 11, 11).unwrap();
        prop_assert!(r.max_abs_h < 1e-8, "{spec}: {}", r.max_abs_h);
    }

    // Both routes vanish together on solutions.
    #[test]
    fn routes_agree_on_solutions(spec in spec_strategy()) {
        let s = safe_family_surface(&spec, 1.0).unwrap();
        let p = family_profiles(&spec).unwrap();
        for (x, y) in grid_points(s.domain(), 7, 7).unwrap() {
            if s.distance_to_excluded(x, y) < SINGULAR_MARGIN {
                continue;
            }
            let g = geometric_residual(spec.family, spec.options.type3_form, &p.u, &p.v, x, y).unwrap();
            let o = ode_residual(spec.family, &p.u, &p.v, x, y).unwrap();
            prop_assert!(g.abs() < 1e-8 && o.abs() < 1e-8, "{spec} at ({x}, {y}): {g} {o}");
        }
    }

    // ...and both leave zero on non-solutions.
    #[test]
    fn routes_agree_on_non_solutions(family in 1u8..=6, c2 in 0.5..2.0f64, amp in 0.5..1.5f64) {
        let u: ProfileFn = ProfileKind::Quadratic { c2, c1: 0.3, c0: 0.0 }.into();
        let v: ProfileFn = ProfileKind::Sine { amplitude: amp, frequency: 1.3, phase: 0.4 }.into();
        let pts = grid_points(Domain::square(1.0).unwrap(), 7, 7).unwrap();
        let worst = |f: &dyn Fn(f64, f64) -> f64| pts.iter().map(|&(x, y)| f(x, y).abs()).fold(0.0, f64::max);
        let g = worst(&|x, y| geometric_residual(family, Default::default(), &u, &v, x, y).unwrap());
        let o = worst(&|x, y| ode_residual(family, &u, &v, x, y).unwrap());
        prop_assert!(g > 1e-3 && o > 1e-3, "type {family}: {g} {o}");
    }

    #[test]
    fn sol_v_slope(a in -2.0..2.0f64, c in -1.0..1.0f64, v0 in -2.0..2.0f64, y in -2.0..2.0f64) {
        let v: ProfileFn = ProfileKind::SolV { a, c, v0 }.into();
        let slope = 2.0 * c * (1.0 + (a + y) * (a + y)).sqrt();
        prop_assert!((v.eval(y).unwrap().d1 - slope).abs() < 1e-10);
    }
}

#[test]
fn type2i_needs_d_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..10 {
        let mut spec = FamilySpec::random(2, Variant::I, &mut rng).unwrap();
        let h0 = mean_curvature_scan(&safe_family_surface(&spec, 1.0).unwrap(), 21, 21).unwrap().max_abs_h;
        assert!(h0 < 1e-8);
        spec.params.d = Some(0.5);
        assert_eq!(spec.warnings().len(), 1);
        let h1 = mean_curvature_scan(&safe_family_surface(&spec, 1.0).unwrap(), 21, 21).unwrap().max_abs_h;
        assert!(h1 > 1e-3, "{spec}: {h1}");
    }
}

#[test]
fn type1_degenerates_to_a_left_cylinder() {
    let p = Params { c: Some(0.6), v0: Some(0.3), ..Params::default() };
    let spec = FamilySpec::new(1, Variant::Single, p).unwrap();
    let s = family_surface(&spec).unwrap();
    let v = family_profiles(&spec).unwrap().v;
    for (x, y) in grid_points(Domain::square(1.0).unwrap(), 5, 5).unwrap() {
        let direct = group_mul(Point3::new(x, 0.0, 0.0), Point3::new(0.0, y, v.eval(y).unwrap().value));
        assert_eq!(s.point(x, y), direct);
    }
}

#[test]
fn missing_case_dichotomy() {
    let profiles: [(&str, ProfileFn); 4] = [
        ("affine", ProfileFn::affine(-1.5, 0.2)),
        ("quadratic", ProfileKind::Quadratic { c2: 0.7, c1: 0.1, c0: -0.3 }.into()),
        ("sin", ProfileKind::Sine { amplitude: 1.0, frequency: 1.0, phase: 0.0 }.into()),
        ("asinh", ProfileKind::Asinh { scale: 0.8, shift: 0.3 }.into()),
    ];
    let period = Domain::new((-1.0, 1.0), (0.0, 2.0 * std::f64::consts::PI)).unwrap();
    for case in CaseId::ALL {
        for (name, p) in profiles {
            let s = missing_case_surface(case, 0.45, p).unwrap();
            let s = if case.starred() && name == "sin" { s.with_domain(period) } else { s };
            let r = audit_case(case, &s, 15).unwrap().max_abs_residual;
            if !case.starred() || name == "affine" {
                assert!(r < 1e-9, "{case} {name}: {r}");
            } else {
                assert!(r > 1e-3, "{case} {name}: {r}");
            }
        }
    }
}

#[test]
fn case_json() {
    let c: CaseId = serde_json::from_str(r#"{"type":2,"slot":"first"}"#).unwrap();
    assert!(c.starred());
    let c: CaseId = serde_json::from_str(r#"{"type":4,"slot":"second","starred":false}"#).unwrap();
    assert!(!c.starred());
    assert!(serde_json::from_str::<CaseId>(r#"{"type":4,"slot":"first","starred":true}"#).is_err());
    assert!(serde_json::from_str::<CaseId>(r#"{"type":2,"slot":"first","row":1}"#).is_err());
    assert!(serde_json::from_str::<CaseId>(r#"{"type":9,"slot":"first"}"#).is_err());
}
