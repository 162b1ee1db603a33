//! Immersions of the classified families.

use alloc::vec::Vec;

use super::profile::{ProfileFn, ProfileKind};
use super::spec::{FamilySpec, Type3Form, Variant};
use crate::error::{Error, Result};
use crate::group::mul_coords;
use crate::scalar::Real;
use crate::surface::{Domain, ExcludedLine, ParamSurface, RealImmersion};

/// The two generating profiles of a family member: `u` in `x`, `v` in `y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyProfiles {
    pub u: ProfileFn,
    pub v: ProfileFn,
}

/// Profiles prescribed by the classification for `spec`.
pub fn family_profiles(spec: &FamilySpec) -> Result<FamilyProfiles> {
    spec.validate()?;
    let p = |n| spec.p(n);
    let (a, b, c) = (p("a"), p("b"), p("c"));
    let (u, v): (ProfileFn, ProfileFn) = match (spec.family, spec.variant) {
        (1, _) => (ProfileFn::affine(a, p("u0")), ProfileKind::SolV { a, c, v0: p("v0") }.into()),
        (4, _) => (ProfileKind::SolV { a, c, v0: p("u0") }.into(), ProfileFn::affine(-a, p("v0"))),
        (2, Variant::I) => (ProfileKind::Poly2 { a, b, c }.into(), ProfileFn::affine(a, p("d"))),
        (2, Variant::Ii) => (ProfileFn::affine(a, p("u0")), ProfileKind::SolV2 { a, b, c }.into()),
        (3, Variant::I) => (ProfileKind::Poly2 { a, b, c }.into(), ProfileFn::affine(-a, p("d"))),
        (3, Variant::Ii) => (ProfileFn::affine(a, p("u0")), ProfileKind::SolV3 { a, b, c }.into()),
        (5 | 6, Variant::I) => (ProfileFn::constant(p("u0")), ProfileKind::Reciprocal { a, b }.into()),
        (5, Variant::Ii) => (ProfileKind::SolU5 { a, b, c, c1: p("c1") }.into(), ProfileFn::affine(a, b)),
        (6, Variant::Ii) => {
            let sign = spec.options.type6_sign;
            (ProfileKind::SolU6 { a, b, c, c1: p("c1"), sign }.into(), ProfileFn::affine(a, b))
        }
        _ => unreachable!("validated above"),
    };
    Ok(FamilyProfiles { u, v })
}

/// `r(x, y) = γ₁ ∗ γ₂` for one of the six translation types.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TranslationSurface {
    pub family: u8,
    pub form: Type3Form,
    pub profiles: FamilyProfiles,
}

impl TranslationSurface {
    /// The two generating curves at `(x, y)`, in product order.
    pub fn generators<S: Real>(&self, x: S, y: S) -> ([S; 3], [S; 3]) {
        let u = self.profiles.u.value(x);
        let v = self.profiles.v.value(y);
        let o = S::constant(0.0);
        match (self.family, self.form) {
            (1, _) => ([x, o, u], [o, y, v]),
            (2, _) | (3, Type3Form::Display) => ([x, o, u], [v, y, o]),
            (3, Type3Form::Body) => ([o, x, u], [y, v, o]),
            (4, _) => ([o, y, v], [x, o, u]),
            (5, _) => ([v, y, o], [x, o, u]),
            _ => ([y, v, o], [o, x, u]),
        }
    }
}

impl RealImmersion for TranslationSurface {
    fn eval<S: Real>(&self, x: S, y: S) -> [S; 3] {
        let (g1, g2) = self.generators(x, y);
        mul_coords(g1, g2)
    }
}

fn excluded_lines(p: &FamilyProfiles) -> Vec<ExcludedLine> {
    p.u.pole().map(ExcludedLine::X).into_iter().chain(p.v.pole().map(ExcludedLine::Y)).collect()
}

/// The family member as an analytic surface on `[-1, 1]²`, with the poles of
/// its profiles as excluded lines.
pub fn family_surface(spec: &FamilySpec) -> Result<ParamSurface> {
    let profiles = family_profiles(spec)?;
    let imm = TranslationSurface { family: spec.family, form: spec.options.type3_form, profiles };
    let domain = Domain::square(1.0)?;
    Ok(ParamSurface::analytic(imm, domain).with_excluded(excluded_lines(&profiles)))
}

/// Minimum distance kept between a safe domain and any excluded line.
pub const SAFE_CLEARANCE: f64 = 0.25;

/// Interval of length `2w` placed as close to the origin as possible while
/// keeping [`SAFE_CLEARANCE`] from every pole. Ties prefer the positive side.
fn safe_interval(poles: &[f64], w: f64) -> Option<(f64, f64)> {
    let clear = |lo: f64, hi: f64| {
        poles.iter().all(|&p| p <= lo - SAFE_CLEARANCE + 1e-12 || p >= hi + SAFE_CLEARANCE - 1e-12)
    };
    let mut candidates = Vec::with_capacity(1 + 2 * poles.len());
    candidates.push((-w, w));
    for &p in poles {
        candidates.push((p + SAFE_CLEARANCE, p + SAFE_CLEARANCE + 2.0 * w));
        candidates.push((p - SAFE_CLEARANCE - 2.0 * w, p - SAFE_CLEARANCE));
    }
    candidates
        .into_iter()
        .filter(|&(lo, hi)| clear(lo, hi))
        .min_by(|a, b| {
            let (ca, cb) = (a.0 + a.1, b.0 + b.1);
            ca.abs().total_cmp(&cb.abs()).then(cb.total_cmp(&ca))
        })
}

/// `[-w, w]²`, with each axis shifted off the excluded lines when one of them
/// comes within [`SAFE_CLEARANCE`] of the rectangle.
pub fn safe_domain(spec: &FamilySpec, half_width: f64) -> Result<Domain> {
    if !(half_width > 0.0 && half_width.is_finite()) {
        return Err(Error::NoSafeDomain { half_width });
    }
    let p = family_profiles(spec)?;
    let axis = |pole: Option<f64>| {
        let poles: Vec<f64> = pole.into_iter().collect();
        safe_interval(&poles, half_width).ok_or(Error::NoSafeDomain { half_width })
    };
    Domain::new(axis(p.u.pole())?, axis(p.v.pole())?)
}

/// [`family_surface`] restricted to [`safe_domain`].
pub fn safe_family_surface(spec: &FamilySpec, half_width: f64) -> Result<ParamSurface> {
    Ok(family_surface(spec)?.with_domain(safe_domain(spec, half_width)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::spec::Params;
    use crate::group::{group_mul, Point3};
    use crate::surface::{grid_scan, jet2, mean_curvature};

    fn spec(family: u8, variant: Variant, pairs: &[(&str, f64)]) -> FamilySpec {
        let mut params = Params::default();
        for &(n, v) in pairs {
            params.set(n, v).unwrap();
        }
        FamilySpec::new(family, variant, params).unwrap()
    }

    #[test]
    fn explicit_components() {
        // Expected formulas written out by hand from the group law.
        let (x, y) = (0.3, -0.8);
        type Formula = fn(f64, f64, f64, f64) -> [f64; 3];
        let cases: [(u8, Variant, Formula); 6] = [
            (1, Variant::Single, |x, y, u, v| [x, y, u + v + x * y / 2.0]),
            (2, Variant::Ii, |x, y, u, v| [x + v, y, u + x * y / 2.0]),
            (3, Variant::Ii, |x, y, u, v| [y, x + v, u - x * y / 2.0]),
            (4, Variant::Single, |x, y, u, v| [x, y, u + v - x * y / 2.0]),
            (5, Variant::Ii, |x, y, u, v| [x + v, y, u - x * y / 2.0]),
            (6, Variant::Ii, |x, y, u, v| [y, x + v, u + x * y / 2.0]),
        ];
        for (family, variant, expected) in cases {
            let names = crate::families::spec::allowed_params(family, variant).unwrap();
            let pairs: Vec<(&str, f64)> = names.iter().enumerate().map(|(i, n)| (*n, 0.3 + 0.1 * i as f64)).collect();
            let s = spec(family, variant, &pairs);
            let pr = family_profiles(&s).unwrap();
            let (u, v) = (pr.u.value(x), pr.v.value(y));
            let got = family_surface(&s).unwrap().point(x, y).to_array();
            let want = expected(x, y, u, v);
            for k in 0..3 {
                assert!((got[k] - want[k]).abs() < 1e-14, "type {family}: {got:?} vs {want:?}");
            }
        }
    }

    #[test]
    fn type1_zero_is_the_saddle() {
        let s = family_surface(&spec(1, Variant::Single, &[])).unwrap();
        assert_eq!(s.point(0.4, -0.5), Point3::new(0.4, -0.5, -0.1));
    }

    #[test]
    fn type4_zero_is_minimal() {
        let s = family_surface(&spec(4, Variant::Single, &[])).unwrap();
        assert_eq!(s.point(0.4, -0.5), Point3::new(0.4, -0.5, 0.1));
        let r = grid_scan(&s, 21, 21).unwrap();
        assert!(r.max_abs_h < 1e-9);
    }

    #[test]
    fn type5_reciprocal() {
        let s = family_surface(&spec(5, Variant::I, &[("a", 1.0)])).unwrap();
        assert_eq!(s.excluded(), &[ExcludedLine::Y(0.0)]);
        let p = s.point(0.5, 0.25);
        assert!((p.x - 4.5).abs() < 1e-15 && p.y == 0.25 && (p.z + 0.0625).abs() < 1e-15);
        for (x, y) in [(0.5, 0.25), (-0.9, -0.6), (0.1, 0.9)] {
            assert!(mean_curvature(&jet2(&s, x, y).unwrap()).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn type1_degenerate_is_left_cylinder() {
        let s = spec(1, Variant::Single, &[("c", 0.7), ("v0", -0.2)]);
        let surf = family_surface(&s).unwrap();
        let v = family_profiles(&s).unwrap().v;
        for (x, y) in [(0.0, 0.0), (0.6, -0.3), (-1.0, 0.9)] {
            let cylinder = group_mul(Point3::new(x, 0.0, 0.0), Point3::new(0.0, y, v.value(y)));
            assert_eq!(surf.point(x, y), cylinder);
        }
    }

    #[test]
    fn safe_domain_examples() {
        let w = 1.0;
        let d = safe_domain(&spec(1, Variant::Single, &[("a", 2.0)]), w).unwrap();
        assert_eq!(d, Domain::square(w).unwrap());
        let d = safe_domain(&spec(2, Variant::Ii, &[("b", 1.0)]), w).unwrap();
        assert_eq!(d.y, (0.25, 2.25));
        assert_eq!(d.x, (-1.0, 1.0));
        let d = safe_domain(&spec(5, Variant::I, &[("a", 1.0)]), w).unwrap();
        assert!(d.y.0 >= 1e-2 || d.y.1 <= -1e-2);
        // A pole just outside the square still forces a shift.
        let d = safe_domain(&spec(3, Variant::Ii, &[("a", 0.6)]), w).unwrap();
        assert!((d.y.0 + 1.05).abs() < 1e-12 && (d.y.1 - 0.95).abs() < 1e-12, "{d:?}");
        // Far poles leave the square alone.
        let d = safe_domain(&spec(3, Variant::Ii, &[("a", 1.5)]), w).unwrap();
        assert_eq!(d, Domain::square(w).unwrap());
    }

    #[test]
    fn safe_domain_rejects_bad_width() {
        let s = spec(1, Variant::Single, &[]);
        assert_eq!(safe_domain(&s, 0.0), Err(Error::NoSafeDomain { half_width: 0.0 }));
        assert!(safe_domain(&s, f64::INFINITY).is_err());
    }

    #[test]
    fn safe_interval_handles_clusters() {
        let (lo, hi) = safe_interval(&[0.0, 0.4, -0.3], 1.0).unwrap();
        assert!([0.0, 0.4, -0.3].iter().all(|p| *p <= lo - SAFE_CLEARANCE + 1e-12 || *p >= hi + SAFE_CLEARANCE - 1e-12));
        assert!((lo + 2.55).abs() < 1e-12 && (hi + 0.55).abs() < 1e-12, "{lo} {hi}");
    }
}
