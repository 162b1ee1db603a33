//! Closed-form profiles checked against numerical integration of their
//! equations.

use alloc::string::String;

use serde::{Deserialize, Serialize};

use super::integrate::{compare_profiles, integrate_profile, OdeKind, OdeSolution};
use crate::error::{Error, Result};
use crate::families::{Params, ProfileFn, ProfileKind};

/// Outcome of one oracle run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub ode: String,
    pub params: Params,
    pub span: [f64; 2],
    pub step: f64,
    pub max_error: f64,
    pub pass: bool,
}

/// The profile equation a closed form is supposed to solve.
pub fn profile_ode(profile: &ProfileFn) -> Result<OdeKind> {
    Ok(match profile.kind {
        ProfileKind::SolV { a, .. } => OdeKind::type1(a),
        ProfileKind::SolV2 { a, .. } => OdeKind::Type2W { a },
        ProfileKind::SolV3 { a, .. } => OdeKind::Type3 { a },
        ProfileKind::SolU5 { a, b, .. } => OdeKind::Type5 { a, b },
        ProfileKind::SolU6 { a, b, .. } => OdeKind::Type6 { a, b },
        _ => return Err(Error::InvalidIntegration("no profile equation for this closed form")),
    })
}

fn profile_params(profile: &ProfileFn) -> Params {
    let mut p = Params::default();
    match profile.kind {
        ProfileKind::SolV { a, c, v0 } => {
            (p.a, p.c, p.v0) = (Some(a), Some(c), Some(v0));
        }
        ProfileKind::SolV2 { a, b, c } | ProfileKind::SolV3 { a, b, c } => {
            (p.a, p.b, p.c) = (Some(a), Some(b), Some(c));
        }
        ProfileKind::SolU5 { a, b, c, c1 } | ProfileKind::SolU6 { a, b, c, c1, .. } => {
            (p.a, p.b, p.c, p.c1) = (Some(a), Some(b), Some(c), Some(c1));
        }
        _ => {}
    }
    p
}

/// Integrates the equation of `profile` from the closed form's value and
/// slope at the start of `span`, and returns the solution for the profile
/// itself (for `SolV2` the `w`-solution is divided back by `2a + t`).
pub fn integrate_closed_form(profile: &ProfileFn, span: (f64, f64), step: f64) -> Result<OdeSolution> {
    let ode = profile_ode(profile)?;
    if let Some(pole) = profile.pole() {
        if span.0 <= pole && pole <= span.1 {
            return Err(Error::PoleInSpan { pole });
        }
    }
    let t0 = span.0;
    let start = profile.eval(t0)?;
    match ode {
        OdeKind::Type2W { a } => {
            let m = |t: f64| 2.0 * a + t;
            let w0 = (m(t0) * start.value, start.value + m(t0) * start.d1);
            let mut sol = integrate_profile(ode, t0, w0, span, step)?;
            for i in 0..sol.len() {
                let t = sol.t[i];
                let v = sol.value[i] / m(t);
                sol.slope[i] = (sol.slope[i] - v) / m(t);
                sol.value[i] = v;
            }
            Ok(sol)
        }
        _ => integrate_profile(ode, t0, (start.value, start.d1), span, step),
    }
}

/// Integrates and compares against the closed form; `pass` when the
/// largest deviation is below `tol`.
pub fn run_oracle(profile: &ProfileFn, span: (f64, f64), step: f64, tol: f64) -> Result<OracleRecord> {
    let ode = profile_ode(profile)?;
    let sol = integrate_closed_form(profile, span, step)?;
    let max_error = compare_profiles(&sol, profile)?;
    Ok(OracleRecord {
        ode: String::from(ode.name()),
        params: profile_params(profile),
        span: [span.0, span.1],
        step,
        max_error,
        pass: max_error < tol,
    })
}

/// Ratio of closed-form deviations at step `h` and `h/2`; close to 16 for a
/// fourth-order method.
pub fn step_halving_ratio(profile: &ProfileFn, span: (f64, f64), h: f64) -> Result<f64> {
    let coarse = compare_profiles(&integrate_closed_form(profile, span, h)?, profile)?;
    let fine = compare_profiles(&integrate_closed_form(profile, span, h / 2.0)?, profile)?;
    Ok(coarse / fine)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::QuadraticSign;

    #[test]
    fn every_closed_form_matches_its_equation() {
        let profiles: [ProfileFn; 5] = [
            ProfileKind::SolV { a: 0.4, c: -0.7, v0: 1.2 }.into(),
            ProfileKind::SolV2 { a: 1.0, b: 0.5, c: 0.8 }.into(),
            ProfileKind::SolV3 { a: -1.2, b: 1.5, c: -0.3 }.into(),
            ProfileKind::SolU5 { a: 0.9, b: -1.1, c: 0.6, c1: 0.5 }.into(),
            ProfileKind::SolU6 { a: -0.8, b: 1.3, c: -0.2, c1: 0.7, sign: QuadraticSign::AsPrinted }.into(),
        ];
        for p in profiles {
            let r = run_oracle(&p, (-1.0, 1.0), 1e-3, 1e-7).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn mirrored_type6_sign_fails_its_equation() {
        let p: ProfileFn = ProfileKind::SolU6 { a: -0.8, b: 1.3, c: -0.2, c1: 0.7, sign: QuadraticSign::Mirrored }.into();
        let r = run_oracle(&p, (-1.0, 1.0), 1e-3, 1e-7).unwrap();
        assert!(!r.pass && r.max_error > 1e-3, "{r:?}");
    }

    #[test]
    fn w_substitution_example() {
        let p: ProfileFn = ProfileKind::SolV2 { a: 1.0, b: -0.4, c: 0.9 }.into();
        let r = run_oracle(&p, (-1.0, 1.0), 1e-3, 1e-7).unwrap();
        assert_eq!(r.ode, "type2_w");
        assert!(r.max_error < 1e-7);
    }

    #[test]
    fn poles_and_unsupported_kinds() {
        let p: ProfileFn = ProfileKind::SolV2 { a: 0.2, b: 1.0, c: 0.0 }.into();
        assert_eq!(run_oracle(&p, (-1.0, 1.0), 1e-3, 1e-7), Err(Error::PoleInSpan { pole: -0.4 }));
        assert!(run_oracle(&ProfileFn::affine(1.0, 0.0), (0.0, 1.0), 1e-3, 1e-7).is_err());
    }

    #[test]
    fn fourth_order_convergence() {
        let p: ProfileFn = ProfileKind::SolV { a: 0.0, c: 1.0, v0: 0.0 }.into();
        let ratio = step_halving_ratio(&p, (0.0, 2.0), 0.2).unwrap();
        assert!(ratio >= 12.0, "{ratio}");
    }

    #[test]
    fn record_serializes() {
        let p: ProfileFn = ProfileKind::SolV { a: 0.0, c: 1.0, v0: 0.0 }.into();
        let r = run_oracle(&p, (0.0, 2.0), 1e-3, 1e-8).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        for key in ["ode", "params", "span", "step", "max_error", "pass"] {
            assert!(json.get(key).is_some(), "{key}");
        }
    }
}
