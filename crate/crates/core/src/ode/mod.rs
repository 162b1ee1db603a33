//! Minimality equations in profile form, and an RK4 oracle for the
//! closed-form profiles.
//!
//! The geometric residual of [`crate::surface`] and the displayed equations
//! here are computed independently; for types 1 to 5 each display is a fixed
//! multiple of the geometric residual.

mod integrate;
mod oracle;
mod residual;

pub use integrate::{compare_profiles, integrate_profile, OdeKind, OdeSolution};
pub use oracle::{integrate_closed_form, profile_ode, run_oracle, step_halving_ratio, OracleRecord};
pub use residual::{
    geometric_residual, ode_residual, p_coefficients, t_coefficients, type2_display, type2_t_form, type3_t_form,
    type5_display, type5_p_form, type6_p_form_candidate, PCoeffs, TCoeffs,
};
