//! The classified minimal translation surfaces.
//!
//! A translation surface is the image of `(x, y) ↦ γ₁(x) ∗ γ₂(y)` for two
//! curves lying in coordinate planes. Because the product is not commutative
//! there are six types; each is minimal exactly for the profile curves
//! listed in [`catalog::FAMILIES`].

mod build;
mod cases;
pub mod catalog;
mod profile;
mod spec;

pub use build::{
    family_profiles, family_surface, safe_domain, safe_family_surface, FamilyProfiles, TranslationSurface, SAFE_CLEARANCE,
};
pub use cases::{audit_case, missing_case_surface, CaseAudit, CaseId, MissingCase, Slot};
pub use profile::{profile_closed_form, ProfileFn, ProfileKind, ProfileTag, ProfileValue, QuadraticSign};
pub use spec::{allowed_params, FamilyOptions, FamilySpec, Params, Type3Form, Variant, FAMILY_VARIANTS, PARAM_NAMES};
