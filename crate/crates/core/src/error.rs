use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("frame index {0} out of range (expected 1..=3)")]
    IndexOutOfRange(usize),

    #[error("parameter point ({x}, {y}) lies outside the validity domain")]
    OutOfDomain { x: f64, y: f64 },

    #[error("singular point at ({x}, {y}): {reason}")]
    SingularPoint { x: f64, y: f64, reason: &'static str },

    #[error("degenerate first fundamental form (EG - F^2 = {det:e})")]
    DegenerateMetric { det: f64 },

    #[error("mixed partials disagree by {gap:e} in the finite-difference scheme")]
    AsymmetricMixedPartial { gap: f64 },

    #[error("every sample of the scan grid is excluded")]
    EmptyDomain,

    #[error("invalid grid {nx}x{ny} (need at least 2x2)")]
    InvalidGrid { nx: usize, ny: usize },

    #[error("invalid domain: {0}")]
    InvalidDomain(&'static str),

    #[error("missing parameter `{0}`")]
    MissingParam(&'static str),

    #[error("profile evaluated at its pole t = {pole}")]
    EvalAtPole { pole: f64 },

    #[error("invalid family specification: {0}")]
    InvalidSpec(String),

    #[error("invalid missing-case identifier: {0}")]
    InvalidCase(String),

    #[error("no domain of half-width {half_width} avoids the excluded lines")]
    NoSafeDomain { half_width: f64 },

    #[error("coefficient pole at t = {pole} inside the integration span")]
    PoleInSpan { pole: f64 },

    #[error("integration diverged at t = {t} (step too large)")]
    StepTooLarge { t: f64 },

    #[error("invalid integration setup: {0}")]
    InvalidIntegration(&'static str),

    #[error("closed form undefined on the numeric grid at t = {t}")]
    DomainMismatch { t: f64 },
}
