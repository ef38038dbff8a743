use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("coefficient not in field: {0}")]
    CoefficientNotInField(String),
    #[error("division is not exact")]
    NotDivisible,
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("inconsistent degrees: {0}")]
    InconsistentDegrees(String),
    #[error("potential mismatch")]
    PotentialMismatch,
    #[error("not a matrix factorisation: {0}")]
    InvalidFactorization(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("resolution too short: {0}")]
    ResolutionTooShort(String),
    #[error("cohomology not concentrated in a single degree: {0}")]
    NotConcentrated(String),
    #[error("stable Hom outside the scanned shift window: {0}")]
    ShiftRange(String),
    #[error("singular curve: discriminant -4a^3 - 27b^2 vanishes")]
    SingularCurve,
    #[error("point not on curve: {0}")]
    PointNotOnCurve(String),
    #[error("the trivial factorisation has no Auslander-Reiten sequence")]
    TrivialFactorization,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
