use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The requested point lies on or inside the horizon.
    #[error("radius r = {r} is not outside the horizon r_s = {r_s}")]
    HorizonViolation { r: f64, r_s: f64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Circular timelike geodesics only exist for r > 3/2 r_s.
    #[error("no circular geodesic at r = {r} (requires r > 1.5 r_s = {limit})")]
    NoGeodesic { r: f64, limit: f64 },

    #[error("proper time is unbounded for a static worldline (rapidity = 0)")]
    StaticProperTime,

    #[error("a static worldline (rapidity = 0) does not sweep the azimuth")]
    StaticWorldline,

    #[error("number of integration steps must be at least 1")]
    NonPositiveSteps,

    #[error("seed vector is not orthogonal to the 4-velocity (|V.U| = {residual:e})")]
    NonOrthogonalSeed { residual: f64 },

    #[error("observable is not a Hermitian involution (residual {residual:e})")]
    InvalidObservable { residual: f64 },

    #[error("state has vanishing norm")]
    ZeroNorm,

    #[error("sweep produced no rows")]
    EmptySweep,

    #[error("cannot write report to {path}: {message}")]
    Io { path: String, message: String },
}
