use thiserror::Error;

/// Error type shared by all modules.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Invalid input value (non-positive mass, bad exponent, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A numerical procedure failed to converge or met a non-finite value.
    #[error("numerical error: {0}")]
    Numerics(String),

    /// Root bracketing failed: no sign change over the given interval.
    #[error("bracket error: {0}")]
    Bracket(String),

    /// The radial box truncates the wavefunction; a larger r_max is needed.
    #[error("grid too small: {0}")]
    GridTooSmall(String),

    /// Overlap metric is numerically singular for the given exponents.
    #[error("near-linear-dependent basis: {0}")]
    LinearDependence(String),

    /// A tabulated curve never crosses zero on its grid.
    #[error("no crossing: {0}")]
    NoCrossing(String),

    /// Invalid run configuration.
    #[error("invalid configuration: {0}")]
    Config(String),
}
