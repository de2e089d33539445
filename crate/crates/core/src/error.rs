use core::fmt;

/// Every failure the solvers can report.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A primitive state with non-positive (or non-finite) pressure.
    InvalidState { pressure: f64 },
    /// A conserved pair outside `|b| < a`, or a conserved vector with `|w̄| ≥ w_{d+1}`.
    StateSpaceViolation { energy: f64, momentum: f64 },
    /// The update cell reaches below the axis: `Δx / (2 x̄) > 1`.
    GridGeometry { x_bar: f64, dx: f64 },
    /// `N · x* < t*`, which would give a mesh ratio below one.
    CflViolation { lambda: f64 },
    /// Bad grid or solver parameters that are not a CFL problem.
    InvalidParameter(&'static str),
    /// Initial data with `p0 ≤ 0` or `|v0| ≥ 1` at a sample point.
    InvalidInitialData { x: f64, pressure: f64, velocity: f64 },
    /// The self-similar ODE denominator vanished.
    Singularity { theta: f64, velocity: f64 },
    /// The ODE run ended before the shock condition was bracketed.
    IntegrationFailure { theta: f64 },
    /// No sign change of the shock condition is available in the profile.
    ShockFitFailure,
    /// An argument outside the domain of the operation.
    Domain(&'static str),
    /// The eigenvector normalisation collapsed (near-zero `D` or coalescing eigenvalues).
    DegenerateFrame { determinant: f64 },
    /// The 2D solver produced a state the pressure floor could not repair.
    BlowUp { cell: usize, time: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidState { pressure } => write!(f, "invalid state: pressure {pressure} is not positive"),
            Error::StateSpaceViolation { energy, momentum } => write!(
                f,
                "state-space violation: |momentum| = {} is not below energy {energy}",
                momentum.abs()
            ),
            Error::GridGeometry { x_bar, dx } => {
                write!(f, "grid geometry: dx/(2 x_bar) = {} exceeds one", dx / (2.0 * x_bar))
            }
            Error::CflViolation { lambda } => write!(f, "CFL violation: mesh ratio {lambda} < 1"),
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::InvalidInitialData { x, pressure, velocity } => write!(
                f,
                "invalid initial data at x = {x}: p = {pressure}, v = {velocity}"
            ),
            Error::Singularity { theta, velocity } => {
                write!(f, "ODE singularity approached at theta = {theta} (V = {velocity})")
            }
            Error::IntegrationFailure { theta } => {
                write!(f, "integration stopped at theta = {theta} before the shock was bracketed")
            }
            Error::ShockFitFailure => write!(f, "no sign change of the shock condition"),
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::DegenerateFrame { determinant } => {
                write!(f, "degenerate eigenframe (D = {determinant})")
            }
            Error::BlowUp { cell, time } => write!(f, "unrecoverable state in cell {cell} at t = {time}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
