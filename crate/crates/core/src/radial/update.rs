//! The single-cell update: given the two states at the chord midpoints
//! `(t̄, x̄ ∓ Δx/2)` of the triangular balance region, compute the state at
//! `(t̄ + Δt, x̄)`.
//!
//! Both balance laws carry the radial weight `x|x|^{d-2}` along the chords;
//! integrating it exactly reduces the whole update to one geometric factor
//!
//! ```text
//! κ(x̄) = (W₊ - W₋) / (W₊ + W₋),   W₋ = ∫_{x̄-Δx}^{x̄} x|x|^{d-2} dx,   W₊ = ∫_{x̄}^{x̄+Δx} x|x|^{d-2} dx
//! ```
//!
//! with `κ = Δx/(2x̄)` for `d = 2`. The source integral over the triangle
//! equals `(W₊ - W₋)/λ` (integration by parts against the tent profile of the
//! triangle), which fixes `η = κ/(3λ)` in every dimension and makes a
//! constant-pressure rest state an exact fixed point.

use crate::error::{Error, Result};
use crate::math::{powi, sqrt};
use crate::radial::grid::Dimension;
use crate::state::ConservedPair;

impl Dimension {
    /// Geometric factor `κ(x̄)` for `x̄ ≥ Δx/2`; equals one at `x̄ = Δx/2`.
    #[inline]
    pub fn kappa(self, x_bar: f64, dx: f64) -> f64 {
        match self {
            Dimension::Two => dx / (2.0 * x_bar),
            Dimension::Three => {
                if x_bar >= dx {
                    3.0 * x_bar * dx / (3.0 * x_bar * x_bar + dx * dx)
                } else {
                    // The lower chord reaches across the axis; the signed
                    // weight keeps the antiderivative |x|^d / d.
                    let g = |x: f64| powi(x.abs(), 3) / 3.0;
                    let lo = g(x_bar - dx);
                    let mid = g(x_bar);
                    let hi = g(x_bar + dx);
                    (hi - 2.0 * mid + lo) / (hi - lo)
                }
            }
        }
    }
}

/// Update with `x̄ > 0` once `κ` is known. No validation; callers guarantee
/// admissible inputs, `0 < κ ≤ 1` and `λ ≥ 1`.
///
/// The momentum root is evaluated through the offset
/// `δ = ξ + 2ηa'`, which is exactly zero for equal rest states, so
/// `b' = δ (1 + 3η(4ηa' - δ)/(sqrt(Q) + 2a')) / (1 + 3η²)` with
/// `Q = 4a'²(1 + 3η²) - 3ξ² = 4a'² + 12ηa'δ - 3δ²`.
#[inline]
pub(crate) fn interior_update(
    minus: ConservedPair,
    plus: ConservedPair,
    kappa: f64,
    lambda: f64,
) -> ConservedPair {
    let inv = 1.0 / lambda;
    let left = minus.a + minus.b * inv;
    let right = plus.a - plus.b * inv;
    let a = 0.5 * (left + right) + 0.5 * kappa * (right - left);

    let e_minus = minus.flux_excess();
    let e_plus = plus.flux_excess();
    let eta = kappa * inv / 3.0;
    let delta = 0.5 * ((minus.b + plus.b) + ((minus.a - plus.a) / 3.0 + e_minus - e_plus) * inv)
        + 0.5 * kappa * ((plus.b - minus.b) - (e_plus + e_minus) * inv)
        + eta * (a - 0.5 * (plus.a + minus.a));

    let q = 4.0 * a * a + 12.0 * eta * a * delta - 3.0 * delta * delta;
    let b = delta * (1.0 + 3.0 * eta * (4.0 * eta * a - delta) / (sqrt(q) + 2.0 * a))
        / (1.0 + 3.0 * eta * eta);
    ConservedPair { a, b }
}

/// Axis update (`x̄ = 0`): `a' = a₊ - b₊/λ`, `b' = 0`.
///
/// Feeding the reflected state `(a₊, -b₊)` into the interior formula gives
/// the same result, so the reflection is implicit here.
#[inline]
pub(crate) fn axis_update(plus: ConservedPair, lambda: f64) -> ConservedPair {
    ConservedPair {
        a: plus.a - plus.b / lambda,
        b: 0.0,
    }
}

/// Mirror image of an axis-adjacent state: `(a, b) ↦ (a, -b)`.
pub fn reflect_boundary(state: ConservedPair) -> ConservedPair {
    ConservedPair {
        a: state.a,
        b: -state.b,
    }
}

/// Single-cell update for `d = 2`.
pub fn euler_update(
    minus: ConservedPair,
    plus: ConservedPair,
    x_bar: f64,
    dx: f64,
    lambda: f64,
) -> Result<ConservedPair> {
    euler_update_in(Dimension::Two, minus, plus, x_bar, dx, lambda)
}

/// Single-cell update in dimension `dim`, validating every precondition.
pub fn euler_update_in(
    dim: Dimension,
    minus: ConservedPair,
    plus: ConservedPair,
    x_bar: f64,
    dx: f64,
    lambda: f64,
) -> Result<ConservedPair> {
    for s in [minus, plus] {
        if !s.is_admissible() {
            return Err(Error::StateSpaceViolation { energy: s.a, momentum: s.b });
        }
    }
    if !(dx > 0.0) || !dx.is_finite() {
        return Err(Error::InvalidParameter("dx must be positive"));
    }
    if !(lambda >= 1.0) || !lambda.is_finite() {
        return Err(Error::CflViolation { lambda });
    }
    if !(x_bar >= 0.0) || !x_bar.is_finite() {
        return Err(Error::Domain("x_bar must be non-negative"));
    }
    let out = if x_bar == 0.0 {
        axis_update(plus, lambda)
    } else {
        if dx > 2.0 * x_bar {
            return Err(Error::GridGeometry { x_bar, dx });
        }
        interior_update(minus, plus, dim.kappa(x_bar, dx), lambda)
    };
    if out.is_admissible() {
        Ok(out)
    } else {
        Err(Error::StateSpaceViolation { energy: out.a, momentum: out.b })
    }
}
