//! State space of the radial problem: primitive `(p, u)`, conserved `(a, b)`
//! and the momentum-flux closure `c(a, b)`.
//!
//! The conserved pair is the canonical representation; the solvers evolve
//! `(a, b)` and only convert to `(p, u)` or `(p, v)` for input and output.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::sqrt;

/// Pressure and radial component of the spatial four-velocity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimitiveState {
    pub p: f64,
    pub u: f64,
}

impl PrimitiveState {
    pub fn new(p: f64, u: f64) -> Result<Self> {
        if !(p > 0.0) || !p.is_finite() || !u.is_finite() {
            return Err(Error::InvalidState { pressure: p });
        }
        Ok(Self { p, u })
    }

    /// Builds the state from pressure and velocity `v` with `|v| < 1`.
    pub fn from_velocity(p: f64, v: f64) -> Result<Self> {
        let u = four_velocity(v)?;
        Self::new(p, u)
    }

    /// `v = u / sqrt(1 + u²)`.
    pub fn velocity(&self) -> f64 {
        velocity(self.u)
    }

    pub fn to_conserved(&self) -> ConservedPair {
        to_conserved(*self)
    }
}

/// Radial energy-like and momentum-like conserved variables, `|b| < a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConservedPair {
    pub a: f64,
    pub b: f64,
}

impl ConservedPair {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        let pair = Self { a, b };
        if pair.is_admissible() {
            Ok(pair)
        } else {
            Err(Error::StateSpaceViolation { energy: a, momentum: b })
        }
    }

    /// Rest state `(3p, 0)`.
    pub fn at_rest(p: f64) -> Result<Self> {
        Ok(to_conserved(PrimitiveState::new(p, 0.0)?))
    }

    #[inline]
    pub fn is_admissible(&self) -> bool {
        self.a.is_finite() && self.b.is_finite() && self.b.abs() < self.a
    }

    /// `sqrt(4a² - 3b²)`, which lies in `(a, 2a]` on the state space.
    #[inline]
    pub(crate) fn discriminant_root(&self) -> f64 {
        sqrt(4.0 * self.a * self.a - 3.0 * self.b * self.b)
    }

    /// `c - a/3 = 2b² / (2a + sqrt(4a² - 3b²))`; vanishes exactly when `b = 0`.
    #[inline]
    pub(crate) fn flux_excess(&self) -> f64 {
        2.0 * self.b * self.b / (2.0 * self.a + self.discriminant_root())
    }

    pub fn pressure(&self) -> Result<f64> {
        Ok(to_primitive(*self)?.p)
    }

    pub fn to_primitive(&self) -> Result<PrimitiveState> {
        to_primitive(*self)
    }

    pub fn flux(&self) -> Result<f64> {
        flux_c(*self)
    }
}

/// `Θ(p, u) = (p(3 + 4u²), 4pu sqrt(1 + u²))`.
pub fn to_conserved(s: PrimitiveState) -> ConservedPair {
    let u2 = s.u * s.u;
    ConservedPair {
        a: s.p * (3.0 + 4.0 * u2),
        b: 4.0 * s.p * s.u * sqrt(1.0 + u2),
    }
}

/// Inverse of [`to_conserved`].
///
/// `p = (sqrt(4a² - 3b²) - a)/3` is evaluated as `(a - b)(a + b) / (sqrt(4a² - 3b²) + a)`,
/// the same quantity without the cancellation near `|b| → a`.
pub fn to_primitive(c: ConservedPair) -> Result<PrimitiveState> {
    if !c.is_admissible() {
        return Err(Error::StateSpaceViolation { energy: c.a, momentum: c.b });
    }
    let root = c.discriminant_root();
    let p = (c.a - c.b) * (c.a + c.b) / (root + c.a);
    if !(p > 0.0) {
        return Err(Error::InvalidState { pressure: p });
    }
    let scale = 4.0 * p * (p + c.a);
    let u = if c.b == 0.0 {
        0.0
    } else if scale > 0.0 && scale.is_finite() {
        c.b / sqrt(scale)
    } else {
        return Err(Error::InvalidState { pressure: p });
    };
    Ok(PrimitiveState { p, u })
}

/// Momentum flux `c(a, b) = (5/3) a - (2/3) sqrt(4a² - 3b²)`.
pub fn flux_c(c: ConservedPair) -> Result<f64> {
    if !c.is_admissible() {
        return Err(Error::StateSpaceViolation { energy: c.a, momentum: c.b });
    }
    Ok(c.a / 3.0 + c.flux_excess())
}

/// `v = u / sqrt(1 + u²)`.
#[inline]
pub fn velocity(u: f64) -> f64 {
    u / sqrt(1.0 + u * u)
}

/// Inverse of [`velocity`]: `u = v / sqrt(1 - v²)` for `|v| < 1`.
pub fn four_velocity(v: f64) -> Result<f64> {
    if !(v.abs() < 1.0) {
        return Err(Error::Domain("velocity must satisfy |v| < 1"));
    }
    Ok(v / sqrt((1.0 - v) * (1.0 + v)))
}

/// Conserved pairs sampled at increasing radii at one instant.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialField {
    positions: Vec<f64>,
    states: Vec<ConservedPair>,
    time: f64,
}

impl RadialField {
    pub fn new(positions: Vec<f64>, states: Vec<ConservedPair>, time: f64) -> Result<Self> {
        if positions.len() != states.len() {
            return Err(Error::InvalidParameter("positions and states differ in length"));
        }
        if !(time >= 0.0) {
            return Err(Error::Domain("time must be non-negative"));
        }
        if positions.first().is_some_and(|&x| !(x >= 0.0)) {
            return Err(Error::Domain("radii must be non-negative"));
        }
        if positions.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::Domain("radii must be strictly increasing"));
        }
        if let Some(bad) = states.iter().find(|s| !s.is_admissible()) {
            return Err(Error::StateSpaceViolation { energy: bad.a, momentum: bad.b });
        }
        Ok(Self { positions, states, time })
    }

    pub fn positions(&self) -> &[f64] {
        &self.positions
    }

    pub fn states(&self) -> &[ConservedPair] {
        &self.states
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Pressure and velocity at every radius.
    pub fn primitives(&self) -> Result<Vec<(f64, f64)>> {
        self.states
            .iter()
            .map(|s| to_primitive(*s).map(|q| (q.p, q.velocity())))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT2: f64 = core::f64::consts::SQRT_2;

    #[test]
    fn rest_state_maps_to_three_p() {
        let c = to_conserved(PrimitiveState::new(1.0, 0.0).unwrap());
        assert_eq!(c, ConservedPair { a: 3.0, b: 0.0 });
        assert_eq!(flux_c(c).unwrap(), 1.0);
    }

    #[test]
    fn unit_four_velocity() {
        let c = to_conserved(PrimitiveState::new(1.0, 1.0).unwrap());
        assert_eq!(c.a, 7.0);
        assert!((c.b - 4.0 * SQRT2).abs() < 1e-15);
        assert!((flux_c(c).unwrap() - 5.0).abs() < 1e-14);
        let back = to_primitive(c).unwrap();
        assert!((back.p - 1.0).abs() < 1e-15);
        assert!((back.u - 1.0).abs() < 1e-15);
    }

    #[test]
    fn negative_four_velocity_against_closed_form() {
        // p = 2, u = -1/2: a = 2 (3 + 1) = 8, b = 4·2·(-1/2)·sqrt(5/4) = -2 sqrt(5).
        let c = to_conserved(PrimitiveState::new(2.0, -0.5).unwrap());
        assert_eq!(c.a, 8.0);
        assert!((c.b + 4.472_135_954_999_579).abs() < 1e-14);
        assert!(c.b < 0.0 && c.b.abs() < c.a);
    }

    #[test]
    fn rejects_bad_states() {
        assert!(matches!(PrimitiveState::new(0.0, 0.0), Err(Error::InvalidState { .. })));
        assert!(matches!(PrimitiveState::new(-1.0, 0.3), Err(Error::InvalidState { .. })));
        assert!(matches!(to_primitive(ConservedPair { a: 1.0, b: 1.0 }), Err(Error::StateSpaceViolation { .. })));
        assert!(matches!(flux_c(ConservedPair { a: 1.0, b: -2.0 }), Err(Error::StateSpaceViolation { .. })));
        assert!(ConservedPair::new(2.0, 1.0).is_ok());
        assert!(ConservedPair::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn velocity_examples() {
        assert_eq!(velocity(0.0), 0.0);
        assert!((velocity(1.0) - 1.0 / SQRT2).abs() < 1e-15);
        assert!((velocity(-1.0) + 1.0 / SQRT2).abs() < 1e-15);
        assert!((four_velocity(-1.0 / SQRT2).unwrap() + 1.0).abs() < 1e-15);
        assert!(four_velocity(1.0).is_err());
    }

    #[test]
    fn radial_field_checks_ordering() {
        let s = ConservedPair::at_rest(1.0).unwrap();
        assert!(RadialField::new(alloc::vec![0.0, 1.0], alloc::vec![s, s], 0.0).is_ok());
        assert!(RadialField::new(alloc::vec![1.0, 1.0], alloc::vec![s, s], 0.0).is_err());
        assert!(RadialField::new(alloc::vec![0.0], alloc::vec![s, s], 0.0).is_err());
    }
}
