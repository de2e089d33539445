//! The five benchmark configurations.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::error::{BenchError, Result};
use crate::io::{embedded_landmarks, Landmark};

/// How the initial radial velocity is prescribed.
#[derive(Debug, Clone, Copy)]
pub enum VelocityProfile {
    /// Velocity `v0(x)`, `|v0| < 1`.
    Velocity(fn(f64) -> f64),
    /// Four-velocity `u0(x)`.
    FourVelocity(fn(f64) -> f64),
}

impl VelocityProfile {
    /// `v0(x)`, converting from the four-velocity when needed.
    pub fn velocity(&self, x: f64) -> f64 {
        match *self {
            VelocityProfile::Velocity(f) => f(x),
            VelocityProfile::FourVelocity(f) => urel_core::velocity(f(x)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Reference {
    /// Self-similar ODE with far-field velocity `v0`.
    Ode { v0: f64 },
    None,
}

#[derive(Debug, Clone)]
pub struct BenchmarkCase {
    pub id: u32,
    pub name: &'static str,
    pub d: u32,
    pub p0: fn(f64) -> f64,
    pub velocity: VelocityProfile,
    pub t_end: f64,
    /// Radial extent: the half-width of the square 2D domain.
    pub x_star: f64,
    pub reference: Reference,
    pub landmarks: Vec<Landmark>,
}

impl BenchmarkCase {
    pub fn landmark(&self, name: &str) -> Option<&Landmark> {
        self.landmarks.iter().find(|l| l.name == name)
    }

    /// `(p0(x), v0(x))`.
    pub fn initial(&self, x: f64) -> (f64, f64) {
        ((self.p0)(x), self.velocity.velocity(x))
    }
}

fn unit(_: f64) -> f64 {
    1.0
}

fn rest(_: f64) -> f64 {
    0.0
}

fn inflow(_: f64) -> f64 {
    -FRAC_1_SQRT_2
}

fn outflow(_: f64) -> f64 {
    FRAC_1_SQRT_2
}

fn high_disc(x: f64) -> f64 {
    if x <= 1.0 {
        1.0
    } else {
        0.1
    }
}

fn low_disc(x: f64) -> f64 {
    if x <= 1.0 {
        0.1
    } else {
        1.0
    }
}

fn sine_pulse(x: f64) -> f64 {
    if x < 1.0 {
        (2.0 * PI * x).sin()
    } else {
        0.0
    }
}

fn build(id: u32, d: u32, landmarks: &[Landmark]) -> BenchmarkCase {
    let (name, p0, velocity, t_end, x_star, reference): (_, fn(f64) -> f64, _, _, _, _) = match id {
        1 => ("converging flow", unit, VelocityProfile::Velocity(inflow), 1.0, 2.0, Reference::Ode { v0: -FRAC_1_SQRT_2 }),
        2 => ("expansion", unit, VelocityProfile::Velocity(outflow), 1.0, 2.0, Reference::Ode { v0: FRAC_1_SQRT_2 }),
        3 => ("expanding bubble", high_disc, VelocityProfile::Velocity(rest), 6.0, 6.0, Reference::None),
        4 => ("collapsing bubble", low_disc, VelocityProfile::Velocity(rest), 6.0, 6.0, Reference::None),
        5 => ("sine pulse", unit, VelocityProfile::FourVelocity(sine_pulse), 6.0, 5.0, Reference::None),
        _ => unreachable!(),
    };
    BenchmarkCase {
        id,
        name,
        d,
        p0,
        velocity,
        t_end,
        x_star,
        reference,
        landmarks: landmarks.iter().filter(|l| l.case == id && l.d == d).cloned().collect(),
    }
}

/// Cases 1 to 5 in two space dimensions.
pub fn registry() -> Vec<BenchmarkCase> {
    let landmarks = embedded_landmarks();
    (1..=5).map(|id| build(id, 2, &landmarks)).collect()
}

/// Case `id` in dimension `d`. The three-dimensional variant exists for
/// the two self-similar cases only.
pub fn case(id: u32, d: u32) -> Result<BenchmarkCase> {
    match (id, d) {
        (1..=5, 2) | (1 | 2, 3) => Ok(build(id, d, &embedded_landmarks())),
        _ => Err(BenchError::UnknownCase { id, d }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_cases_with_final_times() {
        let all = registry();
        assert_eq!(all.iter().map(|c| c.id).collect::<Vec<_>>(), [1, 2, 3, 4, 5]);
        assert_eq!(all.iter().map(|c| c.t_end).collect::<Vec<_>>(), [1.0, 1.0, 6.0, 6.0, 6.0]);
        assert_eq!(all.iter().map(|c| c.x_star).collect::<Vec<_>>(), [2.0, 2.0, 6.0, 6.0, 5.0]);
        assert!(all.iter().all(|c| c.d == 2));
    }

    #[test]
    fn initial_data() {
        let c3 = case(3, 2).unwrap();
        assert_eq!(c3.initial(0.5), (1.0, 0.0));
        assert_eq!(c3.initial(1.5), (0.1, 0.0));
        let c4 = case(4, 2).unwrap();
        assert_eq!(c4.initial(0.5).0, 0.1);
        let (p, v) = case(5, 2).unwrap().initial(0.25);
        assert_eq!(p, 1.0);
        assert!((v - FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(case(5, 2).unwrap().initial(1.25).1, 0.0);
        let (_, v1) = case(1, 2).unwrap().initial(0.3);
        assert_eq!(v1, -FRAC_1_SQRT_2);
    }

    #[test]
    fn landmarks_attach_by_dimension() {
        let c1 = case(1, 2).unwrap();
        assert_eq!(c1.landmark("p_minus").unwrap().value, 15.75505);
        assert_eq!(case(1, 3).unwrap().landmark("p_minus").unwrap().value, 25.56463);
        assert_eq!(case(3, 2).unwrap().landmark("t_focus").unwrap().value, 5.03);
        assert!(case(2, 2).unwrap().landmarks.is_empty());
        assert!(matches!(case(3, 3), Err(BenchError::UnknownCase { .. })));
        assert!(case(6, 2).is_err());
    }
}
