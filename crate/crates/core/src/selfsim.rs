//! Self-similar solutions depending only on `ϑ = t/x`.
//!
//! `P(ϑ)`, `V(ϑ)` solve
//!
//! ```text
//! V' = (d-1) V (V - ϑ)(1 - V²) / f,   P' = (d-1) 4 P V (ϑV - 1) / f,
//! f(ϑ, V) = 3(ϑV - 1)² - (V - ϑ)²
//! ```
//!
//! from the far field `P(0) = 1`, `V(0) = v0`. For `v0 < 0` a 3-shock sits at
//! the `ϑ̃` where `V(ϑ̃) = 3/(2ϑ̃) - ϑ̃/2`, with a resting plateau behind it.
//! For `v0 > 0` the velocity decays to zero at the sonic ray `ϑ = √3` and the
//! core inside that ray is at rest.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::sqrt;

/// `f(ϑ, V) = 3(ϑV - 1)² - (V - ϑ)²`.
#[inline]
pub fn denominator(theta: f64, v: f64) -> f64 {
    let s = theta * v - 1.0;
    let r = v - theta;
    3.0 * s * s - r * r
}

/// Right-hand sides `(V', P')`; fails when `|f|` drops below the guard
/// `1e-10 (1 + ϑ²)`.
pub fn ode_rhs(d: u32, theta: f64, v: f64, p: f64) -> Result<(f64, f64)> {
    let f = denominator(theta, v);
    if !(f.abs() >= SINGULARITY_GUARD * (1.0 + theta * theta)) {
        return Err(Error::Singularity { theta, velocity: v });
    }
    Ok(rhs_unchecked(d, theta, v, p, f))
}

#[inline(always)]
fn rhs_unchecked(d: u32, theta: f64, v: f64, p: f64, f: f64) -> (f64, f64) {
    let k = (d - 1) as f64 / f;
    (k * v * (v - theta) * (1.0 - v * v), k * 4.0 * p * v * (theta * v - 1.0))
}

pub const SINGULARITY_GUARD: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeConfig {
    /// RK4 step `h`.
    pub step: f64,
    /// Hard upper bound on `ϑ`.
    pub theta_cap: f64,
    /// Keep every `decimation`-th step.
    pub decimation: usize,
}

impl Default for OdeConfig {
    fn default() -> Self {
        Self { step: 1e-6, theta_cap: 10.0, decimation: 1000 }
    }
}

impl OdeConfig {
    pub fn with_step(step: f64) -> Self {
        Self { step, ..Self::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub theta: f64,
    pub v: f64,
    pub p: f64,
}

/// Shock data: `s̃ = 1/ϑ̃`, the state `(p+, v+)` ahead of the shock and the
/// plateau `(p-, v- = 0)` behind it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShockState {
    pub theta_tilde: f64,
    pub s_tilde: f64,
    pub v_plus: f64,
    pub p_plus: f64,
    pub p_minus: f64,
    pub v_minus: f64,
    /// `V(ϑ̃) - (3/(2ϑ̃) - ϑ̃/2)` at the fitted point.
    pub residual: f64,
}

/// Why the integration stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// The shock condition changed sign (`v0 < 0`).
    ShockBracket,
    /// `V` reached zero at the sonic ray (`v0 > 0`).
    Stagnation,
    /// `V` reached `1 - 1e-12`.
    LightSpeed,
    /// `ϑ` reached the configured cap.
    ThetaCap,
    /// The denominator guard fired.
    Singularity,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelfSimilarProfile {
    dimension: u32,
    v0: f64,
    step: f64,
    samples: Vec<Sample>,
    /// Last RK4 node before the shock condition changed sign.
    bracket: Option<Sample>,
    shock: Option<ShockState>,
    termination: Termination,
}

impl SelfSimilarProfile {
    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn v0(&self) -> f64 {
        self.v0
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// Stored samples, ordered by `ϑ`; for shocked profiles the last one is
    /// the state just ahead of the shock.
    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    pub fn shock(&self) -> Option<&ShockState> {
        self.shock.as_ref()
    }

    pub fn termination(&self) -> Termination {
        self.termination
    }

    pub fn bracket_start(&self) -> Option<Sample> {
        self.bracket
    }
}

/// `g(ϑ) = V - (3/(2ϑ) - ϑ/2)`.
#[inline]
pub fn shock_condition(theta: f64, v: f64) -> f64 {
    v - (1.5 / theta - 0.5 * theta)
}

/// Open interval `(√3, √(v0² + 3) - v0)` that contains `ϑ̃`.
pub fn theta_bracket(v0: f64) -> (f64, f64) {
    (sqrt(3.0), sqrt(v0 * v0 + 3.0) - v0)
}

/// Upper barrier `V̄₂(ϑ) = -(ϑ - √3)/(√3 ϑ - 1)` of the solution for `ϑ > √3`.
pub fn blowup_boundary(theta: f64) -> f64 {
    let r3 = sqrt(3.0);
    -(theta - r3) / (r3 * theta - 1.0)
}

/// True iff `u- > u+` for positive pressures.
pub fn entropy_check(p_minus: f64, u_minus: f64, p_plus: f64, u_plus: f64) -> bool {
    p_minus > 0.0 && p_plus > 0.0 && u_minus > u_plus
}

fn rk4(d: u32, s: Sample, h: f64) -> Option<Sample> {
    let eval = |theta: f64, v: f64, p: f64| {
        let f = denominator(theta, v);
        if f.abs() >= SINGULARITY_GUARD * (1.0 + theta * theta) {
            Some(rhs_unchecked(d, theta, v, p, f))
        } else {
            None
        }
    };
    let half = 0.5 * h;
    let (k1v, k1p) = eval(s.theta, s.v, s.p)?;
    let (k2v, k2p) = eval(s.theta + half, s.v + half * k1v, s.p + half * k1p)?;
    let (k3v, k3p) = eval(s.theta + half, s.v + half * k2v, s.p + half * k2p)?;
    let (k4v, k4p) = eval(s.theta + h, s.v + h * k3v, s.p + h * k3p)?;
    Some(Sample {
        theta: s.theta + h,
        v: s.v + h / 6.0 * (k1v + 2.0 * (k2v + k3v) + k4v),
        p: s.p + h / 6.0 * (k1p + 2.0 * (k2p + k3p) + k4p),
    })
}

/// Fixed-step RK4 from `ϑ = 0`; for `v0 < 0` the shock is fitted before
/// returning.
pub fn integrate(d: u32, v0: f64, config: OdeConfig) -> Result<SelfSimilarProfile> {
    if d != 2 && d != 3 {
        return Err(Error::InvalidParameter("dimension must be 2 or 3"));
    }
    if !(v0.abs() < 1.0) || v0 == 0.0 {
        return Err(Error::InvalidParameter("v0 must lie in (-1, 1) without zero"));
    }
    if !(config.step > 0.0) || !config.step.is_finite() || !(config.theta_cap > 0.0) {
        return Err(Error::InvalidParameter("step and theta cap must be positive"));
    }
    let h = config.step;
    let keep = config.decimation.max(1);
    let mut current = Sample { theta: 0.0, v: v0, p: 1.0 };
    let mut samples = Vec::new();
    samples.push(current);
    let mut bracket = None;

    let mut k: u64 = 0;
    let termination = loop {
        if current.theta >= config.theta_cap {
            break Termination::ThetaCap;
        }
        let Some(mut next) = rk4(d, current, h) else {
            if v0 < 0.0 {
                return Err(Error::IntegrationFailure { theta: current.theta });
            }
            break Termination::Singularity;
        };
        k += 1;
        // ϑ on the lattice kh, without accumulated round-off
        next.theta = k as f64 * h;
        if !(next.p > 0.0) || !next.v.is_finite() {
            if v0 < 0.0 {
                return Err(Error::IntegrationFailure { theta: current.theta });
            }
            break Termination::Singularity;
        }
        if v0 < 0.0 {
            if shock_condition(next.theta, next.v) >= 0.0 {
                bracket = Some(current);
                break Termination::ShockBracket;
            }
        } else if next.v <= 0.0 {
            // linear crossing of V = 0
            let w = current.v / (current.v - next.v);
            if current.theta > samples[samples.len() - 1].theta {
                samples.push(current);
            }
            samples.push(Sample {
                theta: current.theta + w * (next.theta - current.theta),
                v: 0.0,
                p: current.p + w * (next.p - current.p),
            });
            break Termination::Stagnation;
        } else if next.v >= 1.0 - 1e-12 {
            samples.push(next);
            break Termination::LightSpeed;
        }
        current = next;
        if k.is_multiple_of(keep as u64) {
            samples.push(current);
        }
    };
    if matches!(termination, Termination::ThetaCap | Termination::Singularity)
        && current.theta > samples[samples.len() - 1].theta
    {
        samples.push(current);
    }

    let mut profile = SelfSimilarProfile {
        dimension: d,
        v0,
        step: h,
        samples,
        bracket,
        shock: None,
        termination,
    };
    if bracket.is_some() {
        let shock = fit_shock(&profile)?;
        let start = bracket.unwrap_or(current);
        if start.theta > profile.samples[profile.samples.len() - 1].theta {
            profile.samples.push(start);
        }
        profile.samples.push(Sample { theta: shock.theta_tilde, v: shock.v_plus, p: shock.p_plus });
        profile.shock = Some(shock);
    }
    Ok(profile)
}

/// Locates `ϑ̃` inside the bracketing step by bisection on the length of a
/// single RK4 step from its start, then applies the jump relations.
pub fn fit_shock(profile: &SelfSimilarProfile) -> Result<ShockState> {
    let start = profile.bracket.ok_or(Error::ShockFitFailure)?;
    let d = profile.dimension;
    let g = |tau: f64| -> Option<(f64, Sample)> {
        let s = if tau == 0.0 { start } else { rk4(d, start, tau)? };
        Some((shock_condition(s.theta, s.v), s))
    };
    let (g_lo, _) = g(0.0).ok_or(Error::ShockFitFailure)?;
    let (g_hi, _) = g(profile.step).ok_or(Error::ShockFitFailure)?;
    if !(g_lo < 0.0 && g_hi >= 0.0) {
        return Err(Error::ShockFitFailure);
    }
    let (mut lo, mut hi) = (0.0, profile.step);
    while hi - lo > 0.0 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let (gm, _) = g(mid).ok_or(Error::ShockFitFailure)?;
        if gm < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (g_a, a) = g(lo).ok_or(Error::ShockFitFailure)?;
    let (g_b, b) = g(hi).ok_or(Error::ShockFitFailure)?;
    let (residual, s) = if g_a.abs() <= g_b.abs() { (g_a, a) } else { (g_b, b) };
    let theta_tilde = s.theta;
    let s_tilde = 1.0 / theta_tilde;
    let s2 = s_tilde * s_tilde;
    Ok(ShockState {
        theta_tilde,
        s_tilde,
        v_plus: s.v,
        p_plus: s.p,
        p_minus: s.p * 3.0 * (1.0 - s2) / (9.0 * s2 - 1.0),
        v_minus: 0.0,
        residual,
    })
}

/// Pressure and velocity at time `t > 0` for each radius.
pub fn profile_at_time(profile: &SelfSimilarProfile, t: f64, radii: &[f64]) -> Result<Vec<(f64, f64)>> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain("time must be positive"));
    }
    radii
        .iter()
        .map(|&x| {
            if !(x >= 0.0) {
                return Err(Error::Domain("radii must be non-negative"));
            }
            Ok(evaluate(profile, if x == 0.0 { f64::INFINITY } else { t / x }))
        })
        .collect()
}

/// `(P, V)` at `ϑ`; beyond the last sample the plateau or the resting core.
pub fn evaluate(profile: &SelfSimilarProfile, theta: f64) -> (f64, f64) {
    let s = &profile.samples;
    let last = s[s.len() - 1];
    if theta >= last.theta {
        return match profile.shock {
            Some(shock) if theta > shock.theta_tilde => (shock.p_minus, shock.v_minus),
            _ => (last.p, last.v),
        };
    }
    if theta <= 0.0 {
        return (s[0].p, s[0].v);
    }
    let i = s.partition_point(|q| q.theta <= theta);
    let (a, b) = (s[i - 1], s[i]);
    let w = (theta - a.theta) / (b.theta - a.theta);
    (a.p + w * (b.p - a.p), a.v + w * (b.v - a.v))
}
