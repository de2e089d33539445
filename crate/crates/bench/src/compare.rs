//! Distances between radial profiles.

use std::fmt;

use urel_core::radial::detect_shocks;

use crate::error::{BenchError, Result};
use crate::io::{Landmark, Row};

/// `p(x)` and `v(x)` at strictly increasing radii.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    pub x: Vec<f64>,
    pub p: Vec<f64>,
    pub v: Vec<f64>,
}

impl Profile {
    pub fn new(x: Vec<f64>, p: Vec<f64>, v: Vec<f64>) -> Result<Self> {
        if x.is_empty() || x.len() != p.len() || x.len() != v.len() {
            return Err(BenchError::Format("profile columns differ in length or are empty".into()));
        }
        if x.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(BenchError::Format("profile radii must increase strictly".into()));
        }
        Ok(Self { x, p, v })
    }

    /// Rows of the latest time in `rows`.
    pub fn from_rows(rows: &[Row]) -> Result<Self> {
        let t = rows.iter().map(|r| r.t).fold(f64::NEG_INFINITY, f64::max);
        let last: Vec<&Row> = rows.iter().filter(|r| r.t == t).collect();
        Self::new(
            last.iter().map(|r| r.x).collect(),
            last.iter().map(|r| r.p).collect(),
            last.iter().map(|r| r.v).collect(),
        )
    }

    pub fn span(&self) -> (f64, f64) {
        (self.x[0], self.x[self.x.len() - 1])
    }

    /// Linear interpolation; `None` outside the sampled range.
    pub fn at(&self, r: f64) -> Option<(f64, f64)> {
        let (lo, hi) = self.span();
        if !(r >= lo && r <= hi) {
            return None;
        }
        let k = self.x.partition_point(|&x| x <= r);
        if k == self.x.len() {
            let n = self.x.len() - 1;
            return Some((self.p[n], self.v[n]));
        }
        if k == 0 {
            return Some((self.p[0], self.v[0]));
        }
        let w = (r - self.x[k - 1]) / (self.x[k] - self.x[k - 1]);
        let lerp = |y: &[f64]| y[k - 1] + w * (y[k] - y[k - 1]);
        Some((lerp(&self.p), lerp(&self.v)))
    }

    /// Shock positions from the velocity profile.
    pub fn shocks(&self) -> Vec<f64> {
        detect_shocks(&self.x, &self.v).iter().map(|c| c.position).collect()
    }
}

/// Measured value against a landmark.
#[derive(Debug, Clone, PartialEq)]
pub struct LandmarkCheck {
    pub landmark: Landmark,
    pub measured: f64,
    pub passed: bool,
}

impl LandmarkCheck {
    pub fn new(landmark: &Landmark, measured: f64) -> Self {
        Self { landmark: landmark.clone(), measured, passed: landmark.accepts(measured) }
    }
}

impl fmt::Display for LandmarkCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = &self.landmark;
        write!(
            f,
            "{} {} = {:.6} (expected {} ± {}; {})",
            if self.passed { "ok  " } else { "FAIL" },
            l.name,
            self.measured,
            l.value,
            l.tolerance,
            l.provenance
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub points: usize,
    /// Mean `|Δp|` over the common radii.
    pub l1_p: f64,
    /// Mean `|Δv|`.
    pub l1_v: f64,
    pub linf_p: f64,
    pub linf_v: f64,
    pub shocks_a: Vec<f64>,
    pub shocks_b: Vec<f64>,
    pub checks: Vec<LandmarkCheck>,
}

impl ComparisonReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "points   {}", self.points)?;
        writeln!(f, "L1  p    {:.6e}", self.l1_p)?;
        writeln!(f, "L1  v    {:.6e}", self.l1_v)?;
        writeln!(f, "Linf p   {:.6e}", self.linf_p)?;
        writeln!(f, "Linf v   {:.6e}", self.linf_v)?;
        writeln!(f, "shocks A {:?}", self.shocks_a)?;
        write!(f, "shocks B {:?}", self.shocks_b)?;
        for c in &self.checks {
            write!(f, "\n{c}")?;
        }
        Ok(())
    }
}

/// Pointwise distances at `radii`, which must lie inside both profiles.
pub fn compare(a: &Profile, b: &Profile, radii: &[f64]) -> Result<ComparisonReport> {
    if radii.is_empty() {
        return Err(BenchError::Domain("no common radii".into()));
    }
    let mut report = ComparisonReport {
        points: radii.len(),
        l1_p: 0.0,
        l1_v: 0.0,
        linf_p: 0.0,
        linf_v: 0.0,
        shocks_a: a.shocks(),
        shocks_b: b.shocks(),
        checks: Vec::new(),
    };
    for &r in radii {
        let miss = |which: &str, p: &Profile| {
            let (lo, hi) = p.span();
            BenchError::Domain(format!("r = {r} outside profile {which} on [{lo}, {hi}]"))
        };
        let (pa, va) = a.at(r).ok_or_else(|| miss("A", a))?;
        let (pb, vb) = b.at(r).ok_or_else(|| miss("B", b))?;
        let (dp, dv) = ((pa - pb).abs(), (va - vb).abs());
        report.l1_p += dp;
        report.l1_v += dv;
        report.linf_p = report.linf_p.max(dp);
        report.linf_v = report.linf_v.max(dv);
    }
    report.l1_p /= radii.len() as f64;
    report.l1_v /= radii.len() as f64;
    Ok(report)
}

/// Radii of `a` that also lie inside `b`.
pub fn common_radii(a: &Profile, b: &Profile) -> Vec<f64> {
    let (lo, hi) = b.span();
    a.x.iter().copied().filter(|&r| r >= lo && r <= hi).collect()
}
