//! Jump detection on a sampled profile.
//!
//! An adjacent pair is flagged when its velocity jump exceeds ten times the
//! median adjacent jump of the whole profile. Flagged pairs closer than
//! [`MERGE_GAP`] points form one candidate, located at the midpoint of its
//! largest jump.

use alloc::vec::Vec;

/// Absolute lower bound on the flagging threshold, so that round-off on a
/// nearly constant profile is never reported.
pub const ABSOLUTE_FLOOR: f64 = 1e-9;

/// Ratio to the median adjacent jump above which a pair is flagged.
pub const MEDIAN_FACTOR: f64 = 10.0;

/// Flagged pairs at most this many indices apart belong to the same shock.
pub const MERGE_GAP: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShockCandidate {
    /// Midpoint of the pair with the largest jump.
    pub position: f64,
    /// Index of the left point of that pair.
    pub index: usize,
    /// First and last flagged pair (left indices).
    pub first: usize,
    pub last: usize,
    /// Profile values just outside the flagged band, inner side first.
    pub inner: f64,
    pub outer: f64,
    /// Largest adjacent jump in the band.
    pub jump: f64,
}

impl ShockCandidate {
    pub fn span(&self, x: &[f64]) -> (f64, f64) {
        (x[self.first], x[self.last + 1])
    }
}

fn median(values: &mut [f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    values.sort_unstable_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    }
}

/// Flagging threshold for the profile `v`.
pub fn threshold(v: &[f64]) -> f64 {
    let mut jumps: Vec<f64> = v.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    (MEDIAN_FACTOR * median(&mut jumps)).max(ABSOLUTE_FLOOR)
}

/// Shock candidates of the profile `v` sampled at increasing `x`, ordered by position.
pub fn detect_shocks(x: &[f64], v: &[f64]) -> Vec<ShockCandidate> {
    assert_eq!(x.len(), v.len(), "positions and values must have equal length");
    let mut found = Vec::new();
    if v.len() < 2 {
        return found;
    }
    let limit = threshold(v);
    let mut current: Option<ShockCandidate> = None;
    for i in 0..v.len() - 1 {
        let jump = (v[i + 1] - v[i]).abs();
        if jump <= limit {
            continue;
        }
        match current.as_mut() {
            Some(c) if i - c.last <= MERGE_GAP => {
                c.last = i;
                c.outer = v[i + 1];
                if jump > c.jump {
                    c.jump = jump;
                    c.index = i;
                    c.position = 0.5 * (x[i] + x[i + 1]);
                }
            }
            _ => {
                found.extend(current.take());
                current = Some(ShockCandidate {
                    position: 0.5 * (x[i] + x[i + 1]),
                    index: i,
                    first: i,
                    last: i,
                    inner: v[i],
                    outer: v[i + 1],
                    jump,
                });
            }
        }
    }
    found.extend(current);
    found
}

/// The candidate with the largest jump.
pub fn strongest(candidates: &[ShockCandidate]) -> Option<ShockCandidate> {
    candidates.iter().copied().max_by(|a, b| a.jump.total_cmp(&b.jump))
}
