//! Finite-volume solver for the two-dimensional system on a uniform
//! Cartesian grid: local Lax-Friedrichs fluxes, first order or minmod-limited
//! MUSCL on `(p, u_x, u_y)` with two-stage SSP Runge-Kutta, outflow
//! boundaries and a counted pressure floor.

use alloc::vec;
use alloc::vec::Vec;

use crate::eigen::{flux_and_speed, ConservedVector};
use crate::error::{Error, Result};
use crate::math::{hypot, sqrt};

pub type State2 = ConservedVector<2>;

/// Pressure assigned to cells whose update left the state space.
pub const PRESSURE_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartesianGrid2D {
    pub x_lo: f64,
    pub x_hi: f64,
    pub y_lo: f64,
    pub y_hi: f64,
    pub nx: usize,
    pub ny: usize,
}

impl CartesianGrid2D {
    pub fn new(x_lo: f64, x_hi: f64, y_lo: f64, y_hi: f64, nx: usize, ny: usize) -> Result<Self> {
        if nx < 4 || ny < 4 {
            return Err(Error::InvalidParameter("grid needs at least 4 cells per direction"));
        }
        if !(x_hi > x_lo) || !(y_hi > y_lo) || !(x_hi - x_lo).is_finite() || !(y_hi - y_lo).is_finite() {
            return Err(Error::InvalidParameter("grid bounds must be increasing and finite"));
        }
        Ok(Self { x_lo, x_hi, y_lo, y_hi, nx, ny })
    }

    /// `[-h, h]²` with `n × n` cells.
    pub fn square(half_width: f64, n: usize) -> Result<Self> {
        Self::new(-half_width, half_width, -half_width, half_width, n, n)
    }

    pub fn dx(&self) -> f64 {
        (self.x_hi - self.x_lo) / self.nx as f64
    }

    pub fn dy(&self) -> f64 {
        (self.y_hi - self.y_lo) / self.ny as f64
    }

    pub fn cell_area(&self) -> f64 {
        self.dx() * self.dy()
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn index(&self, i: usize, j: usize) -> usize {
        j * self.nx + i
    }

    #[inline]
    pub fn center(&self, i: usize, j: usize) -> (f64, f64) {
        (
            self.x_lo + (i as f64 + 0.5) * self.dx(),
            self.y_lo + (j as f64 + 0.5) * self.dy(),
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FieldState2D {
    grid: CartesianGrid2D,
    cells: Vec<State2>,
    time: f64,
    floor_events: usize,
}

impl FieldState2D {
    pub fn new(grid: CartesianGrid2D, cells: Vec<State2>, time: f64) -> Result<Self> {
        if cells.len() != grid.len() {
            return Err(Error::InvalidParameter("cell count does not match the grid"));
        }
        if let Some(w) = cells.iter().find(|w| !w.is_admissible()) {
            return Err(Error::StateSpaceViolation { energy: w.energy, momentum: hypot(w.momentum[0], w.momentum[1]) });
        }
        Ok(Self { grid, cells, time, floor_events: 0 })
    }

    pub fn grid(&self) -> &CartesianGrid2D {
        &self.grid
    }

    pub fn cells(&self) -> &[State2] {
        &self.cells
    }

    pub fn cell(&self, i: usize, j: usize) -> &State2 {
        &self.cells[self.grid.index(i, j)]
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    /// Number of cell updates repaired by the pressure floor so far.
    pub fn floor_events(&self) -> usize {
        self.floor_events
    }

    /// `Σ w · cell area` per component.
    pub fn totals(&self) -> [f64; 3] {
        let area = self.grid.cell_area();
        let mut t = [0.0; 3];
        for w in &self.cells {
            t[0] += w.momentum[0];
            t[1] += w.momentum[1];
            t[2] += w.energy;
        }
        t.map(|x| x * area)
    }
}

/// How the radial velocity profile of [`init_radial`] is given.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VelocityKind {
    /// Velocity `v` with `|v| < 1`.
    Velocity,
    /// Radial four-velocity `u`.
    FourVelocity,
}

/// Cell-centred sampling of `p0(|x|)` and the radial velocity profile
/// along `x/|x|`; a cell centred on the origin is at rest.
pub fn init_radial(
    grid: &CartesianGrid2D,
    p0: impl Fn(f64) -> f64,
    velocity: impl Fn(f64) -> f64,
    kind: VelocityKind,
) -> Result<FieldState2D> {
    let mut cells = Vec::with_capacity(grid.len());
    for j in 0..grid.ny {
        for i in 0..grid.nx {
            let (x, y) = grid.center(i, j);
            let r = hypot(x, y);
            let p = p0(r);
            let q = velocity(r);
            let u = match kind {
                VelocityKind::Velocity => crate::state::four_velocity(q).ok(),
                VelocityKind::FourVelocity => q.is_finite().then_some(q),
            };
            let bad = Error::InvalidInitialData { x: r, pressure: p, velocity: q };
            let u = u.ok_or(bad.clone())?;
            let dir = if r > 0.0 { [x / r, y / r] } else { [0.0, 0.0] };
            let w = ConservedVector::from_primitive(p, [u * dir[0], u * dir[1]]).map_err(|_| bad)?;
            cells.push(w);
        }
    }
    FieldState2D::new(*grid, cells, 0.0)
}

/// `½(f_n(w_L) + f_n(w_R)) - ½ s (w_R - w_L)` with `s` the largest
/// characteristic speed of both states in direction `n`.
pub fn llf_flux(wl: &State2, wr: &State2, n: &[f64; 2]) -> Result<State2> {
    let pl = crate::eigen::pressure(wl)?;
    let pr = crate::eigen::pressure(wr)?;
    let (fl, sl) = flux_and_speed(wl, pl, n);
    let (fr, sr) = flux_and_speed(wr, pr, n);
    let s = sl.max(sr);
    let mut out = State2::ZERO;
    for k in 0..3 {
        out.set(k, 0.5 * (fl.get(k) + fr.get(k)) - 0.5 * s * (wr.get(k) - wl.get(k)));
    }
    Ok(out)
}

/// Pressure and four-velocity.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Prim {
    p: f64,
    u: [f64; 2],
}

impl Prim {
    #[inline]
    fn from_conserved(w: &State2) -> Prim {
        let p = w.pressure_unchecked();
        let scale = sqrt(4.0 * p * (w.energy + p));
        Prim { p, u: [w.momentum[0] / scale, w.momentum[1] / scale] }
    }

    /// Conserved state, flux along `axis` and largest speed along `axis`.
    #[inline]
    fn flux(&self, axis: usize) -> (State2, State2, f64) {
        let p = self.p;
        let uu = self.u[0] * self.u[0] + self.u[1] * self.u[1];
        let g = sqrt(1.0 + uu);
        let k = 4.0 * p * g;
        let w = State2 { momentum: [k * self.u[0], k * self.u[1]], energy: p * (3.0 + 4.0 * uu) };
        let un = self.u[axis];
        // w_n / (E + p) = u_n / g
        let a = un / g;
        let mut f = State2 { momentum: [a * w.momentum[0], a * w.momentum[1]], energy: w.momentum[axis] };
        f.momentum[axis] += p;
        let den = 3.0 + 2.0 * uu;
        let ut = uu - un * un;
        let root = sqrt(3.0 + 2.0 * if ut > 0.0 { ut } else { 0.0 });
        let c = 2.0 * un * g;
        let s = ((c - root).abs().max((c + root).abs()) / den).max(a.abs());
        (w, f, s)
    }
}

#[inline]
fn minmod(a: f64, b: f64) -> f64 {
    if a * b <= 0.0 {
        0.0
    } else if a.abs() < b.abs() {
        a
    } else {
        b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Reconstruction {
    FirstOrder,
    /// Minmod-limited linear reconstruction with two-stage SSP Runge-Kutta.
    #[default]
    Muscl,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepOptions {
    pub cfl: f64,
    pub reconstruction: Reconstruction,
}

impl Default for StepOptions {
    fn default() -> Self {
        Self { cfl: 0.45, reconstruction: Reconstruction::Muscl }
    }
}

/// Outcome of one time step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepReport {
    pub dt: f64,
    /// Net outflow `∫ F·n ds dt` through the domain boundary per component.
    pub boundary_outflow: [f64; 3],
    /// Cells repaired by the floor in this step.
    pub floor_events: usize,
}

/// Reusable work arrays for [`Solver2D::step`].
#[derive(Debug, Clone)]
pub struct Solver2D {
    options: StepOptions,
    prims: Vec<Prim>,
    rhs: Vec<State2>,
    stage: Vec<State2>,
}

impl Solver2D {
    pub fn new(options: StepOptions) -> Result<Self> {
        if !(options.cfl > 0.0 && options.cfl < 1.0) {
            return Err(Error::InvalidParameter("CFL number must lie in (0, 1)"));
        }
        Ok(Self { options, prims: Vec::new(), rhs: Vec::new(), stage: Vec::new() })
    }

    pub fn options(&self) -> StepOptions {
        self.options
    }

    /// Stable step `cfl · min(Δx, Δy) / s_max`.
    pub fn stable_dt(&mut self, state: &FieldState2D) -> f64 {
        self.load_primitives(&state.cells);
        let mut s = 0.0f64;
        for q in &self.prims {
            s = s.max(q.flux(0).2).max(q.flux(1).2);
        }
        let g = &state.grid;
        self.options.cfl * g.dx().min(g.dy()) / s
    }

    fn load_primitives(&mut self, cells: &[State2]) {
        self.prims.clear();
        self.prims.extend(cells.iter().map(Prim::from_conserved));
    }

    /// `rhs = -(ΔF/Δx + ΔG/Δy)` for the current primitives; returns the
    /// boundary outflow rate.
    fn residual(&mut self, grid: &CartesianGrid2D) -> [f64; 3] {
        let (nx, ny) = (grid.nx, grid.ny);
        let second = self.options.reconstruction == Reconstruction::Muscl;
        self.rhs.clear();
        self.rhs.resize(grid.len(), State2::ZERO);
        let prims = &self.prims;
        let rhs = &mut self.rhs;
        let mut outflow = [0.0; 3];

        // face states along a line of cells: `at(k)` for k in 0..len
        let face_flux = |ql: Prim, qr: Prim, axis: usize| -> State2 {
            let (wl, fl, sl) = ql.flux(axis);
            let (wr, fr, sr) = qr.flux(axis);
            let s = sl.max(sr);
            let mut out = State2::ZERO;
            for k in 0..3 {
                out.set(k, 0.5 * (fl.get(k) + fr.get(k)) - 0.5 * s * (wr.get(k) - wl.get(k)));
            }
            out
        };
        let slope = |m: Prim, c: Prim, p: Prim| -> Prim {
            Prim {
                p: minmod(c.p - m.p, p.p - c.p),
                u: [minmod(c.u[0] - m.u[0], p.u[0] - c.u[0]), minmod(c.u[1] - m.u[1], p.u[1] - c.u[1])],
            }
        };
        let shift = |c: Prim, s: Prim, h: f64| Prim { p: c.p + h * s.p, u: [c.u[0] + h * s.u[0], c.u[1] + h * s.u[1]] };

        let mut line_q: Vec<Prim> = Vec::new();
        let mut line_s: Vec<Prim> = Vec::new();
        let mut faces: Vec<State2> = Vec::new();
        for axis in 0..2 {
            let (len, lines, h) = if axis == 0 { (nx, ny, grid.dx()) } else { (ny, nx, grid.dy()) };
            let edge = if axis == 0 { grid.dy() } else { grid.dx() };
            for line in 0..lines {
                let idx = |k: usize| if axis == 0 { line * nx + k } else { k * nx + line };
                line_q.clear();
                line_q.extend((0..len).map(|k| prims[idx(k)]));
                line_s.clear();
                if second {
                    for k in 0..len {
                        let m = line_q[k.saturating_sub(1)];
                        let p = line_q[(k + 1).min(len - 1)];
                        line_s.push(slope(m, line_q[k], p));
                    }
                }
                // faces 0..=len; outer faces see a copied ghost cell
                faces.clear();
                for f in 0..=len {
                    let l = f.saturating_sub(1);
                    let r = f.min(len - 1);
                    let (ql, qr) = if second {
                        (
                            if f == 0 { shift(line_q[0], line_s[0], -0.5) } else { shift(line_q[l], line_s[l], 0.5) },
                            if f == len { shift(line_q[r], line_s[r], 0.5) } else { shift(line_q[r], line_s[r], -0.5) },
                        )
                    } else {
                        (line_q[l], line_q[r])
                    };
                    faces.push(face_flux(ql, qr, axis));
                }
                for c in 0..3 {
                    outflow[c] += (faces[len].get(c) - faces[0].get(c)) * edge;
                }
                let inv = 1.0 / h;
                for k in 0..len {
                    let slot = &mut rhs[idx(k)];
                    for c in 0..3 {
                        slot.set(c, slot.get(c) - inv * (faces[k + 1].get(c) - faces[k].get(c)));
                    }
                }
            }
        }
        outflow
    }

    /// Advances `state` by one step no longer than `dt_max`.
    pub fn step(&mut self, state: &mut FieldState2D, dt_max: f64) -> Result<StepReport> {
        let grid = state.grid;
        let dt = self.stable_dt(state).min(dt_max);
        if !(dt > 0.0) || !dt.is_finite() {
            return Err(Error::InvalidParameter("time step must be positive"));
        }
        let mut floor = 0;
        // the residual uses the primitives loaded by stable_dt
        let rate0 = self.residual(&grid);
        let stage_one = |cells: &[State2], rhs: &[State2], out: &mut Vec<State2>, dt: f64| {
            out.clear();
            out.extend(cells.iter().zip(rhs).map(|(w, r)| w.axpy(dt, r)));
        };
        let outflow;
        match self.options.reconstruction {
            Reconstruction::FirstOrder => {
                let mut next = core::mem::take(&mut self.stage);
                stage_one(&state.cells, &self.rhs, &mut next, dt);
                floor += repair(&mut next, state.time)?;
                self.stage = core::mem::replace(&mut state.cells, next);
                outflow = rate0.map(|r| r * dt);
            }
            Reconstruction::Muscl => {
                let mut mid = core::mem::take(&mut self.stage);
                stage_one(&state.cells, &self.rhs, &mut mid, dt);
                floor += repair(&mut mid, state.time)?;
                self.load_primitives(&mid);
                let rate1 = self.residual(&grid);
                for ((w, m), r) in state.cells.iter_mut().zip(&mid).zip(&self.rhs) {
                    let e = m.axpy(dt, r);
                    *w = State2 {
                        momentum: [0.5 * (w.momentum[0] + e.momentum[0]), 0.5 * (w.momentum[1] + e.momentum[1])],
                        energy: 0.5 * (w.energy + e.energy),
                    };
                }
                self.stage = mid;
                floor += repair(&mut state.cells, state.time)?;
                outflow = [0, 1, 2].map(|c| 0.5 * dt * (rate0[c] + rate1[c]));
            }
        }
        state.time += dt;
        state.floor_events += floor;
        Ok(StepReport { dt, boundary_outflow: outflow, floor_events: floor })
    }
}

/// Restores `p ≥ PRESSURE_FLOOR` by shrinking the momentum at fixed energy.
fn repair(cells: &mut [State2], time: f64) -> Result<usize> {
    let mut events = 0;
    for (c, w) in cells.iter_mut().enumerate() {
        if w.is_admissible() && w.pressure_unchecked() > PRESSURE_FLOOR {
            continue;
        }
        if !w.energy.is_finite() || !w.momentum.iter().all(|x| x.is_finite()) {
            return Err(Error::BlowUp { cell: c, time });
        }
        events += 1;
        let p = PRESSURE_FLOOR;
        if w.energy <= 3.0 * p {
            *w = State2 { momentum: [0.0, 0.0], energy: 3.0 * p };
            continue;
        }
        let uu = (w.energy / p - 3.0) / 4.0;
        let target = 4.0 * p * sqrt(uu) * sqrt(1.0 + uu);
        let m = hypot(w.momentum[0], w.momentum[1]);
        if m > 0.0 {
            let k = target / m;
            w.momentum = [k * w.momentum[0], k * w.momentum[1]];
        }
    }
    Ok(events)
}

/// One step with a fresh solver; see [`Solver2D`] for repeated stepping.
pub fn step(state: &mut FieldState2D, options: StepOptions) -> Result<StepReport> {
    Solver2D::new(options)?.step(state, f64::INFINITY)
}

/// Totals over a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunReport {
    pub steps: usize,
    pub boundary_outflow: [f64; 3],
    pub floor_events: usize,
}

/// Steps until `t_end`, landing on it exactly.
pub fn advance_to(state: &mut FieldState2D, t_end: f64, options: StepOptions) -> Result<RunReport> {
    let mut solver = Solver2D::new(options)?;
    let mut report = RunReport { steps: 0, boundary_outflow: [0.0; 3], floor_events: 0 };
    while state.time < t_end {
        let remaining = t_end - state.time;
        let r = solver.step(state, remaining)?;
        if r.dt >= remaining {
            state.time = t_end;
        }
        report.steps += 1;
        report.floor_events += r.floor_events;
        for c in 0..3 {
            report.boundary_outflow[c] += r.boundary_outflow[c];
        }
    }
    Ok(report)
}

/// Bin averages over equal-width rings `[k, k+1)·r_max/nbins`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    /// Mean radius of the cell centres in each bin.
    pub r: Vec<f64>,
    pub p: Vec<f64>,
    /// Radial velocity `(ū·x̂)/sqrt(1 + |ū|²)`.
    pub v: Vec<f64>,
    /// In-bin standard deviation of the pressure.
    pub p_spread: Vec<f64>,
    pub count: Vec<usize>,
}

pub fn radial_profile(state: &FieldState2D, nbins: usize, r_max: f64) -> Result<RadialProfile> {
    if nbins == 0 || !(r_max > 0.0) {
        return Err(Error::InvalidParameter("need at least one bin and a positive radius"));
    }
    let grid = &state.grid;
    let width = r_max / nbins as f64;
    let mut sums = vec![[0.0f64; 4]; nbins];
    let mut count = vec![0usize; nbins];
    for j in 0..grid.ny {
        for i in 0..grid.nx {
            let (x, y) = grid.center(i, j);
            let r = hypot(x, y);
            let k = (r / width) as usize;
            if k >= nbins && !(nbins == 1 && r <= r_max) {
                continue;
            }
            let k = k.min(nbins - 1);
            let q = Prim::from_conserved(state.cell(i, j));
            let g = sqrt(1.0 + q.u[0] * q.u[0] + q.u[1] * q.u[1]);
            let v = if r > 0.0 { (q.u[0] * x + q.u[1] * y) / (r * g) } else { 0.0 };
            let s = &mut sums[k];
            s[0] += r;
            s[1] += q.p;
            s[2] += v;
            s[3] += q.p * q.p;
            count[k] += 1;
        }
    }
    let mut out = RadialProfile { r: vec![], p: vec![], v: vec![], p_spread: vec![], count: vec![] };
    for (s, &c) in sums.iter().zip(&count) {
        if c == 0 {
            continue;
        }
        let n = c as f64;
        let mean = s[1] / n;
        out.r.push(s[0] / n);
        out.p.push(mean);
        out.v.push(s[2] / n);
        out.p_spread.push(sqrt((s[3] / n - mean * mean).max(0.0)));
        out.count.push(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rest(n: usize) -> FieldState2D {
        let grid = CartesianGrid2D::square(1.0, n).unwrap();
        init_radial(&grid, |_| 2.0, |_| 0.0, VelocityKind::Velocity).unwrap()
    }

    #[test]
    fn rest_state_is_preserved() {
        for reconstruction in [Reconstruction::FirstOrder, Reconstruction::Muscl] {
            let mut s = rest(8);
            let before = s.cells().to_vec();
            let r = step(&mut s, StepOptions { cfl: 0.45, reconstruction }).unwrap();
            assert!(r.dt > 0.0);
            assert_eq!(s.cells(), &before[..]);
        }
    }

    #[test]
    fn llf_consistency() {
        let w = ConservedVector::from_primitive(1.3, [0.4, -0.2]).unwrap();
        let n = [0.6, 0.8];
        let f = llf_flux(&w, &w, &n).unwrap();
        let g = crate::eigen::normal_flux(&w, &n).unwrap();
        for k in 0..3 {
            assert!((f.get(k) - g.get(k)).abs() < 1e-15);
        }
        let r = ConservedVector::new([0.0, 0.0], 3.0).unwrap();
        assert_eq!(llf_flux(&r, &r, &[0.0, 1.0]).unwrap().to_vec(), [0.0, 1.0, 0.0]);
    }

    #[test]
    fn llf_two_rest_states() {
        // ½(1 + 0.1) - ½ (1/√3)(0.3 - 3) in the momentum, ½ (1/√3)(2.7) dissipation in energy
        let l = ConservedVector::new([0.0, 0.0], 3.0).unwrap();
        let r = ConservedVector::new([0.0, 0.0], 0.3).unwrap();
        let f = llf_flux(&l, &r, &[1.0, 0.0]).unwrap();
        let s = 1.0 / 3f64.sqrt();
        assert!((f.momentum[0] - 0.55).abs() < 1e-15);
        assert_eq!(f.momentum[1], 0.0);
        assert!((f.energy - 0.5 * s * 2.7).abs() < 1e-15);
    }

    #[test]
    fn origin_cell_at_rest() {
        let grid = CartesianGrid2D::square(1.0, 5).unwrap();
        let s = init_radial(&grid, |_| 1.0, |_| -1.0 / 2f64.sqrt(), VelocityKind::Velocity).unwrap();
        assert_eq!(s.cell(2, 2).momentum, [0.0, 0.0]);
        let (p, u) = crate::eigen::primitive_from_conserved(s.cell(4, 2)).unwrap();
        assert!((p - 1.0).abs() < 1e-14 && (u[0] + 1.0).abs() < 1e-14 && u[1].abs() < 1e-14);
    }

    #[test]
    fn floor_repair() {
        let mut cells = [State2 { momentum: [3.0, 4.0], energy: 5.0 }, State2 { momentum: [0.0, 1.0], energy: -1.0 }];
        assert_eq!(repair(&mut cells, 0.0).unwrap(), 2);
        assert!(cells.iter().all(|w| w.is_admissible()));
        let p = cells[0].pressure_unchecked();
        assert!((p - PRESSURE_FLOOR).abs() < 1e-9 * 5.0);
        let mut bad = [State2 { momentum: [f64::NAN, 0.0], energy: 1.0 }];
        assert!(matches!(repair(&mut bad, 0.0), Err(Error::BlowUp { .. })));
    }

    #[test]
    fn profile_of_rest_state() {
        let s = rest(16);
        let prof = radial_profile(&s, 4, 1.0).unwrap();
        assert!(prof.p.iter().all(|&p| (p - 2.0).abs() < 1e-15));
        assert!(prof.v.iter().all(|&v| v == 0.0));
        let one = radial_profile(&s, 1, 2.0).unwrap();
        assert_eq!(one.count, [256]);
    }
}
