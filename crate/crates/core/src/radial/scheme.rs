//! Time marching over the staggered grid: sampling of the initial level,
//! the odd/even level updates and the recorded run.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::radial::grid::StaggeredGrid;
use crate::radial::update::{axis_update, interior_update};
use crate::state::{four_velocity, to_conserved, ConservedPair, PrimitiveState, RadialField};

/// The states of one grid level `n` (one-based, `1..=2N+1`).
#[derive(Debug, Clone, PartialEq)]
pub struct LevelSolution {
    index: usize,
    time: f64,
    dx: f64,
    states: Vec<ConservedPair>,
}

impl LevelSolution {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn states(&self) -> &[ConservedPair] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Position of the zero-based point `j`.
    #[inline]
    pub fn position(&self, j: usize) -> f64 {
        if self.index % 2 == 1 {
            (j as f64 + 0.5) * self.dx
        } else {
            j as f64 * self.dx
        }
    }

    pub fn positions(&self) -> Vec<f64> {
        (0..self.states.len()).map(|j| self.position(j)).collect()
    }

    /// Pressure and velocity at every point.
    pub fn primitives(&self) -> Result<Vec<(f64, f64)>> {
        self.states
            .iter()
            .map(|s| s.to_primitive().map(|q| (q.p, q.velocity())))
            .collect()
    }

    pub fn to_field(&self) -> Result<RadialField> {
        RadialField::new(self.positions(), self.states.clone(), self.time)
    }
}

fn sample(
    grid: &StaggeredGrid,
    mut state_at: impl FnMut(f64) -> Result<PrimitiveState>,
) -> Result<LevelSolution> {
    let count = grid.points_on_level(1);
    let mut states = Vec::with_capacity(count);
    for j in 1..=count {
        states.push(to_conserved(state_at(grid.position(1, j))?));
    }
    Ok(LevelSolution { index: 1, time: 0.0, dx: grid.dx(), states })
}

/// Level one from pressure and velocity profiles, sampled at the midpoints.
pub fn initialize(
    grid: &StaggeredGrid,
    p0: impl Fn(f64) -> f64,
    v0: impl Fn(f64) -> f64,
) -> Result<LevelSolution> {
    sample(grid, |x| {
        let (p, v) = (p0(x), v0(x));
        let bad = Error::InvalidInitialData { x, pressure: p, velocity: v };
        let u = four_velocity(v).map_err(|_| bad.clone())?;
        PrimitiveState::new(p, u).map_err(|_| bad)
    })
}

/// Level one from pressure and four-velocity profiles.
pub fn initialize_four_velocity(
    grid: &StaggeredGrid,
    p0: impl Fn(f64) -> f64,
    u0: impl Fn(f64) -> f64,
) -> Result<LevelSolution> {
    sample(grid, |x| {
        let (p, u) = (p0(x), u0(x));
        PrimitiveState::new(p, u).map_err(|_| Error::InvalidInitialData {
            x,
            pressure: p,
            velocity: crate::state::velocity(u),
        })
    })
}

/// Level stepper with the geometric factors of every update point cached.
#[derive(Debug, Clone)]
pub struct RadialSolver {
    grid: StaggeredGrid,
    /// `κ` at the nodes `jΔx`, `j ≥ 1` (index `j - 1`).
    kappa_nodes: Vec<f64>,
    /// `κ` at the midpoints `(j + 1/2)Δx`.
    kappa_mids: Vec<f64>,
}

impl RadialSolver {
    pub fn new(grid: StaggeredGrid) -> Self {
        let dim = grid.dimension();
        let dx = grid.dx();
        let len = grid.points_on_level(1);
        let kappa_nodes = (1..=len).map(|j| dim.kappa(j as f64 * dx, dx)).collect();
        let kappa_mids = (0..len).map(|j| dim.kappa((j as f64 + 0.5) * dx, dx)).collect();
        Self { grid, kappa_nodes, kappa_mids }
    }

    pub fn grid(&self) -> &StaggeredGrid {
        &self.grid
    }

    /// Writes level `n + 1` into `next`, reusing its allocation.
    pub fn advance_into(&self, level: &LevelSolution, next: &mut LevelSolution) -> Result<()> {
        let n = level.index;
        if n == 0 || n >= self.grid.level_count() {
            return Err(Error::InvalidParameter("level index outside 1..=2N"));
        }
        if level.states.len() != self.grid.points_on_level(n) {
            return Err(Error::InvalidParameter("level size does not match the grid"));
        }
        let lambda = self.grid.lambda();
        let count = self.grid.points_on_level(n + 1);
        let src = &level.states;
        next.states.clear();
        next.states.resize(count, ConservedPair { a: 0.0, b: 0.0 });
        next.index = n + 1;
        next.time = self.grid.time_of_level(n + 1);
        next.dx = self.grid.dx();

        let out = &mut next.states[..];
        if n % 2 == 1 {
            // midpoints -> nodes: axis point, then x̄ = jΔx between src[j-1] and src[j]
            out[0] = axis_update(src[0], lambda);
            fill(&mut out[1..], |j| interior_update(src[j], src[j + 1], self.kappa_nodes[j], lambda));
        } else {
            // nodes -> midpoints: x̄ = (j + 1/2)Δx between src[j] and src[j+1]
            fill(out, |j| interior_update(src[j], src[j + 1], self.kappa_mids[j], lambda));
        }

        match out.iter().position(|s| !s.is_admissible()) {
            None => Ok(()),
            Some(j) => Err(Error::StateSpaceViolation { energy: out[j].a, momentum: out[j].b }),
        }
    }

    pub fn advance(&self, level: &LevelSolution) -> Result<LevelSolution> {
        let mut next = LevelSolution { index: 0, time: 0.0, dx: self.grid.dx(), states: Vec::new() };
        self.advance_into(level, &mut next)?;
        Ok(next)
    }

    /// Marches from `first` (level one) to level `2N + 1`.
    pub fn run_from(&self, first: LevelSolution, options: RecordOptions) -> Result<SpaceTimeRecord> {
        if first.index != 1 || first.states.len() != self.grid.points_on_level(1) {
            return Err(Error::InvalidParameter("run must start from level one"));
        }
        let stride = options.stride.max(1);
        let last = self.grid.level_count();
        let mut record = SpaceTimeRecord {
            grid: self.grid,
            levels: Vec::new(),
            axis: Vec::with_capacity(last),
        };
        record.push_axis(&first);
        let mut current = first;
        let mut next = LevelSolution { index: 0, time: 0.0, dx: self.grid.dx(), states: Vec::new() };
        for n in 1..last {
            if (n - 1) % stride == 0 {
                record.levels.push(current.clone());
            }
            self.advance_into(&current, &mut next)?;
            core::mem::swap(&mut current, &mut next);
            record.push_axis(&current);
        }
        record.levels.push(current);
        Ok(record)
    }
}

#[cfg(feature = "parallel")]
fn fill(out: &mut [ConservedPair], f: impl Fn(usize) -> ConservedPair + Sync) {
    use rayon::prelude::*;
    const CHUNK: usize = 4096;
    out.par_chunks_mut(CHUNK).enumerate().for_each(|(c, chunk)| {
        for (k, slot) in chunk.iter_mut().enumerate() {
            *slot = f(c * CHUNK + k);
        }
    });
}

#[cfg(not(feature = "parallel"))]
fn fill(out: &mut [ConservedPair], f: impl Fn(usize) -> ConservedPair) {
    for (j, slot) in out.iter_mut().enumerate() {
        *slot = f(j);
    }
}

/// Level `n + 1` from level `n`.
pub fn advance_level(grid: &StaggeredGrid, level: &LevelSolution) -> Result<LevelSolution> {
    RadialSolver::new(*grid).advance(level)
}

/// Which levels a run keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecordOptions {
    /// Keep levels `1, 1 + stride, 1 + 2·stride, ...`; the last level is always kept.
    pub stride: usize,
}

impl Default for RecordOptions {
    fn default() -> Self {
        Self { stride: usize::MAX }
    }
}

/// One sample of the first grid point of a level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisSample {
    pub level: usize,
    pub time: f64,
    pub x: f64,
    pub state: ConservedPair,
}

/// Recorded levels of a run plus the first point of every level.
#[derive(Debug, Clone)]
pub struct SpaceTimeRecord {
    grid: StaggeredGrid,
    levels: Vec<LevelSolution>,
    axis: Vec<AxisSample>,
}

impl SpaceTimeRecord {
    fn push_axis(&mut self, level: &LevelSolution) {
        self.axis.push(AxisSample {
            level: level.index,
            time: level.time,
            x: level.position(0),
            state: level.states[0],
        });
    }

    pub fn grid(&self) -> &StaggeredGrid {
        &self.grid
    }

    pub fn levels(&self) -> &[LevelSolution] {
        &self.levels
    }

    pub fn first(&self) -> &LevelSolution {
        &self.levels[0]
    }

    pub fn last(&self) -> &LevelSolution {
        &self.levels[self.levels.len() - 1]
    }

    pub fn axis(&self) -> &[AxisSample] {
        &self.axis
    }

    pub fn into_levels(self) -> Vec<LevelSolution> {
        self.levels
    }
}

/// Samples the profiles and runs the full `2N` level updates.
pub fn run(
    grid: &StaggeredGrid,
    p0: impl Fn(f64) -> f64,
    v0: impl Fn(f64) -> f64,
    options: RecordOptions,
) -> Result<SpaceTimeRecord> {
    let first = initialize(grid, p0, v0)?;
    RadialSolver::new(*grid).run_from(first, options)
}
