//! Runs a case with one of the three solvers and stores the result.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use urel_core::euler2d::{self, CartesianGrid2D, StepOptions, VelocityKind};
use urel_core::radial::{
    initialize, initialize_four_velocity, Dimension, LevelSolution, RadialSolver, RecordOptions, SpaceTimeRecord,
    StaggeredGrid,
};
use urel_core::selfsim::{self, OdeConfig, SelfSimilarProfile, ShockState};

use crate::cases::{case, BenchmarkCase, Reference, VelocityProfile};
use crate::error::{BenchError, Result};
use crate::io::{write_rows, write_shock, Row};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverChoice {
    RadSym,
    Ode,
    Euler2d,
}

impl SolverChoice {
    pub fn as_str(self) -> &'static str {
        match self {
            SolverChoice::RadSym => "radsym",
            SolverChoice::Ode => "ode",
            SolverChoice::Euler2d => "euler2d",
        }
    }
}

impl fmt::Display for SolverChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SolverChoice {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "radsym" => Ok(SolverChoice::RadSym),
            "ode" => Ok(SolverChoice::Ode),
            "euler2d" => Ok(SolverChoice::Euler2d),
            _ => Err(BenchError::Unsupported(format!("unknown solver `{s}` (radsym, ode, euler2d)"))),
        }
    }
}

/// Everything that determines a run.
///
/// `resolution` is `N` for the radial scheme, the number of cells per side
/// for the 2D solver and the number of output intervals on `[0, x*]` for the
/// ODE reference.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRequest {
    pub case: u32,
    pub d: u32,
    pub solver: SolverChoice,
    pub resolution: usize,
    pub t_end: Option<f64>,
    /// Radial scheme only: also emit every `stride`-th level.
    pub stride: Option<usize>,
}

impl RunRequest {
    pub fn new(case: u32, solver: SolverChoice, resolution: usize) -> Self {
        Self { case, d: 2, solver, resolution, t_end: None, stride: None }
    }

    pub fn run(&self) -> Result<Artifacts> {
        let c = case(self.case, self.d)?;
        let t_end = self.t_end.unwrap_or(c.t_end);
        if !(t_end > 0.0) {
            return Err(BenchError::Unsupported(format!("final time {t_end} must be positive")));
        }
        if self.resolution == 0 {
            return Err(BenchError::Unsupported("resolution must be positive".into()));
        }
        let ctx = format!("case {} ({}, d = {}, {} {})", c.id, c.name, c.d, self.solver, self.resolution);
        let mut out = Artifacts {
            request: self.clone(),
            rows: Vec::new(),
            shock: None,
            floor_events: 0,
            record: None,
        };
        match self.solver {
            SolverChoice::RadSym => {
                let stride = self.stride.unwrap_or(usize::MAX);
                let record = radial_record(&c, self.resolution, t_end, RecordOptions { stride })
                    .map_err(BenchError::solver(ctx.clone()))?;
                let levels = if self.stride.is_some() { record.levels() } else { std::slice::from_ref(record.last()) };
                for level in levels {
                    out.rows.extend(level_rows(level)?);
                }
                out.record = Some(record);
            }
            SolverChoice::Ode => {
                let profile = ode_reference(&c).map_err(BenchError::solver(ctx.clone()))?;
                let radii: Vec<f64> =
                    (0..=self.resolution).map(|j| c.x_star * j as f64 / self.resolution as f64).collect();
                let values = selfsim::profile_at_time(&profile, t_end, &radii).map_err(BenchError::solver(ctx))?;
                for (x, (p, v)) in radii.iter().zip(values) {
                    out.rows.push(Row::from_primitive(t_end, *x, p, v)?);
                }
                out.shock = profile.shock().copied();
            }
            SolverChoice::Euler2d => {
                if c.d != 2 {
                    return Err(BenchError::Unsupported("the Cartesian solver runs in two dimensions only".into()));
                }
                let (state, report) = euler2d_run(&c, self.resolution, t_end).map_err(BenchError::solver(ctx.clone()))?;
                let prof = euler2d::radial_profile(&state, (self.resolution / 2).max(1), c.x_star)
                    .map_err(BenchError::solver(ctx))?;
                for k in 0..prof.r.len() {
                    out.rows.push(Row::from_primitive(state.time(), prof.r[k], prof.p[k], prof.v[k])?);
                }
                out.floor_events = report.floor_events;
            }
        }
        Ok(out)
    }
}

/// Output of [`RunRequest::run`].
#[derive(Debug, Clone)]
pub struct Artifacts {
    pub request: RunRequest,
    pub rows: Vec<Row>,
    /// Fitted shock of the ODE reference.
    pub shock: Option<ShockState>,
    pub floor_events: usize,
    /// Full radial-scheme record, including the axis history.
    pub record: Option<SpaceTimeRecord>,
}

impl Artifacts {
    pub fn file_stem(&self) -> String {
        let r = &self.request;
        format!("case{}_d{}_{}_{}", r.case, r.d, r.solver, r.resolution)
    }

    /// Writes `<stem>.csv` and, for shocked ODE runs, `<stem>_shock.csv`.
    pub fn write_to(&self, dir: &Path) -> Result<Vec<PathBuf>> {
        fs::create_dir_all(dir).map_err(BenchError::io(dir))?;
        let mut written = Vec::new();
        let path = dir.join(format!("{}.csv", self.file_stem()));
        let file = fs::File::create(&path).map_err(BenchError::io(&path))?;
        write_rows(std::io::BufWriter::new(file), &self.rows)?;
        written.push(path);
        if let Some(shock) = &self.shock {
            let path = dir.join(format!("{}_shock.csv", self.file_stem()));
            let file = fs::File::create(&path).map_err(BenchError::io(&path))?;
            write_shock(file, shock)?;
            written.push(path);
        }
        Ok(written)
    }
}

/// Shorthand for `RunRequest::new(case, solver, resolution).run()`.
pub fn run_case(case: u32, solver: SolverChoice, resolution: usize) -> Result<Artifacts> {
    RunRequest::new(case, solver, resolution).run()
}

pub fn level_rows(level: &LevelSolution) -> Result<Vec<Row>> {
    level
        .states()
        .iter()
        .enumerate()
        .map(|(j, w)| Row::from_conserved(level.time(), level.position(j), *w))
        .collect()
}

pub fn radial_record(
    c: &BenchmarkCase,
    half_steps: usize,
    t_end: f64,
    options: RecordOptions,
) -> urel_core::Result<SpaceTimeRecord> {
    let grid = StaggeredGrid::new(t_end, c.x_star, half_steps)?.with_dimension(Dimension::from_value(c.d)?);
    let first = match c.velocity {
        VelocityProfile::Velocity(v0) => initialize(&grid, c.p0, v0)?,
        VelocityProfile::FourVelocity(u0) => initialize_four_velocity(&grid, c.p0, u0)?,
    };
    RadialSolver::new(grid).run_from(first, options)
}

pub fn ode_reference(c: &BenchmarkCase) -> urel_core::Result<SelfSimilarProfile> {
    match c.reference {
        Reference::Ode { v0 } => selfsim::integrate(c.d, v0, OdeConfig::default()),
        Reference::None => Err(urel_core::Error::InvalidParameter("case has no self-similar reference")),
    }
}

pub fn euler2d_run(
    c: &BenchmarkCase,
    n: usize,
    t_end: f64,
) -> urel_core::Result<(euler2d::FieldState2D, euler2d::RunReport)> {
    let grid = CartesianGrid2D::square(c.x_star, n)?;
    let (profile, kind) = match c.velocity {
        VelocityProfile::Velocity(f) => (f, VelocityKind::Velocity),
        VelocityProfile::FourVelocity(f) => (f, VelocityKind::FourVelocity),
    };
    let mut state = euler2d::init_radial(&grid, c.p0, profile, kind)?;
    let report = euler2d::advance_to(&mut state, t_end, StepOptions::default())?;
    Ok((state, report))
}

/// Peak of the on-axis pressure over the run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Focus {
    pub time: f64,
    pub pressure: f64,
    pub level: usize,
}

/// Time and value of the largest pressure at the first grid point; ties
/// go to the earliest level.
pub fn detect_focus(record: &SpaceTimeRecord) -> Result<Focus> {
    let axis = record.axis();
    if axis.len() < 3 {
        return Err(BenchError::InsufficientRecord(format!("{} axis samples", axis.len())));
    }
    if let Some(w) = axis.windows(2).find(|w| w[1].level != w[0].level + 1) {
        return Err(BenchError::InsufficientRecord(format!("levels {} to {} missing", w[0].level + 1, w[1].level - 1)));
    }
    let mut best: Option<(usize, f64)> = None;
    for (k, s) in axis.iter().enumerate() {
        let p = s.state.pressure().map_err(BenchError::solver(format!("axis at t = {}", s.time)))?;
        if best.is_none_or(|(_, b)| p > b) {
            best = Some((k, p));
        }
    }
    let (k, pressure) = best.expect("axis is non-empty");
    if k == axis.len() - 1 {
        return Err(BenchError::InsufficientRecord("on-axis pressure still rising at the final level".into()));
    }
    Ok(Focus { time: axis[k].time, pressure, level: axis[k].level })
}
