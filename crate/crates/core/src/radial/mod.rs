//! The staggered-grid scheme for radially symmetric flow.

pub mod grid;
pub mod scheme;
pub mod shock;
pub mod update;

pub use grid::{build_grid, Dimension, StaggeredGrid};
pub use scheme::{
    advance_level, initialize, initialize_four_velocity, run, AxisSample, LevelSolution, RadialSolver,
    RecordOptions, SpaceTimeRecord,
};
pub use shock::{detect_shocks, ShockCandidate};
pub use update::{euler_update, euler_update_in, reflect_boundary};
