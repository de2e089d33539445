//! Solvers for the ultra-relativistic Euler equations.
//!
//! * [`state`]: primitive and conserved radial variables.
//! * [`radial`]: the staggered-grid scheme for radially symmetric flow in two and three dimensions.
//! * [`selfsim`]: self-similar solutions from the ODE in `ϑ = t/x`, with shock fitting.
//! * [`eigen`]: flux, characteristic speeds and eigenvectors of the multi-dimensional system.
//! * [`euler2d`]: a finite-volume solver on Cartesian grids for cross-checks.
//!
//! The crate is `no_std` with `alloc`; the `std` feature only adds the
//! standard library and `parallel` spreads level updates over rayon.
#![cfg_attr(not(feature = "std"), no_std)]
// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

extern crate alloc;

mod math;

pub mod eigen;
pub mod euler2d;
pub mod error;
pub mod radial;
pub mod selfsim;
pub mod state;

pub use error::{Error, Result};
pub use state::{flux_c, four_velocity, to_conserved, to_primitive, velocity, ConservedPair, PrimitiveState, RadialField};
