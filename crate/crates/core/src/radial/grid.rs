use crate::error::{Error, Result};
use crate::math::floor;

/// Spatial dimension of the radially symmetric problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Dimension {
    #[default]
    Two,
    Three,
}

impl Dimension {
    pub fn value(self) -> u32 {
        match self {
            Dimension::Two => 2,
            Dimension::Three => 3,
        }
    }

    pub fn from_value(d: u32) -> Result<Self> {
        match d {
            2 => Ok(Dimension::Two),
            3 => Ok(Dimension::Three),
            _ => Err(Error::InvalidParameter("dimension must be 2 or 3")),
        }
    }
}

/// Staggered discretisation of the trapezoidal domain
/// `{0 ≤ t ≤ t*, 0 ≤ x ≤ x* + λ(t* - t)}`.
///
/// Level `n = 1..=2N+1` lives at `t_n = (n-1)Δt`; odd levels sit on cell
/// midpoints `(j - 1/2)Δx`, even levels on nodes `(j - 1)Δx`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StaggeredGrid {
    t_star: f64,
    x_star: f64,
    half_steps: usize,
    cells: usize,
    dt: f64,
    dx: f64,
    lambda: f64,
    dimension: Dimension,
}

impl StaggeredGrid {
    /// Grid for `d = 2`; see [`StaggeredGrid::with_dimension`].
    pub fn new(t_star: f64, x_star: f64, half_steps: usize) -> Result<Self> {
        build_grid(t_star, x_star, half_steps)
    }

    pub fn with_dimension(mut self, dimension: Dimension) -> Self {
        self.dimension = dimension;
        self
    }

    pub fn t_star(&self) -> f64 {
        self.t_star
    }

    pub fn x_star(&self) -> f64 {
        self.x_star
    }

    /// `N`: the run takes `2N` level updates.
    pub fn half_steps(&self) -> usize {
        self.half_steps
    }

    /// `M = ⌊(x*/t*) N⌋`.
    pub fn cells(&self) -> usize {
        self.cells
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    /// Mesh ratio `λ = Δx / (2Δt) ≥ 1`.
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn dimension(&self) -> Dimension {
        self.dimension
    }

    pub fn level_count(&self) -> usize {
        2 * self.half_steps + 1
    }

    /// `M + N - ⌊(n-1)/2⌋`.
    pub fn points_on_level(&self, n: usize) -> usize {
        self.cells + self.half_steps - (n - 1) / 2
    }

    pub fn time_of_level(&self, n: usize) -> f64 {
        (n - 1) as f64 * self.dt
    }

    /// Position of the first point on level `n`: `Δx/2` on odd levels, the axis on even ones.
    pub fn level_offset(&self, n: usize) -> f64 {
        if n % 2 == 1 {
            0.5 * self.dx
        } else {
            0.0
        }
    }

    /// `x_{n,j}` with one-based `j`.
    pub fn position(&self, n: usize, j: usize) -> f64 {
        if n % 2 == 1 {
            (j as f64 - 0.5) * self.dx
        } else {
            (j - 1) as f64 * self.dx
        }
    }
}

/// Builds the grid for `t*, x* > 0` and `N ≥ 1` with `N·x* ≥ t*`.
pub fn build_grid(t_star: f64, x_star: f64, half_steps: usize) -> Result<StaggeredGrid> {
    if !(t_star > 0.0) || !t_star.is_finite() {
        return Err(Error::InvalidParameter("t* must be positive"));
    }
    if !(x_star > 0.0) || !x_star.is_finite() {
        return Err(Error::InvalidParameter("x* must be positive"));
    }
    if half_steps == 0 {
        return Err(Error::InvalidParameter("N must be at least one"));
    }
    let n = half_steps as f64;
    if n * x_star < t_star {
        return Err(Error::CflViolation { lambda: n * x_star / t_star });
    }
    let dt = t_star / (2.0 * n);
    let cells = floor(x_star / t_star * n) as usize;
    if cells == 0 {
        return Err(Error::CflViolation { lambda: 0.0 });
    }
    let dx = x_star / cells as f64;
    let lambda = dx / (2.0 * dt);
    Ok(StaggeredGrid {
        t_star,
        x_star,
        half_steps,
        cells,
        dt,
        dx,
        lambda,
        dimension: Dimension::Two,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn benchmark_run_sizes() {
        let g = build_grid(1.0, 2.0, 5000).unwrap();
        assert!((g.dt() - 1e-4).abs() < 1e-18);
        assert_eq!(g.cells(), 10000);
        assert!((g.dx() - 2e-4).abs() < 1e-18);
        assert!((g.lambda() - 1.0).abs() < 1e-12);

        let g = build_grid(6.0, 6.0, 5000).unwrap();
        assert!((g.dt() - 6e-4).abs() < 1e-18);
        assert_eq!(g.cells(), 5000);
        assert!((g.dx() - 1.2e-3).abs() < 1e-18);
        assert!((g.lambda() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cfl_violation() {
        assert!(matches!(build_grid(2.0, 1.0, 1), Err(Error::CflViolation { .. })));
        assert!(build_grid(0.0, 1.0, 1).is_err());
        assert!(build_grid(1.0, 1.0, 0).is_err());
    }

    #[test]
    fn floor_leaves_lambda_above_one() {
        let g = build_grid(6.0, 5.0, 5000).unwrap();
        assert_eq!(g.cells(), 4166);
        assert!(g.lambda() > 1.0 && g.lambda() < 1.001);
    }

    #[test]
    fn level_layout() {
        let g = build_grid(1.0, 1.0, 4).unwrap();
        assert_eq!(g.level_count(), 9);
        assert_eq!(g.points_on_level(1), 8);
        assert_eq!(g.points_on_level(2), 8);
        assert_eq!(g.points_on_level(3), 7);
        assert_eq!(g.points_on_level(9), 4);
        assert_eq!(g.position(2, 1), 0.0);
        assert_eq!(g.position(1, 1), 0.5 * g.dx());
        // final level covers [0, x*] with M midpoints
        let last = g.level_count();
        assert!((g.position(last, g.points_on_level(last)) + 0.5 * g.dx() - g.x_star()).abs() < 1e-15);
    }
}
