use urel_core::euler2d::*;

fn disc(n: usize, half: f64, inside: f64, outside: f64) -> FieldState2D {
    let grid = CartesianGrid2D::square(half, n).unwrap();
    init_radial(&grid, |r| if r <= 1.0 { inside } else { outside }, |_| 0.0, VelocityKind::Velocity).unwrap()
}

fn assert_bookkeeping(before: [f64; 3], after: [f64; 3], outflow: [f64; 3]) {
    for k in 0..3 {
        let scale = before[2].abs();
        let err = (after[k] - before[k] + outflow[k]).abs();
        assert!(err <= 1e-12 * scale, "component {k}: {err:e}");
    }
}

#[test]
fn totals_change_only_through_boundary() {
    for reconstruction in [Reconstruction::FirstOrder, Reconstruction::Muscl] {
        // the disc reaches the boundary of the small box within the run
        let mut s = disc(40, 1.5, 1.0, 0.1);
        let before = s.totals();
        let report = advance_to(&mut s, 1.5, StepOptions { cfl: 0.45, reconstruction }).unwrap();
        assert!(report.steps > 10);
        assert!(report.boundary_outflow[2].abs() > 1e-6);
        assert_bookkeeping(before, s.totals(), report.boundary_outflow);
        assert_eq!(report.floor_events, 0);
    }
}

#[test]
fn single_step_energy_on_expanding_bubble() {
    let mut s = disc(96, 6.0, 1.0, 0.1);
    let before = s.totals();
    let r = step(&mut s, StepOptions::default()).unwrap();
    assert_eq!(r.boundary_outflow[2], 0.0);
    assert!((s.totals()[2] - before[2]).abs() <= 1e-13 * before[2]);
}

#[test]
fn collapsing_bubble_keeps_diagonal_symmetry() {
    for reconstruction in [Reconstruction::FirstOrder, Reconstruction::Muscl] {
        let mut s = disc(64, 3.0, 0.1, 1.0);
        let mut solver = Solver2D::new(StepOptions { cfl: 0.45, reconstruction }).unwrap();
        for _ in 0..10 {
            solver.step(&mut s, f64::INFINITY).unwrap();
        }
        let n = s.grid().nx;
        for j in 0..n {
            for i in 0..n {
                let a = s.cell(i, j);
                let b = s.cell(j, i);
                let tol = 1e-12 * a.energy;
                assert!((a.energy - b.energy).abs() <= tol);
                assert!((a.momentum[0] - b.momentum[1]).abs() <= tol);
                assert!((a.momentum[1] - b.momentum[0]).abs() <= tol);
                let m = s.cell(n - 1 - i, j);
                assert!((a.energy - m.energy).abs() <= tol && (a.momentum[0] + m.momentum[0]).abs() <= tol);
            }
        }
    }
}

#[test]
fn stable_dt_follows_cfl() {
    let s = disc(32, 2.0, 1.0, 1.0);
    let mut solver = Solver2D::new(StepOptions::default()).unwrap();
    let dt = solver.stable_dt(&s);
    let expected = 0.45 * s.grid().dx() * 3f64.sqrt();
    assert!((dt - expected).abs() <= 1e-14 * expected);
    assert!(Solver2D::new(StepOptions { cfl: 1.5, ..Default::default() }).is_err());
}

#[test]
fn shocked_plateau_of_converging_flow() {
    let grid = CartesianGrid2D::square(2.0, 128).unwrap();
    let mut s = init_radial(&grid, |_| 1.0, |_| -1.0 / 2f64.sqrt(), VelocityKind::Velocity).unwrap();
    let report = advance_to(&mut s, 1.0, StepOptions::default()).unwrap();
    assert_eq!(report.floor_events, 0);
    let prof = radial_profile(&s, 40, 2.0).unwrap();
    let plateau: Vec<f64> = prof.r.iter().zip(&prof.p).filter(|(r, _)| **r > 0.1 && **r < 0.35).map(|(_, p)| *p).collect();
    assert!(!plateau.is_empty());
    let mean = plateau.iter().sum::<f64>() / plateau.len() as f64;
    assert!((mean - 15.75505).abs() < 0.05 * 15.75505, "{mean}");
}

#[test]
fn single_bin_profile_is_global_average() {
    let s = disc(20, 1.0, 1.0, 0.1);
    let prof = radial_profile(&s, 1, 2.0).unwrap();
    assert_eq!(prof.count, [400]);
    let total: f64 = s.cells().iter().map(|w| urel_core::eigen::pressure(w).unwrap()).sum();
    assert!((prof.p[0] - total / 400.0).abs() < 1e-14);
    assert!(radial_profile(&s, 0, 1.0).is_err());
}
