//! The eleven acceptance criteria, each reduced to one PASS/FAIL line.
//!
//! Expensive runs shared between criteria (the fine Example 3 radial run
//! and the self-similar references) are computed once per process.

use std::fmt;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use urel_core::eigen::{self, ConservedVector, Matrix};
use urel_core::euler2d;
use urel_core::radial::{
    detect_shocks, euler_update_in, initialize, shock::strongest, Dimension, LevelSolution, RadialSolver,
    RecordOptions, SpaceTimeRecord, StaggeredGrid,
};
use urel_core::selfsim::{self, theta_bracket, OdeConfig, SelfSimilarProfile};
use urel_core::state::{flux_c, ConservedPair};

use crate::cases::{case, BenchmarkCase};
use crate::compare::{compare, LandmarkCheck, Profile};
use crate::error::{BenchError, Result};
use crate::runner::{detect_focus, euler2d_run, ode_reference, radial_record};

pub const CRITERIA: u32 = 11;

/// Half steps of the fine radial runs.
pub const FINE_N: usize = 5000;

const V0_INFLOW: f64 = -std::f64::consts::FRAC_1_SQRT_2;

pub fn title(id: u32) -> &'static str {
    match id {
        1 => "shock states of the self-similar solution",
        2 => "bracket of the shock parameter",
        3 => "radial scheme vs ODE, converging flow",
        4 => "radial scheme vs ODE, expansion",
        5 => "focus times and reflected shock",
        6 => "positivity on random piecewise data",
        7 => "stationary exactness",
        8 => "chord and root bounds",
        9 => "eigensystem",
        10 => "Cartesian solver converges to the radial one",
        11 => "RK4 step halving",
        _ => "unknown criterion",
    }
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u32,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:>2}  {:<46} {:>7.1}s  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            title(self.id),
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

/// Runs criterion `id`; errors turn into a failing line.
pub fn check(id: u32) -> CriterionResult {
    let start = Instant::now();
    let outcome = match id {
        1 => shock_states(),
        2 => theta_brackets(),
        3 => converging_flow(),
        4 => expansion(),
        5 => focus_landmarks(),
        6 => positivity(),
        7 => stationary(),
        8 => chord_and_root_bounds(),
        9 => eigensystem(),
        10 => cross_solver(),
        11 => step_halving(),
        _ => Err(BenchError::Unsupported(format!("no criterion {id}"))),
    };
    let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    CriterionResult { id, passed, detail, elapsed: start.elapsed() }
}

/// All criteria, run concurrently, in order of id.
pub fn run_all() -> Vec<CriterionResult> {
    run_selected(&(1..=CRITERIA).collect::<Vec<_>>())
}

pub fn run_selected(ids: &[u32]) -> Vec<CriterionResult> {
    std::thread::scope(|s| {
        let handles: Vec<_> = ids.iter().map(|&id| s.spawn(move || check(id))).collect();
        handles.into_iter().map(|h| h.join().expect("criterion thread panicked")).collect()
    })
}

type Outcome = Result<(bool, String)>;

fn solver_err(context: &str) -> impl FnOnce(urel_core::Error) -> BenchError + '_ {
    move |source| BenchError::Solver { context: context.to_string(), source }
}

fn cached<T: Clone>(cell: &'static OnceLock<std::result::Result<T, String>>, f: impl FnOnce() -> Result<T>) -> Result<T> {
    cell.get_or_init(|| f().map_err(|e| e.to_string()))
        .clone()
        .map_err(BenchError::Unsupported)
}

fn ode_profile(d: u32) -> Result<SelfSimilarProfile> {
    static TWO: OnceLock<std::result::Result<SelfSimilarProfile, String>> = OnceLock::new();
    static THREE: OnceLock<std::result::Result<SelfSimilarProfile, String>> = OnceLock::new();
    let cell = if d == 3 { &THREE } else { &TWO };
    cached(cell, || ode_reference(&case(1, d)?).map_err(solver_err("self-similar reference")))
}

/// Final level and axis history of Example 3 on the fine grid.
fn example3() -> Result<&'static SpaceTimeRecord> {
    static RECORD: OnceLock<std::result::Result<SpaceTimeRecord, String>> = OnceLock::new();
    RECORD
        .get_or_init(|| {
            let c = case(3, 2).map_err(|e| e.to_string())?;
            radial_record(&c, FINE_N, c.t_end, RecordOptions::default()).map_err(|e| e.to_string())
        })
        .as_ref()
        .map_err(|e| BenchError::Unsupported(e.clone()))
}

fn level_profile(level: &LevelSolution) -> Result<Profile> {
    let prims = level.primitives().map_err(solver_err("final level"))?;
    Profile::new(level.positions(), prims.iter().map(|q| q.0).collect(), prims.iter().map(|q| q.1).collect())
}

fn landmark_check(c: &BenchmarkCase, name: &str, measured: f64) -> Result<LandmarkCheck> {
    let l = c
        .landmark(name)
        .ok_or_else(|| BenchError::Unsupported(format!("case {} has no landmark {name}", c.id)))?;
    Ok(LandmarkCheck::new(l, measured))
}

fn shock_states() -> Outcome {
    let mut passed = true;
    let mut parts = Vec::new();
    for d in [2, 3] {
        let c = case(1, d)?;
        let start = Instant::now();
        let profile = selfsim::integrate(d, V0_INFLOW, OdeConfig::default()).map_err(solver_err("ODE"))?;
        let elapsed = start.elapsed().as_secs_f64();
        let s = profile.shock().ok_or_else(|| BenchError::Unsupported("no shock fitted".into()))?;
        let checks = [
            landmark_check(&c, "s_tilde", s.s_tilde)?,
            landmark_check(&c, "p_minus", s.p_minus)?,
            landmark_check(&c, "p_plus", s.p_plus)?,
            landmark_check(&c, "v_plus", s.v_plus)?,
        ];
        let ok = checks.iter().all(|k| k.passed) && elapsed < 30.0;
        passed &= ok;
        parts.push(format!(
            "d={d}: s~={:.6} p-={:.6} p+={:.6} v+={:.6} [{:.2}s]{}",
            s.s_tilde,
            s.p_minus,
            s.p_plus,
            s.v_plus,
            elapsed,
            if ok { "" } else { " (off)" }
        ));
    }
    Ok((passed, parts.join("; ")))
}

fn theta_brackets() -> Outcome {
    let mut passed = true;
    let mut worst = f64::INFINITY;
    let mut parts = Vec::new();
    for v0 in [-0.1, -0.3, -0.5, V0_INFLOW, -0.9] {
        for d in [2, 3] {
            let profile = selfsim::integrate(d, v0, OdeConfig::default()).map_err(solver_err("ODE"))?;
            let theta = profile.shock().map(|s| s.theta_tilde).unwrap_or(f64::NAN);
            let (lo, hi) = theta_bracket(v0);
            let inside = lo < theta && theta < hi;
            passed &= inside;
            worst = worst.min((theta - lo).min(hi - theta));
            if d == 2 {
                parts.push(format!("{v0:.3}->{theta:.5}"));
            }
        }
    }
    Ok((passed, format!("d=2 theta~: {}; min margin (d=2,3) {worst:.3e}", parts.join(" "))))
}

/// Radial scheme against the self-similar solution at the final time,
/// over `x ∈ [0, x*]` minus `band` cells around the detected shock.
struct SelfSimilarComparison {
    dx: f64,
    radial: Profile,
    reference: Profile,
    shock: Option<f64>,
}

fn self_similar_comparison(id: u32) -> Result<SelfSimilarComparison> {
    let c = case(id, 2)?;
    let record = radial_record(&c, FINE_N, c.t_end, RecordOptions::default()).map_err(solver_err("radial run"))?;
    let last = level_profile(record.last())?;
    let keep: Vec<usize> = (0..last.x.len()).filter(|&j| last.x[j] <= c.x_star).collect();
    let pick = |y: &[f64]| keep.iter().map(|&j| y[j]).collect::<Vec<_>>();
    let radial = Profile::new(pick(&last.x), pick(&last.p), pick(&last.v))?;
    let ode = if id == 1 { ode_profile(2)? } else { ode_reference(&c).map_err(solver_err("ODE"))? };
    let exact = selfsim::profile_at_time(&ode, c.t_end, &radial.x).map_err(solver_err("ODE profile"))?;
    let reference = Profile::new(radial.x.clone(), exact.iter().map(|q| q.0).collect(), exact.iter().map(|q| q.1).collect())?;
    let shock = strongest(&detect_shocks(&radial.x, &radial.v)).map(|s| s.position);
    Ok(SelfSimilarComparison { dx: record.grid().dx(), radial, reference, shock })
}

fn converging_flow() -> Outcome {
    let c = case(1, 2)?;
    let cmp = self_similar_comparison(1)?;
    let plateau = c.landmark("plateau_p").ok_or_else(|| BenchError::Unsupported("plateau landmark".into()))?;
    let mut worst = 0.0f64;
    for (x, p) in cmp.radial.x.iter().zip(&cmp.radial.p) {
        if (0.1..=0.35).contains(x) {
            worst = worst.max((p - plateau.value).abs() / plateau.value);
        }
    }
    let target = c.landmark("s_tilde").map(|l| l.value).unwrap_or(f64::NAN) * c.t_end;
    let shock = cmp.shock.unwrap_or(f64::NAN);
    let shock_ok = (shock - target).abs() <= 2.0 * cmp.dx;
    let band = 5.0 * cmp.dx;
    let radii: Vec<f64> = cmp.radial.x.iter().copied().filter(|x| (x - shock).abs() > band).collect();
    let report = compare(&cmp.radial, &cmp.reference, &radii)?;
    let passed = worst <= 0.02 && shock_ok && report.l1_p < 0.15 && report.l1_v < 0.01;
    Ok((
        passed,
        format!(
            "plateau dev {:.2e} (<=0.02), shock {shock:.5} vs {target:.5} (|d|={:.1e} <= {:.1e}), mean|dp| {:.2e} (<0.15), mean|dv| {:.2e} (<0.01)",
            worst,
            (shock - target).abs(),
            2.0 * cmp.dx,
            report.l1_p,
            report.l1_v
        ),
    ))
}

fn expansion() -> Outcome {
    let cmp = self_similar_comparison(2)?;
    let report = compare(&cmp.radial, &cmp.reference, &cmp.radial.x)?;
    let passed = report.l1_p < 0.02 && report.l1_v < 0.005;
    Ok((passed, format!("mean|dp| {:.2e} (<0.02), mean|dv| {:.2e} (<0.005)", report.l1_p, report.l1_v)))
}

fn focus_landmarks() -> Outcome {
    let c3 = case(3, 2)?;
    let record = example3()?;
    let focus3 = detect_focus(record)?;
    let last = level_profile(record.last())?;
    let reflected = last.shocks().first().copied().unwrap_or(f64::NAN);

    let c5 = case(5, 2)?;
    let record5 = radial_record(&c5, FINE_N, c5.t_end, RecordOptions::default()).map_err(solver_err("example 5"))?;
    let focus5 = detect_focus(&record5)?;

    let checks = [
        landmark_check(&c3, "t_focus", focus3.time)?,
        landmark_check(&c5, "t_focus", focus5.time)?,
        landmark_check(&c3, "reflected_shock", reflected)?,
    ];
    Ok((
        checks.iter().all(|k| k.passed),
        format!(
            "Ex3 focus t={:.4} (p={:.3}), Ex5 focus t={:.4} (p={:.1}), Ex3 reflected shock r={:.4}",
            focus3.time, focus3.pressure, focus5.time, focus5.pressure, reflected
        ),
    ))
}

fn piecewise(rng: &mut ChaCha8Rng, x_star: f64) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let pieces = rng.gen_range(1..=6);
    let mut cuts: Vec<f64> = (1..pieces).map(|_| rng.gen_range(0.0..x_star)).collect();
    cuts.sort_by(f64::total_cmp);
    let p = (0..pieces).map(|_| 10f64.powf(rng.gen_range(-3.0..=3.0))).collect();
    let v = (0..pieces)
        .map(|_| loop {
            let v = rng.gen_range(-0.99..0.99);
            if v > -0.99 {
                break v;
            }
        })
        .collect();
    (cuts, p, v)
}

fn admissible_everywhere(level: &LevelSolution) -> bool {
    level.states().iter().all(|w| w.is_admissible() && w.pressure().is_ok_and(|p| p > 0.0))
}

fn positivity() -> Outcome {
    const RUNS: usize = 100;
    const N: usize = 200;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut failures = [0usize; 2];
    let mut levels_checked = 0usize;
    for (k, dim) in [Dimension::Two, Dimension::Three].into_iter().enumerate() {
        for _ in 0..RUNS {
            let (cuts, p, v) = piecewise(&mut rng, 2.0);
            let at = |vals: &[f64], x: f64| vals[cuts.partition_point(|&c| c <= x)];
            let grid = StaggeredGrid::new(1.0, 2.0, N).map_err(solver_err("grid"))?.with_dimension(dim);
            let solver = RadialSolver::new(grid);
            let mut level = initialize(&grid, |x| at(&p, x), |x| at(&v, x)).map_err(solver_err("initial data"))?;
            let mut ok = admissible_everywhere(&level);
            for _ in 1..grid.level_count() {
                match solver.advance(&level) {
                    Ok(next) => level = next,
                    Err(_) => {
                        ok = false;
                        break;
                    }
                }
                ok &= admissible_everywhere(&level);
                levels_checked += 1;
                if !ok {
                    break;
                }
            }
            failures[k] += usize::from(!ok);
        }
    }
    Ok((
        failures == [0, 0],
        format!(
            "{RUNS} runs per dimension at N={N}: failures d=2 {}, d=3 {}; {levels_checked} levels checked",
            failures[0], failures[1]
        ),
    ))
}

fn stationary() -> Outcome {
    let mut parts = Vec::new();
    let mut passed = true;
    for n in [10usize, 1000] {
        for p0 in [1.0, 0.37] {
            let grid = StaggeredGrid::new(1.0, 2.0, n).map_err(solver_err("grid"))?;
            let solver = RadialSolver::new(grid);
            let first = initialize(&grid, |_| p0, |_| 0.0).map_err(solver_err("initial data"))?;
            let rest = ConservedPair::at_rest(p0).map_err(solver_err("rest state"))?;
            let same = |l: &LevelSolution| l.states().iter().all(|w| w.a.to_bits() == rest.a.to_bits() && w.b.to_bits() == 0);
            let mut level = first.clone();
            let mut exact = same(&level);
            for _ in 1..grid.level_count() {
                level = solver.advance(&level).map_err(solver_err("advance"))?;
                exact &= same(&level);
            }
            // the domain shrinks by one point every second level
            exact &= level.states() == &first.states()[..level.len()] && level.index() == 2 * n + 1;
            passed &= exact;
            if p0 == 1.0 {
                parts.push(format!("N={n}: {} levels {}", 2 * n, if exact { "bit-identical" } else { "DRIFT" }));
            }
        }
    }
    Ok((passed, parts.join(", ")))
}

fn random_pair(rng: &mut ChaCha8Rng) -> ConservedPair {
    let a = 10f64.powf(rng.gen_range(-6.0..6.0));
    loop {
        let r: f64 = rng.gen_range(-1.0..1.0);
        if r > -1.0 {
            return ConservedPair { a, b: r * a };
        }
    }
}

fn chord_and_root_bounds() -> Outcome {
    const SAMPLES: usize = 1_000_000;
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut chord = 0usize;
    for _ in 0..SAMPLES {
        let (m, p) = (random_pair(&mut rng), random_pair(&mut rng));
        let lambda = 10f64.powf(rng.gen_range(0.0..2.0));
        let (cm, cp) = (flux_c(m).map_err(solver_err("flux"))?, flux_c(p).map_err(solver_err("flux"))?);
        let left = m.a + m.b / lambda;
        let right = p.a - p.b / lambda;
        let inner_m = m.b + cm / lambda;
        let inner_p = p.b - cp / lambda;
        if !(-left < inner_m && inner_m < left && -right < inner_p && inner_p < right) {
            chord += 1;
        }
    }
    let mut root = 0usize;
    for _ in 0..SAMPLES {
        let a = 10f64.powf(rng.gen_range(-6.0..6.0));
        let eta = (1.0 - rng.gen::<f64>()) / 3.0;
        let (lo, hi) = (-a * (1.0 + eta), a * (1.0 - eta));
        let xi = loop {
            let xi = lo + rng.gen::<f64>() * (hi - lo);
            if xi > lo && xi < hi {
                break xi;
            }
        };
        let q = 4.0 * a * a * (1.0 + 3.0 * eta * eta) - 3.0 * xi * xi;
        let b = (xi + eta * q.sqrt()) / (1.0 + 3.0 * eta * eta);
        if !(q > 0.0 && b.abs() < a) {
            root += 1;
        }
    }
    let mut update = 0usize;
    for k in 0..SAMPLES {
        let (m, p) = (random_pair(&mut rng), random_pair(&mut rng));
        let dim = if k % 2 == 0 { Dimension::Two } else { Dimension::Three };
        let x_bar = 10f64.powf(rng.gen_range(-0.3..3.0));
        let lambda = 10f64.powf(rng.gen_range(0.0..1.0));
        if !euler_update_in(dim, m, p, x_bar, 1.0, lambda).is_ok_and(|w| w.b.abs() < w.a) {
            update += 1;
        }
    }
    Ok((
        chord == 0 && root == 0 && update == 0,
        format!("violations in {SAMPLES} samples each: chord bounds {chord}, root bound {root}, full update {update}"),
    ))
}

fn unit_vector<const D: usize>(rng: &mut ChaCha8Rng) -> [f64; D] {
    loop {
        let v: [f64; D] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-3 && n <= 1.0 {
            return v.map(|x| x / n);
        }
    }
}

#[derive(Default)]
struct EigenStats {
    inverse: f64,
    residual: f64,
    speed: f64,
    failures: usize,
}

fn eigen_sweep<const D: usize>(rng: &mut ChaCha8Rng, samples: usize) -> Result<EigenStats> {
    let mut s = EigenStats::default();
    for _ in 0..samples {
        let p = 10f64.powf(rng.gen_range(-2.0..=2.0));
        let u = unit_vector::<D>(rng).map(|x| x * rng.gen_range(0.0..=5.0));
        let n = unit_vector::<D>(rng);
        let w = ConservedVector::from_primitive(p, u).map_err(solver_err("state"))?;
        let e = eigen::eigen(&w, &n).map_err(solver_err("eigen"))?;
        let a = eigen::flux_jacobian_fd(&w, &n, 1e-6).map_err(solver_err("jacobian"))?;
        let inverse = (&e.left * &e.right).sub(&Matrix::identity(D + 1)).norm_inf();
        let residual = (&a * &e.right).sub(&(&e.right * &e.eigenvalue_matrix())).norm_inf() / a.norm_inf();
        let speed = e.eigenvalues.iter().fold(0.0f64, |m, l| m.max(l.abs()));
        s.inverse = s.inverse.max(inverse);
        s.residual = s.residual.max(residual);
        s.speed = s.speed.max(speed);
        if !(inverse <= 1e-10 && residual <= 1e-6 && speed < 1.0) {
            s.failures += 1;
        }
    }
    Ok(s)
}

fn eigensystem() -> Outcome {
    const SAMPLES: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    let stats = [
        eigen_sweep::<1>(&mut rng, SAMPLES)?,
        eigen_sweep::<2>(&mut rng, SAMPLES)?,
        eigen_sweep::<3>(&mut rng, SAMPLES)?,
    ];
    let parts: Vec<String> = stats
        .iter()
        .enumerate()
        .map(|(k, s)| {
            format!(
                "d={}: |LR-I| {:.1e}, |AR-RL|/|A| {:.1e}, max|lambda| {:.6}, bad {}",
                k + 1,
                s.inverse,
                s.residual,
                s.speed,
                s.failures
            )
        })
        .collect();
    Ok((stats.iter().all(|s| s.failures == 0), parts.join("; ")))
}

fn cross_solver() -> Outcome {
    const BINS: usize = 64;
    let c = case(3, 2)?;
    let reference = level_profile(example3()?.last())?;
    let shocks = reference.shocks();
    let width = c.x_star / BINS as f64;
    let runs: Vec<Result<(euler2d::RadialProfile, usize)>> = std::thread::scope(|s| {
        let handles: Vec<_> = [128usize, 256, 512]
            .into_iter()
            .map(|n| {
                let c = c.clone();
                s.spawn(move || {
                    let (state, report) = euler2d_run(&c, n, c.t_end).map_err(solver_err("Cartesian run"))?;
                    let prof = euler2d::radial_profile(&state, BINS, c.x_star).map_err(solver_err("radial profile"))?;
                    Ok((prof, report.floor_events))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("Cartesian run panicked")).collect()
    });
    let mut l1 = Vec::new();
    let mut dv_fine = f64::NAN;
    let mut floors = 0;
    for run in runs {
        let (prof, floor_events) = run?;
        floors += floor_events;
        let cartesian = Profile::new(prof.r.clone(), prof.p.clone(), prof.v.clone())?;
        l1.push(compare(&cartesian, &reference, &cartesian.x)?.l1_p);
        let away: Vec<f64> =
            cartesian.x.iter().copied().filter(|r| shocks.iter().all(|s| (r - s).abs() > 1.5 * width)).collect();
        dv_fine = compare(&cartesian, &reference, &away)?.l1_v;
    }
    let monotone = l1.windows(2).all(|w| w[1] < w[0]);
    Ok((
        monotone && dv_fine < 0.02 && floors == 0,
        format!(
            "L1(p) 128/256/512: {:.2e} / {:.2e} / {:.2e}; 512 mean|dv| off shocks {:.2e} (<0.02); floor events {floors}",
            l1[0], l1[1], l1[2], dv_fine
        ),
    ))
}

fn step_halving() -> Outcome {
    let mut parts = Vec::new();
    let mut passed = true;
    for d in [2, 3] {
        let coarse = ode_profile(d)?;
        let h = coarse.step();
        let fine = selfsim::integrate(d, V0_INFLOW, OdeConfig::with_step(h / 2.0)).map_err(solver_err("ODE"))?;
        let (a, b) = match (coarse.shock(), fine.shock()) {
            (Some(a), Some(b)) => (a.theta_tilde, b.theta_tilde),
            _ => return Err(BenchError::Unsupported("no shock fitted".into())),
        };
        let diff = (a - b).abs();
        passed &= diff <= 1e-10;
        parts.push(format!("d={d}: h={h:e} theta~ differs by {diff:.1e}"));
    }
    Ok((passed, parts.join("; ")))
}
