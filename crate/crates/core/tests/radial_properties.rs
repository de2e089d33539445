use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use urel_core::radial::*;
use urel_core::state::{flux_c, ConservedPair};

fn pair() -> impl Strategy<Value = ConservedPair> {
    ((-6.0f64..6.0), (-0.9999f64..0.9999)).prop_map(|(e, r)| {
        let a = 10f64.powf(e);
        ConservedPair::new(a, r * a).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn chord_bounds(m in pair(), p in pair(), lambda in 1.0f64..20.0) {
        let cm = flux_c(m).unwrap();
        let cp = flux_c(p).unwrap();
        let left = m.a + m.b / lambda;
        prop_assert!(-left < m.b + cm / lambda && m.b + cm / lambda < left);
        let right = p.a - p.b / lambda;
        prop_assert!(-right < p.b - cp / lambda && p.b - cp / lambda < right);
    }

    #[test]
    fn explicit_root_bound(a in 1e-6f64..1e6, eta in 1e-9f64..=(1.0 / 3.0), t in 0.0f64..1.0) {
        let lo = -a * (1.0 + eta);
        let hi = a * (1.0 - eta);
        let xi = lo + t * (hi - lo);
        prop_assume!(xi > lo && xi < hi);
        let q = 4.0 * a * a * (1.0 + 3.0 * eta * eta) - 3.0 * xi * xi;
        prop_assert!(q > 0.0);
        let b = (xi + eta * q.sqrt()) / (1.0 + 3.0 * eta * eta);
        prop_assert!(b.abs() < a);
    }

    #[test]
    fn update_stays_admissible(
        m in pair(),
        p in pair(),
        x_bar in 0.5f64..100.0,
        lambda in 1.0f64..10.0,
        three in any::<bool>(),
    ) {
        let dim = if three { Dimension::Three } else { Dimension::Two };
        let out = euler_update_in(dim, m, p, x_bar, 1.0, lambda).unwrap();
        prop_assert!(out.b.abs() < out.a);
    }

    #[test]
    fn rest_pair_is_fixed(m in pair(), x_bar in 0.5f64..100.0, lambda in 1.0f64..4.0, three in any::<bool>()) {
        let dim = if three { Dimension::Three } else { Dimension::Two };
        let at_rest = ConservedPair::at_rest(m.a / 3.0).unwrap();
        prop_assert_eq!(euler_update_in(dim, at_rest, at_rest, x_bar, 1.0, lambda).unwrap(), at_rest);
    }
}

fn random_piecewise(rng: &mut ChaCha8Rng) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let pieces = rng.gen_range(1..6);
    let mut cuts: Vec<f64> = (0..pieces - 1).map(|_| rng.gen_range(0.0..2.0)).collect();
    cuts.sort_by(f64::total_cmp);
    let p = (0..pieces).map(|_| 10f64.powf(rng.gen_range(-3.0..3.0))).collect();
    let v = (0..pieces).map(|_| rng.gen_range(-0.99..0.99)).collect();
    (cuts, p, v)
}

fn piece(cuts: &[f64], values: &[f64], x: f64) -> f64 {
    values[cuts.partition_point(|&c| c <= x)]
}

#[test]
fn random_piecewise_runs_stay_admissible() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..20 {
        let (cuts, p, v) = random_piecewise(&mut rng);
        let dim = if trial % 2 == 0 { Dimension::Two } else { Dimension::Three };
        let grid = StaggeredGrid::new(1.0, 2.0, 60).unwrap().with_dimension(dim);
        let record = run(&grid, |x| piece(&cuts, &p, x), |x| piece(&cuts, &v, x), RecordOptions { stride: 1 })
            .unwrap_or_else(|e| panic!("trial {trial}: {e}"));
        for level in record.levels() {
            assert!(level.states().iter().all(|s| s.b.abs() < s.a && s.pressure().unwrap() > 0.0));
        }
    }
}

#[test]
fn stationary_levels_bit_identical() {
    for n in [10, 200] {
        for dim in [Dimension::Two, Dimension::Three] {
            let grid = StaggeredGrid::new(1.0, 1.0, n).unwrap().with_dimension(dim);
            let record = run(&grid, |_| 0.7, |_| 0.0, RecordOptions::default()).unwrap();
            let first = record.first();
            let last = record.last();
            assert_eq!(last.index(), 2 * n + 1);
            assert!(last.states().iter().all(|s| *s == first.states()[0]));
            assert!(record.axis().iter().all(|a| a.state == first.states()[0]));
        }
    }
}

#[test]
fn expanding_flow_moves_outward() {
    let grid = StaggeredGrid::new(0.5, 1.0, 100).unwrap();
    let record = run(&grid, |x| if x < 0.5 { 1.0 } else { 0.1 }, |_| 0.0, RecordOptions::default()).unwrap();
    let level = record.last();
    let prim = level.primitives().unwrap();
    assert!(prim.iter().all(|&(_, v)| v > -1e-12));
}

#[test]
fn geometry_error_below_axis() {
    let s = ConservedPair::at_rest(1.0).unwrap();
    assert!(euler_update(s, s, 0.2, 1.0, 1.0).is_err());
    assert_eq!(euler_update(s, s, 0.0, 1.0, 1.0).unwrap(), s);
}
