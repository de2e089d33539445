use proptest::prelude::*;
use urel_core::state::*;

fn pressure() -> impl Strategy<Value = f64> {
    (-8.0f64..8.0).prop_map(|e| 10f64.powf(e))
}

proptest! {
    #[test]
    fn round_trip(p in pressure(), u in -50.0f64..50.0) {
        let s = PrimitiveState::new(p, u).unwrap();
        let c = to_conserved(s);
        prop_assert!(c.b.abs() < c.a);
        let back = to_primitive(c).unwrap();
        prop_assert!((back.p - p).abs() <= 1e-10 * p);
        prop_assert!((back.u - u).abs() <= 1e-10 * u.abs().max(1.0));
    }

    #[test]
    fn inverse_of_admissible_pairs(a in pressure(), r in -0.999999f64..0.999999) {
        let c = ConservedPair::new(a, r * a).unwrap();
        let s = to_primitive(c).unwrap();
        prop_assert!(s.p > 0.0);
        let again = to_conserved(s);
        prop_assert!((again.a - c.a).abs() <= 1e-9 * a);
        prop_assert!((again.b - c.b).abs() <= 1e-9 * a);
    }

    #[test]
    fn closure_is_below_energy_and_even(a in pressure(), r in -0.999999f64..0.999999) {
        let c = ConservedPair::new(a, r * a).unwrap();
        let f = flux_c(c).unwrap();
        prop_assert!(f < a);
        let mirrored = ConservedPair::new(a, -r * a).unwrap();
        prop_assert_eq!(flux_c(mirrored).unwrap(), f);
        // a - c = 2p
        let p = to_primitive(c).unwrap().p;
        prop_assert!((a - f - 2.0 * p).abs() <= 1e-9 * a);
    }

    #[test]
    fn sign_equivariance(p in pressure(), u in -50.0f64..50.0) {
        let plus = to_conserved(PrimitiveState::new(p, u).unwrap());
        let minus = to_conserved(PrimitiveState::new(p, -u).unwrap());
        prop_assert_eq!(plus.a, minus.a);
        prop_assert_eq!(plus.b, -minus.b);
    }

    #[test]
    fn velocity_map(u in -1e3f64..1e3, du in 1e-6f64..1.0) {
        let v = velocity(u);
        prop_assert!(v.abs() < 1.0);
        prop_assert!(velocity(u + du) > v);
        let back = four_velocity(v).unwrap();
        prop_assert!((back - u).abs() <= 1e-12 * u.abs().max(1.0) * (1.0 + u * u));
    }
}

#[test]
fn rest_anchor() {
    for p in [1e-6, 0.3, 1.0, 42.0] {
        let c = to_conserved(PrimitiveState::new(p, 0.0).unwrap());
        assert_eq!(c.b, 0.0);
        assert!((flux_c(c).unwrap() - p).abs() <= 1e-15 * p);
        assert_eq!(to_primitive(c).unwrap().u, 0.0);
    }
}

#[test]
fn conserved_examples() {
    let c = to_conserved(PrimitiveState::new(1.0, 1.0).unwrap());
    assert_eq!(c.a, 7.0);
    assert!((c.b - 4.0 * 2f64.sqrt()).abs() < 1e-15);
    assert!((flux_c(c).unwrap() - 5.0).abs() < 1e-14);
    let s = to_primitive(c).unwrap();
    assert!((s.p - 1.0).abs() < 1e-15 && (s.u - 1.0).abs() < 1e-15);
    assert!((velocity(1.0) - 1.0 / 2f64.sqrt()).abs() < 1e-16);
    assert!((four_velocity(-1.0 / 2f64.sqrt()).unwrap() + 1.0).abs() < 1e-15);
}
