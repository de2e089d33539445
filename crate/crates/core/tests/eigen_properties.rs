use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use urel_core::eigen::*;

fn random_unit<const D: usize>(rng: &mut ChaCha8Rng) -> [f64; D] {
    loop {
        let v: [f64; D] = core::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 0.1 && n <= 1.0 {
            return v.map(|x| x / n);
        }
    }
}

fn random_state<const D: usize>(rng: &mut ChaCha8Rng, max_u: f64) -> ConservedVector<D> {
    let p = 10f64.powf(rng.gen_range(-2.0..2.0));
    let dir = random_unit::<D>(rng);
    let mag = rng.gen_range(0.0..max_u);
    ConservedVector::from_primitive(p, dir.map(|x| x * mag)).unwrap()
}

fn check_decomposition<const D: usize>(rng: &mut ChaCha8Rng, trials: usize) {
    for _ in 0..trials {
        let w = random_state::<D>(rng, 5.0);
        let n = random_unit::<D>(rng);
        let e = eigen(&w, &n).unwrap();
        let lr = &e.left * &e.right;
        assert!(lr.sub(&Matrix::identity(D + 1)).max_abs() <= 1e-10, "{w:?}");
        let a = flux_jacobian_fd(&w, &n, 1e-6).unwrap();
        let res = (&a * &e.right).sub(&(&e.right * &e.eigenvalue_matrix()));
        assert!(res.max_abs() <= 1e-6 * a.norm_inf(), "{w:?}");
        assert!(e.eigenvalues.iter().all(|l| l.abs() < 1.0));
        assert!(e.eigenvalues.windows(2).all(|p| p[0] <= p[1]));
        for &lambda in &e.eigenvalues {
            let mut shifted = a.clone();
            for i in 0..=D {
                shifted[(i, i)] -= lambda;
            }
            let scale = a.norm_inf().powi(D as i32 + 1);
            assert!(shifted.determinant().abs() <= 1e-8 * scale.max(1.0));
        }
    }
}

#[test]
fn decomposition_all_dimensions() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    check_decomposition::<1>(&mut rng, 300);
    check_decomposition::<2>(&mut rng, 300);
    check_decomposition::<3>(&mut rng, 300);
}

#[test]
fn pressure_gradient_matches_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let w = random_state::<3>(&mut rng, 4.0);
        let g = pressure_gradient(&w).unwrap();
        let scale = w.energy;
        for j in 0..4 {
            let h = 1e-6 * scale;
            let mut plus = w;
            let mut minus = w;
            plus.set(j, w.get(j) + h);
            minus.set(j, w.get(j) - h);
            let fd = (pressure(&plus).unwrap() - pressure(&minus).unwrap()) / (2.0 * h);
            assert!((fd - g.get(j)).abs() <= 1e-6 * g.get(j).abs().max(1e-3), "{j}: {fd} vs {}", g.get(j));
        }
    }
}

#[test]
fn primitive_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..1000 {
        let e = 10f64.powf(rng.gen_range(-3.0..3.0));
        let m: [f64; 3] = random_unit::<3>(&mut rng).map(|x| x * e * rng.gen_range(0.0..0.9));
        let w = ConservedVector::new(m, e).unwrap();
        let (p, u) = primitive_from_conserved(&w).unwrap();
        assert!(p > 0.0);
        let back = ConservedVector::from_primitive(p, u).unwrap();
        for j in 0..4 {
            assert!((back.get(j) - w.get(j)).abs() <= 1e-10 * e);
        }
    }
}

#[test]
fn flux_parity() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let w = random_state::<2>(&mut rng, 3.0);
        let mirrored = ConservedVector::new(w.momentum.map(|x| -x), w.energy).unwrap();
        for k in 0..2 {
            let f = flux(&w, k).unwrap();
            let g = flux(&mirrored, k).unwrap();
            assert_eq!(f.momentum, g.momentum);
            assert_eq!(f.energy, -g.energy);
            assert_eq!(f.energy, w.momentum[k]);
        }
    }
}

#[test]
fn rotation_equivariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        // random orthonormal basis via Gram-Schmidt
        let a = random_unit::<3>(&mut rng);
        let mut b = random_unit::<3>(&mut rng);
        let d: f64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
        b = core::array::from_fn(|i| b[i] - d * a[i]);
        let nb = b.iter().map(|x| x * x).sum::<f64>().sqrt();
        b = b.map(|x| x / nb);
        let c = [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]];
        let rot = |v: [f64; 3]| -> [f64; 3] { core::array::from_fn(|i| a[i] * v[0] + b[i] * v[1] + c[i] * v[2]) };

        let p = rng.gen_range(0.1..10.0);
        let u = random_unit::<3>(&mut rng).map(|x| x * rng.gen_range(0.0..4.0));
        let n = random_unit::<3>(&mut rng);
        let e1 = eigen(&ConservedVector::from_primitive(p, u).unwrap(), &n).unwrap();
        let e2 = eigen(&ConservedVector::from_primitive(p, rot(u)).unwrap(), &rot(n)).unwrap();
        for (x, y) in e1.eigenvalues.iter().zip(&e2.eigenvalues) {
            assert!((x - y).abs() <= 1e-12, "{:?} vs {:?}", e1.eigenvalues, e2.eigenvalues);
        }
    }
}

#[test]
fn speeds_stay_subluminal() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..2000 {
        let w = random_state::<3>(&mut rng, 50.0);
        let n = random_unit::<3>(&mut rng);
        let (lm, l0, lp) = characteristic_speeds(&w, &n).unwrap();
        assert!(lm.abs() < 1.0 && l0.abs() < 1.0 && lp.abs() < 1.0);
        assert!(lm < l0 && l0 < lp);
        assert!(max_speed(&w, &n).unwrap() < 1.0);
    }
}

#[test]
fn frames_are_orthonormal() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..1000 {
        let n = random_unit::<3>(&mut rng);
        let t = tangent_frame(&n).unwrap();
        let basis = [n, t[0], t[1]];
        for i in 0..3 {
            for j in 0..3 {
                let d: f64 = basis[i].iter().zip(&basis[j]).map(|(x, y)| x * y).sum();
                assert!((d - if i == j { 1.0 } else { 0.0 }).abs() <= 1e-14);
            }
        }
        assert_eq!(tangent_frame(&n).unwrap(), t);
        let n2 = random_unit::<2>(&mut rng);
        let t2 = tangent_frame(&n2).unwrap();
        assert!((n2[0] * t2[0][0] + n2[1] * t2[0][1]).abs() <= 1e-14);
    }
}
