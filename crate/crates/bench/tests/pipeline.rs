use urel_bench::compare::{common_radii, compare, Profile};
use urel_bench::io::{read_rows, read_shock, write_rows};
use urel_bench::{case, run_case, RunRequest, SolverChoice};

fn csv_bytes(req: &RunRequest) -> Vec<u8> {
    let mut buf = Vec::new();
    write_rows(&mut buf, &req.run().unwrap().rows).unwrap();
    buf
}

#[test]
fn runs_are_byte_identical() {
    for req in [
        RunRequest::new(3, SolverChoice::RadSym, 200),
        RunRequest::new(5, SolverChoice::Euler2d, 24),
        RunRequest { t_end: Some(0.5), ..RunRequest::new(1, SolverChoice::Ode, 40) },
    ] {
        assert_eq!(csv_bytes(&req), csv_bytes(&req), "{req:?}");
    }
}

#[test]
fn ode_artifacts_carry_table_values() {
    let dir = tempfile::tempdir().unwrap();
    let art = run_case(1, SolverChoice::Ode, 100).unwrap();
    let paths = art.write_to(dir.path()).unwrap();
    assert_eq!(paths.len(), 2);
    let shock = read_shock(std::fs::File::open(&paths[1]).unwrap()).unwrap();
    let c = case(1, 2).unwrap();
    for name in ["s_tilde", "p_minus", "p_plus", "v_plus"] {
        let value = shock.iter().find(|(k, _)| *k == name).unwrap().1;
        assert!(c.landmark(name).unwrap().accepts(value), "{name} = {value}");
    }
    let rows = read_rows(std::fs::File::open(&paths[0]).unwrap()).unwrap();
    assert_eq!(rows.len(), 101);
    assert_eq!(rows, art.rows);
    assert_eq!((rows[0].p, rows[0].v), (shock[2].1, 0.0));
}

#[test]
fn coarse_radial_run_tracks_reference() {
    let radial = Profile::from_rows(&run_case(1, SolverChoice::RadSym, 400).unwrap().rows).unwrap();
    let ode = Profile::from_rows(&run_case(1, SolverChoice::Ode, 400).unwrap().rows).unwrap();
    let radii: Vec<f64> = common_radii(&radial, &ode).into_iter().filter(|r| (r - 0.455).abs() > 0.05).collect();
    let report = compare(&radial, &ode, &radii).unwrap();
    assert!(report.l1_p < 0.15 && report.l1_v < 0.01, "{report}");
    assert_eq!(report.shocks_a.len(), 1);
    assert!((report.shocks_a[0] - 0.45503).abs() < 0.02);
}

#[test]
fn cartesian_profile_rows() {
    let art = run_case(4, SolverChoice::Euler2d, 32).unwrap();
    assert_eq!(art.floor_events, 0);
    assert!(art.rows.len() <= 16 && !art.rows.is_empty());
    assert!(art.rows.iter().all(|r| r.t == 6.0 && r.p > 0.0 && r.a > r.b.abs()));
}

#[test]
fn three_dimensional_variant() {
    let art = RunRequest { d: 3, ..RunRequest::new(1, SolverChoice::RadSym, 200) }.run().unwrap();
    assert!(art.rows.iter().all(|r| r.p > 0.0));
    let plateau = art.rows.iter().find(|r| r.x > 0.2).unwrap().p;
    assert!((plateau - 25.56463).abs() < 0.5, "{plateau}");
}
