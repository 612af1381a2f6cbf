use twining::conway::{ClassData, DSign};
use twining::genera::*;
use twining::report::all_ok;
use twining::series::Q_GRID;
use twining::RadicalScalar;

fn data() -> ClassData {
    ClassData::bundled().unwrap()
}

#[test]
fn eta_identity_all_rows() {
    let d = data();
    for rec in d.rows_for(2) {
        let rep = verify_eta_identity(rec, 8 * Q_GRID);
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn decomposition_all_rows_both_signs() {
    let d = data();
    for rec in d.rows_for(2) {
        for s in rec.signs(2) {
            let rep = verify_decomposition(rec, s, 3 * Q_GRID);
            assert!(rep.passed(), "{rep}");
        }
    }
}

#[test]
fn coincidences_hold() {
    let d = data();
    let reps = verify_coincidences(&d, &d.relations, 3 * Q_GRID);
    for r in &reps {
        println!("{r}");
    }
    assert!(all_ok(&reps));
}

#[test]
fn k3_genus_is_phi_1a() {
    let d = data();
    let k3 = k3_elliptic_genus(3 * Q_GRID).unwrap();
    let phi = phi_g(d.get("1A").unwrap(), DSign::Plus, 3 * Q_GRID).unwrap();
    assert_eq!(k3, phi);
    let q0: Vec<_> = k3.q_slice(0);
    assert_eq!(
        q0,
        vec![(-2, RadicalScalar::from_int(2)), (0, RadicalScalar::from_int(20)), (2, RadicalScalar::from_int(2))]
    );
}

#[test]
fn hecke_2b() {
    let d = data();
    let rep = verify_hecke_relation(d.get("2B").unwrap(), 6 * Q_GRID);
    assert!(rep.passed(), "{rep}");
}

#[test]
fn f_4d_plus_equals_f_2d() {
    let d = data();
    let a = f_g(d.get("4D").unwrap(), DSign::Plus, 4 * Q_GRID).unwrap();
    let b = f_g(d.get("2D").unwrap(), DSign::Plus, 4 * Q_GRID).unwrap();
    assert_eq!(a, b);
}

#[test]
fn higher_lambency() {
    let d = data();
    for ell in [3, 4, 5, 7] {
        for rec in d.rows_for(ell) {
            for s in rec.signs(ell) {
                let req = GenusRequest::new(rec, s, ell, 2 * Q_GRID).unwrap();
                let rep = verify_decomposition_ell(&req);
                assert!(rep.passed(), "{rep}");
                let rep = verify_z0_value(&req);
                assert!(rep.passed(), "{rep}");
                let phi = phi_g_ell(&req).unwrap();
                let rep = verify_jacobi_invariance(&req.label(), &phi, ell - 1, 2 * Q_GRID);
                assert!(rep.passed(), "{rep}");
            }
        }
    }
}

#[test]
fn jacobi_invariance_lambency_2() {
    let d = data();
    for rec in d.rows_for(2) {
        for s in rec.signs(2) {
            let phi = phi_g(rec, s, 3 * Q_GRID).unwrap();
            let rep = verify_jacobi_invariance(&rec.label(2, s), &phi, 1, 3 * Q_GRID);
            assert!(rep.passed(), "{rep}");
        }
    }
}
