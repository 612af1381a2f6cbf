use twining::series::Q_GRID;
use twining::sigma::{
    d4_coset_theta, dual_theta, fermion_characters, u_characters, verify_sigma_isomorphism, LatticeCoset, COSETS,
};
use twining::RadicalScalar;

#[test]
fn all_sigma_identities_hold() {
    let reps = verify_sigma_isomorphism(6 * Q_GRID).unwrap();
    assert_eq!(reps.len(), 12);
    for r in &reps {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn vsn_opens_with_276() {
    let [a0, _, _, t1] = fermion_characters(24, 4 * Q_GRID);
    let v = a0.add(&t1);
    assert_eq!(v.coeff(-12), RadicalScalar::one());
    assert_eq!(v.coeff(12), RadicalScalar::from_int(276));
    assert_eq!(v.coeff(24), RadicalScalar::from_int(2048));
}

#[test]
fn dual_lattice_has_24_minimal_vectors_per_shell() {
    // Norm 1 in the dual: 8 short vectors of Z^4 and 16 of (Z+1/2)^4.
    let t = dual_theta(2 * Q_GRID);
    assert_eq!(t.coeff(12), RadicalScalar::from_int(24));
}

#[test]
fn spinor_cosets_split_evenly() {
    for c in [LatticeCoset::Omega, LatticeCoset::OmegaBar] {
        assert_eq!(d4_coset_theta(c, Q_GRID).coeff(12), RadicalScalar::from_int(8));
    }
    let u = u_characters(Q_GRID);
    assert_eq!(u[0].coeff(-4), RadicalScalar::one());
    assert_eq!(COSETS.len(), 4);
}
