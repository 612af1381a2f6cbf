use twining::modforms::{
    delta, eisenstein_e2, eta, eta_product, eta_ratio_half, eta_ratio_half_via_polynomial, hecke_t2, int_coeff,
    lambda2_half, lambda4_half_shift, lambda_n, phi01, phi_minus21, rat_coeff, theta_quotient,
    theta_quotient_from_sums, verify_theta_identities, HalfVariant, ThetaQuotientKind,
};
use twining::series::Q_GRID;
use twining::{rat, ClassData, FrameShape, QSeries, RadicalScalar};

const P: i64 = 8 * Q_GRID;

fn fs(s: &str) -> FrameShape {
    s.parse().unwrap()
}

#[test]
fn eta_leading_terms() {
    let e = eta(P);
    assert_eq!(int_coeff(&e, 1, 24), Some(1.into()));
    assert_eq!(int_coeff(&e, 25, 24), Some((-1).into()));
    assert_eq!(int_coeff(&delta(P), 2, 1), Some((-24).into()));
}

#[test]
fn eisenstein() {
    let e2 = eisenstein_e2(P);
    assert_eq!(int_coeff(&e2, 0, 1), Some(1.into()));
    assert_eq!(int_coeff(&e2, 1, 1), Some((-24).into()));
    assert_eq!(int_coeff(&e2, 2, 1), Some((-72).into()));
}

#[test]
fn lambda_identities() {
    let l2 = lambda_n(2, P);
    let l4 = lambda_n(4, P);
    assert_eq!(rat_coeff(&l2, 0, 1), Some(rat(1, 12)));
    assert_eq!(l4, l2.scale_by(2).scale_int(4).add(&l2.scale_int(2)).truncate(P));
    let shifted = lambda4_half_shift(P);
    assert_eq!(shifted.truncate(P), l2.scale_by(2).scale_int(8).sub(&l2.scale_int(2)).truncate(P));
}

#[test]
fn lambda2_at_half_argument() {
    let plain = lambda2_half(HalfVariant::Plain, P);
    let shifted = lambda2_half(HalfVariant::Shifted, P);
    assert_eq!(rat_coeff(&plain, 1, 2), Some(rat(2, 1)));
    assert_eq!(shifted, plain.half_period_shift().unwrap());
    assert!(plain.add(&shifted).has_integer_support());
}

#[test]
fn eta_products_of_table_rows() {
    assert_eq!(eta_product(&fs("1^24"), P), delta(P));
    let r2 = eta_product(&fs("2^24/1^24"), P);
    assert_eq!(int_coeff(&r2, 1, 1), Some(1.into()));
    assert_eq!(int_coeff(&r2, 2, 1), Some(24.into()));
    for r in ClassData::bundled().unwrap().rows_for(2) {
        assert_eq!(eta_product(&r.fs_g, P).valuation(), Q_GRID, "{}", r.co0);
    }
}

#[test]
fn eta_ratios_at_half_argument() {
    let r = eta_ratio_half(&fs("1^24"), P);
    assert_eq!(int_coeff(&r, -1, 2), Some(1.into()));
    assert_eq!(int_coeff(&r, 0, 1), Some((-24).into()));
    assert_eq!(int_coeff(&r, 1, 2), Some(276.into()));
    assert_eq!(int_coeff(&r, 1, 1), Some((-2048).into()));

    // 2^12: q^(-1/2) prod (1 - q^(2n-1))^12
    let mut expect = QSeries::monomial(-12, RadicalScalar::one(), P);
    let mut e = Q_GRID;
    while e < P + 12 {
        expect = expect.mul(&twining::series::binomial_factor(e, -1, 12, P + 12));
        e += 48;
    }
    assert_eq!(eta_ratio_half(&fs("2^12"), P), expect.truncate(P));

    for row in ClassData::bundled().unwrap().records {
        let a = eta_ratio_half(&row.fs_g, P);
        assert_eq!(Ok(a.clone()), eta_ratio_half_via_polynomial(&row.fs_g, P), "{}", row.co0);
        let lhs = a.mul(&eta_product(&row.fs_g, P + Q_GRID));
        let rhs = eta_product(&row.fs_g, 2 * P + 2 * Q_GRID).scale_argument(&rat(1, 2)).unwrap();
        let t = lhs.trunc().min(rhs.trunc());
        assert_eq!(lhs.truncate(t), rhs.truncate(t), "{}", row.co0);
    }
}

#[test]
fn theta_quotients() {
    let t3 = theta_quotient(ThetaQuotientKind::Theta3, P);
    assert_eq!(t3.q_slice(0), vec![(0, RadicalScalar::one())]);
    let quarter = RadicalScalar::from_rational(rat(1, 4));
    let t2 = theta_quotient(ThetaQuotientKind::Theta2, P);
    assert_eq!(t2.q_slice(0), vec![(-2, quarter.clone()), (0, RadicalScalar::from_rational(rat(1, 2))), (2, quarter)]);
    let m = phi_minus21(P);
    let n = |x| RadicalScalar::from_int(x);
    assert_eq!(m.q_slice(0), vec![(-2, n(1)), (0, n(-2)), (2, n(1))]);
    for k in
        [ThetaQuotientKind::Theta1Sq, ThetaQuotientKind::Theta2, ThetaQuotientKind::Theta3, ThetaQuotientKind::Theta4]
    {
        assert_eq!(theta_quotient(k, P), theta_quotient_from_sums(k, P).unwrap(), "{k:?}");
    }
}

#[test]
fn weak_jacobi_generators() {
    let p = 6 * Q_GRID;
    assert_eq!(phi01(p).specialize_z0(), QSeries::constant(RadicalScalar::from_int(12), p));
    assert!(phi_minus21(p).specialize_z0().is_zero());
    for f in [phi01(p), phi_minus21(p)] {
        let r = twining::genera::verify_jacobi_invariance("generator", &f, 1, p);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn hecke_on_monomials() {
    let even = QSeries::monomial(4 * Q_GRID, RadicalScalar::one(), P);
    assert_eq!(hecke_t2(&even, 2).unwrap().coeff(2 * Q_GRID), RadicalScalar::one());
    let odd = QSeries::monomial(3 * Q_GRID, RadicalScalar::one(), P);
    assert!(hecke_t2(&odd, 2).unwrap().is_zero());
    let c = QSeries::constant(RadicalScalar::from_int(7), P);
    assert_eq!(hecke_t2(&c, 2).unwrap().coeff(0), RadicalScalar::from_int(7));
}

#[test]
fn theta_identities_hold() {
    for r in verify_theta_identities(P) {
        assert!(r.passed(), "{r}");
    }
}
