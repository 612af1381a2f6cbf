use twining::modforms::{delta, eisenstein_e2, eta, eta_ratio_half, phi01, phi_minus21};
use twining::series::Q_GRID;
use twining::{rat, Error, FrameShape, JacobiSeries, QSeries, RadicalScalar};

fn n(x: i64) -> RadicalScalar {
    RadicalScalar::from_int(x)
}

#[test]
fn monomials_multiply() {
    let a = QSeries::monomial(1, n(1), Q_GRID);
    assert_eq!(a.mul(&a).coeff(2), n(1));
}

#[test]
fn eta_power_is_delta() {
    let p = 6 * Q_GRID;
    let e = eta(p);
    let d = e.mul(&e.pow(23).unwrap());
    let expect = [(1, 1), (2, -24), (3, 252), (4, -1472), (5, 4830)];
    for (k, c) in expect {
        assert_eq!(d.coeff(k * Q_GRID), n(c));
    }
    assert_eq!(d.truncate(p), delta(p));
}

#[test]
fn product_with_zero_keeps_truncation() {
    let z = JacobiSeries::zero(Q_GRID);
    let p = phi_minus21(3 * Q_GRID).mul(&z);
    assert!(p.is_zero());
    assert_eq!(p.trunc(), Q_GRID);
}

#[test]
fn geometric_series() {
    let a = QSeries::from_terms([(0, n(1)), (Q_GRID, n(-1))], 8 * Q_GRID);
    let inv = a.invert().unwrap();
    for k in 0..8 {
        assert_eq!(inv.coeff(k * Q_GRID), n(1));
    }
}

#[test]
fn delta_inverse() {
    let p = 10 * Q_GRID;
    let inv = delta(p).invert().unwrap();
    assert_eq!(inv.coeff(-Q_GRID), n(1));
    assert_eq!(inv.coeff(0), n(24));
    assert_eq!(inv.coeff(Q_GRID), n(324));
    let one = delta(p).mul(&inv);
    assert_eq!(one.truncate(8 * Q_GRID), QSeries::one(8 * Q_GRID));
    assert_eq!(QSeries::zero(Q_GRID).invert(), Err(Error::NonInvertible));
}

#[test]
fn argument_scaling() {
    let e2 = eisenstein_e2(4 * Q_GRID);
    let e2x2 = e2.scale_by(2);
    assert_eq!(e2x2.coeff(4 * Q_GRID), e2.coeff(2 * Q_GRID));
    assert!(matches!(eta(Q_GRID).scale_argument(&rat(1, 2)), Err(Error::GridViolation(_))));
}

#[test]
fn half_period_shift_signs() {
    let a = QSeries::from_terms([(12, n(1)), (24, n(1))], 48);
    let b = a.half_period_shift().unwrap();
    assert_eq!((b.coeff(12), b.coeff(24)), (n(-1), n(1)));
    assert!(eta(48).half_period_shift().is_err());
}

#[test]
fn half_shift_swaps_2b_with_its_negative() {
    let p = 8 * Q_GRID;
    let g: FrameShape = "1^8 2^8".parse().unwrap();
    let neg: FrameShape = "2^16/1^8".parse().unwrap();
    let shifted = eta_ratio_half(&g, p).half_period_shift().unwrap();
    assert_eq!(shifted, eta_ratio_half(&neg, p).neg());
}

#[test]
fn z0_specializations() {
    let p = 6 * Q_GRID;
    assert_eq!(phi01(p).specialize_z0(), QSeries::constant(n(12), p));
    assert!(phi_minus21(p).specialize_z0().is_zero());
}
