use twining::conway::{ClassData, DSign};
use twining::genera::{phi_g, ts_g, Form, Which};
use twining::oracle::*;
use twining::report::IdentityReport;
use twining::series::Q_GRID;
use twining::{rat, RadicalScalar};

fn data() -> ClassData {
    ClassData::bundled().unwrap()
}

fn check_class(class: &str, sign: DSign) {
    let d = data();
    let rec = d.get(class).unwrap();
    let lift = SpinLift::normalized(rec, 2, sign).unwrap();
    let brute = brute_genera(&lift, 2).unwrap();
    let trunc = 2 * Q_GRID + 1;
    let ts = ts_g(rec, Which::G, Form::Chi, trunc).unwrap();
    let tw = ts_g(rec, Which::GTw, Form::Chi, trunc).unwrap();
    let phi = phi_g(rec, sign, trunc).unwrap();
    for rep in [
        IdentityReport::compare_q(format!("T^s {class}"), &brute.ts, &ts, trunc),
        IdentityReport::compare_q(format!("T^s_tw {class}"), &brute.ts_tw, &tw, trunc),
        IdentityReport::compare_jacobi(format!("phi {class}"), &brute.phi, &phi, trunc),
    ] {
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn class_1a() {
    check_class("1A", DSign::Plus);
}

#[test]
fn class_2b() {
    check_class("2B", DSign::Plus);
}

#[test]
fn class_2d() {
    check_class("2D", DSign::Plus);
}

#[test]
fn class_3d() {
    check_class("3D", DSign::Plus);
}

#[test]
fn class_4d_both_signs() {
    check_class("4D", DSign::Plus);
    check_class("4D", DSign::Minus);
}

#[test]
fn class_8i_has_d_32() {
    let d = data();
    let rec = d.get("8I").unwrap();
    let lift = SpinLift::new(&rec.fs_g, 2).unwrap();
    let dd = lift.cm_product(true, true).to_radical().unwrap();
    assert_eq!(&dd * &dd, RadicalScalar::from_int(1024));
    check_class("8I", DSign::Minus);
}

#[test]
fn twisted_ground_is_4096() {
    assert_eq!(level_dimension(Sector::Twisted, &rat(1, 1)).unwrap(), 4096);
}

#[test]
fn untwisted_levels_match_product() {
    // q^(-1/2) prod (1 + q^(n-1/2))^24
    let expect = [1usize, 24, 276, 2048, 11202];
    for (k, &e) in expect.iter().enumerate() {
        let deg = rat(k as i64 - 1, 2);
        assert_eq!(level_dimension(Sector::Untwisted, &deg).unwrap(), e, "degree {deg}");
    }
    assert_eq!(enumerate_basis(Sector::Untwisted, &rat(0, 1)).unwrap().len(), 25);
}

#[test]
fn refuses_large_bound() {
    assert!(enumerate_basis(Sector::Twisted, &rat(4, 1)).is_err());
}

#[test]
fn cm_traces_square_to_oracles() {
    let d = data();
    for class in ["1A", "3C", "5C", "4D", "2C"] {
        let rec = d.get(class).unwrap();
        let neg = SpinLift::new(&rec.fs_neg_g, 0).unwrap();
        let c = cm_ground_trace(&neg, true);
        assert_eq!(cm_square(&c).unwrap(), twining::conway::c_squared_oracle(&rec.fs_g).unwrap(), "{class}");
    }
    let id = SpinLift::new(&"1^24".parse().unwrap(), 2).unwrap();
    assert!(cm_ground_trace(&id, true).is_zero());
}
