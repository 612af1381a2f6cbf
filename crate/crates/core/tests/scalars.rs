use twining::{rat, RadicalScalar};

fn s(x: &str) -> RadicalScalar {
    x.parse().unwrap()
}

#[test]
fn basis_products() {
    assert_eq!(&s("sqrt(2)") * &s("sqrt(3)"), s("sqrt(6)"));
    assert_eq!(&s("sqrt(6)") * &s("sqrt(10)"), s("2*sqrt(15)"));
    assert_eq!(&s("1+sqrt(2)") * &s("1-sqrt(2)"), RadicalScalar::from_int(-1));
}

#[test]
fn d_squared_for_5c() {
    let d = s("25*sqrt(5)");
    assert_eq!((&d * &d).as_rational(), Some(rat(3125, 1)));
}

#[test]
fn rationality() {
    assert_eq!(s("4096").as_rational(), Some(rat(4096, 1)));
    assert_eq!(s("32*sqrt(2)").as_rational(), None);
    assert_eq!(RadicalScalar::zero().as_rational(), Some(rat(0, 1)));
}

#[test]
fn parser_accepts_fractions_and_rejects_foreign_radicals() {
    assert_eq!(
        s("1/2*sqrt(3) + 3/4"),
        &RadicalScalar::radical(rat(1, 2), 3).unwrap() + &RadicalScalar::from_rational(rat(3, 4))
    );
    assert!("sqrt(7)".parse::<RadicalScalar>().is_err());
    assert!("x".parse::<RadicalScalar>().is_err());
}

#[test]
fn every_table_constant_squares_to_a_rational() {
    let data = twining::ClassData::bundled().unwrap();
    for r in &data.records {
        for d in r.d_magnitude.values() {
            assert!((d * d).as_rational().is_some(), "{}", r.co0);
        }
        assert!((&r.c_neg_g * &r.c_neg_g).as_rational().is_some());
    }
}
