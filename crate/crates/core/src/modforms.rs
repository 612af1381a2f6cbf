//! Named modular objects as truncated series: eta, E2, Lambda_N, eta products
//! and their half-argument ratios, theta quotients, phi_{0,1}, phi_{-2,1}, T(2).
//!
//! All `prec` arguments are q-grid truncation indices (24 per q-order).

use num_bigint::BigInt;
use num_traits::Zero;

use crate::conway::{characteristic_polynomial, FrameShape};
use crate::error::{Error, Result};
use crate::report::IdentityReport;
use crate::scalars::{rat, RadicalScalar, Rational};
use crate::series::{binomial_factor, JacobiSeries, QSeries, Q_GRID};

/// Extra grid steps used internally before truncating back to the requested precision.
const MARGIN: i64 = 2 * Q_GRID;

fn r(n: i64) -> RadicalScalar {
    RadicalScalar::from_int(n)
}

/// `prod_m prod_{n>=1} (1 - q^(m n))^(k_m)`, a unit series known below `trunc`.
fn eta_unit(fs: &FrameShape, trunc: i64) -> QSeries {
    let mut acc = QSeries::one(trunc);
    for (m, k) in fs.factors() {
        let step = Q_GRID * i64::from(m);
        let mut e = step;
        while e < trunc {
            acc = acc.mul(&binomial_factor(e, -1, i64::from(k), trunc));
            e += step;
        }
    }
    acc
}

/// Dedekind eta, `q^(1/24) prod (1 - q^n)`.
pub fn eta(prec: i64) -> QSeries {
    q_product(Q_GRID, Q_GRID, -1, 1, prec - 1).shift(1)
}

/// `Delta = eta^24`.
pub fn delta(prec: i64) -> QSeries {
    eta_product(&FrameShape::new([(1, 24)]).expect("1^24"), prec)
}

fn sigma1(n: i64) -> i64 {
    (1..=n).filter(|d| n % d == 0).sum()
}

/// `E_2 = 1 - 24 sum sigma_1(n) q^n`.
pub fn eisenstein_e2(prec: i64) -> QSeries {
    let mut out = QSeries::one(prec);
    let mut n = 1;
    while n * Q_GRID < prec {
        out.set(n * Q_GRID, r(-24 * sigma1(n)));
        n += 1;
    }
    out
}

/// `Lambda_N = (N/24)(N E_2(N tau) - E_2(tau))`.
pub fn lambda_n(n: i64, prec: i64) -> QSeries {
    assert!(n >= 2, "Lambda_N needs N >= 2");
    let e2 = eisenstein_e2(prec);
    e2.scale_by(n).scale_int(n).sub(&e2).scale_rat(&rat(n, 24))
}

/// `E_2(tau + 1/2)`, built on the half-integer grid with sign flips only.
pub fn e2_half_shift(prec: i64) -> QSeries {
    let halved = eisenstein_e2(2 * prec).scale_argument(&rat(1, 2)).expect("integer support halves onto the grid");
    halved.half_period_shift().expect("half-integer grid").scale_by(2)
}

/// `Lambda_4(tau + 1/2) = (1/6)(4 E_2(4 tau) - E_2(tau + 1/2))`.
pub fn lambda4_half_shift(prec: i64) -> QSeries {
    let e2 = eisenstein_e2(prec);
    e2.scale_by(4).scale_int(4).sub(&e2_half_shift(prec)).scale_rat(&rat(1, 6))
}

/// Which of `Lambda_2(tau/2)` and `Lambda_2(tau/2 + 1/2)` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfVariant {
    Plain,
    Shifted,
}

/// `Lambda_2(tau/2) = (1/12)(2 E_2(tau) - E_2(tau/2))` or its `tau -> tau + 1` image.
pub fn lambda2_half(variant: HalfVariant, prec: i64) -> QSeries {
    let e2_half = eisenstein_e2(2 * prec).scale_argument(&rat(1, 2)).expect("halving integer exponents");
    let e2_half = match variant {
        HalfVariant::Plain => e2_half,
        HalfVariant::Shifted => e2_half.half_period_shift().expect("half-integer grid"),
    };
    eisenstein_e2(prec).scale_int(2).sub(&e2_half).scale_rat(&rat(1, 12))
}

/// `eta_g = prod_m eta(m tau)^(k_m)`.
pub fn eta_product(fs: &FrameShape, prec: i64) -> QSeries {
    let v: i64 = fs.factors().map(|(m, k)| i64::from(m) * i64::from(k)).sum();
    eta_unit(fs, prec - v).shift(v)
}

/// `eta_g(tau/2) / eta_g(tau) = q^(-1/2) prod_n P_g(q^(n - 1/2))`.
pub fn eta_ratio_half(fs: &FrameShape, prec: i64) -> QSeries {
    let half = Q_GRID / 2;
    let trunc = prec + half;
    let mut acc = QSeries::one(trunc);
    for (m, k) in fs.factors() {
        let m = i64::from(m);
        let mut n = 1;
        while m * (2 * n - 1) * half < trunc {
            acc = acc.mul(&binomial_factor(m * (2 * n - 1) * half, -1, i64::from(k), trunc));
            n += 1;
        }
    }
    acc.shift(-half)
}

/// Same ratio built from `P_g` evaluated as an integer polynomial.
pub fn eta_ratio_half_via_polynomial(fs: &FrameShape, prec: i64) -> Result<QSeries> {
    let p = characteristic_polynomial(fs)?;
    let half = Q_GRID / 2;
    let trunc = prec + half;
    let mut acc = QSeries::one(trunc);
    let mut n = 1;
    while (2 * n - 1) * half < trunc {
        let step = (2 * n - 1) * half;
        let factor = QSeries::from_terms(
            p.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (j as i64 * step, RadicalScalar::from_bigint(c.clone()))),
            trunc,
        );
        acc = acc.mul(&factor);
        n += 1;
    }
    Ok(acc.shift(-half))
}

/// The four theta quotients used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThetaQuotientKind {
    /// `theta_2(tau, z)^2 / theta_2(tau, 0)^2`
    Theta2,
    /// `theta_3(tau, z)^2 / theta_3(tau, 0)^2`
    Theta3,
    /// `theta_4(tau, z)^2 / theta_4(tau, 0)^2`
    Theta4,
    /// `theta_1(tau, z)^2 / eta(tau)^6`
    Theta1Sq,
}

fn y_poly(terms: &[(i64, RadicalScalar)], trunc: i64) -> JacobiSeries {
    let mut j = JacobiSeries::zero(trunc);
    for (y, c) in terms {
        j.set(0, *y, c.clone());
    }
    j
}

/// `prod_n (1 + s y^(-1) q^(e_n))^2 (1 + s y q^(e_n))^2` with `e_n = first + (n-1) step` on the grid.
fn y_pair_product(first: i64, step: i64, s: i64, trunc: i64) -> JacobiSeries {
    let mut acc = JacobiSeries::monomial(0, 0, r(1), trunc);
    let mut e = first;
    while e < trunc {
        for y in [-2, 2] {
            let mut f = JacobiSeries::zero(trunc);
            f.set(0, 0, r(1));
            f.set(e, y, r(2 * s));
            f.set(2 * e, 2 * y, r(1));
            acc = acc.mul(&f);
        }
        e += step;
    }
    acc
}

/// `prod_n (1 + s q^(e_n))^k` as a q-series.
fn q_product(first: i64, step: i64, s: i64, k: i64, trunc: i64) -> QSeries {
    let mut acc = QSeries::one(trunc);
    let mut e = first;
    while e < trunc {
        acc = acc.mul(&binomial_factor(e, s, k, trunc));
        e += step;
    }
    acc
}

/// Theta quotient from the triple-product formulas.
pub fn theta_quotient(kind: ThetaQuotientKind, prec: i64) -> JacobiSeries {
    let half = Q_GRID / 2;
    match kind {
        ThetaQuotientKind::Theta2 => {
            let lead = y_poly(
                &[
                    (-2, RadicalScalar::from_rational(rat(1, 4))),
                    (0, RadicalScalar::from_rational(rat(1, 2))),
                    (2, RadicalScalar::from_rational(rat(1, 4))),
                ],
                prec,
            );
            lead.mul(&y_pair_product(Q_GRID, Q_GRID, 1, prec)).mul_q(&q_product(Q_GRID, Q_GRID, 1, -4, prec))
        }
        ThetaQuotientKind::Theta3 => y_pair_product(half, Q_GRID, 1, prec).mul_q(&q_product(half, Q_GRID, 1, -4, prec)),
        ThetaQuotientKind::Theta4 => {
            y_pair_product(half, Q_GRID, -1, prec).mul_q(&q_product(half, Q_GRID, -1, -4, prec))
        }
        ThetaQuotientKind::Theta1Sq => {
            let lead = y_poly(&[(-2, r(-1)), (0, r(2)), (2, r(-1))], prec);
            lead.mul(&y_pair_product(Q_GRID, Q_GRID, -1, prec)).mul_q(&q_product(Q_GRID, Q_GRID, -1, -4, prec))
        }
    }
}

/// Theta series from the sum formulas: `theta_i(tau, z)` on the half-y grid.
/// `Theta1Sq` yields the real variant `i * theta_1`.
pub fn theta_sum(kind: ThetaQuotientKind, prec: i64) -> JacobiSeries {
    let mut out = JacobiSeries::zero(prec);
    let bound = (1..).find(|&n: &i64| 3 * (2 * n - 1) * (2 * n - 1) >= prec && 12 * n * n >= prec).unwrap_or(1) + 1;
    for n in -bound..=bound {
        let (q_idx, y_half, sign) = match kind {
            ThetaQuotientKind::Theta2 => (3 * (2 * n + 1) * (2 * n + 1), 2 * n + 1, 1),
            ThetaQuotientKind::Theta1Sq => (3 * (2 * n + 1) * (2 * n + 1), 2 * n + 1, if n % 2 == 0 { 1 } else { -1 }),
            ThetaQuotientKind::Theta3 => (12 * n * n, 2 * n, 1),
            ThetaQuotientKind::Theta4 => (12 * n * n, 2 * n, if n % 2 == 0 { 1 } else { -1 }),
        };
        if q_idx < prec {
            let cur = out.coeff(q_idx, y_half);
            out.set(q_idx, y_half, cur + r(sign));
        }
    }
    out
}

/// Theta quotient assembled from the sum formulas; independent of [`theta_quotient`].
pub fn theta_quotient_from_sums(kind: ThetaQuotientKind, prec: i64) -> Result<JacobiSeries> {
    let work = prec + MARGIN;
    let num = theta_sum(kind, work);
    let num_sq = num.mul(&num);
    let den = match kind {
        ThetaQuotientKind::Theta1Sq => eta(work).pow(6)?.neg(),
        _ => {
            let at_zero = num.specialize_z0();
            at_zero.mul(&at_zero)
        }
    };
    Ok(num_sq.mul_q(&den.invert()?).truncate(prec))
}

/// `phi_{0,1} = 4 (Q2 + Q3 + Q4)`.
pub fn phi01(prec: i64) -> JacobiSeries {
    theta_quotient(ThetaQuotientKind::Theta2, prec)
        .add(&theta_quotient(ThetaQuotientKind::Theta3, prec))
        .add(&theta_quotient(ThetaQuotientKind::Theta4, prec))
        .scale(&r(4))
}

/// `phi_{-2,1} = -theta_1^2 / eta^6`.
pub fn phi_minus21(prec: i64) -> JacobiSeries {
    theta_quotient(ThetaQuotientKind::Theta1Sq, prec).neg()
}

/// Order-2 Hecke operator, coefficientwise: `(T f)_n = f_(2n)`.
pub fn hecke_t2(f: &QSeries, weight: i64) -> Result<QSeries> {
    if weight % 2 != 0 {
        return Err(Error::Invariant(format!("T(2) needs even weight, got {weight}")));
    }
    if !f.has_integer_support() {
        return Err(Error::GridViolation("T(2) input has non-integer exponents".into()));
    }
    let trunc = (f.trunc() + 1).div_euclid(2);
    let mut out = QSeries::zero(trunc);
    for (i, c) in f.terms() {
        if i.rem_euclid(2 * Q_GRID) == 0 {
            out.set(i / 2, c.clone());
        }
    }
    Ok(out)
}

/// Check the three theta-quotient identities and the Lambda_4 identities.
pub fn verify_theta_identities(prec: i64) -> Vec<IdentityReport> {
    let p01 = phi01(prec).scale_rat(&rat(1, 12));
    let pm = phi_minus21(prec);
    let l2 = lambda_n(2, prec);
    let mut out = vec![
        IdentityReport::compare_jacobi(
            "theta2: phi01/12 + 2 Lambda2 phi-21 = Q2",
            &p01.add(&pm.mul_q(&l2.scale_int(2))),
            &theta_quotient(ThetaQuotientKind::Theta2, prec),
            prec,
        ),
        IdentityReport::compare_jacobi(
            "theta3: phi01/12 - Lambda2(tau/2+1/2) phi-21 = Q3",
            &p01.sub(&pm.mul_q(&lambda2_half(HalfVariant::Shifted, prec))),
            &theta_quotient(ThetaQuotientKind::Theta3, prec),
            prec,
        ),
        IdentityReport::compare_jacobi(
            "theta4: phi01/12 - Lambda2(tau/2) phi-21 = Q4",
            &p01.sub(&pm.mul_q(&lambda2_half(HalfVariant::Plain, prec))),
            &theta_quotient(ThetaQuotientKind::Theta4, prec),
            prec,
        ),
    ];
    for kind in
        [ThetaQuotientKind::Theta1Sq, ThetaQuotientKind::Theta2, ThetaQuotientKind::Theta3, ThetaQuotientKind::Theta4]
    {
        let name = format!("triple product: {kind:?} products = sums");
        out.push(match theta_quotient_from_sums(kind, prec) {
            Ok(s) => IdentityReport::compare_jacobi(name, &theta_quotient(kind, prec), &s, prec),
            Err(e) => IdentityReport::fail(name, None, e.to_string()),
        });
    }
    let l4 = lambda_n(4, prec);
    out.push(IdentityReport::compare_q(
        "Lambda4 = 4 Lambda2(2tau) + 2 Lambda2",
        &l4,
        &l2.scale_by(2).scale_int(4).add(&l2.scale_int(2)),
        prec,
    ));
    out.push(IdentityReport::compare_q(
        "Lambda4(tau+1/2) = 8 Lambda2(2tau) - 2 Lambda2",
        &lambda4_half_shift(prec),
        &l2.scale_by(2).scale_int(8).sub(&l2.scale_int(2)),
        prec,
    ));
    out
}

/// `sum_{n} c q^n` helper for tests: the integer coefficient at `q^(num/den)`.
pub fn int_coeff(f: &QSeries, num: i64, den: i64) -> Option<BigInt> {
    f.coeff_at(num, den).and_then(|c| c.as_integer())
}

/// Rational coefficient at `q^(num/den)`.
pub fn rat_coeff(f: &QSeries, num: i64, den: i64) -> Option<Rational> {
    f.coeff_at(num, den).and_then(|c| c.as_rational())
}
