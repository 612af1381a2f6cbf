//! Twining genera `phi_g^(l)`, their weight-2 partners `F_g`, `F_{2j,g}`, the
//! functions `T^s_g`, `T^s_{g,tw}`, and the identity checks that tie them together.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_integer::Roots;

use crate::conway::{
    check_lambency, frame_shape_to_cyclo, ClassData, CoincidenceRelation, ConwayClassRecord, DSign, RelationKind,
};
use crate::error::{Error, Result};
use crate::modforms::{
    delta, eta_product, eta_ratio_half, hecke_t2, lambda2_half, lambda_n, phi01, phi_minus21, theta_quotient,
    HalfVariant, ThetaQuotientKind,
};
use crate::report::{Deviation, IdentityReport};
use crate::scalars::{rat, RadicalScalar, Rational};
use crate::series::{fraction_string, JacobiSeries, QSeries, Q_GRID, Y_GRID};

const MARGIN: i64 = 2 * Q_GRID;

/// Default truncation for the verification suites: five q-orders.
pub const DEFAULT_PREC: i64 = 5 * Q_GRID;

fn r(n: i64) -> RadicalScalar {
    RadicalScalar::from_int(n)
}

fn half() -> Rational {
    rat(1, 2)
}

/// Parameters of one genus `phi_g^(l)`.
#[derive(Clone, Copy, Debug)]
pub struct GenusRequest<'a> {
    pub record: &'a ConwayClassRecord,
    pub sign: DSign,
    pub ell: u32,
    /// q-grid truncation index.
    pub prec: i64,
}

impl<'a> GenusRequest<'a> {
    pub fn new(record: &'a ConwayClassRecord, sign: DSign, ell: u32, prec: i64) -> Result<Self> {
        check_lambency(ell)?;
        if !record.has_lambency(ell) {
            return Err(Error::LambencyTooLarge { class: record.co0.clone(), ell });
        }
        Ok(Self { record, sign: record.normalize_sign(ell, sign), ell, prec })
    }

    pub fn d_value(&self) -> RadicalScalar {
        self.record.d_value(self.ell, self.sign).expect("checked in new")
    }

    pub fn label(&self) -> String {
        self.record.label(self.ell, self.sign)
    }
}

/// `C_g`, which vanishes because every tabulated `g` fixes at least a 4-space.
pub fn c_g(rec: &ConwayClassRecord) -> Result<RadicalScalar> {
    let a1 = frame_shape_to_cyclo(&rec.fs_g)?.get(1);
    if a1 < 4 {
        return Err(Error::Invariant(format!("{} fixes only a {a1}-space", rec.co0)));
    }
    Ok(RadicalScalar::zero())
}

/// The eta-product ingredients of one class, known below `trunc`.
struct Pieces {
    r_g: QSeries,
    r_neg: QSeries,
    eta_g: QSeries,
    eta_neg: QSeries,
    c_g: RadicalScalar,
    c_neg: RadicalScalar,
}

impl Pieces {
    fn new(rec: &ConwayClassRecord, trunc: i64) -> Result<Self> {
        Ok(Self {
            r_g: eta_ratio_half(&rec.fs_g, trunc),
            r_neg: eta_ratio_half(&rec.fs_neg_g, trunc),
            eta_g: eta_product(&rec.fs_g, trunc),
            eta_neg: eta_product(&rec.fs_neg_g, trunc),
            c_g: c_g(rec)?,
            c_neg: rec.c_neg_g.clone(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    /// `T^s_g`
    G,
    /// `T^s_{g,tw}`
    GTw,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    /// Sum of the four eta-product terms.
    Direct,
    /// Closed form through `chi_g`.
    Chi,
}

/// `T^s_g` or `T^s_{g,tw}` in either form.
pub fn ts_g(rec: &ConwayClassRecord, which: Which, form: Form, prec: i64) -> Result<QSeries> {
    let p = Pieces::new(rec, prec + MARGIN)?;
    let chi = QSeries::constant(r(rec.chi()), prec + MARGIN);
    let cg = p.eta_g.scale(&p.c_g);
    let cn = p.eta_neg.scale(&p.c_neg);
    let out = match (which, form) {
        (Which::G, Form::Chi) => p.r_g.add(&chi),
        (Which::GTw, Form::Chi) => cg.sub(&chi),
        (Which::G, Form::Direct) => p.r_g.add(&p.r_neg).add(&cg).sub(&cn).scale_rat(&half()),
        (Which::GTw, Form::Direct) => p.r_g.sub(&p.r_neg).add(&cg).add(&cn).scale_rat(&half()),
    };
    Ok(out.truncate(prec))
}

/// `2 chi_g - t_{-g}(tau/2) + t_g(tau/2) + C_{-g} eta_{-g} - C_g eta_g`, which must vanish.
pub fn eta_identity_residual(rec: &ConwayClassRecord, prec: i64) -> Result<QSeries> {
    let p = Pieces::new(rec, prec + MARGIN)?;
    let out = QSeries::constant(r(2 * rec.chi()), prec + MARGIN)
        .sub(&p.r_neg)
        .add(&p.r_g)
        .add(&p.eta_neg.scale(&p.c_neg))
        .sub(&p.eta_g.scale(&p.c_g));
    Ok(out.truncate(prec))
}

pub fn verify_eta_identity(rec: &ConwayClassRecord, prec: i64) -> IdentityReport {
    let name = format!("eta identity {}", rec.co0);
    match eta_identity_residual(rec, prec) {
        Ok(res) => IdentityReport::compare_q(name, &res, &QSeries::zero(prec), prec),
        Err(e) => IdentityReport::fail(name, None, e.to_string()),
    }
}

/// `phi_g^(l)` for any tabulated lambency.
pub fn phi_g_ell(req: &GenusRequest) -> Result<JacobiSeries> {
    let work = req.prec + MARGIN;
    let p = Pieces::new(req.record, work)?;
    let e = req.ell - 1;
    let q = |k| theta_quotient(k, work).pow(e);
    let t1 = q(ThetaQuotientKind::Theta1Sq);
    let t1 = if req.ell.is_multiple_of(2) { t1 } else { t1.neg() };
    let out = q(ThetaQuotientKind::Theta4)
        .mul_q(&p.r_g)
        .sub(&q(ThetaQuotientKind::Theta3).mul_q(&p.r_neg))
        .neg()
        .add(&t1.mul_q(&p.eta_g.scale(&req.d_value())))
        .sub(&q(ThetaQuotientKind::Theta2).mul_q(&p.eta_neg.scale(&p.c_neg)))
        .scale_rat(&half());
    Ok(out.truncate(req.prec))
}

/// `phi_g` at lambency 2.
pub fn phi_g(rec: &ConwayClassRecord, sign: DSign, prec: i64) -> Result<JacobiSeries> {
    phi_g_ell(&GenusRequest::new(rec, sign, 2, prec)?)
}

/// The weight-2 form with `phi_g = (chi_g/12) phi_{0,1} + F_g phi_{-2,1}`.
pub fn f_g(rec: &ConwayClassRecord, sign: DSign, prec: i64) -> Result<QSeries> {
    let req = GenusRequest::new(rec, sign, 2, prec)?;
    let work = prec + MARGIN;
    let p = Pieces::new(rec, work)?;
    let out = f_g_without_d(&p, work).sub(&p.eta_g.scale(&req.d_value()).scale_rat(&half()));
    finish_integer(out, prec, "F_g")
}

fn f_g_without_d(p: &Pieces, work: i64) -> QSeries {
    let l_plain = lambda2_half(HalfVariant::Plain, work);
    let l_shift = lambda2_half(HalfVariant::Shifted, work);
    l_plain
        .mul(&p.r_g)
        .sub(&l_shift.mul(&p.r_neg))
        .scale_rat(&half())
        .sub(&lambda_n(2, work).mul(&p.eta_neg.scale(&p.c_neg)))
}

fn finish_integer(f: QSeries, prec: i64, what: &str) -> Result<QSeries> {
    let f = f.truncate(prec);
    if !f.has_integer_support() {
        return Err(Error::Invariant(format!("{what} not on integer grid")));
    }
    Ok(f)
}

/// `F_{2j,g} = -L(tau/2)^j t_g + L(tau/2 + 1/2)^j t_{-g} - (-2 L(tau))^j C_{-g} eta_{-g}` with `L = Lambda_2`.
pub fn f_2j_g(rec: &ConwayClassRecord, j: u32, prec: i64) -> Result<QSeries> {
    let work = prec + MARGIN;
    let p = Pieces::new(rec, work)?;
    let j = i64::from(j);
    let out = lambda2_half(HalfVariant::Plain, work)
        .pow(j)?
        .mul(&p.r_g)
        .neg()
        .add(&lambda2_half(HalfVariant::Shifted, work).pow(j)?.mul(&p.r_neg))
        .sub(&lambda_n(2, work).scale_int(-2).pow(j)?.mul(&p.eta_neg.scale(&p.c_neg)));
    let out = finish_integer(out, prec, "F_2j")?;
    if j == 0 && out.terms().any(|(i, c)| i != 0 && !c.is_zero()) {
        return Err(Error::Invariant(format!("F_0 of {} is not constant", rec.co0)));
    }
    Ok(out)
}

pub fn verify_decomposition(rec: &ConwayClassRecord, sign: DSign, prec: i64) -> IdentityReport {
    let name = format!("decomposition {}", rec.label(2, sign));
    let run = || -> Result<IdentityReport> {
        let phi = phi_g(rec, sign, prec)?;
        let f = f_g(rec, sign, prec)?;
        let chi = RadicalScalar::from_rational(rat(rec.chi(), 12));
        let rhs = phi01(prec).scale(&chi).add(&phi_minus21(prec).mul_q(&f));
        Ok(IdentityReport::compare_jacobi(name.clone(), &phi, &rhs, prec))
    };
    run().unwrap_or_else(|e| IdentityReport::fail(name.clone(), None, e.to_string()))
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * i64::from(n - i) / i64::from(i + 1))
}

/// Right-hand side of the binomial decomposition of `phi_g^(l)`.
pub fn decomposition_ell_rhs(req: &GenusRequest) -> Result<JacobiSeries> {
    let prec = req.prec;
    let e = req.ell - 1;
    let a = phi01(prec);
    let b = phi_minus21(prec);
    let eta_g = eta_product(&req.record.fs_g, prec);
    let mut out = b.pow(e).mul_q(&eta_g.scale(&req.d_value())).scale_rat(&half()).neg();
    for j in 0..=e {
        let f = f_2j_g(req.record, j, prec)?;
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let c = rat(sign * binomial(e, j), 2 * 12i64.pow(e - j));
        out = out.add(&a.pow(e - j).mul(&b.pow(j)).mul_q(&f).scale_rat(&c));
    }
    Ok(out.truncate(prec))
}

pub fn verify_decomposition_ell(req: &GenusRequest) -> IdentityReport {
    let name = format!("decomposition l={} {}", req.ell, req.label());
    let run = || -> Result<IdentityReport> {
        let lhs = phi_g_ell(req)?;
        let rhs = decomposition_ell_rhs(req)?;
        Ok(IdentityReport::compare_jacobi(name.clone(), &lhs, &rhs, req.prec))
    };
    run().unwrap_or_else(|e| IdentityReport::fail(name.clone(), None, e.to_string()))
}

/// `z = 0` value of `phi_g^(l)` must be the constant `chi_g`.
pub fn verify_z0_value(req: &GenusRequest) -> IdentityReport {
    let name = format!("phi(z=0) = chi l={} {}", req.ell, req.label());
    match phi_g_ell(req) {
        Ok(phi) => {
            let expect = QSeries::constant(r(req.record.chi()), req.prec);
            IdentityReport::compare_q(name, &phi.specialize_z0(), &expect, req.prec)
        }
        Err(e) => IdentityReport::fail(name, None, e.to_string()),
    }
}

/// `(1/2) Q3 Delta^2/(Delta(2 tau) Delta(tau/2)) - (1/2) Q4 Delta(tau/2)/Delta - 2^11 Q2 Delta(2 tau)/Delta`.
pub fn k3_elliptic_genus(prec: i64) -> Result<JacobiSeries> {
    let work = prec + 4 * Q_GRID;
    let ones = crate::conway::FrameShape::new([(1, 24)])?;
    let b = eta_ratio_half(&ones, work);
    let d = delta(work + 2 * Q_GRID);
    let d2 = d.scale_by(2);
    let d_over_d2 = d.mul(&d2.invert()?);
    let a = b.invert()?.mul(&d_over_d2);
    let c = d2.mul(&d.invert()?);
    let q = |k| theta_quotient(k, work);
    let out = q(ThetaQuotientKind::Theta3)
        .mul_q(&a)
        .sub(&q(ThetaQuotientKind::Theta4).mul_q(&b))
        .scale_rat(&half())
        .sub(&q(ThetaQuotientKind::Theta2).mul_q(&c).scale(&r(2048)));
    Ok(out.truncate(prec))
}

/// `F''_g = F'_g - 2 chi_g Lambda_2` against `T(2)` of `(1/2) t_g Lambda_4`, where `F'_g` drops the `D_g` term.
pub fn verify_hecke_relation(rec: &ConwayClassRecord, prec: i64) -> IdentityReport {
    let name = format!("F''_g = T(2) f_g {}", rec.co0);
    let run = || -> Result<IdentityReport> {
        let work = 2 * prec + 2 * MARGIN;
        let p = Pieces::new(rec, work)?;
        let fpp = f_g_without_d(&p, work).sub(&lambda_n(2, work).scale_int(2 * rec.chi())).truncate(prec);
        let t = p.eta_g.mul(&p.eta_g.scale_by(2).invert()?);
        let f = t.mul(&lambda_n(4, work)).scale_rat(&half());
        let rhs = hecke_t2(&f, 2)?;
        Ok(IdentityReport::compare_q(name.clone(), &fpp, &rhs, prec))
    };
    run().unwrap_or_else(|e| IdentityReport::fail(name.clone(), None, e.to_string()))
}

fn jacobi_deviation(a: (i64, i64), ca: &RadicalScalar, b: (i64, i64), cb: &RadicalScalar) -> Deviation {
    Deviation {
        q_exp: a.0.to_string(),
        y_exp: a.1.to_string(),
        lhs: ca.to_string(),
        rhs: format!("{cb} at (n,r)=({},{})", b.0, b.1),
    }
}

/// Weak Jacobi checks for index `m`: no negative q-powers, and `c(n, r)` depends only on
/// `4mn - r^2` and `r mod 2m` for every pair inside the truncation.
pub fn verify_jacobi_invariance(name: &str, phi: &JacobiSeries, m: u32, prec: i64) -> IdentityReport {
    let name = format!("jacobi invariance m={m} {name}");
    if phi.trunc() < prec {
        return IdentityReport::fail(
            name,
            None,
            format!("only known below q^{}", fraction_string(phi.trunc(), Q_GRID)),
        );
    }
    let m = i64::from(m);
    let orders = (prec + Q_GRID - 1) / Q_GRID;
    let mut coeffs: BTreeMap<(i64, i64), RadicalScalar> = BTreeMap::new();
    for ((qi, yh), c) in phi.terms() {
        if qi >= prec || c.is_zero() {
            continue;
        }
        if qi % Q_GRID != 0 || yh % Y_GRID != 0 {
            let dev = Deviation {
                q_exp: fraction_string(qi, Q_GRID),
                y_exp: fraction_string(yh, Y_GRID),
                lhs: c.to_string(),
                rhs: "0".into(),
            };
            return IdentityReport::fail(name, Some(dev), "non-integral exponent");
        }
        if qi < 0 {
            let dev = Deviation {
                q_exp: (qi / Q_GRID).to_string(),
                y_exp: (yh / Y_GRID).to_string(),
                lhs: c.to_string(),
                rhs: "0".into(),
            };
            return IdentityReport::fail(name, Some(dev), "negative q-power");
        }
        coeffs.insert((qi / Q_GRID, yh / Y_GRID), c.clone());
    }
    let get = |k: &(i64, i64)| coeffs.get(k).cloned().unwrap_or_else(RadicalScalar::zero);
    // Candidate keys: stored ones plus the weak range r^2 <= 4mn + m^2.
    let mut keys: BTreeSet<(i64, i64)> = coeffs.keys().copied().collect();
    for n in 0..orders {
        let rmax = (4 * m * n + m * m).sqrt();
        keys.extend((-rmax..=rmax).map(|r| (n, r)));
    }
    let mut seen: BTreeSet<(i64, i64)> = BTreeSet::new();
    for &(n, rr) in &keys {
        let disc = 4 * m * n - rr * rr;
        let class = rr.rem_euclid(2 * m);
        if !seen.insert((disc, class)) {
            continue;
        }
        let base = get(&(n, rr));
        for n2 in 0..orders {
            let t = 4 * m * n2 - disc;
            if t < 0 {
                continue;
            }
            let s = t.sqrt();
            if s * s != t {
                continue;
            }
            for r2 in [s, -s] {
                if r2.rem_euclid(2 * m) != class {
                    continue;
                }
                let c2 = get(&(n2, r2));
                if c2 != base {
                    let dev = jacobi_deviation((n, rr), &base, (n2, r2), &c2);
                    return IdentityReport::fail(
                        name,
                        Some(dev),
                        format!("4mn-r^2 = {disc}, r = {class} mod {}", 2 * m),
                    );
                }
            }
        }
    }
    let mut rep = IdentityReport::pass(name);
    rep.checked_below = Some(orders.to_string());
    rep
}

type CacheKey = (String, DSign, u32);

/// Memoized genera for relation checks.
pub struct GenusCache<'a> {
    data: &'a ClassData,
    prec: i64,
    cache: HashMap<CacheKey, JacobiSeries>,
}

impl<'a> GenusCache<'a> {
    pub fn new(data: &'a ClassData, prec: i64) -> Self {
        Self { data, prec, cache: HashMap::new() }
    }

    pub fn get(&mut self, class: &str, sign: DSign, ell: u32) -> Result<JacobiSeries> {
        let rec = self.data.get(class).ok_or_else(|| Error::UnknownClass(class.to_string()))?;
        let req = GenusRequest::new(rec, sign, ell, self.prec)?;
        let key = (rec.co0.clone(), req.sign, ell);
        if let Some(s) = self.cache.get(&key) {
            return Ok(s.clone());
        }
        let s = phi_g_ell(&req)?;
        self.cache.insert(key, s.clone());
        Ok(s)
    }
}

/// One report per relation; definitions and external rows are reported as skipped.
pub fn verify_coincidences(data: &ClassData, relations: &[CoincidenceRelation], prec: i64) -> Vec<IdentityReport> {
    let mut cache = GenusCache::new(data, prec);
    relations
        .iter()
        .map(|rel| {
            let name = rel.name();
            let rep = match &rel.kind {
                RelationKind::Definition => IdentityReport::skipped(name, "definition"),
                RelationKind::External(why) => IdentityReport::skipped(name, format!("external: {why}")),
                RelationKind::Internal(terms) => {
                    let run = |cache: &mut GenusCache| -> Result<IdentityReport> {
                        let lhs = cache.get(&rel.lhs_class, rel.lhs_sign, rel.lambency)?;
                        let mut rhs = JacobiSeries::zero(prec);
                        for t in terms {
                            rhs = rhs.add(&cache.get(&t.class, t.sign, rel.lambency)?.scale_rat(&t.coeff));
                        }
                        Ok(IdentityReport::compare_jacobi(name.clone(), &lhs, &rhs, prec))
                    };
                    run(&mut cache).unwrap_or_else(|e| IdentityReport::fail(name.clone(), None, e.to_string()))
                }
            };
            rep.as_relation()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data() -> ClassData {
        ClassData::bundled().unwrap()
    }

    #[test]
    fn f_1a_vanishes() {
        let d = data();
        let f = f_g(d.get("1A").unwrap(), DSign::Plus, 3 * Q_GRID).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn phi_1a_is_twice_phi01() {
        let d = data();
        let phi = phi_g(d.get("1A").unwrap(), DSign::Plus, 3 * Q_GRID).unwrap();
        assert_eq!(phi, phi01(3 * Q_GRID).scale(&r(2)));
    }

    #[test]
    fn binomials() {
        assert_eq!((0..=6).map(|k| binomial(6, k)).collect::<Vec<_>>(), vec![1, 6, 15, 20, 15, 6, 1]);
    }
}
