//! Truncated q-series and two-variable Jacobi-type series with exact coefficients.
//!
//! Exponents of `q` live on the grid `(1/24)Z`; a [`QSeries`] stores grid
//! indices `n` standing for `q^(n/24)`. Exponents of `y` live on `(1/2)Z` and
//! are stored as half-indices. Every series carries a truncation index: all
//! coefficients at grid indices below it are known, nothing above is.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalars::{RadicalScalar, Rational};

/// Number of q-grid steps per unit exponent.
pub const Q_GRID: i64 = 24;
/// Number of y-grid steps per unit exponent.
pub const Y_GRID: i64 = 2;

/// Reduced-fraction rendering of `num/den` ("0", "-3", "1/2").
pub fn fraction_string(num: i64, den: i64) -> String {
    let r = Rational::new(BigInt::from(num), BigInt::from(den));
    r.to_string()
}

/// Truncated power series in `q^(1/24)` with finitely many negative exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: BTreeMap<i64, RadicalScalar>,
    trunc: i64,
}

impl QSeries {
    /// The zero series known below `trunc`.
    pub fn zero(trunc: i64) -> Self {
        Self { coeffs: BTreeMap::new(), trunc }
    }

    pub fn constant(c: RadicalScalar, trunc: i64) -> Self {
        Self::monomial(0, c, trunc)
    }

    pub fn one(trunc: i64) -> Self {
        Self::constant(RadicalScalar::one(), trunc)
    }

    /// `c * q^(index/24)`.
    pub fn monomial(index: i64, c: RadicalScalar, trunc: i64) -> Self {
        let mut s = Self::zero(trunc);
        s.set(index, c);
        s
    }

    /// Build from `(index, coefficient)` pairs; entries at or above `trunc` are dropped.
    pub fn from_terms<I: IntoIterator<Item = (i64, RadicalScalar)>>(terms: I, trunc: i64) -> Self {
        let mut s = Self::zero(trunc);
        for (i, c) in terms {
            let cur = s.coeff(i);
            s.set(i, cur + c);
        }
        s
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    /// Smallest grid index with a nonzero coefficient, or `trunc` if none is known.
    pub fn valuation(&self) -> i64 {
        self.coeffs.keys().next().copied().unwrap_or(self.trunc)
    }

    /// Coefficient at a grid index; zero outside the support.
    pub fn coeff(&self, index: i64) -> RadicalScalar {
        self.coeffs.get(&index).cloned().unwrap_or_default()
    }

    /// Coefficient at a grid index, or `None` if that index lies beyond the truncation.
    pub fn coeff_checked(&self, index: i64) -> Option<RadicalScalar> {
        (index < self.trunc).then(|| self.coeff(index))
    }

    /// Coefficient of `q^(num/den)`.
    pub fn coeff_at(&self, num: i64, den: i64) -> Option<RadicalScalar> {
        if (num * Q_GRID) % den != 0 {
            return Some(RadicalScalar::zero());
        }
        self.coeff_checked(num * Q_GRID / den)
    }

    pub fn set(&mut self, index: i64, c: RadicalScalar) {
        if index >= self.trunc || c.is_zero() {
            self.coeffs.remove(&index);
        } else {
            self.coeffs.insert(index, c);
        }
    }

    /// Nonzero terms in increasing index order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &RadicalScalar)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    /// True if every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Drop everything at or above `trunc` (never raises the truncation).
    pub fn truncate(&self, trunc: i64) -> Self {
        let t = trunc.min(self.trunc);
        Self { coeffs: self.coeffs.range(..t).map(|(&i, c)| (i, c.clone())).collect(), trunc: t }
    }

    /// Multiply by the exact monomial `q^(by/24)`.
    pub fn shift(&self, by: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&i, c)| (i + by, c.clone())).collect(), trunc: self.trunc + by }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let t = self.trunc.min(rhs.trunc);
        let mut out = self.truncate(t);
        for (i, c) in rhs.coeffs.range(..t) {
            let cur = out.coeff(*i);
            out.set(*i, &cur + c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&i, c)| (i, -c)).collect(), trunc: self.trunc }
    }

    pub fn scale(&self, c: &RadicalScalar) -> Self {
        let mut out = Self::zero(self.trunc);
        for (&i, a) in &self.coeffs {
            out.set(i, a * c);
        }
        out
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&RadicalScalar::from_int(n))
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        self.scale(&RadicalScalar::from_rational(r.clone()))
    }

    /// Product, truncated at `min(a.trunc + b.val, b.trunc + a.val)`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let t = (self.trunc + rhs.valuation()).min(rhs.trunc + self.valuation());
        let mut acc: BTreeMap<i64, RadicalScalar> = BTreeMap::new();
        for (&i, a) in &self.coeffs {
            for (&j, b) in rhs.coeffs.range(..t - i) {
                *acc.entry(i + j).or_default() += a * b;
            }
        }
        let mut out = Self::zero(t);
        for (i, c) in acc {
            out.set(i, c);
        }
        out
    }

    /// Multiplicative inverse; fails when the leading coefficient is unknown.
    ///
    /// With valuation `v` and truncation `T` the result is known below `T - 2v`.
    pub fn invert(&self) -> Result<Self> {
        let v = self.valuation();
        if self.coeffs.is_empty() || v >= self.trunc {
            return Err(Error::NonInvertible);
        }
        let lead_inv = self.coeffs[&v].inverse().map_err(|_| Error::NonInvertible)?;
        let step = self.coeffs.keys().fold(0i64, |g, &i| g.gcd(&(i - v)));
        let step = if step == 0 { 1 } else { step };
        // Unit part u = self / (lead q^v), inverse w = 1/u, with u, w supported on step*Z.
        let rel_trunc = self.trunc - v;
        let u: BTreeMap<i64, RadicalScalar> =
            self.coeffs.iter().map(|(&i, c)| ((i - v) / step, c * &lead_inv)).collect();
        let n_terms = (rel_trunc + step - 1) / step;
        let mut w: Vec<RadicalScalar> = Vec::with_capacity(n_terms as usize);
        for k in 0..n_terms {
            if k == 0 {
                w.push(RadicalScalar::one());
                continue;
            }
            let mut s = RadicalScalar::zero();
            for (&j, uj) in u.range(1..=k) {
                s += &(uj * &w[(k - j) as usize]);
            }
            w.push(-s);
        }
        let trunc = self.trunc - 2 * v;
        let mut out = Self::zero(trunc);
        for (k, c) in w.into_iter().enumerate() {
            out.set(k as i64 * step - v, &c * &lead_inv);
        }
        Ok(out)
    }

    /// Integer power; negative exponents go through [`QSeries::invert`].
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc: Option<Self> = None;
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = Some(match acc {
                    None => sq.clone(),
                    Some(a) => a.mul(&sq),
                });
            }
            n >>= 1;
            if n > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc.unwrap_or_else(|| Self::one(self.trunc - self.valuation())))
    }

    /// Substitute `tau -> factor * tau`; every new exponent must stay on the grid.
    pub fn scale_argument(&self, factor: &Rational) -> Result<Self> {
        if !factor.is_positive() {
            return Err(Error::GridViolation(format!("scaling factor {factor}")));
        }
        let mut out = BTreeMap::new();
        for (&i, c) in &self.coeffs {
            let ni = Rational::from_integer(BigInt::from(i)) * factor;
            if !ni.is_integer() {
                return Err(Error::GridViolation(fraction_string(i, Q_GRID) + " scaled by " + &factor.to_string()));
            }
            out.insert(i64::try_from(ni.to_integer()).map_err(|_| Error::GridViolation(ni.to_string()))?, c.clone());
        }
        let t = (Rational::from_integer(BigInt::from(self.trunc)) * factor).ceil().to_integer();
        let trunc = i64::try_from(t).map_err(|_| Error::GridViolation("truncation overflow".into()))?;
        Ok(Self { coeffs: out, trunc })
    }

    /// Convenience for integer argument scaling `tau -> n * tau`.
    pub fn scale_by(&self, n: i64) -> Self {
        self.scale_argument(&Rational::from_integer(BigInt::from(n))).expect("integer scaling stays on the grid")
    }

    /// Substitute `tau -> tau + 1/2`; the series must be supported on `(1/2)Z`.
    pub fn half_period_shift(&self) -> Result<Self> {
        let mut out = Self::zero(self.trunc);
        for (&i, c) in &self.coeffs {
            if i % 12 != 0 {
                return Err(Error::GridViolation(format!("q^{} under tau -> tau + 1/2", fraction_string(i, Q_GRID))));
            }
            out.set(i, if (i / 12) % 2 == 0 { c.clone() } else { -c });
        }
        Ok(out)
    }

    /// True if every known exponent is an integer.
    pub fn has_integer_support(&self) -> bool {
        self.coeffs.keys().all(|i| i % Q_GRID == 0)
    }

    /// Canonical text dump with lines `q_exp 0 coeff`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (&i, c) in &self.coeffs {
            let _ = writeln!(s, "{} 0 {}", fraction_string(i, Q_GRID), c);
        }
        s
    }

    /// Coefficients as integers, if they all are.
    pub fn integer_coeffs(&self) -> Option<BTreeMap<i64, BigInt>> {
        self.coeffs.iter().map(|(&i, c)| c.as_integer().map(|n| (i, n))).collect()
    }
}

/// `prod_{n >= 1} (1 - c q^(e n / 24))^k`-style Euler factor builder.
///
/// Returns `(1 + sign * q^(e/24))^k` truncated at `trunc` for `e > 0`, any integer `k`.
pub fn binomial_factor(e: i64, sign: i64, k: i64, trunc: i64) -> QSeries {
    assert!(e > 0, "binomial factor needs a positive exponent");
    let mut out = QSeries::zero(trunc);
    let mut coeff = BigInt::one();
    let mut j: i64 = 0;
    while j * e < trunc {
        let term = if sign < 0 && j % 2 == 1 { -coeff.clone() } else { coeff.clone() };
        out.set(j * e, RadicalScalar::from_bigint(term));
        // C(k, j+1) = C(k, j) (k - j) / (j + 1), valid for negative k too.
        coeff = coeff * BigInt::from(k - j) / BigInt::from(j + 1);
        if coeff.is_zero() {
            break;
        }
        j += 1;
    }
    out
}

/// Two-variable truncated series in `q^(1/24)` and `y^(1/2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiSeries {
    coeffs: BTreeMap<(i64, i64), RadicalScalar>,
    trunc: i64,
}

impl JacobiSeries {
    pub fn zero(trunc: i64) -> Self {
        Self { coeffs: BTreeMap::new(), trunc }
    }

    /// `c * q^(q_index/24) * y^(y_half/2)`.
    pub fn monomial(q_index: i64, y_half: i64, c: RadicalScalar, trunc: i64) -> Self {
        let mut s = Self::zero(trunc);
        s.set(q_index, y_half, c);
        s
    }

    /// Embed a q-series as a `y`-independent Jacobi series.
    pub fn from_qseries(f: &QSeries) -> Self {
        let mut s = Self::zero(f.trunc());
        for (i, c) in f.terms() {
            s.set(i, 0, c.clone());
        }
        s
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn q_valuation(&self) -> i64 {
        self.coeffs.keys().map(|k| k.0).min().unwrap_or(self.trunc)
    }

    pub fn coeff(&self, q_index: i64, y_half: i64) -> RadicalScalar {
        self.coeffs.get(&(q_index, y_half)).cloned().unwrap_or_default()
    }

    /// Coefficient of `q^(qn/qd) y^(yn/yd)`, or `None` beyond truncation.
    pub fn coeff_at(&self, qn: i64, qd: i64, yn: i64, yd: i64) -> Option<RadicalScalar> {
        if (qn * Q_GRID) % qd != 0 || (yn * Y_GRID) % yd != 0 {
            return Some(RadicalScalar::zero());
        }
        let qi = qn * Q_GRID / qd;
        (qi < self.trunc).then(|| self.coeff(qi, yn * Y_GRID / yd))
    }

    pub fn set(&mut self, q_index: i64, y_half: i64, c: RadicalScalar) {
        if q_index >= self.trunc || c.is_zero() {
            self.coeffs.remove(&(q_index, y_half));
        } else {
            self.coeffs.insert((q_index, y_half), c);
        }
    }

    /// Nonzero terms `((q_index, y_half), coeff)` in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &RadicalScalar)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncate(&self, trunc: i64) -> Self {
        let t = trunc.min(self.trunc);
        Self { coeffs: self.coeffs.iter().filter(|(k, _)| k.0 < t).map(|(&k, c)| (k, c.clone())).collect(), trunc: t }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let t = self.trunc.min(rhs.trunc);
        let mut out = self.truncate(t);
        for (&(qi, yi), c) in &rhs.coeffs {
            if qi < t {
                let cur = out.coeff(qi, yi);
                out.set(qi, yi, &cur + c);
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c)).collect(), trunc: self.trunc }
    }

    pub fn scale(&self, c: &RadicalScalar) -> Self {
        let mut out = Self::zero(self.trunc);
        for (&(qi, yi), a) in &self.coeffs {
            out.set(qi, yi, a * c);
        }
        out
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        self.scale(&RadicalScalar::from_rational(r.clone()))
    }

    /// Product with truncation `min(a.trunc + b.qval, b.trunc + a.qval)`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let t = (self.trunc + rhs.q_valuation()).min(rhs.trunc + self.q_valuation());
        let mut acc: BTreeMap<(i64, i64), RadicalScalar> = BTreeMap::new();
        for (&(qa, ya), a) in &self.coeffs {
            for (&(qb, yb), b) in &rhs.coeffs {
                if qa + qb < t {
                    *acc.entry((qa + qb, ya + yb)).or_default() += a * b;
                }
            }
        }
        let mut out = Self::zero(t);
        for ((qi, yi), c) in acc {
            out.set(qi, yi, c);
        }
        out
    }

    /// Product with a q-series.
    pub fn mul_q(&self, rhs: &QSeries) -> Self {
        let t = (self.trunc + rhs.valuation()).min(rhs.trunc() + self.q_valuation());
        let mut acc: BTreeMap<(i64, i64), RadicalScalar> = BTreeMap::new();
        for (&(qa, ya), a) in &self.coeffs {
            for (qb, b) in rhs.terms() {
                if qa + qb >= t {
                    break;
                }
                *acc.entry((qa + qb, ya)).or_default() += a * b;
            }
        }
        let mut out = Self::zero(t);
        for ((qi, yi), c) in acc {
            out.set(qi, yi, c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return Self::monomial(0, 0, RadicalScalar::one(), self.trunc - self.q_valuation());
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Set `y = 1`, returning the resulting q-series.
    pub fn specialize_z0(&self) -> QSeries {
        let mut out = QSeries::zero(self.trunc);
        for (&(qi, _), c) in &self.coeffs {
            let cur = out.coeff(qi);
            out.set(qi, &cur + c);
        }
        out
    }

    /// The `y`-polynomial multiplying `q^(q_index/24)`, as `(y_half, coeff)` pairs.
    pub fn q_slice(&self, q_index: i64) -> Vec<(i64, RadicalScalar)> {
        self.coeffs.range((q_index, i64::MIN)..=(q_index, i64::MAX)).map(|(&(_, y), c)| (y, c.clone())).collect()
    }

    /// Canonical text dump with lines `q_exp y_exp coeff`, sorted by `q` then `y`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (&(qi, yi), c) in &self.coeffs {
            let _ = writeln!(s, "{} {} {}", fraction_string(qi, Q_GRID), fraction_string(yi, Y_GRID), c);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn int_series(terms: &[(i64, i64)], trunc: i64) -> QSeries {
        QSeries::from_terms(terms.iter().map(|&(i, c)| (i, RadicalScalar::from_int(c))), trunc)
    }

    #[test]
    fn truncation_rule_for_products() {
        let a = int_series(&[(-12, 1), (0, 3)], 48);
        let b = int_series(&[(24, 1)], 96);
        let p = a.mul(&b);
        assert_eq!(p.trunc(), (48 + 24));
    }

    #[test]
    fn inverse_geometric() {
        let a = int_series(&[(0, 1), (24, -1)], 24 * 10);
        let inv = a.invert().unwrap();
        for k in 0..10 {
            assert_eq!(inv.coeff(24 * k), RadicalScalar::one());
        }
        assert_eq!(inv.trunc(), 240);
        let shifted = a.shift(-12).invert().unwrap();
        assert_eq!(shifted.trunc(), 228 + 24);
        assert_eq!(shifted.valuation(), 12);
    }

    #[test]
    fn non_invertible() {
        assert_eq!(QSeries::zero(24).invert(), Err(Error::NonInvertible));
    }

    #[test]
    fn scale_argument_grid() {
        let a = int_series(&[(1, 1)], 48);
        assert!(matches!(a.scale_argument(&rat(1, 2)), Err(Error::GridViolation(_))));
        let b = int_series(&[(24, 5)], 48).scale_argument(&rat(1, 2)).unwrap();
        assert_eq!(b.coeff(12), RadicalScalar::from_int(5));
        assert_eq!(b.trunc(), 24);
    }

    #[test]
    fn half_shift_signs() {
        let a = int_series(&[(-12, 1), (0, 2), (12, 3)], 48);
        let b = a.half_period_shift().unwrap();
        assert_eq!(b.coeff(-12), RadicalScalar::from_int(-1));
        assert_eq!(b.coeff(12), RadicalScalar::from_int(-3));
        assert_eq!(b.coeff(0), RadicalScalar::from_int(2));
        assert!(int_series(&[(1, 1)], 48).half_period_shift().is_err());
    }

    #[test]
    fn binomial_negative_power() {
        let f = binomial_factor(24, -1, -2, 24 * 5);
        for j in 0..5 {
            assert_eq!(f.coeff(24 * j), RadicalScalar::from_int(j + 1));
        }
    }

    #[test]
    fn dump_format() {
        let j = JacobiSeries::monomial(12, -2, RadicalScalar::from_int(-2), 48);
        assert_eq!(j.dump(), "1/2 -1 -2\n");
    }
}
