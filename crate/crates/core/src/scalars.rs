//! Exact arithmetic in the field Q(sqrt2, sqrt3, sqrt5).
//!
//! An element is stored as a sparse combination `sum c_d * sqrt(d)` over the
//! squarefree basis `d in {1, 2, 3, 5, 6, 10, 15, 30}` with rational `c_d`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Squarefree radicands spanning the field over Q.
pub const RADICAL_BASIS: [u32; 8] = [1, 2, 3, 5, 6, 10, 15, 30];

/// Build a rational from an integer numerator and denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn basis_slot(d: u32) -> Option<usize> {
    RADICAL_BASIS.iter().position(|&b| b == d)
}

fn gcd_u32(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Element of Q(sqrt2, sqrt3, sqrt5).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RadicalScalar {
    // Indexed like RADICAL_BASIS.
    c: [Rational; 8],
}

impl RadicalScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut s = Self::zero();
        s.c[0] = r;
        s
    }

    /// `coeff * sqrt(d)`. Fails if `d` is not one of the basis radicands.
    pub fn radical(coeff: Rational, d: u32) -> Result<Self> {
        let slot = basis_slot(d).ok_or_else(|| Error::ScalarParse(format!("sqrt({d})")))?;
        let mut s = Self::zero();
        s.c[slot] = coeff;
        Ok(s)
    }

    /// `sqrt(d)` for a basis radicand `d`.
    pub fn sqrt(d: u32) -> Result<Self> {
        Self::radical(Rational::one(), d)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Coefficient of `sqrt(d)`.
    pub fn coeff(&self, d: u32) -> Rational {
        basis_slot(d).map(|i| self.c[i].clone()).unwrap_or_else(Rational::zero)
    }

    /// The value as a rational, if it has no irrational part.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.c[1..].iter().all(Zero::is_zero) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// Nonzero `(d, c_d)` pairs in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        RADICAL_BASIS.iter().zip(self.c.iter()).filter(|(_, c)| !c.is_zero()).map(|(&d, c)| (d, c))
    }

    /// Galois conjugate flipping the sign of `sqrt(p)` for each prime `p` in `flips`.
    pub fn conjugate(&self, flips: &[u32]) -> Self {
        let mut out = self.clone();
        for (slot, &d) in RADICAL_BASIS.iter().enumerate() {
            let odd = flips.iter().filter(|&&p| d % p == 0).count() % 2 == 1;
            if odd {
                out.c[slot] = -out.c[slot].clone();
            }
        }
        out
    }

    /// Multiplicative inverse via the product of the seven nontrivial conjugates.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let flips: [&[u32]; 7] = [&[2], &[3], &[5], &[2, 3], &[2, 5], &[3, 5], &[2, 3, 5]];
        let mut others = Self::one();
        for f in flips {
            others = &others * &self.conjugate(f);
        }
        let norm =
            (self * &others).as_rational().ok_or_else(|| Error::Invariant("field norm is not rational".into()))?;
        Ok(others.scale(&(Rational::one() / norm)))
    }

    /// Multiply by a rational.
    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = self.clone();
        for c in out.c.iter_mut() {
            *c = &*c * r;
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Floating-point approximation.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.terms().map(|(d, c)| c.to_f64().unwrap_or(f64::NAN) * f64::from(d).sqrt()).sum()
    }
}

impl fmt::Debug for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.terms() {
            let body = if d == 1 { format!("{}", c.abs()) } else { format!("{}*sqrt({d})", c.abs()) };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, "+{body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

fn parse_term(raw: &str, whole: &str) -> Result<RadicalScalar> {
    let bad = || Error::ScalarParse(whole.to_string());
    let t = raw.trim();
    let (neg, t) = match t.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, t.strip_prefix('+').unwrap_or(t).trim()),
    };
    let (coeff_str, radicand) = if let Some(pos) = t.find("sqrt(") {
        let inner = t[pos + 5..].strip_suffix(')').ok_or_else(bad)?;
        let d: u32 = inner.trim().parse().map_err(|_| bad())?;
        let head = t[..pos].trim();
        let head = head.strip_suffix('*').map(str::trim).unwrap_or(head);
        (if head.is_empty() { "1" } else { head }, d)
    } else {
        (t, 1)
    };
    if coeff_str.is_empty() {
        return Err(bad());
    }
    let coeff: Rational = match coeff_str.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(coeff_str.parse().map_err(|_| bad())?),
    };
    let coeff = if neg { -coeff } else { coeff };
    // Accept non-basis squarefree radicands only through extraction of squares.
    let (mut outside, mut inside) = (1u32, radicand);
    for p in [2u32, 3, 5, 7, 11, 13] {
        while inside % (p * p) == 0 && inside > 0 {
            inside /= p * p;
            outside *= p;
        }
    }
    if inside == 0 {
        return Ok(RadicalScalar::zero());
    }
    RadicalScalar::radical(coeff * Rational::from_integer(BigInt::from(outside)), inside).map_err(|_| bad())
}

impl FromStr for RadicalScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::ScalarParse(s.to_string()));
        }
        // Split at top-level '+' / '-' that start a new term.
        let mut terms = Vec::new();
        let mut start = 0;
        let mut depth = 0i32;
        let bytes = s.as_bytes();
        for (i, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if depth == 0 && i > 0 => {
                    let prev = s[..i].trim_end();
                    let joins =
                        prev.ends_with('+') || prev.ends_with('-') || prev.ends_with('*') || prev.ends_with('/');
                    if !joins {
                        terms.push(&s[start..i]);
                        start = i;
                    }
                }
                _ => {}
            }
        }
        terms.push(&s[start..]);
        let mut acc = RadicalScalar::zero();
        for t in terms {
            let t = t.trim();
            // "+-3" is the joiner form for a negative term.
            let t = t.strip_prefix('+').map(str::trim_start).unwrap_or(t);
            acc += parse_term(t, s)?;
        }
        Ok(acc)
    }
}

impl From<i64> for RadicalScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for RadicalScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<BigInt> for RadicalScalar {
    fn from(n: BigInt) -> Self {
        Self::from_bigint(n)
    }
}

impl Add for &RadicalScalar {
    type Output = RadicalScalar;
    fn add(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &RadicalScalar {
    type Output = RadicalScalar;
    fn sub(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut out = RadicalScalar::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                let g = gcd_u32(a, b);
                let d = (a / g) * (b / g);
                let slot = basis_slot(d).expect("product of basis radicands stays in basis");
                out.c[slot] += ca * cb * Rational::from_integer(BigInt::from(g));
            }
        }
        out
    }
}

impl Div for &RadicalScalar {
    type Output = RadicalScalar;
    /// Panics on division by zero; use [`RadicalScalar::inverse`] to handle it.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RadicalScalar) -> RadicalScalar {
        self * &rhs.inverse().expect("division by zero")
    }
}

impl Neg for &RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        let mut out = self.clone();
        for c in out.c.iter_mut() {
            *c = -c.clone();
        }
        out
    }
}

impl Neg for RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        -&self
    }
}

impl AddAssign<&RadicalScalar> for RadicalScalar {
    fn add_assign(&mut self, rhs: &RadicalScalar) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            *a += b;
        }
    }
}

impl AddAssign for RadicalScalar {
    fn add_assign(&mut self, rhs: RadicalScalar) {
        *self += &rhs;
    }
}

impl SubAssign<&RadicalScalar> for RadicalScalar {
    fn sub_assign(&mut self, rhs: &RadicalScalar) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            *a -= b;
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for RadicalScalar {
            type Output = RadicalScalar;
            fn $m(self, rhs: RadicalScalar) -> RadicalScalar {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> RadicalScalar {
        x.parse().unwrap()
    }

    #[test]
    fn radical_products() {
        assert_eq!(&s("sqrt(2)") * &s("sqrt(2)"), s("2"));
        assert_eq!(&s("sqrt(6)") * &s("sqrt(10)"), s("2*sqrt(15)"));
        assert_eq!(&s("sqrt(30)") * &s("sqrt(30)"), s("30"));
        assert_eq!(s("sqrt(3)").pow(4), s("9"));
    }

    #[test]
    fn display_round_trip() {
        for x in ["0", "-4", "3/2", "1/2*sqrt(5)", "-1/2*sqrt(5)", "1+sqrt(2)", "2-3/7*sqrt(30)", "-1-sqrt(6)+sqrt(15)"]
        {
            let v = s(x);
            assert_eq!(v.to_string().parse::<RadicalScalar>().unwrap(), v, "{x}");
        }
        assert_eq!(s("1/2*sqrt(5)").to_string(), "1/2*sqrt(5)");
        assert_eq!(s("1+-2*sqrt(3)").to_string(), "1-2*sqrt(3)");
        assert_eq!(s("4/2").to_string(), "2");
        assert_eq!(s("sqrt(8)"), s("2*sqrt(2)"));
    }

    #[test]
    fn parse_rejects_junk() {
        assert!("".parse::<RadicalScalar>().is_err());
        assert!("sqrt(7)".parse::<RadicalScalar>().is_err());
        assert!("1/0".parse::<RadicalScalar>().is_err());
        assert!("abc".parse::<RadicalScalar>().is_err());
    }

    #[test]
    fn inverse_of_golden_ratio() {
        let phi = s("1/2+1/2*sqrt(5)");
        let inv = phi.inverse().unwrap();
        assert_eq!(inv, s("-1/2+1/2*sqrt(5)"));
        assert_eq!(RadicalScalar::zero().inverse(), Err(Error::DivisionByZero));
    }
}
