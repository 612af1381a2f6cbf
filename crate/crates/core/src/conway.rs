//! Frame shapes, class data for the Conway group tables, and closed-form
//! oracles for the constants `chi_g`, `C_{-g}` and `D_g^(l)`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::scalars::{RadicalScalar, Rational};

/// Lambencies that appear in the tables.
pub const LAMBENCIES: [u32; 5] = [2, 3, 4, 5, 7];

/// Check that `ell` is one of [`LAMBENCIES`].
pub fn check_lambency(ell: u32) -> Result<()> {
    if LAMBENCIES.contains(&ell) {
        Ok(())
    } else {
        Err(Error::UnsupportedLambency(ell))
    }
}

/// Number of distinguished fixed eigenvalue pairs at lambency `ell`.
pub fn fixed_pairs(ell: u32) -> u32 {
    2 * (ell - 1)
}

/// Formal product `prod_m m^(k_m)` encoding `det(1 - x g) = prod_m (1 - x^m)^(k_m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrameShape {
    factors: BTreeMap<u32, i32>,
}

impl FrameShape {
    /// Build from `(m, k_m)` pairs, checking the invariants.
    pub fn new<I: IntoIterator<Item = (u32, i32)>>(pairs: I) -> Result<Self> {
        let fs = Self::new_unchecked(pairs);
        fs.validate()?;
        Ok(fs)
    }

    fn new_unchecked<I: IntoIterator<Item = (u32, i32)>>(pairs: I) -> Self {
        let mut factors = BTreeMap::new();
        for (m, k) in pairs {
            *factors.entry(m).or_insert(0) += k;
        }
        factors.retain(|_, k| *k != 0);
        Self { factors }
    }

    fn validate(&self) -> Result<()> {
        if self.factors.keys().any(|&m| m == 0) {
            return Err(Error::InconsistentFrameShape(format!("{self}: zero part")));
        }
        let degree: i64 = self.factors.iter().map(|(&m, &k)| i64::from(m) * i64::from(k)).sum();
        if degree != 24 {
            return Err(Error::InconsistentFrameShape(format!("{self}: degree {degree} != 24")));
        }
        if self.rank().abs() > 24 {
            return Err(Error::InconsistentFrameShape(format!("{self}: rank out of range")));
        }
        frame_shape_to_cyclo(self)?;
        Ok(())
    }

    /// `(m, k_m)` pairs in increasing `m`.
    pub fn factors(&self) -> impl Iterator<Item = (u32, i32)> + '_ {
        self.factors.iter().map(|(&m, &k)| (m, k))
    }

    pub fn exponent(&self, m: u32) -> i32 {
        self.factors.get(&m).copied().unwrap_or(0)
    }

    /// `sum_m k_m`.
    pub fn rank(&self) -> i32 {
        self.factors.values().sum()
    }
}

impl fmt::Display for FrameShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |pos: bool| {
            self.factors
                .iter()
                .filter(|(_, &k)| (k > 0) == pos)
                .map(|(m, k)| format!("{m}^{}", k.abs()))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let (num, den) = (part(true), part(false));
        let num = if num.is_empty() { "1".to_string() } else { num };
        if den.is_empty() {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

impl FromStr for FrameShape {
    type Err = Error;

    /// Accepts `"1^8 2^8"`, `"2^16/1^8"`, `"1^1.2^1.7^1.14^1"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InconsistentFrameShape(format!("cannot parse `{s}`"));
        let (num, den) = s.split_once('/').unwrap_or((s, ""));
        let mut pairs = Vec::new();
        for (chunk, sign) in [(num, 1), (den, -1)] {
            for tok in chunk.split(|c: char| c.is_whitespace() || c == '.').filter(|t| !t.is_empty()) {
                let (m, k) = tok.split_once('^').unwrap_or((tok, "1"));
                let m: u32 = m.parse().map_err(|_| bad())?;
                let k: i32 = k.parse().map_err(|_| bad())?;
                if sign == 1 && m == 1 && k == 1 && chunk.trim() == "1" {
                    continue;
                }
                pairs.push((m, sign * k));
            }
        }
        Self::new(pairs)
    }
}

/// Eigenvalue multiset: `a_d` copies of each primitive `d`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicMultiplicities {
    pub mult: BTreeMap<u32, u32>,
}

impl CyclotomicMultiplicities {
    pub fn get(&self, d: u32) -> u32 {
        self.mult.get(&d).copied().unwrap_or(0)
    }
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u32
}

/// Moebius function.
pub fn moebius(mut n: u32) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `a_d = sum_{d | m} k_m`; fails if some multiplicity is negative.
pub fn frame_shape_to_cyclo(fs: &FrameShape) -> Result<CyclotomicMultiplicities> {
    let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
    for (m, k) in fs.factors() {
        for d in divisors(m) {
            *acc.entry(d).or_insert(0) += i64::from(k);
        }
    }
    let mut mult = BTreeMap::new();
    for (d, a) in acc {
        if a < 0 {
            return Err(Error::NotEigenvalueMultiset(format!("{fs}: a_{d} = {a}")));
        }
        if a > 0 {
            mult.insert(d, a as u32);
        }
    }
    let total: u32 = mult.iter().map(|(&d, &a)| a * euler_phi(d)).sum();
    if total != 24 {
        return Err(Error::NotEigenvalueMultiset(format!("{fs}: {total} eigenvalues")));
    }
    Ok(CyclotomicMultiplicities { mult })
}

/// Frame shape of `-g`: each odd part `m^k` becomes `(2m)^k / m^k`.
pub fn negate_frame_shape(fs: &FrameShape) -> Result<FrameShape> {
    let mut pairs = Vec::new();
    for (m, k) in fs.factors() {
        if m % 2 == 1 {
            pairs.push((m, -k));
            pairs.push((2 * m, k));
        } else {
            pairs.push((m, k));
        }
    }
    FrameShape::new(pairs).map_err(|e| Error::InconsistentFrameShape(format!("negation of {fs}: {e}")))
}

/// Trace of `g`, computed as the Moebius sum `sum_d a_d mu(d)` and checked against `k_1`.
pub fn chi_of(fs: &FrameShape) -> Result<i64> {
    let cyc = frame_shape_to_cyclo(fs)?;
    let trace: i64 = cyc.mult.iter().map(|(&d, &a)| i64::from(a) * i64::from(moebius(d))).sum();
    let k1 = i64::from(fs.exponent(1));
    if trace != k1 {
        return Err(Error::Invariant(format!("{fs}: trace {trace} but k_1 = {k1}")));
    }
    Ok(trace)
}

// Integer polynomials, ascending coefficients.

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a polynomial with unit constant term; `None` if not exact.
fn poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if b.len() > a.len() {
        return a.iter().all(Zero::is_zero).then(|| vec![BigInt::zero()]);
    }
    assert!(b[0].abs().is_one(), "divisor must have unit constant term");
    let mut rem = a.to_vec();
    let n = a.len() - b.len() + 1;
    let mut q = vec![BigInt::zero(); n];
    for i in 0..n {
        let c = &rem[i] * &b[0];
        for (j, y) in b.iter().enumerate() {
            rem[i + j] -= &c * y;
        }
        q[i] = c;
    }
    rem.iter().all(Zero::is_zero).then_some(q)
}

fn one_minus_x_pow(m: u32) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); m as usize + 1];
    p[0] = BigInt::one();
    p[m as usize] = -BigInt::one();
    p
}

fn poly_eval(p: &[BigInt], x: i64) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// `P_g(x) = prod_m (1 - x^m)^(k_m)` as an integer polynomial (ascending coefficients).
pub fn characteristic_polynomial(fs: &FrameShape) -> Result<Vec<BigInt>> {
    let mut num = vec![BigInt::one()];
    let mut den = vec![BigInt::one()];
    for (m, k) in fs.factors() {
        let f = one_minus_x_pow(m);
        for _ in 0..k.unsigned_abs() {
            if k > 0 {
                num = poly_mul(&num, &f);
            } else {
                den = poly_mul(&den, &f);
            }
        }
    }
    poly_div_exact(&num, &den).ok_or_else(|| Error::NotEigenvalueMultiset(format!("{fs}: not a polynomial")))
}

/// Multiplicity of the root `x = 1` of `P_g`, computed by repeated division.
pub fn fixed_dimension(fs: &FrameShape) -> Result<u32> {
    let mut p = characteristic_polynomial(fs)?;
    let lin = one_minus_x_pow(1);
    let mut count = 0;
    while let Some(q) = poly_div_exact(&p, &lin) {
        if p.iter().all(Zero::is_zero) {
            break;
        }
        p = q;
        count += 1;
    }
    Ok(count)
}

/// `C_{-g}^2 = det(1 + g) = P_g(-1)`; zero whenever `-1` is an eigenvalue of `g`.
pub fn c_squared_oracle(fs: &FrameShape) -> Result<Rational> {
    let p = characteristic_polynomial(fs)?;
    Ok(Rational::from_integer(poly_eval(&p, -1)))
}

/// `(D_g^(l))^2 = (-1)^(12-d) [P_g(x) / (1-x)^(2d)]_(x=1)` with `d = 2(l-1)`.
pub fn d_squared_oracle(fs: &FrameShape, ell: u32) -> Result<Rational> {
    check_lambency(ell)?;
    let d = fixed_pairs(ell);
    let a1 = frame_shape_to_cyclo(fs)?.get(1);
    if a1 < 2 * d {
        return Err(Error::LambencyTooLarge { class: fs.to_string(), ell });
    }
    if a1 > 2 * d {
        return Ok(Rational::zero());
    }
    let mut p = characteristic_polynomial(fs)?;
    let lin = one_minus_x_pow(1);
    for _ in 0..2 * d {
        p = poly_div_exact(&p, &lin).ok_or_else(|| Error::Invariant(format!("{fs}: (1-x) multiplicity")))?;
    }
    let v = poly_eval(&p, 1);
    let v = if (12 - d) % 2 == 1 { -v } else { v };
    Ok(Rational::from_integer(v))
}

/// Sign choice for `D_g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
pub enum DSign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl DSign {
    pub fn as_int(self) -> i64 {
        match self {
            DSign::Plus => 1,
            DSign::Minus => -1,
        }
    }
}

impl fmt::Display for DSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == DSign::Plus { "+" } else { "-" })
    }
}

impl FromStr for DSign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "+1" | "plus" => Ok(DSign::Plus),
            "-" | "-1" | "minus" => Ok(DSign::Minus),
            other => Err(Error::Data(format!("bad sign `{other}`"))),
        }
    }
}

/// One row of the class tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConwayClassRecord {
    pub co0: String,
    pub co1: String,
    pub fs_g: FrameShape,
    pub fs_neg_g: FrameShape,
    pub c_neg_g: RadicalScalar,
    /// `|D_g^(l)|` for every lambency whose table lists the class.
    pub d_magnitude: BTreeMap<u32, RadicalScalar>,
    pub gamma_g: String,
    pub gamma_neg_g: String,
    pub level: Option<u32>,
}

impl ConwayClassRecord {
    pub fn chi(&self) -> i64 {
        chi_of(&self.fs_g).expect("validated at load time")
    }

    pub fn has_lambency(&self, ell: u32) -> bool {
        self.d_magnitude.contains_key(&ell)
    }

    /// Sign normalized to `+` when the magnitude vanishes.
    pub fn normalize_sign(&self, ell: u32, sign: DSign) -> DSign {
        match self.d_magnitude.get(&ell) {
            Some(d) if d.is_zero() => DSign::Plus,
            _ => sign,
        }
    }

    /// Signs worth distinguishing at lambency `ell`.
    pub fn signs(&self, ell: u32) -> Vec<DSign> {
        match self.d_magnitude.get(&ell) {
            Some(d) if !d.is_zero() => vec![DSign::Plus, DSign::Minus],
            Some(_) => vec![DSign::Plus],
            None => vec![],
        }
    }

    /// `D_g^(l) = sign * |D_g^(l)|`.
    pub fn d_value(&self, ell: u32, sign: DSign) -> Result<RadicalScalar> {
        check_lambency(ell)?;
        let mag = self.d_magnitude.get(&ell).ok_or_else(|| Error::LambencyTooLarge { class: self.co0.clone(), ell })?;
        Ok(if sign == DSign::Minus { -mag } else { mag.clone() })
    }

    /// Label such as `4D(+64)` or `2B`.
    pub fn label(&self, ell: u32, sign: DSign) -> String {
        match self.d_magnitude.get(&ell) {
            Some(d) if !d.is_zero() => format!("{}({}{})", self.co0, sign, d),
            _ => self.co0.clone(),
        }
    }

    /// Check every derived column against its oracle.
    pub fn validate(&self) -> Result<()> {
        let row = |field: &str, msg: String| Error::Data(format!("row {}: field {field}: {msg}", self.co0));
        chi_of(&self.fs_g).map_err(|e| row("pi_g", e.to_string()))?;
        let neg = negate_frame_shape(&self.fs_g).map_err(|e| row("pi_g", e.to_string()))?;
        if neg != self.fs_neg_g {
            return Err(row("pi_neg_g", format!("expected {neg}, found {}", self.fs_neg_g)));
        }
        if negate_frame_shape(&neg).map_err(|e| row("pi_neg_g", e.to_string()))? != self.fs_g {
            return Err(row("pi_neg_g", "negation is not an involution".into()));
        }
        let a1 = frame_shape_to_cyclo(&self.fs_g).map_err(|e| row("pi_g", e.to_string()))?.get(1);
        if i64::from(a1) != i64::from(self.fs_g.rank()) || fixed_dimension(&self.fs_g).ok() != Some(a1) {
            return Err(row("pi_g", "fixed-space dimension mismatch".into()));
        }
        let c2 = c_squared_oracle(&self.fs_g).map_err(|e| row("c_neg_g", e.to_string()))?;
        let have = (&self.c_neg_g * &self.c_neg_g).as_rational();
        if have.as_ref() != Some(&c2) {
            return Err(row("c_neg_g", format!("square {} but det(1+g) = {c2}", &self.c_neg_g * &self.c_neg_g)));
        }
        for (&ell, d) in &self.d_magnitude {
            let d2 = d_squared_oracle(&self.fs_g, ell).map_err(|e| row("d_mag", e.to_string()))?;
            let have = (d * d).as_rational();
            if have.as_ref() != Some(&d2) {
                return Err(row("d_mag", format!("l={ell}: square {} but oracle gives {d2}", d * d)));
            }
            if d.to_f64() < 0.0 {
                return Err(row("d_mag", format!("l={ell}: magnitude must be nonnegative")));
            }
        }
        Ok(())
    }
}

/// One summand `coeff * phi_{class, sign}` of a relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationTerm {
    pub coeff: Rational,
    pub class: String,
    pub sign: DSign,
}

/// What the right-hand side of a coincidence row is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationKind {
    /// The row defines an external function in terms of this class.
    Definition,
    /// A linear combination of genera available here.
    Internal(Vec<RelationTerm>),
    /// Needs data that is not bundled.
    External(String),
}

/// One row of a coincidence table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoincidenceRelation {
    pub lambency: u32,
    pub lhs_class: String,
    pub lhs_sign: DSign,
    pub kind: RelationKind,
    /// The paper's right-hand side, verbatim in ASCII.
    pub source: String,
    pub level: Option<u32>,
}

impl CoincidenceRelation {
    /// Human-readable name, e.g. `l=2 4D(-) = -1/2*1A + 3/2*2B`.
    pub fn name(&self) -> String {
        let rhs = match &self.kind {
            RelationKind::Internal(terms) => terms
                .iter()
                .map(|t| {
                    let s = if t.sign == DSign::Minus { "(-)" } else { "" };
                    format!("{}*{}{s}", t.coeff, t.class)
                })
                .collect::<Vec<_>>()
                .join(" + "),
            _ => self.source.clone(),
        };
        format!("l={} {}({}) = {}", self.lambency, self.lhs_class, self.lhs_sign, rhs)
    }
}

#[derive(Deserialize)]
struct RawClass {
    co0: String,
    co1: String,
    pi_g: Vec<(u32, i32)>,
    pi_neg_g: Vec<(u32, i32)>,
    c_neg_g: String,
    d_mag: BTreeMap<u32, String>,
    gamma_g: String,
    gamma_neg_g: String,
    level: Option<u32>,
}

#[derive(Deserialize)]
struct RawClasses {
    classes: Vec<RawClass>,
}

#[derive(Deserialize)]
struct RawRef {
    class: String,
    sign: DSign,
    coeff: Option<String>,
}

#[derive(Deserialize)]
struct RawRelation {
    lambency: u32,
    lhs: RawRef,
    source: String,
    #[serde(default)]
    definition: bool,
    rhs: Option<Vec<RawRef>>,
    external: Option<String>,
    level: Option<u32>,
}

#[derive(Deserialize)]
struct RawRelations {
    relations: Vec<RawRelation>,
}

/// Bundled class table.
pub const BUNDLED_CLASSES: &str = include_str!("../data/classes.json");
/// Bundled coincidence table.
pub const BUNDLED_COINCIDENCES: &str = include_str!("../data/coincidences.json");

/// Loaded and validated class tables plus coincidence relations.
#[derive(Clone, Debug)]
pub struct ClassData {
    pub records: Vec<ConwayClassRecord>,
    pub relations: Vec<CoincidenceRelation>,
}

impl ClassData {
    /// Parse and validate the two JSON documents.
    pub fn from_json(classes: &str, coincidences: &str) -> Result<Self> {
        let raw: RawClasses = serde_json::from_str(classes).map_err(|e| Error::Data(format!("classes: {e}")))?;
        let mut records = Vec::with_capacity(raw.classes.len());
        for r in raw.classes {
            let fs = |v: Vec<(u32, i32)>, field: &str| {
                FrameShape::new(v).map_err(|e| Error::Data(format!("row {}: field {field}: {e}", r.co0)))
            };
            let fs_g = fs(r.pi_g.clone(), "pi_g")?;
            let fs_neg_g = fs(r.pi_neg_g.clone(), "pi_neg_g")?;
            let scalar = |s: &str, field: &str| {
                s.parse::<RadicalScalar>().map_err(|e| Error::Data(format!("row {}: field {field}: {e}", r.co0)))
            };
            let c_neg_g = scalar(&r.c_neg_g, "c_neg_g")?;
            let mut d_magnitude = BTreeMap::new();
            for (ell, d) in &r.d_mag {
                check_lambency(*ell).map_err(|e| Error::Data(format!("row {}: field d_mag: {e}", r.co0)))?;
                d_magnitude.insert(*ell, scalar(d, "d_mag")?);
            }
            let rec = ConwayClassRecord {
                co0: r.co0,
                co1: r.co1,
                fs_g,
                fs_neg_g,
                c_neg_g,
                d_magnitude,
                gamma_g: r.gamma_g,
                gamma_neg_g: r.gamma_neg_g,
                level: r.level,
            };
            rec.validate()?;
            if records.iter().any(|x: &ConwayClassRecord| x.co0 == rec.co0) {
                return Err(Error::Data(format!("row {}: duplicate class", rec.co0)));
            }
            records.push(rec);
        }
        let raw: RawRelations =
            serde_json::from_str(coincidences).map_err(|e| Error::Data(format!("coincidences: {e}")))?;
        let mut data = ClassData { records, relations: Vec::new() };
        for r in raw.relations {
            let kind = match (r.definition, r.rhs, r.external) {
                (true, None, None) => RelationKind::Definition,
                (false, Some(terms), None) => {
                    let mut out = Vec::new();
                    for t in terms {
                        let coeff = t.coeff.as_deref().unwrap_or("1");
                        let coeff =
                            coeff.parse::<RadicalScalar>().ok().and_then(|c| c.as_rational()).ok_or_else(|| {
                                Error::Data(format!("relation {}: bad coefficient `{coeff}`", r.lhs.class))
                            })?;
                        out.push(RelationTerm { coeff, class: t.class, sign: t.sign });
                    }
                    RelationKind::Internal(out)
                }
                (false, None, Some(x)) => RelationKind::External(x),
                _ => {
                    return Err(Error::Data(format!(
                        "relation {}: exactly one of definition/rhs/external",
                        r.lhs.class
                    )))
                }
            };
            let rel = CoincidenceRelation {
                lambency: r.lambency,
                lhs_class: r.lhs.class,
                lhs_sign: r.lhs.sign,
                kind,
                source: r.source,
                level: r.level,
            };
            data.check_relation(&rel)?;
            data.relations.push(rel);
        }
        Ok(data)
    }

    fn check_relation(&self, rel: &CoincidenceRelation) -> Result<()> {
        let present = |c: &str| {
            self.get(c)
                .filter(|r| r.has_lambency(rel.lambency))
                .ok_or_else(|| Error::Data(format!("relation {}: class {c} absent at l={}", rel.name(), rel.lambency)))
        };
        present(&rel.lhs_class)?;
        if let RelationKind::Internal(terms) = &rel.kind {
            for t in terms {
                present(&t.class)?;
            }
        }
        Ok(())
    }

    /// The tables shipped with the crate.
    pub fn bundled() -> Result<Self> {
        Self::from_json(BUNDLED_CLASSES, BUNDLED_COINCIDENCES)
    }

    pub fn get(&self, co0: &str) -> Option<&ConwayClassRecord> {
        self.records.iter().find(|r| r.co0.eq_ignore_ascii_case(co0))
    }

    /// Rows of the table for lambency `ell`, in table order.
    pub fn rows_for(&self, ell: u32) -> impl Iterator<Item = &ConwayClassRecord> {
        self.records.iter().filter(move |r| r.has_lambency(ell))
    }
}

/// Load `classes.json` and `coincidences.json` from a directory.
pub fn load_class_data(dir: &Path) -> Result<ClassData> {
    let read = |name: &str| {
        std::fs::read_to_string(dir.join(name)).map_err(|e| Error::Data(format!("{}: {e}", dir.join(name).display())))
    };
    ClassData::from_json(&read("classes.json")?, &read("coincidences.json")?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(s: &str) -> FrameShape {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(fs("2^16/1^8").to_string(), "2^16/1^8");
        assert_eq!(fs("1^1.2^1.7^1.14^1"), fs("1 2 7 14"));
        assert!("1^23".parse::<FrameShape>().is_err());
        assert!("2^13/1^3".parse::<FrameShape>().is_err());
    }

    #[test]
    fn cyclo_examples() {
        let c = frame_shape_to_cyclo(&fs("2^16/1^8")).unwrap();
        assert_eq!((c.get(1), c.get(2)), (8, 16));
        let c = frame_shape_to_cyclo(&fs("3^9/1^3")).unwrap();
        assert_eq!((c.get(1), c.get(3)), (6, 9));
        assert!(matches!(
            frame_shape_to_cyclo(&FrameShape::new_unchecked([(1, 48), (2, -12)])),
            Err(Error::NotEigenvalueMultiset(_))
        ));
    }

    #[test]
    fn moebius_and_phi() {
        let mu: Vec<i32> = (1..=10).map(moebius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_of(&fs("1^24")).unwrap(), 24);
        assert_eq!(chi_of(&fs("2^12")).unwrap(), 0);
        assert_eq!(chi_of(&fs("1^8 2^8")).unwrap(), 8);
        assert_eq!(chi_of(&fs("3^9/1^3")).unwrap(), -3);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(c_squared_oracle(&fs("1^24")).unwrap(), Rational::from_integer(BigInt::from(1u64 << 24)));
        assert_eq!(c_squared_oracle(&fs("3^9/1^3")).unwrap(), Rational::from_integer(64.into()));
        assert_eq!(c_squared_oracle(&fs("1^8 2^8")).unwrap(), Rational::zero());
        assert_eq!(c_squared_oracle(&fs("1^8 4^8/2^8")).unwrap(), Rational::from_integer(65536.into()));
        assert_eq!(d_squared_oracle(&fs("4^8/2^4"), 2).unwrap(), Rational::from_integer(4096.into()));
        assert_eq!(d_squared_oracle(&fs("5^5/1^1"), 2).unwrap(), Rational::from_integer(3125.into()));
        assert_eq!(d_squared_oracle(&fs("2^16/1^8"), 3).unwrap(), Rational::from_integer(65536.into()));
        assert_eq!(d_squared_oracle(&fs("1^24"), 7).unwrap(), Rational::one());
        assert!(matches!(d_squared_oracle(&fs("2^12"), 7), Err(Error::LambencyTooLarge { .. })));
    }

    #[test]
    fn negation() {
        assert_eq!(negate_frame_shape(&fs("1^24")).unwrap(), fs("2^24/1^24"));
        assert_eq!(negate_frame_shape(&fs("3^9/1^3")).unwrap(), fs("1^3 6^9/2^3 3^9"));
        assert_eq!(negate_frame_shape(&fs("2^12")).unwrap(), fs("2^12"));
    }
}
