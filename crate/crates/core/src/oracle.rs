//! Brute-force graded traces on the Clifford module construction.
//!
//! Basis monomials of `A(a)` and `A(a)_tw` are enumerated explicitly, each is
//! weighted by its eigenvalue under a lift `g^` of a class, and the sums are
//! compared upstream with the closed product formulas.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::conway::{fixed_pairs, frame_shape_to_cyclo, ConwayClassRecord, DSign, FrameShape};
use crate::error::{Error, Result};
use crate::scalars::{RadicalScalar, Rational, RADICAL_BASIS};
use crate::series::{JacobiSeries, QSeries, Q_GRID, Y_GRID};

/// Largest accepted degree bound for enumeration.
pub const MAX_DEGREE_BOUND: i64 = 3;

fn cyclotomic_polynomial(n: usize, memo: &mut BTreeMap<usize, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let den = cyclotomic_polynomial(d, memo);
            num = exact_div(&num, &den);
        }
    }
    memo.insert(n, num.clone());
    num
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quo = vec![0i64; num.len() - dd];
    for i in (0..quo.len()).rev() {
        let c = rem[i + dd];
        quo[i] = c;
        for (j, &b) in den.iter().enumerate() {
            rem[i + j] -= c * b;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quo
}

/// Element of `Q(zeta_n)`, stored as its remainder modulo `Phi_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloNumber {
    order: usize,
    modulus: std::sync::Arc<Vec<i64>>,
    coeffs: Vec<Rational>,
}

impl CycloNumber {
    fn field(order: usize) -> std::sync::Arc<Vec<i64>> {
        std::sync::Arc::new(cyclotomic_polynomial(order, &mut BTreeMap::new()))
    }

    fn reduce(order: usize, modulus: std::sync::Arc<Vec<i64>>, mut c: Vec<Rational>) -> Self {
        let deg = modulus.len() - 1;
        for i in (deg..c.len()).rev() {
            let lead = std::mem::replace(&mut c[i], Rational::zero());
            if lead.is_zero() {
                continue;
            }
            for (j, &m) in modulus.iter().enumerate().take(deg) {
                c[i - deg + j] -= &lead * Rational::from_integer(m.into());
            }
        }
        c.resize(deg, Rational::zero());
        Self { order, modulus, coeffs: c }
    }

    /// `sum_k counts[k] zeta_n^k`.
    pub fn from_counts(order: usize, counts: &[i64]) -> Self {
        let c = counts.iter().map(|&x| Rational::from_integer(x.into())).collect();
        Self::reduce(order, Self::field(order), c)
    }

    pub fn zeta_power(order: usize, k: i64) -> Self {
        let mut counts = vec![0; order];
        counts[k.rem_euclid(order as i64) as usize] = 1;
        Self::from_counts(order, &counts)
    }

    pub fn from_int(order: usize, n: i64) -> Self {
        let mut counts = vec![0; order];
        counts[0] = n;
        Self::from_counts(order, &counts)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "cyclotomic orders differ");
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        Self { order: self.order, modulus: self.modulus.clone(), coeffs }
    }

    pub fn neg(&self) -> Self {
        Self { order: self.order, modulus: self.modulus.clone(), coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "cyclotomic orders differ");
        let mut c = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                c[i + j] += a * b;
            }
        }
        Self::reduce(self.order, self.modulus.clone(), c)
    }

    /// Image of `sqrt(d)` for squarefree `d | 30`; needs `120 | order`.
    fn sqrt_image(order: usize, d: u32) -> Self {
        let z = |den: usize, k: i64| Self::zeta_power(order, k * (order / den) as i64);
        let s2 = z(8, 1).add(&z(8, -1));
        let s3 = z(12, 1).add(&z(12, -1));
        let s5 = Self::from_int(order, 1).add(&z(5, 1).add(&z(5, 4)).add(&z(5, 1).add(&z(5, 4))));
        let mut out = Self::from_int(order, 1);
        for (p, s) in [(2, &s2), (3, &s3), (5, &s5)] {
            if d.is_multiple_of(p) {
                out = out.mul(s);
            }
        }
        out
    }

    /// Express as an element of `Q(sqrt2, sqrt3, sqrt5)`, or fail.
    pub fn to_radical(&self) -> Result<RadicalScalar> {
        if !self.order.is_multiple_of(120) {
            return Err(Error::NotRadical(format!("order {} does not contain the radicals", self.order)));
        }
        let cols: Vec<Self> = RADICAL_BASIS.iter().map(|&d| Self::sqrt_image(self.order, d)).collect();
        let rows = self.coeffs.len();
        let ncols = cols.len();
        // Augmented matrix, one row per power of zeta.
        let mut m: Vec<Vec<Rational>> = (0..rows)
            .map(|i| cols.iter().map(|c| c.coeffs[i].clone()).chain(std::iter::once(self.coeffs[i].clone())).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..ncols {
            let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else { continue };
            m.swap(row, p);
            let inv = m[row][col].recip();
            for x in m[row].iter_mut() {
                *x *= &inv;
            }
            for r in 0..rows {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    let pivot_row = m[row].clone();
                    for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                        *x -= &f * y;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        if m[row..].iter().any(|r| !r[ncols].is_zero()) {
            return Err(Error::NotRadical(format!("{self:?}")));
        }
        let mut out = RadicalScalar::zero();
        for (i, &col) in pivots.iter().enumerate() {
            out += RadicalScalar::radical(m[i][ncols].clone(), RADICAL_BASIS[col])?;
        }
        Ok(out)
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> =
            self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| format!("{c}*z^{k}")).collect();
        write!(f, "Cyclo{}[{}]", self.order, if terms.is_empty() { "0".into() } else { terms.join(" + ") })
    }
}

/// One eigenvector pair `a_i^+`, `a_i^-` with `g a_i^(+-) = lambda_i^(+-1) a_i^(+-)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EigenPair {
    /// `lambda_i = zeta^lambda_exp`.
    pub lambda_exp: i64,
    /// `nu_i = zeta^nu_exp`, a square root of `lambda_i`.
    pub nu_exp: i64,
    pub fixed: bool,
}

/// A lift `g^ = eps * prod exp(alpha_i X_i)` of a class, with an explicit polarization.
#[derive(Clone, Debug)]
pub struct SpinLift {
    /// Order of the ambient cyclotomic field.
    pub order: usize,
    /// Twelve pairs; the fixed pairs come first.
    pub pairs: Vec<EigenPair>,
    /// Number of leading fixed pairs carrying the U(1) charge.
    pub charged: usize,
    pub epsilon: i64,
}

impl SpinLift {
    /// Lift with `nu_i = exp(pi i k/N)` for `lambda_i = exp(2 pi i k/N)`, `0 <= k < N/2`.
    pub fn new(fs: &FrameShape, charged: usize) -> Result<Self> {
        let cyc = frame_shape_to_cyclo(fs)?;
        let orders: Vec<u32> = (1..=24).filter(|&d| cyc.get(d) > 0).collect();
        let l = orders.iter().fold(1usize, |acc, &d| acc.lcm(&(d as usize)));
        let order = (2 * l).lcm(&120);
        let mut pairs = Vec::new();
        for &d in &orders {
            let a = cyc.get(d) as usize;
            let ks: Vec<i64> = match d {
                1 | 2 => {
                    if !a.is_multiple_of(2) {
                        return Err(Error::NotEigenvalueMultiset(format!(
                            "{fs}: odd multiplicity of eigenvalue {}",
                            if d == 1 { 1 } else { -1 }
                        )));
                    }
                    vec![if d == 1 { 0 } else { 1 }; a / 2]
                }
                _ => (1..i64::from(d))
                    .filter(|&k| 2 * k < i64::from(d) && k.gcd(&i64::from(d)) == 1)
                    .flat_map(|k| std::iter::repeat_n(k, a))
                    .collect(),
            };
            for k in ks {
                // lambda = zeta_d^k, nu = zeta_{2d}^k
                let step = (order / (2 * d as usize)) as i64;
                pairs.push(EigenPair { lambda_exp: 2 * k * step, nu_exp: k * step, fixed: d == 1 });
            }
        }
        if pairs.len() != 12 {
            return Err(Error::Invariant(format!("{fs}: {} eigenvector pairs", pairs.len())));
        }
        let nfixed = pairs.iter().filter(|p| p.fixed).count();
        if charged > nfixed {
            return Err(Error::Invariant(format!("{fs}: needs {charged} fixed pairs, has {nfixed}")));
        }
        Ok(Self { order, pairs, charged, epsilon: 1 })
    }

    fn zeta(&self, k: i64) -> CycloNumber {
        CycloNumber::zeta_power(self.order, k)
    }

    /// Swap `a_i^+` with `a_i^-`: `lambda_i, nu_i` become their inverses.
    pub fn flip_polarization(&mut self, i: usize) {
        let p = &mut self.pairs[i];
        p.lambda_exp = -p.lambda_exp;
        p.nu_exp = -p.nu_exp;
    }

    /// `eps prod (nu_i +- nu_i^-1)` over all pairs, or over the uncharged pairs only.
    pub fn cm_product(&self, with_z: bool, skip_charged: bool) -> CycloNumber {
        let s = if with_z { -1 } else { 1 };
        let mut acc = CycloNumber::from_int(self.order, self.epsilon);
        for p in self.pairs.iter().skip(if skip_charged { self.charged } else { 0 }) {
            let f = self.zeta(p.nu_exp).add(&CycloNumber::from_int(self.order, s).mul(&self.zeta(-p.nu_exp)));
            acc = acc.mul(&f);
        }
        acc
    }

    /// Lift normalized so that `tr_CM g^ = C_{-g}` and `prod_uncharged (nu - nu^-1) = D_g^(l)`.
    pub fn normalized(rec: &ConwayClassRecord, ell: u32, sign: DSign) -> Result<Self> {
        let charged = fixed_pairs(ell) as usize;
        let mut lift = Self::new(&rec.fs_g, charged)?;
        let d_target = rec.d_value(ell, sign)?;
        let c_br = lift.cm_product(false, false).to_radical()?;
        let d_br = lift.cm_product(true, true).to_radical()?;
        if (!rec.c_neg_g.is_zero() && c_br == -&rec.c_neg_g) || (rec.c_neg_g.is_zero() && d_br == -&d_target) {
            lift.epsilon = -1;
        }
        if lift.cm_product(true, true).to_radical()? != d_target {
            if let Some(i) = (charged..12).find(|&i| !lift.pairs[i].fixed) {
                lift.flip_polarization(i);
            }
        }
        let c_br = lift.cm_product(false, false).to_radical()?;
        let d_br = lift.cm_product(true, true).to_radical()?;
        if c_br != rec.c_neg_g || d_br != d_target {
            return Err(Error::Invariant(format!(
                "{}: lift gives C_-g = {c_br}, D = {d_br}; table has {}, {d_target}",
                rec.co0, rec.c_neg_g
            )));
        }
        Ok(lift)
    }
}

/// `tr_CM g^` (or `tr_CM z g^`) as the twelve-fold product.
pub fn cm_ground_trace(lift: &SpinLift, with_z: bool) -> CycloNumber {
    lift.cm_product(with_z, false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sector {
    Untwisted,
    Twisted,
}

/// A fermion mode `u(-n)`: `index < 12` is `a_index^+`, otherwise `a_(index-12)^-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mode {
    pub index: usize,
    /// Twice the (non-positive) mode number.
    pub twice_mode: i64,
}

/// Ordered product of creation modes applied to the ground state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasisElement {
    pub sector: Sector,
    pub modes: Vec<Mode>,
}

impl MonomialBasisElement {
    /// Eigenvalue of `L(0) - c/24` as a q-grid index.
    pub fn degree(&self) -> i64 {
        let ground = match self.sector {
            Sector::Untwisted => -Q_GRID / 2,
            Sector::Twisted => Q_GRID,
        };
        ground + self.modes.iter().map(|m| -m.twice_mode * Q_GRID / 2).sum::<i64>()
    }
}

fn grid_bound(bound: &Rational) -> Result<i64> {
    if *bound > Rational::from_integer(MAX_DEGREE_BOUND.into()) {
        return Err(Error::DegreeBoundTooLarge(bound.ceil().to_integer().try_into().unwrap_or(u32::MAX)));
    }
    Ok((bound * Rational::from_integer(Q_GRID.into())).floor().to_integer().try_into().unwrap_or(i64::MAX))
}

/// All monomials of the sector with `L(0) - c/24 <= bound`.
pub fn enumerate_basis(sector: Sector, bound: &Rational) -> Result<Vec<MonomialBasisElement>> {
    let limit = grid_bound(bound)?;
    let ground = MonomialBasisElement { sector, modes: vec![] }.degree();
    if limit < ground {
        return Ok(vec![]);
    }
    let budget = limit - ground;
    // Nonzero modes ordered by energy, then index.
    let mut pool = Vec::new();
    let mut twice = match sector {
        Sector::Untwisted => -1,
        Sector::Twisted => -2,
    };
    while -twice * Q_GRID / 2 <= budget {
        pool.extend((0..24).map(|index| Mode { index, twice_mode: twice }));
        twice -= 2;
    }
    let mut excited = Vec::new();
    subsets(&pool, 0, budget, &mut Vec::new(), &mut excited);
    let zero_sets: Vec<Vec<Mode>> = match sector {
        Sector::Untwisted => vec![vec![]],
        Sector::Twisted => (0u32..1 << 12)
            .map(|mask| {
                (0..12).filter(|i| mask & (1 << i) != 0).map(|i| Mode { index: 12 + i, twice_mode: 0 }).collect()
            })
            .collect(),
    };
    let mut out = Vec::with_capacity(excited.len() * zero_sets.len());
    for ex in &excited {
        for zs in &zero_sets {
            let mut modes = ex.clone();
            modes.extend_from_slice(zs);
            out.push(MonomialBasisElement { sector, modes });
        }
    }
    Ok(out)
}

fn subsets(pool: &[Mode], start: usize, budget: i64, cur: &mut Vec<Mode>, out: &mut Vec<Vec<Mode>>) {
    out.push(cur.clone());
    for i in start..pool.len() {
        let cost = -pool[i].twice_mode * Q_GRID / 2;
        if cost > budget {
            break;
        }
        cur.push(pool[i]);
        subsets(pool, i + 1, budget - cost, cur, out);
        cur.pop();
    }
}

/// Which `z`-eigenspace of a sector to trace over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    All,
    Even,
    Odd,
}

/// Graded trace of `g^` (times `z` if asked, times `y^J(0)` if asked) over a sector,
/// keyed by (q-grid degree, `J(0)` charge).
pub fn brute_trace(
    lift: &SpinLift,
    sector: Sector,
    parity: Parity,
    z_insertion: bool,
    j_weight: bool,
    bound: &Rational,
) -> Result<BTreeMap<(i64, i64), CycloNumber>> {
    let n = lift.order as i64;
    let ground_nu: i64 = lift.pairs.iter().map(|p| p.nu_exp).sum();
    let ground_j = lift.charged as i64 / 2;
    let mut counts: BTreeMap<(i64, i64), Vec<i64>> = BTreeMap::new();
    for m in enumerate_basis(sector, bound)? {
        let odd = m.modes.len() % 2 == 1;
        match parity {
            Parity::Even if odd => continue,
            Parity::Odd if !odd => continue,
            _ => {}
        }
        let mut exp = 0i64;
        let mut j = 0i64;
        // Spin acts on the untwisted sector through SO(a).
        let mut sign = if sector == Sector::Twisted { lift.epsilon } else { 1 };
        if z_insertion && odd {
            sign = -sign;
        }
        if sector == Sector::Twisted {
            exp += ground_nu;
            j += ground_j;
        }
        for md in &m.modes {
            let (pair, plus) = if md.index < 12 { (md.index, true) } else { (md.index - 12, false) };
            let lam = lift.pairs[pair].lambda_exp;
            exp += if plus { lam } else { -lam };
            if pair < lift.charged {
                j += if plus { 1 } else { -1 };
            }
        }
        let key = (m.degree(), if j_weight { j } else { 0 });
        let slot = counts.entry(key).or_insert_with(|| vec![0; lift.order]);
        slot[exp.rem_euclid(n) as usize] += sign;
    }
    Ok(counts.into_iter().map(|(k, v)| (k, CycloNumber::from_counts(lift.order, &v))).collect())
}

fn to_jacobi(map: &BTreeMap<(i64, i64), CycloNumber>, trunc: i64) -> Result<JacobiSeries> {
    let mut out = JacobiSeries::zero(trunc);
    for (&(q, j), c) in map {
        let v = c.to_radical()?;
        let cur = out.coeff(q, j * Y_GRID);
        out.set(q, j * Y_GRID, cur + v);
    }
    Ok(out)
}

/// `T^s_g`, `T^s_{g,tw}` and `phi_g` assembled from brute traces, known for degrees `<= bound`.
pub struct BruteGenera {
    pub ts: QSeries,
    pub ts_tw: QSeries,
    pub phi: JacobiSeries,
}

pub fn brute_genera(lift: &SpinLift, bound: i64) -> Result<BruteGenera> {
    let b = Rational::from_integer(bound.into());
    let trunc = bound * Q_GRID + 1;
    let tr = |sector, parity, j| -> Result<JacobiSeries> {
        to_jacobi(&brute_trace(lift, sector, parity, true, j, &b)?, trunc)
    };
    use Parity::{Even, Odd};
    use Sector::{Twisted, Untwisted};
    // V = A^0 + A_tw^1, V_tw = A^1 + A_tw^0.
    let ts = tr(Untwisted, Even, false)?.add(&tr(Twisted, Odd, false)?).specialize_z0();
    let ts_tw = tr(Untwisted, Odd, false)?.add(&tr(Twisted, Even, false)?).specialize_z0();
    let phi = tr(Untwisted, Odd, true)?.add(&tr(Twisted, Even, true)?).neg();
    Ok(BruteGenera { ts, ts_tw, phi })
}

/// Dimension of a sector at one degree, counted from the enumeration.
pub fn level_dimension(sector: Sector, degree: &Rational) -> Result<usize> {
    let g = grid_bound(degree)?;
    Ok(enumerate_basis(sector, degree)?.iter().filter(|m| m.degree() == g).count())
}

/// `tr_CM z g^` squared, as a rational when it is one.
pub fn cm_square(c: &CycloNumber) -> Result<Rational> {
    let v = c.to_radical()?;
    (&v * &v).as_rational().ok_or_else(|| Error::NotRadical(format!("square of {v} is irrational")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        let mut memo = BTreeMap::new();
        assert_eq!(cyclotomic_polynomial(1, &mut memo), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4, &mut memo), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12, &mut memo), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(120, &mut memo).len() - 1, 32);
    }

    #[test]
    fn radicals_round_trip() {
        for d in RADICAL_BASIS {
            let s = CycloNumber::sqrt_image(120, d);
            assert_eq!(s.to_radical().unwrap(), RadicalScalar::sqrt(d).unwrap());
        }
    }

    #[test]
    fn imaginary_unit_is_not_radical() {
        assert!(CycloNumber::zeta_power(120, 30).to_radical().is_err());
    }

    #[test]
    fn zeta_sum_vanishes() {
        let mut acc = CycloNumber::from_int(120, 0);
        for k in 0..5 {
            acc = acc.add(&CycloNumber::zeta_power(120, 24 * k));
        }
        assert!(acc.is_zero());
    }
}
