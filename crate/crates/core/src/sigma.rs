//! Characters for the D4 sigma-model comparison: coset theta series, the
//! fermionic characters `U_i`, and the graded-dimension identities relating
//! `V^{s#}`, `V^{s#}_tw` to the NS-NS and R-R sectors.

use std::fmt;

use crate::error::Result;
use crate::modforms::eta;
use crate::report::IdentityReport;
use crate::scalars::{rat, RadicalScalar};
use crate::series::{binomial_factor, QSeries, Q_GRID};

const MARGIN: i64 = 2 * Q_GRID;

/// A coset of `D4` in its dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LatticeCoset {
    Zero,
    One,
    Omega,
    OmegaBar,
}

pub const COSETS: [LatticeCoset; 4] =
    [LatticeCoset::Zero, LatticeCoset::One, LatticeCoset::Omega, LatticeCoset::OmegaBar];

impl LatticeCoset {
    /// Representative with doubled coordinates.
    pub fn representative(self) -> [i64; 4] {
        match self {
            LatticeCoset::Zero => [0, 0, 0, 0],
            LatticeCoset::One => [2, 0, 0, 0],
            LatticeCoset::Omega => [1, 1, 1, 1],
            LatticeCoset::OmegaBar => [-1, 1, 1, 1],
        }
    }

    /// Coset of a doubled-coordinate vector of the dual lattice, if it is one.
    pub fn classify(w: [i64; 4]) -> Option<Self> {
        let parity = w[0].rem_euclid(2);
        if w.iter().any(|x| x.rem_euclid(2) != parity) {
            return None;
        }
        let even = w.iter().map(|x| (x - parity) / 2).sum::<i64>().rem_euclid(2) == 0;
        Some(match (parity, even) {
            (0, true) => LatticeCoset::Zero,
            (0, false) => LatticeCoset::One,
            (_, true) => LatticeCoset::Omega,
            (_, false) => LatticeCoset::OmegaBar,
        })
    }
}

/// Addition in the Klein four-group `dual / D4`.
impl std::ops::Add for LatticeCoset {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, other: Self) -> Self {
        let idx = |c: Self| COSETS.iter().position(|&x| x == c).unwrap();
        COSETS[idx(self) ^ idx(other)]
    }
}

impl fmt::Display for LatticeCoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LatticeCoset::Zero => "0",
            LatticeCoset::One => "1",
            LatticeCoset::Omega => "w",
            LatticeCoset::OmegaBar => "wb",
        })
    }
}

fn norm_index(w: &[i64; 4]) -> i64 {
    // |w/2|^2 / 2 on the grid of 24.
    3 * w.iter().map(|x| x * x).sum::<i64>()
}

/// `sum_{v in D4 + gamma_i} q^(|v|^2/2)` by box enumeration.
pub fn d4_coset_theta(coset: LatticeCoset, prec: i64) -> QSeries {
    let mut out = QSeries::zero(prec);
    let r = (1..).find(|&r: &i64| 3 * r * r >= prec).unwrap_or(1);
    let range = -r..=r;
    for a in range.clone() {
        for b in range.clone() {
            for c in range.clone() {
                for d in range.clone() {
                    let w = [a, b, c, d];
                    let n = norm_index(&w);
                    if n < prec && LatticeCoset::classify(w) == Some(coset) {
                        let cur = out.coeff(n);
                        out.set(n, cur + RadicalScalar::one());
                    }
                }
            }
        }
    }
    out
}

/// Theta series of the dual lattice, `Z^4` and `(Z + 1/2)^4`, from one-dimensional sums.
pub fn dual_theta(prec: i64) -> QSeries {
    let mut int = QSeries::zero(prec);
    let mut half = QSeries::zero(prec);
    let mut n = 0i64;
    while 3 * (2 * n - 1) * (2 * n - 1) < prec || 12 * n * n < prec {
        for m in if n == 0 { vec![0] } else { vec![n, -n] } {
            if 12 * m * m < prec {
                let cur = int.coeff(12 * m * m);
                int.set(12 * m * m, cur + RadicalScalar::one());
            }
        }
        if n > 0 {
            // (n - 1/2) and -(n - 1/2)
            let idx = 3 * (2 * n - 1) * (2 * n - 1);
            if idx < prec {
                let cur = half.coeff(idx);
                half.set(idx, cur + RadicalScalar::from_int(2));
            }
        }
        n += 1;
    }
    int.pow(4).expect("nonnegative power").add(&half.pow(4).expect("nonnegative power"))
}

fn q_product(first: i64, step: i64, s: i64, k: i64, trunc: i64) -> QSeries {
    let mut acc = QSeries::one(trunc);
    let mut e = first;
    while e < trunc {
        acc = acc.mul(&binomial_factor(e, s, k, trunc));
        e += step;
    }
    acc
}

/// Fermionic graded dimensions for `n` free fermions: `(A^0, A^1, A_tw^0, A_tw^1)`.
pub fn fermion_characters(n: i64, prec: i64) -> [QSeries; 4] {
    let work = prec + MARGIN;
    let half = Q_GRID / 2;
    let ground = -n * Q_GRID / 48;
    let plus = q_product(half, Q_GRID, 1, n, work);
    let minus = q_product(half, Q_GRID, -1, n, work);
    let h = rat(1, 2);
    let a0 = plus.add(&minus).scale_rat(&h).shift(ground);
    let a1 = plus.sub(&minus).scale_rat(&h).shift(ground);
    // Twisted ground: n/16 - n/48 = n/24; z has trace zero on the Clifford module.
    let tw = q_product(Q_GRID, Q_GRID, 1, n, work).scale(&RadicalScalar::from_int(1 << (n / 2))).scale_rat(&h).shift(n);
    [a0, a1, tw.clone(), tw].map(|s| s.truncate(prec))
}

/// `[U_0, U_1, U_w, U_wb]` from eight fermions.
pub fn u_characters(prec: i64) -> [QSeries; 4] {
    fermion_characters(8, prec)
}

fn u_of(u: &[QSeries; 4], c: LatticeCoset) -> &QSeries {
    &u[COSETS.iter().position(|&x| x == c).unwrap()]
}

fn triple_sum(u: &[QSeries; 4], terms: &[[LatticeCoset; 3]], prec: i64) -> QSeries {
    terms.iter().fold(QSeries::zero(prec), |acc, t| acc.add(&u_of(u, t[0]).mul(u_of(u, t[1])).mul(u_of(u, t[2]))))
}

use LatticeCoset::{Omega as W, OmegaBar as B, One as I, Zero as O};

/// `V^{s#}` as `A(a)^0 + A(a)_tw^1` split over three copies of eight fermions.
pub const VSN_TERMS: [[LatticeCoset; 3]; 8] =
    [[O, O, O], [O, I, I], [I, O, I], [I, I, O], [B, W, W], [W, B, W], [W, W, B], [B, B, B]];
/// `V^{s#}_tw` as `A(a)^1 + A(a)_tw^0`.
pub const VSN_TW_TERMS: [[LatticeCoset; 3]; 8] =
    [[I, O, O], [O, I, O], [O, O, I], [I, I, I], [W, W, W], [W, B, B], [B, W, B], [B, B, W]];
/// NS-NS sector of the Kummer orbifold.
pub const NSNS_TERMS: [[LatticeCoset; 3]; 8] =
    [[O, O, O], [O, W, W], [I, I, I], [I, B, B], [W, O, W], [W, W, O], [B, I, B], [B, B, I]];
/// R-R sector of the Kummer orbifold.
pub const RR_TERMS: [[LatticeCoset; 3]; 8] =
    [[W, O, O], [W, W, W], [B, I, I], [B, B, B], [O, O, W], [O, W, O], [I, I, B], [I, B, I]];

/// All character identities of the sigma-model comparison.
pub fn verify_sigma_isomorphism(prec: i64) -> Result<Vec<IdentityReport>> {
    let work = prec + MARGIN;
    let u = u_characters(work);
    let mut reps = Vec::new();

    let eta4_inv = eta(work).pow(-4)?;
    for c in COSETS {
        let boson = d4_coset_theta(c, work).mul(&eta4_inv);
        reps.push(IdentityReport::compare_q(format!("U_{c} = theta(D4+g_{c})/eta^4"), u_of(&u, c), &boson, prec));
    }
    for c in [W, B] {
        reps.push(IdentityReport::compare_q(format!("triality U_1 = U_{c}"), u_of(&u, I), u_of(&u, c), prec));
    }
    let cosets = COSETS.iter().fold(QSeries::zero(work), |acc, &c| acc.add(&d4_coset_theta(c, work)));
    reps.push(IdentityReport::compare_q("sum of coset thetas = dual theta", &cosets, &dual_theta(work), prec));

    let [a0, a1, t0, t1] = fermion_characters(24, work);
    let vsn = a0.add(&t1);
    let vsn_tw = a1.add(&t0);
    reps.push(IdentityReport::compare_q("V = sum U_ijk", &vsn, &triple_sum(&u, &VSN_TERMS, work), prec));
    reps.push(IdentityReport::compare_q("V_tw = sum U_ijk", &vsn_tw, &triple_sum(&u, &VSN_TW_TERMS, work), prec));
    reps.push(IdentityReport::compare_q("V = NS-NS", &vsn, &triple_sum(&u, &NSNS_TERMS, work), prec));
    reps.push(IdentityReport::compare_q("V_tw = R-R", &vsn_tw, &triple_sum(&u, &RR_TERMS, work), prec));
    let q0 = vsn.coeff(0);
    reps.push(if q0.is_zero() {
        IdentityReport::pass("V has no states at L(0) = 1/2")
    } else {
        IdentityReport::fail("V has no states at L(0) = 1/2", None, format!("coefficient of q^0 is {q0}"))
    });
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representatives_classify() {
        for c in COSETS {
            assert_eq!(LatticeCoset::classify(c.representative()), Some(c));
        }
        assert_eq!(LatticeCoset::classify([1, 0, 0, 0]), None);
    }

    #[test]
    fn klein_group() {
        assert_eq!(W + B, I);
        assert_eq!(I + I, O);
    }

    #[test]
    fn root_count() {
        let t = d4_coset_theta(O, 2 * Q_GRID);
        assert_eq!(t.coeff(Q_GRID), RadicalScalar::from_int(24));
        let v = d4_coset_theta(I, Q_GRID);
        assert_eq!(v.coeff(Q_GRID / 2), RadicalScalar::from_int(8));
    }
}
