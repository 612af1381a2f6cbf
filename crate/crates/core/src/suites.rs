//! Named verification suites shared by the command line and the acceptance tests.

use std::fmt;
use std::str::FromStr;

use crate::conway::{c_squared_oracle, d_squared_oracle, negate_frame_shape, ClassData, ConwayClassRecord};
use crate::error::{Error, Result};
use crate::genera::{
    f_2j_g, f_g, k3_elliptic_genus, phi_g, phi_g_ell, ts_g, verify_coincidences, verify_decomposition,
    verify_decomposition_ell, verify_eta_identity, verify_hecke_relation, verify_jacobi_invariance, verify_z0_value,
    Form, GenusRequest, Which,
};
use crate::modforms::verify_theta_identities;
use crate::oracle::{brute_genera, level_dimension, Sector, SpinLift};
use crate::report::IdentityReport;
use crate::scalars::{rat, RadicalScalar};
use crate::series::{QSeries, Q_GRID};
use crate::sigma::verify_sigma_isomorphism;
use crate::DSign;

/// Lambencies with class tables.
pub const LAMBENCIES: [u32; 5] = [2, 3, 4, 5, 7];

/// Classes checked against the brute-force trace oracle.
pub const ORACLE_CLASSES: [(&str, DSign); 6] = [
    ("1A", DSign::Plus),
    ("2B", DSign::Plus),
    ("2D", DSign::Plus),
    ("3D", DSign::Plus),
    ("4D", DSign::Plus),
    ("4D", DSign::Minus),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    EtaIdentity,
    Decomposition,
    K3,
    Higher,
    Jacobi,
    Coincidences,
    Constants,
    Oracle,
    Sigma,
    Theta,
    Fourier,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::EtaIdentity,
        Suite::Decomposition,
        Suite::K3,
        Suite::Higher,
        Suite::Jacobi,
        Suite::Coincidences,
        Suite::Constants,
        Suite::Oracle,
        Suite::Sigma,
        Suite::Theta,
        Suite::Fourier,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::EtaIdentity => "eta-identity",
            Suite::Decomposition => "decomposition",
            Suite::K3 => "k3",
            Suite::Higher => "higher",
            Suite::Jacobi => "jacobi",
            Suite::Coincidences => "coincidences",
            Suite::Constants => "constants",
            Suite::Oracle => "oracle",
            Suite::Sigma => "sigma",
            Suite::Theta => "theta",
            Suite::Fourier => "fourier",
        }
    }

    /// Run at `prec` (a q-grid index); `oracle` and `constants` ignore it.
    pub fn run(self, data: &ClassData, prec: i64) -> Result<Vec<IdentityReport>> {
        Ok(match self {
            Suite::EtaIdentity => data.rows_for(2).map(|r| verify_eta_identity(r, prec)).collect(),
            Suite::Decomposition => decomposition(data, prec),
            Suite::K3 => k3(data, prec)?,
            Suite::Higher => higher(data, prec),
            Suite::Jacobi => jacobi(data, prec),
            Suite::Coincidences => verify_coincidences(data, &data.relations, prec),
            Suite::Constants => constants(data),
            Suite::Oracle => oracle(data),
            Suite::Sigma => verify_sigma_isomorphism(prec)?,
            Suite::Theta => verify_theta_identities(prec),
            Suite::Fourier => fourier(data, prec),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Data(format!("unknown suite `{s}`")))
    }
}

fn requests<'a>(data: &'a ClassData, ell: u32, prec: i64) -> impl Iterator<Item = GenusRequest<'a>> + 'a {
    data.rows_for(ell).flat_map(move |r| {
        r.signs(ell).into_iter().map(move |s| GenusRequest::new(r, s, ell, prec).expect("tabulated"))
    })
}

fn attempt(name: String, f: impl FnOnce() -> Result<IdentityReport>) -> IdentityReport {
    f().unwrap_or_else(|e| IdentityReport::fail(name, None, e.to_string()))
}

fn decomposition(data: &ClassData, prec: i64) -> Vec<IdentityReport> {
    let mut out: Vec<_> = requests(data, 2, prec).map(|q| verify_decomposition(q.record, q.sign, prec)).collect();
    if let Some(r) = data.get("2B") {
        out.push(verify_hecke_relation(r, prec));
    }
    if let (Some(a), Some(b)) = (data.get("4D"), data.get("2D")) {
        out.push(attempt("F_4D(+) = F_2D".into(), || {
            Ok(IdentityReport::compare_q(
                "F_4D(+) = F_2D",
                &f_g(a, DSign::Plus, prec)?,
                &f_g(b, DSign::Plus, prec)?,
                prec,
            ))
        }));
    }
    out
}

/// K3 elliptic genus against `phi_1A` at `prec`, and `F_1A = 0` at twice that.
fn k3(data: &ClassData, prec: i64) -> Result<Vec<IdentityReport>> {
    let one = data.get("1A").ok_or_else(|| Error::UnknownClass("1A".into()))?;
    let k3 = k3_elliptic_genus(prec)?;
    let phi = phi_g(one, DSign::Plus, prec)?;
    let f = f_g(one, DSign::Plus, 2 * prec)?;
    Ok(vec![
        IdentityReport::compare_jacobi("K3 elliptic genus = phi_1A", &k3, &phi, prec),
        IdentityReport::compare_q(
            "K3 elliptic genus at z=0 = 24",
            &k3.specialize_z0(),
            &QSeries::constant(RadicalScalar::from_int(24), prec),
            prec,
        ),
        IdentityReport::compare_q("F_1A = 0", &f, &QSeries::zero(2 * prec), 2 * prec),
    ])
}

fn f0_is_twice_chi(rec: &ConwayClassRecord, ell: u32, prec: i64) -> IdentityReport {
    let name = format!("F_0 = 2 chi l={ell} {}", rec.co0);
    attempt(name.clone(), || {
        let expect = QSeries::constant(RadicalScalar::from_int(2 * rec.chi()), prec);
        Ok(IdentityReport::compare_q(name.clone(), &f_2j_g(rec, 0, prec)?, &expect, prec))
    })
}

fn higher(data: &ClassData, prec: i64) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for ell in LAMBENCIES.into_iter().filter(|&l| l > 2) {
        for q in requests(data, ell, prec) {
            out.push(verify_decomposition_ell(&q));
            out.push(verify_z0_value(&q));
        }
        out.extend(data.rows_for(ell).map(|r| f0_is_twice_chi(r, ell, prec)));
    }
    out
}

fn jacobi(data: &ClassData, prec: i64) -> Vec<IdentityReport> {
    LAMBENCIES
        .into_iter()
        .flat_map(|ell| requests(data, ell, prec).collect::<Vec<_>>())
        .map(|q| match phi_g_ell(&q) {
            Ok(phi) => verify_jacobi_invariance(&format!("l={} {}", q.ell, q.label()), &phi, q.ell - 1, prec),
            Err(e) => IdentityReport::fail(q.label(), None, e.to_string()),
        })
        .collect()
}

fn constants(data: &ClassData) -> Vec<IdentityReport> {
    let check = |name: String, ok: Result<bool>| match ok {
        Ok(true) => IdentityReport::pass(name),
        Ok(false) => IdentityReport::fail(name, None, "mismatch"),
        Err(e) => IdentityReport::fail(name, None, e.to_string()),
    };
    let mut out = Vec::new();
    for r in &data.records {
        out.push(check(format!("pi_-g {}", r.co0), negate_frame_shape(&r.fs_g).map(|n| n == r.fs_neg_g)));
        let c2 = (&r.c_neg_g * &r.c_neg_g).as_rational();
        out.push(check(format!("C_-g^2 {}", r.co0), c_squared_oracle(&r.fs_g).map(|o| Some(o) == c2)));
        for (&ell, d) in &r.d_magnitude {
            let d2 = (d * d).as_rational();
            out.push(check(format!("D^2 l={ell} {}", r.co0), d_squared_oracle(&r.fs_g, ell).map(|o| Some(o) == d2)));
        }
    }
    out
}

/// Brute-force traces through degree 2 for [`ORACLE_CLASSES`].
fn oracle(data: &ClassData) -> Vec<IdentityReport> {
    let trunc = 2 * Q_GRID + 1;
    let mut out = Vec::new();
    for (class, sign) in ORACLE_CLASSES {
        let Some(rec) = data.get(class) else {
            out.push(IdentityReport::fail(format!("oracle {class}"), None, "class missing"));
            continue;
        };
        let label = rec.label(2, sign);
        let run = || -> Result<Vec<IdentityReport>> {
            let lift = SpinLift::normalized(rec, 2, sign)?;
            let b = brute_genera(&lift, 2)?;
            Ok(vec![
                IdentityReport::compare_q(
                    format!("oracle T^s {label}"),
                    &b.ts,
                    &ts_g(rec, Which::G, Form::Chi, trunc)?,
                    trunc,
                ),
                IdentityReport::compare_q(
                    format!("oracle T^s_tw {label}"),
                    &b.ts_tw,
                    &ts_g(rec, Which::GTw, Form::Chi, trunc)?,
                    trunc,
                ),
                IdentityReport::compare_jacobi(format!("oracle phi {label}"), &b.phi, &phi_g(rec, sign, trunc)?, trunc),
            ])
        };
        match run() {
            Ok(r) => out.extend(r),
            Err(e) => out.push(IdentityReport::fail(format!("oracle {label}"), None, e.to_string())),
        }
    }
    let name = "twisted ground dimension 4096";
    out.push(match level_dimension(Sector::Twisted, &rat(1, 1)) {
        Ok(4096) => IdentityReport::pass(name),
        Ok(n) => IdentityReport::fail(name, None, format!("found {n}")),
        Err(e) => IdentityReport::fail(name, None, e.to_string()),
    });
    out
}

/// Leading shape of `T^s_1A`, and `T^s_g` and `T^s_{g,tw}` from the eta-product sums.
fn fourier(data: &ClassData, prec: i64) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    if let Some(one) = data.get("1A") {
        out.push(attempt("T^s_1A = q^-1/2 + 0 + O(q^1/2)".into(), || {
            let t = ts_g(one, Which::G, Form::Direct, prec)?;
            let name = "T^s_1A = q^-1/2 + 0 + O(q^1/2)";
            let lead = QSeries::monomial(-Q_GRID / 2, RadicalScalar::one(), Q_GRID / 2);
            Ok(IdentityReport::compare_q(name, &t.truncate(Q_GRID / 2), &lead, Q_GRID / 2))
        }));
    }
    for r in data.rows_for(2) {
        out.push(attempt(format!("T^s_g two forms {}", r.co0), || {
            let a = ts_g(r, Which::G, Form::Direct, prec)?;
            Ok(IdentityReport::compare_q(
                format!("T^s_g two forms {}", r.co0),
                &a,
                &ts_g(r, Which::G, Form::Chi, prec)?,
                prec,
            ))
        }));
        out.push(attempt(format!("T^s_tw = -chi {}", r.co0), || {
            let a = ts_g(r, Which::GTw, Form::Direct, prec)?;
            let expect = QSeries::constant(RadicalScalar::from_int(-r.chi()), prec);
            Ok(IdentityReport::compare_q(format!("T^s_tw = -chi {}", r.co0), &a, &expect, prec))
        }));
    }
    out
}
