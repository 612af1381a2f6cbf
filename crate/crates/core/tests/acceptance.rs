//! One PASS/FAIL line per acceptance criterion. All comparisons are exact.

use std::time::{Duration, Instant};

use twining::report::Status;
use twining::series::Q_GRID;
use twining::suites::Suite;
use twining::{ClassData, IdentityReport};

struct Criterion {
    id: u32,
    title: &'static str,
    suites: &'static [Suite],
    orders: i64,
    scope: &'static str,
    budget: Option<Duration>,
    /// Minimum number of relations that must pass, for suites with skips.
    min_pass: usize,
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        id: 1,
        title: "eta identity, every l=2 row",
        suites: &[Suite::EtaIdentity],
        scope: "exact below q^8",
        orders: 8,
        budget: Some(Duration::from_secs(10)),
        min_pass: 0,
    },
    Criterion {
        id: 2,
        title: "phi_g = (chi/12) phi_01 + F_g phi_-21, all rows and signs",
        suites: &[Suite::Decomposition],
        scope: "exact below q^5",
        orders: 5,
        budget: Some(Duration::from_secs(60)),
        min_pass: 0,
    },
    Criterion {
        id: 3,
        title: "K3 elliptic genus = phi_1A, z=0 value 24, F_1A = 0 to 10 orders",
        suites: &[Suite::K3],
        scope: "exact below q^5 and q^10",
        orders: 5,
        budget: None,
        min_pass: 0,
    },
    Criterion {
        id: 4,
        title: "higher lambency decomposition, F_0 = 2 chi, z=0 value chi",
        suites: &[Suite::Higher],
        scope: "exact below q^4",
        orders: 4,
        budget: None,
        min_pass: 0,
    },
    Criterion {
        id: 5,
        title: "weak Jacobi invariance of every phi_g^(l)",
        suites: &[Suite::Jacobi],
        scope: "exact below q^6",
        orders: 6,
        budget: None,
        min_pass: 0,
    },
    Criterion {
        id: 6,
        title: "coincidence relations",
        suites: &[Suite::Coincidences],
        scope: "exact below q^5",
        orders: 5,
        budget: None,
        min_pass: 14,
    },
    Criterion {
        id: 7,
        title: "C^2, D^2 and pi_-g oracles",
        suites: &[Suite::Constants],
        scope: "exact",
        orders: 1,
        budget: None,
        min_pass: 0,
    },
    Criterion {
        id: 8,
        title: "brute-force traces through degree 2",
        suites: &[Suite::Oracle],
        scope: "exact, degrees <= 2",
        orders: 2,
        budget: Some(Duration::from_secs(120)),
        min_pass: 0,
    },
    Criterion {
        id: 9,
        title: "D4 sigma-model characters",
        suites: &[Suite::Sigma],
        scope: "exact below q^6",
        orders: 6,
        budget: Some(Duration::from_secs(30)),
        min_pass: 0,
    },
    Criterion {
        id: 10,
        title: "T^s_1A leading shape, T^s_tw = -chi",
        suites: &[Suite::Fourier],
        scope: "exact below q^8",
        orders: 8,
        budget: None,
        min_pass: 0,
    },
];

fn evaluate(c: &Criterion, data: &ClassData) -> (bool, String) {
    let start = Instant::now();
    let mut reports: Vec<IdentityReport> = Vec::new();
    for s in c.suites {
        match s.run(data, c.orders * Q_GRID) {
            Ok(r) => reports.extend(r),
            Err(e) => return (false, format!("{s}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    let passed = reports.iter().filter(|r| r.status == Status::Pass).count();
    let skipped = reports.iter().filter(|r| r.status == Status::Skipped).count();
    let failed: Vec<_> = reports.iter().filter(|r| r.status == Status::Fail).collect();
    let mut detail = format!("{passed} pass, {skipped} skipped, {} fail, {:.1}s", failed.len(), elapsed.as_secs_f64());
    let mut ok = failed.is_empty() && passed > 0 && passed >= c.min_pass;
    if let Some(first) = failed.first() {
        detail += &format!("; first failure: {first}");
    }
    if let Some(b) = c.budget {
        detail += &format!(", budget {}s", b.as_secs());
        if elapsed > b {
            ok = false;
            detail += " exceeded";
        }
    }
    (ok, detail)
}

fn main() {
    let data = ClassData::bundled().expect("bundled data");
    let mut all = true;
    for c in &CRITERIA {
        let (ok, detail) = evaluate(c, &data);
        all &= ok;
        println!("{} criterion {:>2}: {} [{}] ({detail})", if ok { "PASS" } else { "FAIL" }, c.id, c.title, c.scope);
    }
    if !all {
        eprintln!("acceptance criteria failed");
        std::process::exit(1);
    }
}
