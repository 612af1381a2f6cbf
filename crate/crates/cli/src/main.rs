use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use twining::conway::load_class_data;
use twining::genera::{f_2j_g, f_g, phi_g_ell, ts_g, Form, Which};
use twining::report::{all_ok, Status};
use twining::series::{fraction_string, Q_GRID, Y_GRID};
use twining::suites::Suite;
use twining::{ClassData, ConwayClassRecord, DSign, Error, GenusRequest, IdentityReport, JacobiSeries, DEFAULT_PREC};

const DATA_ENV: &str = "MOONSHINE_DATA_DIR";

#[derive(Parser)]
#[command(name = "twining", version, about = "Twining genera of the Conway moonshine module")]
struct Cli {
    /// Directory holding classes.json and coincidences.json
    #[arg(long, global = true, env = DATA_ENV)]
    data_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand one series for one class
    Compute {
        #[arg(long)]
        class: String,
        /// `+` or `-`; defaults to `+`
        #[arg(long, allow_hyphen_values = true)]
        sign: Option<String>,
        #[arg(long, default_value_t = 2)]
        ell: u32,
        /// Number of integer q-orders
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(i64).range(1..))]
        prec: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = SeriesKind::Phi)]
        series: SeriesKind,
        /// Index j of F_{2j,g}
        #[arg(long, default_value_t = 0)]
        j: u32,
    },
    /// Run verification suites
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Number of integer q-orders
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        prec: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the class table
    ListClasses {
        /// Only classes tabulated at this lambency
        #[arg(long)]
        ell: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expand a series for every class and sign of one table
    Export {
        #[arg(long, default_value_t = 2)]
        ell: u32,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(i64).range(1..))]
        prec: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, value_enum, default_value_t = SeriesKind::Phi)]
        series: SeriesKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    /// phi_g^(l)
    Phi,
    /// F_g (l = 2)
    F,
    /// F_{2j,g}
    F2j,
    /// T^s_g
    Ts,
    /// T^s_{g,tw}
    TsTw,
}

impl SeriesKind {
    fn name(self, j: u32) -> String {
        match self {
            SeriesKind::Phi => "phi".into(),
            SeriesKind::F => "F".into(),
            SeriesKind::F2j => format!("F_{}", 2 * j),
            SeriesKind::Ts => "T^s".into(),
            SeriesKind::TsTw => "T^s_tw".into(),
        }
    }
}

enum Failure {
    Usage(String),
    Data(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownClass(_) | Error::LambencyTooLarge { .. } | Error::UnsupportedLambency(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Data(other.to_string()),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

fn load(dir: Option<PathBuf>) -> Result<ClassData, Failure> {
    match dir {
        Some(d) => load_class_data(&d),
        None => ClassData::bundled(),
    }
    .map_err(|e| Failure::Data(e.to_string()))
}

fn record<'a>(data: &'a ClassData, class: &str, ell: u32) -> Result<&'a ConwayClassRecord, Failure> {
    let rec = data.get(class).ok_or_else(|| Failure::Usage(format!("class {class} not in table")))?;
    if !rec.has_lambency(ell) {
        return Err(Failure::Usage(format!("class {} not in table for l={ell}", rec.co0)));
    }
    Ok(rec)
}

fn resolve_sign(rec: &ConwayClassRecord, ell: u32, sign: Option<&str>) -> Result<DSign, Failure> {
    match sign {
        Some(s) => s.parse().map_err(|_| Failure::Usage(format!("bad sign `{s}`"))),
        None if rec.signs(ell).len() > 1 => {
            eprintln!("note: class {} has D != 0 at l={ell}; using --sign +", rec.co0);
            Ok(DSign::Plus)
        }
        None => Ok(DSign::Plus),
    }
}

fn expand(req: &GenusRequest, kind: SeriesKind, j: u32) -> Result<JacobiSeries, Failure> {
    let (rec, prec) = (req.record, req.prec);
    let q = |s| Ok(JacobiSeries::from_qseries(&s));
    match kind {
        SeriesKind::Phi => Ok(phi_g_ell(req)?),
        SeriesKind::F if req.ell != 2 => Err(Failure::Usage("F is defined at l=2; use --series f2j".into())),
        SeriesKind::F => q(f_g(rec, req.sign, prec)?),
        SeriesKind::F2j if j > req.ell - 1 => Err(Failure::Usage(format!("j must be at most {}", req.ell - 1))),
        SeriesKind::F2j => q(f_2j_g(rec, j, prec)?),
        SeriesKind::Ts => q(ts_g(rec, Which::G, Form::Chi, prec)?),
        SeriesKind::TsTw => q(ts_g(rec, Which::GTw, Form::Chi, prec)?),
    }
}

fn coefficient_rows(s: &JacobiSeries) -> Vec<[String; 3]> {
    s.terms()
        .filter(|(_, c)| !c.is_zero())
        .map(|((qi, yi), c)| [fraction_string(qi, Q_GRID), fraction_string(yi, Y_GRID), c.to_string()])
        .collect()
}

fn series_json(req: &GenusRequest, name: &str, s: &JacobiSeries) -> Value {
    let coeffs: Vec<Value> =
        coefficient_rows(s).into_iter().map(|[q, y, c]| json!({"q_exp": q, "y_exp": y, "coeff": c})).collect();
    json!({
        "class": req.record.co0,
        "lambency": req.ell,
        "sign": req.sign.to_string(),
        "d": req.d_value().to_string(),
        "series": name,
        "known_below_q_exp": fraction_string(s.trunc(), Q_GRID),
        "coefficients": coeffs,
    })
}

fn print_series(
    format: Format,
    items: &[(GenusRequest, JacobiSeries)],
    name: &str,
    single: bool,
) -> Result<(), Failure> {
    match format {
        Format::Text => {
            for (req, s) in items {
                println!("# {name} {} l={} below q^{}", req.label(), req.ell, fraction_string(s.trunc(), Q_GRID));
                print!("{}", s.dump());
            }
        }
        Format::Json => {
            let v: Vec<Value> = items.iter().map(|(r, s)| series_json(r, name, s)).collect();
            let v = if single { v.into_iter().next().unwrap_or(Value::Null) } else { Value::Array(v) };
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["class", "lambency", "sign", "series", "q_exp", "y_exp", "coeff"])?;
            for (req, s) in items {
                let ell = req.ell.to_string();
                let sign = req.sign.to_string();
                for [q, y, c] in coefficient_rows(s) {
                    w.write_record([req.record.co0.as_str(), &ell, &sign, name, &q, &y, &c])?;
                }
            }
            w.flush().map_err(|e| Failure::Data(e.to_string()))?;
        }
    }
    Ok(())
}

fn list_classes(data: &ClassData, ell: Option<u32>, format: Format) -> Result<(), Failure> {
    let rows: Vec<&ConwayClassRecord> = data.records.iter().filter(|r| ell.is_none_or(|l| r.has_lambency(l))).collect();
    let d_text =
        |r: &ConwayClassRecord| r.d_magnitude.iter().map(|(l, d)| format!("l={l}:{d}")).collect::<Vec<_>>().join(" ");
    match format {
        Format::Text => {
            for r in rows {
                println!(
                    "{:<4} {:<4} chi={:<4} pi_g={:<18} pi_-g={:<22} C_-g={:<6} D: {}",
                    r.co0,
                    r.co1,
                    r.chi(),
                    r.fs_g.to_string(),
                    r.fs_neg_g.to_string(),
                    r.c_neg_g.to_string(),
                    d_text(r)
                );
            }
        }
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let d: serde_json::Map<String, Value> =
                        r.d_magnitude.iter().map(|(l, d)| (l.to_string(), json!(d.to_string()))).collect();
                    json!({
                        "co0": r.co0, "co1": r.co1, "chi": r.chi(),
                        "pi_g": r.fs_g.to_string(), "pi_neg_g": r.fs_neg_g.to_string(),
                        "c_neg_g": r.c_neg_g.to_string(), "d_mag": d,
                        "gamma_g": r.gamma_g, "gamma_neg_g": r.gamma_neg_g, "level": r.level,
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["co0", "co1", "chi", "pi_g", "pi_neg_g", "c_neg_g", "d_mag"])?;
            for r in rows {
                w.write_record([
                    &r.co0,
                    &r.co1,
                    &r.chi().to_string(),
                    &r.fs_g.to_string(),
                    &r.fs_neg_g.to_string(),
                    &r.c_neg_g.to_string(),
                    &d_text(r),
                ])?;
            }
            w.flush().map_err(|e| Failure::Data(e.to_string()))?;
        }
    }
    Ok(())
}

fn verify(data: &ClassData, suite: &str, prec: Option<i64>, format: Format) -> Result<bool, Failure> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(|_| {
            let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            Failure::Usage(format!("unknown suite `{suite}`; expected all or one of {}", names.join(", ")))
        })?]
    };
    let prec = prec.map_or(DEFAULT_PREC, |p| p * Q_GRID);
    let mut results: Vec<(Suite, Vec<IdentityReport>)> = Vec::new();
    for s in suites {
        results.push((s, s.run(data, prec)?));
    }
    let ok = results.iter().all(|(_, r)| all_ok(r));
    match format {
        Format::Text => {
            for (s, reps) in &results {
                for r in reps {
                    println!("[{s}] {r}");
                }
                let count = |st| reps.iter().filter(|r| r.status == st).count();
                println!(
                    "[{s}] {} pass, {} skipped, {} fail",
                    count(Status::Pass),
                    count(Status::Skipped),
                    count(Status::Fail)
                );
            }
        }
        Format::Json => {
            let v: Vec<Value> = results
                .iter()
                .map(|(s, reps)| json!({"suite": s.name(), "reports": reps.iter().map(IdentityReport::to_json).collect::<Vec<_>>()}))
                .collect();
            let v = json!({"status": if ok { "pass" } else { "fail" }, "suites": v});
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["suite", "name", "status", "q_exp", "y_exp", "lhs", "rhs", "note"])?;
            for (s, reps) in &results {
                for r in reps {
                    let d = r.first_deviation.clone();
                    let status = match r.status {
                        Status::Pass => "pass",
                        Status::Fail => "fail",
                        Status::Skipped => "skipped",
                    };
                    let field =
                        |f: fn(&twining::report::Deviation) -> &String| d.as_ref().map(f).cloned().unwrap_or_default();
                    w.write_record([
                        s.name(),
                        &r.name,
                        status,
                        &field(|d| &d.q_exp),
                        &field(|d| &d.y_exp),
                        &field(|d| &d.lhs),
                        &field(|d| &d.rhs),
                        r.note.as_deref().unwrap_or(""),
                    ])?;
                }
            }
            w.flush().map_err(|e| Failure::Data(e.to_string()))?;
        }
    }
    Ok(ok)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let data = load(cli.data_dir)?;
    match cli.command {
        Command::Compute { class, sign, ell, prec, format, series, j } => {
            let rec = record(&data, &class, ell)?;
            let sign = resolve_sign(rec, ell, sign.as_deref())?;
            let req = GenusRequest::new(rec, sign, ell, prec * Q_GRID)?;
            let s = expand(&req, series, j)?;
            print_series(format, &[(req, s)], &series.name(j), true)?;
            Ok(true)
        }
        Command::Export { ell, prec, format, series } => {
            if series == SeriesKind::F2j {
                return Err(Failure::Usage("export covers phi, f, ts and ts-tw".into()));
            }
            let mut items = Vec::new();
            for rec in data.rows_for(ell) {
                for sign in rec.signs(ell) {
                    let req = GenusRequest::new(rec, sign, ell, prec * Q_GRID)?;
                    let s = expand(&req, series, 0)?;
                    items.push((req, s));
                }
            }
            if items.is_empty() {
                return Err(Failure::Usage(format!("no classes tabulated at l={ell}")));
            }
            print_series(format, &items, &series.name(0), false)?;
            Ok(true)
        }
        Command::ListClasses { ell, format } => {
            list_classes(&data, ell, format)?;
            Ok(true)
        }
        Command::Verify { suite, prec, format } => verify(&data, &suite, prec, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Data(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
