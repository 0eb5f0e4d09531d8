//! Session files, command dispatch and JSON reports.

mod session;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::brcomplex::{assemble_b, finite_lengths, BrComplex, InputDatum};
use crate::error::{Error, Result};
use crate::multiplicity::{
    br_function, br_multiplicity, chi_b, grade_report, hilbert_samuel_multiplicity, partial_sums,
    verify_identities, verify_serre, HilbertPoly, KoszulTable, Sampling,
};
use crate::report::{ints, Int};

pub use session::{ModuleSpec, Session};

pub const SCHEMA: u32 = 1;

pub const COMMANDS: &[&str] = &[
    "br", "brpoly", "chi", "koszul", "hilbert", "complex", "grade", "verify", "serre", "question",
];

/// Flags shared by every command.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CommandArgs {
    pub nu: Option<i64>,
    pub j: Option<usize>,
    pub range: Option<(i64, i64)>,
    pub oracle: bool,
}

/// A finished report and the process exit code that goes with it.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub exit_code: i32,
    pub report: Value,
}

impl Outcome {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.report).expect("reports serialize")
    }
}

fn envelope(command: &str, body: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    match body {
        Value::Object(fields) => m.extend(fields),
        other => {
            m.insert("result".into(), other);
        }
    }
    Value::Object(m)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

/// Report for a failed command. Input errors exit with 2, everything else
/// with 1.
pub fn error_outcome(command: &str, e: &Error) -> Outcome {
    Outcome {
        exit_code: if e.is_input_error() { 2 } else { 1 },
        report: envelope(
            command,
            json!({ "error": { "code": e.code(), "message": e.to_string() } }),
        ),
    }
}

fn option_parse<T: std::str::FromStr>(s: &Session, key: &str) -> Result<Option<T>> {
    s.option(key)
        .map(|v| {
            v.parse()
                .map_err(|_| Error::InvalidInput(format!("option `{key}`: bad value `{v}`")))
        })
        .transpose()
}

fn sampling(s: &Session) -> Result<Sampling> {
    let d = Sampling::default();
    Ok(Sampling {
        margin: option_parse(s, "margin")?.unwrap_or(d.margin),
        cap: option_parse(s, "cap")?.unwrap_or(d.cap),
    })
}

fn nu_range(s: &Session, args: &CommandArgs) -> Result<(i64, i64)> {
    if let Some(r) = args.range {
        return Ok(r);
    }
    let top = (s.datum().f() - s.datum().g()) as i64 + 2;
    Ok((
        option_parse(s, "nu_min")?.unwrap_or(-2),
        option_parse(s, "nu_max")?.unwrap_or(top),
    ))
}

fn require_nu(args: &CommandArgs, command: &str) -> Result<i64> {
    args.nu
        .ok_or_else(|| Error::InvalidInput(format!("`{command}` needs --nu")))
}

fn complex_json(b: &BrComplex) -> Value {
    let c = &b.complex;
    let positions: Vec<Value> = (0..c.len())
        .map(|i| {
            json!({
                "position": i as i64 + c.offset(),
                "rank": c.module(i).rank(),
                "basis": b.labels[i],
            })
        })
        .collect();
    let maps: Vec<Value> = (0..c.len().saturating_sub(1))
        .map(|i| {
            let d = c.differential(i + 1).expect("differential exists");
            let rows: Vec<Vec<String>> = d
                .matrix()
                .iter()
                .map(|r| r.iter().map(|p| p.render()).collect())
                .collect();
            json!({
                "source": i as i64 + 1 + c.offset(),
                "target": i as i64 + c.offset(),
                "rows": rows,
            })
        })
        .collect();
    json!({
        "nu": b.nu,
        "regime": b.regime.name(),
        "offset": c.offset(),
        "ranks": c.ranks(),
        "positions": positions,
        "matrices": maps,
    })
}

fn polys_json(polys: &[HilbertPoly]) -> Vec<Value> {
    polys
        .iter()
        .enumerate()
        .map(|(j, p)| {
            let mut v = to_value(&p.to_json());
            v["j"] = json!(j);
            v
        })
        .collect()
}

fn pass_code(pass: bool) -> i32 {
    if pass {
        0
    } else {
        1
    }
}

fn dispatch(s: &Session, command: &str, args: &CommandArgs) -> Result<(i32, Value)> {
    let datum: &InputDatum = s.datum();
    let smp = sampling(s)?;
    match command {
        "br" => {
            let r = br_multiplicity(datum, smp)?;
            Ok((0, to_value(&r.to_json(datum))))
        }
        "brpoly" => {
            let r = br_multiplicity(datum, smp)?;
            let (lo, hi) = nu_range(s, args)?;
            let lo = lo.max(0);
            let values: Vec<Value> = (lo..=hi)
                .map(|nu| {
                    let f = br_function(datum, nu)?;
                    Ok(json!({ "nu": nu, "value": Int::from(f), "poly": Int(r.br_poly.eval(nu)) }))
                })
                .collect::<Result<_>>()?;
            Ok((
                0,
                json!({
                    "br": Int(r.br),
                    "d": r.d,
                    "br_poly": r.br_poly.to_json(),
                    "values": values,
                }),
            ))
        }
        "chi" => {
            let nu = require_nu(args, command)?;
            datum.require_certificate()?;
            let b = assemble_b(datum, nu)?;
            let lengths = finite_lengths(&b.complex)?;
            Ok((
                0,
                json!({
                    "nu": nu,
                    "chi": chi_b(datum, nu)?,
                    "regime": b.regime.name(),
                    "offset": b.offset(),
                    "ranks": b.ranks(),
                    "homology_lengths": ints(&lengths),
                }),
            ))
        }
        "koszul" => {
            datum.require_certificate()?;
            let table = KoszulTable::new(datum);
            let polys = table.hilbert_polys(smp)?;
            let mut body = Map::new();
            match args.j {
                Some(j) if j > datum.f() => {
                    return Err(Error::InvalidInput(format!(
                        "--j must lie in 0..={}",
                        datum.f()
                    )))
                }
                Some(j) => {
                    body.insert("j".into(), json!(j));
                    body.insert("poly".into(), to_value(&polys[j].to_json()));
                    if let Some(nu) = args.nu {
                        body.insert("rho".into(), to_value(&Int(polys[j].eval(nu))));
                    }
                }
                None => {
                    body.insert("polys".into(), json!(polys_json(&polys)));
                }
            }
            if let Some(nu) = args.nu.filter(|&n| n >= 0) {
                body.insert("nu".into(), json!(nu));
                body.insert("lengths".into(), to_value(&ints(&table.lengths(nu)?)));
            }
            Ok((0, Value::Object(body)))
        }
        "hilbert" => {
            datum.require_certificate()?;
            let polys = KoszulTable::new(datum).hilbert_polys(smp)?;
            let weighted: Vec<(i128, &HilbertPoly)> = polys
                .iter()
                .enumerate()
                .map(|(j, p)| (if j % 2 == 0 { 1 } else { -1 }, p))
                .collect();
            let alt = HilbertPoly::linear_combination(&weighted);
            let br = br_multiplicity(datum, smp)?;
            let mut body = json!({
                "koszul_polys": polys_json(&polys),
                "alternating_poly": alt.to_json(),
                "br_poly": br.br_poly.to_json(),
            });
            if datum.g() == 1 {
                let (e, p) = hilbert_samuel_multiplicity(datum.base(), &datum.phi()[0], smp)?;
                body["hilbert_samuel"] = json!({ "e": Int(e), "poly": p.to_json() });
            }
            Ok((0, body))
        }
        "complex" => {
            let nu = require_nu(args, command)?;
            Ok((0, complex_json(&assemble_b(datum, nu)?)))
        }
        "grade" => {
            let r = grade_report(datum)?;
            Ok((pass_code(r.all_pass), to_value(&r)))
        }
        "verify" => {
            let range = nu_range(s, args)?;
            let oracle = args.oracle || s.option("oracle") == Some("true");
            let r = verify_identities(datum, range, smp, oracle)?;
            Ok((pass_code(r.all_pass), to_value(&r)))
        }
        "serre" => {
            if datum.g() != 1 {
                return Err(Error::InvalidInput("`serre` needs a 1-row matrix".into()));
            }
            if datum.l().rank() != 1 || !datum.l().relations().is_empty() {
                return Err(Error::InvalidInput("`serre` needs L = R".into()));
            }
            let r = verify_serre(datum.base(), &datum.phi()[0], smp)?;
            Ok((pass_code(r.all_pass), to_value(&r)))
        }
        "question" => {
            datum.require_certificate()?;
            let range = nu_range(s, args)?;
            let polys = KoszulTable::new(datum).hilbert_polys(smp)?;
            let rows = partial_sums(&polys, range);
            let all_positive = rows.iter().all(|r| r.all_positive);
            Ok((
                0,
                json!({
                    "nu_range": range,
                    "partial_sums": to_value(&rows),
                    "all_positive": all_positive,
                }),
            ))
        }
        other => Err(Error::UnknownCommand(other.to_string())),
    }
}

/// Runs one command on a parsed session.
pub fn run_command(session: &Session, command: &str, args: &CommandArgs) -> Outcome {
    match dispatch(session, command, args) {
        Ok((exit_code, body)) => Outcome {
            exit_code,
            report: envelope(command, body),
        },
        Err(e) => error_outcome(command, &e),
    }
}

/// Parses `text` and runs `command`; parse failures become error reports.
pub fn run_text(text: &str, command: &str, args: &CommandArgs) -> Outcome {
    if !COMMANDS.contains(&command) {
        return error_outcome(command, &Error::UnknownCommand(command.to_string()));
    }
    match Session::parse(text) {
        Ok(s) => run_command(&s, command, args),
        Err(e) => error_outcome(command, &e),
    }
}
