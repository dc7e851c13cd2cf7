//! Command dispatch: field selection, budget guard, worker pool and output.

use std::collections::BTreeMap;
use std::io::Read;

use rayon::prelude::*;
use serde_json::{json, Map, Value};
use ternion_core::grassmann::{plucker_of_rows, rows_from_json, TripleIndex};
use ternion_core::linalg::projective_count;
use ternion_core::tmodule::enumerate_pairs;
use ternion_core::variety::planes::{
    dual_surface_points, plane_family, segre_points, tube_points, twisted_cubic_points,
};
use ternion_core::variety::{enumerate_variety_points, free_submodule_images, submodule_image, LABELS};
use ternion_core::{
    ClassFilter, Error, ExactField, FieldSpec, PairClass, PrimeField, RationalField, RestrictedPoint, Scalar,
    Subspace3, TernionPair,
};

use crate::config::{Cli, Command, Format, Object, Suite};
use crate::report::Report;
use crate::suites;

/// Exit status: success.
pub const EXIT_OK: u8 = 0;
/// Exit status: a verification assertion or a mathematical precondition failed.
pub const EXIT_FAILURE: u8 = 1;
/// Exit status: malformed input or an unsupported configuration.
pub const EXIT_USAGE: u8 = 2;

/// What a run prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn usage(message: impl Into<String>) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {}\n", message.into()), code: EXIT_USAGE }
    }
}

enum Failure {
    Usage(String),
    Math(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::FieldMismatch { .. }
            | Error::NotPrime(_)
            | Error::InfiniteField(_)
            | Error::InvalidParams(_) => Failure::Usage(e.to_string()),
            other => Failure::Math(other),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Run<T> = std::result::Result<T, Failure>;

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    let pool = match cli.workers {
        Some(0) => return Outcome::usage("--workers must be at least 1"),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => Some(pool),
            Err(e) => return Outcome::usage(e.to_string()),
        },
        None => None,
    };
    let go = || match cli.field {
        FieldSpec::Prime(p) => match PrimeField::new(u64::from(p)) {
            Ok(f) => dispatch(cli, &f),
            Err(e) => Err(Failure::Usage(e.to_string())),
        },
        FieldSpec::Rational => dispatch(cli, &RationalField),
    };
    let result = match &pool {
        Some(pool) => pool.install(go),
        None => go(),
    };
    match result {
        Ok(outcome) => outcome,
        Err(Failure::Usage(m)) => Outcome::usage(m),
        Err(Failure::Math(e)) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: EXIT_FAILURE },
    }
}

fn dispatch<F: ExactField>(cli: &Cli, field: &F) -> Run<Outcome> {
    match &cli.command {
        Command::Enumerate { object } => enumerate(cli, field, *object),
        Command::Verify { suite } => verify(cli, field, *suite),
        Command::Classify { pair } => classify(cli, field, &read_input(pair)?),
        Command::Plucker { matrix } => plucker(cli, field, &read_input(matrix)?),
    }
}

fn read_input(arg: &str) -> Run<Value> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        s
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {path}: {e}")))?
    } else {
        arg.to_string()
    };
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("invalid JSON: {e}")))
}

/// Order of the field, or a usage error for the rationals.
fn finite_order<F: ExactField>(field: &F, what: &str) -> Run<u64> {
    field
        .order()
        .ok_or_else(|| Failure::Usage(format!("{what} needs a finite field; got {}", field.spec())))
}

fn pow(q: u64, n: u32) -> u64 {
    q.checked_pow(n).unwrap_or(u64::MAX)
}

/// Candidates scanned by an enumeration.
pub fn enumerate_cost(q: u64, object: Object) -> u64 {
    let line = q.saturating_add(1);
    let plane = projective_count(q, 3);
    match object {
        Object::Variety => projective_count(q, 8),
        Object::XImage | Object::YImage | Object::Submodules => pow(q, 6),
        Object::Segre => plane.saturating_mul(line),
        Object::Cubic => line,
        Object::Tube => line.saturating_mul(line),
        Object::DualSurface => line.saturating_mul(q.saturating_mul(q)),
        Object::Planes => line.saturating_mul(plane),
    }
}

/// Candidates scanned by a suite; `all` costs its most expensive member.
pub fn suite_cost(q: u64, suite: Suite) -> u64 {
    let points = projective_count(q, 8);
    match suite {
        Suite::Theorem | Suite::Counts => points.max(pow(q, 6)),
        Suite::Lemma1 | Suite::Roundtrip | Suite::Substructures => points,
        Suite::Smooth => points.max(pow(q, 6)),
        Suite::Unimodular => pow(q, 12),
        Suite::Invertibility => pow(q, 12),
        Suite::All => Suite::EACH.iter().map(|&s| suite_cost(q, s)).max().unwrap_or(0),
    }
}

fn guard(cli: &Cli, cost: u64) -> Run<()> {
    if cost > cli.max_candidates {
        return Err(Failure::Usage(format!(
            "scan needs {cost} candidates, above --max-candidates {}",
            cli.max_candidates
        )));
    }
    Ok(())
}

fn enumerate<F: ExactField>(cli: &Cli, field: &F, object: Object) -> Run<Outcome> {
    let q = finite_order(field, "enumerate")?;
    guard(cli, enumerate_cost(q, object))?;
    let header = |count: usize| {
        let mut m = Map::new();
        m.insert("command".into(), json!("enumerate"));
        m.insert("object".into(), json!(object.name()));
        m.insert("field".into(), json!(field.spec().to_string()));
        m.insert("count".into(), json!(count));
        m
    };
    let points = match object {
        Object::Variety => enumerate_variety_points(field)?,
        Object::XImage => free_submodule_images(field, ClassFilter::X)?,
        Object::YImage => free_submodule_images(field, ClassFilter::Y)?,
        Object::Segre => segre_points(field)?,
        Object::Cubic => twisted_cubic_points(field)?,
        Object::Tube => tube_points(field)?,
        Object::DualSurface => dual_surface_points(field)?,
        Object::Planes => return enumerate_planes(cli, field, header),
        Object::Submodules => return enumerate_submodules(cli, field, header),
    };
    let stdout = match cli.format {
        Format::Json => {
            let mut m = header(points.len());
            m.insert("points".into(), Value::Array(points.iter().map(RestrictedPoint::to_json).collect()));
            json_text(&Value::Object(m))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(LABELS)?;
            for p in &points {
                w.write_record(p.0.iter().map(ToString::to_string))?;
            }
            csv_text(w)
        }
        Format::Text => {
            let mut s = format!("{} over {}: {} points\n", object.name(), field.spec(), points.len());
            for p in &points {
                s.push_str(&format!("{p}\n"));
            }
            s
        }
    };
    Ok(Outcome::ok(stdout))
}

fn enumerate_planes<F: ExactField>(
    cli: &Cli,
    field: &F,
    header: impl Fn(usize) -> Map<String, Value>,
) -> Run<Outcome> {
    let planes = plane_family(field)?;
    let stdout = match cli.format {
        Format::Json => {
            let rows = planes
                .iter()
                .map(|g| {
                    let [q1, q2, r] = g.spanning_points();
                    Ok(json!({
                        "u": g.u.to_string(),
                        "v": g.v.to_string(),
                        "dim": g.vector_dim(),
                        "q1": q1.to_json(),
                        "q2": q2.to_json(),
                        "r": r.to_json(),
                        "points": g.points()?.len(),
                    }))
                })
                .collect::<Run<Vec<_>>>()?;
            let mut m = header(planes.len());
            m.insert("planes".into(), Value::Array(rows));
            json_text(&Value::Object(m))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["u", "v", "vector"].into_iter().chain(LABELS))?;
            for g in &planes {
                for (name, p) in ["q1", "q2", "r"].into_iter().zip(g.spanning_points()) {
                    let head = [g.u.to_string(), g.v.to_string(), name.to_string()];
                    w.write_record(head.into_iter().chain(p.0.iter().map(ToString::to_string)))?;
                }
            }
            csv_text(w)
        }
        Format::Text => {
            let mut s = format!("planes over {}: {}\n", field.spec(), planes.len());
            for g in &planes {
                let [q1, q2, r] = g.spanning_points();
                s.push_str(&format!("({} : {}) dim={} q1={q1} q2={q2} r={r}\n", g.u, g.v, g.vector_dim()));
            }
            s
        }
    };
    Ok(Outcome::ok(stdout))
}

fn enumerate_submodules<F: ExactField>(
    cli: &Cli,
    field: &F,
    header: impl Fn(usize) -> Map<String, Value>,
) -> Run<Outcome> {
    let pairs = enumerate_pairs(field)?;
    let found: Vec<(Subspace3<F::Elem>, PairClass)> = pairs
        .par_iter()
        .filter_map(|p| match p.classify() {
            PairClass::NonFree(_) => None,
            class => Some((p.cyclic_submodule(), class)),
        })
        .collect();
    let subs: BTreeMap<_, _> = found.into_iter().collect();
    let rows = subs
        .iter()
        .map(|(s, c)| Ok((s, c, submodule_image(s)?)))
        .collect::<Run<Vec<_>>>()?;
    let basis_text = |s: &Subspace3<F::Elem>| {
        s.basis()
            .iter()
            .map(|v| v.0.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
    };
    let stdout = match cli.format {
        Format::Json => {
            let items = rows
                .iter()
                .map(|(s, c, p)| {
                    let mut v = s.to_json();
                    let m = v.as_object_mut().expect("object");
                    m.insert("class".into(), json!(c.to_string()));
                    m.insert("point".into(), p.to_json());
                    v
                })
                .collect();
            let mut m = header(rows.len());
            m.insert("submodules".into(), Value::Array(items));
            json_text(&Value::Object(m))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["class", "row1", "row2", "row3"].into_iter().chain(LABELS))?;
            for (s, c, p) in &rows {
                let head = std::iter::once(c.to_string()).chain(basis_text(s));
                w.write_record(head.chain(p.0.iter().map(ToString::to_string)))?;
            }
            csv_text(w)
        }
        Format::Text => {
            let mut s = format!("free cyclic submodules over {}: {}\n", field.spec(), rows.len());
            for (sub, c, p) in &rows {
                s.push_str(&format!("{c} [{}] {p}\n", basis_text(sub).join("; ")));
            }
            s
        }
    };
    Ok(Outcome::ok(stdout))
}

/// Runs one suite, or every suite for `all`, returning `(suite, assertions)`.
fn run_suites<F: ExactField>(cli: &Cli, field: &F, suite: Suite) -> Run<Report> {
    let selected: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    let mut assertions = Vec::new();
    for s in selected {
        let found = match (s, field.order()) {
            (Suite::Smooth, None) => suites::smooth_sampled(field, cli.seed)?,
            (_, None) => {
                return Err(Failure::Usage(format!(
                    "suite `{}` is exhaustive and needs a finite field; only `smooth` samples over the rationals",
                    s.name()
                )))
            }
            (Suite::Theorem, _) => suites::theorem(field)?,
            (Suite::Lemma1, _) => suites::lemma1(field)?,
            (Suite::Smooth, _) => suites::smooth_exhaustive(field)?,
            (Suite::Unimodular, _) => suites::unimodular(field)?,
            (Suite::Invertibility, _) => suites::invertibility(field)?,
            (Suite::Roundtrip, _) => suites::roundtrip(field)?,
            (Suite::Substructures, _) => suites::substructures(field)?,
            (Suite::Counts, _) => suites::counts(field)?,
            (Suite::All, _) => unreachable!("expanded above"),
        };
        assertions.extend(found.into_iter().map(|a| (s.name().to_string(), a)));
    }
    Ok(Report { suite: suite.name().to_string(), field: field.spec().to_string(), assertions })
}

fn verify<F: ExactField>(cli: &Cli, field: &F, suite: Suite) -> Run<Outcome> {
    if let Some(q) = field.order() {
        guard(cli, suite_cost(q, suite))?;
    }
    let report = run_suites(cli, field, suite)?;
    let stdout = match cli.format {
        Format::Json => json_text(&report.to_json()),
        Format::Csv => report.to_csv()?,
        Format::Text => report.to_text(),
    };
    let code = if report.passed() { EXIT_OK } else { EXIT_FAILURE };
    Ok(Outcome { stdout, stderr: String::new(), code })
}

fn classify<F: ExactField>(cli: &Cli, field: &F, input: &Value) -> Run<Outcome> {
    let pair = TernionPair::from_json(input, field)?;
    let class = pair.classify();
    let point = match class {
        PairClass::NonFree(_) => None,
        _ => Some(submodule_image(&pair.cyclic_submodule())?),
    };
    let stdout = match cli.format {
        Format::Json => {
            let mut m = Map::new();
            m.insert("command".into(), json!("classify"));
            m.insert("field".into(), json!(field.spec().to_string()));
            m.insert("pair".into(), pair.to_json());
            m.insert("class".into(), json!(class.to_string()));
            m.insert("dim".into(), json!(pair.cyclic_submodule().dim()));
            m.insert("point".into(), point.as_ref().map_or(Value::Null, RestrictedPoint::to_json));
            json_text(&Value::Object(m))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(std::iter::once("class").chain(LABELS))?;
            let coords: Vec<String> = match &point {
                Some(p) => p.0.iter().map(ToString::to_string).collect(),
                None => vec![String::new(); 8],
            };
            w.write_record(std::iter::once(class.to_string()).chain(coords))?;
            csv_text(w)
        }
        Format::Text => match &point {
            Some(p) => format!("{class} {p}\n"),
            None => format!("{class}\n"),
        },
    };
    Ok(Outcome::ok(stdout))
}

fn plucker<F: ExactField>(cli: &Cli, field: &F, input: &Value) -> Run<Outcome> {
    let rows = rows_from_json(input, field)?;
    if rows.len() != 3 {
        return Err(Failure::Usage(format!("expected 3 rows, got {}", rows.len())));
    }
    let p = match plucker_of_rows(&rows) {
        Ok(p) => p.normalize()?,
        Err(Error::Rank(r)) => {
            let stdout = match cli.format {
                Format::Json => json_text(&json!({ "command": "plucker", "error": "rank", "rank": r, "required": 3 })),
                Format::Csv => format!("error,rank,required\nrank,{r},3\n"),
                Format::Text => format!("rank {r} < 3\n"),
            };
            return Ok(Outcome { stdout, stderr: String::new(), code: EXIT_FAILURE });
        }
        Err(e) => return Err(e.into()),
    };
    let labels: Vec<String> = (0..20)
        .map(|i| TripleIndex::from_position(i).expect("20 positions").label())
        .collect();
    let stdout = match cli.format {
        Format::Json => json_text(&json!({
            "command": "plucker",
            "field": field.spec().to_string(),
            "labels": labels,
            "plucker": p.to_json(),
        })),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&labels)?;
            w.write_record(p.0.iter().map(ToString::to_string))?;
            csv_text(w)
        }
        Format::Text => {
            let nonzero: Vec<String> = labels
                .iter()
                .zip(&p.0)
                .filter(|(_, x)| !x.is_zero())
                .map(|(l, x)| format!("{l}={x}"))
                .collect();
            format!("{p}\nnonzero: {}\n", nonzero.join(" "))
        }
    };
    Ok(Outcome::ok(stdout))
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_text(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}
