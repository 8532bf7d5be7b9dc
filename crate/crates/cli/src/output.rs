//! Output records and their JSON/CSV encodings.
//!
//! JSON is one pretty-printed [`OutputRecord`]. CSV starts with a `#` comment
//! line carrying the schema version and command, followed by a header row
//! and one row per result. Floats use the shortest representation that
//! round-trips in both formats.

use std::io::Write;

use lemni_core::{ClassSpec, RadiusResult, TargetSpec, VerificationReport};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::args::Format;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord<T> {
    pub schema_version: String,
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Vec<T>,
}

impl<T> OutputRecord<T> {
    pub fn new(command: &str, inputs: Map<String, Value>, results: Vec<T>) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs,
            results,
        }
    }
}

/// One boundary point emitted by `region`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointRow {
    pub curve: String,
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

/// One grid point of `sweep`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub param: String,
    pub param_value: f64,
    pub radius: f64,
    pub formula_id: String,
    pub clamped: bool,
}

/// Flat view of a class and target for CSV columns.
#[derive(Debug, Clone, PartialEq)]
struct ClassColumns {
    class: &'static str,
    n: u32,
    alpha: Option<f64>,
    a: Option<f64>,
    b: Option<f64>,
    target: &'static str,
    beta: Option<f64>,
}

impl ClassColumns {
    fn new(class: &ClassSpec, target: &TargetSpec) -> Self {
        let (mut alpha, mut a, mut b) = (None, None, None);
        match *class {
            ClassSpec::CloseToStarlike { alpha: al, .. } => alpha = Some(al),
            ClassSpec::Janowski { a: aa, b: bb, .. } => {
                a = Some(aa);
                b = Some(bb);
            }
            _ => {}
        }
        let beta = match *target {
            TargetSpec::M { beta } => Some(beta),
            TargetSpec::Sl => None,
        };
        ClassColumns {
            class: class.name(),
            n: class.n(),
            alpha,
            a,
            b,
            target: target.name(),
            beta,
        }
    }
}

#[derive(Serialize)]
struct RadiusCsv {
    formula_id: &'static str,
    value: f64,
    sharp: bool,
    clamped: bool,
    class: &'static str,
    n: u32,
    alpha: Option<f64>,
    #[serde(rename = "A")]
    a: Option<f64>,
    #[serde(rename = "B")]
    b: Option<f64>,
    target: &'static str,
    beta: Option<f64>,
}

#[derive(Serialize)]
struct VerifyCsv<'a> {
    formula_id: &'static str,
    class: &'static str,
    n: u32,
    alpha: Option<f64>,
    #[serde(rename = "A")]
    a: Option<f64>,
    #[serde(rename = "B")]
    b: Option<f64>,
    target: &'static str,
    beta: Option<f64>,
    closed_form: f64,
    empirical: f64,
    abs_gap: f64,
    sharpness_residual: f64,
    sharp: bool,
    clamped: bool,
    passed: bool,
    samples: usize,
    tolerance: f64,
    printed_value: Option<f64>,
    printed_gap: Option<f64>,
    note: Option<&'a str>,
}

/// Anything `emit` can write in both formats.
pub trait CsvRows {
    fn write_rows<W: Write>(rows: &[Self], out: &mut csv::Writer<W>) -> csv::Result<()>
    where
        Self: Sized;
}

impl CsvRows for RadiusResult {
    fn write_rows<W: Write>(rows: &[Self], out: &mut csv::Writer<W>) -> csv::Result<()> {
        for r in rows {
            let p = ClassColumns::new(&r.class, &r.target);
            out.serialize(RadiusCsv {
                formula_id: r.formula_id.as_str(),
                value: r.value,
                sharp: r.sharp,
                clamped: r.clamped,
                class: p.class,
                n: p.n,
                alpha: p.alpha,
                a: p.a,
                b: p.b,
                target: p.target,
                beta: p.beta,
            })?;
        }
        Ok(())
    }
}

impl CsvRows for VerificationReport {
    fn write_rows<W: Write>(rows: &[Self], out: &mut csv::Writer<W>) -> csv::Result<()> {
        for r in rows {
            let p = ClassColumns::new(&r.class, &r.target);
            out.serialize(VerifyCsv {
                formula_id: r.formula_id.as_str(),
                class: p.class,
                n: p.n,
                alpha: p.alpha,
                a: p.a,
                b: p.b,
                target: p.target,
                beta: p.beta,
                closed_form: r.closed_form,
                empirical: r.empirical,
                abs_gap: r.abs_gap,
                sharpness_residual: r.sharpness_residual,
                sharp: r.sharp,
                clamped: r.clamped,
                passed: r.passed,
                samples: r.samples,
                tolerance: r.tolerance,
                printed_value: r.printed_value,
                printed_gap: r.printed_gap,
                note: r.note.as_deref(),
            })?;
        }
        Ok(())
    }
}

impl CsvRows for PointRow {
    fn write_rows<W: Write>(rows: &[Self], out: &mut csv::Writer<W>) -> csv::Result<()> {
        rows.iter().try_for_each(|r| out.serialize(r))
    }
}

impl CsvRows for SweepRow {
    fn write_rows<W: Write>(rows: &[Self], out: &mut csv::Writer<W>) -> csv::Result<()> {
        rows.iter().try_for_each(|r| out.serialize(r))
    }
}

pub fn emit<T, W>(record: &OutputRecord<T>, format: Format, out: &mut W) -> std::io::Result<()>
where
    T: Serialize + CsvRows,
    W: Write + ?Sized,
{
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, record)?;
            writeln!(out)
        }
        Format::Csv => {
            writeln!(
                out,
                "# schema_version={} command={}",
                record.schema_version, record.command
            )?;
            let mut w = csv::Writer::from_writer(&mut *out);
            T::write_rows(&record.results, &mut w)?;
            w.flush()
        }
    }
}
