//! Output documents. Field order in the JSON follows struct order, numeric
//! values are rounded to 15 significant digits, and nothing time-dependent
//! is written unless explicitly requested, so identical inputs give
//! byte-identical JSON and CSV.

use serde::Serialize;

use rt_lens_core::invariant::SignatureCount;
use rt_lens_core::verify::Check;
use rt_lens_core::{CycNum, RootOfUnitySpec};

use crate::CliResult;

/// `x` rounded to 15 significant digits, with `-0` folded into `0`.
pub fn round15(x: f64) -> f64 {
    let r: f64 = format!("{x:.14e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn fmt15(x: f64) -> String {
    format!("{:.14e}", round15(x))
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    /// Numeric value of `x`; the imaginary part is exactly zero for real `x`.
    pub fn of(x: &CycNum, at: &RootOfUnitySpec) -> CliResult<Self> {
        let (re, im) = x.embed(at)?;
        let im = if x.is_real() { 0.0 } else { im };
        Ok(Self { re: round15(re), im: round15(im) })
    }

    pub fn text(&self) -> String {
        if self.im == 0.0 {
            fmt15(self.re)
        } else if self.im < 0.0 {
            format!("{} - {} i", fmt15(self.re), fmt15(-self.im))
        } else {
            format!("{} + {} i", fmt15(self.re), fmt15(self.im))
        }
    }
}

/// Exact value with its numeric embedding alongside.
#[derive(Debug, Clone, Serialize)]
pub struct Value {
    pub exact: CycNum,
    pub numeric: Complex,
}

impl Value {
    pub fn new(x: &CycNum, at: &RootOfUnitySpec) -> CliResult<Self> {
        Ok(Self { exact: x.clone(), numeric: Complex::of(x, at)? })
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Lens {
    pub m: i64,
    pub n: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Header {
    pub schema: &'static str,
    pub algebra: String,
    pub order: u32,
    pub embedding: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantDoc {
    #[serde(flatten)]
    pub header: Header,
    pub strategy: String,
    pub lens: Lens,
    pub hj_terms: Vec<i64>,
    pub sign: SignatureCount,
    pub sigma: Value,
    pub f: Value,
    pub nabla: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub m: i64,
    pub n: i64,
    pub hj_terms: Vec<i64>,
    pub strategy: String,
    pub f: Option<Value>,
    pub nabla: Option<Value>,
    /// `h_0^{(s)}`, written only when `F` itself is undefined.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h0: Option<Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableDoc {
    #[serde(flatten)]
    pub header: Header,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degenerate: Option<String>,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GaussDoc {
    #[serde(flatten)]
    pub header: Header,
    pub k: i64,
    pub closed: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyDoc {
    #[serde(flatten)]
    pub header: Header,
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

pub const CSV_HEADER: [&str; 7] = ["m", "n", "hj_terms", "f_real", "f_imag", "nabla", "exact_f_json"];

pub fn csv_row(row: &TableRow) -> CliResult<[String; 7]> {
    let terms = row.hj_terms.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ");
    let (re, im, nabla, exact) = match (&row.f, &row.nabla) {
        (Some(f), Some(nb)) => {
            (fmt15(f.numeric.re), fmt15(f.numeric.im), fmt15(nb.numeric.re), serde_json::to_string(&f.exact)?)
        }
        _ => (String::new(), String::new(), String::new(), "null".to_string()),
    };
    Ok([row.m.to_string(), row.n.to_string(), terms, re, im, nabla, exact])
}

pub fn write_csv<W: std::io::Write>(out: W, rows: &[TableRow]) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(csv_row(row)?)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: std::io::Write, T: Serialize>(mut out: W, doc: &T) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut out, doc)?;
    writeln!(out)?;
    Ok(())
}
