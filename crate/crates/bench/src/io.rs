//! CSV profiles, the shock-state table and the landmark table.
//!
//! Floats are written with `{}`, which is the shortest representation that
//! parses back to the same `f64`.

use std::io::{BufRead, BufReader, Read, Write};

use urel_core::selfsim::ShockState;
use urel_core::state::{four_velocity, to_conserved, ConservedPair, PrimitiveState};

use crate::error::{BenchError, Result};

pub const CSV_MAGIC: &str = "# urel-euler v1";
pub const CSV_COLUMNS: [&str; 6] = ["t", "x", "p", "v", "a", "b"];
pub const SHOCK_COLUMNS: [&str; 6] = ["theta_tilde", "s_tilde", "p_minus", "v_minus", "p_plus", "v_plus"];

/// One sample of a radial profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Row {
    pub t: f64,
    pub x: f64,
    pub p: f64,
    pub v: f64,
    pub a: f64,
    pub b: f64,
}

impl Row {
    pub fn from_conserved(t: f64, x: f64, w: ConservedPair) -> Result<Self> {
        let q = w.to_primitive().map_err(BenchError::solver(format!("state at t = {t}, x = {x}")))?;
        Ok(Row { t, x, p: q.p, v: q.velocity(), a: w.a, b: w.b })
    }

    pub fn from_primitive(t: f64, x: f64, p: f64, v: f64) -> Result<Self> {
        let ctx = || format!("state at t = {t}, x = {x}");
        let u = four_velocity(v).map_err(BenchError::solver(ctx()))?;
        let w = to_conserved(PrimitiveState::new(p, u).map_err(BenchError::solver(ctx()))?);
        Ok(Row { t, x, p, v, a: w.a, b: w.b })
    }

    fn fields(&self) -> [f64; 6] {
        [self.t, self.x, self.p, self.v, self.a, self.b]
    }
}

fn write_magic<W: Write>(out: &mut W) -> Result<()> {
    writeln!(out, "{CSV_MAGIC}").map_err(BenchError::io("<output>"))
}

fn read_magic<R: Read>(input: R) -> Result<BufReader<R>> {
    let mut reader = BufReader::new(input);
    let mut first = String::new();
    reader.read_line(&mut first).map_err(BenchError::io("<input>"))?;
    if first.trim_end() != CSV_MAGIC {
        return Err(BenchError::Format(format!("expected `{CSV_MAGIC}`, found `{}`", first.trim_end())));
    }
    Ok(reader)
}

fn write_table<W: Write>(mut out: W, columns: &[&str], rows: impl Iterator<Item = Vec<f64>>) -> Result<()> {
    write_magic(&mut out)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(columns)?;
    for row in rows {
        w.write_record(row.iter().map(|x| format!("{x}")))?;
    }
    w.flush().map_err(BenchError::io("<output>"))?;
    Ok(())
}

fn read_table<R: Read>(input: R, columns: &[&str]) -> Result<Vec<Vec<f64>>> {
    let mut r = csv::Reader::from_reader(read_magic(input)?);
    let header = r.headers()?.clone();
    if header.iter().ne(columns.iter().copied()) {
        return Err(BenchError::Format(format!("unexpected columns {header:?}")));
    }
    let mut out = Vec::new();
    for record in r.records() {
        let record = record?;
        let row = record
            .iter()
            .map(|s| s.parse::<f64>().map_err(|e| BenchError::Format(format!("`{s}`: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        out.push(row);
    }
    Ok(out)
}

pub fn write_rows<W: Write>(out: W, rows: &[Row]) -> Result<()> {
    write_table(out, &CSV_COLUMNS, rows.iter().map(|r| r.fields().to_vec()))
}

pub fn read_rows<R: Read>(input: R) -> Result<Vec<Row>> {
    Ok(read_table(input, &CSV_COLUMNS)?
        .into_iter()
        .map(|f| Row { t: f[0], x: f[1], p: f[2], v: f[3], a: f[4], b: f[5] })
        .collect())
}

pub fn write_shock<W: Write>(out: W, s: &ShockState) -> Result<()> {
    let row = vec![s.theta_tilde, s.s_tilde, s.p_minus, s.v_minus, s.p_plus, s.v_plus];
    write_table(out, &SHOCK_COLUMNS, std::iter::once(row))
}

/// Shock table as `(column, value)` pairs.
pub fn read_shock<R: Read>(input: R) -> Result<Vec<(&'static str, f64)>> {
    let rows = read_table(input, &SHOCK_COLUMNS)?;
    let [row] = rows.as_slice() else {
        return Err(BenchError::Format(format!("expected one shock row, found {}", rows.len())));
    };
    Ok(SHOCK_COLUMNS.iter().copied().zip(row.iter().copied()).collect())
}

/// Expected value with its tolerance and source.
#[derive(Debug, Clone, PartialEq)]
pub struct Landmark {
    pub case: u32,
    pub d: u32,
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub provenance: String,
}

impl Landmark {
    pub fn accepts(&self, measured: f64) -> bool {
        (measured - self.value).abs() <= self.tolerance
    }
}

const LANDMARK_COLUMNS: [&str; 6] = ["case", "d", "name", "value", "tolerance", "provenance"];
const EMBEDDED_LANDMARKS: &str = include_str!("../data/landmarks.csv");

pub fn read_landmarks<R: Read>(input: R) -> Result<Vec<Landmark>> {
    let mut r = csv::Reader::from_reader(input);
    if r.headers()?.iter().ne(LANDMARK_COLUMNS) {
        return Err(BenchError::Format("unexpected landmark columns".into()));
    }
    let num = |s: &str| s.parse::<f64>().map_err(|e| BenchError::Format(format!("`{s}`: {e}")));
    let int = |s: &str| s.parse::<u32>().map_err(|e| BenchError::Format(format!("`{s}`: {e}")));
    let mut out = Vec::new();
    for record in r.records() {
        let f = record?;
        out.push(Landmark {
            case: int(&f[0])?,
            d: int(&f[1])?,
            name: f[2].to_string(),
            value: num(&f[3])?,
            tolerance: num(&f[4])?,
            provenance: f[5].to_string(),
        });
    }
    Ok(out)
}

pub fn write_landmarks<W: Write>(out: W, landmarks: &[Landmark]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(LANDMARK_COLUMNS)?;
    for l in landmarks {
        w.write_record([
            l.case.to_string(),
            l.d.to_string(),
            l.name.clone(),
            format!("{}", l.value),
            format!("{:e}", l.tolerance),
            l.provenance.clone(),
        ])?;
    }
    w.flush().map_err(BenchError::io("<output>"))?;
    Ok(())
}

/// The golden table shipped with the crate.
pub fn embedded_landmarks() -> Vec<Landmark> {
    read_landmarks(EMBEDDED_LANDMARKS.as_bytes()).expect("embedded landmark table is well formed")
}
