//! Serialization of sweep records. Everything here is a pure function of its
//! input so reruns produce byte-identical files.

use std::fmt::Write;

use hetsteer_core::{BlochVector, SteeringSample};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

pub const CSV_HEADER: &str = "r,phi,beta_re,beta_im,x1,x2,x3,density,raw_overlap,flag";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRecord {
    pub r: f64,
    pub phi: f64,
    pub beta_re: f64,
    pub beta_im: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub density: f64,
    pub raw_overlap: f64,
    pub flag: &'static str,
}

impl SweepRecord {
    pub fn new(r: f64, phi: f64, s: &SteeringSample<f64>) -> Self {
        Self {
            r,
            phi,
            beta_re: s.beta.re,
            beta_im: s.beta.im,
            x1: s.bloch.x1,
            x2: s.bloch.x2,
            x3: s.bloch.x3,
            density: s.density,
            raw_overlap: s.raw_overlap,
            flag: s.flag.as_str(),
        }
    }

    fn reals(&self) -> [f64; 9] {
        [
            self.r,
            self.phi,
            self.beta_re,
            self.beta_im,
            self.x1,
            self.x2,
            self.x3,
            self.density,
            self.raw_overlap,
        ]
    }
}

/// 17 significant digits, enough to round-trip an `f64`.
pub fn real(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_row(out: &mut String, prefix: &[String], rec: &SweepRecord) {
    for p in prefix {
        out.push_str(p);
        out.push(',');
    }
    for x in rec.reals() {
        out.push_str(&real(x));
        out.push(',');
    }
    out.push_str(rec.flag);
    out.push('\n');
}

pub fn csv(records: &[SweepRecord]) -> String {
    let mut out = String::with_capacity(200 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for rec in records {
        csv_row(&mut out, &[], rec);
    }
    out
}

/// Sweep records with per-row leading columns (e.g. the time of a trajectory).
pub fn csv_with_prefix(prefix_header: &[&str], rows: &[(Vec<String>, SweepRecord)]) -> String {
    let mut out = String::new();
    for h in prefix_header {
        out.push_str(h);
        out.push(',');
    }
    out.push_str(CSV_HEADER);
    out.push('\n');
    for (prefix, rec) in rows {
        csv_row(&mut out, prefix, rec);
    }
    out
}

#[derive(Serialize)]
struct Tagged<'a, C: Serialize, R: Serialize> {
    schema_version: u32,
    command: &'a str,
    config: &'a C,
    records: &'a [R],
}

pub fn json<C: Serialize, R: Serialize>(command: &str, config: &C, records: &[R]) -> serde_json::Result<String> {
    let mut s = serde_json::to_string_pretty(&Tagged {
        schema_version: SCHEMA_VERSION,
        command,
        config,
        records,
    })?;
    s.push('\n');
    Ok(s)
}

/// ASCII PLY point cloud; `flag` is 1 for ok samples and 0 for sentinels.
pub fn ply(points: &[(BlochVector<f64>, f64, bool)], comment: &str) -> String {
    let mut out = String::new();
    out.push_str("ply\nformat ascii 1.0\n");
    writeln!(out, "comment {comment}").unwrap();
    writeln!(out, "element vertex {}", points.len()).unwrap();
    for p in ["x", "y", "z", "density"] {
        writeln!(out, "property double {p}").unwrap();
    }
    out.push_str("property uchar flag\nend_header\n");
    for (x, density, ok) in points {
        writeln!(
            out,
            "{} {} {} {} {}",
            real(x.x1),
            real(x.x2),
            real(x.x3),
            real(*density),
            u8::from(*ok)
        )
        .unwrap();
    }
    out
}

pub fn ply_from_records(records: &[SweepRecord], comment: &str) -> String {
    let pts: Vec<_> = records
        .iter()
        .map(|r| (BlochVector::new(r.x1, r.x2, r.x3), r.density, r.flag == "ok"))
        .collect();
    ply(&pts, comment)
}
