//! JSON packing files.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "chart": "s3",
//!   "balls": [
//!     {"center": [w, x, y, z], "radius_rad": r}
//!   ],
//!   "labels": ["L0:R"]
//! }
//! ```
//!
//! R³ records use `{"center": [x, y, z], "radius": r}`. `labels` is optional.
//! Numbers are written with 17 significant digits, so a save/load cycle
//! reproduces every double exactly.

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::geom::{EuclideanBall, Point4, SphericalBall};
use crate::packing::{Balls, Packing};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    format_version: u32,
    chart: String,
    balls: Vec<RawBall>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBall {
    center: Vec<f64>,
    #[serde(default)]
    radius_rad: Option<f64>,
    #[serde(default)]
    radius: Option<f64>,
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// Serializes a packing in the documented format.
pub fn packing_to_string(packing: &Packing) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{{");
    let _ = writeln!(out, "  \"format_version\": {FORMAT_VERSION},");
    let _ = writeln!(out, "  \"chart\": \"{}\",", packing.chart().name());
    let _ = writeln!(out, "  \"balls\": [");
    let records: Vec<String> = match packing.balls() {
        Balls::S3(balls) => balls
            .iter()
            .map(|b| {
                let c = b.center().coords();
                format!(
                    "    {{\"center\": [{}, {}, {}, {}], \"radius_rad\": {}}}",
                    num(c[0]),
                    num(c[1]),
                    num(c[2]),
                    num(c[3]),
                    num(b.radius())
                )
            })
            .collect(),
        Balls::R3(balls) => balls
            .iter()
            .map(|b| {
                let c = b.center();
                format!(
                    "    {{\"center\": [{}, {}, {}], \"radius\": {}}}",
                    num(c[0]),
                    num(c[1]),
                    num(c[2]),
                    num(b.radius())
                )
            })
            .collect(),
    };
    out.push_str(&records.join(",\n"));
    if !records.is_empty() {
        out.push('\n');
    }
    match packing.labels() {
        Some(labels) => {
            let _ = writeln!(out, "  ],");
            let quoted: Vec<String> = labels.iter().map(|l| json_string(l)).collect();
            let _ = writeln!(out, "  \"labels\": [{}]", quoted.join(", "));
        }
        None => {
            let _ = writeln!(out, "  ]");
        }
    }
    out.push_str("}\n");
    out
}

/// Parses a packing file. Structural problems carry line and column;
/// invalid balls name the offending record.
pub fn packing_from_str(text: &str) -> Result<Packing> {
    let raw: RawFile = serde_json::from_str(text)?;
    if raw.format_version != FORMAT_VERSION {
        return Err(Error::InvariantViolation(format!(
            "format_version {} is not supported (expected {FORMAT_VERSION})",
            raw.format_version
        )));
    }
    let field_err = |i: usize, msg: String| Error::InvariantViolation(format!("balls[{i}]: {msg}"));
    let packing =
        match raw.chart.as_str() {
            "s3" => {
                let mut balls = Vec::with_capacity(raw.balls.len());
                for (i, b) in raw.balls.iter().enumerate() {
                    let coords: [f64; 4] =
                        b.center.as_slice().try_into().map_err(|_| {
                            field_err(i, format!("center has {} coordinates, expected 4", b.center.len()))
                        })?;
                    if b.radius.is_some() {
                        return Err(field_err(i, "s3 records use radius_rad, not radius".into()));
                    }
                    let r = b
                        .radius_rad
                        .ok_or_else(|| field_err(i, "missing field radius_rad".into()))?;
                    let center = Point4::new(coords).map_err(|e| field_err(i, format!("center: {e}")))?;
                    balls.push(SphericalBall::new(center, r).map_err(|e| field_err(i, format!("radius_rad: {e}")))?);
                }
                Packing::s3(balls)
            }
            "r3" => {
                let mut balls = Vec::with_capacity(raw.balls.len());
                for (i, b) in raw.balls.iter().enumerate() {
                    let center: [f64; 3] =
                        b.center.as_slice().try_into().map_err(|_| {
                            field_err(i, format!("center has {} coordinates, expected 3", b.center.len()))
                        })?;
                    if b.radius_rad.is_some() {
                        return Err(field_err(i, "r3 records use radius, not radius_rad".into()));
                    }
                    let r = b.radius.ok_or_else(|| field_err(i, "missing field radius".into()))?;
                    balls.push(EuclideanBall::new(center, r).map_err(|e| field_err(i, format!("radius: {e}")))?);
                }
                Packing::r3(balls)
            }
            other => return Err(Error::UnsupportedChart(other.to_string())),
        };
    match raw.labels {
        Some(labels) => {
            if labels.len() != packing.len() {
                return Err(Error::InvariantViolation(format!(
                    "{} labels for {} balls",
                    labels.len(),
                    packing.len()
                )));
            }
            packing.with_labels(labels)
        }
        None => Ok(packing),
    }
}

pub fn save_packing(packing: &Packing, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, packing_to_string(packing))?;
    Ok(())
}

pub fn load_packing(path: impl AsRef<Path>) -> Result<Packing> {
    let text = std::fs::read_to_string(path)?;
    packing_from_str(&text)
}
