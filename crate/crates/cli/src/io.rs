//! Input files and argument formats.
//!
//! Rationals may be written as JSON integers, decimal strings or `"p/q"`
//! strings. JSON floats are read through their shortest decimal text.

use std::path::Path;

use serde::Deserialize;
use serde_json::Value;
use trivol_core::rational::{parse_rational, to_fraction_string};
use trivol_core::{Box3Bounds, Point3, Rational};

use crate::CliError;

pub fn rational_from_json(v: &Value) -> Result<Rational, CliError> {
    match v {
        Value::Number(n) => Ok(parse_rational(&n.to_string())?),
        Value::String(s) => Ok(parse_rational(s)?),
        other => Err(CliError::Input(format!("expected a rational, found {other}"))),
    }
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(to_fraction_string(r))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// `a1,b1,a2,b2,a3,b3`
pub fn parse_bounds_arg(s: &str) -> Result<Box3Bounds, CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 6 {
        return Err(CliError::Input(format!("--bounds needs 6 values a1,b1,a2,b2,a3,b3, got {}", parts.len())));
    }
    let v: Vec<Rational> = parts.iter().map(|p| parse_rational(p)).collect::<Result<_, _>>()?;
    let a = [v[0].clone(), v[2].clone(), v[4].clone()];
    let b = [v[1].clone(), v[3].clone(), v[5].clone()];
    Ok(Box3Bounds::new(a, b)?)
}

/// `{"a": [r, r, r], "b": [r, r, r]}`
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoxSpecFile {
    pub a: [Value; 3],
    pub b: [Value; 3],
}

impl BoxSpecFile {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        read_json(path)
    }

    pub fn to_bounds(&self) -> Result<Box3Bounds, CliError> {
        let conv = |v: &[Value; 3]| -> Result<[Rational; 3], CliError> {
            Ok([rational_from_json(&v[0])?, rational_from_json(&v[1])?, rational_from_json(&v[2])?])
        };
        Ok(Box3Bounds::new(conv(&self.a)?, conv(&self.b)?)?)
    }
}

/// Per-parameter value lists; the grid is their Cartesian product.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub a1: Vec<Value>,
    pub b1: Vec<Value>,
    pub a2: Vec<Value>,
    pub b2: Vec<Value>,
    pub a3: Vec<Value>,
    pub b3: Vec<Value>,
    #[serde(default)]
    pub filter: Option<String>,
}

impl SweepSpec {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        read_json(path)
    }

    pub fn skip_invalid(&self) -> Result<bool, CliError> {
        match self.filter.as_deref() {
            None => Ok(false),
            Some("valid") => Ok(true),
            Some(f) => Err(CliError::Input(format!("unknown filter {f:?} (only \"valid\" is supported)"))),
        }
    }

    /// Parameter lists in column order a1, b1, a2, b2, a3, b3.
    pub fn axes(&self) -> Result<[Vec<Rational>; 6], CliError> {
        let names = ["a1", "b1", "a2", "b2", "a3", "b3"];
        let lists = [&self.a1, &self.b1, &self.a2, &self.b2, &self.a3, &self.b3];
        let mut out: [Vec<Rational>; 6] = Default::default();
        for (i, list) in lists.iter().enumerate() {
            if list.is_empty() {
                return Err(CliError::Input(format!("sweep parameter {} has no values", names[i])));
            }
            out[i] = list.iter().map(rational_from_json).collect::<Result<_, _>>()?;
        }
        Ok(out)
    }
}

/// `{"k": [[x, y, z], ...], "l": [[x, y, z], ...]}`
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BodiesFile {
    pub k: Vec<[Value; 3]>,
    pub l: Vec<[Value; 3]>,
}

impl BodiesFile {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        read_json(path)
    }

    pub fn bodies(&self) -> Result<(Vec<Point3>, Vec<Point3>), CliError> {
        let conv = |pts: &[[Value; 3]]| -> Result<Vec<Point3>, CliError> {
            pts.iter()
                .map(|p| {
                    Ok(Point3::new([rational_from_json(&p[0])?, rational_from_json(&p[1])?, rational_from_json(&p[2])?]))
                })
                .collect()
        };
        Ok((conv(&self.k)?, conv(&self.l)?))
    }
}
