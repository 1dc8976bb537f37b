//! JSON shapes for CLI output. Every rational is serialized as "p/q" (or
//! "p" when the denominator is one) so output round-trips exactly.

use feulerian::exactmath::{format_rational, parse_rational, Rational};
use feulerian::polyalgebra::{Poly, ZoneCounts};
use feulerian::{Error, Result};
use serde_json::{json, Value};

pub fn rational_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rationals_json(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(rational_json).collect())
}

pub fn poly_json(p: &Poly) -> Value {
    json!({ "coeffs": rationals_json(p.coeffs()) })
}

pub fn zones_json(zc: &ZoneCounts) -> Value {
    json!({
        "neg": zc.neg,
        "at_zero": zc.at_zero,
        "in_01": zc.in_01,
        "at_one": zc.at_one,
        "gt_one": zc.gt_one,
        "nonreal": zc.nonreal,
    })
}

/// Parses "f:m,f:m" into block pairs.
pub fn parse_blocks(s: &str) -> Result<Vec<(Rational, usize)>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            let (f, m) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("block `{part}` is not f:m")))?;
            let f = parse_rational(f)?;
            let m: usize = m
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("block length `{m}`")))?;
            Ok((f, m))
        })
        .collect()
}

/// Parses "a,b,c" into rationals; empty string is the empty list.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// Parses "1,2,3" into usizes; empty string is the empty list.
pub fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("integer `{p}`")))
        })
        .collect()
}

/// Overall run status carried in every report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        }
    }
}

/// Assembles the uniform report document.
pub fn report(command: &str, inputs: Value, outputs: Value, status: Status, witness: Option<Value>) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "status": status.label(),
        "witness": witness.unwrap_or(Value::Null),
    })
}
