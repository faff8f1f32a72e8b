//! Text serialization of maps and action specifications.
//!
//! Map format (one map per document):
//!
//! ```text
//! plmap v1 lift
//! piece x=0 v=0 s=1/2
//! piece x=1/3 v=1/6 s=2
//! piece x=2/3 v=5/6 s=1/2
//! ```
//!
//! Rationals are written `p/q` or as a bare integer; `#` starts a comment
//! line; blank lines are ignored. Writing a canonical map and reading it
//! back is the identity, bit for bit.
//!
//! Action format:
//!
//! ```text
//! plaction v1
//! group: K
//! dir: +1
//! x0: 0
//! piece x=0 v=0 s=1/2
//! piece x=1/2 v=1/4 s=3/2
//! ```
//!
//! The pieces describe the seed homeomorphism on the interval joining the
//! base point and its image, in absolute coordinates.

use std::fmt;
use std::fmt::Write as _;

use crate::actions::{ActionSpec, ActionsError, GroupKind, IntervalMap};
use crate::plmap::{PLFunc, PLLift, Piece, PlError};
use crate::rational::{parse_rational, rint, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormatError {
    /// 1-based line number in the input document.
    pub line: usize,
    pub message: String,
}

impl FormatError {
    fn new(line: usize, message: impl Into<String>) -> FormatError {
        FormatError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for FormatError {}

/// Either kind of map the `plmap v1` format can carry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyMap {
    Fn(PLFunc),
    Lift(PLLift),
}

impl AnyMap {
    pub fn kind(&self) -> &'static str {
        match self {
            AnyMap::Fn(_) => "fn",
            AnyMap::Lift(_) => "lift",
        }
    }

    pub fn pieces(&self) -> &[Piece] {
        match self {
            AnyMap::Fn(f) => f.pieces(),
            AnyMap::Lift(f) => f.pieces(),
        }
    }
}

/// Significant lines of a document with their 1-based numbers.
fn significant_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn parse_piece_line(line_no: usize, line: &str) -> Result<Piece, FormatError> {
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some("piece") {
        return Err(FormatError::new(
            line_no,
            format!("expected a `piece` line, got `{line}`"),
        ));
    }
    let mut take = |key: &str| -> Result<Rational, FormatError> {
        let token = tokens.next().ok_or_else(|| {
            FormatError::new(line_no, format!("missing `{key}=` field"))
        })?;
        let value = token
            .strip_prefix(key)
            .and_then(|rest| rest.strip_prefix('='))
            .ok_or_else(|| {
                FormatError::new(line_no, format!("expected `{key}=<rational>`, got `{token}`"))
            })?;
        parse_rational(value).map_err(|e| FormatError::new(line_no, e))
    };
    let x = take("x")?;
    let v = take("v")?;
    let s = take("s")?;
    if let Some(extra) = tokens.next() {
        return Err(FormatError::new(
            line_no,
            format!("unexpected trailing token `{extra}`"),
        ));
    }
    Ok(Piece::new(x, v, s))
}

fn pl_error(line: usize, e: PlError) -> FormatError {
    FormatError::new(line, e.to_string())
}

/// Reads a `plmap v1` document.
pub fn read_map(text: &str) -> Result<AnyMap, FormatError> {
    let lines = significant_lines(text);
    let Some(&(header_no, header)) = lines.first() else {
        return Err(FormatError::new(1, "empty document"));
    };
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let kind = match tokens.as_slice() {
        ["plmap", "v1", kind] => *kind,
        _ => {
            return Err(FormatError::new(
                header_no,
                format!("expected header `plmap v1 <fn|lift>`, got `{header}`"),
            ))
        }
    };
    let mut pieces = Vec::new();
    let mut last_line = header_no;
    for &(line_no, line) in &lines[1..] {
        pieces.push(parse_piece_line(line_no, line)?);
        last_line = line_no;
    }
    match kind {
        "fn" => Ok(AnyMap::Fn(
            PLFunc::new(pieces).map_err(|e| pl_error(last_line, e))?,
        )),
        "lift" => Ok(AnyMap::Lift(
            PLLift::new(pieces).map_err(|e| pl_error(last_line, e))?,
        )),
        other => Err(FormatError::new(
            header_no,
            format!("unknown map kind `{other}`; expected fn or lift"),
        )),
    }
}

pub fn read_lift(text: &str) -> Result<PLLift, FormatError> {
    match read_map(text)? {
        AnyMap::Lift(f) => Ok(f),
        AnyMap::Fn(_) => Err(FormatError::new(1, "expected a lift, got a fn map")),
    }
}

fn write_pieces(out: &mut String, pieces: &[Piece]) {
    for p in pieces {
        let _ = writeln!(out, "piece x={} v={} s={}", p.x, p.v, p.s);
    }
}

pub fn write_map(map: &AnyMap) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "plmap v1 {}", map.kind());
    write_pieces(&mut out, map.pieces());
    out
}

pub fn write_fn(f: &PLFunc) -> String {
    write_map(&AnyMap::Fn(f.clone()))
}

pub fn write_lift(f: &PLLift) -> String {
    write_map(&AnyMap::Lift(f.clone()))
}

fn actions_error(line: usize, e: ActionsError) -> FormatError {
    FormatError::new(line, e.to_string())
}

/// Reads a `plaction v1` document.
pub fn read_action(text: &str) -> Result<ActionSpec, FormatError> {
    let lines = significant_lines(text);
    let Some(&(header_no, header)) = lines.first() else {
        return Err(FormatError::new(1, "empty document"));
    };
    if header.split_whitespace().collect::<Vec<_>>() != ["plaction", "v1"] {
        return Err(FormatError::new(
            header_no,
            format!("expected header `plaction v1`, got `{header}`"),
        ));
    }
    let mut group: Option<GroupKind> = None;
    let mut dir: Option<i64> = None;
    let mut x0: Option<Rational> = None;
    let mut pieces = Vec::new();
    let mut last_line = header_no;
    for &(line_no, line) in &lines[1..] {
        last_line = line_no;
        if let Some(rest) = line.strip_prefix("group:") {
            group = Some(match rest.trim() {
                "Z2" => GroupKind::Z2,
                "K" => GroupKind::K,
                other => {
                    return Err(FormatError::new(
                        line_no,
                        format!("group must be Z2 or K, got `{other}`"),
                    ))
                }
            });
        } else if let Some(rest) = line.strip_prefix("dir:") {
            dir = Some(match rest.trim() {
                "+1" | "1" => 1,
                "-1" => -1,
                other => {
                    return Err(FormatError::new(
                        line_no,
                        format!("dir must be +1 or -1, got `{other}`"),
                    ))
                }
            });
        } else if let Some(rest) = line.strip_prefix("x0:") {
            x0 = Some(
                parse_rational(rest.trim()).map_err(|e| FormatError::new(line_no, e))?,
            );
        } else {
            pieces.push(parse_piece_line(line_no, line)?);
        }
    }
    let group = group.ok_or_else(|| FormatError::new(last_line, "missing `group:` line"))?;
    let dir = dir.ok_or_else(|| FormatError::new(last_line, "missing `dir:` line"))?;
    let x0 = x0.ok_or_else(|| FormatError::new(last_line, "missing `x0:` line"))?;
    let lo = if dir == 1 { x0.clone() } else { &x0 - rint(1) };
    let hi = &lo + rint(1);
    let seed =
        IntervalMap::new(lo, hi, pieces).map_err(|e| actions_error(last_line, e))?;
    ActionSpec::new(group, dir, x0, seed).map_err(|e| actions_error(last_line, e))
}

pub fn write_action(spec: &ActionSpec) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "plaction v1");
    let _ = writeln!(out, "group: {}", spec.group);
    let _ = writeln!(
        out,
        "dir: {}",
        if spec.direction == 1 { "+1" } else { "-1" }
    );
    let _ = writeln!(out, "x0: {}", spec.base_point);
    write_pieces(&mut out, spec.seed.pieces());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn map_round_trip_is_bit_exact() {
        let maps = [
            AnyMap::Lift(PLLift::north_south_map()),
            AnyMap::Fn(PLFunc::triangle_wave()),
            AnyMap::Lift(PLLift::translation(&rat(-7, 3))),
            AnyMap::Fn(PLFunc::constant(rint(7))),
        ];
        for m in &maps {
            let text = write_map(m);
            let back = read_map(&text).unwrap();
            assert_eq!(&back, m);
            assert_eq!(write_map(&back), text);
        }
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# the triangle wave\n\nplmap v1 fn\npiece x=0 v=1 s=-4\n# halfway\npiece x=1/2 v=-1 s=4\n";
        let m = read_map(text).unwrap();
        assert_eq!(m, AnyMap::Fn(PLFunc::triangle_wave()));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad_header = read_map("plmap v2 lift\n").unwrap_err();
        assert_eq!(bad_header.line, 1);
        let bad_piece = read_map("plmap v1 lift\npiece x=0 v=0\n").unwrap_err();
        assert_eq!(bad_piece.line, 2);
        let bad_rat = read_map("plmap v1 lift\n# c\npiece x=0 v=1/0 s=1\n").unwrap_err();
        assert_eq!(bad_rat.line, 3);
        assert!(bad_rat.message.contains("zero denominator"));
        let not_a_lift = read_map("plmap v1 lift\npiece x=0 v=0 s=-1\n").unwrap_err();
        assert_eq!(not_a_lift.line, 2);
    }

    #[test]
    fn action_round_trip() {
        let text = "plaction v1\ngroup: K\ndir: +1\nx0: 0\npiece x=0 v=0 s=1/2\npiece x=1/2 v=1/4 s=3/2\n";
        let spec = read_action(text).unwrap();
        assert_eq!(spec.group, GroupKind::K);
        assert_eq!(spec.direction, 1);
        assert_eq!(spec.base_point, rint(0));
        assert_eq!(write_action(&spec), text);
    }

    #[test]
    fn action_with_negative_direction() {
        let text = "plaction v1\ngroup: Z2\ndir: -1\nx0: 0\npiece x=-1 v=-1 s=2\npiece x=-1/2 v=0 s=... \n";
        assert!(read_action(text).is_err());
        let good = "plaction v1\ngroup: Z2\ndir: -1\nx0: 0\npiece x=-1 v=-1 s=1/2\npiece x=-1/2 v=-3/4 s=3/2\n";
        let spec = read_action(good).unwrap();
        assert_eq!(spec.direction, -1);
        assert_eq!(*spec.seed.lo(), rint(-1));
    }

    #[test]
    fn action_missing_fields_are_reported() {
        let text = "plaction v1\ngroup: K\npiece x=0 v=0 s=1\n";
        let err = read_action(text).unwrap_err();
        assert!(err.message.contains("dir"));
    }
}
