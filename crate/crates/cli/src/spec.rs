//! Parsing of triangle, chord and shape arguments.

use serde::Deserialize;
use thiserror::Error;

/// A malformed argument. `position` is a 0-based character offset.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

pub type Coords = [[f64; 2]; 3];

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonTriangle {
    #[serde(rename = "P")]
    p: [f64; 2],
    #[serde(rename = "Q")]
    q: [f64; 2],
    #[serde(rename = "R")]
    r: [f64; 2],
}

/// Parses `"px,py:qx,qy:rx,ry"` or `{"P":[x,y],"Q":[x,y],"R":[x,y]}`.
pub fn parse_triangle(text: &str) -> Result<Coords, ParseError> {
    let start = text.len() - text.trim_start().len();
    if text[start..].starts_with('{') {
        return parse_json_triangle(text);
    }
    let pts = parse_points(text, 3)?;
    Ok([pts[0], pts[1], pts[2]])
}

/// Parses `"px,py:qx,qy"`.
pub fn parse_chord(text: &str) -> Result<[[f64; 2]; 2], ParseError> {
    let pts = parse_points(text, 2)?;
    Ok([pts[0], pts[1]])
}

fn parse_json_triangle(text: &str) -> Result<Coords, ParseError> {
    match serde_json::from_str::<JsonTriangle>(text) {
        Ok(t) => Ok([t.p, t.q, t.r]),
        Err(e) => {
            let position = text
                .split_inclusive('\n')
                .take(e.line().saturating_sub(1))
                .map(|l| l.chars().count())
                .sum::<usize>()
                + e.column().saturating_sub(1);
            let message = e.to_string();
            let message = message.split(" at line").next().unwrap_or(&message).to_string();
            Err(ParseError::new(position, message))
        }
    }
}

fn parse_points(text: &str, count: usize) -> Result<Vec<[f64; 2]>, ParseError> {
    let mut out = Vec::with_capacity(count);
    let mut offset = 0;
    for (i, part) in text.split(':').enumerate() {
        if i >= count {
            return Err(ParseError::new(offset - 1, format!("expected {count} points")));
        }
        out.push(parse_point(part, offset)?);
        offset += part.chars().count() + 1;
    }
    if out.len() < count {
        return Err(ParseError::new(
            text.chars().count(),
            format!("expected {count} points, found {}", out.len()),
        ));
    }
    Ok(out)
}

fn parse_point(part: &str, offset: usize) -> Result<[f64; 2], ParseError> {
    let Some((xs, ys)) = part.split_once(',') else {
        return Err(ParseError::new(offset, "expected x,y"));
    };
    let x = parse_number(xs, offset)?;
    let y = parse_number(ys, offset + xs.chars().count() + 1)?;
    Ok([x, y])
}

fn parse_number(s: &str, offset: usize) -> Result<f64, ParseError> {
    let lead = s.chars().take_while(|c| c.is_whitespace()).count();
    let trimmed = s.trim();
    match trimmed.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        Ok(_) => Err(ParseError::new(offset + lead, format!("non-finite number {trimmed:?}"))),
        Err(_) if trimmed.is_empty() => Err(ParseError::new(offset + lead, "missing number")),
        Err(_) => Err(ParseError::new(offset + lead, format!("invalid number {trimmed:?}"))),
    }
}

/// A similarity class: `"equilateral"` or side ratios `"a:b:c"`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ShapeSpec {
    Equilateral,
    Sides(f64, f64, f64),
}

pub fn parse_shape(text: &str) -> Result<ShapeSpec, ParseError> {
    if text.trim().eq_ignore_ascii_case("equilateral") {
        return Ok(ShapeSpec::Equilateral);
    }
    let mut sides = Vec::new();
    let mut offset = 0;
    for part in text.split(':') {
        sides.push(parse_number(part, offset)?);
        offset += part.chars().count() + 1;
    }
    match sides[..] {
        [a, b, c] => Ok(ShapeSpec::Sides(a, b, c)),
        _ => Err(ParseError::new(0, "expected \"equilateral\" or a:b:c")),
    }
}
