//! Plain-text problem files.
//!
//! ```text
//! # comment
//! label: three points
//! ring: a0 a1 a2
//! grading: standard            (or rows like `1 1 1 / 0 1 0`)
//! char: 0
//! ideal: a0*a1, a0*a2, a1*a2
//! ```
//!
//! The payload is one of `ideal:`, `form:`, `family(e):` or `points(e):`. Family
//! and point lines may use the parameter `t`. A `family(e):` payload may be
//! followed by `limits:` and `orders:` for limit-form certificates. Lines
//! starting with whitespace continue the previous entry.

use thiserror::Error;

use crate::limits::{ParamFamily, UniPoly};
use crate::parse::{parse_list, split_top_level, ParseError};
use crate::ring::{Polynomial, Ring, RingRef};
use crate::scalar::Field;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {msg}")]
pub struct ProblemError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Clone, Debug)]
pub enum Payload {
    Ideal(Vec<Polynomial>),
    /// A form of the dual ring, written in the declared variables.
    Form(Polynomial),
    /// Elements of the base ring with `t` appended.
    Family {
        bound: i64,
        elements: Vec<Polynomial>,
        limits: Vec<Polynomial>,
        orders: Vec<u32>,
    },
    Points {
        bound: i64,
        points: Vec<Vec<UniPoly>>,
    },
}

#[derive(Clone, Debug)]
pub struct Problem {
    pub label: Option<String>,
    pub ring: RingRef,
    pub payload: Payload,
}

struct Entry {
    line: usize,
    key: String,
    key_col: usize,
    value: String,
    value_col: usize,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> ProblemError {
    ProblemError { line, col, msg: msg.into() }
}

fn entries(text: &str) -> Result<Vec<Entry>, ProblemError> {
    let mut out: Vec<Entry> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        if body.starts_with(char::is_whitespace) {
            let Some(last) = out.last_mut() else {
                return Err(err(line, 1, "continuation line before any entry"));
            };
            last.value.push(' ');
            last.value.push_str(body.trim());
            continue;
        }
        let Some(colon) = body.find(':') else {
            return Err(err(line, 1, "expected `key: value`"));
        };
        let value = &body[colon + 1..];
        let lead = value.len() - value.trim_start().len();
        out.push(Entry {
            line,
            key: body[..colon].trim().to_string(),
            key_col: 1,
            value: value.trim().to_string(),
            value_col: colon + 2 + lead,
        });
    }
    Ok(out)
}

fn parse_grading(e: &Entry, n: usize) -> Result<Vec<Vec<u32>>, ProblemError> {
    if e.value == "standard" {
        return Ok(vec![vec![1; n]]);
    }
    let mut rows = Vec::new();
    for row in e.value.split('/') {
        let r: Result<Vec<u32>, _> = row.split_whitespace().map(str::parse).collect();
        let r = r.map_err(|_| err(e.line, e.value_col, "grading rows are nonnegative integers"))?;
        if r.len() != n {
            return Err(err(e.line, e.value_col, format!("grading row has {} entries, ring has {n} variables", r.len())));
        }
        rows.push(r);
    }
    Ok(rows)
}

fn parse_bound(e: &Entry, head: &str) -> Result<i64, ProblemError> {
    let inner = e.key.strip_prefix(head).and_then(|s| s.strip_prefix('(')).and_then(|s| s.strip_suffix(')'));
    inner
        .and_then(|s| s.trim().parse().ok())
        .filter(|&b: &i64| b >= 1)
        .ok_or_else(|| err(e.line, e.key_col, format!("expected `{head}(e)` with a positive integer e")))
}

fn parse_err(e: &Entry, offset: usize, p: ParseError) -> ProblemError {
    let pos = match &p {
        ParseError::Syntax { pos, .. }
        | ParseError::UnknownVariable { pos, .. }
        | ParseError::Division { pos }
        | ParseError::ZeroDenominator { pos } => *pos,
    };
    err(e.line, e.value_col + offset + pos, p.to_string())
}

fn polys(e: &Entry, ring: &RingRef) -> Result<Vec<Polynomial>, ProblemError> {
    parse_list(ring, &e.value).map_err(|p| parse_err(e, 0, p))
}

fn parse_points(e: &Entry, base: &RingRef) -> Result<Vec<Vec<UniPoly>>, ProblemError> {
    let t_ring = Ring::standard(&["t"], base.field());
    let n = base.nvars();
    let mut out = Vec::new();
    let mut rest = e.value.as_str();
    let mut consumed = 0;
    while !rest.trim().is_empty() {
        let open = rest.find('[').ok_or_else(|| err(e.line, e.value_col, "points are written `[c0, c1, …]`"))?;
        let close = rest[open..].find(']').map(|c| c + open).ok_or_else(|| err(e.line, e.value_col, "unclosed `[`"))?;
        let inside = &rest[open + 1..close];
        let coords: Result<Vec<UniPoly>, ProblemError> = split_top_level(inside)
            .into_iter()
            .map(|(off, c)| {
                let p = parse_list(&t_ring, c).map_err(|x| parse_err(e, consumed + open + 1 + off, x))?;
                Ok(p.first().map_or(UniPoly::zero(base.field()), |p| UniPoly::from_polynomial(p, 0)))
            })
            .collect();
        let coords = coords?;
        if coords.len() != n {
            return Err(err(e.line, e.value_col, format!("point with {} coordinates in a ring with {n} variables", coords.len())));
        }
        out.push(coords);
        let tail = &rest[close + 1..];
        let next = tail.trim_start().trim_start_matches(',');
        consumed += close + 1 + tail.len() - next.len();
        rest = next;
    }
    Ok(out)
}

impl Problem {
    pub fn parse(text: &str) -> Result<Problem, ProblemError> {
        let es = entries(text)?;
        let mut label = None;
        let mut it = es.iter().filter(|e| {
            if e.key == "label" {
                label = Some(e.value.clone());
                false
            } else {
                true
            }
        });
        let first = it.next().ok_or_else(|| err(1, 1, "empty problem file"))?;
        if first.key != "ring" {
            return Err(err(first.line, first.key_col, "first entry must be `ring:`"));
        }
        let names: Vec<String> = first.value.split_whitespace().map(String::from).collect();
        if names.is_empty() || names.iter().any(|v| v == "t" || !v.starts_with(|c: char| c.is_ascii_alphabetic())) {
            return Err(err(first.line, first.value_col, "variable names must be identifiers other than `t`"));
        }
        let n = names.len();
        let mut grading = vec![vec![1; n]];
        let mut field = Field::Rational;
        let mut next = it.next();
        if let Some(e) = next.filter(|e| e.key == "grading") {
            grading = parse_grading(e, n)?;
            next = it.next();
        }
        if let Some(e) = next.filter(|e| e.key == "char") {
            let c: u64 = e.value.parse().map_err(|_| err(e.line, e.value_col, "characteristic must be 0 or a prime"))?;
            field = Field::from_characteristic(c).ok_or_else(|| err(e.line, e.value_col, format!("{c} is not 0 or a supported prime")))?;
            next = it.next();
        }
        let ring = Ring::new(names, grading, field).map_err(|x| err(first.line, first.value_col, x.to_string()))?;
        let e = next.ok_or_else(|| err(first.line, 1, "missing payload (`ideal:`, `form:`, `family(e):` or `points(e):`)"))?;
        let payload = match e.key.as_str() {
            "ideal" => Payload::Ideal(polys(e, &ring)?),
            "form" => {
                let v = polys(e, &ring)?;
                if v.len() != 1 || !v[0].is_homogeneous() {
                    return Err(err(e.line, e.value_col, "`form:` takes one homogeneous polynomial"));
                }
                Payload::Form(v[0].clone())
            }
            k if k.starts_with("family") => {
                let bound = parse_bound(e, "family")?;
                let pr = ParamFamily::param_ring(&ring);
                let elements = polys(e, &pr)?;
                let (mut limits, mut orders) = (Vec::new(), Vec::new());
                for x in it.by_ref() {
                    match x.key.as_str() {
                        "limits" => limits = polys(x, &pr)?,
                        "orders" => {
                            orders = x
                                .value
                                .split(|c: char| c == ',' || c.is_whitespace())
                                .filter(|s| !s.is_empty())
                                .map(str::parse)
                                .collect::<Result<_, _>>()
                                .map_err(|_| err(x.line, x.value_col, "orders are nonnegative integers"))?;
                        }
                        _ => return Err(err(x.line, x.key_col, format!("unexpected `{}:` after the family", x.key))),
                    }
                }
                if limits.len() != orders.len() {
                    return Err(err(e.line, e.key_col, "`limits:` and `orders:` must have the same length"));
                }
                Payload::Family { bound, elements, limits, orders }
            }
            k if k.starts_with("points") => {
                let bound = parse_bound(e, "points")?;
                Payload::Points { bound, points: parse_points(e, &ring)? }
            }
            other => return Err(err(e.line, e.key_col, format!("unknown entry `{other}:`"))),
        };
        if let Some(x) = it.next() {
            return Err(err(x.line, x.key_col, format!("unexpected `{}:` after the payload", x.key)));
        }
        Ok(Problem { label, ring, payload })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_file() {
        let p = Problem::parse("# intro\nring: a0 a1 a2\ngrading: standard\nchar: 0\nideal: a0*a1,\n  a1^2\n").unwrap();
        match p.payload {
            Payload::Ideal(g) => assert_eq!(g.len(), 2),
            _ => panic!(),
        }
    }

    #[test]
    fn bigraded_and_points() {
        let p = Problem::parse("ring: a0 a1 a2\ngrading: 1 1 1 / 0 1 0\nchar: 32003\nideal: a0^3").unwrap();
        assert_eq!(p.ring.grading_rank(), 2);
        assert_eq!(p.ring.field().characteristic(), 32003);
        let p = Problem::parse("ring: a0 a1 a2\npoints(4): [1, 0, 0], [1, t, 1], [0,0,1]").unwrap();
        match p.payload {
            Payload::Points { bound, points } => {
                assert_eq!(bound, 4);
                assert_eq!(points[1][1].degree(), Some(1));
            }
            _ => panic!(),
        }
    }

    #[test]
    fn diagnostics() {
        let e = Problem::parse("ring: a0 a1\nideal: a0*b").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.msg.contains("b"));
        let e = Problem::parse("grading: standard\nring: a").unwrap_err();
        assert_eq!((e.line, e.col), (1, 1));
        assert!(Problem::parse("ring: a0 a1\nchar: 12\nideal: a0").is_err());
        assert!(Problem::parse("ring: a0 a1\nfamily(x): a0").is_err());
    }
}
