//! Text formats for arrangements and combinatorial types.
//!
//! Arrangement files hold one record per line:
//!
//! ```text
//! # comment
//! line: a b c              # a x + b y + c z = 0
//! conic: a b c d e f       # a x² + b y² + c z² + d xy + e xz + f yz = 0
//! ```
//!
//! Coefficients are integers or `p/q`. A trailing comment on a record is
//! taken as the curve's label.
//!
//! Combinatorial-type files start with `d=<int> k=<int>` followed by
//! `t <r> = <count>` lines. Several types may follow one another; each new
//! `d=` header starts the next one.

use crate::arith::rational::{format_rational, parse_rational};
use crate::arith::Rational;
use crate::arrangement::{Arrangement, CombinatorialType, CurveKind, PlaneCurve};
use crate::error::ParseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileKind {
    Arrangement,
    CombinatorialType,
}

/// Splits a line into its record part and an optional trailing comment.
fn split_comment(line: &str) -> (&str, Option<&str>) {
    match line.split_once('#') {
        Some((body, comment)) => (body.trim(), Some(comment.trim())),
        None => (line.trim(), None),
    }
}

/// Detects the file kind from the first record.
pub fn detect(text: &str) -> Result<FileKind, ParseError> {
    for (n, raw) in text.lines().enumerate() {
        let (body, _) = split_comment(raw);
        if body.is_empty() {
            continue;
        }
        if body.starts_with("line:") || body.starts_with("conic:") {
            return Ok(FileKind::Arrangement);
        }
        if body.starts_with("d=") || body.starts_with("d =") {
            return Ok(FileKind::CombinatorialType);
        }
        return Err(ParseError::new(n + 1, format!("unrecognized record {body:?}")));
    }
    Err(ParseError::new(0, "empty input"))
}

fn parse_coeffs(list: &str, expected: usize, what: &str, line: usize) -> Result<Vec<Rational>, ParseError> {
    let coeffs: Vec<Rational> = list
        .split_whitespace()
        .map(|tok| parse_rational(tok).map_err(|e| e.at_line(line)))
        .collect::<Result<_, _>>()?;
    if coeffs.len() != expected {
        return Err(ParseError::new(
            line,
            format!("{what} record expects {expected} coefficients, found {}", coeffs.len()),
        ));
    }
    Ok(coeffs)
}

pub fn parse_arrangement(text: &str) -> Result<Arrangement, ParseError> {
    let mut curves = Vec::new();
    let (mut lines, mut conics) = (0, 0);
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let (body, comment) = split_comment(raw);
        if body.is_empty() {
            continue;
        }
        let label = comment.filter(|c| !c.is_empty()).map(str::to_owned);
        if let Some(rest) = body.strip_prefix("line:") {
            let c = parse_coeffs(rest, 3, "line", line_no)?;
            lines += 1;
            let label = label.unwrap_or_else(|| format!("L{lines}"));
            let [a, b, cc]: [Rational; 3] = c.try_into().expect("length checked");
            curves.push(PlaneCurve::line([a, b, cc], label));
        } else if let Some(rest) = body.strip_prefix("conic:") {
            let c = parse_coeffs(rest, 6, "conic", line_no)?;
            conics += 1;
            let label = label.unwrap_or_else(|| format!("C{conics}"));
            let arr: [Rational; 6] = c.try_into().expect("length checked");
            curves.push(PlaneCurve::conic(arr, label));
        } else {
            return Err(ParseError::new(
                line_no,
                format!("expected `line:` or `conic:` record, found {body:?}"),
            ));
        }
    }
    if curves.is_empty() {
        return Err(ParseError::new(0, "no curves in input"));
    }
    Ok(Arrangement::new(curves))
}

pub fn serialize_arrangement(a: &Arrangement) -> String {
    let mut out = String::new();
    for c in &a.curves {
        let (tag, coeffs): (&str, Vec<Rational>) = match c.kind {
            CurveKind::Line => ("line", c.form.line_coeffs().to_vec()),
            CurveKind::Conic => ("conic", c.form.conic_coeffs().to_vec()),
        };
        let nums: Vec<String> = coeffs.iter().map(format_rational).collect();
        out.push_str(tag);
        out.push_str(": ");
        out.push_str(&nums.join(" "));
        let label = c.label.replace(['#', '\n', '\r'], " ");
        let label = label.trim();
        if !label.is_empty() {
            out.push_str(" # ");
            out.push_str(label);
        }
        out.push('\n');
    }
    out
}

fn parse_header(body: &str, line: usize) -> Result<(u32, u32), ParseError> {
    let compact: String = body.split_whitespace().collect::<Vec<_>>().join(" ");
    let compact = compact.replace(" =", "=").replace("= ", "=");
    let mut d = None;
    let mut k = None;
    for tok in compact.split_whitespace() {
        let (key, val) = tok
            .split_once('=')
            .ok_or_else(|| ParseError::new(line, format!("malformed header token {tok:?}")))?;
        let v: u32 = val
            .parse()
            .map_err(|_| ParseError::new(line, format!("invalid count {val:?}")))?;
        match key {
            "d" => d = Some(v),
            "k" => k = Some(v),
            _ => return Err(ParseError::new(line, format!("unknown header key {key:?}"))),
        }
    }
    match (d, k) {
        (Some(d), Some(k)) => Ok((d, k)),
        _ => Err(ParseError::new(line, "header needs both d=<int> and k=<int>")),
    }
}

fn parse_t_record(body: &str, line: usize) -> Result<(u32, u64), ParseError> {
    let bad = || ParseError::new(line, format!("expected `t <r> = <count>`, found {body:?}"));
    let rest = body.strip_prefix('t').ok_or_else(bad)?;
    let (r, count) = rest.split_once('=').ok_or_else(bad)?;
    let r: u32 = r.trim().parse().map_err(|_| bad())?;
    let count: u64 = count.trim().parse().map_err(|_| bad())?;
    Ok((r, count))
}

/// A type under construction: `d`, `k`, the `t` records, and the header line.
type PendingType = (u32, u32, Vec<(u32, u64)>, usize);

/// Parses a document holding one or more combinatorial types.
pub fn parse_combinatorial_types(text: &str) -> Result<Vec<CombinatorialType>, ParseError> {
    let mut out = Vec::new();
    let mut current: Option<PendingType> = None;
    let finish = |cur: PendingType| {
        let (d, k, t, line) = cur;
        CombinatorialType::new(d, k, t).map_err(|e| ParseError::new(line, e.to_string()))
    };
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let (body, _) = split_comment(raw);
        if body.is_empty() {
            continue;
        }
        if body.starts_with('d') {
            if let Some(cur) = current.take() {
                out.push(finish(cur)?);
            }
            let (d, k) = parse_header(body, line_no)?;
            current = Some((d, k, Vec::new(), line_no));
        } else if body.starts_with('t') {
            let rec = parse_t_record(body, line_no)?;
            match current.as_mut() {
                Some(cur) => cur.2.push(rec),
                None => return Err(ParseError::new(line_no, "`t` record before the d=/k= header")),
            }
        } else {
            return Err(ParseError::new(line_no, format!("unrecognized record {body:?}")));
        }
    }
    if let Some(cur) = current.take() {
        out.push(finish(cur)?);
    }
    if out.is_empty() {
        return Err(ParseError::new(0, "no combinatorial type in input"));
    }
    Ok(out)
}

/// Parses a document holding exactly one combinatorial type.
pub fn parse_combinatorial_type(text: &str) -> Result<CombinatorialType, ParseError> {
    let mut all = parse_combinatorial_types(text)?;
    if all.len() != 1 {
        return Err(ParseError::new(0, format!("expected one combinatorial type, found {}", all.len())));
    }
    Ok(all.remove(0))
}

pub fn serialize_combinatorial_type(ct: &CombinatorialType) -> String {
    let mut out = format!("d={} k={}\n", ct.d(), ct.k());
    for (r, c) in ct.counts() {
        out.push_str(&format!("t {r} = {c}\n"));
    }
    out
}
