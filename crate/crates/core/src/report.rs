//! Full analysis of one input, rendered as text or JSON from the same data.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::arith::rational::{format_decimal, format_rational};
use crate::arith::Rational;
use crate::arrangement::{Arrangement, CombinatorialType};
use crate::error::Result;
use crate::intersection::{combinatorial_type, six_line_subarrangement};
use crate::invariants::{
    bezout_defect, check_c2_positive, check_debruijn_erdos, check_hirzebruch, check_hirzebruch_k_form,
    check_urzua, compare_slope, cover_chern, h_index_forms, incidence_sums, log_chern, log_chern_slope,
    milnor_total, CheckResult,
};
use crate::search::GroundField;

/// An exact rational with a 4-place decimal rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactValue {
    pub exact: String,
    pub approx: String,
}

impl ExactValue {
    pub fn new(r: &Rational) -> Self {
        Self {
            exact: format_rational(r),
            approx: format_decimal(r, 4),
        }
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (≈ {})", self.exact, self.approx)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSummary {
    pub location: String,
    pub multiplicity: u32,
    pub curves: Vec<String>,
    pub ordinary: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InputKind {
    Geometric,
    Combinatorial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    /// Take the six-line hypothesis as given for combinatorial inputs.
    pub assume_six_lines: bool,
    pub field: GroundField,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            assume_six_lines: false,
            field: GroundField::Complex,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub source: String,
    pub kind: InputKind,
    pub ct: CombinatorialType,
    pub bezout_defect: i64,
    pub f0: i64,
    pub f1: i64,
    pub h_index: Option<ExactValue>,
    /// `(4k + d − f1) / f0`; equal to `h_index` when the defect is zero.
    pub h_index_alt: Option<ExactValue>,
    pub milnor: i64,
    pub c1sq: i64,
    pub c2: i64,
    pub slope: Option<ExactValue>,
    pub cover_e: i64,
    pub cover_k2: i64,
    pub bmy_defect: i64,
    /// Hypotheses of the cover construction: `d ≥ 6`, `k ≥ 2`,
    /// `t_{k+d} = 0`, six suitable lines, ordinary points.
    pub cover_hypotheses_ok: bool,
    /// Whether six lines meet only in double and triple points, and how
    /// that was decided.
    pub six_lines: bool,
    pub six_lines_source: String,
    pub checks: Vec<CheckResult>,
    /// `None` for combinatorial inputs, where ordinarity is assumed.
    pub ordinary: Option<bool>,
    pub field: GroundField,
    pub warnings: Vec<String>,
    pub points: Vec<PointSummary>,
}

/// Printed above the report when some point is not ordinary.
pub const HYPOTHESES_BANNER: &str =
    "HYPOTHESES VIOLATED: non-ordinary singularities present; formulas assume ordinary points";

impl AnalysisReport {
    /// Report for a combinatorial type given directly.
    pub fn from_type(source: &str, ct: &CombinatorialType, opts: ReportOptions) -> Self {
        let six_source = if opts.assume_six_lines { "assumed" } else { "not assumed" };
        build(source, InputKind::Combinatorial, ct, opts.assume_six_lines, six_source, None, Vec::new(), opts.field)
    }

    /// Report for an arrangement: derives the type, then evaluates
    /// everything on it.
    pub fn from_arrangement(source: &str, a: &Arrangement, opts: ReportOptions) -> Result<Self> {
        let derived = combinatorial_type(a)?;
        let found = six_line_subarrangement(a, &derived.points);
        let (six, six_source) = match (found, opts.assume_six_lines) {
            (Some(lines), _) => {
                let labels: Vec<&str> = lines.iter().map(|&i| a.curves[i].label.as_str()).collect();
                (true, format!("found: {}", labels.join(", ")))
            }
            (None, true) => (true, "assumed (no such six lines found)".to_string()),
            (None, false) => (false, "searched: none".to_string()),
        };
        let points = derived
            .points
            .iter()
            .zip(&derived.ordinary)
            .map(|(p, &ordinary)| PointSummary {
                location: p.location.to_string(),
                multiplicity: p.multiplicity(),
                curves: p.curves.iter().map(|&i| a.curves[i].label.clone()).collect(),
                ordinary,
            })
            .collect();
        Ok(build(
            source,
            InputKind::Geometric,
            &derived.ct,
            six,
            &six_source,
            Some(derived.all_ordinary()),
            points,
            opts.field,
        ))
    }

    pub fn hypotheses_violated(&self) -> bool {
        self.ordinary == Some(false)
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        if self.hypotheses_violated() {
            let _ = writeln!(s, "*** {HYPOTHESES_BANNER} ***");
        }
        let kind = match self.kind {
            InputKind::Geometric => "geometric",
            InputKind::Combinatorial => "combinatorial",
        };
        let _ = writeln!(s, "source: {} ({kind})", self.source);
        let _ = writeln!(s, "type: {}", self.ct);
        let _ = writeln!(s, "bezout_defect: {}", self.bezout_defect);
        let _ = writeln!(s, "f0: {}  f1: {}", self.f0, self.f1);
        let opt = |v: &Option<ExactValue>| v.as_ref().map_or("undefined".to_string(), ToString::to_string);
        let _ = writeln!(s, "h_index: {}", opt(&self.h_index));
        let _ = writeln!(s, "h_index (4k+d-f1)/f0: {}", opt(&self.h_index_alt));
        let _ = writeln!(s, "milnor: {}", self.milnor);
        let _ = writeln!(s, "c1sq: {}  c2: {}", self.c1sq, self.c2);
        let _ = writeln!(s, "slope: {}", opt(&self.slope));
        let _ = writeln!(
            s,
            "cover: e = {}  K2 = {}  bmy_defect = {}  (hypotheses {})",
            self.cover_e,
            self.cover_k2,
            self.bmy_defect,
            if self.cover_hypotheses_ok { "satisfied" } else { "not satisfied" }
        );
        let _ = writeln!(s, "six lines: {} ({})", self.six_lines, self.six_lines_source);
        let ordinary = match self.ordinary {
            Some(true) => "yes",
            Some(false) => "no",
            None => "assumed",
        };
        let _ = writeln!(s, "ordinary: {ordinary}");
        let _ = writeln!(s, "field reading: {}", self.field);
        let _ = writeln!(s, "checks:");
        for c in &self.checks {
            let holds = match c.holds {
                Some(true) => "holds",
                Some(false) => "FAILS",
                None => "n/a",
            };
            let hyp = if c.hypotheses_ok { "hypotheses ok" } else { "hypotheses not met" };
            let _ = writeln!(s, "  {:<20} {:<6} [{hyp}] {}", c.name, holds, c.detail);
        }
        if !self.points.is_empty() {
            let _ = writeln!(s, "points:");
            for p in &self.points {
                let flag = if p.ordinary { "" } else { "  NON-ORDINARY" };
                let _ = writeln!(
                    s,
                    "  {} multiplicity {} on {}{flag}",
                    p.location,
                    p.multiplicity,
                    p.curves.join(", ")
                );
            }
        }
        if !self.warnings.is_empty() {
            let _ = writeln!(s, "warnings:");
            for w in &self.warnings {
                let _ = writeln!(s, "  {w}");
            }
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[allow(clippy::too_many_arguments)]
fn build(
    source: &str,
    kind: InputKind,
    ct: &CombinatorialType,
    six_lines: bool,
    six_lines_source: &str,
    ordinary: Option<bool>,
    points: Vec<PointSummary>,
    field: GroundField,
) -> AnalysisReport {
    let (f0, f1) = incidence_sums(ct);
    let (h, h_alt) = match h_index_forms(ct) {
        Ok((a, b)) => (Some(ExactValue::new(&a)), Some(ExactValue::new(&b))),
        Err(_) => (None, None),
    };
    let (c1sq, c2) = log_chern(ct);
    let slope = log_chern_slope(ct).ok();
    let cover = cover_chern(ct);
    let defect = bezout_defect(ct);
    let ordinary_ok = ordinary != Some(false);

    let mut checks = vec![
        check_hirzebruch(ct, false, six_lines),
        check_hirzebruch(ct, true, six_lines),
        check_hirzebruch_k_form(ct, six_lines),
        check_debruijn_erdos(ct),
    ];
    let urzua = check_urzua(ct);
    checks.extend(urzua.to_checks(ct));
    checks.push(check_c2_positive(ct));
    checks.push(five_halves_check(ct, kind, field));
    for c in &mut checks {
        c.hypotheses_ok &= ordinary_ok;
    }
    let cover_hypotheses_ok = checks[0].hypotheses_ok;

    let mut warnings = Vec::new();
    for p in points.iter().filter(|p| !p.ordinary) {
        warnings.push(format!("non-ordinary singularity at {}", p.location));
    }
    if defect != 0 && ordinary_ok {
        warnings.push(format!("Bezout defect {defect}: the point counts are inconsistent with pairwise intersections"));
    } else if defect != 0 {
        warnings.push(format!("Bezout defect {defect}: tangencies absorb intersections"));
    }
    if ct.t_top(0) != 0 {
        warnings.push("t_{k+d} != 0: all curves share a point; log-Chern formulas assume otherwise".into());
    }
    if f0 == 0 {
        warnings.push("smooth arrangement, H-index undefined".into());
    }
    if slope.is_none() {
        warnings.push("log-Chern slope undefined: c2 = 0".into());
    }

    AnalysisReport {
        source: source.into(),
        kind,
        ct: ct.clone(),
        bezout_defect: defect,
        f0,
        f1,
        h_index: h,
        h_index_alt: h_alt,
        milnor: milnor_total(ct),
        c1sq,
        c2,
        slope: slope.as_ref().map(ExactValue::new),
        cover_e: cover.e_scaled,
        cover_k2: cover.k2_scaled,
        bmy_defect: cover.bmy_defect,
        cover_hypotheses_ok,
        six_lines,
        six_lines_source: six_lines_source.into(),
        checks,
        ordinary,
        field,
        warnings,
        points,
    }
}

/// The question `E ≤ 5/2`, posed over the reals. Under the real reading a
/// combinatorial type carries no realizability information, so its
/// hypotheses are not met; rational equations are always real.
fn five_halves_check(ct: &CombinatorialType, kind: InputKind, field: GroundField) -> CheckResult {
    let bound = Rational::new(5.into(), 2.into());
    let (hyp, note) = match (field, kind) {
        (GroundField::Complex, _) => (true, ""),
        (GroundField::Real, InputKind::Geometric) => (true, ""),
        (GroundField::Real, InputKind::Combinatorial) => (false, "; real realizability unknown"),
    };
    match compare_slope(ct, &bound) {
        Some(c) => CheckResult {
            name: "slope-5/2".into(),
            hypotheses_ok: hyp,
            holds: Some(!c.exceeds),
            detail: format!("2*c1sq vs 5*c2: {}{note}", c.detail),
        },
        None => CheckResult {
            name: "slope-5/2".into(),
            hypotheses_ok: hyp,
            holds: None,
            detail: format!("slope undefined{note}"),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;
    use crate::arrangement::PlaneCurve;

    fn ec() -> CombinatorialType {
        CombinatorialType::new(9, 12, [(9, 9), (5, 12), (2, 72)]).unwrap()
    }

    #[test]
    fn extended_chilean_report() {
        let r = AnalysisReport::from_type("extended-chilean", &ec(), ReportOptions::default());
        assert_eq!(r.slope.as_ref().unwrap().exact, "39/17");
        assert_eq!(r.slope.as_ref().unwrap().approx, "2.2941");
        assert_eq!(r.h_index.as_ref().unwrap().exact, "-76/31");
        assert_eq!(r.h_index.as_ref().unwrap().approx, "-2.4516");
        assert_eq!((r.cover_e, r.cover_k2, r.bmy_defect), (141, 357, -66));
        assert!(r.checks.iter().all(|c| c.holds != Some(false)));
        assert!(!r.cover_hypotheses_ok);
        let r = AnalysisReport::from_type(
            "extended-chilean",
            &ec(),
            ReportOptions {
                assume_six_lines: true,
                field: GroundField::Complex,
            },
        );
        assert!(r.cover_hypotheses_ok);
    }

    #[test]
    fn json_round_trip_carries_every_field() {
        let r = AnalysisReport::from_type("x", &ec(), ReportOptions::default());
        let json = r.to_json();
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        for key in [
            "bezout_defect", "f0", "f1", "h_index", "milnor", "c1sq", "c2", "slope", "cover_e", "cover_k2",
            "bmy_defect", "checks",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(back.render_text(), r.render_text());
    }

    #[test]
    fn tangency_report_has_banner() {
        let a = Arrangement::new(vec![
            PlaneCurve::line([0, 1, -1].map(int), "L1"),
            PlaneCurve::conic([1, 1, -1, 0, 0, 0].map(int), "C1"),
        ]);
        let r = AnalysisReport::from_arrangement("tangency-demo", &a, ReportOptions::default()).unwrap();
        assert!(r.hypotheses_violated());
        let text = r.render_text();
        assert!(text.starts_with("*** HYPOTHESES VIOLATED"));
        assert!(text.contains("non-ordinary singularity at (0:1:1)"));
        assert!(r.slope.is_none());
        assert!(r.checks.iter().all(|c| !c.hypotheses_ok));
    }
}
