//! Curves, arrangements and combinatorial types.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::upoly::determinant;
use crate::arith::{Rational, TernaryForm};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    Line,
    Conic,
}

impl CurveKind {
    pub fn degree(self) -> u32 {
        match self {
            CurveKind::Line => 1,
            CurveKind::Conic => 2,
        }
    }
}

/// A line or conic given by a homogeneous rational form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneCurve {
    pub kind: CurveKind,
    pub form: TernaryForm,
    pub label: String,
}

impl PlaneCurve {
    pub fn line(coeffs: [Rational; 3], label: impl Into<String>) -> Self {
        let [a, b, c] = coeffs;
        Self {
            kind: CurveKind::Line,
            form: TernaryForm::line(a, b, c),
            label: label.into(),
        }
    }

    /// Conic `a x² + b y² + c z² + d xy + e xz + f yz`.
    pub fn conic(coeffs: [Rational; 6], label: impl Into<String>) -> Self {
        Self {
            kind: CurveKind::Conic,
            form: TernaryForm::conic(coeffs),
            label: label.into(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.kind.degree()
    }

    /// Checks that the form is nonzero, of the right degree, and (for conics)
    /// irreducible. The error string names the violated invariant.
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.form.is_zero() {
            return Err("zero polynomial".into());
        }
        if self.form.degree() != self.kind.degree() {
            return Err(format!(
                "{:?} must have degree {}, form has degree {}",
                self.kind,
                self.kind.degree(),
                self.form.degree()
            ));
        }
        if self.kind == CurveKind::Conic && conic_determinant(&self.form).is_zero() {
            return Err("conic is a line pair or double line".into());
        }
        Ok(())
    }
}

/// Determinant of the symmetric matrix of a quadratic form; zero iff the
/// conic is reducible.
pub fn conic_determinant(form: &TernaryForm) -> Rational {
    let m = form.symmetric_matrix();
    determinant(m.iter().map(|row| row.to_vec()).collect())
}

impl fmt::Display for PlaneCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]: {} = 0", self.label, match self.kind {
            CurveKind::Line => "line",
            CurveKind::Conic => "conic",
        }, self.form)
    }
}

/// An ordered list of curves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrangement {
    pub curves: Vec<PlaneCurve>,
}

impl Arrangement {
    pub fn new(curves: Vec<PlaneCurve>) -> Self {
        Self { curves }
    }

    /// Builds and validates in one step.
    pub fn validated(curves: Vec<PlaneCurve>) -> Result<Self> {
        let a = Self::new(curves);
        a.validate()?;
        Ok(a)
    }

    /// Every curve valid and no two forms proportional.
    pub fn validate(&self) -> Result<()> {
        if self.curves.is_empty() {
            return Err(Error::EmptyArrangement);
        }
        for (index, c) in self.curves.iter().enumerate() {
            c.validate()
                .map_err(|reason| Error::InvalidCurve { index, reason })?;
        }
        for i in 0..self.curves.len() {
            for j in i + 1..self.curves.len() {
                if self.curves[i].form.is_proportional(&self.curves[j].form) {
                    return Err(Error::DuplicateCurves(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn line_count(&self) -> u32 {
        self.curves.iter().filter(|c| c.kind == CurveKind::Line).count() as u32
    }

    pub fn conic_count(&self) -> u32 {
        self.curves.iter().filter(|c| c.kind == CurveKind::Conic).count() as u32
    }

    /// Indices of the lines, in order.
    pub fn line_indices(&self) -> Vec<usize> {
        (0..self.curves.len())
            .filter(|&i| self.curves[i].kind == CurveKind::Line)
            .collect()
    }
}

/// Numbers of lines `d`, conics `k`, and `t_r` points of multiplicity `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawType")]
pub struct CombinatorialType {
    d: u32,
    k: u32,
    t: BTreeMap<u32, u64>,
}

#[derive(Deserialize)]
struct RawType {
    d: u32,
    k: u32,
    t: BTreeMap<u32, u64>,
}

impl TryFrom<RawType> for CombinatorialType {
    type Error = Error;
    fn try_from(raw: RawType) -> Result<Self> {
        Self::new(raw.d, raw.k, raw.t)
    }
}

impl CombinatorialType {
    /// Zero counts are dropped; nonzero `t_r` needs `2 <= r <= k + d`.
    pub fn new(d: u32, k: u32, t: impl IntoIterator<Item = (u32, u64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (r, count) in t {
            if count == 0 {
                continue;
            }
            if r < 2 {
                return Err(Error::InvalidType(format!("multiplicity {r} < 2")));
            }
            if r > k + d {
                return Err(Error::InvalidType(format!(
                    "multiplicity {r} exceeds the number of curves {}",
                    k + d
                )));
            }
            *map.entry(r).or_insert(0) += count;
        }
        Ok(Self { d, k, t: map })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn curves(&self) -> u32 {
        self.d + self.k
    }

    /// `t_r`; zero for any multiplicity without points.
    pub fn t(&self, r: u32) -> u64 {
        self.t.get(&r).copied().unwrap_or(0)
    }

    /// `t_{k+d-j}`, zero when the index falls below 2.
    pub fn t_top(&self, j: u32) -> u64 {
        self.curves().checked_sub(j).map_or(0, |r| self.t(r))
    }

    pub fn counts(&self) -> &BTreeMap<u32, u64> {
        &self.t
    }

    pub fn max_multiplicity(&self) -> Option<u32> {
        self.t.keys().next_back().copied()
    }
}

impl fmt::Display for CombinatorialType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} k={}", self.d, self.k)?;
        for (r, c) in self.t.iter().rev() {
            write!(f, " t{r}={c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    fn conic(c: [i64; 6]) -> PlaneCurve {
        PlaneCurve::conic(c.map(int), "C")
    }

    fn line(c: [i64; 3]) -> PlaneCurve {
        PlaneCurve::line(c.map(int), "L")
    }

    #[test]
    fn conic_validation() {
        assert_eq!(conic([1, 1, -1, 0, 0, 0]).validate(), Ok(()));
        assert_eq!(conic_determinant(&conic([1, 1, -1, 0, 0, 0]).form), int(-1));
        assert_eq!(
            conic([1, -1, 0, 0, 0, 0]).validate(),
            Err("conic is a line pair or double line".into())
        );
        // x² − z² + t(y² − z²) with t = −1
        let t = -1;
        assert!(conic([1, t, -1 - t, 0, 0, 0]).validate().is_err());
        assert_eq!(line([0, 0, 0]).validate(), Err("zero polynomial".into()));
    }

    #[test]
    fn arrangement_validation() {
        let tri = Arrangement::new(vec![line([1, 0, 0]), line([0, 1, 0]), line([0, 0, 1])]);
        assert_eq!(tri.validate(), Ok(()));
        let dup = Arrangement::new(vec![line([1, 0, -1]), line([2, 0, -2])]);
        assert_eq!(dup.validate(), Err(Error::DuplicateCurves(0, 1)));
        let bad = Arrangement::new(vec![line([1, 0, 0]), conic([1, -1, 0, 0, 0, 0])]);
        assert!(matches!(bad.validate(), Err(Error::InvalidCurve { index: 1, .. })));
        assert_eq!(Arrangement::new(vec![]).validate(), Err(Error::EmptyArrangement));
    }

    #[test]
    fn type_invariants() {
        let ct = CombinatorialType::new(2, 1, [(2, 2), (3, 1), (4, 0)]).unwrap();
        assert_eq!(ct.t(2), 2);
        assert_eq!(ct.t(4), 0);
        assert_eq!(ct.max_multiplicity(), Some(3));
        assert_eq!(ct.t_top(0), 1);
        assert!(CombinatorialType::new(2, 1, [(4, 1)]).is_err());
        assert!(CombinatorialType::new(2, 1, [(1, 1)]).is_err());
        assert_eq!(ct.to_string(), "d=2 k=1 t3=1 t2=2");
    }

    #[test]
    fn type_serde_validates() {
        let json = r#"{"d":2,"k":0,"t":{"2":1}}"#;
        let ct: CombinatorialType = serde_json::from_str(json).unwrap();
        assert_eq!(ct.t(2), 1);
        let bad = r#"{"d":2,"k":0,"t":{"3":1}}"#;
        assert!(serde_json::from_str::<CombinatorialType>(bad).is_err());
    }
}
