//! Enumeration of combinatorial types and scans for extremal slopes and
//! violations of the open inequalities. Nothing here claims realizability.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::arrangement::CombinatorialType;
use crate::catalog::{catalog_get, catalog_list, EntryFlag};
use crate::error::{Error, Result};
use crate::invariants::{check_urzua, compare_slope, log_chern_slope};

pub const COMBINATORIAL_LABEL: &str = "combinatorial only — not necessarily realizable";

/// Reading of the ground field in the `5/2` question.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroundField {
    #[default]
    #[serde(rename = "C")]
    Complex,
    #[serde(rename = "R")]
    Real,
}

impl fmt::Display for GroundField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroundField::Complex => "C",
            GroundField::Real => "R",
        })
    }
}

impl FromStr for GroundField {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c" | "C" => Ok(GroundField::Complex),
            "r" | "R" => Ok(GroundField::Real),
            _ => Err(Error::InvalidParameter(format!("field must be c or r, got {s:?}"))),
        }
    }
}

/// Number of curves and the largest multiplicity allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumParams {
    pub d: u32,
    pub k: u32,
    pub max_mult: u32,
}

impl EnumParams {
    /// `4·C(k,2) + C(d,2) + 2kd`, the number of pairwise intersections.
    pub fn target(&self) -> u64 {
        let (d, k) = (self.d as u64, self.k as u64);
        2 * k * k.saturating_sub(1) + d * d.saturating_sub(1) / 2 + 2 * k * d
    }

    fn check(&self) -> Result<()> {
        if self.max_mult > self.d + self.k {
            return Err(Error::InvalidParameter(format!(
                "max multiplicity {} exceeds the number of curves {}",
                self.max_mult,
                self.d + self.k
            )));
        }
        Ok(())
    }
}

/// Lazy enumeration of the solutions of `Σ C(r,2)·t_r = target`, in
/// lexicographic order of `(t_max, …, t_3)`; `t₂` takes up the rest.
pub struct TypeIter {
    d: u32,
    k: u32,
    /// Multiplicities above 2, largest first.
    rs: Vec<u32>,
    weights: Vec<u64>,
    t: Vec<u64>,
    target: u64,
    /// Positions before this one are held fixed.
    frozen: usize,
    pending: bool,
}

fn choose2(r: u32) -> u64 {
    let r = r as u64;
    r * (r - 1) / 2
}

impl TypeIter {
    fn new(p: EnumParams) -> Self {
        let rs: Vec<u32> = (3..=p.max_mult).rev().collect();
        let weights = rs.iter().map(|&r| choose2(r)).collect();
        let target = p.target();
        Self {
            d: p.d,
            k: p.k,
            t: vec![0; rs.len()],
            rs,
            weights,
            target,
            frozen: 0,
            // Without double points only the empty type can occur.
            pending: p.max_mult >= 2 || target == 0,
        }
    }

    /// The slice of the enumeration with `t_max = first`.
    fn partition(p: EnumParams, first: u64) -> Self {
        let mut it = Self::new(p);
        if it.rs.is_empty() {
            it.pending = first == 0 && it.pending;
            return it;
        }
        it.t[0] = first;
        it.frozen = 1;
        it.pending = first * it.weights[0] <= it.target;
        it
    }

    fn used(&self) -> u64 {
        self.t.iter().zip(&self.weights).map(|(t, w)| t * w).sum()
    }

    fn current(&self) -> CombinatorialType {
        let rest = self.target - self.used();
        let counts = self.rs.iter().copied().zip(self.t.iter().copied()).chain([(2, rest)]);
        CombinatorialType::new(self.d, self.k, counts).expect("multiplicities bounded by max_mult")
    }

    fn advance(&mut self) -> bool {
        let used = self.used();
        for j in (self.frozen..self.t.len()).rev() {
            let tail: u64 = (j + 1..self.t.len()).map(|i| self.t[i] * self.weights[i]).sum();
            if used - tail + self.weights[j] <= self.target {
                self.t[j] += 1;
                for i in j + 1..self.t.len() {
                    self.t[i] = 0;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for TypeIter {
    type Item = CombinatorialType;
    fn next(&mut self) -> Option<CombinatorialType> {
        if !self.pending {
            return None;
        }
        let out = self.current();
        self.pending = self.advance();
        Some(out)
    }
}

/// Every type of `d` lines and `k` conics with multiplicities at most
/// `max_mult` satisfying the pairwise intersection count. Filter with
/// [`Iterator::filter`].
pub fn enumerate_types(p: EnumParams) -> Result<TypeIter> {
    p.check()?;
    Ok(TypeIter::new(p))
}

/// Same sequence as [`enumerate_types`] after `filter`, computed in
/// parallel over the count of the largest multiplicity.
pub fn enumerate_types_par<F>(p: EnumParams, filter: F) -> Result<Vec<CombinatorialType>>
where
    F: Fn(&CombinatorialType) -> bool + Sync,
{
    p.check()?;
    if p.max_mult < 3 {
        return Ok(TypeIter::new(p).filter(|c| filter(c)).collect());
    }
    let parts = p.target() / choose2(p.max_mult);
    let chunks: Vec<Vec<CombinatorialType>> = (0..=parts)
        .into_par_iter()
        .map(|first| TypeIter::partition(p, first).filter(|c| filter(c)).collect())
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeWitness {
    pub ct: CombinatorialType,
    pub slope: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremes {
    pub min: SlopeWitness,
    pub max: SlopeWitness,
    pub considered: u64,
    /// Types with `c̄₂ = 0`.
    pub skipped: u64,
}

/// Smallest and largest slope over `types`; ties keep the first witness.
pub fn extremal_slopes_of(types: impl IntoIterator<Item = CombinatorialType>) -> Result<Extremes> {
    let (mut considered, mut skipped) = (0u64, 0u64);
    let mut best: Option<(SlopeWitness, SlopeWitness)> = None;
    for ct in types {
        considered += 1;
        let Ok(slope) = log_chern_slope(&ct) else {
            skipped += 1;
            continue;
        };
        let w = SlopeWitness { ct, slope };
        best = Some(match best {
            None => (w.clone(), w),
            Some((lo, hi)) => {
                let lo = if w.slope < lo.slope { w.clone() } else { lo };
                let hi = if w.slope > hi.slope { w } else { hi };
                (lo, hi)
            }
        });
    }
    match best {
        Some((min, max)) => Ok(Extremes {
            min,
            max,
            considered,
            skipped,
        }),
        None => Err(Error::EmptySearch(format!(
            "{considered} types enumerated, {skipped} with undefined slope"
        ))),
    }
}

pub fn extremal_slopes(p: EnumParams) -> Result<Extremes> {
    extremal_slopes_of(enumerate_types(p)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Conjecture {
    /// `8k + 2t₂ + t₃ ≥ d + 3 + Σ_{r≥5}(r−4)t_r` for `k, d ≥ 2`.
    #[serde(rename = "urzua")]
    Urzua,
    /// Slope at most `8/3` for `k, d ≥ 2`.
    #[serde(rename = "slope_8_3")]
    Slope83,
    /// Slope at most `5/2`, posed over the reals.
    #[serde(rename = "slope_5_2")]
    Slope52,
}

impl FromStr for Conjecture {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "urzua" => Ok(Conjecture::Urzua),
            "slope_8_3" => Ok(Conjecture::Slope83),
            "slope_5_2" => Ok(Conjecture::Slope52),
            _ => Err(Error::InvalidParameter(format!(
                "unknown conjecture {s:?}; expected urzua, slope_8_3 or slope_5_2"
            ))),
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conjecture::Urzua => "urzua",
            Conjecture::Slope83 => "slope_8_3",
            Conjecture::Slope52 => "slope_5_2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub source: Option<String>,
    pub ct: CombinatorialType,
    pub conjecture: Conjecture,
    pub field: GroundField,
    pub detail: String,
    pub notes: Vec<String>,
    pub label: String,
}

/// Detail of the violated inequality, or `None` when `ct` satisfies it or
/// lies outside its hypotheses.
pub fn violation_detail(ct: &CombinatorialType, which: Conjecture) -> Option<String> {
    let urzua_hyp = ct.d() >= 2 && ct.k() >= 2;
    match which {
        Conjecture::Urzua => {
            let u = check_urzua(ct);
            (urzua_hyp && !u.inequality_holds).then_some(u.inequality_detail)
        }
        Conjecture::Slope83 => {
            let c = compare_slope(ct, &Rational::new(8.into(), 3.into()))?;
            (urzua_hyp && c.exceeds).then(|| format!("3*c1sq vs 8*c2: {}", c.detail))
        }
        Conjecture::Slope52 => {
            let c = compare_slope(ct, &Rational::new(5.into(), 2.into()))?;
            c.exceeds.then(|| format!("2*c1sq vs 5*c2: {}", c.detail))
        }
    }
}

fn field_notes(which: Conjecture, field: GroundField, complex_only: bool) -> Vec<String> {
    if which != Conjecture::Slope52 {
        return Vec::new();
    }
    let mut notes = vec![match field {
        GroundField::Complex => "question posed over the real plane; read here over C".to_string(),
        GroundField::Real => "read over R; real realizability of the counts is not established".to_string(),
    }];
    if complex_only {
        notes.push("ground-field caveat: this arrangement is complex, the question concerns real ones".into());
    }
    notes
}

fn violation(source: Option<String>, ct: CombinatorialType, which: Conjecture, field: GroundField, complex_only: bool) -> Option<Violation> {
    let detail = violation_detail(&ct, which)?;
    Some(Violation {
        source,
        ct,
        conjecture: which,
        field,
        detail,
        notes: field_notes(which, field, complex_only),
        label: COMBINATORIAL_LABEL.into(),
    })
}

/// Every enumerated type violating `which`, in enumeration order.
pub fn scan_conjecture(p: EnumParams, which: Conjecture, field: GroundField) -> Result<Vec<Violation>> {
    let hits = enumerate_types_par(p, |ct| violation_detail(ct, which).is_some())?;
    Ok(hits
        .into_iter()
        .filter_map(|ct| violation(None, ct, which, field, false))
        .collect())
}

/// The same scan over the catalog entries.
pub fn scan_catalog(which: Conjecture, field: GroundField) -> Vec<Violation> {
    catalog_list()
        .iter()
        .filter_map(|name| {
            let e = catalog_get(name).expect("listed names resolve");
            let complex_only = e.flags.contains(&EntryFlag::ComplexOnly);
            let mut v = violation(Some(e.name.clone()), e.ct, which, field, complex_only)?;
            if e.flags.contains(&EntryFlag::KnownInconsistent) {
                v.notes.push("entry flagged known-inconsistent".into());
            }
            Some(v)
        })
        .collect()
}
