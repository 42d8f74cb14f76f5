//! Named arrangements: geometric ones carry explicit equations, the others
//! only their published point counts.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::rational::{format_rational, int};
use crate::arith::Rational;
use crate::arrangement::{Arrangement, CombinatorialType, PlaneCurve};
use crate::error::{Error, Result};
use crate::format::{serialize_arrangement, serialize_combinatorial_type};
use crate::invariants::bezout_defect;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryKind {
    Geometric,
    Combinatorial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntryFlag {
    /// The printed counts violate the pairwise intersection identity.
    KnownInconsistent,
    /// Some singular point is not ordinary.
    NonOrdinary,
    /// Not realizable over the reals.
    ComplexOnly,
}

impl fmt::Display for EntryFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EntryFlag::KnownInconsistent => "known-inconsistent",
            EntryFlag::NonOrdinary => "non-ordinary",
            EntryFlag::ComplexOnly => "complex-only",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: EntryKind,
    pub arrangement: Option<Arrangement>,
    pub ct: CombinatorialType,
    pub provenance: Vec<String>,
    pub flags: Vec<EntryFlag>,
}

/// Parameters of the `pencil4` family: `k` conics
/// `x² − z² + tᵢ(y² − z²)` together with the lines `x ± z`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CatalogParams {
    pub k: Option<u32>,
    pub ts: Option<Vec<Rational>>,
}

const NAMES: [&str; 10] = [
    "chilean",
    "extended-chilean",
    "klein",
    "pappus-cl",
    "dual-hesse",
    "hesse-lines",
    "conic-65",
    "pencil4",
    "dbe-sharpness",
    "tangency-demo",
];

pub fn catalog_list() -> &'static [&'static str] {
    &NAMES
}

fn unknown(name: &str) -> Error {
    Error::UnknownEntry {
        name: name.into(),
        valid: NAMES.iter().map(|s| s.to_string()).collect(),
    }
}

fn ct(d: u32, k: u32, t: &[(u32, u64)]) -> CombinatorialType {
    CombinatorialType::new(d, k, t.iter().copied()).expect("catalog counts are in range")
}

fn line(c: [i64; 3], label: &str) -> PlaneCurve {
    PlaneCurve::line(c.map(int), label)
}

fn pencil_conic(t: &Rational, label: String) -> PlaneCurve {
    // x² − z² + t(y² − z²)
    let one = int(1);
    let zero = int(0);
    PlaneCurve::conic([one.clone(), t.clone(), -one - t, zero.clone(), zero.clone(), zero], label)
}

/// Stored type of `pencil4` with `k` conics: four base points on all
/// conics and one line each, plus the point where the lines meet.
pub fn pencil4_type(k: u32) -> CombinatorialType {
    if k == 1 {
        ct(2, 1, &[(2, 5)])
    } else {
        ct(2, k, &[(k + 1, 4), (2, 1)])
    }
}

fn pencil_values(params: &CatalogParams) -> Result<Vec<Rational>> {
    let ts = match (&params.ts, params.k) {
        (Some(ts), Some(k)) if ts.len() != k as usize => {
            return Err(Error::InvalidParameter(format!(
                "k = {k} but {} pencil values given",
                ts.len()
            )))
        }
        (Some(ts), _) => ts.clone(),
        (None, k) => (1..=k.unwrap_or(3) as i64).map(int).collect(),
    };
    if ts.is_empty() {
        return Err(Error::InvalidParameter("pencil4 needs k >= 1".into()));
    }
    for (i, t) in ts.iter().enumerate() {
        if *t == int(0) || *t == int(-1) {
            return Err(Error::InvalidParameter(format!(
                "pencil value {} makes the conic reducible",
                format_rational(t)
            )));
        }
        if ts[..i].contains(t) {
            return Err(Error::InvalidParameter(format!(
                "pencil value {} repeated",
                format_rational(t)
            )));
        }
    }
    Ok(ts)
}

fn pencil4(params: &CatalogParams) -> Result<Arrangement> {
    let ts = pencil_values(params)?;
    let mut curves = vec![line([1, 0, -1], "x-z"), line([1, 0, 1], "x+z")];
    curves.extend(
        ts.iter()
            .enumerate()
            .map(|(i, t)| pencil_conic(t, format!("C{} t={}", i + 1, format_rational(t)))),
    );
    Arrangement::validated(curves)
}

fn dbe_sharpness() -> Arrangement {
    let mut curves = vec![
        line([1, 0, -1], "x-z"),
        line([1, 0, 1], "x+z"),
        line([0, 1, -1], "y-z"),
        line([0, 1, 1], "y+z"),
        line([-1, 1, 0], "y-x"),
        line([1, 1, 0], "y+x"),
    ];
    curves.extend((1..=3).map(|t| pencil_conic(&int(t), format!("C{t} t={t}"))));
    Arrangement::new(curves)
}

fn tangency_demo() -> Arrangement {
    Arrangement::new(vec![
        line([0, 1, -1], "y-z"),
        PlaneCurve::conic([1, 1, -1, 0, 0, 0].map(int), "x2+y2-z2"),
    ])
}

/// Looks up an entry, building geometric ones with default parameters.
pub fn catalog_get(name: &str) -> Result<CatalogEntry> {
    catalog_get_with(name, &CatalogParams::default())
}

pub fn catalog_get_with(name: &str, params: &CatalogParams) -> Result<CatalogEntry> {
    let combinatorial = |ct: CombinatorialType, notes: &[&str]| CatalogEntry {
        name: name.into(),
        kind: EntryKind::Combinatorial,
        arrangement: None,
        ct,
        provenance: notes.iter().map(|s| s.to_string()).collect(),
        flags: Vec::new(),
    };
    let geometric = |a: Arrangement, ct: CombinatorialType, note: &str| CatalogEntry {
        name: name.into(),
        kind: EntryKind::Geometric,
        arrangement: Some(a),
        ct,
        provenance: vec![note.into()],
        flags: Vec::new(),
    };
    let entry = match name {
        "chilean" => combinatorial(
            ct(0, 12, &[(8, 9), (2, 12)]),
            &["12 conics of a Halphen pencil of index 2: 9 points of multiplicity 8, 12 double points"],
        ),
        "extended-chilean" => combinatorial(
            ct(9, 12, &[(9, 9), (5, 12), (2, 72)]),
            &[
                "Chilean conics with 9 lines added",
                "same counts as the Hesse arrangement of conics and lines",
            ],
        ),
        "klein" => {
            let mut e = combinatorial(
                ct(21, 21, &[(4, 189), (3, 252), (2, 42)]),
                &["21 lines and 21 polar conics of the Klein configuration"],
            );
            e.flags.push(EntryFlag::ComplexOnly);
            e
        }
        "pappus-cl" => {
            let mut e = combinatorial(
                ct(9, 4, &[(7, 2), (5, 4), (4, 2), (2, 36)]),
                &["9 Pappus lines with 4 conics through 5 of the 9 marked points; counts as printed"],
            );
            e.flags.push(EntryFlag::KnownInconsistent);
            e
        }
        "dual-hesse" => {
            let mut e = combinatorial(ct(9, 0, &[(3, 12)]), &["9 lines with 12 triple points"]);
            e.flags.push(EntryFlag::ComplexOnly);
            e
        }
        "hesse-lines" => {
            let mut e = combinatorial(
                ct(12, 0, &[(4, 9), (2, 12)]),
                &["Hesse configuration (12_3, 9_4); double points from C(12,2) - 6*9"],
            );
            e.flags.push(EntryFlag::ComplexOnly);
            e
        }
        "conic-65" => combinatorial(ct(0, 6, &[(5, 6)]), &["6 conics and 6 points, 5 conics through each"]),
        "pencil4" => {
            let a = pencil4(params)?;
            let k = a.conic_count();
            geometric(a, pencil4_type(k), "lines x-z, x+z and conics x^2-z^2+t(y^2-z^2) of one pencil")
        }
        "dbe-sharpness" => geometric(
            dbe_sharpness(),
            ct(6, 3, &[(6, 4), (2, 3)]),
            "lines x+-z, y+-z, y+-x and 3 pencil conics; 7 points against 9 curves",
        ),
        "tangency-demo" => {
            let mut e = geometric(tangency_demo(), ct(1, 1, &[(2, 1)]), "line tangent to a conic at (0:1:1)");
            e.flags.push(EntryFlag::NonOrdinary);
            e
        }
        _ => return Err(unknown(name)),
    };
    if entry.kind == EntryKind::Combinatorial && (params.k.is_some() || params.ts.is_some()) {
        return Err(Error::InvalidParameter(format!("{name} takes no parameters")));
    }
    Ok(entry)
}

/// Geometric entries only.
pub fn catalog_build(name: &str, params: &CatalogParams) -> Result<Arrangement> {
    let e = catalog_get_with(name, params)?;
    e.arrangement
        .ok_or_else(|| Error::InvalidParameter(format!("{name} is combinatorial only, no equations to build")))
}

impl CatalogEntry {
    /// File contents in the arrangement format for geometric entries, the
    /// combinatorial-type format otherwise, behind a comment header.
    pub fn export(&self) -> String {
        let mut out = format!("# {}\n", self.name);
        for p in &self.provenance {
            out.push_str(&format!("# {p}\n"));
        }
        for f in &self.flags {
            out.push_str(&format!("# flag: {f}\n"));
        }
        match &self.arrangement {
            Some(a) => out.push_str(&serialize_arrangement(a)),
            None => out.push_str(&serialize_combinatorial_type(&self.ct)),
        }
        out
    }

    pub fn render(&self) -> String {
        let kind = match self.kind {
            EntryKind::Geometric => "geometric",
            EntryKind::Combinatorial => "combinatorial",
        };
        let mut out = format!("name: {}\nkind: {kind}\ntype: {}\n", self.name, self.ct);
        out.push_str(&format!("bezout_defect: {}\n", bezout_defect(&self.ct)));
        for p in &self.provenance {
            out.push_str(&format!("provenance: {p}\n"));
        }
        if !self.flags.is_empty() {
            let flags: Vec<String> = self.flags.iter().map(ToString::to_string).collect();
            out.push_str(&format!("flags: {}\n", flags.join(", ")));
        }
        if let Some(a) = &self.arrangement {
            out.push_str("curves:\n");
            for c in &a.curves {
                out.push_str(&format!("  {c}\n"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::frac;
    use crate::format::{parse_arrangement, parse_combinatorial_type};
    use crate::intersection::combinatorial_type;

    #[test]
    fn names_are_unique_and_resolvable() {
        let mut names = catalog_list().to_vec();
        for n in &names {
            assert_eq!(catalog_get(n).unwrap().name, *n);
        }
        names.sort();
        names.dedup();
        assert_eq!(names.len(), catalog_list().len());
        match catalog_get("nope") {
            Err(Error::UnknownEntry { valid, .. }) => assert!(valid.iter().any(|v| v == "klein")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn printed_counts() {
        let c = catalog_get("chilean").unwrap();
        assert_eq!((c.ct.d(), c.ct.k(), c.ct.t(8), c.ct.t(2)), (0, 12, 9, 12));
        let k = catalog_get("klein").unwrap();
        assert_eq!((k.ct.t(2), k.ct.t(3), k.ct.t(4)), (42, 252, 189));
        assert_eq!(catalog_get("extended-chilean").unwrap().provenance.len(), 2);
    }

    #[test]
    fn defects() {
        for name in catalog_list() {
            let e = catalog_get(name).unwrap();
            let defect = bezout_defect(&e.ct);
            if e.flags.contains(&EntryFlag::NonOrdinary) {
                // A tangency absorbs two intersections into one point.
                assert!(defect > 0);
            } else if *name == "pappus-cl" {
                assert_eq!(defect, 2);
                assert!(e.flags.contains(&EntryFlag::KnownInconsistent));
            } else {
                assert_eq!(defect, 0, "{name}");
            }
        }
    }

    #[test]
    fn geometric_entries_rederive_their_type() {
        for name in catalog_list() {
            let e = catalog_get(name).unwrap();
            if let Some(a) = &e.arrangement {
                let derived = combinatorial_type(a).unwrap();
                assert_eq!(derived.ct, e.ct, "{name}");
                assert_eq!(derived.all_ordinary(), !e.flags.contains(&EntryFlag::NonOrdinary));
            }
        }
        for k in 1..=5 {
            let a = catalog_build("pencil4", &CatalogParams { k: Some(k), ts: None }).unwrap();
            assert_eq!(combinatorial_type(&a).unwrap().ct, pencil4_type(k));
        }
        let odd = CatalogParams {
            k: None,
            ts: Some(vec![frac(1, 2), frac(-3, 2), int(5)]),
        };
        let a = catalog_build("pencil4", &odd).unwrap();
        assert_eq!(combinatorial_type(&a).unwrap().ct, pencil4_type(3));
    }

    #[test]
    fn pencil_parameter_validation() {
        for ts in [vec![int(1), int(-1)], vec![int(0)], vec![int(2), int(2)], vec![]] {
            let p = CatalogParams { k: None, ts: Some(ts) };
            assert!(matches!(catalog_build("pencil4", &p), Err(Error::InvalidParameter(_))));
        }
        let p = CatalogParams {
            k: Some(2),
            ts: Some(vec![int(1)]),
        };
        assert!(catalog_build("pencil4", &p).is_err());
        assert!(catalog_build("klein", &CatalogParams::default()).is_err());
        assert!(catalog_get_with("klein", &CatalogParams { k: Some(2), ts: None }).is_err());
    }

    #[test]
    fn exports_round_trip() {
        for name in catalog_list() {
            let e = catalog_get(name).unwrap();
            let text = e.export();
            match &e.arrangement {
                Some(a) => assert_eq!(&parse_arrangement(&text).unwrap(), a),
                None => assert_eq!(parse_combinatorial_type(&text).unwrap(), e.ct),
            }
        }
        assert!(catalog_get("pappus-cl").unwrap().render().contains("flags: known-inconsistent"));
    }
}
