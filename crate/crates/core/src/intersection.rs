//! Exact singular points of an arrangement.
//!
//! Every intersection point is stored in a simple extension `Q(θ)`: the point
//! carries an algebraic generator `θ` and its three coordinates as
//! polynomials in `θ`. Incidence and tangency questions then reduce to
//! deciding whether one polynomial vanishes at `θ`, which is exact.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::algebraic::{
    field_is_zero, field_to_algebraic, field_to_algebraic_all, roots_of_squarefree, DEFAULT_BITS,
};
use crate::arith::upoly::determinant;
use crate::arith::{resultant, AlgebraicNumber, Rational, TernaryForm, UnivariatePoly, Var};
use crate::arrangement::{Arrangement, CombinatorialType, CurveKind, PlaneCurve};
use crate::error::{Error, Result};

/// Coordinate changes tried before giving up on a pair.
const MAX_ATTEMPTS: usize = 64;

type Matrix = [[Rational; 3]; 3];

/// A point of the complex projective plane with exact algebraic coordinates,
/// normalized so that the last nonzero coordinate is 1.
#[derive(Clone, Debug)]
pub struct ProjectivePoint {
    coords: [AlgebraicNumber; 3],
    theta: AlgebraicNumber,
    field: [UnivariatePoly; 3],
}

impl ProjectivePoint {
    /// A rational point; fails on the zero vector.
    pub fn rational(p: [Rational; 3]) -> Result<Self> {
        let idx = (0..3)
            .rev()
            .find(|&i| !p[i].is_zero())
            .ok_or_else(|| Error::InvalidParameter("zero vector is not a projective point".into()))?;
        let scale = p[idx].clone();
        let normalized = p.map(|c| c / &scale);
        Ok(Self {
            coords: normalized.clone().map(AlgebraicNumber::from_rational),
            theta: AlgebraicNumber::from_int(0),
            field: normalized.map(UnivariatePoly::constant),
        })
    }

    pub fn coords(&self) -> &[AlgebraicNumber; 3] {
        &self.coords
    }

    pub fn as_rational(&self) -> Option<[Rational; 3]> {
        let [a, b, c] = &self.coords;
        Some([a.as_rational()?, b.as_rational()?, c.as_rational()?])
    }

    pub fn is_rational(&self) -> bool {
        self.coords.iter().all(AlgebraicNumber::is_rational)
    }

    /// The value of `form` at the point, as an element of `Q(θ)`.
    fn eval_field(&self, form: &TernaryForm) -> UnivariatePoly {
        eval_in_field(form, &self.field, self.theta.minimal_polynomial())
    }

    /// True iff `form` vanishes at the point.
    pub fn lies_on(&self, form: &TernaryForm) -> bool {
        field_is_zero(&self.theta, &self.eval_field(form))
    }

    fn gradient_field(&self, form: &TernaryForm) -> [UnivariatePoly; 3] {
        form.gradient().map(|g| self.eval_field(&g))
    }
}

impl PartialEq for ProjectivePoint {
    fn eq(&self, other: &Self) -> bool {
        self.coords.iter().zip(&other.coords).all(|(a, b)| a == b)
    }
}

impl Eq for ProjectivePoint {}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.coords;
        write!(f, "({a}:{b}:{c})")
    }
}

fn eval_in_field(form: &TernaryForm, coords: &[UnivariatePoly; 3], h: &UnivariatePoly) -> UnivariatePoly {
    let mut acc = UnivariatePoly::zero();
    for (mono, c) in form.terms() {
        let mut t = UnivariatePoly::constant(c.clone());
        for (i, &e) in mono.iter().enumerate() {
            for _ in 0..e {
                t = t.mul_mod(&coords[i], h);
            }
        }
        acc = &acc + &t;
    }
    acc.rem(h)
}

fn cross_field(a: &[UnivariatePoly; 3], b: &[UnivariatePoly; 3], h: &UnivariatePoly) -> [UnivariatePoly; 3] {
    let m = |u: &UnivariatePoly, v: &UnivariatePoly| u.mul_mod(v, h);
    [
        &m(&a[1], &b[2]) - &m(&a[2], &b[1]),
        &m(&a[2], &b[0]) - &m(&a[0], &b[2]),
        &m(&a[0], &b[1]) - &m(&a[1], &b[0]),
    ]
}

/// Rescales `v` so its last nonzero entry at `theta` is 1. The generator
/// may come back with a smaller defining polynomial when the pivot entry
/// shares roots with the old one.
fn normalize_at(theta: &AlgebraicNumber, v: &[UnivariatePoly; 3]) -> Option<(AlgebraicNumber, [UnivariatePoly; 3])> {
    let h = theta.minimal_polynomial();
    let idx = (0..3).rev().find(|&i| !field_is_zero(theta, &v[i]))?;
    let pivot = v[idx].rem(h);
    let common = h.gcd(&pivot);
    let theta = if common.deg() > 0 {
        theta.restricted_to(&h.exact_div(&common))
    } else {
        theta.clone()
    };
    let h = theta.minimal_polynomial();
    let inv = pivot.rem(h).inv_mod(h).expect("pivot is a unit modulo the reduced polynomial");
    let out = [0, 1, 2].map(|j| match j.cmp(&idx) {
        std::cmp::Ordering::Less => v[j].mul_mod(&inv, h),
        std::cmp::Ordering::Equal => UnivariatePoly::one(),
        std::cmp::Ordering::Greater => UnivariatePoly::zero(),
    });
    Some((theta, out))
}

/// Tangent line of `c` at `p` (the gradient of its form), normalized.
pub fn tangent_line(c: &PlaneCurve, p: &ProjectivePoint) -> Result<[AlgebraicNumber; 3]> {
    if !p.lies_on(&c.form) {
        return Err(Error::NotOnCurve);
    }
    let grad = p.gradient_field(&c.form);
    let (theta, v) = normalize_at(&p.theta, &grad)
        .ok_or_else(|| Error::OutOfDomain("singular point of the curve".into()))?;
    Ok([0, 1, 2].map(|i| field_to_algebraic(&theta, &v[i])))
}

fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn identity() -> Matrix {
    let r = |i: usize| [0, 1, 2].map(|j| if i == j { Rational::one() } else { Rational::zero() });
    [r(0), r(1), r(2)]
}

fn random_matrix(seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m: Matrix = [0, 1, 2].map(|_| [0, 1, 2].map(|_| Rational::from_integer(rng.gen_range(-3i64..=3).into())));
        if !determinant(m.iter().map(|r| r.to_vec()).collect()).is_zero() {
            return m;
        }
    }
}

/// Points where two distinct curves meet, each with its intersection
/// multiplicity. The multiplicities add up to the product of the degrees.
pub fn intersect_pair(c1: &PlaneCurve, c2: &PlaneCurve) -> Result<Vec<(ProjectivePoint, usize)>> {
    if c1.form.is_proportional(&c2.form) {
        return Err(Error::IdenticalCurves);
    }
    if c1.kind == CurveKind::Line && c2.kind == CurveKind::Line {
        let p = cross(&c1.form.line_coeffs(), &c2.form.line_coeffs());
        return Ok(vec![(ProjectivePoint::rational(p)?, 1)]);
    }
    for attempt in 0..MAX_ATTEMPTS {
        let m = if attempt == 0 {
            identity()
        } else {
            random_matrix(attempt as u64)
        };
        if let Some(points) = intersect_in_chart(&c1.form, &c2.form, &m)? {
            return Ok(points);
        }
    }
    Err(Error::NoGenericProjection(MAX_ATTEMPTS))
}

/// `x` on the common zero set as a rational function `num / den` of `y`,
/// in the affine chart `z = 1`.
fn x_of_y(g1: &TernaryForm, g2: &TernaryForm) -> (UnivariatePoly, UnivariatePoly) {
    let at = [Rational::zero(), Rational::zero(), Rational::one()];
    let coeffs = |g: &TernaryForm| -> Vec<UnivariatePoly> {
        g.coefficients_in(Var::X).iter().map(|c| c.restrict(Var::Y, &at)).collect()
    };
    let (a, b) = (coeffs(g1), coeffs(g2));
    if a.len() == 2 {
        return (-&a[0], a[1].clone());
    }
    if b.len() == 2 {
        return (-&b[0], b[1].clone());
    }
    // b2·G1 − a2·G2 cancels the x² terms.
    let (a2, b2) = (&a[2], &b[2]);
    let s1 = &(b2 * &a[1]) - &(a2 * &b[1]);
    let s0 = &(b2 * &a[0]) - &(a2 * &b[0]);
    (-&s0, s1)
}

/// Splits the roots of the squarefree `g` by which coordinate of `p` is the
/// last one nonzero there, returning each factor with `p` rescaled by it.
fn split_normalize(g: &UnivariatePoly, p: &[UnivariatePoly; 3]) -> Vec<(UnivariatePoly, [UnivariatePoly; 3])> {
    let mut out = Vec::new();
    let mut rest = g.monic();
    for idx in (0..3).rev() {
        if rest.deg() == 0 {
            break;
        }
        let pivot = p[idx].rem(&rest);
        let common = rest.gcd(&pivot);
        let part = rest.exact_div(&common);
        if part.deg() > 0 {
            let inv = pivot.rem(&part).inv_mod(&part).expect("pivot is a unit on its part");
            let coords = [0, 1, 2].map(|j| match j.cmp(&idx) {
                std::cmp::Ordering::Less => p[j].mul_mod(&inv, &part),
                std::cmp::Ordering::Equal => UnivariatePoly::one(),
                std::cmp::Ordering::Greater => UnivariatePoly::zero(),
            });
            out.push((part, coords));
        }
        rest = common;
    }
    out
}

fn apply(m: &Matrix, v: &[Rational; 3]) -> [Rational; 3] {
    [0, 1, 2].map(|i| (0..3).map(|j| &m[i][j] * &v[j]).sum())
}

/// Solves in the coordinates `v` with original point `M v`. Returns `None`
/// when these coordinates are not generic for the pair.
fn intersect_in_chart(f1: &TernaryForm, f2: &TernaryForm, m: &Matrix) -> Result<Option<Vec<(ProjectivePoint, usize)>>> {
    let g1 = f1.substitute_linear(m);
    let g2 = f2.substitute_linear(m);
    let (n1, n2) = (g1.degree(), g2.degree());
    if g1.coeff([n1, 0, 0]).is_zero() || g2.coeff([n2, 0, 0]).is_zero() {
        return Ok(None);
    }
    let r = resultant(&g1, &g2, Var::X)?;
    if r.is_zero() {
        return Err(Error::IdenticalCurves);
    }
    let ry = r.restrict(Var::Y, &[Rational::zero(), Rational::zero(), Rational::one()]);
    if ry.deg() != (n1 * n2) as usize {
        return Ok(None);
    }
    let (xnum, xden) = x_of_y(&g1, &g2);
    if xden.is_zero() || ry.squarefree_part().gcd(&xden).deg() > 0 {
        return Ok(None);
    }
    let y = UnivariatePoly::x();
    let mut out = Vec::new();
    for (f, mult) in ry.squarefree_decomposition() {
        let (rational, irrational): (Vec<_>, Vec<_>) = roots_of_squarefree(&f, DEFAULT_BITS)
            .into_iter()
            .partition(AlgebraicNumber::is_rational);
        for root in rational {
            let y0 = root.as_rational().expect("rational root");
            let x0 = xnum.eval(&y0) / xden.eval(&y0);
            let p = apply(m, &[x0, y0, Rational::one()]);
            out.push((ProjectivePoint::rational(p)?, mult));
        }
        let Some(first) = irrational.first() else {
            continue;
        };
        let g = first.minimal_polynomial().clone();
        let x = xnum.mul_mod(&xden.inv_mod(&g).expect("denominator is a unit"), &g);
        let p = [0, 1, 2].map(|i| {
            let t = &(&x.scale(&m[i][0]) + &y.scale(&m[i][1])) + &UnivariatePoly::constant(m[i][2].clone());
            t.rem(&g)
        });
        let parts = split_normalize(&g, &p);
        for (part, coords) in &parts {
            let thetas: Vec<AlgebraicNumber> = irrational
                .iter()
                .filter(|t| parts.len() == 1 || t.is_root_of(part))
                .map(|t| t.restricted_to(part))
                .collect();
            let Some(first) = thetas.first() else {
                continue;
            };
            let coords = coords.clone().map(|c| c.rem(first.minimal_polynomial()));
            let values = coords.clone().map(|c| field_to_algebraic_all(&thetas, &c));
            for (n, theta) in thetas.into_iter().enumerate() {
                let point = ProjectivePoint {
                    coords: [0, 1, 2].map(|i| values[i][n].clone()),
                    theta,
                    field: coords.clone(),
                };
                out.push((point, mult));
            }
        }
    }
    debug_assert_eq!(out.iter().map(|(_, m)| m).sum::<usize>(), (n1 * n2) as usize);
    Ok(Some(out))
}

/// The intersection of curves `i` and `j` of an arrangement.
#[derive(Clone, Debug)]
pub struct PairIntersection {
    pub i: usize,
    pub j: usize,
    pub points: Vec<(ProjectivePoint, usize)>,
}

impl PairIntersection {
    pub fn multiplicity_sum(&self) -> usize {
        self.points.iter().map(|(_, m)| m).sum()
    }
}

/// A point together with every curve through it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPoint {
    pub location: ProjectivePoint,
    pub curves: BTreeSet<usize>,
    /// Largest intersection multiplicity of a curve pair at this point.
    pub max_pair_multiplicity: usize,
}

impl SingularPoint {
    pub fn multiplicity(&self) -> u32 {
        self.curves.len() as u32
    }
}

/// Merges points at the same location, taking the union of their incident
/// curves. Applying it to its own output changes nothing.
pub fn cluster_points(items: impl IntoIterator<Item = SingularPoint>) -> Vec<SingularPoint> {
    let mut clusters: Vec<SingularPoint> = Vec::new();
    for item in items {
        match clusters.iter_mut().find(|c| c.location == item.location) {
            Some(c) => {
                c.curves.extend(item.curves);
                c.max_pair_multiplicity = c.max_pair_multiplicity.max(item.max_pair_multiplicity);
            }
            None => clusters.push(item),
        }
    }
    clusters
}

/// Clusters the pairwise results of an arrangement.
pub fn cluster_pairs(pairs: &[PairIntersection]) -> Vec<SingularPoint> {
    cluster_points(pairs.iter().flat_map(|pr| {
        pr.points.iter().map(move |(p, m)| SingularPoint {
            location: p.clone(),
            curves: BTreeSet::from([pr.i, pr.j]),
            max_pair_multiplicity: *m,
        })
    }))
}

/// True iff the incident curves have pairwise distinct tangents at the point.
pub fn check_ordinary(s: &SingularPoint, a: &Arrangement) -> bool {
    let p = &s.location;
    let h = p.theta.minimal_polynomial();
    let grads: Vec<[UnivariatePoly; 3]> = s
        .curves
        .iter()
        .map(|&i| p.gradient_field(&a.curves[i].form))
        .collect();
    for (n, g1) in grads.iter().enumerate() {
        for g2 in &grads[n + 1..] {
            if cross_field(g1, g2, h).iter().all(|c| field_is_zero(&p.theta, c)) {
                return false;
            }
        }
    }
    true
}

/// Everything derived from the geometry of an arrangement.
#[derive(Clone, Debug)]
pub struct DerivedType {
    pub ct: CombinatorialType,
    pub points: Vec<SingularPoint>,
    /// Parallel to `points`.
    pub ordinary: Vec<bool>,
    pub pairs: Vec<PairIntersection>,
}

impl DerivedType {
    pub fn all_ordinary(&self) -> bool {
        self.ordinary.iter().all(|&o| o)
    }

    pub fn non_ordinary_points(&self) -> impl Iterator<Item = &SingularPoint> {
        self.points
            .iter()
            .zip(&self.ordinary)
            .filter(|(_, &o)| !o)
            .map(|(p, _)| p)
    }
}

/// Intersects every pair of curves (in parallel), clusters the points and
/// counts them by multiplicity. Non-ordinary points are flagged, not
/// rejected.
pub fn combinatorial_type(a: &Arrangement) -> Result<DerivedType> {
    a.validate()?;
    let n = a.len();
    let index_pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let pairs: Vec<PairIntersection> = index_pairs
        .par_iter()
        .map(|&(i, j)| {
            intersect_pair(&a.curves[i], &a.curves[j]).map(|points| PairIntersection { i, j, points })
        })
        .collect::<Result<_>>()?;
    let points = cluster_pairs(&pairs);
    let ordinary = points.iter().map(|s| check_ordinary(s, a)).collect();
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for s in &points {
        *counts.entry(s.multiplicity()).or_insert(0) += 1;
    }
    let ct = CombinatorialType::new(a.line_count(), a.conic_count(), counts)?;
    Ok(DerivedType {
        ct,
        points,
        ordinary,
        pairs,
    })
}

/// Six lines of the arrangement meeting one another only in double and
/// triple points, if any exist.
pub fn six_line_subarrangement(a: &Arrangement, points: &[SingularPoint]) -> Option<[usize; 6]> {
    let lines = a.line_indices();
    if lines.len() < 6 {
        return None;
    }
    let mut chosen = Vec::with_capacity(6);
    fn search(lines: &[usize], start: usize, chosen: &mut Vec<usize>, points: &[SingularPoint]) -> bool {
        let ok = points
            .iter()
            .all(|p| chosen.iter().filter(|i| p.curves.contains(i)).count() <= 3);
        if !ok {
            return false;
        }
        if chosen.len() == 6 {
            return true;
        }
        for n in start..lines.len() {
            chosen.push(lines[n]);
            if search(lines, n + 1, chosen, points) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    search(&lines, 0, &mut chosen, points).then(|| chosen.try_into().expect("six lines"))
}
