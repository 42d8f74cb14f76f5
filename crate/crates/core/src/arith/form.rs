//! Homogeneous polynomials in `x, y, z` and elimination between them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use super::upoly::UnivariatePoly;
use crate::error::{Error, Result};

/// Exponent triple `(a, b, c)` of the monomial `x^a y^b z^c`.
pub type Monomial = [u32; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    fn name(self) -> &'static str {
        ["x", "y", "z"][self.index()]
    }
}

type Terms = BTreeMap<Monomial, Rational>;

/// A homogeneous polynomial of fixed degree in `x, y, z`.
///
/// The zero form is representable (resultants of curves sharing a component
/// vanish); curve validation rejects it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TernaryForm {
    degree: u32,
    terms: Terms,
}

fn insert_term(terms: &mut Terms, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    let slot = terms.entry(m).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        terms.remove(&m);
    }
}

fn terms_mul(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m = [ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]];
            insert_term(&mut out, m, ca * cb);
        }
    }
    out
}

fn terms_add(a: &Terms, b: &Terms, sign: bool) -> Terms {
    let mut out = a.clone();
    for (m, c) in b {
        insert_term(&mut out, *m, if sign { c.clone() } else { -c.clone() });
    }
    out
}

impl TernaryForm {
    pub fn new(degree: u32, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Result<Self> {
        let mut map = Terms::new();
        for (m, c) in terms {
            if m.iter().sum::<u32>() != degree {
                return Err(Error::InvalidParameter(format!(
                    "monomial {m:?} does not have degree {degree}"
                )));
            }
            insert_term(&mut map, m, c);
        }
        Ok(Self { degree, terms: map })
    }

    pub fn zero(degree: u32) -> Self {
        Self {
            degree,
            terms: Terms::new(),
        }
    }

    /// `a*x + b*y + c*z`.
    pub fn line(a: Rational, b: Rational, c: Rational) -> Self {
        let terms = [([1, 0, 0], a), ([0, 1, 0], b), ([0, 0, 1], c)];
        Self::new(1, terms).expect("linear monomials")
    }

    /// `a*x^2 + b*y^2 + c*z^2 + d*xy + e*xz + f*yz`.
    pub fn conic(coeffs: [Rational; 6]) -> Self {
        let [a, b, c, d, e, f] = coeffs;
        let terms = [
            ([2, 0, 0], a),
            ([0, 2, 0], b),
            ([0, 0, 2], c),
            ([1, 1, 0], d),
            ([1, 0, 1], e),
            ([0, 1, 1], f),
        ];
        Self::new(2, terms).expect("quadratic monomials")
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficients `[a, b, c]` of a linear form.
    pub fn line_coeffs(&self) -> [Rational; 3] {
        [self.coeff([1, 0, 0]), self.coeff([0, 1, 0]), self.coeff([0, 0, 1])]
    }

    /// Coefficients in the `a x² + b y² + c z² + d xy + e xz + f yz` order.
    pub fn conic_coeffs(&self) -> [Rational; 6] {
        [
            self.coeff([2, 0, 0]),
            self.coeff([0, 2, 0]),
            self.coeff([0, 0, 2]),
            self.coeff([1, 1, 0]),
            self.coeff([1, 0, 1]),
            self.coeff([0, 1, 1]),
        ]
    }

    /// Symmetric matrix `A` of a quadratic form with `Q(v) = vᵀ A v`.
    pub fn symmetric_matrix(&self) -> [[Rational; 3]; 3] {
        let [a, b, c, d, e, f] = self.conic_coeffs();
        let h = |v: Rational| v / Rational::from_integer(BigInt::from(2));
        let (d2, e2, f2) = (h(d), h(e), h(f));
        [
            [a, d2.clone(), e2.clone()],
            [d2, b, f2.clone()],
            [e2, f2, c],
        ]
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let terms = if c.is_zero() {
            Terms::new()
        } else {
            self.terms.iter().map(|(m, v)| (*m, v * c)).collect()
        };
        Self {
            degree: self.degree,
            terms,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(
            self.degree == other.degree || self.is_zero() || other.is_zero(),
            "adding forms of different degree"
        );
        let degree = if self.is_zero() { other.degree } else { self.degree };
        Self {
            degree,
            terms: terms_add(&self.terms, &other.terms, true),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            degree: self.degree + other.degree,
            terms: terms_mul(&self.terms, &other.terms),
        }
    }

    pub fn eval(&self, p: &[Rational; 3]) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut v = c.clone();
                for (i, &e) in m.iter().enumerate() {
                    for _ in 0..e {
                        v *= &p[i];
                    }
                }
                v
            })
            .sum()
    }

    /// Partial derivative; a form of degree one less (constants for lines).
    pub fn partial(&self, var: Var) -> Self {
        let i = var.index();
        let mut out = Terms::new();
        for (m, c) in &self.terms {
            if m[i] == 0 {
                continue;
            }
            let mut mm = *m;
            mm[i] -= 1;
            insert_term(&mut out, mm, c * Rational::from_integer(BigInt::from(m[i])));
        }
        Self {
            degree: self.degree.saturating_sub(1),
            terms: out,
        }
    }

    pub fn gradient(&self) -> [Self; 3] {
        Var::ALL.map(|v| self.partial(v))
    }

    /// Degree in a single variable, `None` for the zero form.
    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms.keys().map(|m| m[var.index()]).max()
    }

    /// Coefficient forms `c_i` with `self = sum_i var^i * c_i`.
    pub fn coefficients_in(&self, var: Var) -> Vec<Self> {
        let i = var.index();
        let n = self.degree_in(var).unwrap_or(0) as usize;
        let mut out: Vec<Self> = (0..=n)
            .map(|e| Self::zero(self.degree - e as u32))
            .collect();
        for (m, c) in &self.terms {
            let e = m[i] as usize;
            let mut mm = *m;
            mm[i] = 0;
            insert_term(&mut out[e].terms, mm, c.clone());
        }
        out
    }

    /// Univariate polynomial in `var` obtained by fixing the other two
    /// coordinates to the corresponding entries of `at` (the `var` entry of
    /// `at` is ignored).
    pub fn restrict(&self, var: Var, at: &[Rational; 3]) -> UnivariatePoly {
        let i = var.index();
        let n = self.degree_in(var).unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (j, &e) in m.iter().enumerate() {
                if j != i {
                    for _ in 0..e {
                        v *= &at[j];
                    }
                }
            }
            coeffs[m[i] as usize] += v;
        }
        UnivariatePoly::new(coeffs)
    }

    /// `F(M v)`: substitutes `x_i -> sum_j m[i][j] * x_j`.
    pub fn substitute_linear(&self, m: &[[Rational; 3]; 3]) -> Self {
        let images: Vec<Terms> = m
            .iter()
            .map(|row| {
                let mut t = Terms::new();
                for (j, c) in row.iter().enumerate() {
                    let mut mono = [0u32; 3];
                    mono[j] = 1;
                    insert_term(&mut t, mono, c.clone());
                }
                t
            })
            .collect();
        let mut one = Terms::new();
        one.insert([0, 0, 0], Rational::one());
        let mut out = Terms::new();
        for (mono, c) in &self.terms {
            let mut prod = one.clone();
            for (i, &e) in mono.iter().enumerate() {
                for _ in 0..e {
                    prod = terms_mul(&prod, &images[i]);
                }
            }
            for (mm, v) in prod {
                insert_term(&mut out, mm, v * c);
            }
        }
        Self {
            degree: self.degree,
            terms: out,
        }
    }

    /// True iff `self = c * other` for some nonzero rational `c`.
    pub fn is_proportional(&self, other: &Self) -> bool {
        if self.degree != other.degree || self.is_zero() || other.is_zero() {
            return false;
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let (m0, c0) = self.terms.iter().next().expect("nonzero");
        let Some(d0) = other.terms.get(m0) else {
            return false;
        };
        let ratio = c0 / d0;
        self.terms
            .iter()
            .all(|(m, c)| other.terms.get(m).is_some_and(|d| &(d * &ratio) == c))
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Highest powers of x first, then y.
        for (m, c) in self.terms.iter().rev() {
            let (neg, mag) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mut mono = String::new();
            for v in Var::ALL {
                match m[v.index()] {
                    0 => {}
                    1 => mono.push_str(v.name()),
                    e => mono.push_str(&format!("{}^{e}", v.name())),
                }
            }
            if mono.is_empty() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

fn laplace_det(matrix: &[Vec<Terms>], row: usize, cols: &mut Vec<usize>) -> Terms {
    if cols.is_empty() {
        let mut one = Terms::new();
        one.insert([0, 0, 0], Rational::one());
        return one;
    }
    let mut acc = Terms::new();
    for pos in 0..cols.len() {
        let c = cols[pos];
        let entry = &matrix[row][c];
        if entry.is_empty() {
            continue;
        }
        let removed = cols.remove(pos);
        let minor = laplace_det(matrix, row + 1, cols);
        cols.insert(pos, removed);
        if minor.is_empty() {
            continue;
        }
        let term = terms_mul(entry, &minor);
        acc = terms_add(&acc, &term, pos % 2 == 0);
    }
    acc
}

/// Sylvester resultant of two forms with respect to `var`.
///
/// The rows of `q` come first in the Sylvester matrix, so for polynomials
/// monic in `var` the result is `prod p(beta)` over the roots `beta` of `q`.
/// The output is a form in the two remaining variables; it is zero exactly
/// when `p` and `q` share a factor involving `var`.
pub fn resultant(p: &TernaryForm, q: &TernaryForm, var: Var) -> Result<TernaryForm> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let m = p.degree_in(var).unwrap_or(0) as usize;
    let n = q.degree_in(var).unwrap_or(0) as usize;
    if m == 0 || n == 0 {
        return Err(Error::NothingToEliminate);
    }
    let pc = p.coefficients_in(var);
    let qc = q.coefficients_in(var);
    let size = m + n;
    let mut matrix: Vec<Vec<Terms>> = Vec::with_capacity(size);
    for s in 0..m {
        let mut row = vec![Terms::new(); size];
        for i in 0..=n {
            row[s + i] = qc[n - i].terms.clone();
        }
        matrix.push(row);
    }
    for s in 0..n {
        let mut row = vec![Terms::new(); size];
        for i in 0..=m {
            row[s + i] = pc[m - i].terms.clone();
        }
        matrix.push(row);
    }
    let mut cols: Vec<usize> = (0..size).collect();
    let det = laplace_det(&matrix, 0, &mut cols);
    let degree = det
        .keys()
        .next()
        .map(|mono| mono.iter().sum())
        .unwrap_or(p.degree * q.degree);
    debug_assert!(det.keys().all(|mono| mono.iter().sum::<u32>() == degree));
    Ok(TernaryForm { degree, terms: det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;
    use crate::arith::upoly::univariate_resultant;

    fn form(degree: u32, terms: &[(Monomial, i64)]) -> TernaryForm {
        TernaryForm::new(degree, terms.iter().map(|&(m, c)| (m, int(c)))).unwrap()
    }

    #[test]
    fn resultant_quadratic_and_line() {
        // res_x(x² − 2z², x − y) = y² − 2z²
        let p = form(2, &[([2, 0, 0], 1), ([0, 0, 2], -2)]);
        let q = form(1, &[([1, 0, 0], 1), ([0, 1, 0], -1)]);
        let r = resultant(&p, &q, Var::X).unwrap();
        assert_eq!(r, form(2, &[([0, 2, 0], 1), ([0, 0, 2], -2)]));
    }

    #[test]
    fn resultant_two_lines() {
        // res_x(x − a z, x − b z) = (b − a) z with a = 3, b = 7
        let p = form(1, &[([1, 0, 0], 1), ([0, 0, 1], -3)]);
        let q = form(1, &[([1, 0, 0], 1), ([0, 0, 1], -7)]);
        let r = resultant(&p, &q, Var::X).unwrap();
        assert_eq!(r, form(1, &[([0, 0, 1], 4)]));
    }

    #[test]
    fn resultant_of_form_with_itself_vanishes() {
        let p = form(2, &[([2, 0, 0], 1), ([0, 2, 0], 1), ([0, 0, 2], -1)]);
        assert!(resultant(&p, &p, Var::X).unwrap().is_zero());
    }

    #[test]
    fn nothing_to_eliminate() {
        let p = form(1, &[([0, 1, 0], 1)]);
        let q = form(1, &[([1, 0, 0], 1)]);
        assert_eq!(resultant(&p, &q, Var::X), Err(Error::NothingToEliminate));
    }

    #[test]
    fn specialization_matches_univariate() {
        let p = form(2, &[([2, 0, 0], 2), ([1, 1, 0], 3), ([0, 1, 1], -1), ([0, 0, 2], 5)]);
        let q = form(2, &[([2, 0, 0], 1), ([0, 2, 0], -4), ([1, 0, 1], 7)]);
        let r = resultant(&p, &q, Var::X).unwrap();
        for lam in -3..=3 {
            let at = [int(0), int(lam), int(1)];
            let lhs = r.eval(&[int(0), int(lam), int(1)]);
            let rhs = univariate_resultant(&p.restrict(Var::X, &at), &q.restrict(Var::X, &at));
            assert_eq!(lhs, rhs, "lambda = {lam}");
        }
    }

    #[test]
    fn substitution_and_gradient() {
        let c = form(2, &[([2, 0, 0], 1), ([0, 2, 0], 1), ([0, 0, 2], -1)]);
        let swap = [
            [int(0), int(1), int(0)],
            [int(1), int(0), int(0)],
            [int(0), int(0), int(1)],
        ];
        assert_eq!(c.substitute_linear(&swap), c);
        let g = c.gradient();
        let at = [int(0), int(1), int(1)];
        let vals: Vec<_> = g.iter().map(|f| f.eval(&at)).collect();
        assert_eq!(vals, vec![int(0), int(2), int(-2)]);
    }

    #[test]
    fn proportionality() {
        let a = form(1, &[([1, 0, 0], 1), ([0, 0, 1], -1)]);
        let b = form(1, &[([1, 0, 0], 2), ([0, 0, 1], -2)]);
        let c = form(1, &[([1, 0, 0], 2), ([0, 0, 1], 2)]);
        assert!(a.is_proportional(&b));
        assert!(!a.is_proportional(&c));
    }

    #[test]
    fn display_form() {
        let c = form(2, &[([2, 0, 0], 1), ([0, 2, 0], 1), ([0, 0, 2], -2)]);
        assert_eq!(c.to_string(), "x^2 + y^2 - 2*z^2");
    }
}
