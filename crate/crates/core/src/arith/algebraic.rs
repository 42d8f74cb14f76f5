//! Complex algebraic numbers: a squarefree integer polynomial plus a
//! certified box containing exactly one of its roots.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use super::complex::{isolate_squarefree, ComplexBox};
use super::rational::{dyadic, format_rational, Rational};
use super::upoly::{charpoly, UnivariatePoly};
use crate::error::{Error, Result};

/// Box width used for freshly isolated roots.
pub const DEFAULT_BITS: u64 = 64;

#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    poly: UnivariatePoly,
    bx: ComplexBox,
}

impl AlgebraicNumber {
    pub fn from_rational(r: Rational) -> Self {
        Self {
            poly: UnivariatePoly::linear_root(&r).primitive(),
            bx: ComplexBox::point(r, Rational::zero()),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// Squarefree, primitive defining polynomial (not necessarily
    /// irreducible).
    pub fn minimal_polynomial(&self) -> &UnivariatePoly {
        &self.poly
    }

    pub fn bounding_box(&self) -> &ComplexBox {
        &self.bx
    }

    pub fn as_rational(&self) -> Option<Rational> {
        (self.poly.degree() == Some(1)).then(|| -self.poly.coeff(0) / self.poly.coeff(1))
    }

    pub fn is_rational(&self) -> bool {
        self.poly.degree() == Some(1)
    }

    pub fn is_zero(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_zero())
    }

    pub fn approx(&self) -> Complex64 {
        self.bx.center_f64()
    }

    /// A copy whose box is no wider than `width`; the enclosed root is the
    /// same.
    pub fn refined(&self, width: &Rational) -> Self {
        if self.is_rational() || self.bx.width() <= *width {
            return self.clone();
        }
        let mut bits = bits_for_width(width);
        loop {
            let boxes = isolate_squarefree(&self.poly, bits);
            let mut hits = boxes.iter().filter(|b| b.intersects(&self.bx));
            let first = hits.next().expect("the enclosed root lies in some box");
            if hits.next().is_none() {
                let bx = first
                    .intersection(&self.bx)
                    .expect("intersecting boxes");
                return Self {
                    poly: self.poly.clone(),
                    bx,
                };
            }
            bits += 16;
        }
    }

    /// The same root with its defining polynomial replaced by a factor
    /// that also vanishes at it.
    pub(crate) fn restricted_to(&self, factor: &UnivariatePoly) -> Self {
        let poly = factor.primitive();
        if poly.deg() == 1 {
            return Self::from_rational(-poly.coeff(0) / poly.coeff(1));
        }
        Self {
            poly,
            bx: self.bx.clone(),
        }
    }

    /// True iff `q(self) = 0`.
    pub fn is_root_of(&self, q: &UnivariatePoly) -> bool {
        if q.is_zero() {
            return true;
        }
        if let Some(r) = self.as_rational() {
            return q.eval(&r).is_zero();
        }
        let g = self.poly.gcd(q);
        match g.deg() {
            0 => false,
            d if d == self.poly.deg() => true,
            _ => roots_of_squarefree(&g, DEFAULT_BITS)
                .iter()
                .any(|r| alg_equal(self, r)),
        }
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{}", format_rational(&r));
        }
        let z = self.approx();
        if z.im.abs() < 1e-12 {
            write!(f, "~{:.6}", z.re)
        } else {
            write!(f, "~{:.6}{:+.6}i", z.re, z.im)
        }
    }
}

/// Smallest `k` with `2^-k <= width`.
fn bits_for_width(width: &Rational) -> u64 {
    let k = width.denom().bits() as i64 - width.numer().bits() as i64 + 1;
    k.max(1) as u64
}

/// `log2` of a lower bound on the distance between distinct roots of a
/// squarefree integer polynomial (Mahler's bound with `|disc| >= 1`),
/// returned as a positive bit count.
pub fn separation_bits(p: &UnivariatePoly) -> u64 {
    let n = p.deg();
    if n < 2 {
        return 0;
    }
    let max_bits = p
        .integer_coeffs()
        .iter()
        .map(|c| c.bits())
        .max()
        .unwrap_or(1) as f64;
    let nf = n as f64;
    let norm_bits = 0.5 * (nf + 1.0).log2() + max_bits;
    let l = (nf + 2.0) / 2.0 * nf.log2() + (nf - 1.0) * norm_bits;
    l.ceil() as u64 + 2
}

/// All roots of a squarefree polynomial. Rational roots come back exactly;
/// the rest carry the polynomial with the rational roots divided out.
pub(crate) fn roots_of_squarefree(f: &UnivariatePoly, bits: u64) -> Vec<AlgebraicNumber> {
    let fp = f.primitive();
    if fp.deg() == 0 {
        return Vec::new();
    }
    if fp.deg() == 1 {
        let r = -fp.coeff(0) / fp.coeff(1);
        return vec![AlgebraicNumber::from_rational(r)];
    }
    let lead = fp.lead().to_integer();
    let need = bits.max(lead.bits() + 3);
    let boxes = isolate_squarefree(&fp, need);
    let lead_q = Rational::from_integer(lead);
    let mut rational = Vec::new();
    let mut irrational = Vec::new();
    for bx in boxes {
        if bx.im.contains(&Rational::zero()) {
            let m = (&lead_q * bx.re.mid()).round();
            let cand = m / &lead_q;
            if bx.re.contains(&cand) && fp.eval(&cand).is_zero() {
                rational.push(cand);
                continue;
            }
        }
        irrational.push(bx);
    }
    let mut rest = fp.clone();
    for r in &rational {
        rest = rest.exact_div(&UnivariatePoly::linear_root(r));
    }
    let rest = rest.primitive();
    let mut out: Vec<AlgebraicNumber> = rational
        .into_iter()
        .map(AlgebraicNumber::from_rational)
        .collect();
    out.extend(irrational.into_iter().map(|bx| AlgebraicNumber {
        poly: rest.clone(),
        bx,
    }));
    out
}

/// One entry per distinct complex root of `p` with its multiplicity.
pub fn isolate_roots(p: &UnivariatePoly) -> Result<Vec<(AlgebraicNumber, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (f, m) in p.squarefree_decomposition() {
        for r in roots_of_squarefree(&f, DEFAULT_BITS) {
            out.push((r, m));
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        let (za, zb) = (a.approx(), b.approx());
        za.re.total_cmp(&zb.re).then(za.im.total_cmp(&zb.im))
    });
    Ok(out)
}

/// Exact equality of two algebraic numbers.
///
/// Disjoint boxes decide immediately. Otherwise both numbers are roots of
/// `lcm(p_a, p_b)`; after refining both boxes below a quarter of that
/// polynomial's root-separation bound, the boxes meet iff the numbers
/// coincide.
pub fn alg_equal(a: &AlgebraicNumber, b: &AlgebraicNumber) -> bool {
    let zero = Rational::zero();
    match (a.as_rational(), b.as_rational()) {
        (Some(x), Some(y)) => return x == y,
        _ if !a.bx.intersects(&b.bx) => return false,
        (Some(r), None) => return b.bx.contains(&r, &zero) && b.poly.eval(&r).is_zero(),
        (None, Some(r)) => return a.bx.contains(&r, &zero) && a.poly.eval(&r).is_zero(),
        (None, None) => {}
    }
    let g = a.poly.gcd(&b.poly);
    if g.deg() == 0 {
        return false;
    }
    let lcm = (&a.poly * &b.poly).exact_div(&g).primitive();
    let bits = separation_bits(&lcm) + 2;
    let width = dyadic(BigInt::one(), bits);
    let ra = a.refined(&width);
    let rb = b.refined(&width);
    ra.bx.intersects(&rb.bx)
}

/// `q(theta) = 0`, for `q` read in `Q[y] / (p_theta)`.
pub(crate) fn field_is_zero(theta: &AlgebraicNumber, q: &UnivariatePoly) -> bool {
    let r = q.rem(&theta.poly);
    r.is_zero() || theta.is_root_of(&r)
}

/// The algebraic number `q(theta)`.
pub(crate) fn field_to_algebraic(theta: &AlgebraicNumber, q: &UnivariatePoly) -> AlgebraicNumber {
    field_to_algebraic_all(std::slice::from_ref(theta), q)
        .pop()
        .expect("one input, one output")
}

/// `q(theta)` for several roots `theta` of one common defining polynomial.
pub(crate) fn field_to_algebraic_all(thetas: &[AlgebraicNumber], q: &UnivariatePoly) -> Vec<AlgebraicNumber> {
    let Some(first) = thetas.first() else {
        return Vec::new();
    };
    debug_assert!(thetas.iter().all(|t| t.poly == first.poly));
    if first.is_rational() {
        return thetas
            .iter()
            .map(|t| AlgebraicNumber::from_rational(q.eval(&t.as_rational().expect("rational"))))
            .collect();
    }
    let h = &first.poly;
    let q = q.rem(h);
    if q.is_constant() {
        return vec![AlgebraicNumber::from_rational(q.coeff(0)); thetas.len()];
    }
    let n = h.deg();
    // Multiplication-by-q matrix on the basis 1, y, ..., y^(n-1).
    let mut matrix = vec![vec![Rational::zero(); n]; n];
    let mut col = q.clone();
    let y = UnivariatePoly::x();
    for j in 0..n {
        for (i, row) in matrix.iter_mut().enumerate() {
            row[j] = col.coeff(i);
        }
        col = col.mul_mod(&y, h);
    }
    let defining = charpoly(&matrix).squarefree_part();
    let candidates = roots_of_squarefree(&defining, DEFAULT_BITS);
    thetas
        .iter()
        .map(|theta| identify(theta, &q, candidates.clone()))
        .collect()
}

/// Picks the candidate equal to `q(theta)` by shrinking enclosures until
/// exactly one candidate box meets the interval image of `theta`'s box.
fn identify(theta: &AlgebraicNumber, q: &UnivariatePoly, mut candidates: Vec<AlgebraicNumber>) -> AlgebraicNumber {
    let mut th = theta.clone();
    loop {
        let enclosure = th.bx.eval_poly(q);
        let hits: Vec<usize> = (0..candidates.len())
            .filter(|&i| candidates[i].bx.intersects(&enclosure))
            .collect();
        if let [only] = hits[..] {
            let c = &candidates[only];
            if c.is_rational() {
                return c.clone();
            }
            let bx = c
                .bx
                .intersection(&enclosure)
                .expect("value lies in both boxes");
            return AlgebraicNumber {
                poly: c.poly.clone(),
                bx,
            };
        }
        let w = th.bx.width() / Rational::from_integer(BigInt::from(256));
        th = th.refined(&w);
        for i in hits {
            let cw = candidates[i].bx.width() / Rational::from_integer(BigInt::from(256));
            candidates[i] = candidates[i].refined(&cw);
        }
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        alg_equal(self, other)
    }
}

impl Eq for AlgebraicNumber {}

impl From<Rational> for AlgebraicNumber {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::SQRT_2;
    use crate::arith::rational::{frac, int};

    fn p(c: &[i64]) -> UnivariatePoly {
        UnivariatePoly::from_ints(c)
    }

    fn root_near(poly: &UnivariatePoly, re: f64, im: f64) -> AlgebraicNumber {
        isolate_roots(poly)
            .unwrap()
            .into_iter()
            .map(|(r, _)| r)
            .find(|r| (r.approx() - Complex64::new(re, im)).norm() < 1e-6)
            .expect("root near target")
    }

    #[test]
    fn isolate_sqrt_two() {
        let roots = isolate_roots(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|(r, m)| *m == 1 && !r.is_rational()));
        let b0 = roots[0].0.bounding_box();
        let b1 = roots[1].0.bounding_box();
        assert!(!b0.intersects(b1));
        assert!((roots[0].0.approx().re + SQRT_2).abs() < 1e-6);
        assert!((roots[1].0.approx().re - SQRT_2).abs() < 1e-6);
    }

    #[test]
    fn isolate_i() {
        let roots = isolate_roots(&p(&[1, 0, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        let ims: Vec<f64> = roots.iter().map(|(r, _)| r.approx().im).collect();
        assert!(ims.iter().any(|v| (v - 1.0).abs() < 1e-9));
        assert!(ims.iter().any(|v| (v + 1.0).abs() < 1e-9));
    }

    #[test]
    fn isolate_double_root() {
        let roots = isolate_roots(&p(&[1, -2, 1])).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].0.as_rational(), Some(int(1)));
        assert_eq!(roots[0].1, 2);
    }

    #[test]
    fn isolate_zero_polynomial_fails() {
        assert_eq!(isolate_roots(&UnivariatePoly::zero()).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn rational_roots_extracted() {
        // (3x - 2)(x^2 + x + 1)(2x + 5)
        let f = &(&p(&[-2, 3]) * &p(&[1, 1, 1])) * &p(&[5, 2]);
        let roots = isolate_roots(&f).unwrap();
        let rats: Vec<Rational> = roots.iter().filter_map(|(r, _)| r.as_rational()).collect();
        assert_eq!(rats, vec![frac(-5, 2), frac(2, 3)]);
        assert_eq!(roots.len(), 4);
    }

    #[test]
    fn equality_across_polynomials() {
        let a = root_near(&p(&[-2, 0, 1]), SQRT_2, 0.0);
        let b = root_near(&p(&[-4, 0, 0, 0, 1]), SQRT_2, 0.0);
        let c = root_near(&p(&[-2, 0, 1]), -SQRT_2, 0.0);
        assert!(alg_equal(&a, &b));
        assert!(!alg_equal(&a, &c));
        let half = AlgebraicNumber::from_rational(frac(1, 2));
        assert!(alg_equal(&half, &AlgebraicNumber::from_rational(frac(2, 4))));
        assert!(!alg_equal(&half, &a));
    }

    #[test]
    fn equality_with_overlapping_boxes() {
        // sqrt(2) and the root of x^2 - 2 - 10^-80 near it: boxes at 64 bits
        // overlap, so only the separation-bound refinement separates them.
        let a = root_near(&p(&[-2, 0, 1]), SQRT_2, 0.0);
        let tiny = Rational::new(BigInt::one(), BigInt::from(10u32).pow(80));
        let q = UnivariatePoly::new(vec![-(int(2) + tiny), int(0), int(1)]);
        let b = root_near(&q, SQRT_2, 0.0);
        assert!(a.bounding_box().intersects(b.bounding_box()));
        assert!(!alg_equal(&a, &b));
        assert!(alg_equal(&b, &b.clone()));
    }

    #[test]
    fn refinement_keeps_root() {
        let a = root_near(&p(&[-3, 0, 0, 1]), 1.44224957, 0.0);
        let w = dyadic(BigInt::one(), 200);
        let r = a.refined(&w);
        assert!(r.bounding_box().width() <= w);
        assert!(alg_equal(&a, &r));
    }

    #[test]
    fn is_root_of_factor() {
        let a = root_near(&p(&[-2, 0, 1]), -SQRT_2, 0.0);
        // (x^2 - 2)(x - 1): a is a root; (x - 1): it is not
        assert!(a.is_root_of(&p(&[2, -2, -1, 1])));
        assert!(!a.is_root_of(&p(&[-1, 1])));
        // x + sqrt(2) factor only identifiable through the box: 2x^2 - 4 shares
        assert!(a.is_root_of(&p(&[-4, 0, 2])));
    }

    #[test]
    fn field_element_to_algebraic() {
        // theta = sqrt(2); q = theta^2 + theta = 2 + sqrt(2)
        let th = root_near(&p(&[-2, 0, 1]), SQRT_2, 0.0);
        let v = field_to_algebraic(&th, &p(&[0, 1, 1]));
        assert!((v.approx().re - 3.41421356).abs() < 1e-6);
        assert_eq!(v.minimal_polynomial(), &p(&[2, -4, 1]));
        // theta^2 is the rational 2
        let two = field_to_algebraic(&th, &p(&[0, 0, 1]));
        assert_eq!(two.as_rational(), Some(int(2)));
        assert!(field_is_zero(&th, &p(&[-2, 0, 1])));
        assert!(!field_is_zero(&th, &p(&[-1, 1])));
    }
}
