//! Rectangles in the complex plane with rational corners, and certified
//! isolation of the complex roots of a squarefree polynomial.
//!
//! Isolation runs the Weierstrass (Durand-Kerner) iteration in fixed-point
//! big-integer arithmetic and then certifies the approximations exactly: for
//! approximations `z_i` with Weierstrass corrections `W_i`, every root lies in
//! one of the discs centred at `z_i - W_i` with radius `(n-1)|W_i|`, and a
//! connected component made of `m` discs holds exactly `m` roots (column
//! Gershgorin discs of `diag(z) - 1 Wᵀ`, whose eigenvalues are the roots).
//! Pairwise disjoint enclosing squares therefore isolate one root each.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{dyadic, Rational};
use super::upoly::UnivariatePoly;

/// Closed rational interval.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        Self {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn intersects(&self, o: &Self) -> bool {
        self.lo <= o.hi && o.lo <= self.hi
    }

    pub fn intersection(&self, o: &Self) -> Option<Self> {
        let lo = (&self.lo).max(&o.lo).clone();
        let hi = (&self.hi).min(&o.hi).clone();
        (lo <= hi).then_some(Self { lo, hi })
    }

    fn add(&self, o: &Self) -> Self {
        Self::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    fn sub(&self, o: &Self) -> Self {
        Self::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    fn mul(&self, o: &Self) -> Self {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().expect("nonempty").clone();
        let hi = c.iter().max().expect("nonempty").clone();
        Self::new(lo, hi)
    }
}

/// Axis-aligned closed rectangle `re × im` in the complex plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComplexBox {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexBox {
    pub fn point(re: Rational, im: Rational) -> Self {
        Self {
            re: Interval::point(re),
            im: Interval::point(im),
        }
    }

    /// Larger of the two side lengths.
    pub fn width(&self) -> Rational {
        self.re.width().max(self.im.width())
    }

    pub fn intersects(&self, o: &Self) -> bool {
        self.re.intersects(&o.re) && self.im.intersects(&o.im)
    }

    pub fn intersection(&self, o: &Self) -> Option<Self> {
        Some(Self {
            re: self.re.intersection(&o.re)?,
            im: self.im.intersection(&o.im)?,
        })
    }

    pub fn contains(&self, re: &Rational, im: &Rational) -> bool {
        self.re.contains(re) && self.im.contains(im)
    }

    pub fn center_f64(&self) -> Complex64 {
        Complex64::new(
            self.re.mid().to_f64().unwrap_or(f64::NAN),
            self.im.mid().to_f64().unwrap_or(f64::NAN),
        )
    }

    fn add(&self, o: &Self) -> Self {
        Self {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        Self {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    /// Enclosure of `{ p(z) : z in self }` by interval Horner evaluation.
    pub fn eval_poly(&self, p: &UnivariatePoly) -> ComplexBox {
        let zero = || Self::point(Rational::zero(), Rational::zero());
        p.coeffs().iter().rev().fold(zero(), |acc, c| {
            acc.mul(self).add(&Self::point(c.clone(), Rational::zero()))
        })
    }
}

impl fmt::Display for ComplexBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}] x [{}, {}]i",
            self.re.lo, self.re.hi, self.im.lo, self.im.hi
        )
    }
}

/// Fixed-point complex number `(re + i im) / 2^prec`.
#[derive(Clone, Debug)]
struct Fx {
    re: BigInt,
    im: BigInt,
}

struct FixedCtx {
    prec: u64,
}

impl FixedCtx {
    fn fixed_rational(&self, r: &Rational) -> BigInt {
        let s = r * Rational::from_integer(BigInt::one() << self.prec);
        s.round().to_integer()
    }

    fn fixed_complex(&self, v: Complex64) -> Fx {
        let conv = |x: f64| -> BigInt {
            let r = Rational::from_float(x).unwrap_or_else(Rational::zero);
            self.fixed_rational(&r)
        };
        Fx {
            re: conv(v.re),
            im: conv(v.im),
        }
    }

    fn mul(&self, a: &Fx, b: &Fx) -> Fx {
        Fx {
            re: (&a.re * &b.re - &a.im * &b.im) >> self.prec,
            im: (&a.re * &b.im + &a.im * &b.re) >> self.prec,
        }
    }

    fn div(&self, a: &Fx, b: &Fx) -> Option<Fx> {
        let n = &b.re * &b.re + &b.im * &b.im;
        if n.is_zero() {
            return None;
        }
        let re = ((&a.re * &b.re + &a.im * &b.im) << self.prec) / &n;
        let im = ((&a.im * &b.re - &a.re * &b.im) << self.prec) / &n;
        Some(Fx { re, im })
    }

    fn rescale(&self, z: &Fx, from: u64) -> Fx {
        if self.prec >= from {
            let s = self.prec - from;
            Fx {
                re: &z.re << s,
                im: &z.im << s,
            }
        } else {
            let s = from - self.prec;
            Fx {
                re: &z.re >> s,
                im: &z.im >> s,
            }
        }
    }
}

/// Cauchy bound: every root has modulus below `1 + max |a_i / a_n|`.
fn cauchy_bound_f64(p: &UnivariatePoly) -> f64 {
    let lead = p.lead();
    let m = p.coeffs()[..p.deg()]
        .iter()
        .map(|c| (c / &lead).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    1.0 + m.to_f64().unwrap_or(1e300).min(1e300)
}

/// Initial approximations: Aberth iteration in double precision, falling
/// back to points spread on a circle.
fn initial_guesses(p: &UnivariatePoly, salt: u32) -> Vec<Complex64> {
    let n = p.deg();
    let bound = cauchy_bound_f64(p).min(1e150);
    let circle: Vec<Complex64> = (0..n)
        .map(|k| {
            let ang = std::f64::consts::TAU * (k as f64 + 0.25 + 0.1 * salt as f64) / n as f64 + 0.4;
            Complex64::from_polar(0.5 * bound + 0.1 * salt as f64, ang)
        })
        .collect();
    let lead = p.lead();
    let coeffs: Option<Vec<f64>> = p
        .coeffs()
        .iter()
        .map(|c| (c / &lead).to_f64().filter(|v| v.is_finite()))
        .collect();
    let Some(coeffs) = coeffs else {
        return circle;
    };
    let eval = |z: Complex64| {
        let mut v = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            d = d * z + v;
            v = v * z + c;
        }
        (v, d)
    };
    let mut zs = circle.clone();
    for _ in 0..500 {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let (v, d) = eval(zs[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let s: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (zs[i] - zs[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if step.is_finite() {
                zs[i] -= step;
                max_step = max_step.max(step.norm() / (1.0 + zs[i].norm()));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    if zs.iter().all(|z| z.is_finite()) {
        zs
    } else {
        circle
    }
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::div_floor(a, b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -num_integer::Integer::div_floor(&-a, b)
}

/// Certified isolation at a fixed precision: returns one box per root or
/// `None` if the current approximations do not certify.
///
/// Each iterate `z_i = Z_i / 2^prec` has Weierstrass correction
/// `W_i = p(z_i) / (lc * prod_{j != i} (z_i - z_j))`, and the discs centered
/// at `z_i - W_i` with radius `(n - 1)|W_i|` cover the roots, each connected
/// component holding as many roots as discs. Disjoint discs therefore
/// isolate. Everything is evaluated in integers scaled by powers of two and
/// rounded outward onto the grid `2^-grid`.
fn certify(p: &UnivariatePoly, zs: &[Fx], prec: u64, grid: u64) -> Option<Vec<ComplexBox>> {
    let n = zs.len();
    let a = p.integer_coeffs();
    let nm1 = BigInt::from(n - 1);
    let mut bounds: Vec<[BigInt; 4]> = Vec::with_capacity(n);
    for (i, z) in zs.iter().enumerate() {
        // P = p(z) * 2^(prec * n)
        let mut h = Fx {
            re: a[n].clone(),
            im: BigInt::zero(),
        };
        for k in (0..n).rev() {
            h = Fx {
                re: &h.re * &z.re - &h.im * &z.im + (&a[k] << (prec * (n - k) as u64)),
                im: &h.re * &z.im + &h.im * &z.re,
            };
        }
        // D = lc * prod (z_i - z_j) * 2^(prec * (n - 1))
        let mut d = Fx {
            re: a[n].clone(),
            im: BigInt::zero(),
        };
        for (j, w) in zs.iter().enumerate() {
            if j != i {
                let (dr, di) = (&z.re - &w.re, &z.im - &w.im);
                d = Fx {
                    re: &d.re * &dr - &d.im * &di,
                    im: &d.re * &di + &d.im * &dr,
                };
            }
        }
        let q = &d.re * &d.re + &d.im * &d.im;
        if q.is_zero() {
            return None;
        }
        // W = N / (Q 2^prec) with N = P conj(D), Q = |D|^2.
        let nre = &h.re * &d.re + &h.im * &d.im;
        let nim = &h.im * &d.re - &h.re * &d.im;
        let den = &q << prec;
        let cre = (&z.re * &q - nre) << grid;
        let cim = (&z.im * &q - nim) << grid;
        // u >= (n - 1)|W| 2^grid
        let p2 = &h.re * &h.re + &h.im * &h.im;
        let r2 = ceil_div(&((&nm1 * &nm1 * p2) << (2 * grid)), &(&q << (2 * prec)));
        let u = r2.sqrt() + BigInt::one();
        bounds.push([
            floor_div(&cre, &den) - &u,
            ceil_div(&cre, &den) + &u,
            floor_div(&cim, &den) - &u,
            ceil_div(&cim, &den) + &u,
        ]);
    }
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (&bounds[i], &bounds[j]);
            if x[0] <= y[1] && y[0] <= x[1] && x[2] <= y[3] && y[2] <= x[3] {
                return None;
            }
        }
    }
    Some(
        bounds
            .into_iter()
            .map(|[a, b, c, d]| ComplexBox {
                re: Interval::new(dyadic(a, grid), dyadic(b, grid)),
                im: Interval::new(dyadic(c, grid), dyadic(d, grid)),
            })
            .collect(),
    )
}

/// Weierstrass iteration at fixed precision; returns the final iterates.
fn weierstrass(p: &UnivariatePoly, ctx: &FixedCtx, mut zs: Vec<Fx>, max_iter: usize) -> Vec<Fx> {
    let n = zs.len();
    let coeffs: Vec<BigInt> = p.monic().coeffs().iter().map(|c| ctx.fixed_rational(c)).collect();
    let one = BigInt::one() << ctx.prec;
    let tol = BigInt::one() << (ctx.prec / 2).max(8);
    for _ in 0..max_iter {
        let mut converged = true;
        for i in 0..n {
            // Horner on the monic polynomial
            let mut v = Fx {
                re: one.clone(),
                im: BigInt::zero(),
            };
            for c in coeffs[..n].iter().rev() {
                v = ctx.mul(&v, &zs[i]);
                v.re += c;
            }
            let mut den = Fx {
                re: one.clone(),
                im: BigInt::zero(),
            };
            for j in 0..n {
                if j != i {
                    let d = Fx {
                        re: &zs[i].re - &zs[j].re,
                        im: &zs[i].im - &zs[j].im,
                    };
                    den = ctx.mul(&den, &d);
                }
            }
            let Some(w) = ctx.div(&v, &den) else {
                // coincident iterates: nudge apart
                zs[i].re += BigInt::from(i as u64 + 1) << (ctx.prec / 2);
                converged = false;
                continue;
            };
            if w.re.abs() > tol || w.im.abs() > tol {
                converged = false;
            }
            zs[i].re -= &w.re;
            zs[i].im -= &w.im;
        }
        if converged {
            break;
        }
    }
    zs
}

/// Isolates every complex root of a squarefree polynomial of degree >= 1 in
/// pairwise disjoint boxes, each no wider than `2^-bits`.
pub fn isolate_squarefree(p: &UnivariatePoly, bits: u64) -> Vec<ComplexBox> {
    let n = p.deg();
    assert!(n >= 1, "isolation of a constant polynomial");
    if n == 1 {
        let r = -p.coeff(0) / p.coeff(1);
        return vec![ComplexBox::point(r, Rational::zero())];
    }
    let coeff_bits: u64 = p.integer_coeffs().iter().map(|c| c.bits()).max().unwrap_or(1);
    let mut prec = 64 + coeff_bits.min(4096) + bits.min(64);
    let mut salt = 0;
    let mut ctx = FixedCtx { prec };
    let mut zs: Vec<Fx> = initial_guesses(p, salt).into_iter().map(|z| ctx.fixed_complex(z)).collect();
    let mut failures = 0;
    loop {
        zs = weierstrass(p, &ctx, zs, 60 + 4 * n);
        let grid = prec + 8;
        if let Some(boxes) = certify(p, &zs, prec, grid) {
            let limit = dyadic(BigInt::one(), bits);
            if boxes.iter().all(|b| b.width() <= limit) {
                return boxes;
            }
        } else {
            failures += 1;
            if failures % 6 == 0 {
                // stagnating: restart from a perturbed circle
                salt += 1;
                zs = initial_guesses(p, salt).into_iter().map(|z| ctx.fixed_complex(z)).collect();
                continue;
            }
        }
        let old = prec;
        prec = (prec * 2).max(bits + 32);
        ctx = FixedCtx { prec };
        zs = zs.iter().map(|z| ctx.rescale(z, old)).collect();
        assert!(prec < 1 << 22, "root isolation failed to converge");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{frac, int};

    #[test]
    fn sqrt_two_boxes() {
        let p = UnivariatePoly::from_ints(&[-2, 0, 1]);
        let boxes = isolate_squarefree(&p, 40);
        assert_eq!(boxes.len(), 2);
        let mut reals: Vec<f64> = boxes.iter().map(|b| b.center_f64().re).collect();
        reals.sort_by(f64::total_cmp);
        assert!((reals[0] + std::f64::consts::SQRT_2).abs() < 1e-9);
        assert!((reals[1] - std::f64::consts::SQRT_2).abs() < 1e-9);
        for b in &boxes {
            assert!(b.width() <= frac(1, 1 << 40));
        }
    }

    #[test]
    fn conjugate_pair() {
        let p = UnivariatePoly::from_ints(&[1, 0, 1]);
        let boxes = isolate_squarefree(&p, 30);
        assert_eq!(boxes.len(), 2);
        assert!(boxes.iter().any(|b| b.contains(&int(0), &int(1))));
        assert!(boxes.iter().any(|b| b.contains(&int(0), &int(-1))));
    }

    #[test]
    fn clustered_roots_separate() {
        // (x - 1)(x - 1 - 10^-12)(x^2 + 3)
        let eps = Rational::new(BigInt::one(), BigInt::from(10u64).pow(12));
        let a = UnivariatePoly::linear_root(&int(1));
        let b = UnivariatePoly::linear_root(&(int(1) + eps));
        let c = UnivariatePoly::from_ints(&[3, 0, 1]);
        let p = &(&a * &b) * &c;
        let boxes = isolate_squarefree(&p, 50);
        assert_eq!(boxes.len(), 4);
        assert!(boxes.iter().any(|bx| bx.contains(&int(1), &int(0))));
    }

    #[test]
    fn interval_horner_encloses() {
        let bx = ComplexBox {
            re: Interval::new(frac(9, 10), frac(11, 10)),
            im: Interval::new(frac(-1, 10), frac(1, 10)),
        };
        let p = UnivariatePoly::from_ints(&[-1, 0, 1]);
        let e = bx.eval_poly(&p);
        assert!(e.contains(&int(0), &int(0)));
    }
}
