//! Invariants and inequality checks, all pure functions of a
//! [`CombinatorialType`], plus numeric helpers for free divisors and covers.

use serde::{Deserialize, Serialize};

use crate::arith::rational::format_rational;
use crate::arith::Rational;
use crate::arrangement::CombinatorialType;
use crate::error::{Error, Result};

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// `(r, t_r)` pairs as signed integers.
fn counts(ct: &CombinatorialType) -> impl Iterator<Item = (i64, i64)> + '_ {
    ct.counts().iter().map(|(&r, &t)| (r as i64, t as i64))
}

fn sum_over(ct: &CombinatorialType, f: impl Fn(i64) -> i64) -> i64 {
    counts(ct).map(|(r, t)| f(r) * t).sum()
}

fn dk(ct: &CombinatorialType) -> (i64, i64) {
    (ct.d() as i64, ct.k() as i64)
}

fn t(ct: &CombinatorialType, r: u32) -> i64 {
    ct.t(r) as i64
}

/// Pairwise intersection total minus the weighted point count:
/// `4 C(k,2) + C(d,2) + 2kd − Σ C(r,2) t_r`.
pub fn bezout_defect(ct: &CombinatorialType) -> i64 {
    let (d, k) = dk(ct);
    4 * binom2(k) + binom2(d) + 2 * k * d - sum_over(ct, binom2)
}

/// `(f0, f1) = (Σ t_r, Σ r t_r)`.
pub fn incidence_sums(ct: &CombinatorialType) -> (i64, i64) {
    (sum_over(ct, |_| 1), sum_over(ct, |r| r))
}

/// Both expressions for the H-index: `((2k+d)² − Σ r² t_r) / f0` and
/// `(4k + d − f1) / f0`. They agree whenever the Bézout defect vanishes.
pub fn h_index_forms(ct: &CombinatorialType) -> Result<(Rational, Rational)> {
    let (d, k) = dk(ct);
    let (f0, f1) = incidence_sums(ct);
    if f0 == 0 {
        return Err(Error::UndefinedHIndex);
    }
    let first = Rational::new(((2 * k + d).pow(2) - sum_over(ct, |r| r * r)).into(), f0.into());
    let second = Rational::new((4 * k + d - f1).into(), f0.into());
    Ok((first, second))
}

pub fn h_index(ct: &CombinatorialType) -> Result<Rational> {
    let (first, second) = h_index_forms(ct)?;
    if bezout_defect(ct) == 0 {
        assert_eq!(first, second, "H-index forms disagree on a defect-free type");
    }
    Ok(first)
}

/// `Σ (r − 1)² t_r`, the total Milnor number when every point is ordinary.
pub fn milnor_total(ct: &CombinatorialType) -> i64 {
    sum_over(ct, |r| (r - 1) * (r - 1))
}

/// Log-Chern numbers `(c̄₁², c̄₂)` of the blow-up at points of multiplicity
/// at least 3, paired with the reduced total transform.
pub fn log_chern(ct: &CombinatorialType) -> (i64, i64) {
    let (d, k) = dk(ct);
    let c1sq = 9 - 5 * d - 8 * k + sum_over(ct, |r| 3 * r - 4);
    let c2 = 3 - 2 * d - 2 * k + sum_over(ct, |r| r - 1);
    (c1sq, c2)
}

/// `c̄₁² / c̄₂`.
pub fn log_chern_slope(ct: &CombinatorialType) -> Result<Rational> {
    let (c1sq, c2) = log_chern(ct);
    if c2 == 0 {
        return Err(Error::UndefinedSlope);
    }
    Ok(Rational::new(c1sq.into(), c2.into()))
}

/// Chern numbers of the desingularized `(Z/2)^{k+d−1}` cover, divided by
/// `2^{k+d−3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverChern {
    pub e_scaled: i64,
    pub k2_scaled: i64,
    /// `k2_scaled − 3 e_scaled`; BMY asks for this to be `≤ 0`.
    pub bmy_defect: i64,
}

pub fn cover_chern(ct: &CombinatorialType) -> CoverChern {
    let (d, k) = dk(ct);
    let (f0, f1) = incidence_sums(ct);
    let t2 = t(ct, 2);
    CoverChern {
        e_scaled: 12 - 4 * k - 4 * d + f1 - t2,
        k2_scaled: 36 - 20 * k - 11 * d + 5 * f1 - 9 * f0 + t2,
        bmy_defect: 2 * f1 - 9 * f0 + d + 4 * t2 - 8 * k,
    }
}

/// Outcome of one inequality check. `holds` is absent when the conclusion
/// cannot be evaluated (an undefined slope, say).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub hypotheses_ok: bool,
    pub holds: Option<bool>,
    pub detail: String,
}

fn check(name: &str, hypotheses_ok: bool, holds: Option<bool>, detail: String) -> CheckResult {
    CheckResult {
        name: name.into(),
        hypotheses_ok,
        holds,
        detail,
    }
}

fn geq(lhs: &Rational, rhs: &Rational) -> (bool, String) {
    let ok = lhs >= rhs;
    let op = if ok { ">=" } else { "<" };
    (ok, format!("{} {op} {}", format_rational(lhs), format_rational(rhs)))
}

/// `Σ_{r≥5} (2r − 9) t_r`
fn hirzebruch_tail(ct: &CombinatorialType) -> i64 {
    counts(ct).filter(|&(r, _)| r >= 5).map(|(r, t)| (2 * r - 9) * t).sum()
}

fn hirzebruch_hypotheses(ct: &CombinatorialType, six_lines: bool) -> bool {
    ct.d() >= 6 && ct.k() >= 2 && ct.t_top(0) == 0 && six_lines
}

/// Hirzebruch-type inequality
/// `8k + t₂ + 3t₃ + t₄ ≥ d + Σ_{r≥5}(2r−9)t_r`, or with the left side
/// `8k + t₂ + ¾t₃` when `improved`. `six_lines` says whether six of the
/// lines meet only in double and triple points, which the type alone does
/// not determine.
pub fn check_hirzebruch(ct: &CombinatorialType, improved: bool, six_lines: bool) -> CheckResult {
    let (d, k) = dk(ct);
    let lhs = if improved {
        int(8 * k + t(ct, 2)) + Rational::new((3 * t(ct, 3)).into(), 4.into())
    } else {
        int(8 * k + t(ct, 2) + 3 * t(ct, 3) + t(ct, 4))
    };
    let rhs = int(d + hirzebruch_tail(ct));
    let (ok, detail) = geq(&lhs, &rhs);
    let name = if improved { "hirzebruch-improved" } else { "hirzebruch" };
    check(name, hirzebruch_hypotheses(ct, six_lines), Some(ok), detail)
}

/// The standard inequality with `k` in place of `d` on the right side, as
/// the theorem statement displays it.
pub fn check_hirzebruch_k_form(ct: &CombinatorialType, six_lines: bool) -> CheckResult {
    let k = ct.k() as i64;
    let lhs = int(8 * k + t(ct, 2) + 3 * t(ct, 3) + t(ct, 4));
    let rhs = int(k + hirzebruch_tail(ct));
    let (ok, detail) = geq(&lhs, &rhs);
    check("hirzebruch-k-form", hirzebruch_hypotheses(ct, six_lines), Some(ok), detail)
}

/// `f0 ≥ k + d` under `d ≥ 2`, `k ≥ 2` and no points of multiplicity
/// `k+d`, `k+d−1`, `k+d−2`, `k+d−3`.
pub fn check_debruijn_erdos(ct: &CombinatorialType) -> CheckResult {
    let hyp = ct.d() >= 2 && ct.k() >= 2 && (0..4).all(|j| ct.t_top(j) == 0);
    let (f0, _) = incidence_sums(ct);
    let (ok, detail) = geq(&int(f0), &int(ct.curves() as i64));
    check("de-bruijn-erdos", hyp, Some(ok), detail)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UrzuaCheck {
    /// `k ≥ 2` and `d ≥ 2`.
    pub hypotheses_ok: bool,
    /// `8k + 2t₂ + t₃ ≥ d + 3 + Σ_{r≥5}(r−4)t_r`
    pub inequality_holds: bool,
    /// `c̄₁²/c̄₂ ≤ 8/3`, absent when the slope is undefined.
    pub slope_at_most_8_3: Option<bool>,
    pub inequality_detail: String,
}

pub fn check_urzua(ct: &CombinatorialType) -> UrzuaCheck {
    let (d, k) = dk(ct);
    let lhs = int(8 * k + 2 * t(ct, 2) + t(ct, 3));
    let tail: i64 = counts(ct).filter(|&(r, _)| r >= 5).map(|(r, t)| (r - 4) * t).sum();
    let rhs = int(d + 3 + tail);
    let (inequality_holds, inequality_detail) = geq(&lhs, &rhs);
    UrzuaCheck {
        hypotheses_ok: ct.d() >= 2 && ct.k() >= 2,
        inequality_holds,
        slope_at_most_8_3: log_chern_slope(ct).ok().map(|s| s <= Rational::new(8.into(), 3.into())),
        inequality_detail,
    }
}

impl UrzuaCheck {
    pub fn to_checks(&self, ct: &CombinatorialType) -> [CheckResult; 2] {
        let slope_detail = match log_chern_slope(ct) {
            Ok(s) => format!("slope {} vs 8/3", format_rational(&s)),
            Err(_) => "slope undefined (c2 = 0)".into(),
        };
        [
            check("urzua", self.hypotheses_ok, Some(self.inequality_holds), self.inequality_detail.clone()),
            check("slope-8/3", self.hypotheses_ok, self.slope_at_most_8_3, slope_detail),
        ]
    }
}

/// `c̄₂ > 0` under `k ≥ 2`, `d ≥ 2`, `t_{k+d} = t_{k+d−1} = 0`.
pub fn check_c2_positive(ct: &CombinatorialType) -> CheckResult {
    let hyp = ct.d() >= 2 && ct.k() >= 2 && ct.t_top(0) == 0 && ct.t_top(1) == 0;
    let (_, c2) = log_chern(ct);
    let ok = c2 > 0;
    let detail = format!("c2 = {c2}");
    check("c2-positive", hyp, Some(ok), detail)
}

/// Total Tjurina number `(deg − 1)² − d₁d₂` of a free curve with exponents
/// `d₁ ≤ d₂`.
pub fn tjurina_from_exponents(divisor_degree: i64, d1: i64, d2: i64) -> i64 {
    (divisor_degree - 1).pow(2) - d1 * d2
}

/// Coefficients of `(1 + t)(1 + d₁t)(1 + d₂t)`, constant term first.
pub fn poincare_from_exponents(d1: i64, d2: i64) -> [i64; 4] {
    [1, 1 + d1 + d2, d1 + d2 + d1 * d2, d1 * d2]
}

/// Genus of the curve over an exceptional divisor of a point of
/// multiplicity `m`: `g = 1 − 2^{m−3}(4 − m)`.
pub fn hurwitz_genus(m: u32) -> Result<i64> {
    if m < 3 {
        return Err(Error::OutOfDomain(format!("multiplicity {m} < 3 is not blown up")));
    }
    if m > 60 {
        return Err(Error::OutOfDomain(format!("multiplicity {m} overflows")));
    }
    Ok(1 - (1i64 << (m - 3)) * (4 - m as i64))
}

/// Log-Chern numbers for curves of arbitrary degrees:
/// `c̄₁² = 9 + Σ(dᵢ² − 6dᵢ) + 3f₁ − 4f₀`, `c̄₂ = 3 + Σ(dᵢ² − 3dᵢ) + f₁ − f₀`.
pub fn general_log_chern(degrees: &[u32], f0: i64, f1: i64) -> Result<(i64, i64)> {
    if let Some(&bad) = degrees.iter().find(|&&d| d == 0) {
        return Err(Error::InvalidParameter(format!("curve degree {bad} < 1")));
    }
    let s = |c: i64| -> i64 { degrees.iter().map(|&d| d as i64 * d as i64 - c * d as i64).sum() };
    Ok((9 + s(6) + 3 * f1 - 4 * f0, 3 + s(3) + f1 - f0))
}

/// Exact test of `c̄₁² / c̄₂ > bound`, cross-multiplied on the unreduced
/// Chern numbers so the witness reads like `2592·2 vs 5·1032`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeComparison {
    pub exceeds: bool,
    /// For example `5184 > 5160`.
    pub detail: String,
}

/// Absent when the slope is undefined.
pub fn compare_slope(ct: &CombinatorialType, bound: &Rational) -> Option<SlopeComparison> {
    let (c1sq, c2) = log_chern(ct);
    if c2 == 0 {
        return None;
    }
    let sign = c2.signum();
    let lhs = num_bigint::BigInt::from(c1sq * sign) * bound.denom();
    let rhs = bound.numer() * num_bigint::BigInt::from(c2.abs());
    let op = match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => ">",
        std::cmp::Ordering::Equal => "=",
        std::cmp::Ordering::Less => "<",
    };
    Some(SlopeComparison {
        exceeds: lhs > rhs,
        detail: format!("{lhs} {op} {rhs}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::frac;
    use proptest::prelude::*;

    fn ct(d: u32, k: u32, t: &[(u32, u64)]) -> CombinatorialType {
        CombinatorialType::new(d, k, t.iter().copied()).unwrap()
    }

    fn extended_chilean() -> CombinatorialType {
        ct(9, 12, &[(9, 9), (5, 12), (2, 72)])
    }

    fn klein() -> CombinatorialType {
        ct(21, 21, &[(2, 42), (3, 252), (4, 189)])
    }

    fn pappus() -> CombinatorialType {
        ct(9, 4, &[(7, 2), (5, 4), (4, 2), (2, 36)])
    }

    fn pencil(k: u32) -> CombinatorialType {
        if k == 1 {
            ct(2, 1, &[(2, 5)])
        } else {
            ct(2, k, &[(k + 1, 4), (2, 1)])
        }
    }

    /// Point-by-point recomputation of the cover numbers: the Euler number
    /// from the open part plus `(4 − r)` per blown-up point, and `K²` from
    /// the canonical class `(d/2 + k − 3)H + Σ (3 − r)/2 E_p`.
    fn cover_oracle(c: &CombinatorialType) -> (i64, i64) {
        let (d, k) = (c.d() as i64, c.k() as i64);
        let mut f0 = 0;
        let mut f1 = 0;
        let mut tail_e = 0;
        let mut tail_k = 0;
        for (&r, &n) in c.counts() {
            let (r, n) = (r as i64, n as i64);
            f0 += n;
            f1 += r * n;
            if r >= 3 {
                tail_e += (4 - r) * n;
                tail_k += (r - 3) * (r - 3) * n;
            }
        }
        let e = 12 - 4 * d - 4 * k + 2 * f1 - 4 * f0 + c.t(2) as i64 + tail_e;
        // K_Y² / 2^{k+d−3} = 4K²
        let k2 = (d + 2 * k - 6).pow(2) - tail_k;
        (e, k2)
    }

    #[test]
    fn bezout_examples() {
        assert_eq!(bezout_defect(&extended_chilean()), 0);
        assert_eq!(bezout_defect(&pappus()), 2);
        assert_eq!(bezout_defect(&ct(2, 0, &[(2, 1)])), 0);
        assert_eq!(bezout_defect(&klein()), 0);
    }

    #[test]
    fn incidence_examples() {
        assert_eq!(incidence_sums(&extended_chilean()), (93, 285));
        assert_eq!(incidence_sums(&klein()), (483, 1596));
        assert_eq!(incidence_sums(&ct(2, 0, &[(2, 1)])), (1, 2));
    }

    #[test]
    fn h_index_examples() {
        assert_eq!(h_index(&ct(9, 0, &[(3, 12)])).unwrap(), frac(-9, 4));
        assert_eq!(h_index(&extended_chilean()).unwrap(), frac(-76, 31));
        assert_eq!(h_index(&ct(1, 1, &[(2, 2)])).unwrap(), frac(1, 2));
        assert_eq!(h_index(&ct(0, 1, &[])).unwrap_err(), Error::UndefinedHIndex);
    }

    #[test]
    fn milnor_examples() {
        assert_eq!(milnor_total(&ct(0, 12, &[(8, 9), (2, 12)])), 453);
        assert_eq!(milnor_total(&ct(2, 0, &[(2, 1)])), 1);
        assert_eq!(milnor_total(&klein()), 2751);
    }

    #[test]
    fn log_chern_examples() {
        assert_eq!(log_chern(&extended_chilean()), (351, 153));
        assert_eq!(log_chern(&klein()), (2592, 1032));
        for k in 1..=8 {
            assert_eq!(log_chern(&pencil(k)), (4 * k as i64 - 3, 2 * k as i64));
        }
        assert_eq!(log_chern_slope(&pencil(1)).unwrap(), frac(1, 2));
        assert_eq!(log_chern_slope(&pappus()).unwrap(), frac(98, 47));
        assert_eq!(log_chern_slope(&extended_chilean()).unwrap(), frac(351, 153));
        assert_eq!(log_chern_slope(&ct(2, 0, &[(2, 1)])).unwrap_err(), Error::UndefinedSlope);
    }

    #[test]
    fn cover_examples() {
        let c = cover_chern(&extended_chilean());
        assert_eq!((c.e_scaled, c.k2_scaled, c.bmy_defect), (141, 357, -66));
        let c = cover_chern(&ct(2, 0, &[(2, 1)]));
        assert_eq!((c.e_scaled, c.k2_scaled, c.bmy_defect), (5, 16, 1));
        let c = cover_chern(&klein());
        assert_eq!((c.e_scaled, c.k2_scaled, c.bmy_defect), (1398, 3060, -1134));
        assert_eq!(cover_oracle(&klein()), (1398, 3060));
        assert_eq!(cover_oracle(&extended_chilean()), (141, 357));
    }

    #[test]
    fn hirzebruch_examples() {
        let ec = extended_chilean();
        let r = check_hirzebruch(&ec, false, true);
        assert!(r.hypotheses_ok);
        assert_eq!(r.holds, Some(true));
        assert_eq!(r.detail, "168 >= 102");
        assert_eq!(check_hirzebruch(&ec, true, true).detail, "168 >= 102");
        assert!(!check_hirzebruch(&ec, false, false).hypotheses_ok);
        // C(6,2) + 4 C(2,2) + 2·2·6 = 43 double points
        let star = ct(6, 2, &[(2, 43)]);
        assert_eq!(bezout_defect(&star), 0);
        assert_eq!(check_hirzebruch(&star, false, true).detail, "59 >= 6");
        assert_eq!(check_hirzebruch_k_form(&ec, true).detail, "168 >= 105");
    }

    #[test]
    fn debruijn_erdos_examples() {
        let r = check_debruijn_erdos(&extended_chilean());
        assert!(r.hypotheses_ok);
        assert_eq!(r.holds, Some(true));
        let r = check_debruijn_erdos(&ct(6, 3, &[(6, 4), (2, 3)]));
        assert!(!r.hypotheses_ok);
        assert_eq!(r.holds, Some(false));
        assert_eq!(r.detail, "7 < 9");
        let r = check_debruijn_erdos(&ct(0, 6, &[(5, 6)]));
        assert!(!r.hypotheses_ok);
        assert_eq!(incidence_sums(&ct(0, 6, &[(5, 6)])).0, 6);
    }

    #[test]
    fn urzua_examples() {
        let u = check_urzua(&klein());
        assert!(u.hypotheses_ok && u.inequality_holds);
        assert_eq!(u.inequality_detail, "504 >= 24");
        assert_eq!(u.slope_at_most_8_3, Some(true));
        let u = check_urzua(&extended_chilean());
        assert_eq!(u.inequality_detail, "240 >= 69");
        assert_eq!(u.slope_at_most_8_3, Some(true));
        let u = check_urzua(&pencil(2));
        assert_eq!(u.inequality_detail, "22 >= 5");
        let u = check_urzua(&ct(2, 0, &[(2, 1)]));
        assert_eq!(u.slope_at_most_8_3, None);
    }

    #[test]
    fn c2_positive_examples() {
        let r = check_c2_positive(&extended_chilean());
        assert!(r.hypotheses_ok && r.holds == Some(true));
        assert_eq!(r.detail, "c2 = 153");
        assert_eq!(check_c2_positive(&klein()).detail, "c2 = 1032");
        let two_two = ct(2, 2, &[(2, 13)]);
        assert_eq!(bezout_defect(&two_two), 0);
        assert_eq!(log_chern(&two_two).1, 8);
    }

    #[test]
    fn exponent_helpers() {
        assert_eq!(tjurina_from_exponents(24, 7, 16), 417);
        assert_eq!(tjurina_from_exponents(33, 16, 16), 768);
        assert_eq!(tjurina_from_exponents(10, 0, 99), 81);
        assert_eq!(poincare_from_exponents(4, 4), [1, 9, 24, 16]);
        assert_eq!(poincare_from_exponents(1, 1), [1, 3, 3, 1]);
        assert_eq!(poincare_from_exponents(7, 16), [1, 24, 135, 112]);
    }

    #[test]
    fn hurwitz_examples() {
        assert_eq!(hurwitz_genus(3).unwrap(), 0);
        assert_eq!(hurwitz_genus(4).unwrap(), 1);
        assert_eq!(hurwitz_genus(8).unwrap(), 129);
        assert!(matches!(hurwitz_genus(2), Err(Error::OutOfDomain(_))));
        // 2 − 2g = 2^{m−2}(4 − m)
        for m in 3..20u32 {
            let g = hurwitz_genus(m).unwrap();
            assert_eq!(2 - 2 * g, (1i64 << (m - 2)) * (4 - m as i64));
        }
    }

    #[test]
    fn general_log_chern_examples() {
        for d in 2..30i64 {
            let (c1, c2) = general_log_chern(&[1, 1, d as u32], 2 * d + 1, 4 * d + 2).unwrap();
            assert_eq!((c1, c2), ((d - 1).pow(2), d * (d - 1)));
            assert_eq!(Rational::new(c1.into(), c2.into()), frac(d - 1, d));
        }
        assert_eq!(general_log_chern(&[1, 1, 2], 5, 10).unwrap(), (1, 2));
        assert_eq!(general_log_chern(&[1, 1], 1, 2).unwrap(), (1, 0));
        assert!(general_log_chern(&[0, 1], 1, 2).is_err());
    }

    #[test]
    fn klein_exceeds_five_halves() {
        let c = compare_slope(&klein(), &frac(5, 2)).unwrap();
        assert!(c.exceeds);
        assert_eq!(c.detail, "5184 > 5160");
        let dual_hesse = ct(9, 0, &[(3, 12)]);
        let c = compare_slope(&dual_hesse, &frac(8, 3)).unwrap();
        assert!(!c.exceeds);
        assert_eq!(c.detail, "72 = 72");
        assert_eq!(compare_slope(&ct(2, 0, &[(2, 1)]), &frac(5, 2)), None);
    }

    /// Random types with the Bézout identity enforced through `t₂`.
    fn defect_free() -> impl Strategy<Value = CombinatorialType> {
        (0u32..=12, 0u32..=12, prop::collection::vec(0u64..=6, 6)).prop_filter_map(
            "needs a nonnegative t2",
            |(d, k, higher)| {
                let (d, k) = (d as i64, k as i64);
                let total = 4 * binom2(k) + binom2(d) + 2 * k * d;
                let max_r = (d + k).min(8);
                let mut used = 0;
                let mut t = Vec::new();
                for (i, &n) in higher.iter().enumerate() {
                    let r = i as i64 + 3;
                    if r > max_r {
                        break;
                    }
                    used += binom2(r) * n as i64;
                    t.push((r as u32, n));
                }
                let t2 = total - used;
                if t2 < 0 || d + k < 2 {
                    return None;
                }
                t.push((2, t2 as u64));
                CombinatorialType::new(d as u32, k as u32, t).ok()
            },
        )
    }

    proptest! {
        #[test]
        fn h_index_forms_agree(c in defect_free()) {
            if let Ok((a, b)) = h_index_forms(&c) {
                prop_assert_eq!(a, b);
            }
        }

        #[test]
        fn cover_identity(c in defect_free()) {
            let cc = cover_chern(&c);
            prop_assert_eq!(cc.k2_scaled - 3 * cc.e_scaled, cc.bmy_defect);
            prop_assert_eq!(cover_oracle(&c), (cc.e_scaled, cc.k2_scaled));
        }

        #[test]
        fn bmy_matches_hirzebruch(c in defect_free(), six in any::<bool>()) {
            let holds = check_hirzebruch(&c, false, six).holds == Some(true);
            prop_assert_eq!(holds, cover_chern(&c).bmy_defect <= 0);
        }

        #[test]
        fn h_index_lower_bound(c in defect_free()) {
            if cover_chern(&c).bmy_defect <= 0 {
                if let Ok(h) = h_index(&c) {
                    prop_assert!(h >= frac(-9, 2));
                }
            }
        }

        #[test]
        fn general_specializes(c in defect_free()) {
            let mut degrees = vec![1u32; c.d() as usize];
            degrees.extend(std::iter::repeat_n(2, c.k() as usize));
            let (f0, f1) = incidence_sums(&c);
            prop_assert_eq!(general_log_chern(&degrees, f0, f1).unwrap(), log_chern(&c));
        }
    }
}
