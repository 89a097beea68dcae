//! Betti-sequence analysis: truncated series arithmetic, exact linear
//! recurrence fitting, curvature bounds by Sturm root isolation, growth
//! classification, and the Gorenstein-deviation quotient g(R).
//!
//! Everything here is exact: recurrences have rational coefficients found by
//! Hankel-style elimination over Q, and curvature is reported as a rational
//! enclosure (plus the integer characteristic polynomial), never a float.

use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::ArtinAlgebra;
use crate::error::Result;
use crate::linalg::{Budget, Matrix};
use crate::module::{canonical_module, residue_field};
use crate::resolution::Resolution;
use crate::scalar::Field;

/// Formal power series truncation with exact non-negative coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigUint>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<BigUint>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        TruncatedSeries { coeffs: coeffs.iter().map(|&c| BigUint::from(c)).collect() }
    }

    pub fn one(len: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); len];
        if len > 0 {
            coeffs[0] = BigUint::one();
        }
        TruncatedSeries { coeffs }
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Cauchy product truncated to the shorter length.
    pub fn product(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let len = self.len().min(other.len());
        let mut out = vec![BigUint::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

/// A fitted linear recurrence b_n = sum_j coeffs[j-1] * b_{n-j} for n >= n0.
#[derive(Clone, Debug, PartialEq)]
pub struct Recurrence {
    pub coeffs: Vec<BigRational>,
    pub n0: usize,
}

impl Recurrence {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    fn holds_at(&self, betti: &[u64], n: usize) -> bool {
        if n < self.order() {
            return false;
        }
        let mut acc = BigRational::zero();
        for (j, a) in self.coeffs.iter().enumerate() {
            acc += a * BigRational::from_integer(BigInt::from(betti[n - 1 - j]));
        }
        acc == BigRational::from_integer(BigInt::from(betti[n]))
    }

    /// Characteristic polynomial x^d - a_1 x^{d-1} - ... - a_d, ascending,
    /// cleared to primitive integer coefficients.
    pub fn char_poly(&self) -> Vec<BigInt> {
        let d = self.order();
        let mut rat: Vec<BigRational> = vec![BigRational::zero(); d + 1];
        rat[d] = BigRational::one();
        for (j, a) in self.coeffs.iter().enumerate() {
            rat[d - 1 - j] = -a.clone();
        }
        clear_denominators(&rat)
    }
}

fn clear_denominators(p: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.iter().map(|c| c / &g).collect()
    }
}

/// The minimal-order recurrence with exact rational coefficients satisfied
/// from some n0 <= max_order onward, found by exact elimination over Q.
/// Requires at least 2*max_order + 2 terms.
pub fn fit_recurrence(betti: &[u64], max_order: usize) -> Option<Recurrence> {
    let len = betti.len();
    if len < 2 * max_order + 2 || max_order == 0 {
        return None;
    }
    let q = |n: u64| BigRational::from_integer(BigInt::from(n));
    for d in 1..=max_order {
        // Equations for n = max_order .. len-1 must all hold.
        let rows: Vec<Vec<BigRational>> = (max_order..len)
            .map(|n| {
                let mut row: Vec<BigRational> = (1..=d).map(|j| q(betti[n - j])).collect();
                row.push(q(betti[n]));
                row
            })
            .collect();
        let m: Matrix<BigRational> = Matrix::from_rows(rows);
        let (r, pivots) = m.rref();
        if pivots.contains(&d) {
            continue; // inconsistent
        }
        let mut coeffs = vec![BigRational::zero(); d];
        for (row, &col) in pivots.iter().enumerate() {
            coeffs[col] = r.get(row, d);
        }
        let mut rec = Recurrence { coeffs, n0: max_order };
        while rec.n0 > d && rec.holds_at(betti, rec.n0 - 1) {
            rec.n0 -= 1;
        }
        return Some(rec);
    }
    None
}

/// Growth classification of a Betti sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Finite,
    PolynomialLike,
    ExponentialLike,
    Inconclusive,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Classification::Finite => "finite",
            Classification::PolynomialLike => "polynomial-like",
            Classification::ExponentialLike => "exponential-like",
            Classification::Inconclusive => "inconclusive",
        };
        write!(f, "{s}")
    }
}

/// Analysis configuration; thresholds are surfaced in the report.
#[derive(Clone, Debug)]
pub struct GrowthConfig {
    pub max_order: usize,
    /// Target width of curvature enclosures.
    pub isolation_width: BigRational,
    /// Exponential-like requires the curvature lower bound to clear
    /// 1 + exp_margin.
    pub exp_margin: BigRational,
    pub max_poly_degree: usize,
}

impl Default for GrowthConfig {
    fn default() -> Self {
        GrowthConfig {
            max_order: 8,
            isolation_width: pow10_recip(9),
            exp_margin: pow10_recip(6),
            max_poly_degree: 8,
        }
    }
}

fn pow10_recip(k: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64).pow(k))
}

/// The full analysis of a Betti sequence.
#[derive(Clone, Debug)]
pub struct GrowthReport {
    pub recurrence: Option<Recurrence>,
    /// Primitive integer characteristic polynomial, ascending coefficients
    /// (the algebraic descriptor behind the curvature enclosure).
    pub char_poly: Option<Vec<BigInt>>,
    pub curvature_low: Option<BigRational>,
    pub curvature_high: Option<BigRational>,
    pub classification: Classification,
    pub strictly_increasing_from: Option<usize>,
    pub exp_margin: BigRational,
    pub isolation_width: BigRational,
}

/// Least i0 with b_i < b_{i+1} for every computed i >= i0 (i0 at most
/// len - 2), or none.
pub fn strictly_increasing_from(betti: &[u64]) -> Option<usize> {
    if betti.len() < 2 {
        return None;
    }
    let mut i0 = betti.len() - 1;
    for i in (0..betti.len() - 1).rev() {
        if betti[i] < betti[i + 1] {
            i0 = i;
        } else {
            break;
        }
    }
    (i0 <= betti.len() - 2).then_some(i0)
}

/// Curvature bounds and classification of a Betti sequence against a fitted
/// recurrence (exact root enclosure of the characteristic polynomial) or,
/// without one, the window root bounds over the last half of the data.
#[derive(Clone, Debug)]
pub struct CurvatureEstimate {
    pub curvature_low: Option<BigRational>,
    pub curvature_high: Option<BigRational>,
    pub char_poly: Option<Vec<BigInt>>,
    pub classification: Classification,
}

pub fn curvature_estimate(
    betti: &[u64],
    recurrence: Option<&Recurrence>,
    config: &GrowthConfig,
) -> CurvatureEstimate {
    if betti.iter().any(|&b| b == 0) {
        return CurvatureEstimate {
            curvature_low: Some(BigRational::zero()),
            curvature_high: Some(BigRational::zero()),
            char_poly: None,
            classification: Classification::Finite,
        };
    }
    let one_plus = BigRational::one() + &config.exp_margin;
    if let Some(rec) = recurrence {
        let chi = rec.char_poly();
        if let Some((lo, hi)) = largest_real_root(&chi, &config.isolation_width) {
            let classification = if lo > one_plus {
                Classification::ExponentialLike
            } else if lo <= BigRational::one() && BigRational::one() <= hi {
                let tail = &betti[rec.n0.min(betti.len() - 1)..];
                let nondecreasing = tail.windows(2).all(|w| w[0] <= w[1]);
                if nondecreasing && fits_polynomial(tail, config.max_poly_degree) {
                    Classification::PolynomialLike
                } else {
                    Classification::Inconclusive
                }
            } else {
                Classification::Inconclusive
            };
            return CurvatureEstimate {
                curvature_low: Some(lo),
                curvature_high: Some(hi),
                char_poly: Some(chi),
                classification,
            };
        }
        return CurvatureEstimate {
            curvature_low: None,
            curvature_high: None,
            char_poly: Some(chi),
            classification: Classification::Inconclusive,
        };
    }
    // No recurrence: window root bounds over the last half.
    let start = (betti.len() / 2).max(1);
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    for n in start..betti.len() {
        let (l, h) = nth_root_enclosure(betti[n], n as u32, &config.isolation_width);
        lo = Some(match lo {
            Some(cur) => cur.min(l),
            None => l,
        });
        hi = Some(match hi {
            Some(cur) => cur.max(h),
            None => h,
        });
    }
    let classification = match &lo {
        Some(l) if *l > one_plus => Classification::ExponentialLike,
        _ => Classification::Inconclusive,
    };
    CurvatureEstimate { curvature_low: lo, curvature_high: hi, char_poly: None, classification }
}

/// Exact analysis of a Betti sequence: recurrence fit, curvature enclosure,
/// classification, strict-increase index.
pub fn analyze(betti: &[u64], config: &GrowthConfig) -> GrowthReport {
    // The verification window needs 2*order + 2 terms; adapt the order cap
    // to the data rather than refusing short sequences.
    let effective_order = config.max_order.min(betti.len().saturating_sub(2) / 2);
    let recurrence = if betti.iter().any(|&b| b == 0) {
        None
    } else {
        fit_recurrence(betti, effective_order)
    };
    let est = curvature_estimate(betti, recurrence.as_ref(), config);
    GrowthReport {
        recurrence,
        char_poly: est.char_poly,
        curvature_low: est.curvature_low,
        curvature_high: est.curvature_high,
        classification: est.classification,
        strictly_increasing_from: strictly_increasing_from(betti),
        exp_margin: config.exp_margin.clone(),
        isolation_width: config.isolation_width.clone(),
    }
}

/// Does the tail agree exactly with a polynomial of degree <= max_deg?
/// Checked by vanishing finite differences.
fn fits_polynomial(tail: &[u64], max_deg: usize) -> bool {
    if tail.len() < max_deg + 2 {
        return false;
    }
    let mut diffs: Vec<BigInt> = tail.iter().map(|&b| BigInt::from(b)).collect();
    for _ in 0..=max_deg {
        if diffs.iter().all(Zero::is_zero) {
            return true;
        }
        if diffs.len() < 2 {
            return false;
        }
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    diffs.iter().all(Zero::is_zero)
}

/// Rational enclosure of b^(1/n) of the requested width.
fn nth_root_enclosure(b: u64, n: u32, width: &BigRational) -> (BigRational, BigRational) {
    let target = BigRational::from_integer(BigInt::from(b));
    let mut lo = BigRational::zero();
    let mut hi = BigRational::from_integer(BigInt::from(b.max(1)));
    if hi < BigRational::one() {
        hi = BigRational::one();
    }
    let two = BigRational::from_integer(BigInt::from(2));
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        if pow_rational(&mid, n) <= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

fn pow_rational(x: &BigRational, n: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

// ---- exact polynomial root isolation over Q ----

type QPoly = Vec<BigRational>; // ascending, no trailing zeros

fn qpoly_trim(mut p: QPoly) -> QPoly {
    while p.last().map(Zero::is_zero).unwrap_or(false) {
        p.pop();
    }
    p
}

fn qpoly_from_ints(p: &[BigInt]) -> QPoly {
    qpoly_trim(p.iter().map(|c| BigRational::from_integer(c.clone())).collect())
}

fn qpoly_eval(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn qpoly_deriv(p: &[BigRational]) -> QPoly {
    qpoly_trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

/// Remainder of a by b (b nonzero).
fn qpoly_rem(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let mut r: QPoly = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let c = r[dr].clone() / lead.clone();
        for i in 0..=db {
            let idx = dr - db + i;
            let sub = &c * &b[i];
            r[idx] -= sub;
        }
        r = qpoly_trim(r);
        if r.len() <= db {
            break;
        }
    }
    r
}

fn qpoly_gcd(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let (mut x, mut y) = (qpoly_trim(a.to_vec()), qpoly_trim(b.to_vec()));
    while !y.is_empty() {
        let r = qpoly_rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        if !lead.is_zero() {
            for c in &mut x {
                *c /= lead.clone();
            }
        }
    }
    x
}

fn sturm_chain(p: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![p.clone(), qpoly_deriv(p)];
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        if chain[n - 1].len() == 1 {
            break;
        }
        let r = qpoly_rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.iter().map(|c| -c.clone()).collect());
    }
    chain
}

fn sign_variations(chain: &[QPoly], x: &BigRational) -> usize {
    let mut last: Option<bool> = None; // sign positive?
    let mut count = 0;
    for p in chain {
        let v = qpoly_eval(p, x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if let Some(prev) = last {
            if prev != pos {
                count += 1;
            }
        }
        last = Some(pos);
    }
    count
}

/// Number of distinct real roots in (a, b], assuming p(a) != 0 != p(b).
fn roots_in(chain: &[QPoly], a: &BigRational, b: &BigRational) -> usize {
    sign_variations(chain, a) - sign_variations(chain, b)
}

/// Enclosure [lo, hi] of the largest real root of the integer polynomial,
/// exact when that root is rational. None when there is no real root.
pub fn largest_real_root(poly: &[BigInt], width: &BigRational) -> Option<(BigRational, BigRational)> {
    let p = qpoly_from_ints(poly);
    if p.len() <= 1 {
        return None;
    }
    // Square-free part.
    let g = qpoly_gcd(&p, &qpoly_deriv(&p));
    let p = if g.len() > 1 { qpoly_div_exact(&p, &g) } else { p };
    // Extract rational roots (candidates p/q with p | c0, q | lead).
    let (rational_roots, deflated) = extract_rational_roots(&p);
    let best_rational = rational_roots.into_iter().max();
    if deflated.len() <= 1 {
        return best_rational.map(|r| (r.clone(), r));
    }
    let chain = sturm_chain(&deflated);
    let bound = cauchy_bound(&deflated);
    let lo0 = -bound.clone();
    let total = roots_in(&chain, &lo0, &bound);
    if total == 0 {
        return best_rational.map(|r| (r.clone(), r));
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let (mut a, mut b) = (lo0, bound);
    while &b - &a > *width {
        let mid = (&a + &b) / &two;
        // Midpoints are rational and the deflated part has no rational
        // roots, so evaluations never vanish.
        if roots_in(&chain, &mid, &b) > 0 {
            a = mid;
        } else {
            b = mid;
        }
    }
    match best_rational {
        Some(r) if r > b => Some((r.clone(), r)),
        Some(r) => {
            // Shrink until the rational root is outside the enclosure.
            let (mut a, mut b) = (a, b);
            while a < r && r <= b {
                let mid = (&a + &b) / &two;
                if roots_in(&chain, &mid, &b) > 0 {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            if r > b {
                Some((r.clone(), r))
            } else {
                Some((a, b))
            }
        }
        None => Some((a, b)),
    }
}

fn qpoly_div_exact(a: &QPoly, b: &QPoly) -> QPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut q = vec![BigRational::zero(); a.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr].clone() / lead.clone();
        q[dr - db] = c.clone();
        for i in 0..=db {
            let idx = dr - db + i;
            let sub = &c * &b[i];
            r[idx] -= sub;
        }
        r = qpoly_trim(r);
    }
    qpoly_trim(q)
}

fn cauchy_bound(p: &QPoly) -> BigRational {
    let lead = p.last().unwrap().clone();
    let mut m = BigRational::zero();
    for c in &p[..p.len() - 1] {
        let a = (c / &lead).abs();
        if a > m {
            m = a;
        }
    }
    m + BigRational::one()
}

fn extract_rational_roots(p: &QPoly) -> (Vec<BigRational>, QPoly) {
    let ints = clear_denominators(p);
    let mut work = qpoly_from_ints(&ints);
    let mut roots = Vec::new();
    // Zero roots first.
    while work.len() > 1 && work[0].is_zero() {
        work.remove(0);
        roots.push(BigRational::zero());
    }
    let limit = BigInt::from(1_000_000_000_000u64);
    loop {
        if work.len() <= 1 {
            break;
        }
        let ints = clear_denominators(&work);
        let c0 = ints[0].clone();
        let lead = ints[ints.len() - 1].clone();
        if c0.abs() > limit || lead.abs() > limit {
            break;
        }
        let mut found = None;
        'search: for pnum in divisors(&c0.abs()) {
            for qden in divisors(&lead.abs()) {
                for sign in [1i64, -1] {
                    let cand = BigRational::new(BigInt::from(sign) * &pnum, qden.clone());
                    if qpoly_eval(&work, &cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some(r) => {
                // Divide by (x - r).
                let divisor = vec![-r.clone(), BigRational::one()];
                work = qpoly_div_exact(&work, &divisor);
                roots.push(r);
            }
            None => break,
        }
    }
    (roots, work)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::zero()];
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            out.push(n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// Truncated-series product of Betti data (Poincaré-series arithmetic).
pub fn series_product(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    a.product(b)
}

/// The deviation quotient g(R) = curv(omega) / curv(k) as a rational
/// interval; exactly zero when omega is free.
#[derive(Clone, Debug)]
pub struct DeviationReport {
    pub omega_free: bool,
    pub g_low: BigRational,
    pub g_high: BigRational,
    pub omega_betti: Vec<u64>,
    pub k_betti: Vec<u64>,
    pub omega_growth: Option<GrowthReport>,
    pub k_growth: Option<GrowthReport>,
}

pub fn gorenstein_deviation<K: Field>(
    ring: &Arc<ArtinAlgebra<K>>,
    steps: usize,
    config: &GrowthConfig,
    budget: &Budget,
) -> Result<DeviationReport> {
    assert!(steps >= 4);
    let omega = canonical_module(ring.clone(), budget)?;
    let k = residue_field(ring.clone(), budget)?;
    let mut res_w = Resolution::new(omega);
    res_w.extend_to(steps, budget)?;
    let omega_betti = res_w.betti_padded(steps);
    if res_w.complete {
        let mut res_k = Resolution::new(k);
        res_k.extend_to(steps, budget)?;
        return Ok(DeviationReport {
            omega_free: true,
            g_low: BigRational::zero(),
            g_high: BigRational::zero(),
            omega_betti,
            k_betti: res_k.betti_padded(steps),
            omega_growth: None,
            k_growth: None,
        });
    }
    let mut res_k = Resolution::new(k);
    res_k.extend_to(steps, budget)?;
    let k_betti = res_k.betti_padded(steps);
    let wg = analyze(&omega_betti, config);
    let kg = analyze(&k_betti, config);
    let (Some(wlo), Some(whi)) = (wg.curvature_low.clone(), wg.curvature_high.clone()) else {
        panic!("curvature bounds always present for positive sequences");
    };
    let (Some(klo), Some(khi)) = (kg.curvature_low.clone(), kg.curvature_high.clone()) else {
        panic!("curvature bounds always present for positive sequences");
    };
    let clamp = |x: BigRational| if x.is_negative() { BigRational::zero() } else { x };
    let g_low = clamp(wlo / khi);
    let g_high = clamp(whi / klo.max(pow10_recip(9)));
    Ok(DeviationReport {
        omega_free: false,
        g_low,
        g_high,
        omega_betti,
        k_betti,
        omega_growth: Some(wg),
        k_growth: Some(kg),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qr(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn recurrence_doubling_with_burn_in() {
        // (2,3,6,12,24,48,96): b_n = 2 b_{n-1} only from n = 2.
        let rec = fit_recurrence(&[2, 3, 6, 12, 24, 48, 96], 2).unwrap();
        assert_eq!(rec.coeffs, vec![q(2)]);
        assert_eq!(rec.n0, 2);
    }

    #[test]
    fn recurrence_fibonacci_like() {
        let rec = fit_recurrence(&[1, 3, 8, 21, 55, 144, 377], 2).unwrap();
        assert_eq!(rec.coeffs, vec![q(3), q(-1)]);
        assert_eq!(rec.n0, 2);
    }

    #[test]
    fn recurrence_constant() {
        let rec = fit_recurrence(&[1, 1, 1, 1, 1, 1], 2).unwrap();
        assert_eq!(rec.coeffs, vec![q(1)]);
    }

    #[test]
    fn curvature_exact_two() {
        let report = analyze(&[2, 3, 6, 12, 24, 48, 96, 192, 384], &GrowthConfig::default());
        // Exact root of x - 2.
        assert_eq!(report.curvature_low, Some(q(2)));
        assert_eq!(report.curvature_high, Some(q(2)));
        assert_eq!(report.classification, Classification::ExponentialLike);
        assert_eq!(report.strictly_increasing_from, Some(0));
    }

    #[test]
    fn curvature_golden_like_interval() {
        // k over B(3): largest root of x^2 - 3x + 1 is (3+sqrt(5))/2.
        let betti = [1u64, 3, 8, 21, 55, 144, 377, 987, 2584, 6765, 17711];
        let report = analyze(&betti, &GrowthConfig::default());
        let lo = report.curvature_low.clone().unwrap();
        let hi = report.curvature_high.clone().unwrap();
        assert!(&hi - &lo <= pow10_recip(9));
        // The interval sits inside (2.6180339, 2.6180340).
        assert!(lo > qr(26_180_339, 10_000_000));
        assert!(hi < qr(26_180_340, 10_000_000));
        // And contains (3+sqrt(5))/2: (2lo-3)^2 <= 5 <= (2hi-3)^2.
        let t = |x: &BigRational| {
            let y = x * q(2) - q(3);
            &y * &y
        };
        assert!(t(&lo) <= q(5) && q(5) <= t(&hi));
        assert_eq!(report.classification, Classification::ExponentialLike);
    }

    #[test]
    fn constant_sequence_polynomial_like() {
        let report = analyze(&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], &GrowthConfig::default());
        assert_eq!(report.curvature_low, Some(q(1)));
        assert_eq!(report.curvature_high, Some(q(1)));
        assert_eq!(report.classification, Classification::PolynomialLike);
        assert_eq!(report.strictly_increasing_from, None);
    }

    #[test]
    fn linear_growth_polynomial_like() {
        // b_i = i + 1 (complete-intersection-like).
        let betti: Vec<u64> = (1..=20).collect();
        let report = analyze(&betti, &GrowthConfig::default());
        assert_eq!(report.classification, Classification::PolynomialLike);
        let rec = report.recurrence.unwrap();
        assert_eq!(rec.coeffs, vec![q(2), q(-1)]);
    }

    #[test]
    fn finite_sequence() {
        let report = analyze(&[1, 0, 0, 0], &GrowthConfig::default());
        assert_eq!(report.classification, Classification::Finite);
        assert_eq!(report.curvature_low, Some(q(0)));
    }

    #[test]
    fn strict_increase_examples() {
        assert_eq!(strictly_increasing_from(&[2, 3, 6, 12, 24]), Some(0));
        assert_eq!(strictly_increasing_from(&[1, 1, 2, 4, 8]), Some(1));
        assert_eq!(strictly_increasing_from(&[1, 1, 1]), None);
    }

    #[test]
    fn series_products() {
        let a = TruncatedSeries::from_u64s(&[1, 2, 4, 8]);
        let b = TruncatedSeries::from_u64s(&[1, 3, 8, 21]);
        assert_eq!(a.product(&b), TruncatedSeries::from_u64s(&[1, 5, 18, 57]));
        let unit = TruncatedSeries::one(4);
        assert_eq!(a.product(&unit), a);
        // Associativity and commutativity on a truncation.
        let c = TruncatedSeries::from_u64s(&[2, 1, 0, 3]);
        assert_eq!(a.product(&b), b.product(&a));
        assert_eq!(a.product(&b).product(&c), a.product(&b.product(&c)));
    }

    #[test]
    fn no_recurrence_window_bounds() {
        // Strictly erratic growth with no small recurrence: bounds come from
        // the last-half window of b_n^(1/n).
        let betti = [1u64, 2, 5, 11, 23, 31, 67, 131];
        let report = analyze(&betti, &GrowthConfig { max_order: 2, ..Default::default() });
        assert!(report.recurrence.is_none());
        let lo = report.curvature_low.unwrap();
        assert!(lo > BigRational::one());
    }

    #[test]
    fn largest_root_of_quadratics() {
        // x^2 - x - 1: golden ratio.
        let p = vec![BigInt::from(-1), BigInt::from(-1), BigInt::from(1)];
        let (lo, hi) = largest_real_root(&p, &pow10_recip(9)).unwrap();
        assert!(lo < hi);
        assert!(lo > qr(1_618_033, 1_000_000) && hi < qr(1_618_034, 1_000_000));
        // x^2 + 1: no real roots.
        let p = vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)];
        assert!(largest_real_root(&p, &pow10_recip(9)).is_none());
        // (x-1)^2: exact rational root via square-free reduction.
        let p = vec![BigInt::from(1), BigInt::from(-2), BigInt::from(1)];
        let (lo, hi) = largest_real_root(&p, &pow10_recip(9)).unwrap();
        assert_eq!(lo, q(1));
        assert_eq!(hi, q(1));
        // x^2 - 3x + 2 = (x-1)(x-2): largest rational root 2.
        let p = vec![BigInt::from(2), BigInt::from(-3), BigInt::from(1)];
        let (lo, hi) = largest_real_root(&p, &pow10_recip(9)).unwrap();
        assert_eq!((lo, hi), (q(2), q(2)));
    }
}
