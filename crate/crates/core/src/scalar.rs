//! Exact ground-field arithmetic: prime fields `Fp<P>` and the rationals.
//!
//! Everything downstream is generic over [`Field`]; no floating point enters
//! any computation in this crate.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// An exact field element. The trait is nullary-constructible (`zero`/`one`,
/// `from_int`) so that generic code needs no field handle; this is what makes
/// the const-generic prime fields and `BigRational` interchangeable.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse. Panics on zero (callers guard).
    fn inv(&self) -> Self;
    /// Image of a signed integer under the canonical ring map Z -> k.
    fn from_int(n: i64) -> Self;
    /// Characteristic, `None` meaning zero (the rationals).
    fn characteristic() -> Option<u64>;
    /// Canonical short name, e.g. `F32003` or `Q`.
    fn name() -> String;
    /// Inverse of `Display`, for the cache file format.
    fn parse(text: &str) -> Option<Self>;
}

const fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field with `P` elements, `P < 2^31` so products fit in `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const VALID: () = {
        assert!(P >= 2, "modulus must be at least 2");
        assert!(P < (1 << 31), "modulus must fit in 31 bits");
        assert!(is_prime_u64(P), "modulus must be prime");
    };

    pub fn new(n: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::VALID;
        let m = (n % P as i64 + P as i64) as u64 % P;
        Fp(m)
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_F{}", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        // Extended Euclid on (P, value).
        let (mut r0, mut r1) = (P as i64, self.0 as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Fp::new(t0)
    }

    fn from_int(n: i64) -> Self {
        Fp::new(n)
    }

    fn characteristic() -> Option<u64> {
        Some(P)
    }

    fn name() -> String {
        format!("F{P}")
    }

    fn parse(text: &str) -> Option<Self> {
        text.parse::<i64>().ok().map(Fp::new)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn characteristic() -> Option<u64> {
        None
    }

    fn name() -> String {
        "Q".to_string()
    }

    fn parse(text: &str) -> Option<Self> {
        BigRational::from_str(text).ok()
    }
}

/// Runtime description of a ground field, as written in ring files.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(into = "String")]
pub enum FieldSpec {
    Prime(u64),
    Rational,
}

impl FieldSpec {
    /// Parse `Q` or `F<p>`; validates primality.
    pub fn parse(text: &str) -> Option<FieldSpec> {
        if text == "Q" {
            return Some(FieldSpec::Rational);
        }
        let p = text.strip_prefix('F')?.parse::<u64>().ok()?;
        if p >= 2 && p < (1 << 31) && is_prime_runtime(p) {
            Some(FieldSpec::Prime(p))
        } else {
            None
        }
    }
}

impl From<FieldSpec> for String {
    fn from(fs: FieldSpec) -> String {
        fs.to_string()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "F{p}"),
            FieldSpec::Rational => write!(f, "Q"),
        }
    }
}

pub fn is_prime_runtime(n: u64) -> bool {
    is_prime_u64(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    type F5 = Fp<5>;

    #[test]
    fn fp_arithmetic() {
        let a = F5::new(3);
        let b = F5::new(4);
        assert_eq!(a + b, F5::new(2));
        assert_eq!(a - b, F5::new(4));
        assert_eq!(a * b, F5::new(2));
        assert_eq!(-a, F5::new(2));
        assert_eq!(a.inv() * a, F5::new(1));
        assert_eq!(F5::from_int(-7), F5::new(3));
    }

    #[test]
    fn fp_inverses_all_nonzero() {
        for v in 1..32003 {
            let x = Fp::<32003>::new(v);
            assert_eq!(x * x.inv(), Fp::<32003>::new(1));
        }
    }

    #[test]
    fn rational_field_ops() {
        let half = BigRational::from_int(1) / BigRational::from_int(2);
        assert_eq!(half.clone() + half.clone(), BigRational::one());
        assert_eq!(Field::inv(&half), BigRational::from_int(2));
        assert_eq!(BigRational::parse("3/4").unwrap() * BigRational::from_int(4), BigRational::from_int(3));
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(FieldSpec::parse("Q"), Some(FieldSpec::Rational));
        assert_eq!(FieldSpec::parse("F32003"), Some(FieldSpec::Prime(32003)));
        assert_eq!(FieldSpec::parse("F32004"), None);
        assert_eq!(FieldSpec::parse("F1"), None);
        assert_eq!(FieldSpec::parse("G7"), None);
    }
}
