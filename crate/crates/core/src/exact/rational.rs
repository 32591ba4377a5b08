//! Rational scalars and the elementary integer helpers built on them.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision integer.
pub type Integer = BigInt;

/// Arbitrary-precision rational, always stored with a positive, coprime
/// denominator.
pub type Rational = BigRational;

/// Shorthand for the rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Greatest common divisor of two machine integers; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Fractional part `{x} = x - floor(x)`, always in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

/// Residue of `x` modulo `nu`: `x - nu * floor(x / nu)`.
pub fn residue_mod(x: &Rational, nu: u64) -> Result<Rational> {
    if nu == 0 {
        return Err(Error::InvalidParameter(
            "residue modulus must be >= 1".into(),
        ));
    }
    let m = Rational::from_integer(nu.into());
    Ok(x - &m * (x / &m).floor())
}

pub fn factorial(n: u32) -> Integer {
    (1..=n).fold(Integer::one(), |acc, k| acc * k)
}

pub fn binomial(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Lossy conversion used only at the exact/float boundary.
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        let n = x.numer().to_f64().unwrap_or(f64::NAN);
        let d = x.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Parses `"p/q"` or `"p"`; the result is normalized.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidParameter(format!("`{s}` is not a rational number"));
    let t = s.trim();
    match t.split_once('/') {
        Some((n, d)) => {
            let n: Integer = n.trim().parse().map_err(|_| bad())?;
            let d: Integer = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => t
            .parse::<Integer>()
            .map(Rational::from_integer)
            .map_err(|_| bad()),
    }
}

/// Integer power with the convention `0^0 = 1`.
pub fn pow(x: &Rational, e: u32) -> Rational {
    num_traits::pow(x.clone(), e as usize)
}

pub fn abs(x: &Rational) -> Rational {
    x.abs()
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod serde_rational {
    use super::{parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(x)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}
