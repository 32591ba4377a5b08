//! Exact scalars of the form `coeff * pi^a * i^b`.

use std::fmt;
use std::ops::{Mul, Neg};

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{pow, to_f64, Rational};

/// `coeff * pi^pi_power * iota^iota_power`.
///
/// Values are kept canonical: `iota_power` is 0 or 1 (a factor `iota^2 = -1`
/// is folded into `coeff`), and zero is always `0 * pi^0 * iota^0`. The
/// power of pi may be negative, as in Fourier coefficients `(2 pi i n)^-q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymbolicValue {
    #[serde(with = "super::rational::serde_rational")]
    coeff: Rational,
    pi_power: i32,
    iota_power: u8,
}

impl SymbolicValue {
    pub fn new(coeff: Rational, pi_power: i32, iota_power: i64) -> Self {
        let mut v = Self {
            coeff,
            pi_power,
            iota_power: iota_power.rem_euclid(4) as u8,
        };
        v.canonicalize();
        v
    }

    pub fn rational(coeff: Rational) -> Self {
        Self::new(coeff, 0, 0)
    }

    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn iota() -> Self {
        Self::new(Rational::one(), 0, 1)
    }

    /// `(2 pi)^e`, for any integer `e`.
    pub fn two_pi_pow(e: i32) -> Self {
        let two = Rational::from_integer(2.into());
        let c = if e >= 0 {
            pow(&two, e as u32)
        } else {
            pow(&two, e.unsigned_abs()).recip()
        };
        Self::new(c, e, 0)
    }

    fn canonicalize(&mut self) {
        if self.coeff.is_zero() {
            self.pi_power = 0;
            self.iota_power = 0;
            return;
        }
        if self.iota_power >= 2 {
            self.coeff = -&self.coeff;
            self.iota_power -= 2;
        }
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn pi_power(&self) -> i32 {
        self.pi_power
    }

    pub fn iota_power(&self) -> u8 {
        self.iota_power
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// True when the value is a plain rational (no pi, no iota).
    pub fn as_rational(&self) -> Option<&Rational> {
        (self.pi_power == 0 && self.iota_power == 0).then_some(&self.coeff)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(&self.coeff * s, self.pi_power, self.iota_power as i64)
    }

    pub fn powi(&self, e: u32) -> Self {
        Self::new(
            pow(&self.coeff, e),
            self.pi_power * e as i32,
            self.iota_power as i64 * e as i64,
        )
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // iota^-1 = -iota
        let (c, b) = if self.iota_power == 1 {
            (-self.coeff.recip(), 1)
        } else {
            (self.coeff.recip(), 0)
        };
        Some(Self::new(c, -self.pi_power, b))
    }

    pub fn to_complex(&self) -> Complex64 {
        let mag = to_f64(&self.coeff) * std::f64::consts::PI.powi(self.pi_power);
        if self.iota_power == 1 {
            Complex64::new(0.0, mag)
        } else {
            Complex64::new(mag, 0.0)
        }
    }

    /// Real part of the numeric value; exact values with `iota_power = 1` are
    /// purely imaginary and give 0.
    pub fn to_f64(&self) -> f64 {
        self.to_complex().re
    }

    /// Sum of two values with the same pi and iota powers (or either zero).
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        (self.pi_power == other.pi_power && self.iota_power == other.iota_power).then(|| {
            Self::new(
                &self.coeff + &other.coeff,
                self.pi_power,
                self.iota_power as i64,
            )
        })
    }
}

impl Mul for &SymbolicValue {
    type Output = SymbolicValue;
    fn mul(self, rhs: &SymbolicValue) -> SymbolicValue {
        SymbolicValue::new(
            &self.coeff * &rhs.coeff,
            self.pi_power + rhs.pi_power,
            self.iota_power as i64 + rhs.iota_power as i64,
        )
    }
}

impl Mul for SymbolicValue {
    type Output = SymbolicValue;
    fn mul(self, rhs: SymbolicValue) -> SymbolicValue {
        &self * &rhs
    }
}

impl Neg for &SymbolicValue {
    type Output = SymbolicValue;
    fn neg(self) -> SymbolicValue {
        SymbolicValue::new(-&self.coeff, self.pi_power, self.iota_power as i64)
    }
}

impl From<Rational> for SymbolicValue {
    fn from(c: Rational) -> Self {
        Self::rational(c)
    }
}

impl fmt::Display for SymbolicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        match self.pi_power {
            0 => {}
            1 => write!(f, "*pi")?,
            p => write!(f, "*pi^{p}")?,
        }
        if self.iota_power == 1 {
            write!(f, "*i")?;
        }
        Ok(())
    }
}
