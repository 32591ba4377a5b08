//! Dense univariate polynomials with rational coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::rational::{Integer, Rational};

/// `coeffs[d]` is the coefficient of `x^d`; trailing zeros are trimmed so the
/// zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x^d`.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = Rational::one();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + super::rational::to_f64(c))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(d, c)| c * Rational::from_integer(d.into()))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rational::from_integer((d + 1).into()));
        }
        Self::new(coeffs)
    }

    pub fn integrate(&self, a: &Rational, b: &Rational) -> Rational {
        let anti = self.antiderivative();
        anti.eval(b) - anti.eval(a)
    }

    /// Returns `x -> self(alpha * x + beta)`.
    pub fn compose_affine(&self, alpha: &Rational, beta: &Rational) -> Self {
        let lin = RationalPoly::new(vec![beta.clone(), alpha.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(RationalPoly::zero(), |acc, c| {
                &(&acc * &lin) + &RationalPoly::constant(c.clone())
            })
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        RationalPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        self + &(-rhs)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }
}

/// A polynomial cleared of denominators, `P(x) = (sum a_d x^d) / denom`,
/// used to evaluate at many points `p/m` with integer arithmetic only.
#[derive(Debug, Clone)]
pub struct ScaledPoly {
    numer: Vec<Integer>,
    denom: Integer,
}

impl ScaledPoly {
    pub fn new(poly: &RationalPoly) -> Self {
        let denom = poly
            .coeffs()
            .iter()
            .fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
        let numer = poly
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect();
        Self { numer, denom }
    }

    pub fn degree(&self) -> usize {
        self.numer.len().saturating_sub(1)
    }

    pub fn denom(&self) -> &Integer {
        &self.denom
    }

    /// `m^deg * denom * P(p/m)`, an integer.
    pub fn eval_homogeneous(&self, p: &Integer, m: &Integer) -> Integer {
        // Horner in p with powers of m folded in.
        let mut acc = Integer::zero();
        let mut mp = Integer::one();
        for a in self.numer.iter().rev() {
            acc = acc * p + a * &mp;
            mp *= m;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, ratio};

    fn poly(cs: &[(i64, i64)]) -> RationalPoly {
        RationalPoly::new(cs.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    #[test]
    fn arithmetic() {
        let p = poly(&[(1, 1), (1, 1)]); // 1 + x
        let q = poly(&[(-1, 1), (1, 1)]); // -1 + x
        assert_eq!(&p * &q, poly(&[(-1, 1), (0, 1), (1, 1)]));
        assert_eq!(&p - &p, RationalPoly::zero());
        assert_eq!((&p + &q).degree(), 1);
    }

    #[test]
    fn calculus() {
        let p = poly(&[(1, 6), (-1, 1), (1, 1)]);
        assert_eq!(p.derivative(), poly(&[(-1, 1), (2, 1)]));
        assert_eq!(p.integrate(&int(0), &int(1)), int(0));
    }

    #[test]
    fn affine_composition() {
        let p = poly(&[(0, 1), (0, 1), (1, 1)]); // x^2
        let c = p.compose_affine(&int(2), &int(-1)); // (2x-1)^2
        assert_eq!(c, poly(&[(1, 1), (-4, 1), (4, 1)]));
        assert_eq!(c.eval(&ratio(3, 4)), ratio(1, 4));
    }

    #[test]
    fn scaled_eval_matches_rational_eval() {
        let p = poly(&[(1, 6), (-1, 1), (1, 1)]);
        let s = ScaledPoly::new(&p);
        for (a, m) in [(1i64, 3i64), (2, 7), (5, 11), (0, 4)] {
            let h = s.eval_homogeneous(&a.into(), &m.into());
            let mdeg = Integer::from(m).pow(s.degree() as u32);
            let got = Rational::new(h, mdeg * s.denom());
            assert_eq!(got, p.eval(&ratio(a, m)));
        }
    }
}
