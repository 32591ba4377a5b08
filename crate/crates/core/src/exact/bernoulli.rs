//! Bernoulli numbers and polynomials, and the periodic functions `b_q`.

use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};

use super::poly::RationalPoly;
use super::rational::{binomial, frac, Rational};

/// How a periodic function with a jump is evaluated exactly at an integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum BoundaryMode {
    /// Mean of the one-sided limits, the Fourier-series convention.
    #[default]
    Principal,
    /// Limit from the left, `f(1^-)`.
    Left,
    /// Limit from the right, `f(0^+)`.
    Right,
}

fn cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Rational::one()]))
}

/// `B_q` with the convention `B_1 = -1/2`. Memoized process-wide.
pub fn bernoulli_number(q: u32) -> Rational {
    let q = q as usize;
    let mut table = cache().lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= q {
        let n = table.len() as u32;
        let s = table
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (j, b)| {
                acc + Rational::from_integer(binomial(n + 1, j as u32)) * b
            });
        table.push(-s / Rational::from_integer((n + 1).into()));
    }
    table[q].clone()
}

/// The Bernoulli polynomial `B_q(x) = sum_j C(q,j) B_{q-j} x^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliPoly {
    degree: u32,
    poly: RationalPoly,
}

impl BernoulliPoly {
    pub fn new(q: u32) -> Self {
        let coeffs = (0..=q)
            .map(|j| Rational::from_integer(binomial(q, j)) * bernoulli_number(q - j))
            .collect();
        Self {
            degree: q,
            poly: RationalPoly::new(coeffs),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficients of `x^0, ..., x^q`.
    pub fn coefficients(&self) -> Vec<Rational> {
        let mut c = self.poly.coeffs().to_vec();
        c.resize(self.degree as usize + 1, Rational::zero());
        c
    }

    pub fn as_poly(&self) -> &RationalPoly {
        &self.poly
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.poly.eval(x)
    }
}

pub fn bernoulli_poly(q: u32) -> BernoulliPoly {
    BernoulliPoly::new(q)
}

/// `b_q(x) = B_q({x})`, with integers resolved by `mode` when `q = 1`.
pub fn eval_periodic_bernoulli(q: u32, x: &Rational, mode: BoundaryMode) -> Rational {
    let t = frac(x);
    if q == 1 && t.is_zero() {
        return match mode {
            BoundaryMode::Principal => Rational::zero(),
            BoundaryMode::Left => Rational::new(1.into(), 2.into()),
            BoundaryMode::Right => Rational::new((-1).into(), 2.into()),
        };
    }
    BernoulliPoly::new(q).eval(&t)
}
