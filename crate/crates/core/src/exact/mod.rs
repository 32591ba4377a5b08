//! Exact scalar substrate: rationals, Bernoulli data, polynomials and
//! symbolic `rational * pi^a * i^b` values.

pub mod bernoulli;
pub mod poly;
pub mod rational;
pub mod symbolic;

pub use bernoulli::{
    bernoulli_number, bernoulli_poly, eval_periodic_bernoulli, BernoulliPoly, BoundaryMode,
};
pub use poly::{RationalPoly, ScaledPoly};
pub use rational::{
    binomial, factorial, frac, gcd, int, parse_rational, ratio, residue_mod, to_f64, Integer,
    Rational,
};
pub use symbolic::SymbolicValue;
