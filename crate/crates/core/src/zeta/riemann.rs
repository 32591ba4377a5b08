use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::pow;
use crate::exact::{bernoulli_number, factorial, gcd, to_f64, Rational, SymbolicValue};
use crate::sum::NeumaierSum;

/// `zeta(q) = (-1)^(q/2+1) B_q (2 pi)^q / (2 q!)` for even `q >= 2`.
pub fn riemann_zeta_even_exact(q: u32) -> Result<SymbolicValue> {
    if q < 2 || q % 2 == 1 {
        return Err(Error::NoClosedForm(format!(
            "zeta({q}) has no rational multiple of a pi power"
        )));
    }
    let sign = if (q / 2) % 2 == 1 { 1 } else { -1 };
    let c = bernoulli_number(q)
        * pow(&Rational::from_integer(2.into()), q)
        * Rational::from_integer(sign.into())
        / Rational::from_integer(factorial(q) * 2);
    Ok(SymbolicValue::new(c, q as i32, 0))
}

/// `zeta(s)` for real `s > 1` by Euler-Maclaurin summation. Correction
/// terms are added until the next one falls below `tol / 10`.
pub fn riemann_zeta_numeric(s: f64, tol: f64) -> Result<f64> {
    if s.is_nan() || s <= 1.0 || !s.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "zeta(s) needs s > 1, got {s}"
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let n: u32 = 16;
    let nf = n as f64;
    let mut acc: NeumaierSum = (1..n).rev().map(|i| (i as f64).powf(-s)).sum();
    acc += nf.powf(1.0 - s) / (s - 1.0);
    acc += 0.5 * nf.powf(-s);
    // term_j = B_2j / (2j)! * s (s+1) ... (s+2j-2) * N^(-s-2j+1)
    let mut rising = s;
    let mut npow = nf.powf(-s - 1.0);
    for j in 1..=40u32 {
        let b = to_f64(&(bernoulli_number(2 * j) / Rational::from_integer(factorial(2 * j))));
        let term = b * rising * npow;
        acc += term;
        if term.abs() < tol / 10.0 {
            return Ok(acc.value());
        }
        rising *= (s + (2 * j - 1) as f64) * (s + (2 * j) as f64);
        npow /= nf * nf;
    }
    Err(Error::InvalidParameter(format!(
        "tolerance {tol} not reachable for zeta({s})"
    )))
}

/// `zeta(q)` as a float: exact closed form for even `q`, numeric otherwise.
pub fn riemann_zeta_f64(q: u32) -> Result<f64> {
    match riemann_zeta_even_exact(q) {
        Ok(v) => Ok(v.to_f64()),
        Err(_) => riemann_zeta_numeric(q as f64, 1e-15),
    }
}

/// `zeta(q, R_{>=0} v) = zeta(|q|) prod_j v_j^(-q_j)` for a primitive `v`
/// with positive coordinates wherever `q_j > 0`.
pub fn ray_zeta_exact(q: &[u32], v: &[i64]) -> Result<SymbolicValue> {
    if q.len() != v.len() {
        return Err(Error::LengthMismatch {
            functions: q.len(),
            entries: v.len(),
        });
    }
    if v.iter().fold(0, |g, &x| gcd(g, x)) != 1 {
        return Err(Error::InvalidParameter(format!("{v:?} is not primitive")));
    }
    let mut scale = Rational::one();
    for (&qj, &vj) in q.iter().zip(v) {
        if qj == 0 {
            continue;
        }
        if vj <= 0 {
            return Err(Error::InvalidParameter(format!(
                "{v:?} must be positive on the support of q"
            )));
        }
        scale /= pow(&Rational::from_integer(vj.into()), qj);
    }
    let w: u32 = q.iter().sum();
    let z = riemann_zeta_even_exact(w)?;
    debug_assert!(!scale.is_zero() && scale.is_positive());
    Ok(z.scale(&scale))
}
