//! Closed-form right-hand sides.

use num_traits::{One, Zero};

use super::nu::NuVector;
use crate::error::{Error, Result};
use crate::exact::rational::pow;
use crate::exact::{bernoulli_number, int, Rational, SymbolicValue};

fn r_int(n: u64) -> Rational {
    Rational::from_integer(n.into())
}

/// `(nu_0^2 + nu_1^2 + nu_2^2) / (12 nu_0 nu_1 nu_2) - 1/4`.
pub fn rademacher_rhs(nu: &NuVector) -> Result<Rational> {
    nu.expect_r(2)?;
    let v = nu.entries();
    let sq: u64 = v.iter().map(|x| x * x).sum();
    let prod: u64 = v.iter().product();
    Ok(Rational::new(sq.into(), (12 * prod).into()) - Rational::new(1.into(), 4.into()))
}

/// The three-term reciprocity for `f_j = {x} - a_j`.
pub fn shifted_rhs(nu: &NuVector, a: &[Rational]) -> Result<Rational> {
    nu.expect_r(2)?;
    if a.len() != 3 {
        return Err(Error::Dimension {
            expected: 2,
            found: a.len().saturating_sub(1),
        });
    }
    if let Some(x) = a
        .iter()
        .find(|x| **x <= Rational::zero() || **x >= Rational::one())
    {
        return Err(Error::InvalidParameter(format!("shift {x} outside (0,1)")));
    }
    let v = nu.entries();
    let half = Rational::new(1.into(), 2.into());
    let mut out = int(-1) + a.iter().sum::<Rational>();
    for j in 0..3 {
        for k in j + 1..3 {
            let l = 3 - j - k;
            out -= &a[j] * &a[k];
            out += r_int(v[l]) * (&half - &a[j]) * (&half - &a[k]);
        }
    }
    let sq: u64 = v.iter().map(|x| x * x).sum();
    let prod: u64 = v.iter().product();
    Ok(out + Rational::new(sq.into(), (12 * prod).into()))
}

/// Reciprocity for `(b_1, b_q)`: `-B(q)` for odd `q` (with `B(1) = 0`),
/// `B_q (nu_0^(1-q) - 1)` for even `q`.
pub fn r1_closed_form(nu: &NuVector, q: u32) -> Result<Rational> {
    nu.expect_r(1)?;
    if q == 0 {
        return Err(Error::InvalidParameter("q must be >= 1".into()));
    }
    if q % 2 == 1 {
        return Ok(if q == 1 {
            Rational::zero()
        } else {
            -bernoulli_number(q)
        });
    }
    let nu0 = r_int(nu.get(0));
    Ok(bernoulli_number(q) * (pow(&nu0, q - 1).recip() - Rational::one()))
}

/// `nu_k - 1` if `nu_k` divides the sum of the other entries, else `-1`.
pub fn exp_closed_form(nu: &NuVector, k: usize) -> Result<i64> {
    nu.check_index(k)?;
    let m = nu.get(k);
    let s: u64 = nu.without(k).iter().sum();
    Ok(if s.is_multiple_of(m) {
        m as i64 - 1
    } else {
        -1
    })
}

/// Sign vectors `u in {-1,1}^r` with `nu_k | <u, nu^k>`, where `nu^k` drops
/// entry `k`. Enumerated exhaustively in binary order, `+1` first.
pub fn sign_classes(nu: &NuVector, k: usize) -> Result<Vec<Vec<i8>>> {
    nu.check_index(k)?;
    let rest = nu.without(k);
    let m = nu.get(k) as i128;
    let r = rest.len();
    if r >= 63 {
        return Err(Error::Unsupported(
            "sign enumeration beyond 62 coordinates".into(),
        ));
    }
    Ok((0u64..1 << r)
        .map(|bits| {
            (0..r)
                .map(|j| if bits >> j & 1 == 1 { -1 } else { 1 })
                .collect::<Vec<i8>>()
        })
        .filter(|u| {
            let dot: i128 = u
                .iter()
                .zip(&rest)
                .map(|(&s, &v)| s as i128 * v as i128)
                .sum();
            dot % m == 0
        })
        .collect())
}

/// `nu_k beta_k / 2^r - 1` with `beta_k = #U_k(nu)`.
pub fn cos_closed_form(nu: &NuVector, k: usize) -> Result<Rational> {
    let beta = sign_classes(nu, k)?.len() as u64;
    let two_r = pow(&int(2), nu.r() as u32);
    Ok(r_int(nu.get(k) * beta) / two_r - Rational::one())
}

/// `(1 + (-1)^r) / (2i)^r * betabar_k * nu_k`, where `betabar_k` sums the
/// sign `prod u_j` over one representative of each class `{u, -u}` in
/// `U_k(nu)`.
pub fn sin_closed_form(nu: &NuVector, k: usize) -> Result<SymbolicValue> {
    let r = nu.r() as u32;
    let classes = sign_classes(nu, k)?;
    if r % 2 == 1 {
        return Ok(SymbolicValue::zero());
    }
    let betabar: i64 = classes
        .iter()
        .filter(|u| u.first().is_none_or(|&s| s == 1))
        .map(|u| u.iter().map(|&s| s as i64).product::<i64>())
        .sum();
    // 2 / (2i)^r with r even is 2 (-1)^(r/2) / 2^r.
    let sign = if (r / 2).is_multiple_of(2) { 1 } else { -1 };
    let c = int(2 * sign * betabar * nu.get(k) as i64) / pow(&int(2), r);
    Ok(SymbolicValue::rational(c))
}
