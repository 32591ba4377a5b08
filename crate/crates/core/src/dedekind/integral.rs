//! Exact integrals of products of periodic polynomial functions and the
//! integral form of reciprocity.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::nu::NuVector;
use super::report::{Method, ReciprocityReport};
use super::sums::reciprocity_lhs;
use crate::error::{Error, Result};
use crate::exact::rational::binomial;
use crate::exact::{Integer, Rational, RationalPoly};
use crate::periodic::{jump_product, PeriodicFn, Scalar};

/// `int_0^1 prod_j F_j({nu_j x}) dx` for polynomials `F_j`.
///
/// `[0,1]` is cut at every `i / nu_j`; on each piece `{nu_j x} = nu_j x - c_j`
/// for a constant integer `c_j`, so the integrand is a polynomial there.
pub fn piecewise_integral(factors: &[(RationalPoly, u64)]) -> Result<Rational> {
    if let Some((_, 0)) = factors.iter().find(|(_, n)| *n == 0) {
        return Err(Error::InvalidParameter(
            "frequencies must be positive".into(),
        ));
    }
    let mut cuts: Vec<Rational> = factors
        .iter()
        .flat_map(|(_, n)| {
            (0..=*n).map(move |i| Rational::new(Integer::from(i), Integer::from(*n)))
        })
        .collect();
    if cuts.is_empty() {
        return Ok(Rational::one());
    }
    cuts.sort();
    cuts.dedup();

    let two = Rational::from_integer(2.into());
    let mut total = Rational::zero();
    for w in cuts.windows(2) {
        let (x0, x1) = (&w[0], &w[1]);
        let mid = (x0 + x1) / &two;
        let integrand =
            factors
                .iter()
                .fold(RationalPoly::constant(Rational::one()), |acc, (p, n)| {
                    let nr = Rational::from_integer((*n).into());
                    let c = (&nr * &mid).floor();
                    &acc * &p.compose_affine(&nr, &-c)
                });
        total += integrand.integrate(x0, x1);
    }
    Ok(total)
}

/// `int_0^1 prod_j b_{q_j}(nu_j x) dx`.
pub fn franel_integral(qvec: &[u32], nuvec: &[u64]) -> Result<Rational> {
    if qvec.len() != nuvec.len() {
        return Err(Error::LengthMismatch {
            functions: qvec.len(),
            entries: nuvec.len(),
        });
    }
    let factors: Vec<_> = qvec
        .iter()
        .zip(nuvec)
        .map(|(&q, &n)| (crate::exact::bernoulli_poly(q).as_poly().clone(), n))
        .collect();
    piecewise_integral(&factors)
}

/// `-delta(f) + sum_k nu_k int_0^1 f_k'(nu_k x) prod_{j != k} f_j(nu_j x) dx`,
/// with `f_k'` the derivative away from the integers.
pub fn integral_recip_rhs(fvec: &[PeriodicFn], nu: &NuVector) -> Result<Rational> {
    if fvec.len() != nu.len() {
        return Err(Error::LengthMismatch {
            functions: fvec.len(),
            entries: nu.len(),
        });
    }
    let polys = fvec
        .iter()
        .map(|f| {
            f.validate()?;
            f.poly().ok_or_else(|| {
                Error::Unsupported(format!(
                    "{f} has no exact integral path; use the Fourier closed forms"
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rhs = -jump_product(fvec);
    for k in 0..nu.len() {
        let dk = polys[k].derivative();
        if dk.is_zero() {
            continue;
        }
        let factors: Vec<_> = (0..nu.len())
            .map(|j| {
                (
                    if j == k { dk.clone() } else { polys[j].clone() },
                    nu.get(j),
                )
            })
            .collect();
        rhs += Rational::from_integer(nu.get(k).into()) * piecewise_integral(&factors)?;
    }
    Ok(rhs)
}

/// Checks `R_{x^q}(nu) = prod_j 1/(q_j+1) sum_s A_s R_{b_s}(nu)` with
/// `A_s = prod_j C(q_j+1, s_j)`, both sides by direct summation.
pub fn power_basis_recip_check(qvec: &[u32], nu: &NuVector) -> Result<ReciprocityReport> {
    if qvec.len() != nu.len() {
        return Err(Error::LengthMismatch {
            functions: qvec.len(),
            entries: nu.len(),
        });
    }
    if qvec.contains(&0) {
        return Err(Error::InvalidParameter(
            "power exponents must be >= 1".into(),
        ));
    }
    let powers: Vec<_> = qvec.iter().map(|&q| PeriodicFn::PowerFrac(q)).collect();
    let lhs = reciprocity_lhs(&powers, nu)?;

    let mut memo: HashMap<Vec<u32>, Rational> = HashMap::new();
    let mut rhs = Rational::zero();
    let mut s = vec![0u32; qvec.len()];
    loop {
        let weight = s
            .iter()
            .zip(qvec)
            .fold(Integer::one(), |acc, (&sj, &qj)| acc * binomial(qj + 1, sj));
        let r_b = match memo.get(&s) {
            Some(v) => v.clone(),
            None => {
                let fs: Vec<_> = s.iter().map(|&x| PeriodicFn::Bernoulli(x)).collect();
                let v = reciprocity_lhs(&fs, nu)?
                    .as_exact()
                    .cloned()
                    .ok_or_else(|| Error::Inconsistent("Bernoulli reciprocity not exact".into()))?;
                memo.insert(s.clone(), v.clone());
                v
            }
        };
        rhs += Rational::from_integer(weight) * r_b;
        // Odometer over 0 <= s_j <= q_j.
        let mut j = 0;
        while j < s.len() && s[j] == qvec[j] {
            s[j] = 0;
            j += 1;
        }
        if j == s.len() {
            break;
        }
        s[j] += 1;
    }
    let norm = qvec.iter().fold(Integer::one(), |acc, &q| acc * (q + 1));
    rhs /= Rational::from_integer(norm);
    Ok(ReciprocityReport::new(
        lhs,
        Scalar::Exact(rhs),
        Method::PowerBasis,
        None,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dedekind::{rademacher_rhs, reciprocity_lhs};
    use crate::exact::{gcd, int, ratio};
    use proptest::prelude::*;

    fn nu(v: &[u64]) -> NuVector {
        NuVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn franel_values() {
        assert_eq!(franel_integral(&[1, 1], &[2, 3]).unwrap(), ratio(1, 72));
        assert_eq!(franel_integral(&[2], &[5]).unwrap(), int(0));
        // Non-coprime frequencies pick up gcd(m,n)^2, not gcd(m,n).
        assert_eq!(
            franel_integral(&[1, 1], &[4, 6]).unwrap(),
            ratio(4, 12 * 24)
        );
        assert_eq!(franel_integral(&[1, 1], &[2, 4]).unwrap(), ratio(1, 24));
        assert_eq!(franel_integral(&[0], &[3]).unwrap(), int(1));
        assert!(franel_integral(&[1], &[1, 2]).is_err());
    }

    #[test]
    fn integral_reciprocity_examples() {
        let b1 = PeriodicFn::Bernoulli(1);
        let v = nu(&[2, 3, 5]);
        let f = vec![b1.clone(), b1.clone(), b1];
        assert_eq!(integral_recip_rhs(&f, &v).unwrap(), ratio(-13, 90));
        assert_eq!(
            integral_recip_rhs(&f, &v).unwrap(),
            rademacher_rhs(&v).unwrap()
        );

        let p1 = vec![PeriodicFn::PowerFrac(1); 2];
        let v = nu(&[1, 2]);
        assert_eq!(
            Scalar::Exact(integral_recip_rhs(&p1, &v).unwrap()),
            reciprocity_lhs(&p1, &v).unwrap()
        );

        let f = vec![
            PeriodicFn::Bernoulli(1),
            PeriodicFn::Bernoulli(2),
            PeriodicFn::Bernoulli(2),
        ];
        let v = nu(&[1, 2, 3]);
        assert_eq!(
            Scalar::Exact(integral_recip_rhs(&f, &v).unwrap()),
            reciprocity_lhs(&f, &v).unwrap()
        );

        let t = vec![PeriodicFn::Cos, PeriodicFn::Bernoulli(1)];
        assert!(matches!(
            integral_recip_rhs(&t, &nu(&[2, 3])),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn single_entry_convention() {
        let f = vec![PeriodicFn::PolyFrac(vec![int(3), ratio(-1, 2), int(2)])];
        let v = nu(&[7]);
        assert_eq!(
            Scalar::Exact(integral_recip_rhs(&f, &v).unwrap()),
            reciprocity_lhs(&f, &v).unwrap()
        );
    }

    #[test]
    fn power_basis_examples() {
        for (q, v) in [
            (vec![1, 1, 1], vec![1, 2, 3]),
            (vec![2, 1, 1], vec![2, 3, 5]),
            (vec![1, 1], vec![2, 3]),
        ] {
            let rep = power_basis_recip_check(&q, &nu(&v)).unwrap();
            assert!(rep.is_exact_match(), "{q:?} {v:?}: {rep:?}");
        }
    }

    proptest! {
        #[test]
        fn franel_identity(m in 1u64..=30, n in 1u64..=30) {
            prop_assume!(m != n);
            let g = gcd(m as i64, n as i64);
            let expect = ratio(g * g, 12 * (m * n) as i64);
            prop_assert_eq!(franel_integral(&[1, 1], &[m, n]).unwrap(), expect);
        }

        #[test]
        fn scale_invariance(q in 0u32..7, n in 1u64..25) {
            prop_assert_eq!(franel_integral(&[q], &[n]).unwrap(), franel_integral(&[q], &[1]).unwrap());
        }
    }
}
