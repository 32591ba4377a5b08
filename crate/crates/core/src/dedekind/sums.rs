use num_complex::Complex64;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::nu::NuVector;
use crate::error::{Error, Result};
use crate::exact::rational::to_f64;
use crate::exact::{BoundaryMode, Integer, Rational, ScaledPoly};
use crate::periodic::{eval_poly_periodic, PeriodicFn, Scalar};
use crate::sum::NeumaierSum;

/// Above this many terms the exact sum is split across worker threads.
const PARALLEL_TERMS: u64 = 1 << 12;

fn check(fvec: &[PeriodicFn], nu: &NuVector) -> Result<()> {
    if fvec.len() != nu.len() {
        return Err(Error::LengthMismatch {
            functions: fvec.len(),
            entries: nu.len(),
        });
    }
    fvec.iter().try_for_each(PeriodicFn::validate)
}

/// `S_f(nu | nu_k) = sum_{i=1}^{nu_k - 1} prod_{j != k} f_j(i nu_j / nu_k)`.
///
/// Exact whenever every `f_j` with `j != k` is a polynomial family. For
/// `r = 0` the empty product makes this `nu_0 - 1`.
pub fn dedekind_sum(fvec: &[PeriodicFn], nu: &NuVector, k: usize) -> Result<Scalar> {
    check(fvec, nu)?;
    nu.check_index(k)?;
    let others: Vec<usize> = (0..nu.len()).filter(|&j| j != k).collect();
    if others.iter().all(|&j| fvec[j].is_polynomial()) {
        Ok(Scalar::Exact(exact_sum(fvec, nu, k, &others)))
    } else {
        Ok(Scalar::Float(float_sum(fvec, nu, k, &others)))
    }
}

fn exact_sum(fvec: &[PeriodicFn], nu: &NuVector, k: usize, others: &[usize]) -> Rational {
    let m = nu.get(k);
    if m <= 1 {
        return Rational::zero();
    }
    let polys: Vec<_> = others
        .iter()
        .map(|&j| fvec[j].poly().expect("polynomial family"))
        .collect();
    let scaled: Vec<ScaledPoly> = polys.iter().map(ScaledPoly::new).collect();
    let residues: Vec<u64> = others.iter().map(|&j| nu.get(j) % m).collect();
    let big_m = Integer::from(m);

    // Each term is prod_j H_j(p_j, m) / (m^deg_j * denom_j); the denominator
    // does not depend on i, so only numerators are accumulated.
    let term = |i: u64| -> Option<Integer> {
        let mut acc = Integer::one();
        for (s, &res) in scaled.iter().zip(&residues) {
            let p = (i as u128 * res as u128 % m as u128) as u64;
            if p == 0 {
                return None;
            }
            acc *= s.eval_homogeneous(&Integer::from(p), &big_m);
        }
        Some(acc)
    };

    let numer: Option<Integer> = if m > PARALLEL_TERMS {
        (1..m).into_par_iter().map(term).sum()
    } else {
        (1..m).map(term).sum()
    };

    match numer {
        Some(n) => {
            let denom = scaled.iter().fold(Integer::one(), |acc, s| {
                acc * s.denom() * big_m.pow(s.degree() as u32)
            });
            Rational::new(n, denom)
        }
        // Integer arguments only arise for non-coprime input; fall back to
        // principal-value evaluation.
        None => (1..m).fold(Rational::zero(), |acc, i| {
            acc + polys
                .iter()
                .zip(others)
                .fold(Rational::one(), |p, (poly, &j)| {
                    let t = Rational::new(Integer::from((i * nu.get(j)) % m), big_m.clone());
                    p * eval_poly_periodic(poly, &t, BoundaryMode::Principal)
                })
        }),
    }
}

fn float_sum(fvec: &[PeriodicFn], nu: &NuVector, k: usize, others: &[usize]) -> Complex64 {
    let m = nu.get(k);
    let polys: Vec<_> = others.iter().map(|&j| fvec[j].poly()).collect();
    let mut re = NeumaierSum::new();
    let mut im = NeumaierSum::new();
    for i in 1..m {
        let mut prod = Complex64::new(1.0, 0.0);
        for (poly, &j) in polys.iter().zip(others) {
            let p = (i as u128 * nu.get(j) as u128 % m as u128) as u64;
            let v = match poly {
                Some(poly) => {
                    let t = Rational::new(Integer::from(p), Integer::from(m));
                    Complex64::new(
                        to_f64(&eval_poly_periodic(poly, &t, BoundaryMode::Principal)),
                        0.0,
                    )
                }
                None => fvec[j].eval_trig(p as f64 / m as f64),
            };
            prod *= v;
        }
        re.add(prod.re);
        im.add(prod.im);
    }
    Complex64::new(re.value(), im.value())
}

/// `R_f(nu) = sum_k delta(f_k) S_f(nu | nu_k)`.
pub fn reciprocity_lhs(fvec: &[PeriodicFn], nu: &NuVector) -> Result<Scalar> {
    check(fvec, nu)?;
    let mut exact = Rational::zero();
    let mut float: Option<Complex64> = None;
    for (k, f) in fvec.iter().enumerate() {
        let delta = f.jump().delta;
        if delta.is_zero() {
            continue;
        }
        match dedekind_sum(fvec, nu, k)? {
            Scalar::Exact(s) => exact += delta * s,
            Scalar::Float(z) => {
                *float.get_or_insert(Complex64::new(0.0, 0.0)) += z * to_f64(&delta)
            }
        }
    }
    Ok(match float {
        None => Scalar::Exact(exact),
        Some(z) => Scalar::Float(z + to_f64(&exact)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio, residue_mod};
    use proptest::prelude::*;

    fn nu(v: &[u64]) -> NuVector {
        NuVector::new(v.to_vec()).unwrap()
    }

    fn b(q: u32) -> PeriodicFn {
        PeriodicFn::Bernoulli(q)
    }

    /// Direct evaluation through `PeriodicFn::eval`, the independent oracle.
    fn naive(fvec: &[PeriodicFn], nu: &[u64], k: usize) -> Rational {
        (1..nu[k]).fold(int(0), |acc, i| {
            acc + (0..nu.len()).filter(|&j| j != k).fold(int(1), |p, j| {
                let x = ratio((i * nu[j]) as i64, nu[k] as i64);
                p * fvec[j]
                    .eval(&x, BoundaryMode::Principal)
                    .as_exact()
                    .unwrap()
                    .clone()
            })
        })
    }

    #[test]
    fn small_sums() {
        assert_eq!(
            dedekind_sum(&[b(1), b(1)], &nu(&[1, 5]), 0).unwrap(),
            Scalar::Exact(int(0))
        );
        assert_eq!(
            dedekind_sum(&[b(1), b(2)], &nu(&[2, 3]), 0).unwrap(),
            Scalar::Exact(ratio(-1, 12))
        );
        let e = dedekind_sum(&[PeriodicFn::ExpE, PeriodicFn::ExpE], &nu(&[2, 3]), 1).unwrap();
        assert!((e.to_complex() - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        assert_eq!(
            dedekind_sum(&[b(4)], &nu(&[7]), 0).unwrap(),
            Scalar::Exact(int(6))
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(
            dedekind_sum(&[b(1)], &nu(&[2, 3]), 0),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            dedekind_sum(&[b(1), b(1)], &nu(&[2, 3]), 2),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn lhs_values() {
        let c = [PeriodicFn::Cos, PeriodicFn::Cos, PeriodicFn::Cos];
        assert_eq!(
            reciprocity_lhs(&c, &nu(&[2, 3, 5])).unwrap(),
            Scalar::Exact(int(0))
        );
        assert_eq!(
            reciprocity_lhs(&[b(1), b(1), b(1)], &nu(&[2, 3, 5])).unwrap(),
            Scalar::Exact(ratio(-13, 90))
        );
        assert_eq!(
            reciprocity_lhs(&[b(1), b(2)], &nu(&[2, 3])).unwrap(),
            Scalar::Exact(ratio(-1, 12))
        );
        assert_eq!(
            reciprocity_lhs(&[b(1), b(1), b(1)], &nu(&[1, 2, 3])).unwrap(),
            Scalar::Exact(ratio(-1, 18))
        );
    }

    #[test]
    fn parallel_path_matches_naive() {
        let v = [5003u64, 7, 12];
        let f = [b(1), b(2), PeriodicFn::ShiftedFrac(ratio(1, 3))];
        let got = dedekind_sum(&f, &nu(&v), 0).unwrap();
        assert_eq!(got, Scalar::Exact(naive(&f, &v, 0)));
    }

    #[test]
    fn mixed_families_are_float() {
        let f = [b(1), PeriodicFn::Cos, b(2)];
        let v = nu(&[2, 3, 5]);
        let s = dedekind_sum(&f, &v, 2).unwrap();
        assert!(!s.is_exact());
        // k = 1 excludes the cosine, so the sum stays exact.
        assert!(dedekind_sum(&f, &v, 1).unwrap().is_exact());
    }

    fn coprime_tuple(len: usize, max: u64) -> impl Strategy<Value = Vec<u64>> {
        prop::collection::vec(1..=max, len).prop_filter("pairwise coprime and distinct", |v| {
            NuVector::new(v.clone()).is_ok()
        })
    }

    fn poly_fn() -> impl Strategy<Value = PeriodicFn> {
        prop_oneof![
            (0u32..5).prop_map(PeriodicFn::Bernoulli),
            (1u32..5).prop_map(PeriodicFn::PowerFrac),
            (1i64..7).prop_map(|n| PeriodicFn::ShiftedFrac(ratio(n, 7))),
            prop::collection::vec(-5i64..5, 1..5)
                .prop_map(|c| PeriodicFn::PolyFrac(c.into_iter().map(int).collect())),
        ]
    }

    proptest! {
        #[test]
        fn fast_path_matches_naive(v in coprime_tuple(3, 40), f in prop::collection::vec(poly_fn(), 3), k in 0usize..3) {
            let got = dedekind_sum(&f, &nu(&v), k).unwrap();
            prop_assert_eq!(got, Scalar::Exact(naive(&f, &v, k)));
        }

        #[test]
        fn periodicity_reduction(v in coprime_tuple(3, 50), f in prop::collection::vec(poly_fn(), 3), k in 0usize..3) {
            let m = v[k];
            let reduced: Vec<Rational> = v.iter().enumerate()
                .map(|(j, &x)| if j == k { int(x as i64) } else { residue_mod(&int(x as i64), m).unwrap() })
                .collect();
            // Reduced entries may repeat or vanish, so evaluate the reduced sum directly.
            let direct = (1..m).fold(int(0), |acc, i| {
                acc + (0..3).filter(|&j| j != k).fold(int(1), |p, j| {
                    let x = &reduced[j] * int(i as i64) / int(m as i64);
                    p * f[j].eval(&x, BoundaryMode::Principal).as_exact().unwrap().clone()
                })
            });
            prop_assert_eq!(dedekind_sum(&f, &nu(&v), k).unwrap(), Scalar::Exact(direct));
        }
    }
}
