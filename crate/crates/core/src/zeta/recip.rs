//! The Fourier-side Bernoulli reciprocity: the general truncated form and
//! the `r = 2` form built on Hirzebruch-Jung fans.

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::riemann::{ray_zeta_exact, riemann_zeta_f64};
use super::trunc::{combined_y_identity, conical_zeta_trunc, multiple_zeta_trunc, orthant_sums};
use super::types::{QVector, Region, SignVector, TruncationPlan, ZetaVariant};
use crate::dedekind::{reciprocity_lhs, Method, NuVector, ReciprocityReport};
use crate::error::{Error, Result};
use crate::exact::rational::pow;
use crate::exact::{bernoulli_number, factorial, to_f64, Integer, Rational, SymbolicValue};
use crate::lattice::{hj_generators, r2_cone_generators, SIGNS};
use crate::periodic::{PeriodicFn, Scalar};
use crate::sum::NeumaierSum;

/// `sigma_{k,l} = prod_{j != k} (u_l)_j^(q_j)`.
pub fn sigma(q: &QVector, k: usize, l: usize) -> i64 {
    (0..3)
        .filter(|&j| j != k)
        .map(|j| {
            if SIGNS[l][j] < 0 && q.get(j) % 2 == 1 {
                -1
            } else {
                1
            }
        })
        .product()
}

/// `prod_j v_j^(-e_j)` exactly, skipping `e_j = 0`.
fn inverse_monomial(v: &[i64], e: &[u32]) -> Rational {
    v.iter()
        .zip(e)
        .filter(|(_, &x)| x > 0)
        .fold(Rational::one(), |acc, (&vj, &x)| {
            acc / pow(&Rational::from_integer(vj.into()), x)
        })
}

fn check_r2(nu: &NuVector, q: &QVector) -> Result<()> {
    nu.expect_r(2)?;
    q.expect_len(3)?;
    if q.entries().contains(&0) {
        return Err(Error::InvalidParameter("every q_j must be >= 1".into()));
    }
    Ok(())
}

/// `Z_{k,nu,q} = zeta(|q_k|) / v_k^(q_k) * sum_{l != k} sigma_{k,l}`, and 0
/// for odd `|q_k|`.
pub fn z_closed_r2(nu: &NuVector, q: &QVector, k: usize) -> Result<SymbolicValue> {
    check_r2(nu, q)?;
    nu.check_index(k)?;
    if q.masked_weight(k) % 2 == 1 {
        return Ok(SymbolicValue::zero());
    }
    let v = r2_cone_generators(nu)?;
    let s: i64 = (0..3).filter(|&l| l != k).map(|l| sigma(q, k, l)).sum();
    let ray = ray_zeta_exact(&q.masked(k), &v[k])?;
    Ok(ray.scale(&Rational::from_integer(s.into())))
}

/// `Q_{k,nu,q}`: for each `l`, `sigma_{k,l}` times the interior-ray terms
/// `1 / v_{l,i}^(q_k)` plus the relative-interior cone sums of the fan of
/// `l`, each divided by `zeta(|q_k|)`. Cones are taken in fan order.
pub fn q_sum(nu: &NuVector, q: &QVector, k: usize, plan: &TruncationPlan) -> Result<f64> {
    check_r2(nu, q)?;
    nu.check_index(k)?;
    let exps = q.masked(k);
    let zeta_w = riemann_zeta_f64(q.masked_weight(k))?;
    let mut acc = NeumaierSum::new();
    for l in 0..3 {
        let fan = hj_generators(nu, l)?;
        let s = sigma(q, k, l) as f64;
        let rays = fan
            .interior_rays()
            .iter()
            .fold(Rational::zero(), |acc, g| acc + inverse_monomial(g, &exps));
        acc.add(s * to_f64(&rays));
        for i in 0..fan.cones.len() {
            let (g1, g2) = fan.cone(i);
            let c = conical_zeta_trunc(
                &exps,
                &[g1.to_vec(), g2.to_vec()],
                Region::RelativeInterior,
                plan,
            )?;
            acc.add(s * c.value / zeta_w);
        }
    }
    Ok(acc.value())
}

fn bernoulli_lhs(nu: &NuVector, q: &QVector) -> Result<Scalar> {
    let fs: Vec<PeriodicFn> = q
        .entries()
        .iter()
        .map(|&x| PeriodicFn::Bernoulli(x))
        .collect();
    reciprocity_lhs(&fs, nu)
}

/// `(1 - (-1)^(1_q)) / 2^(1_q) * prod_{q_j != 1} B_{q_j}`.
fn jump_constant(q: &QVector) -> Rational {
    let ones = q.ones() as u32;
    if ones.is_multiple_of(2) {
        return Rational::zero();
    }
    let b = q
        .entries()
        .iter()
        .filter(|&&x| x != 1)
        .fold(Rational::one(), |acc, &x| acc * bernoulli_number(x));
    b * Rational::new(2.into(), Integer::from(2u32).pow(ones))
}

fn big_factorials(q: &QVector) -> Integer {
    q.entries()
        .iter()
        .filter(|&&x| x > 1)
        .fold(Integer::one(), |acc, &x| acc * factorial(x))
}

/// `I_{qbar} = (-1)^r / (2 pi i)^{|qbar|} * prod_{q_j > 1} q_j!`.
fn i_qbar(r: usize, q: &QVector) -> SymbolicValue {
    let w = q.qbar() as i32;
    let sign = if r.is_multiple_of(2) { 1 } else { -1 };
    let c = Rational::from_integer(big_factorials(q) * sign);
    SymbolicValue::two_pi_pow(-w) * SymbolicValue::new(c, 0, -(w as i64))
}

/// `R_{b_q}(nu) = I_{qbar} sum_{q_k = 1} nu_k zeta_{k,nu,q} - (1 - (-1)^(1_q)) / 2^(1_q) prod_{q_j != 1} B_{q_j}`.
///
/// For `r = 1` the lattice is a single line and every zeta value is exact.
/// For `r >= 2` the `Y` parts are merged into one absolutely convergent pass
/// and the `Z` parts are summed per `k`.
pub fn bernoulli_recip_general(
    nu: &NuVector,
    q: &QVector,
    plan: &TruncationPlan,
) -> Result<ReciprocityReport> {
    q.expect_len(nu.len())?;
    if q.entries().contains(&0) {
        return Err(Error::InvalidParameter("every q_j must be >= 1".into()));
    }
    plan.validate()?;
    let lhs = bernoulli_lhs(nu, q)?;
    let c = jump_constant(q);
    let ones: Vec<usize> = (0..q.len()).filter(|&j| q.get(j) == 1).collect();
    let exact = |rhs: Rational, bound| {
        Ok(ReciprocityReport::new(
            lhs.clone(),
            Scalar::Exact(rhs),
            Method::BernoulliGeneral,
            bound,
        ))
    };
    if ones.is_empty() || q.qbar() % 2 == 1 {
        // No unit entries, or a principal value of odd weight.
        return exact(-c, None);
    }
    let i_q = i_qbar(nu.r(), q);

    if nu.r() == 1 {
        // nu^perp = Z (nu_1, -nu_0); the k-th sum is 2 zeta(|q_k|) w^(-q_k).
        let w = [nu.get(1) as i64, -(nu.get(0) as i64)];
        let mut total = SymbolicValue::zero();
        for &k in &ones {
            let e = q.masked(k);
            let abs_w = w.map(|x| x.abs());
            let sign: i64 = (0..2)
                .map(|j| if w[j] < 0 && e[j] % 2 == 1 { -1 } else { 1 })
                .product();
            let z = ray_zeta_exact(&e, &abs_w)?.scale(&Rational::from_integer(
                (2 * sign * nu.get(k) as i64).into(),
            ));
            total = total
                .checked_add(&z)
                .ok_or_else(|| Error::Inconsistent("mixed pi powers in r = 1 sum".into()))?;
        }
        let prod = &i_q * &total;
        let value = prod.as_rational().cloned().ok_or_else(|| {
            Error::Inconsistent(format!("r = 1 right side {prod} is not rational"))
        })?;
        return exact(value - c, None);
    }

    let (y, _) = combined_y_identity(nu, q, plan)?;
    let mut total = NeumaierSum::new();
    total.add(y);
    for &k in &ones {
        let z = multiple_zeta_trunc(nu, q, k, ZetaVariant::Z, plan)?;
        total.add(nu.get(k) as f64 * z.value);
    }
    let rhs = i_q.to_complex() * total.value() - Complex64::new(to_f64(&c), 0.0);
    Ok(ReciprocityReport::new(
        lhs,
        Scalar::Float(rhs),
        Method::BernoulliGeneral,
        Some(plan.bound),
    ))
}

/// The `r = 2` reciprocity for Bernoulli functions:
/// `-(B_{|qbar|} / |qbar|!) prod_{q_j > 1} q_j! * sum_{q_k = 1} nu_k (v_k^(-q_k) sum_{l != k} sigma_{k,l} / 2 + Q_k)`
/// minus the jump constant. At `q = (1,1,1)` the `Q` total vanishes and the
/// right side is exact.
pub fn bernoulli_recip_r2(
    nu: &NuVector,
    q: &QVector,
    plan: &TruncationPlan,
) -> Result<ReciprocityReport> {
    check_r2(nu, q)?;
    plan.validate()?;
    let lhs = bernoulli_lhs(nu, q)?;
    let c = jump_constant(q);
    let ones: Vec<usize> = (0..3).filter(|&j| q.get(j) == 1).collect();
    let report = |rhs: Scalar, bound| {
        Ok(ReciprocityReport::new(
            lhs.clone(),
            rhs,
            Method::BernoulliR2,
            bound,
        ))
    };
    if ones.is_empty() || q.qbar() % 2 == 1 {
        return report(Scalar::Exact(-c), None);
    }
    let w = q.qbar();
    let pref = -bernoulli_number(w) * Rational::from_integer(big_factorials(q))
        / Rational::from_integer(factorial(w));
    let v = r2_cone_generators(nu)?;
    let half = Rational::new(1.into(), 2.into());
    let ray_part = ones.iter().fold(Rational::zero(), |acc, &k| {
        let s: i64 = (0..3).filter(|&l| l != k).map(|l| sigma(q, k, l)).sum();
        acc + Rational::from_integer((nu.get(k) as i64 * s).into())
            * inverse_monomial(&v[k], &q.masked(k))
            * &half
    });
    if ones.len() == 3 {
        return report(Scalar::Exact(&pref * ray_part - c), None);
    }
    let mut q_total = NeumaierSum::new();
    for &k in &ones {
        q_total.add(nu.get(k) as f64 * q_sum(nu, q, k, plan)?);
    }
    let rhs = to_f64(&pref) * (to_f64(&ray_part) + q_total.value()) - to_f64(&c);
    report(Scalar::Float(Complex64::new(rhs, 0.0)), Some(plan.bound))
}

/// Per-orthant and total bounds for `q_j > 1`: `Z_u <= C`,
/// `Y_u <= 2 nu_l^(q_l) C` and `|zeta_{k,nu,q}| <= 2^r (1 + 4 nu_l^(q_l)) C`,
/// with `C = prod_{j != k} zeta(q_j)` and `nu_l` the smallest `nu_j`, `j != k`.
pub fn bound_check(nu: &NuVector, q: &QVector, k: usize, plan: &TruncationPlan) -> Result<bool> {
    q.expect_len(nu.len())?;
    nu.check_index(k)?;
    if nu.r() == 0 {
        return Err(Error::InvalidParameter("bounds need r >= 1".into()));
    }
    if let Some(j) = (0..q.len()).find(|&j| q.get(j) < 2) {
        return Err(Error::InvalidParameter(format!(
            "bounds need every q_j > 1, q_{j} = {}",
            q.get(j)
        )));
    }
    let mut c = 1.0;
    for j in (0..q.len()).filter(|&j| j != k) {
        c *= riemann_zeta_f64(q.get(j))?;
    }
    let l = (0..nu.len())
        .filter(|&j| j != k)
        .min_by_key(|&j| nu.get(j))
        .expect("r >= 1");
    let nl = (nu.get(l) as f64).powi(q.get(l) as i32);
    let y_bound = 2.0 * nl * c;
    let ys = orthant_sums(nu, q, k, ZetaVariant::Y, plan)?;
    let zs = orthant_sums(nu, q, k, ZetaVariant::Z, plan)?;
    let orthants_ok = ys.iter().all(|y| y.value <= y_bound) && zs.iter().all(|z| z.value <= c);
    let full = multiple_zeta_trunc(
        nu,
        q,
        k,
        ZetaVariant::Full,
        &plan.with_pairing(super::Pairing::Symmetric),
    )?;
    let total_bound = 2f64.powi(nu.r() as i32) * (1.0 + 4.0 * nl) * c;
    Ok(orthants_ok && full.value.abs() <= total_bound)
}

/// Sign vectors of the canonical `r = 2` orthants in index order.
pub fn canonical_signs() -> [SignVector; 3] {
    SignVector::canonical_r2()
}
