//! Truncated sums over the orthogonal lattice and over simplicial cones.

use rayon::prelude::*;

use super::types::{
    Geometry, Pairing, QVector, Region, SignVector, TruncatedValue, TruncationPlan, ZetaVariant,
};
use crate::dedekind::NuVector;
use crate::error::{Error, Result};
use crate::exact::gcd;
use crate::lattice::{Enumerator, LatticeConstraint};
use crate::sum::NeumaierSum;

/// `prod_j n_j^(-q_j)` with `0^0 = 1`.
pub(crate) fn monomial(n: &[i64], q: &[u32]) -> f64 {
    let mut p = 1.0f64;
    for (&x, &e) in n.iter().zip(q) {
        if e > 0 {
            p *= (x as f64).powi(e as i32);
        }
    }
    1.0 / p
}

fn first_nonzero_positive(n: &[i64]) -> bool {
    n.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// Sums `term` over the enumerated points passing `keep`. Rows are reduced
/// in parallel, each in enumeration order, and merged in row order.
fn lattice_sum<K, T>(en: &Enumerator, pairing: Pairing, keep: K, term: T) -> TruncatedValue
where
    K: Fn(&[i64]) -> bool + Sync,
    T: Fn(&[i64]) -> f64 + Sync,
{
    let rows: Vec<i64> = en.rows().collect();
    let partial: Vec<(NeumaierSum, u64)> = rows
        .par_iter()
        .map(|&row| {
            let mut acc = NeumaierSum::new();
            let mut count = 0u64;
            let mut neg = vec![0i64; en.dim()];
            en.visit_row(row, &mut |n: &[i64]| {
                if !keep(n) {
                    return;
                }
                match pairing {
                    Pairing::None => {
                        acc.add(term(n));
                        count += 1;
                    }
                    Pairing::Symmetric => {
                        if first_nonzero_positive(n) {
                            for (d, &x) in neg.iter_mut().zip(n) {
                                *d = -x;
                            }
                            acc.add(term(n) + term(&neg));
                            count += 2;
                        }
                    }
                }
            });
            (acc, count)
        })
        .collect();
    let mut total = NeumaierSum::new();
    let mut points = 0;
    for (s, c) in &partial {
        total.merge(s);
        points += c;
    }
    TruncatedValue {
        value: total.value(),
        points_used: points,
    }
}

fn check_shapes(nu: &NuVector, q: &QVector, k: usize) -> Result<()> {
    q.expect_len(nu.len())?;
    nu.check_index(k)
}

/// Truncated `zeta_{k,nu,q}` and its `Y`, `Z` and plain relatives over the
/// box `max |n_j| <= N` of `nu^perp`.
pub fn multiple_zeta_trunc(
    nu: &NuVector,
    q: &QVector,
    k: usize,
    variant: ZetaVariant,
    plan: &TruncationPlan,
) -> Result<TruncatedValue> {
    check_shapes(nu, q, k)?;
    let (exps, weight) = match variant {
        ZetaVariant::Plain => (q.entries().to_vec(), q.weight()),
        _ => (q.masked(k), q.masked_weight(k)),
    };
    plan.require_pairing_for(weight)?;
    let others = |j: usize| variant == ZetaVariant::Plain || j != k;
    if let Some(j) = (0..q.len()).find(|&j| others(j) && q.get(j) == 0) {
        return Err(Error::Divergent(format!(
            "q_{j} = 0 on a coordinate summed over Z \\ 0"
        )));
    }
    if variant == ZetaVariant::Y {
        if let Some(j) = (0..q.len()).find(|&j| j != k && q.get(j) == 1) {
            return Err(Error::InvalidParameter(format!(
                "Y_(k={k}) with q_{j} = 1 diverges on its own; use combined_y_identity"
            )));
        }
    }
    let term = |n: &[i64]| monomial(n, &exps);
    let constraint = match variant {
        ZetaVariant::Full => LatticeConstraint::Unrestricted,
        ZetaVariant::Y | ZetaVariant::Plain => LatticeConstraint::AllNonzero,
        ZetaVariant::Z => LatticeConstraint::CoordZero(k),
    };
    let en = Enumerator::new(nu, plan.bound, constraint)?;
    let out = match variant {
        ZetaVariant::Full | ZetaVariant::Z => lattice_sum(
            &en,
            plan.pairing,
            |n: &[i64]| n.iter().enumerate().all(|(j, &x)| j == k || x != 0),
            term,
        ),
        _ => lattice_sum(&en, plan.pairing, |_: &[i64]| true, term),
    };
    Ok(out)
}

/// Both sides of `sum_{q_k = 1} nu_k Y_k = -sum_{q_k > 1} nu_k zeta_{nu, q - e_k}`.
///
/// The left side is a single pass with the integer weight
/// `sum_{q_k = 1} nu_k n_k` attached to `n^(-q)`.
pub fn combined_y_identity(
    nu: &NuVector,
    q: &QVector,
    plan: &TruncationPlan,
) -> Result<(f64, f64)> {
    q.expect_len(nu.len())?;
    if q.entries().contains(&0) {
        return Err(Error::InvalidParameter("every q_j must be >= 1".into()));
    }
    let ones: Vec<usize> = (0..q.len()).filter(|&j| q.get(j) == 1).collect();
    if ones.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "q = ({q}) has no entry equal to 1"
        )));
    }
    plan.require_pairing_for(q.qbar())?;
    let en = Enumerator::new(nu, plan.bound, LatticeConstraint::AllNonzero)?;
    let weights: Vec<(usize, i64)> = ones.iter().map(|&j| (j, nu.get(j) as i64)).collect();
    let lhs = lattice_sum(
        &en,
        plan.pairing,
        |_: &[i64]| true,
        |n: &[i64]| {
            let w: i64 = weights.iter().map(|&(j, v)| v * n[j]).sum();
            w as f64 * monomial(n, q.entries())
        },
    );
    let mut rhs = NeumaierSum::new();
    for j in (0..q.len()).filter(|&j| q.get(j) > 1) {
        let z = multiple_zeta_trunc(nu, &q.minus_unit(j)?, j, ZetaVariant::Plain, plan)?;
        rhs.add(-(nu.get(j) as f64) * z.value);
    }
    Ok((lhs.value, rhs.value()))
}

/// Per-orthant sums of `|n|^(-q_k)` in one pass over `nu^perp`.
///
/// Index `b` holds the orthant whose sign vector has `u_j = -1` exactly when
/// bit `j` of `b` is set. For [`ZetaVariant::Z`] the points have `n_k = 0`
/// and bit `k` is always clear. Only `Y` and `Z` are accepted.
pub fn orthant_sums(
    nu: &NuVector,
    q: &QVector,
    k: usize,
    variant: ZetaVariant,
    plan: &TruncationPlan,
) -> Result<Vec<TruncatedValue>> {
    check_shapes(nu, q, k)?;
    plan.validate()?;
    let dim = nu.len();
    if dim > 20 {
        return Err(Error::Unsupported(
            "orthant split beyond 20 coordinates".into(),
        ));
    }
    let constraint = match variant {
        ZetaVariant::Y => LatticeConstraint::AllNonzero,
        ZetaVariant::Z => LatticeConstraint::CoordZero(k),
        _ => {
            return Err(Error::InvalidParameter(
                "orthant sums exist for the Y and Z variants only".into(),
            ))
        }
    };
    let exps = q.masked(k);
    let en = Enumerator::new(nu, plan.bound, constraint)?;
    let mut acc = vec![(NeumaierSum::new(), 0u64); 1 << dim];
    let mut abs = vec![0i64; dim];
    en.visit(|n| {
        if variant == ZetaVariant::Z && n.iter().enumerate().any(|(j, &x)| j != k && x == 0) {
            return;
        }
        let mut bits = 0usize;
        for (j, (&x, a)) in n.iter().zip(abs.iter_mut()).enumerate() {
            if x < 0 {
                bits |= 1 << j;
            }
            *a = x.abs();
        }
        let slot = &mut acc[bits];
        slot.0.add(monomial(&abs, &exps));
        slot.1 += 1;
    });
    Ok(acc
        .into_iter()
        .map(|(s, c)| TruncatedValue {
            value: s.value(),
            points_used: c,
        })
        .collect())
}

/// `Y_{k,nu,q,u}` or `Z_{k,nu,q,u}`: the sum of `m^(-q_k)` over `m > 0` with
/// `<u nu, m> = 0` (and `m_k = 0` for `Z`), within the box.
pub fn orthant_zeta_trunc(
    nu: &NuVector,
    q: &QVector,
    k: usize,
    u: &SignVector,
    variant: ZetaVariant,
    plan: &TruncationPlan,
) -> Result<TruncatedValue> {
    if u.len() != nu.len() {
        return Err(Error::LengthMismatch {
            functions: u.len(),
            entries: nu.len(),
        });
    }
    let sums = orthant_sums(nu, q, k, variant, plan)?;
    let mut bits = 0usize;
    for (j, &s) in u.entries().iter().enumerate() {
        if s < 0 && !(variant == ZetaVariant::Z && j == k) {
            bits |= 1 << j;
        }
    }
    Ok(sums[bits])
}

/// One run of cone points `a g1 + b g2` with fixed `a` and `b` in `lo..=hi`.
#[derive(Debug, Clone, Copy)]
struct Run {
    a: i64,
    lo: i64,
    hi: i64,
}

/// A simplicial cone prepared for truncated summation. Single rays are
/// stored with `g1 = 0`.
struct ConeWalk {
    g1: Vec<i64>,
    g2: Vec<i64>,
    runs: Vec<Run>,
}

impl ConeWalk {
    fn new(q: &[u32], gens: &[Vec<i64>], region: Region, plan: &TruncationPlan) -> Result<Self> {
        plan.validate()?;
        if gens.is_empty() || gens.len() > 2 {
            return Err(Error::NonSimplicial(gens.len()));
        }
        if let Some(g) = gens.iter().find(|g| g.len() != q.len()) {
            return Err(Error::LengthMismatch {
                functions: q.len(),
                entries: g.len(),
            });
        }
        let n = plan.bound as i64;
        let box_mode = plan.geometry == Geometry::Box;
        let zero = vec![0i64; q.len()];
        if gens.len() == 1 {
            let g = &gens[0];
            if g.iter().fold(0, |acc, &x| gcd(acc, x)) != 1 {
                return Err(Error::InvalidParameter(format!(
                    "ray generator {g:?} is not primitive"
                )));
            }
            if let Some(j) = (0..q.len()).find(|&j| q[j] > 0 && g[j] == 0) {
                return Err(Error::Divergent(format!(
                    "ray {g:?} has n_{j} = 0 with q_{j} > 0"
                )));
            }
            let hi = if box_mode { n / max_abs(g) } else { n };
            return Ok(Self {
                g1: zero,
                g2: g.clone(),
                runs: vec![Run { a: 0, lo: 1, hi }],
            });
        }
        let (g1, g2) = (&gens[0], &gens[1]);
        let mut minor_gcd = 0;
        let mut best: Option<(usize, usize, i64)> = None;
        for i in 0..q.len() {
            for j in i + 1..q.len() {
                let d = g1[i] * g2[j] - g1[j] * g2[i];
                minor_gcd = gcd(minor_gcd, d);
                if d != 0 && best.is_none_or(|(_, _, b)| d.abs() > b.abs()) {
                    best = Some((i, j, d));
                }
            }
        }
        let Some((bi, bj, det)) = best else {
            return Err(Error::NonSimplicial(2));
        };
        if minor_gcd != 1 {
            return Err(Error::Unsupported(format!(
                "cone ({g1:?}, {g2:?}) has multiplicity {minor_gcd}"
            )));
        }
        for j in (0..q.len()).filter(|&j| q[j] > 0) {
            let (x, y) = (g1[j], g2[j]);
            let hits_zero =
                (x == 0 && y == 0) || x * y < 0 || (region == Region::Closed && (x == 0 || y == 0));
            if hits_zero {
                return Err(Error::Divergent(format!(
                    "cone ({g1:?}, {g2:?}) meets n_{j} = 0 with q_{j} > 0"
                )));
            }
        }

        let mut runs = Vec::new();
        let closed = region == Region::Closed;
        if box_mode {
            // |a| <= N (|g2_i| + |g2_j|) / |det| by Cramer's rule on the best minor.
            let a_max = n * (g2[bi].abs() + g2[bj].abs()) / det.abs();
            let start = if closed { 0 } else { 1 };
            for a in start..=a_max {
                let (mut lo, mut hi) = (if closed && a > 0 { 0 } else { 1 }, i64::MAX);
                for (&x, &y) in g1.iter().zip(g2) {
                    let base = a * x;
                    if y == 0 {
                        if base.abs() > n {
                            hi = lo - 1;
                        }
                        continue;
                    }
                    let (l, h) = if y > 0 {
                        (div_ceil(-n - base, y), div_floor(n - base, y))
                    } else {
                        (div_ceil(n - base, y), div_floor(-n - base, y))
                    };
                    lo = lo.max(l);
                    hi = hi.min(h);
                }
                if lo <= hi {
                    runs.push(Run { a, lo, hi });
                }
            }
        } else {
            if closed {
                runs.push(Run { a: 0, lo: 1, hi: n });
            }
            for a in 1..=n {
                runs.push(Run {
                    a,
                    lo: if closed { 0 } else { 1 },
                    hi: n,
                });
            }
        }
        Ok(Self {
            g1: g1.clone(),
            g2: g2.clone(),
            runs,
        })
    }

    fn visit_run(&self, run: &Run, f: &mut impl FnMut(&[i64])) {
        let mut p: Vec<i64> = self
            .g1
            .iter()
            .zip(&self.g2)
            .map(|(&x, &y)| run.a * x + run.lo * y)
            .collect();
        for _ in run.lo..=run.hi {
            f(&p);
            for (c, &y) in p.iter_mut().zip(&self.g2) {
                *c += y;
            }
        }
    }
}

fn max_abs(g: &[i64]) -> i64 {
    g.iter().map(|x| x.abs()).max().unwrap_or(0).max(1)
}

fn div_floor(a: i64, b: i64) -> i64 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -div_floor(-a, b)
}

/// Truncated conical zeta value `sum n^(-q)` over the lattice points of a
/// unimodular cone with 1 or 2 generators, apex excluded.
pub fn conical_zeta_trunc(
    q: &[u32],
    gens: &[Vec<i64>],
    region: Region,
    plan: &TruncationPlan,
) -> Result<TruncatedValue> {
    let walk = ConeWalk::new(q, gens, region, plan)?;
    let partial: Vec<(NeumaierSum, u64)> = walk
        .runs
        .par_iter()
        .map(|run| {
            let mut acc = NeumaierSum::new();
            walk.visit_run(run, &mut |p| acc.add(monomial(p, q)));
            (acc, (run.hi - run.lo + 1) as u64)
        })
        .collect();
    let mut total = NeumaierSum::new();
    let mut points = 0;
    for (s, c) in &partial {
        total.merge(s);
        points += c;
    }
    Ok(TruncatedValue {
        value: total.value(),
        points_used: points,
    })
}

/// The points [`conical_zeta_trunc`] sums over, in its order.
pub fn cone_points(
    q: &[u32],
    gens: &[Vec<i64>],
    region: Region,
    plan: &TruncationPlan,
) -> Result<Vec<Vec<i64>>> {
    let walk = ConeWalk::new(q, gens, region, plan)?;
    let mut out = Vec::new();
    for run in &walk.runs {
        walk.visit_run(run, &mut |p| out.push(p.to_vec()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::riemann::{ray_zeta_exact, riemann_zeta_f64};
    use std::f64::consts::PI;

    fn nu(v: &[u64]) -> NuVector {
        NuVector::new(v.to_vec()).unwrap()
    }

    fn qv(v: &[u32]) -> QVector {
        QVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn full_r1_example() {
        let plan = TruncationPlan::new(10_000);
        let z =
            multiple_zeta_trunc(&nu(&[2, 3]), &qv(&[1, 2]), 0, ZetaVariant::Full, &plan).unwrap();
        // n = t (3, -2) with |3t| <= N: the tail beyond T = N/3 is below 2/(4T).
        let t = (10_000 / 3) as f64;
        assert!((z.value - PI * PI / 12.0).abs() < 0.5 / t);
        assert_eq!(z.points_used, 2 * 3333);
    }

    #[test]
    fn odd_weight_vanishes() {
        let plan = TruncationPlan::new(60);
        for (v, q) in [
            (vec![2, 3, 5], vec![1, 1, 2]),
            (vec![1, 2, 3], vec![2, 2, 1]),
            (vec![3, 4, 5, 7], vec![1, 1, 1, 1]),
        ] {
            let (v, q) = (nu(&v), qv(&q));
            for k in 0..v.len() {
                if q.masked_weight(k) % 2 == 1 {
                    for var in [ZetaVariant::Full, ZetaVariant::Z] {
                        let z = multiple_zeta_trunc(&v, &q, k, var, &plan).unwrap();
                        assert!(z.value.abs() <= 1e-12, "{v} {q} {k} {var:?}: {}", z.value);
                    }
                }
            }
        }
        let none = plan.with_pairing(Pairing::None);
        assert!(matches!(
            multiple_zeta_trunc(
                &nu(&[2, 3, 5]),
                &qv(&[1, 1, 2]),
                0,
                ZetaVariant::Full,
                &none
            ),
            Err(Error::InvalidPlan(_))
        ));
    }

    #[test]
    fn y_rejects_unit_exponents() {
        let plan = TruncationPlan::new(20);
        let err = multiple_zeta_trunc(&nu(&[2, 3, 5]), &qv(&[2, 1, 2]), 0, ZetaVariant::Y, &plan);
        assert!(
            matches!(err, Err(Error::InvalidParameter(m)) if m.contains("combined_y_identity"))
        );
        assert!(
            multiple_zeta_trunc(&nu(&[2, 3, 5]), &qv(&[1, 2, 2]), 0, ZetaVariant::Y, &plan).is_ok()
        );
    }

    #[test]
    fn z_matches_plain_subvector_bitwise() {
        let plan = TruncationPlan::new(300);
        for (v, q) in [
            (vec![2, 3, 5], vec![1, 2, 2]),
            (vec![3, 4, 5, 7], vec![2, 1, 2, 1]),
            (vec![1, 2, 3], vec![3, 1, 3]),
        ] {
            let (v, q) = (nu(&v), qv(&q));
            for k in 0..v.len() {
                let z = multiple_zeta_trunc(&v, &q, k, ZetaVariant::Z, &plan).unwrap();
                let sub = nu(&v.without(k));
                let p = multiple_zeta_trunc(&sub, &qv(&q.without(k)), 0, ZetaVariant::Plain, &plan)
                    .unwrap();
                assert_eq!(z.value.to_bits(), p.value.to_bits(), "{v} {q} k={k}");
                assert_eq!(z.points_used, p.points_used);
            }
        }
    }

    #[test]
    fn full_is_y_plus_z() {
        let plan = TruncationPlan::new(200);
        let (v, q) = (nu(&[2, 3, 5]), qv(&[1, 2, 2]));
        let f = multiple_zeta_trunc(&v, &q, 0, ZetaVariant::Full, &plan).unwrap();
        let y = multiple_zeta_trunc(&v, &q, 0, ZetaVariant::Y, &plan).unwrap();
        let z = multiple_zeta_trunc(&v, &q, 0, ZetaVariant::Z, &plan).unwrap();
        assert_eq!(f.points_used, y.points_used + z.points_used);
        assert!((f.value - y.value - z.value).abs() <= 1e-14 * f.value.abs());
    }

    #[test]
    fn orthant_decomposition() {
        let plan = TruncationPlan::new(150);
        for (v, q) in [
            (vec![2, 3, 5], vec![1, 2, 2]),
            (vec![3, 4, 5], vec![2, 3, 2]),
            (vec![1, 2, 3], vec![2, 2, 2]),
        ] {
            let (v, q) = (nu(&v), qv(&q));
            for k in 0..3 {
                if (0..3).any(|j| j != k && q.get(j) == 1) {
                    continue;
                }
                let y = multiple_zeta_trunc(&v, &q, k, ZetaVariant::Y, &plan).unwrap();
                let exps = q.masked(k);
                let parity = if q.masked_weight(k) % 2 == 0 {
                    1.0
                } else {
                    -1.0
                };
                let mut signed = NeumaierSum::new();
                let mut points = 0;
                for u in SignVector::canonical_r2() {
                    let o = orthant_zeta_trunc(&v, &q, k, &u, ZetaVariant::Y, &plan).unwrap();
                    let s = u.sign_power(q.entries(), Some(k)) as f64;
                    signed.add(s * (o.value + parity * o.value));
                    points += 2 * o.points_used;
                }
                assert_eq!(points, y.points_used);
                assert!((y.value - signed.value()).abs() <= 1e-13 * y.value.abs().max(1e-300));
                // Pointwise: n = u m gives n^(-q_k) = sigma m^(-q_k) to the bit.
                for n in crate::lattice::enumerate_orthogonal(&v, 40, LatticeConstraint::AllNonzero)
                    .unwrap()
                {
                    let m: Vec<i64> = n.iter().map(|x| x.abs()).collect();
                    let u = SignVector::new(n.iter().map(|&x| x.signum() as i8).collect()).unwrap();
                    let s = u.sign_power(q.entries(), Some(k)) as f64;
                    assert_eq!(
                        monomial(&n, &exps).to_bits(),
                        (s * monomial(&m, &exps)).to_bits()
                    );
                }
            }
            let empty = SignVector::new(vec![1, 1, 1]).unwrap();
            let o = orthant_zeta_trunc(&v, &q, 0, &empty, ZetaVariant::Y, &plan).unwrap();
            assert_eq!((o.value, o.points_used), (0.0, 0));
        }
    }

    #[test]
    fn combined_identity_examples() {
        let plan = TruncationPlan::new(300);
        let (l, r) = combined_y_identity(&nu(&[2, 3, 5]), &qv(&[1, 1, 1]), &plan).unwrap();
        assert_eq!((l, r), (0.0, 0.0));
        for (v, q) in [
            (vec![2, 3, 5], vec![1, 2, 2]),
            (vec![1, 2, 3], vec![1, 1, 2]),
        ] {
            let (l, r) = combined_y_identity(&nu(&v), &qv(&q), &plan).unwrap();
            assert!(
                (l - r).abs() <= 1e-3 * l.abs().max(r.abs()),
                "{v:?} {q:?}: {l} vs {r}"
            );
        }
        assert!(combined_y_identity(&nu(&[2, 3, 5]), &qv(&[2, 2, 2]), &plan).is_err());
    }

    #[test]
    fn ray_cone_matches_exact() {
        let plan = TruncationPlan::new(10_000);
        let z = conical_zeta_trunc(&[2, 2], &[vec![1, 2]], Region::Closed, &plan).unwrap();
        let exact = ray_zeta_exact(&[2, 2], &[1, 2]).unwrap().to_f64();
        assert!((z.value - exact).abs() <= 1e-8 * exact);
        let zero = conical_zeta_trunc(&[2, 0], &[vec![3, 1]], Region::Closed, &plan).unwrap();
        assert!((zero.value - riemann_zeta_f64(2).unwrap() / 9.0).abs() < 1e-3);
    }

    #[test]
    fn orthant_cone_factorizes() {
        let plan = TruncationPlan::new(10_000);
        let gens = [vec![1, 0], vec![0, 1]];
        let z = conical_zeta_trunc(&[2, 2], &gens, Region::RelativeInterior, &plan).unwrap();
        let z2 = riemann_zeta_f64(2).unwrap();
        assert!((z.value - z2 * z2).abs() < 1e-3);
        assert!(matches!(
            conical_zeta_trunc(&[2, 2], &gens, Region::Closed, &plan),
            Err(Error::Divergent(_))
        ));
        // Exponent 0 contributes 1 even where the coordinate vanishes.
        let ray = conical_zeta_trunc(&[2, 0], &[vec![1, 0]], Region::Closed, &plan).unwrap();
        assert!((ray.value - z2).abs() < 1e-3);
    }

    #[test]
    fn cone_input_validation() {
        let plan = TruncationPlan::new(10);
        assert!(matches!(
            conical_zeta_trunc(&[2, 2], &[], Region::Closed, &plan),
            Err(Error::NonSimplicial(0))
        ));
        let three = [vec![1, 0], vec![0, 1], vec![1, 1]];
        assert!(matches!(
            conical_zeta_trunc(&[2, 2], &three, Region::Closed, &plan),
            Err(Error::NonSimplicial(3))
        ));
        let flat = [vec![1, 2], vec![2, 4]];
        assert!(matches!(
            conical_zeta_trunc(&[2, 2], &flat, Region::RelativeInterior, &plan),
            Err(Error::NonSimplicial(2))
        ));
        let thick = [vec![1, 1], vec![1, -1]];
        assert!(matches!(
            conical_zeta_trunc(&[0, 0], &thick, Region::RelativeInterior, &plan),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn box_geometry_points() {
        let plan = TruncationPlan::new(12).with_geometry(Geometry::Box);
        let gens = [vec![2, 1, 0], vec![1, 1, 1]];
        for region in [Region::Closed, Region::RelativeInterior] {
            let pts = cone_points(&[1, 1, 0], &[vec![1, 1, 1]], region, &plan).unwrap();
            assert_eq!(pts.len(), 12);
            let mut got = cone_points(&[0, 0, 0], &gens, region, &plan).unwrap();
            got.sort();
            let lo = if region == Region::Closed { 0 } else { 1 };
            let mut want = Vec::new();
            for a in lo..=12i64 {
                for b in lo..=12i64 {
                    let p = vec![2 * a + b, a + b, b];
                    if (a, b) != (0, 0) && p.iter().all(|x| x.abs() <= 12) {
                        want.push(p);
                    }
                }
            }
            want.sort();
            assert_eq!(got, want);
        }
    }
}
