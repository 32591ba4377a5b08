//! Boundary cones of `nu^perp` for `r = 2` and their Hirzebruch-Jung
//! unimodular subdivisions.

use serde::{Deserialize, Serialize};

use super::enumerate::{mod_inverse, Enumerator, LatticeConstraint};
use crate::dedekind::NuVector;
use crate::error::{Error, Result};
use crate::exact::gcd;

pub type IVec3 = [i64; 3];

/// The canonical sign vectors `u_0, u_1, u_2`.
pub const SIGNS: [IVec3; 3] = [[1, -1, -1], [1, -1, 1], [1, 1, -1]];

/// `(l', l'') = (l+1, l+2) mod 3`.
pub fn neighbours(l: usize) -> (usize, usize) {
    ((l + 1) % 3, (l + 2) % 3)
}

/// `v_0 = (0, nu_2, nu_1)`, `v_1 = (nu_2, 0, nu_0)`, `v_2 = (nu_1, nu_0, 0)`.
pub fn r2_cone_generators(nu: &NuVector) -> Result<[IVec3; 3]> {
    nu.expect_r(2)?;
    let [a, b, c] = [nu.get(0) as i64, nu.get(1) as i64, nu.get(2) as i64];
    Ok([[0, c, b], [c, 0, a], [b, a, 0]])
}

/// `u_l * nu`, the normal of the plane containing `C(v_l', v_l'')`.
pub fn plane_normal(nu: &NuVector, l: usize) -> Result<IVec3> {
    nu.expect_r(2)?;
    check_l(l)?;
    Ok([0, 1, 2].map(|j| SIGNS[l][j] * nu.get(j) as i64))
}

fn check_l(l: usize) -> Result<()> {
    if l < 3 {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: l, len: 3 })
    }
}

/// Negative continued fraction data of `m_0 / m_1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HJSequence {
    /// `m_0 > m_1 > ... > m_s = 1 > m_{s+1} = 0`.
    pub m: Vec<i64>,
    /// `0 = mbar_0 < mbar_1 = 1 < ... < mbar_{s+1} = m_0`.
    pub mbar: Vec<i64>,
    /// `k_1, ..., k_s`, each at least 2.
    pub k: Vec<i64>,
}

impl HJSequence {
    /// `s`, the number of interior rays of the subdivision.
    pub fn s(&self) -> usize {
        self.k.len()
    }
}

/// Ceiling expansion `k_i = ceil(m_{i-1}/m_i)`, `m_{i+1} = k_i m_i - m_{i-1}`,
/// with `mbar` following the same recursion from `(0, 1)`.
pub fn hj_sequence(m0: i64, m1: i64) -> Result<HJSequence> {
    if m0 < 1 {
        return Err(Error::InvalidParameter(format!("m0 = {m0} must be >= 1")));
    }
    if m1 < 0 || m1 >= m0 {
        return Err(Error::InvalidParameter(format!(
            "need 0 <= m1 < m0, got m1 = {m1}, m0 = {m0}"
        )));
    }
    if gcd(m0, m1) != 1 {
        return Err(Error::InvalidParameter(format!("gcd({m0}, {m1}) > 1")));
    }
    let mut m = vec![m0, m1];
    let mut mbar = vec![0, 1];
    let mut k = Vec::new();
    while let [.., prev, cur] = m[..] {
        if cur == 0 {
            break;
        }
        let ki = (prev + cur - 1) / cur;
        k.push(ki);
        m.push(ki * cur - prev);
        let [.., bp, bc] = mbar[..] else {
            unreachable!()
        };
        mbar.push(ki * bc - bp);
    }
    let seq = HJSequence { m, mbar, k };
    check_sequence(&seq)?;
    Ok(seq)
}

fn check_sequence(h: &HJSequence) -> Result<()> {
    let bad = |what: &str| Err(Error::Inconsistent(format!("HJ sequence {h:?}: {what}")));
    let n = h.m.len();
    let m0 = h.m[0];
    if h.m[n - 1] != 0 || h.m[n - 2] != 1 || h.mbar[n - 1] != m0 {
        return bad("endpoints");
    }
    if h.m.windows(2).any(|w| w[0] <= w[1]) || h.mbar.windows(2).any(|w| w[0] >= w[1]) {
        return bad("monotonicity");
    }
    if m0 > 1 && h.k.iter().any(|&k| k < 2) {
        return bad("k_i < 2");
    }
    if (h.m[1] as i128 * h.mbar[n - 2] as i128 - 1).rem_euclid(m0 as i128) != 0 {
        return bad("m_1 mbar_s != 1 mod m_0");
    }
    Ok(())
}

/// The `0 < eps < nu_l` with `(v_l' eps + v_l'') / nu_l` integral, or 0
/// when `nu_l = 1`.
pub fn epsilon_l(nu: &NuVector, l: usize) -> Result<i64> {
    let v = r2_cone_generators(nu)?;
    check_l(l)?;
    let m = nu.get(l) as i64;
    if m == 1 {
        return Ok(0);
    }
    let (lp, lpp) = neighbours(l);
    // Only coordinate l is nontrivial: nu_l'' eps + nu_l' = 0 (mod nu_l).
    let inv = mod_inverse(nu.get(lpp) as i64, m)
        .ok_or_else(|| Error::Inconsistent(format!("nu_{lpp} not invertible mod nu_{l}")))?;
    let eps = (-(nu.get(lp) as i64) * inv).rem_euclid(m);
    let ok = (0..3).all(|j| (v[lp][j] * eps + v[lpp][j]) % m == 0);
    debug_assert_eq!(
        Some(eps),
        (1..m).find(|e| (0..3).all(|j| (v[lp][j] * e + v[lpp][j]) % m == 0))
    );
    if eps == 0 || !ok {
        return Err(Error::Inconsistent(format!(
            "no valid epsilon for nu = {nu}, l = {l}"
        )));
    }
    Ok(eps)
}

/// A planar cone `C(v_l', v_l'')` and its unimodular subdivision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeFan {
    pub l: usize,
    /// `u_l * nu`; every generator is orthogonal to it.
    pub ambient_normal: IVec3,
    /// `v_{l,0} = v_l', ..., v_{l,s+1} = v_l''`.
    pub generators: Vec<IVec3>,
    /// Index pairs `(i, i+1)` of consecutive generators.
    pub cones: Vec<(usize, usize)>,
    pub sequence: HJSequence,
}

impl ConeFan {
    /// Generators strictly between the two boundary rays.
    pub fn interior_rays(&self) -> &[IVec3] {
        &self.generators[1..self.generators.len() - 1]
    }

    pub fn cone(&self, i: usize) -> (IVec3, IVec3) {
        let (a, b) = self.cones[i];
        (self.generators[a], self.generators[b])
    }

    /// The relatively open face containing `n`, if `n` lies in the closed
    /// big cone.
    pub fn face_of(&self, n: &IVec3) -> Option<Face> {
        if *n == [0, 0, 0] {
            return Some(Face::Apex);
        }
        for (i, g) in self.generators.iter().enumerate() {
            if let Some(t) = ray_multiple(g, n) {
                if t > 0 {
                    return Some(Face::Ray(i));
                }
            }
        }
        for i in 0..self.cones.len() {
            let (g1, g2) = self.cone(i);
            if let Some((a, b)) = coords(&self.ambient_normal, &g1, &g2, n) {
                if a.0 > 0 && b.0 > 0 {
                    return Some(Face::Cone(i));
                }
            }
        }
        None
    }
}

/// A relatively open face of a fan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Face {
    Apex,
    Ray(usize),
    Cone(usize),
}

fn cross(a: &IVec3, b: &IVec3) -> [i128; 3] {
    let [a0, a1, a2] = a.map(i128::from);
    let [b0, b1, b2] = b.map(i128::from);
    [a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0]
}

fn dot(a: &[i128; 3], w: &IVec3) -> i128 {
    a.iter().zip(w).map(|(x, &y)| x * y as i128).sum()
}

/// `t` with `n = t g`, if any.
fn ray_multiple(g: &IVec3, n: &IVec3) -> Option<i64> {
    if cross(g, n) != [0, 0, 0] {
        return None;
    }
    let j = (0..3).find(|&j| g[j] != 0)?;
    (n[j] % g[j] == 0).then(|| n[j] / g[j])
}

/// A rational coefficient `num / den` with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Coef(i128, i128);

/// Coordinates `(a, b)` of `n = a g1 + b g2` for `n` in the plane with
/// normal `w`, as unreduced fractions sharing a positive denominator.
fn coords(w: &IVec3, g1: &IVec3, g2: &IVec3, n: &IVec3) -> Option<(Coef, Coef)> {
    let det = dot(&cross(g1, g2), w);
    if det == 0 {
        return None;
    }
    let a = dot(&cross(n, g2), w);
    let b = dot(&cross(g1, n), w);
    let s = det.signum();
    let den = det.abs();
    // For `(a, b)` positivity tests only signs matter; integrality uses den.
    Some((Coef(a * s, den), Coef(b * s, den)))
}

/// The Hirzebruch-Jung fan of `C(v_l', v_l'')` with generators
/// `(v_l' m_i + v_l'' mbar_i) / nu_l` from the expansion of `nu_l / eps_l`.
pub fn hj_generators(nu: &NuVector, l: usize) -> Result<ConeFan> {
    let v = r2_cone_generators(nu)?;
    let eps = epsilon_l(nu, l)?;
    let m0 = nu.get(l) as i64;
    let seq = hj_sequence(m0, eps)?;
    let (lp, lpp) = neighbours(l);
    let mut generators = Vec::with_capacity(seq.m.len());
    for (&mi, &bi) in seq.m.iter().zip(&seq.mbar) {
        let mut g = [0i64; 3];
        for j in 0..3 {
            let num = v[lp][j] * mi + v[lpp][j] * bi;
            if num % m0 != 0 {
                return Err(Error::Inconsistent(format!(
                    "non-integral generator for nu = {nu}, l = {l}"
                )));
            }
            g[j] = num / m0;
        }
        generators.push(g);
    }
    let cones = (0..generators.len() - 1).map(|i| (i, i + 1)).collect();
    Ok(ConeFan {
        l,
        ambient_normal: plane_normal(nu, l)?,
        generators,
        cones,
        sequence: seq,
    })
}

/// A `Z`-basis of the rank-2 lattice `w^perp` for primitive `w`.
fn plane_basis(w: &IVec3) -> (IVec3, IVec3) {
    let [w0, w1, w2] = *w;
    let g = gcd(w0, w1);
    if g == 0 {
        return ([1, 0, 0], [0, 1, 0]);
    }
    let (x, y) = ext_gcd(w0, w1);
    // w0 x + w1 y = g; gcd(g, w2) = 1 since w is primitive.
    ([w1 / g, -w0 / g, 0], [-w2 * x, -w2 * y, g])
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-s0, -t0)
    } else {
        (s0, t0)
    }
}

/// Index of `Z g1 + Z g2` in the plane lattice, i.e. the number of lattice
/// points in the half-open parallelogram `{a g1 + b g2 : 0 <= a, b < 1}`.
pub fn multiplicity(w: &IVec3, g1: &IVec3, g2: &IVec3) -> Option<u64> {
    let (b1, b2) = plane_basis(w);
    let express = |g: &IVec3| -> Option<(i128, i128)> {
        // Solve g = x b1 + y b2 via the plane's own coordinates.
        let (a, b) = coords(w, &b1, &b2, g)?;
        (a.0 % a.1 == 0 && b.0 % b.1 == 0).then(|| (a.0 / a.1, b.0 / b.1))
    };
    let (p, q) = express(g1)?;
    let (r, s) = express(g2)?;
    let det = (p * s - q * r).unsigned_abs();
    (det != 0).then_some(det as u64)
}

/// True iff (a) every lattice point of the closed big cone in the probe box
/// is a nonnegative integer combination of the generators of each subcone
/// containing it, and lies in exactly one open face; and (b) every subcone
/// has multiplicity one.
pub fn verify_unimodular(fan: &ConeFan, probe_bound: u64) -> bool {
    let w = fan.ambient_normal;
    if fan.generators.len() < 2 || fan.cones.is_empty() {
        return false;
    }
    if fan
        .generators
        .iter()
        .any(|g| dot(&g.map(i128::from), &w) != 0)
    {
        return false;
    }
    if (0..fan.cones.len()).any(|i| {
        let (g1, g2) = fan.cone(i);
        multiplicity(&w, &g1, &g2) != Some(1)
    }) {
        return false;
    }

    let nu: Vec<u64> = w.iter().map(|x| x.unsigned_abs()).collect();
    let Ok(nu) = NuVector::new(nu) else {
        return false;
    };
    let Ok(en) = Enumerator::new(&nu, probe_bound, LatticeConstraint::Unrestricted) else {
        return false;
    };
    let sign = [0, 1, 2].map(|j| w[j].signum());
    let first = fan.generators[0];
    let last = *fan.generators.last().expect("nonempty");
    let mut ok = true;
    en.visit(|m| {
        if !ok {
            return;
        }
        let n: IVec3 = [0, 1, 2].map(|j| sign[j] * m[j]);
        let in_big = matches!(coords(&w, &first, &last, &n), Some((a, b)) if a.0 >= 0 && b.0 >= 0);
        if !in_big {
            return;
        }
        let mut open_faces = 0;
        for i in 0..fan.cones.len() {
            let (g1, g2) = fan.cone(i);
            let Some((a, b)) = coords(&w, &g1, &g2, &n) else {
                ok = false;
                return;
            };
            if a.0 < 0 || b.0 < 0 {
                continue;
            }
            if a.0 % a.1 != 0 || b.0 % b.1 != 0 {
                ok = false;
                return;
            }
            if a.0 > 0 && b.0 > 0 {
                open_faces += 1;
            }
        }
        let on_ray = fan
            .generators
            .iter()
            .filter(|g| ray_multiple(g, &n).is_some_and(|t| t > 0))
            .count();
        if open_faces + on_ray != 1 {
            ok = false;
        }
    });
    ok
}
