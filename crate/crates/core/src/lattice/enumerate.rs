//! Bounded enumeration of the orthogonal lattice `{n in Z^(r+1) : <nu, n> = 0}`.

use serde::{Deserialize, Serialize};

use crate::dedekind::NuVector;
use crate::error::{Error, Result};

/// Which nonzero points of the orthogonal lattice to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeConstraint {
    /// Every coordinate nonzero.
    AllNonzero,
    /// `n_k = 0`; other coordinates unrestricted.
    CoordZero(usize),
    /// Any nonzero point.
    Unrestricted,
}

/// Streams the points of `nu^perp` with `max |n_j| <= bound`.
///
/// The coordinate `e` with the largest `nu_e` is eliminated. Of the
/// remaining coordinates, the last one (`t`) is solved from the congruence
/// `nu_t n_t = -S (mod nu_e)`, so it steps through an arithmetic progression
/// with stride `nu_e`; the others are iterated over the box. Visiting order
/// is lexicographic in the iterated coordinates, then increasing `n_t`.
#[derive(Debug, Clone)]
pub struct Enumerator {
    dim: usize,
    bound: i64,
    inner: Inner,
}

#[derive(Debug, Clone)]
enum Inner {
    /// `r = 0`: only the zero vector, which is never emitted.
    Empty,
    Direct(Plan),
    /// `n_k = 0`: enumerate the sub-vector and insert a zero.
    Zero {
        k: usize,
        sub: Box<Enumerator>,
    },
}

#[derive(Debug, Clone)]
struct Plan {
    nu: Vec<i64>,
    e: usize,
    t: usize,
    /// Iterated coordinates; the first one indexes rows.
    outer: Vec<usize>,
    /// `nu_t^(-1) mod nu_e`.
    inv_t: i64,
    all_nonzero: bool,
}

impl Enumerator {
    pub fn new(nu: &NuVector, bound: u64, constraint: LatticeConstraint) -> Result<Self> {
        if bound == 0 {
            return Err(Error::InvalidParameter(
                "enumeration bound must be >= 1".into(),
            ));
        }
        let max_nu = nu.max();
        if (bound as u128) * (max_nu as u128) * (nu.len() as u128) >= (i64::MAX / 4) as u128 {
            return Err(Error::InvalidParameter(format!(
                "bound {bound} too large for nu = {nu}"
            )));
        }
        let dim = nu.len();
        let bound_i = bound as i64;
        let inner = match constraint {
            LatticeConstraint::CoordZero(k) => {
                nu.check_index(k)?;
                if dim == 1 {
                    Inner::Empty
                } else {
                    let sub = NuVector::new(nu.without(k))?;
                    Inner::Zero {
                        k,
                        sub: Box::new(Enumerator::new(
                            &sub,
                            bound,
                            LatticeConstraint::Unrestricted,
                        )?),
                    }
                }
            }
            _ if dim == 1 => Inner::Empty,
            c => {
                let v: Vec<i64> = nu.entries().iter().map(|&x| x as i64).collect();
                let e = (0..dim).max_by_key(|&j| (v[j], j)).expect("nonempty");
                let free: Vec<usize> = (0..dim).filter(|&j| j != e).collect();
                let (&t, outer) = free.split_last().expect("r >= 1");
                let inv_t = mod_inverse(v[t].rem_euclid(v[e]), v[e])
                    .ok_or_else(|| Error::InvalidNu(format!("{nu}: entries not coprime")))?;
                Inner::Direct(Plan {
                    nu: v,
                    e,
                    t,
                    outer: outer.to_vec(),
                    inv_t,
                    all_nonzero: c == LatticeConstraint::AllNonzero,
                })
            }
        };
        Ok(Self {
            dim,
            bound: bound_i,
            inner,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Row labels: the values of the first iterated coordinate. Rows can be
    /// visited independently and concatenated in this order.
    pub fn rows(&self) -> std::ops::RangeInclusive<i64> {
        match &self.inner {
            #[allow(clippy::reversed_empty_ranges)]
            Inner::Empty => 1..=0,
            Inner::Zero { sub, .. } => sub.rows(),
            Inner::Direct(p) if p.outer.is_empty() => 0..=0,
            Inner::Direct(_) => -self.bound..=self.bound,
        }
    }

    pub fn visit_row<F: FnMut(&[i64])>(&self, row: i64, f: &mut F) {
        match &self.inner {
            Inner::Empty => {}
            Inner::Zero { k, sub } => {
                let k = *k;
                let mut full = vec![0i64; self.dim];
                sub.visit_row_dyn(row, &mut |m: &[i64]| {
                    full[..k].copy_from_slice(&m[..k]);
                    full[k] = 0;
                    full[k + 1..].copy_from_slice(&m[k..]);
                    f(&full);
                });
            }
            Inner::Direct(p) => {
                let mut n = vec![0i64; self.dim];
                if p.outer.is_empty() {
                    self.fill_last(p, &mut n, 0, f);
                } else {
                    if p.all_nonzero && row == 0 {
                        return;
                    }
                    n[p.outer[0]] = row;
                    self.iterate(p, &mut n, 1, p.nu[p.outer[0]] * row, f);
                }
            }
        }
    }

    fn visit_row_dyn(&self, row: i64, f: &mut dyn FnMut(&[i64])) {
        self.visit_row(row, &mut |n: &[i64]| f(n));
    }

    pub fn visit<F: FnMut(&[i64])>(&self, mut f: F) {
        for row in self.rows() {
            self.visit_row(row, &mut f);
        }
    }

    fn iterate<F: FnMut(&[i64])>(&self, p: &Plan, n: &mut [i64], depth: usize, s: i64, f: &mut F) {
        if depth == p.outer.len() {
            self.fill_last(p, n, s, f);
            return;
        }
        let j = p.outer[depth];
        for x in -self.bound..=self.bound {
            if p.all_nonzero && x == 0 {
                continue;
            }
            n[j] = x;
            self.iterate(p, n, depth + 1, s + p.nu[j] * x, f);
        }
    }

    /// Emits every admissible `n_t` given `s = sum of nu_j n_j` over the
    /// iterated coordinates.
    fn fill_last<F: FnMut(&[i64])>(&self, p: &Plan, n: &mut [i64], s: i64, f: &mut F) {
        let (nt, ne) = (p.nu[p.t], p.nu[p.e]);
        let b = self.bound;
        // |n_e| <= b  <=>  -b nu_e - s <= nu_t n_t <= b nu_e - s.
        let lo = (-b).max(div_ceil(-b * ne - s, nt));
        let hi = b.min(div_floor(b * ne - s, nt));
        if lo > hi {
            return;
        }
        let residue = ((-s).rem_euclid(ne) as i128 * p.inv_t as i128).rem_euclid(ne as i128) as i64;
        let mut x = lo + (residue - lo).rem_euclid(ne);
        while x <= hi {
            let num = s + nt * x;
            debug_assert_eq!(num % ne, 0);
            n[p.t] = x;
            n[p.e] = -num / ne;
            let keep = if p.all_nonzero {
                x != 0 && n[p.e] != 0
            } else {
                n.iter().any(|&c| c != 0)
            };
            if keep {
                f(n);
            }
            x += ne;
        }
    }
}

fn div_floor(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Inverse of `a` modulo `m`, with `m = 1` giving 0.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (m as i128, a.rem_euclid(m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(m as i128) as i64)
}

/// Every point of `nu^perp` with `max |n_j| <= bound` satisfying the
/// constraint, in lexicographic order. The zero vector is never returned.
pub fn enumerate_orthogonal(
    nu: &NuVector,
    bound: u64,
    constraint: LatticeConstraint,
) -> Result<Vec<Vec<i64>>> {
    let en = Enumerator::new(nu, bound, constraint)?;
    let mut out = Vec::new();
    en.visit(|n| out.push(n.to_vec()));
    out.sort();
    Ok(out)
}
