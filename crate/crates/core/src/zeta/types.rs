use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector `(q_0, ..., q_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QVector(Vec<u32>);

impl QVector {
    pub fn new(q: Vec<u32>) -> Result<Self> {
        if q.is_empty() {
            return Err(Error::InvalidParameter("empty q vector".into()));
        }
        Ok(Self(q))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, k: usize) -> u32 {
        self.0[k]
    }

    pub fn check_index(&self, k: usize) -> Result<()> {
        if k < self.0.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: k,
                len: self.0.len(),
            })
        }
    }

    /// `|q|`.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `|qbar| = |q| - 1`.
    pub fn qbar(&self) -> u32 {
        self.weight().saturating_sub(1)
    }

    /// `1_q`, the number of entries equal to 1.
    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&x| x == 1).count()
    }

    /// `q_k`: entry `k` set to zero.
    pub fn masked(&self, k: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v[k] = 0;
        v
    }

    /// `|q_k|`.
    pub fn masked_weight(&self, k: usize) -> u32 {
        self.weight() - self.0[k]
    }

    /// `q^k`: entry `k` removed.
    pub fn without(&self, k: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.remove(k);
        v
    }

    /// `q - e_k`.
    pub fn minus_unit(&self, k: usize) -> Result<QVector> {
        self.check_index(k)?;
        let mut v = self.0.clone();
        v[k] = v[k]
            .checked_sub(1)
            .ok_or_else(|| Error::InvalidParameter(format!("q_{k} = 0 cannot be lowered")))?;
        Ok(Self(v))
    }

    pub fn expect_len(&self, len: usize) -> Result<()> {
        if self.0.len() == len {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                functions: self.0.len(),
                entries: len,
            })
        }
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for QVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidParameter(format!("bad q entry `{p}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(v)
    }
}

/// A vector in `{-1, +1}^(r+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i8>", into = "Vec<i8>")]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(u: Vec<i8>) -> Result<Self> {
        if u.is_empty() || u.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidParameter(format!(
                "{u:?} is not a sign vector"
            )));
        }
        Ok(Self(u))
    }

    /// `u_0 = (1,-1,-1)`, `u_1 = (1,-1,1)`, `u_2 = (1,1,-1)`.
    pub fn canonical_r2() -> [SignVector; 3] {
        crate::lattice::SIGNS.map(|u| SignVector(u.iter().map(|&s| s as i8).collect()))
    }

    /// Every sign vector of the given length with first entry `+1`, one per
    /// antipodal pair, in binary order.
    pub fn representatives(len: usize) -> Vec<SignVector> {
        (0u64..1 << (len - 1))
            .map(|bits| {
                let mut u = vec![1i8];
                u.extend((0..len - 1).map(|j| if bits >> j & 1 == 1 { -1 } else { 1 }));
                SignVector(u)
            })
            .collect()
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `prod_{j != skip} u_j^(q_j)`.
    pub fn sign_power(&self, q: &[u32], skip: Option<usize>) -> i64 {
        self.0
            .iter()
            .zip(q)
            .enumerate()
            .filter(|(j, _)| Some(*j) != skip)
            .map(|(_, (&u, &e))| if u < 0 && e % 2 == 1 { -1 } else { 1 })
            .product()
    }
}

impl TryFrom<Vec<i8>> for SignVector {
    type Error = Error;

    fn try_from(v: Vec<i8>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<SignVector> for Vec<i8> {
    fn from(u: SignVector) -> Self {
        u.0
    }
}

/// How `n` and `-n` are combined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pairing {
    /// Each antipodal pair is summed as one term (principal value).
    #[default]
    Symmetric,
    /// Points are added one at a time in enumeration order.
    None,
}

/// Which points of a cone count as within the truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Geometry {
    /// `a g_1 + b g_2` with `1 <= a, b <= N` (rays: `t g` with `t <= N`).
    #[default]
    Parameter,
    /// Points with `max |n_j| <= N`.
    Box,
}

/// Truncation settings shared by every lattice sum. Orthogonal-lattice sums
/// always use the `N`-box; `geometry` only affects cone sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncationPlan {
    #[serde(rename = "N")]
    pub bound: u64,
    #[serde(default)]
    pub pairing: Pairing,
    #[serde(default)]
    pub geometry: Geometry,
}

impl TruncationPlan {
    pub fn new(bound: u64) -> Self {
        Self {
            bound,
            pairing: Pairing::Symmetric,
            geometry: Geometry::Parameter,
        }
    }

    pub fn with_pairing(self, pairing: Pairing) -> Self {
        Self { pairing, ..self }
    }

    pub fn with_geometry(self, geometry: Geometry) -> Self {
        Self { geometry, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.bound == 0 {
            return Err(Error::InvalidPlan("bound must be >= 1".into()));
        }
        Ok(())
    }

    /// Odd total weight needs symmetric pairing.
    pub(crate) fn require_pairing_for(&self, weight: u32) -> Result<()> {
        self.validate()?;
        if weight % 2 == 1 && self.pairing != Pairing::Symmetric {
            return Err(Error::InvalidPlan(format!(
                "odd weight {weight} is a principal value and needs symmetric pairing"
            )));
        }
        Ok(())
    }
}

/// The four lattice sums over `nu^perp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaVariant {
    /// `zeta_{k,nu,q}`: `n_j != 0` for `j != k`, exponents `q_k`.
    Full,
    /// Every coordinate nonzero, exponents `q_k`.
    Y,
    /// `n_k = 0`, others nonzero, exponents `q_k`.
    Z,
    /// `zeta_{nu,q}`: every coordinate nonzero, exponents `q`.
    Plain,
}

impl FromStr for ZetaVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "full" => Ok(Self::Full),
            "y" => Ok(Self::Y),
            "z" => Ok(Self::Z),
            "plain" => Ok(Self::Plain),
            _ => Err(Error::InvalidParameter(format!(
                "unknown variant `{s}` (full, y, z, plain)"
            ))),
        }
    }
}

/// Points of a cone to sum over. The apex is never included.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    Closed,
    RelativeInterior,
}

/// A truncated sum and the number of lattice points it used.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TruncatedValue {
    pub value: f64,
    pub points_used: u64,
}
