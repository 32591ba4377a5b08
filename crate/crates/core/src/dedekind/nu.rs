use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::gcd;

/// Pairwise distinct, pairwise coprime positive integers `(nu_0, ..., nu_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct NuVector(Vec<u64>);

impl NuVector {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidNu("no entries".into()));
        }
        if entries.contains(&0) {
            return Err(Error::InvalidNu(format!("{entries:?} has a zero entry")));
        }
        for (i, &a) in entries.iter().enumerate() {
            for &b in &entries[i + 1..] {
                if a == b {
                    return Err(Error::InvalidNu(format!("{entries:?} repeats {a}")));
                }
                if gcd(a as i64, b as i64) != 1 {
                    return Err(Error::InvalidNu(format!("{entries:?}: gcd({a}, {b}) > 1")));
                }
            }
        }
        Ok(Self(entries))
    }

    /// The dimension index `r`; the vector has `r + 1` entries.
    pub fn r(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, k: usize) -> u64 {
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

    pub fn expect_r(&self, r: usize) -> Result<()> {
        if self.r() == r {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: r,
                found: self.r(),
            })
        }
    }

    /// The vector with entry `k` removed.
    pub fn without(&self, k: usize) -> Vec<u64> {
        self.0
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, &v)| v)
            .collect()
    }

    pub fn max(&self) -> u64 {
        *self.0.iter().max().expect("nonempty")
    }
}

impl TryFrom<Vec<u64>> for NuVector {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        NuVector::new(v)
    }
}

impl From<NuVector> for Vec<u64> {
    fn from(v: NuVector) -> Self {
        v.0
    }
}

impl fmt::Display for NuVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for NuVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| {
                t.trim().parse::<u64>().map_err(|_| {
                    Error::InvalidNu(format!("`{s}` is not a list of positive integers"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        NuVector::new(entries)
    }
}
