use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::periodic::Scalar;

/// Which right-hand side a [`ReciprocityReport`] was checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Rademacher,
    Shifted,
    R1,
    Integral,
    Fourier,
    PowerBasis,
    BernoulliGeneral,
    BernoulliR2,
    Exp,
    Cos,
    Sin,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Rademacher => "rademacher",
            Method::Shifted => "shifted",
            Method::R1 => "r1",
            Method::Integral => "integral",
            Method::Fourier => "fourier",
            Method::PowerBasis => "power-basis",
            Method::BernoulliGeneral => "bernoulli-general",
            Method::BernoulliR2 => "bernoulli-r2",
            Method::Exp => "exp",
            Method::Cos => "cos",
            Method::Sin => "sin",
        }
    }
}

impl Serialize for Method {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// `lhs` is the jump-weighted Dedekind sum total, `rhs` the formula under
/// test, `residual = lhs - rhs`. Truncated right-hand sides record the bound.
#[derive(Debug, Clone, PartialEq)]
pub struct ReciprocityReport {
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub residual: Scalar,
    pub method: Method,
    pub bound: Option<u64>,
}

impl ReciprocityReport {
    pub fn new(lhs: Scalar, rhs: Scalar, method: Method, bound: Option<u64>) -> Self {
        let residual = lhs.sub(&rhs);
        Self {
            lhs,
            rhs,
            residual,
            method,
            bound,
        }
    }

    /// True when both sides are exact and agree.
    pub fn is_exact_match(&self) -> bool {
        matches!(&self.residual, Scalar::Exact(r) if num_traits::Zero::is_zero(r))
    }

    /// Exact agreement, or `|residual| <= rel_tol * |lhs|`, falling back to
    /// `abs_tol` when `lhs` vanishes.
    pub fn within(&self, rel_tol: f64, abs_tol: f64) -> bool {
        if self.is_exact_match() {
            return true;
        }
        if self.residual.is_exact() {
            return false;
        }
        let res = self.residual.abs_f64();
        let scale = self.lhs.abs_f64();
        let lhs_zero =
            matches!(&self.lhs, Scalar::Exact(r) if num_traits::Zero::is_zero(r)) || scale == 0.0;
        if lhs_zero {
            res <= abs_tol
        } else {
            res <= rel_tol * scale
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Exact(r) => s.collect_str(r),
            Scalar::Float(z) if z.im == 0.0 => s.serialize_f64(z.re),
            Scalar::Float(z) => [z.re, z.im].serialize(s),
        }
    }
}

impl Serialize for ReciprocityReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ReciprocityReport", 5)?;
        st.serialize_field("lhs", &self.lhs)?;
        st.serialize_field("rhs", &self.rhs)?;
        st.serialize_field("residual", &self.residual)?;
        st.serialize_field("method", &self.method)?;
        st.serialize_field("N", &self.bound)?;
        st.end()
    }
}
