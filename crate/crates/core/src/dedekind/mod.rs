//! Generalized Dedekind sums and exact reciprocity formulas.

mod closed;
mod integral;
mod nu;
mod report;
mod sums;

pub use closed::{
    cos_closed_form, exp_closed_form, r1_closed_form, rademacher_rhs, shifted_rhs, sign_classes,
    sin_closed_form,
};
pub use integral::{
    franel_integral, integral_recip_rhs, piecewise_integral, power_basis_recip_check,
};
pub use nu::NuVector;
pub use report::{Method, ReciprocityReport};
pub use sums::{dedekind_sum, reciprocity_lhs};

pub use crate::periodic::Scalar;
