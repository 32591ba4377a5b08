//! Riemann, conical and multiple zeta values: exact closed forms, truncated
//! lattice sums, and the Bernoulli reciprocity assembled from them.

mod recip;
mod riemann;
mod trunc;
mod types;

pub use recip::{
    bernoulli_recip_general, bernoulli_recip_r2, bound_check, canonical_signs, q_sum, sigma,
    z_closed_r2,
};
pub use riemann::{
    ray_zeta_exact, riemann_zeta_even_exact, riemann_zeta_f64, riemann_zeta_numeric,
};
pub use trunc::{
    combined_y_identity, cone_points, conical_zeta_trunc, multiple_zeta_trunc, orthant_sums,
    orthant_zeta_trunc,
};
pub use types::{
    Geometry, Pairing, QVector, Region, SignVector, TruncatedValue, TruncationPlan, ZetaVariant,
};
