//! Orthogonal lattices, the boundary cones of `nu^perp` for `r = 2`, and
//! their Hirzebruch-Jung unimodular subdivisions.

mod enumerate;
mod hj;

pub use enumerate::{enumerate_orthogonal, mod_inverse, Enumerator, LatticeConstraint};
pub use hj::{
    epsilon_l, hj_generators, hj_sequence, multiplicity, neighbours, plane_normal,
    r2_cone_generators, verify_unimodular, ConeFan, Face, HJSequence, IVec3, SIGNS,
};
