//! Generalized Dedekind sums and their reciprocity laws.
//!
//! The crate is organized bottom-up:
//!
//! * [`exact`]: rationals, Bernoulli numbers and polynomials, symbolic
//!   `rational * pi^a * i^b` scalars.
//! * [`periodic`]: descriptors for 1-periodic functions, their jumps and
//!   Fourier coefficients.
//! * [`dedekind`]: Dedekind sums, reciprocity left-hand sides and every exact
//!   right-hand side.
//! * [`lattice`]: orthogonal lattices, cone generators and Hirzebruch-Jung
//!   subdivisions.
//! * [`zeta`]: Riemann, conical and multiple zeta values, and the
//!   three-term Bernoulli reciprocity assembled from them.

pub mod dedekind;
pub mod error;
pub mod exact;
pub mod lattice;
pub mod periodic;
pub mod sum;
pub mod zeta;

pub use dedekind::{Method, NuVector, ReciprocityReport, Scalar};
pub use error::{Error, Result};
pub use exact::{BoundaryMode, Rational, SymbolicValue};
pub use lattice::{ConeFan, HJSequence, LatticeConstraint};
pub use periodic::{JumpData, PeriodicFn};
pub use zeta::{QVector, SignVector, TruncationPlan};
