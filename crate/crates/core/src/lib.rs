//! Stack-sorting simplices and their lattice-point enumerators.
//!
//! The crate builds the polytopes `conv(S^π)` spanned by the iterates of the
//! stack-sorting map, counts lattice points of their integer and rational
//! dilates exactly, and checks the combinatorial and Ehrhart-theoretic
//! identities satisfied by the family `△_n = conv(S^{τ_n})`.
//!
//! All geometry is generic over a [`Scalar`]/[`ExactScalar`] number type.
//! The aliases below fix the arbitrary-precision rationals used everywhere
//! results must be exact.

pub mod ehrhart;
pub mod equivalence;
pub mod exactla;
pub mod export;
pub mod permutations;
pub mod polytope;
pub mod scalar;

mod error;

pub use error::{Error, Result};
pub use scalar::{ExactScalar, Scalar};

pub use permutations::{Permutation, SortOrbit};

/// Exact arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
pub type RatVector = exactla::Vector<Rational>;
pub type RatMatrix = exactla::Matrix<Rational>;
pub type VPolytope = polytope::Polytope<Rational>;
pub type TransformCertificate = equivalence::TransformCertificate<Rational>;
pub type EhrhartResult = ehrhart::EhrhartResult;

/// 64-bit rationals; fast, but arithmetic panics on overflow.
pub type Rational64 = num_rational::Rational64;
pub type VPolytope64 = polytope::Polytope<Rational64>;
