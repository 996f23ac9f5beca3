//! Exact linear algebra over a [`Scalar`](crate::Scalar) field.
//!
//! Determinants use fraction-free (Bareiss) elimination, solves use plain
//! Gauss-Jordan, and [`lp_feasible`] decides feasibility of a rational linear
//! system with a phase-1 simplex under Bland's rule.

mod lp;
mod matrix;
mod vector;

pub use lp::{lp_feasible, lp_feasible_point, Constraint, Relation};
pub use matrix::Matrix;
pub use vector::Vector;

use crate::{ExactScalar, Result, Scalar};

/// Unique solution of `a · x = b`; see [`Matrix::solve`].
pub fn solve_linear<T: Scalar>(a: &Matrix<T>, b: &Vector<T>) -> Result<Option<Vector<T>>> {
    a.solve(b)
}

pub fn determinant<T: Scalar>(a: &Matrix<T>) -> Result<T> {
    a.determinant()
}

pub fn is_unimodular<T: ExactScalar>(a: &Matrix<T>) -> Result<bool> {
    a.is_unimodular()
}
