//! Lecture-hall simplices and the affine unimodular map from the
//! stack-sorting simplex `△_n` onto `Q_n = conv(V_n \ {0})`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::ehrhart::{lattice_points, Region};
use crate::exactla::{Matrix, Vector};
use crate::permutations::tau;
use crate::polytope::Polytope;
use crate::{Error, ExactScalar, Result};

/// Vertex `k` of `P_n`: zeros followed by `n−k+1, …, n`.
fn lecture_hall_vertex(n: usize, k: usize) -> Vec<i64> {
    (1..=n as i64).map(|i| if i as usize > n - k { i } else { 0 }).collect()
}

/// `V_n`, from the origin up to `(1, 2, …, n)`.
pub fn lecture_hall_vertices(n: usize) -> Result<Vec<Vec<i64>>> {
    if n < 1 {
        return Err(Error::OutOfRange("lecture-hall simplex needs n ≥ 1".into()));
    }
    Ok((0..=n).map(|k| lecture_hall_vertex(n, k)).collect())
}

/// `P_n = {0 ≤ α_1 ≤ α_2/2 ≤ ⋯ ≤ α_n/n ≤ 1}`.
pub fn lecture_hall_simplex<T: ExactScalar>(n: usize) -> Result<Polytope<T>> {
    Polytope::from_int_points(&lecture_hall_vertices(n)?)
}

/// Number of integer sequences with `0 ≤ α_1 ≤ α_2/2 ≤ ⋯ ≤ α_n/n ≤ t`,
/// by nested iteration over the chain.
pub fn lecture_hall_count_direct(n: usize, t: u64) -> u64 {
    fn extend(i: u64, prev: u64, n: u64, t: u64) -> u64 {
        if i > n {
            return 1;
        }
        // α_{i}/i ≥ α_{i−1}/(i−1)  ⟺  (i−1)·α_i ≥ i·α_{i−1}
        let lo = if i == 1 { 0 } else { (i * prev).div_ceil(i - 1) };
        (lo..=i * t).map(|a| extend(i + 1, a, n, t)).sum()
    }
    if n == 0 {
        return 1;
    }
    extend(1, 0, n as u64, t)
}

/// `Q_{n+1}`, built by appending the coordinate `n+1` to every vertex of
/// `P_n`. The result is checked against `V_{n+1} \ {0}`.
pub fn drop_zero_vertex_lift<T: ExactScalar>(n: usize) -> Result<Polytope<T>> {
    let lifted: Vec<Vec<i64>> = lecture_hall_vertices(n)?
        .into_iter()
        .map(|mut v| {
            v.push(n as i64 + 1);
            v
        })
        .collect();
    let want: BTreeSet<Vec<i64>> = lecture_hall_vertices(n + 1)?.into_iter().filter(|v| v.iter().any(|&x| x != 0)).collect();
    let got: BTreeSet<Vec<i64>> = lifted.iter().cloned().collect();
    if got != want {
        return Err(Error::InvariantViolated("lifted vertices differ from V_{n+1} \\ {0}".into()));
    }
    Polytope::from_int_points(&lifted)
}

/// An affine map `x ↦ Ux + v` with `U` unimodular and `v` integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformCertificate<T> {
    matrix: Matrix<T>,
    translation: Vector<T>,
}

impl<T: ExactScalar> TransformCertificate<T> {
    pub fn new(matrix: Matrix<T>, translation: Vector<T>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        if translation.len() != matrix.rows() {
            return Err(Error::DimensionMismatch { expected: matrix.rows(), got: translation.len() });
        }
        if !matrix.is_unimodular()? || !translation.is_integral() {
            return Err(Error::NotUnimodular);
        }
        Ok(Self { matrix, translation })
    }

    pub fn identity(n: usize) -> Self {
        Self { matrix: Matrix::identity(n), translation: Vector::zeros(n) }
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn translation(&self) -> &Vector<T> {
        &self.translation
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `Ux + v`.
    pub fn apply(&self, x: &Vector<T>) -> Result<Vector<T>> {
        self.matrix.mul_vec(x)?.checked_add(&self.translation)
    }

    /// `Ux + t·v`, the induced map between `t`-th dilates.
    pub fn apply_dilated(&self, x: &Vector<T>, t: &T) -> Result<Vector<T>> {
        self.matrix.mul_vec(x)?.checked_add(&self.translation.scale(t))
    }

    /// Whether the vertices of `source` land exactly on those of `target`.
    pub fn maps_vertices(&self, source: &Polytope<T>, target: &Polytope<T>) -> Result<bool> {
        let image = source.vertices().into_iter().map(|v| self.apply(v)).collect::<Result<BTreeSet<_>>>()?;
        let want: BTreeSet<Vector<T>> = target.vertices().into_iter().cloned().collect();
        Ok(image == want)
    }
}

/// `L` (lower-triangular, all −1) together with `(v_2, …, v_{n+1})`,
/// `v_k = Σ_{i=2}^k i`. Sends `△_n` onto `Q_n`.
pub fn simplex_to_lecturehall_certificate<T: ExactScalar>(n: usize) -> Result<TransformCertificate<T>> {
    if n < 2 {
        return Err(Error::OutOfRange("certificate needs n ≥ 2".into()));
    }
    let v: Vec<i64> = (2..=n as i64 + 1).map(|k| k * (k + 1) / 2 - 1).collect();
    let cert = TransformCertificate::new(Matrix::lower_triangular_neg_ones(n), Vector::from_ints(&v))?;

    // Columns of M are s^{n−i}(τ_n); their images must be V_n \ {0}.
    let orbit = tau(n)?.sort_orbit();
    let image = orbit.points::<T>().iter().map(|x| cert.apply(x)).collect::<Result<BTreeSet<_>>>()?;
    let want: BTreeSet<Vector<T>> = lecture_hall_vertices(n)?
        .iter()
        .filter(|v| v.iter().any(|&x| x != 0))
        .map(|v| Vector::from_ints(v))
        .collect();
    if image != want {
        return Err(Error::InvariantViolated("certificate image differs from V_n \\ {0}".into()));
    }
    Ok(cert)
}

/// First dilate at which the certificate fails to biject lattice points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceFailure {
    pub t: u32,
    pub source_count: usize,
    pub target_count: usize,
    /// A lattice point in exactly one of `U(t·source) + t·v` and `t·target`.
    pub witness: Option<Vec<i64>>,
}

/// Checks `t = 1..=tmax` by comparing the image of `t·source ∩ Z^n` with
/// `t·target ∩ Z^n` as sets.
pub fn equivalence_failure<T: ExactScalar>(
    source: &Polytope<T>,
    target: &Polytope<T>,
    cert: &TransformCertificate<T>,
    tmax: u32,
) -> Result<Option<EquivalenceFailure>> {
    let n = cert.dim();
    for p in [source, target] {
        if p.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, got: p.ambient_dim() });
        }
    }
    if !cert.matrix().is_unimodular()? {
        return Err(Error::NotUnimodular);
    }
    let results: Vec<Result<Option<EquivalenceFailure>>> = (1..=tmax)
        .into_par_iter()
        .map(|t| {
            let tt = T::from_int(t.into());
            let src = lattice_points(source, &tt, Region::Closed)?;
            let tgt: BTreeSet<Vec<i64>> = lattice_points(target, &tt, Region::Closed)?.into_iter().collect();
            let mut image = BTreeSet::new();
            for x in &src {
                let y = cert.apply_dilated(&Vector::from_ints(x), &tt)?;
                let y: Vec<i64> = y
                    .iter()
                    .map(|c| c.to_big().to_integer().try_into().map_err(|_| Error::Overflow("image point")))
                    .collect::<Result<_>>()?;
                image.insert(y);
            }
            if image == tgt && src.len() == tgt.len() {
                return Ok(None);
            }
            let witness = image.symmetric_difference(&tgt).next().cloned();
            Ok(Some(EquivalenceFailure { t, source_count: src.len(), target_count: tgt.len(), witness }))
        })
        .collect();
    for r in results {
        if let Some(f) = r? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

pub fn verify_integral_equivalence<T: ExactScalar>(
    source: &Polytope<T>,
    target: &Polytope<T>,
    cert: &TransformCertificate<T>,
    tmax: u32,
) -> Result<bool> {
    Ok(equivalence_failure(source, target, cert, tmax)?.is_none())
}
