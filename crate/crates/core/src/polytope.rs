//! Polytopes given by finite point sets.
//!
//! A [`Polytope`] keeps every input point (deduplicated) and flags which of
//! them are extreme. Its affine hull is cached as a list of linear equations,
//! and when the extreme points are affinely independent an exact barycentric
//! solver is precomputed. Relative interior and relative boundary are always
//! taken inside the affine hull, so lower-dimensional polytopes such as the
//! orbit simplices in `R^n` get meaningful interiors.

use std::collections::HashSet;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::exactla::{lp_feasible, Constraint, Matrix, Relation, Vector};
use crate::scalar::gcd_all;
use crate::{Error, ExactScalar, Result};

/// Largest affine dimension for which facets are enumerated by brute force.
pub const MAX_FACET_DIM: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MembershipClass {
    Outside,
    RelativeBoundary,
    RelativeInterior,
}

#[derive(Clone, Debug)]
pub struct Polytope<T: ExactScalar> {
    points: Vec<Vector<T>>,
    extreme: Vec<bool>,
    ambient: usize,
    affine_dim: usize,
    /// Each `y` satisfies `y[0] + Σ y[j+1]·z[j] = 0` on the affine hull.
    hull_equations: Vec<Vector<T>>,
    simplex: Option<Barycentric<T>>,
    facets: OnceLock<Option<Vec<Facet<T>>>>,
}

/// Exact barycentric coordinates with respect to the vertices of a simplex.
#[derive(Clone, Debug)]
pub struct Barycentric<T> {
    vertices: Vec<usize>,
    /// Independent rows of the `(1, z)` system; index 0 is the constant row.
    rows: Vec<usize>,
    inverse: Matrix<T>,
}

/// An affine functional `g(z) = form[0] + Σ form[j+1]·z[j]` that is
/// nonnegative on the polytope and vanishes exactly on one facet.
#[derive(Clone, Debug)]
pub struct Facet<T> {
    pub form: Vector<T>,
    pub vertices: Vec<usize>,
}

impl<T: ExactScalar> Barycentric<T> {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn inverse(&self) -> &Matrix<T> {
        &self.inverse
    }

    /// Coordinates of `z`, which must already lie in the affine hull.
    pub fn coords(&self, z: &Vector<T>) -> Vector<T> {
        let rhs: Vector<T> = self
            .rows
            .iter()
            .map(|&r| if r == 0 { T::one() } else { z[r - 1].clone() })
            .collect();
        self.inverse.mul_vec(&rhs).expect("square system")
    }
}

impl<T: ExactScalar> Polytope<T> {
    /// Convex hull of a point set. Duplicates are dropped; points that are
    /// convex combinations of the others stay in the list, flagged as
    /// non-extreme.
    pub fn from_points(pts: &[Vector<T>]) -> Result<Self> {
        let first = pts.first().ok_or(Error::Empty)?;
        let ambient = first.len();
        if ambient == 0 {
            return Err(Error::Empty);
        }
        if pts.iter().any(|p| p.len() != ambient) {
            return Err(Error::Ragged);
        }
        let mut seen = HashSet::new();
        let points: Vec<Vector<T>> =
            pts.iter().filter(|p| seen.insert((*p).clone())).cloned().collect();

        let lifted = homogenized(&points);
        let rank = lifted.rank();
        let affine_dim = rank - 1;
        let hull_equations = lifted.nullspace();

        let extreme = if points.len() == rank {
            vec![true; points.len()]
        } else {
            (0..points.len()).map(|i| !in_hull_of_others(&points, i)).collect()
        };
        let n_extreme = extreme.iter().filter(|&&e| e).count();
        let simplex = if n_extreme == affine_dim + 1 {
            let vertices: Vec<usize> = (0..points.len()).filter(|&i| extreme[i]).collect();
            Some(barycentric(&points, vertices))
        } else {
            None
        };

        Ok(Self {
            points,
            extreme,
            ambient,
            affine_dim,
            hull_equations,
            simplex,
            facets: OnceLock::new(),
        })
    }

    pub fn from_int_points(pts: &[Vec<i64>]) -> Result<Self> {
        let v: Vec<Vector<T>> = pts.iter().map(|p| Vector::from_ints(p)).collect();
        Self::from_points(&v)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn is_simplex(&self) -> bool {
        self.simplex.is_some()
    }

    /// All distinct input points, extreme or not.
    pub fn points(&self) -> &[Vector<T>] {
        &self.points
    }

    pub fn extreme_flags(&self) -> &[bool] {
        &self.extreme
    }

    pub fn vertices(&self) -> Vec<&Vector<T>> {
        self.points.iter().zip(&self.extreme).filter(|(_, &e)| e).map(|(p, _)| p).collect()
    }

    pub fn non_extreme_points(&self) -> Vec<&Vector<T>> {
        self.points.iter().zip(&self.extreme).filter(|(_, &e)| !e).map(|(p, _)| p).collect()
    }

    pub fn hull_equations(&self) -> &[Vector<T>] {
        &self.hull_equations
    }

    pub fn barycentric(&self) -> Option<&Barycentric<T>> {
        self.simplex.as_ref()
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices().iter().all(|v| v.is_integral())
    }

    /// The common coordinate sum of all points, when there is one.
    pub fn coordinate_sum(&self) -> Option<T> {
        let s = self.points[0].sum();
        self.points.iter().all(|p| p.sum() == s).then_some(s)
    }

    pub fn in_affine_hull(&self, x: &Vector<T>) -> bool {
        self.hull_equations.iter().all(|y| eval_affine(y, x).is_zero())
    }

    /// Facets by brute force over vertex subsets; `None` above
    /// [`MAX_FACET_DIM`].
    pub fn facets(&self) -> Option<&[Facet<T>]> {
        self.facets
            .get_or_init(|| (self.affine_dim <= MAX_FACET_DIM).then(|| self.enumerate_facets()))
            .as_deref()
    }

    fn enumerate_facets(&self) -> Vec<Facet<T>> {
        let d = self.affine_dim;
        if d == 0 {
            return Vec::new();
        }
        let verts: Vec<usize> = (0..self.points.len()).filter(|&i| self.extreme[i]).collect();
        let mut out: Vec<Facet<T>> = Vec::new();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for subset in combinations(verts.len(), d) {
            let idx: Vec<usize> = subset.iter().map(|&k| verts[k]).collect();
            let sub: Vec<Vector<T>> = idx.iter().map(|&i| self.points[i].clone()).collect();
            let h = homogenized(&sub);
            if h.rank() != d {
                continue;
            }
            let Some(form) = h.nullspace().into_iter().find(|y| {
                verts.iter().any(|&i| !eval_affine(y, &self.points[i]).is_zero())
            }) else {
                continue;
            };
            let vals: Vec<T> = verts.iter().map(|&i| eval_affine(&form, &self.points[i])).collect();
            let pos = vals.iter().any(|v| v.is_positive());
            let neg = vals.iter().any(|v| v.is_negative());
            if pos && neg {
                continue;
            }
            let form = if neg { -form } else { form };
            let on: Vec<usize> =
                verts.iter().zip(&vals).filter(|(_, v)| v.is_zero()).map(|(&i, _)| i).collect();
            if seen.insert(on.clone()) {
                out.push(Facet { form, vertices: on });
            }
        }
        out
    }

    pub fn membership(&self, x: &Vector<T>) -> Result<MembershipClass> {
        if x.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: x.len() });
        }
        if !self.in_affine_hull(x) {
            return Ok(MembershipClass::Outside);
        }
        if let Some(bary) = &self.simplex {
            let c = bary.coords(x);
            if c.iter().any(|v| v.is_negative()) {
                return Ok(MembershipClass::Outside);
            }
            if c.iter().all(|v| v.is_positive()) {
                return Ok(MembershipClass::RelativeInterior);
            }
            return Ok(MembershipClass::RelativeBoundary);
        }
        if !self.contains_lp(x) {
            return Ok(MembershipClass::Outside);
        }
        let facets = self.facets().ok_or(Error::UnclassifiedInside(self.affine_dim))?;
        if facets.iter().any(|f| eval_affine(&f.form, x).is_zero()) {
            Ok(MembershipClass::RelativeBoundary)
        } else {
            Ok(MembershipClass::RelativeInterior)
        }
    }

    /// Convex-combination feasibility of `x` over the extreme points.
    pub fn contains_lp(&self, x: &Vector<T>) -> bool {
        let verts = self.vertices();
        lp_feasible(&convex_combination_system(&verts, x))
    }

    pub fn dilate(&self, lam: &T) -> Result<Self> {
        if lam.is_negative() {
            return Err(Error::NegativeDilate(lam.to_string()));
        }
        let pts: Vec<Vector<T>> = self.points.iter().map(|p| p.scale(lam)).collect();
        Self::from_points(&pts)
    }

    pub fn translate(&self, v: &Vector<T>) -> Result<Self> {
        let pts = self.points.iter().map(|p| p.checked_add(v)).collect::<Result<Vec<_>>>()?;
        Self::from_points(&pts)
    }

    /// Sets the last coordinate of every point to zero.
    pub fn project_last_to_zero(&self) -> Result<Self> {
        let pts: Vec<Vector<T>> = self
            .points
            .iter()
            .map(|p| {
                let mut q = p.clone();
                q[self.ambient - 1] = T::zero();
                q
            })
            .collect();
        Self::from_points(&pts)
    }

    /// Removes the last coordinate of every point.
    pub fn drop_last(&self) -> Result<Self> {
        if self.ambient < 2 {
            return Err(Error::OutOfRange("cannot drop the only coordinate".into()));
        }
        let pts: Vec<Vector<T>> = self
            .points
            .iter()
            .map(|p| {
                let mut q = p.clone();
                q.pop();
                q
            })
            .collect();
        Self::from_points(&pts)
    }

    /// Appends a zero coordinate to every point.
    pub fn lift_append_zero(&self) -> Result<Self> {
        self.lift_append(&T::zero())
    }

    pub fn lift_append(&self, c: &T) -> Result<Self> {
        let pts: Vec<Vector<T>> = self
            .points
            .iter()
            .map(|p| {
                let mut q = p.clone();
                q.push(c.clone());
                q
            })
            .collect();
        Self::from_points(&pts)
    }

    /// Normalized volume of a lattice simplex, measured in the lattice of its
    /// affine hull.
    ///
    /// The edge vectors span a sublattice of `aff ∩ Z^n` whose index is the
    /// gcd of their maximal minors; for full-dimensional simplices that is
    /// just `|det|`.
    pub fn normalized_volume(&self) -> Result<BigInt> {
        let bary = self.simplex.as_ref().ok_or(Error::NotSimplex)?;
        if !self.is_lattice() {
            return Err(Error::NotLattice);
        }
        let d = self.affine_dim;
        if d == 0 {
            return Ok(BigInt::one());
        }
        let base = &self.points[bary.vertices[0]];
        let edges: Vec<Vec<T>> = bary.vertices[1..]
            .iter()
            .map(|&i| (self.points[i].clone() - base.clone()).into_inner())
            .collect();
        let e = Matrix::from_rows(edges)?;
        let minors: Vec<BigInt> = combinations(self.ambient, d)
            .map(|cols| e.select_columns(&cols).determinant().map(|m| m.to_big().to_integer()))
            .collect::<Result<_>>()?;
        Ok(gcd_all(&minors).abs())
    }
}

/// Rows `(1, v)` for each point.
fn homogenized<T: ExactScalar>(pts: &[Vector<T>]) -> Matrix<T> {
    Matrix::from_rows(
        pts.iter()
            .map(|p| std::iter::once(T::one()).chain(p.iter().cloned()).collect())
            .collect(),
    )
    .expect("nonempty points")
}

pub(crate) fn eval_affine<T: ExactScalar>(form: &Vector<T>, x: &Vector<T>) -> T {
    x.iter().enumerate().fold(form[0].clone(), |acc, (j, xj)| acc + form[j + 1].clone() * xj.clone())
}

fn barycentric<T: ExactScalar>(points: &[Vector<T>], vertices: Vec<usize>) -> Barycentric<T> {
    let cols: Vec<Vector<T>> = vertices
        .iter()
        .map(|&i| std::iter::once(T::one()).chain(points[i].iter().cloned()).collect())
        .collect();
    let a = Matrix::from_columns(&cols).expect("nonempty");
    let rows = a.transpose().clone().rref_in_place();
    let inverse = a.select_rows(&rows).inverse().expect("square").expect("independent rows");
    Barycentric { vertices, rows, inverse }
}

fn convex_combination_system<T: ExactScalar>(verts: &[&Vector<T>], x: &Vector<T>) -> Vec<Constraint<T>> {
    let m = verts.len();
    let mut cs = Vec::with_capacity(m + x.len() + 1);
    for i in 0..m {
        let mut e = Vector::zeros(m);
        e[i] = T::one();
        cs.push(Constraint::new(e, Relation::Ge, T::zero()));
    }
    cs.push(Constraint::new(Vector::new(vec![T::one(); m]), Relation::Eq, T::one()));
    for k in 0..x.len() {
        let row: Vector<T> = verts.iter().map(|v| v[k].clone()).collect();
        cs.push(Constraint::new(row, Relation::Eq, x[k].clone()));
    }
    cs
}

fn in_hull_of_others<T: ExactScalar>(points: &[Vector<T>], i: usize) -> bool {
    let others: Vec<&Vector<T>> =
        points.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p).collect();
    lp_feasible(&convex_combination_system(&others, &points[i]))
}

/// All increasing `k`-subsets of `0..n`, lexicographically.
pub(crate) fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let c = cur.as_mut().expect("some");
        let mut i = k;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

/// Whether the points are affinely independent.
pub fn affinely_independent<T: ExactScalar>(pts: &[Vector<T>]) -> bool {
    !pts.is_empty() && homogenized(pts).rank() == pts.len()
}

/// `conv(S^π)`, the convex hull of the stack-sorting orbit of `π`.
pub fn orbit_polytope<T: ExactScalar>(p: &crate::Permutation) -> Polytope<T> {
    Polytope::from_points(&p.sort_orbit().points()).expect("orbit points are nonempty")
}

/// `△_n = conv(S^{τ_n})`.
pub fn stack_simplex<T: ExactScalar>(n: usize) -> Result<Polytope<T>> {
    Ok(orbit_polytope(&crate::permutations::tau(n)?))
}

/// `△_n − τ_n`, the translate with `τ_n` at the origin.
pub fn stack_simplex_at_origin<T: ExactScalar>(n: usize) -> Result<Polytope<T>> {
    let tau = crate::permutations::tau(n)?;
    orbit_polytope::<T>(&tau).translate(&-tau.to_point::<T>())
}

/// The unit cube `[0,1]^n`.
pub fn unit_cube<T: ExactScalar>(n: usize) -> Result<Polytope<T>> {
    if n == 0 || n > 16 {
        return Err(Error::OutOfRange(format!("cube dimension {n} not in 1..=16")));
    }
    let pts: Vec<Vec<i64>> =
        (0..1u32 << n).map(|m| (0..n).map(|b| i64::from((m >> b) & 1)).collect()).collect();
    Polytope::from_int_points(&pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutations::{enumerate_ln1, tau, Permutation};
    use crate::scalar::parse_ratio;
    use crate::{Rational, Scalar, VPolytope};
    use num_traits::Zero;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        parse_ratio(s).unwrap()
    }

    fn orbit_polytope(s: &str) -> VPolytope {
        let p: Permutation = s.parse().unwrap();
        VPolytope::from_points(&p.sort_orbit().points()).unwrap()
    }

    fn v(x: &[i64]) -> Vector<Rational> {
        Vector::from_ints(x)
    }

    #[test]
    fn from_points_examples() {
        let t5 = orbit_polytope("23451");
        assert_eq!(t5.affine_dim(), 4);
        assert!(t5.is_simplex());
        let pt = VPolytope::from_points(&[v(&[3, 1, 2])]).unwrap();
        assert_eq!(pt.affine_dim(), 0);
        assert!(pt.is_simplex());
        // s(321) = 123, so this orbit spans a segment; the triangle in the
        // 3-permutahedron is conv(S^{231}) = conv{231, 213, 123}.
        let s321 = orbit_polytope("321");
        assert_eq!(s321.points().len(), 2);
        assert_eq!(s321.affine_dim(), 1);
        assert!(s321.is_simplex());
        let s231 = orbit_polytope("231");
        assert_eq!(s231.points(), &[v(&[2, 3, 1]), v(&[2, 1, 3]), v(&[1, 2, 3])]);
        assert_eq!(s231.affine_dim(), 2);
        assert!(s231.is_simplex());
        assert!(VPolytope::from_points(&[v(&[1, 2]), v(&[1])]).is_err());
        assert!(VPolytope::from_points(&[]).is_err());
    }

    #[test]
    fn non_extreme_points_are_flagged() {
        let p = VPolytope::from_points(&[v(&[0, 0]), v(&[1, 1]), v(&[2, 2]), v(&[1, 1])]).unwrap();
        assert_eq!(p.points().len(), 3);
        assert_eq!(p.extreme_flags(), &[true, false, true]);
        assert_eq!(p.affine_dim(), 1);
        assert!(p.is_simplex());
    }

    #[test]
    fn affine_independence() {
        let t5: Vec<Vector<Rational>> = tau(5).unwrap().sort_orbit().points();
        assert!(affinely_independent(&t5));
        let t4: Vec<Vector<Rational>> = tau(4).unwrap().sort_orbit().points();
        assert!(affinely_independent(&t4));
        assert!(!affinely_independent(&[v(&[0, 0]), v(&[1, 1]), v(&[3, 3])]));
    }

    #[test]
    fn membership_examples() {
        let d3 = orbit_polytope("231");
        assert_eq!(d3.membership(&v(&[2, 2, 2])).unwrap(), MembershipClass::RelativeBoundary);
        assert_eq!(d3.membership(&v(&[2, 3, 1])).unwrap(), MembershipClass::RelativeBoundary);
        assert_eq!(d3.membership(&v(&[3, 2, 1])).unwrap(), MembershipClass::Outside);
        assert_eq!(d3.membership(&v(&[2, 2, 3])).unwrap(), MembershipClass::Outside);
        let shifted = d3.translate(&-v(&[2, 3, 1])).unwrap().dilate(&q("2")).unwrap();
        // Barycentric (1/4, 1/4, 1/2) after undoing the shift: the unique
        // interior lattice point of the second dilate.
        assert_eq!(shifted.membership(&v(&[-1, -2, 3])).unwrap(), MembershipClass::RelativeInterior);
        assert_eq!(shifted.membership(&v(&[-1, 0, 1])).unwrap(), MembershipClass::Outside);
        assert!(d3.membership(&v(&[1, 2])).is_err());
    }

    #[test]
    fn membership_of_non_simplex_uses_facets() {
        let sq = VPolytope::from_int_points(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert!(!sq.is_simplex());
        assert_eq!(sq.facets().unwrap().len(), 4);
        let sq3 = sq.dilate(&q("3")).unwrap();
        assert_eq!(sq3.membership(&v(&[1, 2])).unwrap(), MembershipClass::RelativeInterior);
        assert_eq!(sq3.membership(&v(&[0, 2])).unwrap(), MembershipClass::RelativeBoundary);
        assert_eq!(sq3.membership(&v(&[4, 2])).unwrap(), MembershipClass::Outside);
    }

    #[test]
    fn unclassified_inside_above_facet_cap() {
        // Cube of dimension 5: not a simplex and above the facet cap.
        let mut pts = Vec::new();
        for m in 0..32i64 {
            pts.push((0..5).map(|b| (m >> b) & 1).collect::<Vec<_>>());
        }
        let cube = VPolytope::from_int_points(&pts).unwrap();
        assert_eq!(cube.affine_dim(), 5);
        assert!(cube.facets().is_none());
        let half = Vector::new(vec![q("1/2"); 5]);
        assert_eq!(cube.membership(&half), Err(Error::UnclassifiedInside(5)));
        assert_eq!(cube.membership(&v(&[2, 0, 0, 0, 0])).unwrap(), MembershipClass::Outside);
    }

    #[test]
    fn dilate_and_translate() {
        let d3 = orbit_polytope("231");
        assert_eq!(d3.dilate(&q("1")).unwrap().points(), d3.points());
        let z = d3.dilate(&q("0")).unwrap();
        assert_eq!(z.points(), &[v(&[0, 0, 0])]);
        assert!(d3.dilate(&q("-1")).is_err());
        let shifted = d3.translate(&-v(&[2, 3, 1])).unwrap();
        assert!(shifted.points().contains(&v(&[0, 0, 0])));
        let half = shifted.dilate(&q("5/2")).unwrap();
        // 5/2 · (231 - 123 … ) : vertex (1,2,3) - (2,3,1) = (-1,-1,2)
        assert!(half.points().contains(&Vector::new(vec![q("-5/2"), q("-5/2"), q("5")])));
        assert_eq!(d3.translate(&v(&[0, 0, 0])).unwrap().points(), d3.points());
        assert!(d3.translate(&v(&[1])).is_err());
    }

    #[test]
    fn tau_translation_identity() {
        // △_n − τ_n + (0,…,0,n) = △_n − (2,3,…,n+1 without last) i.e. τ̄_{n+1}.
        for n in 2..=6 {
            let d = VPolytope::from_points(&tau(n).unwrap().sort_orbit().points()).unwrap();
            let t: Vector<Rational> = tau(n).unwrap().to_point();
            let mut shift = Vector::zeros(n);
            shift[n - 1] = Rational::from_int(n as i64);
            let a = d.translate(&-t).unwrap().translate(&-shift).unwrap();
            let tbar: Vector<Rational> = VPolytope::from_points(&[tau(n + 1).unwrap().to_point()])
                .unwrap()
                .drop_last()
                .unwrap()
                .points()[0]
                .clone();
            assert_eq!(tbar, (2..=n as i64 + 1).map(Rational::from_int).collect());
            let b = d.translate(&-tbar).unwrap();
            assert_eq!(a.points(), b.points());
        }
    }

    #[test]
    fn coordinate_maps() {
        let pt = VPolytope::from_int_points(&[vec![1, 2, 3]]).unwrap();
        assert_eq!(pt.project_last_to_zero().unwrap().points(), &[v(&[1, 2, 0])]);
        assert_eq!(pt.drop_last().unwrap().points(), &[v(&[1, 2])]);
        let two = VPolytope::from_int_points(&[vec![1, 2]]).unwrap();
        assert_eq!(two.lift_append_zero().unwrap().points(), &[v(&[1, 2, 0])]);
        let d4 = orbit_polytope("2341");
        assert_eq!(d4.lift_append_zero().unwrap().drop_last().unwrap().points(), d4.points());
        let proj = d4.project_last_to_zero().unwrap();
        assert!(proj.points().iter().all(|p| p[3].is_zero()));
        assert_eq!(proj.affine_dim(), 3);
    }

    #[test]
    fn normalized_volumes() {
        let unit = VPolytope::from_int_points(&[vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(unit.normalized_volume().unwrap(), BigInt::from(1));
        assert_eq!(orbit_polytope("231").normalized_volume().unwrap(), BigInt::from(2));
        assert_eq!(orbit_polytope("2341").normalized_volume().unwrap(), BigInt::from(6));
        let sq = VPolytope::from_int_points(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(sq.normalized_volume(), Err(Error::NotSimplex));
        let frac = VPolytope::from_points(&[v(&[0]), Vector::new(vec![q("1/2")])]).unwrap();
        assert_eq!(frac.normalized_volume(), Err(Error::NotLattice));
    }

    #[test]
    fn ln1_orbits_are_simplices() {
        for n in 3..=6 {
            for pi in enumerate_ln1(n).unwrap() {
                let p = VPolytope::from_points(&pi.sort_orbit().points()).unwrap();
                assert_eq!(p.affine_dim(), n - 1, "{pi}");
                assert!(p.is_simplex());
                let s = Rational::from_int((n * (n + 1) / 2) as i64);
                assert_eq!(p.coordinate_sum(), Some(s));
            }
        }
    }

    #[test]
    fn combinations_enumerates_subsets() {
        assert_eq!(combinations(4, 2).count(), 6);
        assert_eq!(combinations(3, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(2, 3).count(), 0);
    }

    proptest! {
        #[test]
        fn membership_translation_invariant(
            shift in proptest::collection::vec(-3i64..=3, 4),
            x in proptest::collection::vec(0i64..=4, 3),
        ) {
            let d = orbit_polytope("2341");
            let mut pt: Vec<i64> = x.clone();
            pt.push(10 - x.iter().sum::<i64>());
            let pt = v(&pt);
            let s = v(&shift);
            let moved = d.translate(&s).unwrap();
            prop_assert_eq!(d.membership(&pt).unwrap(), moved.membership(&(pt.clone() + s)).unwrap());
        }

        #[test]
        fn dilation_composes(a in 0i64..6, ad in 1i64..4, b in 0i64..6, bd in 1i64..4) {
            let d = orbit_polytope("231");
            let a = Rational::new(a.into(), ad.into());
            let b = Rational::new(b.into(), bd.into());
            let lhs = d.dilate(&a).unwrap().dilate(&b).unwrap();
            let rhs = d.dilate(&(a * b)).unwrap();
            prop_assert_eq!(lhs.points(), rhs.points());
        }
    }
}
