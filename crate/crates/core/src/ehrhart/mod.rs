//! Lattice-point counting of dilates, Ehrhart polynomials, h*-vectors and
//! the Gorenstein property, plus direct checks of the real-dilate identities
//! for the stack-sorting simplices.

mod checks;
mod count;
mod poly;

pub use checks::{
    dilate_grid, floor_identity_check, floor_identity_literal_sides, floor_identity_sides, floor_identity_upper,
    interior_recurrence_check, interior_recurrence_sides, projection_count_check, projection_count_sides,
    real_gorenstein_check, real_gorenstein_sides, recurrence_check, recurrence_sides, translation_count_check,
    translation_count_sides, Comparison,
};
pub use count::{count_lattice, lattice_points};
pub use poly::Polynomial;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::polytope::Polytope;
use crate::{Error, ExactScalar, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    Closed,
    RelativeInterior,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DilateCount<T> {
    pub lam: T,
    pub count: u64,
    pub region: Region,
}

impl<T: ExactScalar> DilateCount<T> {
    pub fn compute(p: &Polytope<T>, lam: T, region: Region) -> Result<Self> {
        let count = count_lattice(p, &lam, region)?;
        Ok(Self { lam, count, region })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum GorensteinMethod {
    /// `p(t − k) = (−1)^d p(−t)` holds as a polynomial identity.
    Symbolic,
    /// Only `k < t ≤ tmax` was checked.
    FiniteRange { tmax: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GorensteinIndex {
    pub index: Option<u32>,
    pub method: GorensteinMethod,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartResult {
    pub poly: Polynomial,
    pub hstar: Vec<u64>,
    pub hollow: bool,
    pub gorenstein: GorensteinIndex,
}

impl EhrhartResult {
    pub fn gorenstein_index(&self) -> Option<u32> {
        self.gorenstein.index
    }
}

fn require_lattice<T: ExactScalar>(p: &Polytope<T>) -> Result<()> {
    if p.is_lattice() {
        Ok(())
    } else {
        Err(Error::NotLattice)
    }
}

fn closed_counts<T: ExactScalar>(p: &Polytope<T>, upto: usize) -> Result<Vec<u64>> {
    (0..=upto).map(|t| count_lattice(p, &T::from_int(t as i64), Region::Closed)).collect()
}

/// The Ehrhart polynomial, interpolated from the counts at `t = 0..=dim`.
pub fn ehrhart_polynomial<T: ExactScalar>(p: &Polytope<T>) -> Result<Polynomial> {
    require_lattice(p)?;
    let vals: Vec<BigInt> = closed_counts(p, p.affine_dim())?.into_iter().map(BigInt::from).collect();
    Polynomial::interpolate(&vals)
}

/// Numerator of the Ehrhart series over `(1 − z)^{d+1}`.
///
/// `h*_k = Σ_j (−1)^j C(d+1, j) L(k − j)`, which only needs `L(0..=d)`.
pub fn hstar_vector<T: ExactScalar>(p: &Polytope<T>) -> Result<Vec<u64>> {
    require_lattice(p)?;
    let d = p.affine_dim();
    hstar_from_counts(&closed_counts(p, d)?)
}

pub(crate) fn hstar_from_counts(counts: &[u64]) -> Result<Vec<u64>> {
    let d = counts.len() - 1;
    let binom = binomial_row(d as u64 + 1);
    let mut out = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let mut h = BigInt::zero();
        for j in 0..=k {
            let term = &binom[j] * BigInt::from(counts[k - j]);
            if j % 2 == 0 {
                h += term;
            } else {
                h -= term;
            }
        }
        let h = h
            .to_u64()
            .ok_or_else(|| Error::InvariantViolated(format!("h*_{k} = {h} is not a nonnegative integer")))?;
        out.push(h);
    }
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    Ok(out)
}

fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = row[k as usize].clone() * (n - k) / (k + 1);
        row.push(next);
    }
    row
}

/// Eulerian number `A(n, k)`: permutations of `[n]` with `k` descents.
pub fn eulerian(n: u32, k: u32) -> Result<u64> {
    if n == 0 || k >= n {
        return Err(Error::OutOfRange(format!("A({n},{k}) needs n ≥ 1 and 0 ≤ k ≤ n−1")));
    }
    let mut row: Vec<u64> = vec![1];
    for m in 2..=n as u64 {
        let mut next = vec![0u64; m as usize];
        for (k, slot) in next.iter_mut().enumerate() {
            let k = k as u64;
            let a = row.get(k as usize).copied().unwrap_or(0);
            let b = if k > 0 { row[k as usize - 1] } else { 0 };
            *slot = (k + 1)
                .checked_mul(a)
                .and_then(|x| (m - k).checked_mul(b).and_then(|y| x.checked_add(y)))
                .ok_or(Error::Overflow("eulerian"))?;
        }
        row = next;
    }
    Ok(row[k as usize])
}

/// `(−1)^d · poly(−t)` against the enumerated relative-interior count of
/// the `t`-th dilate.
pub fn reciprocity_check<T: ExactScalar>(p: &Polytope<T>, t: u32) -> Result<bool> {
    let poly = ehrhart_polynomial(p)?;
    Ok(reciprocity_with(p, &poly, t)?.holds())
}

pub(crate) fn reciprocity_with<T: ExactScalar>(p: &Polytope<T>, poly: &Polynomial, t: u32) -> Result<Comparison> {
    let signed = signed_reflection(poly, p.affine_dim());
    let lhs = signed.eval_int(t as i64);
    let rhs = count_lattice(p, &T::from_int(t as i64), Region::RelativeInterior)?;
    Ok(Comparison::new(to_count(&lhs)?, BigInt::from(rhs)))
}

fn signed_reflection(poly: &Polynomial, d: usize) -> Polynomial {
    let r = poly.reflect();
    if d % 2 == 1 {
        r.scale(&-crate::Rational::one())
    } else {
        r
    }
}

fn to_count(v: &crate::Rational) -> Result<BigInt> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::InvariantViolated(format!("non-integral value {v}")))
    }
}

/// Smallest `k` with `L(P°; k−1) = 0`, `L(P°; k) = 1` and
/// `L(P°; t) = L(P; t − k)` for `t > k`.
///
/// The first two conditions are enumerated. The third is certified as the
/// polynomial identity `poly(t − k) = (−1)^d poly(−t)` when it holds; if no
/// candidate passes symbolically, counts are compared for `k < t ≤ tmax`.
pub fn gorenstein_index<T: ExactScalar>(p: &Polytope<T>, tmax: u32) -> Result<GorensteinIndex> {
    let poly = ehrhart_polynomial(p)?;
    gorenstein_with(p, &poly, tmax)
}

fn gorenstein_with<T: ExactScalar>(p: &Polytope<T>, poly: &Polynomial, tmax: u32) -> Result<GorensteinIndex> {
    let d = p.affine_dim();
    let interior = signed_reflection(poly, d);
    let inner = |t: u32| count_lattice(p, &T::from_int(t as i64), Region::RelativeInterior);
    let anchors = |k: u32| -> Result<bool> { Ok(inner(k - 1)? == 0 && inner(k)? == 1) };

    // The codegree never exceeds d + 1.
    for k in 1..=d as u32 + 1 {
        if poly.shift(-(k as i64)) == interior && anchors(k)? {
            return Ok(GorensteinIndex { index: Some(k), method: GorensteinMethod::Symbolic });
        }
    }
    let method = GorensteinMethod::FiniteRange { tmax };
    for k in 1..=tmax.saturating_sub(2) {
        if !anchors(k)? {
            continue;
        }
        let mut ok = true;
        for t in k + 1..=tmax {
            if inner(t)? != count_lattice(p, &T::from_int((t - k) as i64), Region::Closed)? {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(GorensteinIndex { index: Some(k), method });
        }
    }
    Ok(GorensteinIndex { index: None, method })
}

/// Polynomial, h*-vector, hollowness and Gorenstein index of a lattice
/// polytope.
pub fn ehrhart_result<T: ExactScalar>(p: &Polytope<T>, tmax: u32) -> Result<EhrhartResult> {
    require_lattice(p)?;
    let d = p.affine_dim();
    // Interior queries are the ones that can be unsupported; ask first.
    let hollow = count_lattice(p, &T::one(), Region::RelativeInterior)? == 0;
    let counts = closed_counts(p, d)?;
    let vals: Vec<BigInt> = counts.iter().copied().map(BigInt::from).collect();
    let poly = Polynomial::interpolate(&vals)?;
    let hstar = hstar_from_counts(&counts)?;
    // Reciprocity ties hollowness to −1 being a root.
    if d > 0 && hollow != poly.eval_int(-1).is_zero() {
        return Err(Error::InvariantViolated("hollowness disagrees with poly(−1)".into()));
    }
    let gorenstein = gorenstein_with(p, &poly, tmax)?;
    Ok(EhrhartResult { poly, hstar, hollow, gorenstein })
}
