//! Both sides of the real-dilate identities for `△_n − τ_n`, each side
//! counted by its own enumeration.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{count_lattice, Region};
use crate::exactla::Vector;
use crate::permutations::tau;
use crate::polytope::{stack_simplex, stack_simplex_at_origin};
use crate::{Error, Rational, Result, VPolytope};

/// Two independently computed quantities that an identity says are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl Comparison {
    pub fn new(lhs: impl Into<BigInt>, rhs: impl Into<BigInt>) -> Self {
        Self { lhs: lhs.into(), rhs: rhs.into() }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.holds() { "=" } else { "≠" };
        write!(f, "{} {rel} {}", self.lhs, self.rhs)
    }
}

/// Dilates `j/q` for `q = 1..=2n` and `0 ≤ j ≤ 3q`, sorted and deduplicated.
pub fn dilate_grid(n: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = (1..=2 * n as i64)
        .flat_map(|den| (0..=3 * den).map(move |j| Rational::new(j.into(), den.into())))
        .collect();
    out.sort();
    out.dedup();
    out
}

fn check_args(n: usize, lam: &Rational) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("n = {n} must be at least 2")));
    }
    if lam.is_negative() {
        return Err(Error::NegativeDilate(lam.to_string()));
    }
    Ok(())
}

fn ratio(k: i64, n: usize) -> Rational {
    Rational::new(k.into(), (n as i64).into())
}

/// `Σ_{k=lo}^{hi} count(P, k/n + shift)`, zero when the range is empty.
fn slice_sum(p: &VPolytope, n: usize, lo: i64, hi: i64, shift: &Rational, region: Region) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for k in lo..=hi {
        total += count_lattice(p, &(ratio(k, n) + shift), region)?;
    }
    Ok(total)
}

fn floor_i64(x: &Rational) -> i64 {
    x.floor().to_integer().try_into().expect("small dilate")
}

fn ceil_i64(x: &Rational) -> i64 {
    x.ceil().to_integer().try_into().expect("small dilate")
}

/// `|λ(△_{n+1} − τ_{n+1}) ∩ Z^{n+1}|` against `Σ_{k=0}^{⌊nλ⌋} |(k/n)(△_n − τ_n) ∩ Z^n|`.
pub fn recurrence_sides(n: usize, lam: &Rational) -> Result<Comparison> {
    check_args(n, lam)?;
    let big = stack_simplex_at_origin::<Rational>(n + 1)?;
    let small = stack_simplex_at_origin::<Rational>(n)?;
    let lhs = count_lattice(&big, lam, Region::Closed)?;
    let top = floor_i64(&(lam * Rational::from_integer(n.into())));
    let rhs = slice_sum(&small, n, 0, top, &Rational::zero(), Region::Closed)?;
    Ok(Comparison::new(lhs, rhs))
}

pub fn recurrence_check(n: usize, lam: &Rational) -> Result<bool> {
    recurrence_sides(n, lam).map(|c| c.holds())
}

/// Relative-interior version, summing `k = 1..=⌈nλ⌉ − 1`.
pub fn interior_recurrence_sides(n: usize, lam: &Rational) -> Result<Comparison> {
    check_args(n, lam)?;
    let big = stack_simplex_at_origin::<Rational>(n + 1)?;
    let small = stack_simplex_at_origin::<Rational>(n)?;
    let lhs = count_lattice(&big, lam, Region::RelativeInterior)?;
    let top = ceil_i64(&(lam * Rational::from_integer(n.into()))) - 1;
    let rhs = slice_sum(&small, n, 1, top, &Rational::zero(), Region::RelativeInterior)?;
    Ok(Comparison::new(lhs, rhs))
}

pub fn interior_recurrence_check(n: usize, lam: &Rational) -> Result<bool> {
    interior_recurrence_sides(n, lam).map(|c| c.holds())
}

/// Closed count of `λ(△_n − τ_n)` against the interior count of `(λ+2)(△_n − τ_n)`.
pub fn real_gorenstein_sides(n: usize, lam: &Rational) -> Result<Comparison> {
    check_args(n, lam)?;
    let p = stack_simplex_at_origin::<Rational>(n)?;
    let lhs = count_lattice(&p, lam, Region::Closed)?;
    let rhs = count_lattice(&p, &(lam + Rational::from_integer(2.into())), Region::RelativeInterior)?;
    Ok(Comparison::new(lhs, rhs))
}

pub fn real_gorenstein_check(n: usize, lam: &Rational) -> Result<bool> {
    real_gorenstein_sides(n, lam).map(|c| c.holds())
}

/// Counts of `λ(△_n − p)` and of its image under `x_n ↦ 0`.
pub fn projection_count_sides(n: usize, lam: &Rational, p: &Vector<Rational>) -> Result<Comparison> {
    check_args(n, lam)?;
    let simplex = stack_simplex::<Rational>(n)?;
    if p.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: p.len() });
    }
    if !simplex.in_affine_hull(p) {
        return Err(Error::NotInAffineHull);
    }
    let mut p_proj = p.clone();
    p_proj[n - 1] = Rational::zero();
    let translated = simplex.translate(&-p.clone())?;
    let projected = simplex.project_last_to_zero()?.translate(&-p_proj)?;
    let lhs = count_lattice(&translated, lam, Region::Closed)?;
    let rhs = count_lattice(&projected, lam, Region::Closed)?;
    Ok(Comparison::new(lhs, rhs))
}

pub fn projection_count_check(n: usize, lam: &Rational, p: &Vector<Rational>) -> Result<bool> {
    projection_count_sides(n, lam, p).map(|c| c.holds())
}

/// `△_n − (2, 3, …, n+1)` against `△_n − τ_n`, both at dilate `t/n`.
pub fn translation_count_sides(n: usize, t: u32) -> Result<Comparison> {
    check_args(n, &Rational::zero())?;
    let simplex = stack_simplex::<Rational>(n)?;
    let tau_bar: Vec<i64> = tau(n + 1)?.entries()[..n].iter().map(|&v| i64::from(v)).collect();
    let shifted = simplex.translate(&-Vector::from_ints(&tau_bar))?;
    let origin = stack_simplex_at_origin::<Rational>(n)?;
    let lam = ratio(t.into(), n);
    let lhs = count_lattice(&shifted, &lam, Region::Closed)?;
    let rhs = count_lattice(&origin, &lam, Region::Closed)?;
    Ok(Comparison::new(lhs, rhs))
}

pub fn translation_count_check(n: usize, t: u32) -> Result<bool> {
    translation_count_sides(n, t).map(|c| c.holds())
}

/// Upper summation limit of the floor identity,
/// `⌈n·t/(n+1) + 2n − n/(n+1)⌉ − 1 = ⌈n(t + 2n + 1)/(n+1)⌉ − 1`.
///
/// This is the limit the two divisibility cases of the proof reduce to.
pub fn floor_identity_upper(n: usize, t: u32) -> i64 {
    let n = n as i64;
    let num = n * (i64::from(t) + 2 * n + 1);
    Integer::div_ceil(&num, &(n + 1)) - 1
}

/// `Σ_{k=0}^{⌊nt/(n+1)⌋} I(k/n + (2n−1)/n)` against `Σ_{k=2n−1}^{U} I(k/n)`,
/// where `I` counts the relative interior of `λ(△_n − τ_n)` and `U` is
/// [`floor_identity_upper`].
pub fn floor_identity_sides(n: usize, t: u32) -> Result<Comparison> {
    floor_identity_with(n, t, floor_identity_upper(n, t))
}

/// The same comparison with the upper limit read as
/// `⌈nt/(n+1) + (2n+1)/(n+1)⌉ − 1`.
pub fn floor_identity_literal_sides(n: usize, t: u32) -> Result<Comparison> {
    let (ni, ti) = (n as i64, i64::from(t));
    let upper = Integer::div_ceil(&(ni * ti + 2 * ni + 1), &(ni + 1)) - 1;
    floor_identity_with(n, t, upper)
}

fn floor_identity_with(n: usize, t: u32, upper: i64) -> Result<Comparison> {
    check_args(n, &Rational::zero())?;
    let p = stack_simplex_at_origin::<Rational>(n)?;
    let ni = n as i64;
    let lhs_top = Integer::div_floor(&(ni * i64::from(t)), &(ni + 1));
    let shift = ratio(2 * ni - 1, n);
    let lhs = slice_sum(&p, n, 0, lhs_top, &shift, Region::RelativeInterior)?;
    let rhs = slice_sum(&p, n, 2 * ni - 1, upper, &Rational::zero(), Region::RelativeInterior)?;
    Ok(Comparison::new(lhs, rhs))
}

pub fn floor_identity_check(n: usize, t: u32) -> Result<bool> {
    floor_identity_sides(n, t).map(|c| c.holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_ratio;

    fn q(s: &str) -> Rational {
        parse_ratio(s).unwrap()
    }

    #[test]
    fn grid_sizes() {
        assert_eq!(dilate_grid(2).len(), 19);
        assert_eq!(dilate_grid(3).len(), 37);
        assert_eq!(dilate_grid(4).len(), 67);
        let g = dilate_grid(2);
        assert_eq!(g.first(), Some(&q("0")));
        assert_eq!(g.last(), Some(&q("3")));
        assert!(g.contains(&q("11/4")));
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(recurrence_sides(2, &q("5/2")).unwrap(), Comparison::new(12, 12));
        assert_eq!(recurrence_sides(2, &q("0")).unwrap(), Comparison::new(1, 1));
        assert!(recurrence_check(3, &q("3/2")).unwrap());
        assert!(recurrence_check(1, &q("1")).is_err());
        assert!(recurrence_check(2, &q("-1")).is_err());
    }

    #[test]
    fn interior_recurrence_examples() {
        assert_eq!(interior_recurrence_sides(2, &q("1")).unwrap(), Comparison::new(0, 0));
        assert!(interior_recurrence_check(2, &q("5/2")).unwrap());
        assert!(interior_recurrence_check(3, &q("2")).unwrap());
    }

    #[test]
    fn recurrences_hold_on_the_grid() {
        for n in 2..=3 {
            for lam in dilate_grid(n) {
                let c = recurrence_sides(n, &lam).unwrap();
                assert!(c.holds(), "closed n={n} λ={lam}: {c}");
                let c = interior_recurrence_sides(n, &lam).unwrap();
                assert!(c.holds(), "interior n={n} λ={lam}: {c}");
            }
        }
    }

    #[test]
    fn real_gorenstein_at_integer_dilates() {
        assert_eq!(real_gorenstein_sides(2, &q("0")).unwrap(), Comparison::new(1, 1));
        assert_eq!(real_gorenstein_sides(3, &q("1")).unwrap(), Comparison::new(4, 4));
        for n in 2..=4 {
            for t in 0..=3 {
                assert!(real_gorenstein_check(n, &Rational::from_integer(t.into())).unwrap());
            }
        }
    }

    #[test]
    fn real_gorenstein_fails_between_integers() {
        // For n = 2 the dilates are segments: ⌊λ⌋ + 1 closed points against
        // ⌈λ⌉ + 1 interior points of the (λ+2)-th dilate.
        assert_eq!(real_gorenstein_sides(2, &q("3/2")).unwrap(), Comparison::new(2, 3));
        assert!(!real_gorenstein_check(2, &q("1/3")).unwrap());
        // With the shift (2n−1)/n at the breakpoints t/n the relation does hold.
        for n in 2..=4usize {
            let p = stack_simplex_at_origin::<Rational>(n).unwrap();
            for t in 0..=6 {
                let lam = ratio(t, n);
                let closed = count_lattice(&p, &lam, Region::Closed).unwrap();
                let inner =
                    count_lattice(&p, &(lam + ratio(2 * n as i64 - 1, n)), Region::RelativeInterior).unwrap();
                assert_eq!(closed, inner, "n={n} t={t}");
            }
        }
    }

    #[test]
    fn projection_examples() {
        let t3 = tau(3).unwrap().to_point::<Rational>();
        assert_eq!(projection_count_sides(3, &q("1"), &t3).unwrap(), Comparison::new(4, 4));
        assert_eq!(projection_count_sides(3, &q("5/2"), &t3).unwrap(), Comparison::new(12, 12));
        assert!(projection_count_check(4, &q("1/2"), &tau(4).unwrap().to_point()).unwrap());
        let off = Vector::from_ints(&[0, 0, 0]);
        assert_eq!(projection_count_check(3, &q("1"), &off), Err(Error::NotInAffineHull));
        // Any rational point of the hull works.
        let mid = Vector::new(vec![q("3/2"), q("3/2"), q("3")]);
        assert!(projection_count_check(3, &q("2"), &mid).unwrap());
    }

    #[test]
    fn translation_examples() {
        assert!(translation_count_check(2, 3).unwrap());
        assert_eq!(translation_count_sides(3, 0).unwrap(), Comparison::new(1, 1));
        assert!(translation_count_check(3, 5).unwrap());
    }

    #[test]
    fn floor_identity_examples() {
        assert!(floor_identity_check(2, 3).unwrap());
        assert!(floor_identity_check(2, 6).unwrap());
        assert!(floor_identity_check(3, 4).unwrap());
    }

    #[test]
    fn floor_identity_upper_limit_cases() {
        // n+1 | t gives ⌈nt/(n+1) + 2n⌉ − 1, otherwise ⌈nt/(n+1) + 2n − 1⌉ − 1.
        for n in 2..=5usize {
            for t in 0..=20u32 {
                let base = Rational::new((n as i64 * i64::from(t)).into(), (n as i64 + 1).into());
                let extra = if (t as usize).is_multiple_of(n + 1) { 2 * n as i64 } else { 2 * n as i64 - 1 };
                let want = ceil_i64(&(base + Rational::from_integer(extra.into()))) - 1;
                assert_eq!(floor_identity_upper(n, t), want, "n={n} t={t}");
            }
        }
    }

    #[test]
    fn literal_upper_limit_undercounts() {
        assert_eq!(floor_identity_literal_sides(2, 3).unwrap(), Comparison::new(4, 1));
        assert!(!floor_identity_literal_sides(2, 3).unwrap().holds());
    }
}
