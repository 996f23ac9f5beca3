//! Lattice points of rational dilates by bounding-box enumeration.
//!
//! Membership in `λP` is reduced to sign conditions on integer affine forms
//! in the candidate point `x`:
//!
//! * affine-hull equations `y₀λ + y·x = 0`;
//! * for simplices, the scaled barycentric coordinates `λ·c(x/λ) ≥ 0`
//!   (`> 0` for the relative interior);
//! * for other polytopes, the facet functionals up to affine dimension 4,
//!   and otherwise an exact LP on convex-combination weights.
//!
//! Every form is cleared of denominators, so the scan runs on `i128` when the
//! coefficient bounds allow it and on `BigInt` otherwise. When all points of
//! `P` share a coordinate sum `s`, the last coordinate is `λs − Σ others` and
//! is substituted out of every form, so the scan covers one fewer dimension.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::Region;
use crate::exactla::Vector;
use crate::polytope::Polytope;
use crate::scalar::{big_to_i64, lcm_all};
use crate::{Error, ExactScalar, Result};

/// `|λP ∩ Z^n|`, or the relative-interior analogue.
///
/// By convention the relative interior of the zeroth dilate contains no
/// lattice points.
pub fn count_lattice<T: ExactScalar>(p: &Polytope<T>, lam: &T, region: Region) -> Result<u64> {
    match Scan::new(p, lam, region)? {
        Scan::Trivial(pts) => Ok(pts.len() as u64),
        Scan::Box(plan) => plan.dispatch(false).map(|(n, _)| n),
    }
}

/// The lattice points themselves, sorted lexicographically.
pub fn lattice_points<T: ExactScalar>(p: &Polytope<T>, lam: &T, region: Region) -> Result<Vec<Vec<i64>>> {
    match Scan::new(p, lam, region)? {
        Scan::Trivial(pts) => Ok(pts),
        Scan::Box(plan) => {
            let (_, mut pts) = plan.dispatch(true)?;
            pts.sort();
            Ok(pts)
        }
    }
}

enum Scan<'a, T: ExactScalar> {
    Trivial(Vec<Vec<i64>>),
    Box(Plan<'a, T>),
}

/// An affine form `c0 + Σ c[j]·x[j]` over the scanned coordinates.
#[derive(Clone, Debug)]
struct Form {
    c0: BigInt,
    c: Vec<BigInt>,
}

struct Plan<'a, T: ExactScalar> {
    poly: &'a Polytope<T>,
    lam: BigRational,
    /// Bounds of the scanned coordinates.
    lo: Vec<i64>,
    hi: Vec<i64>,
    /// Reconstruction of the last coordinate `s - Σ x`, when reduced.
    reduced: Option<(i64, i64, i64)>,
    equalities: Vec<Form>,
    /// Barycentric forms (simplex) or facet forms (other polytopes).
    inequalities: Vec<Form>,
    strict: bool,
    /// No facet description: membership needs an LP per candidate.
    needs_lp: bool,
    /// Interior query without a facet description.
    unclassifiable: bool,
}

impl<'a, T: ExactScalar> Scan<'a, T> {
    fn new(p: &'a Polytope<T>, lam: &T, region: Region) -> Result<Self> {
        let lam = lam.to_big();
        if lam.is_negative() {
            return Err(Error::NegativeDilate(lam.to_string()));
        }
        let n = p.ambient_dim();
        if lam.is_zero() {
            return Ok(Scan::Trivial(match region {
                Region::Closed => vec![vec![0; n]],
                Region::RelativeInterior => Vec::new(),
            }));
        }

        let scaled: Vec<Vec<BigRational>> =
            p.points().iter().map(|v| v.iter().map(|x| x.to_big() * &lam).collect()).collect();
        let mut lo = Vec::with_capacity(n);
        let mut hi = Vec::with_capacity(n);
        for i in 0..n {
            let min = scaled.iter().map(|v| &v[i]).min().expect("nonempty");
            let max = scaled.iter().map(|v| &v[i]).max().expect("nonempty");
            let l = min.ceil().to_integer();
            let h = max.floor().to_integer();
            if l > h {
                return Ok(Scan::Trivial(Vec::new()));
            }
            lo.push(big_to_i64(&l).ok_or(Error::Overflow("bounding box"))?);
            hi.push(big_to_i64(&h).ok_or(Error::Overflow("bounding box"))?);
        }

        // Equalities of the hull, homogenised with λ: y₀λ + y·x = 0.
        let mut equalities: Vec<Vec<BigRational>> = p
            .hull_equations()
            .iter()
            .map(|y| {
                std::iter::once(y[0].to_big() * &lam).chain(y.iter().skip(1).map(|c| c.to_big())).collect()
            })
            .collect();

        let simplex = p.barycentric();
        let mut inequalities: Vec<Vec<BigRational>> = Vec::new();
        if let Some(bary) = simplex {
            // λ·c(x/λ) = B · (λ, x)|rows
            let inv = bary.inverse();
            for r in 0..inv.rows() {
                let mut f = vec![BigRational::zero(); n + 1];
                for (k, &row) in bary.rows().iter().enumerate() {
                    let b = inv[(r, k)].to_big();
                    if row == 0 {
                        f[0] += b * &lam;
                    } else {
                        f[row] += b;
                    }
                }
                inequalities.push(f);
            }
        }
        let mut needs_lp = false;
        if simplex.is_none() {
            match p.facets() {
                Some(facets) => {
                    for facet in facets {
                        let f = &facet.form;
                        inequalities.push(
                            std::iter::once(f[0].to_big() * &lam)
                                .chain(f.iter().skip(1).map(|c| c.to_big()))
                                .collect(),
                        );
                    }
                }
                None => needs_lp = true,
            }
        }
        let unclassifiable = needs_lp && region == Region::RelativeInterior;

        // Eliminate the last coordinate through the common coordinate sum.
        let mut reduced = None;
        if let (Some(s), true) = (p.coordinate_sum(), n >= 2) {
            let total = s.to_big() * &lam;
            if !total.is_integer() {
                return Ok(Scan::Trivial(Vec::new()));
            }
            let total = total.to_integer();
            let total_i = big_to_i64(&total).ok_or(Error::Overflow("coordinate sum"))?;
            for f in equalities.iter_mut().chain(inequalities.iter_mut()) {
                let c_last = f.pop().expect("ambient >= 2");
                f[0] += &c_last * BigRational::from_integer(total.clone());
                for c in f.iter_mut().skip(1) {
                    *c -= &c_last;
                }
            }
            reduced = Some((total_i, lo.pop().expect("n >= 2"), hi.pop().expect("n >= 2")));
        }

        let equalities: Vec<Form> = equalities.into_iter().map(integerize).filter(|f| !f.is_trivial()).collect();
        // An equality with no variables left is either vacuous or impossible.
        if equalities.iter().any(|f| f.c.iter().all(Zero::is_zero) && !f.c0.is_zero()) {
            return Ok(Scan::Trivial(Vec::new()));
        }
        Ok(Scan::Box(Plan {
            poly: p,
            lam,
            lo,
            hi,
            reduced,
            equalities,
            inequalities: inequalities.into_iter().map(integerize).collect(),
            strict: region == Region::RelativeInterior,
            needs_lp,
            unclassifiable,
        }))
    }
}

impl Form {
    fn is_trivial(&self) -> bool {
        self.c0.is_zero() && self.c.iter().all(Zero::is_zero)
    }
}

/// Clears denominators by a positive factor, preserving signs.
fn integerize(f: Vec<BigRational>) -> Form {
    let l = lcm_all(f.iter().map(|c| c.denom()));
    let mut ints = f.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer());
    let c0 = ints.next().expect("constant term");
    let mut c: Vec<BigInt> = ints.collect();
    let g = c.iter().fold(c0.clone(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        c.iter_mut().for_each(|v| *v /= &g);
        return Form { c0: c0 / &g, c };
    }
    Form { c0, c }
}

/// Integer arithmetic used by the scan.
trait ScanInt: Clone + Send + Sync + Integer + Signed + From<i64> {}
impl ScanInt for i128 {}
impl ScanInt for BigInt {}

struct Compiled<I> {
    eq: Vec<(I, Vec<I>)>,
    ineq: Vec<(I, Vec<I>)>,
    /// `[form][level]`: range of `Σ_{j ≥ level} c_j x_j` over the box.
    eq_rest: Vec<Vec<(I, I)>>,
    ineq_rest: Vec<Vec<(I, I)>>,
    /// Range of `Σ_{j ≥ level} x_j`.
    sum_rest: Vec<(i64, i64)>,
}

impl<'a, T: ExactScalar> Plan<'a, T> {
    fn dispatch(&self, collect: bool) -> Result<(u64, Vec<Vec<i64>>)> {
        if self.fits_i128() {
            let c = self.compile(|b| b.to_i128().expect("bounded"));
            self.scan(&c, collect)
        } else {
            let c = self.compile(|b| b.clone());
            self.scan(&c, collect)
        }
    }

    /// Worst-case magnitude of any partial form value stays below 2^120.
    fn fits_i128(&self) -> bool {
        let max_x = self
            .lo
            .iter()
            .chain(&self.hi)
            .map(|v| BigInt::from(v.unsigned_abs()))
            .max()
            .unwrap_or_else(BigInt::zero);
        let bound = BigInt::one() << 120;
        self.equalities.iter().chain(&self.inequalities).all(|f| {
            let s: BigInt = f.c.iter().map(|c| c.abs() * &max_x).sum::<BigInt>() + f.c0.abs();
            s < bound
        })
    }

    fn compile<I: ScanInt>(&self, conv: impl Fn(&BigInt) -> I) -> Compiled<I> {
        let k = self.lo.len();
        let tr = |f: &Form| (conv(&f.c0), f.c.iter().map(&conv).collect::<Vec<I>>());
        let rest = |f: &(I, Vec<I>)| -> Vec<(I, I)> {
            let mut out = vec![(I::zero(), I::zero()); k + 1];
            for j in (0..k).rev() {
                let a = f.1[j].clone() * I::from(self.lo[j]);
                let b = f.1[j].clone() * I::from(self.hi[j]);
                let (mn, mx) = if a <= b { (a, b) } else { (b, a) };
                out[j] = (out[j + 1].0.clone() + mn, out[j + 1].1.clone() + mx);
            }
            out
        };
        let eq: Vec<(I, Vec<I>)> = self.equalities.iter().map(tr).collect();
        let ineq: Vec<(I, Vec<I>)> = self.inequalities.iter().map(tr).collect();
        let mut sum_rest = vec![(0i64, 0i64); k + 1];
        for j in (0..k).rev() {
            sum_rest[j] = (sum_rest[j + 1].0 + self.lo[j], sum_rest[j + 1].1 + self.hi[j]);
        }
        Compiled {
            eq_rest: eq.iter().map(rest).collect(),
            ineq_rest: ineq.iter().map(rest).collect(),
            eq,
            ineq,
            sum_rest,
        }
    }

    /// Whether some completion of the first `level` coordinates can still
    /// satisfy every form.
    fn feasible<I: ScanInt>(&self, c: &Compiled<I>, st: &State<I>, level: usize) -> bool {
        for (v, r) in st.eq[level].iter().zip(&c.eq_rest) {
            let (mn, mx) = &r[level];
            if (v.clone() + mn.clone()).is_positive() || (v.clone() + mx.clone()).is_negative() {
                return false;
            }
        }
        for (v, r) in st.ineq[level].iter().zip(&c.ineq_rest) {
            let best = v.clone() + r[level].1.clone();
            if best.is_negative() || (self.strict && best.is_zero()) {
                return false;
            }
        }
        if let Some((total, lo, hi)) = self.reduced {
            let fixed: i64 = st.x[..level].iter().sum();
            let (rmin, rmax) = c.sum_rest[level];
            if total - fixed - rmax > hi || total - fixed - rmin < lo {
                return false;
            }
        }
        true
    }

    fn scan<I: ScanInt>(&self, c: &Compiled<I>, collect: bool) -> Result<(u64, Vec<Vec<i64>>)> {
        let k = self.lo.len();
        let first: Vec<i64> = (self.lo[0]..=self.hi[0]).collect();
        let parts: Vec<Result<(u64, Vec<Vec<i64>>)>> = first
            .into_par_iter()
            .map(|x0| {
                let mut st = State {
                    x: vec![0i64; k],
                    eq: vec![c.eq.iter().map(|f| f.0.clone()).collect::<Vec<I>>(); k + 1],
                    ineq: vec![c.ineq.iter().map(|f| f.0.clone()).collect::<Vec<I>>(); k + 1],
                    count: 0,
                    points: Vec::new(),
                    collect,
                };
                st.x[0] = x0;
                st.advance(c, 0, x0);
                if self.feasible(c, &st, 1) {
                    self.descend(c, &mut st, 1)?;
                }
                Ok((st.count, st.points))
            })
            .collect();
        let mut total = 0;
        let mut pts = Vec::new();
        for part in parts {
            let (n, mut p) = part?;
            total += n;
            pts.append(&mut p);
        }
        Ok((total, pts))
    }

    fn descend<I: ScanInt>(&self, c: &Compiled<I>, st: &mut State<I>, level: usize) -> Result<()> {
        if level == self.lo.len() {
            return self.leaf(st);
        }
        for v in self.lo[level]..=self.hi[level] {
            st.x[level] = v;
            st.advance(c, level, v);
            if self.feasible(c, st, level + 1) {
                self.descend(c, st, level + 1)?;
            }
        }
        Ok(())
    }

    fn leaf<I: ScanInt>(&self, st: &mut State<I>) -> Result<()> {
        let k = self.lo.len();
        if st.eq[k].iter().any(|v| !v.is_zero()) {
            return Ok(());
        }
        let mut point = st.x.clone();
        if let Some((total, lo, hi)) = self.reduced {
            let last = total - st.x.iter().sum::<i64>();
            if last < lo || last > hi {
                return Ok(());
            }
            point.push(last);
        }
        let ok = if self.strict {
            st.ineq[k].iter().all(|v| v.is_positive())
        } else {
            st.ineq[k].iter().all(|v| !v.is_negative())
        };
        if !ok {
            return Ok(());
        }
        if self.needs_lp {
            let z: Vector<T> = point
                .iter()
                .map(|&x| {
                    T::from_big(&(BigRational::from_integer(x.into()) / &self.lam)).expect("representable")
                })
                .collect();
            if !self.poly.contains_lp(&z) {
                return Ok(());
            }
            if self.unclassifiable {
                return Err(Error::UnclassifiedInside(self.poly.affine_dim()));
            }
        }
        st.count += 1;
        if st.collect {
            st.points.push(point);
        }
        Ok(())
    }
}

struct State<I> {
    x: Vec<i64>,
    /// Partial form values after fixing coordinates `0..level`.
    eq: Vec<Vec<I>>,
    ineq: Vec<Vec<I>>,
    count: u64,
    points: Vec<Vec<i64>>,
    collect: bool,
}

impl<I: ScanInt> State<I> {
    fn advance(&mut self, c: &Compiled<I>, level: usize, v: i64) {
        let xv = I::from(v);
        let (head, tail) = self.eq.split_at_mut(level + 1);
        for ((dst, src), f) in tail[0].iter_mut().zip(&head[level]).zip(&c.eq) {
            *dst = src.clone() + f.1[level].clone() * xv.clone();
        }
        let (head, tail) = self.ineq.split_at_mut(level + 1);
        for ((dst, src), f) in tail[0].iter_mut().zip(&head[level]).zip(&c.ineq) {
            *dst = src.clone() + f.1[level].clone() * xv.clone();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{stack_simplex, stack_simplex_at_origin, unit_cube, MembershipClass};
    use crate::scalar::parse_ratio;
    use crate::{Rational, Rational64, Scalar, VPolytope};

    fn q(s: &str) -> Rational {
        parse_ratio(s).unwrap()
    }

    /// Oracle: every integer point of the box, classified by `membership`.
    fn brute(p: &VPolytope, lam: &Rational, region: Region) -> u64 {
        let d = p.dilate(lam).unwrap();
        let n = d.ambient_dim();
        let lo: Vec<i64> = (0..n)
            .map(|i| d.points().iter().map(|v| v[i].ceil_big()).min().unwrap().try_into().unwrap())
            .collect();
        let hi: Vec<i64> = (0..n)
            .map(|i| d.points().iter().map(|v| v[i].floor_big()).max().unwrap().try_into().unwrap())
            .collect();
        let mut x = lo.clone();
        let mut count = 0;
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return 0;
        }
        loop {
            let pt: Vector<Rational> = Vector::from_ints(&x);
            let m = d.membership(&pt).unwrap();
            let hit = match region {
                Region::Closed => m != MembershipClass::Outside,
                Region::RelativeInterior => m == MembershipClass::RelativeInterior,
            };
            count += hit as u64;
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                if x[i] < hi[i] {
                    x[i] += 1;
                    break;
                }
                x[i] = lo[i];
                i += 1;
            }
        }
    }

    #[test]
    fn example_counts() {
        let d3 = stack_simplex_at_origin::<Rational>(3).unwrap();
        assert_eq!(count_lattice(&d3, &q("5/2"), Region::Closed).unwrap(), 12);
        for n in 2..=6 {
            let d = stack_simplex::<Rational>(n).unwrap();
            assert_eq!(count_lattice(&d, &q("1"), Region::RelativeInterior).unwrap(), 0);
            assert_eq!(count_lattice(&d, &q("0"), Region::Closed).unwrap(), 1);
        }
        assert!(count_lattice(&d3, &q("-1"), Region::Closed).is_err());
    }

    #[test]
    fn agrees_with_membership_oracle() {
        let polys = vec![
            stack_simplex::<Rational>(3).unwrap(),
            stack_simplex_at_origin::<Rational>(3).unwrap(),
            stack_simplex_at_origin::<Rational>(4).unwrap(),
            unit_cube::<Rational>(2).unwrap(),
            unit_cube::<Rational>(3).unwrap(),
            VPolytope::from_int_points(&[vec![0, 0], vec![3, 1], vec![1, 3]]).unwrap(),
        ];
        for p in &polys {
            for lam in ["0", "1/3", "1/2", "1", "3/2", "2", "7/3", "3"] {
                let lam = q(lam);
                for region in [Region::Closed, Region::RelativeInterior] {
                    let fast = count_lattice(p, &lam, region).unwrap();
                    let want = if lam.is_zero() {
                        (region == Region::Closed) as u64
                    } else {
                        brute(p, &lam, region)
                    };
                    assert_eq!(fast, want, "{:?} λ={lam} {region:?}", p.points());
                }
            }
        }
    }

    #[test]
    fn points_are_sorted_and_match_count() {
        let d = stack_simplex::<Rational>(4).unwrap();
        let pts = lattice_points(&d, &q("2"), Region::Closed).unwrap();
        assert_eq!(pts.len(), 27);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
        assert!(pts.iter().all(|p| p.iter().sum::<i64>() == 20));
    }

    #[test]
    fn small_rationals_agree_with_big() {
        let big = stack_simplex_at_origin::<Rational>(4).unwrap();
        let small = stack_simplex_at_origin::<Rational64>(4).unwrap();
        for (a, b) in [(5, 2), (7, 3), (3, 1)] {
            let lb = Rational::new(a.into(), b.into());
            let ls = Rational64::new(a, b);
            for region in [Region::Closed, Region::RelativeInterior] {
                assert_eq!(
                    count_lattice(&big, &lb, region).unwrap(),
                    count_lattice(&small, &ls, region).unwrap()
                );
            }
        }
    }

    #[test]
    fn non_simplex_interior_above_cap_is_an_error() {
        let cube = unit_cube::<Rational>(5).unwrap();
        assert_eq!(count_lattice(&cube, &q("1"), Region::Closed).unwrap(), 32);
        assert_eq!(
            count_lattice(&cube, &q("3"), Region::RelativeInterior),
            Err(Error::UnclassifiedInside(5))
        );
        // Nothing strictly inside, nothing to classify.
        assert_eq!(count_lattice(&cube, &q("1"), Region::RelativeInterior), Err(Error::UnclassifiedInside(5)));
    }

    #[test]
    fn big_coordinates_use_the_wide_path() {
        let huge = Rational::from_int(1) * Rational::from_int(1 << 40);
        let seg = VPolytope::from_points(&[
            Vector::new(vec![huge.clone(), Rational::from_int(0)]),
            Vector::new(vec![huge.clone() + Rational::from_int(4), Rational::from_int(4)]),
        ])
        .unwrap();
        assert_eq!(count_lattice(&seg, &q("1"), Region::Closed).unwrap(), 5);
        assert_eq!(count_lattice(&seg, &q("1"), Region::RelativeInterior).unwrap(), 3);
    }
}
