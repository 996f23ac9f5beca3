//! Scalar abstraction shared by the linear algebra, polytope and counting code.
//!
//! [`Scalar`] is any ordered field-like number type: the exact rationals
//! ([`num_rational::BigRational`], [`num_rational::Rational64`]) as well as
//! `f32`/`f64`. Routines that need exact decisions (integrality, lattice
//! membership, rounding of dilates) ask for [`ExactScalar`], which only the
//! rational types implement.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("scalar type represents small integers")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Scalars with exact arithmetic and an exact bridge to arbitrary precision.
pub trait ExactScalar: Scalar + Ord + Hash {
    fn to_big(&self) -> BigRational;

    /// Fails when the value does not fit the target representation.
    fn from_big(v: &BigRational) -> Option<Self>;

    fn is_integral(&self) -> bool {
        self.to_big().is_integer()
    }

    fn floor_big(&self) -> BigInt {
        self.to_big().floor().to_integer()
    }

    fn ceil_big(&self) -> BigInt {
        self.to_big().ceil().to_integer()
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_big(&BigRational::new(numer.into(), denom.into()))
            .expect("small ratio is representable")
    }
}

impl ExactScalar for BigRational {
    fn to_big(&self) -> BigRational {
        self.clone()
    }

    fn from_big(v: &BigRational) -> Option<Self> {
        Some(v.clone())
    }
}

macro_rules! impl_exact_for_ratio {
    ($($int:ty),*) => {$(
        impl Scalar for Ratio<$int> {}

        impl ExactScalar for Ratio<$int> {
            fn to_big(&self) -> BigRational {
                BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }

            fn from_big(v: &BigRational) -> Option<Self> {
                let n = v.numer().to_i128()?;
                let d = v.denom().to_i128()?;
                Some(Ratio::new(<$int>::try_from(n).ok()?, <$int>::try_from(d).ok()?))
            }
        }
    )*};
}

impl_exact_for_ratio!(i32, i64, i128);

impl Scalar for BigRational {}

/// Parses `"p/q"` or `"p"` into an exact scalar.
pub fn parse_ratio<T: ExactScalar>(s: &str) -> Option<T> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    T::from_big(&BigRational::new(n, d))
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_ratio<T: ExactScalar>(v: &T) -> String {
    let b = v.to_big();
    if b.denom().is_one() {
        b.numer().to_string()
    } else {
        format!("{}/{}", b.numer(), b.denom())
    }
}

pub(crate) fn big_to_i64(v: &BigInt) -> Option<i64> {
    v.to_i64()
}

pub(crate) fn lcm_all<'a>(vals: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    vals.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v))
}

pub(crate) fn gcd_all<'a>(vals: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    vals.into_iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}
