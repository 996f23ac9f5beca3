use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactla::{Matrix, Vector};
use crate::{Error, Rational, Result};

/// A polynomial in `t` with exact rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// `(t + a)^k`, expanded.
    pub fn linear_power(a: i64, k: u32) -> Self {
        let base = Self::from_ints(&[a, 1]);
        (0..k).fold(Self::from_ints(&[1]), |acc, _| acc.mul(&base))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_int(&self, t: i64) -> Rational {
        self.eval(&Rational::from_integer(t.into()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `p(t + k)`.
    pub fn shift(&self, k: i64) -> Self {
        let step = Self::from_ints(&[k, 1]);
        let mut out = Self::new(Vec::new());
        for c in self.coeffs.iter().rev() {
            out = out.mul(&step).add(&Self::new(vec![c.clone()]));
        }
        out
    }

    /// `p(−t)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    /// The unique polynomial of degree at most `values.len() − 1` with
    /// `p(i) = values[i]`, by an exact Vandermonde solve.
    pub fn interpolate(values: &[BigInt]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        let m = values.len();
        let rows: Vec<Vec<Rational>> = (0..m)
            .map(|i| {
                let x = Rational::from_integer(BigInt::from(i));
                let mut acc = Rational::one();
                (0..m)
                    .map(|_| {
                        let v = acc.clone();
                        acc *= &x;
                        v
                    })
                    .collect()
            })
            .collect();
        let rhs: Vector<Rational> = values.iter().map(|v| Rational::from_integer(v.clone())).collect();
        let sol = Matrix::from_rows(rows)?.solve(&rhs)?.ok_or(Error::Underdetermined)?;
        Ok(Self::new(sol.into_inner()))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = mag.is_one();
            if !unit || i == 0 {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({}/{})", mag.numer(), mag.denom())?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomial_expansion() {
        let p = Polynomial::linear_power(1, 3);
        assert_eq!(p, Polynomial::from_ints(&[1, 3, 3, 1]));
        assert_eq!(p.to_string(), "t^3 + 3t^2 + 3t + 1");
        assert_eq!(Polynomial::from_ints(&[0, -1, 2]).to_string(), "2t^2 - t");
        let half = Polynomial::new(vec![Rational::new(1.into(), 2.into())]);
        assert_eq!(half.to_string(), "(1/2)");
    }

    #[test]
    fn interpolation_recovers_values() {
        let vals: Vec<BigInt> = (0..4).map(|t: i64| BigInt::from((t + 1).pow(3))).collect();
        assert_eq!(Polynomial::interpolate(&vals).unwrap(), Polynomial::linear_power(1, 3));
        let constant = Polynomial::interpolate(&[BigInt::from(1)]).unwrap();
        assert_eq!(constant, Polynomial::from_ints(&[1]));
    }

    #[test]
    fn shift_and_reflect() {
        let p = Polynomial::linear_power(1, 2);
        assert_eq!(p.shift(-2), Polynomial::linear_power(-1, 2));
        assert_eq!(p.reflect(), Polynomial::linear_power(-1, 2));
    }

    proptest! {
        #[test]
        fn shift_agrees_with_evaluation(c in prop::collection::vec(-9i64..9, 0..6), k in -5i64..5, t in -6i64..6) {
            let p = Polynomial::from_ints(&c);
            prop_assert_eq!(p.shift(k).eval_int(t), p.eval_int(t + k));
            prop_assert_eq!(p.reflect().eval_int(t), p.eval_int(-t));
        }

        #[test]
        fn interpolation_round_trip(c in prop::collection::vec(-9i64..9, 1..6)) {
            let p = Polynomial::from_ints(&c);
            let vals: Vec<BigInt> = (0..c.len() as i64).map(|t| p.eval_int(t).to_integer()).collect();
            prop_assert_eq!(Polynomial::interpolate(&vals).unwrap(), p);
        }
    }
}
