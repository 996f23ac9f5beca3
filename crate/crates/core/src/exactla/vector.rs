use std::ops::{Add, Index, IndexMut, Neg, Sub};

use crate::{Error, ExactScalar, Result, Scalar};

/// A dense column vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector<T>(Vec<T>);

impl<T: Scalar> Vector<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![T::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        v.iter().map(|&x| T::from_int(x)).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<T> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.0.iter()
    }

    pub fn dot(&self, other: &Self) -> T {
        self.0
            .iter()
            .zip(&other.0)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        self.0.iter().map(|x| x.clone() * k.clone()).collect()
    }

    pub fn sum(&self) -> T {
        self.0.iter().fold(T::zero(), |acc, x| acc + x.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_len(other)?;
        Ok(self.clone() + other.clone())
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_len(other)?;
        Ok(self.clone() - other.clone())
    }

    fn same_len(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), got: other.len() });
        }
        Ok(())
    }

    pub fn push(&mut self, v: T) {
        self.0.push(v);
    }

    pub fn pop(&mut self) -> Option<T> {
        self.0.pop()
    }
}

impl<T: ExactScalar> Vector<T> {
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(ExactScalar::is_integral)
    }
}

impl<T> FromIterator<T> for Vector<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<T> From<Vec<T>> for Vector<T> {
    fn from(v: Vec<T>) -> Self {
        Self(v)
    }
}

impl<T> IntoIterator for Vector<T> {
    type Item = T;
    type IntoIter = std::vec::IntoIter<T>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a, T> IntoIterator for &'a Vector<T> {
    type Item = &'a T;
    type IntoIter = std::slice::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl<T> Index<usize> for Vector<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

impl<T> IndexMut<usize> for Vector<T> {
    fn index_mut(&mut self, i: usize) -> &mut T {
        &mut self.0[i]
    }
}

/// Panics on length mismatch; use [`Vector::checked_add`] for fallible input.
impl<T: Scalar> Add for Vector<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        self.0.into_iter().zip(rhs.0).map(|(a, b)| a + b).collect()
    }
}

impl<T: Scalar> Sub for Vector<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        self.0.into_iter().zip(rhs.0).map(|(a, b)| a - b).collect()
    }
}

impl<T: Scalar> Neg for Vector<T> {
    type Output = Self;

    fn neg(self) -> Self {
        self.0.into_iter().map(|a| -a).collect()
    }
}
