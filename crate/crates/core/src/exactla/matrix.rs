use std::ops::Mul;

use super::Vector;
use crate::{Error, ExactScalar, Result, Scalar};

/// Dense row-major matrix with at least one row and one column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::Empty);
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Ragged);
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| T::from_int(x)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector<T>]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vector::len);
        if r == 0 || c == 0 {
            return Err(Error::Empty);
        }
        if cols.iter().any(|v| v.len() != r) {
            return Err(Error::Ragged);
        }
        let mut data = Vec::with_capacity(r * c);
        for i in 0..r {
            for col in cols {
                data.push(col[i].clone());
            }
        }
        Ok(Self { rows: r, cols: c, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix must be nonempty");
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Lower-triangular matrix with every entry on or below the diagonal
    /// equal to `-1`.
    pub fn lower_triangular_neg_ones(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                m[(i, j)] = -T::one();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec().into()).collect()
    }

    pub fn column(&self, j: usize) -> Vector<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul_vec(&self, v: &Vector<T>) -> Result<Vector<T>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a.clone() * other[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + prod;
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut prev = T::one();
        let mut sign = T::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Ok(T::zero());
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a[(i, j)].clone() * a[(k, k)].clone()
                        - a[(i, k)].clone() * a[(k, j)].clone())
                        / prev.clone();
                    a[(i, j)] = v;
                }
                a[(i, k)] = T::zero();
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * a[(n - 1, n - 1)].clone())
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = T::one() / self[(r, c)].clone();
            for j in c..self.cols {
                self[(r, j)] = self[(r, j)].clone() * inv.clone();
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    let v = self[(i, j)].clone() - f.clone() * self[(r, j)].clone();
                    self[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// A basis of `{x : self · x = 0}`.
    pub fn nullspace(&self) -> Vec<Vector<T>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = Vector::zeros(self.cols);
                v[f] = T::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Unique exact solution of `self · x = b`.
    ///
    /// `Ok(None)` when the system is inconsistent, `Err(Underdetermined)` when
    /// it is consistent but has more than one solution.
    pub fn solve(&self, b: &Vector<T>) -> Result<Option<Vector<T>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, got: b.len() });
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        if pivots.len() < self.cols {
            return Err(Error::Underdetermined);
        }
        Ok(Some((0..self.cols).map(|r| aug[(r, self.cols)].clone()).collect()))
    }

    /// Inverse, if square and nonsingular.
    pub fn inverse(&self) -> Result<Option<Self>> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = T::one();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Ok(None);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Ok(Some(inv))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Self { rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.rows);
        for i in 0..self.rows {
            for &j in idx {
                data.push(self[(i, j)].clone());
            }
        }
        Self { rows: self.rows, cols: idx.len(), data }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T: ExactScalar> Matrix<T> {
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(ExactScalar::is_integral)
    }

    /// Integer entries and determinant `±1`.
    pub fn is_unimodular(&self) -> Result<bool> {
        let det = self.determinant()?;
        Ok(self.is_integral() && det.abs().is_one())
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: Self) -> Matrix<T> {
        self.checked_mul(rhs).expect("matrix dimensions agree")
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_ratio;
    use crate::Rational;
    use num_rational::Rational64;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        parse_ratio(s).unwrap()
    }

    fn rv(v: &[i64]) -> Vector<Rational> {
        Vector::from_ints(v)
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::<Rational>::identity(3);
        let b = Vector::new(vec![q("1/2"), q("-3"), q("7/5")]);
        assert_eq!(id.solve(&b).unwrap(), Some(b.clone()));

        let a = Matrix::<Rational>::from_ints(&[&[1, 1], &[1, -1]]).unwrap();
        assert_eq!(a.solve(&rv(&[2, 0])).unwrap(), Some(rv(&[1, 1])));

        // (2,2,2) in barycentric coordinates of {231, 213, 123}.
        let m = Matrix::from_ints(&[&[1, 1, 1], &[2, 2, 1], &[3, 1, 2], &[1, 3, 3]]).unwrap();
        let sol = m.solve(&rv(&[1, 2, 2, 2])).unwrap().unwrap();
        assert_eq!(sol, Vector::new(vec![q("1/2"), q("1/2"), q("0")]));
    }

    #[test]
    fn solve_distinguishes_failure_modes() {
        let a = Matrix::<Rational>::from_ints(&[&[1, 1], &[2, 2]]).unwrap();
        assert_eq!(a.solve(&rv(&[1, 3])).unwrap(), None);
        assert_eq!(a.solve(&rv(&[1, 2])), Err(Error::Underdetermined));
        let over = Matrix::<Rational>::from_ints(&[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(over.solve(&rv(&[1, 2, 4])).unwrap(), None);
        assert_eq!(over.solve(&rv(&[1, 2, 3])).unwrap(), Some(rv(&[1, 2])));
    }

    #[test]
    fn determinant_examples() {
        for n in 1..6 {
            assert_eq!(Matrix::<Rational>::identity(n).determinant().unwrap(), q("1"));
        }
        let l = Matrix::<Rational>::lower_triangular_neg_ones(3);
        assert_eq!(l.determinant().unwrap(), q("-1"));
        let d = Matrix::<Rational>::from_ints(&[&[2, 0], &[0, 2]]).unwrap();
        assert_eq!(d.determinant().unwrap(), q("4"));
        let ns = Matrix::<Rational>::from_ints(&[&[1, 2, 3]]).unwrap();
        assert!(matches!(ns.determinant(), Err(Error::NotSquare { .. })));
        // Needs a row swap.
        let sw = Matrix::<Rational>::from_ints(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(sw.determinant().unwrap(), q("-1"));
    }

    #[test]
    fn determinant_is_generic_over_scalar() {
        let rows: &[&[i64]] = &[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5]];
        let exact = Matrix::<Rational>::from_ints(rows).unwrap().determinant().unwrap();
        let small = Matrix::<Rational64>::from_ints(rows).unwrap().determinant().unwrap();
        let float = Matrix::<f64>::from_ints(rows).unwrap().determinant().unwrap();
        assert_eq!(exact, q("-90"));
        assert_eq!(small, Rational64::from_integer(-90));
        assert!((float + 90.0).abs() < 1e-9);
    }

    #[test]
    fn unimodularity() {
        assert!(Matrix::<Rational>::identity(4).is_unimodular().unwrap());
        for n in 1..=8 {
            assert!(Matrix::<Rational>::lower_triangular_neg_ones(n).is_unimodular().unwrap());
        }
        let d = Matrix::<Rational>::from_ints(&[&[2, 0], &[0, 1]]).unwrap();
        assert!(!d.is_unimodular().unwrap());
        let frac = Matrix::from_rows(vec![vec![q("1/2"), q("0")], vec![q("0"), q("2")]]).unwrap();
        assert!(!frac.is_unimodular().unwrap());
        assert!(Matrix::<Rational>::from_ints(&[&[1, 0]]).unwrap().is_unimodular().is_err());
    }

    #[test]
    fn nullspace_and_rank() {
        let m = Matrix::<Rational>::from_ints(&[&[1, 1, 1], &[1, 2, 3]]).unwrap();
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).unwrap().is_zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::<Rational>::from_ints(&[&[2, 1], &[7, 4]]).unwrap();
        let inv = m.inverse().unwrap().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        let sing = Matrix::<Rational>::from_ints(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(sing.inverse().unwrap(), None);
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
        proptest::collection::vec(-4i64..=4, n * n).prop_map(move |v| {
            let rows: Vec<Vec<Rational>> =
                v.chunks(n).map(|c| c.iter().map(|&x| Rational::from_int(x)).collect()).collect();
            Matrix::from_rows(rows).unwrap()
        })
    }

    proptest! {
        #[test]
        fn arithmetic_roundtrip(an in -50i64..50, ad in 1i64..20, bn in -50i64..50, bd in 1i64..20) {
            let a = Rational::new(an.into(), ad.into());
            let b = Rational::new(bn.into(), bd.into());
            prop_assert_eq!((a.clone() + b.clone()) - b.clone(), a.clone());
            if !b.is_zero() {
                prop_assert_eq!((a.clone() * b.clone()) / b, a);
            }
        }

        #[test]
        fn determinant_multiplicative((a, b) in (1usize..5).prop_flat_map(|n| (small_matrix(n), small_matrix(n)))) {
            let ab = &a * &b;
            prop_assert_eq!(ab.determinant().unwrap(), a.determinant().unwrap() * b.determinant().unwrap());
        }

        #[test]
        fn solve_satisfies_system(a in small_matrix(3), b in proptest::collection::vec(-5i64..5, 3)) {
            let b = Vector::from_ints(&b);
            if let Ok(Some(x)) = a.solve(&b) {
                prop_assert_eq!(a.mul_vec(&x).unwrap(), b);
            }
        }
    }
}
